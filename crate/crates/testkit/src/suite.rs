//! Campaigns shared by the property tests and the acceptance run: closure of
//! every construction, verifier/oracle agreement and mutation sensitivity.

use crate::mutate::{bump_bracket, bump_matrix, positions};
use crate::oracle;
use crate::random::Gen;
use colorlie::axioms::{check_lie, check_pre_lie, sub_adjacent};
use colorlie::constructions::{
    centroid, centromorphisms, check_centroid, check_centromorphism, check_derivation, derivations,
    tensor_with_associative, twist_by_centroid, TwistMode,
};
use colorlie::forms::{check_metric, check_quadratic, check_symplectic};
use colorlie::prelie::{
    check_o_operator, check_pre_lie_representation, left_bundle, phase_space, pre_lie_from_o_operator,
    pre_lie_from_symplectic, pre_lie_semidirect, regular, OOperator, PreLieRepBundle,
};
use colorlie::representations::{
    adjoint, check_representation, coadjoint, double_metric_algebra, semidirect_sum, RepresentationBundle,
};
use colorlie::samples::{z2_cubed, z2_cubed_hom, z2_cubed_symplectic};
use colorlie::{Algebra3Rho, AlgebraKind, BilinearForm, GroupElement, HomogeneousMap, Matrix, Result, Scalar};
use rand::Rng;

pub const CONSTRUCTIONS: [&str; 9] = [
    "twist_by_centroid",
    "tensor_with_associative",
    "semidirect_sum",
    "double_metric_algebra",
    "sub_adjacent",
    "pre_lie_semidirect",
    "pre_lie_from_symplectic",
    "pre_lie_from_o_operator",
    "phase_space",
];

/// Outcome of one construction over a batch of inputs.
#[derive(Clone, Debug, Default)]
pub struct Tally {
    pub total: usize,
    pub passed: usize,
    pub failures: Vec<String>,
}

impl Tally {
    fn record(&mut self, label: String, outcome: Result<bool>) {
        self.total += 1;
        match outcome {
            Ok(true) => self.passed += 1,
            Ok(false) => self.failures.push(format!("{label}: output rejected by the oracle")),
            Err(e) => self.failures.push(format!("{label}: {e}")),
        }
    }

    pub fn all_passed(&self) -> bool {
        self.passed == self.total
    }
}

/// The abelian 3-dimensional algebra with the identity form, a quadratic
/// fixture with many centromorphisms.
pub fn abelian_quadratic() -> (Algebra3Rho, BilinearForm) {
    let o = colorlie::CyclotomicOrder::new(1).unwrap();
    let g = colorlie::GradingGroup::trivial();
    let names = vec!["a".into(), "b".into(), "c".into()];
    let basis = colorlie::GradedBasis::new(g.clone(), names, vec![g.zero(); 3]).unwrap();
    let alg = Algebra3Rho::new(
        basis,
        colorlie::TwoCycle::trivial(o),
        colorlie::TernaryBracket::zero(o, 3),
        None,
        AlgebraKind::Lie,
    )
    .unwrap();
    (alg, BilinearForm::new(Matrix::identity(o, 3)).unwrap())
}

/// The pre-Lie algebra induced by omega_5 on the Z2^3 sample.
pub fn golden_pre_lie() -> Algebra3Rho {
    pre_lie_from_symplectic(&z2_cubed(), &z2_cubed_symplectic(5)).expect("omega_5 induces a pre-Lie structure")
}

fn scalar_identity(alg: &Algebra3Rho, c: &Scalar) -> Matrix {
    Matrix::identity(alg.order(), alg.dim()).scale(c)
}

fn commutator_matches(prelie: &Algebra3Rho, lie: &Algebra3Rho) -> Result<bool> {
    Ok(sub_adjacent(prelie)?.bracket() == lie.bracket())
}

/// Runs one construction on the given input and checks its output with the oracle.
fn run(name: &str, input: &Input) -> Result<bool> {
    match (name, input) {
        ("twist_by_centroid", Input::Centroid(alg, psi, mode)) => {
            let out = twist_by_centroid(alg, psi, *mode)?;
            Ok(oracle::lie(&out))
        }
        ("tensor_with_associative", Input::Tensor(b, chi, g, chi_g)) => {
            let (out, form) = tensor_with_associative(b, chi, g, chi_g)?;
            Ok(oracle::lie(&out) && oracle::quadratic(&out, form.matrix()))
        }
        ("semidirect_sum", Input::Bundle(bundle)) => {
            Ok(oracle::representation(bundle) && oracle::lie(&semidirect_sum(bundle)?))
        }
        ("double_metric_algebra", Input::Lie(alg)) => {
            let (big, form) = double_metric_algebra(alg)?;
            Ok(oracle::lie(&big) && oracle::metric(&big, form.matrix()))
        }
        ("sub_adjacent", Input::PreLie(p)) => Ok(oracle::lie(&sub_adjacent(p)?)),
        ("pre_lie_semidirect", Input::PreBundle(b)) => Ok(oracle::pre_lie(&pre_lie_semidirect(b)?)),
        ("pre_lie_from_symplectic", Input::Symplectic(alg, w)) => {
            let p = pre_lie_from_symplectic(alg, w)?;
            Ok(oracle::pre_lie(&p) && commutator_matches(&p, alg)?)
        }
        ("pre_lie_from_o_operator", Input::Operator(t, b)) => {
            let op = OOperator::new(t.clone(), b.clone())?;
            let (on_v, on_image) = pre_lie_from_o_operator(&op)?;
            Ok(oracle::pre_lie(&on_v) && oracle::pre_lie(&on_image))
        }
        ("phase_space", Input::PreLie(p)) => {
            let ps = phase_space(p)?;
            Ok(oracle::phase_space(&ps.big, ps.omega.matrix(), ps.base_dim))
        }
        _ => panic!("input does not fit {name}"),
    }
}

enum Input {
    Lie(Algebra3Rho),
    PreLie(Algebra3Rho),
    Centroid(Algebra3Rho, HomogeneousMap, TwistMode),
    Tensor(Algebra3Rho, BilinearForm, Algebra3Rho, BilinearForm),
    Bundle(RepresentationBundle),
    PreBundle(PreLieRepBundle),
    Symplectic(Algebra3Rho, BilinearForm),
    Operator(Matrix, RepresentationBundle),
}

fn random_input(name: &str, gen: &mut Gen) -> Input {
    match name {
        "twist_by_centroid" => {
            let alg = gen.lie();
            let psi = gen.centroid_element(&alg);
            let mode = if gen.rng().gen_bool(0.5) { TwistMode::Once } else { TwistMode::Thrice };
            Input::Centroid(alg, psi, mode)
        }
        "tensor_with_associative" => {
            let (b, chi) = gen.quadratic_pair();
            let (g, chi_g) = gen.associative_line(&b);
            Input::Tensor(b, chi, g, chi_g)
        }
        "semidirect_sum" => {
            let alg = if gen.rng().gen_bool(0.5) { gen.lie() } else { gen.hom_lie() };
            let bundle = if alg.is_hom() || gen.rng().gen_bool(0.5) {
                adjoint(&alg)
            } else {
                coadjoint(&alg)
            };
            Input::Bundle(bundle.expect("adjoint bundles are well formed"))
        }
        "double_metric_algebra" => Input::Lie(gen.lie()),
        "sub_adjacent" | "phase_space" => Input::PreLie(gen.pre_lie()),
        "pre_lie_semidirect" => Input::PreBundle(regular(&gen.pre_lie()).expect("regular bundle")),
        "pre_lie_from_symplectic" => {
            let (alg, w) = gen.symplectic_pair();
            Input::Symplectic(alg, w)
        }
        "pre_lie_from_o_operator" => {
            let p = gen.pre_lie();
            let c = gen.unit_scalar(p.order());
            let t = scalar_identity(&p, &c);
            Input::Operator(t, left_bundle(&p).expect("left bundle"))
        }
        _ => panic!("unknown construction {name}"),
    }
}

fn golden_inputs(name: &str) -> Vec<(String, Input)> {
    let alg = z2_cubed();
    let w5 = golden_pre_lie();
    let one = Scalar::one(alg.order());
    match name {
        "twist_by_centroid" => {
            let psi = HomogeneousMap::identity(alg.order(), alg.basis());
            vec![
                ("Z2^3 sample, psi = id, once".into(), Input::Centroid(alg.clone(), psi.clone(), TwistMode::Once)),
                ("Z2^3 sample, psi = id, thrice".into(), Input::Centroid(alg, psi, TwistMode::Thrice)),
            ]
        }
        "tensor_with_associative" => {
            let mut gen = Gen::new(0);
            let (b, chi) = abelian_quadratic();
            let (g, chi_g) = gen.associative_line(&b);
            vec![("abelian quadratic algebra with an associative line".into(), Input::Tensor(b, chi, g, chi_g))]
        }
        "semidirect_sum" => vec![
            ("Z2^3 sample, adjoint".into(), Input::Bundle(adjoint(&alg).unwrap())),
            ("Z2^3 sample, coadjoint".into(), Input::Bundle(coadjoint(&alg).unwrap())),
        ],
        "double_metric_algebra" => vec![("Z2^3 sample".into(), Input::Lie(alg))],
        "sub_adjacent" | "phase_space" => vec![("omega_5 pre-Lie".into(), Input::PreLie(w5))],
        "pre_lie_semidirect" => vec![("omega_5 pre-Lie, regular".into(), Input::PreBundle(regular(&w5).unwrap()))],
        "pre_lie_from_symplectic" => (1..=6)
            .map(|k| (format!("Z2^3 sample, omega_{k}"), Input::Symplectic(alg.clone(), z2_cubed_symplectic(k))))
            .collect(),
        "pre_lie_from_o_operator" => vec![(
            "omega_5 pre-Lie, T = id".into(),
            Input::Operator(scalar_identity(&w5, &one), left_bundle(&w5).unwrap()),
        )],
        _ => panic!("unknown construction {name}"),
    }
}

/// Golden inputs followed by `count` random ones for a single construction.
pub fn closure(name: &str, seed: u64, count: usize) -> (Tally, Tally) {
    let mut golden = Tally::default();
    for (label, input) in golden_inputs(name) {
        golden.record(label, run(name, &input));
    }
    let mut random = Tally::default();
    let mut gen = Gen::new(seed);
    for i in 0..count {
        let input = random_input(name, &mut gen);
        random.record(format!("random instance {i}"), run(name, &input));
    }
    (golden, random)
}

/// Verifier verdict against the oracle verdict for one instance.
#[derive(Clone, Debug)]
pub struct Verdict {
    pub verifier: &'static str,
    pub report: bool,
    pub oracle: bool,
}

fn verdict(verifier: &'static str, report: bool, oracle: bool) -> Verdict {
    Verdict { verifier, report, oracle }
}

fn bump_random(gen: &mut Gen, m: &Matrix) -> Matrix {
    let r = gen.rng().gen_range(0..m.rows());
    let c = gen.rng().gen_range(0..m.cols());
    bump_matrix(m, r, c)
}

fn random_degree(gen: &mut Gen, alg: &Algebra3Rho) -> GroupElement {
    let r: Vec<i64> = alg.group().moduli().iter().map(|&m| gen.rng().gen_range(0..m as i64)).collect();
    alg.group().element(&r).expect("in range")
}

fn combination(gen: &mut Gen, alg: &Algebra3Rho, maps: &[HomogeneousMap]) -> Matrix {
    let mut m = Matrix::zeros(alg.order(), alg.dim(), alg.dim());
    for h in maps {
        m = m.add(&h.matrix().scale(&gen.small_scalar(alg.order())));
    }
    m
}

/// One random instance per verifier, passing or not, judged by both paths.
pub fn equivalence_round(gen: &mut Gen) -> Vec<Verdict> {
    let mut out = Vec::new();

    if let Some(a) = gen.raw(AlgebraKind::Lie) {
        out.push(verdict("lie", check_lie(&a).passed(), oracle::lie(&a)));
        let phi = gen.sign_character(&a);
        if let Ok(h) = a.with_twist(phi) {
            out.push(verdict("hom-lie", check_lie(&h).passed(), oracle::lie(&h)));
        }
    }
    let h = gen.hom_lie();
    out.push(verdict("hom-lie", check_lie(&h).passed(), oracle::lie(&h)));
    if let Some(p) = gen.raw(AlgebraKind::PreLie) {
        out.push(verdict("pre-lie", check_pre_lie(&p).passed(), oracle::pre_lie(&p)));
    }

    let alg = if gen.rng().gen_bool(0.5) { gen.lie() } else { gen.hom_lie() };
    for (name, sign) in [("quadratic", 1), ("metric", 1), ("symplectic", -1)] {
        let m = gen.graded_form(&alg, sign);
        let m = if gen.rng().gen_bool(0.3) { bump_random(gen, &m) } else { m };
        let f = BilinearForm::new(m.clone()).expect("square");
        let (report, oracle) = match name {
            "quadratic" => (check_quadratic(&alg, &f).passed(), oracle::quadratic(&alg, &m)),
            "metric" => (check_metric(&alg, &f).passed(), oracle::metric(&alg, &m)),
            _ => (check_symplectic(&alg, &f).passed(), oracle::symplectic(&alg, &m)),
        };
        out.push(verdict(name, report, oracle));
    }
    let (qa, qf) = gen.quadratic_pair();
    out.push(verdict("quadratic", check_quadratic(&qa, &qf).passed(), oracle::quadratic(&qa, qf.matrix())));
    let plain = if alg.is_hom() { gen.lie() } else { alg.clone() };
    let (big, metric) = double_metric_algebra(&plain).expect("double");
    out.push(verdict("metric", check_metric(&big, &metric).passed(), oracle::metric(&big, metric.matrix())));
    let (sa, sw) = gen.symplectic_pair();
    out.push(verdict("symplectic", check_symplectic(&sa, &sw).passed(), oracle::symplectic(&sa, sw.matrix())));

    let b = adjoint(&alg).expect("adjoint");
    out.push(verdict("representation", check_representation(&b).passed(), oracle::representation(&b)));
    let mut mu = b.mu_all().to_vec();
    let p = gen.rng().gen_range(0..mu.len());
    mu[p] = bump_random(gen, &mu[p]);
    if let Ok(bad) = RepresentationBundle::new(alg.clone(), alg.basis().clone(), mu, Some(alg.twist().clone())) {
        out.push(verdict("representation", check_representation(&bad).passed(), oracle::representation(&bad)));
    }

    let pre = gen.pre_lie();
    let reg = regular(&pre).expect("regular");
    out.push(verdict("pre-representation", check_pre_lie_representation(&reg).passed(), oracle::pre_representation(&reg)));
    let mut tilde = reg.mu_tilde_all().to_vec();
    let p = gen.rng().gen_range(0..tilde.len());
    tilde[p] = bump_random(gen, &tilde[p]);
    if let Ok(bad) =
        PreLieRepBundle::new(pre.clone(), pre.basis().clone(), reg.mu_all().to_vec(), tilde, Some(pre.twist().clone()))
    {
        out.push(verdict(
            "pre-representation",
            check_pre_lie_representation(&bad).passed(),
            oracle::pre_representation(&bad),
        ));
    }

    let left = left_bundle(&pre).expect("left bundle");
    let c = gen.unit_scalar(pre.order());
    let t = scalar_identity(&pre, &c);
    out.push(verdict("o-operator", check_o_operator(&t, &left).passed(), oracle::o_operator(&t, &left)));
    let t = bump_random(gen, &t);
    out.push(verdict("o-operator", check_o_operator(&t, &left).passed(), oracle::o_operator(&t, &left)));

    let degree = random_degree(gen, &alg);
    let ders = derivations(&alg, &degree, None).expect("solvable");
    let cents = centroid(&alg, &degree).expect("solvable");
    for (name, maps) in [("derivation", &ders.maps), ("centroid", &cents.maps)] {
        let m = combination(gen, &alg, maps);
        let m = if gen.rng().gen_bool(0.5) { bump_random(gen, &m) } else { m };
        if let Ok(h) = HomogeneousMap::endo(alg.basis(), m.clone(), degree.clone()) {
            let (report, oracle) = if name == "derivation" {
                (check_derivation(&alg, &h, None).passed(), oracle::derivation(&alg, &m, &degree))
            } else {
                (check_centroid(&alg, &h).passed(), oracle::centroid(&alg, &m, &degree))
            };
            out.push(verdict(name, report, oracle));
        }
    }

    let (qa, chi) = gen.quadratic_pair();
    let degree = random_degree(gen, &qa);
    let space = centromorphisms(&qa, &chi, &degree).expect("solvable");
    let m = combination(gen, &qa, &space.maps);
    let m = if gen.rng().gen_bool(0.5) { bump_random(gen, &m) } else { m };
    if let Ok(h) = HomogeneousMap::endo(qa.basis(), m.clone(), degree.clone()) {
        out.push(verdict(
            "centromorphism",
            check_centromorphism(&qa, &chi, &h).passed(),
            oracle::centromorphism(&qa, chi.matrix(), &m, &degree),
        ));
    }
    out
}

/// Mutation outcomes for one verifier on one passing fixture.
#[derive(Clone, Debug, Default)]
pub struct Sensitivity {
    pub mutations: usize,
    /// The report failed and named at least one identity.
    pub detected: usize,
    /// The report passed and the oracle agrees the mutant is still valid.
    pub preserving: usize,
    /// The report passed but the oracle rejects the mutant.
    pub missed: Vec<String>,
}

impl Sensitivity {
    pub fn rate(&self) -> f64 {
        if self.mutations == 0 {
            1.0
        } else {
            self.detected as f64 / self.mutations as f64
        }
    }

    /// At least 95% detected and every undetected mutant confirmed valid.
    pub fn acceptable(&self) -> bool {
        self.rate() >= 0.95 || (self.missed.is_empty() && self.detected + self.preserving == self.mutations)
    }

    fn record(&mut self, label: String, report: &colorlie::ValidationReport, oracle: impl FnOnce() -> bool) {
        self.mutations += 1;
        if !report.passed() {
            if report.violations.iter().all(|v| !v.identity.is_empty()) {
                self.detected += 1;
            }
        } else if oracle() {
            self.preserving += 1;
        } else {
            self.missed.push(label);
        }
    }
}

/// Every position when there are at most `limit`, else an evenly spaced sample.
fn sample<T: Clone>(all: Vec<T>, limit: usize) -> Vec<T> {
    if all.len() <= limit {
        return all;
    }
    let step = all.len() as f64 / limit as f64;
    (0..limit).map(|i| all[(i as f64 * step) as usize].clone()).collect()
}

fn matrix_positions(m: &Matrix) -> Vec<(usize, usize)> {
    (0..m.rows()).flat_map(|r| (0..m.cols()).map(move |c| (r, c))).collect()
}

/// Mutation sensitivity for every verifier on its passing golden fixture.
pub fn mutation_campaign(limit: usize) -> Vec<(&'static str, Sensitivity)> {
    let mut out = Vec::new();
    let alg = z2_cubed();
    let hom = z2_cubed_hom();
    let w5 = golden_pre_lie();

    for (name, fixture) in [("lie", &alg), ("hom-lie", &hom)] {
        let mut s = Sensitivity::default();
        for p in sample(positions(fixture.dim()), limit) {
            let m = bump_bracket(fixture, p);
            s.record(format!("{p:?}"), &check_lie(&m), || oracle::lie(&m));
        }
        out.push((name, s));
    }

    let mut s = Sensitivity::default();
    for p in sample(positions(w5.dim()), limit) {
        let m = bump_bracket(&w5, p);
        s.record(format!("{p:?}"), &check_pre_lie(&m), || oracle::pre_lie(&m));
    }
    out.push(("pre-lie", s));

    let mut s = Sensitivity::default();
    for k in 1..=6 {
        let w = z2_cubed_symplectic(k);
        for (r, c) in matrix_positions(w.matrix()) {
            let m = bump_matrix(w.matrix(), r, c);
            let f = BilinearForm::new(m.clone()).unwrap();
            s.record(format!("omega_{k} ({r},{c})"), &check_symplectic(&alg, &f), || oracle::symplectic(&alg, &m));
        }
    }
    out.push(("symplectic", s));

    let (big, metric) = double_metric_algebra(&alg).expect("double");
    let mut s = Sensitivity::default();
    for (r, c) in sample(matrix_positions(metric.matrix()), limit) {
        let m = bump_matrix(metric.matrix(), r, c);
        let f = BilinearForm::new(m.clone()).unwrap();
        s.record(format!("({r},{c})"), &check_metric(&big, &f), || oracle::metric(&big, &m));
    }
    out.push(("metric", s));

    let (qa, chi) = abelian_quadratic();
    let mut s = Sensitivity::default();
    for (r, c) in matrix_positions(chi.matrix()) {
        let m = bump_matrix(chi.matrix(), r, c);
        let f = BilinearForm::new(m.clone()).unwrap();
        s.record(format!("({r},{c})"), &check_quadratic(&qa, &f), || oracle::quadratic(&qa, &m));
    }
    out.push(("quadratic", s));

    let b = adjoint(&alg).unwrap();
    let mut s = Sensitivity::default();
    let slots: Vec<(usize, usize, usize)> = (0..b.mu_all().len())
        .flat_map(|p| matrix_positions(&b.mu_all()[p]).into_iter().map(move |(r, c)| (p, r, c)))
        .collect();
    for (p, r, c) in sample(slots, limit) {
        let mut mu = b.mu_all().to_vec();
        mu[p] = bump_matrix(&mu[p], r, c);
        // off-degree entries are not representable as a bundle
        let Ok(m) = RepresentationBundle::new(alg.clone(), alg.basis().clone(), mu, None) else {
            continue;
        };
        s.record(format!("mu[{p}] ({r},{c})"), &check_representation(&m), || oracle::representation(&m));
    }
    out.push(("representation", s));

    let reg = regular(&w5).unwrap();
    let mut s = Sensitivity::default();
    let slots: Vec<(bool, usize, usize, usize)> = [false, true]
        .into_iter()
        .flat_map(|tilde| {
            (0..reg.mu_all().len()).flat_map(move |p| (0..4).flat_map(move |r| (0..4).map(move |c| (tilde, p, r, c))))
        })
        .collect();
    for (tilde, p, r, c) in sample(slots, limit) {
        let mut mu = reg.mu_all().to_vec();
        let mut mt = reg.mu_tilde_all().to_vec();
        let target = if tilde { &mut mt } else { &mut mu };
        target[p] = bump_matrix(&target[p], r, c);
        let Ok(m) = PreLieRepBundle::new(w5.clone(), w5.basis().clone(), mu, mt, None) else {
            continue;
        };
        s.record(
            format!("{}[{p}] ({r},{c})", if tilde { "mu~" } else { "mu" }),
            &check_pre_lie_representation(&m),
            || oracle::pre_representation(&m),
        );
    }
    out.push(("pre-representation", s));

    let left = left_bundle(&w5).unwrap();
    let id = Matrix::identity(w5.order(), w5.dim());
    let mut s = Sensitivity::default();
    for (r, c) in matrix_positions(&id) {
        let m = bump_matrix(&id, r, c);
        s.record(format!("({r},{c})"), &check_o_operator(&m, &left), || oracle::o_operator(&m, &left));
    }
    out.push(("o-operator", s));

    for name in ["derivation", "centroid"] {
        let mut s = Sensitivity::default();
        for degree in alg.group().elements() {
            let members = if name == "derivation" {
                derivations(&alg, &degree, None).unwrap().maps
            } else {
                centroid(&alg, &degree).unwrap().maps
            };
            for h in &members {
                for (r, c) in matrix_positions(h.matrix()) {
                    let m = bump_matrix(h.matrix(), r, c);
                    // off-degree entries are not representable as a homogeneous map
                    let Ok(hm) = HomogeneousMap::endo(alg.basis(), m.clone(), degree.clone()) else {
                        continue;
                    };
                    let report =
                        if name == "derivation" { check_derivation(&alg, &hm, None) } else { check_centroid(&alg, &hm) };
                    s.record(format!("{degree} ({r},{c})"), &report, || {
                        if name == "derivation" {
                            oracle::derivation(&alg, &m, &degree)
                        } else {
                            oracle::centroid(&alg, &m, &degree)
                        }
                    });
                }
            }
        }
        out.push((name, s));
    }

    let space = centromorphisms(&qa, &chi, &qa.group().zero()).unwrap();
    let mut s = Sensitivity::default();
    for h in &space.maps {
        for (r, c) in matrix_positions(h.matrix()) {
            let m = bump_matrix(h.matrix(), r, c);
            let degree = qa.group().zero();
            let report = match HomogeneousMap::endo(qa.basis(), m.clone(), degree.clone()) {
                Ok(hm) => check_centromorphism(&qa, &chi, &hm),
                Err(_) => continue,
            };
            s.record(format!("({r},{c})"), &report, || oracle::centromorphism(&qa, chi.matrix(), &m, &degree));
        }
    }
    out.push(("centromorphism", s));
    out
}
