//! Seeded generators of small verified instances (dimension at most 3).

use colorlie::axioms::{check_lie, check_pre_lie};
use colorlie::constructions::{centroid, yau_twist};
use colorlie::forms::{solve_quadratic_forms, solve_symplectic_forms};
use colorlie::samples::extend_by_skew;
use colorlie::{
    Algebra3Rho, AlgebraKind, BilinearForm, CyclotomicOrder, GradedBasis, GradingGroup, HomogeneousMap, Matrix,
    Scalar, TernaryBracket, TwoCycle,
};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

/// Grading group, scalar field and two-cycle.
#[derive(Clone, Debug)]
pub struct Grading {
    pub order: CyclotomicOrder,
    pub group: GradingGroup,
    pub rho: TwoCycle,
}

fn grading(order: u32, moduli: Vec<u32>, exps: &[Vec<i64>]) -> Grading {
    let order = CyclotomicOrder::new(order).expect("valid order");
    let group = GradingGroup::new(moduli).expect("valid group");
    let rho = TwoCycle::new_validated(group.clone(), order, exps).expect("valid two-cycle");
    Grading { order, group, rho }
}

/// Trivial, super, Z2 x Z2 color and a Z3 x Z3 two-cycle with cube roots of unity.
pub fn gradings() -> Vec<Grading> {
    vec![
        grading(1, vec![], &[]),
        grading(2, vec![2], &[vec![1]]),
        grading(2, vec![2, 2], &[vec![0, 1], vec![1, 0]]),
        grading(3, vec![3, 3], &[vec![0, 1], vec![2, 0]]),
    ]
}

pub struct Gen {
    rng: StdRng,
    gradings: Vec<Grading>,
}

const ATTEMPTS: usize = 4000;
const PAIR_ATTEMPTS: usize = 12;

impl Gen {
    pub fn new(seed: u64) -> Self {
        Self { rng: StdRng::seed_from_u64(seed), gradings: gradings() }
    }

    pub fn rng(&mut self) -> &mut StdRng {
        &mut self.rng
    }

    pub fn grading(&mut self) -> Grading {
        let i = self.rng.gen_range(0..self.gradings.len());
        self.gradings[i].clone()
    }

    /// A nonzero integer in [-2, 2], sometimes times a root of unity.
    pub fn unit_scalar(&mut self, order: CyclotomicOrder) -> Scalar {
        let v = [-2i64, -1, 1, 2][self.rng.gen_range(0..4)];
        let k = self.rng.gen_range(0..order.get() as i64);
        Scalar::from_int(order, v).mul_zeta(k)
    }

    pub fn small_scalar(&mut self, order: CyclotomicOrder) -> Scalar {
        if self.rng.gen_bool(0.3) {
            Scalar::zero(order)
        } else {
            self.unit_scalar(order)
        }
    }

    pub fn basis(&mut self, g: &Grading, dim: usize) -> GradedBasis {
        let degrees = (0..dim)
            .map(|_| {
                let r: Vec<i64> = g.group.moduli().iter().map(|&m| self.rng.gen_range(0..m as i64)).collect();
                g.group.element(&r).expect("in range")
            })
            .collect();
        let names = (0..dim).map(|i| format!("e{}", i + 1)).collect();
        GradedBasis::new(g.group.clone(), names, degrees).expect("valid basis")
    }

    fn seeds(&mut self, g: &Grading, basis: &GradedBasis) -> Vec<((usize, usize, usize), Vec<Scalar>)> {
        let dim = basis.dim();
        let count = self.rng.gen_range(1..=2);
        let mut out = Vec::new();
        for _ in 0..count {
            let (i, j, k) = (self.rng.gen_range(0..dim), self.rng.gen_range(0..dim), self.rng.gen_range(0..dim));
            let target = g.group.sum([basis.degree(i), basis.degree(j), basis.degree(k)]);
            let value: Vec<Scalar> = (0..dim)
                .map(|l| {
                    if *basis.degree(l) == target {
                        self.small_scalar(g.order)
                    } else {
                        Scalar::zero(g.order)
                    }
                })
                .collect();
            if value.iter().any(|c| !c.is_zero()) {
                out.push(((i, j, k), value));
            }
        }
        out
    }

    /// An unverified candidate: random degrees and a few seeded triples
    /// extended by the skew rules of the given kind.
    pub fn raw(&mut self, kind: AlgebraKind) -> Option<Algebra3Rho> {
        let g = self.grading();
        let dim = self.rng.gen_range(1..=3);
        let basis = self.basis(&g, dim);
        let seeds = self.seeds(&g, &basis);
        let exps = |i: usize, j: usize| g.rho.exponent(basis.degree(i), basis.degree(j)) as i64;
        let bracket = match kind {
            AlgebraKind::PreLie => extend_first_pair(g.order, &exps, dim, &seeds),
            _ => extend_by_skew(g.order, &exps, dim, &seeds),
        };
        Algebra3Rho::new(basis, g.rho.clone(), bracket, None, kind).ok()
    }

    /// A verified 3-rho-Lie algebra, usually with a nonzero bracket.
    pub fn lie(&mut self) -> Algebra3Rho {
        self.find(AlgebraKind::Lie, |a| check_lie(a).passed())
    }

    /// A verified 3-pre-rho-Lie algebra.
    pub fn pre_lie(&mut self) -> Algebra3Rho {
        self.find(AlgebraKind::PreLie, |a| check_pre_lie(a).passed())
    }

    fn find(&mut self, kind: AlgebraKind, ok: impl Fn(&Algebra3Rho) -> bool) -> Algebra3Rho {
        let mut fallback = None;
        for _ in 0..ATTEMPTS {
            if let Some(a) = self.raw(kind) {
                if ok(&a) {
                    if !a.bracket().is_zero() {
                        return a;
                    }
                    fallback.get_or_insert(a);
                }
            }
        }
        fallback.expect("zero brackets always verify")
    }

    /// An even map diag(+-chi(e_i)) built from a sign character of the
    /// grading, possibly negated; either way a bracket automorphism.
    pub fn sign_character(&mut self, alg: &Algebra3Rho) -> Matrix {
        let o = alg.order();
        let moduli = alg.group().moduli().to_vec();
        let picks: Vec<bool> = moduli.iter().map(|&m| m % 2 == 0 && self.rng.gen_bool(0.5)).collect();
        let overall = self.rng.gen_bool(0.5);
        Matrix::from_fn(o, alg.dim(), alg.dim(), |r, c| {
            if r != c {
                return Scalar::zero(o);
            }
            let res = alg.basis().degree(r).residues();
            let odd = picks.iter().zip(res).filter(|(p, &x)| **p && x % 2 == 1).count() % 2 == 1;
            Scalar::from_int(o, if odd ^ overall { -1 } else { 1 })
        })
    }

    /// A Hom algebra obtained by a Yau twist of a random Lie algebra.
    pub fn hom_lie(&mut self) -> Algebra3Rho {
        loop {
            let alg = self.lie();
            let beta = self.sign_character(&alg);
            let beta = HomogeneousMap::even(alg.basis(), beta).expect("diagonal is even");
            if let Ok(h) = yau_twist(&alg, &beta) {
                return h;
            }
        }
    }

    /// A random even centroid element with nonzero matrix.
    pub fn centroid_element(&mut self, alg: &Algebra3Rho) -> HomogeneousMap {
        let space = centroid(alg, &alg.group().zero()).expect("even centroid");
        let o = alg.order();
        loop {
            let mut m = Matrix::zeros(o, alg.dim(), alg.dim());
            for h in &space.maps {
                m = m.add(&h.matrix().scale(&self.small_scalar(o)));
            }
            if !m.is_zero() || space.maps.is_empty() {
                return HomogeneousMap::even(alg.basis(), m).expect("centroid members are even");
            }
        }
    }

    /// A random non-degenerate member of the span of the given forms.
    pub fn nondegenerate_combination(&mut self, members: &[BilinearForm], order: CyclotomicOrder, dim: usize) -> Option<BilinearForm> {
        if members.is_empty() {
            return None;
        }
        for _ in 0..8 {
            let mut acc = BilinearForm::zero(order, dim);
            for m in members {
                acc = acc.add(&m.scale(&self.small_scalar(order)));
            }
            if acc.is_nondegenerate() {
                return Some(acc);
            }
        }
        None
    }

    /// A Lie algebra together with a symplectic structure.
    pub fn symplectic_pair(&mut self) -> (Algebra3Rho, BilinearForm) {
        self.form_pair(-1)
    }

    /// A Lie algebra together with a quadratic structure. In dimension at most
    /// three these are often abelian.
    pub fn quadratic_pair(&mut self) -> (Algebra3Rho, BilinearForm) {
        self.form_pair(1)
    }

    fn form_pair(&mut self, sign: i64) -> (Algebra3Rho, BilinearForm) {
        for _ in 0..PAIR_ATTEMPTS {
            let alg = self.lie();
            let members = if sign < 0 { solve_symplectic_forms(&alg) } else { solve_quadratic_forms(&alg) };
            let members = self.one_degree(&alg, members.expect("solvable"));
            if let Some(w) = self.nondegenerate_combination(&members, alg.order(), alg.dim()) {
                return (alg, w);
            }
        }
        loop {
            let g = self.grading();
            let dim = self.rng.gen_range(1..=3);
            let basis = self.basis(&g, dim);
            let alg = Algebra3Rho::new(basis, g.rho.clone(), TernaryBracket::zero(g.order, dim), None, AlgebraKind::Lie)
                .expect("valid");
            for _ in 0..8 {
                let m = self.graded_form(&alg, sign);
                let f = BilinearForm::new(m).expect("square");
                if f.is_nondegenerate() && f.degree(alg.basis()).is_some() {
                    return (alg, f);
                }
            }
        }
    }

    /// The members of one randomly chosen degree (solver members are homogeneous).
    fn one_degree(&mut self, alg: &Algebra3Rho, members: Vec<BilinearForm>) -> Vec<BilinearForm> {
        let degrees: Vec<_> = members.iter().filter_map(|f| f.degree(alg.basis())).collect();
        if degrees.is_empty() {
            return Vec::new();
        }
        let pick = degrees[self.rng.gen_range(0..degrees.len())].clone();
        members.into_iter().filter(|f| f.degree(alg.basis()).as_ref() == Some(&pick)).collect()
    }

    /// A random rho-symmetric (sign 1) or rho-skew (sign -1) matrix.
    pub fn graded_form(&mut self, alg: &Algebra3Rho, sign: i64) -> Matrix {
        let o = alg.order();
        let d = alg.dim();
        let s = Scalar::from_int(o, sign);
        let mut m = Matrix::zeros(o, d, d);
        for i in 0..d {
            for j in i..d {
                let c = self.small_scalar(o);
                let r = alg.rho().value(alg.basis().degree(i), alg.basis().degree(j));
                if i == j {
                    if (&r - &s).is_zero() {
                        m.set(i, i, c);
                    }
                } else {
                    m.set(j, i, c.clone());
                    m.set(i, j, &s * &r * c);
                }
            }
        }
        m
    }

    /// The one-dimensional associative algebra (e,e,e) = c e of degree zero
    /// over the given grading, with its form [1].
    pub fn associative_line(&mut self, like: &Algebra3Rho) -> (Algebra3Rho, BilinearForm) {
        let o = like.order();
        let basis = GradedBasis::new(like.group().clone(), vec!["a".into()], vec![like.group().zero()]).expect("basis");
        let mut br = TernaryBracket::zero(o, 1);
        br.set(0, 0, 0, &[self.small_scalar(o)]);
        let alg = Algebra3Rho::new(basis, like.rho().clone(), br, None, AlgebraKind::Associative).expect("valid");
        let form = BilinearForm::new(Matrix::identity(o, 1)).expect("square");
        (alg, form)
    }
}

/// Fills in [y,x,z] = -rho(x,y)[x,y,z] from the seeds.
pub fn extend_first_pair(
    order: CyclotomicOrder,
    exps: &dyn Fn(usize, usize) -> i64,
    dim: usize,
    seeds: &[((usize, usize, usize), Vec<Scalar>)],
) -> TernaryBracket {
    let mut br = TernaryBracket::zero(order, dim);
    for ((i, j, k), v) in seeds {
        br.set(*i, *j, *k, v);
        let swapped: Vec<Scalar> = v.iter().map(|c| -c.mul_zeta(exps(*i, *j))).collect();
        if (i, j) != (j, i) {
            br.set(*j, *i, *k, &swapped);
        }
    }
    br
}
