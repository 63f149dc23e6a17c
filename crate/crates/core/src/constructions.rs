//! New algebras and forms from old ones: centroid twists, tensor products
//! with 3-associative algebras, Yau twists, derivations, centromorphisms and
//! the passage from antisymmetric derivations to symplectic forms.

use crate::algebra::{
    rotate, sparse, sub_into, Algebra3Rho, AlgebraKind, GradedBasis, HomogeneousMap, Sparse, TernaryBracket,
};
use crate::axioms::{check_3_associative, check_lie, check_morphism, check_rho_commutative, BRACKET_COMPAT};
use crate::conditions::{par_emit, solve_linear, Flatten, Sink};
use crate::error::{Error, Result};
use crate::forms::{check_metric, check_quadratic, check_symplectic, BilinearForm, INVARIANCE};
use crate::grading::GroupElement;
use crate::linalg::{in_span, Matrix};
use crate::report::{Residual, ValidationReport};
use crate::scalar::{CyclotomicOrder, Scalar};

pub const CENTROID_1: &str = "centroid (slot 1)";
pub const CENTROID_2: &str = "centroid (slot 2)";
pub const CENTROID_3: &str = "centroid (slot 3)";
pub const LEIBNIZ: &str = "derivation rule";
pub const TWIST_COMMUTATION: &str = "twist commutation";
pub const FORM_ANTISYMMETRY: &str = "form antisymmetry";
pub const FORM_SYMMETRY: &str = "form symmetry";

/// A basis of homogeneous maps of one degree solving a linear system.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MapSpace {
    pub degree: GroupElement,
    pub maps: Vec<HomogeneousMap>,
}

impl MapSpace {
    pub fn dim(&self) -> usize {
        self.maps.len()
    }

    pub fn contains(&self, m: &Matrix) -> bool {
        let Some(first) = self.maps.first() else {
            return m.is_zero();
        };
        let flat = |x: &Matrix| -> Vec<Scalar> { x.to_rows().into_iter().flatten().collect() };
        let n = first.matrix().rows() * first.matrix().cols();
        let basis: Vec<Vec<Scalar>> = self.maps.iter().map(|h| flat(h.matrix())).collect();
        let basis = crate::linalg::span_basis(m.order(), n, &basis);
        in_span(m.order(), n, &basis, &flat(m))
    }
}

/// All matrices with a single 1 in a position allowed by the degree.
fn degree_units(order: CyclotomicOrder, basis: &GradedBasis, degree: &GroupElement) -> Vec<Matrix> {
    let g = basis.group();
    let d = basis.dim();
    let mut out = Vec::new();
    for i in 0..d {
        for j in 0..d {
            if *basis.degree(i) == g.add(basis.degree(j), degree) {
                let mut m = Matrix::zeros(order, d, d);
                m.set(i, j, Scalar::one(order));
                out.push(m);
            }
        }
    }
    out
}

/// Exponents of rho(degree, |e_f|) for every basis vector.
fn degree_exponents(alg: &Algebra3Rho, degree: &GroupElement) -> Vec<i64> {
    alg.basis()
        .degrees()
        .iter()
        .map(|e| alg.rho().exponent(degree, e) as i64)
        .collect()
}

fn columns(m: &Matrix) -> Vec<Sparse> {
    (0..m.cols()).map(|j| sparse(&m.column(j))).collect()
}

/// Image of a sparse vector under a map given by sparse columns.
fn image(cols: &[Sparse], v: &[(usize, Scalar)], dim: usize, order: CyclotomicOrder) -> Vec<Scalar> {
    let mut out = vec![Scalar::zero(order); dim];
    for (j, c) in v {
        for (i, x) in &cols[*j] {
            out[*i] += &(c * x);
        }
    }
    out
}

fn emit_centroid<S: Sink>(alg: &Algebra3Rho, m: &Matrix, dexp: &[i64], sink: &mut S) {
    let d = alg.dim();
    let o = alg.order();
    let br = alg.bracket();
    let cols = columns(m);
    let units = alg.units();
    par_emit(sink, d, |f, s| {
        for g in 0..d {
            for h in 0..d {
                let lhs = image(&cols, br.get(f, g, h), d, o);
                let mut r = lhs.clone();
                sub_into(&mut r, &alg.br(&cols[f], &units[g], &units[h]));
                s.vector(CENTROID_1, &[f, g, h], r);
                let mut r = lhs.clone();
                sub_into(&mut r, &rotate(alg.br(&units[f], &cols[g], &units[h]), dexp[f]));
                s.vector(CENTROID_2, &[f, g, h], r);
                let mut r = lhs;
                sub_into(&mut r, &rotate(alg.br(&units[f], &units[g], &cols[h]), dexp[f] + dexp[g]));
                s.vector(CENTROID_3, &[f, g, h], r);
            }
        }
    });
}

fn emit_twist_commutation<S: Sink>(alg: &Algebra3Rho, m: &Matrix, sink: &mut S) {
    if alg.is_hom() {
        sink.matrix(TWIST_COMMUTATION, &[], m.mul(alg.twist()).sub(&alg.twist().mul(m)));
    }
}

fn emit_derivation<S: Sink>(alg: &Algebra3Rho, m: &Matrix, dexp: &[i64], sink: &mut S) {
    let d = alg.dim();
    let o = alg.order();
    let br = alg.bracket();
    let cols = columns(m);
    let units = alg.units();
    par_emit(sink, d, |f, s| {
        for g in 0..d {
            for h in 0..d {
                let mut r = image(&cols, br.get(f, g, h), d, o);
                sub_into(&mut r, &alg.br(&cols[f], &units[g], &units[h]));
                sub_into(&mut r, &rotate(alg.br(&units[f], &cols[g], &units[h]), dexp[f]));
                sub_into(&mut r, &rotate(alg.br(&units[f], &units[g], &cols[h]), dexp[f] + dexp[g]));
                s.vector(LEIBNIZ, &[f, g, h], r);
            }
        }
    });
    emit_twist_commutation(alg, m, sink);
}

/// form(D f, g) - sign * rho(D, f) form(f, D g) for all basis pairs.
fn emit_form_relation<S: Sink>(form: &Matrix, m: &Matrix, dexp: &[i64], sign: i64, name: &str, sink: &mut S) {
    let left = m.transpose().mul(form);
    let right = form.mul(m);
    let n = form.rows();
    for f in 0..n {
        for g in 0..n {
            let t = right.get(f, g).mul_zeta(dexp[f]);
            let r = if sign > 0 { left.get(f, g) - &t } else { left.get(f, g) + &t };
            sink.scalar(name, &[f, g], r);
        }
    }
}

fn check_map_shape(report: &mut ValidationReport, alg: &Algebra3Rho, map: &HomogeneousMap, identity: &str) -> bool {
    let m = map.matrix();
    if m.rows() != alg.dim() || m.cols() != alg.dim() || m.order() != alg.order() {
        report.push(
            identity,
            &[],
            Residual::Note(format!("map is {}x{}, algebra has dimension {}", m.rows(), m.cols(), alg.dim())),
        );
        return false;
    }
    if HomogeneousMap::endo(alg.basis(), m.clone(), map.degree().clone()).is_err() {
        report.push(identity, &[], Residual::Note(format!("map is not homogeneous of degree {}", map.degree())));
        return false;
    }
    true
}

fn form_shape(alg: &Algebra3Rho, form: &BilinearForm) -> Result<()> {
    if form.dim() != alg.dim() || form.matrix().order() != alg.order() {
        return Err(Error::DimMismatch(format!(
            "form has dimension {}, algebra {}",
            form.dim(),
            alg.dim()
        )));
    }
    Ok(())
}

fn solve_maps(
    alg: &Algebra3Rho,
    degree: &GroupElement,
    check: &str,
    emit: impl Fn(&Matrix, &mut Flatten) + Sync,
    recheck: impl Fn(&Matrix, &mut ValidationReport),
) -> Result<MapSpace> {
    alg.group().check(degree)?;
    let unknowns = degree_units(alg.order(), alg.basis(), degree);
    let solutions = solve_linear(alg.order(), &unknowns, |m| {
        let mut sink = Flatten::default();
        emit(m, &mut sink);
        sink.0
    });
    let mut report = ValidationReport::new(check);
    for m in &solutions {
        recheck(m, &mut report);
    }
    if !report.passed() {
        return Err(Error::ClosureFailure(Box::new(report)));
    }
    let maps = solutions
        .into_iter()
        .map(|m| HomogeneousMap::endo(alg.basis(), m, degree.clone()))
        .collect::<Result<Vec<_>>>()?;
    Ok(MapSpace {
        degree: degree.clone(),
        maps,
    })
}

/// psi[f,g,h] = [psi f,g,h] = rho(psi,f)[f,psi g,h] = rho(psi,f+g)[f,g,psi h].
pub fn check_centroid(alg: &Algebra3Rho, psi: &HomogeneousMap) -> ValidationReport {
    let mut report = ValidationReport::new("centroid");
    if check_map_shape(&mut report, alg, psi, CENTROID_1) {
        let dexp = degree_exponents(alg, psi.degree());
        emit_centroid(alg, psi.matrix(), &dexp, &mut report);
    }
    report
}

/// Centroid elements of the given degree, all three equalities imposed at once.
pub fn centroid(alg: &Algebra3Rho, degree: &GroupElement) -> Result<MapSpace> {
    let dexp = degree_exponents(alg, degree);
    solve_maps(
        alg,
        degree,
        "centroid",
        |m, s| emit_centroid(alg, m, &dexp, s),
        |m, r| emit_centroid(alg, m, &dexp, r),
    )
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TwistMode {
    /// [psi f, g, h]
    Once,
    /// [psi f, psi g, psi h]
    Thrice,
}

fn centroid_bracket(alg: &Algebra3Rho, psi: &Matrix, mode: TwistMode) -> TernaryBracket {
    let d = alg.dim();
    let cols = columns(psi);
    let units = alg.units();
    let mut out = TernaryBracket::zero(alg.order(), d);
    for i in 0..d {
        for j in 0..d {
            for k in 0..d {
                let v = match mode {
                    TwistMode::Once => alg.br(&cols[i], &units[j], &units[k]),
                    TwistMode::Thrice => alg.br(&cols[i], &cols[j], &cols[k]),
                };
                out.set(i, j, k, &v);
            }
        }
    }
    out
}

fn require_even_centroid(alg: &Algebra3Rho, psi: &HomogeneousMap) -> Result<()> {
    if !psi.is_even() {
        return Err(Error::Precondition(format!("centroid element has degree {}, expected 0", psi.degree())));
    }
    let report = check_centroid(alg, psi);
    if !report.passed() {
        return Err(Error::NotCentroid(Box::new(report)));
    }
    Ok(())
}

/// The algebra with bracket [psi f,g,h] (Once) or [psi f,psi g,psi h] (Thrice)
/// and the original twist; re-verified.
pub fn twist_by_centroid(alg: &Algebra3Rho, psi: &HomogeneousMap, mode: TwistMode) -> Result<Algebra3Rho> {
    require_even_centroid(alg, psi)?;
    let out = alg.with_bracket(centroid_bracket(alg, psi.matrix(), mode), alg.kind())?;
    let report = check_lie(&out);
    if !report.passed() {
        return Err(Error::ClosureFailure(Box::new(report)));
    }
    Ok(out)
}

/// One of the twisted structures built from a centroid element of a Hom algebra.
#[derive(Clone, Debug)]
pub struct CentroidVariant {
    pub label: &'static str,
    pub algebra: Algebra3Rho,
    pub report: ValidationReport,
}

/// The five pairings of {[ ], [ ]^psi, [ ]^psi_psi} with {phi, psi.phi}
/// (excluding the input itself), each verified and reported, not assumed.
pub fn hom_centroid_variants(alg: &Algebra3Rho, psi: &HomogeneousMap) -> Result<Vec<CentroidVariant>> {
    require_even_centroid(alg, psi)?;
    let composed = psi.matrix().mul(alg.twist());
    let once = centroid_bracket(alg, psi.matrix(), TwistMode::Once);
    let thrice = centroid_bracket(alg, psi.matrix(), TwistMode::Thrice);
    let specs: [(&'static str, &TernaryBracket, &Matrix); 5] = [
        ("[ ] with psi.phi", alg.bracket(), &composed),
        ("[ ]^psi with phi", &once, alg.twist()),
        ("[ ]^psi with psi.phi", &once, &composed),
        ("[ ]^psi_psi with phi", &thrice, alg.twist()),
        ("[ ]^psi_psi with psi.phi", &thrice, &composed),
    ];
    specs
        .into_iter()
        .map(|(label, br, tw)| {
            let algebra = Algebra3Rho::new(
                alg.basis().clone(),
                alg.rho().clone(),
                br.clone(),
                Some(tw.clone()),
                alg.kind(),
            )?;
            let report = check_lie(&algebra);
            Ok(CentroidVariant {
                label,
                algebra,
                report,
            })
        })
        .collect()
}

/// chi_psi(f, g) = chi(psi f, g), re-verified as a quadratic structure on both
/// centroid twists.
pub fn twisted_form(alg: &Algebra3Rho, chi: &BilinearForm, psi: &HomogeneousMap) -> Result<BilinearForm> {
    form_shape(alg, chi)?;
    let report = check_quadratic(alg, chi);
    if !report.passed() {
        return Err(Error::NotQuadratic(Box::new(report)));
    }
    require_even_centroid(alg, psi)?;
    let p = psi.matrix();
    if !p.is_invertible() {
        return Err(Error::NotInvertible("centroid element".into()));
    }
    let c = chi.matrix();
    if !p.transpose().mul(c).sub(&c.mul(p)).is_zero() {
        return Err(Error::Precondition("centroid element is not symmetric for the form".into()));
    }
    if !p.mul(alg.twist()).sub(&alg.twist().mul(p)).is_zero() {
        return Err(Error::NonCommuting("centroid element and twist".into()));
    }
    let out = chi.precompose_left(p);
    let mut closure = ValidationReport::new("twisted quadratic structure");
    for mode in [TwistMode::Once, TwistMode::Thrice] {
        let twisted = twist_by_centroid(alg, psi, mode)?;
        closure.absorb(check_quadratic(&twisted, &out));
    }
    if !closure.passed() {
        return Err(Error::ClosureFailure(Box::new(closure)));
    }
    Ok(out)
}

/// E = B (x) g with bracket rho(a,g+h)rho(b,h)[f,g,h] (x) mu(a,b,c),
/// form rho(a,g)chi(f,g)chi_g(a,b) and twist phi (x) alpha.
pub fn tensor_with_associative(
    b: &Algebra3Rho,
    chi: &BilinearForm,
    g: &Algebra3Rho,
    chi_g: &BilinearForm,
) -> Result<(Algebra3Rho, BilinearForm)> {
    if b.order() != g.order() {
        return Err(Error::OrderMismatch(b.order().get(), g.order().get()));
    }
    if b.group() != g.group() || b.rho() != g.rho() {
        return Err(Error::GroupMismatch("factors use different gradings or two-cycles".into()));
    }
    if g.kind() != AlgebraKind::Associative {
        return Err(Error::KindMismatch {
            expected: AlgebraKind::Associative.to_string(),
            found: g.kind().to_string(),
        });
    }
    form_shape(b, chi)?;
    form_shape(g, chi_g)?;
    let r = check_lie(b);
    if !r.passed() {
        return Err(Error::NotLie(Box::new(r)));
    }
    let r = check_quadratic(b, chi);
    if !r.passed() {
        return Err(Error::NotQuadratic(Box::new(r)));
    }
    let mut r = check_3_associative(g);
    r.absorb(check_rho_commutative(g));
    if !r.passed() {
        return Err(Error::NotAssociative(Box::new(r)));
    }
    let r = check_quadratic(g, chi_g);
    if !r.passed() {
        return Err(Error::NotQuadratic(Box::new(r)));
    }

    let o = b.order();
    let (db, dg) = (b.dim(), g.dim());
    let n = db * dg;
    let rho = b.rho();
    let bd = b.basis().degrees();
    let gd = g.basis().degrees();
    let e = |x: usize, y: usize| rho.exponent(&gd[x], &bd[y]) as i64;
    let pair = |f: usize, a: usize| f * dg + a;
    let mut bracket = TernaryBracket::zero(o, n);
    for f in 0..db {
        for gg in 0..db {
            for h in 0..db {
                let fgh = b.bracket().get(f, gg, h);
                if fgh.is_empty() {
                    continue;
                }
                for a in 0..dg {
                    for bb in 0..dg {
                        for c in 0..dg {
                            let abc = g.bracket().get(a, bb, c);
                            if abc.is_empty() {
                                continue;
                            }
                            let k = e(a, gg) + e(a, h) + e(bb, h);
                            let mut v = vec![Scalar::zero(o); n];
                            for (l, x) in fgh {
                                for (m, y) in abc {
                                    v[pair(*l, *m)] += &(x * y).mul_zeta(k);
                                }
                            }
                            bracket.set(pair(f, a), pair(gg, bb), pair(h, c), &v);
                        }
                    }
                }
            }
        }
    }
    let form = Matrix::from_fn(o, n, n, |p, q| {
        let (f, a) = (p / dg, p % dg);
        let (gg, bb) = (q / dg, q % dg);
        (chi.matrix().get(f, gg) * chi_g.matrix().get(a, bb)).mul_zeta(e(a, gg))
    });
    let twist = Matrix::from_fn(o, n, n, |p, q| {
        b.twist().get(p / dg, q / dg) * g.twist().get(p % dg, q % dg)
    });
    let basis = b.basis().tensor(g.basis())?;
    let out = Algebra3Rho::new(basis, rho.clone(), bracket, Some(twist), AlgebraKind::Lie)?;
    let form = BilinearForm::new(form)?;
    let mut closure = check_lie(&out);
    closure.absorb(check_quadratic(&out, &form));
    if !closure.passed() {
        return Err(Error::ClosureFailure(Box::new(closure)));
    }
    Ok((out, form))
}

/// Bracket beta.[ , , ] with twist beta.phi, for an even beta with
/// beta[f,g,h] = +-[beta f, beta g, beta h].
pub fn yau_twist(alg: &Algebra3Rho, beta: &HomogeneousMap) -> Result<Algebra3Rho> {
    if !beta.is_even() {
        return Err(Error::Precondition(format!("twisting map has degree {}, expected 0", beta.degree())));
    }
    let bracket_only = |dst: &Algebra3Rho| {
        let mut report = check_morphism(alg, dst, beta);
        report.violations.retain(|v| v.identity == BRACKET_COMPAT);
        report
    };
    let report = bracket_only(alg);
    if !report.passed() {
        let negated = alg.with_bracket(alg.bracket().scale(&-Scalar::one(alg.order())), alg.kind())?;
        if !bracket_only(&negated).passed() {
            return Err(Error::NotEndomorphism(Box::new(report)));
        }
    }
    let m = beta.matrix();
    let out = Algebra3Rho::new(
        alg.basis().clone(),
        alg.rho().clone(),
        alg.bracket().post_compose(m),
        Some(m.mul(alg.twist())),
        alg.kind(),
    )?;
    let closure = check_lie(&out);
    if !closure.passed() {
        return Err(Error::ClosureFailure(Box::new(closure)));
    }
    Ok(out)
}

/// D[f,g,h] = [Df,g,h] + rho(D,f)[f,Dg,h] + rho(D,f+g)[f,g,Dh], D commuting with
/// the twist, and optionally chi(Df,g) = -rho(D,f)chi(f,Dg).
pub fn check_derivation(
    alg: &Algebra3Rho,
    d: &HomogeneousMap,
    antisymmetric_wrt: Option<&BilinearForm>,
) -> ValidationReport {
    let mut report = ValidationReport::new("derivation");
    if check_map_shape(&mut report, alg, d, LEIBNIZ) {
        let dexp = degree_exponents(alg, d.degree());
        emit_derivation(alg, d.matrix(), &dexp, &mut report);
        if let Some(form) = antisymmetric_wrt {
            if form.dim() == alg.dim() {
                emit_form_relation(form.matrix(), d.matrix(), &dexp, -1, FORM_ANTISYMMETRY, &mut report);
            } else {
                report.push(FORM_ANTISYMMETRY, &[], Residual::Note("form has the wrong dimension".into()));
            }
        }
    }
    report
}

/// Derivations of the given degree, optionally antisymmetric for a form.
pub fn derivations(
    alg: &Algebra3Rho,
    degree: &GroupElement,
    antisymmetric_wrt: Option<&BilinearForm>,
) -> Result<MapSpace> {
    if let Some(form) = antisymmetric_wrt {
        form_shape(alg, form)?;
    }
    let dexp = degree_exponents(alg, degree);
    solve_maps(
        alg,
        degree,
        "derivations",
        |m, s| {
            emit_derivation(alg, m, &dexp, s);
            if let Some(form) = antisymmetric_wrt {
                emit_form_relation(form.matrix(), m, &dexp, -1, FORM_ANTISYMMETRY, s);
            }
        },
        |m, r| {
            emit_derivation(alg, m, &dexp, r);
            if let Some(form) = antisymmetric_wrt {
                emit_form_relation(form.matrix(), m, &dexp, -1, FORM_ANTISYMMETRY, r);
            }
        },
    )
}

/// omega(f, g) = varphi(D f, g) for an invertible varphi-antisymmetric derivation D.
pub fn symplectic_from_derivation(
    alg: &Algebra3Rho,
    varphi: &BilinearForm,
    d: &HomogeneousMap,
) -> Result<BilinearForm> {
    form_shape(alg, varphi)?;
    let report = check_metric(alg, varphi);
    if !report.passed() {
        return Err(Error::NotAMetric(Box::new(report)));
    }
    if d.matrix().rows() != alg.dim() || !d.matrix().is_invertible() {
        return Err(Error::NotInvertible("derivation".into()));
    }
    let report = check_derivation(alg, d, Some(varphi));
    if !report.passed() {
        return Err(Error::NotAntisymmetricDerivation(Box::new(report)));
    }
    let omega = varphi.precompose_left(d.matrix());
    let closure = check_symplectic(alg, &omega);
    if !closure.passed() {
        return Err(Error::ClosureFailure(Box::new(closure)));
    }
    Ok(omega)
}

/// Centroid conditions, chi(Df,g) = rho(D,f)chi(f,Dg) and commutation with the twist.
pub fn check_centromorphism(alg: &Algebra3Rho, chi: &BilinearForm, d: &HomogeneousMap) -> ValidationReport {
    let mut report = ValidationReport::new("centromorphism");
    if check_map_shape(&mut report, alg, d, CENTROID_1) {
        let dexp = degree_exponents(alg, d.degree());
        emit_centroid(alg, d.matrix(), &dexp, &mut report);
        if chi.dim() == alg.dim() {
            emit_form_relation(chi.matrix(), d.matrix(), &dexp, 1, FORM_SYMMETRY, &mut report);
        } else {
            report.push(FORM_SYMMETRY, &[], Residual::Note("form has the wrong dimension".into()));
        }
        emit_twist_commutation(alg, d.matrix(), &mut report);
    }
    report
}

/// Centromorphisms of the given degree for a quadratic structure chi.
pub fn centromorphisms(alg: &Algebra3Rho, chi: &BilinearForm, degree: &GroupElement) -> Result<MapSpace> {
    form_shape(alg, chi)?;
    let report = check_quadratic(alg, chi);
    if !report.passed() {
        return Err(Error::NotQuadratic(Box::new(report)));
    }
    let dexp = degree_exponents(alg, degree);
    let emit = |m: &Matrix, s: &mut Flatten| {
        emit_centroid(alg, m, &dexp, s);
        emit_form_relation(chi.matrix(), m, &dexp, 1, FORM_SYMMETRY, s);
        emit_twist_commutation(alg, m, s);
    };
    solve_maps(alg, degree, "centromorphisms", emit, |m, r| {
        emit_centroid(alg, m, &dexp, r);
        emit_form_relation(chi.matrix(), m, &dexp, 1, FORM_SYMMETRY, r);
        emit_twist_commutation(alg, m, r);
    })
}

/// chi'(f, g) = chi(D f, g). Checks that chi' is invariant whenever D satisfies
/// the centroid conditions, and that chi' is non-degenerate exactly when D is
/// invertible.
pub fn form_from_centromorphism(alg: &Algebra3Rho, chi: &BilinearForm, d: &HomogeneousMap) -> Result<BilinearForm> {
    form_shape(alg, chi)?;
    let report = check_quadratic(alg, chi);
    if !report.passed() {
        return Err(Error::NotQuadratic(Box::new(report)));
    }
    let out = chi.precompose_left(d.matrix());
    let mut closure = ValidationReport::new("form from centromorphism");
    let invariant = check_quadratic(alg, &out).of(INVARIANCE).next().is_none();
    if check_centroid(alg, d).passed() && !invariant {
        closure.push(INVARIANCE, &[], Residual::Note("centroid map gave a non-invariant form".into()));
    }
    if out.is_nondegenerate() != d.matrix().is_invertible() {
        closure.push(
            crate::forms::NONDEGENERACY,
            &[],
            Residual::Note("non-degeneracy disagrees with invertibility".into()),
        );
    }
    if !closure.passed() {
        return Err(Error::ClosureFailure(Box::new(closure)));
    }
    Ok(out)
}

/// D . delta for a centromorphism D and a chi-antisymmetric derivation delta
/// that commute; the result is re-verified as a chi-antisymmetric derivation.
pub fn compose_centromorphism_derivation(
    alg: &Algebra3Rho,
    chi: &BilinearForm,
    d: &HomogeneousMap,
    delta: &HomogeneousMap,
) -> Result<HomogeneousMap> {
    form_shape(alg, chi)?;
    let report = check_centromorphism(alg, chi, d);
    if !report.passed() {
        return Err(Error::Precondition(format!("not a centromorphism: {report}")));
    }
    let report = check_derivation(alg, delta, Some(chi));
    if !report.passed() {
        return Err(Error::NotAntisymmetricDerivation(Box::new(report)));
    }
    let (m, n) = (d.matrix(), delta.matrix());
    if !m.mul(n).sub(&n.mul(m)).is_zero() {
        return Err(Error::NonCommuting("centromorphism and derivation".into()));
    }
    if !m.mul(alg.twist()).sub(&alg.twist().mul(m)).is_zero() {
        return Err(Error::NonCommuting("centromorphism and twist".into()));
    }
    let out = d.compose(delta, alg.group());
    let closure = check_derivation(alg, &out, Some(chi));
    if !closure.passed() {
        return Err(Error::ClosureFailure(Box::new(closure)));
    }
    Ok(out)
}

/// ad(e_i, e_j) = [e_i, e_j, .] as a homogeneous map of degree |e_i|+|e_j|.
pub fn ad(alg: &Algebra3Rho, i: usize, j: usize) -> Result<HomogeneousMap> {
    let d = alg.dim();
    let m = Matrix::from_fn(alg.order(), d, d, |l, k| alg.bracket().coefficient(i, j, k, l));
    let degree = alg.group().add(alg.basis().degree(i), alg.basis().degree(j));
    HomogeneousMap::endo(alg.basis(), m, degree)
}
