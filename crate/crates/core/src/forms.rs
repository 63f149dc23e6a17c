//! Bilinear forms on an algebra (quadratic, metric, symplectic), subspaces,
//! ideals, the center and orthogonal complements.

use crate::algebra::{sparse, Algebra3Rho, GradedBasis, Sparse, Vector};
use crate::conditions::{par_emit, solve_linear, Flatten, Sink};
use crate::error::{Error, Result};
use crate::grading::GroupElement;
use crate::linalg::{in_span, span_basis, Matrix};
use crate::report::{Residual, ValidationReport};
use crate::scalar::{CyclotomicOrder, Scalar};

pub const RHO_SYMMETRY: &str = "rho-symmetry";
pub const RHO_SKEW: &str = "rho-skew-symmetry";
pub const NONDEGENERACY: &str = "non-degeneracy";
pub const INVARIANCE: &str = "invariance";
pub const TWIST_SYMMETRY: &str = "twist symmetry";
pub const METRIC_IDENTITY: &str = "metric identity";
pub const SYMPLECTIC_IDENTITY: &str = "symplectic identity";
pub const IDEAL_CLOSURE: &str = "ideal closure";
pub const TWIST_CLOSURE: &str = "twist closure";

/// Sign of the second term of the canonical symplectic pairing on B + B*.
pub const SYMPLECTIC_PAIRING_SIGN: i64 = -1;
/// Sign of the second term of the canonical metric pairing on B + B*.
pub const METRIC_PAIRING_SIGN: i64 = 1;

/// Entry (i, j) is the value on (e_i, e_j).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BilinearForm {
    matrix: Matrix,
}

impl BilinearForm {
    pub fn new(matrix: Matrix) -> Result<Self> {
        if !matrix.is_square() {
            return Err(Error::DimMismatch(format!(
                "form matrix is {}x{}",
                matrix.rows(),
                matrix.cols()
            )));
        }
        Ok(Self { matrix })
    }

    pub fn zero(order: CyclotomicOrder, dim: usize) -> Self {
        Self {
            matrix: Matrix::zeros(order, dim, dim),
        }
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn dim(&self) -> usize {
        self.matrix.rows()
    }

    pub fn eval(&self, u: &[Scalar], v: &[Scalar]) -> Scalar {
        bil(&self.matrix, &sparse(u), &sparse(v))
    }

    pub fn is_nondegenerate(&self) -> bool {
        self.matrix.is_invertible()
    }

    /// The common value of |e_i| + |e_j| over the nonzero entries, if there is one.
    pub fn degree(&self, basis: &GradedBasis) -> Option<GroupElement> {
        let g = basis.group();
        let mut found: Option<GroupElement> = None;
        for i in 0..self.matrix.rows() {
            for j in 0..self.matrix.cols() {
                if self.matrix.get(i, j).is_zero() {
                    continue;
                }
                let d = g.add(basis.degree(i), basis.degree(j));
                match &found {
                    Some(e) if *e != d => return None,
                    _ => found = Some(d),
                }
            }
        }
        Some(found.unwrap_or_else(|| g.zero()))
    }

    /// (f, g) -> form(D f, g).
    pub fn precompose_left(&self, d: &Matrix) -> BilinearForm {
        BilinearForm {
            matrix: d.transpose().mul(&self.matrix),
        }
    }

    pub fn add(&self, other: &BilinearForm) -> BilinearForm {
        BilinearForm {
            matrix: self.matrix.add(&other.matrix),
        }
    }

    pub fn scale(&self, c: &Scalar) -> BilinearForm {
        BilinearForm {
            matrix: self.matrix.scale(c),
        }
    }
}

/// l_i* ^ l_j*: value 1 on (e_j, e_i) and -rho(e_i, e_j) on (e_i, e_j).
pub fn wedge(alg: &Algebra3Rho, i: usize, j: usize) -> BilinearForm {
    let o = alg.order();
    let d = alg.dim();
    let mut m = Matrix::zeros(o, d, d);
    m.set(j, i, Scalar::one(o));
    let v = m.get(i, j) - &Scalar::zeta_pow(o, alg.e(i, j));
    m.set(i, j, v);
    BilinearForm { matrix: m }
}

/// Sum of wedges over the listed index pairs.
pub fn wedge_sum(alg: &Algebra3Rho, pairs: &[(usize, usize)]) -> BilinearForm {
    pairs
        .iter()
        .fold(BilinearForm::zero(alg.order(), alg.dim()), |acc, &(i, j)| acc.add(&wedge(alg, i, j)))
}

/// The pairing on B + B* (B first, dual basis e_i* of degree -|e_i| second):
/// form(e_i*, e_j) = delta_ij and form(e_i, e_j*) = sign * rho(e_i, e_j*) delta_ij.
pub fn canonical_pairing(alg: &Algebra3Rho, sign: i64) -> BilinearForm {
    let o = alg.order();
    let d = alg.dim();
    let g = alg.group();
    let rho = alg.rho();
    let mut m = Matrix::zeros(o, 2 * d, 2 * d);
    for i in 0..d {
        m.set(d + i, i, Scalar::one(o));
        let dual = g.neg(alg.basis().degree(i));
        let k = rho.exponent(alg.basis().degree(i), &dual) as i64;
        m.set(i, d + i, Scalar::from_int(o, sign).mul_zeta(k));
    }
    BilinearForm { matrix: m }
}

pub(crate) fn bil(m: &Matrix, u: &[(usize, Scalar)], v: &[(usize, Scalar)]) -> Scalar {
    let mut acc = Scalar::zero(m.order());
    for (i, a) in u {
        for (j, b) in v {
            let x = m.get(*i, *j);
            if !x.is_zero() {
                acc += &(&(a * b) * x);
            }
        }
    }
    acc
}

fn shape_ok(report: &mut ValidationReport, alg: &Algebra3Rho, m: &Matrix) -> bool {
    if m.rows() != alg.dim() || m.cols() != alg.dim() || m.order() != alg.order() {
        report.push(
            NONDEGENERACY,
            &[],
            Residual::Note(format!(
                "form is {}x{} over Q(z_{}), algebra has dimension {} over Q(z_{})",
                m.rows(),
                m.cols(),
                m.order(),
                alg.dim(),
                alg.order()
            )),
        );
        return false;
    }
    true
}

fn nondegeneracy(report: &mut ValidationReport, m: &Matrix) {
    if !m.is_invertible() {
        report.push(NONDEGENERACY, &[], Residual::Integer(m.rank() as i64));
    }
}

/// form(e_i, e_j) - s * rho(i,j) form(e_j, e_i), with s = 1 (symmetric) or -1 (skew).
fn emit_rho_symmetry<S: Sink>(alg: &Algebra3Rho, m: &Matrix, skew: bool, sink: &mut S) {
    let d = alg.dim();
    for i in 0..d {
        for j in 0..d {
            let t = m.get(j, i).mul_zeta(alg.e(i, j));
            let r = if skew { m.get(i, j) + &t } else { m.get(i, j) - &t };
            sink.scalar(if skew { RHO_SKEW } else { RHO_SYMMETRY }, &[i, j], r);
        }
    }
}

fn emit_twist_symmetry<S: Sink>(alg: &Algebra3Rho, m: &Matrix, sink: &mut S) {
    if alg.is_hom() {
        let phi = alg.twist();
        sink.matrix(TWIST_SYMMETRY, &[], phi.transpose().mul(m).sub(&m.mul(phi)));
    }
}

/// Conditions of a quadratic structure that are linear in the form.
pub(crate) fn emit_quadratic<S: Sink>(alg: &Algebra3Rho, m: &Matrix, sink: &mut S) {
    emit_rho_symmetry(alg, m, false, sink);
    let d = alg.dim();
    let br = alg.bracket();
    let units = alg.units();
    par_emit(sink, d, |i, s| {
        for j in 0..d {
            for k in 0..d {
                for l in 0..d {
                    let r = bil(m, br.get(i, j, k), &units[l]) - bil(m, &units[i], br.get(j, k, l));
                    s.scalar(INVARIANCE, &[i, j, k, l], r);
                }
            }
        }
    });
    emit_twist_symmetry(alg, m, sink);
}

/// rho-symmetric, invariant, non-degenerate and (twisted case) twist-symmetric.
pub fn check_quadratic(alg: &Algebra3Rho, chi: &BilinearForm) -> ValidationReport {
    let mut report = ValidationReport::new("quadratic structure");
    if shape_ok(&mut report, alg, &chi.matrix) {
        emit_quadratic(alg, &chi.matrix, &mut report);
        nondegeneracy(&mut report, &chi.matrix);
    }
    report
}

pub(crate) fn emit_metric<S: Sink>(alg: &Algebra3Rho, m: &Matrix, sink: &mut S) {
    emit_rho_symmetry(alg, m, false, sink);
    let d = alg.dim();
    let br = alg.bracket();
    let phi = alg.twist_columns();
    par_emit(sink, d, |f, s| {
        for g in 0..d {
            for h in 0..d {
                let fgh = br.get(f, g, h);
                for z in 0..d {
                    let r = bil(m, fgh, &phi[z])
                        + bil(m, &phi[h], br.get(f, g, z)).mul_zeta(alg.r(&[f, g], &[h]));
                    s.scalar(METRIC_IDENTITY, &[f, g, h, z], r);
                }
            }
        }
    });
}

/// rho-symmetric, non-degenerate and varphi([f,g,h], phi z) + rho(f+g,h) varphi(phi h, [f,g,z]) = 0.
pub fn check_metric(alg: &Algebra3Rho, varphi: &BilinearForm) -> ValidationReport {
    let mut report = ValidationReport::new("metric");
    if shape_ok(&mut report, alg, &varphi.matrix) {
        emit_metric(alg, &varphi.matrix, &mut report);
        nondegeneracy(&mut report, &varphi.matrix);
    }
    report
}

pub(crate) fn emit_symplectic<S: Sink>(alg: &Algebra3Rho, m: &Matrix, sink: &mut S) {
    emit_rho_symmetry(alg, m, true, sink);
    let d = alg.dim();
    let br = alg.bracket();
    let phi = alg.twist_columns();
    par_emit(sink, d, |f1, s| {
        for f2 in 0..d {
            for f3 in 0..d {
                for f4 in 0..d {
                    let mut r = bil(m, br.get(f1, f2, f3), &phi[f4]);
                    r -= &bil(m, br.get(f2, f3, f4), &phi[f1]).mul_zeta(alg.r(&[f1], &[f2, f3, f4]));
                    r += &bil(m, br.get(f3, f4, f1), &phi[f2]).mul_zeta(alg.r(&[f1, f2], &[f3, f4]));
                    r -= &bil(m, br.get(f4, f1, f2), &phi[f3]).mul_zeta(alg.r(&[f1, f2, f3], &[f4]));
                    s.scalar(SYMPLECTIC_IDENTITY, &[f1, f2, f3, f4], r);
                }
            }
        }
    });
}

/// rho-skew, non-degenerate and the four-term cyclic identity, phi in the last slot.
pub fn check_symplectic(alg: &Algebra3Rho, omega: &BilinearForm) -> ValidationReport {
    let mut report = ValidationReport::new("symplectic structure");
    if shape_ok(&mut report, alg, &omega.matrix) {
        emit_symplectic(alg, &omega.matrix, &mut report);
        nondegeneracy(&mut report, &omega.matrix);
    }
    report
}

fn unit_matrices(order: CyclotomicOrder, d: usize) -> Vec<Matrix> {
    let mut out = Vec::with_capacity(d * d);
    for i in 0..d {
        for j in 0..d {
            let mut m = Matrix::zeros(order, d, d);
            m.set(i, j, Scalar::one(order));
            out.push(m);
        }
    }
    out
}

fn solve_forms(
    alg: &Algebra3Rho,
    emit: fn(&Algebra3Rho, &Matrix, &mut Flatten),
    recheck: fn(&Algebra3Rho, &Matrix, &mut ValidationReport),
    check: &str,
) -> Result<Vec<BilinearForm>> {
    let unknowns = unit_matrices(alg.order(), alg.dim());
    let solutions = solve_linear(alg.order(), &unknowns, |m| {
        let mut sink = Flatten::default();
        emit(alg, m, &mut sink);
        sink.0
    });
    let mut report = ValidationReport::new(check);
    for m in &solutions {
        recheck(alg, m, &mut report);
    }
    if !report.passed() {
        return Err(Error::ClosureFailure(Box::new(report)));
    }
    Ok(solutions.into_iter().map(|matrix| BilinearForm { matrix }).collect())
}

/// Basis of all rho-skew forms satisfying the symplectic identity.
/// Non-degeneracy is not linear and is left to the caller.
pub fn solve_symplectic_forms(alg: &Algebra3Rho) -> Result<Vec<BilinearForm>> {
    solve_forms(alg, emit_symplectic, emit_symplectic, "symplectic form space")
}

/// Basis of all rho-symmetric, invariant (and twist-symmetric) forms.
pub fn solve_quadratic_forms(alg: &Algebra3Rho) -> Result<Vec<BilinearForm>> {
    solve_forms(alg, emit_quadratic, emit_quadratic, "quadratic form space")
}

/// The span of a list of vectors in an ambient space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    order: CyclotomicOrder,
    ambient: usize,
    generators: Vec<Vector>,
}

impl Subspace {
    pub fn new(order: CyclotomicOrder, ambient: usize, generators: Vec<Vector>) -> Result<Self> {
        for g in &generators {
            if g.dim() != ambient {
                return Err(Error::DimMismatch(format!(
                    "generator of length {} in a {ambient}-dimensional space",
                    g.dim()
                )));
            }
            if g.order() != order {
                return Err(Error::OrderMismatch(order.get(), g.order().get()));
            }
        }
        Ok(Self {
            order,
            ambient,
            generators,
        })
    }

    pub fn zero(order: CyclotomicOrder, ambient: usize) -> Self {
        Self {
            order,
            ambient,
            generators: Vec::new(),
        }
    }

    pub fn whole(order: CyclotomicOrder, ambient: usize) -> Self {
        Self {
            order,
            ambient,
            generators: (0..ambient).map(|i| Vector::basis_vector(order, ambient, i)).collect(),
        }
    }

    pub(crate) fn from_coords(order: CyclotomicOrder, ambient: usize, coords: Vec<Vec<Scalar>>) -> Self {
        Self {
            order,
            ambient,
            generators: coords
                .into_iter()
                .map(|c| Vector::new(order, c).expect("coordinates share the order"))
                .collect(),
        }
    }

    pub fn generators(&self) -> &[Vector] {
        &self.generators
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    /// Reduced echelon basis of the span.
    pub fn basis(&self) -> Vec<Vec<Scalar>> {
        let raw: Vec<Vec<Scalar>> = self.generators.iter().map(|g| g.coords().to_vec()).collect();
        span_basis(self.order, self.ambient, &raw)
    }

    pub fn rank(&self) -> usize {
        self.basis().len()
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        in_span(self.order, self.ambient, &self.basis(), v)
    }

    /// Same span, compared by reduced bases.
    pub fn same_span(&self, other: &Subspace) -> bool {
        self.ambient == other.ambient && self.basis() == other.basis()
    }
}

/// Elements f with [f, g, h] = 0 for all g, h.
pub fn center(alg: &Algebra3Rho) -> Subspace {
    let d = alg.dim();
    let o = alg.order();
    let br = alg.bracket();
    let system = Matrix::from_fn(o, d * d * d, d, |row, i| {
        let (j, k, l) = (row / (d * d), (row / d) % d, row % d);
        br.coefficient(i, j, k, l)
    });
    Subspace::from_coords(o, d, system.nullspace())
}

fn sub_shape(report: &mut ValidationReport, alg: &Algebra3Rho, sub: &Subspace) -> bool {
    if sub.ambient != alg.dim() || sub.order != alg.order() {
        report.push(
            IDEAL_CLOSURE,
            &[],
            Residual::Note(format!(
                "subspace lives in dimension {}, algebra has dimension {}",
                sub.ambient,
                alg.dim()
            )),
        );
        return false;
    }
    true
}

/// [I, B, B] inside I, checked generator by generator.
pub fn is_ideal(alg: &Algebra3Rho, sub: &Subspace) -> ValidationReport {
    let mut report = ValidationReport::new("ideal");
    if !sub_shape(&mut report, alg, sub) {
        return report;
    }
    let basis = sub.basis();
    let d = alg.dim();
    let units = alg.units();
    for (n, gen) in sub.generators.iter().enumerate() {
        let sg: Sparse = sparse(gen.coords());
        for j in 0..d {
            for k in 0..d {
                let v = alg.br(&sg, &units[j], &units[k]);
                if !in_span(alg.order(), d, &basis, &v) {
                    report.push(IDEAL_CLOSURE, &[n, j, k], Residual::Vector(v));
                }
            }
        }
    }
    report
}

/// An ideal that is also mapped into itself by the twist.
pub fn is_hom_ideal(alg: &Algebra3Rho, sub: &Subspace) -> ValidationReport {
    let mut report = is_ideal(alg, sub);
    report.check = "Hom-ideal".into();
    if !sub_shape(&mut ValidationReport::new(""), alg, sub) {
        return report;
    }
    let basis = sub.basis();
    for (n, gen) in sub.generators.iter().enumerate() {
        let v = alg.twist().mul_vec(gen.coords());
        if !in_span(alg.order(), alg.dim(), &basis, &v) {
            report.push(TWIST_CLOSURE, &[n], Residual::Vector(v));
        }
    }
    report
}

/// {f : form(f, g) = 0 for all g in sub}. When `sub` is an ideal and the form
/// is quadratic, the result is checked to be an ideal as well.
pub fn orthogonal_complement(alg: &Algebra3Rho, form: &BilinearForm, sub: &Subspace) -> Result<Subspace> {
    let d = alg.dim();
    if form.dim() != d || sub.ambient != d {
        return Err(Error::DimMismatch("form, subspace and algebra dimensions differ".into()));
    }
    if !form.is_nondegenerate() {
        return Err(Error::DegenerateForm);
    }
    let basis = sub.basis();
    let o = alg.order();
    let system = if basis.is_empty() {
        Matrix::zeros(o, 1, d)
    } else {
        let cols: Vec<Vec<Scalar>> = basis.iter().map(|g| form.matrix.mul_vec(g)).collect();
        Matrix::from_fn(o, cols.len(), d, |r, c| cols[r][c].clone())
    };
    let out = Subspace::from_coords(o, d, system.nullspace());
    if is_ideal(alg, sub).passed() && check_quadratic(alg, form).passed() {
        let report = is_ideal(alg, &out);
        if !report.passed() {
            return Err(Error::ClosureFailure(Box::new(report)));
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{AlgebraKind, GradedBasis, TernaryBracket};
    use crate::grading::{GradingGroup, TwoCycle};

    fn abelian(d: usize) -> Algebra3Rho {
        let o = CyclotomicOrder::new(1).unwrap();
        let g = GradingGroup::trivial();
        let names = (0..d).map(|i| format!("e{i}")).collect();
        let basis = GradedBasis::new(g.clone(), names, vec![g.zero(); d]).unwrap();
        Algebra3Rho::new(basis, TwoCycle::trivial(o), TernaryBracket::zero(o, d), None, AlgebraKind::Lie).unwrap()
    }

    #[test]
    fn identity_form_on_abelian_algebra_is_quadratic() {
        let alg = abelian(2);
        let chi = BilinearForm::new(Matrix::identity(alg.order(), 2)).unwrap();
        assert!(check_quadratic(&alg, &chi).passed());
        assert!(check_metric(&alg, &chi).passed());
    }

    #[test]
    fn rank_one_form_is_degenerate() {
        let alg = abelian(2);
        let chi = BilinearForm::new(Matrix::from_ints(alg.order(), &[&[1, 0], &[0, 0]])).unwrap();
        let r = check_quadratic(&alg, &chi);
        assert_eq!(r.violated_identities(), vec![NONDEGENERACY]);
    }

    #[test]
    fn abelian_center_is_everything() {
        let alg = abelian(3);
        assert_eq!(center(&alg).rank(), 3);
    }

    #[test]
    fn complement_of_zero_is_whole() {
        let alg = abelian(2);
        let chi = BilinearForm::new(Matrix::identity(alg.order(), 2)).unwrap();
        let z = Subspace::zero(alg.order(), 2);
        assert_eq!(orthogonal_complement(&alg, &chi, &z).unwrap().rank(), 2);
        let w = Subspace::whole(alg.order(), 2);
        assert_eq!(orthogonal_complement(&alg, &chi, &w).unwrap().rank(), 0);
    }

    #[test]
    fn skew_forms_on_abelian_plane() {
        let alg = abelian(2);
        let forms = solve_symplectic_forms(&alg).unwrap();
        assert_eq!(forms.len(), 1);
        let quad = solve_quadratic_forms(&alg).unwrap();
        assert_eq!(quad.len(), 3);
    }
}
