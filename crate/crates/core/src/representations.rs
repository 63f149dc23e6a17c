//! Representations of 3-(Hom-)rho-Lie algebras, the fundamental set of pairs,
//! semidirect sums, dual and coadjoint representations and the metric double.

use crate::algebra::{sparse, Algebra3Rho, AlgebraKind, GradedBasis, HomogeneousMap, Sparse, TernaryBracket};
use crate::axioms::check_lie;
use crate::conditions::{par_emit, Sink};
use crate::error::{Error, Result};
use crate::forms::{bil, canonical_pairing, check_metric, BilinearForm, METRIC_PAIRING_SIGN};
use crate::grading::GroupElement;
use crate::linalg::Matrix;
use crate::report::{Residual, ValidationReport};
use crate::scalar::{CyclotomicOrder, Scalar};

pub const REP_1: &str = "representation identity 1";
pub const REP_2: &str = "representation identity 2";
pub const REP_3: &str = "representation identity 3";
pub const REP_MULTIPLICATIVE: &str = "representation multiplicativity";
pub const FOUR_TERM: &str = "four-term identity";
pub const REP_SKEW: &str = "rho-skew representation";

/// mu(e_i, e_j) acting on V for every ordered pair, plus a twist beta on V.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RepresentationBundle {
    algebra: Algebra3Rho,
    space: GradedBasis,
    mu: Vec<Matrix>,
    beta: Matrix,
}

impl RepresentationBundle {
    /// `mu[i * dim + j]` is mu(e_i, e_j); `beta = None` means the identity.
    pub fn new(algebra: Algebra3Rho, space: GradedBasis, mu: Vec<Matrix>, beta: Option<Matrix>) -> Result<Self> {
        let d = algebra.dim();
        let n = space.dim();
        let o = algebra.order();
        if space.group() != algebra.group() {
            return Err(Error::GroupMismatch("representation space uses another grading".into()));
        }
        if mu.len() != d * d {
            return Err(Error::DimMismatch(format!("{} action matrices for {} pairs", mu.len(), d * d)));
        }
        let g = algebra.group();
        for i in 0..d {
            for j in 0..d {
                let m = &mu[i * d + j];
                if m.rows() != n || m.cols() != n {
                    return Err(Error::DimMismatch(format!(
                        "action matrix ({i}, {j}) is {}x{}, expected {n}x{n}",
                        m.rows(),
                        m.cols()
                    )));
                }
                if m.order() != o {
                    return Err(Error::OrderMismatch(o.get(), m.order().get()));
                }
                let degree = g.add(algebra.basis().degree(i), algebra.basis().degree(j));
                HomogeneousMap::endo(&space, m.clone(), degree)?;
            }
        }
        let beta = beta.unwrap_or_else(|| Matrix::identity(o, n));
        if beta.order() != o {
            return Err(Error::OrderMismatch(o.get(), beta.order().get()));
        }
        HomogeneousMap::even(&space, beta.clone())?;
        Ok(Self {
            algebra,
            space,
            mu,
            beta,
        })
    }

    pub fn algebra(&self) -> &Algebra3Rho {
        &self.algebra
    }

    pub fn space(&self) -> &GradedBasis {
        &self.space
    }

    pub fn beta(&self) -> &Matrix {
        &self.beta
    }

    pub fn mu(&self, i: usize, j: usize) -> &Matrix {
        &self.mu[i * self.algebra.dim() + j]
    }

    pub fn mu_all(&self) -> &[Matrix] {
        &self.mu
    }

    pub fn order(&self) -> CyclotomicOrder {
        self.algebra.order()
    }

    /// mu(u, v) for sparse algebra elements.
    pub(crate) fn mu_at(&self, u: &[(usize, Scalar)], v: &[(usize, Scalar)]) -> Matrix {
        let n = self.space.dim();
        let mut acc = Matrix::zeros(self.order(), n, n);
        for (i, a) in u {
            for (j, b) in v {
                let m = self.mu(*i, *j);
                if !m.is_zero() {
                    acc = acc.add(&m.scale(&(a * b)));
                }
            }
        }
        acc
    }
}

pub(crate) fn zeta(order: CyclotomicOrder, k: i64) -> Scalar {
    Scalar::zeta_pow(order, k)
}

/// mu(phi e_i, phi e_j) for all pairs.
fn twisted_actions(b: &RepresentationBundle) -> Vec<Matrix> {
    let alg = &b.algebra;
    let phi = alg.twist_columns();
    let d = alg.dim();
    let mut out = Vec::with_capacity(d * d);
    for i in 0..d {
        for j in 0..d {
            out.push(if alg.is_hom() { b.mu_at(&phi[i], &phi[j]) } else { b.mu(i, j).clone() });
        }
    }
    out
}

pub(crate) fn emit_representation<S: Sink>(b: &RepresentationBundle, sink: &mut S) {
    let alg = &b.algebra;
    let d = alg.dim();
    let o = alg.order();
    let br = alg.bracket();
    let phi = alg.twist_columns();
    let mphi = twisted_actions(b);
    let mp = |i: usize, j: usize| &mphi[i * d + j];
    let beta = &b.beta;
    par_emit(sink, d, |f1, s| {
        for f2 in 0..d {
            for g1 in 0..d {
                for g2 in 0..d {
                    // mu([(f1,f2),(g1,g2)]_L) beta
                    let pair = b
                        .mu_at(br.get(f1, f2, g1), &phi[g2])
                        .add(&b.mu_at(&phi[g1], br.get(f1, f2, g2)).scale(&zeta(o, alg.r(&[f1, f2], &[g1]))));
                    let mut r = pair.mul(beta);
                    r = r.sub(&mp(f1, f2).mul(b.mu(g1, g2)));
                    r = r.add(&mp(g1, g2).mul(b.mu(f1, f2)).scale(&zeta(o, alg.r(&[f1, f2], &[g1, g2]))));
                    s.matrix(REP_1, &[f1, f2, g1, g2], r);

                    // (g1, g2, g3, f) = (f1, f2, g1, g2)
                    let (h1, h2, h3, f) = (f1, f2, g1, g2);
                    let mut r = b.mu_at(br.get(h1, h2, h3), &phi[f]).mul(beta);
                    r = r.sub(&mp(h1, h2).mul(b.mu(h3, f)));
                    r = r.sub(&mp(h2, h3).mul(b.mu(h1, f)).scale(&zeta(o, alg.r(&[h1], &[h2, h3]))));
                    r = r.sub(&mp(h3, h1).mul(b.mu(h2, f)).scale(&zeta(o, alg.r(&[h1, h2], &[h3]))));
                    s.matrix(REP_2, &[h1, h2, h3, f], r);

                    // (g, f1, f2, f3) = (f1, f2, g1, g2)
                    let (g, k1, k2, k3) = (f1, f2, g1, g2);
                    let mut r = b.mu_at(&phi[g], br.get(k1, k2, k3)).mul(beta);
                    r = r.sub(&mp(k1, k2).mul(b.mu(g, k3)).scale(&zeta(o, alg.r(&[g], &[k1, k2]))));
                    r = r.sub(
                        &mp(k2, k3)
                            .mul(b.mu(g, k1))
                            .scale(&zeta(o, alg.r(&[g], &[k2, k3]) + alg.r(&[k1], &[k2, k3]))),
                    );
                    r = r.sub(
                        &mp(k3, k1)
                            .mul(b.mu(g, k2))
                            .scale(&zeta(o, alg.r(&[g], &[k1, k3]) + alg.r(&[k1, k2], &[k3]))),
                    );
                    s.matrix(REP_3, &[g, k1, k2, k3], r);
                }
            }
            // mu(phi f, phi g) beta = beta mu(f, g)
            let r = mp(f1, f2).mul(beta).sub(&beta.mul(b.mu(f1, f2)));
            s.matrix(REP_MULTIPLICATIVE, &[f1, f2], r);
        }
    });
}

/// The three representation identities (twisted by phi and beta) and
/// multiplicativity mu(phi f, phi g) beta = beta mu(f, g).
pub fn check_representation(b: &RepresentationBundle) -> ValidationReport {
    let mut report = ValidationReport::new("representation");
    emit_representation(b, &mut report);
    report
}

/// 0 = rho(f1+f2,g1) mu(phi g1,[f1,f2,g2]) beta + mu([f1,f2,g1],phi g2) beta
///   + rho(f1+f2,g1+g2) rho(g1+g2,f1) mu(phi f1,[g1,g2,f2]) beta
///   + rho(f1+f2,g1+g2) mu([g1,g2,f1],phi f2) beta.
pub fn check_four_term(b: &RepresentationBundle) -> ValidationReport {
    let mut report = ValidationReport::new(FOUR_TERM);
    let alg = &b.algebra;
    let d = alg.dim();
    let o = alg.order();
    let br = alg.bracket();
    let phi = alg.twist_columns();
    par_emit(&mut report, d, |f1, s| {
        for f2 in 0..d {
            for g1 in 0..d {
                for g2 in 0..d {
                    let k = alg.r(&[f1, f2], &[g1, g2]);
                    let r = b
                        .mu_at(&phi[g1], br.get(f1, f2, g2))
                        .scale(&zeta(o, alg.r(&[f1, f2], &[g1])))
                        .add(&b.mu_at(br.get(f1, f2, g1), &phi[g2]))
                        .add(&b.mu_at(&phi[f1], br.get(g1, g2, f2)).scale(&zeta(o, k + alg.r(&[g1, g2], &[f1]))))
                        .add(&b.mu_at(br.get(g1, g2, f1), &phi[f2]).scale(&zeta(o, k)))
                        .mul(&b.beta);
                    s.matrix(FOUR_TERM, &[f1, f2, g1, g2], r);
                }
            }
        }
    });
    report
}

/// mu(f, g) = -rho(f, g) mu(g, f).
pub fn check_rho_skew(b: &RepresentationBundle) -> ValidationReport {
    let mut report = ValidationReport::new(REP_SKEW);
    let alg = &b.algebra;
    let d = alg.dim();
    for i in 0..d {
        for j in 0..d {
            let r = b.mu(i, j).add(&b.mu(j, i).scale(&zeta(alg.order(), alg.e(i, j))));
            report.expect_zero_matrix(REP_SKEW, &[i, j], r);
        }
    }
    report
}

/// ad(e_i, e_j) = [e_i, e_j, .] on the algebra itself, with beta = phi.
pub fn adjoint(alg: &Algebra3Rho) -> Result<RepresentationBundle> {
    let d = alg.dim();
    let mut mu = Vec::with_capacity(d * d);
    for i in 0..d {
        for j in 0..d {
            mu.push(Matrix::from_fn(alg.order(), d, d, |l, k| alg.bracket().coefficient(i, j, k, l)));
        }
    }
    RepresentationBundle::new(alg.clone(), alg.basis().clone(), mu, Some(alg.twist().clone()))
}

/// Exponent table rho(x, y) for an arbitrary list of degrees.
pub(crate) fn exponents(alg: &Algebra3Rho, degrees: &[GroupElement]) -> Vec<Vec<i64>> {
    degrees
        .iter()
        .map(|a| degrees.iter().map(|b| alg.rho().exponent(a, b) as i64).collect())
        .collect()
}

/// Structure constants on B + V (B first):
/// [f1,f2,f3] + mu(f1,f2)v3 + rho(f1,f2+f3)mu(f2,f3)v1 + rho(f1+f2,f3)mu(f3,f1)v2,
/// with twist phi + beta. No verification.
pub fn semidirect_sum_unchecked(b: &RepresentationBundle, kind: AlgebraKind) -> Result<Algebra3Rho> {
    let alg = &b.algebra;
    let d = alg.dim();
    let n = b.space.dim();
    let o = alg.order();
    let basis = alg.basis().concat(&b.space)?;
    let t = d + n;
    let e = exponents(alg, basis.degrees());
    let mut br = TernaryBracket::zero(o, t);
    for i in 0..d {
        for j in 0..d {
            for k in 0..d {
                let mut v = vec![Scalar::zero(o); t];
                for (l, c) in alg.bracket().get(i, j, k) {
                    v[*l] = c.clone();
                }
                br.set(i, j, k, &v);
            }
            let m = b.mu(i, j);
            for x in 0..n {
                let col: Vec<Scalar> = m.column(x);
                if col.iter().all(Scalar::is_zero) {
                    continue;
                }
                let lift = |k: i64| -> Vec<Scalar> {
                    let mut v = vec![Scalar::zero(o); t];
                    for (y, c) in col.iter().enumerate() {
                        v[d + y] = c.mul_zeta(k);
                    }
                    v
                };
                let vx = d + x;
                // [f_i, f_j, v] = mu(i,j) v
                br.set(i, j, vx, &lift(0));
                // [v, f_i, f_j] = rho(v, i+j) mu(i,j) v
                br.set(vx, i, j, &lift(e[vx][i] + e[vx][j]));
                // [f_j, v, f_i] = rho(j+v, i) mu(i,j) v
                br.set(j, vx, i, &lift(e[j][i] + e[vx][i]));
            }
        }
    }
    let mut twist = Matrix::zeros(o, t, t);
    for i in 0..d {
        for j in 0..d {
            twist.set(i, j, alg.twist().get(i, j).clone());
        }
    }
    for i in 0..n {
        for j in 0..n {
            twist.set(d + i, d + j, b.beta.get(i, j).clone());
        }
    }
    Algebra3Rho::new(basis, alg.rho().clone(), br, Some(twist), kind)
}

/// The semidirect sum B + V, re-verified as a 3-(Hom-)rho-Lie algebra.
pub fn semidirect_sum(b: &RepresentationBundle) -> Result<Algebra3Rho> {
    let report = check_representation(b);
    if !report.passed() {
        return Err(Error::NotARepresentation(Box::new(report)));
    }
    let out = semidirect_sum_unchecked(b, AlgebraKind::Lie)?;
    let closure = check_lie(&out);
    if !closure.passed() {
        return Err(Error::ClosureFailure(Box::new(closure)));
    }
    Ok(out)
}

/// mu*(f1,f2) with (mu*)_{cb} = -rho(f1+f2, e_b*) mu(f1,f2)_{bc} on the dual
/// basis, and beta* = beta transposed. No verification.
pub fn dual_representation_unchecked(b: &RepresentationBundle) -> Result<RepresentationBundle> {
    let alg = &b.algebra;
    let d = alg.dim();
    let n = b.space.dim();
    let o = alg.order();
    let space = b.space.dual();
    let g = alg.group();
    let mut mu = Vec::with_capacity(d * d);
    for i in 0..d {
        for j in 0..d {
            let deg = g.add(alg.basis().degree(i), alg.basis().degree(j));
            let m = b.mu(i, j);
            mu.push(Matrix::from_fn(o, n, n, |c, bb| {
                let k = alg.rho().exponent(&deg, space.degree(bb)) as i64;
                -m.get(bb, c).mul_zeta(k)
            }));
        }
    }
    RepresentationBundle::new(alg.clone(), space, mu, Some(b.beta.transpose()))
}

/// The dual representation of a rho-skew representation, re-verified.
pub fn dual_representation(b: &RepresentationBundle) -> Result<RepresentationBundle> {
    let skew = check_rho_skew(b);
    if !skew.passed() {
        return Err(Error::NotSkew(Box::new(skew)));
    }
    let out = dual_representation_unchecked(b)?;
    let closure = check_representation(&out);
    if !closure.passed() {
        return Err(Error::ClosureFailure(Box::new(closure)));
    }
    Ok(out)
}

pub fn coadjoint(alg: &Algebra3Rho) -> Result<RepresentationBundle> {
    dual_representation(&adjoint(alg)?)
}

/// B + B* with the coadjoint semidirect bracket, twist phi + phi^T, and the
/// pairing varphi(f+a, g+b) = a(g) + rho(f,g) b(f); both re-verified.
pub fn double_metric_algebra(alg: &Algebra3Rho) -> Result<(Algebra3Rho, BilinearForm)> {
    let co = coadjoint(alg)?;
    let big = semidirect_sum(&co)?;
    let form = canonical_pairing(alg, METRIC_PAIRING_SIGN);
    let closure = check_metric(&big, &form);
    if !closure.passed() {
        return Err(Error::ClosureFailure(Box::new(closure)));
    }
    Ok((big, form))
}

pub const PAIR_SKEW: &str = "pair skew-symmetry";
pub const PAIR_LEIBNIZ: &str = "pair Leibniz identity";
pub const PAIR_JACOBI: &str = "pair cyclic Jacobi identity";
pub const PAIR_METRIC: &str = "pair metric identity";

/// The binary algebra on all ordered pairs (e_i, e_j), pair index i * dim + j.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FundamentalAlgebra {
    order: CyclotomicOrder,
    base_dim: usize,
    degrees: Vec<GroupElement>,
    exps: Vec<Vec<i64>>,
    bracket: Vec<Sparse>,
    twist: Matrix,
}

impl FundamentalAlgebra {
    pub fn dim(&self) -> usize {
        self.degrees.len()
    }

    pub fn base_dim(&self) -> usize {
        self.base_dim
    }

    pub fn degrees(&self) -> &[GroupElement] {
        &self.degrees
    }

    pub fn twist(&self) -> &Matrix {
        &self.twist
    }

    /// Dense [X_p, X_q].
    pub fn value(&self, p: usize, q: usize) -> Vec<Scalar> {
        let mut out = vec![Scalar::zero(self.order); self.dim()];
        for (l, c) in &self.bracket[p * self.dim() + q] {
            out[*l] = c.clone();
        }
        out
    }

    fn br(&self, u: &[(usize, Scalar)], v: &[(usize, Scalar)]) -> Vec<Scalar> {
        let n = self.dim();
        let mut out = vec![Scalar::zero(self.order); n];
        for (p, a) in u {
            for (q, b) in v {
                let entry = &self.bracket[p * n + q];
                if entry.is_empty() {
                    continue;
                }
                let ab = a * b;
                for (l, c) in entry {
                    out[*l] += &(&ab * c);
                }
            }
        }
        out
    }

    fn unit(&self, p: usize) -> Sparse {
        vec![(p, Scalar::one(self.order))]
    }
}

/// [(f1,f2),(g1,g2)] = ([f1,f2,g1], phi g2) + rho(f1+f2,g1)(phi g1, [f1,f2,g2]),
/// twist phi (x) phi.
pub fn fundamental_algebra(alg: &Algebra3Rho) -> FundamentalAlgebra {
    let d = alg.dim();
    let o = alg.order();
    let n = d * d;
    let g = alg.group();
    let degrees: Vec<GroupElement> = (0..n)
        .map(|p| g.add(alg.basis().degree(p / d), alg.basis().degree(p % d)))
        .collect();
    let exps = exponents(alg, &degrees);
    let phi = alg.twist_columns();
    let br = alg.bracket();
    let pair = |u: &[(usize, Scalar)], v: &[(usize, Scalar)], k: i64, out: &mut Vec<Scalar>| {
        for (a, x) in u {
            for (b, y) in v {
                out[a * d + b] += &(x * y).mul_zeta(k);
            }
        }
    };
    let mut bracket = Vec::with_capacity(n * n);
    for p in 0..n {
        let (f1, f2) = (p / d, p % d);
        for q in 0..n {
            let (g1, g2) = (q / d, q % d);
            let mut v = vec![Scalar::zero(o); n];
            pair(br.get(f1, f2, g1), &phi[g2], 0, &mut v);
            pair(&phi[g1], br.get(f1, f2, g2), alg.r(&[f1, f2], &[g1]), &mut v);
            bracket.push(sparse(&v));
        }
    }
    let twist = Matrix::from_fn(o, n, n, |p, q| alg.twist().get(p / d, q / d) * alg.twist().get(p % d, q % d));
    FundamentalAlgebra {
        order: o,
        base_dim: d,
        degrees,
        exps,
        bracket,
        twist,
    }
}

/// Skew-symmetry, the Leibniz form [phi X,[Y,Z]] = [[X,Y],phi Z] + rho(X,Y)[phi Y,[X,Z]]
/// and the cyclic form rho(Z,X)[phi X,[Y,Z]] + rho(X,Y)[phi Y,[Z,X]] + rho(Y,Z)[phi Z,[X,Y]] = 0,
/// each reported under its own name.
pub fn check_fundamental(fa: &FundamentalAlgebra) -> ValidationReport {
    let mut report = ValidationReport::new("fundamental algebra");
    let n = fa.dim();
    let e = &fa.exps;
    let phi: Vec<Sparse> = (0..n).map(|p| sparse(&fa.twist.column(p))).collect();
    for x in 0..n {
        for y in 0..n {
            let mut r = fa.value(x, y);
            for (l, c) in &fa.bracket[y * n + x] {
                r[*l] += &c.mul_zeta(e[x][y]);
            }
            report.expect_zero_vector(PAIR_SKEW, &[x, y], &r);
        }
    }
    par_emit(&mut report, n, |x, s| {
        for y in 0..n {
            let xy = sparse(&fa.value(x, y));
            for z in 0..n {
                let yz = sparse(&fa.value(y, z));
                let xz = sparse(&fa.value(x, z));
                let zx = sparse(&fa.value(z, x));
                let mut r = fa.br(&phi[x], &yz);
                let a = fa.br(&xy, &phi[z]);
                let b = fa.br(&phi[y], &xz);
                for i in 0..n {
                    r[i] = &(&r[i] - &a[i]) - &b[i].mul_zeta(e[x][y]);
                }
                s.vector(PAIR_LEIBNIZ, &[x, y, z], r);

                let c1 = fa.br(&phi[x], &yz);
                let c2 = fa.br(&phi[y], &zx);
                let c3 = fa.br(&phi[z], &xy);
                let r: Vec<Scalar> = (0..n)
                    .map(|i| &(&c1[i].mul_zeta(e[z][x]) + &c2[i].mul_zeta(e[x][y])) + &c3[i].mul_zeta(e[y][z]))
                    .collect();
                s.vector(PAIR_JACOBI, &[x, y, z], r);
            }
        }
    });
    report
}

/// varphi_L((f1,f2),(g1,g2)) = varphi([f1,f2,g1], g2).
pub fn fundamental_metric(alg: &Algebra3Rho, varphi: &BilinearForm) -> Result<BilinearForm> {
    let report = check_metric(alg, varphi);
    if !report.passed() {
        return Err(Error::NotAMetric(Box::new(report)));
    }
    let d = alg.dim();
    let units = alg.units();
    let m = Matrix::from_fn(alg.order(), d * d, d * d, |p, q| {
        bil(varphi.matrix(), alg.bracket().get(p / d, p % d, q / d), &units[q % d])
    });
    BilinearForm::new(m)
}

/// rho-symmetry, non-degeneracy and varphi([X,Y],Z) = -rho(X,Y) varphi(Y,[X,Z]) on pairs.
pub fn check_fundamental_metric(fa: &FundamentalAlgebra, form: &BilinearForm) -> ValidationReport {
    let mut report = ValidationReport::new("fundamental metric");
    let n = fa.dim();
    if form.dim() != n {
        report.push(PAIR_METRIC, &[], Residual::Note("form has the wrong dimension".into()));
        return report;
    }
    let m = form.matrix();
    let e = &fa.exps;
    for x in 0..n {
        for y in 0..n {
            let r = m.get(x, y) - &m.get(y, x).mul_zeta(e[x][y]);
            report.expect_zero_scalar(crate::forms::RHO_SYMMETRY, &[x, y], r);
        }
    }
    if !m.is_invertible() {
        report.push(crate::forms::NONDEGENERACY, &[], Residual::Integer(m.rank() as i64));
    }
    for x in 0..n {
        for y in 0..n {
            let xy = sparse(&fa.value(x, y));
            for z in 0..n {
                let xz = sparse(&fa.value(x, z));
                let r = bil(m, &xy, &fa.unit(z)) + bil(m, &fa.unit(y), &xz).mul_zeta(e[x][y]);
                report.expect_zero_scalar(PAIR_METRIC, &[x, y, z], r);
            }
        }
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::axioms::check_lie;
    use crate::samples::{z2_cubed, z2_cubed_hom};

    #[test]
    fn adjoint_of_sample_is_a_representation() {
        let alg = z2_cubed();
        let ad = adjoint(&alg).unwrap();
        assert!(check_representation(&ad).passed());
        assert!(check_rho_skew(&ad).passed());
        assert!(check_four_term(&ad).passed());
    }

    #[test]
    fn hom_sample_adjoint_is_not_multiplicative() {
        let alg = z2_cubed_hom();
        assert!(check_lie(&alg).passed());
        let rep = check_representation(&adjoint(&alg).unwrap());
        assert_eq!(rep.violated_identities(), vec![REP_MULTIPLICATIVE]);
    }

    #[test]
    fn coadjoint_and_double_close() {
        let alg = z2_cubed();
        let co = coadjoint(&alg).unwrap();
        assert_eq!(co.space().dim(), 4);
        let (big, form) = double_metric_algebra(&alg).unwrap();
        assert_eq!(big.dim(), 8);
        assert!(form.is_nondegenerate());
    }

    #[test]
    fn mutated_action_is_rejected() {
        let alg = z2_cubed();
        let ad = adjoint(&alg).unwrap();
        let mut mu = ad.mu_all().to_vec();
        let m = &mut mu[1];
        let v = m.get(3, 2) + &Scalar::one(alg.order());
        m.set(3, 2, v);
        let bad = RepresentationBundle::new(alg.clone(), alg.basis().clone(), mu, None).unwrap();
        assert!(!check_representation(&bad).passed());
    }

    #[test]
    fn pair_algebra_of_sample() {
        let alg = z2_cubed();
        let fa = fundamental_algebra(&alg);
        assert_eq!(fa.dim(), 16);
        let r = check_fundamental(&fa);
        assert!(r.of(PAIR_LEIBNIZ).next().is_none(), "{r}");
    }
}
