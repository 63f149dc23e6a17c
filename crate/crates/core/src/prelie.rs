//! Representations of 3-pre-(Hom-)rho-Lie algebras, rho-O-operators, pre-Lie
//! structures from symplectic forms and phase spaces.

use crate::algebra::{sparse, Algebra3Rho, AlgebraKind, GradedBasis, HomogeneousMap, Sparse, TernaryBracket};
use crate::axioms::{check_lie, check_pre_lie, commutator_bracket, sub_adjacent};
use crate::conditions::{par_emit, Sink};
use crate::error::{Error, Result};
use crate::forms::{bil, canonical_pairing, check_symplectic, BilinearForm, SYMPLECTIC_PAIRING_SIGN};
use crate::linalg::Matrix;
use crate::report::{Residual, ValidationReport};
use crate::representations::{
    check_representation, check_rho_skew, dual_representation, dual_representation_unchecked, semidirect_sum,
    zeta, RepresentationBundle,
};
use crate::scalar::{CyclotomicOrder, Scalar};

pub const PRE_REP_1: &str = "pre-representation identity 1";
pub const PRE_REP_2: &str = "pre-representation identity 2";
pub const PRE_REP_3: &str = "pre-representation identity 3";
pub const PRE_REP_4: &str = "pre-representation identity 4";
pub const O_OPERATOR: &str = "O-operator identity";
pub const O_EVEN: &str = "O-operator evenness";
pub const O_TWIST: &str = "O-operator twist commutation";
pub const COMPATIBILITY: &str = "sub-adjacent compatibility";
pub const BASE_SUBALGEBRA: &str = "base subalgebra";
pub const DUAL_SUBALGEBRA: &str = "dual subalgebra";
pub const DUAL_ABELIAN: &str = "dual abelian";
pub const RECOVERY: &str = "product recovery";

fn family_at(order: CyclotomicOrder, n: usize, d: usize, mats: &[Matrix], u: &[(usize, Scalar)], v: &[(usize, Scalar)]) -> Matrix {
    let mut acc = Matrix::zeros(order, n, n);
    for (i, a) in u {
        for (j, b) in v {
            let m = &mats[i * d + j];
            if !m.is_zero() {
                acc = acc.add(&m.scale(&(a * b)));
            }
        }
    }
    acc
}

/// (mu, mu~) acting on V with twist beta; mu is meant to represent the
/// sub-adjacent algebra, mu~ has no symmetry.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PreLieRepBundle {
    prelie: Algebra3Rho,
    space: GradedBasis,
    mu: Vec<Matrix>,
    mu_tilde: Vec<Matrix>,
    beta: Matrix,
}

impl PreLieRepBundle {
    pub fn new(
        prelie: Algebra3Rho,
        space: GradedBasis,
        mu: Vec<Matrix>,
        mu_tilde: Vec<Matrix>,
        beta: Option<Matrix>,
    ) -> Result<Self> {
        if prelie.kind() != AlgebraKind::PreLie {
            return Err(Error::KindMismatch {
                expected: AlgebraKind::PreLie.to_string(),
                found: prelie.kind().to_string(),
            });
        }
        // Shape and homogeneity checks are shared with plain representations.
        let carrier = prelie.with_bracket(prelie.bracket().clone(), AlgebraKind::Lie)?;
        let checked = RepresentationBundle::new(carrier.clone(), space.clone(), mu, beta)?;
        let tilde = RepresentationBundle::new(carrier, space.clone(), mu_tilde, Some(checked.beta().clone()))?;
        Ok(Self {
            prelie,
            space,
            beta: checked.beta().clone(),
            mu: checked.mu_all().to_vec(),
            mu_tilde: tilde.mu_all().to_vec(),
        })
    }

    pub fn prelie(&self) -> &Algebra3Rho {
        &self.prelie
    }

    pub fn space(&self) -> &GradedBasis {
        &self.space
    }

    pub fn mu(&self, i: usize, j: usize) -> &Matrix {
        &self.mu[i * self.prelie.dim() + j]
    }

    pub fn mu_tilde(&self, i: usize, j: usize) -> &Matrix {
        &self.mu_tilde[i * self.prelie.dim() + j]
    }

    pub fn mu_all(&self) -> &[Matrix] {
        &self.mu
    }

    pub fn mu_tilde_all(&self) -> &[Matrix] {
        &self.mu_tilde
    }

    pub fn beta(&self) -> &Matrix {
        &self.beta
    }

    /// (V, mu) as a representation of the sub-adjacent algebra, unchecked.
    pub fn mu_bundle(&self) -> Result<RepresentationBundle> {
        let sub = self.prelie.with_bracket(commutator_bracket(&self.prelie), AlgebraKind::Lie)?;
        RepresentationBundle::new(sub, self.space.clone(), self.mu.clone(), Some(self.beta.clone()))
    }
}

/// L(f,g)h = {f,g,h} and R(f,g)h = rho(f+g,h){h,f,g}, with beta = phi.
pub fn regular(prelie: &Algebra3Rho) -> Result<PreLieRepBundle> {
    let d = prelie.dim();
    let o = prelie.order();
    let br = prelie.bracket();
    let mut left = Vec::with_capacity(d * d);
    let mut right = Vec::with_capacity(d * d);
    for i in 0..d {
        for j in 0..d {
            left.push(Matrix::from_fn(o, d, d, |l, k| br.coefficient(i, j, k, l)));
            right.push(Matrix::from_fn(o, d, d, |l, k| {
                br.coefficient(k, i, j, l).mul_zeta(prelie.r(&[i, j], &[k]))
            }));
        }
    }
    PreLieRepBundle::new(prelie.clone(), prelie.basis().clone(), left, right, Some(prelie.twist().clone()))
}

/// (B, L) as a representation of the sub-adjacent algebra.
pub fn left_bundle(prelie: &Algebra3Rho) -> Result<RepresentationBundle> {
    regular(prelie)?.mu_bundle()
}

fn emit_pre_representation<S: Sink>(b: &PreLieRepBundle, sink: &mut S) {
    let alg = &b.prelie;
    let d = alg.dim();
    let n = b.space.dim();
    let o = alg.order();
    let hom = alg.is_hom();
    let br = alg.bracket();
    let c = commutator_bracket(alg);
    let phi = alg.twist_columns();
    let beta = &b.beta;
    let tilde_at = |u: &[(usize, Scalar)], v: &[(usize, Scalar)]| family_at(o, n, d, &b.mu_tilde, u, v);
    let mut m_phi = Vec::with_capacity(d * d);
    let mut t_phi = Vec::with_capacity(d * d);
    for i in 0..d {
        for j in 0..d {
            m_phi.push(family_at(o, n, d, &b.mu, &phi[i], &phi[j]));
            t_phi.push(tilde_at(&phi[i], &phi[j]));
        }
    }
    let m = |i: usize, j: usize| b.mu(i, j);
    let t = |i: usize, j: usize| b.mu_tilde(i, j);
    let mp = |i: usize, j: usize| &m_phi[i * d + j];
    let tp = |i: usize, j: usize| &t_phi[i * d + j];
    let r = |l: &[usize], rr: &[usize]| alg.r(l, rr);
    par_emit(sink, d, |f1, s| {
        for f2 in 0..d {
            for f3 in 0..d {
                for f4 in 0..d {
                    let idx = [f1, f2, f3, f4];

                    let mut x = tilde_at(&phi[f1], br.get(f2, f3, f4)).mul(beta);
                    x = x.sub(&mp(f2, f3).mul(t(f1, f4)).scale(&zeta(o, r(&[f1], &[f2, f3]))));
                    x = x.sub(&tp(f3, f4).mul(t(f1, f2)).scale(&zeta(o, r(&[f1], &[f3, f4]) + r(&[f2], &[f3, f4]))));
                    x = x.add(&tp(f2, f4).mul(t(f1, f3)).scale(&zeta(o, r(&[f1], &[f2, f4]) + r(&[f3], &[f4]))));
                    x = x.sub(&tp(f3, f4).mul(m(f1, f2)).scale(&zeta(o, r(&[f1, f2], &[f3, f4]))));
                    x = x.sub(
                        &tp(f2, f4).mul(t(f3, f1)).scale(&zeta(o, r(&[f1], &[f2, f3, f4]) + r(&[f3], &[f4]))),
                    );
                    x = x.add(&tp(f2, f4).mul(m(f1, f3)).scale(&zeta(o, r(&[f1], &[f2, f4]) + r(&[f3], &[f4]))));
                    x = x.add(
                        &tp(f3, f4)
                            .mul(t(f2, f1))
                            .scale(&zeta(o, r(&[f2], &[f3, f4]) + r(&[f1], &[f2, f3, f4]))),
                    );
                    s.matrix(PRE_REP_1, &idx, x);

                    let k = r(&[f1, f2], &[f3, f4]);
                    let c_term = tilde_at(c.get(f1, f2, f3), &phi[f4]).mul(beta);
                    let mut x = mp(f1, f2).mul(t(f3, f4));
                    x = x.sub(&tp(f3, f4).mul(m(f1, f2)).scale(&zeta(o, k)));
                    x = x.add(&tp(f3, f4).mul(t(f2, f1)).scale(&zeta(o, k + r(&[f1], &[f2]))));
                    x = x.sub(&tp(f3, f4).mul(t(f1, f2)).scale(&zeta(o, k)));
                    x = x.sub(&c_term);
                    x = x.sub(&tilde_at(&phi[f3], br.get(f1, f2, f4)).scale(&zeta(o, r(&[f1, f2], &[f3]))));
                    s.matrix(PRE_REP_2, &idx, x);

                    let mut x = c_term;
                    x = x.sub(&mp(f1, f2).mul(t(f3, f4)));
                    x = x.sub(&mp(f2, f3).mul(t(f1, f4)).scale(&zeta(o, r(&[f1], &[f2, f3]))));
                    x = x.sub(&mp(f3, f1).mul(t(f2, f4)).scale(&zeta(o, r(&[f1, f2], &[f3]))));
                    s.matrix(PRE_REP_3, &idx, x);

                    let k = r(&[f3, f4], &[f1, f2]);
                    let lead = if hom { mp(f3, f4) } else { t(f3, f4) };
                    let mut x = tp(f3, f4).mul(m(f1, f2));
                    x = x.sub(&lead.mul(t(f2, f1)).scale(&zeta(o, r(&[f1], &[f2]))));
                    x = x.add(&tp(f3, f4).mul(t(f1, f2)));
                    x = x.sub(&mp(f1, f2).mul(t(f3, f4)).scale(&zeta(o, k)));
                    x = x.add(
                        &tilde_at(&phi[f2], br.get(f1, f3, f4))
                            .mul(beta)
                            .scale(&zeta(o, k + r(&[f1], &[f2]))),
                    );
                    x = x.sub(&tilde_at(&phi[f1], br.get(f2, f3, f4)).mul(beta).scale(&zeta(o, k)));
                    s.matrix(PRE_REP_4, &idx, x);
                }
            }
        }
    });
}

/// mu represents the sub-adjacent algebra and the four mixed identities hold.
/// In the Hom case the leading term of identity 4 is mu(phi f3, phi f4) mu~(f2, f1).
pub fn check_pre_lie_representation(b: &PreLieRepBundle) -> ValidationReport {
    let mut report = ValidationReport::new("pre-Lie representation");
    match b.mu_bundle() {
        Ok(mu) => report.absorb(check_representation(&mu)),
        Err(e) => report.push(PRE_REP_1, &[], Residual::Note(e.to_string())),
    }
    emit_pre_representation(b, &mut report);
    report
}

fn require_pre_rep(b: &PreLieRepBundle) -> Result<()> {
    let report = check_pre_lie_representation(b);
    if report.passed() {
        Ok(())
    } else {
        Err(Error::NotAPreRep(Box::new(report)))
    }
}

/// {f1+v1,f2+v2,f3+v3} = {f1,f2,f3} + mu(f1,f2)v3 + rho(f1,f2+f3)mu~(f2,f3)v1
/// - rho(f2,f3)mu~(f1,f3)v2 on B + V, twist phi + beta. No verification.
pub fn pre_lie_semidirect_unchecked(b: &PreLieRepBundle) -> Result<Algebra3Rho> {
    let alg = &b.prelie;
    let d = alg.dim();
    let n = b.space.dim();
    let o = alg.order();
    let basis = alg.basis().concat(&b.space)?;
    let t = d + n;
    let rho = alg.rho();
    let e = |x: usize, y: usize| rho.exponent(basis.degree(x), basis.degree(y)) as i64;
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
            for x in 0..n {
                let vx = d + x;
                let lift = |col: Vec<Scalar>, k: i64, sign: bool| -> Vec<Scalar> {
                    let mut v = vec![Scalar::zero(o); t];
                    for (y, c) in col.iter().enumerate() {
                        let c = c.mul_zeta(k);
                        v[d + y] = if sign { -c } else { c };
                    }
                    v
                };
                let mu = b.mu(i, j).column(x);
                if mu.iter().any(|c| !c.is_zero()) {
                    br.set(i, j, vx, &lift(mu, 0, false));
                }
                let tilde = b.mu_tilde(i, j).column(x);
                if tilde.iter().any(|c| !c.is_zero()) {
                    br.set(vx, i, j, &lift(tilde.clone(), e(vx, i) + e(vx, j), false));
                    br.set(i, vx, j, &lift(tilde, e(vx, j), true));
                }
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
    Algebra3Rho::new(basis, rho.clone(), br, Some(twist), AlgebraKind::PreLie)
}

pub fn pre_lie_semidirect(b: &PreLieRepBundle) -> Result<Algebra3Rho> {
    require_pre_rep(b)?;
    let out = pre_lie_semidirect_unchecked(b)?;
    let closure = check_pre_lie(&out);
    if !closure.passed() {
        return Err(Error::ClosureFailure(Box::new(closure)));
    }
    Ok(out)
}

/// nu(f1,f2) = mu(f1,f2) - rho(f1,f2) mu~(f2,f1) + mu~(f1,f2).
fn nu_family(b: &PreLieRepBundle) -> Vec<Matrix> {
    let alg = &b.prelie;
    let d = alg.dim();
    let mut out = Vec::with_capacity(d * d);
    for i in 0..d {
        for j in 0..d {
            out.push(
                b.mu(i, j)
                    .sub(&b.mu_tilde(j, i).scale(&zeta(alg.order(), alg.e(i, j))))
                    .add(b.mu_tilde(i, j)),
            );
        }
    }
    out
}

/// (V, nu) as a representation of the sub-adjacent algebra.
pub fn nu_from_pre_rep(b: &PreLieRepBundle) -> Result<RepresentationBundle> {
    require_pre_rep(b)?;
    let sub = sub_adjacent(&b.prelie)?;
    let out = RepresentationBundle::new(sub, b.space.clone(), nu_family(b), Some(b.beta.clone()))?;
    let closure = check_representation(&out);
    if !closure.passed() {
        return Err(Error::ClosureFailure(Box::new(closure)));
    }
    Ok(out)
}

/// (V*, nu*, -mu~*) with beta transposed, for a rho-skew mu.
pub fn dual_pre_rep(b: &PreLieRepBundle) -> Result<PreLieRepBundle> {
    require_pre_rep(b)?;
    let mu = b.mu_bundle()?;
    let skew = check_rho_skew(&mu);
    if !skew.passed() {
        return Err(Error::NotSkew(Box::new(skew)));
    }
    let carrier = mu.algebra().clone();
    let nu = RepresentationBundle::new(carrier.clone(), b.space.clone(), nu_family(b), Some(b.beta.clone()))?;
    let tilde = RepresentationBundle::new(carrier, b.space.clone(), b.mu_tilde.clone(), Some(b.beta.clone()))?;
    let nu_star = dual_representation_unchecked(&nu)?;
    let tilde_star = dual_representation_unchecked(&tilde)?;
    let minus = -Scalar::one(b.prelie.order());
    let out = PreLieRepBundle::new(
        b.prelie.clone(),
        nu_star.space().clone(),
        nu_star.mu_all().to_vec(),
        tilde_star.mu_all().iter().map(|m| m.scale(&minus)).collect(),
        Some(nu_star.beta().clone()),
    )?;
    let closure = check_pre_lie_representation(&out);
    if !closure.passed() {
        return Err(Error::ClosureFailure(Box::new(closure)));
    }
    Ok(out)
}

fn o_operator_shape(t: &Matrix, b: &RepresentationBundle) -> Option<String> {
    let (d, n) = (b.algebra().dim(), b.space().dim());
    if t.rows() != d || t.cols() != n || t.order() != b.order() {
        return Some(format!("operator is {}x{}, expected {d}x{n}", t.rows(), t.cols()));
    }
    None
}

/// T even, T beta = phi T and
/// [Tx,Ty,Tz] = T(mu(Tx,Ty)z + rho(x,y+z)mu(Ty,Tz)x + rho(x+y,z)mu(Tz,Tx)y).
pub fn check_o_operator(t: &Matrix, b: &RepresentationBundle) -> ValidationReport {
    let mut report = ValidationReport::new("rho-O-operator");
    if let Some(msg) = o_operator_shape(t, b) {
        report.push(O_OPERATOR, &[], Residual::Note(msg));
        return report;
    }
    let alg = b.algebra();
    if let Err(e) = HomogeneousMap::new(b.space(), alg.basis(), t.clone(), alg.group().zero()) {
        report.push(O_EVEN, &[], Residual::Note(e.to_string()));
    }
    let n = b.space().dim();
    let space = b.space();
    let e = |x: usize, y: usize| alg.rho().exponent(space.degree(x), space.degree(y)) as i64;
    let images: Vec<Sparse> = (0..n).map(|x| sparse(&t.column(x))).collect();
    let acts: Vec<Matrix> = (0..n * n).map(|p| b.mu_at(&images[p / n], &images[p % n])).collect();
    let act = |x: usize, y: usize| &acts[x * n + y];
    par_emit(&mut report, n, |x, s| {
        for y in 0..n {
            for z in 0..n {
                let mut inner = act(x, y).column(z);
                let k2 = e(x, y) + e(x, z);
                for (l, c) in act(y, z).column(x).iter().enumerate() {
                    inner[l] += &c.mul_zeta(k2);
                }
                let k3 = e(x, z) + e(y, z);
                for (l, c) in act(z, x).column(y).iter().enumerate() {
                    inner[l] += &c.mul_zeta(k3);
                }
                let mut r = alg.br(&images[x], &images[y], &images[z]);
                for (l, c) in t.mul_vec(&inner).iter().enumerate() {
                    r[l] -= c;
                }
                s.vector(O_OPERATOR, &[x, y, z], r);
            }
        }
    });
    report.expect_zero_matrix(O_TWIST, &[], t.mul(b.beta()).sub(&alg.twist().mul(t)));
    report
}

/// A verified rho-O-operator together with its representation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OOperator {
    map: Matrix,
    bundle: RepresentationBundle,
}

impl OOperator {
    pub fn new(map: Matrix, bundle: RepresentationBundle) -> Result<Self> {
        let report = check_o_operator(&map, &bundle);
        if !report.passed() {
            return Err(Error::NotAnOOperator(Box::new(report)));
        }
        Ok(Self { map, bundle })
    }

    pub fn map(&self) -> &Matrix {
        &self.map
    }

    pub fn bundle(&self) -> &RepresentationBundle {
        &self.bundle
    }
}

/// {x,y,z}_V = mu(Tx,Ty)z with twist beta, and the induced product
/// {Tu,Tv,Tw} = T{u,v,w} on T(V), whose basis is the images of the pivot
/// columns of T.
pub fn pre_lie_from_o_operator(op: &OOperator) -> Result<(Algebra3Rho, Algebra3Rho)> {
    let b = &op.bundle;
    let t = &op.map;
    let skew = check_rho_skew(b);
    if !skew.passed() {
        return Err(Error::NotSkew(Box::new(skew)));
    }
    let alg = b.algebra();
    let n = b.space().dim();
    let o = alg.order();
    let images: Vec<Sparse> = (0..n).map(|x| sparse(&t.column(x))).collect();
    let mut br = TernaryBracket::zero(o, n);
    for x in 0..n {
        for y in 0..n {
            let m = b.mu_at(&images[x], &images[y]);
            for z in 0..n {
                br.set(x, y, z, &m.column(z));
            }
        }
    }
    let on_v = Algebra3Rho::new(b.space().clone(), alg.rho().clone(), br, Some(b.beta().clone()), AlgebraKind::PreLie)?;

    let (_, pivots) = t.rref();
    let r = pivots.len();
    let gens: Vec<Vec<Scalar>> = pivots.iter().map(|&p| t.column(p)).collect();
    let gen_matrix = Matrix::from_fn(o, alg.dim(), r, |i, j| gens[j][i].clone());
    let coords = |v: &[Scalar]| -> Result<Vec<Scalar>> {
        gen_matrix
            .solve(v)
            .ok_or_else(|| Error::ClosureFailure(Box::new(ValidationReport::new("image closure"))))
    };
    let names = pivots.iter().map(|&p| format!("T({})", b.space().names()[p])).collect();
    let degrees = pivots.iter().map(|&p| b.space().degree(p).clone()).collect();
    let image_basis = GradedBasis::new(alg.group().clone(), names, degrees)?;
    let mut image_br = TernaryBracket::zero(o, r);
    for (a, &pa) in pivots.iter().enumerate() {
        for (bb, &pb) in pivots.iter().enumerate() {
            for (c, &pc) in pivots.iter().enumerate() {
                let value = t.mul_vec(&on_v.bracket().value(pa, pb, pc));
                image_br.set(a, bb, c, &coords(&value)?);
            }
        }
    }
    let mut image_twist = Matrix::zeros(o, r, r);
    for (a, g) in gens.iter().enumerate() {
        for (j, c) in coords(&alg.twist().mul_vec(g))?.into_iter().enumerate() {
            image_twist.set(j, a, c);
        }
    }
    let on_image = Algebra3Rho::new(image_basis, alg.rho().clone(), image_br, Some(image_twist), AlgebraKind::PreLie)?;

    let mut closure = check_pre_lie(&on_v);
    closure.absorb(check_pre_lie(&on_image));
    let sub = commutator_bracket(&on_v);
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                let mut res = t.mul_vec(&sub.value(x, y, z));
                for (l, c) in alg.br(&images[x], &images[y], &images[z]).iter().enumerate() {
                    res[l] -= c;
                }
                closure.expect_zero_vector(COMPATIBILITY, &[x, y, z], &res);
            }
        }
    }
    if !closure.passed() {
        return Err(Error::ClosureFailure(Box::new(closure)));
    }
    Ok((on_v, on_image))
}

/// The unique product with omega({f,g,h}, phi s) = -rho(f+g,h) omega(phi h, [f,g,s]).
/// omega must be homogeneous, otherwise the product mixes degrees.
pub fn pre_lie_from_symplectic(alg: &Algebra3Rho, omega: &BilinearForm) -> Result<Algebra3Rho> {
    let report = check_symplectic(alg, omega);
    if !report.passed() {
        return Err(Error::NotSymplectic(Box::new(report)));
    }
    if omega.degree(alg.basis()).is_none() {
        return Err(Error::Precondition("symplectic form is not homogeneous".into()));
    }
    let d = alg.dim();
    let o = alg.order();
    let m = omega.matrix();
    // x^T (Omega Phi) = b^T
    let system = m.mul(alg.twist()).transpose();
    if !system.is_invertible() {
        return Err(Error::NotInvertible("omega composed with the twist is singular".into()));
    }
    let phi = alg.twist_columns();
    let mut br = TernaryBracket::zero(o, d);
    for f in 0..d {
        for g in 0..d {
            for h in 0..d {
                let k = alg.r(&[f, g], &[h]);
                let rhs: Vec<Scalar> = (0..d)
                    .map(|s| -bil(m, &phi[h], alg.bracket().get(f, g, s)).mul_zeta(k))
                    .collect();
                let x = system.solve(&rhs).expect("invertible system");
                br.set(f, g, h, &x);
            }
        }
    }
    let out = alg.with_bracket(br, AlgebraKind::PreLie)?;
    let mut closure = check_pre_lie(&out);
    let c = commutator_bracket(&out);
    for f in 0..d {
        for g in 0..d {
            for h in 0..d {
                let mut r = c.value(f, g, h);
                for (l, x) in alg.bracket().get(f, g, h) {
                    r[*l] -= x;
                }
                closure.expect_zero_vector(COMPATIBILITY, &[f, g, h], &r);
            }
        }
    }
    if !closure.passed() {
        return Err(Error::ClosureFailure(Box::new(closure)));
    }
    Ok(out)
}

/// B + B* with a symplectic pairing; B occupies the first `base_dim` slots.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PhaseSpace {
    pub big: Algebra3Rho,
    pub omega: BilinearForm,
    pub base_dim: usize,
}

/// The sub-adjacent algebra extended by L*, with
/// omega(f+a, g+b) = a(g) - rho(f,g) b(f).
pub fn phase_space(prelie: &Algebra3Rho) -> Result<PhaseSpace> {
    let sub = sub_adjacent(prelie)?;
    let left = left_bundle(prelie)?;
    let big = semidirect_sum(&dual_representation(&left)?)?;
    let ps = PhaseSpace {
        big,
        omega: canonical_pairing(&sub, SYMPLECTIC_PAIRING_SIGN),
        base_dim: sub.dim(),
    };
    let closure = check_phase_space(&ps);
    if !closure.passed() {
        return Err(Error::ClosureFailure(Box::new(closure)));
    }
    Ok(ps)
}

/// The big algebra is Lie, omega is symplectic on it, B is a subalgebra and
/// B* an abelian subalgebra.
pub fn check_phase_space(ps: &PhaseSpace) -> ValidationReport {
    let mut report = ValidationReport::new("phase space");
    report.absorb(check_lie(&ps.big));
    report.absorb(check_symplectic(&ps.big, &ps.omega));
    let t = ps.big.dim();
    let d = ps.base_dim;
    if d > t {
        report.push(BASE_SUBALGEBRA, &[], Residual::Note(format!("split {d} exceeds dimension {t}")));
        return report;
    }
    let br = ps.big.bracket();
    for i in 0..t {
        for j in 0..t {
            for k in 0..t {
                let base = i < d && j < d && k < d;
                let dual = i >= d && j >= d && k >= d;
                if !(base || dual) {
                    continue;
                }
                let v = br.value(i, j, k);
                if base {
                    report.expect_zero_vector(BASE_SUBALGEBRA, &[i, j, k], &v[d..]);
                } else {
                    report.expect_zero_vector(DUAL_SUBALGEBRA, &[i, j, k], &v[..d]);
                    report.expect_zero_vector(DUAL_ABELIAN, &[i, j, k], &v);
                }
            }
        }
    }
    report
}

/// The restriction of a product to the first `dim` basis vectors, which must
/// be closed under it.
pub fn restrict(alg: &Algebra3Rho, dim: usize) -> Result<Algebra3Rho> {
    let o = alg.order();
    let mut report = ValidationReport::new(BASE_SUBALGEBRA);
    let mut br = TernaryBracket::zero(o, dim);
    for i in 0..dim {
        for j in 0..dim {
            for k in 0..dim {
                let v = alg.bracket().value(i, j, k);
                report.expect_zero_vector(BASE_SUBALGEBRA, &[i, j, k], &v[dim..]);
                br.set(i, j, k, &v[..dim]);
            }
        }
    }
    let twist = Matrix::from_fn(o, dim, dim, |i, j| alg.twist().get(i, j).clone());
    for i in dim..alg.dim() {
        for j in 0..dim {
            report.expect_zero_scalar(BASE_SUBALGEBRA, &[i, j], alg.twist().get(i, j).clone());
        }
    }
    if !report.passed() {
        return Err(Error::ClosureFailure(Box::new(report)));
    }
    let b = alg.basis();
    let basis = GradedBasis::new(b.group().clone(), b.names()[..dim].to_vec(), b.degrees()[..dim].to_vec())?;
    Algebra3Rho::new(basis, alg.rho().clone(), br, Some(twist), alg.kind())
}

/// The pre-Lie product a phase space induces on B.
pub fn recovered_pre_lie(ps: &PhaseSpace) -> Result<Algebra3Rho> {
    restrict(&pre_lie_from_symplectic(&ps.big, &ps.omega)?, ps.base_dim)
}

/// {f,g,h} = mu(f,g)h on B (twist phi) is pre-Lie and equals the product the
/// phase space induces on B.
pub fn mu_recovery_check(b: &RepresentationBundle, ps: &PhaseSpace) -> ValidationReport {
    let mut report = ValidationReport::new("product recovery");
    let alg = b.algebra();
    let d = alg.dim();
    if b.space().dim() != d || ps.base_dim != d {
        report.push(RECOVERY, &[], Residual::Note("representation space and base must match".into()));
        return report;
    }
    let o = alg.order();
    let mut br = TernaryBracket::zero(o, d);
    for f in 0..d {
        for g in 0..d {
            for h in 0..d {
                br.set(f, g, h, &b.mu(f, g).column(h));
            }
        }
    }
    let product = match alg.with_bracket(br, AlgebraKind::PreLie) {
        Ok(p) => p,
        Err(e) => {
            report.push(RECOVERY, &[], Residual::Note(e.to_string()));
            return report;
        }
    };
    report.absorb(check_pre_lie(&product));
    match pre_lie_from_symplectic(&ps.big, &ps.omega) {
        Ok(induced) => {
            for f in 0..d {
                for g in 0..d {
                    for h in 0..d {
                        let mut r = induced.bracket().value(f, g, h);
                        for (l, c) in product.bracket().get(f, g, h) {
                            r[*l] -= c;
                        }
                        report.expect_zero_vector(RECOVERY, &[f, g, h], &r);
                    }
                }
            }
        }
        Err(e) => report.push(RECOVERY, &[], Residual::Note(e.to_string())),
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::representations::{adjoint, coadjoint};
    use crate::samples::{z2_cubed, z2_cubed_hom, z2_cubed_symplectic};

    fn w5_pre_lie() -> Algebra3Rho {
        pre_lie_from_symplectic(&z2_cubed(), &z2_cubed_symplectic(5)).unwrap()
    }

    #[test]
    fn every_sample_form_gives_a_compatible_pre_lie() {
        let alg = z2_cubed();
        for k in 1..=6 {
            let p = pre_lie_from_symplectic(&alg, &z2_cubed_symplectic(k)).unwrap();
            assert_eq!(commutator_bracket(&p), *alg.bracket());
        }
    }

    #[test]
    fn regular_bundle_is_a_pre_representation() {
        let p = w5_pre_lie();
        let reg = regular(&p).unwrap();
        assert!(check_pre_lie_representation(&reg).passed());
        let nu = nu_from_pre_rep(&reg).unwrap();
        let ad_c = crate::representations::adjoint(&sub_adjacent(&p).unwrap()).unwrap();
        assert_eq!(nu.mu_all(), ad_c.mu_all());
        let dual = dual_pre_rep(&reg).unwrap();
        assert_eq!(dual.space().dim(), 4);
    }

    #[test]
    fn mutated_right_multiplication_is_rejected() {
        let p = w5_pre_lie();
        let reg = regular(&p).unwrap();
        let mut right = reg.mu_tilde_all().to_vec();
        let (l, k) = (0..16)
            .flat_map(|p| (0..4).flat_map(move |l| (0..4).map(move |k| (p, l, k))))
            .find(|&(p, l, k)| !right[p].get(l, k).is_zero())
            .map(|(p, l, k)| ((p, l), k))
            .unwrap();
        let v = right[l.0].get(l.1, k) + &Scalar::one(p.order());
        right[l.0].set(l.1, k, v);
        let bad = PreLieRepBundle::new(p.clone(), p.basis().clone(), reg.mu_all().to_vec(), right, None).unwrap();
        assert!(!check_pre_lie_representation(&bad).passed());
    }

    #[test]
    fn zero_tilde_is_a_pre_representation() {
        let p = w5_pre_lie();
        let left = left_bundle(&p).unwrap();
        let zeros = vec![Matrix::zeros(p.order(), 4, 4); 16];
        let b = PreLieRepBundle::new(p.clone(), p.basis().clone(), left.mu_all().to_vec(), zeros, None).unwrap();
        let r = check_pre_lie_representation(&b);
        assert!(r.passed(), "{r}");
        let semi = pre_lie_semidirect(&b).unwrap();
        assert_eq!(semi.dim(), 8);
    }

    #[test]
    fn phase_space_round_trip() {
        let p = w5_pre_lie();
        let ps = phase_space(&p).unwrap();
        assert_eq!(ps.big.dim(), 8);
        let back = recovered_pre_lie(&ps).unwrap();
        assert_eq!(back.bracket(), p.bracket());
    }

    #[test]
    fn identity_is_an_o_operator_for_left() {
        let p = w5_pre_lie();
        let left = left_bundle(&p).unwrap();
        let id = Matrix::identity(p.order(), 4);
        let r = check_o_operator(&id, &left);
        assert!(r.passed(), "{r}");
        let op = OOperator::new(id, left).unwrap();
        let (on_v, on_image) = pre_lie_from_o_operator(&op).unwrap();
        assert_eq!(on_v.bracket(), p.bracket());
        assert_eq!(on_image.dim(), 4);
    }

    #[test]
    fn sample_forms_give_operators_of_nonzero_degree() {
        let alg = z2_cubed();
        let t = z2_cubed_symplectic(5).matrix().transpose().inverse().unwrap();
        let r = check_o_operator(&t, &coadjoint(&alg).unwrap());
        assert!(r.of(O_EVEN).next().is_some());
    }

    #[test]
    fn adjoint_double_with_symplectic_pairing_is_not_a_phase_space() {
        let alg = z2_cubed();
        let ad = adjoint(&alg).unwrap();
        let ps = PhaseSpace {
            big: semidirect_sum(&dual_representation(&ad).unwrap()).unwrap(),
            omega: canonical_pairing(&alg, SYMPLECTIC_PAIRING_SIGN),
            base_dim: 4,
        };
        assert!(check_phase_space(&ps).of(crate::forms::SYMPLECTIC_IDENTITY).next().is_some());
        let r = mu_recovery_check(&ad, &ps);
        assert!(r.of(RECOVERY).next().is_some());
    }

    #[test]
    fn hom_sample_forms_do_not_commute_with_twist() {
        let alg = z2_cubed_hom();
        for k in 1..=6 {
            let w = z2_cubed_symplectic(k);
            assert!(check_symplectic(&alg, &w).passed());
            match pre_lie_from_symplectic(&alg, &w) {
                Err(Error::ClosureFailure(r)) => {
                    assert!(r.of(crate::axioms::PRE_LIE_1).next().is_some());
                    assert!(r.of(COMPATIBILITY).next().is_none());
                }
                other => panic!("unexpected {other:?}"),
            }
        }
    }
}
