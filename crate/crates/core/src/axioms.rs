//! Axiom verifiers for ternary algebras. Every verifier evaluates its identity
//! on all basis tuples and reports the nonzero residuals.

use crate::algebra::{rotate, sparse, sub_into, Algebra3Rho, AlgebraKind, HomogeneousMap, Sparse, TernaryBracket};
use crate::conditions::{par_emit, Sink};
use crate::error::{Error, Result};
use crate::report::{Residual, ValidationReport};
use crate::scalar::Scalar;

pub const DEGREE: &str = "degree homogeneity";
pub const SKEW_12: &str = "skew-symmetry (slots 1,2)";
pub const SKEW_23: &str = "skew-symmetry (slots 2,3)";
pub const FUNDAMENTAL: &str = "fundamental identity";
pub const PRE_LIE_1: &str = "pre-Lie identity 1";
pub const PRE_LIE_2: &str = "pre-Lie identity 2";
pub const ASSOCIATIVITY: &str = "associativity";
pub const SYMMETRY_12: &str = "rho-symmetry (slots 1,2)";
pub const SYMMETRY_23: &str = "rho-symmetry (slots 2,3)";
pub const BRACKET_COMPAT: &str = "bracket compatibility";
pub const TWIST_COMPAT: &str = "twist intertwining";

/// Every nonzero component of [e_i, e_j, e_k] must sit in degree |e_i|+|e_j|+|e_k|.
pub fn check_degrees(alg: &Algebra3Rho) -> ValidationReport {
    let mut report = ValidationReport::new(DEGREE);
    let b = alg.basis();
    let g = b.group();
    for (i, j, k) in alg.bracket().support() {
        let want = g.sum([b.degree(i), b.degree(j), b.degree(k)]);
        for (l, _) in alg.bracket().get(i, j, k) {
            if *b.degree(*l) != want {
                report.push(
                    DEGREE,
                    &[i, j, k],
                    Residual::Note(format!(
                        "component {} has degree {}, expected {want}",
                        b.names()[*l],
                        b.degree(*l)
                    )),
                );
            }
        }
    }
    report
}

pub(crate) fn emit_skew<S: Sink>(alg: &Algebra3Rho, both: bool, sink: &mut S) {
    let d = alg.dim();
    let br = alg.bracket();
    par_emit(sink, d, |i, s| {
        for j in 0..d {
            for k in 0..d {
                let mut r = br.value(i, j, k);
                axpy_rot(&mut r, br.get(j, i, k), alg.e(i, j));
                s.vector(SKEW_12, &[i, j, k], r);
                if both {
                    let mut r = br.value(i, j, k);
                    axpy_rot(&mut r, br.get(i, k, j), alg.e(j, k));
                    s.vector(SKEW_23, &[i, j, k], r);
                }
            }
        }
    });
}

fn axpy_rot(acc: &mut [Scalar], x: &[(usize, Scalar)], k: i64) {
    for (l, c) in x {
        acc[*l] += &c.mul_zeta(k);
    }
}

/// [f,g,h] = -rho(f,g)[g,f,h] and, except for pre-Lie products, [f,g,h] = -rho(g,h)[f,h,g].
pub fn check_skew_symmetry(alg: &Algebra3Rho) -> ValidationReport {
    let mut report = ValidationReport::new("skew-symmetry");
    emit_skew(alg, alg.kind() != AlgebraKind::PreLie, &mut report);
    report
}

/// Basis images under the twist.
struct Tables {
    phi: Vec<Sparse>,
}

impl Tables {
    fn new(alg: &Algebra3Rho) -> Self {
        Self {
            phi: alg.twist_columns(),
        }
    }
}

pub(crate) fn emit_fundamental<S: Sink>(alg: &Algebra3Rho, sink: &mut S) {
    let d = alg.dim();
    let t = Tables::new(alg);
    let br = alg.bracket();
    par_emit(sink, d, |f1, s| {
        for f2 in 0..d {
            let inner: Vec<Sparse> = (0..d).map(|g| br.get(f1, f2, g).to_vec()).collect();
            for g1 in 0..d {
                for g2 in 0..d {
                    for g3 in 0..d {
                        let ggg = br.get(g1, g2, g3);
                        let mut r = alg.br(&t.phi[f1], &t.phi[f2], ggg);
                        if !inner[g1].is_empty() {
                            sub_into(&mut r, &alg.br(&inner[g1], &t.phi[g2], &t.phi[g3]));
                        }
                        if !inner[g2].is_empty() {
                            let x = alg.br(&t.phi[g1], &inner[g2], &t.phi[g3]);
                            sub_into(&mut r, &rotate(x, alg.r(&[f1, f2], &[g1])));
                        }
                        if !inner[g3].is_empty() {
                            let x = alg.br(&t.phi[g1], &t.phi[g2], &inner[g3]);
                            sub_into(&mut r, &rotate(x, alg.r(&[f1, f2], &[g1, g2])));
                        }
                        s.vector(FUNDAMENTAL, &[f1, f2, g1, g2, g3], r);
                    }
                }
            }
        }
    });
}

/// [phi f1, phi f2, [g1,g2,g3]] = [[f1,f2,g1], phi g2, phi g3]
///   + rho(f1+f2,g1)[phi g1, [f1,f2,g2], phi g3] + rho(f1+f2,g1+g2)[phi g1, phi g2, [f1,f2,g3]].
pub fn check_fundamental_identity(alg: &Algebra3Rho) -> ValidationReport {
    let mut report = ValidationReport::new(FUNDAMENTAL);
    emit_fundamental(alg, &mut report);
    report
}

/// Degrees, both skew-symmetries and the fundamental identity.
pub fn check_lie(alg: &Algebra3Rho) -> ValidationReport {
    let mut report = ValidationReport::new(if alg.is_hom() {
        "3-Hom-rho-Lie axioms"
    } else {
        "3-rho-Lie axioms"
    });
    report.absorb(check_degrees(alg));
    emit_skew(alg, true, &mut report);
    emit_fundamental(alg, &mut report);
    report
}

/// [f1,f2,f3]_c = {f1,f2,f3} + rho(f1,f2+f3){f2,f3,f1} + rho(f1+f2,f3){f3,f1,f2}, without any check.
pub fn commutator_bracket(alg: &Algebra3Rho) -> TernaryBracket {
    let d = alg.dim();
    let o = alg.order();
    let br = alg.bracket();
    let mut out = TernaryBracket::zero(o, d);
    for i in 0..d {
        for j in 0..d {
            for k in 0..d {
                let mut v = br.value(i, j, k);
                axpy_rot(&mut v, br.get(j, k, i), alg.r(&[i], &[j, k]));
                axpy_rot(&mut v, br.get(k, i, j), alg.r(&[i, j], &[k]));
                out.set(i, j, k, &v);
            }
        }
    }
    out
}

pub(crate) fn emit_pre_lie<S: Sink>(alg: &Algebra3Rho, sink: &mut S) {
    let d = alg.dim();
    let t = Tables::new(alg);
    let br = alg.bracket();
    let c = commutator_bracket(alg);
    par_emit(sink, d, |f1, s| {
        for f2 in 0..d {
            for g1 in 0..d {
                for g2 in 0..d {
                    for g3 in 0..d {
                        // {phi f1, phi f2, {g1,g2,g3}} against the [.,.,.]_c expansion
                        let mut r = alg.br(&t.phi[f1], &t.phi[f2], br.get(g1, g2, g3));
                        sub_into(&mut r, &alg.br(c.get(f1, f2, g1), &t.phi[g2], &t.phi[g3]));
                        let x = alg.br(&t.phi[g1], c.get(f1, f2, g2), &t.phi[g3]);
                        sub_into(&mut r, &rotate(x, alg.r(&[f1, f2], &[g1])));
                        let x = alg.br(&t.phi[g1], &t.phi[g2], br.get(f1, f2, g3));
                        sub_into(&mut r, &rotate(x, alg.r(&[f1, f2], &[g1, g2])));
                        s.vector(PRE_LIE_1, &[f1, f2, g1, g2, g3], r);

                        // {[f1,f2,f3]_c, phi g1, phi g2} with (f3, g1, g2) = (g1, g2, g3)
                        let (f3, h1, h2) = (g1, g2, g3);
                        let mut r = alg.br(c.get(f1, f2, f3), &t.phi[h1], &t.phi[h2]);
                        sub_into(&mut r, &alg.br(&t.phi[f1], &t.phi[f2], br.get(f3, h1, h2)));
                        let x = alg.br(&t.phi[f2], &t.phi[f3], br.get(f1, h1, h2));
                        sub_into(&mut r, &rotate(x, alg.r(&[f1], &[f2, f3])));
                        let x = alg.br(&t.phi[f3], &t.phi[f1], br.get(f2, h1, h2));
                        sub_into(&mut r, &rotate(x, alg.r(&[f1, f2], &[f3])));
                        s.vector(PRE_LIE_2, &[f1, f2, f3, h1, h2], r);
                    }
                }
            }
        }
    });
}

/// Degrees, skew-symmetry in the first two slots and both pre-Lie identities.
pub fn check_pre_lie(alg: &Algebra3Rho) -> ValidationReport {
    let mut report = ValidationReport::new(if alg.is_hom() {
        "3-pre-Hom-rho-Lie axioms"
    } else {
        "3-pre-rho-Lie axioms"
    });
    report.absorb(check_degrees(alg));
    emit_skew(alg, false, &mut report);
    emit_pre_lie(alg, &mut report);
    report
}

/// mu(alpha a, alpha b, mu(c,d,e)) = mu(mu(a,b,c), alpha d, alpha e), with the twist as alpha.
pub fn check_3_associative(alg: &Algebra3Rho) -> ValidationReport {
    let mut report = ValidationReport::new(ASSOCIATIVITY);
    report.absorb(check_degrees(alg));
    let d = alg.dim();
    let t = Tables::new(alg);
    let mu = alg.bracket();
    par_emit(&mut report, d, |a, s| {
        for b in 0..d {
            for c in 0..d {
                let abc = mu.get(a, b, c);
                for x in 0..d {
                    for y in 0..d {
                        let mut r = alg.br(&t.phi[a], &t.phi[b], mu.get(c, x, y));
                        sub_into(&mut r, &alg.br(abc, &t.phi[x], &t.phi[y]));
                        s.vector(ASSOCIATIVITY, &[a, b, c, x, y], r);
                    }
                }
            }
        }
    });
    report
}

/// mu(a,b,c) = rho(a,b) mu(b,a,c) = rho(b,c) mu(a,c,b).
pub fn check_rho_commutative(alg: &Algebra3Rho) -> ValidationReport {
    let mut report = ValidationReport::new("rho-commutativity");
    let d = alg.dim();
    let mu = alg.bracket();
    for a in 0..d {
        for b in 0..d {
            for c in 0..d {
                let mut r = mu.value(a, b, c);
                sub_into(&mut r, &rotate(mu.value(b, a, c), alg.e(a, b)));
                report.expect_zero_vector(SYMMETRY_12, &[a, b, c], &r);
                let mut r = mu.value(a, b, c);
                sub_into(&mut r, &rotate(mu.value(a, c, b), alg.e(b, c)));
                report.expect_zero_vector(SYMMETRY_23, &[a, b, c], &r);
            }
        }
    }
    report
}

/// The sub-adjacent 3-(Hom-)rho-Lie algebra, with the twist carried over.
pub fn sub_adjacent(alg: &Algebra3Rho) -> Result<Algebra3Rho> {
    if alg.kind() != AlgebraKind::PreLie {
        return Err(Error::KindMismatch {
            expected: AlgebraKind::PreLie.to_string(),
            found: alg.kind().to_string(),
        });
    }
    let report = check_pre_lie(alg);
    if !report.passed() {
        return Err(Error::NotPreLie(Box::new(report)));
    }
    alg.with_bracket(commutator_bracket(alg), AlgebraKind::Lie)
}

/// alpha[f,g,h] = [alpha f, alpha g, alpha h] and alpha . phi = psi . alpha.
pub fn check_morphism(src: &Algebra3Rho, dst: &Algebra3Rho, alpha: &HomogeneousMap) -> ValidationReport {
    let mut report = ValidationReport::new("morphism");
    let m = alpha.matrix();
    if m.rows() != dst.dim() || m.cols() != src.dim() || m.order() != src.order() || dst.order() != src.order() {
        report.push(
            BRACKET_COMPAT,
            &[],
            Residual::Note(format!(
                "map is {}x{}, algebras have dimensions {} and {}",
                m.rows(),
                m.cols(),
                src.dim(),
                dst.dim()
            )),
        );
        return report;
    }
    if !alpha.is_even() {
        report.push(BRACKET_COMPAT, &[], Residual::Note(format!("map has degree {}", alpha.degree())));
    }
    let d = src.dim();
    let images: Vec<Sparse> = (0..d).map(|j| sparse(&m.column(j))).collect();
    par_emit(&mut report, d, |i, s| {
        for j in 0..d {
            for k in 0..d {
                let mut r = m.mul_vec(&src.bracket().value(i, j, k));
                sub_into(&mut r, &dst.br(&images[i], &images[j], &images[k]));
                s.vector(BRACKET_COMPAT, &[i, j, k], r);
            }
        }
    });
    report.expect_zero_matrix(TWIST_COMPAT, &[], m.mul(src.twist()).sub(&dst.twist().mul(m)));
    report
}

/// Informational properties of the twist.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TwistFlags {
    pub multiplicative: bool,
    pub regular: bool,
    pub involutive: bool,
}

pub fn twist_flags(alg: &Algebra3Rho) -> TwistFlags {
    let phi = alg.twist_map();
    let tw = alg.twist();
    TwistFlags {
        multiplicative: check_morphism(alg, alg, &phi).passed(),
        regular: tw.is_invertible(),
        involutive: tw.mul(tw).is_identity(),
    }
}
