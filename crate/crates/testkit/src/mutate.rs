//! Single-constant perturbations c -> c + 1.

use colorlie::{Algebra3Rho, AlgebraKind, Matrix, Scalar};

/// Every structure-constant position (i, j, k, l) of a bracket.
pub fn positions(dim: usize) -> Vec<(usize, usize, usize, usize)> {
    let mut out = Vec::with_capacity(dim.pow(4));
    for i in 0..dim {
        for j in 0..dim {
            for k in 0..dim {
                for l in 0..dim {
                    out.push((i, j, k, l));
                }
            }
        }
    }
    out
}

/// The algebra with one coefficient of [e_i, e_j, e_k] along e_l increased by one.
pub fn bump_bracket(alg: &Algebra3Rho, (i, j, k, l): (usize, usize, usize, usize)) -> Algebra3Rho {
    bump_bracket_as(alg, (i, j, k, l), alg.kind())
}

pub fn bump_bracket_as(alg: &Algebra3Rho, (i, j, k, l): (usize, usize, usize, usize), kind: AlgebraKind) -> Algebra3Rho {
    let mut br = alg.bracket().clone();
    let c = br.coefficient(i, j, k, l) + Scalar::one(alg.order());
    br.set_coefficient(i, j, k, l, c);
    alg.with_bracket(br, kind).expect("same shape")
}

/// The matrix with entry (r, c) increased by one.
pub fn bump_matrix(m: &Matrix, r: usize, c: usize) -> Matrix {
    let mut out = m.clone();
    let v = out.get(r, c) + &Scalar::one(m.order());
    out.set(r, c, v);
    out
}
