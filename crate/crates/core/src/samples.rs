//! Ready-made algebras and forms: the 4-dimensional Z2^3-graded 3-rho-Lie
//! algebra, its six symplectic forms and its Hom deformation.

use crate::algebra::{Algebra3Rho, AlgebraKind, GradedBasis, TernaryBracket};
use crate::error::Result;
use crate::forms::{wedge_sum, BilinearForm};
use crate::grading::{GradingGroup, TwoCycle};
use crate::linalg::Matrix;
use crate::scalar::{CyclotomicOrder, Scalar};

/// Fills in every permutation of the seeded triples using
/// [y,x,z] = -rho(x,y)[x,y,z] and [x,z,y] = -rho(y,z)[x,y,z].
pub fn extend_by_skew(
    order: CyclotomicOrder,
    exps: &dyn Fn(usize, usize) -> i64,
    dim: usize,
    seeds: &[((usize, usize, usize), Vec<Scalar>)],
) -> TernaryBracket {
    let mut br = TernaryBracket::zero(order, dim);
    for ((a, b, c), v) in seeds {
        let mut stack = vec![((*a, *b, *c), v.clone())];
        let mut seen = std::collections::HashSet::new();
        while let Some(((i, j, k), val)) = stack.pop() {
            if !seen.insert((i, j, k)) {
                continue;
            }
            br.set(i, j, k, &val);
            let swap12: Vec<Scalar> = val.iter().map(|c| -c.mul_zeta(exps(i, j))).collect();
            let swap23: Vec<Scalar> = val.iter().map(|c| -c.mul_zeta(exps(j, k))).collect();
            stack.push(((j, i, k), swap12));
            stack.push(((i, k, j), swap23));
        }
    }
    br
}

fn z2_cubed_bracket(basis: &GradedBasis, rho: &TwoCycle, order: CyclotomicOrder) -> TernaryBracket {
    let unit = |l: usize| {
        let mut v = vec![Scalar::zero(order); 4];
        v[l] = Scalar::one(order);
        v
    };
    let exps = |i: usize, j: usize| rho.exponent(basis.degree(i), basis.degree(j)) as i64;
    extend_by_skew(
        order,
        &exps,
        4,
        &[
            ((0, 1, 2), unit(3)),
            ((0, 1, 3), unit(2)),
            ((1, 2, 3), unit(0)),
            ((0, 2, 3), unit(1)),
        ],
    )
}

/// Basis l1..l4 of degrees (1,0,0), (0,1,0), (0,0,1), (1,1,1) with
/// rho(a,b) = (-1)^(a^T (J - I) b) and [l1,l2,l3] = l4, [l1,l2,l4] = l3,
/// [l2,l3,l4] = l1, [l1,l3,l4] = l2.
pub fn z2_cubed() -> Algebra3Rho {
    build_z2_cubed().expect("the Z2^3 sample is well formed")
}

fn build_z2_cubed() -> Result<Algebra3Rho> {
    let order = CyclotomicOrder::new(2)?;
    let group = GradingGroup::new(vec![2, 2, 2])?;
    let degrees = vec![
        group.element(&[1, 0, 0])?,
        group.element(&[0, 1, 0])?,
        group.element(&[0, 0, 1])?,
        group.element(&[1, 1, 1])?,
    ];
    let names = ["l1", "l2", "l3", "l4"].iter().map(|s| s.to_string()).collect();
    let basis = GradedBasis::new(group.clone(), names, degrees)?;
    let rho = TwoCycle::new_validated(group, order, &[vec![0, 1, 1], vec![1, 0, 1], vec![1, 1, 0]])?;
    let bracket = z2_cubed_bracket(&basis, &rho, order);
    Algebra3Rho::new(basis, rho, bracket, None, AlgebraKind::Lie)
}

/// The twisting map diag(-1,-1,-1,1).
pub fn z2_cubed_twist() -> Matrix {
    Matrix::from_ints(CyclotomicOrder::new(2).expect("order 2"), &[
        &[-1, 0, 0, 0],
        &[0, -1, 0, 0],
        &[0, 0, -1, 0],
        &[0, 0, 0, 1],
    ])
}

/// [x,y,z]_phi = phi[x,y,z] with phi = diag(-1,-1,-1,1) as twist.
pub fn z2_cubed_hom() -> Algebra3Rho {
    let alg = z2_cubed();
    let phi = z2_cubed_twist();
    alg.with_bracket(alg.bracket().post_compose(&phi), AlgebraKind::Lie)
        .and_then(|a| a.with_twist(phi))
        .expect("the Hom sample is well formed")
}

/// omega_1..omega_6, where x*^y* stands for the wedge of dual basis vectors:
/// l3*^l1* + l4*^l2*, l2*^l1* + l4*^l3*, l2*^l1* + l3*^l4*,
/// l1*^l2* + l4*^l3*, l1*^l2* + l3*^l4*, l1*^l3* + l2*^l4*.
pub fn z2_cubed_symplectic(k: usize) -> BilinearForm {
    let pairs: [[(usize, usize); 2]; 6] = [
        [(2, 0), (3, 1)],
        [(1, 0), (3, 2)],
        [(1, 0), (2, 3)],
        [(0, 1), (3, 2)],
        [(0, 1), (2, 3)],
        [(0, 2), (1, 3)],
    ];
    assert!((1..=6).contains(&k), "forms are numbered 1 to 6");
    wedge_sum(&z2_cubed(), &pairs[k - 1])
}
