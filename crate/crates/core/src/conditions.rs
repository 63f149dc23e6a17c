//! One code path for verifying and for solving: identities emit residuals into
//! a sink, which either records nonzero ones as violations or flattens all of
//! them into a linear-condition vector.

use rayon::prelude::*;

use crate::linalg::Matrix;
use crate::report::ValidationReport;
use crate::scalar::{CyclotomicOrder, Scalar};

pub(crate) trait Sink: Send + Sync + Sized {
    fn vector(&mut self, identity: &str, indices: &[usize], v: Vec<Scalar>);
    fn scalar(&mut self, identity: &str, indices: &[usize], s: Scalar);
    fn fork(&self) -> Self;
    fn join(&mut self, other: Self);

    fn matrix(&mut self, identity: &str, indices: &[usize], m: Matrix) {
        self.vector(identity, indices, m.to_rows().into_iter().flatten().collect());
    }
}

impl Sink for ValidationReport {
    fn vector(&mut self, identity: &str, indices: &[usize], v: Vec<Scalar>) {
        self.expect_zero_vector(identity, indices, &v);
    }

    fn scalar(&mut self, identity: &str, indices: &[usize], s: Scalar) {
        self.expect_zero_scalar(identity, indices, s);
    }

    fn matrix(&mut self, identity: &str, indices: &[usize], m: Matrix) {
        self.expect_zero_matrix(identity, indices, m);
    }

    fn fork(&self) -> Self {
        ValidationReport::new(self.check.clone())
    }

    fn join(&mut self, other: Self) {
        self.absorb(other);
    }
}

/// Every residual coordinate, zero or not, in emission order.
#[derive(Default)]
pub(crate) struct Flatten(pub Vec<Scalar>);

impl Sink for Flatten {
    fn vector(&mut self, _: &str, _: &[usize], v: Vec<Scalar>) {
        self.0.extend(v);
    }

    fn scalar(&mut self, _: &str, _: &[usize], s: Scalar) {
        self.0.push(s);
    }

    fn fork(&self) -> Self {
        Flatten(Vec::new())
    }

    fn join(&mut self, other: Self) {
        self.0.extend(other.0);
    }
}

/// Runs `body(i, sink)` for i in 0..n in parallel and joins the partial sinks
/// in index order, so output is deterministic.
pub(crate) fn par_emit<S: Sink>(sink: &mut S, n: usize, body: impl Fn(usize, &mut S) + Sync) {
    let template = sink.fork();
    let parts: Vec<S> = (0..n)
        .into_par_iter()
        .map(|i| {
            let mut local = template.fork();
            body(i, &mut local);
            local
        })
        .collect();
    for p in parts {
        sink.join(p);
    }
}

/// Basis of all combinations of `unknowns` whose residual vanishes, assuming
/// `residual` is linear in its argument.
pub(crate) fn solve_linear(
    order: CyclotomicOrder,
    unknowns: &[Matrix],
    residual: impl Fn(&Matrix) -> Vec<Scalar> + Sync,
) -> Vec<Matrix> {
    if unknowns.is_empty() {
        return Vec::new();
    }
    let columns: Vec<Vec<Scalar>> = unknowns.par_iter().map(&residual).collect();
    let rows = columns[0].len();
    let system = Matrix::from_fn(order, rows, unknowns.len(), |r, c| columns[c][r].clone());
    system
        .nullspace()
        .into_iter()
        .map(|coeffs| combine(order, unknowns, &coeffs))
        .collect()
}

pub(crate) fn combine(order: CyclotomicOrder, items: &[Matrix], coeffs: &[Scalar]) -> Matrix {
    let mut acc = Matrix::zeros(order, items[0].rows(), items[0].cols());
    for (m, c) in items.iter().zip(coeffs) {
        if !c.is_zero() {
            acc = acc.add(&m.scale(c));
        }
    }
    acc
}
