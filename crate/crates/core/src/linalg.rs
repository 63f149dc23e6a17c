//! Dense matrices over Q(z_N) and exact row reduction.
//!
//! Every solver in the crate reduces to [`Matrix::nullspace`] of a stacked
//! condition matrix.

use std::fmt;

use crate::error::{Error, Result};
use crate::scalar::{CyclotomicOrder, Scalar};

#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    order: CyclotomicOrder,
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn zeros(order: CyclotomicOrder, rows: usize, cols: usize) -> Self {
        Self {
            order,
            rows,
            cols,
            data: vec![Scalar::zero(order); rows * cols],
        }
    }

    pub fn identity(order: CyclotomicOrder, n: usize) -> Self {
        let mut m = Self::zeros(order, n, n);
        for i in 0..n {
            m.data[i * n + i] = Scalar::one(order);
        }
        m
    }

    pub fn from_fn(
        order: CyclotomicOrder,
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> Scalar,
    ) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Self {
            order,
            rows,
            cols,
            data,
        }
    }

    pub fn from_rows(order: CyclotomicOrder, rows: Vec<Vec<Scalar>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            if row.len() != c {
                return Err(Error::DimMismatch("ragged matrix rows".into()));
            }
            for s in row {
                if s.order() != order {
                    return Err(Error::OrderMismatch(order.get(), s.order().get()));
                }
                data.push(s);
            }
        }
        Ok(Self {
            order,
            rows: r,
            cols: c,
            data,
        })
    }

    /// Integer entries, convenient for fixtures.
    pub fn from_ints(order: CyclotomicOrder, rows: &[&[i64]]) -> Self {
        let c = rows.first().map_or(0, |r| r.len());
        Self::from_fn(order, rows.len(), c, |i, j| Scalar::from_int(order, rows[i][j]))
    }

    pub fn order(&self) -> CyclotomicOrder {
        self.order
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        self.data[i * self.cols + j] = v;
    }

    pub fn entry_mut(&mut self, i: usize, j: usize) -> &mut Scalar {
        &mut self.data[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<Scalar> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<Scalar>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    let e = self.get(i, j);
                    if i == j {
                        e.is_one()
                    } else {
                        e.is_zero()
                    }
                })
            })
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.order, self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::DimMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Self::zeros(self.order, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        *out.entry_mut(i, j) += &(a * b);
                    }
                }
            }
        }
        Ok(out)
    }

    /// Matrix product; panics on incompatible shapes.
    pub fn mul(&self, other: &Self) -> Self {
        self.checked_mul(other).expect("matrix shape mismatch")
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.cols, "matrix/vector shape mismatch");
        (0..self.rows)
            .map(|i| {
                let mut acc = Scalar::zero(self.order);
                for (a, b) in self.row(i).iter().zip(v) {
                    if !a.is_zero() && !b.is_zero() {
                        acc += &(a * b);
                    }
                }
                acc
            })
            .collect()
    }

    fn zip_with(&self, other: &Self, f: impl Fn(&Scalar, &Scalar) -> Scalar) -> Self {
        assert_eq!(
            (self.rows, self.cols),
            (other.rows, other.cols),
            "matrix shape mismatch"
        );
        Self {
            order: self.order,
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| f(a, b)).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        self.zip_with(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.zip_with(other, |a, b| a - b)
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        Self {
            order: self.order,
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| a * c).collect(),
        }
    }

    /// Reduced row echelon form and pivot columns.
    pub fn rref(&self) -> (Self, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m.get(i, c).is_zero()) else {
                continue;
            };
            m.swap_rows(r, p);
            let inv = m.get(r, c).inverse().expect("pivot is nonzero");
            for j in c..m.cols {
                let v = m.get(r, j) * &inv;
                m.set(r, j, v);
            }
            for i in 0..m.rows {
                if i == r || m.get(i, c).is_zero() {
                    continue;
                }
                let f = m.get(i, c).clone();
                for j in c..m.cols {
                    if !m.get(r, j).is_zero() {
                        let v = m.get(i, j) - &(&f * m.get(r, j));
                        m.set(i, j, v);
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.data.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of the right kernel {x : Mx = 0}, one vector per free column.
    pub fn nullspace(&self) -> Vec<Vec<Scalar>> {
        let (r, pivots) = self.rref();
        let mut free = vec![true; self.cols];
        for &p in &pivots {
            free[p] = false;
        }
        (0..self.cols)
            .filter(|&f| free[f])
            .map(|f| {
                let mut v = vec![Scalar::zero(self.order); self.cols];
                v[f] = Scalar::one(self.order);
                for (row, &p) in pivots.iter().enumerate() {
                    v[p] = -r.get(row, f);
                }
                v
            })
            .collect()
    }

    pub fn determinant(&self) -> Result<Scalar> {
        if !self.is_square() {
            return Err(Error::DimMismatch("determinant of a non-square matrix".into()));
        }
        let mut m = self.clone();
        let n = self.rows;
        let mut det = Scalar::one(self.order);
        for c in 0..n {
            let Some(p) = (c..n).find(|&i| !m.get(i, c).is_zero()) else {
                return Ok(Scalar::zero(self.order));
            };
            if p != c {
                m.swap_rows(p, c);
                det = -det;
            }
            let pivot = m.get(c, c).clone();
            det = &det * &pivot;
            let inv = pivot.inverse().expect("pivot is nonzero");
            for i in c + 1..n {
                if m.get(i, c).is_zero() {
                    continue;
                }
                let f = m.get(i, c) * &inv;
                for j in c..n {
                    let v = m.get(i, j) - &(&f * m.get(c, j));
                    m.set(i, j, v);
                }
            }
        }
        Ok(det)
    }

    pub fn is_invertible(&self) -> bool {
        self.is_square() && self.rank() == self.rows
    }

    pub fn inverse(&self) -> Option<Self> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        if n == 0 {
            return Some(self.clone());
        }
        let aug = Self::from_fn(self.order, n, 2 * n, |i, j| {
            if j < n {
                self.get(i, j).clone()
            } else if j - n == i {
                Scalar::one(self.order)
            } else {
                Scalar::zero(self.order)
            }
        });
        let (r, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] >= n {
            return None;
        }
        Some(Self::from_fn(self.order, n, n, |i, j| r.get(i, n + j).clone()))
    }

    /// Some x with Mx = b, if one exists.
    pub fn solve(&self, b: &[Scalar]) -> Option<Vec<Scalar>> {
        assert_eq!(b.len(), self.rows, "right-hand side length mismatch");
        let aug = Self::from_fn(self.order, self.rows, self.cols + 1, |i, j| {
            if j < self.cols {
                self.get(i, j).clone()
            } else {
                b[i].clone()
            }
        });
        let (r, pivots) = aug.rref();
        if pivots.last() == Some(&self.cols) {
            return None;
        }
        let mut x = vec![Scalar::zero(self.order); self.cols];
        for (row, &p) in pivots.iter().enumerate() {
            x[p] = r.get(row, self.cols).clone();
        }
        Some(x)
    }
}

/// Row-reduced basis of the span of `vectors` (all of equal length).
pub fn span_basis(order: CyclotomicOrder, len: usize, vectors: &[Vec<Scalar>]) -> Vec<Vec<Scalar>> {
    if vectors.is_empty() {
        return vec![];
    }
    let m = Matrix::from_fn(order, vectors.len(), len, |i, j| vectors[i][j].clone());
    let (r, pivots) = m.rref();
    (0..pivots.len()).map(|i| r.row(i).to_vec()).collect()
}

/// Whether `v` lies in the span of `basis`.
pub fn in_span(order: CyclotomicOrder, len: usize, basis: &[Vec<Scalar>], v: &[Scalar]) -> bool {
    let mut all = basis.to_vec();
    let before = span_basis(order, len, &all).len();
    all.push(v.to_vec());
    span_basis(order, len, &all).len() == before
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} over Q(z_{}) [", self.rows, self.cols, self.order)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(ToString::to_string).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q: CyclotomicOrder = CyclotomicOrder::RATIONAL;

    #[test]
    fn inverse_round_trips() {
        let m = Matrix::from_ints(Q, &[&[2, 1, 0], &[1, 1, 0], &[0, 3, 1]]);
        let inv = m.inverse().unwrap();
        assert!(m.mul(&inv).is_identity());
        assert_eq!(m.determinant().unwrap(), Scalar::from_int(Q, 1));
    }

    #[test]
    fn singular_matrix_has_kernel() {
        let m = Matrix::from_ints(Q, &[&[1, 2], &[2, 4]]);
        assert!(m.inverse().is_none());
        assert!(m.determinant().unwrap().is_zero());
        let k = m.nullspace();
        assert_eq!(k.len(), 1);
        assert!(m.mul_vec(&k[0]).iter().all(Scalar::is_zero));
    }

    #[test]
    fn solve_reports_inconsistency() {
        let m = Matrix::from_ints(Q, &[&[1, 1], &[1, 1]]);
        let b = [Scalar::from_int(Q, 1), Scalar::from_int(Q, 2)];
        assert!(m.solve(&b).is_none());
    }

    #[test]
    fn determinant_over_gaussian_rationals() {
        let o = CyclotomicOrder::new(4).unwrap();
        let i = Scalar::zeta_pow(o, 1);
        let one = Scalar::one(o);
        let m = Matrix::from_rows(o, vec![vec![one.clone(), i.clone()], vec![i, one]]).unwrap();
        // 1 - i^2 = 2
        assert_eq!(m.determinant().unwrap(), Scalar::from_int(o, 2));
    }

    #[test]
    fn span_membership() {
        let b = vec![vec![Scalar::from_int(Q, 1), Scalar::from_int(Q, 1)]];
        assert!(in_span(Q, 2, &b, &[Scalar::from_int(Q, 3), Scalar::from_int(Q, 3)]));
        assert!(!in_span(Q, 2, &b, &[Scalar::from_int(Q, 1), Scalar::from_int(Q, 0)]));
    }
}
