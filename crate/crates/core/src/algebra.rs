//! Graded bases, vectors, homogeneous maps and ternary algebras given by
//! structure constants.

use std::collections::HashSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::grading::{GradingGroup, GroupElement, TwoCycle};
use crate::linalg::Matrix;
use crate::scalar::{CyclotomicOrder, Scalar};

/// Sparse coordinates: (basis index, nonzero coefficient).
pub(crate) type Sparse = Vec<(usize, Scalar)>;

pub(crate) fn sparse(dense: &[Scalar]) -> Sparse {
    dense
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(i, c)| (i, c.clone()))
        .collect()
}

pub(crate) fn unit(order: CyclotomicOrder, i: usize) -> Sparse {
    vec![(i, Scalar::one(order))]
}

/// Multiplies every coordinate by z^k.
pub(crate) fn rotate(v: Vec<Scalar>, k: i64) -> Vec<Scalar> {
    if v.iter().all(Scalar::is_zero) {
        return v;
    }
    v.into_iter().map(|s| s.mul_zeta(k)).collect()
}

pub(crate) fn sub_into(acc: &mut [Scalar], x: &[Scalar]) {
    for (a, b) in acc.iter_mut().zip(x) {
        if !b.is_zero() {
            *a -= b;
        }
    }
}

/// A G-graded vector space with a chosen homogeneous basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedBasis {
    group: GradingGroup,
    names: Vec<String>,
    degrees: Vec<GroupElement>,
}

impl GradedBasis {
    pub fn new(group: GradingGroup, names: Vec<String>, degrees: Vec<GroupElement>) -> Result<Self> {
        if names.is_empty() {
            return Err(Error::InvalidBasis("a basis needs at least one vector".into()));
        }
        if names.len() != degrees.len() {
            return Err(Error::InvalidBasis(format!(
                "{} names but {} degrees",
                names.len(),
                degrees.len()
            )));
        }
        let mut seen = HashSet::new();
        for n in &names {
            if !seen.insert(n.as_str()) {
                return Err(Error::InvalidBasis(format!("duplicate basis name {n:?}")));
            }
        }
        for d in &degrees {
            group.check(d)?;
        }
        Ok(Self {
            group,
            names,
            degrees,
        })
    }

    pub fn group(&self) -> &GradingGroup {
        &self.group
    }

    pub fn dim(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn degrees(&self) -> &[GroupElement] {
        &self.degrees
    }

    pub fn degree(&self, i: usize) -> &GroupElement {
        &self.degrees[i]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// `self` followed by `other`; clashing names of `other` get primes appended.
    pub fn concat(&self, other: &GradedBasis) -> Result<GradedBasis> {
        if self.group != other.group {
            return Err(Error::GroupMismatch("bases are graded by different groups".into()));
        }
        let mut names = self.names.clone();
        for n in &other.names {
            let mut candidate = n.clone();
            while names.contains(&candidate) || (candidate != *n && other.names.contains(&candidate)) {
                candidate.push('\'');
            }
            names.push(candidate);
        }
        let mut degrees = self.degrees.clone();
        degrees.extend(other.degrees.iter().cloned());
        GradedBasis::new(self.group.clone(), names, degrees)
    }

    /// Dual basis e_i* of degree -|e_i|.
    pub fn dual(&self) -> GradedBasis {
        GradedBasis {
            group: self.group.clone(),
            names: self.names.iter().map(|n| format!("{n}*")).collect(),
            degrees: self.degrees.iter().map(|d| self.group.neg(d)).collect(),
        }
    }

    /// Pair basis e_i (x) f_a, ordered with the second index fastest.
    pub fn tensor(&self, other: &GradedBasis) -> Result<GradedBasis> {
        if self.group != other.group {
            return Err(Error::GroupMismatch("bases are graded by different groups".into()));
        }
        let mut names = Vec::new();
        let mut degrees = Vec::new();
        for (n, d) in self.names.iter().zip(&self.degrees) {
            for (m, e) in other.names.iter().zip(&other.degrees) {
                names.push(format!("{n}⊗{m}"));
                degrees.push(self.group.add(d, e));
            }
        }
        GradedBasis::new(self.group.clone(), names, degrees)
    }
}

/// Coordinates with respect to some [`GradedBasis`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Vector {
    order: CyclotomicOrder,
    coords: Vec<Scalar>,
}

impl Vector {
    pub fn new(order: CyclotomicOrder, coords: Vec<Scalar>) -> Result<Self> {
        if let Some(c) = coords.iter().find(|c| c.order() != order) {
            return Err(Error::OrderMismatch(order.get(), c.order().get()));
        }
        Ok(Self { order, coords })
    }

    pub fn zero(order: CyclotomicOrder, dim: usize) -> Self {
        Self {
            order,
            coords: vec![Scalar::zero(order); dim],
        }
    }

    pub fn basis_vector(order: CyclotomicOrder, dim: usize, i: usize) -> Self {
        let mut v = Self::zero(order, dim);
        v.coords[i] = Scalar::one(order);
        v
    }

    pub fn coords(&self) -> &[Scalar] {
        &self.coords
    }

    pub fn into_coords(self) -> Vec<Scalar> {
        self.coords
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn order(&self) -> CyclotomicOrder {
        self.order
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Scalar::is_zero)
    }

    pub fn add(&self, other: &Vector) -> Vector {
        assert_eq!(self.dim(), other.dim(), "vector length mismatch");
        Vector {
            order: self.order,
            coords: self.coords.iter().zip(&other.coords).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn sub(&self, other: &Vector) -> Vector {
        assert_eq!(self.dim(), other.dim(), "vector length mismatch");
        Vector {
            order: self.order,
            coords: self.coords.iter().zip(&other.coords).map(|(a, b)| a - b).collect(),
        }
    }

    pub fn scale(&self, c: &Scalar) -> Vector {
        Vector {
            order: self.order,
            coords: self.coords.iter().map(|a| a * c).collect(),
        }
    }

    /// The common degree of the nonzero coordinates. The zero vector has no
    /// well-defined degree and yields `None`, as does a mixed vector.
    pub fn homogeneous_degree(&self, basis: &GradedBasis) -> Option<GroupElement> {
        let mut found: Option<&GroupElement> = None;
        for (c, d) in self.coords.iter().zip(basis.degrees()) {
            if c.is_zero() {
                continue;
            }
            match found {
                None => found = Some(d),
                Some(e) if e != d => return None,
                _ => {}
            }
        }
        found.cloned()
    }
}

impl fmt::Display for Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coords.iter().map(ToString::to_string).collect();
        write!(f, "({})", parts.join(", "))
    }
}

/// A linear map shifting degrees by a fixed group element.
/// Column j of the matrix is the image of basis vector j.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomogeneousMap {
    matrix: Matrix,
    degree: GroupElement,
}

impl HomogeneousMap {
    pub fn new(
        domain: &GradedBasis,
        codomain: &GradedBasis,
        matrix: Matrix,
        degree: GroupElement,
    ) -> Result<Self> {
        if matrix.rows() != codomain.dim() || matrix.cols() != domain.dim() {
            return Err(Error::DimMismatch(format!(
                "map matrix is {}x{}, expected {}x{}",
                matrix.rows(),
                matrix.cols(),
                codomain.dim(),
                domain.dim()
            )));
        }
        domain.group().check(&degree)?;
        if domain.group() != codomain.group() {
            return Err(Error::GroupMismatch("domain and codomain gradings differ".into()));
        }
        let g = domain.group();
        for i in 0..matrix.rows() {
            for j in 0..matrix.cols() {
                if !matrix.get(i, j).is_zero() && *codomain.degree(i) != g.add(domain.degree(j), &degree) {
                    return Err(Error::NotHomogeneous(format!(
                        "entry ({i}, {j}) maps degree {} to {} but the map has degree {degree}",
                        domain.degree(j),
                        codomain.degree(i)
                    )));
                }
            }
        }
        Ok(Self { matrix, degree })
    }

    pub fn endo(basis: &GradedBasis, matrix: Matrix, degree: GroupElement) -> Result<Self> {
        Self::new(basis, basis, matrix, degree)
    }

    pub fn even(basis: &GradedBasis, matrix: Matrix) -> Result<Self> {
        Self::new(basis, basis, matrix, basis.group().zero())
    }

    /// Reads the degree off the first nonzero entry; the zero map is even.
    pub fn infer(domain: &GradedBasis, codomain: &GradedBasis, matrix: Matrix) -> Result<Self> {
        let g = domain.group();
        let mut degree = g.zero();
        'outer: for i in 0..matrix.rows().min(codomain.dim()) {
            for j in 0..matrix.cols().min(domain.dim()) {
                if !matrix.get(i, j).is_zero() {
                    degree = g.sub(codomain.degree(i), domain.degree(j));
                    break 'outer;
                }
            }
        }
        Self::new(domain, codomain, matrix, degree)
    }

    pub fn identity(order: CyclotomicOrder, basis: &GradedBasis) -> Self {
        Self {
            matrix: Matrix::identity(order, basis.dim()),
            degree: basis.group().zero(),
        }
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn degree(&self) -> &GroupElement {
        &self.degree
    }

    pub fn is_even(&self) -> bool {
        self.degree.residues().iter().all(|&r| r == 0)
    }

    pub fn apply(&self, v: &Vector) -> Vector {
        Vector {
            order: v.order(),
            coords: self.matrix.mul_vec(v.coords()),
        }
    }

    /// self after other.
    pub fn compose(&self, other: &HomogeneousMap, group: &GradingGroup) -> HomogeneousMap {
        HomogeneousMap {
            matrix: self.matrix.mul(&other.matrix),
            degree: group.add(&self.degree, &other.degree),
        }
    }
}

/// Structure constants of a trilinear map: `[e_i, e_j, e_k]` for every
/// ordered triple, stored without any symmetry assumption.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TernaryBracket {
    order: CyclotomicOrder,
    dim: usize,
    constants: Vec<Sparse>,
}

impl TernaryBracket {
    pub fn zero(order: CyclotomicOrder, dim: usize) -> Self {
        Self {
            order,
            dim,
            constants: vec![Vec::new(); dim * dim * dim],
        }
    }

    pub fn order(&self) -> CyclotomicOrder {
        self.order
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    fn slot(&self, i: usize, j: usize, k: usize) -> usize {
        (i * self.dim + j) * self.dim + k
    }

    /// Nonzero components of `[e_i, e_j, e_k]`.
    pub fn get(&self, i: usize, j: usize, k: usize) -> &[(usize, Scalar)] {
        &self.constants[self.slot(i, j, k)]
    }

    /// Dense `[e_i, e_j, e_k]`.
    pub fn value(&self, i: usize, j: usize, k: usize) -> Vec<Scalar> {
        let mut out = vec![Scalar::zero(self.order); self.dim];
        for (l, c) in self.get(i, j, k) {
            out[*l] = c.clone();
        }
        out
    }

    pub fn coefficient(&self, i: usize, j: usize, k: usize, l: usize) -> Scalar {
        self.get(i, j, k)
            .iter()
            .find(|(m, _)| *m == l)
            .map_or_else(|| Scalar::zero(self.order), |(_, c)| c.clone())
    }

    pub fn set(&mut self, i: usize, j: usize, k: usize, value: &[Scalar]) {
        assert_eq!(value.len(), self.dim, "bracket value has wrong length");
        let s = self.slot(i, j, k);
        self.constants[s] = sparse(value);
    }

    pub fn set_coefficient(&mut self, i: usize, j: usize, k: usize, l: usize, c: Scalar) {
        let s = self.slot(i, j, k);
        let entry = &mut self.constants[s];
        entry.retain(|(m, _)| *m != l);
        if !c.is_zero() {
            entry.push((l, c));
            entry.sort_by_key(|(m, _)| *m);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.constants.iter().all(Vec::is_empty)
    }

    /// Triples with a nonzero value, in lexicographic order.
    pub fn support(&self) -> Vec<(usize, usize, usize)> {
        let d = self.dim;
        (0..d * d * d)
            .filter(|&s| !self.constants[s].is_empty())
            .map(|s| (s / (d * d), (s / d) % d, s % d))
            .collect()
    }

    /// Trilinear evaluation on sparse arguments.
    pub(crate) fn apply(&self, u: &[(usize, Scalar)], v: &[(usize, Scalar)], w: &[(usize, Scalar)]) -> Vec<Scalar> {
        let mut out = vec![Scalar::zero(self.order); self.dim];
        for (i, a) in u {
            for (j, b) in v {
                let ab = a * b;
                for (k, c) in w {
                    let entry = self.get(*i, *j, *k);
                    if entry.is_empty() {
                        continue;
                    }
                    let coef = &ab * c;
                    for (l, x) in entry {
                        out[*l] += &(&coef * x);
                    }
                }
            }
        }
        out
    }

    pub fn eval(&self, f: &[Scalar], g: &[Scalar], h: &[Scalar]) -> Vec<Scalar> {
        self.apply(&sparse(f), &sparse(g), &sparse(h))
    }

    /// The bracket followed by a linear map: `m . [., ., .]`.
    pub fn post_compose(&self, m: &Matrix) -> TernaryBracket {
        let mut out = TernaryBracket::zero(self.order, m.rows());
        out.dim = self.dim;
        let mut constants = Vec::with_capacity(self.constants.len());
        for entry in &self.constants {
            if entry.is_empty() {
                constants.push(Vec::new());
                continue;
            }
            let mut dense = vec![Scalar::zero(self.order); self.dim];
            for (l, c) in entry {
                dense[*l] = c.clone();
            }
            constants.push(sparse(&m.mul_vec(&dense)));
        }
        out.constants = constants;
        out
    }

    /// Every constant multiplied by `c`.
    pub fn scale(&self, c: &Scalar) -> TernaryBracket {
        let mut out = self.clone();
        for entry in &mut out.constants {
            *entry = entry
                .iter()
                .map(|(l, x)| (*l, x * c))
                .filter(|(_, x)| !x.is_zero())
                .collect();
        }
        out
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum AlgebraKind {
    Lie,
    PreLie,
    Associative,
}

impl fmt::Display for AlgebraKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            AlgebraKind::Lie => "lie",
            AlgebraKind::PreLie => "pre-lie",
            AlgebraKind::Associative => "associative",
        })
    }
}

/// A graded space with a two-cycle, a ternary product, an even twist map
/// (identity for the untwisted theory) and a flag selecting the axiom system.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Algebra3Rho {
    basis: GradedBasis,
    rho: TwoCycle,
    bracket: TernaryBracket,
    twist: Matrix,
    kind: AlgebraKind,
    exps: Vec<Vec<u32>>,
}

impl Algebra3Rho {
    /// `twist = None` means the identity. The two-cycle must validate, since
    /// every rho-factor is computed additively in the exponents.
    pub fn new(
        basis: GradedBasis,
        rho: TwoCycle,
        bracket: TernaryBracket,
        twist: Option<Matrix>,
        kind: AlgebraKind,
    ) -> Result<Self> {
        if rho.group() != basis.group() {
            return Err(Error::GroupMismatch("two-cycle and basis use different groups".into()));
        }
        let report = rho.validate();
        if !report.passed() {
            return Err(Error::InvalidCocycle(report.to_string()));
        }
        let order = rho.order();
        if bracket.order() != order {
            return Err(Error::OrderMismatch(order.get(), bracket.order().get()));
        }
        let d = basis.dim();
        if bracket.dim() != d {
            return Err(Error::DimMismatch(format!(
                "bracket is {}-dimensional, basis has {d} vectors",
                bracket.dim()
            )));
        }
        let twist = twist.unwrap_or_else(|| Matrix::identity(order, d));
        if twist.order() != order {
            return Err(Error::OrderMismatch(order.get(), twist.order().get()));
        }
        HomogeneousMap::even(&basis, twist.clone())?;
        let exps = exponent_table(&rho, basis.degrees(), basis.degrees());
        Ok(Self {
            basis,
            rho,
            bracket,
            twist,
            kind,
            exps,
        })
    }

    pub fn basis(&self) -> &GradedBasis {
        &self.basis
    }

    pub fn rho(&self) -> &TwoCycle {
        &self.rho
    }

    pub fn bracket(&self) -> &TernaryBracket {
        &self.bracket
    }

    pub fn twist(&self) -> &Matrix {
        &self.twist
    }

    pub fn twist_map(&self) -> HomogeneousMap {
        HomogeneousMap {
            matrix: self.twist.clone(),
            degree: self.basis.group().zero(),
        }
    }

    pub fn kind(&self) -> AlgebraKind {
        self.kind
    }

    pub fn dim(&self) -> usize {
        self.basis.dim()
    }

    pub fn order(&self) -> CyclotomicOrder {
        self.rho.order()
    }

    pub fn group(&self) -> &GradingGroup {
        self.basis.group()
    }

    /// Whether a non-identity twist is present.
    pub fn is_hom(&self) -> bool {
        !self.twist.is_identity()
    }

    /// Same space and cycle, new product and flag.
    pub fn with_bracket(&self, bracket: TernaryBracket, kind: AlgebraKind) -> Result<Self> {
        Self::new(
            self.basis.clone(),
            self.rho.clone(),
            bracket,
            Some(self.twist.clone()),
            kind,
        )
    }

    pub fn with_twist(&self, twist: Matrix) -> Result<Self> {
        Self::new(
            self.basis.clone(),
            self.rho.clone(),
            self.bracket.clone(),
            Some(twist),
            self.kind,
        )
    }

    /// Exponent k with rho(|e_i|, |e_j|) = z^k.
    pub(crate) fn e(&self, i: usize, j: usize) -> i64 {
        self.exps[i][j] as i64
    }

    /// Exponent of rho(sum of |e_l| for l in left, sum of |e_r| for r in right).
    pub(crate) fn r(&self, left: &[usize], right: &[usize]) -> i64 {
        let mut k = 0;
        for &l in left {
            for &r in right {
                k += self.exps[l][r] as i64;
            }
        }
        k
    }

    /// Images of the basis under the twist.
    pub(crate) fn twist_columns(&self) -> Vec<Sparse> {
        (0..self.dim()).map(|j| sparse(&self.twist.column(j))).collect()
    }

    pub(crate) fn units(&self) -> Vec<Sparse> {
        (0..self.dim()).map(|j| unit(self.order(), j)).collect()
    }

    pub(crate) fn br(&self, u: &[(usize, Scalar)], v: &[(usize, Scalar)], w: &[(usize, Scalar)]) -> Vec<Scalar> {
        self.bracket.apply(u, v, w)
    }

    pub fn bracket_eval(&self, f: &Vector, g: &Vector, h: &Vector) -> Result<Vector> {
        let d = self.dim();
        for v in [f, g, h] {
            if v.dim() != d {
                return Err(Error::DimMismatch(format!(
                    "vector of length {} for a {d}-dimensional algebra",
                    v.dim()
                )));
            }
            if v.order() != self.order() {
                return Err(Error::OrderMismatch(self.order().get(), v.order().get()));
            }
        }
        Ok(Vector {
            order: self.order(),
            coords: self.bracket.eval(f.coords(), g.coords(), h.coords()),
        })
    }
}

/// `table[i][j]` = exponent of rho(left[i], right[j]).
pub(crate) fn exponent_table(rho: &TwoCycle, left: &[GroupElement], right: &[GroupElement]) -> Vec<Vec<u32>> {
    left.iter()
        .map(|a| right.iter().map(|b| rho.exponent(a, b)).collect())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z2() -> (GradingGroup, CyclotomicOrder) {
        (GradingGroup::new(vec![2]).unwrap(), CyclotomicOrder::new(2).unwrap())
    }

    fn basis2() -> GradedBasis {
        let (g, _) = z2();
        let degs = vec![g.element(&[0]).unwrap(), g.element(&[1]).unwrap()];
        GradedBasis::new(g, vec!["a".into(), "b".into()], degs).unwrap()
    }

    #[test]
    fn duplicate_names_are_rejected() {
        let (g, _) = z2();
        let z = g.zero();
        let err = GradedBasis::new(g, vec!["x".into(), "x".into()], vec![z.clone(), z]);
        assert!(matches!(err, Err(Error::InvalidBasis(_))));
    }

    #[test]
    fn concat_primes_clashing_names() {
        let b = basis2();
        let s = b.concat(&b).unwrap();
        assert_eq!(s.names(), &["a", "b", "a'", "b'"]);
    }

    #[test]
    fn homogeneous_degree_detects_mixing() {
        let (_, o) = z2();
        let b = basis2();
        let v = Vector::basis_vector(o, 2, 1);
        assert_eq!(v.homogeneous_degree(&b), Some(b.degree(1).clone()));
        let mixed = v.add(&Vector::basis_vector(o, 2, 0));
        assert_eq!(mixed.homogeneous_degree(&b), None);
        assert_eq!(Vector::zero(o, 2).homogeneous_degree(&b), None);
    }

    #[test]
    fn odd_entry_in_even_map_is_rejected() {
        let (_, o) = z2();
        let b = basis2();
        let m = Matrix::from_ints(o, &[&[0, 1], &[0, 0]]);
        assert!(matches!(HomogeneousMap::even(&b, m.clone()), Err(Error::NotHomogeneous(_))));
        let odd = HomogeneousMap::infer(&b, &b, m).unwrap();
        assert_eq!(odd.degree(), b.degree(1));
    }

    #[test]
    fn bracket_is_trilinear() {
        let (_, o) = z2();
        let mut br = TernaryBracket::zero(o, 2);
        br.set_coefficient(0, 1, 1, 0, Scalar::from_int(o, 3));
        let one = Scalar::one(o);
        let f = vec![one.clone(), one.clone()];
        let g = vec![Scalar::zero(o), Scalar::from_int(o, 2)];
        let out = br.eval(&f, &g, &g);
        assert_eq!(out, vec![Scalar::from_int(o, 12), Scalar::zero(o)]);
        assert!(br.eval(&f, &vec![Scalar::zero(o); 2], &g).iter().all(Scalar::is_zero));
    }
}
