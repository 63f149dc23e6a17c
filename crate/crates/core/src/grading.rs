//! Abelian grading groups and the two-cycles that twist commutativity.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::report::{Residual, ValidationReport};
use crate::scalar::{CyclotomicOrder, Scalar};

/// Z_{n1} x ... x Z_{nk}; the empty product is the trivial group.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GradingGroup {
    moduli: Vec<u32>,
}

/// Residues, always reduced.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct GroupElement(Vec<u32>);

impl GroupElement {
    pub fn residues(&self) -> &[u32] {
        &self.0
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(ToString::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl GradingGroup {
    pub fn new(moduli: Vec<u32>) -> Result<Self> {
        if let Some(m) = moduli.iter().find(|&&m| m < 2) {
            return Err(Error::InvalidGroup(format!("modulus {m} is below 2")));
        }
        Ok(Self { moduli })
    }

    pub fn trivial() -> Self {
        Self { moduli: vec![] }
    }

    pub fn moduli(&self) -> &[u32] {
        &self.moduli
    }

    pub fn rank(&self) -> usize {
        self.moduli.len()
    }

    pub fn cardinality(&self) -> u64 {
        self.moduli.iter().map(|&m| m as u64).product()
    }

    /// Reduces arbitrary integers into the group.
    pub fn element(&self, residues: &[i64]) -> Result<GroupElement> {
        if residues.len() != self.rank() {
            return Err(Error::GroupMismatch(format!(
                "expected {} residues, got {}",
                self.rank(),
                residues.len()
            )));
        }
        Ok(GroupElement(
            residues
                .iter()
                .zip(&self.moduli)
                .map(|(&r, &m)| r.rem_euclid(m as i64) as u32)
                .collect(),
        ))
    }

    pub fn zero(&self) -> GroupElement {
        GroupElement(vec![0; self.rank()])
    }

    pub fn contains(&self, e: &GroupElement) -> bool {
        e.0.len() == self.rank() && e.0.iter().zip(&self.moduli).all(|(&r, &m)| r < m)
    }

    pub fn check(&self, e: &GroupElement) -> Result<()> {
        if self.contains(e) {
            Ok(())
        } else {
            Err(Error::GroupMismatch(format!(
                "{e} is not an element of Z{:?}",
                self.moduli
            )))
        }
    }

    pub fn add(&self, a: &GroupElement, b: &GroupElement) -> GroupElement {
        GroupElement(
            a.0.iter()
                .zip(&b.0)
                .zip(&self.moduli)
                .map(|((&x, &y), &m)| (x + y) % m)
                .collect(),
        )
    }

    pub fn neg(&self, a: &GroupElement) -> GroupElement {
        GroupElement(
            a.0.iter()
                .zip(&self.moduli)
                .map(|(&x, &m)| (m - x) % m)
                .collect(),
        )
    }

    pub fn sub(&self, a: &GroupElement, b: &GroupElement) -> GroupElement {
        self.add(a, &self.neg(b))
    }

    pub fn sum<'a>(&self, items: impl IntoIterator<Item = &'a GroupElement>) -> GroupElement {
        items
            .into_iter()
            .fold(self.zero(), |acc, e| self.add(&acc, e))
    }

    /// Every element, in lexicographic order of residues.
    pub fn elements(&self) -> Vec<GroupElement> {
        let mut out = vec![self.zero()];
        for (i, &m) in self.moduli.iter().enumerate() {
            out = out
                .into_iter()
                .flat_map(|e| {
                    (0..m).map(move |r| {
                        let mut v = e.0.clone();
                        v[i] = r;
                        GroupElement(v)
                    })
                })
                .collect();
        }
        out
    }
}

/// rho(a, b) = z_N^(a^T E b) with E an integer matrix taken mod N.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwoCycle {
    group: GradingGroup,
    order: CyclotomicOrder,
    exponents: Vec<Vec<u32>>,
}

impl TwoCycle {
    /// Builds the cycle without checking the cocycle conditions; see
    /// [`TwoCycle::validate`].
    pub fn new(group: GradingGroup, order: CyclotomicOrder, exponents: &[Vec<i64>]) -> Result<Self> {
        let k = group.rank();
        if exponents.len() != k || exponents.iter().any(|r| r.len() != k) {
            return Err(Error::DimMismatch(format!(
                "exponent matrix must be {k}x{k} for a rank-{k} group"
            )));
        }
        let n = order.get() as i64;
        let exponents = exponents
            .iter()
            .map(|r| r.iter().map(|&e| e.rem_euclid(n) as u32).collect())
            .collect();
        Ok(Self {
            group,
            order,
            exponents,
        })
    }

    /// Like [`TwoCycle::new`] but rejects matrices that fail validation.
    pub fn new_validated(
        group: GradingGroup,
        order: CyclotomicOrder,
        exponents: &[Vec<i64>],
    ) -> Result<Self> {
        let cycle = Self::new(group, order, exponents)?;
        let report = cycle.validate();
        if report.passed() {
            Ok(cycle)
        } else {
            Err(Error::InvalidCocycle(report.to_string()))
        }
    }

    /// The trivial cycle rho = 1 over the trivial group.
    pub fn trivial(order: CyclotomicOrder) -> Self {
        Self {
            group: GradingGroup::trivial(),
            order,
            exponents: vec![],
        }
    }

    pub fn group(&self) -> &GradingGroup {
        &self.group
    }

    pub fn order(&self) -> CyclotomicOrder {
        self.order
    }

    pub fn exponent_matrix(&self) -> &[Vec<u32>] {
        &self.exponents
    }

    /// The k in rho(a, b) = z_N^k, reduced mod N.
    pub fn exponent(&self, a: &GroupElement, b: &GroupElement) -> u32 {
        let n = self.order.get() as u64;
        let mut acc = 0u64;
        for (i, &ai) in a.0.iter().enumerate() {
            if ai == 0 {
                continue;
            }
            for (j, &bj) in b.0.iter().enumerate() {
                acc += ai as u64 * self.exponents[i][j] as u64 * bj as u64;
            }
        }
        (acc % n) as u32
    }

    pub fn rho_eval(&self, a: &GroupElement, b: &GroupElement) -> Result<Scalar> {
        self.group.check(a)?;
        self.group.check(b)?;
        Ok(self.value(a, b))
    }

    /// rho(a, b) for elements already known to lie in the group.
    pub fn value(&self, a: &GroupElement, b: &GroupElement) -> Scalar {
        Scalar::zeta_pow(self.order, self.exponent(a, b) as i64)
    }

    /// Antisymmetry E_ij + E_ji = 0 and well-definedness n_i E_ij = n_j E_ij = 0, all mod N.
    pub fn validate(&self) -> ValidationReport {
        let mut report = ValidationReport::new("two-cycle");
        let n = self.order.get() as u64;
        let k = self.group.rank();
        for i in 0..k {
            for j in 0..k {
                let e = self.exponents[i][j] as u64;
                let anti = (e + self.exponents[j][i] as u64) % n;
                if i <= j && anti != 0 {
                    report.push("antisymmetry", &[i, j], Residual::Integer(anti as i64));
                }
                for (label, m) in [("well-definedness (left)", i), ("well-definedness (right)", j)] {
                    let w = (self.group.moduli[m] as u64 * e) % n;
                    if w != 0 {
                        report.push(label, &[i, j], Residual::Integer(w as i64));
                    }
                }
            }
        }
        report
    }

    /// Recovers the exponent matrix from the values of rho on chosen elements.
    ///
    /// `elements` must contain every standard generator; any further elements
    /// only add consistency constraints.
    pub fn from_matrix(
        group: GradingGroup,
        order: CyclotomicOrder,
        elements: &[GroupElement],
        values: &[Vec<Scalar>],
    ) -> Result<Self> {
        let m = elements.len();
        if values.len() != m || values.iter().any(|r| r.len() != m) {
            return Err(Error::DimMismatch(format!(
                "value table must be {m}x{m} for {m} elements"
            )));
        }
        for e in elements {
            group.check(e)?;
        }
        let mut exps = vec![vec![0u32; m]; m];
        for (p, row) in values.iter().enumerate() {
            for (q, v) in row.iter().enumerate() {
                if v.order() != order {
                    return Err(Error::OrderMismatch(order.get(), v.order().get()));
                }
                exps[p][q] = v.root_exponent().ok_or_else(|| Error::NotARoot {
                    value: v.to_string(),
                    order: order.get(),
                })?;
            }
        }
        let k = group.rank();
        let position = |i: usize| {
            elements.iter().position(|e| {
                e.0.iter()
                    .enumerate()
                    .all(|(t, &r)| r == u32::from(t == i))
            })
        };
        let mut matrix = vec![vec![0i64; k]; k];
        for i in 0..k {
            let pi = position(i).ok_or_else(|| {
                Error::InvalidCocycle(format!("generator {i} is missing from the element list"))
            })?;
            for j in 0..k {
                let pj = position(j).ok_or_else(|| {
                    Error::InvalidCocycle(format!("generator {j} is missing from the element list"))
                })?;
                matrix[i][j] = exps[pi][pj] as i64;
            }
        }
        let cycle = Self::new_validated(group, order, &matrix)?;
        for p in 0..m {
            for q in 0..m {
                if cycle.exponent(&elements[p], &elements[q]) != exps[p][q] {
                    return Err(Error::InvalidCocycle(format!(
                        "value at ({p}, {q}) is not bimultiplicative in the generators"
                    )));
                }
            }
        }
        Ok(cycle)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z2_cubed() -> GradingGroup {
        GradingGroup::new(vec![2, 2, 2]).unwrap()
    }

    #[test]
    fn elements_enumerate_the_group() {
        let g = GradingGroup::new(vec![2, 3]).unwrap();
        assert_eq!(g.elements().len(), 6);
        assert_eq!(g.cardinality(), 6);
        assert_eq!(GradingGroup::trivial().elements(), vec![GroupElement(vec![])]);
    }

    #[test]
    fn negation_and_sum() {
        let g = GradingGroup::new(vec![3, 4]).unwrap();
        let a = g.element(&[1, 3]).unwrap();
        assert_eq!(g.add(&a, &g.neg(&a)), g.zero());
        assert_eq!(g.element(&[-1, 5]).unwrap(), GroupElement(vec![2, 1]));
    }

    #[test]
    fn ill_defined_cycle_is_reported() {
        let g = GradingGroup::new(vec![3]).unwrap();
        let c = TwoCycle::new(g, CyclotomicOrder::new(2).unwrap(), &[vec![1]]).unwrap();
        let r = c.validate();
        assert!(!r.passed());
        assert!(r.violated_identities().iter().any(|i| i.starts_with("well-definedness")));
        assert!(r.of("antisymmetry").next().is_none());
    }

    #[test]
    fn asymmetric_exponents_are_reported() {
        let g = GradingGroup::new(vec![4, 4]).unwrap();
        let c = TwoCycle::new(g, CyclotomicOrder::new(4).unwrap(), &[vec![0, 1], vec![1, 0]]).unwrap();
        let r = c.validate();
        assert_eq!(r.of("antisymmetry").count(), 1);
    }

    #[test]
    fn rho_rejects_foreign_elements() {
        let c = TwoCycle::new(z2_cubed(), CyclotomicOrder::new(2).unwrap(), &vec![vec![0; 3]; 3]).unwrap();
        let bad = GroupElement(vec![0, 1]);
        assert!(matches!(c.rho_eval(&bad, &bad), Err(Error::GroupMismatch(_))));
    }

    #[test]
    fn recovers_exponents_from_sign_table() {
        let o = CyclotomicOrder::new(2).unwrap();
        let g = z2_cubed();
        let els: Vec<GroupElement> = [[1, 0, 0], [0, 1, 0], [0, 0, 1], [1, 1, 1]]
            .iter()
            .map(|r| g.element(r).unwrap())
            .collect();
        let signs = [[1, -1, -1, 1], [-1, 1, -1, 1], [-1, -1, 1, 1], [1, 1, 1, 1]];
        let values: Vec<Vec<Scalar>> = signs
            .iter()
            .map(|r| r.iter().map(|&s| Scalar::from_int(o, s)).collect())
            .collect();
        let c = TwoCycle::from_matrix(g, o, &els, &values).unwrap();
        assert_eq!(c.exponent_matrix(), &[vec![0, 1, 1], vec![1, 0, 1], vec![1, 1, 0]]);
    }

    #[test]
    fn non_root_values_are_rejected() {
        let o = CyclotomicOrder::new(2).unwrap();
        let g = GradingGroup::new(vec![2]).unwrap();
        let els = vec![g.element(&[1]).unwrap()];
        let err = TwoCycle::from_matrix(g, o, &els, &[vec![Scalar::from_int(o, 2)]]);
        assert!(matches!(err, Err(Error::NotARoot { .. })));
    }
}
