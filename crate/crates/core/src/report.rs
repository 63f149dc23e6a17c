//! Structured verification outcomes.

use std::fmt;

use crate::linalg::Matrix;
use crate::scalar::Scalar;

/// What was left over when an identity was evaluated on a tuple.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Residual {
    Integer(i64),
    Scalar(Scalar),
    Vector(Vec<Scalar>),
    Matrix(Matrix),
    Note(String),
}

impl fmt::Display for Residual {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Residual::Integer(v) => write!(f, "{v}"),
            Residual::Scalar(s) => write!(f, "{s}"),
            Residual::Vector(v) => {
                let parts: Vec<String> = v.iter().map(ToString::to_string).collect();
                write!(f, "({})", parts.join(", "))
            }
            Residual::Matrix(m) => {
                let rows: Vec<String> = m
                    .to_rows()
                    .iter()
                    .map(|r| {
                        let parts: Vec<String> = r.iter().map(ToString::to_string).collect();
                        format!("[{}]", parts.join(", "))
                    })
                    .collect();
                write!(f, "[{}]", rows.join(", "))
            }
            Residual::Note(s) => write!(f, "{s}"),
        }
    }
}

/// A single failed constraint: which identity, on which basis indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub identity: String,
    pub indices: Vec<usize>,
    pub residual: Residual,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} at {:?}: residual {}", self.identity, self.indices, self.residual)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ValidationReport {
    pub check: String,
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn new(check: impl Into<String>) -> Self {
        Self {
            check: check.into(),
            violations: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn push(&mut self, identity: &str, indices: &[usize], residual: Residual) {
        self.violations.push(Violation {
            identity: identity.to_string(),
            indices: indices.to_vec(),
            residual,
        });
    }

    /// Records a vector residual unless it vanishes.
    pub fn expect_zero_vector(&mut self, identity: &str, indices: &[usize], v: &[Scalar]) {
        if !v.iter().all(Scalar::is_zero) {
            self.push(identity, indices, Residual::Vector(v.to_vec()));
        }
    }

    pub fn expect_zero_scalar(&mut self, identity: &str, indices: &[usize], s: Scalar) {
        if !s.is_zero() {
            self.push(identity, indices, Residual::Scalar(s));
        }
    }

    pub fn expect_zero_matrix(&mut self, identity: &str, indices: &[usize], m: Matrix) {
        if !m.is_zero() {
            self.push(identity, indices, Residual::Matrix(m));
        }
    }

    pub fn absorb(&mut self, other: ValidationReport) {
        self.violations.extend(other.violations);
    }

    /// Violations of one named identity.
    pub fn of(&self, identity: &str) -> impl Iterator<Item = &Violation> {
        let identity = identity.to_string();
        self.violations.iter().filter(move |v| v.identity == identity)
    }

    /// Distinct identity names that were violated, in first-seen order.
    pub fn violated_identities(&self) -> Vec<&str> {
        let mut out: Vec<&str> = Vec::new();
        for v in &self.violations {
            if !out.contains(&v.identity.as_str()) {
                out.push(&v.identity);
            }
        }
        out
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.passed() {
            return write!(f, "{}: pass", self.check);
        }
        write!(
            f,
            "{}: {} violation(s); first: {}",
            self.check,
            self.violations.len(),
            self.violations[0]
        )
    }
}
