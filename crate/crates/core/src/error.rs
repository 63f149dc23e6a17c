use thiserror::Error;

use crate::report::ValidationReport;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("cyclotomic order must be positive, got {0}")]
    InvalidOrder(u32),
    #[error("scalars live in different fields: Q(z_{0}) vs Q(z_{1})")]
    OrderMismatch(u32, u32),
    #[error("division by zero")]
    DivisionByZero,
    #[error("cannot parse scalar {input:?}: {reason}")]
    ParseScalar { input: String, reason: String },
    #[error("invalid grading group: {0}")]
    InvalidGroup(String),
    #[error("group element mismatch: {0}")]
    GroupMismatch(String),
    #[error("{value} is not a power of z_{order}")]
    NotARoot { value: String, order: u32 },
    #[error("invalid two-cycle: {0}")]
    InvalidCocycle(String),
    #[error("dimension mismatch: {0}")]
    DimMismatch(String),
    #[error("invalid basis: {0}")]
    InvalidBasis(String),
    #[error("map is not homogeneous: {0}")]
    NotHomogeneous(String),
    #[error("wrong algebra kind: expected {expected}, found {found}")]
    KindMismatch { expected: String, found: String },
    #[error("input fails the 3-rho-Lie axioms: {0}")]
    NotLie(Box<ValidationReport>),
    #[error("input fails the 3-pre-rho-Lie axioms: {0}")]
    NotPreLie(Box<ValidationReport>),
    #[error("input fails the 3-associative axioms: {0}")]
    NotAssociative(Box<ValidationReport>),
    #[error("map is not in the centroid: {0}")]
    NotCentroid(Box<ValidationReport>),
    #[error("map is not an endomorphism: {0}")]
    NotEndomorphism(Box<ValidationReport>),
    #[error("not a representation: {0}")]
    NotARepresentation(Box<ValidationReport>),
    #[error("representation is not rho-skew-symmetric: {0}")]
    NotSkew(Box<ValidationReport>),
    #[error("not a representation of the pre-Lie algebra: {0}")]
    NotAPreRep(Box<ValidationReport>),
    #[error("not an O-operator: {0}")]
    NotAnOOperator(Box<ValidationReport>),
    #[error("form is not quadratic: {0}")]
    NotQuadratic(Box<ValidationReport>),
    #[error("form is not a metric: {0}")]
    NotAMetric(Box<ValidationReport>),
    #[error("form is not symplectic: {0}")]
    NotSymplectic(Box<ValidationReport>),
    #[error("form is degenerate")]
    DegenerateForm,
    #[error("map is not invertible: {0}")]
    NotInvertible(String),
    #[error("map is not an antisymmetric derivation: {0}")]
    NotAntisymmetricDerivation(Box<ValidationReport>),
    #[error("maps do not commute: {0}")]
    NonCommuting(String),
    #[error("construction output failed re-verification: {0}")]
    ClosureFailure(Box<ValidationReport>),
    #[error("{0}")]
    Precondition(String),
    #[error("invalid file: {0}")]
    Format(String),
}
