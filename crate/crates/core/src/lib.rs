//! Exact structure-constant toolkit for graded ternary (3-rho-Lie) algebras,
//! their Hom and pre-Lie variants, bilinear forms, representations and the
//! constructions relating them. All arithmetic is exact over Q(z_N).

pub mod algebra;
pub mod axioms;
pub mod constructions;
pub mod error;
pub mod forms;
pub mod grading;
pub mod io;
pub mod linalg;
pub mod prelie;
pub mod report;
pub mod representations;
pub mod samples;
pub mod scalar;

mod conditions;

pub use algebra::{AlgebraKind, Algebra3Rho, GradedBasis, HomogeneousMap, TernaryBracket, Vector};
pub use error::{Error, Result};
pub use forms::{BilinearForm, Subspace};
pub use grading::{GradingGroup, GroupElement, TwoCycle};
pub use linalg::Matrix;
pub use report::{Residual, ValidationReport, Violation};
pub use scalar::{CyclotomicOrder, Scalar};
