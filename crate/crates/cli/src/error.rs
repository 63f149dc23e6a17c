use std::path::PathBuf;

use colorlie::{Error, ValidationReport};
use thiserror::Error as ThisError;

#[derive(Debug, ThisError)]
pub enum CliError {
    #[error("{}: {source}", path.display())]
    Read { path: PathBuf, source: std::io::Error },
    #[error("{}: {source}", path.display())]
    Write { path: PathBuf, source: std::io::Error },
    #[error("{}: {source}", path.display())]
    Input { path: PathBuf, source: Error },
    #[error(transparent)]
    Core(#[from] Error),
    #[error("{0}")]
    Usage(String),
}

impl CliError {
    /// The report behind a failed verification, if this is one.
    pub fn report(&self) -> Option<&ValidationReport> {
        let e = match self {
            CliError::Core(e) | CliError::Input { source: e, .. } => e,
            _ => return None,
        };
        match e {
            Error::NotLie(r)
            | Error::NotPreLie(r)
            | Error::NotAssociative(r)
            | Error::NotCentroid(r)
            | Error::NotEndomorphism(r)
            | Error::NotARepresentation(r)
            | Error::NotSkew(r)
            | Error::NotAPreRep(r)
            | Error::NotAnOOperator(r)
            | Error::NotQuadratic(r)
            | Error::NotAMetric(r)
            | Error::NotSymplectic(r)
            | Error::NotAntisymmetricDerivation(r)
            | Error::ClosureFailure(r) => Some(r),
            _ => None,
        }
    }

    /// 1 for a failed verification, 2 for anything wrong with the input.
    pub fn exit_code(&self) -> i32 {
        if self.report().is_some() {
            1
        } else {
            2
        }
    }
}

pub type Result<T> = std::result::Result<T, CliError>;
