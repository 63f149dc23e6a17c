use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(name = "colorlie", version, about = "Exact verification and constructions for graded ternary algebras")]
pub struct Cli {
    /// Machine-readable JSON on stdout instead of text.
    #[arg(long, global = true)]
    pub json: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check one or more structures on a file; exit 1 if any check fails.
    Verify {
        file: PathBuf,
        #[arg(required = true, value_enum)]
        checks: Vec<Check>,
        /// Form to check (needed when the file carries several).
        #[arg(long)]
        form: Option<String>,
        /// Algebra file for a representation that uses `algebra_ref`.
        #[arg(long)]
        algebra: Option<PathBuf>,
        /// Target algebra for `morphism`.
        #[arg(long)]
        target: Option<PathBuf>,
        /// Map file for `morphism`.
        #[arg(long)]
        map: Option<PathBuf>,
    },
    /// Build a new structure, re-verify it and write it out.
    Construct {
        #[arg(value_enum)]
        name: Construction,
        #[arg(required = true)]
        inputs: Vec<PathBuf>,
        #[arg(short, long)]
        output: Option<PathBuf>,
        /// Form of the first input to use.
        #[arg(long)]
        form: Option<String>,
        /// Form of the associative factor (tensor).
        #[arg(long)]
        assoc_form: Option<String>,
        /// Algebra file for a representation that uses `algebra_ref`.
        #[arg(long)]
        algebra: Option<PathBuf>,
    },
    /// Compute a basis of a solution space and re-verify every member.
    Solve {
        #[arg(value_enum)]
        kind: SolveKind,
        file: PathBuf,
        /// Group degree as comma-separated residues; `0` is the zero degree.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        degree: Option<Vec<i64>>,
        /// Restrict derivations to those antisymmetric for a form of this algebra file.
        #[arg(long)]
        antisymmetric: Option<PathBuf>,
        #[arg(long)]
        form: Option<String>,
        /// Random combinations sampled for non-degeneracy (form solvers).
        #[arg(long, default_value_t = 64)]
        samples: usize,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Summarise a file and every check that applies to it.
    Report {
        file: PathBuf,
        #[arg(long)]
        algebra: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Check {
    Lie,
    Hom,
    #[value(name = "prelie")]
    PreLie,
    Associative,
    Quadratic,
    Metric,
    Symplectic,
    Representation,
    #[value(name = "pre-representation")]
    PreRepresentation,
    #[value(name = "o-operator")]
    OOperator,
    #[value(name = "phase-space")]
    PhaseSpace,
    Morphism,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Construction {
    Twist,
    #[value(name = "twist3")]
    Twist3,
    Yau,
    Tensor,
    Semidirect,
    #[value(name = "dual-rep")]
    DualRep,
    Coadjoint,
    #[value(name = "double-metric")]
    DoubleMetric,
    Subadjacent,
    #[value(name = "prelie-from-symplectic")]
    PreLieFromSymplectic,
    #[value(name = "prelie-from-o-operator")]
    PreLieFromOOperator,
    #[value(name = "phase-space")]
    PhaseSpace,
    Fundamental,
    #[value(name = "symplectic-from-derivation")]
    SymplecticFromDerivation,
}

impl Construction {
    pub fn name(self) -> &'static str {
        match self {
            Construction::Twist => "twist",
            Construction::Twist3 => "twist3",
            Construction::Yau => "yau",
            Construction::Tensor => "tensor",
            Construction::Semidirect => "semidirect",
            Construction::DualRep => "dual-rep",
            Construction::Coadjoint => "coadjoint",
            Construction::DoubleMetric => "double-metric",
            Construction::Subadjacent => "subadjacent",
            Construction::PreLieFromSymplectic => "prelie-from-symplectic",
            Construction::PreLieFromOOperator => "prelie-from-o-operator",
            Construction::PhaseSpace => "phase-space",
            Construction::Fundamental => "fundamental",
            Construction::SymplecticFromDerivation => "symplectic-from-derivation",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SolveKind {
    Derivations,
    Centroid,
    Centromorphisms,
    #[value(name = "quadratic-forms")]
    QuadraticForms,
    #[value(name = "symplectic-forms")]
    SymplecticForms,
}

impl SolveKind {
    pub fn name(self) -> &'static str {
        match self {
            SolveKind::Derivations => "derivations",
            SolveKind::Centroid => "centroid",
            SolveKind::Centromorphisms => "centromorphisms",
            SolveKind::QuadraticForms => "quadratic-forms",
            SolveKind::SymplecticForms => "symplectic-forms",
        }
    }
}
