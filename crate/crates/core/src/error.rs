use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("twist parameter n = {0} is excluded (n must not be 0 or -1)")]
    ExcludedTwist(i64),

    #[error("index {name} = {value} out of range 1..={max}")]
    IndexOutOfRange { name: &'static str, value: i64, max: i64 },

    #[error("N_max must be at least 1")]
    EmptySweep,

    #[error("unknown generator index {0}")]
    UnknownGenerator(usize),

    #[error("unknown generator name `{0}`")]
    UnknownGeneratorName(String),

    #[error("matrix is not unimodular: |det - 1| = {0:e}")]
    NotUnimodular(f64),

    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("relation violated: residual {residual:e} for relator {relator}")]
    RelationViolated { relator: usize, residual: f64 },

    #[error("chain complex is not acyclic in degree {degree}")]
    NotAcyclic { degree: usize },

    #[error("torsion undefined: {0}")]
    TorsionUndefined(String),

    #[error("pole at factor i = {i}: xi^(2i-1) = 1")]
    Pole { i: u64 },

    #[error("degenerate denominator det(g2 - 1) = 0; swap the generator roles")]
    DegenerateDenominator,

    #[error("generic engine capped at total dimension {cap}, got {got}")]
    EngineTooLarge { cap: usize, got: usize },

    #[error("gluing assertion failed: Klein-bottle factor {0} differs from 1")]
    KleinFactor(String),

    #[error("coefficient {0} is not an integer")]
    NonIntegralCoefficient(String),

    #[error("polynomial division left a nonzero remainder")]
    InexactDivision,

    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("{0}")]
    Classification(String),
}
