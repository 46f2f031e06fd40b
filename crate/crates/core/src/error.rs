use thiserror::Error;

/// Errors raised by the combinatorics engine.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("invalid pattern: {0}")]
    InvalidPattern(String),

    #[error("invalid path: {0}")]
    InvalidPath(String),

    #[error("path drops below height 0 at step index {index}")]
    BelowAxis { index: usize },

    /// The input contains a forbidden pattern; positions are 1-based.
    #[error("permutation contains {pattern} at positions ({})", join_positions(.positions))]
    ContainsPattern {
        pattern: String,
        positions: Vec<usize>,
    },

    #[error("expected a closed Dyck path: {0}")]
    NotClosedDyck(String),

    #[error("no {kind} weight defined at height {height}")]
    MissingWeight { kind: &'static str, height: usize },

    #[error("series has no invertible constant term")]
    NotInvertible,

    #[error("{what} {requested} exceeds the configured bound {bound}")]
    BoundExceeded {
        what: &'static str,
        requested: usize,
        bound: usize,
    },

    #[error("outside hypothesis: {0}")]
    OutOfHypothesis(String),

    #[error("half-power series cannot be read as a series in x: {0}")]
    HalfPowerResidue(String),

    #[error("independent evaluations disagree: {0}")]
    EvaluationMismatch(String),

    #[error("root isolation failed: {0}")]
    RootIsolation(String),

    #[error("parse error: {0}")]
    Parse(String),
}

fn join_positions(p: &[usize]) -> String {
    p.iter().map(|i| i.to_string()).collect::<Vec<_>>().join(",")
}

pub type Result<T> = std::result::Result<T, Error>;
