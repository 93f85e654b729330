use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Error)]
pub enum Error {
    #[error("series has no nonzero coefficient above the tolerance")]
    NoHermiteRank,

    #[error("chaos cutoff {cutoff} exceeds the stored maximum degree {max_degree}")]
    CutoffOutOfRange { cutoff: usize, max_degree: usize },

    #[error("time parameter must be nonnegative, got {0}")]
    NegativeTime(f64),

    #[error("Gauss-Hermite quadrature did not stabilise: node counts {nodes} and {nodes_doubled} disagree by {discrepancy:.3e} (tolerance {tolerance:.3e})")]
    QuadratureDivergence {
        nodes: usize,
        nodes_doubled: usize,
        discrepancy: f64,
        tolerance: f64,
    },

    #[error("memory parameter must lie in (0, 1/2), got {0}")]
    MemoryParameterRange(f64),

    #[error("tap truncation {tail} must be much larger than the partial-sum cutoff {cutoff}")]
    TailTooShort { tail: usize, cutoff: usize },

    #[error("estimated cost {estimate} operations exceeds the budget of {budget}")]
    Budget { estimate: u128, budget: u128 },

    #[error("total diagram degree {total} exceeds the enumeration cap of {cap}")]
    DegreeCap { total: usize, cap: usize },

    #[error("group elements have different truncation levels: {left} vs {right}")]
    LevelMismatch { left: usize, right: usize },

    #[error("variation exponent must be greater than 2, got {0}")]
    VariationExponent(f64),

    #[error("tensor dimension {0} exceeds the supported maximum of 8")]
    DimensionCap(usize),

    #[error("covariance matrix is not positive semidefinite: smallest eigenvalue {0:.3e}")]
    NotPositiveSemidefinite(f64),

    #[error("invalid configuration:\n{}", .0.join("\n"))]
    Config(Vec<String>),

    #[error("{0}")]
    Invalid(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
