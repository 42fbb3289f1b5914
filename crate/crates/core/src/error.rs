use thiserror::Error;

/// Errors raised by the arithmetic, combinatorics and poset layers.
///
/// Mathematical mismatches are not errors: they are reported through
/// [`crate::harness::Report`].
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("degenerate denominator 1 - q^{i} t^{m} = 0 at q={q}, t={t}")]
    DegenerateDenominator {
        i: u32,
        m: u32,
        q: String,
        t: String,
    },
    #[error("invalid specialization point: {0}")]
    InvalidPoint(String),
    #[error("invalid monomial: {0}")]
    InvalidMonomial(String),
    #[error("truncation degrees differ: {left} vs {right}")]
    TruncationMismatch { left: u32, right: u32 },
    #[error("cell ({i},{j}) is outside the diagram")]
    CellOutsideDiagram { i: i32, j: i32 },
    #[error("N = {n} is smaller than the largest part {largest}")]
    NTooSmall { n: u32, largest: u32 },
    #[error("infeasible profile: {0}")]
    InfeasibleProfile(String),
    #[error("{alpha:?} / {beta:?} is not a horizontal strip")]
    NotAHorizontalStrip { alpha: Vec<u32>, beta: Vec<u32> },
    #[error("singular Gram system")]
    SingularGram,
    #[error("invalid specification: {0}")]
    InvalidSpec(String),
    #[error("saturated chains to the maximum disagree in length: {0}")]
    InconsistentChainLengths(String),
    #[error("coloring extension failed: {0}")]
    ExtensionFailed(String),
    #[error("ambiguous hook monomial: {0}")]
    AmbiguousHook(String),
    #[error("rank parity violated: {0}")]
    ParityViolation(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("configuration error: {0}")]
    Config(String),
}

pub type Result<T> = std::result::Result<T, Error>;
