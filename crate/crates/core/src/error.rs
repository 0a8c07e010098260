use alloc::string::String;
use alloc::vec::Vec;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    /// A node or enumeration budget ran out; the answer is unknown, not negative.
    #[error("search budget of {limit} nodes exhausted")]
    BudgetExceeded { limit: u64 },
    #[error("palette of {colors} colors exceeds the supported maximum of 128")]
    PaletteOverflow { colors: usize },
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("edge {edge:?} carries {found} colors, fewer than the required {required}")]
    TooFewColors {
        edge: Vec<usize>,
        found: usize,
        required: usize,
    },
    #[error("length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },
    #[error("partition {partition} is not proper: vertices {u} and {v} share a part but their edge has that color")]
    ImproperPartition {
        partition: usize,
        u: usize,
        v: usize,
    },
    #[error("{what} of size {size} exceeds the configured limit {limit}")]
    ResourceLimit {
        what: &'static str,
        size: u128,
        limit: u128,
    },
    #[error("unsupported field order {0}: only prime powers up to 16 are available")]
    UnsupportedField(u32),
    #[error("strategy not applicable: {0}")]
    Inapplicable(String),
    #[error("no ({r},{s})-coloring of K_{vertices} without a monochromatic K_{n} exists")]
    NoColoring {
        n: u64,
        r: u64,
        s: u64,
        vertices: u64,
    },
}
