use thiserror::Error;

/// Errors raised by the series kernels, the combinatorial maps and the
/// enumerators.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("truncation orders differ: {left} vs {right}")]
    OrderMismatch { left: usize, right: usize },

    #[error("part size must be at least 1")]
    ZeroPartSize,

    #[error("{what} {requested} exceeds the configured cap {cap}")]
    CapExceeded {
        what: &'static str,
        requested: usize,
        cap: usize,
    },

    #[error("positions {0} and {1} are adjacent and both overlined")]
    AdjacentOverlines(usize, usize),

    #[error("invalid character {0:?} in decoration word (expected '0' or '1')")]
    InvalidWordChar(char),

    #[error("position {position} is outside 1..={len}")]
    PositionOutOfRange { position: usize, len: usize },

    #[error("invalid block partition: {0}")]
    InvalidPartition(String),

    #[error("decoration has {decoration} positions but the skeleton has {blocks} blocks")]
    DecorationLength { decoration: usize, blocks: usize },

    #[error("a tiling must cover at least the sentinel cell")]
    EmptyTiling,
}

pub type Result<T> = std::result::Result<T, Error>;
