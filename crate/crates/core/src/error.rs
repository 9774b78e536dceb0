use thiserror::Error;

/// Errors shared by the combinatorial codecs and truncation oracles.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("partition parts must be positive and weakly decreasing")]
    InvalidPartition,
    #[error("maya prefix must be strictly increasing")]
    NonIncreasingMaya,
    #[error("maya prefix does not stabilize to l_j = j (entry {entry} at position {position})")]
    NonStabilizingMaya { entry: i64, position: usize },
    #[error("weight mismatch: |lambda| = {lambda}, |mu| = {mu}")]
    WeightMismatch { lambda: u32, mu: u32 },
    #[error("truncation needs at least {needed} variables, got {got}")]
    TruncationTooSmall { needed: usize, got: usize },
    #[error("degree cap {cap} exceeded (requested {got})")]
    DegreeCapExceeded { cap: u32, got: u32 },
}
