//! Error type shared by every module of the crate.

use thiserror::Error;

/// Errors raised while building graphs, partitions, quotients and reports.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("edge {u}-{u} is a loop")]
    LoopEdge { u: usize },
    #[error("edge {u}-{v} appears more than once")]
    DuplicateEdge { u: usize, v: usize },
    #[error("vertex {vertex} is out of range for a graph with {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("edge id {edge} is out of range for a graph with {m} edges")]
    EdgeOutOfRange { edge: usize, m: usize },
    #[error("weight table has {got} entries, expected {expected}")]
    WeightLength { expected: usize, got: usize },
    #[error("`{0}` is not a nonnegative decimal weight")]
    BadWeight(String),
    #[error("graph is disconnected")]
    Disconnected,
    #[error("partition does not cover the edge set exactly once")]
    PartitionNotCovering,
    #[error("grouping does not assign a group to every class")]
    IncompleteGrouping,
    #[error("partition is not coarser than the Theta*-partition")]
    InvalidCPartition,
    #[error("index kind {0} has no cut decomposition")]
    UnsupportedKind(&'static str),
    #[error("arithmetic overflow while accumulating an index value")]
    Overflow,
    #[error("quotient by direction class {label} is not a tree")]
    NotATree { label: u8 },
    #[error("hexagon cells do not form a connected region")]
    DisconnectedCells,
    #[error("hexagon cell ({q}, {r}) is listed twice")]
    DuplicateCell { q: i64, r: i64 },
    #[error("hexagon spec is empty")]
    EmptySpec,
    #[error("cell set is not catacondensed: a lattice vertex lies in three hexagons")]
    NotCatacondensed,
    #[error("hexagon adjacency graph is not a tree")]
    CellsNotTree,
    #[error("n = {n} is too small, need n >= 2")]
    NTooSmall { n: usize },
    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: message.into(),
        }
    }
}
