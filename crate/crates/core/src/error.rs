use thiserror::Error;

use crate::linkpattern::Arc;

/// Failure to read a link pattern from text.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("malformed link pattern at byte {pos}: {msg}")]
    Malformed { pos: usize, msg: String },
    #[error("point {0} is an endpoint of more than one arc")]
    DuplicateEndpoint(usize),
    #[error("arc ({left},{right}) does not fit on points 1..={n}")]
    EndpointOutOfRange { left: usize, right: usize, n: usize },
    #[error("arc ({0},{0}) joins a point to itself")]
    DegenerateArc(usize),
}

/// Failure to read or validate a two-column tableau.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TableauError {
    #[error("row {row} has {len} entries; rows must hold one or two")]
    BadRowLength { row: usize, len: usize },
    #[error("row {row} has two entries but follows a one-entry row; not a partition shape")]
    NotPartitionShape { row: usize },
    #[error("entry {0} appears more than once")]
    RepeatedEntry(usize),
    #[error("entry {0} is missing; entries must be exactly 1..={1}")]
    MissingEntry(usize, usize),
    #[error("row {row} is not increasing: {left} then {right}")]
    RowNotIncreasing { row: usize, left: usize, right: usize },
    #[error("column {column} is not increasing at row {row}")]
    ColumnNotIncreasing { column: usize, row: usize },
    #[error("cannot read tableau entry {0:?}")]
    BadEntry(String),
    #[error("tableau is empty")]
    Empty,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Tableau(#[from] TableauError),
    #[error("arc {0} is not in the link pattern")]
    ArcAbsent(Arc),
    #[error("point {0} is not a fixed point")]
    NotFixed(usize),
    #[error("interval [{a},{b}] is not a valid sub-interval of 1..={n}")]
    BadInterval { a: usize, b: usize, n: usize },
    #[error("link pattern has no fixed point to complete")]
    NoFixedPoint,
    #[error("link pattern {0} is not maximal (it has a crossing or a fixed point under an arc)")]
    NotMaximal(String),
    #[error("rho = {0}; the direct algorithm needs rho >= 4")]
    RhoTooSmall(usize),
    #[error("patterns live in different sets: I({n1},{k1}) vs I({n2},{k2})")]
    Incomparable { n1: usize, k1: usize, n2: usize, k2: usize },
    #[error("cannot shift {n} points by {shift} into only {new_n} points")]
    ShiftTooSmall { n: usize, shift: usize, new_n: usize },
    #[error("{k} arcs do not fit on {n} points")]
    TooManyArcs { n: usize, k: usize },
    #[error("arcs {first} and {second} are not an admissible pair on [{s},{t}]")]
    NotAdmissible { first: Arc, second: Arc, s: usize, t: usize },
    #[error("n = {n} exceeds the size limit {max} for orbit-graph computations")]
    SizeLimit { n: usize, max: usize },
    #[error("{0} is not a vertex of the orbit graph")]
    NotInGraph(String),
    #[error("internal inconsistency: {0}")]
    Finding(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
