use thiserror::Error;

/// Errors raised across the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} never reaches the root")]
    CycleDetected { vertex: usize },

    #[error("bad domain: {0}")]
    BadDomain(String),

    #[error("the bare root has no record decomposition or record code")]
    EmptyTree,

    #[error("bonsai {bonsai} is attached to {target}, which is neither the root nor a vertex of an earlier bonsai")]
    DanglingAttachment { bonsai: usize, target: usize },

    #[error("invalid bonsai: {0}")]
    InvalidBonsai(String),

    #[error("code entry {value} at position {position} is outside [0, {order}]")]
    EntryOutOfRange {
        position: usize,
        value: usize,
        order: usize,
    },

    #[error("code of order {order} must have {expected} entries, got {got}")]
    BadCodeLength {
        order: usize,
        expected: usize,
        got: usize,
    },

    #[error("k = {k} is outside [1, {n}]")]
    KOutOfRange { n: usize, k: usize },

    #[error("tree is not a path graph")]
    NotAPath,

    #[error("path graph does not have endpoints 0 and {n}")]
    WrongEndpoints { n: usize },

    #[error("car {car} prefers spot {preference}, outside [1, {n}]")]
    PreferenceOutOfRange {
        car: usize,
        preference: usize,
        n: usize,
    },

    #[error("not a parking function: car {car} finds no free spot")]
    NotAParkingFunction { car: usize },

    #[error("not a permutation: {0}")]
    NotAPermutation(String),

    #[error("family {family} is not defined on the {side} side")]
    SideMismatch { family: String, side: String },

    #[error("unknown family {0:?}")]
    UnknownFamily(String),

    #[error("bad shard: {0}")]
    Shard(String),

    #[error("parse error at line {line}, token {position}: {message}")]
    Parse {
        line: usize,
        position: usize,
        message: String,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
