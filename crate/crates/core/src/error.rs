use alloc::string::String;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("tree has no edges")]
    EmptyTree,
    #[error("not a tree: {0}")]
    NotATree(String),
    #[error("cyclic order at vertex {0} is not a permutation of its incident edges")]
    BadCyclicOrder(String),
    #[error("vertices {0} and {1} both have multiplicity > 1")]
    MultipleExceptional(String, String),
    #[error("duplicate id {0}")]
    DuplicateId(String),
    #[error("unknown id {0}")]
    UnknownId(String),
    #[error("hook label ({edge}, {vertex}) is not a label of the tree")]
    LabelNotInTree { edge: String, vertex: String },
    #[error("subset is not special: {0} is the syzygy of {1}")]
    NotSpecial(String, String),
    #[error("hook label ({edge}, {vertex}) is not in W")]
    LabelNotInW { edge: String, vertex: String },
    #[error("W is empty")]
    EmptyW,
    #[error("bad parameter: {0}")]
    BadParameter(String),
    #[error("{d} is not a divisor of {len} with {d} >= 2")]
    BadDivisor { d: usize, len: usize },
    #[error("invalid Kupisch series: {0}")]
    BadKupisch(String),
    #[error("invalid stable coordinate: {0}")]
    BadCoordinate(String),
    #[error("module is zero")]
    ZeroModule,
    #[error("{what} = {value} exceeds the bound {bound}")]
    BoundExceeded { what: &'static str, value: usize, bound: usize },
}
