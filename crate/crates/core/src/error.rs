use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{what} out of range: {value} (limit {limit})")]
    OutOfRange {
        what: &'static str,
        value: u64,
        limit: u64,
    },

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("graph is disconnected")]
    Disconnected,

    #[error("({0}, {1}) is not an edge")]
    NotAnEdge(usize, usize),

    #[error("bad parameters: {0}")]
    BadParams(String),

    #[error("{0} is not realizable as a Mostar index of a simple connected graph")]
    NotRealizable(u64),

    #[error("no chemical graph with Mostar index {0} is known")]
    Unknown(u64),

    #[error("{0} is odd; tree Mostar indices are always even")]
    OddTarget(u64),

    #[error("certification failed for {family}: expected Mostar index {expected}, computed {computed}")]
    CertificationFailure {
        family: &'static str,
        expected: u64,
        computed: u64,
    },

    #[error("malformed record: {0}")]
    MalformedRecord(String),

    #[error("empty graph stream")]
    EmptyStream,

    #[error("graph stream mixes orders {0} and {1}")]
    MixedOrder(usize, usize),

    #[error("unknown verification suite '{0}'")]
    UnknownSuite(String),
}

impl Error {
    pub(crate) fn out_of_range(what: &'static str, value: usize, limit: usize) -> Self {
        Error::OutOfRange {
            what,
            value: value as u64,
            limit: limit as u64,
        }
    }
}
