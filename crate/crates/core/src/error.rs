use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("graph6 parse error at byte {offset}: {reason}")]
    Graph6 { offset: usize, reason: String },

    #[error("invalid argument: {0}")]
    Argument(String),

    #[error("numerical failure: {0}")]
    Numerical(String),

    /// The graph is not k-partially walk-regular; `length` is the first
    /// closed-walk length whose counts differ between vertices.
    #[error("not applicable: closed walks of length {length} are not equinumerous at every vertex")]
    NotWalkRegular { length: usize },

    #[error("not applicable: {0}")]
    Inapplicable(String),

    #[error("infeasible strongly regular parameters: {0}")]
    InfeasibleParameters(String),

    #[error("format error: {0}")]
    Format(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub(crate) fn arg(msg: impl Into<String>) -> Self {
        Error::Argument(msg.into())
    }

    pub(crate) fn inapplicable(msg: impl Into<String>) -> Self {
        Error::Inapplicable(msg.into())
    }
}
