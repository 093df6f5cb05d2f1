use thiserror::Error;

/// Errors produced by the library.
///
/// The variants are grouped so front ends can map them onto distinct exit
/// statuses: input problems, parameter problems, resource guards and
/// internal bound violations.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("invalid network: {0}")]
    InvalidNetwork(String),

    #[error("invalid path: {0}")]
    InvalidPath(String),

    #[error("edge id {0} does not exist in the network")]
    DanglingEdge(usize),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("path enumeration exceeded the budget of {budget} paths")]
    PathBudgetExceeded { budget: usize },

    #[error("dynamic program table of {cells} cells exceeds the cap of {cap}")]
    TableBudgetExceeded { cells: usize, cap: usize },

    #[error("linear program of {rows}x{cols} exceeds the dimension cap of {cap} entries")]
    LpTooLarge {
        rows: usize,
        cols: usize,
        cap: usize,
    },

    #[error("epsilon must lie in (0, 1), got {0}")]
    EpsilonOutOfRange(f64),

    #[error(
        "initial dual length underflows (ln delta = {ln_delta:.3}); use a larger epsilon or a smaller length bound"
    )]
    DeltaUnderflow { ln_delta: f64 },

    #[error("iteration cap of {cap} exceeded; the proven iteration bound was violated")]
    IterationCapExceeded { cap: u64 },
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
