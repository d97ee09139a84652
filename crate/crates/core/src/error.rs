use thiserror::Error;

/// Errors produced by the library.
///
/// The CLI maps these onto exit codes: [`Error::Bound`] is a resource guard,
/// [`Error::Consistency`] an internal check that failed, everything else is
/// bad input.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("cannot parse {what} from {input:?}")]
    Parse { what: &'static str, input: String },

    #[error("parts must be weakly decreasing: {0:?}")]
    NotDecreasing(Vec<usize>),

    #[error("size mismatch: expected {expected}, found {found}")]
    SizeMismatch { expected: usize, found: usize },

    #[error("expected an even size, found {0}")]
    OddSize(usize),

    #[error("{0} is not a type C partition")]
    NotTypeC(String),

    #[error("invalid composition {entries:?}: {reason}")]
    InvalidComposition { entries: Vec<usize>, reason: String },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("resource bound exceeded: {0}")]
    Bound(String),

    #[error("consistency check failed: {0}")]
    Consistency(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
