use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// An argument lies outside the domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// A checked precondition relating several arguments does not hold.
    #[error("precondition violated: {0}")]
    Precondition(String),

    /// The computation would exceed a configured size or effort limit.
    #[error("resource limit: {0}")]
    Resource(String),

    /// Malformed textual input. `position` is a 0-based character offset.
    #[error("parse error at {position}: {message}")]
    Parse { position: usize, message: String },

    /// The polynomial is not of the form `sX^d - r` with `r, s > 0`.
    #[error("not a binomial minimal polynomial: {0}")]
    NotBinomial(String),

    /// The binomial factors over the rationals, so it is not a minimal polynomial.
    #[error("reducible polynomial: {0}")]
    Reducible(String),

    /// Input outside what the operation covers (e.g. `q <= 1` for certificates).
    #[error("unsupported input: {0}")]
    Unsupported(String),
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn resource(msg: impl Into<String>) -> Self {
        Error::Resource(msg.into())
    }

    pub(crate) fn parse(position: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            position,
            message: msg.into(),
        }
    }

    /// Short machine-readable name of the error class.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::Domain(_) => "domain",
            Error::Precondition(_) => "precondition",
            Error::Resource(_) => "resource",
            Error::Parse { .. } => "parse",
            Error::NotBinomial(_) => "not_binomial",
            Error::Reducible(_) => "reducible",
            Error::Unsupported(_) => "unsupported",
        }
    }
}
