use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// An argument is outside the domain of the operation.
    #[error("{0}")]
    Domain(String),

    #[error("cannot parse {what} from {token:?}: {reason}")]
    Parse {
        what: &'static str,
        token: String,
        reason: String,
    },

    #[error("class {label} at n = {n} is over the enumeration budget (cap n = {cap}); set ULAM_BUDGET to raise it")]
    Budget { label: String, n: usize, cap: usize },

    #[error("no closed form is known for class {0}")]
    NoClosedForm(String),

    #[error("count does not fit in 128 bits")]
    Overflow,
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Domain(msg.into()))
}
