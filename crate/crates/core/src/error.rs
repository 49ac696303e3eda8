use alloc::string::String;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    /// Malformed serialized input; `offset` is the byte position of the problem.
    #[error("format error at byte {offset}: {reason}")]
    Format { offset: usize, reason: String },
    /// A precondition on an argument was violated.
    #[error("invalid argument: {0}")]
    Argument(String),
}

pub type Result<T> = core::result::Result<T, Error>;

pub(crate) fn format_err<T>(offset: usize, reason: &str) -> Result<T> {
    Err(Error::Format {
        offset,
        reason: reason.into(),
    })
}

pub(crate) fn arg_err<T>(reason: impl Into<String>) -> Result<T> {
    Err(Error::Argument(reason.into()))
}
