use thiserror::Error;

/// Integer arithmetic left the range of `i64`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
#[error("integer overflow")]
pub struct Overflow;

/// Stable machine-readable name of an error variant, as printed by the CLI
/// in `error=<code>` lines.
pub trait ErrorCode {
    fn code(&self) -> &'static str;
}

impl ErrorCode for Overflow {
    fn code(&self) -> &'static str {
        "Overflow"
    }
}
