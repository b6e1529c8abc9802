use thiserror::Error;

/// Default limit on the code length. Every engine enumerates up to `2^n`
/// objects.
pub const DEFAULT_SIZE_CAP: usize = 24;

/// Environment variable overriding [`DEFAULT_SIZE_CAP`]. Unsupported: raising
/// it trades memory and time for reach, and values above
/// [`crate::bits::MAX_WORD_LEN`] are clamped.
pub const SIZE_CAP_ENV: &str = "GHW_UNSUPPORTED_SIZE_CAP";

/// The active size cap.
#[must_use]
pub fn size_cap() -> usize {
    std::env::var(SIZE_CAP_ENV)
        .ok()
        .and_then(|v| v.trim().parse::<usize>().ok())
        .map_or(DEFAULT_SIZE_CAP, |v| v.min(crate::bits::MAX_WORD_LEN))
}

pub(crate) fn check_cap(what: &'static str, n: usize) -> Result<()> {
    let cap = size_cap();
    if n > cap {
        Err(Error::CapExceeded { what, n, cap })
    } else {
        Ok(())
    }
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("the generator matrix has rank 0")]
    ZeroCode,
    #[error("length {n} exceeds the size cap {cap}")]
    LengthCapExceeded { n: usize, cap: usize },
    #[error("{what}: size {n} exceeds the size cap {cap}")]
    CapExceeded { what: &'static str, n: usize, cap: usize },
    #[error("row {row} has length {found}, expected {expected}")]
    RaggedRows { row: usize, expected: usize, found: usize },
    #[error("invalid bitstring: {0}")]
    InvalidBitstring(String),
    #[error("word has length {found}, expected {expected}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("monomial ideal needs at least one variable")]
    EmptyAmbient,
    #[error("need at least 2 generators, found {found}")]
    TooFewGenerators { found: usize },
    #[error("code dimension {k} is below 2")]
    DimensionTooSmall { k: usize },
    #[error("invalid term order: {0}")]
    InvalidOrder(String),
    #[error("unsupported field characteristic {0} (expected a prime below 65536)")]
    UnsupportedCharacteristic(u32),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("proven property violated ({check}): {detail}")]
    ProvenViolation { check: String, detail: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
