use thiserror::Error;

/// Errors raised by the seaweed algebra, quasi-local LCS and spliced alignment.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("index ({i}, {j}) out of range for width {width}")]
    IndexOutOfRange { i: usize, j: usize, width: usize },

    #[error("operand sizes differ: {left} vs {right}")]
    SizeMismatch { left: usize, right: usize },

    #[error(
        "factor window [{start}, {end}) lies outside the column line [{line_start}, {line_end})"
    )]
    WindowOutOfRange {
        start: i64,
        end: i64,
        line_start: i64,
        line_end: i64,
    },

    #[error("interval [{lo}, {hi}] is invalid for a string of length {len}")]
    InvalidInterval { lo: usize, hi: usize, len: usize },

    #[error("reserved padding byte 0x{0:02x} occurs in the reference string")]
    ReservedByte(u8),

    #[error("no matrix stored for interval [{lo}, {hi}]")]
    UnknownInterval { lo: usize, hi: usize },

    #[error("vector length {got} does not match width + 1 = {expected}")]
    VectorLength { got: usize, expected: usize },

    #[error("score vector is not non-decreasing with unit steps at position {0}")]
    NotUnitStep(usize),

    #[error("oracle input too large: {len} exceeds the limit {limit}")]
    OracleTooLarge { len: usize, limit: usize },

    #[error("{0}")]
    Invalid(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
