use alloc::string::String;
use core::fmt;

/// Everything that can go wrong in this crate.
///
/// Graphicality failures are not errors; they are reported through
/// [`Verdict`](crate::graphicality::Verdict) and
/// [`CertificateOutcome`](crate::bounds::CertificateOutcome).
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A term of the `v` / `v^k` syntax could not be read.
    Parse { token: String, reason: &'static str },
    /// A sequence must contain at least one value.
    Empty,
    /// Length above [`MAX_LEN`](crate::MAX_LEN).
    TooLong { len: usize },
    /// A value exceeds `n - 1` where the operation needs a simple-graph range.
    ValueOutOfRange { value: u32, n: usize },
    /// Two sequences that should be comparable have different lengths.
    LengthMismatch { left: usize, right: usize },
    /// Two sequences that should be comparable have different sums.
    SumMismatch { left: u64, right: u64 },
    /// `down_transfer` needs `d_i >= d_j + 2` at two valid positions.
    InvalidTransfer { from: usize, to: usize },
    /// The `D` function is undefined when the sum sits on `n*a` or `n*b`.
    NotApplicable,
    /// Any other violated precondition.
    Domain(&'static str),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Parse { token, reason } => write!(f, "bad term `{token}`: {reason}"),
            Error::Empty => f.write_str("sequence is empty"),
            Error::TooLong { len } => {
                write!(f, "sequence length {len} exceeds {}", crate::MAX_LEN)
            }
            Error::ValueOutOfRange { value, n } => {
                write!(f, "value {value} exceeds n-1 = {}", n.saturating_sub(1))
            }
            Error::LengthMismatch { left, right } => {
                write!(f, "length mismatch: {left} vs {right}")
            }
            Error::SumMismatch { left, right } => write!(f, "sum mismatch: {left} vs {right}"),
            Error::InvalidTransfer { from, to } => {
                write!(f, "no valid unit transfer from position {from} to {to}")
            }
            Error::NotApplicable => f.write_str("D function undefined: sum equals n*a or n*b"),
            Error::Domain(msg) => f.write_str(msg),
        }
    }
}

impl core::error::Error for Error {}
