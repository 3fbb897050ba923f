use core::fmt;

/// Errors raised by the exact routines.
#[allow(missing_docs)]
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// `n = 0`; natural numbers start at 1.
    Zero,
    /// `n` is above [`crate::MAX_N`].
    OutOfRange { n: u64 },
    /// `k` is zero, even, or does not divide `n`.
    InvalidDivisor { n: u64, k: u64 },
    /// The brute-force oracle refuses inputs above its bound.
    OracleBound { n: u64, bound: u64 },
    /// An intermediate value does not fit in 64 bits.
    Overflow,
    /// A spectrum candidate set was empty.
    EmptySet,
    /// `k = 1` has no rectangle to transform.
    NothingToTransform { n: u64 },
}

/// Result alias for this crate.
pub type Result<T> = core::result::Result<T, Error>;

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Zero => f.write_str("n must be a positive integer"),
            Error::OutOfRange { n } => {
                write!(f, "n = {n} exceeds the supported bound 2^62")
            }
            Error::InvalidDivisor { n, k } => {
                write!(f, "{k} is not an odd divisor of {n}")
            }
            Error::OracleBound { n, bound } => {
                write!(f, "brute-force oracle refuses n = {n} (bound {bound})")
            }
            Error::Overflow => f.write_str("arithmetic overflow"),
            Error::EmptySet => f.write_str("candidate set is empty"),
            Error::NothingToTransform { n } => {
                write!(f, "k = 1 leaves the {n} x 1 column unchanged; nothing to transform")
            }
        }
    }
}

impl core::error::Error for Error {}
