//! Decompositions of natural numbers into sums of consecutive positive integers.
//!
//! Every odd divisor `k` of `n` determines exactly one decomposition of `n`,
//! and every decomposition arises from exactly one odd divisor. Centering `k`
//! terms on `n/k` gives a run of length `k`; when that run would dip to zero or
//! below, the non-positive terms cancel against their positive mirrors and an
//! even-length run of `2n/k` terms survives. Which case applies is decided by
//! the integer comparison `k*k < 2n`.
//!
//! The crate is `no_std` (it needs `alloc`) and holds only pure computation:
//!
//! * [`factor`]: odd part, odd divisors and odd-prime exponents by trial division.
//! * [`decomposition`]: the divisor/decomposition bijection and enumeration.
//! * [`spectrum`]: length spectra, extremal lengths and spectrum searches.
//! * [`classify`]: power-of-two / unique-nontrivial / general classification.
//! * [`oracle`]: an independent sliding-window enumerator used for verification.
//! * [`sieve`]: chunked range scan producing per-`n` statistics without factoring.
//! * [`render`]: ASCII diagrams of decompositions and the rectangle transformation.

#![no_std]
#![deny(unsafe_code)]
#![warn(missing_docs)]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod arith;
pub mod classify;
pub mod decomposition;
mod error;
pub mod factor;
pub mod oracle;
pub mod render;
pub mod sieve;
pub mod spectrum;

pub use classify::{classify, Classification, Kind};
pub use decomposition::{
    count_decompositions, decomposition_from_odd_divisor, enumerate_decompositions,
    odd_divisor_from_decomposition, Decomposition, Parity,
};
pub use error::{Error, Result};
pub use factor::{factor_odd, OddFactorization};
pub use oracle::{brute_force_decompositions, brute_force_decompositions_bounded, DEFAULT_ORACLE_LIMIT};
pub use spectrum::{
    find_spectrum_witness, has_only_odd_decompositions, length_spectrum, longest_length,
    max_possible_length, shortest_nontrivial_length, smallest_n_containing_length,
    smallest_n_with_spectrum_size, validate_spectrum, LengthSpectrum, SpectrumCheck,
    SpectrumReport,
};

/// Largest `n` accepted by the exact routines: `2^62`, so that `2n` and `k*k`
/// for any odd divisor `k < sqrt(2n)` stay inside `u64`.
pub const MAX_N: u64 = 1 << 62;
