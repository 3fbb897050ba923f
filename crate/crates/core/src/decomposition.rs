//! The odd-divisor / decomposition bijection.

use alloc::vec::Vec;
use core::fmt;
use core::ops::RangeInclusive;

use crate::arith::below_threshold;
use crate::factor::factor_odd;
use crate::{Error, Result};

/// Odd or even number of terms.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Parity {
    /// Odd length.
    Odd,
    /// Even length.
    Even,
}

impl Parity {
    /// Lowercase label, `"odd"` or `"even"`.
    pub fn as_str(self) -> &'static str {
        match self {
            Parity::Odd => "odd",
            Parity::Even => "even",
        }
    }
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A run `start, start+1, ..., start+length-1` of positive integers summing to `target`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Decomposition {
    target: u64,
    start: u64,
    length: u64,
}

impl Decomposition {
    /// Builds the run of `length` terms beginning at `start`.
    pub fn new(start: u64, length: u64) -> Result<Self> {
        if start == 0 || length == 0 {
            return Err(Error::Zero);
        }
        // length * (2*start + length - 1) / 2
        let twice = start
            .checked_mul(2)
            .and_then(|s| s.checked_add(length - 1))
            .and_then(|s| s.checked_mul(length))
            .ok_or(Error::Overflow)?;
        Ok(Decomposition { target: twice / 2, start, length })
    }

    /// Like [`Decomposition::new`], but also checks that the run sums to `target`.
    pub fn with_target(target: u64, start: u64, length: u64) -> Option<Self> {
        Self::new(start, length).ok().filter(|d| d.target == target)
    }

    /// The number being decomposed.
    pub fn target(&self) -> u64 {
        self.target
    }

    /// First term.
    pub fn start(&self) -> u64 {
        self.start
    }

    /// Number of terms.
    pub fn length(&self) -> u64 {
        self.length
    }

    /// Last term.
    pub fn end(&self) -> u64 {
        self.start + self.length - 1
    }

    /// The terms in ascending order.
    pub fn terms(&self) -> RangeInclusive<u64> {
        self.start..=self.end()
    }

    /// Parity of the length.
    pub fn parity(&self) -> Parity {
        if self.length % 2 == 1 {
            Parity::Odd
        } else {
            Parity::Even
        }
    }

    /// Length one.
    pub fn is_trivial(&self) -> bool {
        self.length == 1
    }
}

impl fmt::Display for Decomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, t) in self.terms().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{t}")?;
        }
        f.write_str(")")
    }
}

fn check_odd_divisor(n: u64, k: u64) -> Result<()> {
    crate::arith::check_domain(n)?;
    if k == 0 || k.is_multiple_of(2) || !n.is_multiple_of(k) {
        return Err(Error::InvalidDivisor { n, k });
    }
    Ok(())
}

/// The decomposition of `n` associated with the odd divisor `k`.
///
/// For `k*k < 2n` the `k` terms centred on `n/k` are all positive. Otherwise
/// the centred run reaches zero or below; dropping the zero and cancelling
/// each negative term against its positive mirror leaves `2n/k` terms
/// starting at `(k-1)/2 - n/k + 1`.
pub fn decomposition_from_odd_divisor(n: u64, k: u64) -> Result<Decomposition> {
    check_odd_divisor(n, k)?;
    let q = n / k;
    let half = (k - 1) / 2;
    let (start, length) = if below_threshold(k, n) {
        (q - half, k)
    } else {
        (half - q + 1, 2 * q)
    };
    debug_assert!(Decomposition::with_target(n, start, length).is_some());
    Ok(Decomposition { target: n, start, length })
}

/// Inverse of [`decomposition_from_odd_divisor`]: the length if it is odd,
/// otherwise `2*start + length - 1` (which is `2a + m + 1` with `a = start - 1`).
pub fn odd_divisor_from_decomposition(dec: &Decomposition) -> u64 {
    if dec.length % 2 == 1 {
        dec.length
    } else {
        2 * dec.start + dec.length - 1
    }
}

/// All decompositions of `n`, one per odd divisor, in ascending divisor order.
pub fn enumerate_decompositions(n: u64) -> Result<Vec<Decomposition>> {
    let f = factor_odd(n)?;
    f.odd_divisors().iter().map(|&k| decomposition_from_odd_divisor(n, k)).collect()
}

/// Number of decompositions of `n`: the number of odd divisors, `prod (e_p + 1)`.
pub fn count_decompositions(n: u64) -> Result<u64> {
    let f = factor_odd(n)?;
    Ok(f.odd_prime_exponents().values().map(|&e| u64::from(e) + 1).product())
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;
    use alloc::string::ToString;

    fn run(start: u64, length: u64) -> Decomposition {
        Decomposition::new(start, length).unwrap()
    }

    #[test]
    fn forward_examples() {
        assert_eq!(decomposition_from_odd_divisor(45, 15).unwrap(), run(5, 6));
        assert_eq!(decomposition_from_odd_divisor(45, 3).unwrap(), run(14, 3));
        assert_eq!(decomposition_from_odd_divisor(20, 5).unwrap(), run(2, 5));
        assert_eq!(decomposition_from_odd_divisor(14, 7).unwrap(), run(2, 4));
        for n in [1, 2, 17, 1 << 40] {
            assert_eq!(decomposition_from_odd_divisor(n, 1).unwrap(), run(n, 1));
        }
    }

    #[test]
    fn forward_rejects_bad_divisors() {
        for k in [0, 2, 4, 7] {
            assert_eq!(decomposition_from_odd_divisor(45, k), Err(Error::InvalidDivisor { n: 45, k }));
        }
        assert_eq!(decomposition_from_odd_divisor(0, 1), Err(Error::Zero));
    }

    #[test]
    fn inverse_examples() {
        assert_eq!(odd_divisor_from_decomposition(&run(5, 6)), 15);
        assert_eq!(odd_divisor_from_decomposition(&run(22, 2)), 45);
        assert_eq!(odd_divisor_from_decomposition(&run(99, 1)), 1);
    }

    #[test]
    fn table_of_forty_five() {
        let got: Vec<(u64, u64)> =
            enumerate_decompositions(45).unwrap().iter().map(|d| (d.start(), d.length())).collect();
        assert_eq!(got, vec![(45, 1), (14, 3), (7, 5), (1, 9), (5, 6), (22, 2)]);
        assert_eq!(count_decompositions(45).unwrap(), 6);
    }

    #[test]
    fn fifteen_and_sixteen() {
        let got: Vec<(u64, u64)> =
            enumerate_decompositions(15).unwrap().iter().map(|d| (d.start(), d.length())).collect();
        assert_eq!(got, vec![(15, 1), (4, 3), (1, 5), (7, 2)]);
        assert_eq!(count_decompositions(15).unwrap(), 4);
        assert_eq!(enumerate_decompositions(16).unwrap(), vec![run(16, 1)]);
    }

    #[test]
    fn powers_of_two_have_one() {
        for j in 0..=62 {
            assert_eq!(count_decompositions(1u64 << j).unwrap(), 1);
        }
    }

    #[test]
    fn construction_and_display() {
        let d = run(2, 4);
        assert_eq!(d.target(), 14);
        assert_eq!(d.end(), 5);
        assert_eq!(d.parity(), Parity::Even);
        assert_eq!(d.to_string(), "(2, 3, 4, 5)");
        assert!(Decomposition::with_target(15, 2, 4).is_none());
        assert_eq!(Decomposition::new(0, 3), Err(Error::Zero));
        assert_eq!(Decomposition::new(u64::MAX, 2), Err(Error::Overflow));
    }

    #[test]
    fn round_trip_exhaustive_small() {
        for n in 1..=2000u64 {
            for k in (1..=n).step_by(2).filter(|k| n % k == 0) {
                let d = decomposition_from_odd_divisor(n, k).unwrap();
                assert_eq!(d.target(), n);
                assert_eq!(odd_divisor_from_decomposition(&d), k);
            }
        }
    }
}
