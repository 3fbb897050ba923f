//! Brute-force enumeration of decompositions by a sliding window over starts.
//!
//! Uses no divisor theory at all, so it can check the bijection independently.
//! `O(n)` time and `O(1)` extra space besides the output.

use alloc::vec::Vec;

use crate::{Decomposition, Error, Result};

/// Default largest `n` the oracle accepts.
pub const DEFAULT_ORACLE_LIMIT: u64 = 1_000_000;

/// [`brute_force_decompositions_bounded`] with [`DEFAULT_ORACLE_LIMIT`].
pub fn brute_force_decompositions(n: u64) -> Result<Vec<Decomposition>> {
    brute_force_decompositions_bounded(n, DEFAULT_ORACLE_LIMIT)
}

/// Every run of consecutive positive integers summing to `n`, ascending by start.
pub fn brute_force_decompositions_bounded(n: u64, bound: u64) -> Result<Vec<Decomposition>> {
    if n == 0 {
        return Err(Error::Zero);
    }
    if n > bound {
        return Err(Error::OracleBound { n, bound });
    }
    let mut found = Vec::new();
    // window is lo..hi (hi exclusive)
    let (mut lo, mut hi, mut sum) = (1u64, 1u64, 0u64);
    while lo <= n {
        while sum < n {
            sum += hi;
            hi += 1;
        }
        if sum == n {
            found.push(Decomposition::new(lo, hi - lo).expect("window is nonempty"));
        }
        sum -= lo;
        lo += 1;
    }
    Ok(found)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn pairs(n: u64) -> Vec<(u64, u64)> {
        brute_force_decompositions(n).unwrap().iter().map(|d| (d.start(), d.length())).collect()
    }

    #[test]
    fn small_cases() {
        assert_eq!(pairs(1), vec![(1, 1)]);
        assert_eq!(pairs(15), vec![(1, 5), (4, 3), (7, 2), (15, 1)]);
        assert_eq!(pairs(45), vec![(1, 9), (5, 6), (7, 5), (14, 3), (22, 2), (45, 1)]);
        assert_eq!(pairs(16), vec![(16, 1)]);
    }

    #[test]
    fn refuses_above_bound() {
        assert_eq!(brute_force_decompositions(0), Err(Error::Zero));
        assert_eq!(
            brute_force_decompositions(DEFAULT_ORACLE_LIMIT + 1),
            Err(Error::OracleBound { n: DEFAULT_ORACLE_LIMIT + 1, bound: DEFAULT_ORACLE_LIMIT })
        );
        assert_eq!(brute_force_decompositions_bounded(11, 10), Err(Error::OracleBound { n: 11, bound: 10 }));
        assert!(brute_force_decompositions_bounded(10, 10).is_ok());
    }

    #[test]
    fn every_run_sums_to_n() {
        for n in 1..=500 {
            for d in brute_force_decompositions(n).unwrap() {
                assert_eq!(d.terms().sum::<u64>(), n);
            }
        }
    }
}
