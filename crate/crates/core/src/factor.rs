//! Odd part, odd divisors and odd-prime exponents of `n`.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::arith::{below_threshold, check_domain, isqrt, odd_part, two_adic_valuation};
use crate::Result;

/// `n = 2^d * k_s` together with the ascending odd divisors `k_1 < ... < k_s`
/// and the split index `r`: the first `r` divisors satisfy `k*k < 2n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OddFactorization {
    n: u64,
    d: u32,
    odd_divisors: Vec<u64>,
    odd_prime_exponents: BTreeMap<u64, u32>,
    split_index_r: usize,
}

impl OddFactorization {
    /// The factored number.
    pub fn n(&self) -> u64 {
        self.n
    }

    /// 2-adic valuation of `n`.
    pub fn d(&self) -> u32 {
        self.d
    }

    /// Ascending odd divisors; first is 1, last is the odd part.
    pub fn odd_divisors(&self) -> &[u64] {
        &self.odd_divisors
    }

    /// Odd prime to exponent.
    pub fn odd_prime_exponents(&self) -> &BTreeMap<u64, u32> {
        &self.odd_prime_exponents
    }

    /// Number of odd divisors with `k*k < 2n` (the odd decompositions).
    pub fn split_index_r(&self) -> usize {
        self.split_index_r
    }

    /// `s`, the number of odd divisors.
    pub fn divisor_count(&self) -> usize {
        self.odd_divisors.len()
    }

    /// `k_s = n / 2^d`.
    pub fn odd_part(&self) -> u64 {
        *self.odd_divisors.last().expect("1 is always an odd divisor")
    }

    /// `2^(d+1)`, the 2-power shared by every even decomposition length.
    pub fn even_length_power(&self) -> u64 {
        // d <= 62 within the domain
        1u64 << (self.d + 1)
    }

    /// Odd divisors yielding odd decompositions (`k*k < 2n`).
    pub fn lower_divisors(&self) -> &[u64] {
        &self.odd_divisors[..self.split_index_r]
    }

    /// Odd divisors yielding even decompositions (`k*k > 2n`).
    pub fn upper_divisors(&self) -> &[u64] {
        &self.odd_divisors[self.split_index_r..]
    }
}

/// Odd prime factorization of the odd part of `n`, by trial division.
pub fn odd_prime_factors(odd: u64) -> BTreeMap<u64, u32> {
    debug_assert!(odd % 2 == 1);
    let mut rest = odd;
    let mut exps = BTreeMap::new();
    let mut p = 3u64;
    let mut limit = isqrt(rest);
    while p <= limit {
        if rest.is_multiple_of(p) {
            let mut e = 0;
            while rest.is_multiple_of(p) {
                rest /= p;
                e += 1;
            }
            exps.insert(p, e);
            limit = isqrt(rest);
        }
        p += 2;
    }
    if rest > 1 {
        exps.insert(rest, 1);
    }
    exps
}

/// Factors `n` into its 2-power and odd part and lists the odd divisors.
pub fn factor_odd(n: u64) -> Result<OddFactorization> {
    check_domain(n)?;
    let d = two_adic_valuation(n);
    let odd = odd_part(n);
    let exps = odd_prime_factors(odd);

    let mut divisors = Vec::with_capacity(exps.values().map(|&e| e as usize + 1).product());
    divisors.push(1u64);
    for (&p, &e) in &exps {
        let len = divisors.len();
        let mut pk = 1u64;
        for _ in 0..e {
            pk *= p;
            for i in 0..len {
                divisors.push(divisors[i] * pk);
            }
        }
    }
    divisors.sort_unstable();

    let split_index_r = divisors.partition_point(|&k| below_threshold(k, n));
    Ok(OddFactorization { n, d, odd_divisors: divisors, odd_prime_exponents: exps, split_index_r })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{Error, MAX_N};
    use alloc::vec;

    #[test]
    fn forty_five() {
        let f = factor_odd(45).unwrap();
        assert_eq!(f.d(), 0);
        assert_eq!(f.odd_divisors(), &[1, 3, 5, 9, 15, 45]);
        assert_eq!(f.odd_prime_exponents().iter().map(|(&p, &e)| (p, e)).collect::<Vec<_>>(), vec![(3, 2), (5, 1)]);
        assert_eq!(f.split_index_r(), 4);
    }

    #[test]
    fn unit() {
        let f = factor_odd(1).unwrap();
        assert_eq!(f.d(), 0);
        assert_eq!(f.odd_divisors(), &[1]);
        assert!(f.odd_prime_exponents().is_empty());
        assert_eq!(f.split_index_r(), 1);
    }

    #[test]
    fn twenty() {
        let f = factor_odd(20).unwrap();
        assert_eq!(f.d(), 2);
        assert_eq!(f.odd_divisors(), &[1, 5]);
        assert_eq!(f.odd_prime_exponents().get(&5), Some(&1));
        assert_eq!(f.split_index_r(), 2);
        assert_eq!(f.even_length_power(), 8);
    }

    #[test]
    fn rejects_out_of_domain() {
        assert_eq!(factor_odd(0), Err(Error::Zero));
        assert_eq!(factor_odd(MAX_N + 1), Err(Error::OutOfRange { n: MAX_N + 1 }));
    }

    #[test]
    fn large_inputs() {
        let f = factor_odd(MAX_N).unwrap();
        assert_eq!(f.d(), 62);
        assert_eq!(f.odd_divisors(), &[1]);
        // 3^39 < 2^62
        let n = 3u64.pow(39);
        let f = factor_odd(n).unwrap();
        assert_eq!(f.divisor_count(), 40);
        assert_eq!(f.odd_part(), n);
    }

    #[test]
    fn invariants_small_range() {
        for n in 1..=3000u64 {
            let f = factor_odd(n).unwrap();
            let divs = f.odd_divisors();
            assert_eq!(divs[0], 1);
            assert_eq!(f.odd_part(), n >> n.trailing_zeros());
            assert!(divs.windows(2).all(|w| w[0] < w[1]));
            assert!(divs.iter().all(|&k| k % 2 == 1 && n % k == 0));
            let brute = (1..=n).step_by(2).filter(|k| n % k == 0).count();
            assert_eq!(divs.len(), brute);
            let prod: usize = f.odd_prime_exponents().values().map(|&e| e as usize + 1).product();
            assert_eq!(prod, divs.len());
            assert!(f.split_index_r() >= 1 && f.split_index_r() <= divs.len());
            for (i, &k) in divs.iter().enumerate() {
                assert_ne!(k * k, 2 * n);
                assert_eq!(i < f.split_index_r(), k * k < 2 * n);
            }
        }
    }
}
