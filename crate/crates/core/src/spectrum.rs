//! Length spectra: the set of lengths of all decompositions of `n`.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;
use core::fmt;

use crate::arith::{check_domain, isqrt_u128, triangular};
use crate::factor::{factor_odd, OddFactorization};
use crate::sieve::Scanner;
use crate::{count_decompositions, Error, Result, MAX_N};

/// Decomposition lengths of `n`, split by parity. Both lists are ascending.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LengthSpectrum {
    n: u64,
    d: u32,
    odd_lengths: Vec<u64>,
    even_lengths: Vec<u64>,
}

impl LengthSpectrum {
    /// The number whose spectrum this is.
    pub fn n(&self) -> u64 {
        self.n
    }

    /// 2-adic valuation of `n`.
    pub fn d(&self) -> u32 {
        self.d
    }

    /// Lengths `k` for odd divisors with `k*k < 2n`.
    pub fn odd_lengths(&self) -> &[u64] {
        &self.odd_lengths
    }

    /// Lengths `2n/k` for odd divisors with `k*k > 2n`.
    pub fn even_lengths(&self) -> &[u64] {
        &self.even_lengths
    }

    /// Total number of lengths (equal to the number of odd divisors).
    pub fn len(&self) -> usize {
        self.odd_lengths.len() + self.even_lengths.len()
    }

    /// Never true; `1` is always a length.
    pub fn is_empty(&self) -> bool {
        false
    }

    /// All lengths, ascending.
    pub fn lengths(&self) -> Vec<u64> {
        let mut all: Vec<u64> = self.odd_lengths.iter().chain(&self.even_lengths).copied().collect();
        all.sort_unstable();
        all
    }

    /// Whether `m` is a length.
    pub fn contains(&self, m: u64) -> bool {
        let side = if m % 2 == 1 { &self.odd_lengths } else { &self.even_lengths };
        side.binary_search(&m).is_ok()
    }

    /// Largest length.
    pub fn max(&self) -> u64 {
        let odd = *self.odd_lengths.last().expect("1 is always a length");
        self.even_lengths.last().map_or(odd, |&e| e.max(odd))
    }

    /// Smallest length above 1.
    pub fn min_nontrivial(&self) -> Option<u64> {
        let odd = self.odd_lengths.get(1).copied();
        let even = self.even_lengths.first().copied();
        match (odd, even) {
            (Some(a), Some(b)) => Some(a.min(b)),
            (a, b) => a.or(b),
        }
    }
}

fn spectrum_of(f: &OddFactorization) -> LengthSpectrum {
    let n = f.n();
    let odd_lengths = f.lower_divisors().to_vec();
    // upper divisors ascend, so 2n/k descends
    let even_lengths = f.upper_divisors().iter().rev().map(|&k| 2 * (n / k)).collect();
    LengthSpectrum { n, d: f.d(), odd_lengths, even_lengths }
}

/// The length spectrum of `n`.
pub fn length_spectrum(n: u64) -> Result<LengthSpectrum> {
    Ok(spectrum_of(&factor_odd(n)?))
}

/// Longest decomposition length: `max{k_r, 2n/k_(r+1)}`, just `k_r` when
/// every decomposition is odd.
pub fn longest_length(n: u64) -> Result<u64> {
    let f = factor_odd(n)?;
    let k_r = *f.lower_divisors().last().expect("r >= 1");
    Ok(match f.upper_divisors().first() {
        Some(&k_next) => k_r.max(2 * (n / k_next)),
        None => k_r,
    })
}

/// Shortest nontrivial length: `min{k_2, 2^(d+1)}`, absent for powers of two.
pub fn shortest_nontrivial_length(n: u64) -> Result<Option<u64>> {
    let f = factor_odd(n)?;
    Ok(f.odd_divisors().get(1).map(|&k2| k2.min(f.even_length_power())))
}

/// True iff the odd part of `n` is below `2^(d+1)`, i.e. no decomposition is even.
pub fn has_only_odd_decompositions(n: u64) -> Result<bool> {
    check_domain(n)?;
    let d = n.trailing_zeros();
    Ok((n >> d) < (1u64 << (d + 1)))
}

/// `floor((isqrt(8n+1) - 1) / 2)`: no length of `n` exceeds this.
pub fn max_possible_length(n: u64) -> Result<u64> {
    check_domain(n)?;
    let root = isqrt_u128(8 * u128::from(n) + 1);
    Ok(((root - 1) / 2) as u64)
}

/// Smallest `n` having `m` as a length: the triangular number `m(m+1)/2`.
pub fn smallest_n_containing_length(m: u64) -> Result<u64> {
    if m == 0 {
        return Err(Error::Zero);
    }
    match triangular(m) {
        Some(t) if t <= MAX_N => Ok(t),
        _ => Err(Error::Overflow),
    }
}

/// Smallest `n <= search_limit` with exactly `s` decompositions, by direct scan.
pub fn smallest_n_with_spectrum_size(s: u64, search_limit: u64) -> Option<u64> {
    if s == 0 {
        return None;
    }
    (1..=search_limit.min(MAX_N)).find(|&n| count_decompositions(n).ok() == Some(s))
}

/// Which necessary condition a [`SpectrumCheck`] covers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SpectrumCheck {
    /// `1` must be a member (the trivial decomposition).
    ContainsOne,
    /// Every even member has the same 2-adic valuation `v`.
    EvenValuation,
    /// With `d = v - 1`, each even member `e` comes from an odd divisor whose
    /// cofactor `e / 2^v` is itself an odd length, so it must be a member.
    EvenCofactors,
    /// The largest member `m` needs `n >= m(m+1)/2` within the 64-bit domain.
    TriangularBound,
    /// Odd members are the small odd divisors of one odd part, so every
    /// divisor of an odd member is a member too.
    OddDivisorClosure,
}

impl SpectrumCheck {
    /// Every check, in report order.
    pub const ALL: [SpectrumCheck; 5] = [
        SpectrumCheck::ContainsOne,
        SpectrumCheck::EvenValuation,
        SpectrumCheck::EvenCofactors,
        SpectrumCheck::TriangularBound,
        SpectrumCheck::OddDivisorClosure,
    ];

    /// Short machine-friendly name.
    pub fn name(self) -> &'static str {
        match self {
            SpectrumCheck::ContainsOne => "contains_one",
            SpectrumCheck::EvenValuation => "even_valuation",
            SpectrumCheck::EvenCofactors => "even_cofactors",
            SpectrumCheck::TriangularBound => "triangular_bound",
            SpectrumCheck::OddDivisorClosure => "odd_divisor_closure",
        }
    }
}

impl fmt::Display for SpectrumCheck {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Outcome of [`validate_spectrum`]. Passing every check does not prove the
/// set is realized by some `n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpectrumReport {
    /// Candidate members, ascending and deduplicated.
    pub members: Vec<u64>,
    /// Failed checks, in [`SpectrumCheck::ALL`] order.
    pub failed: Vec<SpectrumCheck>,
    /// Common 2-adic valuation of the even members, when they agree.
    pub even_valuation: Option<u32>,
    /// `m(m+1)/2` for the largest member, when it fits.
    pub min_witness: Option<u64>,
}

impl SpectrumReport {
    /// True when no necessary condition failed.
    pub fn passes(&self) -> bool {
        self.failed.is_empty()
    }

    /// Whether `check` passed.
    pub fn passed(&self, check: SpectrumCheck) -> bool {
        !self.failed.contains(&check)
    }
}

/// Checks necessary conditions for `candidate` to be a length spectrum.
pub fn validate_spectrum(candidate: &[u64]) -> Result<SpectrumReport> {
    if candidate.is_empty() {
        return Err(Error::EmptySet);
    }
    if candidate.contains(&0) {
        return Err(Error::Zero);
    }
    let set: BTreeSet<u64> = candidate.iter().copied().collect();
    let members: Vec<u64> = set.iter().copied().collect();
    let mut failed = Vec::new();

    if !set.contains(&1) {
        failed.push(SpectrumCheck::ContainsOne);
    }

    let evens: Vec<u64> = members.iter().copied().filter(|m| m % 2 == 0).collect();
    let mut valuations: Vec<u32> = evens.iter().map(|e| e.trailing_zeros()).collect();
    valuations.dedup();
    let even_valuation = match valuations.as_slice() {
        [] => None,
        [v] => Some(*v),
        _ => {
            failed.push(SpectrumCheck::EvenValuation);
            None
        }
    };

    // Without a common valuation there is no d to test against.
    if let Some(v) = even_valuation {
        if evens.iter().any(|&e| !set.contains(&(e >> v))) {
            failed.push(SpectrumCheck::EvenCofactors);
        }
    }

    let max = *members.last().expect("nonempty");
    let min_witness = triangular(max).filter(|&t| t <= MAX_N);
    if min_witness.is_none() {
        failed.push(SpectrumCheck::TriangularBound);
    }

    // Members past the triangular bound already failed above.
    let cap = max_possible_length(MAX_N).expect("in domain");
    let closed = members.iter().filter(|&&m| m % 2 == 1 && m <= cap).all(|&k| {
        let mut j = 3;
        while j * j <= k {
            if k % j == 0 && !(set.contains(&j) && set.contains(&(k / j))) {
                return false;
            }
            j += 2;
        }
        true
    });
    if !closed {
        failed.push(SpectrumCheck::OddDivisorClosure);
    }

    Ok(SpectrumReport { members, failed, even_valuation, min_witness })
}

/// Smallest `n <= search_limit` whose spectrum is exactly `candidate`.
///
/// `None` is inconclusive: it says nothing about `n` beyond the limit.
/// Candidates are prefiltered on sieve statistics (counts, extremes) so only
/// plausible `n` are factored.
pub fn find_spectrum_witness(candidate: &[u64], search_limit: u64) -> Option<u64> {
    if candidate.is_empty() || candidate.contains(&0) {
        return None;
    }
    let set: BTreeSet<u64> = candidate.iter().copied().collect();
    let want: Vec<u64> = set.iter().copied().collect();
    let odd = want.iter().filter(|m| *m % 2 == 1).count() as u64;
    let even = want.len() as u64 - odd;
    let longest = *want.last().expect("nonempty");
    let shortest = want.iter().copied().find(|&m| m > 1);

    let lo = triangular(longest)?;
    let hi = search_limit.min(MAX_N);
    if lo > hi {
        return None;
    }
    Scanner::range(lo, hi, crate::sieve::DEFAULT_CHUNK)
        .ok()?
        .filter(|r| {
            r.odd_count == odd
                && r.even_count == even
                && r.longest == longest
                && r.shortest_nontrivial == shortest
        })
        .map(|r| r.n)
        .find(|&n| length_spectrum(n).is_ok_and(|s| s.lengths() == want))
}
