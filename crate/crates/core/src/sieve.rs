//! Range scan of decomposition statistics for every `n` in `[lo, hi]`.
//!
//! No per-`n` factorization: every divisor pair `(a, m/a)` with `a*a <= m` is
//! visited once per chunk, and each odd member of the pair credits `m` with
//! one decomposition. An odd divisor `k` credits the odd side when
//! `k*k < 2m` (length `k`) and the even side otherwise (length `2m/k`).
//! Work per chunk of `c` records ending at `hi` is about
//! `c * ln(sqrt(hi)) + sqrt(hi)`, memory is `O(c)`.

use alloc::vec;
use alloc::vec::Vec;

use crate::arith::{below_threshold, check_domain, isqrt};
use crate::{enumerate_decompositions, Error, Result};

/// Default records per chunk.
pub const DEFAULT_CHUNK: usize = 1 << 20;

/// Per-`n` statistics.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ScanRecord {
    /// The number.
    pub n: u64,
    /// Number of decompositions (odd divisors).
    pub total_count: u64,
    /// Number of odd-length decompositions, at least 1.
    pub odd_count: u64,
    /// Number of even-length decompositions.
    pub even_count: u64,
    /// `total_count == 1`.
    pub is_power_of_two: bool,
    /// Longest length.
    pub longest: u64,
    /// Shortest length above 1.
    pub shortest_nontrivial: Option<u64>,
}

/// Streaming iterator over [`ScanRecord`]s in ascending `n`.
#[derive(Debug, Clone)]
pub struct Scanner {
    next: u64,
    hi: u64,
    chunk: usize,
    buf: Vec<ScanRecord>,
    pos: usize,
    work: u64,
}

impl Scanner {
    /// Records for `1..=limit`.
    pub fn new(limit: u64, chunk: usize) -> Result<Self> {
        Self::range(1, limit, chunk)
    }

    /// Records for `lo..=hi`. An empty range (`lo > hi`) yields nothing.
    pub fn range(lo: u64, hi: u64, chunk: usize) -> Result<Self> {
        check_domain(lo)?;
        check_domain(hi)?;
        if chunk == 0 {
            return Err(Error::Zero);
        }
        Ok(Scanner { next: lo, hi, chunk, buf: Vec::new(), pos: 0, work: 0 })
    }

    /// Divisor-pair visits performed so far.
    pub fn work(&self) -> u64 {
        self.work
    }

    fn fill(&mut self) {
        let lo = self.next;
        let hi = self.hi.min(lo.saturating_add(self.chunk as u64 - 1));
        let len = (hi - lo + 1) as usize;

        let mut odd = vec![0u32; len];
        let mut even = vec![0u32; len];
        let mut longest = vec![0u64; len];
        // 0 marks "no nontrivial length yet"
        let mut shortest = vec![0u64; len];

        let mut credit = |i: usize, m: u64, k: u64| {
            let length = if below_threshold(k, m) {
                odd[i] += 1;
                k
            } else {
                even[i] += 1;
                2 * (m / k)
            };
            longest[i] = longest[i].max(length);
            if length > 1 && (shortest[i] == 0 || length < shortest[i]) {
                shortest[i] = length;
            }
        };

        let mut work = 0u64;
        for a in 1..=isqrt(hi) {
            let from = lo.max(a * a);
            let first = from.div_ceil(a) * a;
            let mut m = first;
            while m <= hi {
                let i = (m - lo) as usize;
                let b = m / a;
                if a % 2 == 1 {
                    credit(i, m, a);
                }
                if b % 2 == 1 && b != a {
                    credit(i, m, b);
                }
                work += 1;
                m += a;
            }
        }
        self.work += work;

        self.buf.clear();
        self.buf.extend((0..len).map(|i| {
            let total = u64::from(odd[i]) + u64::from(even[i]);
            ScanRecord {
                n: lo + i as u64,
                total_count: total,
                odd_count: u64::from(odd[i]),
                even_count: u64::from(even[i]),
                is_power_of_two: total == 1,
                longest: longest[i],
                shortest_nontrivial: (shortest[i] != 0).then_some(shortest[i]),
            }
        }));
        self.pos = 0;
        self.next = hi + 1;
    }
}

impl Iterator for Scanner {
    type Item = ScanRecord;

    fn next(&mut self) -> Option<ScanRecord> {
        if self.pos == self.buf.len() {
            if self.next > self.hi {
                return None;
            }
            self.fill();
        }
        let r = self.buf[self.pos];
        self.pos += 1;
        Some(r)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let pending = (self.hi + 1).saturating_sub(self.next) as usize;
        let n = self.buf.len() - self.pos + pending;
        (n, Some(n))
    }
}

/// Stream of records for `1..=limit`.
pub fn scan(limit: u64, chunk_size: usize) -> Result<Scanner> {
    Scanner::new(limit, chunk_size)
}

/// Exact fraction `num / den`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Ratio {
    /// Numerator.
    pub num: u64,
    /// Denominator.
    pub den: u64,
}

impl Ratio {
    /// Nearest `f64`.
    pub fn to_f64(self) -> f64 {
        self.num as f64 / self.den as f64
    }
}

/// Folded statistics over `1..=limit`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Aggregate {
    /// Upper end of the scan.
    pub limit: u64,
    /// Count of `n` with a single decomposition (the powers of two).
    pub impolite_count: u64,
    /// Sum of `total_count` over the range.
    pub count_sum: u64,
    /// Smallest `n` attaining the largest `total_count`, with that count.
    pub max_count: (u64, u64),
}

impl Aggregate {
    /// Average number of decompositions, `count_sum / limit`.
    pub fn mean_count(&self) -> Ratio {
        Ratio { num: self.count_sum, den: self.limit }
    }
}

/// Folds a full scan of `1..=limit`.
pub fn aggregate(limit: u64) -> Result<Aggregate> {
    aggregate_records(limit, scan(limit, DEFAULT_CHUNK)?)
}

/// Folds `records`, which must be the scan of `1..=limit`.
pub fn aggregate_records(limit: u64, records: impl IntoIterator<Item = ScanRecord>) -> Result<Aggregate> {
    check_domain(limit)?;
    let mut agg = Aggregate { limit, impolite_count: 0, count_sum: 0, max_count: (1, 0) };
    for r in records {
        agg.impolite_count += u64::from(r.total_count == 1);
        agg.count_sum += r.total_count;
        if r.total_count > agg.max_count.1 {
            agg.max_count = (r.n, r.total_count);
        }
    }
    Ok(agg)
}

/// One disagreement between a sieve record and the per-`n` computation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Mismatch {
    /// Where.
    pub n: u64,
    /// Which [`ScanRecord`] field.
    pub field: &'static str,
    /// Value from the record.
    pub sieve: Option<u64>,
    /// Value from enumeration.
    pub expected: Option<u64>,
}

/// Compares `scan(limit)` row by row against enumerated decompositions.
/// An empty result means full agreement.
pub fn cross_check(limit: u64) -> Result<Vec<Mismatch>> {
    Ok(cross_check_records(scan(limit, DEFAULT_CHUNK)?))
}

/// Compares arbitrary records against enumerated decompositions.
pub fn cross_check_records(records: impl IntoIterator<Item = ScanRecord>) -> Vec<Mismatch> {
    let mut out = Vec::new();
    for r in records {
        let decs = match enumerate_decompositions(r.n) {
            Ok(d) => d,
            Err(_) => {
                out.push(Mismatch { n: r.n, field: "n", sieve: Some(r.n), expected: None });
                continue;
            }
        };
        let odd = decs.iter().filter(|d| d.length() % 2 == 1).count() as u64;
        let total = decs.len() as u64;
        let longest = decs.iter().map(|d| d.length()).max();
        let shortest = decs.iter().map(|d| d.length()).filter(|&l| l > 1).min();
        let mut check = |field, sieve: Option<u64>, expected: Option<u64>| {
            if sieve != expected {
                out.push(Mismatch { n: r.n, field, sieve, expected });
            }
        };
        check("total", Some(r.total_count), Some(total));
        check("odd", Some(r.odd_count), Some(odd));
        check("even", Some(r.even_count), Some(total - odd));
        check("longest", Some(r.longest), longest);
        check("shortest_nontrivial", r.shortest_nontrivial, shortest);
        check("is_power_of_two", Some(u64::from(r.is_power_of_two)), Some(u64::from(total == 1)));
    }
    out
}
