//! `verify`: bijection vs. brute-force oracle, sieve vs. bijection, and the
//! decompositions of 45 against a frozen table.

use std::collections::BTreeSet;
use std::io::Write;

use anyhow::{bail, Result};
use polite_core::sieve::{cross_check_records, scan, DEFAULT_CHUNK};
use polite_core::{
    brute_force_decompositions_bounded, count_decompositions, decomposition_from_odd_divisor,
    enumerate_decompositions, factor_odd, odd_divisor_from_decomposition, Decomposition,
};

use crate::{EXIT_MISMATCH, EXIT_OK};

/// Mismatches printed before the listing is cut off.
pub const SHOWN_MISMATCHES: usize = 10;

/// `(k, (k-1)/2, n/k, first term, length, parity)` for every decomposition of 45.
pub const TABLE_45: [(u64, u64, u64, u64, u64, &str); 6] = [
    (1, 0, 45, 45, 1, "odd"),
    (3, 1, 15, 14, 3, "odd"),
    (5, 2, 9, 7, 5, "odd"),
    (9, 4, 5, 1, 9, "odd"),
    (15, 7, 3, 5, 6, "even"),
    (45, 22, 1, 22, 2, "even"),
];

#[derive(Debug, Default)]
pub struct VerifyReport {
    pub limit: u64,
    pub oracle_mismatches: Vec<String>,
    pub sieve_mismatches: Vec<String>,
    /// `None` when `limit < 45`.
    pub table_45: Option<Vec<String>>,
}

impl VerifyReport {
    pub fn is_clean(&self) -> bool {
        self.oracle_mismatches.is_empty()
            && self.sieve_mismatches.is_empty()
            && self.table_45.as_ref().is_none_or(|m| m.is_empty())
    }

    pub fn exit_code(&self) -> i32 {
        if self.is_clean() {
            EXIT_OK
        } else {
            EXIT_MISMATCH
        }
    }

    pub fn write_to(&self, out: &mut dyn Write) -> std::io::Result<()> {
        let line = |out: &mut dyn Write, name: &str, ms: &[String]| -> std::io::Result<()> {
            if ms.is_empty() {
                writeln!(out, "{name}: pass")
            } else {
                writeln!(out, "{name}: FAIL ({} mismatches)", ms.len())?;
                for m in ms.iter().take(SHOWN_MISMATCHES) {
                    writeln!(out, "  {m}")?;
                }
                Ok(())
            }
        };
        line(out, &format!("oracle equivalence n<={}", self.limit), &self.oracle_mismatches)?;
        line(out, &format!("sieve agreement n<={}", self.limit), &self.sieve_mismatches)?;
        match &self.table_45 {
            Some(ms) => line(out, "table of 45", ms)?,
            None => writeln!(out, "table of 45: skipped (limit < 45)")?,
        }
        writeln!(out, "{}", if self.is_clean() { "verify: pass" } else { "verify: FAIL" })
    }
}

fn pairs(decs: &[Decomposition]) -> BTreeSet<(u64, u64)> {
    decs.iter().map(|d| (d.start(), d.length())).collect()
}

/// Bijection checks for one `n` against `oracle`.
fn check_one(n: u64, oracle: &dyn Fn(u64) -> polite_core::Result<Vec<Decomposition>>, out: &mut Vec<String>) {
    let fast = match enumerate_decompositions(n) {
        Ok(d) => d,
        Err(e) => return out.push(format!("n={n}: enumeration failed: {e}")),
    };
    let slow = match oracle(n) {
        Ok(d) => d,
        Err(e) => return out.push(format!("n={n}: oracle failed: {e}")),
    };
    if pairs(&fast) != pairs(&slow) || fast.len() != slow.len() {
        out.push(format!("n={n}: bijection gives {:?}, oracle gives {:?}", pairs(&fast), pairs(&slow)));
    }
    let count = count_decompositions(n).unwrap_or(0);
    if count != fast.len() as u64 {
        out.push(format!("n={n}: product formula gives {count}, enumeration {}", fast.len()));
    }
    for d in &fast {
        let k = odd_divisor_from_decomposition(d);
        if decomposition_from_odd_divisor(n, k).ok() != Some(*d) {
            out.push(format!("n={n}: round trip fails at k={k}"));
        }
    }
}

fn check_table_45() -> Vec<String> {
    let mut out = Vec::new();
    let Ok(f) = factor_odd(45) else { return vec!["cannot factor 45".into()] };
    if f.odd_divisors().len() != TABLE_45.len() {
        out.push(format!("45 has {} odd divisors, expected {}", f.odd_divisors().len(), TABLE_45.len()));
    }
    for (&k, &(tk, half, q, start, length, parity)) in f.odd_divisors().iter().zip(&TABLE_45) {
        let got = decomposition_from_odd_divisor(45, k)
            .map(|d| (k, (k - 1) / 2, 45 / k, d.start(), d.length(), d.parity().as_str()));
        let want = (tk, half, q, start, length, parity);
        if got.as_ref().ok() != Some(&want) {
            out.push(format!("row k={tk}: got {got:?}, expected {want:?}"));
        }
    }
    out
}

/// Runs every check for `1..=limit` with the given oracle.
pub fn verify_with(limit: u64, oracle: &dyn Fn(u64) -> polite_core::Result<Vec<Decomposition>>) -> Result<VerifyReport> {
    let mut report = VerifyReport { limit, ..Default::default() };
    for n in 1..=limit {
        check_one(n, oracle, &mut report.oracle_mismatches);
    }
    report.sieve_mismatches = cross_check_records(scan(limit, DEFAULT_CHUNK)?)
        .into_iter()
        .map(|m| format!("n={}: {} sieve={:?} expected={:?}", m.n, m.field, m.sieve, m.expected))
        .collect();
    if limit >= 45 {
        report.table_45 = Some(check_table_45());
    }
    Ok(report)
}

/// `verify --to limit`; refuses limits above the oracle bound.
pub fn run(limit: u64, oracle_limit: u64, out: &mut dyn Write) -> Result<i32> {
    if limit == 0 {
        bail!("--to must be at least 1");
    }
    if limit > oracle_limit {
        bail!("--to {limit} exceeds the oracle bound {oracle_limit} (set {} to raise it)", crate::ORACLE_LIMIT_VAR);
    }
    let oracle = move |n| brute_force_decompositions_bounded(n, oracle_limit);
    let report = verify_with(limit, &oracle)?;
    report.write_to(out)?;
    Ok(report.exit_code())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn clean_run() {
        let r = verify_with(200, &|n| brute_force_decompositions_bounded(n, 1000)).unwrap();
        assert!(r.is_clean());
        assert_eq!(r.exit_code(), EXIT_OK);
    }

    #[test]
    fn broken_oracle_is_a_mismatch() {
        // drops the trivial decomposition of every n
        let bad = |n| {
            brute_force_decompositions_bounded(n, 1000).map(|v| v.into_iter().filter(|d| !d.is_trivial()).collect())
        };
        let r = verify_with(50, &bad).unwrap();
        assert_eq!(r.oracle_mismatches.len(), 50);
        assert_eq!(r.exit_code(), EXIT_MISMATCH);
        let mut text = Vec::new();
        r.write_to(&mut text).unwrap();
        let text = String::from_utf8(text).unwrap();
        assert!(text.contains("oracle equivalence n<=50: FAIL (50 mismatches)"));
        assert_eq!(text.lines().filter(|l| l.starts_with("  n=")).count(), SHOWN_MISMATCHES);
        assert!(text.ends_with("verify: FAIL\n"));
    }

    #[test]
    fn table_of_45_is_clean() {
        assert!(check_table_45().is_empty());
    }
}
