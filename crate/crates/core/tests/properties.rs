use std::collections::BTreeSet;

use polite_core::arith::isqrt;
use polite_core::sieve::scan;
use polite_core::*;
use proptest::prelude::*;

const DESK: u64 = 5000;

fn as_set(decs: &[Decomposition]) -> BTreeSet<(u64, u64)> {
    decs.iter().map(|d| (d.start(), d.length())).collect()
}

#[test]
fn oracle_equivalence_desk_scale() {
    for n in 1..=DESK {
        let fast = enumerate_decompositions(n).unwrap();
        let slow = brute_force_decompositions(n).unwrap();
        assert_eq!(fast.len(), slow.len(), "n={n}");
        assert_eq!(as_set(&fast), as_set(&slow), "n={n}");
        assert_eq!(count_decompositions(n).unwrap(), fast.len() as u64);
    }
}

#[test]
fn threshold_law() {
    for n in 1..=DESK {
        for &k in factor_odd(n).unwrap().odd_divisors() {
            let d = decomposition_from_odd_divisor(n, k).unwrap();
            assert_ne!(k * k, 2 * n);
            if k * k < 2 * n {
                assert_eq!((d.parity(), d.length()), (Parity::Odd, k));
            } else {
                assert_eq!((d.parity(), d.length()), (Parity::Even, 2 * n / k));
            }
        }
    }
}

#[test]
fn spectrum_laws() {
    for n in 1..=DESK {
        let s = length_spectrum(n).unwrap();
        let d = n.trailing_zeros();
        assert!(s.even_lengths().iter().all(|e| e.trailing_zeros() == d + 1));
        assert!(s.even_lengths().len() <= s.odd_lengths().len());
        assert!(s.odd_lengths().contains(&1));
        let bound = max_possible_length(n).unwrap();
        assert!(s.max() <= bound);
        assert_eq!(s.max() == bound, s.contains(bound));
        assert!(s.max() * (s.max() + 1) / 2 <= n);
        assert_eq!(has_only_odd_decompositions(n).unwrap(), s.even_lengths().is_empty());
        let unique = s.len() == 2 && s.even_lengths().len() == 1;
        assert_eq!(classify(n).unwrap().kind == Kind::UniqueNontrivial, unique, "n={n}");
    }
}

#[test]
fn conjecture_desk_scale() {
    for n in 1..=DESK {
        assert_eq!(count_decompositions(n).unwrap() == 1, n.is_power_of_two(), "n={n}");
    }
}

#[test]
fn sieve_matches_core_row_for_row() {
    for r in scan(DESK, 1000).unwrap() {
        let s = length_spectrum(r.n).unwrap();
        assert_eq!(r.odd_count, s.odd_lengths().len() as u64);
        assert_eq!(r.even_count, s.even_lengths().len() as u64);
        assert_eq!(r.longest, s.max());
        assert_eq!(r.shortest_nontrivial, s.min_nontrivial());
    }
}

fn odd_part_strategy() -> impl Strategy<Value = u64> {
    // products of a few small odd primes keep trial division fast
    prop::collection::vec(prop::sample::select(vec![3u64, 5, 7, 11, 13, 101, 65_537]), 0..6)
        .prop_map(|ps| ps.into_iter().fold(1u64, |acc, p| acc.saturating_mul(p)))
}

proptest! {
    #[test]
    fn round_trip_wide_range(odd in odd_part_strategy(), d in 0u32..40) {
        let n = odd.checked_shl(d).filter(|&n| n <= MAX_N && n >> d == odd);
        prop_assume!(n.is_some());
        let n = n.unwrap();
        let f = factor_odd(n).unwrap();
        for &k in f.odd_divisors() {
            let dec = decomposition_from_odd_divisor(n, k).unwrap();
            prop_assert_eq!(dec.target(), n);
            prop_assert_eq!(odd_divisor_from_decomposition(&dec), k);
            prop_assert_eq!(Decomposition::with_target(n, dec.start(), dec.length()), Some(dec));
        }
        prop_assert_eq!(count_decompositions(n).unwrap(), f.divisor_count() as u64);
    }

    #[test]
    fn extremes_formulas(n in 1u64..2_000_000) {
        let s = length_spectrum(n).unwrap();
        prop_assert_eq!(longest_length(n).unwrap(), s.max());
        prop_assert_eq!(shortest_nontrivial_length(n).unwrap(), s.min_nontrivial());
        prop_assert!(s.max() <= max_possible_length(n).unwrap());
    }

    #[test]
    fn max_possible_length_is_floor(n in 1u64..=MAX_N) {
        let m = max_possible_length(n).unwrap();
        let m = m as u128;
        prop_assert!(m * (m + 1) / 2 <= n as u128);
        prop_assert!((m + 1) * (m + 2) / 2 > n as u128);
    }

    #[test]
    fn isqrt_is_floor(n in any::<u64>()) {
        let r = isqrt(n) as u128;
        prop_assert!(r * r <= n as u128 && (r + 1) * (r + 1) > n as u128);
    }
}
