//! Power of two, unique nontrivial decomposition, or general.

use core::fmt;

use crate::factor::factor_odd;
use crate::Result;

/// Classification kind.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Kind {
    /// Odd part 1: only the trivial decomposition.
    PowerOfTwo,
    /// `n = 2^d * k` with `k` an odd prime above `2^(d+1)`: exactly one
    /// nontrivial decomposition, and it is even.
    UniqueNontrivial,
    /// Everything else.
    General,
}

impl Kind {
    /// Upper-case label used in CLI output.
    pub fn as_str(self) -> &'static str {
        match self {
            Kind::PowerOfTwo => "POWER_OF_TWO",
            Kind::UniqueNontrivial => "UNIQUE_NONTRIVIAL",
            Kind::General => "GENERAL",
        }
    }
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Result of [`classify`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Classification {
    /// The classified number.
    pub n: u64,
    /// Its kind.
    pub kind: Kind,
    /// `(d, k)` with `n = 2^d * k`, set only for [`Kind::UniqueNontrivial`].
    pub detail: Option<(u32, u64)>,
}

/// Classifies `n` by its odd part.
pub fn classify(n: u64) -> Result<Classification> {
    let f = factor_odd(n)?;
    let k = f.odd_part();
    let (kind, detail) = if k == 1 {
        (Kind::PowerOfTwo, None)
    } else if f.divisor_count() == 2 && k > f.even_length_power() {
        (Kind::UniqueNontrivial, Some((f.d(), k)))
    } else {
        (Kind::General, None)
    };
    Ok(Classification { n, kind, detail })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{count_decompositions, enumerate_decompositions, Error};

    #[test]
    fn examples() {
        assert_eq!(classify(14).unwrap(), Classification { n: 14, kind: Kind::UniqueNontrivial, detail: Some((1, 7)) });
        assert_eq!(classify(16).unwrap().kind, Kind::PowerOfTwo);
        assert_eq!(classify(45).unwrap().kind, Kind::General);
        assert_eq!(classify(1).unwrap().kind, Kind::PowerOfTwo);
        // 3 = 1 + 2, odd prime 3 > 2^1
        assert_eq!(classify(3).unwrap().kind, Kind::UniqueNontrivial);
        // 12 = 3 + 4 + 5, odd part 3 < 8
        assert_eq!(classify(12).unwrap().kind, Kind::General);
        assert_eq!(classify(0), Err(Error::Zero));
    }

    #[test]
    fn agrees_with_counts() {
        for n in 1..=3000u64 {
            let c = classify(n).unwrap();
            let count = count_decompositions(n).unwrap();
            let decs = enumerate_decompositions(n).unwrap();
            let unique_even = count == 2 && decs.iter().any(|d| !d.is_trivial() && d.length() % 2 == 0);
            match c.kind {
                Kind::PowerOfTwo => assert_eq!(count, 1),
                Kind::UniqueNontrivial => assert!(unique_even, "n={n}"),
                Kind::General => assert!(count > 1 && !unique_even, "n={n}"),
            }
        }
    }
}
