//! Strict decimal input: ASCII digits only, no sign, separators or suffixes.

pub fn decimal(s: &str) -> Result<u64, String> {
    if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
        return Err(format!("`{s}` is not a plain decimal integer"));
    }
    s.parse::<u64>().map_err(|_| format!("`{s}` does not fit in 64 bits"))
}

/// A parsed `--spectrum` argument.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Members(pub Vec<u64>);

/// `1,2,3,5` into a strictly ascending list of positive integers.
pub fn spectrum_list(s: &str) -> Result<Members, String> {
    let items = s.split(',').map(|t| decimal(t.trim())).collect::<Result<Vec<_>, _>>()?;
    if items.contains(&0) {
        return Err("spectrum members must be positive".into());
    }
    if !items.windows(2).all(|w| w[0] < w[1]) {
        return Err("spectrum members must be ascending and distinct".into());
    }
    Ok(Members(items))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn strict_decimal() {
        assert_eq!(decimal("45"), Ok(45));
        assert_eq!(decimal("007"), Ok(7));
        for bad in ["", "+4", "-4", "1_000", "1,000", "1e3", "10k", " 4", "0x10", "18446744073709551616"] {
            assert!(decimal(bad).is_err(), "{bad}");
        }
    }

    #[test]
    fn spectrum_lists() {
        assert_eq!(spectrum_list("1,2,3,5"), Ok(Members(vec![1, 2, 3, 5])));
        assert_eq!(spectrum_list("1, 2"), Ok(Members(vec![1, 2])));
        assert!(spectrum_list("2,1").is_err());
        assert!(spectrum_list("1,1").is_err());
        assert!(spectrum_list("0,1").is_err());
        assert!(spectrum_list("").is_err());
        assert!(spectrum_list("1,,2").is_err());
    }
}
