//! Exact 64-bit helpers. No floating point.

use crate::{Error, Result, MAX_N};

/// Floor of the square root of `n`, exact for every `u64`.
pub fn isqrt(n: u64) -> u64 {
    if n < 2 {
        return n;
    }
    // Newton from an upper bound; the iterates decrease monotonically to the floor.
    let mut x = 1u64 << (64 - n.leading_zeros()).div_ceil(2);
    loop {
        let y = (x + n / x) / 2;
        if y >= x {
            return x;
        }
        x = y;
    }
}

/// Floor of the square root of a `u128`.
pub fn isqrt_u128(n: u128) -> u128 {
    if n < 2 {
        return n;
    }
    let mut x = 1u128 << (128 - n.leading_zeros()).div_ceil(2);
    loop {
        let y = (x + n / x) / 2;
        if y >= x {
            return x;
        }
        x = y;
    }
}

/// Exponent of the highest power of two dividing `n` (`n > 0`).
#[inline]
pub fn two_adic_valuation(n: u64) -> u32 {
    debug_assert!(n > 0);
    n.trailing_zeros()
}

/// `n` with all factors of two removed.
#[inline]
pub fn odd_part(n: u64) -> u64 {
    n >> n.trailing_zeros()
}

/// `m(m+1)/2`, or `None` on overflow.
pub fn triangular(m: u64) -> Option<u64> {
    // One of m, m+1 is even; halve it first.
    let (a, b) = if m.is_multiple_of(2) { (m / 2, m.checked_add(1)?) } else { (m, m.checked_add(1)? / 2) };
    a.checked_mul(b)
}

/// Whether the odd divisor `k` of `n` yields an odd decomposition (`k*k < 2n`).
///
/// Equality cannot happen: `k*k` is odd and `2n` is even.
#[inline]
pub fn below_threshold(k: u64, n: u64) -> bool {
    match (k.checked_mul(k), n.checked_mul(2)) {
        (Some(kk), Some(twice)) => kk < twice,
        (None, _) => false,
        // 2n overflowed, so 2n > u64::MAX >= k*k
        (Some(_), None) => true,
    }
}

/// Rejects `n = 0` and `n > MAX_N`.
pub fn check_domain(n: u64) -> Result<()> {
    if n == 0 {
        Err(Error::Zero)
    } else if n > MAX_N {
        Err(Error::OutOfRange { n })
    } else {
        Ok(())
    }
}
