//! ASCII pictures of decompositions.
//!
//! Glyphs: `#` kept cell, `o` cell cut from the rectangle corner, `-` cancelled
//! cell. Rows are listed top to bottom in ascending length and every row ends
//! with `\n`; there is never trailing whitespace.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::arith::below_threshold;
use crate::{decomposition_from_odd_divisor, Decomposition, Error, Result};

const KEPT: char = '#';
const CUT: char = 'o';
const CANCELLED: char = '-';
const ARROW: &str = "=>";

fn push_row(out: &mut String, glyph: char, width: u64) {
    out.extend(core::iter::repeat_n(glyph, width as usize));
    out.push('\n');
}

/// One row of `#` per term, shortest first.
pub fn render_decomposition(dec: &Decomposition) -> String {
    let mut out = String::new();
    for t in dec.terms() {
        push_row(&mut out, KEPT, t);
    }
    out
}

/// Which branch of the bijection a transformation follows.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Case {
    /// `k*k < 2n`: cut the staircase off the rectangle's top-right corner and
    /// reattach it flipped beneath.
    Direct,
    /// `k*k > 2n`: the centred run dips to zero or below and cancels.
    Cancelling,
}

/// Structured data behind [`render_transformation`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TransformationView {
    /// The number.
    pub n: u64,
    /// The odd divisor, `k > 1`.
    pub k: u64,
    /// Branch taken.
    pub case: Case,
    /// Rectangle shape `(rows, width) = (n/k, k)`.
    pub rectangle: (u64, u64),
    /// Cut cells at the right end of each rectangle row, top first.
    /// Nonzero only in the direct case.
    pub cut_per_row: Vec<u64>,
    /// Row lengths of the resulting trapezoid, ascending.
    pub result_rows: Vec<u64>,
    /// Number of zero or negative terms dropped in the cancelling case.
    pub cancelled_extent: u64,
}

impl TransformationView {
    /// Total cut cells.
    pub fn cut_cells(&self) -> u64 {
        self.cut_per_row.iter().sum()
    }
}

/// Builds the rectangle-to-trapezoid picture for the odd divisor `k > 1` of `n`.
///
/// Direct case: the `(n/k) x k` rectangle, top row first, row `i` ending in
/// `max(0, (k-1)/2 - i)` cut cells, then `=>` and the trapezoid.
///
/// Cancelling case: the staircase `1..=(k-1)/2`, a marker line `+QxK` for the
/// added `n/k`-per-row rectangle, the cancelled rows as a shrinking `-`
/// staircase (one row per dropped non-positive term), then `=>` and the
/// surviving trapezoid.
pub fn render_transformation(n: u64, k: u64) -> Result<(TransformationView, String)> {
    let dec = decomposition_from_odd_divisor(n, k)?;
    if k == 1 {
        return Err(Error::NothingToTransform { n });
    }
    let q = n / k;
    let half = (k - 1) / 2;
    let result_rows: Vec<u64> = dec.terms().collect();
    let mut out = String::new();

    let view = if below_threshold(k, n) {
        let cut_per_row: Vec<u64> = (0..q).map(|i| half.saturating_sub(i)).collect();
        for &cut in &cut_per_row {
            out.extend(core::iter::repeat_n(KEPT, (k - cut) as usize));
            out.extend(core::iter::repeat_n(CUT, cut as usize));
            out.push('\n');
        }
        TransformationView {
            n,
            k,
            case: Case::Direct,
            rectangle: (q, k),
            cut_per_row,
            result_rows,
            cancelled_extent: 0,
        }
    } else {
        let cancelled = half - q + 1;
        for w in 1..=half {
            push_row(&mut out, KEPT, w);
        }
        out.push_str(&format!("+{q}x{k}\n"));
        for w in (1..=cancelled).rev() {
            push_row(&mut out, CANCELLED, w);
        }
        TransformationView {
            n,
            k,
            case: Case::Cancelling,
            rectangle: (q, k),
            cut_per_row: Vec::new(),
            result_rows,
            cancelled_extent: cancelled,
        }
    };

    out.push_str(ARROW);
    out.push('\n');
    out.push_str(&render_decomposition(&dec));
    Ok((view, out))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::factor_odd;

    fn result_block(text: &str) -> &str {
        text.split_once("=>\n").unwrap().1
    }

    #[test]
    fn triangle() {
        let dec = Decomposition::new(1, 4).unwrap();
        assert_eq!(render_decomposition(&dec), "#\n##\n###\n####\n");
        assert_eq!(render_decomposition(&Decomposition::new(7, 1).unwrap()), "#######\n");
    }

    #[test]
    fn twenty_by_five() {
        let (view, text) = render_transformation(20, 5).unwrap();
        assert_eq!(view.case, Case::Direct);
        assert_eq!(view.rectangle, (4, 5));
        assert_eq!(view.cut_per_row, [2, 1, 0, 0]);
        assert_eq!(view.cut_cells(), 3);
        assert_eq!(view.result_rows, [2, 3, 4, 5, 6]);
        assert_eq!(
            text,
            "###oo\n####o\n#####\n#####\n=>\n##\n###\n####\n#####\n######\n"
        );
    }

    #[test]
    fn fourteen_by_seven() {
        let (view, text) = render_transformation(14, 7).unwrap();
        assert_eq!(view.case, Case::Cancelling);
        assert_eq!(view.result_rows, [2, 3, 4, 5]);
        assert_eq!(view.cancelled_extent, 2);
        assert_eq!(text, "#\n##\n###\n+2x7\n--\n-\n=>\n##\n###\n####\n#####\n");
    }

    #[test]
    fn nine_by_three() {
        let (view, text) = render_transformation(9, 3).unwrap();
        assert_eq!(view.case, Case::Direct);
        assert_eq!(view.cut_cells(), 1);
        assert_eq!(view.result_rows, [2, 3, 4]);
        assert_eq!(text, "##o\n###\n###\n=>\n##\n###\n####\n");
    }

    #[test]
    fn errors() {
        assert_eq!(render_transformation(20, 1).unwrap_err(), Error::NothingToTransform { n: 20 });
        assert_eq!(render_transformation(20, 3).unwrap_err(), Error::InvalidDivisor { n: 20, k: 3 });
        assert_eq!(render_transformation(20, 2).unwrap_err(), Error::InvalidDivisor { n: 20, k: 2 });
    }

    #[test]
    fn conservation_and_shape() {
        for n in 1..=300u64 {
            for &k in factor_odd(n).unwrap().odd_divisors().iter().skip(1) {
                let (view, text) = render_transformation(n, k).unwrap();
                let kept = result_block(&text).chars().filter(|&c| c == '#').count() as u64;
                assert_eq!(kept, n);
                assert_eq!(view.result_rows.iter().sum::<u64>(), n);
                assert_eq!(view.case == Case::Direct, k * k < 2 * n);
                if view.case == Case::Direct {
                    let h = (k - 1) / 2;
                    assert_eq!(view.cut_cells(), h * (h + 1) / 2);
                    assert_eq!(text.matches('o').count() as u64, view.cut_cells());
                }
                assert!(text.lines().all(|l| !l.ends_with(' ')));
                assert_eq!(render_transformation(n, k).unwrap().1, text);
            }
        }
    }
}
