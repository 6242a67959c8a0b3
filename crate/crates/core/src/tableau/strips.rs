//! Strips: sets of `width` boxes, one per column, never stepping down when
//! read left to right.

use num_bigint::{BigInt, BigUint};

use super::{count_ssyt, enumerate_ssyt, binomial, GrassmannianContext, Partition, Tableau};
use crate::error::Result;

/// Row holding entry `i` in each of the first `cols` columns, if any.
///
/// In a semistandard tableau each entry occupies at most one box per column.
fn rows_of(t: &Tableau, i: usize, cols: usize) -> Vec<Option<usize>> {
    let mut out = vec![None; cols];
    for (r, row) in t.rows().iter().enumerate() {
        for (c, &e) in row.iter().enumerate().take(cols) {
            if e == i {
                out[c] = Some(r);
            }
        }
    }
    out
}

/// Whether `t` contains an `(i)`-strip of `width` boxes.
pub fn has_i_strip(t: &Tableau, i: usize, width: usize) -> bool {
    let cols = t.shape().largest();
    width > 0 && rows_of(t, i, cols).iter().flatten().count() >= width
}

/// Whether `t` contains an `(i, i+1)`-strip of `width` boxes; an `(i)`- or
/// `(i+1)`-strip counts.
pub fn has_pair_strip(t: &Tableau, i: usize, width: usize) -> bool {
    let cols = t.shape().largest();
    if width == 0 || cols < width {
        return false;
    }
    let low = rows_of(t, i, cols);
    let high = rows_of(t, i + 1, cols);
    if cols == width {
        split_scan(&low, &high)
    } else {
        subset_scan(&low, &high, width)
    }
}

/// Every column is used: the first `k` hold `i`, the rest `i + 1`, and the
/// boundary pair does not step down.
fn split_scan(low: &[Option<usize>], high: &[Option<usize>]) -> bool {
    let w = low.len();
    // prefix[k]: columns 0..k all contain i
    let prefix: Vec<bool> = std::iter::once(true)
        .chain(low.iter().scan(true, |ok, r| {
            *ok &= r.is_some();
            Some(*ok)
        }))
        .collect();
    let mut suffix = vec![true; w + 1];
    for c in (0..w).rev() {
        suffix[c] = suffix[c + 1] && high[c].is_some();
    }
    (0..=w).any(|k| {
        prefix[k]
            && suffix[k]
            && (k == 0 || k == w || low[k - 1].unwrap() >= high[k].unwrap())
    })
}

/// Shapes wider than the strip: pick the last `i`-box and first
/// `(i+1)`-box, then take every compatible box on either side.
fn subset_scan(low: &[Option<usize>], high: &[Option<usize>], width: usize) -> bool {
    let n_low = low.iter().flatten().count();
    let n_high = high.iter().flatten().count();
    if n_low >= width || n_high >= width {
        return true;
    }
    let mut lows_through = 0;
    for (cx, rx) in low.iter().enumerate() {
        let Some(rx) = rx else { continue };
        lows_through += 1;
        let mut highs_before = high[..=cx].iter().flatten().count();
        for ry in high.iter().skip(cx + 1) {
            let Some(ry) = ry else { continue };
            if rx >= ry && lows_through + (n_high - highs_before) >= width {
                return true;
            }
            highs_before += 1;
        }
    }
    false
}

/// Whether `boxes` (`(row, col)`, 0-based) form a strip of `width` boxes of `t`.
pub fn is_strip(t: &Tableau, boxes: &[(usize, usize)], width: usize) -> bool {
    if boxes.len() != width || boxes.iter().any(|&(r, c)| t.get(r, c).is_none()) {
        return false;
    }
    let mut sorted = boxes.to_vec();
    sorted.sort_by_key(|&(_, c)| c);
    sorted.windows(2).all(|w| w[0].1 < w[1].1 && w[0].0 >= w[1].0)
}

/// Whether `boxes` form an `(i, i+1)`-strip of `t`.
pub fn is_pair_strip(t: &Tableau, boxes: &[(usize, usize)], i: usize, width: usize) -> bool {
    if !is_strip(t, boxes, width) {
        return false;
    }
    let mut sorted = boxes.to_vec();
    sorted.sort_by_key(|&(_, c)| c);
    let entries: Vec<usize> = sorted.iter().map(|&(r, c)| t.get(r, c).unwrap()).collect();
    entries.iter().all(|&e| e == i || e == i + 1) && entries.windows(2).all(|w| w[0] <= w[1])
}

/// No `(i, i+1)`-strip for any `i`, hence no `(i)`-strip either.
pub fn is_one_strip_less(t: &Tableau, width: usize) -> bool {
    let top = t.max_entry();
    !(1..=top).any(|i| has_i_strip(t, i, width) || (i < top && has_pair_strip(t, i, width)))
}

/// Whether `t` has no `(i)`-strip for any `i`.
pub fn is_zero_strip_less(t: &Tableau, width: usize) -> bool {
    !(1..=t.max_entry()).any(|i| has_i_strip(t, i, width))
}

/// 1-strip-less tableaux of `shape` over `1..=alphabet` with strips of `width`.
pub fn count_one_strip_less_in(shape: &Partition, alphabet: usize, width: usize) -> BigUint {
    if shape.largest() < width {
        return count_ssyt(shape, alphabet);
    }
    let n = enumerate_ssyt(shape, alphabet)
        .filter(|t| is_one_strip_less(t, width))
        .count();
    BigUint::from(n)
}

/// 1-strip-less tableaux of `shape` with entries `1..=r`, strips of `n - r` boxes.
pub fn count_one_strip_less(shape: &Partition, ctx: &GrassmannianContext) -> Result<BigUint> {
    ctx.check_fits(shape)?;
    Ok(count_one_strip_less_in(shape, ctx.r(), ctx.width()))
}

/// 0-strip-less tableaux of `shape` over `1..=alphabet` by inclusion-exclusion
/// over the rows of length `width`.
pub fn count_zero_strip_less_in(shape: &Partition, alphabet: usize, width: usize) -> BigInt {
    let full_rows = shape.parts().iter().take_while(|&&p| p == width).count();
    let mut total = BigInt::default();
    for j in 0..=full_rows.min(alphabet) {
        let reduced = Partition::new(shape.parts()[j..].to_vec()).expect("suffix of a partition");
        let term = BigInt::from(binomial(alphabet, j) * count_ssyt(&reduced, alphabet - j));
        if j % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
    }
    total
}

/// 0-strip-less tableaux of `shape` with entries `1..=r`, strips of `n - r` boxes.
pub fn count_zero_strip_less(shape: &Partition, ctx: &GrassmannianContext) -> Result<BigInt> {
    ctx.check_fits(shape)?;
    Ok(count_zero_strip_less_in(shape, ctx.r(), ctx.width()))
}
