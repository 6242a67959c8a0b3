//! Tableau counts for the Mondrian coefficients, and the refilling map that
//! matches the tableaux of one split product with strip-carrying tableaux of
//! the refined type.

use num_bigint::BigUint;

use super::gap::{GapVector, SplitSequence};
use crate::error::{Error, Result};
use crate::tableau::{has_pair_strip, is_one_strip_less, ssyt_with_content, Partition, Tableau};

fn check_shape(mu: &Partition, g: &GapVector) -> Result<bool> {
    g.big_ctx().check_fits(mu)?;
    Ok(mu.size() == (g.r() - 1) * (g.n() - 1))
}

/// 1-strip-less tableaux of shape `mu` (strips of `n - 1` boxes) with
/// `i`-weight `n - 1 - (a_i - a_{i-1})`: the `sigma_mu` coefficient of `M(a; n)`.
pub fn pie_refined_coefficient(mu: &Partition, g: &GapVector) -> Result<BigUint> {
    if !check_shape(mu, g)? {
        return Ok(BigUint::default());
    }
    let width = g.n() - 1;
    let count = ssyt_with_content(mu, &g.weights())
        .iter()
        .filter(|t| is_one_strip_less(t, width))
        .count();
    Ok(count.into())
}

/// Tableaux of shape `mu` with `i`-weight `n - 1 - (a_i - a_{i-1})` having an
/// `(i, i+1)`-strip for every `i < r` outside the split set: the `sigma_mu`
/// coefficient of the split product for `s`.
pub fn term_coefficient_tableaux(mu: &Partition, g: &GapVector, s: &SplitSequence) -> Result<BigUint> {
    if !check_shape(mu, g)? {
        return Ok(BigUint::default());
    }
    let width = g.n() - 1;
    let required: Vec<usize> = (1..g.r()).filter(|&i| !s.splits_at(i)).collect();
    let count = ssyt_with_content(mu, &g.weights())
        .iter()
        .filter(|t| required.iter().all(|&i| has_pair_strip(t, i, width)))
        .count();
    Ok(count.into())
}

/// Row range holding entries in `lo+1..=hi` in each column of `t`.
fn block_columns(
    t: &Tableau,
    block: usize,
    lo: usize,
    hi: usize,
    width: usize,
) -> Result<Vec<(usize, usize)>> {
    let d = hi - lo;
    (0..width)
        .map(|c| {
            let col = t.column(c);
            let rows: Vec<usize> = (0..col.len()).filter(|&r| col[r] > lo && col[r] <= hi).collect();
            if rows.len() != d && rows.len() + 1 != d {
                return Err(Error::MissingStripStructure {
                    block,
                    column: c,
                    len: rows.len(),
                    tall: d,
                    short: d - 1,
                });
            }
            Ok((rows.first().copied().unwrap_or(0), rows.len()))
        })
        .collect()
}

fn check_input(t: &Tableau, g: &GapVector, s: &SplitSequence, expected: Vec<usize>) -> Result<()> {
    if s.r() != g.r() {
        return Err(Error::InvalidSplitSequence(s.values().to_vec(), g.r()));
    }
    if !t.is_semistandard() {
        return Err(Error::NotSemistandard);
    }
    g.big_ctx().check_fits(t.shape())?;
    let found = t.content(t.max_entry().max(g.r()));
    if found != expected {
        return Err(Error::WrongType { expected, found });
    }
    Ok(())
}

/// Missing entries for the short columns of block `(lo, hi]`, left to right:
/// `a_i - a_{i-1}` copies of `i` for `i = hi, hi-1, ..., lo+1`.
fn missing_sequence(g: &GapVector, lo: usize, hi: usize) -> Vec<usize> {
    ((lo + 1)..=hi)
        .rev()
        .flat_map(|i| std::iter::repeat(i).take(g.a(i) - g.a(i - 1)))
        .collect()
}

/// Sends a tableau of the split type of `s` to the tableau of type
/// `n - 1 - (a_i - a_{i-1})` with the same chain of block shapes.
pub fn refill(t: &Tableau, g: &GapVector, s: &SplitSequence) -> Result<Tableau> {
    check_input(t, g, s, s.split_type(g))?;
    let width = g.n() - 1;
    let mut rows = t.rows().to_vec();
    for (block, (lo, hi)) in s.blocks().enumerate() {
        if hi - lo == 1 {
            continue;
        }
        let columns = block_columns(t, block, lo, hi, width)?;
        let mut missing = missing_sequence(g, lo, hi).into_iter();
        for (c, &(top, len)) in columns.iter().enumerate() {
            let skip = if len == hi - lo {
                None
            } else {
                // the type check fixes the number of short columns
                Some(missing.next().expect("one missing entry per short column"))
            };
            let entries = ((lo + 1)..=hi).filter(|&e| Some(e) != skip);
            for (k, e) in entries.enumerate() {
                rows[top + k][c] = e;
            }
        }
    }
    let out = Tableau::from_rows(rows)?;
    if !out.is_semistandard() {
        return Err(Error::NotSemistandard);
    }
    Ok(out)
}

/// Inverse of [`refill`]: tall columns become `lo+1..=hi`, short ones
/// `lo+1..hi`.
pub fn unrefill(t: &Tableau, g: &GapVector, s: &SplitSequence) -> Result<Tableau> {
    check_input(t, g, s, g.weights())?;
    let width = g.n() - 1;
    let mut rows = t.rows().to_vec();
    for (block, (lo, hi)) in s.blocks().enumerate() {
        if hi - lo == 1 {
            continue;
        }
        for (c, (top, len)) in block_columns(t, block, lo, hi, width)?.into_iter().enumerate() {
            for k in 0..len {
                rows[top + k][c] = lo + 1 + k;
            }
        }
    }
    let out = Tableau::from_rows(rows)?;
    // anything outside the image of refill has no preimage
    if refill(&out, g, s).ok().as_ref() != Some(t) {
        return Err(Error::NotStripless);
    }
    Ok(out)
}

/// One `(i, i+1)`-strip per `i` inside each block of a refilled tableau, as
/// `(i, boxes)` with boxes `(row, col)` in column order.
///
/// In a run of tall columns the box holding `q` is left out, where `q` is
/// the entry missing from the short column just right of the run (`lo + 1`
/// when the run reaches the last column); the `t`-th remaining box of each
/// column from the top goes to the strip for `lo + t`.
pub fn bold_strips(t: &Tableau, g: &GapVector, s: &SplitSequence) -> Result<Vec<(usize, Vec<(usize, usize)>)>> {
    check_input(t, g, s, g.weights())?;
    let width = g.n() - 1;
    let mut out = Vec::new();
    for (block, (lo, hi)) in s.blocks().enumerate() {
        let d = hi - lo;
        if d == 1 {
            continue;
        }
        let columns = block_columns(t, block, lo, hi, width)?;
        let is_tall = |c: usize| columns[c].1 == d;
        let missing_of = |c: usize| {
            let (top, len) = columns[c];
            ((lo + 1)..=hi)
                .find(|&e| !(top..top + len).any(|r| t.get(r, c) == Some(e)))
                .expect("short columns miss one entry")
        };
        let mut left_out = vec![None; width];
        let mut c = 0;
        while c < width {
            if !is_tall(c) {
                c += 1;
                continue;
            }
            let start = c;
            while c < width && is_tall(c) {
                c += 1;
            }
            let q = if c < width { missing_of(c) } else { lo + 1 };
            for slot in &mut left_out[start..c] {
                *slot = Some(q);
            }
        }
        let mut strips = vec![Vec::with_capacity(width); d - 1];
        for (c, &(top, len)) in columns.iter().enumerate() {
            let kept = (top..top + len).filter(|&r| t.get(r, c) != left_out[c]);
            for (k, r) in kept.enumerate() {
                strips[k].push((r, c));
            }
        }
        out.extend(strips.into_iter().enumerate().map(|(k, boxes)| (lo + 1 + k, boxes)));
    }
    Ok(out)
}
