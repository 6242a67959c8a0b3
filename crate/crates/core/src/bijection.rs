//! Standard tableaux of shape `mu-bar` with exactly `r - 1` descents versus
//! 1-strip-less tableaux of shape `mu`, where `mu-bar` is the complement of
//! `mu` in the `r x (n - r)` rectangle.
//!
//! Going forward, the entries between consecutive descents collapse to a
//! single label, giving a semistandard filling of `mu-bar` over `1..=r`. That
//! filling, turned upside down inside the rectangle, determines `mu` column by
//! column: each column of the rectangle holds every label exactly once.

use crate::error::{Error, Result};
use crate::tableau::{complement, descents, is_one_strip_less, GrassmannianContext, Tableau};

/// The descents `i_1 < ... < i_{r-1}` of a standard tableau.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DescentProfile(Vec<usize>);

impl DescentProfile {
    /// Fails unless `t` is standard with exactly `r - 1` descents.
    pub fn of(t: &Tableau, r: usize) -> Result<Self> {
        let found: Vec<usize> = descents(t)?.into_iter().collect();
        if found.len() + 1 != r {
            return Err(Error::DescentCount {
                expected: r.saturating_sub(1),
                found: found.len(),
            });
        }
        Ok(DescentProfile(found))
    }

    pub fn descents(&self) -> &[usize] {
        &self.0
    }

    /// Number of labels, `r`.
    pub fn blocks(&self) -> usize {
        self.0.len() + 1
    }

    /// The label of entry `k`: one more than the number of descents below `k`.
    pub fn label(&self, k: usize) -> usize {
        1 + self.0.partition_point(|&d| d < k)
    }
}

/// Replaces the entries up to the first descent by 1, those up to the next
/// by 2, and so on.
pub fn syt_to_blocks(t: &Tableau, r: usize) -> Result<Tableau> {
    let profile = DescentProfile::of(t, r)?;
    let rows = t
        .rows()
        .iter()
        .map(|row| row.iter().map(|&k| profile.label(k)).collect())
        .collect();
    let out = Tableau::from_rows(rows)?;
    debug_assert!(out.is_semistandard());
    if let Some(missing) = (1..=r).find(|&e| out.weight(e) == 0) {
        return Err(Error::EmptyBlock(missing));
    }
    Ok(out)
}

/// Fills each column of the rectangle with the labels missing from the
/// rotated column of `filling`, increasing downwards.
fn complementary_columns(filling: &Tableau, r: usize, width: usize) -> Vec<Vec<usize>> {
    (0..width)
        .map(|c| {
            let used = filling.column(width - 1 - c);
            (1..=r).filter(|e| !used.contains(e)).collect()
        })
        .collect()
}

fn from_columns(columns: &[Vec<usize>]) -> Result<Tableau> {
    let height = columns.iter().map(Vec::len).max().unwrap_or(0);
    let rows = (0..height)
        .map(|i| columns.iter().map_while(|col| col.get(i).copied()).collect())
        .collect();
    Tableau::from_rows(rows)
}

/// The forward map.
pub fn syt_to_stripless(t: &Tableau, ctx: &GrassmannianContext) -> Result<Tableau> {
    if !t.is_standard() {
        return Err(Error::NotStandard);
    }
    let mu = complement(t.shape(), ctx)?;
    let blocks = syt_to_blocks(t, ctx.r())?;
    let out = from_columns(&complementary_columns(&blocks, ctx.r(), ctx.width()))?;
    debug_assert_eq!(out.shape(), &mu);
    if !out.is_semistandard() {
        return Err(Error::NotSemistandard);
    }
    Ok(out)
}

/// The inverse map: rebuild the labelled filling of `mu-bar`, then number
/// the boxes label by label, left to right.
pub fn stripless_to_syt(t: &Tableau, ctx: &GrassmannianContext) -> Result<Tableau> {
    let (r, width) = (ctx.r(), ctx.width());
    if !t.is_semistandard() {
        return Err(Error::NotSemistandard);
    }
    ctx.check_fits(t.shape())?;
    if t.max_entry() > r {
        return Err(Error::OutOfRange {
            what: "entry",
            value: t.max_entry(),
            max: r,
        });
    }
    if !is_one_strip_less(t, width) {
        return Err(Error::NotStripless);
    }
    let blocks = from_columns(&complementary_columns(t, r, width))?;
    let mut rows: Vec<Vec<usize>> = blocks.rows().iter().map(|row| vec![0; row.len()]).collect();
    let mut next = 1;
    for label in 1..=r {
        // boxes with one label sit in distinct columns
        for c in 0..width {
            if let Some(i) = blocks.column(c).iter().position(|&e| e == label) {
                rows[i][c] = next;
                next += 1;
            }
        }
    }
    let out = Tableau::from_rows(rows)?;
    if !out.is_standard() {
        return Err(Error::NotStandard);
    }
    DescentProfile::of(&out, r)?;
    Ok(out)
}
