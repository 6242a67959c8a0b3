use std::ops::RangeInclusive;

use anyhow::{bail, Context, Result};
use stripless::{Partition, Tableau};

/// `3,2,1`; the empty partition is `0`.
pub fn parse_partition(s: &str) -> Result<Partition, String> {
    let parts = parse_list(s)?;
    Partition::new(parts).map_err(|e| e.to_string())
}

/// Comma-separated nonnegative integers.
fn parse_list(s: &str) -> Result<Vec<usize>, String> {
    s.split(',')
        .map(|x| x.trim().parse::<usize>().map_err(|_| format!("`{x}` is not a nonnegative integer")))
        .collect()
}

/// `a..b` (inclusive) or a single value.
pub fn parse_range(s: &str) -> Result<RangeInclusive<usize>, String> {
    let num = |x: &str| x.trim().parse::<usize>().map_err(|_| format!("bad range bound `{x}`"));
    match s.split_once("..") {
        Some((lo, hi)) => {
            let hi = hi.strip_prefix('=').unwrap_or(hi);
            let (lo, hi) = (num(lo)?, num(hi)?);
            if lo > hi {
                return Err(format!("empty range {s}"));
            }
            Ok(lo..=hi)
        }
        None => {
            let v = num(s)?;
            Ok(v..=v)
        }
    }
}

/// One row per line, whitespace-separated entries, `#` starts a comment.
pub fn parse_tableau(text: &str) -> Result<Tableau> {
    let mut rows = Vec::new();
    for (k, line) in text.lines().enumerate() {
        let line = line.split('#').next().unwrap_or("");
        if line.trim().is_empty() {
            continue;
        }
        let row = line
            .split_whitespace()
            .map(|x| x.parse::<usize>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .with_context(|| format!("line {}: entries must be positive integers", k + 1))?;
        rows.push(row);
    }
    if rows.iter().flatten().any(|&e| e == 0) {
        bail!("entries must be positive integers");
    }
    Tableau::from_rows(rows).context("rows must have weakly decreasing lengths")
}
