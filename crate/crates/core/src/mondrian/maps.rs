//! Relabelings of Schubert classes between Grassmannians of different sizes.

use crate::error::{Error, Result};
use crate::scalar::Coefficient;
use crate::schubert::FormalClass;
use crate::tableau::{GrassmannianContext, Partition};

fn context(r: usize, n: usize) -> Result<GrassmannianContext> {
    GrassmannianContext::new(r, n)
}

/// `Gr(r-1, N-1) -> Gr(r, N)`: `sigma_mu` goes to `sigma_(mu, 0)`.
pub fn theta<C: Coefficient>(c: &FormalClass<C>) -> FormalClass<C> {
    let src = c.ctx();
    let target = context(src.r() + 1, src.n() + 1).expect("r + 1 < n + 1");
    c.remap(target, |mu| Some(mu.clone())).expect("same width, one more row").0
}

/// `Gr(r-1, N) -> Gr(r, N)`: `sigma_mu` goes to `theta(sigma_{mu - 1^(r-1)})`,
/// and to zero when `mu` has fewer than `r - 1` nonzero parts.
pub fn flag_correspondence<C: Coefficient>(c: &FormalClass<C>) -> Result<FormalClass<C>> {
    let src = c.ctx();
    let target = context(src.r() + 1, src.n())?;
    let rows = src.r();
    Ok(c.remap(target, |mu| mu.remove_columns(rows, 1))?.0)
}

/// `Gr(r-1, N-1) -> Gr(r, N)`: `sigma_mu` goes to `sigma_(row, mu)`.
///
/// `row` must be at least every largest part and at most the width.
pub fn append_max_row<C: Coefficient>(c: &FormalClass<C>, row: usize) -> Result<FormalClass<C>> {
    let src = c.ctx();
    let target = context(src.r() + 1, src.n() + 1)?;
    if row > target.width() {
        return Err(Error::OutOfRange {
            what: "appended row",
            value: row,
            max: target.width(),
        });
    }
    if let Some(largest) = c.iter().map(|(mu, _)| mu.largest()).max() {
        if row < largest {
            return Err(Error::NotWeaklyDecreasing(vec![row, largest]));
        }
    }
    Ok(c.remap(target, |mu| {
        let mut parts = vec![row];
        parts.extend_from_slice(mu.parts());
        Partition::new(parts).ok()
    })?
    .0)
}

/// `Gr(r, N) -> Gr(r, N + k)`: adds `k` to every one of the `r` parts.
pub fn add_columns<C: Coefficient>(c: &FormalClass<C>, k: usize) -> FormalClass<C> {
    let src = c.ctx();
    let target = context(src.r(), src.n() + k).expect("wider context is valid");
    let rows = src.r();
    c.remap(target, |mu| Some(mu.add_columns(rows, k)))
        .expect("k more columns fit")
        .0
}

/// `Gr(r, N) -> Gr(r, N - s)`: `sigma_mu` goes to `sigma_{mu - s^r}`.
///
/// Terms not containing `s^r` are dropped; their number is returned with the
/// class.
pub fn restrict_shift<C: Coefficient>(c: &FormalClass<C>, s: usize) -> Result<(FormalClass<C>, usize)> {
    let src = c.ctx();
    let target = match src.n().checked_sub(s) {
        Some(n) => context(src.r(), n)?,
        None => {
            return Err(Error::OutOfRange {
                what: "shift",
                value: s,
                max: src.width(),
            })
        }
    };
    let rows = src.r();
    c.remap(target, |mu| mu.remove_columns(rows, s))
}
