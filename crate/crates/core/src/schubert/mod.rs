//! The Schubert basis of `H*(Gr(r, n))`: formal classes, the Pieri and
//! Littlewood-Richardson products, and the Berget-Fink orbit class.

mod class;
mod lr;

pub use class::FormalClass;
pub use lr::{lr_coefficient, schubert_product};

use crate::error::{Error, Result};
use crate::scalar::Coefficient;
use crate::tableau::{bf_complement, GrassmannianContext, Partition};

/// Every `nu` inside the `height x width` box with `nu / mu` a horizontal
/// strip of `k` boxes.
pub fn horizontal_strip_extensions(mu: &Partition, k: usize, height: usize, width: usize) -> Vec<Partition> {
    let base = mu.padded(height);
    let mut out = Vec::new();
    let mut cur = base.clone();
    extend_row(&base, 0, k, width, &mut cur, &mut out);
    out.sort();
    out
}

fn extend_row(
    base: &[usize],
    row: usize,
    left: usize,
    width: usize,
    cur: &mut Vec<usize>,
    out: &mut Vec<Partition>,
) {
    if row == base.len() {
        if left == 0 {
            out.push(Partition::new(cur.clone()).expect("strip extension is a partition"));
        }
        return;
    }
    let cap = if row == 0 { width } else { base[row - 1] };
    if cap < base[row] {
        return;
    }
    for add in 0..=(cap - base[row]).min(left) {
        cur[row] = base[row] + add;
        extend_row(base, row + 1, left - add, width, cur, out);
    }
    cur[row] = base[row];
}

/// Multiplies by the special class `sigma_(k)` using the Pieri rule; terms
/// leaving the rectangle are discarded.
pub fn pieri_multiply<C: Coefficient>(c: &FormalClass<C>, k: usize) -> Result<FormalClass<C>> {
    let ctx = c.ctx();
    if k > ctx.width() {
        return Err(Error::OutOfRange {
            what: "Pieri degree",
            value: k,
            max: ctx.width(),
        });
    }
    let mut out = FormalClass::zero(ctx);
    for (mu, coeff) in c.iter() {
        for nu in horizontal_strip_extensions(mu, k, ctx.height(), ctx.width()) {
            out.add_term(nu, coeff.clone());
        }
    }
    Ok(out)
}

/// The cup product, truncated to the rectangle.
pub fn multiply<C: Coefficient>(a: &FormalClass<C>, b: &FormalClass<C>) -> Result<FormalClass<C>> {
    let ctx = a.ctx();
    if ctx != b.ctx() {
        return Err(Error::ContextMismatch(ctx.r(), ctx.n(), b.ctx().r(), b.ctx().n()));
    }
    let mut out = FormalClass::zero(ctx);
    for (lambda, x) in a.iter() {
        for (mu, y) in b.iter() {
            let xy = x.clone() * y.clone();
            for (nu, c) in schubert_product(lambda, mu, ctx.height(), ctx.width()).iter() {
                let c = C::from_u64(*c).expect("LR coefficient fits the coefficient ring");
                out.add_term(nu.clone(), xy.clone() * c);
            }
        }
    }
    Ok(out)
}

/// Product of the Schubert classes indexed by `factors`, left to right.
pub fn multiply_all<C: Coefficient>(ctx: GrassmannianContext, factors: &[Partition]) -> Result<FormalClass<C>> {
    let mut acc = FormalClass::one(ctx);
    for f in factors {
        acc = multiply(&acc, &FormalClass::schubert(ctx, f.clone())?)?;
    }
    Ok(acc)
}

/// `sum_{lambda in (n-r-1)^(r-1)} sigma_lambda * sigma_lambda~`, where
/// `lambda~` is the complement in that inner rectangle.
pub fn berget_fink_class<C: Coefficient>(ctx: GrassmannianContext) -> FormalClass<C> {
    let (h, w) = ctx.inner_box();
    let mut out = FormalClass::zero(ctx);
    for lambda in Partition::all_in_box(h, w) {
        let tilde = bf_complement(&lambda, &ctx).expect("lambda fits the inner box");
        let term = multiply(
            &FormalClass::schubert(ctx, lambda).expect("inner box fits"),
            &FormalClass::schubert(ctx, tilde).expect("inner box fits"),
        )
        .expect("same context");
        out.add_scaled(&term, &C::one()).expect("same context");
    }
    out
}

/// Coefficients as `u64` counts; convenience for tests and the CLI.
pub fn class_from_counts<C: Coefficient>(
    ctx: GrassmannianContext,
    terms: impl IntoIterator<Item = (Partition, u64)>,
) -> Result<FormalClass<C>> {
    FormalClass::from_terms(
        ctx,
        terms
            .into_iter()
            .map(|(p, c)| (p, C::from_u64(c).expect("count fits the coefficient ring"))),
    )
}
