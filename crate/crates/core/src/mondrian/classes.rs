use rayon::prelude::*;

use super::gap::{GapVector, SplitSequence};
use super::maps::{add_columns, append_max_row, theta};
use crate::scalar::Coefficient;
use crate::schubert::{multiply_all, pieri_multiply, FormalClass};
use crate::tableau::{GrassmannianContext, Partition};

/// The factors `sigma_{(n-1)^(s_j - s_{j-1} - 1), n-1-(a_{s_j} - a_{s_{j-1}})}`
/// of one term of the closed formula.
pub fn split_factors(g: &GapVector, s: &SplitSequence) -> Vec<Partition> {
    let n = g.n();
    s.blocks()
        .map(|(lo, hi)| {
            let mut parts = vec![n - 1; hi - lo - 1];
            parts.push(n - 1 - (g.a(hi) - g.a(lo)));
            Partition::new(parts).expect("last part is the smallest")
        })
        .collect()
}

/// The product of [`split_factors`] in `Gr(r, n + r - 1)`, unsigned.
pub fn split_product<C: Coefficient>(g: &GapVector, s: &SplitSequence) -> FormalClass<C> {
    multiply_all(g.big_ctx(), &split_factors(g, s)).expect("factors fit the rectangle")
}

/// `M(a; n)` as the signed sum of split products over every split sequence.
pub fn m_class_explicit<C: Coefficient>(g: &GapVector) -> FormalClass<C> {
    let r = g.r();
    let mut out = FormalClass::zero(g.big_ctx());
    for s in SplitSequence::all(r) {
        let sign = if (r - s.len()) % 2 == 0 { C::one() } else { -C::one() };
        out.add_scaled(&split_product(g, &s), &sign).expect("same context");
    }
    out
}

/// `M(a; n)` by peeling off the first square:
/// `sigma_{n-a_1} * theta(shifted M(a_2-a_1+1, ...; n-a_1+1)) - (n-1, M(a_2, ...; n))`.
pub fn m_class_recursive<C: Coefficient>(g: &GapVector) -> FormalClass<C> {
    if g.r() == 1 {
        return FormalClass::one(g.big_ctx());
    }
    let (n, a1) = (g.n(), g.a(1));
    let inner = m_class_recursive::<C>(&g.shift_past_first_square());
    let lifted = theta(&add_columns(&inner, a1 - 1));
    let first = pieri_multiply(&lifted, n - a1).expect("n - a_1 <= n - 1");
    let tail = m_class_recursive::<C>(&g.drop_first_square());
    let second = append_max_row(&tail, n - 1).expect("n - 1 is the full width");
    first.minus(&second).expect("both live in Gr(r, n + r - 1)")
}

/// `sum_a M(a; n)` over every gap vector of `ctx`, in `Gr(r, n + r - 1)`.
pub fn summed_m_class<C: Coefficient>(ctx: GrassmannianContext) -> FormalClass<C> {
    let big = ctx.enlarged();
    GapVector::all(ctx.r(), ctx.n())
        .par_iter()
        .map(m_class_explicit::<C>)
        .reduce(
            || FormalClass::zero(big),
            |mut acc, c| {
                acc.add_scaled(&c, &C::one()).expect("same context");
                acc
            },
        )
}
