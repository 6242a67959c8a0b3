use crate::error::{Error, Result};
use crate::tableau::{bf_complement, GrassmannianContext, Partition};

/// `1 = a_0 < a_1 < ... < a_r = n`, the boundaries of the Mondrian squares
/// attached to `lambda` in the inner `(n-r-1)^(r-1)` rectangle.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GapVector(Vec<usize>);

impl GapVector {
    /// Takes the full sequence `a_0, ..., a_r`.
    pub fn new(a: Vec<usize>) -> Result<Self> {
        let valid = a.len() >= 2 && a[0] == 1 && a.windows(2).all(|w| w[0] < w[1]);
        if !valid {
            return Err(Error::InvalidGapVector(a));
        }
        Ok(GapVector(a))
    }

    /// Takes the interior `a_1, ..., a_{r-1}` and `n`.
    pub fn from_interior(interior: &[usize], n: usize) -> Result<Self> {
        let mut a = Vec::with_capacity(interior.len() + 2);
        a.push(1);
        a.extend_from_slice(interior);
        a.push(n);
        Self::new(a)
    }

    /// Every gap vector with the given `r` and `n`, in lexicographic order.
    pub fn all(r: usize, n: usize) -> Vec<GapVector> {
        let mut out = Vec::new();
        if r == 0 || n < r + 1 {
            return out;
        }
        let mut cur = vec![1];
        choose_interior(2, n, r - 1, &mut cur, &mut out);
        out
    }

    pub fn values(&self) -> &[usize] {
        &self.0
    }

    pub fn r(&self) -> usize {
        self.0.len() - 1
    }

    pub fn n(&self) -> usize {
        *self.0.last().unwrap()
    }

    pub fn a(&self, j: usize) -> usize {
        self.0[j]
    }

    /// `Gr(r, n)`, where `sigma_lambda * sigma_lambda~` lives.
    pub fn small_ctx(&self) -> GrassmannianContext {
        GrassmannianContext::new(self.r(), self.n()).expect("n >= r + 1 by construction")
    }

    /// `Gr(r, n + r - 1)`, where the Mondrian class lives.
    pub fn big_ctx(&self) -> GrassmannianContext {
        self.small_ctx().enlarged()
    }

    /// `w_i = n - 1 - (a_i - a_{i-1})` for `i = 1..=r`.
    pub fn weights(&self) -> Vec<usize> {
        let n = self.n();
        self.0.windows(2).map(|w| n - 1 - (w[1] - w[0])).collect()
    }

    /// `n - r - (a_i - a_{i-1})`: the weights after removing the first
    /// `r - 1` columns. `None` if some weight would be negative.
    pub fn shifted_weights(&self) -> Option<Vec<usize>> {
        let base = self.n() - self.r();
        self.0.windows(2).map(|w| base.checked_sub(w[1] - w[0])).collect()
    }

    /// The gap vector of the tail `(1, a_2, ..., a_r)`.
    pub(crate) fn drop_first_square(&self) -> GapVector {
        let mut a = vec![1];
        a.extend_from_slice(&self.0[2..]);
        GapVector(a)
    }

    /// The gap vector `(a_{j+1} - a_1 + 1)_j` of the squares after the first.
    pub(crate) fn shift_past_first_square(&self) -> GapVector {
        let a1 = self.0[1];
        GapVector(self.0[1..].iter().map(|&x| x - a1 + 1).collect())
    }
}

fn choose_interior(from: usize, n: usize, left: usize, cur: &mut Vec<usize>, out: &mut Vec<GapVector>) {
    if left == 0 {
        let mut a = cur.clone();
        a.push(n);
        out.push(GapVector(a));
        return;
    }
    for x in from..n {
        if n - x < left {
            break;
        }
        cur.push(x);
        choose_interior(x + 1, n, left - 1, cur, out);
        cur.pop();
    }
}

/// `0 = s_0 < s_1 < ... < s_l = r`, indexing one signed term of the closed
/// Mondrian formula.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SplitSequence(Vec<usize>);

impl SplitSequence {
    pub fn new(s: Vec<usize>, r: usize) -> Result<Self> {
        let valid = s.len() >= 2
            && s[0] == 0
            && *s.last().unwrap() == r
            && s.windows(2).all(|w| w[0] < w[1]);
        if !valid {
            return Err(Error::InvalidSplitSequence(s, r));
        }
        Ok(SplitSequence(s))
    }

    /// All `2^(r-1)` split sequences for `r`.
    pub fn all(r: usize) -> Vec<SplitSequence> {
        let inner = r.saturating_sub(1);
        (0u64..(1 << inner))
            .map(|mask| {
                let mut s = vec![0];
                s.extend((1..r).filter(|i| mask >> (i - 1) & 1 == 1));
                s.push(r);
                SplitSequence(s)
            })
            .collect()
    }

    /// `0, 1, ..., r`.
    pub fn finest(r: usize) -> SplitSequence {
        SplitSequence((0..=r).collect())
    }

    pub fn values(&self) -> &[usize] {
        &self.0
    }

    pub fn r(&self) -> usize {
        *self.0.last().unwrap()
    }

    /// Number of blocks `l`.
    pub fn len(&self) -> usize {
        self.0.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Consecutive pairs `(s_{j-1}, s_j)`.
    pub fn blocks(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.0.windows(2).map(|w| (w[0], w[1]))
    }

    /// Whether `i` is one of `s_1, ..., s_{l-1}`.
    pub fn splits_at(&self, i: usize) -> bool {
        self.0[1..self.0.len() - 1].contains(&i)
    }

    /// `w_{s_j} = n - 1 - (a_{s_j} - a_{s_{j-1}})`, all other weights `n - 1`:
    /// the type counted by the Pieri expansion of one split product.
    pub fn split_type(&self, g: &GapVector) -> Vec<usize> {
        let n = g.n();
        let mut w = vec![n - 1; g.r()];
        for (lo, hi) in self.blocks() {
            w[hi - 1] = n - 1 - (g.a(hi) - g.a(lo));
        }
        w
    }
}

/// `a_j = n - r - lambda_j + j`, with `a_0 = 1` and `a_r = n`.
pub fn gap_of_partition(lambda: &Partition, ctx: &GrassmannianContext) -> Result<GapVector> {
    let (h, w) = ctx.inner_box();
    lambda.check_fits(h, w)?;
    let (r, n) = (ctx.r(), ctx.n());
    let interior: Vec<usize> = (1..r).map(|j| n - r - lambda.part(j - 1) + j).collect();
    GapVector::from_interior(&interior, n)
}

/// Inverse of [`gap_of_partition`]: `lambda_j = n - r + j - a_j`.
pub fn partition_of_gap(g: &GapVector) -> Partition {
    let (r, n) = (g.r(), g.n());
    let parts = (1..r).map(|j| n - r + j - g.a(j)).collect();
    Partition::new(parts).expect("gap vectors give partitions")
}

/// One row of the table pairing `lambda` with its gap vector.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GapRow {
    pub lambda: Partition,
    pub tilde: Partition,
    pub gap: GapVector,
    /// `n - r - (a_i - a_{i-1})` for `i = 1..=r`.
    pub weights: Vec<usize>,
}

/// Every `lambda` in the inner rectangle with its complement, gap vector and
/// shifted weights, ordered by `(lambda_{r-1}, ..., lambda_1)`.
pub fn gap_table(ctx: &GrassmannianContext) -> Vec<GapRow> {
    let (h, w) = ctx.inner_box();
    let mut rows: Vec<GapRow> = Partition::all_in_box(h, w)
        .into_iter()
        .map(|lambda| {
            let gap = gap_of_partition(&lambda, ctx).expect("fits the inner box");
            GapRow {
                tilde: bf_complement(&lambda, ctx).expect("fits the inner box"),
                weights: gap.shifted_weights().expect("a_i - a_{i-1} <= n - r"),
                gap,
                lambda,
            }
        })
        .collect();
    rows.sort_by_key(|row| {
        let mut key = row.lambda.padded(h);
        key.reverse();
        key
    });
    rows
}
