use std::fmt;

use crate::error::{Error, Result};

/// A partition in canonical form: weakly decreasing positive parts.
///
/// Trailing zeros are trimmed on construction, so `(3,1,0)` and `(3,1)` are
/// the same value. Ordering is lexicographic on the parts.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotWeaklyDecreasing(parts));
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition(parts))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// `k` copies of `part`.
    pub fn rectangle(rows: usize, part: usize) -> Self {
        if part == 0 {
            return Self::empty();
        }
        Partition(vec![part; rows])
    }

    /// Sorts the input into decreasing order first.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Self::new(parts).expect("sorted input")
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// The `i`-th part (0-based); zero past the end.
    pub fn part(&self, i: usize) -> usize {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn largest(&self) -> usize {
        self.part(0)
    }

    pub fn fits(&self, height: usize, width: usize) -> bool {
        self.len() <= height && self.largest() <= width
    }

    pub fn check_fits(&self, height: usize, width: usize) -> Result<()> {
        if self.fits(height, width) {
            Ok(())
        } else {
            Err(Error::ShapeDoesNotFit {
                partition: self.clone(),
                height,
                width,
            })
        }
    }

    /// Containment of Young diagrams.
    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.0.iter().zip(&self.0).all(|(o, s)| o <= s)
    }

    /// The conjugate partition; `conjugate().part(j)` is the length of column `j`.
    pub fn conjugate(&self) -> Partition {
        let cols = (0..self.largest())
            .map(|j| self.0.iter().take_while(|&&p| p > j).count())
            .collect();
        Partition(cols)
    }

    /// Parts padded with zeros to length `len`.
    pub fn padded(&self, len: usize) -> Vec<usize> {
        let mut v = self.0.clone();
        v.resize(len.max(v.len()), 0);
        v
    }

    /// Adds `k` to each of the first `rows` parts (padding with zeros).
    pub fn add_columns(&self, rows: usize, k: usize) -> Partition {
        let parts = self.padded(rows).into_iter().map(|p| p + k).collect();
        Partition::new(parts).expect("adding full columns keeps the order")
    }

    /// Subtracts `k` from each of the first `rows` parts, or `None` when
    /// `k^rows` is not contained in `self`.
    pub fn remove_columns(&self, rows: usize, k: usize) -> Option<Partition> {
        if self.len() > rows || (rows > 0 && self.part(rows - 1) < k) {
            return None;
        }
        let parts = self.padded(rows).into_iter().map(|p| p - k).collect();
        Some(Partition::new(parts).expect("removing full columns keeps the order"))
    }

    /// Complement inside the `height x width` rectangle:
    /// `(width - p_height, ..., width - p_1)`.
    pub fn complement_in(&self, height: usize, width: usize) -> Result<Partition> {
        self.check_fits(height, width)?;
        let parts = self.padded(height).into_iter().rev().map(|p| width - p).collect();
        Partition::new(parts)
    }

    /// Every partition in the `height x width` rectangle, in lexicographic order.
    pub fn all_in_box(height: usize, width: usize) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut cur = Vec::with_capacity(height);
        fill_box(height, width, None, &mut cur, &mut out);
        out.sort();
        out
    }

    /// Partitions of `size` in the `height x width` rectangle, lexicographic.
    pub fn all_in_box_of_size(height: usize, width: usize, size: usize) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut cur = Vec::with_capacity(height);
        fill_box(height, width, Some(size), &mut cur, &mut out);
        out.sort();
        out
    }
}

fn fill_box(
    rows_left: usize,
    max_part: usize,
    remaining: Option<usize>,
    cur: &mut Vec<usize>,
    out: &mut Vec<Partition>,
) {
    if let Some(0) = remaining {
        out.push(Partition(cur.clone()));
        return;
    }
    if remaining.is_none() {
        out.push(Partition(cur.clone()));
    }
    if rows_left == 0 {
        return;
    }
    let hi = remaining.map_or(max_part, |s| s.min(max_part));
    for p in 1..=hi {
        if let Some(s) = remaining {
            if p * rows_left < s {
                continue;
            }
        }
        cur.push(p);
        fill_box(rows_left - 1, p, remaining.map(|s| s - p), cur, out);
        cur.pop();
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "()");
        }
        write!(f, "(")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl<const N: usize> TryFrom<[usize; N]> for Partition {
    type Error = Error;

    fn try_from(parts: [usize; N]) -> Result<Self> {
        Partition::new(parts.to_vec())
    }
}

/// The Grassmannian `Gr(r, n)`: fixes the `r x (n - r)` rectangle that
/// indexes its Schubert classes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GrassmannianContext {
    r: usize,
    n: usize,
}

impl GrassmannianContext {
    pub fn new(r: usize, n: usize) -> Result<Self> {
        if r == 0 || r >= n {
            return Err(Error::InvalidContext { r, n });
        }
        Ok(GrassmannianContext { r, n })
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn height(&self) -> usize {
        self.r
    }

    pub fn width(&self) -> usize {
        self.n - self.r
    }

    pub fn fits(&self, p: &Partition) -> bool {
        p.fits(self.height(), self.width())
    }

    pub fn check_fits(&self, p: &Partition) -> Result<()> {
        p.check_fits(self.height(), self.width())
    }

    /// Degree `(r-1)(n-r-1)` of the torus orbit closure class.
    pub fn orbit_degree(&self) -> usize {
        (self.r - 1) * (self.n - self.r - 1)
    }

    /// Dimensions of the inner rectangle `(n-r-1)^(r-1)`.
    pub fn inner_box(&self) -> (usize, usize) {
        (self.r - 1, self.n - self.r - 1)
    }

    /// `Gr(r, n + r - 1)`, where the Mondrian classes live.
    pub fn enlarged(&self) -> GrassmannianContext {
        GrassmannianContext {
            r: self.r,
            n: self.n + self.r - 1,
        }
    }

    pub fn all_partitions(&self) -> Vec<Partition> {
        Partition::all_in_box(self.height(), self.width())
    }

    pub fn partitions_of_size(&self, size: usize) -> Vec<Partition> {
        Partition::all_in_box_of_size(self.height(), self.width(), size)
    }
}

impl fmt::Display for GrassmannianContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Gr({},{})", self.r, self.n)
    }
}

/// Complement of `lambda` in the `r x (n - r)` rectangle.
pub fn complement(lambda: &Partition, ctx: &GrassmannianContext) -> Result<Partition> {
    lambda.complement_in(ctx.height(), ctx.width())
}

/// Complement of `lambda` in the inner `(r-1) x (n-r-1)` rectangle.
pub fn bf_complement(lambda: &Partition, ctx: &GrassmannianContext) -> Result<Partition> {
    let (h, w) = ctx.inner_box();
    lambda.complement_in(h, w)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn canonical_form_trims_zeros() {
        assert_eq!(p(&[3, 1, 0, 0]), p(&[3, 1]));
        assert_eq!(p(&[0]), Partition::empty());
        assert!(Partition::new(vec![1, 2]).is_err());
        assert_eq!(p(&[4, 2, 2]).size(), 8);
    }

    #[test]
    fn complement_examples() {
        let ctx = GrassmannianContext::new(4, 14).unwrap();
        assert_eq!(complement(&p(&[10, 9, 4, 2]), &ctx).unwrap(), p(&[8, 6, 1]));
        assert_eq!(complement(&Partition::empty(), &ctx).unwrap(), p(&[10, 10, 10, 10]));
        assert!(matches!(
            complement(&p(&[11]), &ctx),
            Err(Error::ShapeDoesNotFit { .. })
        ));
        assert!(complement(&p(&[1, 1, 1, 1, 1]), &ctx).is_err());
    }

    #[test]
    fn complement_is_an_involution() {
        let ctx = GrassmannianContext::new(3, 7).unwrap();
        for lam in ctx.all_partitions() {
            let c = complement(&lam, &ctx).unwrap();
            assert_eq!(complement(&c, &ctx).unwrap(), lam);
            assert_eq!(lam.size() + c.size(), 12);
        }
    }

    #[test]
    fn bf_complement_table_rows() {
        let ctx = GrassmannianContext::new(3, 7).unwrap();
        assert_eq!(bf_complement(&p(&[2, 1]), &ctx).unwrap(), p(&[2, 1]));
        assert_eq!(bf_complement(&p(&[3, 3]), &ctx).unwrap(), Partition::empty());
        assert_eq!(bf_complement(&Partition::empty(), &ctx).unwrap(), p(&[3, 3]));
        assert_eq!(bf_complement(&p(&[1]), &ctx).unwrap(), p(&[3, 2]));
        assert!(bf_complement(&p(&[4]), &ctx).is_err());
        for lam in Partition::all_in_box(2, 3) {
            let c = bf_complement(&lam, &ctx).unwrap();
            assert_eq!(bf_complement(&c, &ctx).unwrap(), lam);
        }
    }

    #[test]
    fn box_enumeration_counts() {
        // C(h + w, h) partitions fit in an h x w box
        assert_eq!(Partition::all_in_box(3, 4).len(), 35);
        assert_eq!(Partition::all_in_box(0, 4), vec![Partition::empty()]);
        assert_eq!(Partition::all_in_box(2, 0), vec![Partition::empty()]);
        let sized = Partition::all_in_box_of_size(2, 3, 3);
        assert_eq!(sized, vec![p(&[2, 1]), p(&[3])]);
        assert_eq!(Partition::all_in_box_of_size(2, 2, 5), vec![]);
    }

    #[test]
    fn column_helpers() {
        assert_eq!(p(&[2, 1]).add_columns(3, 2), p(&[4, 3, 2]));
        assert_eq!(p(&[4, 3, 2]).remove_columns(3, 2), Some(p(&[2, 1])));
        assert_eq!(p(&[4, 3]).remove_columns(3, 1), None);
        assert_eq!(p(&[3, 1]).conjugate(), p(&[2, 1, 1]));
        assert!(p(&[3, 2]).contains(&p(&[2, 2])));
        assert!(!p(&[3, 2]).contains(&p(&[1, 1, 1])));
    }

    #[test]
    fn context_validation() {
        assert!(GrassmannianContext::new(0, 3).is_err());
        assert!(GrassmannianContext::new(3, 3).is_err());
        let ctx = GrassmannianContext::new(2, 5).unwrap();
        assert_eq!((ctx.height(), ctx.width(), ctx.orbit_degree()), (2, 3, 2));
        assert_eq!(ctx.enlarged(), GrassmannianContext::new(2, 6).unwrap());
    }
}
