use std::collections::BTreeSet;
use std::fmt;

use super::Partition;
use crate::error::{Error, Result};

/// A filling of a Young diagram by positive integers, stored row by row.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Tableau {
    shape: Partition,
    rows: Vec<Vec<usize>>,
}

impl Tableau {
    /// Builds a tableau from its rows; the shape is inferred.
    ///
    /// Empty trailing rows are dropped. Entries must be positive.
    pub fn from_rows(mut rows: Vec<Vec<usize>>) -> Result<Self> {
        while rows.last().is_some_and(|r| r.is_empty()) {
            rows.pop();
        }
        if rows.iter().flatten().any(|&e| e == 0) {
            return Err(Error::NotSemistandard);
        }
        let shape = Partition::new(rows.iter().map(Vec::len).collect())
            .map_err(|_| Error::RaggedRows)?;
        Ok(Tableau { shape, rows })
    }

    pub fn empty() -> Self {
        Tableau {
            shape: Partition::empty(),
            rows: Vec::new(),
        }
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn into_rows(self) -> Vec<Vec<usize>> {
        self.rows
    }

    pub fn size(&self) -> usize {
        self.shape.size()
    }

    /// Entry at `(row, col)`, 0-based.
    pub fn get(&self, row: usize, col: usize) -> Option<usize> {
        self.rows.get(row).and_then(|r| r.get(col)).copied()
    }

    /// Entries of column `col` from top to bottom.
    pub fn column(&self, col: usize) -> Vec<usize> {
        self.rows.iter().map_while(|r| r.get(col).copied()).collect()
    }

    pub fn entries(&self) -> impl Iterator<Item = usize> + '_ {
        self.rows.iter().flatten().copied()
    }

    pub fn max_entry(&self) -> usize {
        self.entries().max().unwrap_or(0)
    }

    /// Number of boxes containing `i`.
    pub fn weight(&self, i: usize) -> usize {
        self.entries().filter(|&e| e == i).count()
    }

    /// `(w_1, ..., w_k)`, the type of the filling over the alphabet `1..=k`.
    pub fn content(&self, k: usize) -> Vec<usize> {
        let mut out = vec![0; k];
        for e in self.entries() {
            if (1..=k).contains(&e) {
                out[e - 1] += 1;
            }
        }
        out
    }

    pub fn is_semistandard(&self) -> bool {
        for (i, row) in self.rows.iter().enumerate() {
            if row.windows(2).any(|w| w[0] > w[1]) {
                return false;
            }
            if i > 0 && row.iter().zip(&self.rows[i - 1]).any(|(b, a)| b <= a) {
                return false;
            }
        }
        true
    }

    pub fn is_standard(&self) -> bool {
        let n = self.size();
        let mut seen = vec![false; n + 1];
        for e in self.entries() {
            if e > n || seen[e] {
                return false;
            }
            seen[e] = true;
        }
        self.is_semistandard() && self.rows.iter().all(|r| r.windows(2).all(|w| w[0] < w[1]))
    }

    /// Row (0-based) of every entry of a standard tableau, indexed by entry.
    fn rows_of_entries(&self) -> Vec<usize> {
        let mut out = vec![0; self.size() + 1];
        for (i, row) in self.rows.iter().enumerate() {
            for &e in row {
                out[e] = i;
            }
        }
        out
    }

    /// Renders one row per line with single-space separators.
    pub fn to_grid(&self) -> String {
        let mut s = String::new();
        for row in &self.rows {
            let line: Vec<String> = row.iter().map(usize::to_string).collect();
            s.push_str(&line.join(" "));
            s.push('\n');
        }
        s
    }
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_grid())
    }
}

/// Entries `i` of a standard tableau such that `i + 1` lies in a strictly lower row.
pub fn descents(t: &Tableau) -> Result<BTreeSet<usize>> {
    if !t.is_standard() {
        return Err(Error::NotStandard);
    }
    let row = t.rows_of_entries();
    Ok((1..t.size()).filter(|&i| row[i + 1] > row[i]).collect())
}

/// Cell geometry shared by the backtracking enumerators.
#[derive(Debug, Clone)]
struct Cells {
    shape: Partition,
    /// Flat index of the cell to the left, if any.
    left: Vec<Option<usize>>,
    /// Flat index of the cell above, if any.
    above: Vec<Option<usize>>,
    /// Boxes strictly below each cell in its column.
    below: Vec<usize>,
}

impl Cells {
    fn new(shape: &Partition) -> Self {
        let conj = shape.conjugate();
        let mut offsets = Vec::with_capacity(shape.len());
        let mut acc = 0;
        for &p in shape.parts() {
            offsets.push(acc);
            acc += p;
        }
        let (mut left, mut above, mut below) = (Vec::new(), Vec::new(), Vec::new());
        for (i, &p) in shape.parts().iter().enumerate() {
            for j in 0..p {
                left.push((j > 0).then(|| offsets[i] + j - 1));
                above.push((i > 0).then(|| offsets[i - 1] + j));
                below.push(conj.part(j) - i - 1);
            }
        }
        Cells {
            shape: shape.clone(),
            left,
            above,
            below,
        }
    }

    fn len(&self) -> usize {
        self.left.len()
    }

    fn to_tableau(&self, flat: &[usize]) -> Tableau {
        let mut rows = Vec::with_capacity(self.shape.len());
        let mut it = flat.iter().copied();
        for &p in self.shape.parts() {
            rows.push(it.by_ref().take(p).collect());
        }
        Tableau {
            shape: self.shape.clone(),
            rows,
        }
    }
}

/// Every semistandard tableau of `shape` with entries in `1..=max_entry`.
///
/// Cells are filled row by row, left to right, smallest admissible entry
/// first, so the output is sorted lexicographically by reading word.
pub fn enumerate_ssyt(shape: &Partition, max_entry: usize) -> SsytIter {
    let cells = Cells::new(shape);
    let exhausted = shape.len() > max_entry;
    SsytIter {
        flat: vec![0; cells.len()],
        cells,
        max_entry,
        started: false,
        exhausted,
    }
}

#[derive(Debug, Clone)]
pub struct SsytIter {
    cells: Cells,
    flat: Vec<usize>,
    max_entry: usize,
    started: bool,
    exhausted: bool,
}

impl SsytIter {
    /// Advances the filling from cell `k`; `bump` means "try the next value at
    /// `k`" rather than "start `k` at its lower bound".
    fn advance(&mut self, mut k: usize, mut bump: bool) -> bool {
        let len = self.cells.len();
        loop {
            if k == len {
                return true;
            }
            let lo = self.cells.left[k].map_or(1, |l| self.flat[l]).max(
                self.cells.above[k].map_or(1, |a| self.flat[a] + 1),
            );
            let hi = self.max_entry.saturating_sub(self.cells.below[k]);
            let v = if bump { self.flat[k] + 1 } else { lo };
            if v <= hi {
                self.flat[k] = v;
                k += 1;
                bump = false;
            } else if k == 0 {
                return false;
            } else {
                k -= 1;
                bump = true;
            }
        }
    }
}

impl Iterator for SsytIter {
    type Item = Tableau;

    fn next(&mut self) -> Option<Tableau> {
        if self.exhausted {
            return None;
        }
        let ok = if !self.started {
            self.started = true;
            self.advance(0, false)
        } else if self.cells.len() == 0 {
            false
        } else {
            self.advance(self.cells.len() - 1, true)
        };
        if ok {
            Some(self.cells.to_tableau(&self.flat))
        } else {
            self.exhausted = true;
            None
        }
    }
}

/// Every standard tableau of `shape`.
///
/// Entries `1, 2, ...` are placed in turn, each in the highest row that can
/// accept it first.
pub fn enumerate_syt(shape: &Partition) -> SytIter {
    SytIter {
        shape: shape.clone(),
        choice: Vec::with_capacity(shape.size()),
        fill: vec![0; shape.len()],
        started: false,
        exhausted: false,
    }
}

#[derive(Debug, Clone)]
pub struct SytIter {
    shape: Partition,
    /// Row chosen for entry `k + 1`.
    choice: Vec<usize>,
    /// Current row lengths.
    fill: Vec<usize>,
    started: bool,
    exhausted: bool,
}

impl SytIter {
    fn accepts(&self, row: usize) -> bool {
        self.fill[row] < self.shape.part(row) && (row == 0 || self.fill[row - 1] > self.fill[row])
    }

    fn first_row_from(&self, start: usize) -> Option<usize> {
        (start..self.shape.len()).find(|&r| self.accepts(r))
    }

    fn advance(&mut self, mut bump: bool) -> bool {
        let total = self.shape.size();
        loop {
            if !bump && self.choice.len() == total {
                return true;
            }
            let start = if bump {
                match self.choice.pop() {
                    Some(prev) => {
                        self.fill[prev] -= 1;
                        prev + 1
                    }
                    None => return false,
                }
            } else {
                0
            };
            match self.first_row_from(start) {
                Some(r) => {
                    self.fill[r] += 1;
                    self.choice.push(r);
                    bump = false;
                }
                None => bump = true,
            }
        }
    }

    fn current(&self) -> Tableau {
        let mut rows: Vec<Vec<usize>> = self.shape.parts().iter().map(|&p| Vec::with_capacity(p)).collect();
        for (k, &r) in self.choice.iter().enumerate() {
            rows[r].push(k + 1);
        }
        Tableau {
            shape: self.shape.clone(),
            rows,
        }
    }
}

impl Iterator for SytIter {
    type Item = Tableau;

    fn next(&mut self) -> Option<Tableau> {
        if self.exhausted {
            return None;
        }
        let ok = if !self.started {
            self.started = true;
            self.advance(false)
        } else {
            self.advance(true)
        };
        if ok {
            Some(self.current())
        } else {
            self.exhausted = true;
            None
        }
    }
}

/// Semistandard tableaux of `shape` with the prescribed content
/// (`content[i-1]` copies of `i`), built as a chain of horizontal strips.
pub fn ssyt_with_content(shape: &Partition, content: &[usize]) -> Vec<Tableau> {
    let mut out = Vec::new();
    if shape.size() != content.iter().sum::<usize>() {
        return out;
    }
    let mut grid: Vec<Vec<usize>> = shape.parts().iter().map(|&p| vec![0; p]).collect();
    strip_chain(shape.padded(shape.len()), content, &mut grid, &mut out);
    out.sort();
    out
}

/// Peels horizontal strips for the largest entry first.
fn strip_chain(outer: Vec<usize>, content: &[usize], grid: &mut Vec<Vec<usize>>, out: &mut Vec<Tableau>) {
    let Some((&w, rest)) = content.split_last() else {
        if outer.iter().all(|&p| p == 0) {
            let rows = grid.clone();
            out.push(Tableau::from_rows(rows).expect("valid rows"));
        }
        return;
    };
    let entry = content.len();
    let mut inner = outer.clone();
    choose_strip(&outer, &mut inner, 0, w, &mut |inner| {
        for (i, (&o, &p)) in outer.iter().zip(inner).enumerate() {
            for j in p..o {
                grid[i][j] = entry;
            }
        }
        strip_chain(inner.to_vec(), rest, grid, out);
    });
}

/// Enumerates `inner` with `outer / inner` a horizontal strip of `size` boxes.
fn choose_strip(
    outer: &[usize],
    inner: &mut Vec<usize>,
    row: usize,
    size: usize,
    visit: &mut dyn FnMut(&[usize]),
) {
    if row == outer.len() {
        if size == 0 {
            visit(inner);
        }
        return;
    }
    let floor = outer.get(row + 1).copied().unwrap_or(0);
    let room: usize = (row..outer.len())
        .map(|i| outer[i] - outer.get(i + 1).copied().unwrap_or(0))
        .sum();
    if room < size {
        return;
    }
    for take in 0..=(outer[row] - floor).min(size) {
        inner[row] = outer[row] - take;
        choose_strip(outer, inner, row + 1, size - take, visit);
    }
    inner[row] = outer[row];
}
