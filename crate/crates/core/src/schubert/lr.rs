//! Littlewood-Richardson coefficients by lattice-word backtracking.

use std::collections::HashMap;
use std::sync::{Arc, LazyLock, RwLock};

use crate::error::{Error, Result};
use crate::tableau::Partition;

type Triple = (Partition, Partition, Partition);
type ProductKey = (Partition, Partition, usize, usize);

static LR_MEMO: LazyLock<RwLock<HashMap<Triple, u64>>> = LazyLock::new(Default::default);
static PRODUCT_MEMO: LazyLock<RwLock<HashMap<ProductKey, Arc<Vec<(Partition, u64)>>>>> =
    LazyLock::new(Default::default);

/// `c^nu_{lambda,mu}`: the number of skew tableaux of shape `nu / lambda` and
/// content `mu` whose reverse reading word is a lattice word.
pub fn lr_coefficient(lambda: &Partition, mu: &Partition, nu: &Partition) -> Result<u64> {
    if nu.size() != lambda.size() + mu.size() {
        return Err(Error::SizeMismatch {
            nu: nu.size(),
            sum: lambda.size() + mu.size(),
        });
    }
    Ok(memo_lr(lambda, mu, nu))
}

fn memo_lr(lambda: &Partition, mu: &Partition, nu: &Partition) -> u64 {
    let key = (lambda.clone(), mu.clone(), nu.clone());
    if let Some(&v) = LR_MEMO.read().unwrap().get(&key) {
        return v;
    }
    let v = count_lr_tableaux(lambda, mu, nu);
    LR_MEMO.write().unwrap().insert(key, v);
    v
}

fn count_lr_tableaux(inner: &Partition, content: &Partition, outer: &Partition) -> u64 {
    if !outer.contains(inner) || !outer.contains(content) {
        return 0;
    }
    let rows = outer.len();
    let inner_parts = inner.padded(rows);
    // reading order: top to bottom, right to left within a row
    let mut cells = Vec::new();
    for i in 0..rows {
        for j in (inner_parts[i]..outer.part(i)).rev() {
            cells.push((i, j));
        }
    }
    let mut search = LrSearch {
        cells,
        inner: inner_parts,
        outer: outer.padded(rows),
        grid: outer.parts().iter().map(|&p| vec![0; p]).collect(),
        remaining: content.parts().to_vec(),
        used: vec![0; content.len() + 1],
    };
    search.count(0)
}

struct LrSearch {
    cells: Vec<(usize, usize)>,
    inner: Vec<usize>,
    outer: Vec<usize>,
    grid: Vec<Vec<usize>>,
    remaining: Vec<usize>,
    /// `used[e]`: copies of `e` placed so far (index 0 unused).
    used: Vec<usize>,
}

impl LrSearch {
    fn count(&mut self, k: usize) -> u64 {
        let Some(&(i, j)) = self.cells.get(k) else {
            return 1;
        };
        let max_right = if j + 1 < self.outer[i] {
            self.grid[i][j + 1]
        } else {
            usize::MAX
        };
        let min_above = if i > 0 && j >= self.inner[i - 1] {
            self.grid[i - 1][j] + 1
        } else {
            1
        };
        let top = self.remaining.len().min(max_right);
        let mut total = 0;
        for e in min_above..=top {
            if self.remaining[e - 1] == 0 {
                continue;
            }
            if e > 1 && self.used[e] + 1 > self.used[e - 1] {
                continue;
            }
            self.grid[i][j] = e;
            self.used[e] += 1;
            self.remaining[e - 1] -= 1;
            total += self.count(k + 1);
            self.remaining[e - 1] += 1;
            self.used[e] -= 1;
        }
        self.grid[i][j] = 0;
        total
    }
}

/// Expansion of `sigma_lambda * sigma_mu` in the `height x width` rectangle,
/// as `(nu, c^nu_{lambda,mu})` pairs with nonzero coefficient.
pub fn schubert_product(
    lambda: &Partition,
    mu: &Partition,
    height: usize,
    width: usize,
) -> Arc<Vec<(Partition, u64)>> {
    let key = (lambda.clone(), mu.clone(), height, width);
    if let Some(v) = PRODUCT_MEMO.read().unwrap().get(&key) {
        return Arc::clone(v);
    }
    let mut out = Vec::new();
    if lambda.fits(height, width) && mu.fits(height, width) {
        // fill the smaller skew shape; the coefficient is symmetric
        let (big, small) = if lambda.size() >= mu.size() {
            (lambda, mu)
        } else {
            (mu, lambda)
        };
        let size = lambda.size() + mu.size();
        for nu in Partition::all_in_box_of_size(height, width, size) {
            if !nu.contains(big) || !nu.contains(small) {
                continue;
            }
            let c = memo_lr(big, small, &nu);
            if c > 0 {
                out.push((nu, c));
            }
        }
    }
    let out = Arc::new(out);
    PRODUCT_MEMO.write().unwrap().insert(key, Arc::clone(&out));
    out
}
