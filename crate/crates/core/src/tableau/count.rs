use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Zero};

use super::Partition;

/// Number of semistandard tableaux of `shape` with entries in `1..=max_entry`,
/// i.e. `s_shape(1^max_entry)`, by the hook-content formula.
pub fn count_ssyt(shape: &Partition, max_entry: usize) -> BigUint {
    if shape.len() > max_entry {
        return BigUint::zero();
    }
    let conj = shape.conjugate();
    let mut numerator = BigUint::one();
    let mut denominator = BigUint::one();
    for (i, &row_len) in shape.parts().iter().enumerate() {
        for j in 0..row_len {
            // content j - i, shifted by max_entry; positive since i < max_entry
            numerator *= max_entry + j - i;
            let hook = (row_len - j - 1) + (conj.part(j) - i - 1) + 1;
            denominator *= hook;
        }
    }
    let (q, rem) = numerator.div_rem(&denominator);
    assert!(rem.is_zero(), "hook-content product must divide exactly");
    q
}

/// `C(n, k)` by the multiplicative formula; zero when `k > n`.
pub fn binomial(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

/// `C(n, k)` for a possibly negative upper index; zero unless `0 <= k <= n`.
pub fn binomial_signed(n: i64, k: i64) -> BigInt {
    if n < 0 || k < 0 || k > n {
        return BigInt::zero();
    }
    BigInt::from(binomial(n as usize, k as usize))
}
