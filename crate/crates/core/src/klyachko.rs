//! Klyachko's alternating-sum formula for the orbit class coefficients, and
//! the 0-strip-less re-summation that links it to the Mondrian classes.

use num_bigint::BigInt;

use crate::error::Result;
use crate::scalar::Coefficient;
use crate::schubert::FormalClass;
use crate::tableau::{
    binomial, count_one_strip_less_in, count_ssyt, count_zero_strip_less_in, GrassmannianContext,
    Partition,
};

/// Maximal parts of a partition and the truncations obtained by removing them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MaxPartData {
    /// Number of parts equal to the maximal length.
    pub m: usize,
    /// `truncations[j]` is the partition with `j` maximal parts removed.
    pub truncations: Vec<Partition>,
}

pub fn max_part_data(mu: &Partition, max_len: usize, height: usize) -> Result<MaxPartData> {
    mu.check_fits(height, max_len)?;
    let m = mu.parts().iter().take_while(|&&p| p == max_len && max_len > 0).count();
    let truncations = (0..=m)
        .map(|j| Partition::new(mu.parts()[j..].to_vec()).expect("suffix of a partition"))
        .collect();
    Ok(MaxPartData { m, truncations })
}

fn signed(j: usize, value: BigInt) -> BigInt {
    if j % 2 == 0 {
        value
    } else {
        -value
    }
}

/// `Gamma^mu_{r,n} = sum_j (-1)^j C(n, j) |SSYT_{r-j}(mu^j)|`.
///
/// Zero when `|mu| != (r-1)(n-r-1)`.
pub fn gamma_klyachko(mu: &Partition, ctx: &GrassmannianContext) -> Result<BigInt> {
    let data = max_part_data(mu, ctx.width(), ctx.height())?;
    if mu.size() != ctx.orbit_degree() {
        return Ok(BigInt::default());
    }
    let (r, n) = (ctx.r(), ctx.n());
    Ok(data
        .truncations
        .iter()
        .enumerate()
        .map(|(j, trunc)| signed(j, BigInt::from(binomial(n, j) * count_ssyt(trunc, r - j))))
        .sum())
}

/// `Gamma^mu_{r,n}` as the number of 1-strip-less tableaux of shape `mu`.
pub fn gamma_stripless(mu: &Partition, ctx: &GrassmannianContext) -> Result<BigInt> {
    ctx.check_fits(mu)?;
    if mu.size() != ctx.orbit_degree() {
        return Ok(BigInt::default());
    }
    Ok(BigInt::from(count_one_strip_less_in(mu, ctx.r(), ctx.width())))
}

/// Coefficient of `sigma_mu` in the sum of all Mondrian classes, computed as
/// `sum_j (-1)^j C(n-r+j-1, j) |SSYT^0_{r-j}(mu^j)|` with maximal parts of
/// length `n - 1`.
///
/// `big` is `Gr(r, n + r - 1)`; zero off degree `(r-1)(n-1)`.
pub fn coeff_via_fill0(mu: &Partition, big: &GrassmannianContext) -> Result<BigInt> {
    let r = big.r();
    let width = big.width();
    let data = max_part_data(mu, width, r)?;
    let n = width + 1;
    if mu.size() != (r - 1) * (n - 1) {
        return Ok(BigInt::default());
    }
    Ok(data
        .truncations
        .iter()
        .enumerate()
        .map(|(j, trunc)| {
            let weight = BigInt::from(binomial(n - r + j - 1, j));
            signed(j, weight * count_zero_strip_less_in(trunc, r - j, width))
        })
        .sum())
}

/// Whether `sum_{j<=l} C(n-r+j-1, j) C(r-j, l-j) = C(n, l)`.
pub fn binomial_identity_check(n: usize, r: usize, l: usize) -> bool {
    let lhs: num_bigint::BigUint = (0..=l)
        .map(|j| {
            // C(n-r+j-1, j) with n - r - 1 possibly negative when r = n
            let top = (n + j).checked_sub(r + 1);
            let first = match top {
                Some(t) => binomial(t, j),
                None if j == 0 => 1u32.into(),
                None => 0u32.into(),
            };
            first * binomial(r - j, l - j)
        })
        .sum();
    lhs == binomial(n, l)
}

/// `sum_mu Gamma^mu_{r,n} sigma_mu` over the orbit degree.
pub fn klyachko_class<C: Coefficient>(ctx: GrassmannianContext) -> FormalClass<C> {
    let terms = ctx.partitions_of_size(ctx.orbit_degree()).into_iter().map(|mu| {
        let g = gamma_klyachko(&mu, &ctx).expect("mu fits");
        (mu, C::from_bigint(&g).expect("coefficient fits the ring"))
    });
    FormalClass::from_terms(ctx, terms).expect("partitions fit")
}

/// `sum_mu |1-strip-less SSYT(mu)| sigma_mu` over the orbit degree.
pub fn stripless_class<C: Coefficient>(ctx: GrassmannianContext) -> FormalClass<C> {
    let terms = ctx.partitions_of_size(ctx.orbit_degree()).into_iter().map(|mu| {
        let g = gamma_stripless(&mu, &ctx).expect("mu fits");
        (mu, C::from_bigint(&g).expect("coefficient fits the ring"))
    });
    FormalClass::from_terms(ctx, terms).expect("partitions fit")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::schubert::berget_fink_class;
    use crate::tableau::{enumerate_ssyt, is_one_strip_less};

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn ctx(r: usize, n: usize) -> GrassmannianContext {
        GrassmannianContext::new(r, n).unwrap()
    }

    /// Oracle for Gamma: enumerate every SSYT and filter.
    fn brute_stripless(mu: &Partition, g: &GrassmannianContext) -> BigInt {
        BigInt::from(
            enumerate_ssyt(mu, g.r())
                .filter(|t| is_one_strip_less(t, g.width()))
                .count(),
        )
    }

    #[test]
    fn max_parts() {
        let d = max_part_data(&p(&[2, 2]), 2, 2).unwrap();
        assert_eq!(d.m, 2);
        assert_eq!(d.truncations, vec![p(&[2, 2]), p(&[2]), Partition::empty()]);
        let d = max_part_data(&p(&[1]), 2, 2).unwrap();
        assert_eq!((d.m, d.truncations), (0, vec![p(&[1])]));
        assert_eq!(max_part_data(&p(&[3, 3, 1]), 3, 3).unwrap().m, 2);
        assert!(max_part_data(&p(&[4]), 3, 3).is_err());
    }

    #[test]
    fn gamma_small() {
        assert_eq!(gamma_klyachko(&p(&[1]), &ctx(2, 4)).unwrap(), BigInt::from(2));
        assert_eq!(gamma_klyachko(&p(&[2]), &ctx(2, 5)).unwrap(), BigInt::from(3));
        assert_eq!(gamma_klyachko(&p(&[1, 1]), &ctx(2, 5)).unwrap(), BigInt::from(1));
        assert_eq!(gamma_klyachko(&p(&[2]), &ctx(2, 4)).unwrap(), BigInt::from(0));
        assert!(gamma_klyachko(&p(&[3]), &ctx(2, 4)).is_err());
        assert_eq!(gamma_stripless(&Partition::empty(), &ctx(1, 2)).unwrap(), BigInt::from(1));
        assert_eq!(gamma_stripless(&p(&[1]), &ctx(2, 4)).unwrap(), BigInt::from(2));
    }

    #[test]
    fn alternating_sum_with_full_rows() {
        // off-degree shapes are zero by convention; the only filling of (2,2) has strips anyway
        let g = ctx(2, 4);
        assert_eq!(gamma_klyachko(&p(&[2, 2]), &g).unwrap(), BigInt::from(0));
        assert_eq!(brute_stripless(&p(&[2, 2]), &g), BigInt::from(0));
        assert_eq!(gamma_stripless(&p(&[3, 3]), &ctx(2, 5)).unwrap(), BigInt::from(0));
        // in-degree shapes with a maximal part: (2) in Gr(3,5), (3,1) in Gr(3,6)
        for (mu, g) in [(p(&[2]), ctx(3, 5)), (p(&[3, 1]), ctx(3, 6))] {
            assert!(max_part_data(&mu, g.width(), g.height()).unwrap().m > 0);
            assert_eq!(gamma_klyachko(&mu, &g).unwrap(), brute_stripless(&mu, &g), "{mu}");
        }
    }

    #[test]
    fn gamma_matches_oracle_small_range() {
        for r in 2..=3 {
            for n in (r + 2)..=7 {
                let g = ctx(r, n);
                for mu in g.partitions_of_size(g.orbit_degree()) {
                    let k = gamma_klyachko(&mu, &g).unwrap();
                    assert_eq!(k, brute_stripless(&mu, &g), "{mu} in {g}");
                    assert!(k >= BigInt::from(0));
                }
            }
        }
    }

    #[test]
    fn binomial_identity() {
        assert!(binomial_identity_check(5, 2, 0));
        assert!(binomial_identity_check(5, 2, 1));
        for n in 1..=12 {
            for r in 0..=n {
                for l in 0..=r {
                    assert!(binomial_identity_check(n, r, l), "n={n} r={r} l={l}");
                }
            }
        }
    }

    #[test]
    fn klyachko_matches_berget_fink() {
        for (r, n) in [(2, 4), (2, 5), (3, 5), (3, 6), (3, 7)] {
            let g = ctx(r, n);
            assert_eq!(klyachko_class::<i64>(g), berget_fink_class::<i64>(g), "{g}");
            assert_eq!(stripless_class::<i64>(g), klyachko_class::<i64>(g), "{g}");
        }
    }

    #[test]
    fn fill0_reproduces_shifted_gamma() {
        for (r, n) in [(2, 4), (2, 5), (3, 5), (3, 6)] {
            let small = ctx(r, n);
            let big = small.enlarged();
            for mu in big.partitions_of_size((r - 1) * (n - 1)) {
                let via = coeff_via_fill0(&mu, &big).unwrap();
                let expected = match mu.remove_columns(r, r - 1) {
                    Some(shifted) => gamma_klyachko(&shifted, &small).unwrap(),
                    None => BigInt::from(0),
                };
                assert_eq!(via, expected, "{mu} in {big}");
            }
        }
    }
}
