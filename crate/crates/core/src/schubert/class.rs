use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::scalar::Coefficient;
use crate::tableau::{GrassmannianContext, Partition};

/// An integer combination of Schubert classes `sigma_mu` in `H*(Gr(r, n))`.
///
/// Keys always fit the `r x (n - r)` rectangle and zero coefficients are
/// never stored; terms iterate in lexicographic order of the partition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FormalClass<C> {
    ctx: GrassmannianContext,
    terms: BTreeMap<Partition, C>,
}

impl<C: Coefficient> FormalClass<C> {
    pub fn zero(ctx: GrassmannianContext) -> Self {
        FormalClass {
            ctx,
            terms: BTreeMap::new(),
        }
    }

    /// The unit class `sigma_()`.
    pub fn one(ctx: GrassmannianContext) -> Self {
        let mut c = Self::zero(ctx);
        c.terms.insert(Partition::empty(), C::one());
        c
    }

    pub fn schubert(ctx: GrassmannianContext, mu: Partition) -> Result<Self> {
        Self::from_terms(ctx, [(mu, C::one())])
    }

    pub fn from_terms(
        ctx: GrassmannianContext,
        terms: impl IntoIterator<Item = (Partition, C)>,
    ) -> Result<Self> {
        let mut c = Self::zero(ctx);
        for (mu, coeff) in terms {
            ctx.check_fits(&mu)?;
            c.add_term(mu, coeff);
        }
        Ok(c)
    }

    pub fn ctx(&self) -> GrassmannianContext {
        self.ctx
    }

    pub fn terms(&self) -> &BTreeMap<Partition, C> {
        &self.terms
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Partition, &C)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, mu: &Partition) -> C {
        self.terms.get(mu).cloned().unwrap_or_else(C::zero)
    }

    /// The common size of all terms, or `None` for mixed degrees. The zero
    /// class reports `Some(0)`.
    pub fn homogeneous_degree(&self) -> Option<usize> {
        let mut sizes = self.terms.keys().map(Partition::size);
        let first = sizes.next().unwrap_or(0);
        sizes.all(|s| s == first).then_some(first)
    }

    /// Adds `coeff * sigma_mu`; the caller guarantees `mu` fits.
    pub(crate) fn add_term(&mut self, mu: Partition, coeff: C) {
        if coeff.is_zero() {
            return;
        }
        debug_assert!(self.ctx.fits(&mu));
        match self.terms.entry(mu) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    fn check_same(&self, other: &Self) -> Result<()> {
        if self.ctx != other.ctx {
            return Err(Error::ContextMismatch(
                self.ctx.r(),
                self.ctx.n(),
                other.ctx.r(),
                other.ctx.n(),
            ));
        }
        Ok(())
    }

    /// `self + factor * other`.
    pub fn add_scaled(&mut self, other: &Self, factor: &C) -> Result<()> {
        self.check_same(other)?;
        for (mu, c) in &other.terms {
            self.add_term(mu.clone(), c.clone() * factor.clone());
        }
        Ok(())
    }

    pub fn plus(&self, other: &Self) -> Result<Self> {
        let mut out = self.clone();
        out.add_scaled(other, &C::one())?;
        Ok(out)
    }

    pub fn minus(&self, other: &Self) -> Result<Self> {
        let mut out = self.clone();
        out.add_scaled(other, &-C::one())?;
        Ok(out)
    }

    pub fn scaled(&self, factor: &C) -> Self {
        let mut out = Self::zero(self.ctx);
        for (mu, c) in &self.terms {
            out.add_term(mu.clone(), c.clone() * factor.clone());
        }
        out
    }

    /// Relabels every term into another Grassmannian, dropping terms for which
    /// `f` returns `None`. Returns the class and the number of dropped terms.
    pub fn remap(
        &self,
        target: GrassmannianContext,
        mut f: impl FnMut(&Partition) -> Option<Partition>,
    ) -> Result<(Self, usize)> {
        let mut out = Self::zero(target);
        let mut dropped = 0;
        for (mu, c) in &self.terms {
            match f(mu) {
                Some(nu) => {
                    target.check_fits(&nu)?;
                    out.add_term(nu, c.clone());
                }
                None => dropped += 1,
            }
        }
        Ok((out, dropped))
    }

    /// The same class with coefficients in another ring; `None` on overflow.
    pub fn convert<D: Coefficient>(&self) -> Option<FormalClass<D>> {
        let mut terms = BTreeMap::new();
        for (mu, c) in &self.terms {
            terms.insert(mu.clone(), D::from_bigint(&c.to_bigint())?);
        }
        Some(FormalClass {
            ctx: self.ctx,
            terms,
        })
    }
}

impl<C: Coefficient> fmt::Display for FormalClass<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (mu, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            match (i, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if !abs.is_one() {
                write!(f, "{abs}*")?;
            }
            write!(f, "s{mu}")?;
        }
        Ok(())
    }
}
