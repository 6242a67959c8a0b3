//! Coefficient rings for formal Schubert classes.

use std::fmt::{Debug, Display};
use std::ops::{AddAssign, Neg};

use num_bigint::BigInt;
use num_traits::{FromPrimitive, Signed, ToPrimitive};

/// An exact signed integer type usable as the coefficient ring of a
/// [`FormalClass`](crate::FormalClass).
///
/// Fixed-width rings (`i64`, `i128`) are faster but overflow on large
/// instances; [`BigInt`] never does and is what the crate root aliases use.
pub trait Coefficient:
    Clone
    + Debug
    + Display
    + Eq
    + Ord
    + Signed
    + FromPrimitive
    + AddAssign
    + Neg<Output = Self>
    + Send
    + Sync
    + 'static
{
    fn from_bigint(value: &BigInt) -> Option<Self>;

    fn to_bigint(&self) -> BigInt;
}

macro_rules! fixed_width {
    ($($t:ty => $to:ident),*) => {$(
        impl Coefficient for $t {
            fn from_bigint(value: &BigInt) -> Option<Self> {
                value.$to()
            }

            fn to_bigint(&self) -> BigInt {
                BigInt::from(*self)
            }
        }
    )*};
}

fixed_width!(i32 => to_i32, i64 => to_i64, i128 => to_i128);

impl Coefficient for BigInt {
    fn from_bigint(value: &BigInt) -> Option<Self> {
        Some(value.clone())
    }

    fn to_bigint(&self) -> BigInt {
        self.clone()
    }
}
