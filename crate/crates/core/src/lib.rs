//! Exact Schubert-basis expansions of the class of a generic torus orbit
//! closure in the Grassmannian `Gr(r, n)`.
//!
//! The coefficients are computed three ways and can be checked against each
//! other: Klyachko's alternating sum of tableau counts, the Berget-Fink sum
//! of products `sigma_lambda * sigma_lambda~`, and a direct count of
//! 1-strip-less semistandard tableaux. The [`mondrian`] module carries the
//! intermediate classes that connect the last two, and [`bijection`] relates
//! 1-strip-less tableaux to standard tableaux with a fixed number of descents.

pub mod bijection;
pub mod error;
pub mod klyachko;
pub mod mondrian;
pub mod scalar;
pub mod schubert;
pub mod tableau;
pub mod verify;

use num_bigint::BigInt;

pub use error::{Error, Result};
pub use scalar::Coefficient;
pub use schubert::FormalClass;
pub use tableau::{GrassmannianContext, Partition, Tableau};

/// Schubert classes with arbitrary-precision coefficients.
pub type SchubertClass = FormalClass<BigInt>;

/// Schubert classes with machine-word coefficients, for small instances.
pub type SmallSchubertClass = FormalClass<i64>;
