//! Generalized Stirling numbers of the first kind.
//!
//! `s(a, k)` is the coefficient of `y^k` in the lower factorial
//! `(y)_a = Gamma(y + 1) / Gamma(y - a + 1)`. For integer `a` every value is an
//! exact rational and is computed here by several independent algorithms
//! ([`stirling`]); for non-integer `a` the [`realdeg`] module evaluates the
//! Gamma-function series in double precision.
//!
//! ```
//! use gstirling::stirling::{stirling, Method};
//!
//! let v = stirling(-3, 2, Method::Recurrence).unwrap();
//! assert_eq!(v.to_string(), "85/216");
//! ```

pub mod bench;
pub mod cli;
pub mod error;
pub mod exact;
pub mod format;
pub mod partitions;
pub mod realdeg;
pub mod stirling;
pub mod symfunc;
pub mod verify;

pub use error::{Error, Result};
pub use exact::{BigInt, Rational};
pub use stirling::{Degree, Method, Region, StirlingTable};
