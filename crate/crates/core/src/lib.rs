//! Braid-word closures, knot invariants, rational tangles and signed
//! genome rearrangements.
//!
//! The polynomial machinery is generic over its coefficient ring through
//! [`Coefficient`]; tangle fractions are generic over [`IntScalar`]. The
//! aliases below fix the concrete types most callers want.

pub mod diagram;
pub mod error;
pub mod genome;
pub mod invariants;
pub mod laurent;
pub mod perm;
pub mod recombination;
pub mod reproduce;
pub mod scalar;
pub mod tangle;
pub mod word;

pub use error::{Error, Result};
pub use laurent::Laurent;
pub use perm::{Permutation, SignedPermutation};
pub use scalar::{Coefficient, IntScalar};
pub use tangle::{ExtRational, RationalTangle, TangleSum};
pub use word::{CrossingEdit, GenKind, GenWord, Generator};

/// Laurent polynomial in `A` with `i64` coefficients.
pub type LaurentPoly = Laurent<i64>;
/// Laurent polynomial with `i128` coefficients, for large state sums.
pub type WideLaurentPoly = Laurent<i128>;
/// Extended rational with `i64` parts, the usual tangle fraction.
pub type Fraction = ExtRational<i64>;
