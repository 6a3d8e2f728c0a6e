//! Scalar traits the algebra is generic over.
//!
//! Polynomial invariants only ever need an exact commutative ring, and
//! tangle fractions need an integer type with a gcd. Both are expressed as
//! blanket traits over `num-traits`/`num-integer` so callers can swap `i64`
//! for `i128` (or any big-integer type implementing the same traits) when
//! coefficients are expected to grow.

use std::fmt::{Debug, Display};
use std::hash::Hash;
use std::ops::{Add, Mul, Neg, Sub};

use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Exact ring used for polynomial coefficients.
pub trait Coefficient:
    Clone
    + Eq
    + Ord
    + Hash
    + Debug
    + Display
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Send
    + Sync
    + 'static
{
    fn from_i64(v: i64) -> Self;
}

macro_rules! impl_coefficient {
    ($($t:ty),*) => {$(
        impl Coefficient for $t {
            #[inline]
            fn from_i64(v: i64) -> Self {
                v as $t
            }
        }
    )*};
}

impl_coefficient!(i32, i64, i128);

/// Signed integer type for continued fractions and 2-bridge arithmetic.
pub trait IntScalar: Integer + Signed + Copy + Hash + Debug + Display + Send + Sync + 'static {
    fn from_i64(v: i64) -> Self;
    fn to_i64(self) -> i64;
}

macro_rules! impl_int_scalar {
    ($($t:ty),*) => {$(
        impl IntScalar for $t {
            #[inline]
            fn from_i64(v: i64) -> Self {
                v as $t
            }
            #[inline]
            fn to_i64(self) -> i64 {
                self as i64
            }
        }
    )*};
}

impl_int_scalar!(i32, i64, i128);
