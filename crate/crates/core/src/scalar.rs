//! Coefficient rings.
//!
//! Polynomials are generic over [`Scalar`]; exact division and root
//! counting additionally need [`Field`]. The crate root exposes concrete
//! aliases for the integer and rational instances used by the graph code.

use std::fmt::{Debug, Display};
use std::ops::Neg;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{FromPrimitive, Num, Signed};

/// A commutative ring with unity usable as a polynomial coefficient.
pub trait Scalar:
    Num + Clone + Debug + Display + Neg<Output = Self> + FromPrimitive + Send + Sync + 'static
{
    fn from_int(v: i64) -> Self {
        Self::from_i64(v).expect("scalar type cannot represent i64")
    }
}

impl<T> Scalar for T where
    T: Num + Clone + Debug + Display + Neg<Output = T> + FromPrimitive + Send + Sync + 'static
{
}

/// Marker for scalars where `a / b` is exact for every nonzero `b`.
pub trait Field: Scalar {}

impl Field for BigRational {}
impl Field for f64 {}
impl Field for f32 {}

/// Ordered fields admit Sturm sequences and bisection.
pub trait OrderedField: Field + PartialOrd + Signed {}

impl<T: Field + PartialOrd + Signed> OrderedField for T {}

pub fn rational(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

pub fn int_to_rational(v: &BigInt) -> BigRational {
    BigRational::from_integer(v.clone())
}

/// A rational strictly inside `(lo, hi)` on the grid with `steps + 1`
/// equal gaps.
pub fn sample_open<R: rand::Rng>(rng: &mut R, lo: &BigRational, hi: &BigRational, steps: u32) -> BigRational {
    let k = rng.gen_range(1..=steps.max(1));
    lo + (hi - lo) * BigRational::new(BigInt::from(k), BigInt::from(steps.max(1) + 1))
}
