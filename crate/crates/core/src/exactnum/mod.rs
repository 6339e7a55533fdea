//! Exact scalar arithmetic: rationals, the golden field ℚ(√5) and modular
//! exponentiation. No floating point lives here.

mod golden;
mod modpow;
mod rational;

pub use golden::{golden_mul, GoldenRational};
pub use modpow::{mod_pow, mod_pow_naive};
pub use rational::{parse_rational, rat, rat_arith, ArithOp};

pub use num_bigint::BigInt;
pub use num_rational::BigRational;

use std::fmt::Debug;
use std::hash::Hash;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

/// A commutative exact field usable as the coordinate ring of a
/// Cayley–Dickson number.
pub trait Scalar:
    Clone
    + Debug
    + Eq
    + Hash
    + Ord
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + for<'a> Add<&'a Self, Output = Self>
    + for<'a> Sub<&'a Self, Output = Self>
    + for<'a> Mul<&'a Self, Output = Self>
{
    /// Multiplicative inverse, `None` for zero.
    fn recip(&self) -> Option<Self>;

    fn from_rational(q: BigRational) -> Self;

    /// Lift a small integer.
    fn from_i64(n: i64) -> Self {
        Self::from_rational(BigRational::from_integer(n.into()))
    }
}

impl Scalar for BigRational {
    fn recip(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(num_traits::Inv::inv(self.clone()))
        }
    }

    fn from_rational(q: BigRational) -> Self {
        q
    }
}
