//! Coefficient rings.
//!
//! Every algebraic structure in this crate is generic over its coefficients.
//! The working ring is the arbitrary-precision integers; [`F2`] is used for
//! mod-2 cohomology and [`Rational`](crate::Rational) for rank computations.
//! Machine integers implement the traits as well, which is handy in tests.

use std::fmt;
use std::hash::Hash;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer as IntegerOps;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// A commutative ring with exact arithmetic.
pub trait Coefficient:
    Clone
    + fmt::Debug
    + fmt::Display
    + Eq
    + Ord
    + Hash
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
    fn from_i64(value: i64) -> Self;

    /// The image of an integer under the unique ring map `Z -> R`.
    fn from_integer(value: &BigInt) -> Self;
}

/// A coefficient ring in which every nonzero element is invertible.
pub trait Field: Coefficient + Div<Output = Self> {}

/// An integral domain with division with remainder, suitable for
/// Smith normal form and fraction-free elimination.
pub trait EuclideanCoefficient: Coefficient + IntegerOps + Signed {}

impl<T> EuclideanCoefficient for T where T: Coefficient + IntegerOps + Signed {}

/// `(-1)^exponent` in the ring `R`.
pub fn sign<R: Coefficient>(exponent: usize) -> R {
    if exponent.is_multiple_of(2) {
        R::one()
    } else {
        -R::one()
    }
}

/// `(-1)^(k(k-1)/2)`, the sign picked up by the top diagonal of a `k`-simplex.
pub fn grouplike_sign<R: Coefficient>(k: usize) -> R {
    sign(k * k.saturating_sub(1) / 2)
}

macro_rules! machine_coefficient {
    ($($t:ty),*) => {
        $(impl Coefficient for $t {
            fn from_i64(value: i64) -> Self {
                <$t>::try_from(value).expect("value out of range")
            }
            fn from_integer(value: &BigInt) -> Self {
                <$t>::try_from(value).expect("value out of range")
            }
        })*
    };
}

machine_coefficient!(i64, i128);

impl Coefficient for BigInt {
    fn from_i64(value: i64) -> Self {
        BigInt::from(value)
    }
    fn from_integer(value: &BigInt) -> Self {
        value.clone()
    }
}

impl Coefficient for BigRational {
    fn from_i64(value: i64) -> Self {
        BigRational::from_integer(BigInt::from(value))
    }
    fn from_integer(value: &BigInt) -> Self {
        BigRational::from_integer(value.clone())
    }
}

impl Field for BigRational {}

/// The field with two elements.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct F2(bool);

impl F2 {
    pub const ZERO: F2 = F2(false);
    pub const ONE: F2 = F2(true);

    pub fn new(bit: bool) -> Self {
        F2(bit)
    }

    /// Reduction of an integer modulo 2.
    pub fn reduce(value: &BigInt) -> Self {
        F2(value.is_odd())
    }

    pub fn bit(self) -> bool {
        self.0
    }
}

impl fmt::Display for F2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", u8::from(self.0))
    }
}

impl Add for F2 {
    type Output = F2;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn add(self, rhs: F2) -> F2 {
        F2(self.0 ^ rhs.0)
    }
}

impl Sub for F2 {
    type Output = F2;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn sub(self, rhs: F2) -> F2 {
        F2(self.0 ^ rhs.0)
    }
}

impl Mul for F2 {
    type Output = F2;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn mul(self, rhs: F2) -> F2 {
        F2(self.0 & rhs.0)
    }
}

impl Div for F2 {
    type Output = F2;
    fn div(self, rhs: F2) -> F2 {
        assert!(rhs.0, "division by zero in F2");
        self
    }
}

impl Neg for F2 {
    type Output = F2;
    fn neg(self) -> F2 {
        self
    }
}

impl Zero for F2 {
    fn zero() -> Self {
        F2(false)
    }
    fn is_zero(&self) -> bool {
        !self.0
    }
}

impl One for F2 {
    fn one() -> Self {
        F2(true)
    }
}

impl Coefficient for F2 {
    fn from_i64(value: i64) -> Self {
        F2(value.rem_euclid(2) == 1)
    }
    fn from_integer(value: &BigInt) -> Self {
        F2::reduce(value)
    }
}

impl Field for F2 {}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn f2_arithmetic() {
        assert_eq!(F2::ONE + F2::ONE, F2::ZERO);
        assert_eq!(-F2::ONE, F2::ONE);
        assert_eq!(F2::from_i64(-3), F2::ONE);
        assert_eq!(F2::reduce(&BigInt::from(-4)), F2::ZERO);
    }

    #[test]
    fn grouplike_signs() {
        let signs: Vec<i64> = (0..9).map(grouplike_sign::<i64>).collect();
        assert_eq!(signs, vec![1, 1, -1, -1, 1, 1, -1, -1, 1]);
    }
}
