//! Scalar traits shared by the matrix code.
//!
//! Everything in this crate is exact, so the scalars are commutative rings
//! with an explicit notion of unit. Matrices, determinants and
//! characteristic polynomials are written once against [`Ring`]; row
//! reduction and kernels additionally need [`Field`].

use std::fmt::{self, Debug, Display};
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Commutative ring with identity.
pub trait Ring:
    Clone
    + Debug
    + Display
    + PartialEq
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + for<'a> AddAssign<&'a Self>
    + for<'a> SubAssign<&'a Self>
    + Send
    + Sync
{
    /// Product by reference, for hot loops that should not clone operands.
    fn mul_ref(&self, rhs: &Self) -> Self;

    /// Multiplicative inverse if `self` is a unit of the ring.
    fn try_inverse(&self) -> Option<Self>;

    fn from_i64(v: i64) -> Self;
}

/// A [`Ring`] in which every nonzero element is a unit.
pub trait Field: Ring + Div<Output = Self> {}

impl Ring for BigInt {
    fn mul_ref(&self, rhs: &Self) -> Self {
        self * rhs
    }

    fn try_inverse(&self) -> Option<Self> {
        if self.abs().is_one() {
            Some(self.clone())
        } else {
            None
        }
    }

    fn from_i64(v: i64) -> Self {
        BigInt::from(v)
    }
}

impl Ring for BigRational {
    fn mul_ref(&self, rhs: &Self) -> Self {
        self * rhs
    }

    fn try_inverse(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(self.recip())
        }
    }

    fn from_i64(v: i64) -> Self {
        BigRational::from_integer(BigInt::from(v))
    }
}

impl Field for BigRational {}

/// The field with two elements.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Gf2(pub bool);

impl Debug for Gf2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", u8::from(self.0))
    }
}

impl Display for Gf2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", u8::from(self.0))
    }
}

impl Zero for Gf2 {
    fn zero() -> Self {
        Gf2(false)
    }
    fn is_zero(&self) -> bool {
        !self.0
    }
}

impl One for Gf2 {
    fn one() -> Self {
        Gf2(true)
    }
}

#[allow(clippy::suspicious_arithmetic_impl)]
impl Add for Gf2 {
    type Output = Gf2;
    fn add(self, rhs: Gf2) -> Gf2 {
        Gf2(self.0 ^ rhs.0)
    }
}

#[allow(clippy::suspicious_arithmetic_impl)]
impl Sub for Gf2 {
    type Output = Gf2;
    fn sub(self, rhs: Gf2) -> Gf2 {
        Gf2(self.0 ^ rhs.0)
    }
}

#[allow(clippy::suspicious_arithmetic_impl)]
impl Mul for Gf2 {
    type Output = Gf2;
    fn mul(self, rhs: Gf2) -> Gf2 {
        Gf2(self.0 & rhs.0)
    }
}

impl Div for Gf2 {
    type Output = Gf2;
    fn div(self, rhs: Gf2) -> Gf2 {
        assert!(rhs.0, "division by zero in GF(2)");
        self
    }
}

impl Neg for Gf2 {
    type Output = Gf2;
    fn neg(self) -> Gf2 {
        self
    }
}

#[allow(clippy::suspicious_op_assign_impl)]
impl<'a> AddAssign<&'a Gf2> for Gf2 {
    fn add_assign(&mut self, rhs: &'a Gf2) {
        self.0 ^= rhs.0;
    }
}

#[allow(clippy::suspicious_op_assign_impl)]
impl<'a> SubAssign<&'a Gf2> for Gf2 {
    fn sub_assign(&mut self, rhs: &'a Gf2) {
        self.0 ^= rhs.0;
    }
}

impl Ring for Gf2 {
    fn mul_ref(&self, rhs: &Self) -> Self {
        *self * *rhs
    }

    fn try_inverse(&self) -> Option<Self> {
        self.0.then_some(*self)
    }

    fn from_i64(v: i64) -> Self {
        Gf2(v.rem_euclid(2) == 1)
    }
}

impl Field for Gf2 {}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gf2_arithmetic() {
        let one = Gf2::one();
        assert_eq!(one + one, Gf2::zero());
        assert_eq!(Gf2::from_i64(-3), one);
        assert_eq!(Gf2::from_i64(4), Gf2::zero());
        assert_eq!(Gf2::zero().try_inverse(), None);
    }

    #[test]
    fn integer_units() {
        assert_eq!(BigInt::from(-1).try_inverse(), Some(BigInt::from(-1)));
        assert_eq!(BigInt::from(2).try_inverse(), None);
    }
}
