//! The coefficient-ring contract.
//!
//! Polynomials and series are generic over a commutative ring given by
//! this trait: exact equality, zero/one, add/neg/mul, and unit testing
//! with inversion. [`Rational`](crate::Rational) is a field instance;
//! `Poly<R>` is itself a ring whose only units are unit constants, which
//! is what lets series over `LambdaPoly` coefficients be inverted.

/// A commutative ring with exact equality and unit inversion.
pub trait Ring: Clone + PartialEq + Eq + core::fmt::Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn add(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;

    /// Whether this element has a multiplicative inverse.
    fn is_unit(&self) -> bool;

    /// The inverse when [`Ring::is_unit`] holds, `None` otherwise.
    fn inverse(&self) -> Option<Self>;

    fn is_zero(&self) -> bool {
        *self == Self::zero()
    }

    fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }
}

impl Ring for crate::Rational {
    fn zero() -> Self {
        crate::Rational::zero()
    }

    fn one() -> Self {
        crate::Rational::one()
    }

    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }

    fn neg(&self) -> Self {
        -self
    }

    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }

    fn is_unit(&self) -> bool {
        !self.is_zero()
    }

    fn inverse(&self) -> Option<Self> {
        self.recip()
    }

    fn is_zero(&self) -> bool {
        crate::Rational::is_zero(self)
    }
}
