//! Dense univariate polynomials over a coefficient ring.
//!
//! Coefficients are stored from degree 0 upward with no trailing zeros;
//! the zero polynomial is the empty list. Two aliases carry the whole
//! crate: [`LambdaPoly`] is a polynomial in the deformation parameter
//! lambda over the rationals, and [`XPoly`] is a polynomial in an outer
//! variable (x or t) whose coefficients are `LambdaPoly` values.

use alloc::vec;
use alloc::vec::Vec;
use core::ops::{Add, Mul, Neg, Sub};

use crate::rational::Rational;
use crate::ring::Ring;

/// Polynomial in lambda with rational coefficients.
pub type LambdaPoly = Poly<Rational>;

/// Polynomial in an outer variable with [`LambdaPoly`] coefficients.
pub type XPoly = Poly<LambdaPoly>;

/// A dense univariate polynomial over `R`, always in canonical form.
#[derive(Clone, PartialEq, Eq, Debug, Hash)]
pub struct Poly<R> {
    coeffs: Vec<R>,
}

impl<R: Ring> Poly<R> {
    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::constant(R::one())
    }

    pub fn constant(c: R) -> Self {
        Poly { coeffs: vec![c] }.trimmed()
    }

    /// `c * v^d` where `v` is this polynomial's variable.
    pub fn monomial(c: R, degree: usize) -> Self {
        if c.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![R::zero(); degree + 1];
        coeffs[degree] = c;
        Poly { coeffs }
    }

    /// Build from a degree-0-upward coefficient list, trimming zeros.
    pub fn from_coeffs(coeffs: Vec<R>) -> Self {
        Poly { coeffs }.trimmed()
    }

    fn trimmed(mut self) -> Self {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
        self
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    /// Coefficient of degree `d` (zero beyond the stored length).
    pub fn coeff(&self, d: usize) -> R {
        self.coeffs.get(d).cloned().unwrap_or_else(R::zero)
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// Multiply every coefficient by `c`.
    pub fn scale(&self, c: &R) -> Self {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            coeffs: self.coeffs.iter().map(|a| a.mul(c)).collect(),
        }
        .trimmed()
    }

    /// Horner evaluation at `v`.
    pub fn eval(&self, v: &R) -> R {
        let mut acc = R::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(v).add(c);
        }
        acc
    }

    /// Substitute another polynomial for the variable.
    pub fn compose(&self, inner: &Poly<R>) -> Poly<R> {
        let mut acc = Poly::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * inner) + &Poly::constant(c.clone());
        }
        acc
    }

    pub fn pow(&self, exp: usize) -> Poly<R> {
        let mut acc = Poly::one();
        let mut base = self.clone();
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Map coefficients into another ring, re-trimming afterwards.
    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> Poly<S> {
        Poly::from_coeffs(self.coeffs.iter().map(f).collect())
    }
}

impl<R: Ring> Add for &Poly<R> {
    type Output = Poly<R>;
    fn add(self, rhs: &Poly<R>) -> Poly<R> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            coeffs.push(self.coeff(i).add(&rhs.coeff(i)));
        }
        Poly { coeffs }.trimmed()
    }
}

impl<R: Ring> Sub for &Poly<R> {
    type Output = Poly<R>;
    fn sub(self, rhs: &Poly<R>) -> Poly<R> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            coeffs.push(self.coeff(i).sub(&rhs.coeff(i)));
        }
        Poly { coeffs }.trimmed()
    }
}

impl<R: Ring> Neg for &Poly<R> {
    type Output = Poly<R>;
    fn neg(self) -> Poly<R> {
        Poly {
            coeffs: self.coeffs.iter().map(|c| c.neg()).collect(),
        }
    }
}

/// Exact convolution product.
impl<R: Ring> Mul for &Poly<R> {
    type Output = Poly<R>;
    fn mul(self, rhs: &Poly<R>) -> Poly<R> {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![R::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] = coeffs[i + j].add(&a.mul(b));
            }
        }
        Poly { coeffs }.trimmed()
    }
}

/// `Poly<R>` is itself a ring; its units are the unit constants.
impl<R: Ring> Ring for Poly<R> {
    fn zero() -> Self {
        Poly::zero()
    }

    fn one() -> Self {
        Poly::one()
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
        self.coeffs.len() == 1 && self.coeffs[0].is_unit()
    }

    fn inverse(&self) -> Option<Self> {
        if self.coeffs.len() == 1 {
            self.coeffs[0].inverse().map(Poly::constant)
        } else {
            None
        }
    }

    fn is_zero(&self) -> bool {
        Poly::is_zero(self)
    }
}

impl LambdaPoly {
    /// The monomial lambda itself.
    pub fn lambda() -> LambdaPoly {
        Poly::monomial(Rational::one(), 1)
    }

    pub fn from_int(n: i64) -> LambdaPoly {
        Poly::constant(Rational::from(n))
    }

    /// Substitute `lambda -> -lambda`: negate odd-degree coefficients.
    pub fn negate_lambda(&self) -> LambdaPoly {
        Poly {
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .map(|(d, c)| if d % 2 == 1 { -c } else { c.clone() })
                .collect(),
        }
    }
}

impl XPoly {
    /// The outer variable (x or t) as a polynomial.
    pub fn var() -> XPoly {
        Poly::monomial(LambdaPoly::one(), 1)
    }

    pub fn constant_rational(c: Rational) -> XPoly {
        Poly::constant(Poly::constant(c))
    }

    /// Evaluate the outer variable at a rational, keeping lambda symbolic.
    pub fn eval_at_rational(&self, x0: &Rational) -> LambdaPoly {
        self.eval(&Poly::constant(x0.clone()))
    }

    /// Substitute a rational for lambda in every coefficient.
    pub fn eval_lambda(&self, lambda0: &Rational) -> Poly<Rational> {
        self.map(|c| Poly::constant(c.eval(lambda0)))
            .map(|c| c.coeff(0))
    }

    /// Apply `lambda -> -lambda` to every coefficient.
    pub fn negate_lambda(&self) -> XPoly {
        self.map(|c| c.negate_lambda())
    }
}
