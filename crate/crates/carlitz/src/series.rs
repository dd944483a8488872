//! Truncated formal power series over a coefficient ring.
//!
//! A series of order `N` stores coefficients for degrees `0..=N`. The
//! order is explicit data: arithmetic between series of different orders
//! truncates to the minimum rather than erroring, so a caller may
//! over-compute a prefix safely.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::Error;
use crate::ring::Ring;

/// A formal power series truncated at an explicit order.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Series<R> {
    order: usize,
    coeffs: Vec<R>,
}

impl<R: Ring> Series<R> {
    /// Build from a coefficient list; pads with zeros up to `order`.
    pub fn new(order: usize, mut coeffs: Vec<R>) -> Self {
        coeffs.truncate(order + 1);
        coeffs.resize(order + 1, R::zero());
        Series { order, coeffs }
    }

    pub fn from_fn(order: usize, f: impl FnMut(usize) -> R) -> Self {
        Series {
            order,
            coeffs: (0..=order).map(f).collect(),
        }
    }

    pub fn zero(order: usize) -> Self {
        Series::new(order, Vec::new())
    }

    pub fn one(order: usize) -> Self {
        Series::new(order, vec![R::one()])
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn coeff(&self, n: usize) -> &R {
        &self.coeffs[n]
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    pub fn add(&self, rhs: &Series<R>) -> Series<R> {
        let order = self.order.min(rhs.order);
        Series::from_fn(order, |n| self.coeffs[n].add(&rhs.coeffs[n]))
    }

    pub fn sub(&self, rhs: &Series<R>) -> Series<R> {
        let order = self.order.min(rhs.order);
        Series::from_fn(order, |n| self.coeffs[n].sub(&rhs.coeffs[n]))
    }

    pub fn neg(&self) -> Series<R> {
        Series::from_fn(self.order, |n| self.coeffs[n].neg())
    }

    pub fn scale(&self, c: &R) -> Series<R> {
        Series::from_fn(self.order, |n| self.coeffs[n].mul(c))
    }

    /// Truncated convolution; the result carries the minimum order.
    pub fn mul(&self, rhs: &Series<R>) -> Series<R> {
        let order = self.order.min(rhs.order);
        let mut coeffs = vec![R::zero(); order + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(order + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate().take(order + 1 - i) {
                coeffs[i + j] = coeffs[i + j].add(&a.mul(b));
            }
        }
        Series { order, coeffs }
    }

    /// Multiplicative inverse: `self.mul(&q) == 1` up to the order.
    ///
    /// Defined iff the constant term is a unit of `R`; solves the Cauchy
    /// triangular system term by term.
    pub fn inverse(&self) -> Result<Series<R>, Error> {
        let c0 = self.coeffs[0].inverse().ok_or(Error::NonUnitConstantTerm)?;
        let mut inv = Vec::with_capacity(self.order + 1);
        inv.push(c0.clone());
        for n in 1..=self.order {
            let mut acc = R::zero();
            for k in 1..=n {
                acc = acc.add(&self.coeffs[k].mul(&inv[n - k]));
            }
            inv.push(acc.neg().mul(&c0));
        }
        Ok(Series {
            order: self.order,
            coeffs: inv,
        })
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0] == R::one() && self.coeffs[1..].iter().all(|c| c.is_zero())
    }
}
