//! Degenerate Bernoulli and Frobenius-Euler numbers and polynomials.
//!
//! Both families are defined through generating functions and computed
//! here by exact truncated-series division:
//!
//! - Bernoulli: `t / (e(t) - 1)`, so the number table is the inverse of
//!   the series `(e(t) - 1)/t`.
//! - Frobenius-Euler with parameter `u != 1`: `(1-u) / (e(t) - u)`.
//!
//! The polynomials attach `e^x(t)` to the same generating functions,
//! which amounts to the binomial convolution with lambda-falling
//! factorials of `x`.

use alloc::vec::Vec;

use crate::error::Error;
use crate::factorial::{factorial_poly, FactorialKind};
use crate::poly::{LambdaPoly, Poly, XPoly};
use crate::rational::{binomial, Rational};
use crate::series::Series;

/// Degenerate Bernoulli numbers for `n = 0..=max_n`, lambda symbolic.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BernoulliTable {
    numbers: Vec<LambdaPoly>,
}

impl BernoulliTable {
    pub fn max_n(&self) -> usize {
        self.numbers.len() - 1
    }

    pub fn number(&self, n: usize) -> &LambdaPoly {
        &self.numbers[n]
    }

    pub fn numbers(&self) -> &[LambdaPoly] {
        &self.numbers
    }
}

/// The series `(e(t) - 1)/t` truncated at `order`; its coefficient of
/// `t^k` is the lambda-falling factorial of 1 taken `k+1` steps over
/// `(k+1)!`. The constant term is 1, so the series is invertible.
fn exp_minus_one_over_t(order: usize) -> Series<LambdaPoly> {
    let mut term = LambdaPoly::one();
    let mut fact = Rational::one();
    Series::from_fn(order, |k| {
        let step = &Poly::constant(Rational::one())
            - &Poly::monomial(Rational::from(k as u64), 1);
        term = &term * &step;
        fact = &fact * &Rational::from((k + 1) as u64);
        term.scale(&fact.recip().expect("factorial is nonzero"))
    })
}

/// Degenerate Bernoulli numbers up to `max_n`, obtained as `n!` times the
/// `t^n` coefficients of the inverse of `(e(t) - 1)/t`.
pub fn bernoulli_numbers(max_n: usize) -> BernoulliTable {
    let inv = exp_minus_one_over_t(max_n)
        .inverse()
        .expect("constant term is 1");
    let mut fact = Rational::one();
    let numbers = (0..=max_n)
        .map(|n| {
            if n > 0 {
                fact = &fact * &Rational::from(n as u64);
            }
            inv.coeff(n).scale(&fact)
        })
        .collect();
    BernoulliTable { numbers }
}

/// Degenerate Bernoulli polynomial: the binomial convolution of the
/// number table with lambda-falling factorial polynomials of `x`.
pub fn bernoulli_poly(n: usize, table: &BernoulliTable) -> Result<XPoly, Error> {
    if n > table.max_n() {
        return Err(Error::InsufficientTable {
            needed: n,
            max_n: table.max_n(),
        });
    }
    let mut acc = XPoly::zero();
    for l in 0..=n {
        let weight = table.number(l).scale(&binomial(n, l));
        let fall = factorial_poly(FactorialKind::FallingLambda, n - l);
        acc = &acc + &fall.scale(&weight);
    }
    Ok(acc)
}

/// Degenerate Frobenius-Euler numbers at a fixed rational `u != 1`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FrobeniusTable {
    u: Rational,
    numbers: Vec<LambdaPoly>,
}

impl FrobeniusTable {
    pub fn max_n(&self) -> usize {
        self.numbers.len() - 1
    }

    pub fn u(&self) -> &Rational {
        &self.u
    }

    pub fn number(&self, n: usize) -> &LambdaPoly {
        &self.numbers[n]
    }
}

/// Degenerate Frobenius-Euler numbers up to `max_n`: `n!` times the
/// `t^n` coefficients of `(1-u) / (e(t) - u)`.
pub fn frobenius_numbers(max_n: usize, u: &Rational) -> Result<FrobeniusTable, Error> {
    if u.is_one() {
        return Err(Error::DegenerateParameter("u = 1 is a pole"));
    }
    let one_minus_u = &Rational::one() - u;
    let mut term = LambdaPoly::one();
    let mut fact = Rational::one();
    // e(t) - u: shift only the constant coefficient of the exponential.
    let denom = Series::from_fn(max_n, |k| {
        if k == 0 {
            return Poly::constant(one_minus_u.clone());
        }
        let step = &Poly::constant(Rational::one())
            - &Poly::monomial(Rational::from((k - 1) as u64), 1);
        term = &term * &step;
        fact = &fact * &Rational::from(k as u64);
        term.scale(&fact.recip().expect("factorial is nonzero"))
    });
    let inv = denom.inverse().expect("constant term 1 - u is nonzero");
    let mut fact = Rational::one();
    let numbers = (0..=max_n)
        .map(|n| {
            if n > 0 {
                fact = &fact * &Rational::from(n as u64);
            }
            inv.coeff(n).scale(&(&fact * &one_minus_u))
        })
        .collect();
    Ok(FrobeniusTable {
        u: u.clone(),
        numbers,
    })
}

/// Degenerate Frobenius-Euler polynomial: binomial convolution of the
/// number table with lambda-falling factorial polynomials of `x`.
pub fn frobenius_poly(n: usize, table: &FrobeniusTable) -> Result<XPoly, Error> {
    if n > table.max_n() {
        return Err(Error::InsufficientTable {
            needed: n,
            max_n: table.max_n(),
        });
    }
    let mut acc = XPoly::zero();
    for k in 0..=n {
        let weight = table.number(k).scale(&binomial(n, k));
        let fall = factorial_poly(FactorialKind::FallingLambda, n - k);
        acc = &acc + &fall.scale(&weight);
    }
    Ok(acc)
}

/// The series `sum_n a_n t^n / n!` for a number table, used by the
/// generating-function roundtrip checks.
pub fn egf_series(numbers: &[LambdaPoly], order: usize) -> Series<LambdaPoly> {
    let mut fact = Rational::one();
    Series::from_fn(order, |n| {
        if n > 0 {
            fact = &fact * &Rational::from(n as u64);
        }
        numbers[n].scale(&fact.recip().expect("factorial is nonzero"))
    })
}
