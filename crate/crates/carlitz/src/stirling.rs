//! Triangles of degenerate Stirling numbers and basis conversion.
//!
//! The second kind `S2(n,k)` expands lambda-falling factorials in the
//! classical falling basis; the first kind `S1(n,k)` is its inverse
//! direction. Both are polynomials in lambda. The two kinds are computed
//! by independent routes (recurrence, explicit alternating sum,
//! generating function) so they can be cross-checked, and the unsigned
//! brackets are the sign-stripped first kind.
//!
//! Recurrences:
//! - `S2(n+1,k) = S2(n,k-1) + (k - n*L) * S2(n,k)`
//! - `S1(n+1,k) = S1(n,k-1) + (k*L - n) * S1(n,k)`
//!
//! The first follows from multiplying the defining expansion by
//! `(x - n*L)`; the second from multiplying by `(x - n)` and using
//! `(x)_{l}*x = (x)_{l+1} + l*L*(x)_{l}` in the lambda-falling basis.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::Error;
use crate::factorial::{degenerate_exp, factorial_at, FactorialKind};
use crate::poly::{LambdaPoly, Poly, XPoly};
use crate::rational::{binomial, factorial, Rational};
use crate::series::Series;

/// Which number family a [`Triangle`] holds.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum TriangleFamily {
    S2Lambda,
    S1Lambda,
    BracketLambda,
    EulerianLambda,
}

/// A lower-triangular table of lambda-polynomials indexed `(n, k)`,
/// `0 <= k <= n <= size`. Immutable after construction.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Triangle {
    family: TriangleFamily,
    rows: Vec<Vec<LambdaPoly>>,
}

impl Triangle {
    pub(crate) fn from_rows(family: TriangleFamily, rows: Vec<Vec<LambdaPoly>>) -> Self {
        Triangle { family, rows }
    }

    pub fn family(&self) -> TriangleFamily {
        self.family
    }

    /// Largest row index.
    pub fn size(&self) -> usize {
        self.rows.len() - 1
    }

    pub fn row(&self, n: usize) -> &[LambdaPoly] {
        &self.rows[n]
    }

    /// Entry `(n, k)`; anything with `k > n` is zero by convention.
    pub fn entry(&self, n: usize, k: usize) -> LambdaPoly {
        if k > n {
            LambdaPoly::zero()
        } else {
            self.rows[n][k].clone()
        }
    }

    /// A copy with one entry replaced; used by mutation-sensitivity tests.
    pub fn with_entry(&self, n: usize, k: usize, value: LambdaPoly) -> Triangle {
        let mut rows = self.rows.clone();
        rows[n][k] = value;
        Triangle {
            family: self.family,
            rows,
        }
    }
}

fn recurrence_triangle(
    family: TriangleFamily,
    size: usize,
    coeff: impl Fn(usize, usize) -> LambdaPoly,
) -> Triangle {
    let mut rows: Vec<Vec<LambdaPoly>> = vec![vec![LambdaPoly::one()]];
    for n in 0..size {
        let prev = &rows[n];
        let mut row = Vec::with_capacity(n + 2);
        for k in 0..=n + 1 {
            let shifted = if k >= 1 && k - 1 <= n {
                prev[k - 1].clone()
            } else {
                LambdaPoly::zero()
            };
            let kept = if k <= n {
                &prev[k] * &coeff(n, k)
            } else {
                LambdaPoly::zero()
            };
            row.push(&shifted + &kept);
        }
        rows.push(row);
    }
    Triangle::from_rows(family, rows)
}

/// Degenerate Stirling numbers of the second kind up to row `size`,
/// by the recurrence `S2(n+1,k) = S2(n,k-1) + (k - n*L) S2(n,k)`.
pub fn s2_triangle(size: usize) -> Triangle {
    recurrence_triangle(TriangleFamily::S2Lambda, size, |n, k| {
        &Poly::constant(Rational::from(k as u64)) - &Poly::monomial(Rational::from(n as u64), 1)
    })
}

/// Degenerate Stirling numbers of the first kind up to row `size`,
/// by the recurrence `S1(n+1,k) = S1(n,k-1) + (k*L - n) S1(n,k)`.
///
/// This route is validated against the inverse-matrix identity
/// `sum_l S1(n,l) S2(l,k) = delta(n,k)` in the test suite.
pub fn s1_triangle(size: usize) -> Triangle {
    recurrence_triangle(TriangleFamily::S1Lambda, size, |n, k| {
        &Poly::monomial(Rational::from(k as u64), 1) - &Poly::constant(Rational::from(n as u64))
    })
}

/// Unsigned degenerate Stirling numbers of the first kind up to `size`.
pub fn bracket_triangle(size: usize) -> Triangle {
    let s1 = s1_triangle(size);
    let rows = (0..=size)
        .map(|n| {
            (0..=n)
                .map(|k| {
                    let e = s1.entry(n, k);
                    if (n - k) % 2 == 1 {
                        -&e
                    } else {
                        e
                    }
                })
                .collect()
        })
        .collect();
    Triangle::from_rows(TriangleFamily::BracketLambda, rows)
}

/// Unsigned bracket `[n k] = (-1)^(n-k) S1(n,k)`.
pub fn bracket(n: usize, k: usize) -> Result<LambdaPoly, Error> {
    if k > n {
        return Err(Error::IndexError { n, k });
    }
    let e = s1_triangle(n).entry(n, k);
    Ok(if (n - k) % 2 == 1 { -&e } else { e })
}

/// `S2(n,k)` by the explicit alternating sum
/// `(1/k!) sum_l C(k,l) (-1)^(k-l) (l)_{n}`, an independent route used
/// to cross-check the recurrence triangle.
pub fn s2_explicit(n: usize, k: usize) -> Result<LambdaPoly, Error> {
    if k > n {
        return Err(Error::IndexError { n, k });
    }
    let mut sum = LambdaPoly::zero();
    for l in 0..=k {
        let term = factorial_at(FactorialKind::FallingLambda, &Rational::from(l as u64), n)
            .scale(&binomial(k, l));
        sum = if (k - l) % 2 == 1 {
            &sum - &term
        } else {
            &sum + &term
        };
    }
    Ok(sum.scale(&factorial(k).recip().expect("factorial is nonzero")))
}

/// The generating-function route: the series `(e(t) - 1)^k / k!` whose
/// `t^n` coefficient times `n!` is `S2(n,k)`.
pub fn s2_gf_coefficients(k: usize, order: usize) -> Series<LambdaPoly> {
    let e_minus_one = degenerate_exp(&Rational::one(), order)
        .sub(&Series::one(order));
    let mut acc = Series::one(order);
    for _ in 0..k {
        acc = acc.mul(&e_minus_one);
    }
    acc.scale(&Poly::constant(
        factorial(k).recip().expect("factorial is nonzero"),
    ))
}

/// Classical Stirling triangle of the second kind (as rationals), by the
/// classical recurrence `S2(n+1,k) = S2(n,k-1) + k S2(n,k)`.
pub fn classical_s2_triangle(size: usize) -> Vec<Vec<Rational>> {
    let mut rows: Vec<Vec<Rational>> = vec![vec![Rational::one()]];
    for n in 0..size {
        let prev = &rows[n];
        let mut row = Vec::with_capacity(n + 2);
        for k in 0..=n + 1 {
            let shifted = if k >= 1 && k - 1 <= n {
                prev[k - 1].clone()
            } else {
                Rational::zero()
            };
            let kept = if k <= n {
                &prev[k] * &Rational::from(k as u64)
            } else {
                Rational::zero()
            };
            row.push(&shifted + &kept);
        }
        rows.push(row);
    }
    rows
}

/// Classical signed Stirling triangle of the first kind, by the classical
/// recurrence `S1(n+1,k) = S1(n,k-1) - n S1(n,k)`.
pub fn classical_s1_triangle(size: usize) -> Vec<Vec<Rational>> {
    let mut rows: Vec<Vec<Rational>> = vec![vec![Rational::one()]];
    for n in 0..size {
        let prev = &rows[n];
        let mut row = Vec::with_capacity(n + 2);
        for k in 0..=n + 1 {
            let shifted = if k >= 1 && k - 1 <= n {
                prev[k - 1].clone()
            } else {
                Rational::zero()
            };
            let kept = if k <= n {
                &prev[k] * &Rational::from(-(n as i64))
            } else {
                Rational::zero()
            };
            row.push(&shifted + &kept);
        }
        rows.push(row);
    }
    rows
}

/// The three polynomial bases connected by the Stirling triangles.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum PolyBasis {
    /// `x^n`
    Monomial,
    /// `x(x-1)...(x-n+1)`
    FallingClassical,
    /// `x(x-L)...(x-(n-1)L)`
    FallingLambda,
}

enum Step {
    MonToClassical,
    ClassicalToMon,
    LambdaToClassical,
    ClassicalToLambda,
}

fn apply_step(coeffs: &[LambdaPoly], step: &Step) -> Vec<LambdaPoly> {
    let size = coeffs.len().saturating_sub(1);
    // entry(j, k): expansion coefficient of target element k in source element j
    let entry: alloc::boxed::Box<dyn Fn(usize, usize) -> LambdaPoly> = match step {
        Step::MonToClassical => {
            let t = classical_s2_triangle(size);
            alloc::boxed::Box::new(move |j, k| Poly::constant(t[j][k].clone()))
        }
        Step::ClassicalToMon => {
            let t = classical_s1_triangle(size);
            alloc::boxed::Box::new(move |j, k| Poly::constant(t[j][k].clone()))
        }
        Step::LambdaToClassical => {
            let t = s2_triangle(size);
            alloc::boxed::Box::new(move |j, k| t.entry(j, k))
        }
        Step::ClassicalToLambda => {
            let t = s1_triangle(size);
            alloc::boxed::Box::new(move |j, k| t.entry(j, k))
        }
    };
    let mut out = vec![LambdaPoly::zero(); coeffs.len()];
    for (j, c) in coeffs.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        for (k, slot) in out.iter_mut().enumerate().take(j + 1) {
            *slot = &*slot + &(c * &entry(j, k));
        }
    }
    out
}

/// Re-express `p`, given as a coefficient list in the `from` basis, as a
/// coefficient list in the `to` basis. Conversions involving both the
/// monomial and lambda-falling bases route through the classical falling
/// basis. Round-trips are exact.
pub fn change_basis(p: &XPoly, from: PolyBasis, to: PolyBasis) -> XPoly {
    use PolyBasis::*;
    let path: &[Step] = match (from, to) {
        (Monomial, Monomial) | (FallingClassical, FallingClassical)
        | (FallingLambda, FallingLambda) => &[],
        (Monomial, FallingClassical) => &[Step::MonToClassical],
        (Monomial, FallingLambda) => &[Step::MonToClassical, Step::ClassicalToLambda],
        (FallingClassical, Monomial) => &[Step::ClassicalToMon],
        (FallingClassical, FallingLambda) => &[Step::ClassicalToLambda],
        (FallingLambda, FallingClassical) => &[Step::LambdaToClassical],
        (FallingLambda, Monomial) => &[Step::LambdaToClassical, Step::ClassicalToMon],
    };
    let mut coeffs: Vec<LambdaPoly> = p.coeffs().to_vec();
    for step in path {
        coeffs = apply_step(&coeffs, step);
    }
    Poly::from_coeffs(coeffs)
}
