//! Degenerate Eulerian numbers and polynomials.
//!
//! The numbers are defined by the explicit alternating sum
//! `<n m> = sum_{k=0}^{m+1} (-1)^k C(n+1,k) (m-k+1)_{n}` (lambda-falling
//! factorials), and the polynomial `A_n(t)` collects them as coefficients.
//! Everything else is an independently computed consequence used for
//! cross-checking:
//!
//! - the ordinary generating function `A_n(x)/(1-x)^{n+1} = sum_j (j+1)_{n} x^j`,
//! - the recurrence `A_n(t) = sum_{k<n} C(n,k) A_k(t) (t-1)^{n-k-1} <1>_{n-k}`,
//! - the exponential generating function `(t-1)/(t - e_{-lambda}((t-1)x))`,
//! - Carlitz's variant `E_n(x)/(1-x)^{n+1} = sum_j (j)_{n} x^j`, which is
//!   `x * A_n(x)` for `n >= 1`,
//! - and at `lambda = 0` the permutation-descent statistic.

use alloc::vec::Vec;

use crate::error::Error;
use crate::factorial::{factorial_at, FactorialKind};
use crate::poly::{LambdaPoly, Poly, XPoly};
use crate::rational::{binomial, factorial, Rational};
use crate::series::Series;
use crate::stirling::{Triangle, TriangleFamily};

/// One row of degenerate Eulerian numbers: `<n m>` for `m = 0..=n`.
/// The top entry `<n n>` is identically zero for `n >= 1`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct EulerianRow {
    n: usize,
    numbers: Vec<LambdaPoly>,
}

impl EulerianRow {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn numbers(&self) -> &[LambdaPoly] {
        &self.numbers
    }

    pub fn number(&self, m: usize) -> &LambdaPoly {
        &self.numbers[m]
    }
}

/// A degenerate Eulerian polynomial `A_n` in the variable `t`, of degree
/// at most `max(n-1, 0)`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct EulerianPoly {
    n: usize,
    poly: XPoly,
}

impl EulerianPoly {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn poly(&self) -> &XPoly {
        &self.poly
    }

    pub fn into_poly(self) -> XPoly {
        self.poly
    }
}

/// Lambda-falling factorials `(j)_{n}` for `j = 0..=j_max`, built
/// incrementally so a whole row of alternating sums shares them.
fn falling_factorials(n: usize, j_max: usize) -> Vec<LambdaPoly> {
    let mut falls = alloc::vec![LambdaPoly::one(); j_max + 1];
    for level in 0..n {
        for (j, f) in falls.iter_mut().enumerate() {
            let step = &Poly::constant(Rational::from(j as u64))
                - &Poly::monomial(Rational::from(level as u64), 1);
            *f = &*f * &step;
        }
    }
    falls
}

fn alternating_sum(n: usize, m: usize, falls: &[LambdaPoly]) -> LambdaPoly {
    let mut sum = LambdaPoly::zero();
    for k in 0..=m + 1 {
        let term = falls[m + 1 - k].scale(&binomial(n + 1, k));
        sum = if k % 2 == 1 { &sum - &term } else { &sum + &term };
    }
    sum
}

/// The degenerate Eulerian number `<n m>` by the explicit alternating sum.
pub fn eulerian_number(n: usize, m: usize) -> Result<LambdaPoly, Error> {
    if m > n {
        return Err(Error::IndexError { n, k: m });
    }
    if n == 0 {
        return Ok(LambdaPoly::one());
    }
    Ok(alternating_sum(n, m, &falling_factorials(n, m + 1)))
}

/// The full row `<n 0> .. <n n>`.
pub fn eulerian_row(n: usize) -> EulerianRow {
    if n == 0 {
        return EulerianRow {
            n,
            numbers: alloc::vec![LambdaPoly::one()],
        };
    }
    let falls = falling_factorials(n, n + 1);
    EulerianRow {
        n,
        numbers: (0..=n).map(|m| alternating_sum(n, m, &falls)).collect(),
    }
}

/// Rows 0..=size as a [`Triangle`].
pub fn eulerian_triangle(size: usize) -> Triangle {
    let mut falls = alloc::vec![LambdaPoly::one(); size + 2];
    let mut rows = alloc::vec![alloc::vec![LambdaPoly::one()]];
    for n in 1..=size {
        for (j, f) in falls.iter_mut().enumerate() {
            let step = &Poly::constant(Rational::from(j as u64))
                - &Poly::monomial(Rational::from((n - 1) as u64), 1);
            *f = &*f * &step;
        }
        rows.push((0..=n).map(|m| alternating_sum(n, m, &falls)).collect());
    }
    Triangle::from_rows(TriangleFamily::EulerianLambda, rows)
}

/// `A_n(t)` assembled from the explicit numbers. This is the defining
/// route; the recurrence and generating-function routes are checked
/// against it.
pub fn eulerian_poly_explicit(n: usize) -> EulerianPoly {
    EulerianPoly {
        n,
        poly: Poly::from_coeffs(eulerian_row(n).numbers),
    }
}

/// `A_n(t)` by the recurrence
/// `A_n(t) = sum_{k=0}^{n-1} C(n,k) A_k(t) (t-1)^{n-k-1} <1>_{n-k}`,
/// an independent route used for cross-checking.
pub fn eulerian_poly_recurrence(n: usize) -> EulerianPoly {
    let t_minus_one: XPoly =
        Poly::from_coeffs(alloc::vec![LambdaPoly::from_int(-1), LambdaPoly::one()]);
    let mut polys: Vec<XPoly> = alloc::vec![XPoly::one()];
    for r in 1..=n {
        let mut acc = XPoly::zero();
        for (k, earlier) in polys.iter().enumerate() {
            let rising = factorial_at(FactorialKind::RisingLambda, &Rational::one(), r - k);
            let term = earlier * &t_minus_one.pow(r - k - 1);
            acc = &acc + &term.scale(&rising.scale(&binomial(r, k)));
        }
        polys.push(acc);
    }
    EulerianPoly {
        n,
        poly: polys.pop().expect("non-empty"),
    }
}

/// The truncated product `(1-x)^{n+1} * sum_{j=0}^{order} (j+c)_{n} x^j`
/// with `c` either 1 (Eulerian) or 0 (Carlitz variant).
fn gf_product(n: usize, order: usize, offset: usize) -> XPoly {
    let falls = falling_factorials(n, order + offset);
    let sum: XPoly = Poly::from_coeffs((0..=order).map(|j| falls[j + offset].clone()).collect());
    let one_minus_x: XPoly =
        Poly::from_coeffs(alloc::vec![LambdaPoly::one(), LambdaPoly::from_int(-1)]);
    &sum * &one_minus_x.pow(n + 1)
}

/// Whether a candidate polynomial matches the generating-function
/// reconstruction of `A_n` on every coefficient the truncation fully
/// determines (degrees `<= order - (n+1)`).
pub fn gf_matches(candidate: &XPoly, n: usize, order: usize) -> bool {
    let product = gf_product(n, order, 1);
    let Some(reconstructable) = (order + 1).checked_sub(n + 2) else {
        return true;
    };
    (0..=reconstructable).all(|d| product.coeff(d) == candidate.coeff(d))
}

/// The reconstructable prefix of the generating-function route for `A_n`:
/// coefficients of `(1-x)^{n+1} sum_{j<=order} (j+1)_{n} x^j` up to
/// degree `order - (n+1)`, as a polynomial.
pub fn gf_reconstruction(n: usize, order: usize) -> XPoly {
    let product = gf_product(n, order, 1);
    match (order + 1).checked_sub(n + 2) {
        None => XPoly::zero(),
        Some(r) => Poly::from_coeffs(
            product.coeffs().iter().take(r + 1).cloned().collect(),
        ),
    }
}

/// Check `(1-x)^{n+1} sum_j (j+1)_{n} x^j = A_n(x)` on the coefficients
/// the truncation determines.
pub fn eulerian_gf_check(n: usize, order: usize) -> bool {
    assert!(order >= n, "truncation must reach at least n");
    gf_matches(eulerian_poly_explicit(n).poly(), n, order)
}

/// Carlitz's variant `E_n`, reconstructed from
/// `E_n(x)/(1-x)^{n+1} = sum_j (j)_{n} x^j`. Errors if the truncation
/// leaves nonzero coefficients past the reconstructable degree.
pub fn carlitz_poly(n: usize, order: usize) -> Result<XPoly, Error> {
    assert!(order >= n + 2, "truncation must reach at least n + 2");
    let product = gf_product(n, order, 0);
    let reconstructable = order - (n + 1);
    // Degrees up to `order` are exact for the truncated product; anything
    // nonzero between the reconstructable bound and there means the
    // polynomial extends past what we may trust.
    for d in reconstructable + 1..=order {
        if !product.coeff(d).is_zero() {
            return Err(Error::TruncationTooShort {
                order,
                needed: d + n + 1,
            });
        }
    }
    Ok(Poly::from_coeffs(
        product.coeffs()[..=reconstructable.min(product.coeffs().len().saturating_sub(1))].to_vec(),
    ))
}

/// The series expansion of `(t-1)/(t - e_{-lambda}((t-1)x))` in `x` at a
/// rational `t0 != 1`, lambda symbolic.
pub fn eulerian_egf_series(order: usize, t0: &Rational) -> Result<Series<LambdaPoly>, Error> {
    if t0.is_one() {
        return Err(Error::DegenerateParameter("t = 1 is a pole"));
    }
    let t0_minus_one = t0 - &Rational::one();
    // t0 - e_{-lambda}((t0-1) x): coefficient of x^n is
    // -(1)_{n,-lambda} (t0-1)^n / n! for n >= 1, and t0 - 1 at n = 0.
    let denom = Series::from_fn(order, |n| {
        if n == 0 {
            return Poly::constant(t0_minus_one.clone());
        }
        let rising = factorial_at(FactorialKind::RisingLambda, &Rational::one(), n);
        let weight = &t0_minus_one.pow(n as i32) / &factorial(n);
        (-&rising).scale(&weight)
    });
    Ok(denom
        .inverse()
        .expect("constant term t0 - 1 is nonzero")
        .scale(&Poly::constant(t0_minus_one)))
}

/// Check the exponential generating function
/// `(t-1)/(t - e_{-lambda}((t-1)x)) = sum_n A_n(t) x^n / n!` at a rational
/// `t0 != 1`, comparing series coefficients for all `n <= order`.
pub fn eulerian_egf_check(order: usize, t0: &Rational) -> Result<bool, Error> {
    let lhs = eulerian_egf_series(order, t0)?;
    for n in 0..=order {
        let a_at_t0 = eulerian_poly_explicit(n).poly().eval_at_rational(t0);
        let expect = a_at_t0.scale(&factorial(n).recip().expect("factorial is nonzero"));
        if lhs.coeff(n) != &expect {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Advance to the next permutation in lexicographic order.
fn next_permutation(perm: &mut [u8]) -> bool {
    if perm.len() < 2 {
        return false;
    }
    let mut i = perm.len() - 1;
    while i > 0 && perm[i - 1] >= perm[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = perm.len() - 1;
    while perm[j] <= perm[i - 1] {
        j -= 1;
    }
    perm.swap(i - 1, j);
    perm[i..].reverse();
    true
}

/// The classical Eulerian polynomial `A_n(t)` by brute force: enumerate
/// all `n!` permutations in lexicographic order and count descents. This
/// is the `lambda = 0` oracle for the whole module; `n` is capped at 8.
pub fn descent_polynomial(n: usize) -> Result<Poly<Rational>, Error> {
    if n > 8 {
        return Err(Error::TooLarge { n, max: 8 });
    }
    if n == 0 {
        return Ok(Poly::one());
    }
    let mut counts = alloc::vec![0u64; n];
    let mut perm: Vec<u8> = (1..=n as u8).collect();
    loop {
        let descents = perm.windows(2).filter(|w| w[0] > w[1]).count();
        counts[descents] += 1;
        if !next_permutation(&mut perm) {
            break;
        }
    }
    Ok(Poly::from_coeffs(
        counts.into_iter().map(Rational::from).collect(),
    ))
}
