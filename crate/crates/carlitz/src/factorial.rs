//! Generalized falling and rising factorials and the degenerate
//! exponential.
//!
//! The lambda-falling factorial is
//! `(x)_{n} = x(x - L)(x - 2L)...(x - (n-1)L)` and the rising variant
//! flips the signs of the steps. Setting the step parameter to 1 recovers
//! the classical falling/rising factorials; letting it go to 0 recovers
//! plain powers. The degenerate exponential is the series whose `t^n/n!`
//! coefficient is the lambda-falling factorial of its argument.

use crate::poly::{LambdaPoly, Poly, XPoly};
use crate::rational::{factorial, Rational};
use crate::series::Series;

/// Which factorial family a computation refers to.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum FactorialKind {
    /// `x(x - L)(x - 2L)...`
    FallingLambda,
    /// `x(x + L)(x + 2L)...`
    RisingLambda,
    /// `x(x - 1)(x - 2)...`
    FallingClassical,
    /// `x(x + 1)(x + 2)...`
    RisingClassical,
}

impl FactorialKind {
    /// The step subtracted from (or added to) `x` at position `j`,
    /// as a polynomial in lambda.
    fn step(self, j: usize) -> LambdaPoly {
        let j = j as i64;
        match self {
            FactorialKind::FallingLambda => Poly::monomial(Rational::from(-j), 1),
            FactorialKind::RisingLambda => Poly::monomial(Rational::from(j), 1),
            FactorialKind::FallingClassical => Poly::constant(Rational::from(-j)),
            FactorialKind::RisingClassical => Poly::constant(Rational::from(j)),
        }
    }
}

/// The degree-`n` monic factorial polynomial in `x`; `n = 0` yields 1.
pub fn factorial_poly(kind: FactorialKind, n: usize) -> XPoly {
    let mut acc = XPoly::one();
    for j in 0..n {
        let factor = Poly::from_coeffs(alloc::vec![kind.step(j), LambdaPoly::one()]);
        acc = &acc * &factor;
    }
    acc
}

/// The factorial evaluated at a rational point, lambda kept symbolic.
pub fn factorial_at(kind: FactorialKind, x0: &Rational, n: usize) -> LambdaPoly {
    let mut acc = LambdaPoly::one();
    for j in 0..n {
        let factor = &Poly::constant(x0.clone()) + &kind.step(j);
        acc = &acc * &factor;
    }
    acc
}

/// The degenerate exponential of `x0` as a truncated series: the
/// coefficient of `t^n` is the lambda-falling factorial of `x0` over `n!`.
pub fn degenerate_exp(x0: &Rational, order: usize) -> Series<LambdaPoly> {
    let mut term = LambdaPoly::one();
    let mut n_fact = Rational::one();
    Series::from_fn(order, |n| {
        if n > 0 {
            let step = FactorialKind::FallingLambda.step(n - 1);
            term = &term * &(&Poly::constant(x0.clone()) + &step);
            n_fact = &n_fact * &Rational::from(n as u64);
        }
        term.scale(&n_fact.recip().expect("factorial is nonzero"))
    })
}

/// Degenerate lambda-binomial coefficient: the lambda-falling factorial
/// of `k0` taken `n` steps, divided by `n!`.
pub fn lambda_binomial(k0: &Rational, n: usize) -> LambdaPoly {
    factorial_at(FactorialKind::FallingLambda, k0, n)
        .scale(&factorial(n).recip().expect("factorial is nonzero"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::binomial;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    fn lp(coeffs: &[i64]) -> LambdaPoly {
        Poly::from_coeffs(coeffs.iter().map(|&c| Rational::from(c)).collect())
    }

    #[test]
    fn factorial_poly_small_cases() {
        assert_eq!(factorial_poly(FactorialKind::FallingLambda, 0), XPoly::one());
        // x(x - L) = x^2 - L x
        let expect = Poly::from_coeffs(alloc::vec![
            LambdaPoly::zero(),
            Poly::monomial(q(-1, 1), 1),
            LambdaPoly::one(),
        ]);
        assert_eq!(factorial_poly(FactorialKind::FallingLambda, 2), expect);
        // x(x + L) = x^2 + L x
        let expect = Poly::from_coeffs(alloc::vec![
            LambdaPoly::zero(),
            LambdaPoly::lambda(),
            LambdaPoly::one(),
        ]);
        assert_eq!(factorial_poly(FactorialKind::RisingLambda, 2), expect);
    }

    #[test]
    fn factorial_at_desk_values() {
        // (1)_{3} = (1)(1-L)(1-2L) = 1 - 3L + 2L^2
        assert_eq!(
            factorial_at(FactorialKind::FallingLambda, &q(1, 1), 3),
            lp(&[1, -3, 2])
        );
        // (2)_{2} = 2(2-L) = 4 - 2L
        assert_eq!(
            factorial_at(FactorialKind::FallingLambda, &q(2, 1), 2),
            lp(&[4, -2])
        );
        // <1>_{2} = 1(1+L) = 1 + L
        assert_eq!(
            factorial_at(FactorialKind::RisingLambda, &q(1, 1), 2),
            lp(&[1, 1])
        );
    }

    #[test]
    fn classical_kinds_match_lambda_at_one() {
        let one = Rational::one();
        for n in 0..=10 {
            for x0 in [q(0, 1), q(1, 1), q(3, 1), q(-2, 1), q(5, 2)] {
                let falling = factorial_at(FactorialKind::FallingLambda, &x0, n);
                let classical = factorial_at(FactorialKind::FallingClassical, &x0, n);
                assert_eq!(Poly::constant(falling.eval(&one)), classical);
                let rising = factorial_at(FactorialKind::RisingLambda, &x0, n);
                let classical = factorial_at(FactorialKind::RisingClassical, &x0, n);
                assert_eq!(Poly::constant(rising.eval(&one)), classical);
            }
        }
    }

    #[test]
    fn lambda_zero_collapses_to_powers() {
        let zero = Rational::zero();
        for n in 0..=8 {
            for x0 in [q(2, 1), q(-1, 1), q(3, 4)] {
                let p = factorial_at(FactorialKind::FallingLambda, &x0, n);
                assert_eq!(p.eval(&zero), x0.pow(n as i32));
            }
        }
    }

    #[test]
    fn degenerate_exp_coefficients() {
        let e0 = degenerate_exp(&q(0, 1), 5);
        assert!(e0.is_one());

        let e1 = degenerate_exp(&q(1, 1), 2);
        assert_eq!(e1.coeff(0), &LambdaPoly::one());
        assert_eq!(e1.coeff(1), &LambdaPoly::one());
        // (1)_{2}/2! = (1 - L)/2
        assert_eq!(
            e1.coeff(2),
            &Poly::from_coeffs(alloc::vec![q(1, 2), q(-1, 2)])
        );

        let e2 = degenerate_exp(&q(2, 1), 2);
        assert_eq!(e2.coeff(1), &lp(&[2]));
        // (2)_{2}/2! = (4 - 2L)/2 = 2 - L
        assert_eq!(e2.coeff(2), &lp(&[2, -1]));
    }

    #[test]
    fn exp_is_multiplicative() {
        // e^a(t) e^b(t) = e^{a+b}(t), lambda symbolic, to every order.
        for (a, b) in [(q(1, 1), q(1, 1)), (q(2, 1), q(3, 1)), (q(1, 2), q(-1, 3))] {
            let ea = degenerate_exp(&a, 6);
            let eb = degenerate_exp(&b, 6);
            let eab = degenerate_exp(&(&a + &b), 6);
            assert_eq!(ea.mul(&eb), eab);
        }
    }

    #[test]
    fn vandermonde_convolution() {
        // (a+b)_{n} = sum_l C(n,l) (a)_{l} (b)_{n-l}, lambda symbolic.
        let cases = [(q(2, 1), q(3, 1)), (q(1, 2), q(1, 3)), (q(-1, 1), q(5, 2))];
        for (a, b) in cases {
            for n in 0..=8 {
                let direct = factorial_at(FactorialKind::FallingLambda, &(&a + &b), n);
                let mut sum = LambdaPoly::zero();
                for l in 0..=n {
                    let term = &factorial_at(FactorialKind::FallingLambda, &a, l)
                        * &factorial_at(FactorialKind::FallingLambda, &b, n - l);
                    sum = &sum + &term.scale(&binomial(n, l));
                }
                assert_eq!(direct, sum, "n={n}");
            }
        }
    }

    #[test]
    fn lambda_binomial_values() {
        assert_eq!(lambda_binomial(&q(5, 1), 0), LambdaPoly::one());
        // (3)_{2}/2! = 3(3-L)/2 = (9 - 3L)/2
        assert_eq!(
            lambda_binomial(&q(3, 1), 2),
            Poly::from_coeffs(alloc::vec![q(9, 2), q(-3, 2)])
        );
        // At lambda = 1 the factorial is classical, so this is the
        // ordinary binomial: C(1,2) = 0, C(5,3) = 10.
        assert_eq!(
            lambda_binomial(&q(1, 1), 2).eval(&Rational::one()),
            Rational::zero()
        );
        assert_eq!(
            lambda_binomial(&q(5, 1), 3).eval(&Rational::one()),
            Rational::from(10i64)
        );
        // At lambda = 0 it degenerates to k^n/n! instead.
        assert_eq!(
            lambda_binomial(&q(1, 1), 2).eval(&Rational::zero()),
            q(1, 2)
        );
    }
}
