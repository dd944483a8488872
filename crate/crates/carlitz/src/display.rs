//! Canonical text rendering for polynomials.
//!
//! The grammar is stable and machine-parseable: terms in strictly
//! increasing degree joined by `" + "`, negative coefficients kept inside
//! the coefficient (so `1 + -1*L`), lambda rendered as `L`, the outer
//! variable as `x`, the zero polynomial as `0`. An outer-variable
//! coefficient is parenthesized unless it is a plain rational constant:
//! `(-1/2 + 1/2*L) + 1*x`.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::poly::{LambdaPoly, XPoly};

fn join_terms(terms: Vec<String>) -> String {
    if terms.is_empty() {
        String::from("0")
    } else {
        terms.join(" + ")
    }
}

/// Render a polynomial in lambda, e.g. `1 + -3*L + 2*L^2`.
pub fn lambda_poly_string(p: &LambdaPoly) -> String {
    let terms = p
        .coeffs()
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(d, c)| match d {
            0 => format!("{c}"),
            1 => format!("{c}*L"),
            _ => format!("{c}*L^{d}"),
        })
        .collect();
    join_terms(terms)
}

/// Render a polynomial in the outer variable, e.g. `(-1/2 + 1/2*L) + 1*x`.
pub fn xpoly_string(p: &XPoly) -> String {
    let terms = p
        .coeffs()
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(d, c)| {
            let coef = if c.is_constant() {
                format!("{}", c.coeff(0))
            } else {
                format!("({})", lambda_poly_string(c))
            };
            match d {
                0 => coef,
                1 => format!("{coef}*x"),
                _ => format!("{coef}*x^{d}"),
            }
        })
        .collect();
    join_terms(terms)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Poly;
    use crate::rational::Rational;

    #[test]
    fn lambda_rendering() {
        assert_eq!(lambda_poly_string(&LambdaPoly::zero()), "0");
        assert_eq!(lambda_poly_string(&LambdaPoly::one()), "1");
        let p = Poly::from_coeffs(vec![
            Rational::one(),
            Rational::new(-3, 1),
            Rational::new(2, 1),
        ]);
        assert_eq!(lambda_poly_string(&p), "1 + -3*L + 2*L^2");
        // Internal zero coefficients are skipped.
        let q = Poly::from_coeffs(vec![Rational::one(), Rational::zero(), Rational::new(-1, 1)]);
        assert_eq!(lambda_poly_string(&q), "1 + -1*L^2");
    }

    #[test]
    fn xpoly_rendering() {
        assert_eq!(xpoly_string(&XPoly::zero()), "0");
        // x + (lambda - 1)/2, the first degenerate Bernoulli polynomial.
        let c0 = Poly::from_coeffs(vec![Rational::new(-1, 2), Rational::new(1, 2)]);
        let p = Poly::from_coeffs(vec![c0, LambdaPoly::one()]);
        assert_eq!(xpoly_string(&p), "(-1/2 + 1/2*L) + 1*x");
        let q = Poly::from_coeffs(vec![
            LambdaPoly::zero(),
            LambdaPoly::from_int(2),
            LambdaPoly::lambda(),
        ]);
        assert_eq!(xpoly_string(&q), "2*x + (1*L)*x^2");
    }
}
