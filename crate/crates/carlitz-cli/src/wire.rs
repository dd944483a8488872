//! Parsers for the canonical polynomial text format.
//!
//! Grammar (terms in strictly increasing degree, zero polynomial is `0`):
//!
//! ```text
//! rational := '-'? digits ('/' digits)?
//! lpoly    := '0' | lterm (' + ' lterm)*
//! lterm    := rational | rational '*L' | rational '*L^' digits
//! xpoly    := '0' | xterm (' + ' xterm)*
//! xterm    := coef | coef '*x' | coef '*x^' digits
//! coef     := rational | '(' lpoly ')'
//! ```
//!
//! Every string emitted by the rendering side round-trips through these
//! parsers back to the identical canonical value.

use carlitz::poly::{LambdaPoly, Poly, XPoly};
use carlitz::rational::Rational;

pub fn parse_rational(s: &str) -> Result<Rational, String> {
    s.trim()
        .parse::<Rational>()
        .map_err(|e| format!("{e}"))
}

/// Split on top-level `" + "` separators, leaving parenthesized
/// coefficients intact.
fn split_terms(s: &str) -> Vec<&str> {
    let bytes = s.as_bytes();
    let mut depth = 0usize;
    let mut start = 0usize;
    let mut parts = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        match bytes[i] {
            b'(' => depth += 1,
            b')' => depth = depth.saturating_sub(1),
            b' ' if depth == 0 && bytes[i..].starts_with(b" + ") => {
                parts.push(&s[start..i]);
                i += 3;
                start = i;
                continue;
            }
            _ => {}
        }
        i += 1;
    }
    parts.push(&s[start..]);
    parts
}

/// One term `coef`, `coef*V` or `coef*V^d` for variable letter `var`.
fn parse_term<C>(term: &str, var: char, parse_coef: impl Fn(&str) -> Result<C, String>) -> Result<(C, usize), String> {
    let marker = format!("*{var}");
    match term.rfind(&marker) {
        None => Ok((parse_coef(term)?, 0)),
        Some(pos) => {
            let coef = parse_coef(&term[..pos])?;
            let rest = &term[pos + marker.len()..];
            let degree = if rest.is_empty() {
                1
            } else if let Some(d) = rest.strip_prefix('^') {
                d.parse::<usize>().map_err(|_| format!("bad exponent `{rest}`"))?
            } else {
                return Err(format!("trailing `{rest}` after {var}"));
            };
            Ok((coef, degree))
        }
    }
}

pub fn parse_lambda_poly(s: &str) -> Result<LambdaPoly, String> {
    let s = s.trim();
    if s == "0" {
        return Ok(LambdaPoly::zero());
    }
    let mut acc = LambdaPoly::zero();
    for term in split_terms(s) {
        let (coef, degree) = parse_term(term.trim(), 'L', parse_rational)?;
        acc = &acc + &Poly::monomial(coef, degree);
    }
    Ok(acc)
}

fn parse_xcoef(s: &str) -> Result<LambdaPoly, String> {
    let s = s.trim();
    if let Some(inner) = s.strip_prefix('(') {
        let inner = inner
            .strip_suffix(')')
            .ok_or_else(|| format!("unbalanced parens in `{s}`"))?;
        parse_lambda_poly(inner)
    } else {
        Ok(Poly::constant(parse_rational(s)?))
    }
}

pub fn parse_xpoly(s: &str) -> Result<XPoly, String> {
    let s = s.trim();
    if s == "0" {
        return Ok(XPoly::zero());
    }
    let mut acc = XPoly::zero();
    for term in split_terms(s) {
        let (coef, degree) = parse_term(term.trim(), 'x', parse_xcoef)?;
        acc = &acc + &Poly::monomial(coef, degree);
    }
    Ok(acc)
}
