//! Mechanical verification of the finite-sum identity catalogue.
//!
//! Every verifier compares two independently computed exact values: the
//! left-hand side is always recomputed by direct summation (the dumb
//! oracle) and the right-hand side through the closed form under test.
//! Nothing is shared between the two sides except the base tables of
//! Stirling, Bernoulli and Eulerian values. All comparisons are exact
//! with lambda symbolic; sampled rationals come from a seeded generator
//! so a run is a pure function of its [`SuiteConfig`].

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::appell::{bernoulli_numbers, bernoulli_poly, egf_series, frobenius_numbers, frobenius_poly, BernoulliTable};
use crate::display::{lambda_poly_string, xpoly_string};
use crate::error::Error;
use crate::eulerian::{
    eulerian_egf_series, eulerian_number, eulerian_poly_explicit, eulerian_poly_recurrence,
    gf_reconstruction,
};
use crate::factorial::{degenerate_exp, factorial_at, lambda_binomial, FactorialKind};
use crate::poly::{LambdaPoly, Poly, XPoly};
use crate::rational::{binomial, factorial, Rational};
use crate::series::Series;
use crate::stirling::{s1_triangle, s2_triangle, Triangle};

/// Outcome of one identity check.
///
/// `lhs`/`rhs` carry the canonical serialized values of the two sides and
/// are present exactly when the check failed. `expected_fail` marks
/// statements that are verified to fail as printed (the verbatim form of
/// the finite-sum/Eulerian recurrence theorem); those do not count as
/// suite failures.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct IdentityResult {
    pub identity_id: String,
    pub parameters: BTreeMap<String, String>,
    pub passed: bool,
    pub expected_fail: bool,
    pub lhs: Option<String>,
    pub rhs: Option<String>,
}

impl IdentityResult {
    fn new(id: &str, parameters: BTreeMap<String, String>, passed: bool, lhs: String, rhs: String) -> Self {
        IdentityResult {
            identity_id: id.to_string(),
            parameters,
            passed,
            expected_fail: false,
            lhs: if passed { None } else { Some(lhs) },
            rhs: if passed { None } else { Some(rhs) },
        }
    }

    fn check_lambda(id: &str, parameters: BTreeMap<String, String>, lhs: &LambdaPoly, rhs: &LambdaPoly) -> Self {
        Self::new(id, parameters, lhs == rhs, lambda_poly_string(lhs), lambda_poly_string(rhs))
    }

    fn check_xpoly(id: &str, parameters: BTreeMap<String, String>, lhs: &XPoly, rhs: &XPoly) -> Self {
        Self::new(id, parameters, lhs == rhs, xpoly_string(lhs), xpoly_string(rhs))
    }

    fn check_series(
        id: &str,
        parameters: BTreeMap<String, String>,
        lhs: &Series<LambdaPoly>,
        rhs: &Series<LambdaPoly>,
    ) -> Self {
        Self::new(id, parameters, lhs == rhs, series_string(lhs), series_string(rhs))
    }

    /// Whether this result counts against the suite.
    pub fn is_unexpected_failure(&self) -> bool {
        !self.passed && !self.expected_fail
    }
}

fn series_string(s: &Series<LambdaPoly>) -> String {
    let cells: Vec<String> = s.coeffs().iter().map(lambda_poly_string).collect();
    format!("[{}]", cells.join(", "))
}

fn params(pairs: &[(&str, String)]) -> BTreeMap<String, String> {
    pairs
        .iter()
        .map(|(k, v)| (k.to_string(), v.clone()))
        .collect()
}

fn nat(n: usize) -> String {
    n.to_string()
}

/// Deterministic generator of small-height rationals.
///
/// splitmix64 underneath, so the stream is identical across platforms and
/// runs for a given seed. Values have numerator and denominator of
/// absolute value at most 10 and never land on 0 or 1.
pub struct SampleRng {
    state: u64,
}

impl SampleRng {
    pub fn new(seed: u64) -> Self {
        SampleRng { state: seed }
    }

    fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    /// Next sample, excluding 0 and 1.
    pub fn next_rational(&mut self) -> Rational {
        loop {
            let num = (self.next_u64() % 21) as i64 - 10;
            let den = (self.next_u64() % 10) as i64 + 1;
            let r = Rational::new(num, den);
            if !r.is_zero() && !r.is_one() {
                return r;
            }
        }
    }
}

/// Bounds and sampled parameters for a full suite run. A run is a pure
/// function of this value.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SuiteConfig {
    pub alpha_max: usize,
    pub m_max: usize,
    pub n_max: usize,
    pub sample_count: usize,
    pub seed: u64,
    /// Sampled evaluation points for the power-sum identity in `x`.
    pub x_samples: Vec<Rational>,
    /// Extra evaluation points for the exponential generating function,
    /// on top of the fixed anchors 2, -1, 1/2.
    pub t_samples: Vec<Rational>,
}

impl SuiteConfig {
    /// Default bounds with samples drawn from `seed`.
    pub fn new(seed: u64) -> Self {
        SuiteConfig::with_bounds(6, 10, 8, 3, seed)
    }

    pub fn with_bounds(
        alpha_max: usize,
        m_max: usize,
        n_max: usize,
        sample_count: usize,
        seed: u64,
    ) -> Self {
        let mut rng = SampleRng::new(seed);
        let x_samples = (0..sample_count).map(|_| rng.next_rational()).collect();
        let t_samples = (0..sample_count).map(|_| rng.next_rational()).collect();
        SuiteConfig {
            alpha_max,
            m_max,
            n_max,
            sample_count,
            seed,
            x_samples,
            t_samples,
        }
    }
}

/// The shared base tables: Stirling triangles of both kinds, Bernoulli
/// numbers, and the explicit Eulerian polynomials. Verifiers read these
/// for their closed-form sides; oracle sides never touch them.
#[derive(Clone, Debug)]
pub struct Tables {
    pub s2: Triangle,
    pub s1: Triangle,
    pub bernoulli: BernoulliTable,
    pub eulerian: Vec<XPoly>,
}

impl Tables {
    pub fn build(config: &SuiteConfig) -> Tables {
        let size = config.alpha_max.max(config.m_max).max(config.n_max) + 1;
        let bern_n = (config.alpha_max + 1).max(config.m_max).max(config.n_max);
        Tables {
            s2: s2_triangle(size),
            s1: s1_triangle(size),
            bernoulli: bernoulli_numbers(bern_n),
            // The exponential generating function is compared out to
            // n_max + 2, so the polynomial table extends that far.
            eulerian: (0..=config.n_max + 2)
                .map(|n| eulerian_poly_explicit(n).into_poly())
                .collect(),
        }
    }

    fn bracket(&self, n: usize, k: usize) -> LambdaPoly {
        let e = self.s1.entry(n, k);
        if k <= n && (n - k) % 2 == 1 {
            -&e
        } else {
            e
        }
    }
}

fn falling(x0: u64, n: usize) -> LambdaPoly {
    factorial_at(FactorialKind::FallingLambda, &Rational::from(x0), n)
}

fn rising_one(n: usize) -> LambdaPoly {
    factorial_at(FactorialKind::RisingLambda, &Rational::one(), n)
}

/// The weighted power-sum identity for an arbitrary sequence:
/// `sum_{k=a}^{m} (k)_{a} a_k` against the Stirling-weighted double sum
/// with its correction term. `a` holds `a_1 ..= a_m`.
pub fn verify_thm1(
    tables: &Tables,
    alpha: usize,
    m: usize,
    a: &[Rational],
    sample_index: usize,
) -> Result<IdentityResult, Error> {
    if a.len() != m {
        return Err(Error::BadLength {
            expected: m,
            got: a.len(),
        });
    }
    assert!(alpha >= 1 && alpha <= m);

    let mut lhs = LambdaPoly::zero();
    for k in alpha..=m {
        lhs = &lhs + &falling(k as u64, alpha).scale(&a[k - 1]);
    }

    let weighted_tail = |upper: usize| {
        let mut total = LambdaPoly::zero();
        for k in 1..=upper {
            let mut inner = Rational::zero();
            for l in k..=upper {
                inner = &inner + &(&binomial(l, k) * &a[l - 1]);
            }
            total = &total + &tables.s2.entry(alpha, k).scale(&(&factorial(k) * &inner));
        }
        total
    };
    let rhs = &weighted_tail(m) - &weighted_tail(alpha - 1);

    Ok(IdentityResult::check_lambda(
        "thm1",
        params(&[
            ("alpha", nat(alpha)),
            ("m", nat(m)),
            ("sample", nat(sample_index)),
        ]),
        &lhs,
        &rhs,
    ))
}

/// The four closed forms for the plain power sum
/// `sum_{k=a}^{m} (k)_{a}`: Stirling column sums with hockey-stick
/// binomials, the shifted-recurrence form, the Bernoulli difference, and
/// the lambda-binomial restatement.
pub fn verify_sum_powers(tables: &Tables, alpha: usize, m: usize) -> Vec<IdentityResult> {
    assert!(alpha >= 1 && alpha <= m);
    let p = params(&[("alpha", nat(alpha)), ("m", nat(m))]);

    // The dumb oracle, by direct summation.
    let mut lhs = LambdaPoly::zero();
    for k in alpha..=m {
        lhs = &lhs + &falling(k as u64, alpha);
    }

    let mut out = Vec::with_capacity(4);

    // sum_k S2(alpha,k) k! C(m+1,k+1), corrected below alpha.
    let stirling_form = |upper: usize, binom_top: usize| {
        let mut total = LambdaPoly::zero();
        for k in 1..=upper {
            let w = &factorial(k) * &binomial(binom_top, k + 1);
            total = &total + &tables.s2.entry(alpha, k).scale(&w);
        }
        total
    };
    let rhs2 = &stirling_form(m, m + 1) - &stirling_form(alpha - 1, alpha);
    out.push(IdentityResult::check_lambda("thm2", p.clone(), &lhs, &rhs2));

    // sum_k C(m,k)(k-1)! { S2(alpha+1,k) + alpha L S2(alpha,k) }.
    let shifted_form = |upper: usize, binom_top: usize| {
        let mut total = LambdaPoly::zero();
        for k in 1..=upper {
            let bracket = &tables.s2.entry(alpha + 1, k)
                + &(&tables.s2.entry(alpha, k)
                    * &Poly::monomial(Rational::from(alpha as u64), 1));
            let w = &binomial(binom_top, k) * &factorial(k - 1);
            total = &total + &bracket.scale(&w);
        }
        total
    };
    let rhs3 = &shifted_form(m, m) - &shifted_form(alpha - 1, alpha - 1);
    out.push(IdentityResult::check_lambda("thm3", p.clone(), &lhs, &rhs3));

    // (beta_{alpha+1}(m+1) - beta_{alpha+1}(alpha)) / (alpha+1).
    let beta = bernoulli_poly(alpha + 1, &tables.bernoulli).expect("table sized for alpha+1");
    let diff = &beta.eval_at_rational(&Rational::from((m + 1) as u64))
        - &beta.eval_at_rational(&Rational::from(alpha as u64));
    let rhs4 = diff.scale(&Rational::new(1, (alpha + 1) as i64));
    out.push(IdentityResult::check_lambda("thm4", p.clone(), &lhs, &rhs4));

    // Restated for lambda-binomials: divide the closed form by alpha!,
    // and recompute the oracle side from lambda_binomial directly.
    let mut binom_lhs = LambdaPoly::zero();
    for k in alpha..=m {
        binom_lhs = &binom_lhs + &lambda_binomial(&Rational::from(k as u64), alpha);
    }
    let inv_fact = factorial(alpha).recip().expect("factorial is nonzero");
    let rhs23 = (&stirling_form(m, m + 1) - &stirling_form(alpha - 1, alpha)).scale(&inv_fact);
    out.push(IdentityResult::check_lambda("eq23", p, &binom_lhs, &rhs23));

    out
}

/// The geometric-weighted power sum
/// `sum_{k=a}^{m} (k)_{a} x^k` against the Frobenius-Euler difference
/// form, plus its Stirling double-sum restatement.
pub fn verify_thm5(
    tables: &Tables,
    alpha: usize,
    m: usize,
    x0: &Rational,
) -> Result<IdentityResult, Error> {
    if x0.is_zero() || x0.is_one() {
        return Err(Error::DegenerateParameter("x must avoid 0 and 1"));
    }
    assert!(alpha >= 1 && alpha <= m);
    let p = params(&[
        ("alpha", nat(alpha)),
        ("m", nat(m)),
        ("x0", x0.to_string()),
    ]);

    let mut lhs = LambdaPoly::zero();
    for k in alpha..=m {
        lhs = &lhs + &falling(k as u64, alpha).scale(&x0.pow(k as i32));
    }

    // (x^{m+1} H_a(m+1 | 1/x) - x^a H_a(a | 1/x)) / (x - 1)
    let u = x0.recip().expect("x0 is nonzero");
    let table = frobenius_numbers(alpha, &u).expect("u != 1 since x0 != 1");
    let h = frobenius_poly(alpha, &table).expect("table sized for alpha");
    let upper = h
        .eval_at_rational(&Rational::from((m + 1) as u64))
        .scale(&x0.pow(m as i32 + 1));
    let lower = h
        .eval_at_rational(&Rational::from(alpha as u64))
        .scale(&x0.pow(alpha as i32));
    let inv = (x0 - &Rational::one()).recip().expect("x0 != 1");
    let rhs_frobenius = (&upper - &lower).scale(&inv);

    // sum_k S2(a,k) k! x^k sum_l C(l+k,k) x^l, corrected below alpha.
    let stirling_form = |upper: usize| {
        let mut total = LambdaPoly::zero();
        for k in 1..=upper {
            let mut geo = Rational::zero();
            for l in 0..=upper - k {
                geo = &geo + &(&binomial(l + k, k) * &x0.pow(l as i32));
            }
            let w = &(&factorial(k) * &x0.pow(k as i32)) * &geo;
            total = &total + &tables.s2.entry(alpha, k).scale(&w);
        }
        total
    };
    let rhs_stirling = &stirling_form(m) - &stirling_form(alpha.saturating_sub(1));

    let passed = lhs == rhs_frobenius && lhs == rhs_stirling;
    let rhs_shown = if lhs == rhs_frobenius {
        &rhs_stirling
    } else {
        &rhs_frobenius
    };
    Ok(IdentityResult::new(
        "thm5",
        p,
        passed,
        lambda_poly_string(&lhs),
        lambda_poly_string(rhs_shown),
    ))
}

/// The Eulerian expansion of `sum_{k=1}^{m} (k)_{n} x^k`, checked as a
/// polynomial identity in symbolic `x` and lambda after clearing
/// denominators by `(1-x)^{n+1}`.
///
/// With `corrected = true` the `l = 0` term of the tail carries
/// `x^{m+1}`; with `corrected = false` every term carries `x^{m+2}`,
/// which is the statement as printed and is expected to fail.
pub fn verify_thm7(tables: &Tables, n: usize, m: usize, corrected: bool) -> IdentityResult {
    assert!(n >= 1 && m >= 1);
    let one_minus_x: XPoly =
        Poly::from_coeffs(alloc::vec![LambdaPoly::one(), LambdaPoly::from_int(-1)]);

    // Direct side: (1-x)^{n+1} sum_{k=1}^{m} (k)_{n} x^k.
    let mut weighted = alloc::vec![LambdaPoly::zero()];
    for k in 1..=m {
        weighted.push(falling(k as u64, n));
    }
    let lhs = &Poly::from_coeffs(weighted) * &one_minus_x.pow(n + 1);

    // x A_n(x) - sum_l C(n,l) (m+1)_{n-l} A_l(x) (1-x)^{n-l} x^{e(l)}.
    let mut rhs = &XPoly::var() * &tables.eulerian[n];
    for l in 0..=n {
        let exponent = if corrected && l == 0 { m + 1 } else { m + 2 };
        let weight = falling((m + 1) as u64, n - l).scale(&binomial(n, l));
        let term = &(&tables.eulerian[l] * &one_minus_x.pow(n - l))
            * &Poly::monomial(weight, exponent);
        rhs = &rhs - &term;
    }

    let mut result = IdentityResult::check_xpoly(
        if corrected { "thm7" } else { "thm7_verbatim" },
        params(&[("m", nat(m)), ("n", nat(n))]),
        &lhs,
        &rhs,
    );
    result.expected_fail = !corrected;
    result
}

/// The bracket recurrence: for each `0 <= j <= m`, the bracket
/// `[m+1, j+1]` against the binomial-weighted sum over brackets of rows
/// `m` and `m+1`.
///
/// With `corrected = true` the lambda-weighted tail carries
/// `<lambda>_{k-j} = (k-j)! lambda^{k-j}` (which is what dividing
/// `<x>_{k+1}` by `x` actually produces); with `corrected = false` it
/// carries `<1>_{k-j}` as printed, a form that coincides with the
/// corrected one only for `m <= 1` or at lambda = 1 and is expected to
/// fail beyond that.
pub fn verify_thm11(tables: &Tables, m: usize, corrected: bool) -> Vec<IdentityResult> {
    let lambda = LambdaPoly::lambda();
    (0..=m)
        .map(|j| {
            let lhs = tables.bracket(m + 1, j + 1);
            let mut rhs = LambdaPoly::zero();
            for k in j..=m {
                let head = &tables.bracket(m, k) * &rising_one(k - j);
                let tail_rise = if corrected {
                    Poly::monomial(factorial(k - j), k - j)
                } else {
                    rising_one(k - j)
                };
                let tail = &(&tables.bracket(m + 1, k + 2) * &tail_rise)
                    * &lambda.scale(&Rational::from((k + 1) as u64));
                rhs = &rhs + &(&head - &tail).scale(&binomial(k, j));
            }
            let mut result = IdentityResult::check_lambda(
                if corrected { "thm11" } else { "thm11_verbatim" },
                params(&[("j", nat(j)), ("m", nat(m))]),
                &lhs,
                &rhs,
            );
            result.expected_fail = !corrected;
            result
        })
        .collect()
}

fn param(parameters: &[(&str, usize)], name: &str) -> usize {
    parameters
        .iter()
        .find(|(k, _)| *k == name)
        .unwrap_or_else(|| panic!("identity needs parameter `{name}`"))
        .1
}

/// Check one of the named standalone identities:
///
/// - `hockey_stick`: `sum_{l=k}^{m} C(l,k) = C(m+1,k+1)` (params `k`, `m`)
/// - `eq24`: `C(n,m) = (1/m!) sum_k S1(m,k) (n)_{k}` (params `n`, `m`)
/// - `bernoulli_reflection`: `beta_n(1-x) = (-1)^n beta_{n,-lambda}(x)` (param `n`)
/// - `eq26_1`: the summation transform turning the shifted-recurrence
///   Stirling form into the hockey-stick form (params `alpha`, `m`)
/// - `eulerian_top_vanishes`: `<n n> = 0` for `n >= 1` (param `n`)
pub fn verify_misc(
    tables: &Tables,
    id: &str,
    parameters: &[(&str, usize)],
) -> Result<IdentityResult, Error> {
    match id {
        "hockey_stick" => {
            let k = param(parameters, "k");
            let m = param(parameters, "m");
            let mut lhs = Rational::zero();
            for l in k..=m {
                lhs = &lhs + &binomial(l, k);
            }
            Ok(IdentityResult::check_lambda(
                id,
                params(&[("k", nat(k)), ("m", nat(m))]),
                &Poly::constant(lhs),
                &Poly::constant(binomial(m + 1, k + 1)),
            ))
        }
        "eq24" => {
            let n = param(parameters, "n");
            let m = param(parameters, "m");
            let mut sum = LambdaPoly::zero();
            for k in 0..=m {
                sum = &sum + &(&tables.s1.entry(m, k) * &falling(n as u64, k));
            }
            let lhs = sum.scale(&factorial(m).recip().expect("factorial is nonzero"));
            Ok(IdentityResult::check_lambda(
                id,
                params(&[("m", nat(m)), ("n", nat(n))]),
                &lhs,
                &Poly::constant(binomial(n, m)),
            ))
        }
        "bernoulli_reflection" => {
            let n = param(parameters, "n");
            let beta = bernoulli_poly(n, &tables.bernoulli).expect("table sized for n");
            let one_minus_x =
                Poly::from_coeffs(alloc::vec![LambdaPoly::one(), LambdaPoly::from_int(-1)]);
            let lhs = beta.compose(&one_minus_x);
            let mut rhs = beta.negate_lambda();
            if n % 2 == 1 {
                rhs = -&rhs;
            }
            Ok(IdentityResult::check_xpoly(
                id,
                params(&[("n", nat(n))]),
                &lhs,
                &rhs,
            ))
        }
        "eq26_1" => {
            let alpha = param(parameters, "alpha");
            let m = param(parameters, "m");
            let mut lhs = LambdaPoly::zero();
            for j in 1..=m {
                let bracket = &tables.s2.entry(alpha + 1, j)
                    + &(&tables.s2.entry(alpha, j)
                        * &Poly::monomial(Rational::from(alpha as u64), 1));
                lhs = &lhs + &bracket.scale(&(&binomial(m, j) * &factorial(j - 1)));
            }
            let mut rhs = LambdaPoly::zero();
            for j in 1..=m {
                let w = &binomial(m + 1, j + 1) * &factorial(j);
                rhs = &rhs + &tables.s2.entry(alpha, j).scale(&w);
            }
            Ok(IdentityResult::check_lambda(
                id,
                params(&[("alpha", nat(alpha)), ("m", nat(m))]),
                &lhs,
                &rhs,
            ))
        }
        "eulerian_top_vanishes" => {
            let n = param(parameters, "n");
            let top = eulerian_number(n, n).expect("m = n is in range");
            Ok(IdentityResult::check_lambda(
                id,
                params(&[("n", nat(n))]),
                &top,
                &LambdaPoly::zero(),
            ))
        }
        other => Err(Error::UnknownIdentity(other.to_string())),
    }
}

/// Anchors at which the exponential generating function is always
/// checked, on top of the configured samples.
fn egf_anchors() -> [Rational; 3] {
    [
        Rational::from(2i64),
        Rational::from(-1i64),
        Rational::new(1, 2),
    ]
}

/// Run the whole catalogue over every parameter combination within the
/// config bounds, in a fixed canonical order. The verbatim form of the
/// Eulerian finite-sum theorem is included and marked `expected_fail`.
pub fn run_suite(config: &SuiteConfig) -> Vec<IdentityResult> {
    let tables = Tables::build(config);
    run_suite_with_tables(config, &tables)
}

/// Same as [`run_suite`] but over caller-supplied tables, which is what
/// mutation-sensitivity tests use to inject a perturbed triangle.
pub fn run_suite_with_tables(config: &SuiteConfig, tables: &Tables) -> Vec<IdentityResult> {
    let mut out = Vec::new();
    let mut rng = SampleRng::new(config.seed);

    for alpha in 1..=config.alpha_max {
        for m in alpha..=config.m_max {
            for sample in 0..config.sample_count {
                let a: Vec<Rational> = (0..m).map(|_| rng.next_rational()).collect();
                out.push(
                    verify_thm1(tables, alpha, m, &a, sample).expect("sequence has length m"),
                );
            }
        }
    }

    for alpha in 1..=config.alpha_max {
        for m in alpha..=config.m_max {
            out.extend(verify_sum_powers(tables, alpha, m));
        }
    }

    for alpha in 1..=config.alpha_max {
        for m in alpha..=config.m_max {
            for x0 in &config.x_samples {
                out.push(verify_thm5(tables, alpha, m, x0).expect("samples avoid 0 and 1"));
            }
        }
    }

    for n in 1..=config.n_max {
        for m in 1..=config.m_max {
            out.push(verify_thm7(tables, n, m, true));
            out.push(verify_thm7(tables, n, m, false));
        }
    }

    for m in 0..=config.m_max {
        out.extend(verify_thm11(tables, m, true));
        out.extend(verify_thm11(tables, m, false));
    }

    for k in 0..=config.alpha_max {
        for m in k..=config.m_max {
            out.push(
                verify_misc(tables, "hockey_stick", &[("k", k), ("m", m)])
                    .expect("known identity"),
            );
        }
    }

    for n in 0..=config.m_max {
        for m in 0..=n {
            out.push(verify_misc(tables, "eq24", &[("n", n), ("m", m)]).expect("known identity"));
        }
    }

    for alpha in 1..=config.alpha_max {
        for m in 1..=config.m_max {
            out.push(
                verify_misc(tables, "eq26_1", &[("alpha", alpha), ("m", m)])
                    .expect("known identity"),
            );
        }
    }

    for n in 0..=config.n_max {
        out.push(
            verify_misc(tables, "bernoulli_reflection", &[("n", n)]).expect("known identity"),
        );
    }

    for n in 1..=config.n_max {
        out.push(
            verify_misc(tables, "eulerian_top_vanishes", &[("n", n)]).expect("known identity"),
        );
    }

    // Generating-function cross-checks of the Eulerian module.
    for n in 0..=config.n_max {
        let order = n + 12;
        out.push(IdentityResult::check_xpoly(
            "thm6_gf",
            params(&[("n", nat(n)), ("order", nat(order))]),
            &gf_reconstruction(n, order),
            &tables.eulerian[n],
        ));
    }

    for n in 1..=config.n_max {
        out.push(IdentityResult::check_xpoly(
            "thm10_recurrence",
            params(&[("n", nat(n))]),
            eulerian_poly_recurrence(n).poly(),
            &tables.eulerian[n],
        ));
    }

    for n in 1..=config.n_max {
        let order = 2 * n + 2;
        let reconstructed = crate::eulerian::carlitz_poly(n, order)
            .expect("order 2n+2 reconstructs a degree-n polynomial");
        let shifted = &XPoly::var() * &tables.eulerian[n];
        out.push(IdentityResult::check_xpoly(
            "carlitz_shift",
            params(&[("n", nat(n)), ("order", nat(order))]),
            &reconstructed,
            &shifted,
        ));
    }

    let egf_order = config.n_max + 2;
    for t0 in egf_anchors().iter().chain(config.t_samples.iter()) {
        let lhs = eulerian_egf_series(egf_order, t0).expect("t0 != 1");
        let rhs = Series::from_fn(egf_order, |n| {
            tables.eulerian[n]
                .eval_at_rational(t0)
                .scale(&factorial(n).recip().expect("factorial is nonzero"))
        });
        out.push(IdentityResult::check_series(
            "eulerian_egf",
            params(&[("order", nat(egf_order)), ("t0", t0.to_string())]),
            &lhs,
            &rhs,
        ));
    }

    {
        let order = config.m_max;
        let egf = egf_series(tables.bernoulli.numbers(), order);
        let e_minus_one = degenerate_exp(&Rational::one(), order).sub(&Series::one(order));
        let product = e_minus_one.mul(&egf);
        let t_series = Series::from_fn(order, |n| {
            if n == 1 {
                LambdaPoly::one()
            } else {
                LambdaPoly::zero()
            }
        });
        out.push(IdentityResult::check_series(
            "bernoulli_gf_roundtrip",
            params(&[("order", nat(order))]),
            &product,
            &t_series,
        ));
    }

    for u in &config.x_samples {
        let order = config.m_max;
        let table = frobenius_numbers(order, u).expect("samples avoid 1");
        let numbers: Vec<LambdaPoly> = (0..=order).map(|n| table.number(n).clone()).collect();
        let egf = egf_series(&numbers, order);
        let denom = degenerate_exp(&Rational::one(), order)
            .sub(&Series::new(order, alloc::vec![Poly::constant(u.clone())]));
        let product = denom.mul(&egf);
        let expect = Series::new(
            order,
            alloc::vec![Poly::constant(&Rational::one() - u)],
        );
        out.push(IdentityResult::check_series(
            "frobenius_gf_roundtrip",
            params(&[("order", nat(order)), ("u", u.to_string())]),
            &product,
            &expect,
        ));
    }

    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lp(coeffs: &[i64]) -> LambdaPoly {
        Poly::from_coeffs(coeffs.iter().map(|&c| Rational::from(c)).collect())
    }

    fn small_tables() -> Tables {
        Tables::build(&SuiteConfig::with_bounds(6, 10, 8, 1, 1))
    }

    #[test]
    fn thm1_desk_examples() {
        let t = small_tables();
        let ones = alloc::vec![Rational::one(); 3];
        let r = verify_thm1(&t, 1, 3, &ones, 0).unwrap();
        assert!(r.passed, "{:?}", r);

        let a = alloc::vec![Rational::zero(), Rational::one(), Rational::one()];
        let r = verify_thm1(&t, 2, 3, &a, 0).unwrap();
        assert!(r.passed);
        // Both sides should equal 13 - 5L; recompute the oracle here.
        let lhs = &falling(2, 2).scale(&a[1]) + &falling(3, 2).scale(&a[2]);
        assert_eq!(lhs, lp(&[13, -5]));

        assert_eq!(
            verify_thm1(&t, 2, 3, &[Rational::one()], 0),
            Err(Error::BadLength { expected: 3, got: 1 })
        );
    }

    #[test]
    fn thm1_random_sequences() {
        let t = small_tables();
        let mut rng = SampleRng::new(7);
        for _ in 0..5 {
            let a: Vec<Rational> = (0..6).map(|_| rng.next_rational()).collect();
            for alpha in 1..=3 {
                let r = verify_thm1(&t, alpha, 6, &a, 0).unwrap();
                assert!(r.passed, "alpha={alpha}: {:?}", r);
            }
        }
    }

    #[test]
    fn sum_powers_desk_examples() {
        let t = small_tables();
        let results = verify_sum_powers(&t, 2, 3);
        assert_eq!(results.len(), 4);
        for r in &results {
            assert!(r.passed, "{}: {:?}", r.identity_id, r);
        }
        // alpha = m = 1: single term, empty corrections.
        for r in verify_sum_powers(&t, 1, 1) {
            assert!(r.passed, "{}: {:?}", r.identity_id, r);
        }
    }

    #[test]
    fn thm5_desk_examples() {
        let t = small_tables();
        let r = verify_thm5(&t, 1, 2, &Rational::from(2i64)).unwrap();
        assert!(r.passed, "{:?}", r);
        // Both sides are the lambda-free value 10.
        let lhs = &falling(1, 1).scale(&Rational::from(2i64))
            + &falling(2, 1).scale(&Rational::from(4i64));
        assert_eq!(lhs, lp(&[10]));

        let r = verify_thm5(&t, 2, 2, &Rational::new(1, 3)).unwrap();
        assert!(r.passed, "{:?}", r);

        assert!(matches!(
            verify_thm5(&t, 1, 1, &Rational::one()),
            Err(Error::DegenerateParameter(_))
        ));
        assert!(matches!(
            verify_thm5(&t, 1, 1, &Rational::zero()),
            Err(Error::DegenerateParameter(_))
        ));
    }

    #[test]
    fn thm7_corrected_passes_and_verbatim_fails() {
        let t = small_tables();
        let good = verify_thm7(&t, 1, 2, true);
        assert!(good.passed, "{:?}", good);
        assert!(!good.expected_fail);

        let bad = verify_thm7(&t, 1, 2, false);
        assert!(!bad.passed);
        assert!(bad.expected_fail);
        // x - 3x^3 + 2x^4 versus x - 4x^4 + 3x^5.
        let expect_lhs: XPoly = Poly::from_coeffs(alloc::vec![
            LambdaPoly::zero(),
            LambdaPoly::one(),
            LambdaPoly::zero(),
            LambdaPoly::from_int(-3),
            LambdaPoly::from_int(2),
        ]);
        let expect_rhs: XPoly = Poly::from_coeffs(alloc::vec![
            LambdaPoly::zero(),
            LambdaPoly::one(),
            LambdaPoly::zero(),
            LambdaPoly::zero(),
            LambdaPoly::from_int(-4),
            LambdaPoly::from_int(3),
        ]);
        assert_eq!(bad.lhs.as_deref(), Some(xpoly_string(&expect_lhs).as_str()));
        assert_eq!(bad.rhs.as_deref(), Some(xpoly_string(&expect_rhs).as_str()));

        let good = verify_thm7(&t, 2, 2, true);
        assert!(good.passed, "{:?}", good);
    }

    #[test]
    fn thm11_desk_examples() {
        let t = small_tables();
        let row1 = verify_thm11(&t, 1, true);
        assert_eq!(row1.len(), 2);
        assert!(row1.iter().all(|r| r.passed));
        // [2 1] = 1 - L.
        assert_eq!(t.bracket(2, 1), lp(&[1, -1]));

        let row0 = verify_thm11(&t, 0, true);
        assert!(row0[0].passed);

        for r in verify_thm11(&t, 5, true) {
            assert!(r.passed, "{:?}", r);
        }
    }

    #[test]
    fn thm11_verbatim_form() {
        let t = small_tables();
        // For m <= 1 only k = j terms carry the lambda tail, so the
        // printed and corrected forms coincide and both hold.
        for m in 0..=1 {
            for r in verify_thm11(&t, m, false) {
                assert!(r.passed, "{:?}", r);
                assert!(r.expected_fail);
            }
        }
        // From m = 2 on the printed form fails: at (m,j) = (2,0) the
        // difference of the two sides is 2L(1 - L).
        let row2 = verify_thm11(&t, 2, false);
        let r = &row2[0];
        assert!(!r.passed);
        assert!(r.expected_fail);
        assert_eq!(r.lhs.as_deref(), Some("2 + -3*L + 1*L^2"));
        assert_eq!(r.rhs.as_deref(), Some("2 + -5*L + 3*L^2"));
    }

    #[test]
    fn misc_desk_examples() {
        let t = small_tables();
        let r = verify_misc(&t, "hockey_stick", &[("k", 2), ("m", 5)]).unwrap();
        assert!(r.passed);

        let r = verify_misc(&t, "bernoulli_reflection", &[("n", 2)]).unwrap();
        assert!(r.passed);

        let r = verify_misc(&t, "eulerian_top_vanishes", &[("n", 4)]).unwrap();
        assert!(r.passed);

        let r = verify_misc(&t, "eq24", &[("n", 7), ("m", 3)]).unwrap();
        assert!(r.passed);

        let r = verify_misc(&t, "eq26_1", &[("alpha", 2), ("m", 3)]).unwrap();
        assert!(r.passed);

        assert_eq!(
            verify_misc(&t, "bogus", &[]),
            Err(Error::UnknownIdentity("bogus".to_string()))
        );
    }

    #[test]
    fn sampler_is_deterministic_and_well_ranged() {
        let mut a = SampleRng::new(42);
        let mut b = SampleRng::new(42);
        for _ in 0..100 {
            let x = a.next_rational();
            assert_eq!(x, b.next_rational());
            assert!(!x.is_zero() && !x.is_one());
            assert!(x.numerator().magnitude() <= &10u32.into());
            assert!(x.denominator().magnitude() <= &10u32.into());
        }
    }

    #[test]
    fn suite_runs_clean_on_small_bounds() {
        let config = SuiteConfig::with_bounds(3, 5, 4, 2, 42);
        let results = run_suite(&config);
        assert!(!results.is_empty());
        for r in &results {
            assert!(!r.is_unexpected_failure(), "{} {:?}", r.identity_id, r);
        }
        // The verbatim theorem entries are present and failing.
        assert!(results
            .iter()
            .any(|r| r.identity_id == "thm7_verbatim" && !r.passed && r.expected_fail));
        assert!(results
            .iter()
            .any(|r| r.identity_id == "thm11_verbatim" && !r.passed && r.expected_fail));
        // Results carry lhs/rhs exactly when failed.
        for r in &results {
            assert_eq!(r.passed, r.lhs.is_none());
            assert_eq!(r.passed, r.rhs.is_none());
        }
    }

    #[test]
    fn suite_is_a_pure_function_of_config() {
        let a = run_suite(&SuiteConfig::with_bounds(2, 4, 3, 2, 7));
        let b = run_suite(&SuiteConfig::with_bounds(2, 4, 3, 2, 7));
        assert_eq!(a, b);
    }

    #[test]
    fn perturbed_table_is_detected() {
        let config = SuiteConfig::with_bounds(4, 6, 4, 1, 42);
        let mut tables = Tables::build(&config);
        let bumped = &tables.s2.entry(3, 2) + &LambdaPoly::one();
        tables.s2 = tables.s2.with_entry(3, 2, bumped);
        let results = run_suite_with_tables(&config, &tables);
        assert!(
            results.iter().any(|r| r.is_unexpected_failure()),
            "perturbation went unnoticed"
        );
    }
}
