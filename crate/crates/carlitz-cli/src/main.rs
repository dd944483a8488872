//! Command-line front door: emit triangles and polynomial tables,
//! evaluate the families at parameters, and run the verification suite
//! with machine-readable reports.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage error.

use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use carlitz::display::{lambda_poly_string, xpoly_string};
use carlitz::eulerian::{carlitz_poly, eulerian_poly_explicit, eulerian_triangle};
use carlitz::poly::{Poly, XPoly};
use carlitz::rational::Rational;
use carlitz::stirling::{bracket_triangle, s1_triangle, s2_triangle, Triangle};
use carlitz::suite::{run_suite, SuiteConfig};
use carlitz_cli::{report, wire};

const MAX_ROWS: usize = 64;

#[derive(Parser)]
#[command(
    name = "carlitz",
    version,
    about = "Exact tables, evaluation and identity verification for degenerate special numbers"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TableFamily {
    /// Degenerate Stirling numbers of the first kind
    S1,
    /// Degenerate Stirling numbers of the second kind
    S2,
    /// Unsigned degenerate Stirling numbers of the first kind
    Bracket,
    /// Degenerate Eulerian numbers
    Eulerian,
}

impl TableFamily {
    fn name(self) -> &'static str {
        match self {
            TableFamily::S1 => "s1",
            TableFamily::S2 => "s2",
            TableFamily::Bracket => "bracket",
            TableFamily::Eulerian => "eulerian",
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum EvalFamily {
    /// Degenerate Bernoulli polynomial in x
    Bernoulli,
    /// Degenerate Frobenius-Euler polynomial in x (needs --u)
    Frobenius,
    /// Degenerate Eulerian polynomial
    #[value(name = "eulerian-poly")]
    EulerianPoly,
    /// Carlitz's variant of the degenerate Eulerian polynomial
    Carlitz,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Print a triangle of degenerate numbers, rows 0..=ROWS.
    Table {
        #[arg(long, value_enum)]
        family: TableFamily,
        #[arg(long)]
        rows: usize,
        /// Evaluate entries at this lambda instead of printing polynomials.
        #[arg(long, value_parser = wire::parse_rational)]
        lambda: Option<Rational>,
        #[arg(long, value_enum, default_value = "json")]
        format: OutputFormat,
    },
    /// Print one polynomial of a family, optionally evaluated.
    Eval {
        #[arg(long, value_enum)]
        family: EvalFamily,
        #[arg(long)]
        n: usize,
        /// Frobenius-Euler parameter, required for that family; must not be 1.
        #[arg(long, value_parser = wire::parse_rational)]
        u: Option<Rational>,
        /// Evaluate the outer variable at this rational.
        #[arg(long, value_parser = wire::parse_rational)]
        x: Option<Rational>,
        /// Substitute this rational for lambda.
        #[arg(long, value_parser = wire::parse_rational)]
        lambda: Option<Rational>,
    },
    /// Run the identity verification suite; one JSON object per check.
    Verify {
        /// all, thm1, thm2-4, thm5, thm7, thm11, misc, or gf.
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[arg(long, default_value_t = 6)]
        alpha_max: usize,
        #[arg(long, default_value_t = 10)]
        m_max: usize,
        #[arg(long, default_value_t = 8)]
        n_max: usize,
        /// Number of seeded rational samples per sampled parameter.
        #[arg(long, default_value_t = 3)]
        samples: usize,
        /// Write the JSONL report here instead of stdout.
        #[arg(long)]
        report: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = match cli.command {
        Command::Table {
            family,
            rows,
            lambda,
            format,
        } => cmd_table(family, rows, lambda, format),
        Command::Eval {
            family,
            n,
            u,
            x,
            lambda,
        } => cmd_eval(family, n, u, x, lambda),
        Command::Verify {
            suite,
            seed,
            alpha_max,
            m_max,
            n_max,
            samples,
            report,
        } => cmd_verify(&suite, seed, alpha_max, m_max, n_max, samples, report),
    };
    ExitCode::from(code)
}

fn usage_error(message: &str) -> u8 {
    eprintln!("error: {message}");
    2
}

fn build_triangle(family: TableFamily, rows: usize) -> Triangle {
    match family {
        TableFamily::S1 => s1_triangle(rows),
        TableFamily::S2 => s2_triangle(rows),
        TableFamily::Bracket => bracket_triangle(rows),
        TableFamily::Eulerian => eulerian_triangle(rows),
    }
}

fn cmd_table(
    family: TableFamily,
    rows: usize,
    lambda: Option<Rational>,
    format: OutputFormat,
) -> u8 {
    if rows > MAX_ROWS {
        return usage_error(&format!("rows must be at most {MAX_ROWS}, got {rows}"));
    }
    let triangle = build_triangle(family, rows);
    let cells: Vec<Vec<String>> = (0..=rows)
        .map(|n| {
            triangle
                .row(n)
                .iter()
                .map(|entry| match &lambda {
                    Some(l0) => entry.eval(l0).to_string(),
                    None => lambda_poly_string(entry),
                })
                .collect()
        })
        .collect();
    match format {
        OutputFormat::Json => {
            let value = serde_json::json!({ "family": family.name(), "rows": cells });
            println!("{value}");
        }
        OutputFormat::Csv => {
            for row in cells {
                let quoted: Vec<String> =
                    row.iter().map(|c| format!("\"{}\"", c.replace('"', "\"\""))).collect();
                println!("{}", quoted.join(","));
            }
        }
    }
    0
}

fn cmd_eval(
    family: EvalFamily,
    n: usize,
    u: Option<Rational>,
    x: Option<Rational>,
    lambda: Option<Rational>,
) -> u8 {
    let poly: XPoly = match family {
        EvalFamily::Bernoulli => {
            let table = carlitz::appell::bernoulli_numbers(n);
            carlitz::appell::bernoulli_poly(n, &table).expect("table sized for n")
        }
        EvalFamily::Frobenius => {
            let Some(u) = u else {
                return usage_error("--u is required for the frobenius family");
            };
            let table = match carlitz::appell::frobenius_numbers(n, &u) {
                Ok(t) => t,
                Err(e) => return usage_error(&e.to_string()),
            };
            carlitz::appell::frobenius_poly(n, &table).expect("table sized for n")
        }
        EvalFamily::EulerianPoly => eulerian_poly_explicit(n).into_poly(),
        EvalFamily::Carlitz => {
            carlitz_poly(n, 2 * n + 2).expect("order 2n+2 always reconstructs")
        }
    };
    let line = match (&x, &lambda) {
        (Some(x0), Some(l0)) => poly.eval_at_rational(x0).eval(l0).to_string(),
        (Some(x0), None) => lambda_poly_string(&poly.eval_at_rational(x0)),
        (None, Some(l0)) => {
            let constants = poly.eval_lambda(l0).map(|c| Poly::constant(c.clone()));
            xpoly_string(&constants)
        }
        (None, None) => xpoly_string(&poly),
    };
    println!("{line}");
    0
}

fn cmd_verify(
    suite: &str,
    seed: u64,
    alpha_max: usize,
    m_max: usize,
    n_max: usize,
    samples: usize,
    report_path: Option<PathBuf>,
) -> u8 {
    if report::suite_ids(suite).is_none() {
        return usage_error(&format!(
            "unknown suite `{suite}` (expected all, thm1, thm2-4, thm5, thm7, thm11, misc, gf)"
        ));
    }
    let config = SuiteConfig::with_bounds(alpha_max, m_max, n_max, samples, seed);
    let results = run_suite(&config);
    let results = report::filter_results(results, suite).expect("suite validated above");

    let mut sink: BufWriter<Box<dyn Write>> = match &report_path {
        Some(path) => match File::create(path) {
            Ok(f) => BufWriter::new(Box::new(f)),
            Err(e) => return usage_error(&format!("cannot write report {}: {e}", path.display())),
        },
        None => BufWriter::new(Box::new(std::io::stdout())),
    };
    for result in &results {
        if writeln!(sink, "{}", report::to_json_line(result)).is_err() {
            return usage_error("failed to write report");
        }
    }
    if sink.flush().is_err() {
        return usage_error("failed to write report");
    }

    let unexpected = results.iter().filter(|r| r.is_unexpected_failure()).count();
    let expected = results.iter().filter(|r| !r.passed && r.expected_fail).count();
    eprintln!(
        "verify: {} checks, {} passed, {} expected failures, {} unexpected failures",
        results.len(),
        results.iter().filter(|r| r.passed).count(),
        expected,
        unexpected
    );
    if unexpected == 0 {
        0
    } else {
        1
    }
}
