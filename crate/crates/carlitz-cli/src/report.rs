//! JSONL encoding of suite results and the suite-name filters.
//!
//! One JSON object per line, keys in a fixed order:
//! `identity_id`, `parameters`, `passed`, then `expected_fail` only when
//! true and `lhs`/`rhs` only on failure. Output is byte-identical across
//! runs for the same configuration.

use std::collections::BTreeMap;

use carlitz::suite::IdentityResult;
use serde::Serialize;

#[derive(Serialize)]
struct ReportLine<'a> {
    identity_id: &'a str,
    parameters: &'a BTreeMap<String, String>,
    passed: bool,
    #[serde(skip_serializing_if = "is_false")]
    expected_fail: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    lhs: Option<&'a str>,
    #[serde(skip_serializing_if = "Option::is_none")]
    rhs: Option<&'a str>,
}

fn is_false(b: &bool) -> bool {
    !*b
}

pub fn to_json_line(result: &IdentityResult) -> String {
    let line = ReportLine {
        identity_id: &result.identity_id,
        parameters: &result.parameters,
        passed: result.passed,
        expected_fail: result.expected_fail,
        lhs: result.lhs.as_deref(),
        rhs: result.rhs.as_deref(),
    };
    serde_json::to_string(&line).expect("report lines are plain data")
}

/// The identity ids covered by a named sub-suite; `None` means all.
pub fn suite_ids(suite: &str) -> Option<&'static [&'static str]> {
    match suite {
        "all" => Some(&[]),
        "thm1" => Some(&["thm1"]),
        "thm2-4" => Some(&["thm2", "thm3", "thm4", "eq23"]),
        "thm5" => Some(&["thm5"]),
        "thm7" => Some(&["thm7", "thm7_verbatim"]),
        "thm11" => Some(&["thm11", "thm11_verbatim"]),
        "misc" => Some(&[
            "hockey_stick",
            "eq24",
            "eq26_1",
            "bernoulli_reflection",
            "eulerian_top_vanishes",
        ]),
        "gf" => Some(&[
            "thm6_gf",
            "thm10_recurrence",
            "carlitz_shift",
            "eulerian_egf",
            "bernoulli_gf_roundtrip",
            "frobenius_gf_roundtrip",
        ]),
        _ => None,
    }
}

/// Keep the results belonging to the named sub-suite, preserving order.
pub fn filter_results(results: Vec<IdentityResult>, suite: &str) -> Option<Vec<IdentityResult>> {
    let ids = suite_ids(suite)?;
    if ids.is_empty() {
        return Some(results);
    }
    Some(
        results
            .into_iter()
            .filter(|r| ids.contains(&r.identity_id.as_str()))
            .collect(),
    )
}
