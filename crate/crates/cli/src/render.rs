//! Stable JSON rendering.
//!
//! Arbitrary-precision values are emitted as decimal strings so output never
//! depends on platform integer width or floating-point formatting. Identical
//! invocations produce byte-identical output: nondeterministic data (sweep
//! wall time) stays out of the JSON and goes to stderr instead.

use catri_core::exactmath::{ExactInt, Poly, RationalGF};
use catri_core::identities::{Identity, SweepReport};
use catri_core::oeisdata::MatchReport;
use serde_json::{json, Value};

fn params_object(params: &[(&str, i64)]) -> Value {
    let map: serde_json::Map<String, Value> = params
        .iter()
        .map(|(k, v)| (k.to_string(), json!(v)))
        .collect();
    Value::Object(map)
}

fn rows_value(rows: &[Vec<ExactInt>]) -> Value {
    json!(rows
        .iter()
        .map(|row| row.iter().map(ExactInt::to_string).collect::<Vec<_>>())
        .collect::<Vec<_>>())
}

pub fn triangle_json(kind: &str, params: &[(&str, i64)], rows: &[Vec<ExactInt>]) -> String {
    json!({
        "kind": kind,
        "params": params_object(params),
        "rows": rows_value(rows),
    })
    .to_string()
}

pub fn poly_json(
    family: &str,
    params: &[(&str, i64)],
    variable: &str,
    coeffs: &[String],
    text: Option<&str>,
) -> String {
    let mut value = json!({
        "family": family,
        "params": params_object(params),
        "variable": variable,
        "coefficients": coeffs,
    });
    if let Some(text) = text {
        value["text"] = json!(text);
    }
    value.to_string()
}

pub fn series_json(
    gf: &str,
    t: Option<u32>,
    k: Option<i64>,
    order: usize,
    built: &RationalGF,
    coeffs: &[Poly],
) -> String {
    let mut params = Vec::new();
    if let Some(t) = t {
        params.push(("t", t as i64));
    }
    if let Some(k) = k {
        params.push(("k", k));
    }
    json!({
        "gf": gf,
        "params": params_object(&params),
        "order": order,
        "numerator": built.numerator().render("x", "q"),
        "denominator": built.denominator().render("x", "q"),
        "coefficients": coeffs.iter().map(Poly::coeff_strings).collect::<Vec<_>>(),
    })
    .to_string()
}

pub fn identity_entry_json(rec: &Identity) -> String {
    json!({
        "id": rec.id,
        "params": rec.params,
        "domain": rec.domain,
        "statement": rec.statement,
        "default_box": rec
            .default_box
            .iter()
            .zip(rec.params)
            .map(|(&(lo, hi), &name)| json!({"name": name, "lo": lo, "hi": hi}))
            .collect::<Vec<_>>(),
    })
    .to_string()
}

pub fn sweep_json(report: &SweepReport) -> String {
    // Everything from the library report except wall time.
    json!({
        "id": report.id,
        "box": report
            .param_box
            .iter()
            .map(|r| json!({"name": r.name, "lo": r.lo, "hi": r.hi}))
            .collect::<Vec<_>>(),
        "checked": report.checked,
        "skipped": report.skipped,
        "failures": report
            .failures
            .iter()
            .map(|f| json!({"params": f.params, "lhs": f.lhs, "rhs": f.rhs}))
            .collect::<Vec<_>>(),
        "exploratory": report.exploratory,
        "verified": report.verified(),
    })
    .to_string()
}

pub fn match_json(report: &MatchReport) -> String {
    json!({
        "sequence": report.sequence,
        "generator": report.generator,
        "shift": report.shift,
        "compared": report.compared,
        "mismatch": report.mismatch.as_ref().map(|m| json!({
            "index": m.index,
            "expected": m.expected,
            "got": m.got,
        })),
        "clean": report.clean(),
    })
    .to_string()
}

pub fn conjecture_json(rows: &[(i64, String, String, bool)], verified: bool) -> String {
    json!({
        "rows": rows
            .iter()
            .map(|(n, value, sigma, ok)| json!({
                "n": n,
                "candidate": value,
                "reference": sigma,
                "match": ok,
            }))
            .collect::<Vec<_>>(),
        "verified": verified,
    })
    .to_string()
}
