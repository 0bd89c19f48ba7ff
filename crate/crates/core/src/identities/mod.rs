//! Registry of machine-checkable identities and the exhaustive sweep engine.
//!
//! Each [`Identity`] is a parameterized predicate: a domain over integer
//! tuples plus two exact evaluators. `check` evaluates one tuple and returns
//! both sides, so failures stay diagnosable; `sweep` runs every in-domain
//! tuple of a finite box in a deterministic order and reports every failure.
//!
//! Identities over polynomials compare full coefficient sequences, never
//! sampled evaluations. A handful of records also carry a wider
//! *exploratory* domain: sweeping with `unsafe_domain` extends the check to
//! tuples the stated quantifiers exclude, and the resulting report is marked
//! exploratory.

mod catalog;

use std::collections::BTreeMap;
use std::fmt;
use std::sync::OnceLock;
use std::time::Instant;

use serde::Serialize;
use thiserror::Error;

use crate::exactmath::{ExactInt, Poly};

/// An exactly-computed side of an identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Value {
    Int(ExactInt),
    Poly(Poly),
    Ints(Vec<ExactInt>),
    /// Several sub-equalities bundled into one record; compared pointwise.
    Tuple(Vec<Value>),
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Int(v) => write!(f, "{v}"),
            Value::Poly(p) => write!(f, "{}", p.render("q")),
            Value::Ints(vs) => {
                write!(f, "[")?;
                for (i, v) in vs.iter().enumerate() {
                    if i > 0 {
                        write!(f, ", ")?;
                    }
                    write!(f, "{v}")?;
                }
                write!(f, "]")
            }
            Value::Tuple(vs) => {
                write!(f, "(")?;
                for (i, v) in vs.iter().enumerate() {
                    if i > 0 {
                        write!(f, "; ")?;
                    }
                    write!(f, "{v}")?;
                }
                write!(f, ")")
            }
        }
    }
}

/// A registered identity.
pub struct Identity {
    /// Stable short name, e.g. `I-main1`.
    pub id: &'static str,
    /// The claim, as a formula.
    pub statement: &'static str,
    /// Parameter names, in sweep order.
    pub params: &'static [&'static str],
    /// Human-readable domain.
    pub domain: &'static str,
    /// The stated quantifier domain.
    pub in_domain: fn(&[i64]) -> bool,
    /// Wider domain for exploratory sweeps (defaults to `in_domain`).
    pub exploratory_domain: Option<fn(&[i64]) -> bool>,
    /// Exact evaluation of both sides.
    pub eval: fn(&[i64]) -> (Value, Value),
    /// Inclusive per-parameter ranges used by `identity all` and the
    /// acceptance suite.
    pub default_box: &'static [(i64, i64)],
    /// A known-good tuple for smoke tests.
    pub example: &'static [i64],
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum IdentityError {
    #[error("unknown identity {0:?}")]
    Unknown(String),
    #[error("identity {id} takes {expected} parameters, got {got}")]
    Arity {
        id: &'static str,
        expected: usize,
        got: usize,
    },
    #[error("parameters {params:?} are outside the domain of {id} ({domain})")]
    OutOfDomain {
        id: &'static str,
        domain: &'static str,
        params: Vec<i64>,
    },
}

/// Result of checking one tuple.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckResult {
    pub holds: bool,
    pub lhs: Value,
    pub rhs: Value,
}

/// The full identity catalog, in stable order.
pub fn catalog() -> &'static [Identity] {
    static CATALOG: OnceLock<Vec<Identity>> = OnceLock::new();
    CATALOG.get_or_init(catalog::build)
}

/// Look up a record by id.
pub fn find(id: &str) -> Option<&'static Identity> {
    catalog().iter().find(|r| r.id == id)
}

/// Evaluate one parameter tuple of one identity.
pub fn check(id: &str, params: &[i64]) -> Result<CheckResult, IdentityError> {
    let rec = find(id).ok_or_else(|| IdentityError::Unknown(id.to_string()))?;
    if params.len() != rec.params.len() {
        return Err(IdentityError::Arity {
            id: rec.id,
            expected: rec.params.len(),
            got: params.len(),
        });
    }
    if !(rec.in_domain)(params) {
        return Err(IdentityError::OutOfDomain {
            id: rec.id,
            domain: rec.domain,
            params: params.to_vec(),
        });
    }
    Ok(run(rec, params))
}

fn run(rec: &Identity, params: &[i64]) -> CheckResult {
    let (lhs, rhs) = (rec.eval)(params);
    CheckResult {
        holds: lhs == rhs,
        lhs,
        rhs,
    }
}

/// One failing tuple inside a sweep report.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub params: BTreeMap<&'static str, i64>,
    pub lhs: String,
    pub rhs: String,
}

/// Inclusive range of one sweep parameter.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ParamRange {
    pub name: &'static str,
    pub lo: i64,
    pub hi: i64,
}

/// Outcome of exhaustively checking a parameter box.
#[derive(Clone, Debug, Serialize)]
pub struct SweepReport {
    pub id: String,
    #[serde(rename = "box")]
    pub param_box: Vec<ParamRange>,
    /// Tuples evaluated.
    pub checked: u64,
    /// Tuples skipped as out of domain.
    pub skipped: u64,
    pub failures: Vec<Failure>,
    /// True when the sweep used the exploratory domain extension.
    pub exploratory: bool,
    /// Wall time of the sweep.
    pub millis: u64,
}

impl SweepReport {
    pub fn verified(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Exhaustively check every in-domain tuple of the box (inclusive ranges,
/// one per parameter, in declared parameter order). Iteration order is the
/// odometer order of the box; out-of-domain tuples are counted as skipped.
pub fn sweep(
    id: &str,
    ranges: &[(i64, i64)],
    unsafe_domain: bool,
) -> Result<SweepReport, IdentityError> {
    let rec = find(id).ok_or_else(|| IdentityError::Unknown(id.to_string()))?;
    if ranges.len() != rec.params.len() {
        return Err(IdentityError::Arity {
            id: rec.id,
            expected: rec.params.len(),
            got: ranges.len(),
        });
    }
    let started = Instant::now();
    let admit = if unsafe_domain {
        rec.exploratory_domain.unwrap_or(rec.in_domain)
    } else {
        rec.in_domain
    };
    let mut checked = 0u64;
    let mut skipped = 0u64;
    let mut failures = Vec::new();
    let mut tuple: Vec<i64> = ranges.iter().map(|&(lo, _)| lo).collect();
    let empty = ranges.iter().any(|&(lo, hi)| lo > hi);
    if !empty {
        'sweep: loop {
            if admit(&tuple) {
                checked += 1;
                let result = run(rec, &tuple);
                if !result.holds {
                    failures.push(Failure {
                        params: rec
                            .params
                            .iter()
                            .copied()
                            .zip(tuple.iter().copied())
                            .collect(),
                        lhs: result.lhs.to_string(),
                        rhs: result.rhs.to_string(),
                    });
                }
            } else {
                skipped += 1;
            }
            // Odometer increment, last parameter fastest.
            for i in (0..tuple.len()).rev() {
                if tuple[i] < ranges[i].1 {
                    tuple[i] += 1;
                    continue 'sweep;
                }
                tuple[i] = ranges[i].0;
            }
            break;
        }
    }
    Ok(SweepReport {
        id: rec.id.to_string(),
        param_box: rec
            .params
            .iter()
            .zip(ranges)
            .map(|(&name, &(lo, hi))| ParamRange { name, lo, hi })
            .collect(),
        checked,
        skipped,
        failures,
        exploratory: unsafe_domain,
        millis: started.elapsed().as_millis() as u64,
    })
}

/// Sweep a record over its default acceptance box.
pub fn sweep_default(id: &str) -> Result<SweepReport, IdentityError> {
    let rec = find(id).ok_or_else(|| IdentityError::Unknown(id.to_string()))?;
    sweep(id, rec.default_box, false)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalog_is_reasonably_sized_and_unique() {
        let cat = catalog();
        assert!(cat.len() >= 24, "catalog has {} records", cat.len());
        let mut ids: Vec<_> = cat.iter().map(|r| r.id).collect();
        ids.sort_unstable();
        ids.dedup();
        assert_eq!(ids.len(), cat.len(), "duplicate ids");
        for rec in cat {
            assert_eq!(rec.params.len(), rec.default_box.len(), "{}", rec.id);
            assert_eq!(rec.params.len(), rec.example.len(), "{}", rec.id);
        }
    }

    #[test]
    fn every_record_round_trips_on_its_example() {
        for rec in catalog() {
            let result = check(rec.id, rec.example)
                .unwrap_or_else(|e| panic!("{}: example tuple rejected: {e}", rec.id));
            assert!(
                result.holds,
                "{} example {:?}: lhs={} rhs={}",
                rec.id, rec.example, result.lhs, result.rhs
            );
        }
    }

    #[test]
    fn unknown_and_out_of_domain_errors() {
        assert!(matches!(
            check("I-nope", &[1]),
            Err(IdentityError::Unknown(_))
        ));
        assert!(matches!(
            check("I-main1", &[0, 0]),
            Err(IdentityError::OutOfDomain { .. })
        ));
        assert!(matches!(
            check("I-main1", &[1]),
            Err(IdentityError::Arity { .. })
        ));
    }

    #[test]
    fn sweep_counts_skips() {
        // Domain requires n >= 1, so an n = 0 box checks nothing.
        let report = sweep("I-main1", &[(0, 0), (0, 5)], false).unwrap();
        assert_eq!(report.checked, 0);
        assert_eq!(report.skipped, 6);
        assert!(report.verified());
    }

    #[test]
    fn sweep_expected_tuple_count() {
        // k ranges over 0..=n+1 inside the box, so the count is
        // sum_{n=1..40} (n+2) = 900.
        let report = sweep("I-main1", &[(1, 40), (0, 41)], false).unwrap();
        assert_eq!(report.checked, 900);
        assert_eq!(report.failures.len(), 0);
    }

    #[test]
    fn sweep_is_deterministic() {
        let a = sweep("I-rowsum", &[(1, 30)], false).unwrap();
        let b = sweep("I-rowsum", &[(1, 30)], false).unwrap();
        assert_eq!(a.checked, b.checked);
        assert_eq!(a.failures, b.failures);
    }

    #[test]
    fn check_returns_both_sides() {
        let r = check("I-AC", &[4, 3]).unwrap();
        assert!(r.holds);
        assert_eq!(r.lhs, Value::Int(ExactInt::from(56)));
        assert_eq!(r.rhs, Value::Int(ExactInt::from(56)));
        let r = check("I-AC", &[5, 3]).unwrap();
        assert_eq!(r.lhs, Value::Int(ExactInt::from(84)));
    }

    #[test]
    fn sweep_report_serializes_to_the_documented_schema() {
        let report = sweep("I-rowsum", &[(1, 3)], false).unwrap();
        let v: serde_json::Value = serde_json::to_value(&report).unwrap();
        for key in ["id", "box", "checked", "skipped", "failures", "millis"] {
            assert!(v.get(key).is_some(), "missing {key}");
        }
        assert_eq!(v["box"][0]["name"], "m");
        assert_eq!(v["checked"], 3);
        assert_eq!(v["failures"].as_array().unwrap().len(), 0);
    }

    #[test]
    fn value_display() {
        assert_eq!(Value::Int(7.into()).to_string(), "7");
        assert_eq!(
            Value::Ints(vec![1.into(), ExactInt::from(-2)]).to_string(),
            "[1, -2]"
        );
        assert_eq!(
            Value::Tuple(vec![Value::Int(1.into()), Value::Int(2.into())]).to_string(),
            "(1; 2)"
        );
    }
}
