//! Bundled OEIS sequence snapshots and cross-checks against the crate's own
//! term generators.
//!
//! Sequences ship as checked-in b-file snapshots (no network access at test
//! time) embedded into the binary; setting the `CATRI_DATA_DIR` environment
//! variable points the loader at a directory of replacement `bNNNNNN.txt`
//! files instead.
//!
//! A cross-check compares a registered generator against a snapshot. The
//! comparison tries index shifts in a window of [-3, 3] around the declared
//! alignment; a nonzero shift is reported, never silently folded into a
//! success.

use std::collections::BTreeMap;
use std::path::PathBuf;
use std::sync::OnceLock;

use num_traits::Signed;
use serde::Serialize;
use thiserror::Error;

use crate::exactmath::ExactInt;
use crate::pathoracle;
use crate::polyfam;
use crate::triangles;

/// Environment variable overriding the bundled data directory.
pub const DATA_DIR_ENV: &str = "CATRI_DATA_DIR";

/// A sequence snapshot: contiguous terms starting at `offset`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SequenceRef {
    pub id: String,
    pub offset: i64,
    pub terms: Vec<ExactInt>,
    pub provenance: Provenance,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Provenance {
    Bundled,
    UserFile(PathBuf),
}

impl SequenceRef {
    /// Term at absolute index `i`, if the snapshot covers it.
    pub fn term(&self, i: i64) -> Option<&ExactInt> {
        usize::try_from(i - self.offset)
            .ok()
            .and_then(|j| self.terms.get(j))
    }

    /// One past the last covered index.
    pub fn end(&self) -> i64 {
        self.offset + self.terms.len() as i64
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OeisError {
    #[error("line {line}: expected `index value`, got {text:?}")]
    Format { line: usize, text: String },
    #[error("line {line}: index {got} is not contiguous (expected {expected})")]
    Gap {
        line: usize,
        expected: i64,
        got: i64,
    },
    #[error("b-file has no terms")]
    Empty,
    #[error("unknown generator {0:?}")]
    UnknownGenerator(String),
    #[error("unknown sequence {0:?}")]
    UnknownSequence(String),
    #[error("failed to read {path}: {message}")]
    Io { path: String, message: String },
}

/// Parse OEIS b-file text: one `index value` pair per line; `#` comment
/// lines and blank lines are ignored; indices must be contiguous.
pub fn parse_bfile(text: &str) -> Result<(i64, Vec<ExactInt>), OeisError> {
    let mut offset = None;
    let mut terms: Vec<ExactInt> = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut parts = line.split_whitespace();
        let (Some(idx), Some(val), None) = (parts.next(), parts.next(), parts.next()) else {
            return Err(OeisError::Format {
                line: lineno + 1,
                text: line.to_string(),
            });
        };
        let idx: i64 = idx.parse().map_err(|_| OeisError::Format {
            line: lineno + 1,
            text: line.to_string(),
        })?;
        let val: ExactInt = val.parse().map_err(|_| OeisError::Format {
            line: lineno + 1,
            text: line.to_string(),
        })?;
        match offset {
            None => offset = Some(idx),
            Some(o) => {
                let expected = o + terms.len() as i64;
                if idx != expected {
                    return Err(OeisError::Gap {
                        line: lineno + 1,
                        expected,
                        got: idx,
                    });
                }
            }
        }
        terms.push(val);
    }
    match offset {
        Some(o) => Ok((o, terms)),
        None => Err(OeisError::Empty),
    }
}

macro_rules! bundled_files {
    ($($id:literal => $file:literal),+ $(,)?) => {
        const BUNDLED_RAW: &[(&str, &str)] = &[
            $(($id, include_str!(concat!("../../../data/", $file)))),+
        ];
        fn bundled_file_name(id: &str) -> Option<&'static str> {
            match id {
                $($id => Some($file),)+
                _ => None,
            }
        }
    };
}

bundled_files! {
    "A000045" => "b000045.txt",
    "A000124" => "b000124.txt",
    "A000129" => "b000129.txt",
    "A001045" => "b001045.txt",
    "A002856" => "b002856.txt",
    "A003600" => "b003600.txt",
    "A005581" => "b005581.txt",
    "A007179" => "b007179.txt",
    "A007910" => "b007910.txt",
    "A011848" => "b011848.txt",
    "A059714" => "b059714.txt",
    "A119282" => "b119282.txt",
    "A152948" => "b152948.txt",
    "A212342" => "b212342.txt",
    "A220074" => "b220074.txt",
    "A223659" => "b223659.txt",
    "A223718" => "b223718.txt",
    "A254875" => "b254875.txt",
    "A257890" => "b257890.txt",
    "A258109" => "b258109.txt",
}

/// All bundled snapshots, parsed once.
pub fn bundled() -> &'static BTreeMap<&'static str, SequenceRef> {
    static MAP: OnceLock<BTreeMap<&'static str, SequenceRef>> = OnceLock::new();
    MAP.get_or_init(|| {
        BUNDLED_RAW
            .iter()
            .map(|(id, text)| {
                let (offset, terms) =
                    parse_bfile(text).unwrap_or_else(|e| panic!("bundled {id}: {e}"));
                (
                    *id,
                    SequenceRef {
                        id: id.to_string(),
                        offset,
                        terms,
                        provenance: Provenance::Bundled,
                    },
                )
            })
            .collect()
    })
}

/// Load a sequence: from the `CATRI_DATA_DIR` override if present there,
/// otherwise from the bundled snapshot.
pub fn load(id: &str) -> Result<SequenceRef, OeisError> {
    if let Ok(dir) = std::env::var(DATA_DIR_ENV) {
        if let Some(file) = bundled_file_name(id) {
            let path = PathBuf::from(dir).join(file);
            if path.exists() {
                let text = std::fs::read_to_string(&path).map_err(|e| OeisError::Io {
                    path: path.display().to_string(),
                    message: e.to_string(),
                })?;
                let (offset, terms) = parse_bfile(&text)?;
                return Ok(SequenceRef {
                    id: id.to_string(),
                    offset,
                    terms,
                    provenance: Provenance::UserFile(path),
                });
            }
        }
    }
    bundled()
        .get(id)
        .cloned()
        .ok_or_else(|| OeisError::UnknownSequence(id.to_string()))
}

/// A registered term generator: produces `count` consecutive terms starting
/// at absolute index `start`.
#[derive(Clone, Copy)]
pub struct Generator {
    pub name: &'static str,
    pub start: i64,
    pub describe: &'static str,
    produce: fn(usize) -> Vec<ExactInt>,
}

impl Generator {
    pub fn terms(&self, count: usize) -> Vec<ExactInt> {
        (self.produce)(count)
    }
}

fn gen_fibonacci(count: usize) -> Vec<ExactInt> {
    // Through the polynomial family: Fib(n) = F_{n-1}(1), Fib(0) = 0.
    (0..count)
        .map(|n| {
            if n == 0 {
                ExactInt::from(0)
            } else {
                polyfam::fib_poly(n - 1).eval(&ExactInt::from(1))
            }
        })
        .collect()
}

fn gen_jacobsthal(count: usize) -> Vec<ExactInt> {
    (0..count)
        .map(|i| {
            polyfam::j_poly(i + 1)
                .expect("m >= 1")
                .eval(&ExactInt::from(1))
        })
        .collect()
}

fn gen_pell(count: usize) -> Vec<ExactInt> {
    (0..count)
        .map(|i| polyfam::fib_poly(i).eval(&ExactInt::from(2)))
        .collect()
}

fn gen_b_diagonal(count: usize) -> Vec<ExactInt> {
    (0..count)
        .map(|s| polyfam::bq_poly(s).eval(&ExactInt::from(1)))
        .collect()
}

fn gen_sigma_candidate(count: usize) -> Vec<ExactInt> {
    (0..count)
        .map(|n| {
            polyfam::modified_catalan_poly(n, n)
                .expect("k = n is in range")
                .eval(&ExactInt::from(3))
        })
        .collect()
}

fn gen_j2_at_one(count: usize) -> Vec<ExactInt> {
    (0..count)
        .map(|i| {
            polyfam::jk_poly(2, i + 1)
                .expect("valid")
                .eval(&ExactInt::from(1))
        })
        .collect()
}

fn c_column(t: i64, count: usize) -> Vec<ExactInt> {
    let sign = if t % 2 == 0 { 1 } else { -1 };
    (0..count)
        .map(|i| {
            let m = i as i64 + 1;
            ExactInt::from(sign) * triangles::b_entry((m + t + 1) as usize, t)
        })
        .collect()
}

fn gen_c_column_2(count: usize) -> Vec<ExactInt> {
    c_column(2, count)
}
fn gen_c_column_3(count: usize) -> Vec<ExactInt> {
    c_column(3, count)
}
fn gen_c_column_4(count: usize) -> Vec<ExactInt> {
    c_column(4, count)
}
fn gen_c_column_5(count: usize) -> Vec<ExactInt> {
    c_column(5, count)
}
fn gen_c_column_6(count: usize) -> Vec<ExactInt> {
    c_column(6, count)
}

fn gen_b2_column_2(count: usize) -> Vec<ExactInt> {
    (0..count)
        .map(|i| triangles::b_k_entry(2, i + 3, 2))
        .collect()
}

fn gen_b2_column_3_neg(count: usize) -> Vec<ExactInt> {
    (0..count)
        .map(|i| -triangles::b_k_entry(2, i + 5, 3))
        .collect()
}

fn gen_a2_neg_diagonal(count: usize) -> Vec<ExactInt> {
    (0..count)
        .map(|i| {
            let s = i as i64 + 1;
            let sum: ExactInt = (1..=s)
                .map(|t| triangles::k_analog_entry(2, (2 * s + 1 - t) as usize, t))
                .sum();
            -sum
        })
        .collect()
}

fn gen_dyck_height_3(count: usize) -> Vec<ExactInt> {
    (0..count)
        .map(|i| pathoracle::count_dyck_height(2 * (i as u32 + 2), 3))
        .collect()
}

fn gen_am1_column_4_abs(count: usize) -> Vec<ExactInt> {
    (0..count)
        .map(|i| triangles::k_analog_entry(-1, i + 4, 4).abs())
        .collect()
}

fn gen_bm1_column_2(count: usize) -> Vec<ExactInt> {
    (0..count)
        .map(|i| triangles::b_k_entry(-1, i + 5, 2))
        .collect()
}

fn gen_bm1_column_3_neg(count: usize) -> Vec<ExactInt> {
    (0..count)
        .map(|i| -triangles::b_k_entry(-1, i + 6, 3))
        .collect()
}

fn gen_am1_abs_rowsum_tail(count: usize) -> Vec<ExactInt> {
    (0..count)
        .map(|i| {
            let m = i + 2;
            (2..=m as i64)
                .map(|t| triangles::k_analog_entry(-1, m, t).abs())
                .sum()
        })
        .collect()
}

fn triangle_rows_flat(reversed: bool, count: usize) -> Vec<ExactInt> {
    let mut out = Vec::with_capacity(count);
    let mut m = 0usize;
    while out.len() < count {
        let mut row: Vec<ExactInt> = (0..=m as i64)
            .map(|t| triangles::alt_jacobsthal_entry(m, t))
            .collect();
        if reversed {
            row.reverse();
        }
        out.extend(row);
        m += 1;
    }
    out.truncate(count);
    out
}

fn gen_ajt_rows(count: usize) -> Vec<ExactInt> {
    triangle_rows_flat(false, count)
}

fn gen_ajt_rows_reversed(count: usize) -> Vec<ExactInt> {
    triangle_rows_flat(true, count)
}

/// The generator registry.
pub fn generators() -> &'static [Generator] {
    &[
        Generator {
            name: "fibonacci",
            start: 0,
            describe: "Fibonacci numbers via the Fibonacci polynomials at q=1",
            produce: gen_fibonacci,
        },
        Generator {
            name: "jacobsthal",
            start: 1,
            describe: "Jacobsthal numbers via J_m(1)",
            produce: gen_jacobsthal,
        },
        Generator {
            name: "pell",
            start: 1,
            describe: "Pell numbers via the Fibonacci polynomials at q=2",
            produce: gen_pell,
        },
        Generator {
            name: "b-diagonal",
            start: 0,
            describe: "diagonal sums B_s of the alternating triangle",
            produce: gen_b_diagonal,
        },
        Generator {
            name: "sigma-candidate",
            start: 0,
            describe: "modified Catalan triangle polynomial at x=3, k=n",
            produce: gen_sigma_candidate,
        },
        Generator {
            name: "j2-at-one",
            start: 1,
            describe: "J_{2,m}(1), absolute row sums of the k=2 triangle",
            produce: gen_j2_at_one,
        },
        Generator {
            name: "c-column-2",
            start: 1,
            describe: "column 2 of the reflected triangle, sign-normalized",
            produce: gen_c_column_2,
        },
        Generator {
            name: "c-column-3",
            start: 1,
            describe: "column 3 of the reflected triangle, sign-normalized",
            produce: gen_c_column_3,
        },
        Generator {
            name: "c-column-4",
            start: 1,
            describe: "column 4 of the reflected triangle, sign-normalized",
            produce: gen_c_column_4,
        },
        Generator {
            name: "c-column-5",
            start: 1,
            describe: "column 5 of the reflected triangle, sign-normalized",
            produce: gen_c_column_5,
        },
        Generator {
            name: "c-column-6",
            start: 1,
            describe: "column 6 of the reflected triangle, sign-normalized",
            produce: gen_c_column_6,
        },
        Generator {
            name: "b2-column-2",
            start: 3,
            describe: "B_2(m,2) for m >= 3",
            produce: gen_b2_column_2,
        },
        Generator {
            name: "b2-column-3-neg",
            start: 5,
            describe: "-B_2(m,3) for m >= 5",
            produce: gen_b2_column_3_neg,
        },
        Generator {
            name: "a2-neg-diagonal",
            start: 1,
            describe: "negated odd anti-diagonal sums of the k=2 triangle",
            produce: gen_a2_neg_diagonal,
        },
        Generator {
            name: "dyck-height-3",
            start: 1,
            describe: "Dyck paths of length 2(s+1) with height exactly 3",
            produce: gen_dyck_height_3,
        },
        Generator {
            name: "am1-column-4-abs",
            start: 3,
            describe: "|A_{-1}(m,4)| for m >= 4",
            produce: gen_am1_column_4_abs,
        },
        Generator {
            name: "bm1-column-2",
            start: 5,
            describe: "B_{-1}(m,2) for m >= 5",
            produce: gen_bm1_column_2,
        },
        Generator {
            name: "bm1-column-3-neg",
            start: 2,
            describe: "-B_{-1}(m,3) for m >= 6",
            produce: gen_bm1_column_3_neg,
        },
        Generator {
            name: "am1-abs-rowsum-tail",
            start: 0,
            describe: "row sums of |A_{-1}(m,t)| over t >= 2, m >= 2",
            produce: gen_am1_abs_rowsum_tail,
        },
        Generator {
            name: "ajt-rows",
            start: 0,
            describe: "alternating triangle read by rows, left to right",
            produce: gen_ajt_rows,
        },
        Generator {
            name: "ajt-rows-reversed",
            start: 0,
            describe: "alternating triangle read by rows, right to left",
            produce: gen_ajt_rows_reversed,
        },
    ]
}

pub fn find_generator(name: &str) -> Result<&'static Generator, OeisError> {
    generators()
        .iter()
        .find(|g| g.name == name)
        .ok_or_else(|| OeisError::UnknownGenerator(name.to_string()))
}

/// A mismatch found during cross-checking.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Mismatch {
    pub index: i64,
    pub expected: String,
    pub got: String,
}

/// Outcome of comparing a generator against a sequence snapshot.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MatchReport {
    pub sequence: String,
    pub generator: String,
    /// Index shift applied to the generator to obtain the best match; 0 is
    /// the declared alignment, anything else is a reportable finding.
    pub shift: i64,
    /// Number of terms compared at that shift.
    pub compared: usize,
    pub mismatch: Option<Mismatch>,
}

impl MatchReport {
    /// Full-prefix match at the declared alignment.
    pub fn clean(&self) -> bool {
        self.shift == 0 && self.mismatch.is_none() && self.compared > 0
    }
}

/// Compare `max_terms` generator terms against the snapshot, trying
/// alignment shifts in [-3, 3]; the smallest-|shift| full match wins, and a
/// nonzero winning shift stays visible in the report.
pub fn cross_check(
    seq: &SequenceRef,
    generator: &str,
    max_terms: usize,
) -> Result<MatchReport, OeisError> {
    let g = find_generator(generator)?;
    let produced = g.terms(max_terms);
    let compare = |shift: i64| -> (usize, Option<Mismatch>) {
        let lo = g.start.max(seq.offset - shift);
        let hi = (g.start + produced.len() as i64).min(seq.end() - shift);
        let mut compared = 0usize;
        for i in lo..hi {
            let got = &produced[(i - g.start) as usize];
            let expected = seq.term(i + shift).expect("window bounds");
            if got != expected {
                return (
                    compared,
                    Some(Mismatch {
                        index: i,
                        expected: expected.to_string(),
                        got: got.to_string(),
                    }),
                );
            }
            compared += 1;
        }
        (compared, None)
    };

    let mut best: Option<MatchReport> = None;
    for shift in [0i64, 1, -1, 2, -2, 3, -3] {
        let (compared, mismatch) = compare(shift);
        let report = MatchReport {
            sequence: seq.id.clone(),
            generator: generator.to_string(),
            shift,
            compared,
            mismatch,
        };
        if report.mismatch.is_none() && report.compared > 0 {
            return Ok(report);
        }
        if best.is_none() {
            best = Some(report);
        }
    }
    Ok(best.expect("shift 0 always produces a report"))
}

/// The standard battery: every bundled sequence against its artifact
/// generator, with the reference prefix length each check must reach.
pub fn standard_checks() -> &'static [(&'static str, &'static str, usize)] {
    &[
        ("A000045", "fibonacci", 8),
        ("A001045", "jacobsthal", 9),
        ("A000129", "pell", 8),
        ("A119282", "b-diagonal", 9),
        ("A059714", "sigma-candidate", 12),
        ("A007179", "j2-at-one", 8),
        ("A000124", "c-column-2", 6),
        ("A003600", "c-column-3", 6),
        ("A223718", "c-column-4", 6),
        ("A257890", "c-column-5", 6),
        ("A223659", "c-column-6", 6),
        ("A002856", "b2-column-2", 8),
        ("A152948", "b2-column-2", 8),
        ("A254875", "b2-column-3-neg", 6),
        ("A258109", "a2-neg-diagonal", 6),
        ("A258109", "dyck-height-3", 6),
        ("A011848", "am1-column-4-abs", 8),
        ("A212342", "bm1-column-2", 6),
        ("A005581", "bm1-column-3-neg", 6),
        ("A007910", "am1-abs-rowsum-tail", 8),
        ("A220074", "ajt-rows", 45),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_minimal_bfile() {
        let (offset, terms) = parse_bfile("0 1\n1 1\n2 3").unwrap();
        assert_eq!(offset, 0);
        assert_eq!(terms, vec![1.into(), 1.into(), 3.into()]);
    }

    #[test]
    fn parse_ignores_comments_and_blanks() {
        let (offset, terms) = parse_bfile("# header\n\n5 -2\n6 70\n").unwrap();
        assert_eq!(offset, 5);
        assert_eq!(terms, vec![ExactInt::from(-2), 70.into()]);
    }

    #[test]
    fn parse_rejects_gaps_and_garbage() {
        assert!(matches!(
            parse_bfile("0 1\n2 3"),
            Err(OeisError::Gap { .. })
        ));
        assert!(matches!(
            parse_bfile("0 1 7"),
            Err(OeisError::Format { .. })
        ));
        assert!(matches!(
            parse_bfile("zero 1"),
            Err(OeisError::Format { .. })
        ));
        assert!(matches!(parse_bfile("# only\n"), Err(OeisError::Empty)));
    }

    #[test]
    fn bundled_sequences_parse_and_roundtrip() {
        let map = bundled();
        assert!(map.len() >= 18, "expected >= 18 bundled sequences");
        for (id, seq) in map {
            assert!(!seq.terms.is_empty(), "{id}");
            // Serialize back to b-file text and re-parse.
            let text: String = seq
                .terms
                .iter()
                .enumerate()
                .map(|(i, v)| format!("{} {}\n", seq.offset + i as i64, v))
                .collect();
            let (offset, terms) = parse_bfile(&text).unwrap();
            assert_eq!(offset, seq.offset, "{id}");
            assert_eq!(&terms, &seq.terms, "{id}");
        }
    }

    #[test]
    fn bundled_a007179_prefix() {
        let seq = load("A007179").unwrap();
        let prefix: Vec<i64> = seq.terms[..8]
            .iter()
            .map(|v| i64::try_from(v).unwrap())
            .collect();
        assert_eq!(prefix, vec![1, 1, 4, 6, 16, 28, 64, 120]);
        assert_eq!(seq.offset, 1);
    }

    #[test]
    fn standard_battery_is_clean() {
        for &(id, generator, printed) in standard_checks() {
            let seq = load(id).unwrap();
            let terms = seq.terms.len().min(24).max(printed);
            let report = cross_check(&seq, generator, terms).unwrap();
            assert!(report.clean(), "{id} vs {generator}: {report:?}");
            assert!(
                report.compared >= printed,
                "{id}: {} < {printed}",
                report.compared
            );
        }
    }

    #[test]
    fn a220074_reading_orientation() {
        // The snapshot is the row-by-row left-to-right reading; the reversed
        // reading must NOT fully match, which pins the orientation.
        let seq = load("A220074").unwrap();
        let ltr = cross_check(&seq, "ajt-rows", 45).unwrap();
        assert!(ltr.clean());
        let rtl = cross_check(&seq, "ajt-rows-reversed", 45).unwrap();
        assert!(!rtl.clean(), "reversed reading unexpectedly matches");
    }

    #[test]
    fn shifted_data_reports_nonzero_shift() {
        // Fibonacci terms stored one index too late: the checker should find
        // the match at shift +1 and say so.
        let seq = SequenceRef {
            id: "shifted".into(),
            offset: 1,
            terms: (0..12)
                .map(|n| {
                    let g = gen_fibonacci(12);
                    g[n].clone()
                })
                .collect(),
            provenance: Provenance::Bundled,
        };
        let report = cross_check(&seq, "fibonacci", 12).unwrap();
        assert_eq!(report.shift, 1);
        assert!(report.mismatch.is_none());
        assert!(!report.clean());
    }

    #[test]
    fn mismatching_data_reports_first_divergence() {
        let mut terms = gen_jacobsthal(10);
        terms[4] += 1;
        let seq = SequenceRef {
            id: "corrupt".into(),
            offset: 1,
            terms,
            provenance: Provenance::Bundled,
        };
        let report = cross_check(&seq, "jacobsthal", 10).unwrap();
        assert_eq!(report.shift, 0);
        let mismatch = report.mismatch.expect("must surface the bad term");
        assert_eq!(mismatch.index, 5);
        assert_eq!(report.compared, 4);
    }

    #[test]
    fn unknown_names_error() {
        assert!(matches!(
            load("A999999"),
            Err(OeisError::UnknownSequence(_))
        ));
        let seq = load("A000045").unwrap();
        assert!(matches!(
            cross_check(&seq, "nope", 5),
            Err(OeisError::UnknownGenerator(_))
        ));
    }
}
