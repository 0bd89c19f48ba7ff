//! Brute-force lattice-path enumeration.
//!
//! Paths take steps (1,1) and (1,-1) from the origin. Counting is done by
//! dynamic programming over (steps taken, height), which is fast enough for
//! the whole test range; the bijection verifier instead walks every single
//! path explicitly, so that its answers are independent of every algebraic
//! formula in the crate.

use num_traits::{One, Zero};
use thiserror::Error;

use crate::exactmath::{binomial, ExactInt};
use crate::triangles::catalan_entry;

/// Height constraint for counted paths.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum PathConstraint {
    /// No constraint.
    Free,
    /// Never below the x-axis (Dyck).
    NonNegative,
    /// Never below the x-axis and never above height `h`.
    HeightAtMost(u32),
}

/// An endpoint plus constraint; steps are fixed to (1,1) and (1,-1).
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct PathSpec {
    /// Number of steps (the x-coordinate of the endpoint).
    pub steps: u32,
    /// Final height (the y-coordinate of the endpoint).
    pub end_height: i64,
    pub constraint: PathConstraint,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PathOracleError {
    #[error("bijection enumeration bound exceeded: {0} steps > 24")]
    BoundExceeded(u32),
    #[error("bijection verifier requires 0 <= k <= n+1")]
    Domain,
}

/// Exact number of paths satisfying `spec`. Parity mismatches (steps and
/// height of different parity) yield 0.
pub fn count_paths(spec: &PathSpec) -> ExactInt {
    let steps = spec.steps as i64;
    if (steps + spec.end_height) % 2 != 0 {
        return ExactInt::zero();
    }
    // heights[h - offset] = number of partial paths at height h
    let offset = match spec.constraint {
        PathConstraint::Free => -steps,
        _ => 0,
    };
    let top = match spec.constraint {
        PathConstraint::HeightAtMost(h) => h as i64,
        _ => steps,
    };
    if spec.end_height < offset || spec.end_height > top {
        return ExactInt::zero();
    }
    let size = (top - offset + 1) as usize;
    let idx = |h: i64| (h - offset) as usize;
    let mut counts = vec![ExactInt::zero(); size];
    counts[idx(0)] = ExactInt::one();
    for _ in 0..spec.steps {
        let mut next = vec![ExactInt::zero(); size];
        for (i, c) in counts.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let h = i as i64 + offset;
            if h < top {
                next[idx(h + 1)] += c;
            }
            if h > offset {
                next[idx(h - 1)] += c;
            }
        }
        counts = next;
    }
    counts[idx(spec.end_height)].clone()
}

/// Number of Dyck paths from the origin to `(len, 0)` whose maximum height
/// is exactly `h`. Odd `len` yields 0.
pub fn count_dyck_height(len: u32, h: u32) -> ExactInt {
    let at_most = |cap: u32| {
        count_paths(&PathSpec {
            steps: len,
            end_height: 0,
            constraint: PathConstraint::HeightAtMost(cap),
        })
    };
    if h == 0 {
        return if len == 0 {
            ExactInt::one()
        } else {
            ExactInt::zero()
        };
    }
    at_most(h) - at_most(h - 1)
}

/// One return-count class of the free-path decomposition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassCount {
    /// Number of interior returns to the x-axis.
    pub s: u32,
    /// Paths enumerated in this class.
    pub actual: ExactInt,
    /// `C(n, k-s) * 2^s`.
    pub expected: ExactInt,
}

/// Result of exhaustively classifying the free paths to
/// `(n+1+k, n+1-k)` by their number of x-axis returns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BijectionReport {
    /// Total number of enumerated paths.
    pub lhs: ExactInt,
    /// The weighted sum `sum_s C(n, k-s) * 2^s`.
    pub rhs: ExactInt,
    pub per_class: Vec<ClassCount>,
}

impl BijectionReport {
    /// True when the totals agree and every class has its predicted size.
    pub fn holds(&self) -> bool {
        self.lhs == self.rhs && self.per_class.iter().all(|c| c.actual == c.expected)
    }
}

/// Walk all free paths from the origin to `(n+1+k, n+1-k)`, classify each by
/// its number `s` of x-axis intersections after the start, and compare class
/// sizes with `C(n, k-s) * 2^s`.
///
/// The enumeration is exponential by design (its whole value is independence
/// from the algebra), so the path length `n+1+k` is capped at 24.
pub fn verify_bijection(n: u32, k: u32) -> Result<BijectionReport, PathOracleError> {
    if k > n + 1 {
        return Err(PathOracleError::Domain);
    }
    let steps = n + 1 + k;
    if steps > 24 {
        return Err(PathOracleError::BoundExceeded(steps));
    }
    let end_height = (n + 1) as i64 - k as i64;
    let mut classes = vec![ExactInt::zero(); k as usize + 1];

    // Depth-first walk over the 2^steps sign choices.
    let mut stack: Vec<(u32, i64, u32, bool)> = vec![(0, 0, 0, false)];
    while let Some((depth, height, returns, second_branch)) = stack.pop() {
        if depth == steps {
            if height == end_height {
                // returns <= k whenever the endpoint matches; the final
                // segment after the last return is a path ending at
                // height >= 0, forcing k - returns >= 0.
                classes[returns as usize] += 1;
            }
            continue;
        }
        if !second_branch {
            stack.push((depth, height, returns, true));
            let h = height + 1;
            let r = returns + u32::from(h == 0);
            stack.push((depth + 1, h, r, false));
        } else {
            let h = height - 1;
            let r = returns + u32::from(h == 0);
            stack.push((depth + 1, h, r, false));
        }
    }

    let per_class: Vec<ClassCount> = classes
        .into_iter()
        .enumerate()
        .map(|(s, actual)| ClassCount {
            s: s as u32,
            expected: catalan_entry(n as usize, k as i64 - s as i64)
                * crate::exactmath::pow2(s as u64),
            actual,
        })
        .collect();
    let lhs: ExactInt = per_class.iter().map(|c| c.actual.clone()).sum();
    let rhs: ExactInt = per_class.iter().map(|c| c.expected.clone()).sum();
    Ok(BijectionReport {
        lhs,
        rhs,
        per_class,
    })
}

/// Free-path count to an endpoint `(a+b, a-b)` in closed form, for tests.
pub fn free_count_formula(steps: u32, end_height: i64) -> ExactInt {
    let down = (steps as i64 - end_height) / 2;
    if (steps as i64 + end_height) % 2 != 0 {
        return ExactInt::zero();
    }
    binomial(steps as u64, down)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn int(v: i64) -> ExactInt {
        ExactInt::from(v)
    }

    fn free(steps: u32, end_height: i64) -> ExactInt {
        count_paths(&PathSpec {
            steps,
            end_height,
            constraint: PathConstraint::Free,
        })
    }

    fn dyck(steps: u32, end_height: i64) -> ExactInt {
        count_paths(&PathSpec {
            steps,
            end_height,
            constraint: PathConstraint::NonNegative,
        })
    }

    #[test]
    fn free_count_examples() {
        assert_eq!(free(8, 2), int(56));
        assert_eq!(free(3, 2), int(0)); // parity mismatch
        assert_eq!(free(0, 0), int(1));
        assert_eq!(free(4, -4), int(1));
    }

    #[test]
    fn dyck_count_examples() {
        assert_eq!(dyck(10, 2), int(90)); // C(6,4)
        assert_eq!(dyck(4, -2), int(0));
        assert_eq!(dyck(2, 0), int(1));
    }

    #[test]
    fn free_counts_match_binomials() {
        for a in 0..=15i64 {
            for b in 0..=a {
                assert_eq!(
                    free((a + b) as u32, a - b),
                    binomial((a + b) as u64, b),
                    "a={a} b={b}"
                );
            }
        }
    }

    #[test]
    fn dyck_counts_match_catalan_triangle() {
        for n in 0..=15usize {
            for k in 0..=n {
                assert_eq!(
                    dyck((n + k) as u32, (n - k) as i64),
                    catalan_entry(n, k as i64),
                    "n={n} k={k}"
                );
            }
        }
    }

    #[test]
    fn dyck_heights_partition_catalan_numbers() {
        for m in 0..=12u32 {
            let total: ExactInt = (0..=m).map(|h| count_dyck_height(2 * m, h)).sum();
            assert_eq!(total, crate::triangles::catalan_number(m as usize), "m={m}");
        }
    }

    #[test]
    fn dyck_height_exactly_three() {
        assert_eq!(count_dyck_height(4, 3), int(0));
        // Frozen from enumerating the five length-6 Dyck paths by hand: only
        // UUUDDD reaches height 3.
        assert_eq!(count_dyck_height(6, 3), int(1));
        assert_eq!(count_dyck_height(8, 3), int(5));
    }

    #[test]
    fn bijection_worked_example() {
        let report = verify_bijection(3, 3).unwrap();
        assert_eq!(report.lhs, int(35));
        assert_eq!(report.rhs, int(35));
        let sizes: Vec<i64> = report
            .per_class
            .iter()
            .map(|c| i64::try_from(&c.actual).unwrap())
            .collect();
        assert_eq!(sizes, vec![5, 10, 12, 8]);
        assert!(report.holds());
    }

    #[test]
    fn bijection_trivial_cases() {
        let report = verify_bijection(4, 0).unwrap();
        assert_eq!(report.lhs, int(1));
        assert_eq!(report.per_class.len(), 1);
        assert!(report.holds());

        let report = verify_bijection(4, 3).unwrap();
        assert_eq!(report.lhs, int(56));
        assert!(report.holds());
    }

    #[test]
    fn bijection_bounds() {
        assert_eq!(
            verify_bijection(20, 10).unwrap_err(),
            PathOracleError::BoundExceeded(31)
        );
        assert_eq!(verify_bijection(2, 4).unwrap_err(), PathOracleError::Domain);
    }
}
