//! Exact integer and polynomial arithmetic.
//!
//! Everything downstream (triangles, polynomial families, generating
//! functions, identity sweeps) is built on the three types defined here:
//!
//! - [`ExactInt`]: arbitrary-precision signed integer, the only scalar type
//!   in the crate. No floating point anywhere.
//! - [`Poly`]: dense univariate polynomial over [`ExactInt`]. The same type
//!   serves polynomials in `q` and in `x`; the variable name is supplied at
//!   render time.
//! - [`BiPoly`] / [`RationalGF`]: polynomial in `x` with [`Poly`]-in-`q`
//!   coefficients, and a ratio of two of them that can be expanded as a
//!   formal power series in `x`.

mod poly;
mod series;

pub use poly::Poly;
pub use series::{BiPoly, RationalGF};

use thiserror::Error;

/// Arbitrary-precision signed integer used for every count and coefficient.
pub use num_bigint::BigInt as ExactInt;

/// Errors from the exact-arithmetic layer.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ExactMathError {
    /// A rational generating function whose denominator does not have
    /// constant term 1 in `x` cannot be expanded over the integers.
    #[error("denominator must have x^0 coefficient equal to 1")]
    InvalidDenominator,
}

/// Binomial coefficient `C(n, k)` with the out-of-range convention
/// `binomial(n, k) = 0` for `k < 0` or `k > n`.
///
/// The convention keeps every summation identity in the crate free of
/// edge-case branching.
pub fn binomial(n: u64, k: i64) -> ExactInt {
    use num_traits::{One, Zero};
    if k < 0 || (k as u64) > n {
        return ExactInt::zero();
    }
    let k = (k as u64).min(n - k as u64);
    let mut acc = ExactInt::one();
    for i in 1..=k {
        acc = acc * ExactInt::from(n - k + i) / ExactInt::from(i);
    }
    acc
}

/// `2^e` as an [`ExactInt`].
pub fn pow2(e: u64) -> ExactInt {
    use num_traits::One;
    ExactInt::one() << e
}

/// `base^e` as an [`ExactInt`] (signed base).
pub fn ipow(base: i64, e: u64) -> ExactInt {
    ExactInt::from(base).pow(e as u32)
}

/// Exact division, panicking if `d` does not divide `a`.
///
/// Used where an identity guarantees divisibility (e.g. closed forms with a
/// `/6` factor); a panic here means the identity itself is broken.
pub fn exact_div(a: &ExactInt, d: i64) -> ExactInt {
    use num_traits::Zero;
    let d = ExactInt::from(d);
    let (q, r) = num_integer_div_rem(a, &d);
    assert!(r.is_zero(), "exact_div: {a} not divisible by {d}");
    q
}

fn num_integer_div_rem(a: &ExactInt, d: &ExactInt) -> (ExactInt, ExactInt) {
    (a / d, a % d)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Zero;

    #[test]
    fn binomial_small_values() {
        assert_eq!(binomial(7, 3), ExactInt::from(35));
        assert_eq!(binomial(8, 3), ExactInt::from(56));
        assert_eq!(binomial(0, 0), ExactInt::from(1));
    }

    #[test]
    fn binomial_out_of_range_is_zero() {
        assert_eq!(binomial(5, -1), ExactInt::zero());
        assert_eq!(binomial(5, 6), ExactInt::zero());
    }

    #[test]
    fn binomial_pascal_rule_holds_up_to_200() {
        for n in 1..=200u64 {
            for k in 0..=(n as i64) {
                assert_eq!(
                    binomial(n, k),
                    binomial(n - 1, k - 1) + binomial(n - 1, k),
                    "Pascal rule failed at ({n}, {k})"
                );
            }
        }
    }

    #[test]
    fn binomial_symmetry() {
        for n in 0..=60u64 {
            for k in 0..=(n as i64) {
                assert_eq!(binomial(n, k), binomial(n, n as i64 - k));
            }
        }
    }

    #[test]
    fn exact_div_divides() {
        assert_eq!(exact_div(&ExactInt::from(132 * 9), 2), ExactInt::from(594));
    }

    #[test]
    #[should_panic(expected = "not divisible")]
    fn exact_div_panics_on_remainder() {
        exact_div(&ExactInt::from(7), 2);
    }

    #[test]
    fn pow2_and_ipow() {
        assert_eq!(pow2(10), ExactInt::from(1024));
        assert_eq!(ipow(-2, 5), ExactInt::from(-32));
        assert_eq!(ipow(-1, 0), ExactInt::from(1));
    }
}
