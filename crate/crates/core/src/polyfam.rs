//! The named polynomial families, built from triangle data.
//!
//! Where a family also has a generating function in [`crate::genfun`], the
//! two constructions are cross-checked against each other by the identity
//! registry and the test suite; the triangle route is the one implemented
//! here. The exception is `B~_{k,s}(q)`, which is *defined* through a
//! displayed series, so [`bk_tilde_poly`] goes through the series expansion
//! and its `k = 1` reduction anchors it to the row formula.

use thiserror::Error;

use crate::exactmath::{ExactInt, Poly};
use crate::genfun::{self, GfId};
use crate::triangles::{alt_jacobsthal_entry, catalan_entry, k_analog_entry};

use num_traits::{One, Zero};

/// Identifier of a polynomial family together with its parameters; used by
/// command-line dispatch.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum FamilyId {
    CatalanTriangle { n: usize, k: usize },
    ModifiedCatalanTriangle { n: usize, k: usize },
    H { m: usize },
    J { m: usize },
    Bq { s: usize },
    BqTilde { s: usize },
    FibPoly { s: usize },
    Hk { k: i64, m: usize },
    Jk { k: i64, m: usize },
    Bk { k: i64, s: usize },
    BkTilde { k: i64, s: usize },
    L { l: usize },
    Lk { k: i64, l: usize },
}

/// What a family builds: a single polynomial, or (for the `L` families,
/// which are not polynomials) a truncated power-series coefficient stream.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum FamilyValue {
    Polynomial(Poly),
    Series(Vec<ExactInt>),
}

impl FamilyId {
    pub fn name(&self) -> &'static str {
        match self {
            FamilyId::CatalanTriangle { .. } => "catalan",
            FamilyId::ModifiedCatalanTriangle { .. } => "modified-catalan",
            FamilyId::H { .. } => "h",
            FamilyId::J { .. } => "j",
            FamilyId::Bq { .. } => "bq",
            FamilyId::BqTilde { .. } => "bq-tilde",
            FamilyId::FibPoly { .. } => "fib",
            FamilyId::Hk { .. } => "hk",
            FamilyId::Jk { .. } => "jk",
            FamilyId::Bk { .. } => "bk",
            FamilyId::BkTilde { .. } => "bk-tilde",
            FamilyId::L { .. } => "l",
            FamilyId::Lk { .. } => "lk",
        }
    }

    /// Presentation variable: the triangle polynomials and the `L` streams
    /// live in `x`, everything else in `q`.
    pub fn variable(&self) -> &'static str {
        match self {
            FamilyId::CatalanTriangle { .. }
            | FamilyId::ModifiedCatalanTriangle { .. }
            | FamilyId::L { .. }
            | FamilyId::Lk { .. } => "x",
            _ => "q",
        }
    }

    /// Build the family member. `order` only affects the series families.
    pub fn build(&self, order: usize) -> Result<FamilyValue, PolyFamError> {
        use FamilyValue::{Polynomial, Series};
        Ok(match *self {
            FamilyId::CatalanTriangle { n, k } => Polynomial(catalan_poly(n, k)?),
            FamilyId::ModifiedCatalanTriangle { n, k } => Polynomial(modified_catalan_poly(n, k)?),
            FamilyId::H { m } => Polynomial(h_poly(m)?),
            FamilyId::J { m } => Polynomial(j_poly(m)?),
            FamilyId::Bq { s } => Polynomial(bq_poly(s)),
            FamilyId::BqTilde { s } => Polynomial(bq_tilde_poly(s)),
            FamilyId::FibPoly { s } => Polynomial(fib_poly(s)),
            FamilyId::Hk { k, m } => Polynomial(hk_poly(k, m)?),
            FamilyId::Jk { k, m } => Polynomial(jk_poly(k, m)?),
            FamilyId::Bk { k, s } => Polynomial(bk_poly(k, s)?),
            FamilyId::BkTilde { k, s } => Polynomial(bk_tilde_poly(k, s)?),
            FamilyId::L { l } => Series(l_series(l, order)),
            FamilyId::Lk { k, l } => Series(lk_series(k, l, order)?),
        })
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PolyFamError {
    #[error("parameters outside the family domain: {0}")]
    Domain(&'static str),
}

fn require(cond: bool, what: &'static str) -> Result<(), PolyFamError> {
    if cond {
        Ok(())
    } else {
        Err(PolyFamError::Domain(what))
    }
}

/// Catalan triangle polynomial: sum of `C(n,s) x^(k-s)` for `s = 0..=k`.
///
/// Degree is exactly `k`; the constant term is `C(n,k)`.
pub fn catalan_poly(n: usize, k: usize) -> Result<Poly, PolyFamError> {
    require(k <= n, "catalan_poly requires 0 <= k <= n")?;
    let mut coeffs = vec![ExactInt::zero(); k + 1];
    for s in 0..=k {
        coeffs[k - s] = catalan_entry(n, s as i64);
    }
    Ok(Poly::from_coeffs(coeffs))
}

/// Modified Catalan triangle polynomial: sum of
/// `C(n+1,s) x^(max(k-1-s, 0))` for `s = 0..=k`.
///
/// Degree is `k - 1` for `k >= 1`; for `k = 0` it is the constant 1.
pub fn modified_catalan_poly(n: usize, k: usize) -> Result<Poly, PolyFamError> {
    require(k <= n, "modified_catalan_poly requires 0 <= k <= n")?;
    let mut coeffs = vec![ExactInt::zero(); k.max(1)];
    for s in 0..=k {
        let power = (k as i64 - 1 - s as i64).max(0) as usize;
        coeffs[power] += catalan_entry(n + 1, s as i64);
    }
    Ok(Poly::from_coeffs(coeffs))
}

/// Row polynomial `H_m(q)`: sum of `A(m,t) q^(m-t)` over `t = 1..=m`.
pub fn h_poly(m: usize) -> Result<Poly, PolyFamError> {
    require(m >= 1, "h_poly requires m >= 1")?;
    let mut coeffs = vec![ExactInt::zero(); m];
    for t in 1..=m {
        coeffs[m - t] = alt_jacobsthal_entry(m, t as i64);
    }
    Ok(Poly::from_coeffs(coeffs))
}

/// q-Jacobsthal polynomial `J_m(q) = H_m(-q)`.
pub fn j_poly(m: usize) -> Result<Poly, PolyFamError> {
    Ok(h_poly(m)?.compose_neg())
}

/// Diagonal polynomial `B_s(q)`: sum of `A(m,t) q^(m-t)` over pairs with
/// `t + m - 2 = s` and `t > 0`.
pub fn bq_poly(s: usize) -> Poly {
    diagonal_poly(s, alt_jacobsthal_entry)
}

/// The `(-1)^(s+1) q^s` correction shared by both routes below.
fn tilde_correction(s: usize) -> Poly {
    Poly::monomial(if s.is_multiple_of(2) { -1 } else { 1 }, s)
}

/// q-Fibonacci polynomial `B~_s(q) = (-1)^s B_s(q) + (-1)^(s+1) q^s`.
pub fn bq_tilde_poly(s: usize) -> Poly {
    let signed = if s.is_multiple_of(2) {
        bq_poly(s)
    } else {
        -bq_poly(s)
    };
    &signed + &tilde_correction(s)
}

/// Row-formula route for `B~_s(q)`: sum of `|A(m,t)| q^(m-t)` plus the
/// `(-1)^(s+1) q^s` correction. Kept alongside [`bq_tilde_poly`] so the two
/// defining formulas can be compared.
pub fn bq_tilde_poly_abs_route(s: usize) -> Poly {
    let abs = diagonal_poly(s, alt_jacobsthal_entry).abs_coeffs();
    &abs + &tilde_correction(s)
}

fn diagonal_poly(s: usize, entry: impl Fn(usize, i64) -> ExactInt) -> Poly {
    let mut coeffs = vec![ExactInt::zero(); s + 1];
    for t in 1..=(s + 2) / 2 {
        let m = s + 2 - t;
        // exponent m - t = s + 2 - 2t
        coeffs[s + 2 - 2 * t] = entry(m, t as i64);
    }
    Poly::from_coeffs(coeffs)
}

/// Fibonacci polynomial, generated by `1/(1-qx-x^2)`; computed by the
/// three-term recurrence it induces.
pub fn fib_poly(s: usize) -> Poly {
    let mut prev = Poly::one();
    if s == 0 {
        return prev;
    }
    let q = Poly::variable();
    let mut cur = q.clone();
    for _ in 1..s {
        let next = &(&q * &cur) + &prev;
        prev = cur;
        cur = next;
    }
    cur
}

/// k-analogue row polynomial `H_{k,m}(q)`: sum of `A_k(m,t) q^(m-t)`.
pub fn hk_poly(k: i64, m: usize) -> Result<Poly, PolyFamError> {
    require(k != 0, "hk_poly requires k != 0")?;
    require(m >= 1, "hk_poly requires m >= 1")?;
    let mut coeffs = vec![ExactInt::zero(); m];
    for t in 1..=m {
        coeffs[m - t] = k_analog_entry(k, m, t as i64);
    }
    Ok(Poly::from_coeffs(coeffs))
}

/// k-analogue q-Jacobsthal polynomial `J_{k,m}(q) = H_{k,m}(-q)`.
pub fn jk_poly(k: i64, m: usize) -> Result<Poly, PolyFamError> {
    Ok(hk_poly(k, m)?.compose_neg())
}

/// k-analogue diagonal polynomial `B_{k,s}(q)`.
pub fn bk_poly(k: i64, s: usize) -> Result<Poly, PolyFamError> {
    require(k != 0, "bk_poly requires k != 0")?;
    Ok(diagonal_poly(s, |m, t| k_analog_entry(k, m, t)))
}

/// k-analogue q-Fibonacci polynomial `B~_{k,s}(q)`, the `x^s` coefficient of
/// the `CF_k` generating function.
pub fn bk_tilde_poly(k: i64, s: usize) -> Result<Poly, PolyFamError> {
    require(k != 0, "bk_tilde_poly requires k != 0")?;
    let stream = genfun::coefficient_stream(GfId::CFk { k }, s)
        .expect("CF_k is a valid registry entry for nonzero k");
    Ok(stream.into_iter().nth(s).expect("expansion reaches x^s"))
}

/// Power-series coefficients of `L_l(x)` through `x^order`, by the recursion
/// `L_{l+1} = (-x/(1-x)) L_l + x^(l+2)/(1-x)` with `L_0 = x/(1-x)`.
pub fn l_series(l: usize, order: usize) -> Vec<ExactInt> {
    lk_series_impl(1, l, order)
}

/// k-analogue `L_{k,l}(x)` coefficients: the recursion gains a
/// `k^floor((l+1)/2)` factor on the correction term.
pub fn lk_series(k: i64, l: usize, order: usize) -> Result<Vec<ExactInt>, PolyFamError> {
    require(k != 0, "lk_series requires k != 0")?;
    Ok(lk_series_impl(k, l, order))
}

fn lk_series_impl(k: i64, l: usize, order: usize) -> Vec<ExactInt> {
    // L_0 = x/(1-x): 0, 1, 1, 1, ...
    let mut cur: Vec<ExactInt> = (0..=order)
        .map(|i| {
            if i == 0 {
                ExactInt::zero()
            } else {
                ExactInt::one()
            }
        })
        .collect();
    for step in 0..l {
        let mut next = vec![ExactInt::zero(); order + 1];
        // (-x/(1-x)) * cur: coefficient n is -(sum of cur[0..n]).
        let mut running = ExactInt::zero();
        for n in 1..=order {
            running += &cur[n - 1];
            next[n] = -&running;
        }
        // + k^floor((step+1)/2) * x^(step+2) / (1-x)
        let weight = ExactInt::from(k).pow(step.div_ceil(2) as u32);
        for c in next.iter_mut().skip(step + 2) {
            *c += &weight;
        }
        cur = next;
    }
    cur
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::binomial;

    fn int(v: i64) -> ExactInt {
        ExactInt::from(v)
    }

    #[test]
    fn catalan_poly_at_zero_is_triangle_entry() {
        for n in 0..=20usize {
            for k in 0..=n {
                assert_eq!(
                    catalan_poly(n, k).unwrap().eval(&ExactInt::zero()),
                    catalan_entry(n, k as i64)
                );
            }
        }
    }

    #[test]
    fn catalan_poly_worked_example() {
        // 1*8 + 3*4 + 5*2 + 5 = 35 = binomial(7,3)
        assert_eq!(catalan_poly(3, 3).unwrap().eval(&int(2)), int(35));
        assert_eq!(binomial(7, 3), int(35));
    }

    #[test]
    fn catalan_poly_degree_and_constants() {
        for n in 0..=12usize {
            assert_eq!(catalan_poly(n, 0).unwrap(), Poly::one());
            for k in 0..=n {
                let p = catalan_poly(n, k).unwrap();
                assert_eq!(p.degree(), Some(k));
                assert_eq!(p.coeff(k), ExactInt::one());
            }
        }
        assert!(catalan_poly(3, 4).is_err());
    }

    #[test]
    fn modified_catalan_poly_evaluations() {
        assert_eq!(
            modified_catalan_poly(7, 7).unwrap().eval(&int(3)),
            int(15100)
        );
        for n in 0..=20usize {
            for k in 0..=n {
                let p = modified_catalan_poly(n, k).unwrap();
                assert_eq!(p.eval(&ExactInt::one()), catalan_entry(n + 2, k as i64));
                assert_eq!(
                    p.eval(&ExactInt::zero()),
                    catalan_entry(n + 1, k as i64 - 1) + catalan_entry(n + 1, k as i64)
                );
            }
        }
    }

    #[test]
    fn modified_catalan_poly_degree() {
        for n in 1..=10usize {
            for k in 1..=n {
                assert_eq!(
                    modified_catalan_poly(n, k).unwrap().degree(),
                    Some(k - 1),
                    "n={n} k={k}"
                );
            }
            assert_eq!(modified_catalan_poly(n, 0).unwrap(), Poly::one());
        }
    }

    #[test]
    fn h5_and_j5() {
        assert_eq!(h_poly(5).unwrap(), Poly::from_ints(&[1, -3, 4, -2, 1]));
        assert_eq!(j_poly(5).unwrap(), Poly::from_ints(&[1, 3, 4, 2, 1]));
        assert_eq!(j_poly(3).unwrap(), Poly::from_ints(&[1, 1, 1]));
        assert_eq!(j_poly(4).unwrap(), Poly::from_ints(&[1, 2, 2]));
        assert!(h_poly(0).is_err());
    }

    #[test]
    fn h_at_zero_and_one_is_one() {
        for m in 1..=40usize {
            let h = h_poly(m).unwrap();
            assert_eq!(h.eval(&ExactInt::zero()), ExactInt::one());
            assert_eq!(h.eval(&ExactInt::one()), ExactInt::one());
        }
    }

    #[test]
    fn bq_tilde_list() {
        let want: [&[i64]; 8] = [
            &[0, 1],                   // q
            &[1],                      // 1
            &[0, 1, 0, 1],             // q^3 + q
            &[1, 0, 2],                // 2q^2 + 1
            &[0, 2, 0, 2, 0, 1],       // q^5 + 2q^3 + 2q
            &[1, 0, 4, 0, 3],          // 3q^4 + 4q^2 + 1
            &[0, 3, 0, 6, 0, 3, 0, 1], // q^7 + 3q^5 + 6q^3 + 3q
            &[1, 0, 7, 0, 9, 0, 4],    // 4q^6 + 9q^4 + 7q^2 + 1
        ];
        for (i, w) in want.iter().enumerate() {
            let s = i + 1;
            assert_eq!(bq_tilde_poly(s), Poly::from_ints(w), "s={s}");
        }
        assert_eq!(bq_tilde_poly(2), Poly::one());
    }

    #[test]
    fn bq_tilde_routes_agree() {
        for s in 0..=40 {
            assert_eq!(bq_tilde_poly(s), bq_tilde_poly_abs_route(s), "s={s}");
        }
    }

    #[test]
    fn fib_poly_pell_specialization() {
        // Pell-recurrence oracle: P_1 = 1, P_2 = 2, P_s = 2 P_{s-1} + P_{s-2};
        // the x^s series coefficient at q=2 is P_{s+1}.
        let mut pell = vec![int(0), int(1)];
        for s in 2..=14 {
            let v = int(2) * &pell[s - 1] + &pell[s - 2];
            pell.push(v);
        }
        for s in 0..=12usize {
            assert_eq!(fib_poly(s).eval(&int(2)), pell[s + 1], "s={s}");
        }
    }

    #[test]
    fn fib_poly_at_one_is_fibonacci() {
        let mut fib = vec![int(0), int(1)];
        for s in 2..=14 {
            let v = &fib[s - 1] + &fib[s - 2];
            fib.push(v);
        }
        for s in 0..=12usize {
            assert_eq!(fib_poly(s).eval(&ExactInt::one()), fib[s + 1], "s={s}");
        }
    }

    #[test]
    fn jk2_at_one_prefix() {
        let want = [1i64, 1, 4, 6, 16, 28, 64, 120];
        for (i, w) in want.iter().enumerate() {
            let m = i + 1;
            assert_eq!(
                jk_poly(2, m).unwrap().eval(&ExactInt::one()),
                int(*w),
                "m={m}"
            );
        }
    }

    #[test]
    fn hk_at_one_is_k_power() {
        for k in [-2i64, -1, 1, 2, 3] {
            for m in 1..=30usize {
                assert_eq!(
                    hk_poly(k, m).unwrap().eval(&ExactInt::one()),
                    ExactInt::from(k).pow(((m - 1) / 2) as u32),
                    "k={k} m={m}"
                );
            }
        }
    }

    #[test]
    fn k_one_reductions() {
        for m in 1..=30usize {
            assert_eq!(hk_poly(1, m).unwrap(), h_poly(m).unwrap());
            assert_eq!(jk_poly(1, m).unwrap(), j_poly(m).unwrap());
        }
        for s in 0..=30usize {
            assert_eq!(bk_poly(1, s).unwrap(), bq_poly(s));
            assert_eq!(bk_tilde_poly(1, s).unwrap(), bq_tilde_poly(s));
        }
    }

    #[test]
    fn bk2_series_matches_generating_function() {
        // Assembling sum B_{2,s}(q) x^s must reproduce the F_2 expansion.
        let stream = genfun::coefficient_stream(GfId::Fk { k: 2 }, 20).unwrap();
        for (s, c) in stream.iter().enumerate() {
            assert_eq!(c, &bk_poly(2, s).unwrap(), "s={s}");
        }
    }

    #[test]
    fn domain_errors() {
        assert!(hk_poly(0, 3).is_err());
        assert!(jk_poly(0, 3).is_err());
        assert!(bk_poly(0, 3).is_err());
        assert!(bk_tilde_poly(0, 3).is_err());
        assert!(lk_series(0, 2, 5).is_err());
        assert!(hk_poly(2, 0).is_err());
    }

    #[test]
    fn l_series_small_cases() {
        let ints = |v: &[i64]| v.iter().map(|&x| int(x)).collect::<Vec<_>>();
        assert_eq!(l_series(0, 4), ints(&[0, 1, 1, 1, 1]));
        assert_eq!(l_series(1, 8), ints(&[0, 0, 0, -1, -2, -3, -4, -5, -6]));
        assert_eq!(l_series(2, 8), ints(&[0, 0, 0, 1, 2, 4, 7, 11, 16]));
    }

    #[test]
    fn lk_series_reduces_at_k_one() {
        for l in 0..=8 {
            assert_eq!(lk_series(1, l, 30).unwrap(), l_series(l, 30), "l={l}");
        }
    }

    #[test]
    fn family_id_dispatch() {
        assert_eq!(
            FamilyId::H { m: 5 }.build(0).unwrap(),
            FamilyValue::Polynomial(h_poly(5).unwrap())
        );
        assert_eq!(
            FamilyId::L { l: 2 }.build(8).unwrap(),
            FamilyValue::Series(l_series(2, 8))
        );
        assert_eq!(
            FamilyId::Lk { k: 3, l: 1 }.build(8).unwrap(),
            FamilyValue::Series(lk_series(3, 1, 8).unwrap())
        );
        assert!(FamilyId::Hk { k: 0, m: 2 }.build(0).is_err());
        assert_eq!(FamilyId::BqTilde { s: 4 }.name(), "bq-tilde");
        assert_eq!(FamilyId::CatalanTriangle { n: 3, k: 2 }.variable(), "x");
        assert_eq!(FamilyId::Jk { k: 2, m: 3 }.variable(), "q");
    }

    #[test]
    fn l_series_lowest_degree() {
        for l in 0..=20usize {
            let coeffs = l_series(l, 60);
            let lowest = coeffs.iter().position(|c| !c.is_zero()).unwrap();
            assert_eq!(lowest, l + 1 + (l % 2), "l={l}");
        }
    }
}
