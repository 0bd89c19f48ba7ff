//! Registry of the named rational generating functions.
//!
//! Every generating function used anywhere in the crate is constructed here
//! as an exact [`RationalGF`] with unit `x`-constant denominator term. `q` is
//! always a formal variable inside this module; numeric specialization
//! happens downstream, so one expansion serves every `q`.
//!
//! The infinite `t`-sums behind `F`, `Q`, `F_k` and `Q_k` are represented by
//! their closed forms; the partial-sum comparisons in the test suite are the
//! verification that those closed forms are right.

use thiserror::Error;

use crate::exactmath::{BiPoly, Poly, RationalGF};

/// Identifier of a registry entry.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum GfId {
    /// `1 / ((1-x)(1+x)^t)`: column `t` of the alternating Jacobsthal
    /// triangle, shifted by `t`.
    Column { t: u32 },
    /// `1 / ((1+x)(1-x)^t)`: the companion column series with all-plus signs.
    CompanionColumn { t: u32 },
    /// `1 / ((1-x)(1+x-x^2))`: diagonal sums `B_s`.
    F,
    /// `F(x,q) = 1 / ((1-qx)(1+qx-x^2))`: coefficients `B_s(q)`.
    Fq,
    /// `CF(x,q) = (x^2+qx) / ((1+qx)(1-qx-x^2))`: coefficients `B~_s(q)`.
    CFq,
    /// `Q(x,q) = x / ((1-qx)(1+(q-1)x))`: coefficients `H_m(q)`.
    Q,
    /// `Q(x,-q) = x / ((1+qx)(1-(q+1)x))`: coefficients `J_m(q)`.
    QMinus,
    /// `1 / (1-qx-x^2)`: the Fibonacci polynomials.
    FibPoly,
    /// `Q_k(x,q) = x(1+qx) / ((1-kq^2x^2)(1+(q-1)x))`: coefficients
    /// `H_{k,m}(q)`.
    Qk { k: i64 },
    /// `Q_k(x,1) = x(1+x) / (1-kx^2)`.
    QkAtOne { k: i64 },
    /// `F_k(x,q) = (1+qx) / ((1-kq^2x^2)(1+qx-x^2))`: coefficients
    /// `B_{k,s}(q)`.
    Fk { k: i64 },
    /// `CF_k(x,q) = (1-qx)(qx+x^2) / ((1-kq^2x^2)(1-qx-x^2))`: coefficients
    /// `B~_{k,s}(q)`.
    CFk { k: i64 },
    /// `1 / ((1-kx^2)(1+x)^(t-1))` for `t >= 1`: column `t` of the
    /// k-analogue triangle, shifted by `t`.
    AkColumn { k: i64, t: u32 },
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GenFunError {
    #[error("parameter k must be nonzero")]
    ZeroK,
    #[error("parameter t must be >= 1 for this entry")]
    ColumnIndex,
}

fn q() -> Poly {
    Poly::variable()
}

/// `1 + c*x`.
fn one_plus_cx(c: i64) -> BiPoly {
    BiPoly::from_coeffs(vec![Poly::one(), Poly::constant(c)])
}

/// `1 + p(q)*x`.
fn one_plus_px(p: Poly) -> BiPoly {
    BiPoly::from_coeffs(vec![Poly::one(), p])
}

/// `1 + c*q^2*x^2`.
fn one_plus_cq2x2(c: i64) -> BiPoly {
    BiPoly::from_coeffs(vec![
        Poly::one(),
        Poly::zero(),
        Poly::monomial(crate::ExactInt::from(c), 2),
    ])
}

/// Build the registry entry as an exact numerator/denominator pair.
pub fn build(id: GfId) -> Result<RationalGF, GenFunError> {
    let gf = match id {
        GfId::Column { t } => {
            let den = &one_plus_cx(-1) * &one_plus_cx(1).pow(t);
            RationalGF::new(BiPoly::one(), den)
        }
        GfId::CompanionColumn { t } => {
            let den = &one_plus_cx(1) * &one_plus_cx(-1).pow(t);
            RationalGF::new(BiPoly::one(), den)
        }
        GfId::F => {
            let den = &one_plus_cx(-1)
                * &BiPoly::from_coeffs(vec![Poly::one(), Poly::one(), Poly::constant(-1)]);
            RationalGF::new(BiPoly::one(), den)
        }
        GfId::Fq => {
            let den = &one_plus_px(-q())
                * &BiPoly::from_coeffs(vec![Poly::one(), q(), Poly::constant(-1)]);
            RationalGF::new(BiPoly::one(), den)
        }
        GfId::CFq => {
            let num = BiPoly::from_coeffs(vec![Poly::zero(), q(), Poly::one()]);
            let den = &one_plus_px(q())
                * &BiPoly::from_coeffs(vec![Poly::one(), -&q(), Poly::constant(-1)]);
            RationalGF::new(num, den)
        }
        GfId::Q => {
            let num = BiPoly::monomial(Poly::one(), 1);
            let den = &one_plus_px(-q()) * &one_plus_px(Poly::from_ints(&[-1, 1]));
            RationalGF::new(num, den)
        }
        GfId::QMinus => {
            let num = BiPoly::monomial(Poly::one(), 1);
            let den = &one_plus_px(q()) * &one_plus_px(Poly::from_ints(&[-1, -1]));
            RationalGF::new(num, den)
        }
        GfId::FibPoly => {
            let den = BiPoly::from_coeffs(vec![Poly::one(), -&q(), Poly::constant(-1)]);
            RationalGF::new(BiPoly::one(), den)
        }
        GfId::Qk { k } => {
            require_k(k)?;
            let num = BiPoly::from_coeffs(vec![Poly::zero(), Poly::one(), q()]);
            let den = &one_plus_cq2x2(-k) * &one_plus_px(Poly::from_ints(&[-1, 1]));
            RationalGF::new(num, den)
        }
        GfId::QkAtOne { k } => {
            require_k(k)?;
            let num = BiPoly::from_coeffs(vec![Poly::zero(), Poly::one(), Poly::one()]);
            let den = BiPoly::from_coeffs(vec![Poly::one(), Poly::zero(), Poly::constant(-k)]);
            RationalGF::new(num, den)
        }
        GfId::Fk { k } => {
            require_k(k)?;
            let num = one_plus_px(q());
            let den = &one_plus_cq2x2(-k)
                * &BiPoly::from_coeffs(vec![Poly::one(), q(), Poly::constant(-1)]);
            RationalGF::new(num, den)
        }
        GfId::CFk { k } => {
            require_k(k)?;
            let num =
                &one_plus_px(-q()) * &BiPoly::from_coeffs(vec![Poly::zero(), q(), Poly::one()]);
            let den = &one_plus_cq2x2(-k)
                * &BiPoly::from_coeffs(vec![Poly::one(), -&q(), Poly::constant(-1)]);
            RationalGF::new(num, den)
        }
        GfId::AkColumn { k, t } => {
            require_k(k)?;
            if t < 1 {
                return Err(GenFunError::ColumnIndex);
            }
            let kx2 = BiPoly::from_coeffs(vec![Poly::one(), Poly::zero(), Poly::constant(-k)]);
            let den = &kx2 * &one_plus_cx(1).pow(t - 1);
            RationalGF::new(BiPoly::one(), den)
        }
    };
    Ok(gf.expect("registry denominators all have unit constant term"))
}

fn require_k(k: i64) -> Result<(), GenFunError> {
    if k == 0 {
        Err(GenFunError::ZeroK)
    } else {
        Ok(())
    }
}

/// Exact `x`-coefficients of a registry entry up to `order`.
pub fn coefficient_stream(id: GfId, order: usize) -> Result<Vec<Poly>, GenFunError> {
    Ok(build(id)?.expand(order))
}

/// A representative finite sample of the registry for exhaustive tests:
/// every unparameterized entry plus small parameter choices.
pub fn sample_ids() -> Vec<GfId> {
    let mut ids = vec![
        GfId::F,
        GfId::Fq,
        GfId::CFq,
        GfId::Q,
        GfId::QMinus,
        GfId::FibPoly,
    ];
    for t in 0..=6 {
        ids.push(GfId::Column { t });
        ids.push(GfId::CompanionColumn { t });
    }
    for k in [-3, -2, -1, 1, 2, 3] {
        ids.push(GfId::Qk { k });
        ids.push(GfId::QkAtOne { k });
        ids.push(GfId::Fk { k });
        ids.push(GfId::CFk { k });
        for t in 1..=4 {
            ids.push(GfId::AkColumn { k, t });
        }
    }
    ids
}
