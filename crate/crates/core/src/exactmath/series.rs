//! Bivariate polynomials and exact power-series expansion of rational
//! functions.
//!
//! A [`BiPoly`] is a polynomial in `x` whose coefficients are [`Poly`]s in
//! `q`. A [`RationalGF`] is a ratio of two of them; as long as the
//! denominator has `x`-constant term 1, the quotient is a power series in
//! `x` with integer-polynomial coefficients, computed exactly by the linear
//! recurrence the denominator induces.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{Signed, Zero};

use super::{ExactMathError, Poly};

/// Polynomial in `x` with [`Poly`]-in-`q` coefficients.
///
/// `coeffs[i]` is the coefficient of `x^i`; trailing zero polynomials are
/// trimmed.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct BiPoly {
    coeffs: Vec<Poly>,
}

impl BiPoly {
    pub fn zero() -> Self {
        BiPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        BiPoly::constant(Poly::one())
    }

    /// Constant (in `x`) polynomial.
    pub fn constant(p: Poly) -> Self {
        BiPoly::from_coeffs(vec![p])
    }

    /// `p(q) * x^power`.
    pub fn monomial(p: Poly, power: usize) -> Self {
        if p.is_zero() {
            return BiPoly::zero();
        }
        let mut coeffs = vec![Poly::zero(); power + 1];
        coeffs[power] = p;
        BiPoly { coeffs }
    }

    /// Build from `x`-coefficients (index = power of `x`), trimming trailing
    /// zeros.
    pub fn from_coeffs(mut coeffs: Vec<Poly>) -> Self {
        while coeffs.last().is_some_and(Poly::is_zero) {
            coeffs.pop();
        }
        BiPoly { coeffs }
    }

    /// `x`-coefficients, lowest power first.
    pub fn coeffs(&self) -> &[Poly] {
        &self.coeffs
    }

    /// Coefficient of `x^i` (zero polynomial beyond the degree).
    pub fn coeff(&self, i: usize) -> Poly {
        self.coeffs.get(i).cloned().unwrap_or_else(Poly::zero)
    }

    /// Degree in `x`, or `None` for zero.
    pub fn x_degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Multiply by `x^k`.
    pub fn mul_xpow(&self, k: usize) -> Self {
        if self.is_zero() {
            return BiPoly::zero();
        }
        let mut coeffs = vec![Poly::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        BiPoly { coeffs }
    }

    /// Small integer power by repeated multiplication.
    pub fn pow(&self, e: u32) -> Self {
        let mut acc = BiPoly::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Substitute `x -> -x`.
    pub fn compose_neg_x(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(i, p)| if i % 2 == 1 { -p } else { p.clone() })
            .collect();
        BiPoly { coeffs }
    }

    /// Rendering with ascending `x`-powers, e.g. `1 + (q - 1)*x - 2*q^2*x^2`.
    pub fn render(&self, xvar: &str, qvar: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        let mut first = true;
        for (power, p) in self.coeffs.iter().enumerate() {
            if p.is_zero() {
                continue;
            }
            let (negated, body) = xterm_body(p, power, xvar, qvar);
            if first {
                if negated {
                    out.push('-');
                }
                first = false;
            } else if negated {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            out.push_str(&body);
        }
        out
    }
}

/// Renders one `p(q) * x^power` term; returns (sign-pulled-out, body).
fn xterm_body(p: &Poly, power: usize, xvar: &str, qvar: &str) -> (bool, String) {
    let xpart = match power {
        0 => String::new(),
        1 => xvar.to_string(),
        _ => format!("{xvar}^{power}"),
    };
    let nonzero = p.coeffs().iter().filter(|c| !c.is_zero()).count();
    if nonzero == 1 {
        // Single monomial in q: inline it, pulling the sign out.
        let (i, c) = p
            .coeffs()
            .iter()
            .enumerate()
            .find(|(_, c)| !c.is_zero())
            .expect("nonzero poly");
        let mag = Poly::monomial(c.abs(), i);
        let rendered = mag.render(qvar);
        let body = match (rendered.as_str(), xpart.is_empty()) {
            ("1", false) => xpart,
            (_, false) => format!("{rendered}*{xpart}"),
            (_, true) => rendered,
        };
        (c.is_negative(), body)
    } else if xpart.is_empty() {
        (false, p.render(qvar))
    } else {
        (false, format!("({})*{}", p.render(qvar), xpart))
    }
}

impl fmt::Debug for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BiPoly({})", self.render("x", "q"))
    }
}

impl Add for &BiPoly {
    type Output = BiPoly;
    fn add(self, rhs: &BiPoly) -> BiPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            let mut c = self.coeffs.get(i).cloned().unwrap_or_else(Poly::zero);
            if let Some(r) = rhs.coeffs.get(i) {
                c = &c + r;
            }
            coeffs.push(c);
        }
        BiPoly::from_coeffs(coeffs)
    }
}

impl Sub for &BiPoly {
    type Output = BiPoly;
    fn sub(self, rhs: &BiPoly) -> BiPoly {
        self + &(-rhs)
    }
}

impl Neg for &BiPoly {
    type Output = BiPoly;
    fn neg(self) -> BiPoly {
        BiPoly {
            coeffs: self.coeffs.iter().map(|p| -p).collect(),
        }
    }
}

impl Mul for &BiPoly {
    type Output = BiPoly;
    fn mul(self, rhs: &BiPoly) -> BiPoly {
        if self.is_zero() || rhs.is_zero() {
            return BiPoly::zero();
        }
        let mut coeffs = vec![Poly::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] = &coeffs[i + j] + &(a * b);
            }
        }
        BiPoly::from_coeffs(coeffs)
    }
}

/// Ratio of two [`BiPoly`]s representing a rational generating function in
/// `x` over `Z[q]`.
///
/// Invariant: the denominator's `x^0` coefficient is the constant polynomial
/// 1, which guarantees the power-series coefficients stay in `Z[q]`.
#[derive(Clone, PartialEq, Eq)]
pub struct RationalGF {
    num: BiPoly,
    den: BiPoly,
}

impl RationalGF {
    /// Build a rational generating function, validating the denominator
    /// invariant.
    pub fn new(num: BiPoly, den: BiPoly) -> Result<Self, ExactMathError> {
        if den.coeff(0) != Poly::one() {
            return Err(ExactMathError::InvalidDenominator);
        }
        Ok(RationalGF { num, den })
    }

    pub fn numerator(&self) -> &BiPoly {
        &self.num
    }

    pub fn denominator(&self) -> &BiPoly {
        &self.den
    }

    /// Expand as a power series in `x`, returning the coefficients of
    /// `x^0 ..= x^order`.
    ///
    /// With denominator `1 + d_1 x + ... + d_r x^r` the series `S = N / D`
    /// satisfies `c_j = n_j - sum_{i=1..min(j,r)} d_i c_{j-i}`, which is what
    /// is computed here; every step is exact in `Z[q]`.
    pub fn expand(&self, order: usize) -> Vec<Poly> {
        let den = self.den.coeffs();
        let mut out: Vec<Poly> = Vec::with_capacity(order + 1);
        for j in 0..=order {
            let mut c = self.num.coeff(j);
            for i in 1..den.len().min(j + 1) {
                c = &c - &(&den[i] * &out[j - i]);
            }
            out.push(c);
        }
        out
    }

    pub fn render(&self, xvar: &str, qvar: &str) -> String {
        format!(
            "({}) / ({})",
            self.num.render(xvar, qvar),
            self.den.render(xvar, qvar)
        )
    }
}

impl fmt::Debug for RationalGF {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RationalGF({})", self.render("x", "q"))
    }
}
