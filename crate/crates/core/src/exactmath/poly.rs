//! Dense univariate polynomials over [`ExactInt`].

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::ExactInt;

/// Dense univariate polynomial with exact integer coefficients.
///
/// `coeffs[i]` is the coefficient of the `i`-th power of the variable.
/// Normalized form: the highest-index coefficient is nonzero, or the vector
/// is empty (the zero polynomial). The degree of the zero polynomial is
/// `None`, never an integer.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    coeffs: Vec<ExactInt>,
}

impl Poly {
    /// The zero polynomial.
    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    /// The constant polynomial 1.
    pub fn one() -> Self {
        Poly::constant(ExactInt::one())
    }

    /// A constant polynomial.
    pub fn constant(c: impl Into<ExactInt>) -> Self {
        Poly::from_coeffs(vec![c.into()])
    }

    /// The bare variable (`q`, say).
    pub fn variable() -> Self {
        Poly::monomial(ExactInt::one(), 1)
    }

    /// `c * var^power`.
    pub fn monomial(c: impl Into<ExactInt>, power: usize) -> Self {
        let c = c.into();
        if c.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![ExactInt::zero(); power + 1];
        coeffs[power] = c;
        Poly { coeffs }
    }

    /// Build from a coefficient vector (index = power), trimming trailing
    /// zeros.
    pub fn from_coeffs(mut coeffs: Vec<ExactInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    /// Convenience constructor from machine integers, index = power.
    pub fn from_ints(coeffs: &[i64]) -> Self {
        Poly::from_coeffs(coeffs.iter().map(|&c| ExactInt::from(c)).collect())
    }

    /// Coefficient slice, lowest power first. Empty for the zero polynomial.
    pub fn coeffs(&self) -> &[ExactInt] {
        &self.coeffs
    }

    /// Coefficient of the `i`-th power (zero beyond the degree).
    pub fn coeff(&self, i: usize) -> ExactInt {
        self.coeffs.get(i).cloned().unwrap_or_else(ExactInt::zero)
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Evaluate at an integer point by Horner's scheme.
    pub fn eval(&self, v: &ExactInt) -> ExactInt {
        let mut acc = ExactInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * v + c;
        }
        acc
    }

    /// Substitute the negated variable: `p(t) -> p(-t)`.
    pub fn compose_neg(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| if i % 2 == 1 { -c } else { c.clone() })
            .collect();
        // Negation cannot introduce a trailing zero.
        Poly { coeffs }
    }

    /// Multiply by `var^k`.
    pub fn mul_xpow(&self, k: usize) -> Self {
        if self.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![ExactInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Poly { coeffs }
    }

    /// Coefficient-wise absolute value.
    pub fn abs_coeffs(&self) -> Self {
        Poly {
            coeffs: self.coeffs.iter().map(Signed::abs).collect(),
        }
    }

    /// Canonical descending-power rendering, e.g.
    /// `q^4 - 2*q^3 + 4*q^2 - 3*q + 1`.
    pub fn render(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (pos, (power, c)) in self
            .coeffs
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, c)| !c.is_zero())
            .enumerate()
        {
            let mag = c.abs();
            if pos == 0 {
                if c.is_negative() {
                    out.push('-');
                }
            } else if c.is_negative() {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            out.push_str(&term_body(&mag, power, var));
        }
        out
    }

    /// Decimal strings of the coefficients, index = power.
    pub fn coeff_strings(&self) -> Vec<String> {
        self.coeffs.iter().map(|c| c.to_string()).collect()
    }
}

fn term_body(mag: &ExactInt, power: usize, var: &str) -> String {
    match power {
        0 => mag.to_string(),
        _ => {
            let var_pow = if power == 1 {
                var.to_string()
            } else {
                format!("{var}^{power}")
            };
            if mag.is_one() {
                var_pow
            } else {
                format!("{mag}*{var_pow}")
            }
        }
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({})", self.render("q"))
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render("q"))
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            let mut c = self.coeffs.get(i).cloned().unwrap_or_else(ExactInt::zero);
            if let Some(r) = rhs.coeffs.get(i) {
                c += r;
            }
            coeffs.push(c);
        }
        Poly::from_coeffs(coeffs)
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        self + &(-rhs)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![ExactInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        // Leading coefficients are nonzero, so no trim is needed over ZZ.
        Poly { coeffs }
    }
}

macro_rules! forward_owned_binop {
    ($Op:ident, $op:ident) => {
        impl $Op for Poly {
            type Output = Poly;
            fn $op(self, rhs: Poly) -> Poly {
                (&self).$op(&rhs)
            }
        }
        impl $Op<&Poly> for Poly {
            type Output = Poly;
            fn $op(self, rhs: &Poly) -> Poly {
                (&self).$op(rhs)
            }
        }
    };
}
forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}
