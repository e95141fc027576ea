//! Dense real-coefficient univariate polynomials.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::Serialize;

/// Label of the canonical variable a polynomial is written in. Documentation only:
/// arithmetic never checks that two operands share a variable.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Variable {
    /// Physical coordinate.
    X,
    /// Harmonic-oscillator variable s = ωx²/2.
    S,
    /// Morse variable z = 2by (y = e^{-αx}).
    Z,
    /// Morse variable y = e^{-αx}.
    Y,
    /// Generic argument of a classical polynomial.
    T,
}

impl fmt::Display for Variable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Variable::X => "x",
            Variable::S => "s",
            Variable::Z => "z",
            Variable::Y => "y",
            Variable::T => "t",
        };
        f.write_str(s)
    }
}

/// Polynomial with coefficients stored in ascending degree.
///
/// Trailing zero coefficients are trimmed on construction so that `degree()` is the
/// index of the last nonzero coefficient. The zero polynomial is stored as `[0.0]`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Polynomial {
    coeffs: Vec<f64>,
    var: Variable,
}

/// Σ c_j t^{d−j} for coefficients given from the highest power down.
fn compensated_horner(coeffs: impl Iterator<Item = f64>, t: f64) -> f64 {
    let mut s = 0.0_f64;
    let mut err = 0.0_f64;
    for c in coeffs {
        let p = s * t;
        let pe = s.mul_add(t, -p);
        let r = p + c;
        let z = r - p;
        let se = (p - (r - z)) + (c - z);
        err = err.mul_add(t, pe + se);
        s = r;
    }
    s + err
}

impl Polynomial {
    pub fn new(mut coeffs: Vec<f64>) -> Self {
        while coeffs.len() > 1 && *coeffs.last().unwrap() == 0.0 {
            coeffs.pop();
        }
        if coeffs.is_empty() {
            coeffs.push(0.0);
        }
        Self {
            coeffs,
            var: Variable::T,
        }
    }

    pub fn with_var(mut self, var: Variable) -> Self {
        self.var = var;
        self
    }

    pub fn zero() -> Self {
        Self::new(vec![0.0])
    }

    pub fn constant(c: f64) -> Self {
        Self::new(vec![c])
    }

    pub fn monomial(degree: usize, c: f64) -> Self {
        let mut coeffs = vec![0.0; degree + 1];
        coeffs[degree] = c;
        Self::new(coeffs)
    }

    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    pub fn var(&self) -> Variable {
        self.var
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0] == 0.0
    }

    pub fn leading(&self) -> f64 {
        *self.coeffs.last().unwrap()
    }

    pub fn max_abs_coeff(&self) -> f64 {
        self.coeffs.iter().fold(0.0_f64, |m, c| m.max(c.abs()))
    }

    /// Compensated Horner: as accurate as plain Horner in doubled precision.
    pub fn eval(&self, t: f64) -> f64 {
        compensated_horner(self.coeffs.iter().rev().copied(), t)
    }

    /// Value, first and second derivative at `t` in one Horner sweep.
    pub fn eval_with_derivatives(&self, t: f64) -> (f64, f64, f64) {
        let mut p = 0.0;
        let mut dp = 0.0;
        let mut ddp = 0.0;
        for &c in self.coeffs.iter().rev() {
            ddp = ddp * t + 2.0 * dp;
            dp = dp * t + p;
            p = p * t + c;
        }
        (p, dp, ddp)
    }

    /// Σ|c_j||t|^j, the natural scale for judging cancellation in `eval(t)`.
    pub fn abs_eval(&self, t: f64) -> f64 {
        let at = t.abs();
        self.coeffs.iter().rev().fold(0.0, |acc, &c| acc * at + c.abs())
    }

    /// (ln|p(t)|, sign p(t)) without overflow for large |t|.
    pub fn log_abs_eval(&self, t: f64) -> (f64, f64) {
        if t.abs() <= 1.0 {
            let v = self.eval(t);
            return (v.abs().ln(), v.signum());
        }
        let d = self.degree();
        let u = 1.0 / t;
        // p(t) = t^d · Σ c_j u^{d−j}
        let q = compensated_horner(self.coeffs.iter().copied(), u);
        let sign = if d % 2 == 1 && t < 0.0 { -q.signum() } else { q.signum() };
        (d as f64 * t.abs().ln() + q.abs().ln(), sign)
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() == 1 {
            return Self::zero().with_var(self.var);
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(j, &c)| j as f64 * c)
            .collect();
        Self::new(coeffs).with_var(self.var)
    }

    pub fn scale(&self, factor: f64) -> Self {
        Self::new(self.coeffs.iter().map(|c| c * factor).collect()).with_var(self.var)
    }

    /// p(c·t) as a polynomial in t.
    pub fn scale_argument(&self, c: f64) -> Self {
        let mut pow = 1.0;
        let coeffs = self
            .coeffs
            .iter()
            .map(|&a| {
                let v = a * pow;
                pow *= c;
                v
            })
            .collect();
        Self::new(coeffs).with_var(self.var)
    }

    /// p(c·x²) as a polynomial in x.
    pub fn compose_square(&self, c: f64) -> Self {
        let mut coeffs = vec![0.0; 2 * self.degree() + 1];
        let mut pow = 1.0;
        for (j, &a) in self.coeffs.iter().enumerate() {
            coeffs[2 * j] = a * pow;
            pow *= c;
        }
        Self::new(coeffs).with_var(Variable::X)
    }

    /// Multiply by x^k.
    pub fn shift_up(&self, k: usize) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut coeffs = vec![0.0; k];
        coeffs.extend_from_slice(&self.coeffs);
        Self::new(coeffs).with_var(self.var)
    }

    /// t^d·p(1/t) for d ≥ degree: the coefficient-reversed polynomial padded to degree d.
    pub fn reversed(&self, d: usize) -> Self {
        assert!(d >= self.degree(), "reversal degree below polynomial degree");
        let mut coeffs = vec![0.0; d + 1];
        for (j, &c) in self.coeffs.iter().enumerate() {
            coeffs[d - j] = c;
        }
        Self::new(coeffs).with_var(self.var)
    }

    /// Quotient and remainder of division by `divisor`.
    pub fn div_rem(&self, divisor: &Polynomial) -> (Polynomial, Polynomial) {
        assert!(!divisor.is_zero(), "division by the zero polynomial");
        let dd = divisor.degree();
        if self.degree() < dd {
            return (Self::zero(), self.clone());
        }
        let mut rem = self.coeffs.clone();
        let lc = divisor.leading();
        let mut quot = vec![0.0; self.degree() - dd + 1];
        for i in (0..quot.len()).rev() {
            let q = rem[i + dd] / lc;
            quot[i] = q;
            for (j, &c) in divisor.coeffs.iter().enumerate() {
                rem[i + j] -= q * c;
            }
            rem[i + dd] = 0.0;
        }
        rem.truncate(dd.max(1));
        (
            Self::new(quot).with_var(self.var),
            Self::new(rem).with_var(self.var),
        )
    }

    /// Coefficientwise comparison relative to the larger max-abs coefficient.
    pub fn approx_eq(&self, other: &Polynomial, rel_tol: f64) -> bool {
        let scale = self.max_abs_coeff().max(other.max_abs_coeff());
        if scale == 0.0 {
            return true;
        }
        let n = self.coeffs.len().max(other.coeffs.len());
        (0..n).all(|j| {
            let a = self.coeffs.get(j).copied().unwrap_or(0.0);
            let b = other.coeffs.get(j).copied().unwrap_or(0.0);
            (a - b).abs() <= rel_tol * scale
        })
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (j, &c) in self.coeffs.iter().enumerate() {
            if c == 0.0 && self.coeffs.len() > 1 {
                continue;
            }
            if !first {
                f.write_str(if c < 0.0 { " - " } else { " + " })?;
            } else if c < 0.0 {
                f.write_str("-")?;
            }
            first = false;
            match j {
                0 => write!(f, "{}", c.abs())?,
                1 => write!(f, "{}{}", c.abs(), self.var)?,
                _ => write!(f, "{}{}^{}", c.abs(), self.var, j)?,
            }
        }
        Ok(())
    }
}

fn zip_with(a: &Polynomial, b: &Polynomial, op: impl Fn(f64, f64) -> f64) -> Polynomial {
    let n = a.coeffs.len().max(b.coeffs.len());
    let coeffs = (0..n)
        .map(|j| {
            op(
                a.coeffs.get(j).copied().unwrap_or(0.0),
                b.coeffs.get(j).copied().unwrap_or(0.0),
            )
        })
        .collect();
    Polynomial::new(coeffs).with_var(a.var)
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        zip_with(self, rhs, |a, b| a + b)
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        zip_with(self, rhs, |a, b| a - b)
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        let mut coeffs = vec![0.0; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Polynomial::new(coeffs).with_var(self.var)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        self.scale(-1.0)
    }
}

impl Add for Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: Polynomial) -> Polynomial {
        &self + &rhs
    }
}

impl Sub for Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: Polynomial) -> Polynomial {
        &self - &rhs
    }
}

impl Mul for Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: Polynomial) -> Polynomial {
        &self * &rhs
    }
}

impl Mul<f64> for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: f64) -> Polynomial {
        self.scale(rhs)
    }
}

impl Mul<f64> for Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: f64) -> Polynomial {
        self.scale(rhs)
    }
}
