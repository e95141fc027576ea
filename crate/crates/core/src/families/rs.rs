//! Riccati–Schrödinger functions w = −φ′/φ with φ = exp(prefactor)·D(t(x)).

use serde::Serialize;

use super::spec::{Domain, FamilySpec};
use super::symmetry::gamma_map;
use crate::error::{Error, Result};
use crate::polynomials::{
    hermite_imaginary_as_laguerre, hermite_poly, laguerre_poly, real_roots, Polynomial, Variable,
};

/// log of the non-polynomial factor: p·ln x + l·x + q·x² + c·e^{−r·x}.
#[derive(Debug, Clone, Copy, Default, PartialEq, Serialize)]
pub struct LogPrefactor {
    pub log_power: f64,
    pub linear: f64,
    pub quadratic: f64,
    pub exp_coeff: f64,
    pub exp_rate: f64,
}

impl LogPrefactor {
    pub fn value(&self, x: f64) -> f64 {
        let mut v = self.linear * x + self.quadratic * x * x;
        if self.log_power != 0.0 {
            v += self.log_power * x.ln();
        }
        if self.exp_coeff != 0.0 {
            v += self.exp_coeff * (-self.exp_rate * x).exp();
        }
        v
    }

    pub fn derivative(&self, x: f64) -> f64 {
        let mut d = self.linear + 2.0 * self.quadratic * x;
        if self.log_power != 0.0 {
            d += self.log_power / x;
        }
        if self.exp_coeff != 0.0 {
            d -= self.exp_coeff * self.exp_rate * (-self.exp_rate * x).exp();
        }
        d
    }

    pub fn second_derivative(&self, x: f64) -> f64 {
        let mut d = 2.0 * self.quadratic;
        if self.log_power != 0.0 {
            d -= self.log_power / (x * x);
        }
        if self.exp_coeff != 0.0 {
            d += self.exp_coeff * self.exp_rate * self.exp_rate * (-self.exp_rate * x).exp();
        }
        d
    }

    pub fn negated(&self) -> Self {
        LogPrefactor {
            log_power: -self.log_power,
            linear: -self.linear,
            quadratic: -self.quadratic,
            exp_coeff: -self.exp_coeff,
            exp_rate: self.exp_rate,
        }
    }

    pub fn add(&self, other: &LogPrefactor) -> Self {
        assert!(
            self.exp_coeff == 0.0 || other.exp_coeff == 0.0 || self.exp_rate == other.exp_rate,
            "exponential rates differ"
        );
        let rate = if self.exp_coeff != 0.0 { self.exp_rate } else { other.exp_rate };
        LogPrefactor {
            log_power: self.log_power + other.log_power,
            linear: self.linear + other.linear,
            quadratic: self.quadratic + other.quadratic,
            exp_coeff: self.exp_coeff + other.exp_coeff,
            exp_rate: rate,
        }
    }
}

/// Map from x to the argument t of a polynomial.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub enum ArgumentMap {
    /// t = scale·x
    Linear { scale: f64 },
    /// t = scale·e^{−rate·x}
    Exponential { scale: f64, rate: f64 },
}

impl ArgumentMap {
    pub const IDENTITY: ArgumentMap = ArgumentMap::Linear { scale: 1.0 };

    /// (t, dt/dx, d²t/dx²)
    pub fn eval(&self, x: f64) -> (f64, f64, f64) {
        match *self {
            ArgumentMap::Linear { scale } => (scale * x, scale, 0.0),
            ArgumentMap::Exponential { scale, rate } => {
                let t = scale * (-rate * x).exp();
                (t, -rate * t, rate * rate * t)
            }
        }
    }

    pub fn inverse(&self, t: f64) -> f64 {
        match *self {
            ArgumentMap::Linear { scale } => t / scale,
            ArgumentMap::Exponential { scale, rate } => -(t / scale).ln() / rate,
        }
    }

    /// Open t-interval covered when x ranges over `domain`.
    pub fn image(&self, domain: Domain) -> (f64, f64) {
        let (a, b) = match *self {
            ArgumentMap::Linear { scale } => (scale * domain.lo, scale * domain.hi),
            ArgumentMap::Exponential { scale, rate } => (
                scale * (-rate * domain.hi).exp(),
                scale * (-rate * domain.lo).exp(),
            ),
        };
        let (a, b) = if a <= b { (a, b) } else { (b, a) };
        // 0·∞ from a zero domain endpoint
        (if a.is_nan() { 0.0 } else { a }, if b.is_nan() { 0.0 } else { b })
    }
}

/// Polynomial composed with an argument map: x ↦ P(t(x)).
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MappedPolynomial {
    pub polynomial: Polynomial,
    pub argument: ArgumentMap,
}

impl MappedPolynomial {
    pub fn new(polynomial: Polynomial, argument: ArgumentMap) -> Self {
        Self { polynomial, argument }
    }

    pub fn eval(&self, x: f64) -> f64 {
        self.polynomial.eval(self.argument.eval(x).0)
    }

    /// (P, dP/dx, d²P/dx²) at x.
    pub fn eval_with_derivatives(&self, x: f64) -> (f64, f64, f64) {
        let (t, t1, t2) = self.argument.eval(x);
        let (p, dp, ddp) = self.polynomial.eval_with_derivatives(t);
        (p, dp * t1, ddp * t1 * t1 + dp * t2)
    }

    /// (ln|P(t(x))|, sign).
    pub fn log_abs_eval(&self, x: f64) -> (f64, f64) {
        self.polynomial.log_abs_eval(self.argument.eval(x).0)
    }

    /// The same function with the argument scale folded into the polynomial, so that
    /// t = x (linear) or t = e^{−rate·x} (exponential).
    pub fn canonical(&self) -> MappedPolynomial {
        match self.argument {
            ArgumentMap::Linear { scale } => MappedPolynomial::new(
                self.polynomial.scale_argument(scale).with_var(Variable::X),
                ArgumentMap::IDENTITY,
            ),
            ArgumentMap::Exponential { scale, rate } => MappedPolynomial::new(
                self.polynomial.scale_argument(scale).with_var(Variable::Y),
                ArgumentMap::Exponential { scale: 1.0, rate },
            ),
        }
    }

    /// Zeros in the open domain, ascending in x.
    pub fn zeros_in(&self, domain: Domain) -> Result<Vec<f64>> {
        if self.polynomial.degree() == 0 {
            return Ok(Vec::new());
        }
        let (lo, hi) = self.argument.image(domain);
        let mut xs: Vec<f64> = real_roots(&self.polynomial, lo, hi)?
            .into_iter()
            .map(|t| self.argument.inverse(t))
            .filter(|x| domain.contains(*x))
            .collect();
        xs.sort_by(|a, b| a.partial_cmp(b).unwrap());
        Ok(xs)
    }
}

/// w = −φ′/φ where φ = exp(prefactor)·D(t(x)).
///
/// `family` is the unmapped family whose potential V enters the RS equation
/// −w′ + w² = V − energy.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RsFunction {
    pub family: FamilySpec,
    pub level: usize,
    pub regularized: bool,
    pub energy: f64,
    pub prefactor: LogPrefactor,
    pub denominator: MappedPolynomial,
}

impl RsFunction {
    /// Closed-form part −(prefactor)′.
    pub fn base_value(&self, x: f64) -> f64 {
        -self.prefactor.derivative(x)
    }

    pub fn value(&self, x: f64) -> f64 {
        let (d, d1, _) = self.denominator.eval_with_derivatives(x);
        -self.prefactor.derivative(x) - d1 / d
    }

    /// (w, w′)
    pub fn value_and_derivative(&self, x: f64) -> (f64, f64) {
        let (d, d1, d2) = self.denominator.eval_with_derivatives(x);
        let q = d1 / d;
        let w = -self.prefactor.derivative(x) - q;
        let dw = -self.prefactor.second_derivative(x) - (d2 / d - q * q);
        (w, dw)
    }

    pub fn derivative(&self, x: f64) -> f64 {
        self.value_and_derivative(x).1
    }

    /// −w′ + w² − (V − E) at x.
    pub fn riccati_residual(&self, x: f64) -> Result<f64> {
        let (w, dw) = self.value_and_derivative(x);
        let v = self.family.potential_value(x)?;
        Ok(-dw + w * w - (v - self.energy))
    }

    /// φ(x) = exp(prefactor)·D(t(x)).
    pub fn amplitude(&self, x: f64) -> f64 {
        self.prefactor.value(x).exp() * self.denominator.eval(x)
    }

    /// Zeros of D inside the family domain, i.e. the poles of w.
    pub fn poles(&self) -> Result<Vec<f64>> {
        self.denominator.zeros_in(self.family.domain())
    }

    pub fn poles_in(&self, domain: Domain) -> Result<Vec<f64>> {
        self.denominator.zeros_in(domain)
    }
}

/// The level-k RS function at the given parameters, without bound-state checks.
/// Parameters may be a symmetry image.
pub(crate) fn rs_at_params(params: &FamilySpec, k: usize) -> Result<(LogPrefactor, MappedPolynomial)> {
    match *params {
        FamilySpec::HarmonicOscillator { omega } => {
            let pre = LogPrefactor {
                quadratic: -omega / 4.0,
                ..Default::default()
            };
            let poly = if omega > 0.0 {
                hermite_poly(k).scale_argument((omega / 2.0).sqrt())
            } else {
                // H_k(i√(|ω|/2)x) up to a constant, kept real
                hermite_imaginary_as_laguerre(k).real_polynomial_in_x(-omega)
            };
            Ok((pre, MappedPolynomial::new(poly.with_var(Variable::X), ArgumentMap::IDENTITY)))
        }
        FamilySpec::Morse { a, b, alpha } => {
            let kf = k as f64;
            let pre = LogPrefactor {
                linear: -(a - kf * alpha),
                exp_coeff: -b / alpha,
                exp_rate: alpha,
                ..Default::default()
            };
            let poly = laguerre_poly(k, 2.0 * (a / alpha - kf), 1.0).with_var(Variable::Z);
            let arg = ArgumentMap::Exponential {
                scale: 2.0 * b / alpha,
                rate: alpha,
            };
            Ok((pre, MappedPolynomial::new(poly, arg)))
        }
        FamilySpec::Erkc { a, gamma } => {
            let ak = a + k as f64;
            if ak == 0.0 {
                return Err(Error::SingularEnergy { k: k as i64 });
            }
            let pre = LogPrefactor {
                log_power: a,
                linear: -gamma / (2.0 * ak),
                ..Default::default()
            };
            let poly = laguerre_poly(k, 2.0 * a - 1.0, 1.0).with_var(Variable::T);
            let arg = ArgumentMap::Linear { scale: gamma / ak };
            Ok((pre, MappedPolynomial::new(poly, arg)))
        }
    }
}

/// Physical RS function w_k of the bound state ψ_k.
pub fn rs_physical(f: &FamilySpec, k: usize) -> Result<RsFunction> {
    f.validate()?;
    f.check_bound_state(k)?;
    let (prefactor, denominator) = rs_at_params(f, k)?;
    Ok(RsFunction {
        family: *f,
        level: k,
        regularized: false,
        energy: f.base_energy(k as i64)?,
        prefactor,
        denominator,
    })
}

/// Regularized RS function v_n = w_n at the symmetry-mapped parameters, at energy
/// E_{−(n+1)} of the original family.
pub fn rs_regularized(f: &FamilySpec, n: usize) -> Result<RsFunction> {
    f.validate()?;
    let image = gamma_map(f);
    let (prefactor, denominator) = rs_at_params(&image.mapped, n)?;
    Ok(RsFunction {
        family: *f,
        level: n,
        regularized: true,
        energy: f.base_energy(-(n as i64 + 1))?,
        prefactor,
        denominator,
    })
}

/// Ground-state RS function w_0(x) at shifted parameter a_k.
fn shifted_ground_rs(params: &FamilySpec, k: usize, x: f64) -> f64 {
    match *params {
        FamilySpec::HarmonicOscillator { omega } => omega * x / 2.0,
        FamilySpec::Morse { a, b, alpha } => {
            a - k as f64 * alpha - b * (-alpha * x).exp()
        }
        FamilySpec::Erkc { a, gamma } => {
            let ak = a + k as f64;
            -ak / x + gamma / (2.0 * ak)
        }
    }
}

const POLE_THRESHOLD: f64 = 1e-12;

/// R_n (or Q_n when `regularized`) from the terminating continued fraction,
/// evaluated from the innermost level outward.
///
/// R_n = w_n − w_0. Q_n = v_n − v_0 is the same fraction at the mapped parameters.
pub fn rs_continued_fraction_eval(
    f: &FamilySpec,
    n: usize,
    x: f64,
    regularized: bool,
) -> Result<f64> {
    f.validate()?;
    if let FamilySpec::Erkc { .. } = f {
        if !(x > 0.0) {
            return Err(Error::Domain { x, family: "erkc" });
        }
    }
    let params = if regularized { gamma_map(f).mapped } else { *f };
    let en = params.base_energy(n as i64)?;
    let mut t = 0.0;
    for j in (1..=n).rev() {
        let den = shifted_ground_rs(&params, j - 1, x) + shifted_ground_rs(&params, j, x) - t;
        if den.abs() < POLE_THRESHOLD {
            return Err(Error::PoleHit { x });
        }
        t = (en - params.base_energy(j as i64 - 1)?) / den;
    }
    Ok(-t)
}
