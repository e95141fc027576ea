//! Closed-form eigenstates of the extended potentials.

use serde::Serialize;

use super::extension::ExtendedPotential;
use super::polys::{erkc_case, generic_state, m_polynomial, n_polynomial, p_polynomial};
use super::spectrum::Level;
use crate::error::{Error, Result};
use crate::families::{ArgumentMap, Domain, FamilySpec, LogPrefactor, MappedPolynomial};
use crate::oracle::integrate_with_error;
use crate::polynomials::{laguerre_poly, Polynomial, Variable};

/// Which representation the numerator uses.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum NumeratorForm {
    /// P_(m,k), M_{a,k}^{(2m)} or N_{a,k}^{(n)}.
    Named,
    /// Built directly from (v_n − w_k)ψ_k.
    Generic,
    /// The extra state: numerator 1.
    Unit,
}

/// ψ(x) = exp(prefactor(x))·N(t(x))/D(t(x)), unnormalized.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ClosedFormEigenstate {
    pub level: Level,
    pub energy: f64,
    pub prefactor: LogPrefactor,
    pub numerator: MappedPolynomial,
    pub denominator: MappedPolynomial,
    pub form: NumeratorForm,
    pub domain: Domain,
}

impl ClosedFormEigenstate {
    /// (ln|ψ(x)|, sign ψ(x)).
    pub fn log_abs(&self, x: f64) -> (f64, f64) {
        let lp = self.prefactor.value(x);
        if lp == f64::NEG_INFINITY || !x.is_finite() {
            return (lp, 1.0);
        }
        let (ln, sn) = self.numerator.log_abs_eval(x);
        let (ld, sd) = self.denominator.log_abs_eval(x);
        (lp + ln - ld, sn * sd)
    }

    pub fn value(&self, x: f64) -> f64 {
        let (l, s) = self.log_abs(x);
        s * l.exp()
    }

    /// (ψ′/ψ, (ψ′/ψ)′).
    pub fn log_derivatives(&self, x: f64) -> (f64, f64) {
        let (n, n1, n2) = self.numerator.eval_with_derivatives(x);
        let (d, d1, d2) = self.denominator.eval_with_derivatives(x);
        let (rn, rd) = (n1 / n, d1 / d);
        let l1 = self.prefactor.derivative(x) + rn - rd;
        let l2 = self.prefactor.second_derivative(x) + n2 / n - rn * rn - d2 / d + rd * rd;
        (l1, l2)
    }

    /// RS function w = −ψ′/ψ and its derivative.
    pub fn rs_value_and_derivative(&self, x: f64) -> (f64, f64) {
        let (l1, l2) = self.log_derivatives(x);
        (-l1, -l2)
    }

    /// ∫|ψ|² over the domain, by adaptive quadrature at relative tolerance 1e-12.
    pub fn norm_squared(&self) -> Result<f64> {
        let r = integrate_with_error(
            |x| {
                let (l, _) = self.log_abs(x);
                (2.0 * l).exp()
            },
            self.domain.lo,
            self.domain.hi,
            1e-12,
        )?;
        if !(r.value.is_finite() && r.value > 0.0) {
            return Err(Error::QuadratureNonConvergence { estimate: r.value, error: r.error });
        }
        Ok(r.value)
    }

    /// Degree of the numerator polynomial.
    pub fn numerator_degree(&self) -> usize {
        self.numerator.polynomial.degree()
    }
}

fn named_state(
    ext: &ExtendedPotential,
    k: usize,
) -> Result<Option<(LogPrefactor, MappedPolynomial, MappedPolynomial)>> {
    let n = ext.n;
    let kf = k as f64;
    match ext.family {
        FamilySpec::HarmonicOscillator { omega } if n >= 2 && n % 2 == 0 => {
            let p = p_polynomial(n / 2, k, omega)?;
            let pre = LogPrefactor {
                quadratic: -omega / 4.0,
                ..Default::default()
            };
            Ok(Some((pre, MappedPolynomial::new(p, ArgumentMap::IDENTITY), ext.v.denominator.clone())))
        }
        FamilySpec::Morse { a, b, alpha } if alpha == 1.0 && n >= 2 && n % 2 == 0 => {
            let m = n / 2;
            let z = ArgumentMap::Exponential { scale: 2.0 * b, rate: 1.0 };
            let num = m_polynomial(a, k, m)?;
            let beta = -2.0 * (a + n as f64 + 1.0);
            let den = laguerre_poly(n, beta, -1.0).with_var(Variable::Z);
            // z^{a−k}e^{−z/2} up to a constant
            let pre = LogPrefactor {
                linear: -(a - kf),
                exp_coeff: -b,
                exp_rate: 1.0,
                ..Default::default()
            };
            Ok(Some((pre, MappedPolynomial::new(num, z), MappedPolynomial::new(den, z))))
        }
        FamilySpec::Erkc { a, gamma } if n >= 1 && erkc_case(a, n).is_some() => {
            let num = n_polynomial(a, k, n, gamma)?;
            let pre = LogPrefactor {
                log_power: a - 1.0,
                linear: -gamma / (2.0 * (a + kf)),
                ..Default::default()
            };
            Ok(Some((pre, MappedPolynomial::new(num, ArgumentMap::IDENTITY), ext.v.denominator.clone())))
        }
        _ => Ok(None),
    }
}

/// ψ_k^{(n)} in the generic form, whatever the family and parameters.
pub fn generic_eigenstate(ext: &ExtendedPotential, k: usize) -> Result<ClosedFormEigenstate> {
    let f = &ext.family;
    f.check_bound_state(k)?;
    let (prefactor, numerator, denominator) = generic_state(f, ext.n, k)?;
    Ok(ClosedFormEigenstate {
        level: Level::Physical(k),
        energy: f.base_energy(k as i64)?,
        prefactor,
        numerator,
        denominator,
        form: NumeratorForm::Generic,
        domain: ext.domain,
    })
}

/// Eigenstate of V^{(n)} at level k (energy E_k) or at the extra level E_{−(n+1)}.
pub fn extended_eigenstate(ext: &ExtendedPotential, level: Level) -> Result<ClosedFormEigenstate> {
    let f = &ext.family;
    match level {
        Level::Extra => {
            if ext.spectrum.strict {
                return Err(Error::NoExtraState);
            }
            Ok(ClosedFormEigenstate {
                level,
                energy: f.base_energy(-(ext.n as i64 + 1))?,
                prefactor: ext.v.prefactor.negated(),
                numerator: MappedPolynomial::new(Polynomial::constant(1.0), ArgumentMap::IDENTITY),
                denominator: ext.v.denominator.clone(),
                form: NumeratorForm::Unit,
                domain: ext.domain,
            })
        }
        Level::Physical(k) => {
            f.check_bound_state(k)?;
            if matches!(f, FamilySpec::HarmonicOscillator { .. }) && ext.n % 2 == 1 && k % 2 == 0 {
                return Err(Error::InvalidParameter(format!(
                    "level {k} is not an eigenstate of the odd-n extension on x > 0"
                )));
            }
            match named_state(ext, k)? {
                Some((prefactor, numerator, denominator)) => Ok(ClosedFormEigenstate {
                    level,
                    energy: f.base_energy(k as i64)?,
                    prefactor,
                    numerator,
                    denominator,
                    form: NumeratorForm::Named,
                    domain: ext.domain,
                }),
                None => generic_eigenstate(ext, k),
            }
        }
    }
}
