//! Polynomial families orthogonal with respect to the weights of the extensions.

use serde::Serialize;

use super::extension::ExtendedPotential;
use super::polys::{erkc_case, m_polynomial, n_polynomial, p_polynomial};
use super::spectrum::Level;
use crate::error::{Error, Result};
use crate::families::FamilySpec;
use crate::oracle::integrate_with_error;
use crate::polynomials::{laguerre_poly, Polynomial, Variable};

/// f(u) = e^{linear·u}·P(u) in the canonical variable u.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FamilyMember {
    pub label: Level,
    pub linear: f64,
    pub polynomial: Polynomial,
}

impl FamilyMember {
    pub fn log_abs(&self, u: f64) -> (f64, f64) {
        let (l, s) = self.polynomial.log_abs_eval(u);
        (l + self.linear * u, s)
    }

    pub fn value(&self, u: f64) -> f64 {
        let (l, s) = self.log_abs(u);
        s * l.exp()
    }
}

/// w(u) = u^p·exp(l·u + q·u² + r/u) / D(t)², t = s·u or s/u.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Weight {
    pub log_power: f64,
    pub linear: f64,
    pub quadratic: f64,
    pub reciprocal: f64,
    pub denominator: Polynomial,
    pub denominator_scale: f64,
    pub denominator_inverted: bool,
}

impl Weight {
    pub fn log_value(&self, u: f64) -> f64 {
        let mut l = self.linear * u + self.quadratic * u * u;
        if self.log_power != 0.0 {
            l += self.log_power * u.ln();
        }
        if self.reciprocal != 0.0 {
            l += self.reciprocal / u;
        }
        if l == f64::NEG_INFINITY {
            return l;
        }
        let t = if self.denominator_inverted {
            self.denominator_scale / u
        } else {
            self.denominator_scale * u
        };
        l - 2.0 * self.denominator.log_abs_eval(t).0
    }

    pub fn value(&self, u: f64) -> f64 {
        self.log_value(u).exp()
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct OrthogonalFamily {
    pub variable: Variable,
    pub lo: f64,
    pub hi: f64,
    pub members: Vec<FamilyMember>,
    pub weight: Weight,
}

impl OrthogonalFamily {
    fn product_integral(&self, i: usize, j: usize) -> Result<f64> {
        let (fi, fj) = (&self.members[i], &self.members[j]);
        let r = integrate_with_error(
            |u: f64| {
                if !u.is_finite() {
                    return 0.0;
                }
                let lw = self.weight.log_value(u);
                if lw == f64::NEG_INFINITY {
                    return 0.0;
                }
                let (li, si) = fi.log_abs(u);
                let (lj, sj) = fj.log_abs(u);
                si * sj * (li + lj + lw).exp()
            },
            self.lo,
            self.hi,
            1e-13,
        )?;
        Ok(r.value)
    }

    /// ⟨f_i, f_j⟩_w.
    pub fn inner_product(&self, i: usize, j: usize) -> Result<f64> {
        self.product_integral(i, j)
    }

    /// G_ij / √(G_ii G_jj).
    pub fn normalized_gram(&self) -> Result<Vec<Vec<f64>>> {
        let n = self.members.len();
        let mut g = vec![vec![0.0; n]; n];
        for i in 0..n {
            for j in i..n {
                let v = self.product_integral(i, j)?;
                g[i][j] = v;
                g[j][i] = v;
            }
        }
        let d: Vec<f64> = (0..n).map(|i| g[i][i].sqrt()).collect();
        for i in 0..n {
            for j in 0..n {
                g[i][j] /= d[i] * d[j];
            }
        }
        Ok(g)
    }

    /// Largest off-diagonal entry of [`Self::normalized_gram`].
    pub fn max_off_diagonal(&self) -> Result<f64> {
        let g = self.normalized_gram()?;
        let mut m = 0.0_f64;
        for (i, row) in g.iter().enumerate() {
            for (j, v) in row.iter().enumerate() {
                if i != j {
                    m = m.max(v.abs());
                }
            }
        }
        Ok(m)
    }
}

/// Members k = 0..=k_max, preceded by the constant member when an extra level exists.
///
/// HO: {1, P_(m,k)} on ℝ. Morse (α = 1): {1, B_k} in z on (0, ∞). ERKC: {1, C_k} or {C_k}
/// in x on (0, ∞).
pub fn orthogonal_family(ext: &ExtendedPotential, k_max: usize) -> Result<OrthogonalFamily> {
    let n = ext.n;
    let with_constant = !ext.spectrum.strict;
    let constant = FamilyMember {
        label: Level::Extra,
        linear: 0.0,
        polynomial: Polynomial::constant(1.0),
    };
    let mut members = Vec::new();
    if with_constant {
        members.push(constant);
    }
    match ext.family {
        FamilySpec::HarmonicOscillator { omega } => {
            if n == 0 || n % 2 == 1 {
                return Err(Error::Unsupported(format!("HO orthogonal family needs even n >= 2, got {n}")));
            }
            for k in 0..=k_max {
                members.push(FamilyMember {
                    label: Level::Physical(k),
                    linear: 0.0,
                    polynomial: p_polynomial(n / 2, k, omega)?,
                });
            }
            Ok(OrthogonalFamily {
                variable: Variable::X,
                lo: f64::NEG_INFINITY,
                hi: f64::INFINITY,
                members,
                weight: Weight {
                    log_power: 0.0,
                    linear: 0.0,
                    quadratic: -omega / 2.0,
                    reciprocal: 0.0,
                    denominator: ext.v.denominator.canonical().polynomial,
                    denominator_scale: 1.0,
                    denominator_inverted: false,
                },
            })
        }
        FamilySpec::Morse { a, alpha, .. } => {
            if alpha != 1.0 || n == 0 || n % 2 == 1 {
                return Err(Error::Unsupported(format!(
                    "Morse B family needs alpha = 1 and even n >= 2, got alpha = {alpha}, n = {n}"
                )));
            }
            let m = n / 2;
            for k in 0..=k_max {
                let mk = m_polynomial(a, k, m)?;
                members.push(FamilyMember {
                    label: Level::Physical(k),
                    linear: 0.0,
                    polynomial: mk.reversed(k + n + 1),
                });
            }
            let beta = -2.0 * (a + n as f64 + 1.0);
            Ok(OrthogonalFamily {
                variable: Variable::Z,
                lo: 0.0,
                hi: f64::INFINITY,
                members,
                weight: Weight {
                    log_power: -(2.0 * a + 2.0 * n as f64 + 3.0),
                    linear: 0.0,
                    quadratic: 0.0,
                    reciprocal: -1.0,
                    denominator: laguerre_poly(n, beta, 1.0),
                    denominator_scale: -1.0,
                    denominator_inverted: true,
                },
            })
        }
        FamilySpec::Erkc { a, gamma } => {
            if n == 0 || erkc_case(a, n).is_none() {
                return Err(Error::Unsupported(format!(
                    "ERKC C family needs n >= 1 in a regularity case, got a = {a}, n = {n}"
                )));
            }
            for k in 0..=k_max {
                members.push(FamilyMember {
                    label: Level::Physical(k),
                    linear: -gamma / (2.0 * (a + k as f64)),
                    polynomial: n_polynomial(a, k, n, gamma)?,
                });
            }
            Ok(OrthogonalFamily {
                variable: Variable::X,
                lo: 0.0,
                hi: f64::INFINITY,
                members,
                weight: Weight {
                    log_power: 2.0 * (a - 1.0),
                    linear: 0.0,
                    quadratic: 0.0,
                    reciprocal: 0.0,
                    denominator: ext.v.denominator.canonical().polynomial,
                    denominator_scale: 1.0,
                    denominator_inverted: false,
                },
            })
        }
    }
}
