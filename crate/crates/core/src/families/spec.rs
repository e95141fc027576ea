use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum FamilyKind {
    HarmonicOscillator,
    Morse,
    Erkc,
}

impl fmt::Display for FamilyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FamilyKind::HarmonicOscillator => "ho",
            FamilyKind::Morse => "morse",
            FamilyKind::Erkc => "erkc",
        })
    }
}

/// One of the three base potentials with its parameters.
///
/// The validated constructors enforce the physical parameter ranges. The variants are
/// public so that symmetry images (negative ω, a → 1 − a, …) can be represented too.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(tag = "family", rename_all = "lowercase")]
pub enum FamilySpec {
    #[serde(rename = "ho")]
    HarmonicOscillator { omega: f64 },
    Morse { a: f64, b: f64, alpha: f64 },
    Erkc { a: f64, gamma: f64 },
}

/// Open interval on which a potential is defined.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Domain {
    pub lo: f64,
    pub hi: f64,
}

impl Domain {
    pub const LINE: Domain = Domain {
        lo: f64::NEG_INFINITY,
        hi: f64::INFINITY,
    };
    pub const HALF_LINE: Domain = Domain {
        lo: 0.0,
        hi: f64::INFINITY,
    };

    pub fn contains(&self, x: f64) -> bool {
        x > self.lo && x < self.hi
    }
}

fn require(cond: bool, msg: impl Into<String>) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::InvalidParameter(msg.into()))
    }
}

impl FamilySpec {
    pub fn ho(omega: f64) -> Result<Self> {
        let f = FamilySpec::HarmonicOscillator { omega };
        f.validate()?;
        Ok(f)
    }

    pub fn morse(a: f64, b: f64, alpha: f64) -> Result<Self> {
        let f = FamilySpec::Morse { a, b, alpha };
        f.validate()?;
        Ok(f)
    }

    pub fn erkc(a: f64, gamma: f64) -> Result<Self> {
        let f = FamilySpec::Erkc { a, gamma };
        f.validate()?;
        Ok(f)
    }

    pub fn validate(&self) -> Result<()> {
        match *self {
            FamilySpec::HarmonicOscillator { omega } => {
                require(omega.is_finite() && omega > 0.0, format!("omega must be > 0, got {omega}"))
            }
            FamilySpec::Morse { a, b, alpha } => {
                require(a.is_finite() && a > 0.0, format!("Morse a must be > 0, got {a}"))?;
                require(b.is_finite() && b > 0.0, format!("Morse b must be > 0, got {b}"))?;
                require(
                    alpha.is_finite() && alpha > 0.0,
                    format!("Morse alpha must be > 0, got {alpha}"),
                )
            }
            FamilySpec::Erkc { a, gamma } => {
                require(a.is_finite() && a > 1.0, format!("ERKC a must be > 1, got {a}"))?;
                require(
                    gamma.is_finite() && gamma > 0.0,
                    format!("ERKC gamma must be > 0, got {gamma}"),
                )
            }
        }
    }

    pub fn kind(&self) -> FamilyKind {
        match self {
            FamilySpec::HarmonicOscillator { .. } => FamilyKind::HarmonicOscillator,
            FamilySpec::Morse { .. } => FamilyKind::Morse,
            FamilySpec::Erkc { .. } => FamilyKind::Erkc,
        }
    }

    pub fn name(&self) -> &'static str {
        match self.kind() {
            FamilyKind::HarmonicOscillator => "ho",
            FamilyKind::Morse => "morse",
            FamilyKind::Erkc => "erkc",
        }
    }

    pub fn domain(&self) -> Domain {
        match self {
            FamilySpec::Erkc { .. } => Domain::HALF_LINE,
            _ => Domain::LINE,
        }
    }

    /// Shifted parameter a_k: a − kα for Morse, a + k for ERKC.
    pub fn shifted_a(&self, k: i64) -> Option<f64> {
        match *self {
            FamilySpec::HarmonicOscillator { .. } => None,
            FamilySpec::Morse { a, alpha, .. } => Some(a - k as f64 * alpha),
            FamilySpec::Erkc { a, .. } => Some(a + k as f64),
        }
    }

    /// V(x), normalized so that the ground level of the physical family is zero.
    pub fn potential_value(&self, x: f64) -> Result<f64> {
        match *self {
            FamilySpec::HarmonicOscillator { omega } => Ok(omega * omega * x * x / 4.0 - omega / 2.0),
            FamilySpec::Morse { a, b, alpha } => {
                let y = (-alpha * x).exp();
                Ok(b * b * y * y - 2.0 * (a + alpha / 2.0) * b * y + a * a)
            }
            FamilySpec::Erkc { a, gamma } => {
                if !(x > 0.0) {
                    return Err(Error::Domain { x, family: "erkc" });
                }
                Ok(a * (a - 1.0) / (x * x) - gamma / x + erkc_v0(a, gamma))
            }
        }
    }

    /// E_k for any integer k; negative k gives the energies used by the regularized
    /// RS functions.
    pub fn base_energy(&self, k: i64) -> Result<f64> {
        match *self {
            FamilySpec::HarmonicOscillator { omega } => Ok(k as f64 * omega),
            FamilySpec::Morse { a, alpha, .. } => {
                let ak = a - k as f64 * alpha;
                Ok(a * a - ak * ak)
            }
            FamilySpec::Erkc { a, gamma } => {
                let ak = a + k as f64;
                if ak == 0.0 {
                    return Err(Error::SingularEnergy { k });
                }
                Ok(erkc_v0(a, gamma) - erkc_v0(ak, gamma))
            }
        }
    }

    /// Number of bound states; `None` when the spectrum is unbounded.
    ///
    /// Morse uses the integer part of a/α.
    pub fn bound_state_count(&self) -> Option<usize> {
        match *self {
            FamilySpec::Morse { a, alpha, .. } => Some((a / alpha).floor().max(0.0) as usize),
            _ => None,
        }
    }

    pub(crate) fn check_bound_state(&self, k: usize) -> Result<()> {
        match self.bound_state_count() {
            Some(count) if k >= count => Err(Error::NoSuchBoundState { k, count }),
            _ => Ok(()),
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            FamilySpec::HarmonicOscillator { omega } => write!(f, "ho(omega={omega})"),
            FamilySpec::Morse { a, b, alpha } => write!(f, "morse(a={a}, b={b}, alpha={alpha})"),
            FamilySpec::Erkc { a, gamma } => write!(f, "erkc(a={a}, gamma={gamma})"),
        }
    }
}

pub(crate) fn erkc_v0(a: f64, gamma: f64) -> f64 {
    gamma * gamma / (4.0 * a * a)
}
