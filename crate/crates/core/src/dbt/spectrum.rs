//! Level bookkeeping for an extended potential.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::families::FamilySpec;

/// Physical level k ≥ 0 or the extra lower level, written "−".
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Level {
    Extra,
    Physical(usize),
}

impl fmt::Display for Level {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Level::Extra => f.write_str("\u{2212}"),
            Level::Physical(k) => write!(f, "{k}"),
        }
    }
}

impl FromStr for Level {
    type Err = Error;

    /// Accepts "−", "-", "minus" or a non-negative integer.
    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "\u{2212}" | "-" | "minus" => Ok(Level::Extra),
            t => t
                .parse::<usize>()
                .map(Level::Physical)
                .map_err(|_| Error::InvalidParameter(format!("level '{s}' is neither k >= 0 nor '-'"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SpectrumLevel {
    pub label: Level,
    pub energy: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SpectrumReport {
    /// Strictly increasing in energy.
    pub levels: Vec<SpectrumLevel>,
    pub strict: bool,
    pub extra_level: Option<f64>,
}

/// Physical levels listed for families with infinitely many bound states.
pub const DEFAULT_LEVELS: usize = 4;

impl SpectrumReport {
    pub(crate) fn build(
        f: &FamilySpec,
        n: usize,
        strict: bool,
        physical: impl Iterator<Item = usize>,
    ) -> Result<Self> {
        let mut levels = Vec::new();
        let extra_level = if strict {
            None
        } else {
            let e = f.base_energy(-(n as i64 + 1))?;
            levels.push(SpectrumLevel { label: Level::Extra, energy: e });
            Some(e)
        };
        for k in physical {
            levels.push(SpectrumLevel {
                label: Level::Physical(k),
                energy: f.base_energy(k as i64)?,
            });
        }
        Ok(SpectrumReport { levels, strict, extra_level })
    }

    pub fn energies(&self) -> Vec<f64> {
        self.levels.iter().map(|l| l.energy).collect()
    }

    pub fn energy_of(&self, level: Level) -> Option<f64> {
        self.levels.iter().find(|l| l.label == level).map(|l| l.energy)
    }
}
