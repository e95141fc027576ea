use serde::Serialize;

use super::spec::FamilySpec;
use crate::error::Result;

/// Image of a family under its discrete parameter symmetry Γ.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SymmetryImage {
    pub original: FamilySpec,
    pub mapped: FamilySpec,
    /// V(x; mapped) − V(x; original), a constant.
    pub potential_shift: f64,
    pub energy_map: &'static str,
}

impl SymmetryImage {
    /// Energy at which w_n(mapped) solves the RS equation of the original V:
    /// E_n(mapped) − shift. Equals E_{−(n+1)} of the original family.
    pub fn mapped_level_energy(&self, n: usize) -> Result<f64> {
        Ok(self.mapped.base_energy(n as i64)? - self.potential_shift)
    }
}

/// ω → −ω (HO), (a, b) → (−a − α, −b) (Morse), a → 1 − a (ERKC).
pub fn gamma_map(f: &FamilySpec) -> SymmetryImage {
    let (mapped, energy_map) = match *f {
        FamilySpec::HarmonicOscillator { omega } => (
            FamilySpec::HarmonicOscillator { omega: -omega },
            "E_n -> E_{-(n+1)}",
        ),
        FamilySpec::Morse { a, b, alpha } => (
            FamilySpec::Morse {
                a: -a - alpha,
                b: -b,
                alpha,
            },
            "E_n -> E_{-(n+1)} - E_{-1}",
        ),
        FamilySpec::Erkc { a, gamma } => (
            FamilySpec::Erkc { a: 1.0 - a, gamma },
            "E_n -> E_{-(n+1)} - E_{-1}",
        ),
    };
    let potential_shift = match *f {
        FamilySpec::HarmonicOscillator { omega } => omega,
        FamilySpec::Morse { a, alpha, .. } => {
            // −E_{−1}
            (a + alpha).powi(2) - a * a
        }
        FamilySpec::Erkc { a, gamma } => {
            gamma * gamma / 4.0 * (1.0 / ((a - 1.0) * (a - 1.0)) - 1.0 / (a * a))
        }
    };
    SymmetryImage {
        original: *f,
        mapped,
        potential_shift,
        energy_map,
    }
}
