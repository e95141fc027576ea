//! Extended potentials V^{(n)} = V + 2v_n′ and the transformed RS functions.

use serde::Serialize;

use super::eigenstate::{extended_eigenstate, ClosedFormEigenstate};
use super::polys::erkc_case;
use super::spectrum::{Level, SpectrumReport, DEFAULT_LEVELS};
use crate::error::{Error, Result};
use crate::families::{
    regularity_check, regularity_check_on, rs_physical, rs_regularized, Domain, FamilySpec,
    RegularityReport, RsFunction,
};

pub const COINCIDENCE_THRESHOLD: f64 = 1e-12;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ExtendedPotential {
    pub family: FamilySpec,
    pub n: usize,
    pub v: RsFunction,
    pub regularity: RegularityReport,
    /// ℝ or x > 0; x > 0 also for the odd-n HO extension.
    pub domain: Domain,
    /// False when built through the non-conforming override.
    pub conforming: bool,
    pub spectrum: SpectrumReport,
}

impl ExtendedPotential {
    /// 2v_n′(x).
    pub fn correction(&self, x: f64) -> f64 {
        2.0 * self.v.derivative(x)
    }

    /// V^{(n)}(x); NaN outside the domain.
    pub fn value(&self, x: f64) -> f64 {
        if !self.domain.contains(x) {
            return f64::NAN;
        }
        match self.family.potential_value(x) {
            Ok(v) => v + self.correction(x),
            Err(_) => f64::NAN,
        }
    }

    pub fn base_value(&self, x: f64) -> f64 {
        self.family.potential_value(x).unwrap_or(f64::NAN)
    }
}

fn is_strict(f: &FamilySpec, n: usize) -> bool {
    match *f {
        FamilySpec::Erkc { a, .. } => erkc_case(a, n) != Some(false),
        _ => n % 2 == 1,
    }
}

fn physical_levels(f: &FamilySpec, n: usize, k_max: Option<usize>) -> Vec<usize> {
    let odd_only = matches!(f, FamilySpec::HarmonicOscillator { .. }) && n % 2 == 1;
    let count = f.bound_state_count();
    let ks = (0..).filter(move |k| !odd_only || k % 2 == 1);
    match (count, k_max) {
        (_, Some(km)) => ks.take_while(|&k| k <= km && count.map_or(true, |c| k < c)).collect(),
        (Some(c), None) => ks.take_while(|&k| k < c).collect(),
        (None, None) => ks.take(DEFAULT_LEVELS).collect(),
    }
}

/// V^{(n)} for a regular (f, n).
pub fn extend(f: &FamilySpec, n: usize) -> Result<ExtendedPotential> {
    extend_with(f, n, false)
}

/// Like [`extend`]; with `non_conforming` a singular case is still built and flagged.
/// Odd-n HO is then taken on x > 0, where it is regular.
pub fn extend_with(f: &FamilySpec, n: usize, non_conforming: bool) -> Result<ExtendedPotential> {
    let report = regularity_check(f, n)?;
    let (regularity, domain, conforming) = if report.is_regular() {
        (report, f.domain(), true)
    } else if non_conforming {
        match f {
            FamilySpec::HarmonicOscillator { .. } => {
                (regularity_check_on(f, n, Domain::HALF_LINE)?, Domain::HALF_LINE, false)
            }
            _ => (report, f.domain(), false),
        }
    } else {
        return Err(Error::Regularity {
            reason: report.reason.clone(),
            branch: report.branch.to_string(),
        });
    };
    let v = rs_regularized(f, n)?;
    let strict = is_strict(f, n);
    let spectrum = SpectrumReport::build(f, n, strict, physical_levels(f, n, None).into_iter())?;
    Ok(ExtendedPotential {
        family: *f,
        n,
        v,
        regularity,
        domain,
        conforming,
        spectrum,
    })
}

/// Stored spectrum: every Morse level, or the lowest few for unbounded families.
pub fn extended_spectrum(ext: &ExtendedPotential) -> SpectrumReport {
    ext.spectrum.clone()
}

/// Spectrum listing physical levels k ≤ k_max (Morse still stops below [a/α]).
pub fn extended_spectrum_upto(ext: &ExtendedPotential, k_max: usize) -> Result<SpectrumReport> {
    SpectrumReport::build(
        &ext.family,
        ext.n,
        ext.spectrum.strict,
        physical_levels(&ext.family, ext.n, Some(k_max)).into_iter(),
    )
}

/// w_k^{(n)} = −v_n + (E_k − E_{−(n+1)})/(v_n − w_k).
pub fn dbt_rs(ext: &ExtendedPotential, k: usize, x: f64) -> Result<f64> {
    if !ext.domain.contains(x) {
        return Err(Error::Domain { x, family: ext.family.name() });
    }
    let w = rs_physical(&ext.family, k)?;
    dbt_rs_with(ext, &w, x)
}

/// [`dbt_rs`] with a prebuilt w_k.
pub fn dbt_rs_with(ext: &ExtendedPotential, w: &RsFunction, x: f64) -> Result<f64> {
    let v = ext.v.value(x);
    let diff = v - w.value(x);
    if diff.abs() < COINCIDENCE_THRESHOLD {
        return Err(Error::Coincidence { x });
    }
    Ok(-v + (w.energy - ext.v.energy) / diff)
}

/// Superpartner Ṽ = V^{(n)} + 2w′ with w the RS function of the ground state of V^{(n)}:
/// ψ_− in the quasi-isospectral cases, ψ_0^{(n)} when isospectrality is strict.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Superpartner {
    pub extension: ExtendedPotential,
    pub ground: ClosedFormEigenstate,
    /// Whether Ṽ = V is expected (backward partnership).
    pub equals_base: bool,
}

impl Superpartner {
    pub fn value(&self, x: f64) -> f64 {
        let (_, dw) = self.ground.rs_value_and_derivative(x);
        self.extension.value(x) + 2.0 * dw
    }
}

pub fn superpartner(ext: &ExtendedPotential) -> Result<Superpartner> {
    let strict = ext.spectrum.strict;
    let level = if strict {
        ext.spectrum.levels.first().map(|l| l.label).unwrap_or(Level::Physical(0))
    } else {
        Level::Extra
    };
    Ok(Superpartner {
        extension: ext.clone(),
        ground: extended_eigenstate(ext, level)?,
        equals_base: !strict,
    })
}
