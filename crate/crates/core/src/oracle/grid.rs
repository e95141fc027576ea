use serde::Serialize;

use crate::error::{Error, Result};
use crate::families::{rs_physical, FamilySpec};

pub const DEFAULT_POINTS: usize = 4096;
pub const GRID_POINTS_ENV: &str = "RATEXT_GRID_POINTS";
/// Inner cutoff for half-line problems on the logarithmic grid.
pub const HALF_LINE_LO: f64 = 1e-8;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Spacing {
    Uniform,
    /// Uniform in u = ln x; requires lo > 0.
    Logarithmic,
}

/// Interior grid on [lo, hi]; `points` counts interior nodes, the end values are
/// boundary nodes.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct GridSpec {
    pub lo: f64,
    pub hi: f64,
    pub points: usize,
    pub spacing: Spacing,
}

impl GridSpec {
    pub fn uniform(lo: f64, hi: f64, points: usize) -> Self {
        Self { lo, hi, points, spacing: Spacing::Uniform }
    }

    pub fn logarithmic(lo: f64, hi: f64, points: usize) -> Self {
        Self { lo, hi, points, spacing: Spacing::Logarithmic }
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.lo.is_finite() && self.hi.is_finite() && self.lo < self.hi) {
            return Err(Error::InvalidGrid(format!(
                "need finite lo < hi, got [{}, {}]",
                self.lo, self.hi
            )));
        }
        if self.points < 64 {
            return Err(Error::InvalidGrid(format!(
                "need at least 64 points, got {}",
                self.points
            )));
        }
        if self.spacing == Spacing::Logarithmic && self.lo <= 0.0 {
            return Err(Error::InvalidGrid(format!(
                "logarithmic grid needs lo > 0, got {}",
                self.lo
            )));
        }
        Ok(())
    }

    pub fn with_points(&self, points: usize) -> Self {
        Self { points, ..*self }
    }

    /// Step in the uniform coordinate (x or ln x).
    pub fn step(&self) -> f64 {
        let (a, b) = self.coordinate_bounds();
        (b - a) / (self.points + 1) as f64
    }

    fn coordinate_bounds(&self) -> (f64, f64) {
        match self.spacing {
            Spacing::Uniform => (self.lo, self.hi),
            Spacing::Logarithmic => (self.lo.ln(), self.hi.ln()),
        }
    }

    /// Interior nodes in x.
    pub fn nodes(&self) -> Vec<f64> {
        let (a, _) = self.coordinate_bounds();
        let h = self.step();
        (1..=self.points)
            .map(|i| {
                let u = a + h * i as f64;
                match self.spacing {
                    Spacing::Uniform => u,
                    Spacing::Logarithmic => u.exp(),
                }
            })
            .collect()
    }
}

/// Grid size from `RATEXT_GRID_POINTS`, else [`DEFAULT_POINTS`].
pub fn default_points() -> usize {
    std::env::var(GRID_POINTS_ENV)
        .ok()
        .and_then(|s| s.trim().parse().ok())
        .unwrap_or(DEFAULT_POINTS)
}

/// Eigen-solver grid covering levels up to `k_top` of the family.
///
/// `half_line` forces a logarithmic grid on x > 0 (odd-n HO extensions).
pub fn default_eigen_grid(f: &FamilySpec, k_top: usize, half_line: bool, points: usize) -> GridSpec {
    match *f {
        FamilySpec::HarmonicOscillator { omega } => {
            let x = (2.0 / omega).sqrt() * ((2.0 * k_top as f64 + 1.0).sqrt() + 9.0);
            if half_line {
                GridSpec::logarithmic(HALF_LINE_LO, x, points)
            } else {
                GridSpec::uniform(-x, x, points)
            }
        }
        FamilySpec::Morse { a, b, alpha } => {
            let a_top = (a - k_top as f64 * alpha).max(0.25 * alpha);
            let lo = (b.ln() - 6.0) / alpha;
            let hi = (12.0 / alpha).max(24.0 / a_top) + b.ln().max(0.0) / alpha;
            GridSpec::uniform(lo, hi, points)
        }
        FamilySpec::Erkc { a, gamma } => {
            let a_top = a + k_top as f64;
            let mut hi: f64 = 10.0;
            for _ in 0..50 {
                hi = (a_top / gamma) * (70.0 + 2.0 * a * hi.ln());
            }
            GridSpec::logarithmic(HALF_LINE_LO, hi, points)
        }
    }
}

/// Points of residual grids.
pub const RESIDUAL_POINTS: usize = 1024;
/// Relative ground-state weight below which residual grids are truncated.
pub const WEIGHT_CUTOFF: f64 = 1e-14;

/// Uniform grid (logarithmic on the half line) spanning the region where the
/// ground-state weight ψ_0² is at least [`WEIGHT_CUTOFF`] of its maximum.
pub fn weight_truncated_grid(f: &FamilySpec, points: usize) -> Result<GridSpec> {
    let pre = rs_physical(f, 0)?.prefactor;
    let x_star = match *f {
        FamilySpec::HarmonicOscillator { .. } => 0.0,
        FamilySpec::Morse { a, b, alpha } => -(a / b).ln() / alpha,
        FamilySpec::Erkc { a, gamma } => 2.0 * a * a / gamma,
    };
    let peak = pre.value(x_star);
    let drop = 0.5 * WEIGHT_CUTOFF.ln();
    let g = |x: f64| pre.value(x) - peak - drop;
    let edge = |dir: f64| -> f64 {
        let mut step = 1.0;
        let mut inner = x_star;
        let mut outer = x_star + dir * step;
        if f.domain().lo == 0.0 && dir < 0.0 {
            outer = x_star * 0.5;
            while g(outer) > 0.0 {
                inner = outer;
                outer *= 0.5;
            }
        } else {
            while g(outer) > 0.0 {
                inner = outer;
                step *= 2.0;
                outer = x_star + dir * step;
            }
        }
        for _ in 0..200 {
            let mid = 0.5 * (inner + outer);
            if g(mid) > 0.0 {
                inner = mid;
            } else {
                outer = mid;
            }
        }
        outer
    };
    let (lo, hi) = (edge(-1.0), edge(1.0));
    let grid = if f.domain().lo == 0.0 {
        GridSpec::logarithmic(lo, hi, points)
    } else {
        GridSpec::uniform(lo, hi, points)
    };
    grid.validate()?;
    Ok(grid)
}
