//! Bound states of −ψ″ + Vψ = Eψ by three-point finite differences, bisection on the
//! inertia of the tridiagonal pencil, and one Richardson step.

use serde::Serialize;

use super::grid::{GridSpec, Spacing};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EigenResult {
    /// Richardson-extrapolated energies, ascending.
    pub energies: Vec<f64>,
    /// |E(2N) − E(N)| per level.
    pub residuals: Vec<f64>,
}

/// Symmetric tridiagonal pencil A − λM with diagonal M.
struct Pencil {
    diag: Vec<f64>,
    off: f64,
    mass: Vec<f64>,
    threshold: f64,
}

impl Pencil {
    fn assemble<F: Fn(f64) -> f64>(v: &F, g: &GridSpec) -> Result<Pencil> {
        g.validate()?;
        let h = g.step();
        let inv_h2 = 1.0 / (h * h);
        let xs = g.nodes();
        let mut vals = Vec::with_capacity(xs.len());
        for &x in &xs {
            let val = v(x);
            if !val.is_finite() {
                return Err(Error::NonFinitePotential { x });
            }
            vals.push(val);
        }
        let n = xs.len();
        // the inner end of a logarithmic grid is closed by the power-law condition
        let threshold = match g.spacing {
            Spacing::Uniform => vals[0].min(vals[n - 1]),
            Spacing::Logarithmic => vals[n - 1],
        };
        match g.spacing {
            Spacing::Uniform => Ok(Pencil {
                diag: vals.iter().map(|v| 2.0 * inv_h2 + v).collect(),
                off: -inv_h2,
                mass: vec![1.0; n],
                threshold,
            }),
            Spacing::Logarithmic => {
                // ψ = x^{1/2}φ(u), x = e^u: −φ″ + (1/4 + x²V)φ = E x²φ
                let mut diag: Vec<f64> = xs
                    .iter()
                    .zip(&vals)
                    .map(|(x, v)| 2.0 * inv_h2 + 0.25 + x * x * v)
                    .collect();
                let c = vals[0] * xs[0] * xs[0];
                let disc = 0.25 + c;
                if disc > 0.0 {
                    // ψ ~ x^p with p the larger indicial root; the ghost node follows it
                    let p = 0.5 + disc.sqrt();
                    diag[0] -= (-(p - 0.5) * h).exp() * inv_h2;
                }
                Ok(Pencil {
                    diag,
                    off: -inv_h2,
                    mass: xs.iter().map(|x| x * x).collect(),
                    threshold,
                })
            }
        }
    }

    /// Number of eigenvalues strictly below λ (negative pivots of LDLᵀ).
    fn count_below(&self, lambda: f64) -> usize {
        let off2 = self.off * self.off;
        let mut count = 0;
        let mut d = 0.0;
        for (i, (&a, &m)) in self.diag.iter().zip(&self.mass).enumerate() {
            d = a - lambda * m - if i == 0 { 0.0 } else { off2 / d };
            if d == 0.0 {
                d = -f64::EPSILON * (a.abs() + lambda.abs() * m).max(f64::MIN_POSITIVE);
            }
            if d < 0.0 {
                count += 1;
            }
        }
        count
    }

    fn lower_bound(&self) -> f64 {
        let n = self.diag.len();
        (0..n)
            .map(|i| {
                let mut r = 0.0;
                if i > 0 {
                    r += self.off.abs() * (self.mass[i] / self.mass[i - 1]).sqrt();
                }
                if i + 1 < n {
                    r += self.off.abs() * (self.mass[i] / self.mass[i + 1]).sqrt();
                }
                (self.diag[i] - r) / self.mass[i]
            })
            .fold(f64::INFINITY, f64::min)
    }

    fn eigenvalue(&self, index: usize, mut lo: f64, mut hi: f64) -> f64 {
        for _ in 0..200 {
            let mid = 0.5 * (lo + hi);
            if mid <= lo || mid >= hi || hi - lo <= 1e-14 * (1.0 + mid.abs()) {
                break;
            }
            if self.count_below(mid) > index {
                hi = mid;
            } else {
                lo = mid;
            }
        }
        0.5 * (lo + hi)
    }

    fn lowest(&self, count: usize) -> Result<Vec<f64>> {
        let resolvable = self.count_below(self.threshold);
        if count > resolvable {
            return Err(Error::CountExceedsResolvable { requested: count, resolvable });
        }
        let mut floor = self.lower_bound();
        let mut out = Vec::with_capacity(count);
        for index in 0..count {
            let e = self.eigenvalue(index, floor, self.threshold);
            out.push(e);
            floor = e;
        }
        Ok(out)
    }
}

/// Lowest `count` Dirichlet eigenvalues at the grid resolution as given.
pub fn solve_single<F: Fn(f64) -> f64>(v: &F, g: &GridSpec, count: usize) -> Result<Vec<f64>> {
    Pencil::assemble(v, g)?.lowest(count)
}

/// Lowest `count` eigenvalues of −d²/dx² + V with Dirichlet ends, from the (N, 2N)
/// Richardson pair.
///
/// Logarithmic grids replace the inner Dirichlet condition by the power-law behaviour
/// x^p fixed by the local x²V at the first node.
pub fn solve_bound_states<F: Fn(f64) -> f64 + Sync>(
    v: &F,
    g: &GridSpec,
    count: usize,
) -> Result<EigenResult> {
    g.validate()?;
    let fine = g.with_points(2 * g.points + 1);
    let (coarse_e, fine_e) = rayon::join(|| solve_single(v, g, count), || solve_single(v, &fine, count));
    let (coarse_e, fine_e) = (coarse_e?, fine_e?);
    let energies: Vec<f64> = coarse_e
        .iter()
        .zip(&fine_e)
        .map(|(c, f)| (4.0 * f - c) / 3.0)
        .collect();
    let residuals = coarse_e.iter().zip(&fine_e).map(|(c, f)| (f - c).abs()).collect();
    Ok(EigenResult { energies, residuals })
}
