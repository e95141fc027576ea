use super::grid::GridSpec;

/// Step of the five-point stencil in units of the local length 1/√(1 + |V − E| + |E| + |V′|^{2/3}).
const STENCIL_FRACTION: f64 = 0.02;

fn stencil<P: Fn(f64) -> f64>(psi: &P, x: f64, p0: f64, h: f64) -> f64 {
    (-psi(x + 2.0 * h) + 16.0 * psi(x + h) - 30.0 * p0 + 16.0 * psi(x - h) - psi(x - 2.0 * h))
        / (12.0 * h * h)
}

/// max over the nodes of |−ψ″ + (V − E)ψ|, divided by the largest term scale
/// max(|ψ|·max(1, |E|) + |(V − E)ψ|).
///
/// ψ″ comes from a five-point central stencil whose step follows the local length
/// scale of the equation; on grids with lo ≥ 0 it is also kept below x/200.
pub fn schrodinger_residual<V, P>(v: V, e: f64, psi: P, g: &GridSpec) -> f64
where
    V: Fn(f64) -> f64,
    P: Fn(f64) -> f64,
{
    let nodes = g.nodes();
    let mut max_scale = 0.0_f64;
    let mut max_res = 0.0_f64;
    let e_scale = e.abs().max(1.0);
    for &x in &nodes {
        let p0 = psi(x);
        let q = v(x) - e;
        max_scale = max_scale.max(p0.abs() * e_scale + (q * p0).abs());
        let dv = (v(x + 1e-5 * (1.0 + x.abs())) - v(x - 1e-5 * (1.0 + x.abs()))) / (2e-5 * (1.0 + x.abs()));
        let airy = if dv.is_finite() { dv.abs().powf(2.0 / 3.0) } else { 0.0 };
        let mut h = STENCIL_FRACTION / (1.0 + q.abs() + e.abs() + airy).sqrt();
        if g.lo >= 0.0 {
            h = h.min(0.005 * x);
        }
        // Richardson on steps h and 2h: sixth-order accurate
        let d2 = (16.0 * stencil(&psi, x, p0, h) - stencil(&psi, x, p0, 2.0 * h)) / 15.0;
        max_res = max_res.max((-d2 + q * p0).abs());
    }
    if max_scale == 0.0 || !max_scale.is_finite() {
        return f64::INFINITY;
    }
    max_res / max_scale
}
