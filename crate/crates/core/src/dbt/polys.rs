//! Numerator polynomials of the extended eigenstates.

use crate::error::{Error, Result};
use crate::families::rs::rs_at_params;
use crate::families::{gamma_map, FamilySpec, LogPrefactor, MappedPolynomial};
use crate::polynomials::{hermite_poly, laguerre_poly, Polynomial, Variable};

/// P_(m,k)(x) = ½L_m^{−1/2}(−ωx²/2)H_{k+1}(√(ω/2)x) + √(ω/2)·x·L_{m−1}^{1/2}(−ωx²/2)H_k(√(ω/2)x).
pub fn p_polynomial(m: usize, k: usize, omega: f64) -> Result<Polynomial> {
    if m == 0 {
        return Err(Error::InvalidParameter("P_(m,k) needs m >= 1".into()));
    }
    if !(omega > 0.0 && omega.is_finite()) {
        return Err(Error::InvalidParameter(format!("omega = {omega} must be positive")));
    }
    let s = (omega / 2.0).sqrt();
    let l_m = laguerre_poly(m, -0.5, 1.0).compose_square(-omega / 2.0);
    let l_m1 = laguerre_poly(m - 1, 0.5, 1.0).compose_square(-omega / 2.0);
    let h_k1 = hermite_poly(k + 1).scale_argument(s);
    let h_k = hermite_poly(k).scale_argument(s);
    let x = Polynomial::monomial(1, s);
    let p = &(&l_m * &h_k1) * 0.5 + &(&x * &l_m1) * &h_k;
    Ok(p.with_var(Variable::X))
}

/// M_{a,k}^{(2m)}(z) = 2(m+a+1)𝐿_{2m−1}^β(−z)𝐿_k^{2(a−k)}(z) − (k+1)𝐿_{k+1}^{2(a−k)}(z)𝐿_{2m}^β(−z),
/// β = −2(a+2m+1). Morse at α = 1.
pub fn m_polynomial(a: f64, k: usize, m: usize) -> Result<Polynomial> {
    if m == 0 {
        return Err(Error::InvalidParameter("M needs m >= 1".into()));
    }
    if !(a > 0.0 && a.is_finite()) {
        return Err(Error::InvalidParameter(format!("a = {a} must be positive")));
    }
    let count = a.floor() as usize;
    if k >= count {
        return Err(Error::NoSuchBoundState { k, count });
    }
    let mf = m as f64;
    let kf = k as f64;
    let beta = -2.0 * (a + 2.0 * mf + 1.0);
    let alpha_k = 2.0 * (a - kf);
    let d1 = laguerre_poly(2 * m - 1, beta, -1.0);
    let d0 = laguerre_poly(2 * m, beta, -1.0);
    let lk = laguerre_poly(k, alpha_k, 1.0);
    let lk1 = laguerre_poly(k + 1, alpha_k, 1.0);
    let p = &(&d1 * &lk) * (2.0 * (mf + a + 1.0)) - &(&lk1 * &d0) * (kf + 1.0);
    Ok(p.with_var(Variable::Z))
}

/// ERKC regularity case for (a, n): `Some(true)` for strict case (i), `Some(false)` for case (ii).
pub(crate) fn erkc_case(a: f64, n: usize) -> Option<bool> {
    let np1 = n as f64 + 1.0;
    if np1 / 2.0 < a && a < np1 {
        Some(true)
    } else if n % 2 == 0 && a > np1 {
        Some(false)
    } else {
        None
    }
}

/// N_{a,k}^{(n)}(x), assembled from five Laguerre products with arguments γx/a_k and
/// −γx/a_{−(n+1)}.
///
/// The first coefficient is (1 − 2a) − (k+1)/2; with it, x^{a−1}e^{−γx/2a_k}N/D solves the
/// extended equation.
pub fn n_polynomial(a: f64, k: usize, n: usize, gamma: f64) -> Result<Polynomial> {
    if n == 0 {
        return Err(Error::InvalidParameter("N needs n >= 1".into()));
    }
    if !(gamma > 0.0 && gamma.is_finite() && a.is_finite()) {
        return Err(Error::InvalidParameter(format!("a = {a}, gamma = {gamma}")));
    }
    if erkc_case(a, n).is_none() {
        return Err(Error::Unsupported(format!(
            "ERKC a = {a}, n = {n} lies outside both regularity cases"
        )));
    }
    let kf = k as f64;
    let nf = n as f64;
    let sk = gamma / (a + kf);
    let sv = -gamma / (a - nf - 1.0);
    let lk = |deg: usize, alpha: f64| laguerre_poly(deg, alpha, sk);
    let lv = |deg: usize, alpha: f64| laguerre_poly(deg, alpha, sv);
    let terms = [
        ((1.0 - 2.0 * a) - (kf + 1.0) / 2.0, lk(k, 2.0 * a - 1.0), lv(n, 1.0 - 2.0 * a)),
        (a - (nf + 1.0) / 2.0, lk(k, 2.0 * a - 1.0), lv(n, -2.0 * a)),
        (a + (kf - 1.0) / 2.0, lk(k, 2.0 * a - 2.0), lv(n, 1.0 - 2.0 * a)),
        ((kf + 1.0) / 2.0, lk(k + 1, 2.0 * a - 1.0), lv(n, 1.0 - 2.0 * a)),
        (-(nf + 1.0) / 2.0, lk(k, 2.0 * a - 1.0), lv(n + 1, -2.0 * a)),
    ];
    let p = terms
        .iter()
        .fold(Polynomial::zero(), |acc, (c, l, d)| &acc + &(&(l * d) * *c));
    Ok(p.with_var(Variable::X))
}

/// ψ_k^{(n)} ∝ exp(prefactor)·N/D from the general map (v_n − w_k)ψ_k, for any family.
///
/// N and D are polynomials in the canonical variable: x for HO and ERKC, y = e^{−αx} for
/// Morse. Returns (prefactor, N, D).
pub(crate) fn generic_state(
    f: &FamilySpec,
    n: usize,
    k: usize,
) -> Result<(LogPrefactor, MappedPolynomial, MappedPolynomial)> {
    let (pre_k, dk) = rs_at_params(f, k)?;
    let (_, dv) = rs_at_params(&gamma_map(f).mapped, n)?;
    let dk = dk.canonical();
    let dv = dv.canonical();
    let (pk, pv) = (&dk.polynomial, &dv.polynomial);
    let (pk1, pv1) = (pk.derivative(), pv.derivative());
    let var = pk.var();
    let t = Polynomial::monomial(1, 1.0).with_var(var);
    let kv = pk * pv;
    let num = match *f {
        FamilySpec::HarmonicOscillator { omega } => {
            &(&(&t * &kv) * (-omega)) - &(&pv1 * pk) + &pk1 * pv
        }
        FamilySpec::Morse { a, b, alpha } => {
            let c0 = -(2.0 * a + alpha + n as f64 * alpha - k as f64 * alpha);
            let lin = Polynomial::new(vec![c0, 2.0 * b]).with_var(var);
            let cross = &(&pv1 * pk) - &(&pk1 * pv);
            &(&lin * &kv) + &(&(&t * &cross) * alpha)
        }
        FamilySpec::Erkc { a, gamma } => {
            let ak = a + k as f64;
            let am = a - n as f64 - 1.0;
            let lin = Polynomial::new(vec![
                2.0 * a - 1.0,
                -gamma * (1.0 / (2.0 * am) + 1.0 / (2.0 * ak)),
            ])
            .with_var(var);
            let cross = &(&pk1 * pv) - &(&pv1 * pk);
            &(&lin * &kv) + &(&t * &cross)
        }
    };
    let pre = match *f {
        // one power of x moved into N
        FamilySpec::Erkc { .. } => LogPrefactor {
            log_power: pre_k.log_power - 1.0,
            ..pre_k
        },
        _ => pre_k,
    };
    Ok((pre, MappedPolynomial::new(num, dk.argument), dv))
}
