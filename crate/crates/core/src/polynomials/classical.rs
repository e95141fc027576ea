//! Hermite and generalized Laguerre polynomials with arbitrary real parameter.

use serde::Serialize;

use super::poly::{Polynomial, Variable};

/// 𝐿_n^(α)(t) by the three-term recurrence
/// (k+1)𝐿_{k+1} = (2k+1+α−t)𝐿_k − (k+α)𝐿_{k−1}.
pub fn laguerre_eval(n: usize, alpha: f64, t: f64) -> f64 {
    if n == 0 {
        return 1.0;
    }
    let mut prev = 1.0;
    let mut cur = 1.0 + alpha - t;
    for k in 1..n {
        let kf = k as f64;
        let next = ((2.0 * kf + 1.0 + alpha - t) * cur - (kf + alpha) * prev) / (kf + 1.0);
        prev = cur;
        cur = next;
    }
    cur
}

/// Generalized binomial C(r, q) = r(r−1)…(r−q+1)/q! for real r.
fn binomial(r: f64, q: usize) -> f64 {
    (1..=q).fold(1.0, |acc, i| acc * (r - q as f64 + i as f64) / i as f64)
}

/// Coefficient form of 𝐿_n^(α)(scale·u) in u.
///
/// c_j = (−1)^j C(n+α, n−j) scale^j / j!, built without dividing by `scale`.
/// The degree is exactly n for nonzero `scale`.
pub fn laguerre_poly(n: usize, alpha: f64, scale: f64) -> Polynomial {
    let mut coeffs = Vec::with_capacity(n + 1);
    let mut pow = 1.0;
    let mut fact = 1.0;
    for j in 0..=n {
        if j > 0 {
            pow *= -scale;
            fact *= j as f64;
        }
        coeffs.push(binomial(n as f64 + alpha, n - j) * pow / fact);
    }
    Polynomial::new(coeffs)
}

/// Physicists' Hermite polynomial H_n(u).
pub fn hermite_poly(n: usize) -> Polynomial {
    let mut prev = Polynomial::constant(1.0);
    if n == 0 {
        return prev.with_var(Variable::T);
    }
    let mut cur = Polynomial::new(vec![0.0, 2.0]);
    for k in 1..n {
        let next = &cur.shift_up(1).scale(2.0) - &prev.scale(2.0 * k as f64);
        prev = cur;
        cur = next;
    }
    cur
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn of(n: usize) -> Self {
        if n % 2 == 0 {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    pub fn power(self) -> usize {
        match self {
            Parity::Even => 0,
            Parity::Odd => 1,
        }
    }
}

/// Decomposition H_n(iu) = constant · (iu)^p · 𝐿_m^(p−1/2)(−u²), n = 2m + p.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct HermiteLaguerre {
    pub m: usize,
    pub parity: Parity,
    pub laguerre_alpha: f64,
    /// (−1)^m 2^n m!
    pub constant: f64,
}

pub fn hermite_imaginary_as_laguerre(n: usize) -> HermiteLaguerre {
    let m = n / 2;
    let parity = Parity::of(n);
    let sign = if m % 2 == 0 { 1.0 } else { -1.0 };
    let m_fact: f64 = (1..=m).map(|i| i as f64).product();
    HermiteLaguerre {
        m,
        parity,
        laguerre_alpha: parity.power() as f64 - 0.5,
        constant: sign * 2f64.powi(n as i32) * m_fact,
    }
}

impl HermiteLaguerre {
    /// Real polynomial in x proportional to H_n(i√(ω/2)x): x^p 𝐿_m^(p−1/2)(−ωx²/2).
    pub fn real_polynomial_in_x(&self, omega: f64) -> Polynomial {
        laguerre_poly(self.m, self.laguerre_alpha, 1.0)
            .compose_square(-omega / 2.0)
            .shift_up(self.parity.power())
            .with_var(Variable::X)
    }
}

/// Rising factorial (a)_n = a(a+1)…(a+n−1).
pub fn pochhammer(a: f64, n: usize) -> f64 {
    (0..n).fold(1.0, |acc, i| acc * (a + i as f64))
}

/// Largest absolute residual of the two contiguous relations
/// 𝐿_n^(β) + 𝐿_{n−1}^(β+1) = 𝐿_n^(β+1) and z𝐿_{n−1}^(β+1) = (n+β)𝐿_{n−1}^(β) − n𝐿_n^(β)
/// over the sample points.
pub fn glp_identity_residual(n: usize, beta: f64, samples: &[f64]) -> f64 {
    assert!(n >= 1, "identities need n >= 1");
    assert!(!samples.is_empty(), "samples must be nonempty");
    let nf = n as f64;
    samples
        .iter()
        .map(|&z| {
            let first = laguerre_eval(n, beta, z) + laguerre_eval(n - 1, beta + 1.0, z)
                - laguerre_eval(n, beta + 1.0, z);
            let second = z * laguerre_eval(n - 1, beta + 1.0, z)
                - (nf + beta) * laguerre_eval(n - 1, beta, z)
                + nf * laguerre_eval(n, beta, z);
            first.abs().max(second.abs())
        })
        .fold(0.0, f64::max)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    /// Σ_k (−1)^k C(n+α, n−k) t^k / k!, evaluated term by term.
    fn series_oracle(n: usize, alpha: f64, t: f64) -> f64 {
        let choose = |r: f64, q: usize| -> f64 {
            let num: f64 = (0..q).map(|i| r - i as f64).product();
            let den: f64 = (1..=q).map(|i| i as f64).product();
            num / den
        };
        (0..=n)
            .map(|k| {
                let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
                let kf: f64 = (1..=k).map(|i| i as f64).product();
                sign * choose(n as f64 + alpha, n - k) * t.powi(k as i32) / kf
            })
            .sum()
    }

    #[test]
    fn laguerre_base_cases() {
        assert_eq!(laguerre_eval(0, -3.7, 12.0), 1.0);
        assert_eq!(laguerre_eval(1, 0.25, 2.0), 1.0 + 0.25 - 2.0);
    }

    #[test]
    fn laguerre_matches_series() {
        let oracle = series_oracle(2, -0.5, -1.0);
        assert_relative_eq!(oracle, 2.375, max_relative = 1e-15);
        assert_relative_eq!(laguerre_eval(2, -0.5, -1.0), 2.375, max_relative = 1e-14);
        for &(n, a, t) in &[(5, -2.3, 1.1), (7, 3.5, 4.0), (4, -6.0, -2.0)] {
            assert_relative_eq!(
                laguerre_eval(n, a, t),
                series_oracle(n, a, t),
                max_relative = 1e-12
            );
        }
    }

    #[test]
    fn laguerre_poly_examples() {
        let p = laguerre_poly(1, 2.0, 1.0);
        assert_eq!(p.coeffs(), &[3.0, -1.0]);
        let q = laguerre_poly(2, -0.5, 1.0);
        assert_eq!(q.degree(), 2);
        assert_relative_eq!(q.eval(-1.0), 2.375, max_relative = 1e-14);
        let r = laguerre_poly(3, 0.0, 2.0);
        for i in 0..20 {
            let t = -3.0 + 0.31 * i as f64;
            assert_relative_eq!(r.eval(t), laguerre_eval(3, 0.0, 2.0 * t), epsilon = 1e-12);
        }
    }

    #[test]
    fn laguerre_poly_integer_parameter_vanishes_at_origin() {
        // 𝐿_5^(−2) has a double zero at the origin: the low coefficients are exact zeros
        let p = laguerre_poly(5, -2.0, 1.0);
        assert_eq!(p.coeffs()[0], 0.0);
        assert_eq!(p.coeffs()[1], 0.0);
        assert_ne!(p.coeffs()[2], 0.0);
    }

    #[test]
    fn hermite_examples() {
        assert_eq!(hermite_poly(0).coeffs(), &[1.0]);
        assert_eq!(hermite_poly(1).coeffs(), &[0.0, 2.0]);
        assert_eq!(hermite_poly(4).coeffs(), &[12.0, 0.0, -48.0, 0.0, 16.0]);
    }

    #[test]
    fn herm_lag_decomposition() {
        let h2 = hermite_imaginary_as_laguerre(2);
        assert_eq!((h2.m, h2.parity, h2.laguerre_alpha), (1, Parity::Even, -0.5));
        let h3 = hermite_imaginary_as_laguerre(3);
        assert_eq!((h3.m, h3.parity, h3.laguerre_alpha), (1, Parity::Odd, 0.5));
        let h0 = hermite_imaginary_as_laguerre(0);
        assert_eq!((h0.m, h0.parity, h0.laguerre_alpha), (0, Parity::Even, -0.5));
    }

    #[test]
    fn pochhammer_examples() {
        assert_eq!(pochhammer(3.0, 2), 12.0);
        assert_eq!(pochhammer(-4.2, 0), 1.0);
        assert_eq!(pochhammer(8.0, 2), 72.0);
    }

    #[test]
    fn glp_identity_examples() {
        assert!(glp_identity_residual(1, 0.0, &[0.5]) < 1e-14);
        assert!(glp_identity_residual(2, 2.0, &[0.0]) < 1e-14);
    }
}
