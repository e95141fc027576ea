//! Regularity of v_n on the physical domain: the zero-location theorem applied to the
//! regularizing Laguerre polynomial, confirmed by a Sturm count.

use serde::Serialize;

use super::rs::rs_regularized;
use super::spec::{Domain, FamilySpec};
use crate::error::{Error, Result};
use crate::polynomials::{count_real_roots, klh_branch, klh_zero_counts, KlhBranch, ZeroCount};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Verdict {
    Regular,
    SingularInDomain,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RegularityReport {
    pub verdict: Verdict,
    pub laguerre_degree: usize,
    pub laguerre_alpha: f64,
    pub branch: KlhBranch,
    pub zero_counts: ZeroCount,
    /// Domain zeros of the denominator predicted from `zero_counts`.
    pub predicted_domain_zeros: usize,
    /// Domain zeros of the denominator found by the Sturm sequence.
    pub sturm_domain_zeros: usize,
    pub reason: String,
}

impl RegularityReport {
    pub fn is_regular(&self) -> bool {
        self.verdict == Verdict::Regular
    }
}

/// ERKC boundary values a = (n+1)/2 and a = n+1 have no stated regularity.
pub(crate) fn reject_erkc_boundary(f: &FamilySpec, n: usize) -> Result<()> {
    if let FamilySpec::Erkc { a, .. } = *f {
        let np1 = n as f64 + 1.0;
        if a == np1 / 2.0 || a == np1 {
            return Err(Error::Unsupported(format!(
                "ERKC a = {a} lies on a regularity boundary for n = {n} (a = (n+1)/2 or a = n+1)"
            )));
        }
    }
    Ok(())
}

/// Regularity of v_n on the family's physical domain (ℝ for HO and Morse, x > 0 for ERKC).
pub fn regularity_check(f: &FamilySpec, n: usize) -> Result<RegularityReport> {
    regularity_check_on(f, n, f.domain())
}

/// Same as [`regularity_check`] on an explicit domain (used for odd-n HO on x > 0).
pub fn regularity_check_on(f: &FamilySpec, n: usize, domain: Domain) -> Result<RegularityReport> {
    f.validate()?;
    reject_erkc_boundary(f, n)?;
    let v = rs_regularized(f, n)?;
    let (t_lo, t_hi) = v.denominator.argument.image(domain);
    let sturm = if v.denominator.polynomial.degree() == 0 {
        0
    } else {
        count_real_roots(&v.denominator.polynomial, t_lo, t_hi)?
    };

    let (deg, alpha, predicted, reason_if_singular) = match *f {
        FamilySpec::HarmonicOscillator { .. } => {
            let m = n / 2;
            let p = n % 2;
            let alpha = p as f64 - 0.5;
            let z = klh_zero_counts(m, alpha);
            // t = −ωx²/2 ≤ 0: each negative zero gives ±x, the x^p factor a zero at 0
            let origin_in = domain.contains(0.0);
            let predicted = 2 * z.negative + if p == 1 && origin_in { 1 } else { 0 };
            (m, alpha, predicted, "zero at the origin for odd n".to_string())
        }
        FamilySpec::Morse { a, alpha, .. } => {
            let beta = -2.0 * (a / alpha + 1.0 + n as f64);
            let z = klh_zero_counts(n, beta);
            (n, beta, z.negative, format!("L_{n}^({beta}) has a negative zero (odd n)"))
        }
        FamilySpec::Erkc { a, .. } => {
            let beta = 1.0 - 2.0 * a;
            let z = klh_zero_counts(n, beta);
            let np1 = n as f64 + 1.0;
            let predicted = if a < np1 { z.positive } else { z.negative };
            let reason = if a < np1 {
                format!("a = {a} <= (n+1)/2: L_{n}^({beta}) has positive zeros")
            } else {
                format!("a = {a} > n+1 with odd n: L_{n}^({beta}) has a negative zero")
            };
            (n, beta, predicted, reason)
        }
    };
    let branch = klh_branch(deg, alpha);
    let zero_counts = klh_zero_counts(deg, alpha);
    if predicted != sturm {
        return Err(Error::InternalInconsistency(format!(
            "{f}, n = {n}: zero-location theorem predicts {predicted} domain zeros, Sturm count finds {sturm}"
        )));
    }
    let (verdict, reason) = if predicted == 0 {
        (Verdict::Regular, format!("no zero of L_{deg}^({alpha}) in the domain"))
    } else {
        (Verdict::SingularInDomain, reason_if_singular)
    };
    Ok(RegularityReport {
        verdict,
        laguerre_degree: deg,
        laguerre_alpha: alpha,
        branch,
        zero_counts,
        predicted_domain_zeros: predicted,
        sturm_domain_zeros: sturm,
        reason,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        let ho = FamilySpec::ho(1.0).unwrap();
        assert!(regularity_check(&ho, 2).unwrap().is_regular());
        let r1 = regularity_check(&ho, 1).unwrap();
        assert_eq!(r1.verdict, Verdict::SingularInDomain);
        assert_eq!(r1.sturm_domain_zeros, 1);
        assert!(regularity_check_on(&ho, 1, Domain::HALF_LINE).unwrap().is_regular());

        let e = FamilySpec::erkc(1.6, 2.0).unwrap();
        assert!(regularity_check(&e, 1).unwrap().is_regular());
    }

    #[test]
    fn morse_parity() {
        let m = FamilySpec::morse(5.0, 1.0, 1.0).unwrap();
        assert!(regularity_check(&m, 2).unwrap().is_regular());
        assert!(!regularity_check(&m, 3).unwrap().is_regular());
    }

    #[test]
    fn erkc_cases() {
        let g = 2.0;
        assert!(regularity_check(&FamilySpec::erkc(4.0, g).unwrap(), 2).unwrap().is_regular());
        assert!(!regularity_check(&FamilySpec::erkc(4.0, g).unwrap(), 1).unwrap().is_regular());
        assert!(!regularity_check(&FamilySpec::erkc(1.2, g).unwrap(), 3).unwrap().is_regular());
        assert!(matches!(
            regularity_check(&FamilySpec::erkc(1.5, g).unwrap(), 2),
            Err(Error::Unsupported(_))
        ));
        assert!(matches!(
            regularity_check(&FamilySpec::erkc(3.0, g).unwrap(), 2),
            Err(Error::Unsupported(_))
        ));
    }
}
