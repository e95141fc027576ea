//! Real-root counting and isolation by Sturm sequences in double precision.

use super::poly::Polynomial;
use crate::error::{Error, Result};

const DEGENERATE_THRESHOLD: f64 = 1e-300;
const REMAINDER_TRIM: f64 = 1e-11;
const ENDPOINT_ZERO: f64 = 1e-13;

/// Synthetic division by (t − r), dropping the remainder.
fn deflate(p: &Polynomial, r: f64) -> Polynomial {
    let c = p.coeffs();
    let n = c.len() - 1;
    let mut q = vec![0.0; n];
    let mut acc = 0.0;
    for j in (1..=n).rev() {
        acc = acc * r + c[j];
        q[j - 1] = acc;
    }
    Polynomial::new(q).with_var(p.var())
}

fn vanishes_at(p: &Polynomial, t: f64) -> bool {
    if p.degree() == 0 {
        return false;
    }
    p.eval(t).abs() <= ENDPOINT_ZERO * p.abs_eval(t)
}

/// Remove every root sitting on a finite endpoint so the open-interval count is exact.
fn strip_endpoint_roots(mut p: Polynomial, lo: f64, hi: f64) -> Polynomial {
    for &e in &[lo, hi] {
        if e.is_finite() {
            while vanishes_at(&p, e) {
                p = deflate(&p, e);
            }
        }
    }
    p
}

/// Scale factor ρ with p(ρu) having balanced extreme coefficients.
fn balance_factor(p: &Polynomial) -> f64 {
    let c = p.coeffs();
    let n = p.degree();
    let low = match c.iter().position(|&v| v != 0.0) {
        Some(j) if j < n => j,
        _ => return 1.0,
    };
    let rho = (c[low].abs() / c[n].abs()).powf(1.0 / (n - low) as f64);
    if rho.is_finite() && rho > 0.0 {
        rho
    } else {
        1.0
    }
}

fn normalized(p: Polynomial) -> Polynomial {
    let m = p.max_abs_coeff();
    if m == 0.0 {
        p
    } else {
        p.scale(1.0 / m)
    }
}

/// Drop leading coefficients that are roundoff relative to `scale`.
fn trim_small_leading(p: Polynomial, scale: f64) -> Polynomial {
    let mut c = p.coeffs().to_vec();
    while c.len() > 1 && c.last().unwrap().abs() <= REMAINDER_TRIM * scale {
        c.pop();
    }
    if c.len() == 1 && c[0].abs() <= REMAINDER_TRIM * scale {
        c[0] = 0.0;
    }
    Polynomial::new(c).with_var(p.var())
}

fn sturm_chain(p: &Polynomial) -> Vec<Polynomial> {
    let mut chain = vec![normalized(p.clone())];
    if p.degree() == 0 {
        return chain;
    }
    chain.push(normalized(p.derivative()));
    loop {
        let len = chain.len();
        let (_, r) = chain[len - 2].div_rem(&chain[len - 1]);
        let r = trim_small_leading(-&r, 1.0);
        if r.is_zero() {
            break;
        }
        chain.push(normalized(r));
        if chain.last().unwrap().degree() == 0 {
            break;
        }
    }
    chain
}

fn sign_at(p: &Polynomial, t: f64) -> f64 {
    if t == f64::INFINITY {
        p.leading().signum()
    } else if t == f64::NEG_INFINITY {
        let s = p.leading().signum();
        if p.degree() % 2 == 0 {
            s
        } else {
            -s
        }
    } else {
        let v = p.eval(t);
        if v.abs() <= ENDPOINT_ZERO * p.abs_eval(t) {
            0.0
        } else {
            v.signum()
        }
    }
}

fn variations(chain: &[Polynomial], t: f64) -> usize {
    let mut count = 0;
    let mut last = 0.0;
    for p in chain {
        let s = sign_at(p, t);
        if s == 0.0 {
            continue;
        }
        if last != 0.0 && s != last {
            count += 1;
        }
        last = s;
    }
    count
}

struct Prepared {
    chain: Vec<Polynomial>,
    rho: f64,
}

fn prepare(p: &Polynomial, lo: f64, hi: f64) -> Result<Option<Prepared>> {
    if p.max_abs_coeff() < DEGENERATE_THRESHOLD {
        return Err(Error::DegeneratePolynomial);
    }
    if !(lo < hi) {
        return Err(Error::InvalidParameter(format!(
            "root interval ({lo}, {hi}) is empty"
        )));
    }
    let p = strip_endpoint_roots(normalized(p.clone()), lo, hi);
    if p.degree() == 0 {
        return Ok(None);
    }
    let rho = balance_factor(&p);
    let chain = sturm_chain(&p.scale_argument(rho));
    Ok(Some(Prepared { chain, rho }))
}

/// Number of distinct real roots of `p` in the open interval (lo, hi).
///
/// Either endpoint may be infinite. Roots lying exactly on a finite endpoint are
/// deflated before the chain is built and never counted.
pub fn count_real_roots(p: &Polynomial, lo: f64, hi: f64) -> Result<usize> {
    let prep = match prepare(p, lo, hi)? {
        Some(prep) => prep,
        None => return Ok(0),
    };
    let a = lo / prep.rho;
    let b = hi / prep.rho;
    Ok(variations(&prep.chain, a).saturating_sub(variations(&prep.chain, b)))
}

/// Distinct real roots of `p` in (lo, hi), ascending, isolated by Sturm bisection and
/// polished by bisection on sign changes.
pub fn real_roots(p: &Polynomial, lo: f64, hi: f64) -> Result<Vec<f64>> {
    let prep = match prepare(p, lo, hi)? {
        Some(prep) => prep,
        None => return Ok(Vec::new()),
    };
    let chain = &prep.chain;
    let total = variations(chain, lo / prep.rho).saturating_sub(variations(chain, hi / prep.rho));
    if total == 0 {
        return Ok(Vec::new());
    }
    // Cauchy bound on the balanced polynomial keeps the search finite.
    let c = chain[0].coeffs();
    let lead = c.last().unwrap().abs();
    let bound = 1.0 + c[..c.len() - 1].iter().fold(0.0_f64, |m, v| m.max(v.abs())) / lead;
    let a = (lo / prep.rho).max(-bound);
    let b = (hi / prep.rho).min(bound);

    let mut roots = Vec::with_capacity(total);
    let mut stack = vec![(a, b)];
    while let Some((l, r)) = stack.pop() {
        let k = variations(chain, l).saturating_sub(variations(chain, r));
        if k == 0 {
            continue;
        }
        if k == 1 || r - l <= 1e-14 * (1.0 + l.abs().max(r.abs())) {
            roots.push(polish(&chain[0], l, r) * prep.rho);
            continue;
        }
        let mid = 0.5 * (l + r);
        if vanishes_at(&chain[0], mid) {
            roots.push(mid * prep.rho);
            let eps = 1e-12 * (1.0 + mid.abs());
            stack.push((mid + eps, r));
            stack.push((l, mid - eps));
        } else {
            stack.push((mid, r));
            stack.push((l, mid));
        }
    }
    roots.sort_by(|x, y| x.partial_cmp(y).unwrap());
    Ok(roots)
}

/// Bisection to machine resolution on an interval holding exactly one distinct root.
fn polish(p: &Polynomial, mut l: f64, mut r: f64) -> f64 {
    let sl = sign_at(p, l);
    if sl == 0.0 {
        return l;
    }
    if sign_at(p, r) == sl {
        // even multiplicity: the Sturm chain sees it, the sign does not
        return minimize_abs(p, l, r);
    }
    for _ in 0..200 {
        let mid = 0.5 * (l + r);
        if mid <= l || mid >= r {
            break;
        }
        let s = sign_at(p, mid);
        if s == 0.0 {
            return mid;
        }
        if s == sl {
            l = mid;
        } else {
            r = mid;
        }
    }
    0.5 * (l + r)
}

fn minimize_abs(p: &Polynomial, mut l: f64, mut r: f64) -> f64 {
    let dp = p.derivative();
    let s = dp.eval(l).signum();
    for _ in 0..200 {
        let mid = 0.5 * (l + r);
        if mid <= l || mid >= r {
            break;
        }
        if dp.eval(mid).signum() == s {
            l = mid;
        } else {
            r = mid;
        }
    }
    0.5 * (l + r)
}
