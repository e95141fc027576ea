//! Zero-location trichotomy for generalized Laguerre polynomials of real parameter.
//!
//! The intermediate branch uses the floor of α for the integer part. That choice is
//! cross-checked against Sturm counts over n ≤ 12, α ∈ {−9.5, −9, …, 9.5}.

use std::fmt;

use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ZeroCount {
    pub positive: usize,
    pub negative: usize,
    pub origin_multiplicity: usize,
}

/// Which branch of the theorem produced a count.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum KlhBranch {
    /// α > −1: all n zeros positive.
    AboveMinusOne,
    /// −n < α < −1, α not an integer.
    Intermediate,
    /// α < −n: no positive zero, one negative zero for odd n.
    BelowMinusN,
    /// α ∈ {−n, …, −1}: zero of multiplicity |α| at the origin.
    IntegerOrigin,
}

impl fmt::Display for KlhBranch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            KlhBranch::AboveMinusOne => "alpha > -1",
            KlhBranch::Intermediate => "-n < alpha < -1",
            KlhBranch::BelowMinusN => "alpha < -n",
            KlhBranch::IntegerOrigin => "alpha in {-n,...,-1}",
        };
        f.write_str(s)
    }
}

pub fn klh_branch(n: usize, alpha: f64) -> KlhBranch {
    let nf = n as f64;
    if alpha > -1.0 || n == 0 {
        KlhBranch::AboveMinusOne
    } else if alpha.fract() == 0.0 && alpha >= -nf {
        KlhBranch::IntegerOrigin
    } else if alpha < -nf {
        KlhBranch::BelowMinusN
    } else {
        KlhBranch::Intermediate
    }
}

pub fn klh_zero_counts(n: usize, alpha: f64) -> ZeroCount {
    match klh_branch(n, alpha) {
        KlhBranch::AboveMinusOne => ZeroCount {
            positive: n,
            negative: 0,
            origin_multiplicity: 0,
        },
        KlhBranch::IntegerOrigin => {
            let j = (-alpha) as usize;
            ZeroCount {
                positive: n - j,
                negative: 0,
                origin_multiplicity: j,
            }
        }
        KlhBranch::BelowMinusN => ZeroCount {
            positive: 0,
            negative: n % 2,
            origin_multiplicity: 0,
        },
        KlhBranch::Intermediate => {
            let fl = alpha.floor();
            ZeroCount {
                positive: (n as f64 + fl + 1.0) as usize,
                negative: if (fl as i64).rem_euclid(2) == 1 { 0 } else { 1 },
                origin_multiplicity: 0,
            }
        }
    }
}
