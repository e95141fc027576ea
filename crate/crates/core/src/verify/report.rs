use std::fmt::Write;

use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Tolerances {
    /// Normalized Schrödinger residual of closed-form eigenstates.
    pub residual: f64,
    /// Absolute energy difference against the eigen-solver.
    pub spectrum: f64,
    /// Largest off-diagonal entry of the normalized Gram matrix.
    pub orthogonality: f64,
    /// Relative deviation of the superpartner from the base potential.
    pub superpartner: f64,
    /// Normalized Riccati residual and continued-fraction agreement.
    pub rs: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Self { residual: 1e-8, spectrum: 1e-5, orthogonality: 1e-8, superpartner: 1e-10, rs: 1e-9 }
    }
}

/// Value recorded when a check could not be evaluated.
pub(crate) const UNEVALUATED: f64 = f64::MAX;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub measured: f64,
    pub tolerance: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

impl Check {
    /// Passes iff measured < tolerance.
    pub fn below(name: impl Into<String>, measured: f64, tolerance: f64) -> Self {
        let measured = finite(measured);
        Self { name: name.into(), passed: measured < tolerance, measured, tolerance, detail: None }
    }

    /// Passes iff measured ≤ tolerance; used for counts.
    pub fn at_most(name: impl Into<String>, measured: f64, tolerance: f64) -> Self {
        let measured = finite(measured);
        Self { name: name.into(), passed: measured <= tolerance, measured, tolerance, detail: None }
    }

    pub fn failed(name: impl Into<String>, tolerance: f64, detail: impl Into<String>) -> Self {
        Self {
            name: name.into(),
            passed: false,
            measured: UNEVALUATED,
            tolerance,
            detail: Some(detail.into()),
        }
    }

    pub fn with_detail(mut self, detail: impl Into<String>) -> Self {
        self.detail = Some(detail.into());
        self
    }
}

fn finite(x: f64) -> f64 {
    if x.is_finite() {
        x
    } else {
        UNEVALUATED
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerificationReport {
    pub case_id: String,
    /// Expected to fail its regularity check.
    pub negative: bool,
    pub checks: Vec<Check>,
    pub overall: bool,
}

impl VerificationReport {
    pub(crate) fn new(case_id: String, negative: bool, checks: Vec<Check>) -> Self {
        let overall = checks.iter().all(|c| c.passed);
        Self { case_id, negative, checks, overall }
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    /// Positive cases must pass every check; negative cases must fail regularity.
    pub fn meets_expectation(&self) -> bool {
        if self.negative {
            self.check("regularity").is_some_and(|c| !c.passed)
        } else {
            self.overall
        }
    }

    /// Line-oriented text: one `case` line followed by one line per check.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let verdict = if self.overall { "PASS" } else { "FAIL" };
        let kind = if self.negative { "negative" } else { "positive" };
        let expected = if self.meets_expectation() { "as-expected" } else { "unexpected" };
        let _ = writeln!(s, "case\t{}\t{verdict}\t{kind}\t{expected}", self.case_id);
        for c in &self.checks {
            let _ = write!(
                s,
                "check\t{}\t{}\t{:.16e}\t{:.16e}",
                c.name,
                if c.passed { "PASS" } else { "FAIL" },
                c.measured,
                c.tolerance
            );
            if let Some(d) = &c.detail {
                let _ = write!(s, "\t{}", d.replace(['\t', '\n'], " "));
            }
            s.push('\n');
        }
        s
    }
}
