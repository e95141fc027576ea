//! Verification of constructed extensions against the numerical oracles.

mod report;
mod run;

pub use report::{Check, Tolerances, VerificationReport};
pub use run::{default_matrix, verify_case, verify_matrix, verify_spec, CaseSpec};
