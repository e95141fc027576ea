//! The three base potentials, their RS functions and the symmetry that regularizes them.

pub mod regularity;
pub mod rs;
pub mod spec;
pub mod symmetry;

pub use regularity::{regularity_check, regularity_check_on, RegularityReport, Verdict};
pub use rs::{
    rs_continued_fraction_eval, rs_physical, rs_regularized, ArgumentMap, LogPrefactor,
    MappedPolynomial, RsFunction,
};
pub use spec::{Domain, FamilyKind, FamilySpec};
pub use symmetry::{gamma_map, SymmetryImage};
