//! Darboux–Bäcklund extensions: V^{(n)}, their eigenstates, orthogonal families and
//! superpartners.

pub mod eigenstate;
pub mod extension;
pub mod orthogonal;
pub mod polys;
pub mod spectrum;

pub use eigenstate::{extended_eigenstate, generic_eigenstate, ClosedFormEigenstate, NumeratorForm};
pub use extension::{
    dbt_rs, dbt_rs_with, extend, extend_with, extended_spectrum, extended_spectrum_upto,
    superpartner, ExtendedPotential, Superpartner,
};
pub use orthogonal::{orthogonal_family, FamilyMember, OrthogonalFamily, Weight};
pub use polys::{m_polynomial, n_polynomial, p_polynomial};
pub use spectrum::{Level, SpectrumLevel, SpectrumReport, DEFAULT_LEVELS};
