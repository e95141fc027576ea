//! Classical polynomials, root counting and the Laguerre zero-location theorem.

pub mod classical;
pub mod klh;
pub mod poly;
pub mod sturm;

pub use classical::{
    glp_identity_residual, hermite_imaginary_as_laguerre, hermite_poly, laguerre_eval,
    laguerre_poly, pochhammer, HermiteLaguerre, Parity,
};
pub use klh::{klh_branch, klh_zero_counts, KlhBranch, ZeroCount};
pub use poly::{Polynomial, Variable};
pub use sturm::{count_real_roots, real_roots};
