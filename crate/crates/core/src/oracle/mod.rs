//! Numerical ground truth independent of the closed forms: a finite-difference
//! eigensolver, adaptive quadrature and a Schrödinger residual.

pub mod eigen;
pub mod grid;
pub mod quadrature;
pub mod residual;

pub use eigen::{solve_bound_states, solve_single, EigenResult};
pub use residual::schrodinger_residual;
pub use quadrature::{integrate, integrate_with_error, QuadratureResult};
pub use grid::{
    default_eigen_grid, default_points, weight_truncated_grid, GridSpec, Spacing, RESIDUAL_POINTS,
};
