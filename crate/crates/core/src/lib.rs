pub mod error;
pub mod dbt;
pub mod families;
pub mod oracle;
pub mod polynomials;
pub mod verify;

pub use error::{Error, Result};
pub use families::FamilySpec;
