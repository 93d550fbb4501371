pub mod error;
pub mod gallery;
pub mod groebner;
pub mod lattice;
pub mod poly;
pub mod polyhedral;
pub mod semigroup;
pub mod serde_util;
pub mod sets;

pub use error::{Result, ToricError};
