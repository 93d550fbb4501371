//! Exact integer linear algebra: configurations, kernel lattices, indices
//! and gradings.

pub mod binomial;
pub mod config;
pub mod lp;
pub mod matrix;

pub use binomial::{format_monomial, parse_binomial, parse_monomial, LatticeBinomial};
pub use config::{default_labels, grading, kernel_lattice, lattice_index, Configuration, LatticeIndex, SublatticeDescription};
pub use matrix::{IntMatrix, Q};
