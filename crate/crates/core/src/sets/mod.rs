//! Circuits, Graver bases, universal Gröbner bases, true degrees and the
//! degree-bound report.

pub mod circuits;
pub mod degree;
pub mod graver;
pub mod lawrence;
pub mod ugb;

pub use circuits::{circuit_info, circuits, is_circuit, maxdeg, sort_binomials, CircuitInfo};
pub use degree::{degree_bound_report, true_degree, BoundChecks, Check, DegreeBoundReport};
pub use graver::{check_graver_axiom, graver, graver_by_completion};
pub use lawrence::lawrence;
pub use ugb::{universal_groebner_basis, UgbMode, UniversalGroebnerBasis};
