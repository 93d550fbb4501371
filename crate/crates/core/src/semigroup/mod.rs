//! Affine semigroups `NA`: Hilbert bases, normality, smoothness,
//! unimodularity and hereditary normality.

pub mod hilbert_basis;
pub mod reports;

pub use hilbert_basis::{hilbert_basis, semigroup_membership, Membership};
pub use reports::{
    chart, is_hereditarily_normal, is_normal, is_normal_projective, is_smooth, is_unimodular, semigroup_report,
    ChartReport, HereditaryReport, NormalityReport, ProjectiveReport, SemigroupReport, SmoothnessReport,
    UnimodularReport,
};
