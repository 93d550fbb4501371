//! Normality, smoothness, unimodularity and hereditary normality.

use num_bigint::BigInt;
use num_traits::{One, Signed};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::hilbert_basis::{hilbert_basis_coords, member_coords, Membership, SemigroupCone};
use crate::error::{Result, ToricError};
use crate::groebner::{toric_ideal, TermOrder};
use crate::lattice::{lattice_index, Configuration, IntMatrix, LatticeBinomial, LatticeIndex, SublatticeDescription};
use crate::polyhedral::{cone_triangulation, vertices_of};
use crate::sets::circuits;

/// Normality of the affine semigroup `NA`.
#[derive(Clone, Debug, Serialize)]
pub struct NormalityReport {
    pub normal: bool,
    #[serde(serialize_with = "crate::serde_util::big_vecs")]
    pub hilbert_basis: Vec<Vec<BigInt>>,
    /// The Hilbert basis again when `A` is not normal: it generates the
    /// normalization.
    #[serde(serialize_with = "opt_vecs")]
    pub normalization_generators: Option<Vec<Vec<BigInt>>>,
    /// A point of `(pos(A) ∩ ZA) \ NA`.
    #[serde(serialize_with = "opt_vec")]
    pub witness: Option<Vec<BigInt>>,
}

fn opt_vec<S: serde::Serializer>(v: &Option<Vec<BigInt>>, s: S) -> std::result::Result<S::Ok, S::Error> {
    match v {
        Some(v) => crate::serde_util::big_vec(v, s),
        None => s.serialize_none(),
    }
}

fn opt_vecs<S: serde::Serializer>(v: &Option<Vec<Vec<BigInt>>>, s: S) -> std::result::Result<S::Ok, S::Error> {
    match v {
        Some(v) => crate::serde_util::big_vecs(v, s),
        None => s.serialize_none(),
    }
}

fn normality_of(cone: &SemigroupCone) -> Result<(NormalityReport, Vec<Vec<BigInt>>)> {
    let hb = hilbert_basis_coords(cone)?;
    let cols = cone.distinct_columns();
    let mut witness = None;
    for x in &hb {
        if cols.contains(x) {
            continue;
        }
        match member_coords(cone, &cols, x) {
            Membership::Member => {}
            Membership::NotMember => {
                witness = Some(cone.to_ambient(x));
                break;
            }
            Membership::Inconclusive => {
                return Err(ToricError::CapExceeded {
                    what: "semigroup membership states".into(),
                    limit: super::hilbert_basis::MAX_MEMBERSHIP_STATES,
                })
            }
        }
    }
    let ambient: Vec<Vec<BigInt>> = hb.iter().map(|x| cone.to_ambient(x)).collect();
    let normal = witness.is_none();
    Ok((
        NormalityReport {
            normal,
            normalization_generators: (!normal).then(|| ambient.clone()),
            hilbert_basis: ambient,
            witness,
        },
        hb,
    ))
}

/// Whether `NA = pos(A) ∩ ZA`. For graded `A` this is projective normality.
pub fn is_normal(a: &Configuration) -> Result<NormalityReport> {
    Ok(normality_of(&SemigroupCone::new(a)?)?.0)
}

/// `NA ≅ N^r`: normal with a Hilbert basis that is a basis of `ZA`.
fn smooth_of(cone: &SemigroupCone, normal: bool, hb: &[Vec<BigInt>]) -> bool {
    let r = cone.rank();
    normal && hb.len() == r && IntMatrix::from_rows(hb.to_vec(), r).determinant().abs().is_one()
}

/// The chart `A − a_i`, without zero columns; `None` if nothing is left.
pub fn chart(a: &Configuration, i: usize) -> Result<Option<Configuration>> {
    let cols = a.columns_i64()?;
    let v = cols[i].clone();
    let shifted: Vec<Vec<i64>> = cols
        .iter()
        .filter(|c| **c != v)
        .map(|c| c.iter().zip(&v).map(|(x, y)| x - y).collect())
        .collect();
    if shifted.is_empty() {
        return Ok(None);
    }
    Configuration::from_columns(&shifted, None).map(Some)
}

#[derive(Clone, Debug, Serialize)]
pub struct ChartReport {
    /// Column index of the vertex.
    pub vertex: usize,
    pub normal: bool,
    pub smooth: bool,
    #[serde(serialize_with = "opt_vec")]
    pub witness: Option<Vec<BigInt>>,
}

fn chart_report(a: &Configuration, vertex: usize) -> Result<ChartReport> {
    let Some(c) = chart(a, vertex)? else {
        return Ok(ChartReport { vertex, normal: true, smooth: true, witness: None });
    };
    let cone = SemigroupCone::new(&c)?;
    let (rep, hb) = normality_of(&cone)?;
    Ok(ChartReport { vertex, normal: rep.normal, smooth: smooth_of(&cone, rep.normal, &hb), witness: rep.witness })
}

/// Normality of the projective variety, chart by chart over the vertices.
#[derive(Clone, Debug, Serialize)]
pub struct ProjectiveReport {
    /// All vertex charts normal.
    pub normal: bool,
    /// All vertex charts smooth.
    pub smooth: bool,
    pub charts: Vec<ChartReport>,
}

pub fn is_normal_projective(a: &Configuration) -> Result<ProjectiveReport> {
    a.graded_or_err()?;
    let charts: Vec<ChartReport> = vertices_of(a)?.into_iter().map(|v| chart_report(a, v)).collect::<Result<_>>()?;
    Ok(ProjectiveReport { normal: charts.iter().all(|c| c.normal), smooth: charts.iter().all(|c| c.smooth), charts })
}

#[derive(Clone, Debug, Serialize)]
pub struct SmoothnessReport {
    pub smooth: bool,
    pub normal: bool,
    pub projective: bool,
    /// Per-vertex charts in the projective case.
    pub charts: Vec<ChartReport>,
    pub hilbert_basis_size: Option<usize>,
    pub rank: usize,
}

/// Smoothness of `X_A` (affine) or of `Y_A` (projective, all vertex charts).
pub fn is_smooth(a: &Configuration, projective: bool) -> Result<SmoothnessReport> {
    if projective {
        let p = is_normal_projective(a)?;
        return Ok(SmoothnessReport {
            smooth: p.smooth,
            normal: p.normal,
            projective,
            charts: p.charts,
            hilbert_basis_size: None,
            rank: a.rank() - 1,
        });
    }
    let cone = SemigroupCone::new(a)?;
    let (rep, hb) = normality_of(&cone)?;
    Ok(SmoothnessReport {
        smooth: smooth_of(&cone, rep.normal, &hb),
        normal: rep.normal,
        projective,
        charts: vec![],
        hilbert_basis_size: Some(hb.len()),
        rank: cone.rank(),
    })
}

/// Largest `n` for which the equivalent conditions are spot-checked.
pub const SPOT_CHECK_MAX_N: usize = 8;
const SPOT_SAMPLES: usize = 3;

#[derive(Clone, Debug, Serialize)]
pub struct UnimodularReport {
    pub unimodular: bool,
    /// A circuit with a side that is not squarefree.
    pub violating_circuit: Option<LatticeBinomial>,
    /// `ZA / ZB` torsion-free for every subset `B` (checked when `n` is small).
    pub subsets_free: Option<bool>,
    pub sampled_triangulations: usize,
    pub sampled_initial_ideals: usize,
}

fn subsets_free(a: &Configuration) -> Result<bool> {
    let (za, coords) = a.group_coordinates();
    let n = a.n();
    for mask in 1u32..(1 << n) {
        let vs: Vec<Vec<BigInt>> = (0..n).filter(|&j| mask >> j & 1 == 1).map(|j| coords[j].clone()).collect();
        let sub = SublatticeDescription::from_vectors(&vs, za.rank());
        match lattice_index(&sub, &sub.saturation())? {
            LatticeIndex::Finite(k) if k.is_one() => {}
            _ => return Ok(false),
        }
    }
    Ok(true)
}

fn squarefree(m: &[u32]) -> bool {
    m.iter().all(|&e| e <= 1)
}

/// Unimodularity via circuits: every circuit has both sides squarefree.
/// Small instances are cross-checked against the subset criterion, sampled
/// regular triangulations and sampled initial ideals.
pub fn is_unimodular(a: &Configuration) -> Result<UnimodularReport> {
    let circ = circuits(a)?;
    let violating = circ.iter().find(|u| u.squarefree_sides() != (true, true)).cloned();
    let unimodular = violating.is_none();
    let mut report = UnimodularReport {
        unimodular,
        violating_circuit: violating,
        subsets_free: None,
        sampled_triangulations: 0,
        sampled_initial_ideals: 0,
    };
    let n = a.n();
    if n > SPOT_CHECK_MAX_N {
        return Ok(report);
    }
    let free = subsets_free(a)?;
    if free != unimodular {
        return Err(ToricError::Internal(format!("circuit test says {unimodular}, subset test says {free}")));
    }
    report.subsets_free = Some(free);
    let mut rng = ChaCha8Rng::seed_from_u64(0x3a5);
    for _ in 0..SPOT_SAMPLES {
        let w: Vec<i64> = (0..n).map(|_| rng.gen_range(1..=10_000)).collect();
        if a.is_pointed() {
            let t = cone_triangulation(a, Some(&w))?;
            if unimodular && !t.is_unimodular() {
                return Err(ToricError::Internal(format!("non-unimodular triangulation for heights {w:?}")));
            }
            report.sampled_triangulations += 1;
        }
        let mut perm: Vec<usize> = (0..n).collect();
        perm.shuffle(&mut rng);
        let gb = toric_ideal(a, &TermOrder::weight_lex(w, perm))?;
        if unimodular && !gb.initial_monomials().iter().all(|m| squarefree(m)) {
            return Err(ToricError::Internal("non-radical initial ideal of a unimodular configuration".into()));
        }
        report.sampled_initial_ideals += 1;
    }
    Ok(report)
}

#[derive(Clone, Debug, Serialize)]
pub struct HereditaryReport {
    pub hereditarily_normal: bool,
    /// A circuit with neither side squarefree.
    pub violating_circuit: Option<LatticeBinomial>,
    pub unimodular: bool,
    /// Normality of `A`, when it could be computed.
    pub normal: Option<bool>,
}

/// Every circuit has a squarefree side. Also confirms, where computable,
/// that unimodular ⇒ hereditarily normal ⇒ normal.
pub fn is_hereditarily_normal(a: &Configuration) -> Result<HereditaryReport> {
    let circ = circuits(a)?;
    let violating = circ.iter().find(|u| u.squarefree_sides() == (false, false)).cloned();
    let hereditary = violating.is_none();
    let unimodular = circ.iter().all(|u| u.squarefree_sides() == (true, true));
    if unimodular && !hereditary {
        return Err(ToricError::Internal("unimodular but not hereditarily normal".into()));
    }
    let normal = if a.is_pointed() {
        match is_normal(a) {
            Ok(r) => Some(r.normal),
            Err(ToricError::CapExceeded { .. }) => None,
            Err(e) => return Err(e),
        }
    } else {
        None
    };
    if hereditary && normal == Some(false) {
        return Err(ToricError::Internal("hereditarily normal but not normal".into()));
    }
    Ok(HereditaryReport { hereditarily_normal: hereditary, violating_circuit: violating, unimodular, normal })
}

/// Everything at once. Fields that need a pointed (or graded) `A` are
/// `None` otherwise.
#[derive(Clone, Debug, Serialize)]
pub struct SemigroupReport {
    pub pointed: bool,
    /// `Y_A` normal when graded (vertex charts), else `X_A` normal.
    pub normal: Option<bool>,
    /// `NA` saturated: projective normality when graded.
    pub projectively_normal: Option<bool>,
    pub smooth: Option<bool>,
    pub unimodular: bool,
    pub hereditarily_normal: bool,
    #[serde(serialize_with = "opt_vecs")]
    pub hilbert_basis: Option<Vec<Vec<BigInt>>>,
    #[serde(serialize_with = "opt_vec")]
    pub witness: Option<Vec<BigInt>>,
}

pub fn semigroup_report(a: &Configuration) -> Result<SemigroupReport> {
    let pointed = a.is_pointed();
    let unimodular = is_unimodular(a)?.unimodular;
    let hereditarily_normal = is_hereditarily_normal(a)?.hereditarily_normal;
    if !pointed {
        return Ok(SemigroupReport {
            pointed,
            normal: None,
            projectively_normal: None,
            smooth: None,
            unimodular,
            hereditarily_normal,
            hilbert_basis: None,
            witness: None,
        });
    }
    let n = is_normal(a)?;
    let (normal, smooth) = if a.is_graded() {
        let p = is_normal_projective(a)?;
        (p.normal, p.smooth)
    } else {
        let s = is_smooth(a, false)?;
        (s.normal, s.smooth)
    };
    Ok(SemigroupReport {
        pointed,
        normal: Some(normal),
        projectively_normal: a.is_graded().then_some(n.normal),
        smooth: Some(smooth),
        unimodular,
        hereditarily_normal,
        hilbert_basis: Some(n.hilbert_basis),
        witness: n.witness,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gallery;
    use crate::lattice::default_labels;
    use crate::lattice::matrix::from_i64_vec;

    #[test]
    fn quadric_cone_normal_not_smooth() {
        let a = gallery::quadric_cone();
        assert!(is_normal(&a).unwrap().normal);
        let s = is_smooth(&a, false).unwrap();
        assert!(s.normal && !s.smooth);
        assert_eq!(s.hilbert_basis_size, Some(3));
    }

    #[test]
    fn sparse_curve_smooth_but_not_projectively_normal() {
        for r in 4..=6 {
            let a = gallery::sparse_curve(r).unwrap();
            let n = is_normal(&a).unwrap();
            assert!(!n.normal);
            let w = n.witness.unwrap();
            assert_eq!(w.iter().sum::<BigInt>(), BigInt::from(r as i64));
            let p = is_normal_projective(&a).unwrap();
            assert!(p.normal && p.smooth);
            assert_eq!(p.charts.len(), 2);
        }
        let n = is_normal(&gallery::sparse_curve(4).unwrap()).unwrap();
        assert_eq!(n.witness, Some(from_i64_vec(&[2, 2])));
    }

    #[test]
    fn standard_basis_is_smooth() {
        let a = Configuration::from_rows(&[vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]]).unwrap();
        assert!(is_smooth(&a, false).unwrap().smooth);
    }

    #[test]
    fn twisted_cubic_verdicts() {
        let a = gallery::twisted_cubic();
        let u = is_unimodular(&a).unwrap();
        assert!(!u.unimodular);
        assert_eq!(u.subsets_free, Some(false));
        let h = is_hereditarily_normal(&a).unwrap();
        assert!(!h.hereditarily_normal);
        assert_eq!(h.violating_circuit.unwrap().format(&default_labels(4)), "x1^2*x4 - x2^3");
        assert_eq!(h.normal, Some(true));
        let p = is_normal_projective(&a).unwrap();
        assert!(p.normal);
    }

    #[test]
    fn graphs_are_unimodular() {
        let cycle = gallery::graph(5, &[(1, 2), (2, 3), (3, 4), (4, 5), (5, 1)]).unwrap();
        let u = is_unimodular(&cycle).unwrap();
        assert!(u.unimodular && u.subsets_free == Some(true));
        let k4 = gallery::complete_digraph(4).unwrap();
        assert!(is_hereditarily_normal(&k4).unwrap().hereditarily_normal);
        let seg = gallery::segre(1, 1).unwrap();
        let u = is_unimodular(&seg).unwrap();
        assert!(u.unimodular && u.sampled_triangulations > 0);
    }

    #[test]
    fn octahedron_and_hexagon_normal() {
        assert!(is_normal(&gallery::octahedron()).unwrap().normal);
        assert!(is_normal_projective(&gallery::hexagon(1, 2, 3).unwrap()).unwrap().normal);
    }

    #[test]
    fn normalization_is_normal() {
        let a = gallery::sparse_curve(5).unwrap();
        let gens = is_normal(&a).unwrap().normalization_generators.unwrap();
        let cols: Vec<Vec<i64>> = gens.iter().map(|g| crate::lattice::matrix::to_i64_vec(g).unwrap()).collect();
        let b = Configuration::from_columns(&cols, None).unwrap();
        assert!(is_normal(&b).unwrap().normal);
    }

    #[test]
    fn combined_report() {
        let r = semigroup_report(&gallery::sparse_curve(4).unwrap()).unwrap();
        assert_eq!((r.normal, r.projectively_normal, r.smooth), (Some(true), Some(false), Some(true)));
        let r = semigroup_report(&gallery::complete_digraph(3).unwrap()).unwrap();
        assert!(!r.pointed && r.unimodular && r.normal.is_none());
    }
}
