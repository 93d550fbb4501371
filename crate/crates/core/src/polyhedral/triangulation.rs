//! Regular triangulations by lifting, and normalized volume.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::cone::cone_facets;
use super::polytope::Homogenized;
use crate::error::{Result, ToricError};
use crate::lattice::{Configuration, IntMatrix};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Simplex {
    pub vertices: Vec<usize>,
    /// Normalized volume with respect to the affine lattice spanned by `A`.
    #[serde(serialize_with = "crate::serde_util::big")]
    pub volume: BigInt,
    pub unimodular: bool,
}

/// A regular triangulation of `A` together with the lifting that induces it.
#[derive(Clone, Debug, Serialize)]
pub struct Triangulation {
    pub simplices: Vec<Simplex>,
    /// Heights certifying regularity.
    #[serde(serialize_with = "crate::serde_util::big_vec")]
    pub weights: Vec<BigInt>,
}

impl Triangulation {
    pub fn volume(&self) -> BigInt {
        self.simplices.iter().map(|s| &s.volume).sum()
    }

    pub fn is_unimodular(&self) -> bool {
        self.simplices.iter().all(|s| s.unimodular)
    }
}

/// Lower cells of the lifted point set, as sorted index sets.
fn lower_cells(coords: &[Vec<BigInt>], w: &[BigInt]) -> Result<Vec<Vec<usize>>> {
    let k = coords[0].len();
    let mut gens: Vec<Vec<BigInt>> = coords
        .iter()
        .zip(w)
        .map(|(c, h)| c.iter().cloned().chain(std::iter::once(h.clone())).collect())
        .collect();
    let mut up = vec![BigInt::zero(); k + 1];
    up[k] = BigInt::one();
    gens.push(up);
    let facets = cone_facets(&gens, k + 1)?;
    Ok(facets.into_iter().filter(|f| f.normal[k].is_positive()).map(|f| f.members()).collect())
}

fn det_of(coords: &[Vec<BigInt>], idx: &[usize]) -> BigInt {
    let k = coords[0].len();
    IntMatrix::from_rows(idx.iter().map(|&i| coords[i].clone()).collect(), k).determinant().abs()
}

/// Cells of the regular triangulation of `pos(coords)` (a full-dimensional
/// pointed cone) induced by `weights`, and the heights actually used.
pub(crate) fn regular_cells(coords: &[Vec<BigInt>], weights: &[BigInt]) -> Result<(Vec<Vec<usize>>, Vec<BigInt>)> {
    let k = coords[0].len();
    let n = coords.len();
    if k == 1 {
        // A ray: the lowest generator spans it.
        let i = (0..n).min_by_key(|&i| (&weights[i], i)).expect("nonempty");
        return Ok((vec![vec![i]], weights.to_vec()));
    }
    let cells = lower_cells(coords, weights)?;
    if cells.iter().all(|c| c.len() == k) {
        return Ok((cells, weights.to_vec()));
    }
    // Refine a non-simplicial subdivision: `S·w + h` with `h_i = i·M^i`
    // induces a triangulation refining the one induced by `w` for `S`
    // large enough.
    let maxc = coords.iter().flatten().map(|x| x.abs()).max().unwrap_or_default();
    let mut m = BigInt::from(n as u64 + 2) + maxc;
    for _ in 0..8 {
        let h: Vec<BigInt> = (0..n).map(|i| BigInt::from(i as u64 + 1) * m.pow(i as u32 + 1)).collect();
        let scale = m.pow(n as u32 + 2);
        let lifted: Vec<BigInt> = weights.iter().zip(&h).map(|(w, h)| w * &scale + h).collect();
        let fine = lower_cells(coords, &lifted)?;
        let refines = fine.iter().all(|s| cells.iter().any(|c| s.iter().all(|i| c.contains(i))));
        if fine.iter().all(|c| c.len() == k) && refines {
            return Ok((fine, lifted));
        }
        m *= 2;
    }
    Err(ToricError::Internal("perturbation did not produce a triangulation".into()))
}

fn triangulate(coords: &[Vec<BigInt>], weights: &[BigInt]) -> Result<Triangulation> {
    let (cells, used) = regular_cells(coords, weights)?;
    Ok(finish(coords, cells, used))
}

fn finish(coords: &[Vec<BigInt>], mut cells: Vec<Vec<usize>>, weights: Vec<BigInt>) -> Triangulation {
    cells.sort();
    let simplices = cells
        .into_iter()
        .map(|v| {
            let volume = det_of(coords, &v);
            Simplex { unimodular: volume.is_one(), vertices: v, volume }
        })
        .collect();
    Triangulation { simplices, weights }
}

pub(crate) fn random_weights(n: usize, seed: u64) -> Vec<BigInt> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..n).map(|_| BigInt::from(rng.gen_range(0..1_000_000u64))).collect()
}

/// Regular triangulation of `conv(A)` induced by `weights`, or by seeded
/// random heights when none are given. Non-generic heights are refined by
/// a deterministic perturbation.
pub fn regular_triangulation(a: &Configuration, weights: Option<&[i64]>) -> Result<Triangulation> {
    let w: Vec<BigInt> = match weights {
        Some(w) if w.len() != a.n() => return Err(ToricError::DimensionMismatch { left: a.n(), right: w.len() }),
        Some(w) => w.iter().map(|&x| BigInt::from(x)).collect(),
        None => random_weights(a.n(), 0x5eed),
    };
    triangulate(&Homogenized::new(&a.columns()).coords, &w)
}

/// Regular triangulation of the cone `pos(A)` in coordinates of `ZA`;
/// simplex volumes are multiplicities `[ZA : Z σ]`. Requires `A` pointed.
pub fn cone_triangulation(a: &Configuration, weights: Option<&[i64]>) -> Result<Triangulation> {
    a.pointed_or_err()?;
    let w: Vec<BigInt> = match weights {
        Some(w) if w.len() != a.n() => return Err(ToricError::DimensionMismatch { left: a.n(), right: w.len() }),
        Some(w) => w.iter().map(|&x| BigInt::from(x)).collect(),
        None => random_weights(a.n(), 0x5eed),
    };
    triangulate(&a.group_coordinates().1, &w)
}

/// Normalized volume of `conv(A)` with respect to the affine lattice
/// spanned by `A` (a point has volume one). Two triangulations from
/// independent heights must agree.
pub fn normalized_volume(a: &Configuration) -> Result<BigInt> {
    let hom = Homogenized::new(&a.columns());
    let v1 = triangulate(&hom.coords, &random_weights(a.n(), 0x5eed))?.volume();
    let v2 = triangulate(&hom.coords, &random_weights(a.n(), 0xface))?.volume();
    if v1 != v2 {
        return Err(ToricError::Internal(format!("triangulation volumes disagree: {v1} vs {v2}")));
    }
    Ok(v1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gallery;

    #[test]
    fn unit_square_two_triangles() {
        let a = Configuration::from_columns(&[vec![0, 0], vec![1, 0], vec![0, 1], vec![1, 1]], None).unwrap();
        let t = regular_triangulation(&a, Some(&[0, 0, 0, 1])).unwrap();
        let cells: Vec<Vec<usize>> = t.simplices.iter().map(|s| s.vertices.clone()).collect();
        assert_eq!(cells, vec![vec![0, 1, 2], vec![1, 2, 3]]);
        assert!(t.is_unimodular());
        assert_eq!(normalized_volume(&a).unwrap(), BigInt::from(2));
    }

    #[test]
    fn flat_lifting_is_refined() {
        let a = Configuration::from_columns(&[vec![0, 0], vec![1, 0], vec![0, 1], vec![1, 1], vec![2, 2]], None).unwrap();
        let t = regular_triangulation(&a, Some(&[0; 5])).unwrap();
        assert_eq!(t.volume(), BigInt::from(4));
        assert!(t.simplices.iter().all(|s| s.vertices.len() == 3));
    }

    #[test]
    fn cone_over_quadric() {
        // pos{(2,0),(1,1),(0,2)} in ZA: two unimodular cones when (1,1) is low.
        let a = gallery::quadric_cone();
        let t = cone_triangulation(&a, Some(&[5, 0, 5])).unwrap();
        assert_eq!(t.simplices.len(), 2);
        assert!(t.is_unimodular());
        let t = cone_triangulation(&a, Some(&[0, 5, 0])).unwrap();
        assert_eq!(t.simplices.len(), 1);
        assert_eq!(t.volume(), BigInt::from(2));
    }

    #[test]
    fn known_volumes() {
        assert_eq!(normalized_volume(&gallery::twisted_cubic()).unwrap(), BigInt::from(3));
        assert_eq!(normalized_volume(&gallery::octahedron()).unwrap(), BigInt::from(4));
        assert_eq!(normalized_volume(&gallery::sparse_curve(5).unwrap()).unwrap(), BigInt::from(5));
        assert_eq!(normalized_volume(&gallery::segre(1, 2).unwrap()).unwrap(), BigInt::from(3));
        assert_eq!(normalized_volume(&gallery::birkhoff(3).unwrap()).unwrap(), BigInt::from(3));
        let p = Configuration::from_rows(&[vec![1, 1]]).unwrap();
        assert_eq!(normalized_volume(&p).unwrap(), BigInt::one());
    }
}
