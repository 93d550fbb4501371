//! Facets of a full-dimensional pointed cone by the double description
//! method, with exact integer normals and bitset incidences.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::error::{Result, ToricError};
use crate::lattice::matrix::{dot, primitive};
use crate::lattice::IntMatrix;

/// Maximum number of generators handled (incidence sets are `u128`).
pub const MAX_GENERATORS: usize = 128;

/// A facet: primitive inner normal and the generators lying on it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConeFacet {
    pub normal: Vec<BigInt>,
    pub incidence: u128,
}

impl ConeFacet {
    pub fn contains(&self, i: usize) -> bool {
        self.incidence >> i & 1 == 1
    }

    pub fn members(&self) -> Vec<usize> {
        bits(self.incidence)
    }
}

pub fn bits(mut x: u128) -> Vec<usize> {
    let mut out = vec![];
    while x != 0 {
        let i = x.trailing_zeros() as usize;
        out.push(i);
        x &= x - 1;
    }
    out
}

fn greedy_basis(gens: &[Vec<BigInt>], k: usize) -> Vec<usize> {
    let mut chosen: Vec<usize> = vec![];
    let mut rank = 0;
    for i in 0..gens.len() {
        let mut rows: Vec<Vec<BigInt>> = chosen.iter().map(|&j: &usize| gens[j].clone()).collect();
        rows.push(gens[i].clone());
        let r = IntMatrix::from_rows(rows, k).rank();
        if r > rank {
            chosen.push(i);
            rank = r;
            if rank == k {
                break;
            }
        }
    }
    chosen
}

/// Facets of `pos(gens)` in `R^k`. The generators must span `R^k` and the
/// cone must be pointed.
pub fn cone_facets(gens: &[Vec<BigInt>], k: usize) -> Result<Vec<ConeFacet>> {
    let m = gens.len();
    if m > MAX_GENERATORS {
        return Err(ToricError::CapExceeded { what: "cone generators".into(), limit: MAX_GENERATORS });
    }
    if k == 0 {
        return Ok(vec![]);
    }
    let basis = greedy_basis(gens, k);
    if basis.len() < k {
        return Err(ToricError::Degenerate("cone generators do not span the ambient space".into()));
    }
    if k == 1 {
        // A ray: its only facet is the origin.
        let sign = if gens[basis[0]][0].is_positive() { 1 } else { -1 };
        return Ok(vec![ConeFacet { normal: vec![BigInt::from(sign)], incidence: 0 }]);
    }
    // Simplicial start: facet normals are the rows of the adjugate.
    let g = IntMatrix::from_rows(basis.iter().map(|&i| gens[i].clone()).collect(), k);
    let mut facets: Vec<ConeFacet> = Vec::with_capacity(k);
    for (r, &skip) in basis.iter().enumerate() {
        let others: Vec<usize> = (0..k).filter(|&j| j != r).collect();
        let sub = g.select_rows(&others);
        let mut normal = vec![BigInt::zero(); k];
        for (c, x) in normal.iter_mut().enumerate() {
            let cols: Vec<usize> = (0..k).filter(|&j| j != c).collect();
            let minor = sub.select_columns(&cols).determinant();
            *x = if c % 2 == 0 { minor } else { -minor };
        }
        let mut normal = primitive(&normal);
        if dot(&normal, &gens[skip]).is_negative() {
            normal.iter_mut().for_each(|x| *x = -x.clone());
        }
        let incidence = basis.iter().filter(|&&i| i != skip).fold(0u128, |acc, &i| acc | 1 << i);
        facets.push(ConeFacet { normal, incidence });
    }
    let mut processed: u128 = basis.iter().fold(0, |acc, &i| acc | 1 << i);
    for (i, g) in gens.iter().enumerate() {
        if processed >> i & 1 == 1 {
            continue;
        }
        let vals: Vec<BigInt> = facets.iter().map(|f| dot(&f.normal, g)).collect();
        let (mut pos, mut neg, mut zero) = (vec![], vec![], vec![]);
        for (f, v) in vals.iter().enumerate() {
            if v.is_positive() {
                pos.push(f);
            } else if v.is_negative() {
                neg.push(f);
            } else {
                zero.push(f);
            }
        }
        let bit = 1u128 << i;
        let mut next: Vec<ConeFacet> = Vec::with_capacity(facets.len());
        for &f in pos.iter() {
            next.push(facets[f].clone());
        }
        for &f in zero.iter() {
            let mut z = facets[f].clone();
            z.incidence |= bit;
            next.push(z);
        }
        for &p in &pos {
            for &q in &neg {
                let common = facets[p].incidence & facets[q].incidence;
                if (common.count_ones() as usize) < k - 2 {
                    continue;
                }
                let adjacent = facets
                    .iter()
                    .enumerate()
                    .all(|(r, f)| r == p || r == q || f.incidence & common != common);
                if !adjacent {
                    continue;
                }
                // Positive combination vanishing on the new generator.
                let (vp, vq) = (&vals[p], &vals[q]);
                let raw: Vec<BigInt> = facets[p]
                    .normal
                    .iter()
                    .zip(&facets[q].normal)
                    .map(|(a, b)| vp * b - vq * a)
                    .collect();
                next.push(ConeFacet { normal: primitive(&raw), incidence: common | bit });
            }
        }
        facets = next;
        processed |= bit;
    }
    // Final incidences against every generator (duplicates and interior
    // points processed early may be missing).
    for f in facets.iter_mut() {
        f.incidence = gens.iter().enumerate().filter(|(_, g)| dot(&f.normal, g).is_zero()).fold(0u128, |acc, (i, _)| acc | 1 << i);
    }
    facets.sort_by(|a, b| a.normal.cmp(&b.normal));
    facets.dedup_by(|a, b| a.normal == b.normal);
    Ok(facets)
}

/// Indices of generators spanning extreme rays, one per ray (lowest index
/// among positive multiples).
pub fn extreme_generators(gens: &[Vec<BigInt>], facets: &[ConeFacet], k: usize) -> Vec<usize> {
    let mut out: Vec<usize> = vec![];
    for (i, g) in gens.iter().enumerate() {
        if g.iter().all(Zero::is_zero) {
            continue;
        }
        let normals: Vec<Vec<BigInt>> = facets.iter().filter(|f| f.contains(i)).map(|f| f.normal.clone()).collect();
        if normals.is_empty() && k > 1 {
            continue;
        }
        if k > 1 && IntMatrix::from_rows(normals, k).rank() < k - 1 {
            continue;
        }
        let p = primitive(g);
        if out.iter().any(|&j| primitive(&gens[j]) == p) {
            continue;
        }
        out.push(i);
    }
    out
}

/// A pointed cone `pos(G)` with its facet description.
#[derive(Clone, Debug, Serialize)]
pub struct Cone {
    /// Indices of the generators spanning extreme rays.
    pub rays: Vec<usize>,
    /// Primitive inner facet normals in the cone's coordinates.
    #[serde(serialize_with = "crate::serde_util::big_vecs")]
    pub facet_normals: Vec<Vec<BigInt>>,
    /// Generator indices on each facet.
    pub facet_members: Vec<Vec<usize>>,
    pub dim: usize,
}

impl Cone {
    pub fn new(gens: &[Vec<BigInt>], k: usize) -> Result<Self> {
        let facets = cone_facets(gens, k)?;
        let rays = extreme_generators(gens, &facets, k);
        Ok(Cone {
            rays,
            facet_members: facets.iter().map(ConeFacet::members).collect(),
            facet_normals: facets.into_iter().map(|f| f.normal).collect(),
            dim: k,
        })
    }

    pub fn contains(&self, x: &[BigInt]) -> bool {
        self.facet_normals.iter().all(|n| !dot(n, x).is_negative())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(xs: &[i64]) -> Vec<BigInt> {
        xs.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn square_cone() {
        // cone over the unit square at height 1
        let gens = vec![v(&[1, 0, 0]), v(&[1, 1, 0]), v(&[1, 0, 1]), v(&[1, 1, 1]), v(&[2, 1, 1])];
        let facets = cone_facets(&gens, 3).unwrap();
        assert_eq!(facets.len(), 4);
        for f in &facets {
            for g in &gens {
                assert!(!dot(&f.normal, g).is_negative());
            }
            assert_eq!(f.members().iter().filter(|&&i| i < 4).count(), 2);
        }
        assert_eq!(extreme_generators(&gens, &facets, 3), vec![0, 1, 2, 3]);
    }

    #[test]
    fn octahedron_cone() {
        let pts = [[1, 1, 0, 0], [1, 0, 1, 0], [1, 0, 0, 1], [0, 1, 1, 0], [0, 1, 0, 1], [0, 0, 1, 1]];
        let gens: Vec<Vec<BigInt>> = pts.iter().map(|p| v(p)).collect();
        let facets = cone_facets(&gens, 4).unwrap();
        assert_eq!(facets.len(), 8);
    }

    #[test]
    fn planar_cone_with_interior_generator() {
        let gens = vec![v(&[1, 2]), v(&[2, 1]), v(&[1, 1])];
        let c = Cone::new(&gens, 2).unwrap();
        assert_eq!(c.rays, vec![0, 1]);
        assert_eq!(c.facet_normals.len(), 2);
        assert!(c.contains(&v(&[3, 4])));
        assert!(!c.contains(&v(&[1, 3])));
    }
}
