//! Lattice polytopes `conv(A)`: vertices, facets, faces and normal fans.
//!
//! All computations run on the cone over the homogenized points `(1, a_i)`
//! in coordinates of the lattice they span, where that cone is
//! full-dimensional and pointed.

use std::collections::{BTreeSet, HashSet};

use num_bigint::BigInt;
use num_traits::Zero;
use serde::Serialize;

use super::cone::{bits, cone_facets, extreme_generators, ConeFacet};
use crate::error::{Result, ToricError};
use crate::lattice::matrix::{dot, primitive};
use crate::lattice::{Configuration, IntMatrix, SublatticeDescription};

/// Homogenized points `(1, p)` in coordinates of the lattice they span.
#[derive(Clone, Debug)]
pub(crate) struct Homogenized {
    pub lattice: SublatticeDescription,
    pub coords: Vec<Vec<BigInt>>,
}

impl Homogenized {
    pub fn new(points: &[Vec<BigInt>]) -> Self {
        let lifted: Vec<Vec<BigInt>> = points
            .iter()
            .map(|p| std::iter::once(BigInt::from(1)).chain(p.iter().cloned()).collect())
            .collect();
        let dim = lifted.first().map_or(1, Vec::len);
        let lattice = SublatticeDescription::from_vectors(&lifted, dim);
        let coords = lifted.iter().map(|v| lattice.coordinates(v).expect("point lies in its span")).collect();
        Homogenized { lattice, coords }
    }

    pub fn rank(&self) -> usize {
        self.lattice.rank()
    }
}

/// A facet `{x : normal · x = offset}` with `normal · p ≥ offset` on the
/// polytope. The normal is primitive and lies in the direction space of
/// the affine hull.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Facet {
    /// Indices of the points on the facet.
    pub members: Vec<usize>,
    #[serde(serialize_with = "crate::serde_util::big_vec")]
    pub normal: Vec<BigInt>,
    #[serde(serialize_with = "crate::serde_util::big")]
    pub offset: BigInt,
}

#[derive(Clone, Debug, Serialize)]
pub struct Polytope {
    pub ambient_dim: usize,
    pub dim: usize,
    /// One point index per vertex (the lowest among repeated points).
    pub vertices: Vec<usize>,
    pub facets: Vec<Facet>,
    #[serde(skip)]
    pub(crate) points: Vec<Vec<BigInt>>,
    #[serde(skip)]
    pub(crate) hom: Homogenized,
    #[serde(skip)]
    pub(crate) cone: Vec<ConeFacet>,
}

/// Basis of the direction space `span{p_i − p_0}` as integer rows.
fn direction_basis(points: &[Vec<BigInt>]) -> IntMatrix {
    let d = points[0].len();
    let diffs: Vec<Vec<BigInt>> =
        points.iter().skip(1).map(|p| p.iter().zip(&points[0]).map(|(a, b)| a - b).collect()).collect();
    SublatticeDescription::from_vectors(&diffs, d).basis().clone()
}

/// Primitive vector of the direction space orthogonal to the differences
/// within `members` (a one-dimensional solution space for a facet).
fn facet_normal(points: &[Vec<BigInt>], dir: &IntMatrix, members: &[usize]) -> Result<Vec<BigInt>> {
    let p0 = &points[members[0]];
    let rows: Vec<Vec<BigInt>> = members[1..]
        .iter()
        .map(|&i| {
            let diff: Vec<BigInt> = points[i].iter().zip(p0).map(|(a, b)| a - b).collect();
            dir.rows().iter().map(|v| dot(v, &diff)).collect()
        })
        .collect();
    let m = IntMatrix::from_rows(rows, dir.nrows());
    let ker = m.right_kernel();
    if ker.nrows() != 1 {
        return Err(ToricError::Internal(format!("facet normal space has dimension {}", ker.nrows())));
    }
    let y = ker.row(0);
    let d = points[0].len();
    let mut n = vec![BigInt::zero(); d];
    for (c, v) in y.iter().zip(dir.rows()) {
        for (x, b) in n.iter_mut().zip(v) {
            *x += c * b;
        }
    }
    Ok(primitive(&n))
}

impl Polytope {
    /// Convex hull of the given points (all of the same length, at least one).
    pub fn from_points(points: Vec<Vec<BigInt>>) -> Result<Self> {
        let Some(first) = points.first() else {
            return Err(ToricError::BadParams("polytope needs at least one point".into()));
        };
        let ambient_dim = first.len();
        if let Some(p) = points.iter().find(|p| p.len() != ambient_dim) {
            return Err(ToricError::DimensionMismatch { left: ambient_dim, right: p.len() });
        }
        let hom = Homogenized::new(&points);
        let k = hom.rank();
        let cone = cone_facets(&hom.coords, k)?;
        let mut vertices = extreme_generators(&hom.coords, &cone, k);
        vertices.sort_unstable();
        let mut facets = vec![];
        if k >= 2 {
            let dir = direction_basis(&points);
            for f in &cone {
                let members = f.members();
                let mut normal = facet_normal(&points, &dir, &members)?;
                let offset = dot(&normal, &points[members[0]]);
                let mut offset = offset;
                let outside = points.iter().find(|p| dot(&normal, p) != offset).expect("facet is proper");
                if dot(&normal, outside) < offset {
                    normal.iter_mut().for_each(|x| *x = -x.clone());
                    offset = -offset;
                }
                facets.push(Facet { members, normal, offset });
            }
        }
        facets.sort_by(|a, b| a.members.cmp(&b.members));
        Ok(Polytope { ambient_dim, dim: k - 1, vertices, facets, points, hom, cone })
    }

    pub fn points(&self) -> &[Vec<BigInt>] {
        &self.points
    }

    /// Whether `x` (in the ambient space) lies in the polytope.
    pub fn contains(&self, x: &[BigInt]) -> bool {
        let lifted: Vec<BigInt> = std::iter::once(BigInt::from(1)).chain(x.iter().cloned()).collect();
        let sat = self.hom.lattice.saturation();
        // Points off the affine hull are outside.
        if !sat.contains(&lifted) {
            return false;
        }
        self.facets.iter().all(|f| dot(&f.normal, x) >= f.offset)
    }

    /// Vertex indices on each facet.
    fn facet_vertex_sets(&self) -> Vec<u128> {
        let vmask = self.vertices.iter().fold(0u128, |acc, &i| acc | 1 << i);
        self.cone.iter().map(|f| f.incidence & vmask).collect()
    }

    fn face_dim(&self, mask: u128) -> i64 {
        let idx = bits(mask);
        if idx.is_empty() {
            return -1;
        }
        let rows = idx.iter().map(|&i| self.hom.coords[i].clone()).collect();
        IntMatrix::from_rows(rows, self.hom.rank()).rank() as i64 - 1
    }

    /// All faces, from the empty face to the polytope, as vertex sets.
    pub fn face_poset(&self) -> FacePoset {
        let all = self.vertices.iter().fold(0u128, |acc, &i| acc | 1 << i);
        let facets = self.facet_vertex_sets();
        let mut seen: HashSet<u128> = HashSet::from([all]);
        let mut stack = vec![all];
        while let Some(face) = stack.pop() {
            for &f in &facets {
                let g = face & f;
                if seen.insert(g) {
                    stack.push(g);
                }
            }
        }
        seen.insert(0);
        let mut faces: Vec<Face> =
            seen.into_iter().map(|m| Face { vertices: bits(m), dim: self.face_dim(m) }).collect();
        faces.sort_by(|a, b| (a.dim, &a.vertices).cmp(&(b.dim, &b.vertices)));
        let mut f_vector = vec![0usize; self.dim];
        for f in &faces {
            if f.dim >= 0 && (f.dim as usize) < self.dim {
                f_vector[f.dim as usize] += 1;
            }
        }
        let masks: Vec<u128> = faces.iter().map(|f| f.vertices.iter().fold(0u128, |acc, &i| acc | 1 << i)).collect();
        let mut covers = vec![];
        for (i, fi) in faces.iter().enumerate() {
            for (j, fj) in faces.iter().enumerate() {
                if fj.dim == fi.dim + 1 && masks[i] & masks[j] == masks[i] {
                    covers.push((i, j));
                }
            }
        }
        FacePoset { faces, f_vector, covers }
    }

    /// Normal fan, with cones spanned by outer facet normals at each vertex.
    pub fn normal_fan(&self) -> NormalFan {
        let rays: BTreeSet<Vec<BigInt>> =
            self.facets.iter().map(|f| f.normal.iter().map(|x| -x).collect()).collect();
        let rays: Vec<Vec<BigInt>> = rays.into_iter().collect();
        let ray_of = |f: &Facet| -> usize {
            let outer: Vec<BigInt> = f.normal.iter().map(|x| -x).collect();
            rays.binary_search(&outer).expect("ray collected")
        };
        let mut cones: Vec<Vec<usize>> = self
            .vertices
            .iter()
            .map(|&v| {
                let p = &self.points[v];
                let mut c: Vec<usize> =
                    self.facets.iter().filter(|f| dot(&f.normal, p) == f.offset).map(ray_of).collect();
                c.sort_unstable();
                c
            })
            .collect();
        cones.sort();
        let direction = if self.points.len() > 1 {
            SublatticeDescription::from_vectors(direction_basis(&self.points).rows(), self.ambient_dim).saturation()
        } else {
            SublatticeDescription::from_vectors(&[], self.ambient_dim)
        };
        NormalFan { rays, cones, direction }
    }
}

pub fn convex_hull(a: &Configuration) -> Result<Polytope> {
    Polytope::from_points(a.columns())
}

/// Column indices of the vertices of `conv(A)`.
pub fn vertices_of(a: &Configuration) -> Result<Vec<usize>> {
    Ok(convex_hull(a)?.vertices)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Face {
    pub vertices: Vec<usize>,
    pub dim: i64,
}

#[derive(Clone, Debug, Serialize)]
pub struct FacePoset {
    /// Sorted by dimension, the empty face first and the polytope last.
    pub faces: Vec<Face>,
    /// Number of faces of each dimension `0..dim`.
    pub f_vector: Vec<usize>,
    /// Cover relations `(i, j)`: face `i` is a facet of face `j`.
    pub covers: Vec<(usize, usize)>,
}

pub fn face_poset(a: &Configuration) -> Result<FacePoset> {
    Ok(convex_hull(a)?.face_poset())
}

/// A normal fan in canonical form: sorted primitive rays and, per vertex,
/// the sorted indices of the rays spanning its cone.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NormalFan {
    pub rays: Vec<Vec<BigInt>>,
    pub cones: Vec<Vec<usize>>,
    direction: SublatticeDescription,
}

/// Whether two polytopes in the same ambient space have the same normal
/// fan. Polytopes with different affine directions never do.
pub fn normal_fan_equal(p: &Polytope, q: &Polytope) -> Result<bool> {
    if p.ambient_dim != q.ambient_dim {
        return Err(ToricError::DimensionMismatch { left: p.ambient_dim, right: q.ambient_dim });
    }
    Ok(p.normal_fan() == q.normal_fan())
}

pub fn normal_fans_equal(a: &Configuration, b: &Configuration) -> Result<bool> {
    normal_fan_equal(&convex_hull(a)?, &convex_hull(b)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::matrix::from_i64_vec;

    fn poly(pts: &[&[i64]]) -> Polytope {
        Polytope::from_points(pts.iter().map(|p| from_i64_vec(p)).collect()).unwrap()
    }

    #[test]
    fn square_with_center() {
        let p = poly(&[&[0, 0], &[2, 0], &[0, 2], &[2, 2], &[1, 1], &[1, 0]]);
        assert_eq!(p.dim, 2);
        assert_eq!(p.vertices, vec![0, 1, 2, 3]);
        assert_eq!(p.facets.len(), 4);
        let bottom = p.facets.iter().find(|f| f.members == vec![0, 1, 5]).unwrap();
        assert_eq!(bottom.normal, from_i64_vec(&[0, 1]));
        assert_eq!(bottom.offset, BigInt::zero());
        assert!(p.contains(&from_i64_vec(&[1, 2])));
        assert!(!p.contains(&from_i64_vec(&[3, 1])));
        assert_eq!(p.face_poset().f_vector, vec![4, 4]);
    }

    #[test]
    fn octahedron_faces() {
        let a = crate::gallery::octahedron();
        let p = convex_hull(&a).unwrap();
        assert_eq!(p.dim, 3);
        assert_eq!(p.face_poset().f_vector, vec![6, 12, 8]);
    }

    #[test]
    fn twisted_cubic_segment() {
        let a = crate::gallery::twisted_cubic();
        let p = convex_hull(&a).unwrap();
        assert_eq!(p.dim, 1);
        assert_eq!(p.vertices, vec![0, 3]);
        assert_eq!(p.facets.len(), 2);
    }

    #[test]
    fn single_point() {
        let p = poly(&[&[1, 1], &[1, 1]]);
        assert_eq!(p.dim, 0);
        assert_eq!(p.vertices, vec![0]);
        assert!(p.facets.is_empty());
    }

    #[test]
    fn fans_of_dilates_and_squares() {
        let sq = poly(&[&[0, 0], &[1, 0], &[0, 1], &[1, 1]]);
        let big = poly(&[&[0, 0], &[3, 0], &[0, 3], &[3, 3]]);
        let rect = poly(&[&[0, 0], &[2, 0], &[0, 1], &[2, 1]]);
        let tri = poly(&[&[0, 0], &[1, 0], &[0, 1]]);
        let seg = poly(&[&[0, 0], &[3, 0]]);
        assert!(normal_fan_equal(&sq, &big).unwrap());
        assert!(normal_fan_equal(&sq, &rect).unwrap());
        assert!(!normal_fan_equal(&sq, &tri).unwrap());
        assert!(!normal_fan_equal(&sq, &seg).unwrap());
    }

    #[test]
    fn hexagon_fans() {
        let h1 = convex_hull(&crate::gallery::hexagon(1, 2, 3).unwrap()).unwrap();
        let h2 = convex_hull(&crate::gallery::hexagon(1, 2, 4).unwrap()).unwrap();
        assert_eq!(h1.vertices.len(), 6);
        assert!(normal_fan_equal(&h1, &h2).unwrap());
    }
}
