//! Hilbert bases of `pos(A) ∩ ZA` and membership in `NA`.

use std::collections::{BTreeSet, HashSet};

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::{Result, ToricError};
use crate::lattice::matrix::{dot, q_int, solve_rational};
use crate::lattice::{Configuration, SublatticeDescription, Q};
use crate::polyhedral::cone::cone_facets;
use crate::polyhedral::triangulation::{random_weights, regular_cells};

/// Largest rank of `ZA` for the parallelepiped enumeration.
pub const MAX_RANK: usize = 6;
/// Largest total number of parallelepiped points enumerated.
pub const MAX_PARALLELEPIPED_POINTS: u64 = 1_000_000;
/// Largest number of partial sums explored by a membership search.
pub const MAX_MEMBERSHIP_STATES: usize = 200_000;

/// `pos(A)` in coordinates of `ZA`, where it is full-dimensional.
#[derive(Clone, Debug)]
pub(crate) struct SemigroupCone {
    pub za: SublatticeDescription,
    pub coords: Vec<Vec<BigInt>>,
    pub normals: Vec<Vec<BigInt>>,
    /// Sum of facet normals: positive on the cone minus the origin.
    pub height: Vec<BigInt>,
}

impl SemigroupCone {
    pub fn new(a: &Configuration) -> Result<Self> {
        a.pointed_or_err()?;
        let (za, coords) = a.group_coordinates();
        let k = za.rank();
        let normals: Vec<Vec<BigInt>> = cone_facets(&coords, k)?.into_iter().map(|f| f.normal).collect();
        let mut height = vec![BigInt::zero(); k];
        for n in &normals {
            for (h, x) in height.iter_mut().zip(n) {
                *h += x;
            }
        }
        Ok(SemigroupCone { za, coords, normals, height })
    }

    pub fn rank(&self) -> usize {
        self.za.rank()
    }

    pub fn contains(&self, x: &[BigInt]) -> bool {
        self.normals.iter().all(|n| !dot(n, x).is_negative())
    }

    pub fn h(&self, x: &[BigInt]) -> BigInt {
        dot(&self.height, x)
    }

    pub fn to_ambient(&self, x: &[BigInt]) -> Vec<BigInt> {
        let mut out = vec![BigInt::zero(); self.za.ambient_dim()];
        for (c, row) in x.iter().zip(self.za.basis().rows()) {
            for (o, b) in out.iter_mut().zip(row) {
                *o += c * b;
            }
        }
        out
    }

    /// Distinct columns in `ZA` coordinates.
    pub fn distinct_columns(&self) -> Vec<Vec<BigInt>> {
        self.coords.iter().cloned().collect::<BTreeSet<_>>().into_iter().collect()
    }
}

/// Nonzero lattice points of `{Σ μ_i g_i : 0 ≤ μ_i < 1}`.
fn parallelepiped_points(gens: &[Vec<BigInt>], budget: &mut u64) -> Result<Vec<Vec<BigInt>>> {
    let k = gens.len();
    let lat = SublatticeDescription::from_vectors(gens, k);
    let diag: Vec<BigInt> = (0..k).map(|i| lat.basis().get(i, i).abs()).collect();
    let count: u64 = diag.iter().map(|d| d.to_u64().unwrap_or(u64::MAX)).fold(1u64, u64::saturating_mul);
    if count > *budget {
        return Err(ToricError::CapExceeded {
            what: "fundamental parallelepiped points".into(),
            limit: MAX_PARALLELEPIPED_POINTS as usize,
        });
    }
    *budget -= count;
    // Columns of the inverse of the matrix with columns g_i.
    let rows: Vec<Vec<Q>> = (0..k).map(|j| gens.iter().map(|g| q_int(&g[j])).collect()).collect();
    let inv: Vec<Vec<Q>> = (0..k)
        .map(|j| {
            let mut e = vec![Q::zero(); k];
            e[j] = Q::from_integer(1.into());
            solve_rational(&rows, &e, k).ok_or_else(|| ToricError::Internal("singular simplicial cone".into()))
        })
        .collect::<Result<_>>()?;
    let mut out = vec![];
    // The Hermite basis is triangular, so this box meets every coset once.
    let mut x = vec![BigInt::zero(); k];
    loop {
        if x.iter().any(|v| !v.is_zero()) {
            let mut lambda = vec![Q::zero(); k];
            for (j, xj) in x.iter().enumerate() {
                if !xj.is_zero() {
                    for (l, c) in lambda.iter_mut().zip(&inv[j]) {
                        *l += c * q_int(xj);
                    }
                }
            }
            let mut p = vec![Q::zero(); k];
            for (mu, g) in lambda.iter().map(|l| l - l.floor()).zip(gens) {
                for (pc, gc) in p.iter_mut().zip(g) {
                    *pc += &mu * q_int(gc);
                }
            }
            let p: Vec<BigInt> = p.into_iter().map(|v| v.to_integer()).collect();
            if p.iter().any(|v| !v.is_zero()) {
                out.push(p);
            }
        }
        let mut advanced = false;
        for j in 0..k {
            x[j] += 1;
            if x[j] < diag[j] {
                advanced = true;
                break;
            }
            x[j] = BigInt::zero();
        }
        if !advanced {
            break;
        }
    }
    Ok(out)
}

/// Hilbert basis in `ZA` coordinates, sorted by height.
pub(crate) fn hilbert_basis_coords(cone: &SemigroupCone) -> Result<Vec<Vec<BigInt>>> {
    let k = cone.rank();
    if k > MAX_RANK {
        return Err(ToricError::CapExceeded { what: "rank for Hilbert basis enumeration".into(), limit: MAX_RANK });
    }
    let (cells, _) = regular_cells(&cone.coords, &random_weights(cone.coords.len(), 0x4b))?;
    let mut candidates: BTreeSet<Vec<BigInt>> = cone.coords.iter().cloned().collect();
    let mut budget = MAX_PARALLELEPIPED_POINTS;
    for cell in cells {
        let gens: Vec<Vec<BigInt>> = cell.iter().map(|&i| cone.coords[i].clone()).collect();
        candidates.extend(parallelepiped_points(&gens, &mut budget)?);
    }
    let mut sorted: Vec<(BigInt, Vec<BigInt>)> = candidates.into_iter().map(|x| (cone.h(&x), x)).collect();
    sorted.sort();
    let mut kept: Vec<(BigInt, Vec<BigInt>)> = vec![];
    for (h, x) in sorted {
        let reducible = kept.iter().any(|(hy, y)| {
            hy < &h && {
                let diff: Vec<BigInt> = x.iter().zip(y).map(|(a, b)| a - b).collect();
                cone.contains(&diff)
            }
        });
        if !reducible {
            kept.push((h, x));
        }
    }
    Ok(kept.into_iter().map(|(_, x)| x).collect())
}

/// Hilbert basis of the monoid `pos(A) ∩ ZA`, in the ambient coordinates.
pub fn hilbert_basis(a: &Configuration) -> Result<Vec<Vec<BigInt>>> {
    let cone = SemigroupCone::new(a)?;
    Ok(hilbert_basis_coords(&cone)?.iter().map(|x| cone.to_ambient(x)).collect())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Membership {
    Member,
    NotMember,
    /// The search exceeded its state budget.
    Inconclusive,
}

/// Whether `x` (in `ZA` coordinates) is a sum of columns: breadth-first
/// over partial sums `y` with `x − y ∈ pos(A)`, which is finite.
pub(crate) fn member_coords(cone: &SemigroupCone, cols: &[Vec<BigInt>], x: &[BigInt]) -> Membership {
    if x.iter().all(Zero::is_zero) {
        return Membership::Member;
    }
    let hx = cone.h(x);
    let mut seen: HashSet<Vec<BigInt>> = HashSet::new();
    let mut frontier = vec![vec![BigInt::zero(); x.len()]];
    while !frontier.is_empty() {
        let mut next = vec![];
        for y in &frontier {
            for c in cols {
                let z: Vec<BigInt> = y.iter().zip(c).map(|(a, b)| a + b).collect();
                if z == x {
                    return Membership::Member;
                }
                let rest: Vec<BigInt> = x.iter().zip(&z).map(|(a, b)| a - b).collect();
                if cone.h(&z) < hx && cone.contains(&rest) && seen.insert(z.clone()) {
                    if seen.len() > MAX_MEMBERSHIP_STATES {
                        return Membership::Inconclusive;
                    }
                    next.push(z);
                }
            }
        }
        frontier = next;
    }
    Membership::NotMember
}

/// Whether the ambient vector `v` lies in `NA`.
pub fn semigroup_membership(a: &Configuration, v: &[BigInt]) -> Result<Membership> {
    let cone = SemigroupCone::new(a)?;
    let Some(x) = cone.za.coordinates(v) else { return Ok(Membership::NotMember) };
    if !cone.contains(&x) {
        return Ok(Membership::NotMember);
    }
    Ok(member_coords(&cone, &cone.distinct_columns(), &x))
}
