//! Lattice-point counts of dilates `s · conv(A)` and Ehrhart polynomials.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::Serialize;

use super::cone::cone_facets;
use super::polytope::Homogenized;
use crate::error::{Result, ToricError};
use crate::lattice::matrix::dot;
use crate::lattice::{Configuration, SublatticeDescription, Q};
use crate::poly::QPoly;

/// Which lattice points are counted.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CountLattice {
    /// Points of `ZA` (equivalently, of the affine lattice spanned by `A`,
    /// dilated): these match the Hilbert function of the normalization.
    Group,
    /// All integer points of the ambient space.
    Integer,
}

/// Enumeration budget per dilate.
pub const MAX_CANDIDATES: u64 = 20_000_000;

/// Points and facet inequalities of the cone over `conv(A)` in a basis of
/// the counting lattice; `height` picks out the dilation factor.
struct Counter {
    normals: Vec<Vec<BigInt>>,
    height: Vec<BigInt>,
    lo: Vec<BigInt>,
    hi: Vec<BigInt>,
}

impl Counter {
    fn new(a: &Configuration, lattice: CountLattice) -> Result<Self> {
        let hom = Homogenized::new(&a.columns());
        let lat: SublatticeDescription = match lattice {
            CountLattice::Group => hom.lattice.clone(),
            CountLattice::Integer => hom.lattice.saturation(),
        };
        let lifted: Vec<Vec<BigInt>> = a
            .columns()
            .into_iter()
            .map(|c| std::iter::once(BigInt::from(1)).chain(c).collect())
            .collect();
        let coords: Vec<Vec<BigInt>> =
            lifted.iter().map(|v| lat.coordinates(v).expect("point lies in the lattice")).collect();
        let k = lat.rank();
        let normals = cone_facets(&coords, k)?.into_iter().map(|f| f.normal).collect();
        let height = lat.basis().rows().iter().map(|r| r[0].clone()).collect();
        let lo = (0..k).map(|j| coords.iter().map(|c| c[j].clone()).min().expect("nonempty")).collect();
        let hi = (0..k).map(|j| coords.iter().map(|c| c[j].clone()).max().expect("nonempty")).collect();
        Ok(Counter { normals, height, lo, hi })
    }

    fn count(&self, s: u64) -> Result<BigInt> {
        let k = self.height.len();
        let s_big = BigInt::from(s);
        let lo: Vec<BigInt> = self.lo.iter().map(|x| x * &s_big).collect();
        let hi: Vec<BigInt> = self.hi.iter().map(|x| x * &s_big).collect();
        // Solve the height equation for one coordinate, enumerate the rest.
        let pivot = (0..k)
            .filter(|&j| !self.height[j].is_zero())
            .min_by_key(|&j| self.height[j].abs())
            .ok_or_else(|| ToricError::Internal("no height coordinate".into()))?;
        let free: Vec<usize> = (0..k).filter(|&j| j != pivot).collect();
        let mut total: u64 = 1;
        for &j in &free {
            let span = (&hi[j] - &lo[j] + 1u32).to_u64().unwrap_or(u64::MAX);
            total = total.saturating_mul(span);
        }
        if total > MAX_CANDIDATES {
            return Err(ToricError::CapExceeded { what: "lattice point candidates".into(), limit: MAX_CANDIDATES as usize });
        }
        let mut x: Vec<BigInt> = lo.clone();
        let mut count = BigInt::zero();
        loop {
            let rest: BigInt =
                free.iter().map(|&j| &self.height[j] * &x[j]).fold(BigInt::zero(), |acc, v| acc + v);
            let (q, r) = (&s_big - rest).div_rem(&self.height[pivot]);
            if r.is_zero() && q >= lo[pivot] && q <= hi[pivot] {
                x[pivot] = q;
                if self.normals.iter().all(|n| !dot(n, &x).is_negative()) {
                    count += 1;
                }
            }
            // odometer over the free coordinates
            let mut advanced = false;
            for &j in &free {
                if x[j] < hi[j] {
                    x[j] += 1;
                    advanced = true;
                    break;
                }
                x[j] = lo[j].clone();
            }
            if !advanced {
                break;
            }
        }
        Ok(count)
    }
}

/// `#(s · conv(A) ∩ L)` for the chosen lattice.
pub fn lattice_points(a: &Configuration, s: u64, lattice: CountLattice) -> Result<BigInt> {
    Counter::new(a, lattice)?.count(s)
}

#[derive(Clone, Debug, Serialize)]
pub struct Ehrhart {
    pub lattice: CountLattice,
    pub polynomial: QPoly,
    /// Counts for `s = 0, 1, ...` used to fit and verify the polynomial.
    #[serde(serialize_with = "crate::serde_util::big_vec")]
    pub counts: Vec<BigInt>,
}

/// Ehrhart polynomial: fitted on `dim + 1` dilates and checked on two
/// more, all with `s ≤ s_max`.
pub fn ehrhart_polynomial(a: &Configuration, lattice: CountLattice, s_max: usize) -> Result<Ehrhart> {
    let counter = Counter::new(a, lattice)?;
    let dim = counter.height.len() - 1;
    let last = dim + 2;
    if last > s_max {
        return Err(ToricError::Instability { what: "Ehrhart counts".into(), s_max });
    }
    let counts: Vec<BigInt> = (0..=last as u64).map(|s| counter.count(s)).collect::<Result<_>>()?;
    let pts: Vec<(i64, Q)> = (0..=dim).map(|s| (s as i64, Q::from_integer(counts[s].clone()))).collect();
    let polynomial = QPoly::interpolate(&pts);
    for s in dim + 1..=last {
        if polynomial.eval_int(s as i64) != Q::from_integer(counts[s].clone()) {
            return Err(ToricError::Instability { what: "Ehrhart counts".into(), s_max });
        }
    }
    Ok(Ehrhart { lattice, polynomial, counts })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gallery;

    #[test]
    fn segment_counts() {
        let a = gallery::twisted_cubic();
        let e = ehrhart_polynomial(&a, CountLattice::Group, 50).unwrap();
        assert_eq!(e.polynomial, QPoly::from_ints(&[1, 3]));
        let e = ehrhart_polynomial(&gallery::sparse_curve(4).unwrap(), CountLattice::Group, 50).unwrap();
        assert_eq!(e.polynomial, QPoly::from_ints(&[1, 4]));
    }

    #[test]
    fn integer_versus_group_lattice() {
        // {0, 2} on a line: ZA-affine lattice is 2Z.
        let a = Configuration::from_columns(&[vec![1, 0], vec![1, 2]], None).unwrap();
        let g = ehrhart_polynomial(&a, CountLattice::Group, 50).unwrap();
        let z = ehrhart_polynomial(&a, CountLattice::Integer, 50).unwrap();
        assert_eq!(g.polynomial, QPoly::from_ints(&[1, 1]));
        assert_eq!(z.polynomial, QPoly::from_ints(&[1, 2]));
    }

    #[test]
    fn square_and_hexagon() {
        let sq = Configuration::from_columns(&[vec![0, 0], vec![1, 0], vec![0, 1], vec![1, 1]], None).unwrap();
        let e = ehrhart_polynomial(&sq, CountLattice::Integer, 50).unwrap();
        assert_eq!(e.polynomial, QPoly::from_ints(&[1, 2, 1]));
        assert_eq!(lattice_points(&gallery::hexagon(1, 2, 3).unwrap(), 1, CountLattice::Integer).unwrap(), BigInt::from(7));
    }

    #[test]
    fn too_few_dilates() {
        let sq = Configuration::from_columns(&[vec![0, 0], vec![1, 0], vec![0, 1], vec![1, 1]], None).unwrap();
        assert!(matches!(ehrhart_polynomial(&sq, CountLattice::Group, 3), Err(ToricError::Instability { .. })));
    }
}
