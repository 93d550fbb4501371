use num_bigint::BigInt;
use num_traits::Zero;
use serde::Serialize;

use crate::error::{Result, ToricError};
use crate::lattice::matrix::primitive;
use crate::lattice::{lattice_index, Configuration, LatticeBinomial, LatticeIndex, SublatticeDescription};

/// A circuit with the data used by the degree bounds.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CircuitInfo {
    pub binomial: LatticeBinomial,
    pub support: Vec<usize>,
    pub degree: u64,
    /// `[R(supp) ∩ ZA : Z(supp)]`.
    #[serde(serialize_with = "crate::serde_util::big")]
    pub index: BigInt,
    #[serde(serialize_with = "crate::serde_util::big")]
    pub true_degree: BigInt,
    pub squarefree_plus: bool,
    pub squarefree_minus: bool,
}

/// Rows of `A` forming a basis of its row space.
fn independent_rows(a: &Configuration) -> Vec<usize> {
    let mut chosen: Vec<usize> = vec![];
    let mut rank = 0;
    for i in 0..a.d() {
        let mut trial = chosen.clone();
        trial.push(i);
        let r = a.entries().select_rows(&trial).rank();
        if r > rank {
            chosen = trial;
            rank = r;
        }
    }
    chosen
}

fn next_combination(c: &mut [usize], n: usize) -> bool {
    let k = c.len();
    for i in (0..k).rev() {
        if c[i] < n - k + i {
            c[i] += 1;
            for j in i + 1..k {
                c[j] = c[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// All circuits of `A`: primitive kernel vectors of inclusion-minimal
/// support, sign-normalized and sorted canonically.
pub fn circuits(a: &Configuration) -> Result<Vec<LatticeBinomial>> {
    let n = a.n();
    let rows = independent_rows(a);
    let r = rows.len();
    if r >= n {
        return Ok(vec![]);
    }
    let m = a.entries().select_rows(&rows);
    let mut found = std::collections::BTreeSet::new();
    let mut subset: Vec<usize> = (0..=r).collect();
    loop {
        let sub = m.select_columns(&subset);
        // Cramer: v_j = (-1)^j det(sub without column j).
        let mut v = vec![BigInt::zero(); n];
        let mut nonzero = false;
        for j in 0..=r {
            let cols: Vec<usize> = (0..=r).filter(|&c| c != j).collect();
            let det = if r == 0 { BigInt::from(1) } else { sub.select_columns(&cols).determinant() };
            if !det.is_zero() {
                nonzero = true;
            }
            v[subset[j]] = if j % 2 == 0 { det } else { -det };
        }
        if nonzero {
            let u = LatticeBinomial::from_big(&primitive(&v))?;
            found.insert(u.sign_normalized());
        }
        if !next_combination(&mut subset, n) {
            break;
        }
    }
    let mut out: Vec<LatticeBinomial> = found.into_iter().collect();
    sort_binomials(&mut out);
    Ok(out)
}

/// Canonical emission order: degree, then `u⁺` descending.
pub fn sort_binomials(v: &mut [LatticeBinomial]) {
    v.sort_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| b.plus().cmp(&a.plus())).then_with(|| b.minus().cmp(&a.minus())));
}

/// Whether `u` is a circuit of `A`.
pub fn is_circuit(u: &LatticeBinomial, a: &Configuration) -> Result<bool> {
    if u.is_zero() || !u.is_primitive() || u.len() != a.n() {
        return Ok(false);
    }
    let big: Vec<BigInt> = u.vector().iter().map(|&x| x.into()).collect();
    if !a.entries().mul_vec(&big).iter().all(Zero::is_zero) {
        return Ok(false);
    }
    let supp = u.support();
    Ok(a.restrict(&supp)?.rank() == supp.len() - 1)
}

/// Degree, index and true degree of a circuit.
pub fn circuit_info(u: &LatticeBinomial, a: &Configuration) -> Result<CircuitInfo> {
    if !is_circuit(u, a)? {
        return Err(ToricError::NotACircuit);
    }
    let (za, coords) = a.group_coordinates();
    let supp = u.support();
    let sub = SublatticeDescription::from_vectors(&supp.iter().map(|&j| coords[j].clone()).collect::<Vec<_>>(), za.rank());
    let index = match lattice_index(&sub, &sub.saturation())? {
        LatticeIndex::Finite(k) => k,
        LatticeIndex::Infinite => return Err(ToricError::Internal("circuit support lattice has infinite index".into())),
    };
    let degree = u.degree();
    let (sp, sm) = u.squarefree_sides();
    Ok(CircuitInfo {
        binomial: u.clone(),
        support: supp,
        degree,
        true_degree: BigInt::from(degree) * &index,
        index,
        squarefree_plus: sp,
        squarefree_minus: sm,
    })
}

/// Largest total degree in a set (zero when empty).
pub fn maxdeg(v: &[LatticeBinomial]) -> u64 {
    v.iter().map(LatticeBinomial::degree).max().unwrap_or(0)
}
