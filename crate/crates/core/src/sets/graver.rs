use std::collections::{BTreeSet, HashSet};

use super::circuits::sort_binomials;
use super::lawrence::lawrence;
use crate::error::{Result, ToricError};
use crate::groebner::mingen::minimal_generators;
use crate::groebner::toric::lattice_basis_binomials;
use crate::lattice::{Configuration, LatticeBinomial};

/// Graver basis of `A` from the minimal generators of the Lawrence ideal,
/// dehomogenized and sign-normalized.
pub fn graver(a: &Configuration) -> Result<Vec<LatticeBinomial>> {
    let n = a.n();
    let lam = lawrence(a)?;
    let gens = minimal_generators(&lam)?;
    let mut out: BTreeSet<LatticeBinomial> = BTreeSet::new();
    for g in gens.elements() {
        let u = g.to_lattice();
        let (x, y) = u.vector().split_at(n);
        if x.iter().zip(y).any(|(a, b)| *a != -*b) {
            return Err(ToricError::Internal("Lawrence generator is not of the form (u, -u)".into()));
        }
        out.insert(LatticeBinomial::new(x.to_vec()).sign_normalized());
    }
    let mut out: Vec<LatticeBinomial> = out.into_iter().collect();
    check_graver_axiom(&out)?;
    sort_binomials(&mut out);
    Ok(out)
}

/// No element may be conformally below another (up to sign).
pub fn check_graver_axiom(set: &[LatticeBinomial]) -> Result<()> {
    for (i, u) in set.iter().enumerate() {
        for (j, v) in set.iter().enumerate() {
            if i != j && (v.conformal_le(u) || v.negated().conformal_le(u)) {
                return Err(ToricError::Internal(format!("Graver element {:?} is conformally below {:?}", v.vector(), u.vector())));
            }
        }
    }
    Ok(())
}

fn add(a: &[i64], b: &[i64]) -> Vec<i64> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

fn conformal_below(v: &[i64], u: &[i64]) -> bool {
    v.iter().zip(u).all(|(&a, &b)| a == 0 || (a.signum() == b.signum() && a.abs() <= b.abs()))
}

/// Graver basis by the completion procedure: close a symmetric lattice
/// generating set under sums, reducing each sum by conformal subtraction.
/// Independent of any Gröbner computation; used as a cross-check.
pub fn graver_by_completion(a: &Configuration) -> Result<Vec<LatticeBinomial>> {
    let basis = lattice_basis_binomials(a)?;
    let mut g: Vec<Vec<i64>> = vec![];
    for b in &basis {
        g.push(b.vector().to_vec());
        g.push(b.negated().vector().to_vec());
    }
    let mut seen: HashSet<Vec<i64>> = g.iter().cloned().collect();
    let mut queue: Vec<Vec<i64>> = vec![];
    for i in 0..g.len() {
        for j in i + 1..g.len() {
            queue.push(add(&g[i], &g[j]));
        }
    }
    while let Some(mut s) = queue.pop() {
        'reduce: loop {
            if s.iter().all(|&x| x == 0) {
                break;
            }
            for h in &g {
                if conformal_below(h, &s) {
                    s = s.iter().zip(h).map(|(x, y)| x - y).collect();
                    continue 'reduce;
                }
            }
            break;
        }
        if s.iter().all(|&x| x == 0) || !seen.insert(s.clone()) {
            continue;
        }
        for h in &g {
            queue.push(add(&s, h));
        }
        g.push(s);
    }
    let minimal: BTreeSet<LatticeBinomial> = g
        .iter()
        .filter(|u| !g.iter().any(|v| v != *u && v.iter().any(|&x| x != 0) && conformal_below(v, u)))
        .map(|u| LatticeBinomial::new(u.clone()).sign_normalized())
        .collect();
    let mut out: Vec<LatticeBinomial> = minimal.into_iter().collect();
    sort_binomials(&mut out);
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::default_labels;

    #[test]
    fn twisted_cubic_graver() {
        let a = Configuration::from_rows(&[vec![3, 2, 1, 0], vec![0, 1, 2, 3]]).unwrap();
        let g = graver(&a).unwrap();
        let lines: Vec<String> = g.iter().map(|u| u.format(&default_labels(4))).collect();
        assert_eq!(lines, ["x1*x3 - x2^2", "x1*x4 - x2*x3", "x2*x4 - x3^2", "x1^2*x4 - x2^3", "x1*x4^2 - x3^3"]);
        assert_eq!(graver_by_completion(&a).unwrap(), g);
    }

    #[test]
    fn empty_kernel() {
        let a = Configuration::from_rows(&[vec![1, 0], vec![0, 1]]).unwrap();
        assert!(graver(&a).unwrap().is_empty());
        assert!(graver_by_completion(&a).unwrap().is_empty());
    }
}
