//! Toric ideals: lattice-basis ideal saturated variable by variable, and an
//! independent elimination route used as a cross-check.

use super::binomial::{Binomial, OrientedBinomialSet};
use super::buchberger::GroebnerBuilder;
use super::order::{OrderFlavor, TermOrder, TieBreak};
use crate::error::{Result, ToricError};
use crate::lattice::{kernel_lattice, Configuration, LatticeBinomial};

/// Kernel-lattice basis as binomials.
pub fn lattice_basis_binomials(a: &Configuration) -> Result<Vec<LatticeBinomial>> {
    kernel_lattice(a).basis().rows().iter().map(|r| LatticeBinomial::from_big(r)).collect()
}

/// The order actually used for `I_A`: for pointed `A` the positive grading
/// is compared first, which leaves the reduced basis unchanged for genuine
/// term orders and makes arbitrary weight vectors usable.
pub fn effective_order(a: &Configuration, ord: &TermOrder) -> Result<TermOrder> {
    if ord.nvars() != a.n() {
        return Err(ToricError::DimensionMismatch { left: ord.nvars(), right: a.n() });
    }
    match a.variable_degrees() {
        Some(deg) => Ok(ord.with_leading_row(deg)),
        None => {
            if ord.rows().iter().flatten().any(|&w| w < 0) {
                return Err(ToricError::BadParams(
                    "negative weights need a pointed configuration (homogeneous ideal)".into(),
                ));
            }
            Ok(ord.clone())
        }
    }
}

/// Reduced Gröbner basis of `I_A` under `ord`.
pub fn toric_ideal(a: &Configuration, ord: &TermOrder) -> Result<OrientedBinomialSet> {
    let eff = effective_order(a, ord)?;
    let gens = saturated_generators(a)?;
    Ok(reduced_basis_from(a, &eff, ord, gens))
}

/// Reduced basis of `I_A` from any generating set of it.
pub(crate) fn reduced_basis_from(a: &Configuration, eff: &TermOrder, ord: &TermOrder, gens: Vec<Binomial>) -> OrientedBinomialSet {
    let n = a.n();
    let weights = a.variable_degrees().unwrap_or_else(|| vec![1; n]);
    let mut b = GroebnerBuilder::new(eff.clone(), weights).with_cancellation(vec![true; n]);
    for g in gens {
        b.add(g.head, g.tail);
    }
    b.complete(None);
    OrientedBinomialSet::new(ord.clone(), b.reduced_basis(), true)
}

/// Some generating set of `I_A` (not reduced).
pub fn saturated_generators(a: &Configuration) -> Result<Vec<Binomial>> {
    let basis = lattice_basis_binomials(a)?;
    if basis.is_empty() {
        return Ok(vec![]);
    }
    match a.variable_degrees() {
        Some(deg) => Ok(saturate_graded(a.n(), &deg, &basis)),
        None => Ok(saturate_by_elimination(a.n(), &basis)),
    }
}

fn saturate_graded(n: usize, deg: &[i64], basis: &[LatticeBinomial]) -> Vec<Binomial> {
    let mut gens: Vec<Binomial> = basis.iter().map(|u| Binomial::new(u.plus(), u.minus())).collect();
    let mut saturated = vec![false; n];
    for i in 0..n {
        // Skip variables that occur in no generator on both sides' supports.
        let mut perm: Vec<usize> = (0..n).filter(|&j| j != i).collect();
        perm.push(i);
        let ord = TermOrder::from_rows(vec![deg.to_vec()], TieBreak::RevLex(perm), OrderFlavor::WeightThenRevLex);
        let mut b = GroebnerBuilder::new(ord, deg.to_vec()).with_cancellation(saturated.clone());
        for g in gens.drain(..) {
            b.add(g.head, g.tail);
        }
        b.complete(None);
        gens = b
            .reduced_basis()
            .into_iter()
            .map(|mut g| {
                let m = g.head[i].min(g.tail[i]);
                g.head[i] -= m;
                g.tail[i] -= m;
                g
            })
            .collect();
        saturated[i] = true;
    }
    gens
}

fn saturate_by_elimination(n: usize, basis: &[LatticeBinomial]) -> Vec<Binomial> {
    // J : (x_1 ⋯ x_n)^∞ = (J + <t x_1 ⋯ x_n − 1>) ∩ k[x].
    let mut block = vec![false; n + 1];
    block[n] = true;
    let ord = TermOrder::elimination(&block);
    let mut b = GroebnerBuilder::new(ord, vec![1; n + 1]);
    for u in basis {
        let mut p = u.plus();
        let mut m = u.minus();
        p.push(0);
        m.push(0);
        b.add(p, m);
    }
    b.add(vec![1; n + 1], vec![0; n + 1]);
    b.complete(None);
    b.reduced_basis()
        .into_iter()
        .filter(|g| g.head[n] == 0 && g.tail[n] == 0)
        .map(|mut g| {
            g.head.pop();
            g.tail.pop();
            g
        })
        .collect()
}

/// Generators of `I_A` as the elimination ideal of `<x_i − t^{a_i}>`,
/// returned as a grevlex Gröbner basis. Negative entries are handled with an
/// extra variable `s` subject to `s t_1 ⋯ t_d = 1`.
pub fn toric_ideal_elimination_oracle(a: &Configuration) -> Result<OrientedBinomialSet> {
    let (n, d) = (a.n(), a.d());
    let cols = a.columns_i64()?;
    let shifts: Vec<i64> = cols.iter().map(|c| c.iter().copied().min().unwrap_or(0).min(0).abs()).collect();
    let need_s = shifts.iter().any(|&m| m > 0);
    let nv = n + d + usize::from(need_s);
    let mut block = vec![true; nv];
    block[..n].iter_mut().for_each(|b| *b = false);
    let ord = TermOrder::elimination(&block);
    let mut b = GroebnerBuilder::new(ord, vec![1; nv]);
    let to_u32 = |x: i64| u32::try_from(x).map_err(|_| ToricError::Overflow(format!("exponent {x}")));
    for (i, c) in cols.iter().enumerate() {
        let mut x = vec![0u32; nv];
        x[i] = 1;
        let mut t = vec![0u32; nv];
        for k in 0..d {
            t[n + k] = to_u32(c[k] + shifts[i])?;
        }
        if need_s {
            t[n + d] = to_u32(shifts[i])?;
        }
        b.add(x, t);
    }
    if need_s {
        let mut st = vec![0u32; nv];
        st[n..].iter_mut().for_each(|e| *e = 1);
        b.add(st, vec![0; nv]);
    }
    b.complete(None);
    let elims: Vec<Binomial> = b
        .reduced_basis()
        .into_iter()
        .filter(|g| g.head[n..].iter().chain(&g.tail[n..]).all(|&e| e == 0))
        .map(|mut g| {
            g.head.truncate(n);
            g.tail.truncate(n);
            g
        })
        .collect();
    Ok(OrientedBinomialSet::new(TermOrder::grevlex(n), elims, true))
}
