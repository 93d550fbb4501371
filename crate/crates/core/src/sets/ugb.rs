//! Universal Gröbner basis: the union of all reduced Gröbner bases of
//! `I_A`, collected by walking the Gröbner fan.
//!
//! Each reduced basis `G` cuts out the closed cone
//! `{w : w·(head − tail) ≥ 0, g ∈ G}`. Facets are found by LP; crossing a
//! facet through a relative-interior point `p` with inner normal `u` means
//! recomputing the basis for the matrix order `[deg, p, −u]` refined by lex.
//! Without a positive grading the walk stays inside the positive orthant.

use std::collections::{BTreeSet, HashSet, VecDeque};

use num_traits::ToPrimitive;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::circuits::{maxdeg, sort_binomials};
use crate::error::{Result, ToricError};
use crate::groebner::{toric_ideal, Binomial, GroebnerBuilder, OrderFlavor, TermOrder, TieBreak};
use crate::lattice::lp::{feasible_point, Constraint};
use crate::lattice::matrix::clear_denominators;
use crate::lattice::{Configuration, LatticeBinomial, Q};

/// Largest `n` for which the exhaustive walk is attempted.
pub const MAX_EXHAUSTIVE_VARS: usize = 10;
/// Largest number of Gröbner cones visited.
pub const MAX_CONES: usize = 5000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum UgbMode {
    /// Walk the whole fan.
    Exhaustive,
    /// Union over `orders` random term orders: a subset of the UGB.
    Sampled { orders: usize, seed: u64 },
}

#[derive(Clone, Debug, Serialize)]
pub struct UniversalGroebnerBasis {
    pub elements: Vec<LatticeBinomial>,
    /// Reduced bases visited (distinct Gröbner cones).
    pub cones: usize,
    /// `false` when sampled: then `elements` is only a lower bound.
    pub complete: bool,
    pub maxdeg: u64,
}

type Key = Vec<(Vec<u32>, Vec<u32>)>;

fn key(g: &[Binomial]) -> Key {
    let mut k: Key = g.iter().map(|b| (b.head.clone(), b.tail.clone())).collect();
    k.sort();
    k
}

fn q(x: i64) -> Q {
    Q::from_integer(x.into())
}

fn direction(b: &Binomial) -> Vec<i64> {
    b.head.iter().zip(&b.tail).map(|(&h, &t)| h as i64 - t as i64).collect()
}

/// Inner facet normals of the cone of `g`, each with a relative-interior
/// point of its facet.
fn facets(g: &[Binomial], positive: bool) -> Result<Vec<(Vec<i64>, Vec<i64>)>> {
    let n = g.first().map_or(0, Binomial::nvars);
    let mut dirs: Vec<Vec<i64>> = g.iter().map(direction).collect();
    // Parallel inequalities define the same facet.
    let prim = |v: &Vec<i64>| -> Vec<i64> {
        let gcd = v.iter().fold(0i64, |acc, &x| num_integer::gcd(acc, x));
        v.iter().map(|&x| x / gcd.max(1)).collect()
    };
    dirs = dirs.iter().map(prim).collect::<BTreeSet<_>>().into_iter().collect();
    let mut out = vec![];
    for (i, u) in dirs.iter().enumerate() {
        let eqs = vec![Constraint::new(u.iter().map(|&x| q(x)).collect(), q(0))];
        let mut ges: Vec<Constraint> = dirs
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .map(|(_, v)| Constraint::new(v.iter().map(|&x| q(x)).collect(), q(1)))
            .collect();
        if positive {
            for j in 0..n {
                let mut e = vec![q(0); n];
                e[j] = q(1);
                ges.push(Constraint::new(e, q(1)));
            }
        }
        if let Some(p) = feasible_point(&eqs, &ges, n) {
            let p = clear_denominators(&p)
                .iter()
                .map(|x| x.to_i64().ok_or_else(|| ToricError::Overflow("facet point".into())))
                .collect::<Result<Vec<i64>>>()?;
            out.push((u.clone(), p));
        }
    }
    Ok(out)
}

fn flip(g: &[Binomial], deg: Option<&[i64]>, p: &[i64], u: &[i64]) -> Vec<Binomial> {
    let n = p.len();
    let mut rows = vec![];
    if let Some(d) = deg {
        rows.push(d.to_vec());
    }
    rows.push(p.to_vec());
    rows.push(u.iter().map(|x| -x).collect());
    let order = TermOrder::from_rows(rows, TieBreak::Lex((0..n).collect()), OrderFlavor::WeightThenLex);
    let weights = deg.map_or_else(|| vec![1; n], <[i64]>::to_vec);
    let mut b = GroebnerBuilder::new(order, weights).with_cancellation(vec![true; n]);
    for e in g {
        b.add(e.head.clone(), e.tail.clone());
    }
    b.complete(None);
    b.reduced_basis()
}

fn collect(into: &mut BTreeSet<LatticeBinomial>, g: &[Binomial]) {
    for b in g {
        into.insert(b.to_lattice().sign_normalized());
    }
}

fn finish(set: BTreeSet<LatticeBinomial>, cones: usize, complete: bool) -> UniversalGroebnerBasis {
    let mut elements: Vec<LatticeBinomial> = set.into_iter().collect();
    sort_binomials(&mut elements);
    UniversalGroebnerBasis { maxdeg: maxdeg(&elements), elements, cones, complete }
}

pub fn universal_groebner_basis(a: &Configuration, mode: UgbMode) -> Result<UniversalGroebnerBasis> {
    match mode {
        UgbMode::Exhaustive => exhaustive(a),
        UgbMode::Sampled { orders, seed } => sampled(a, orders, seed),
    }
}

fn exhaustive(a: &Configuration) -> Result<UniversalGroebnerBasis> {
    let n = a.n();
    if n > MAX_EXHAUSTIVE_VARS {
        return Err(ToricError::CapExceeded { what: "variables for the Gröbner fan walk".into(), limit: MAX_EXHAUSTIVE_VARS });
    }
    let deg = a.variable_degrees();
    let start = toric_ideal(a, &TermOrder::grevlex(n))?.into_elements();
    let mut found = BTreeSet::new();
    let mut seen: HashSet<Key> = HashSet::from([key(&start)]);
    let mut queue = VecDeque::from([start]);
    while let Some(g) = queue.pop_front() {
        collect(&mut found, &g);
        for (u, p) in facets(&g, deg.is_none())? {
            let next = flip(&g, deg.as_deref(), &p, &u);
            if seen.insert(key(&next)) {
                if seen.len() > MAX_CONES {
                    return Err(ToricError::CapExceeded { what: "Gröbner cones".into(), limit: MAX_CONES });
                }
                queue.push_back(next);
            }
        }
    }
    Ok(finish(found, seen.len(), true))
}

fn sampled(a: &Configuration, orders: usize, seed: u64) -> Result<UniversalGroebnerBasis> {
    let n = a.n();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut found = BTreeSet::new();
    let mut seen: HashSet<Key> = HashSet::new();
    for _ in 0..orders {
        let w: Vec<i64> = (0..n).map(|_| rng.gen_range(1..=1000)).collect();
        let mut perm: Vec<usize> = (0..n).collect();
        perm.shuffle(&mut rng);
        let g = toric_ideal(a, &TermOrder::weight_lex(w, perm))?.into_elements();
        collect(&mut found, &g);
        seen.insert(key(&g));
    }
    Ok(finish(found, seen.len(), false))
}
