//! Search for lexicographic Gröbner bases of bounded degree over variable
//! orderings.

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::order::TermOrder;
use super::toric::toric_ideal;
use crate::error::Result;
use crate::lattice::Configuration;

#[derive(Clone, Debug, Serialize)]
pub struct LexSearch {
    /// Variable ranking (most significant first) of the first order found.
    pub order: Option<Vec<usize>>,
    pub maxdeg: Option<u64>,
    pub tried: usize,
}

/// Orderings worth trying first: identity, reversed, and columns sorted by
/// how far they lie from the centroid (vertices first, then inward).
fn heuristic_orders(a: &Configuration) -> Vec<Vec<usize>> {
    let n = a.n();
    let id: Vec<usize> = (0..n).collect();
    let rev: Vec<usize> = (0..n).rev().collect();
    let cols = a.columns();
    let d = a.d();
    let center: Vec<num_bigint::BigInt> =
        (0..d).map(|i| cols.iter().map(|c| &c[i]).sum::<num_bigint::BigInt>()).collect();
    let dist = |j: usize| -> num_bigint::BigInt {
        (0..d)
            .map(|i| {
                let x = &cols[j][i] * n - &center[i];
                &x * &x
            })
            .sum()
    };
    let mut outward = id.clone();
    outward.sort_by_key(|&j| std::cmp::Reverse(dist(j)));
    let mut inward = id.clone();
    inward.sort_by_key(|&j| dist(j));
    vec![id, rev, outward, inward]
}

/// Tries lex orders, heuristic ones first and then seeded random
/// permutations, until one yields a reduced Gröbner basis of degree at most
/// `bound` or `max_tries` orders have been computed.
pub fn lex_groebner_of_degree(a: &Configuration, bound: u64, max_tries: usize, seed: u64) -> Result<LexSearch> {
    let n = a.n();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut candidates = heuristic_orders(a);
    let mut tried = 0;
    let mut seen = std::collections::HashSet::new();
    while tried < max_tries {
        let perm = match candidates.pop() {
            Some(p) => p,
            None => {
                let mut p: Vec<usize> = (0..n).collect();
                p.shuffle(&mut rng);
                p
            }
        };
        if !seen.insert(perm.clone()) {
            if seen.len() >= factorial_capped(n) {
                break;
            }
            continue;
        }
        tried += 1;
        let gb = toric_ideal(a, &TermOrder::lex_perm(perm.clone()))?;
        if gb.maxdeg() <= bound {
            return Ok(LexSearch { order: Some(perm), maxdeg: Some(gb.maxdeg()), tried });
        }
    }
    Ok(LexSearch { order: None, maxdeg: None, tried })
}

fn factorial_capped(n: usize) -> usize {
    (1..=n).try_fold(1usize, |acc, k| acc.checked_mul(k)).unwrap_or(usize::MAX)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gallery;

    #[test]
    fn twisted_cubic_has_quadratic_lex() {
        let s = lex_groebner_of_degree(&gallery::twisted_cubic(), 2, 24, 1).unwrap();
        assert_eq!(s.maxdeg, Some(2));
    }

    #[test]
    fn sparse_curve_has_none() {
        // The ideal needs cubic generators, so no quadratic basis exists.
        let s = lex_groebner_of_degree(&gallery::sparse_curve(4).unwrap(), 2, 24, 1).unwrap();
        assert!(s.order.is_none());
        assert_eq!(s.tried, 24);
    }
}
