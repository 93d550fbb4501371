use super::binomial::{Binomial, OrientedBinomialSet};
use super::buchberger::GroebnerBuilder;
use super::order::TermOrder;
use super::toric::toric_ideal;
use crate::error::{Result, ToricError};
use crate::lattice::Configuration;

/// A minimal generating set of `I_A`, extracted degree by degree from the
/// grevlex Gröbner basis.
///
/// Requires a positive grading (`A` pointed), so that "minimal" is well
/// defined. The number of generators in each degree is an invariant of the
/// ideal; which binomials are picked depends on the basis order.
pub fn minimal_generators(a: &Configuration) -> Result<OrientedBinomialSet> {
    let deg = a.variable_degrees().ok_or(ToricError::NotHomogeneous)?;
    let gb = toric_ideal(a, &TermOrder::grevlex(a.n()))?;
    let kept = minimalize(gb.elements().to_vec(), &deg);
    Ok(OrientedBinomialSet::new(gb.order().clone(), kept, false))
}

/// Keeps, in order of increasing `deg`-degree, each generator that is not in
/// the ideal of those kept before it. `gens` must be homogeneous for `deg`.
pub fn minimalize(mut gens: Vec<Binomial>, deg: &[i64]) -> Vec<Binomial> {
    let n = deg.len();
    let weight = |m: &[u32]| -> i64 { deg.iter().zip(m).map(|(&w, &e)| w * e as i64).sum() };
    gens.sort_by_key(|g| (weight(&g.head), std::cmp::Reverse(g.head.clone())));
    let order = TermOrder::grevlex(n).with_leading_row(deg.to_vec());
    let mut builder = GroebnerBuilder::new(order, deg.to_vec());
    let mut kept = vec![];
    for g in gens {
        builder.complete(Some(weight(&g.head)));
        if !builder.reduces_to_zero(&g.head, &g.tail) {
            builder.add(g.head.clone(), g.tail.clone());
            kept.push(g);
        }
    }
    kept
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn twisted_cubic_three_quadrics() {
        let a = Configuration::from_rows(&[vec![3, 2, 1, 0], vec![0, 1, 2, 3]]).unwrap();
        let m = minimal_generators(&a).unwrap();
        assert_eq!(m.len(), 3);
        assert!(m.elements().iter().all(|g| g.degree() == 2));
    }

    #[test]
    fn quadric_plus_higher_degree() {
        for r in 4..=6u64 {
            let ri = r as i64;
            let a = Configuration::from_rows(&[vec![ri, ri - 1, 1, 0], vec![0, 1, ri - 1, ri]]).unwrap();
            let m = minimal_generators(&a).unwrap();
            let mut degs: Vec<u64> = m.elements().iter().map(Binomial::degree).collect();
            degs.sort();
            let mut expect = vec![2];
            expect.extend(std::iter::repeat_n(r - 1, r as usize - 1));
            assert_eq!(degs, expect, "r = {r}");
        }
    }
}
