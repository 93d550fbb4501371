use std::cmp::{Ordering, Reverse};

use serde::{Deserialize, Serialize};

use super::order::TermOrder;
use super::polynomial::SparsePolynomial;
use crate::lattice::{format_monomial, LatticeBinomial};

/// `x^head − x^tail` with `head` the leading monomial under some order.
/// Both sides may share a common factor.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Binomial {
    pub head: Vec<u32>,
    pub tail: Vec<u32>,
}

impl Binomial {
    pub fn new(head: Vec<u32>, tail: Vec<u32>) -> Self {
        Binomial { head, tail }
    }

    /// `a − b` oriented under `order`; `None` when the two sides coincide.
    pub fn oriented(a: Vec<u32>, b: Vec<u32>, order: &TermOrder) -> Option<Self> {
        match order.cmp(&a, &b) {
            Ordering::Greater => Some(Binomial { head: a, tail: b }),
            Ordering::Less => Some(Binomial { head: b, tail: a }),
            Ordering::Equal => None,
        }
    }

    pub fn from_lattice(u: &LatticeBinomial, order: &TermOrder) -> Option<Self> {
        Self::oriented(u.plus(), u.minus(), order)
    }

    /// The exponent difference `head − tail`.
    pub fn to_lattice(&self) -> LatticeBinomial {
        LatticeBinomial::from_parts(&self.head, &self.tail)
    }

    pub fn nvars(&self) -> usize {
        self.head.len()
    }

    /// Larger of the two total degrees.
    pub fn degree(&self) -> u64 {
        let h: u64 = self.head.iter().map(|&e| e as u64).sum();
        let t: u64 = self.tail.iter().map(|&e| e as u64).sum();
        h.max(t)
    }

    pub fn has_common_factor(&self) -> bool {
        self.head.iter().zip(&self.tail).any(|(&a, &b)| a > 0 && b > 0)
    }

    pub fn to_polynomial(&self) -> SparsePolynomial {
        SparsePolynomial::binomial(&self.head, &self.tail)
    }

    pub fn format(&self, labels: &[String]) -> String {
        format!("{} - {}", format_monomial(&self.head, labels), format_monomial(&self.tail, labels))
    }
}

pub(crate) fn divides(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

pub(crate) fn divmask(m: &[u32]) -> u64 {
    m.iter().enumerate().filter(|(_, &e)| e > 0).fold(0u64, |acc, (i, _)| acc | 1 << (i % 64))
}

/// Canonical output order: degree, then leading exponent vector descending.
pub fn canonical_sort(bs: &mut [Binomial]) {
    bs.sort_by_key(|b| (b.degree(), Reverse(b.head.clone()), Reverse(b.tail.clone())));
}

/// A set of binomials oriented under a common term order; when `reduced`
/// is set it is the reduced Gröbner basis of the ideal it generates.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrientedBinomialSet {
    order: TermOrder,
    elements: Vec<Binomial>,
    reduced: bool,
}

impl OrientedBinomialSet {
    pub fn new(order: TermOrder, mut elements: Vec<Binomial>, reduced: bool) -> Self {
        canonical_sort(&mut elements);
        OrientedBinomialSet { order, elements, reduced }
    }

    pub fn empty(order: TermOrder) -> Self {
        OrientedBinomialSet { order, elements: vec![], reduced: true }
    }

    pub fn order(&self) -> &TermOrder {
        &self.order
    }

    pub fn elements(&self) -> &[Binomial] {
        &self.elements
    }

    pub fn into_elements(self) -> Vec<Binomial> {
        self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn is_reduced(&self) -> bool {
        self.reduced
    }

    pub fn maxdeg(&self) -> u64 {
        self.elements.iter().map(Binomial::degree).max().unwrap_or(0)
    }

    pub fn lattice_binomials(&self) -> Vec<LatticeBinomial> {
        self.elements.iter().map(Binomial::to_lattice).collect()
    }

    /// Generators of the initial monomial ideal.
    pub fn initial_monomials(&self) -> Vec<Vec<u32>> {
        self.elements.iter().map(|b| b.head.clone()).collect()
    }

    /// Remainder of `m` under repeated replacement of leading terms by
    /// trailing terms.
    pub fn reduce_monomial(&self, m: &[u32]) -> Vec<u32> {
        let mut m = m.to_vec();
        'outer: loop {
            for g in &self.elements {
                if divides(&g.head, &m) {
                    for i in 0..m.len() {
                        m[i] = m[i] - g.head[i] + g.tail[i];
                    }
                    continue 'outer;
                }
            }
            return m;
        }
    }

    /// Whether `a − b` reduces to zero; decides membership when the set is a
    /// Gröbner basis.
    pub fn contains(&self, a: &[u32], b: &[u32]) -> bool {
        self.reduce_monomial(a) == self.reduce_monomial(b)
    }

    pub fn contains_lattice(&self, u: &LatticeBinomial) -> bool {
        self.contains(&u.plus(), &u.minus())
    }

    pub fn normal_form(&self, f: &SparsePolynomial) -> SparsePolynomial {
        f.normal_form(&self.elements, &self.order)
    }

    pub fn format_lines(&self, labels: &[String]) -> Vec<String> {
        self.elements.iter().map(|b| b.format(labels)).collect()
    }
}

/// Whether two Gröbner bases (under any orders) generate the same ideal.
pub fn same_ideal(a: &OrientedBinomialSet, b: &OrientedBinomialSet) -> bool {
    a.elements.iter().all(|g| b.contains(&g.head, &g.tail)) && b.elements.iter().all(|g| a.contains(&g.head, &g.tail))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orientation_and_lattice_view() {
        let o = TermOrder::grevlex(4);
        let b = Binomial::oriented(vec![1, 0, 1, 0], vec![0, 2, 0, 0], &o).unwrap();
        assert_eq!(b.head, vec![0, 2, 0, 0]);
        assert_eq!(b.to_lattice().vector(), &[-1, 2, -1, 0]);
        assert!(Binomial::oriented(vec![1, 1, 0, 0], vec![1, 1, 0, 0], &o).is_none());
    }

    #[test]
    fn monomial_reduction_decides_membership() {
        let o = TermOrder::grevlex(4);
        let gb = OrientedBinomialSet::new(
            o.clone(),
            vec![
                Binomial::new(vec![0, 2, 0, 0], vec![1, 0, 1, 0]),
                Binomial::new(vec![0, 1, 1, 0], vec![1, 0, 0, 1]),
                Binomial::new(vec![0, 0, 2, 0], vec![0, 1, 0, 1]),
            ],
            true,
        );
        assert!(gb.contains(&[1, 0, 0, 1], &[0, 1, 1, 0]));
        assert!(gb.contains(&[2, 0, 0, 1], &[0, 3, 0, 0]));
        assert!(!gb.contains(&[1, 0, 0, 0], &[0, 1, 0, 0]));
    }
}
