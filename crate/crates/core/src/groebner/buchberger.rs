use std::collections::{BTreeSet, HashSet};

use super::binomial::{canonical_sort, divides, divmask, Binomial, OrientedBinomialSet};
use super::order::TermOrder;
use crate::lattice::LatticeBinomial;

#[derive(Clone, Debug)]
struct Elem {
    head: Vec<u32>,
    tail: Vec<u32>,
    mask: u64,
}

/// Incremental Buchberger completion for ideals generated by pure
/// difference binomials.
///
/// Pairs are processed by increasing `weights`-degree of their lcm, ties by
/// the lcm exponent vector. `complete(Some(d))` stops before anything of
/// degree above `d`, which yields a `d`-truncated Gröbner basis when the
/// ideal is homogeneous for `weights`; the remaining work stays queued.
#[derive(Clone, Debug)]
pub struct GroebnerBuilder {
    order: TermOrder,
    weights: Vec<i64>,
    cancel: Vec<bool>,
    cancel_any: bool,
    elems: Vec<Elem>,
    pairs: BTreeSet<(i64, Vec<u32>, usize, usize)>,
    pending: HashSet<(usize, usize)>,
    inputs: BTreeSet<(i64, usize, Vec<u32>, Vec<u32>)>,
    seq: usize,
}

impl GroebnerBuilder {
    pub fn new(order: TermOrder, weights: Vec<i64>) -> Self {
        let n = order.nvars();
        assert_eq!(weights.len(), n, "weight length must match the number of variables");
        GroebnerBuilder {
            order,
            weights,
            cancel: vec![false; n],
            cancel_any: false,
            elems: vec![],
            pairs: BTreeSet::new(),
            pending: HashSet::new(),
            inputs: BTreeSet::new(),
            seq: 0,
        }
    }

    /// Allows cancelling common powers of the flagged variables. Valid only
    /// when the ideal is saturated with respect to each of them.
    pub fn with_cancellation(mut self, vars: Vec<bool>) -> Self {
        self.cancel_any = vars.iter().any(|&b| b);
        self.cancel = vars;
        self
    }

    pub fn order(&self) -> &TermOrder {
        &self.order
    }

    fn weight(&self, m: &[u32]) -> i64 {
        self.weights.iter().zip(m).map(|(&w, &e)| w * e as i64).sum()
    }

    pub fn add(&mut self, a: Vec<u32>, b: Vec<u32>) {
        let deg = self.weight(&a).max(self.weight(&b));
        self.inputs.insert((deg, self.seq, a, b));
        self.seq += 1;
    }

    pub fn add_lattice(&mut self, u: &LatticeBinomial) {
        self.add(u.plus(), u.minus());
    }

    fn find_reducer(&self, m: &[u32]) -> Option<usize> {
        let mask = divmask(m);
        self.elems.iter().position(|e| e.mask & !mask == 0 && divides(&e.head, m))
    }

    /// Head-reduces `a − b`; `None` if it vanishes.
    pub fn reduce(&self, mut h: Vec<u32>, mut t: Vec<u32>) -> Option<(Vec<u32>, Vec<u32>)> {
        loop {
            if self.cancel_any {
                for i in 0..h.len() {
                    if self.cancel[i] {
                        let m = h[i].min(t[i]);
                        h[i] -= m;
                        t[i] -= m;
                    }
                }
            }
            match self.order.cmp(&h, &t) {
                std::cmp::Ordering::Equal => return None,
                std::cmp::Ordering::Less => std::mem::swap(&mut h, &mut t),
                std::cmp::Ordering::Greater => {}
            }
            match self.find_reducer(&h) {
                Some(k) => {
                    let e = &self.elems[k];
                    for i in 0..h.len() {
                        h[i] = h[i] - e.head[i] + e.tail[i];
                    }
                }
                None => return Some((h, t)),
            }
        }
    }

    /// Whether `a − b` lies in the ideal; exact once the relevant degrees
    /// have been completed.
    pub fn reduces_to_zero(&self, a: &[u32], b: &[u32]) -> bool {
        self.reduce(a.to_vec(), b.to_vec()).is_none()
    }

    fn insert(&mut self, head: Vec<u32>, tail: Vec<u32>) {
        let idx = self.elems.len();
        let mask = divmask(&head);
        for (k, e) in self.elems.iter().enumerate() {
            // Coprime leading terms: the S-pair reduces to zero.
            if e.mask & mask == 0 {
                continue;
            }
            let lcm: Vec<u32> = e.head.iter().zip(&head).map(|(&a, &b)| a.max(b)).collect();
            let deg = self.weight(&lcm);
            self.pairs.insert((deg, lcm, k, idx));
            self.pending.insert((k, idx));
        }
        self.elems.push(Elem { head, tail, mask });
    }

    fn chain_redundant(&self, i: usize, j: usize, lcm: &[u32]) -> bool {
        let mask = divmask(lcm);
        self.elems.iter().enumerate().any(|(k, e)| {
            k != i
                && k != j
                && e.mask & !mask == 0
                && divides(&e.head, lcm)
                && !self.pending.contains(&(i.min(k), i.max(k)))
                && !self.pending.contains(&(j.min(k), j.max(k)))
        })
    }

    /// Runs Buchberger's algorithm up to the degree `bound`.
    pub fn complete(&mut self, bound: Option<i64>) {
        loop {
            let next_pair = self.pairs.first().map(|p| p.0);
            let next_input = self.inputs.first().map(|p| p.0);
            let take_input = match (next_input, next_pair) {
                (None, None) => return,
                (Some(a), Some(b)) => a <= b,
                (Some(_), None) => true,
                (None, Some(_)) => false,
            };
            let deg = if take_input { next_input } else { next_pair }.unwrap();
            if bound.is_some_and(|d| deg > d) {
                return;
            }
            let (a, b) = if take_input {
                let (_, _, a, b) = self.inputs.pop_first().unwrap();
                (a, b)
            } else {
                let (_, lcm, i, j) = self.pairs.pop_first().unwrap();
                self.pending.remove(&(i, j));
                if self.chain_redundant(i, j, &lcm) {
                    continue;
                }
                let (ei, ej) = (&self.elems[i], &self.elems[j]);
                let a = (0..lcm.len()).map(|v| lcm[v] - ei.head[v] + ei.tail[v]).collect();
                let b = (0..lcm.len()).map(|v| lcm[v] - ej.head[v] + ej.tail[v]).collect();
                (a, b)
            };
            if let Some((h, t)) = self.reduce(a, b) {
                self.insert(h, t);
            }
        }
    }

    /// True when no work remains queued.
    pub fn is_complete(&self) -> bool {
        self.pairs.is_empty() && self.inputs.is_empty()
    }

    /// Current leading-term-minimal elements, tail-reduced and sorted.
    pub fn reduced_basis(&self) -> Vec<Binomial> {
        let mut keep: Vec<usize> = vec![];
        for (i, e) in self.elems.iter().enumerate() {
            let redundant = self.elems.iter().enumerate().any(|(j, f)| {
                j != i && f.mask & !e.mask == 0 && divides(&f.head, &e.head) && (f.head != e.head || j < i)
            });
            if !redundant {
                keep.push(i);
            }
        }
        let heads: Vec<&Elem> = keep.iter().map(|&i| &self.elems[i]).collect();
        let mut out: Vec<Binomial> = keep
            .iter()
            .map(|&i| {
                let e = &self.elems[i];
                let mut t = e.tail.clone();
                'outer: loop {
                    let mask = divmask(&t);
                    for g in &heads {
                        if g.mask & !mask == 0 && divides(&g.head, &t) {
                            for v in 0..t.len() {
                                t[v] = t[v] - g.head[v] + g.tail[v];
                            }
                            continue 'outer;
                        }
                    }
                    break;
                }
                Binomial::new(e.head.clone(), t)
            })
            .collect();
        canonical_sort(&mut out);
        out
    }

    pub fn into_set(mut self) -> OrientedBinomialSet {
        self.complete(None);
        let basis = self.reduced_basis();
        OrientedBinomialSet::new(self.order, basis, true)
    }
}

/// Reduced Gröbner basis of the ideal generated by `gens` under `order`,
/// which must be a term order (a well-order on all monomials).
pub fn buchberger(gens: &[LatticeBinomial], order: &TermOrder) -> OrientedBinomialSet {
    let n = order.nvars();
    let mut b = GroebnerBuilder::new(order.clone(), vec![1; n]);
    for g in gens {
        b.add_lattice(g);
    }
    b.into_set()
}

/// Same as [`buchberger`] for binomials that may share common factors.
pub fn buchberger_binomials(gens: &[Binomial], order: &TermOrder) -> OrientedBinomialSet {
    let n = order.nvars();
    let mut b = GroebnerBuilder::new(order.clone(), vec![1; n]);
    for g in gens {
        b.add(g.head.clone(), g.tail.clone());
    }
    b.into_set()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lb(v: &[i64]) -> LatticeBinomial {
        LatticeBinomial::new(v.to_vec())
    }

    #[test]
    fn twisted_cubic_quadrics_are_already_a_basis() {
        let o = TermOrder::grevlex(4);
        let gens = [lb(&[1, -2, 1, 0]), lb(&[1, -1, -1, 1]), lb(&[0, 1, -2, 1])];
        let gb = buchberger(&gens, &o);
        assert_eq!(gb.len(), 3);
        let lines = gb.format_lines(&crate::lattice::default_labels(4));
        assert_eq!(lines, ["x2^2 - x1*x3", "x2*x3 - x1*x4", "x3^2 - x2*x4"]);
    }

    #[test]
    fn single_linear_binomial() {
        let gb = buchberger(&[lb(&[1, -1])], &TermOrder::lex(2));
        assert_eq!(gb.lattice_binomials(), vec![lb(&[1, -1])]);
    }

    #[test]
    fn lex_basis_of_twisted_cubic_is_larger() {
        let o = TermOrder::lex(4);
        let gens = [lb(&[1, -2, 1, 0]), lb(&[1, -1, -1, 1]), lb(&[0, 1, -2, 1])];
        let gb = buchberger(&gens, &o);
        // x1 x3 - x2^2, x1 x4 - x2 x3, x2 x4 - x3^2, x2^2 x4?  lex adds x2^3 - x1^2 x4 style elements
        assert!(gb.len() >= 3);
        for g in gens {
            assert!(gb.contains_lattice(&g));
        }
        // reduced: no tail divisible by a head
        for g in gb.elements() {
            for h in gb.elements() {
                assert!(!divides(&h.head, &g.tail));
            }
        }
    }

    #[test]
    fn insertion_order_does_not_matter() {
        let o = TermOrder::grevlex(4);
        let mut gens = vec![lb(&[2, -3, 0, 1]), lb(&[1, -1, -1, 1]), lb(&[0, 1, -2, 1]), lb(&[1, -2, 1, 0])];
        let a = buchberger(&gens, &o);
        gens.reverse();
        let b = buchberger(&gens, &o);
        assert_eq!(a, b);
    }
}
