use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::binomial::{divides, Binomial};
use super::order::TermOrder;
use crate::lattice::format_monomial;

/// Integer polynomial as a list of `(coefficient, exponent)` terms.
/// Terms are distinct and nonzero; [`SparsePolynomial::sorted`] orders them
/// by a term order, largest first.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct SparsePolynomial {
    terms: Vec<(BigInt, Vec<u32>)>,
}

impl SparsePolynomial {
    pub fn zero() -> Self {
        SparsePolynomial { terms: vec![] }
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (BigInt, Vec<u32>)>) -> Self {
        let mut acc: HashMap<Vec<u32>, BigInt> = HashMap::new();
        for (c, m) in terms {
            *acc.entry(m).or_insert_with(BigInt::zero) += c;
        }
        let mut terms: Vec<_> = acc.into_iter().filter(|(_, c)| !c.is_zero()).map(|(m, c)| (c, m)).collect();
        terms.sort_by(|a, b| b.1.cmp(&a.1));
        SparsePolynomial { terms }
    }

    pub fn binomial(a: &[u32], b: &[u32]) -> Self {
        Self::from_terms([(BigInt::one(), a.to_vec()), (-BigInt::one(), b.to_vec())])
    }

    pub fn terms(&self) -> &[(BigInt, Vec<u32>)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn mul(&self, other: &SparsePolynomial) -> SparsePolynomial {
        let mut out = Vec::with_capacity(self.terms.len() * other.terms.len());
        for (c, m) in &self.terms {
            for (d, k) in &other.terms {
                out.push((c * d, m.iter().zip(k).map(|(a, b)| a + b).collect()));
            }
        }
        Self::from_terms(out)
    }

    pub fn pow(&self, k: u32) -> SparsePolynomial {
        let n = self.terms.first().map_or(0, |t| t.1.len());
        let mut acc = Self::from_terms([(BigInt::one(), vec![0; n])]);
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    /// Terms sorted by `order`, largest first.
    pub fn sorted(&self, order: &TermOrder) -> SparsePolynomial {
        let mut terms = self.terms.clone();
        terms.sort_by(|a, b| order.cmp(&b.1, &a.1));
        SparsePolynomial { terms }
    }

    /// Remainder on division by binomials oriented under `order`: no term of
    /// the result is divisible by any `head`.
    pub fn normal_form(&self, basis: &[Binomial], order: &TermOrder) -> SparsePolynomial {
        let mut acc: HashMap<Vec<u32>, BigInt> = HashMap::new();
        for (c, m) in &self.terms {
            *acc.entry(m.clone()).or_insert_with(BigInt::zero) += c;
        }
        loop {
            // Largest reducible term first; every step strictly lowers it.
            let mut best: Option<(Vec<u32>, usize)> = None;
            for (m, c) in &acc {
                if c.is_zero() {
                    continue;
                }
                if let Some(k) = basis.iter().position(|g| divides(&g.head, m)) {
                    if best.as_ref().is_none_or(|(b, _)| order.greater(m, b)) {
                        best = Some((m.clone(), k));
                    }
                }
            }
            let Some((m, k)) = best else { break };
            let c = acc.remove(&m).expect("term present");
            let g = &basis[k];
            let image: Vec<u32> = (0..m.len()).map(|i| m[i] - g.head[i] + g.tail[i]).collect();
            *acc.entry(image).or_insert_with(BigInt::zero) += c;
        }
        Self::from_terms(acc.into_iter().map(|(m, c)| (c, m))).sorted(order)
    }

    pub fn format(&self, labels: &[String]) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut s = String::new();
        for (i, (c, m)) in self.terms.iter().enumerate() {
            let neg = c < &BigInt::zero();
            let mag = if neg { -c } else { c.clone() };
            if i == 0 {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            let mono = format_monomial(m, labels);
            if mag.is_one() {
                s.push_str(&mono);
            } else if mono == "1" {
                s.push_str(&mag.to_string());
            } else {
                s.push_str(&format!("{mag}*{mono}"));
            }
        }
        s
    }
}
