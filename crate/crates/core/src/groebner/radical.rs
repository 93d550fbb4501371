use serde::Serialize;

use super::buchberger::buchberger;
use super::order::TermOrder;
use super::polynomial::SparsePolynomial;
use crate::lattice::LatticeBinomial;

/// Outcome of the bounded search for a power of `b` in an ideal.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case", tag = "verdict", content = "k")]
pub enum RadicalVerdict {
    /// `b^k` lies in the ideal, with `k` least.
    Yes(u32),
    /// No power up to `k_max` lies in the ideal.
    Inconclusive,
}

pub const DEFAULT_K_MAX: u32 = 6;

/// Least `k ≤ k_max` with `b^k ∈ <gens>`, decided by normal forms against a
/// grevlex Gröbner basis of `gens`.
pub fn radical_membership_bounded(b: &LatticeBinomial, gens: &[LatticeBinomial], k_max: u32) -> RadicalVerdict {
    let n = b.len();
    let order = TermOrder::grevlex(n);
    let gb = buchberger(gens, &order);
    let f = SparsePolynomial::binomial(&b.plus(), &b.minus());
    let mut power = f.clone();
    for k in 1..=k_max {
        let r = gb.normal_form(&power);
        if r.is_zero() {
            return RadicalVerdict::Yes(k);
        }
        // b^{k+1} ≡ b · NF(b^k) modulo the ideal.
        power = r.mul(&f);
    }
    RadicalVerdict::Inconclusive
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lb(v: &[i64]) -> LatticeBinomial {
        LatticeBinomial::new(v.to_vec())
    }

    #[test]
    fn generator_is_member() {
        let g = lb(&[1, -2, 1, 0]);
        assert_eq!(radical_membership_bounded(&g, std::slice::from_ref(&g), 3), RadicalVerdict::Yes(1));
    }

    #[test]
    fn twisted_cubic_circuits_cut_out_the_quadric() {
        let circuits = [lb(&[1, -2, 1, 0]), lb(&[0, 1, -2, 1]), lb(&[2, -3, 0, 1]), lb(&[1, 0, -3, 2])];
        let v = radical_membership_bounded(&lb(&[1, -1, -1, 1]), &circuits, 4);
        assert!(matches!(v, RadicalVerdict::Yes(k) if k > 1), "{v:?}");
    }

    #[test]
    fn unrelated_binomial_is_inconclusive() {
        // x1 - 1 is not in the radical of <x2 - 1>
        let g = LatticeBinomial::new(vec![0, 1]);
        assert_eq!(radical_membership_bounded(&lb(&[1, 0]), &[g], 5), RadicalVerdict::Inconclusive);
    }
}
