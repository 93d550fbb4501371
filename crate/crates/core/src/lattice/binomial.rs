use std::fmt::Write as _;

use num_bigint::BigInt;
use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Result, ToricError};

/// An integer vector `u = u⁺ − u⁻`, read as the binomial `x^{u⁺} − x^{u⁻}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct LatticeBinomial {
    u: Vec<i64>,
}

impl LatticeBinomial {
    pub fn new(u: Vec<i64>) -> Self {
        LatticeBinomial { u }
    }

    pub fn from_big(u: &[BigInt]) -> Result<Self> {
        Ok(LatticeBinomial { u: crate::lattice::matrix::to_i64_vec(u)? })
    }

    /// Binomial `x^plus − x^minus`; common factors are cancelled.
    pub fn from_parts(plus: &[u32], minus: &[u32]) -> Self {
        LatticeBinomial { u: plus.iter().zip(minus).map(|(&a, &b)| a as i64 - b as i64).collect() }
    }

    pub fn vector(&self) -> &[i64] {
        &self.u
    }

    pub fn len(&self) -> usize {
        self.u.len()
    }

    pub fn is_empty(&self) -> bool {
        self.u.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.u.iter().all(|&x| x == 0)
    }

    pub fn plus(&self) -> Vec<u32> {
        self.u.iter().map(|&x| x.max(0) as u32).collect()
    }

    pub fn minus(&self) -> Vec<u32> {
        self.u.iter().map(|&x| (-x).max(0) as u32).collect()
    }

    pub fn support(&self) -> Vec<usize> {
        self.u.iter().enumerate().filter(|(_, &x)| x != 0).map(|(i, _)| i).collect()
    }

    /// Max of the coordinate sums of `u⁺` and `u⁻`.
    pub fn degree(&self) -> u64 {
        let p: i64 = self.u.iter().filter(|&&x| x > 0).sum();
        let m: i64 = -self.u.iter().filter(|&&x| x < 0).sum::<i64>();
        p.max(m) as u64
    }

    pub fn negated(&self) -> Self {
        LatticeBinomial { u: self.u.iter().map(|&x| -x).collect() }
    }

    /// Orientation with the first nonzero coordinate positive.
    pub fn sign_normalized(&self) -> Self {
        match self.u.iter().find(|&&x| x != 0) {
            Some(&x) if x < 0 => self.negated(),
            _ => self.clone(),
        }
    }

    pub fn is_primitive(&self) -> bool {
        self.u.iter().fold(0i64, |g, &x| g.gcd(&x)) == 1
    }

    /// `u⁺` and `u⁻` squarefree respectively.
    pub fn squarefree_sides(&self) -> (bool, bool) {
        (self.u.iter().all(|&x| x <= 1), self.u.iter().all(|&x| x >= -1))
    }

    /// `self` is conformally below `other`: same signs, smaller magnitudes.
    pub fn conformal_le(&self, other: &LatticeBinomial) -> bool {
        self.u.iter().zip(&other.u).all(|(&a, &b)| a == 0 || (a.signum() == b.signum() && a.abs() <= b.abs()))
    }

    pub fn format(&self, labels: &[String]) -> String {
        format!("{} - {}", format_monomial(&self.plus(), labels), format_monomial(&self.minus(), labels))
    }
}

/// `x1^2*x4` style; the empty monomial prints as `1`.
pub fn format_monomial(exps: &[u32], labels: &[String]) -> String {
    let mut s = String::new();
    for (i, &e) in exps.iter().enumerate() {
        if e == 0 {
            continue;
        }
        if !s.is_empty() {
            s.push('*');
        }
        s.push_str(&labels[i]);
        if e > 1 {
            let _ = write!(s, "^{e}");
        }
    }
    if s.is_empty() {
        s.push('1');
    }
    s
}

pub fn parse_monomial(text: &str, labels: &[String]) -> Result<Vec<u32>> {
    let mut exps = vec![0u32; labels.len()];
    let text = text.trim();
    if text == "1" {
        return Ok(exps);
    }
    for factor in text.split('*') {
        let factor = factor.trim();
        let (name, e) = match factor.split_once('^') {
            Some((n, e)) => (n.trim(), e.trim().parse::<u32>().map_err(|_| ToricError::Parse(format!("bad exponent in `{factor}`")))?),
            None => (factor, 1),
        };
        let i = labels
            .iter()
            .position(|l| l == name)
            .ok_or_else(|| ToricError::Parse(format!("unknown variable `{name}`")))?;
        exps[i] += e;
    }
    Ok(exps)
}

/// Parses `x1^2*x4 - x2^3`.
pub fn parse_binomial(text: &str, labels: &[String]) -> Result<LatticeBinomial> {
    let (l, r) = text
        .split_once(" - ")
        .or_else(|| text.split_once('-'))
        .ok_or_else(|| ToricError::Parse(format!("binomial `{text}` has no ` - `")))?;
    let plus = parse_monomial(l, labels)?;
    let minus = parse_monomial(r, labels)?;
    Ok(LatticeBinomial::from_parts(&plus, &minus))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::config::default_labels;

    #[test]
    fn parts_and_degree() {
        let b = LatticeBinomial::new(vec![2, -3, 0, 1]);
        assert_eq!(b.plus(), vec![2, 0, 0, 1]);
        assert_eq!(b.minus(), vec![0, 3, 0, 0]);
        assert_eq!(b.degree(), 3);
        assert_eq!(b.support(), vec![0, 1, 3]);
        assert_eq!(b.format(&default_labels(4)), "x1^2*x4 - x2^3");
    }

    #[test]
    fn parse_round_trip() {
        let labels = default_labels(4);
        let b = parse_binomial("x1^2*x4 - x2^3", &labels).unwrap();
        assert_eq!(b.vector(), &[2, -3, 0, 1]);
        let c = parse_binomial("x1*x2*x3 - 1", &labels).unwrap();
        assert_eq!(c.vector(), &[1, 1, 1, 0]);
        assert!(parse_binomial("x9 - x1", &labels).is_err());
    }

    #[test]
    fn normalization_and_conformality() {
        let b = LatticeBinomial::new(vec![0, -1, 2]);
        assert_eq!(b.sign_normalized().vector(), &[0, 1, -2]);
        let small = LatticeBinomial::new(vec![1, 0, -1]);
        let big = LatticeBinomial::new(vec![2, 1, -1]);
        assert!(small.conformal_le(&big));
        assert!(!big.conformal_le(&small));
        assert_eq!(big.squarefree_sides(), (false, true));
    }
}
