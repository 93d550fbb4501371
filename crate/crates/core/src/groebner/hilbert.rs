//! Hilbert functions and polynomials of `C[A]` from an initial ideal.

use num_bigint::BigInt;
use num_traits::Zero;

use super::binomial::divides;
use super::order::TermOrder;
use super::toric::toric_ideal;
use crate::error::{Result, ToricError};
use crate::lattice::{Configuration, Q};
use crate::poly::QPoly;

/// Hilbert series `N(t) / (1 − t)^n` of `k[x_1..x_n] / M` for a monomial
/// ideal `M`, all variables of degree one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbertSeries {
    numerator: Vec<BigInt>,
    nvars: usize,
}

fn minimal_monomials(gens: &[Vec<u32>]) -> Vec<Vec<u32>> {
    let mut out: Vec<Vec<u32>> = vec![];
    let mut sorted = gens.to_vec();
    sorted.sort_by_key(|m| m.iter().sum::<u32>());
    sorted.dedup();
    for m in sorted {
        if !out.iter().any(|g| divides(g, &m)) {
            out.push(m);
        }
    }
    out
}

fn poly_mul(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn poly_add(a: &mut Vec<BigInt>, b: &[BigInt], shift: usize) {
    if a.len() < b.len() + shift {
        a.resize(b.len() + shift, BigInt::zero());
    }
    for (i, y) in b.iter().enumerate() {
        a[i + shift] += y;
    }
}

fn numerator(gens: Vec<Vec<u32>>) -> Vec<BigInt> {
    let gens = minimal_monomials(&gens);
    if gens.is_empty() {
        return vec![BigInt::from(1)];
    }
    let n = gens[0].len();
    let mut counts = vec![0usize; n];
    for g in &gens {
        for (c, &e) in counts.iter_mut().zip(g) {
            if e > 0 {
                *c += 1;
            }
        }
    }
    let pivot = (0..n).filter(|&j| counts[j] >= 2).max_by_key(|&j| counts[j]);
    let Some(j) = pivot else {
        // Pairwise coprime generators: a complete intersection.
        return gens.iter().fold(vec![BigInt::from(1)], |acc, g| {
            let d = g.iter().sum::<u32>() as usize;
            let mut f = vec![BigInt::zero(); d + 1];
            f[0] = BigInt::from(1);
            f[d] = BigInt::from(-1);
            poly_mul(&acc, &f)
        });
    };
    // N(M) = N(M + x_j) + t · N(M : x_j)
    let mut xj = vec![0u32; n];
    xj[j] = 1;
    let mut plus: Vec<Vec<u32>> = gens.iter().filter(|g| g[j] == 0).cloned().collect();
    plus.push(xj);
    let colon: Vec<Vec<u32>> = gens
        .iter()
        .map(|g| {
            let mut g = g.clone();
            g[j] = g[j].saturating_sub(1);
            g
        })
        .collect();
    let mut out = numerator(plus);
    poly_add(&mut out, &numerator(colon), 1);
    while out.len() > 1 && out.last().is_some_and(Zero::is_zero) {
        out.pop();
    }
    out
}

fn binom(n: &BigInt, k: usize) -> BigInt {
    if n < &BigInt::from(k) {
        return BigInt::zero();
    }
    let mut acc = BigInt::from(1);
    for i in 0..k {
        acc = acc * (n - BigInt::from(i)) / BigInt::from(i + 1);
    }
    acc
}

impl HilbertSeries {
    pub fn of_monomial_ideal(gens: &[Vec<u32>], nvars: usize) -> Self {
        let numerator = if gens.is_empty() { vec![BigInt::from(1)] } else { numerator(gens.to_vec()) };
        HilbertSeries { numerator, nvars }
    }

    pub fn numerator(&self) -> &[BigInt] {
        &self.numerator
    }

    /// Number of standard monomials of degree `s`.
    pub fn value(&self, s: usize) -> BigInt {
        if self.nvars == 0 {
            return BigInt::from(usize::from(s == 0));
        }
        let mut acc = BigInt::zero();
        for (k, c) in self.numerator.iter().enumerate() {
            if k <= s {
                acc += c * binom(&BigInt::from(s - k + self.nvars - 1), self.nvars - 1);
            }
        }
        acc
    }

    /// First degree from which the value agrees with the polynomial.
    pub fn regularity_index(&self) -> usize {
        (self.numerator.len() - 1).saturating_sub(self.nvars.saturating_sub(1))
    }
}

/// Hilbert function of `C[A]`: `s ↦ dim C[A]_s`.
#[derive(Clone, Debug)]
pub struct HilbertFunction {
    series: HilbertSeries,
    dim: usize,
}

impl HilbertFunction {
    pub fn of(a: &Configuration) -> Result<Self> {
        a.graded_or_err()?;
        let gb = toric_ideal(a, &TermOrder::grevlex(a.n()))?;
        Ok(HilbertFunction { series: HilbertSeries::of_monomial_ideal(&gb.initial_monomials(), a.n()), dim: a.rank() - 1 })
    }

    pub fn value(&self, s: usize) -> BigInt {
        self.series.value(s)
    }

    pub fn series(&self) -> &HilbertSeries {
        &self.series
    }

    /// Interpolates `dim + 1` values from where the function has become
    /// polynomial, checks two more, and fails if that needs `s > s_max`.
    pub fn polynomial(&self, s_max: usize) -> Result<QPoly> {
        let s0 = self.series.regularity_index();
        let last = s0 + self.dim + 2;
        if last > s_max {
            return Err(ToricError::Instability { what: "Hilbert function".into(), s_max });
        }
        let pts: Vec<(i64, Q)> =
            (s0..=s0 + self.dim).map(|s| (s as i64, Q::from_integer(self.value(s)))).collect();
        let p = QPoly::interpolate(&pts);
        for s in s0 + self.dim + 1..=last {
            if p.eval_int(s as i64) != Q::from_integer(self.value(s)) {
                return Err(ToricError::Instability { what: "Hilbert function".into(), s_max });
            }
        }
        Ok(p)
    }
}

pub const DEFAULT_S_MAX: usize = 200;

pub fn hilbert_function(a: &Configuration, s: usize) -> Result<BigInt> {
    Ok(HilbertFunction::of(a)?.value(s))
}

pub fn hilbert_polynomial(a: &Configuration, s_max: usize) -> Result<QPoly> {
    HilbertFunction::of(a)?.polynomial(s_max)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn twisted_cubic() {
        let a = Configuration::from_rows(&[vec![3, 2, 1, 0], vec![0, 1, 2, 3]]).unwrap();
        let p = hilbert_polynomial(&a, DEFAULT_S_MAX).unwrap();
        assert_eq!(p, QPoly::from_ints(&[1, 3]));
    }

    #[test]
    fn single_point() {
        let a = Configuration::from_rows(&[vec![1]]).unwrap();
        assert_eq!(hilbert_polynomial(&a, DEFAULT_S_MAX).unwrap(), QPoly::from_ints(&[1]));
    }

    #[test]
    fn function_differs_from_polynomial_at_one() {
        let a = Configuration::from_rows(&[vec![4, 3, 1, 0], vec![0, 1, 3, 4]]).unwrap();
        let h = HilbertFunction::of(&a).unwrap();
        assert_eq!(h.polynomial(DEFAULT_S_MAX).unwrap(), QPoly::from_ints(&[1, 4]));
        assert_eq!(h.value(1), BigInt::from(4));
        assert_eq!(h.value(0), BigInt::from(1));
    }

    #[test]
    fn numerator_of_simple_ideals() {
        // <x1^2> in two variables: (1 - t^2)
        let s = HilbertSeries::of_monomial_ideal(&[vec![2, 0]], 2);
        assert_eq!(s.numerator(), &[BigInt::from(1), BigInt::from(0), BigInt::from(-1)]);
        // <x1 x2, x1 x3> in three variables: 1 - 2t^2 + t^3
        let s = HilbertSeries::of_monomial_ideal(&[vec![1, 1, 0], vec![1, 0, 1]], 3);
        assert_eq!(s.value(2), BigInt::from(4));
        assert_eq!(s.value(3), BigInt::from(5));
    }

    #[test]
    fn small_tiny_interval_capped() {
        let a = Configuration::from_rows(&[vec![3, 2, 1, 0], vec![0, 1, 2, 3]]).unwrap();
        assert!(matches!(hilbert_polynomial(&a, 2), Err(ToricError::Instability { .. })));
    }
}
