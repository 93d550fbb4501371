//! Univariate polynomials with exact rational coefficients.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Serialize, Serializer};

use crate::lattice::Q;

/// Coefficients are stored constant term first with no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct QPoly {
    coeffs: Vec<Q>,
}

impl QPoly {
    pub fn zero() -> Self {
        QPoly { coeffs: vec![] }
    }

    pub fn constant(c: Q) -> Self {
        Self::from_coeffs(vec![c])
    }

    pub fn from_coeffs(mut coeffs: Vec<Q>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        QPoly { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| Q::from_integer(c.into())).collect())
    }

    pub fn coeffs(&self) -> &[Q] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; the zero polynomial reports `None`.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading_coefficient(&self) -> Q {
        self.coeffs.last().cloned().unwrap_or_else(Q::zero)
    }

    pub fn eval(&self, x: &Q) -> Q {
        self.coeffs.iter().rev().fold(Q::zero(), |acc, c| acc * x + c)
    }

    pub fn eval_int(&self, x: i64) -> Q {
        self.eval(&Q::from_integer(x.into()))
    }

    pub fn add(&self, other: &QPoly) -> QPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let z = Q::zero();
        Self::from_coeffs((0..n).map(|i| self.coeffs.get(i).unwrap_or(&z) + other.coeffs.get(i).unwrap_or(&z)).collect())
    }

    pub fn scale(&self, c: &Q) -> QPoly {
        Self::from_coeffs(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn mul(&self, other: &QPoly) -> QPoly {
        if self.is_zero() || other.is_zero() {
            return QPoly::zero();
        }
        let mut out = vec![Q::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::from_coeffs(out)
    }

    /// Lagrange interpolation through the given points (distinct abscissae).
    pub fn interpolate(points: &[(i64, Q)]) -> QPoly {
        let mut acc = QPoly::zero();
        for (i, (xi, yi)) in points.iter().enumerate() {
            let mut basis = QPoly::constant(Q::one());
            let mut denom = Q::one();
            for (j, (xj, _)) in points.iter().enumerate() {
                if i != j {
                    basis = basis.mul(&QPoly::from_ints(&[-xj, 1]));
                    denom *= Q::from_integer(BigInt::from(xi - xj));
                }
            }
            acc = acc.add(&basis.scale(&(yi / denom)));
        }
        acc
    }

    /// `binom(s + shift, k)` as a polynomial in `s`.
    pub fn binomial(shift: i64, k: usize) -> QPoly {
        let mut p = QPoly::constant(Q::one());
        let mut fact = BigInt::one();
        for j in 0..k as i64 {
            p = p.mul(&QPoly::from_ints(&[shift - j, 1]));
            fact *= BigInt::from(j + 1);
        }
        p.scale(&Q::new(BigInt::one(), fact))
    }

    /// Coefficients rendered as `"p/q"` strings, constant term first.
    pub fn coefficient_strings(&self) -> Vec<String> {
        self.coeffs.iter().map(ToString::to_string).collect()
    }
}

impl fmt::Display for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            first = false;
            let mono = match i {
                0 => String::new(),
                1 => "s".to_string(),
                _ => format!("s^{i}"),
            };
            if mono.is_empty() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{mono}")?;
            } else if mag.is_integer() {
                write!(f, "{mag}*{mono}")?;
            } else {
                write!(f, "({mag})*{mono}")?;
            }
        }
        Ok(())
    }
}

impl Serialize for QPoly {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.coefficient_strings().serialize(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> Q {
        Q::from_integer(n.into())
    }

    #[test]
    fn interpolation_recovers_polynomial() {
        let p = QPoly::interpolate(&[(0, q(1)), (1, q(4)), (2, q(7))]);
        assert_eq!(p, QPoly::from_ints(&[1, 3]));
        assert_eq!(p.to_string(), "3*s + 1");
    }

    #[test]
    fn binomial_polynomial() {
        // binom(s + 2, 2) = (s^2 + 3s + 2) / 2
        let b = QPoly::binomial(2, 2);
        assert_eq!(b.eval_int(3), q(10));
        assert_eq!(b.to_string(), "(1/2)*s^2 + (3/2)*s + 1");
    }
}
