//! Dense arbitrary-precision integer matrices with Hermite and Smith
//! normal forms.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Result, ToricError};

pub type Q = BigRational;

/// Row-major matrix of big integers.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct IntMatrix {
    rows: Vec<Vec<BigInt>>,
    ncols: usize,
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "IntMatrix {}x{} [", self.nrows(), self.ncols)?;
        for r in &self.rows {
            let cells: Vec<String> = r.iter().map(|x| x.to_string()).collect();
            writeln!(f, "  [{}]", cells.join(", "))?;
        }
        write!(f, "]")
    }
}

/// Result of the row-style Hermite reduction `transform * input = hnf`.
#[derive(Clone, Debug)]
pub struct Hermite {
    pub hnf: IntMatrix,
    pub transform: IntMatrix,
    pub rank: usize,
    pub pivots: Vec<usize>,
}

/// Smith decomposition `left * input * right = diag(invariants)`.
#[derive(Clone, Debug)]
pub struct Smith {
    pub invariants: Vec<BigInt>,
    pub left: IntMatrix,
    pub right: IntMatrix,
}

impl IntMatrix {
    pub fn zeros(nrows: usize, ncols: usize) -> Self {
        IntMatrix { rows: vec![vec![BigInt::zero(); ncols]; nrows], ncols }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.rows[i][i] = BigInt::one();
        }
        m
    }

    /// Builds a matrix from rows; all rows must share one length.
    pub fn from_rows(rows: Vec<Vec<BigInt>>, ncols: usize) -> Self {
        assert!(rows.iter().all(|r| r.len() == ncols), "ragged matrix rows");
        IntMatrix { rows, ncols }
    }

    pub fn from_i64<R: AsRef<[i64]>>(rows: &[R], ncols: usize) -> Self {
        let rows = rows
            .iter()
            .map(|r| r.as_ref().iter().map(|&x| BigInt::from(x)).collect())
            .collect();
        Self::from_rows(rows, ncols)
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.rows[i][j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigInt) {
        self.rows[i][j] = v;
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.rows[i]
    }

    pub fn rows(&self) -> &[Vec<BigInt>] {
        &self.rows
    }

    pub fn into_rows(self) -> Vec<Vec<BigInt>> {
        self.rows
    }

    pub fn column(&self, j: usize) -> Vec<BigInt> {
        self.rows.iter().map(|r| r[j].clone()).collect()
    }

    pub fn columns(&self) -> Vec<Vec<BigInt>> {
        (0..self.ncols).map(|j| self.column(j)).collect()
    }

    pub fn push_row(&mut self, row: Vec<BigInt>) {
        assert_eq!(row.len(), self.ncols);
        self.rows.push(row);
    }

    pub fn transpose(&self) -> Self {
        let rows = (0..self.ncols).map(|j| self.column(j)).collect();
        IntMatrix { rows, ncols: self.nrows() }
    }

    pub fn select_rows(&self, idx: &[usize]) -> Self {
        IntMatrix { rows: idx.iter().map(|&i| self.rows[i].clone()).collect(), ncols: self.ncols }
    }

    pub fn select_columns(&self, idx: &[usize]) -> Self {
        let rows = self
            .rows
            .iter()
            .map(|r| idx.iter().map(|&j| r[j].clone()).collect())
            .collect();
        IntMatrix { rows, ncols: idx.len() }
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.ncols, other.nrows());
        let mut out = IntMatrix::zeros(self.nrows(), other.ncols);
        for i in 0..self.nrows() {
            for k in 0..self.ncols {
                let a = &self.rows[i][k];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.ncols {
                    let b = &other.rows[k][j];
                    if !b.is_zero() {
                        out.rows[i][j] += a * b;
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(v.len(), self.ncols);
        self.rows.iter().map(|r| dot(r, v)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().all(|r| r.iter().all(Zero::is_zero))
    }

    /// Converts to machine integers, failing on overflow.
    pub fn to_i64_rows(&self) -> Result<Vec<Vec<i64>>> {
        self.rows.iter().map(|r| to_i64_vec(r)).collect()
    }

    /// Row-style Hermite normal form: echelon, positive pivots, entries
    /// above each pivot reduced into `[0, pivot)`.
    pub fn hermite(&self) -> Hermite {
        let m = self.nrows();
        let n = self.ncols;
        let mut h = self.rows.clone();
        let mut u = IntMatrix::identity(m).rows;
        let mut r = 0;
        let mut pivots = Vec::new();
        for c in 0..n {
            if r == m {
                break;
            }
            loop {
                let p = (r..m)
                    .filter(|&i| !h[i][c].is_zero())
                    .min_by(|&a, &b| h[a][c].abs().cmp(&h[b][c].abs()));
                let Some(p) = p else { break };
                h.swap(r, p);
                u.swap(r, p);
                let mut clean = true;
                for i in r + 1..m {
                    if h[i][c].is_zero() {
                        continue;
                    }
                    let q = h[i][c].div_floor(&h[r][c]);
                    sub_row_multiple(&mut h, i, r, &q);
                    sub_row_multiple(&mut u, i, r, &q);
                    if !h[i][c].is_zero() {
                        clean = false;
                    }
                }
                if clean {
                    break;
                }
            }
            if h[r][c].is_zero() {
                continue;
            }
            if h[r][c].is_negative() {
                negate_row(&mut h[r]);
                negate_row(&mut u[r]);
            }
            for i in 0..r {
                let q = h[i][c].div_floor(&h[r][c]);
                if !q.is_zero() {
                    sub_row_multiple(&mut h, i, r, &q);
                    sub_row_multiple(&mut u, i, r, &q);
                }
            }
            pivots.push(c);
            r += 1;
        }
        Hermite {
            hnf: IntMatrix { rows: h, ncols: n },
            transform: IntMatrix { rows: u, ncols: m },
            rank: r,
            pivots,
        }
    }

    /// Nonzero rows of the Hermite form: a canonical basis of the row lattice.
    pub fn row_lattice_basis(&self) -> IntMatrix {
        let herm = self.hermite();
        let mut rows = herm.hnf.rows;
        rows.truncate(herm.rank);
        IntMatrix { rows, ncols: self.ncols }
    }

    /// Saturated basis (Hermite canonical) of `{u : self * u = 0}`.
    pub fn right_kernel(&self) -> IntMatrix {
        let t = self.transpose();
        let herm = t.hermite();
        let rows: Vec<Vec<BigInt>> = herm.transform.rows[herm.rank..].to_vec();
        let k = IntMatrix { rows, ncols: self.ncols };
        k.row_lattice_basis()
    }

    pub fn rank(&self) -> usize {
        bareiss_rank(self.rows.clone(), self.ncols)
    }

    pub fn determinant(&self) -> BigInt {
        assert_eq!(self.nrows(), self.ncols, "determinant of non-square matrix");
        bareiss_det(self.rows.clone())
    }

    /// Smith normal form with transforms.  `invariants` has
    /// `min(nrows, ncols)` entries, zeros trailing.
    pub fn smith(&self) -> Smith {
        let m = self.nrows();
        let n = self.ncols;
        let mut a = self.rows.clone();
        let mut left = IntMatrix::identity(m).rows;
        // right transform kept as rows of its transpose so column ops are row ops
        let mut right_t = IntMatrix::identity(n).rows;
        let k = m.min(n);
        for t in 0..k {
            loop {
                let mut best: Option<(usize, usize)> = None;
                for i in t..m {
                    for j in t..n {
                        if a[i][j].is_zero() {
                            continue;
                        }
                        match best {
                            Some((bi, bj)) if a[bi][bj].abs() <= a[i][j].abs() => {}
                            _ => best = Some((i, j)),
                        }
                    }
                }
                let Some((pi, pj)) = best else { break };
                a.swap(t, pi);
                left.swap(t, pi);
                if pj != t {
                    for row in a.iter_mut() {
                        row.swap(t, pj);
                    }
                    right_t.swap(t, pj);
                }
                let mut dirty = false;
                for i in t + 1..m {
                    if a[i][t].is_zero() {
                        continue;
                    }
                    let q = &a[i][t] / &a[t][t];
                    sub_row_multiple(&mut a, i, t, &q);
                    sub_row_multiple(&mut left, i, t, &q);
                    if !a[i][t].is_zero() {
                        dirty = true;
                    }
                }
                for j in t + 1..n {
                    if a[t][j].is_zero() {
                        continue;
                    }
                    let q = &a[t][j] / &a[t][t];
                    for row in a.iter_mut() {
                        let d = &q * &row[t];
                        row[j] -= d;
                    }
                    sub_row_multiple(&mut right_t, j, t, &q);
                    if !a[t][j].is_zero() {
                        dirty = true;
                    }
                }
                if dirty {
                    continue;
                }
                // divisibility: pivot must divide the remaining block
                let mut bad_row = None;
                'outer: for i in t + 1..m {
                    for j in t + 1..n {
                        if !(&a[i][j] % &a[t][t]).is_zero() {
                            bad_row = Some(i);
                            break 'outer;
                        }
                    }
                }
                match bad_row {
                    Some(i) => {
                        add_row(&mut a, t, i);
                        add_row(&mut left, t, i);
                    }
                    None => break,
                }
            }
            if a[t][t].is_negative() {
                negate_row(&mut a[t]);
                negate_row(&mut left[t]);
            }
        }
        let invariants = (0..k).map(|t| a[t][t].clone()).collect();
        Smith {
            invariants,
            left: IntMatrix { rows: left, ncols: m },
            right: IntMatrix { rows: right_t, ncols: n }.transpose(),
        }
    }
}

fn sub_row_multiple(rows: &mut [Vec<BigInt>], target: usize, src: usize, q: &BigInt) {
    if q.is_zero() {
        return;
    }
    let (t, s) = if target < src {
        let (lo, hi) = rows.split_at_mut(src);
        (&mut lo[target], &hi[0])
    } else {
        let (lo, hi) = rows.split_at_mut(target);
        (&mut hi[0], &lo[src])
    };
    for (x, y) in t.iter_mut().zip(s.iter()) {
        if !y.is_zero() {
            *x -= q * y;
        }
    }
}

fn add_row(rows: &mut [Vec<BigInt>], target: usize, src: usize) {
    sub_row_multiple(rows, target, src, &BigInt::from(-1));
}

fn negate_row(row: &mut [BigInt]) {
    for x in row.iter_mut() {
        *x = -std::mem::take(x);
    }
}

fn bareiss_rank(mut a: Vec<Vec<BigInt>>, ncols: usize) -> usize {
    let m = a.len();
    let mut rank = 0;
    let mut prev = BigInt::one();
    for c in 0..ncols {
        if rank == m {
            break;
        }
        let Some(p) = (rank..m).find(|&i| !a[i][c].is_zero()) else { continue };
        a.swap(rank, p);
        for i in rank + 1..m {
            for j in c + 1..ncols {
                let v = (&a[rank][c] * &a[i][j] - &a[i][c] * &a[rank][j]) / &prev;
                a[i][j] = v;
            }
            a[i][c] = BigInt::zero();
        }
        prev = a[rank][c].clone();
        rank += 1;
    }
    rank
}

fn bareiss_det(mut a: Vec<Vec<BigInt>>) -> BigInt {
    let n = a.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n {
        if a[k][k].is_zero() {
            let Some(p) = (k + 1..n).find(|&i| !a[i][k].is_zero()) else {
                return BigInt::zero();
            };
            a.swap(k, p);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (&a[k][k] * &a[i][j] - &a[i][k] * &a[k][j]) / &prev;
                a[i][j] = v;
            }
        }
        prev = a[k][k].clone();
    }
    sign * &a[n - 1][n - 1]
}

pub fn dot(a: &[BigInt], b: &[BigInt]) -> BigInt {
    a.iter().zip(b).fold(BigInt::zero(), |acc, (x, y)| acc + x * y)
}

pub fn gcd_all<'a, I: IntoIterator<Item = &'a BigInt>>(xs: I) -> BigInt {
    xs.into_iter().fold(BigInt::zero(), |g, x| g.gcd(x))
}

/// Divides by the gcd of the entries; the zero vector is returned unchanged.
pub fn primitive(v: &[BigInt]) -> Vec<BigInt> {
    let g = gcd_all(v);
    if g.is_zero() || g.is_one() {
        return v.to_vec();
    }
    v.iter().map(|x| x / &g).collect()
}

pub fn to_i64_vec(v: &[BigInt]) -> Result<Vec<i64>> {
    v.iter()
        .map(|x| x.to_i64().ok_or_else(|| ToricError::Overflow(format!("{x} does not fit in i64"))))
        .collect()
}

pub fn from_i64_vec(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

pub fn q_int(x: &BigInt) -> Q {
    Q::from_integer(x.clone())
}

/// Any rational solution of `rows * x = rhs`, if one exists.
pub fn solve_rational(rows: &[Vec<Q>], rhs: &[Q], nvars: usize) -> Option<Vec<Q>> {
    let m = rows.len();
    let mut a: Vec<Vec<Q>> = rows
        .iter()
        .zip(rhs)
        .map(|(r, b)| {
            let mut r = r.clone();
            r.push(b.clone());
            r
        })
        .collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..nvars {
        if r == m {
            break;
        }
        let Some(p) = (r..m).find(|&i| !a[i][c].is_zero()) else { continue };
        a.swap(r, p);
        let inv = a[r][c].recip();
        for x in a[r].iter_mut() {
            *x = &*x * &inv;
        }
        for i in 0..m {
            if i != r && !a[i][c].is_zero() {
                let f = a[i][c].clone();
                for j in c..=nvars {
                    let d = &f * &a[r][j];
                    a[i][j] -= d;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    if a[r..].iter().any(|row| !row[nvars].is_zero()) {
        return None;
    }
    let mut x = vec![Q::zero(); nvars];
    for (i, &c) in pivots.iter().enumerate() {
        x[c] = a[i][nvars].clone();
    }
    Some(x)
}

/// Clears denominators of a rational vector, returning a primitive
/// integer vector with the same direction.
pub fn clear_denominators(v: &[Q]) -> Vec<BigInt> {
    let l = v.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let ints: Vec<BigInt> = v.iter().map(|x| x.numer() * (&l / x.denom())).collect();
    primitive(&ints)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> IntMatrix {
        let n = rows.first().map_or(0, |r| r.len());
        IntMatrix::from_i64(rows, n)
    }

    #[test]
    fn hermite_is_canonical_for_same_lattice() {
        let a = m(&[&[2, 4, 4], &[-6, 6, 12], &[10, -4, -16]]);
        let b = m(&[&[-4, 10, 16], &[-6, 6, 12], &[14, 4, -8]]);
        assert_eq!(a.row_lattice_basis(), b.row_lattice_basis());
    }

    #[test]
    fn hermite_transform_is_consistent() {
        let a = m(&[&[3, 2, 1, 0], &[0, 1, 2, 3], &[1, 1, 1, 1]]);
        let h = a.hermite();
        assert_eq!(h.transform.mul(&a), h.hnf);
        assert_eq!(h.transform.determinant().abs(), BigInt::one());
        assert_eq!(h.rank, 2);
    }

    #[test]
    fn smith_of_small_matrix() {
        let a = m(&[&[2, 4, 4], &[-6, 6, 12], &[10, -4, -16]]);
        let s = a.smith();
        let inv: Vec<i64> = s.invariants.iter().map(|x| x.to_i64().unwrap()).collect();
        assert_eq!(inv, vec![2, 6, 12]);
        let d = s.left.mul(&a).mul(&s.right);
        for i in 0..3 {
            for j in 0..3 {
                let want = if i == j { s.invariants[i].clone() } else { BigInt::zero() };
                assert_eq!(d.get(i, j), &want);
            }
        }
    }

    #[test]
    fn kernel_of_twisted_cubic() {
        let a = m(&[&[3, 2, 1, 0], &[0, 1, 2, 3]]);
        let k = a.right_kernel();
        assert_eq!(k.nrows(), 2);
        for r in k.rows() {
            assert!(a.mul_vec(r).iter().all(Zero::is_zero));
        }
    }

    #[test]
    fn determinant_and_rank() {
        let a = m(&[&[1, 2], &[3, 4]]);
        assert_eq!(a.determinant(), BigInt::from(-2));
        assert_eq!(m(&[&[1, 2, 3], &[2, 4, 6]]).rank(), 1);
        assert_eq!(IntMatrix::zeros(0, 0).determinant(), BigInt::one());
    }

    #[test]
    fn rational_solve_detects_inconsistency() {
        let q = |x: i64| Q::from_integer(x.into());
        let rows = vec![vec![q(1), q(0)], vec![q(2), q(0)]];
        assert!(solve_rational(&rows, &[q(1), q(1)], 2).is_none());
        let x = solve_rational(&rows, &[q(1), q(2)], 2).unwrap();
        assert_eq!(x[0], q(1));
    }
}
