//! Integer configurations `A = (a_1, ..., a_n)` and the lattice
//! operations every other module builds on.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::lp::{feasible_point, Constraint};
use super::matrix::{clear_denominators, q_int, solve_rational, to_i64_vec, IntMatrix, Q};
use crate::error::{Result, ToricError};

/// A `d × n` integer matrix whose columns are the exponent vectors of the
/// parametrizing monomials.
#[derive(Clone, PartialEq, Eq)]
pub struct Configuration {
    entries: IntMatrix,
    labels: Vec<String>,
    positive_grading: Option<Vec<BigInt>>,
    grading: Option<Vec<Q>>,
}

impl fmt::Debug for Configuration {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Configuration")
            .field("d", &self.d())
            .field("n", &self.n())
            .field("entries", &self.entries)
            .field("labels", &self.labels)
            .finish()
    }
}

pub fn default_labels(n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("x{i}")).collect()
}

impl Configuration {
    pub fn new(entries: IntMatrix, labels: Option<Vec<String>>) -> Result<Self> {
        let (d, n) = (entries.nrows(), entries.ncols());
        if d == 0 || n == 0 {
            return Err(ToricError::BadParams(format!("configuration must be at least 1x1, got {d}x{n}")));
        }
        let labels = labels.unwrap_or_else(|| default_labels(n));
        if labels.len() != n {
            return Err(ToricError::BadParams(format!("{} labels for {n} columns", labels.len())));
        }
        let grading = find_grading(&entries);
        // A grading gives every variable the same degree; prefer it.
        let positive_grading = match &grading {
            Some(w) => Some(clear_denominators(w)),
            None => find_positive_grading(&entries),
        };
        Ok(Configuration { entries, labels, positive_grading, grading })
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Result<Self> {
        let n = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != n) {
            return Err(ToricError::BadParams("ragged matrix rows".into()));
        }
        Self::new(IntMatrix::from_i64(rows, n), None)
    }

    /// Builds a configuration from its columns (each of length `d`).
    pub fn from_columns(cols: &[Vec<i64>], labels: Option<Vec<String>>) -> Result<Self> {
        let d = cols.first().map_or(0, Vec::len);
        if cols.iter().any(|c| c.len() != d) {
            return Err(ToricError::BadParams("columns of unequal length".into()));
        }
        let rows: Vec<Vec<i64>> = (0..d).map(|i| cols.iter().map(|c| c[i]).collect()).collect();
        Self::new(IntMatrix::from_i64(&rows, cols.len()), labels)
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.n() {
            return Err(ToricError::BadParams(format!("{} labels for {} columns", labels.len(), self.n())));
        }
        self.labels = labels;
        Ok(self)
    }

    pub fn d(&self) -> usize {
        self.entries.nrows()
    }

    pub fn n(&self) -> usize {
        self.entries.ncols()
    }

    pub fn entries(&self) -> &IntMatrix {
        &self.entries
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn column(&self, j: usize) -> Vec<BigInt> {
        self.entries.column(j)
    }

    pub fn columns(&self) -> Vec<Vec<BigInt>> {
        self.entries.columns()
    }

    pub fn columns_i64(&self) -> Result<Vec<Vec<i64>>> {
        self.columns().iter().map(|c| to_i64_vec(c)).collect()
    }

    /// `NA ∩ -NA = {0}` witnessed by a functional positive on every column.
    pub fn is_pointed(&self) -> bool {
        self.positive_grading.is_some()
    }

    /// Integer functional `c` with `c · a_i > 0` for every column.
    pub fn positive_grading(&self) -> Option<&[BigInt]> {
        self.positive_grading.as_deref()
    }

    /// Positive integer degrees `c · a_i` of the variables, when pointed.
    pub fn variable_degrees(&self) -> Option<Vec<i64>> {
        let c = self.positive_grading.as_ref()?;
        (0..self.n())
            .map(|j| super::matrix::dot(c, &self.column(j)).to_i64())
            .collect()
    }

    /// Rational `w` with `w · a_i = 1` for all `i`, when one exists.
    pub fn grading(&self) -> Option<&[Q]> {
        self.grading.as_deref()
    }

    pub fn is_graded(&self) -> bool {
        self.grading.is_some()
    }

    pub fn rank(&self) -> usize {
        self.entries.rank()
    }

    pub fn codim(&self) -> usize {
        self.n() - self.rank()
    }

    pub fn pointed_or_err(&self) -> Result<()> {
        if self.is_pointed() {
            Ok(())
        } else {
            Err(ToricError::NotPointed)
        }
    }

    pub fn graded_or_err(&self) -> Result<()> {
        if self.is_graded() {
            Ok(())
        } else {
            Err(ToricError::NotHomogeneous)
        }
    }

    /// The lattice `ZA` spanned by the columns.
    pub fn group_lattice(&self) -> SublatticeDescription {
        SublatticeDescription::from_generators(&self.entries.transpose())
    }

    /// Coordinates of each column in the canonical basis of `ZA`.
    pub fn group_coordinates(&self) -> (SublatticeDescription, Vec<Vec<BigInt>>) {
        let za = self.group_lattice();
        let coords = (0..self.n())
            .map(|j| za.coordinates(&self.column(j)).expect("column lies in ZA"))
            .collect();
        (za, coords)
    }

    /// Sub-configuration on the given columns, labels preserved.
    pub fn restrict(&self, cols: &[usize]) -> Result<Configuration> {
        let entries = self.entries.select_columns(cols);
        let labels = cols.iter().map(|&j| self.labels[j].clone()).collect();
        Configuration::new(entries, Some(labels))
    }

    /// Serializes to the shared matrix file format.
    pub fn to_matrix_text(&self) -> String {
        let mut s = format!("{} {}\n", self.d(), self.n());
        for r in self.entries.rows() {
            let cells: Vec<String> = r.iter().map(|x| x.to_string()).collect();
            s.push_str(&cells.join(" "));
            s.push('\n');
        }
        if self.labels != default_labels(self.n()) {
            s.push_str("labels: ");
            s.push_str(&self.labels.join(" "));
            s.push('\n');
        }
        s
    }

    /// Parses the matrix file format: `d n`, then `d` rows of `n`
    /// integers, then an optional `labels: ...` line.
    pub fn parse_matrix_text(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'));
        let header = lines.next().ok_or_else(|| ToricError::Parse("empty input".into()))?;
        let dims: Vec<usize> = header
            .split_whitespace()
            .map(|t| t.parse().map_err(|_| ToricError::Parse(format!("bad dimension `{t}`"))))
            .collect::<Result<_>>()?;
        let [d, n] = dims[..] else {
            return Err(ToricError::Parse(format!("header must be `d n`, got `{header}`")));
        };
        let mut rows = Vec::with_capacity(d);
        for i in 0..d {
            let line = lines.next().ok_or_else(|| ToricError::Parse(format!("missing row {}", i + 1)))?;
            let row: Vec<BigInt> = line
                .split_whitespace()
                .map(|t| BigInt::from_str(t).map_err(|_| ToricError::Parse(format!("bad integer `{t}`"))))
                .collect::<Result<_>>()?;
            if row.len() != n {
                return Err(ToricError::Parse(format!("row {} has {} entries, expected {n}", i + 1, row.len())));
            }
            rows.push(row);
        }
        let mut labels = None;
        if let Some(line) = lines.next() {
            let rest = line
                .strip_prefix("labels:")
                .ok_or_else(|| ToricError::Parse(format!("unexpected trailing line `{line}`")))?;
            let l: Vec<String> = rest.split_whitespace().map(String::from).collect();
            if l.len() != n {
                return Err(ToricError::Parse(format!("{} labels for {n} columns", l.len())));
            }
            labels = Some(l);
        }
        if let Some(extra) = lines.next() {
            return Err(ToricError::Parse(format!("unexpected trailing line `{extra}`")));
        }
        Configuration::new(IntMatrix::from_rows(rows, n), labels)
    }
}

fn find_positive_grading(entries: &IntMatrix) -> Option<Vec<BigInt>> {
    let d = entries.nrows();
    let ges: Vec<Constraint> = entries
        .columns()
        .iter()
        .map(|c| Constraint::new(c.iter().map(q_int).collect(), Q::one()))
        .collect();
    let w = feasible_point(&[], &ges, d)?;
    Some(clear_denominators(&w))
}

fn find_grading(entries: &IntMatrix) -> Option<Vec<Q>> {
    let d = entries.nrows();
    let rows: Vec<Vec<Q>> = entries.columns().iter().map(|c| c.iter().map(q_int).collect()).collect();
    let ones = vec![Q::one(); rows.len()];
    solve_rational(&rows, &ones, d)
}

/// A sublattice of `Z^m`, stored by its Hermite basis so equal lattices
/// compare equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SublatticeDescription {
    basis: IntMatrix,
    pivots: Vec<usize>,
}

/// Index of one lattice in another.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LatticeIndex {
    Finite(BigInt),
    Infinite,
}

impl SublatticeDescription {
    /// Lattice generated by the rows of `gens`.
    pub fn from_generators(gens: &IntMatrix) -> Self {
        let h = gens.hermite();
        let mut rows = h.hnf.into_rows();
        rows.truncate(h.rank);
        SublatticeDescription { basis: IntMatrix::from_rows(rows, gens.ncols()), pivots: h.pivots }
    }

    pub fn from_vectors(vs: &[Vec<BigInt>], ambient_dim: usize) -> Self {
        Self::from_generators(&IntMatrix::from_rows(vs.to_vec(), ambient_dim))
    }

    pub fn basis(&self) -> &IntMatrix {
        &self.basis
    }

    pub fn rank(&self) -> usize {
        self.basis.nrows()
    }

    pub fn ambient_dim(&self) -> usize {
        self.basis.ncols()
    }

    /// Integer coordinates of `v` in the Hermite basis, if `v` lies in the lattice.
    pub fn coordinates(&self, v: &[BigInt]) -> Option<Vec<BigInt>> {
        let mut residual = v.to_vec();
        let mut coords = Vec::with_capacity(self.rank());
        for (k, &p) in self.pivots.iter().enumerate() {
            let (c, rem) = residual[p].div_rem(self.basis.get(k, p));
            if !rem.is_zero() {
                return None;
            }
            if !c.is_zero() {
                for (x, b) in residual.iter_mut().zip(self.basis.row(k)) {
                    *x -= &c * b;
                }
            }
            coords.push(c);
        }
        residual.iter().all(Zero::is_zero).then_some(coords)
    }

    pub fn contains(&self, v: &[BigInt]) -> bool {
        self.coordinates(v).is_some()
    }

    /// `{x ∈ Z^m : k·x ∈ L for some k ≠ 0}`.
    pub fn saturation(&self) -> SublatticeDescription {
        if self.rank() == 0 {
            return self.clone();
        }
        let perp = self.basis.right_kernel();
        if perp.nrows() == 0 {
            return SublatticeDescription::from_generators(&IntMatrix::identity(self.ambient_dim()));
        }
        SublatticeDescription::from_generators(&perp.right_kernel())
    }
}

/// Saturated basis of `{u ∈ Z^n : A u = 0}`.
pub fn kernel_lattice(a: &Configuration) -> SublatticeDescription {
    let k = a.entries().right_kernel();
    SublatticeDescription::from_generators(&k)
}

/// `[ambient : sub]`, via the Smith form of `sub`'s coordinates in `ambient`.
pub fn lattice_index(sub: &SublatticeDescription, ambient: &SublatticeDescription) -> Result<LatticeIndex> {
    if sub.ambient_dim() != ambient.ambient_dim() {
        return Err(ToricError::DimensionMismatch { left: sub.ambient_dim(), right: ambient.ambient_dim() });
    }
    let coords: Vec<Vec<BigInt>> = sub
        .basis()
        .rows()
        .iter()
        .map(|r| ambient.coordinates(r).ok_or(ToricError::NotASublattice))
        .collect::<Result<_>>()?;
    if sub.rank() < ambient.rank() {
        return Ok(LatticeIndex::Infinite);
    }
    if sub.rank() == 0 {
        return Ok(LatticeIndex::Finite(BigInt::one()));
    }
    let m = IntMatrix::from_rows(coords, ambient.rank());
    let idx = m.smith().invariants.iter().fold(BigInt::one(), |acc, x| acc * x.abs());
    Ok(LatticeIndex::Finite(idx))
}

/// `Some(w)` with `w · a_i = 1` for all columns.
pub fn grading(a: &Configuration) -> Option<Vec<Q>> {
    a.grading().map(<[Q]>::to_vec)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg(rows: &[Vec<i64>]) -> Configuration {
        Configuration::from_rows(rows).unwrap()
    }

    fn big(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn twisted_cubic_kernel() {
        let a = cfg(&[vec![3, 2, 1, 0], vec![0, 1, 2, 3]]);
        let k = kernel_lattice(&a);
        assert_eq!(k.rank(), 2);
        assert!(k.contains(&big(&[1, -2, 1, 0])));
        assert!(k.contains(&big(&[0, 1, -2, 1])));
    }

    #[test]
    fn identity_kernel_is_zero() {
        let a = cfg(&[vec![1, 0], vec![0, 1]]);
        assert_eq!(kernel_lattice(&a).rank(), 0);
    }

    #[test]
    fn index_examples() {
        let z2 = SublatticeDescription::from_vectors(&[big(&[1, 0]), big(&[0, 1])], 2);
        let two = SublatticeDescription::from_vectors(&[big(&[2, 0]), big(&[0, 2])], 2);
        assert_eq!(lattice_index(&z2, &z2).unwrap(), LatticeIndex::Finite(1.into()));
        assert_eq!(lattice_index(&two, &z2).unwrap(), LatticeIndex::Finite(4.into()));
        assert_eq!(lattice_index(&z2, &two), Err(ToricError::NotASublattice));
        let line = SublatticeDescription::from_vectors(&[big(&[1, 0])], 2);
        assert_eq!(lattice_index(&line, &z2).unwrap(), LatticeIndex::Infinite);
    }

    #[test]
    fn grading_examples() {
        let tc = cfg(&[vec![3, 2, 1, 0], vec![0, 1, 2, 3]]);
        let w = grading(&tc).unwrap();
        let third = Q::new(1.into(), 3.into());
        assert_eq!(w, vec![third.clone(), third]);
        assert!(grading(&cfg(&[vec![1, 2], vec![0, 0]])).is_none());
        let ex = cfg(&[vec![1, 1, 1, 1, 1], vec![0, 1, 1, 0, 0], vec![0, 0, 1, 1, 3]]);
        let w = grading(&ex).unwrap();
        assert_eq!(w, vec![Q::one(), Q::zero(), Q::zero()]);
    }

    #[test]
    fn pointedness() {
        assert!(cfg(&[vec![3, 2, 1, 0], vec![0, 1, 2, 3]]).is_pointed());
        assert!(!cfg(&[vec![1, -1]]).is_pointed());
        assert!(!cfg(&[vec![1, 0]]).is_pointed());
        let b = cfg(&[vec![1, 3, 4, 6, 0], vec![0, 0, 0, -5, 1]]);
        assert!(b.is_pointed());
        let degs = b.variable_degrees().unwrap();
        assert!(degs.iter().all(|&x| x > 0));
    }

    #[test]
    fn matrix_text_round_trip_with_labels() {
        let text = "2 3\n1 2 3\n0 -1 4\nlabels: a b c\n";
        let a = Configuration::parse_matrix_text(text).unwrap();
        assert_eq!(a.labels(), &["a", "b", "c"]);
        assert_eq!(a.to_matrix_text(), text);
        assert!(Configuration::parse_matrix_text("2 2\n1 2\n").is_err());
        assert!(Configuration::parse_matrix_text("1 2\n1 2 3\n").is_err());
    }

    #[test]
    fn saturation_and_coordinates() {
        let l = SublatticeDescription::from_vectors(&[big(&[2, 2])], 2);
        let s = l.saturation();
        assert!(s.contains(&big(&[1, 1])));
        assert!(!s.contains(&big(&[1, 0])));
        assert_eq!(lattice_index(&l, &s).unwrap(), LatticeIndex::Finite(2.into()));
    }
}
