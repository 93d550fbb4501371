use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

/// Which family a term order was built from; informational only.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum OrderFlavor {
    PureLex,
    GradedReverseLex,
    WeightThenLex,
    WeightThenRevLex,
    EliminationBlock,
}

/// Final comparison once every weight row ties.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum TieBreak {
    /// Lexicographic with `perm[0]` the most significant variable.
    Lex(Vec<usize>),
    /// Reverse lexicographic with `perm[last]` the cheapest variable.
    RevLex(Vec<usize>),
}

/// A monomial order given by weight rows compared in sequence, then a
/// lexicographic or reverse-lexicographic tie-break.
///
/// Orders whose first row is not positive are only well-orders on ideals
/// that are homogeneous for a positive grading; every caller in this crate
/// respects that.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TermOrder {
    rows: Vec<Vec<i64>>,
    tie_break: TieBreak,
    flavor: OrderFlavor,
}

fn identity(n: usize) -> Vec<usize> {
    (0..n).collect()
}

impl TermOrder {
    pub fn lex(n: usize) -> Self {
        Self::lex_perm(identity(n))
    }

    pub fn lex_perm(perm: Vec<usize>) -> Self {
        TermOrder { rows: vec![], tie_break: TieBreak::Lex(perm), flavor: OrderFlavor::PureLex }
    }

    pub fn grevlex(n: usize) -> Self {
        Self::grevlex_perm(identity(n))
    }

    pub fn grevlex_perm(perm: Vec<usize>) -> Self {
        TermOrder { rows: vec![vec![1; perm.len()]], tie_break: TieBreak::RevLex(perm), flavor: OrderFlavor::GradedReverseLex }
    }

    /// Weight vector refined lexicographically by `perm`.
    pub fn weight_lex(weight: Vec<i64>, perm: Vec<usize>) -> Self {
        TermOrder { rows: vec![weight], tie_break: TieBreak::Lex(perm), flavor: OrderFlavor::WeightThenLex }
    }

    /// Weight vector refined by reverse lex over `perm`.
    pub fn weight_revlex(weight: Vec<i64>, perm: Vec<usize>) -> Self {
        TermOrder { rows: vec![weight], tie_break: TieBreak::RevLex(perm), flavor: OrderFlavor::WeightThenRevLex }
    }

    /// Every monomial containing a variable of `block` is larger than any
    /// monomial free of them; ties by degree then reverse lex.
    pub fn elimination(block: &[bool]) -> Self {
        let n = block.len();
        let ind = block.iter().map(|&b| i64::from(b)).collect();
        TermOrder { rows: vec![ind, vec![1; n]], tie_break: TieBreak::RevLex(identity(n)), flavor: OrderFlavor::EliminationBlock }
    }

    /// General matrix order.
    pub fn from_rows(rows: Vec<Vec<i64>>, tie_break: TieBreak, flavor: OrderFlavor) -> Self {
        TermOrder { rows, tie_break, flavor }
    }

    /// Same order with `row` compared first.
    pub fn with_leading_row(&self, row: Vec<i64>) -> Self {
        let mut rows = vec![row];
        rows.extend(self.rows.iter().cloned());
        TermOrder { rows, tie_break: self.tie_break.clone(), flavor: self.flavor }
    }

    pub fn nvars(&self) -> usize {
        match &self.tie_break {
            TieBreak::Lex(p) | TieBreak::RevLex(p) => p.len(),
        }
    }

    pub fn flavor(&self) -> OrderFlavor {
        self.flavor
    }

    pub fn rows(&self) -> &[Vec<i64>] {
        &self.rows
    }

    pub fn tie_break(&self) -> &TieBreak {
        &self.tie_break
    }

    /// Primary weight vector (zero for pure lex).
    pub fn weight(&self) -> Vec<i64> {
        self.rows.first().cloned().unwrap_or_else(|| vec![0; self.nvars()])
    }

    pub fn cmp(&self, a: &[u32], b: &[u32]) -> Ordering {
        for row in &self.rows {
            let s: i128 = row
                .iter()
                .zip(a.iter().zip(b))
                .map(|(&w, (&x, &y))| w as i128 * (x as i128 - y as i128))
                .sum();
            match s.cmp(&0) {
                Ordering::Equal => {}
                o => return o,
            }
        }
        match &self.tie_break {
            TieBreak::Lex(perm) => {
                for &i in perm {
                    match a[i].cmp(&b[i]) {
                        Ordering::Equal => {}
                        o => return o,
                    }
                }
                Ordering::Equal
            }
            TieBreak::RevLex(perm) => {
                for &i in perm.iter().rev() {
                    match a[i].cmp(&b[i]) {
                        Ordering::Equal => {}
                        o => return o.reverse(),
                    }
                }
                Ordering::Equal
            }
        }
    }

    pub fn greater(&self, a: &[u32], b: &[u32]) -> bool {
        self.cmp(a, b) == Ordering::Greater
    }
}

impl fmt::Display for TermOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self.flavor {
            OrderFlavor::PureLex => "lex",
            OrderFlavor::GradedReverseLex => "grevlex",
            OrderFlavor::WeightThenLex => "weight-lex",
            OrderFlavor::WeightThenRevLex => "weight-revlex",
            OrderFlavor::EliminationBlock => "elimination",
        };
        write!(f, "{name}")?;
        if matches!(self.flavor, OrderFlavor::WeightThenLex | OrderFlavor::WeightThenRevLex) {
            write!(f, " {:?}", self.weight())?;
        }
        let perm = match &self.tie_break {
            TieBreak::Lex(p) | TieBreak::RevLex(p) => p,
        };
        if perm.iter().enumerate().any(|(i, &p)| i != p) {
            let one_based: Vec<usize> = perm.iter().map(|p| p + 1).collect();
            write!(f, " tiebreak {one_based:?}")?;
        }
        Ok(())
    }
}
