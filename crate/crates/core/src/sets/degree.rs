//! True degrees of circuits and the ledger of degree bounds relating
//! circuits, universal Gröbner bases, Graver bases and the degree of `Y_A`.

use num_bigint::BigInt;
use serde::Serialize;

use super::circuits::{circuit_info, circuits, maxdeg};
use super::graver::graver;
use super::ugb::{universal_groebner_basis, UgbMode};
use crate::error::{Result, ToricError};
use crate::lattice::{Configuration, LatticeBinomial};
use crate::polyhedral::normalized_volume;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Check {
    Pass,
    Fail,
    ConjectureViolated,
}

impl Check {
    fn of(ok: bool) -> Self {
        if ok {
            Check::Pass
        } else {
            Check::Fail
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct BoundChecks {
    /// `maxdeg(C) ≤ degree`.
    pub eq44: Check,
    /// `maxdeg(Gr) ≤ codim · maxdeg(C)`.
    pub eq45: Check,
    /// `maxdeg(Gr) ≤ degree · codim`.
    pub lemma46: Check,
    /// `maxdeg(Gr) ≤` largest true degree of a circuit.
    pub conj48: Check,
    /// Every circuit's true degree is at most `degree`.
    pub true_degree_bound: Check,
}

#[derive(Clone, Debug, Serialize)]
pub struct DegreeBoundReport {
    pub maxdeg_circuits: u64,
    /// `None` when the exhaustive walk exceeded its caps.
    pub maxdeg_ugb: Option<u64>,
    pub maxdeg_graver: u64,
    #[serde(serialize_with = "crate::serde_util::big")]
    pub degree: BigInt,
    pub codim: usize,
    #[serde(serialize_with = "crate::serde_util::big")]
    pub max_true_degree: BigInt,
    /// Whether `maxdeg(Gr) > maxdeg(C)` strictly.
    pub graver_exceeds_circuits: bool,
    pub checks: BoundChecks,
}

/// `(degree, index, true degree)` of a circuit.
pub fn true_degree(c: &LatticeBinomial, a: &Configuration) -> Result<(u64, BigInt, BigInt)> {
    let info = circuit_info(c, a)?;
    Ok((info.degree, info.index, info.true_degree))
}

/// Computes every quantity in the ledger; requires a grading.
pub fn degree_bound_report(a: &Configuration, mode: UgbMode) -> Result<DegreeBoundReport> {
    a.graded_or_err()?;
    let circ = circuits(a)?;
    let gr = graver(a)?;
    let maxdeg_ugb = match universal_groebner_basis(a, mode) {
        Ok(u) if u.complete => Some(u.maxdeg),
        Ok(_) | Err(ToricError::CapExceeded { .. }) => None,
        Err(e) => return Err(e),
    };
    let degree = normalized_volume(a)?;
    let codim = a.codim();
    let mut max_true = BigInt::from(0);
    for c in &circ {
        let t = circuit_info(c, a)?.true_degree;
        if t > max_true {
            max_true = t;
        }
    }
    let (mc, mg) = (maxdeg(&circ), maxdeg(&gr));
    let big = |x: u64| BigInt::from(x);
    let checks = BoundChecks {
        eq44: Check::of(big(mc) <= degree),
        eq45: Check::of(mg <= codim as u64 * mc),
        lemma46: Check::of(big(mg) <= &degree * codim),
        conj48: if big(mg) <= max_true { Check::Pass } else { Check::ConjectureViolated },
        true_degree_bound: Check::of(max_true <= degree),
    };
    Ok(DegreeBoundReport {
        maxdeg_circuits: mc,
        maxdeg_ugb,
        maxdeg_graver: mg,
        degree,
        codim,
        max_true_degree: max_true,
        graver_exceeds_circuits: mg > mc,
        checks,
    })
}
