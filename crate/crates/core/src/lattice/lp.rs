//! Exact rational feasibility LP (phase-one simplex, Bland's rule).

use num_traits::{Signed, Zero};

use super::matrix::Q;

/// A linear constraint `coeffs · x (= | >=) rhs` over free variables.
#[derive(Clone, Debug)]
pub struct Constraint {
    pub coeffs: Vec<Q>,
    pub rhs: Q,
}

impl Constraint {
    pub fn new(coeffs: Vec<Q>, rhs: Q) -> Self {
        Constraint { coeffs, rhs }
    }
}

/// Finds some `x` with `eq_i · x = rhs_i` and `ge_j · x >= rhs_j`, or
/// `None` when the system is infeasible.  All variables are free.
pub fn feasible_point(eqs: &[Constraint], ges: &[Constraint], nvars: usize) -> Option<Vec<Q>> {
    let m = eqs.len() + ges.len();
    if m == 0 {
        return Some(vec![Q::zero(); nvars]);
    }
    let nslack = ges.len();
    // columns: x+ (nvars), x- (nvars), slacks, artificials (m)
    let ncols = 2 * nvars + nslack + m;
    let mut t: Vec<Vec<Q>> = Vec::with_capacity(m + 1);
    for (k, c) in eqs.iter().chain(ges.iter()).enumerate() {
        let mut row = vec![Q::zero(); ncols + 1];
        for (j, a) in c.coeffs.iter().enumerate() {
            row[j] = a.clone();
            row[nvars + j] = -a.clone();
        }
        if k >= eqs.len() {
            row[2 * nvars + (k - eqs.len())] = Q::from_integer((-1).into());
        }
        row[ncols] = c.rhs.clone();
        if row[ncols].is_negative() {
            for x in row.iter_mut() {
                *x = -std::mem::take(x);
            }
        }
        row[2 * nvars + nslack + k] = Q::from_integer(1.into());
        t.push(row);
    }
    // objective: minimize sum of artificials, stored as reduced costs
    let mut obj = vec![Q::zero(); ncols + 1];
    for row in &t {
        for j in 0..2 * nvars + nslack {
            obj[j] -= &row[j];
        }
        obj[ncols] -= &row[ncols];
    }
    t.push(obj);
    let mut basis: Vec<usize> = (0..m).map(|k| 2 * nvars + nslack + k).collect();

    loop {
        let Some(enter) = (0..ncols).find(|&j| t[m][j].is_negative()) else { break };
        let mut leave: Option<(usize, Q)> = None;
        for i in 0..m {
            if t[i][enter].is_positive() {
                let ratio = &t[i][ncols] / &t[i][enter];
                match &leave {
                    Some((li, lr)) if ratio > *lr || (ratio == *lr && basis[i] > basis[*li]) => {}
                    _ => leave = Some((i, ratio)),
                }
            }
        }
        let Some((pr, _)) = leave else {
            // unbounded direction cannot occur for the phase-one objective
            break;
        };
        pivot(&mut t, pr, enter);
        basis[pr] = enter;
    }
    if !t[m][ncols].is_zero() {
        return None;
    }
    let mut x = vec![Q::zero(); nvars];
    for (i, &b) in basis.iter().enumerate() {
        if b < nvars {
            x[b] += &t[i][ncols];
        } else if b < 2 * nvars {
            x[b - nvars] -= &t[i][ncols];
        }
    }
    Some(x)
}

fn pivot(t: &mut [Vec<Q>], pr: usize, pc: usize) {
    let inv = t[pr][pc].recip();
    for x in t[pr].iter_mut() {
        if !x.is_zero() {
            *x = &*x * &inv;
        }
    }
    let prow = t[pr].clone();
    for (i, row) in t.iter_mut().enumerate() {
        if i == pr || row[pc].is_zero() {
            continue;
        }
        let f = row[pc].clone();
        for (x, p) in row.iter_mut().zip(prow.iter()) {
            if !p.is_zero() {
                *x -= &f * p;
            }
        }
    }
}
