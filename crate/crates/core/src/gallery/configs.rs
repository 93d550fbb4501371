//! Constructors for the named configurations.

use crate::error::{Result, ToricError};
use crate::lattice::Configuration;
use crate::sets::lawrence;

fn bad(msg: impl Into<String>) -> ToricError {
    ToricError::BadParams(msg.into())
}

fn unit(d: usize, i: usize) -> Vec<i64> {
    let mut v = vec![0; d];
    v[i] = 1;
    v
}

/// Four equidistant points on a line.
pub fn twisted_cubic() -> Configuration {
    Configuration::from_rows(&[vec![3, 2, 1, 0], vec![0, 1, 2, 3]]).expect("static matrix")
}

/// Exponent vectors of degree `r` in `n` variables, lexicographically
/// decreasing.
pub fn veronese(n: usize, r: usize) -> Result<Configuration> {
    if n == 0 || r == 0 {
        return Err(bad("veronese needs n >= 1 and r >= 1"));
    }
    fn rec(n: usize, r: usize, prefix: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if n == 1 {
            prefix.push(r as i64);
            out.push(prefix.clone());
            prefix.pop();
            return;
        }
        for e in (0..=r).rev() {
            prefix.push(e as i64);
            rec(n - 1, r - e, prefix, out);
            prefix.pop();
        }
    }
    let mut cols = vec![];
    rec(n, r, &mut vec![], &mut cols);
    Configuration::from_columns(&cols, None)
}

/// The cubic scroll in P^4.
pub fn scroll() -> Configuration {
    Configuration::from_rows(&[vec![2, 1, 1, 0, 0], vec![0, 1, 0, 2, 1], vec![0, 0, 1, 0, 1]]).expect("static matrix")
}

/// Vertices `e_i ⊕ e_j` of `Δ_r × Δ_s`, labelled `x{i}{j}`.
pub fn segre(r: usize, s: usize) -> Result<Configuration> {
    if r == 0 || s == 0 {
        return Err(bad("segre needs r >= 1 and s >= 1"));
    }
    let d = r + s + 2;
    let mut cols = vec![];
    let mut labels = vec![];
    for i in 0..=r {
        for j in 0..=s {
            let mut c = unit(d, i);
            c[r + 1 + j] = 1;
            cols.push(c);
            labels.push(format!("x{}{}", i + 1, j + 1));
        }
    }
    Configuration::from_columns(&cols, Some(labels))
}

/// Generic torus orbit in the Grassmannian of lines in P^3.
pub fn octahedron() -> Configuration {
    Configuration::from_rows(&[
        vec![1, 1, 1, 0, 0, 0],
        vec![1, 0, 0, 1, 1, 0],
        vec![0, 1, 0, 1, 0, 1],
        vec![0, 0, 1, 0, 1, 1],
    ])
    .expect("static matrix")
}

fn permutations(p: usize) -> Vec<Vec<usize>> {
    let mut out = vec![];
    let mut cur: Vec<usize> = (0..p).collect();
    loop {
        out.push(cur.clone());
        // next lexicographic permutation
        let Some(i) = (0..p.saturating_sub(1)).rev().find(|&i| cur[i] < cur[i + 1]) else { break };
        let j = (i + 1..p).rev().find(|&j| cur[j] > cur[i]).expect("successor exists");
        cur.swap(i, j);
        cur[i + 1..].reverse();
    }
    out
}

/// The `p × p` permutation matrices, flattened row by row; variables are
/// labelled by one-line notation in lexicographic order.
pub fn birkhoff(p: usize) -> Result<Configuration> {
    if !(2..=6).contains(&p) {
        return Err(bad("birkhoff needs 2 <= p <= 6"));
    }
    let perms = permutations(p);
    let mut cols = vec![];
    let mut labels = vec![];
    for sigma in &perms {
        let mut c = vec![0; p * p];
        for (i, &j) in sigma.iter().enumerate() {
            c[i * p + j] = 1;
        }
        cols.push(c);
        let sep = if p >= 10 { "_" } else { "" };
        labels.push(format!("x{}", sigma.iter().map(|j| (j + 1).to_string()).collect::<Vec<_>>().join(sep)));
    }
    Configuration::from_columns(&cols, Some(labels))
}

/// `e_ij ⊕ e'_ik ⊕ e''_jk` for `i ≤ r, j ≤ s, k ≤ t`.
pub fn triple(r: usize, s: usize, t: usize) -> Result<Configuration> {
    if !(1 <= r && r <= s && s <= t) {
        return Err(bad("triple needs 1 <= r <= s <= t"));
    }
    let d = r * s + r * t + s * t;
    let mut cols = vec![];
    let mut labels = vec![];
    for i in 0..r {
        for j in 0..s {
            for k in 0..t {
                let mut c = unit(d, i * s + j);
                c[r * s + i * t + k] = 1;
                c[r * s + r * t + j * t + k] = 1;
                cols.push(c);
                labels.push(format!("x{}{}{}", i + 1, j + 1, k + 1));
            }
        }
    }
    Configuration::from_columns(&cols, Some(labels))
}

/// All lattice points of the hexagon spanned by the permutations of
/// `(i, j, k)`, in lexicographic order.
pub fn hexagon(i: i64, j: i64, k: i64) -> Result<Configuration> {
    if !(0 < i && i < j && j < k) {
        return Err(bad("hexagon needs 0 < i < j < k"));
    }
    let total = i + j + k;
    let mut cols = vec![];
    for a in i..=k {
        for b in i..=k {
            let c = total - a - b;
            // Permutohedron: singletons >= i, pairs >= i + j.
            if c >= i && a + b >= i + j && a + c >= i + j && b + c >= i + j {
                cols.push(vec![a, b, c]);
            }
        }
    }
    let sep = if k >= 10 { "_" } else { "" };
    let labels = cols.iter().map(|c| format!("x{}", c.iter().map(ToString::to_string).collect::<Vec<_>>().join(sep))).collect();
    Configuration::from_columns(&cols, Some(labels))
}

/// `e_i − e_j` for each directed edge `(i, j)` on vertices `1..=d`.
pub fn graph(d: usize, edges: &[(usize, usize)]) -> Result<Configuration> {
    if edges.is_empty() {
        return Err(bad("graph needs at least one edge"));
    }
    let mut cols = vec![];
    let mut labels = vec![];
    for &(i, j) in edges {
        if i == 0 || j == 0 || i > d || j > d || i == j {
            return Err(bad(format!("bad edge ({i},{j}) on {d} vertices")));
        }
        let mut c = vec![0; d];
        c[i - 1] = 1;
        c[j - 1] = -1;
        cols.push(c);
        labels.push(if d >= 10 { format!("x{i}_{j}") } else { format!("x{i}{j}") });
    }
    Configuration::from_columns(&cols, Some(labels))
}

/// Complete digraph on `m` vertices (the root system of type A_{m-1}).
pub fn complete_digraph(m: usize) -> Result<Configuration> {
    let edges: Vec<(usize, usize)> = (1..=m).flat_map(|i| (1..=m).filter(move |&j| j != i).map(move |j| (i, j))).collect();
    graph(m, &edges)
}

/// Incidence vectors of matroid bases over the ground set `1..=m`.
pub fn matroid(m: usize, bases: &[Vec<usize>]) -> Result<Configuration> {
    if bases.is_empty() {
        return Err(bad("matroid needs at least one basis"));
    }
    let rank = bases[0].len();
    let mut cols = vec![];
    let mut labels = vec![];
    for b in bases {
        if b.len() != rank || b.iter().any(|&e| e == 0 || e > m) {
            return Err(bad(format!("bad basis {b:?}")));
        }
        let mut c = vec![0; m];
        for &e in b {
            c[e - 1] = 1;
        }
        cols.push(c);
        labels.push(format!("x{}", b.iter().map(ToString::to_string).collect::<Vec<_>>().join(if m >= 10 { "_" } else { "" })));
    }
    Configuration::from_columns(&cols, Some(labels))
}

/// Bases of the uniform matroid `U(k, m)`.
pub fn uniform_matroid(k: usize, m: usize) -> Result<Configuration> {
    if k == 0 || k > m {
        return Err(bad("uniform matroid needs 1 <= k <= m"));
    }
    let mut bases = vec![];
    let mut c: Vec<usize> = (1..=k).collect();
    loop {
        bases.push(c.clone());
        let Some(i) = (0..k).rev().find(|&i| c[i] < m - k + i + 1) else { break };
        c[i] += 1;
        for j in i + 1..k {
            c[j] = c[j - 1] + 1;
        }
    }
    matroid(m, &bases)
}

/// Nine cubic monomials in three variables: generated by quadrics but
/// without a quadratic Gröbner basis. Shipped exactly as listed, nine
/// points, although the accompanying text says `n = 8`.
pub fn cubic_nine() -> Configuration {
    Configuration::from_columns(
        &[
            vec![3, 0, 0],
            vec![0, 3, 0],
            vec![0, 0, 3],
            vec![2, 1, 0],
            vec![1, 2, 0],
            vec![2, 0, 1],
            vec![1, 0, 2],
            vec![0, 2, 1],
            vec![0, 1, 2],
        ],
        None,
    )
    .expect("static matrix")
}

/// Cone over a smooth conic: normal but not smooth.
pub fn quadric_cone() -> Configuration {
    Configuration::from_rows(&[vec![2, 1, 0], vec![0, 1, 2]]).expect("static matrix")
}

/// `{(r,0), (r-1,1), (1,r-1), (0,r)}`: a smooth rational curve that is not
/// projectively normal.
pub fn sparse_curve(r: usize) -> Result<Configuration> {
    if r < 4 {
        return Err(bad("sparse_curve needs r >= 4"));
    }
    let r = r as i64;
    Configuration::from_rows(&[vec![r, r - 1, 1, 0], vec![0, 1, r - 1, r]])
}

/// Codimension-two surfaces in P^4 with one quadric and `d` forms of
/// degree `d`.
pub fn codim2_surface(d: usize) -> Result<Configuration> {
    if d < 3 {
        return Err(bad("codim2_surface needs d >= 3"));
    }
    Configuration::from_rows(&[vec![1, 1, 1, 1, 1], vec![0, 1, 1, 0, 0], vec![0, 0, 1, 1, d as i64]])
}

/// The affine surface whose Lawrence lifting separates Graver degree from
/// circuit degree.
pub fn graver_gap_base() -> Configuration {
    Configuration::from_rows(&[vec![1, 3, 4, 6, 0], vec![0, 0, 0, -5, 1]]).expect("static matrix")
}

pub fn graver_gap() -> Configuration {
    lawrence(&graver_gap_base()).expect("lifting a valid configuration")
}
