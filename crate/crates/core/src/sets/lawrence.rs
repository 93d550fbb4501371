use crate::error::Result;
use crate::lattice::{Configuration, IntMatrix};

/// Lawrence lifting `Λ(A) = [[A, 0], [I, I]]`, columns labelled
/// `x1..xn, y1..yn`.
pub fn lawrence(a: &Configuration) -> Result<Configuration> {
    let (d, n) = (a.d(), a.n());
    let mut rows = Vec::with_capacity(d + n);
    for r in a.entries().rows() {
        let mut row = r.clone();
        row.extend(std::iter::repeat_n(0.into(), n));
        rows.push(row);
    }
    for i in 0..n {
        let mut row = vec![0.into(); 2 * n];
        row[i] = 1.into();
        row[n + i] = 1.into();
        rows.push(row);
    }
    let labels = (1..=n).map(|i| format!("x{i}")).chain((1..=n).map(|i| format!("y{i}"))).collect();
    Configuration::new(IntMatrix::from_rows(rows, 2 * n), Some(labels))
}
