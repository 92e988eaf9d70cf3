use num_bigint::BigInt;

use super::matrix::IntMatrix;

/// Strictly increasing `r`-tuples from `0..n`, in lexicographic order.
pub fn combinations(n: usize, r: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if r > n {
        return out;
    }
    let mut current: Vec<usize> = (0..r).collect();
    loop {
        out.push(current.clone());
        // Rightmost position that can still advance.
        let Some(i) = (0..r).rev().find(|&i| current[i] < n - r + i) else {
            return out;
        };
        current[i] += 1;
        for k in i + 1..r {
            current[k] = current[k - 1] + 1;
        }
    }
}

pub fn binomial(n: usize, r: usize) -> usize {
    if r > n {
        return 0;
    }
    let r = r.min(n - r);
    (0..r).fold(1usize, |acc, i| acc * (n - i) / (i + 1))
}

/// Matrix of `∧^r A` in the bases of increasing index tuples: the entry at
/// `(I, J)` is the minor `det A[I, J]`. `∧^0 A` is the 1×1 identity.
pub fn wedge_power_matrix(a: &IntMatrix, r: usize) -> IntMatrix {
    let rows = combinations(a.nrows(), r);
    let cols = combinations(a.ncols(), r);
    let mut data: Vec<BigInt> = Vec::with_capacity(rows.len() * cols.len());
    for i in &rows {
        for j in &cols {
            data.push(a.submatrix(i, j).determinant());
        }
    }
    IntMatrix::from_vec(rows.len(), cols.len(), data)
}
