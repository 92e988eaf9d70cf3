//! Lattice operations: kernels, Hermite bases, saturation, integral solves.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::matrix::{abs_less, pivot_rows, IntMatrix};

/// Row-style Hermite normal form of the lattice spanned by `vectors`.
///
/// Rows come back in echelon form with positive pivots and entries above
/// each pivot reduced into `[0, pivot)`. Zero rows are dropped, so the
/// result is the unique HNF basis of the row lattice.
pub fn hnf_rows(vectors: &[Vec<BigInt>], dim: usize) -> Vec<Vec<BigInt>> {
    let mut rows: Vec<Vec<BigInt>> = vectors.to_vec();
    for r in &rows {
        assert_eq!(r.len(), dim, "vector length mismatch");
    }
    let mut pr = 0;
    for c in 0..dim {
        if pr == rows.len() {
            break;
        }
        loop {
            let mut best: Option<usize> = None;
            for i in pr..rows.len() {
                if rows[i][c].is_zero() {
                    continue;
                }
                if best.is_none_or(|b| abs_less(&rows[i][c], &rows[b][c])) {
                    best = Some(i);
                }
            }
            let Some(b) = best else { break };
            rows.swap(pr, b);
            let mut clean = true;
            for i in pr + 1..rows.len() {
                if rows[i][c].is_zero() {
                    continue;
                }
                let q = &rows[i][c] / &rows[pr][c];
                let pivot_row = rows[pr].clone();
                for (x, y) in rows[i].iter_mut().zip(&pivot_row) {
                    *x -= &q * y;
                }
                clean &= rows[i][c].is_zero();
            }
            if clean {
                break;
            }
        }
        if pr < rows.len() && !rows[pr][c].is_zero() {
            if rows[pr][c].is_negative() {
                for x in rows[pr].iter_mut() {
                    *x = -std::mem::take(x);
                }
            }
            let pivot_row = rows[pr].clone();
            for row in rows.iter_mut().take(pr) {
                let q = row[c].div_floor(&pivot_row[c]);
                if q.is_zero() {
                    continue;
                }
                for (x, y) in row.iter_mut().zip(&pivot_row) {
                    *x -= &q * y;
                }
            }
            pr += 1;
        }
    }
    rows.truncate(pr);
    rows
}

/// Column-echelon reduction `A · Q = [H | 0]` by unimodular column
/// operations. Returns `(Q, number of nonzero columns of H)`.
fn column_echelon(a: &IntMatrix) -> (IntMatrix, IntMatrix, usize) {
    let mut h = a.clone();
    let n = a.ncols();
    let mut q = IntMatrix::identity(n);
    let mut pc = 0;
    for r in 0..a.nrows() {
        if pc == n {
            break;
        }
        loop {
            let mut best: Option<usize> = None;
            for j in pc..n {
                let x = h.get(r, j);
                if !x.is_zero() && best.is_none_or(|b| abs_less(x, h.get(r, b))) {
                    best = Some(j);
                }
            }
            let Some(b) = best else { break };
            h.swap_cols(pc, b);
            q.swap_cols(pc, b);
            let mut clean = true;
            for j in pc + 1..n {
                if h.get(r, j).is_zero() {
                    continue;
                }
                let f = -(h.get(r, j) / h.get(r, pc));
                h.add_col_multiple(j, pc, &f);
                q.add_col_multiple(j, pc, &f);
                clean &= h.get(r, j).is_zero();
            }
            if clean {
                break;
            }
        }
        if !h.get(r, pc).is_zero() {
            if h.get(r, pc).is_negative() {
                h.negate_col(pc);
                q.negate_col(pc);
            }
            pc += 1;
        }
    }
    (h, q, pc)
}

/// ℤ-basis of `{x : A x = 0}` as the columns of the result, in canonical
/// Hermite form. The kernel of an integer matrix is always saturated.
pub fn kernel_basis(a: &IntMatrix) -> IntMatrix {
    let n = a.ncols();
    let (_, q, rank) = column_echelon(a);
    let vectors: Vec<Vec<BigInt>> = (rank..n).map(|j| q.column(j)).collect();
    let canonical = hnf_rows(&vectors, n);
    IntMatrix::from_columns(n, &canonical)
}

/// Canonical basis (columns, Hermite form) of the saturation of the span of
/// `vectors` inside `ℤ^dim`, i.e. of `(ℝ-span) ∩ ℤ^dim`.
pub fn hnf_basis(vectors: &[Vec<BigInt>], dim: usize) -> IntMatrix {
    if vectors.is_empty() {
        return IntMatrix::zeros(dim, 0);
    }
    let a = IntMatrix::from_rows(dim, vectors);
    let annihilator = kernel_basis(&a);
    kernel_basis(&annihilator.transpose())
}

/// Saturation test: the columns of `basis` span a saturated sublattice iff
/// all invariant factors equal 1.
pub fn is_saturated(basis: &IntMatrix) -> bool {
    super::snf::invariant_factors(basis).iter().all(|d| d.is_one())
}

/// Solves `basis · x = v` for an integral `x`, where `basis` has full
/// column rank. Returns `None` if `v` is outside the rational span or the
/// solution is not integral.
pub fn solve_in_basis(basis: &IntMatrix, v: &[BigInt]) -> Option<Vec<BigInt>> {
    assert_eq!(basis.nrows(), v.len(), "vector length mismatch");
    let d = basis.ncols();
    let rows = pivot_rows(basis);
    if rows.len() != d {
        panic!("solve_in_basis requires a basis of full column rank");
    }
    let all_cols: Vec<usize> = (0..d).collect();
    let square = basis.submatrix(&rows, &all_cols);
    let det = square.determinant();
    let mut x = Vec::with_capacity(d);
    for j in 0..d {
        let mut replaced = square.clone();
        for (k, &i) in rows.iter().enumerate() {
            replaced.set(k, j, v[i].clone());
        }
        let num = replaced.determinant();
        let (q, r) = num.div_rem(&det);
        if !r.is_zero() {
            return None;
        }
        x.push(q);
    }
    if basis.mul_vec(&x) != v {
        return None;
    }
    Some(x)
}

/// Integral right inverse `S` of a surjective map `A : ℤ^n → ℤ^d`
/// (`A · S = I_d`). Returns `None` if `A` is not surjective over ℤ.
pub fn right_inverse(a: &IntMatrix) -> Option<IntMatrix> {
    let d = a.nrows();
    let (h, q, rank) = column_echelon(a);
    if rank != d {
        return None;
    }
    // H = A Q restricted to the first d columns is lower triangular with
    // positive diagonal; surjectivity over ℤ forces a unit diagonal.
    for i in 0..d {
        if !h.get(i, i).is_one() {
            return None;
        }
    }
    // Invert the unit lower-triangular block by forward substitution.
    let mut inv = IntMatrix::zeros(d, d);
    for c in 0..d {
        for i in 0..d {
            let mut acc = if i == c { BigInt::one() } else { BigInt::zero() };
            for k in 0..i {
                acc -= h.get(i, k) * inv.get(k, c);
            }
            inv.set(i, c, acc);
        }
    }
    let cols: Vec<usize> = (0..d).collect();
    let s = &q.select_columns(&cols) * &inv;
    debug_assert_eq!(a * &s, IntMatrix::identity(d));
    Some(s)
}
