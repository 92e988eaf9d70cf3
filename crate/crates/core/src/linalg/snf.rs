//! Smith normal form over ℤ.
//!
//! Pivoting always picks the entry of smallest absolute value (first in
//! row-major scan order on ties), so `U` and `V` are reproducible.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::matrix::{abs_less, IntMatrix};

/// `A = U · D · V` with `U`, `V` unimodular and `D` diagonal, nonnegative,
/// `d_i | d_{i+1}`.
#[derive(Clone, Debug)]
pub struct SmithForm {
    pub u: IntMatrix,
    pub d: IntMatrix,
    pub v: IntMatrix,
}

impl SmithForm {
    /// Diagonal entries of `D`, including trailing zeros up to `min(rows, cols)`.
    pub fn diagonal(&self) -> Vec<BigInt> {
        let k = self.d.nrows().min(self.d.ncols());
        (0..k).map(|i| self.d.get(i, i).clone()).collect()
    }
}

pub fn smith_normal_form(a: &IntMatrix) -> SmithForm {
    let mut d = a.clone();
    let mut u = IntMatrix::identity(a.nrows());
    let mut v = IntMatrix::identity(a.ncols());
    diagonalize(&mut d, Some((&mut u, &mut v)));
    SmithForm { u, d, v }
}

/// Nonzero invariant factors of `a`, in divisibility order. Skips the
/// bookkeeping of the transforms.
pub fn invariant_factors(a: &IntMatrix) -> Vec<BigInt> {
    let mut d = a.clone();
    let k = diagonalize(&mut d, None);
    (0..k).map(|i| d.get(i, i).clone()).collect()
}

/// Reduces `d` in place to Smith form. When `track` is given, maintains
/// `A_original = U · d · V`. Returns the number of nonzero diagonal entries.
fn diagonalize(d: &mut IntMatrix, mut track: Track<'_>) -> usize {
    let (m, n) = (d.nrows(), d.ncols());
    let mut t = 0;
    while t < m.min(n) {
        let Some((pi, pj)) = smallest_entry(d, t) else {
            break;
        };
        swap_rows(d, &mut track, t, pi);
        swap_cols(d, &mut track, t, pj);

        loop {
            let mut dirty = false;
            for i in t + 1..m {
                if d.get(i, t).is_zero() {
                    continue;
                }
                let q = d.get(i, t) / d.get(t, t);
                add_row(d, &mut track, i, t, &-q);
                dirty |= !d.get(i, t).is_zero();
            }
            for j in t + 1..n {
                if d.get(t, j).is_zero() {
                    continue;
                }
                let q = d.get(t, j) / d.get(t, t);
                add_col(d, &mut track, j, t, &-q);
                dirty |= !d.get(t, j).is_zero();
            }
            if dirty {
                // A remainder smaller than the pivot survived; move it into place.
                let mut best = (t, t);
                for i in t + 1..m {
                    if !d.get(i, t).is_zero() && abs_less(d.get(i, t), d.get(best.0, best.1)) {
                        best = (i, t);
                    }
                }
                for j in t + 1..n {
                    if !d.get(t, j).is_zero() && abs_less(d.get(t, j), d.get(best.0, best.1)) {
                        best = (t, j);
                    }
                }
                swap_rows(d, &mut track, t, best.0);
                swap_cols(d, &mut track, t, best.1);
                continue;
            }

            // Row and column are clear; enforce divisibility of the rest.
            let pivot = d.get(t, t).clone();
            let offender = (t + 1..m).find(|&i| (t + 1..n).any(|j| !(d.get(i, j) % &pivot).is_zero()));
            match offender {
                Some(i) => add_row(d, &mut track, t, i, &BigInt::from(1)),
                None => break,
            }
        }

        if d.get(t, t).is_negative() {
            d.negate_row(t);
            if let Some((u, _)) = track.as_mut() {
                u.negate_col(t);
            }
        }
        t += 1;
    }
    t
}

fn smallest_entry(d: &IntMatrix, t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for i in t..d.nrows() {
        for j in t..d.ncols() {
            let x = d.get(i, j);
            if x.is_zero() {
                continue;
            }
            match best {
                Some((bi, bj)) if !abs_less(x, d.get(bi, bj)) => {}
                _ => best = Some((i, j)),
            }
        }
    }
    best
}

// Each elementary operation on `d` is mirrored on the transforms so that
// A = U d V stays true: a row operation E on d right-multiplies U by E⁻¹,
// a column operation F on d left-multiplies V by F⁻¹.

type Track<'a> = Option<(&'a mut IntMatrix, &'a mut IntMatrix)>;

fn swap_rows(d: &mut IntMatrix, track: &mut Track<'_>, a: usize, b: usize) {
    d.swap_rows(a, b);
    if let Some((u, _)) = track.as_mut() {
        u.swap_cols(a, b);
    }
}

fn swap_cols(d: &mut IntMatrix, track: &mut Track<'_>, a: usize, b: usize) {
    d.swap_cols(a, b);
    if let Some((_, v)) = track.as_mut() {
        v.swap_rows(a, b);
    }
}

/// row[target] += factor * row[source]
fn add_row(d: &mut IntMatrix, track: &mut Track<'_>, target: usize, source: usize, factor: &BigInt) {
    d.add_row_multiple(target, source, factor);
    if let Some((u, _)) = track.as_mut() {
        u.add_col_multiple(source, target, &-factor);
    }
}

/// col[target] += factor * col[source]
fn add_col(d: &mut IntMatrix, track: &mut Track<'_>, target: usize, source: usize, factor: &BigInt) {
    d.add_col_multiple(target, source, factor);
    if let Some((_, v)) = track.as_mut() {
        v.add_row_multiple(source, target, &-factor);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check(a: &IntMatrix) -> SmithForm {
        let s = smith_normal_form(a);
        assert_eq!(&(&s.u * &s.d) * &s.v, *a);
        assert!(s.u.determinant().abs() == BigInt::from(1));
        assert!(s.v.determinant().abs() == BigInt::from(1));
        s
    }

    #[test]
    fn identity() {
        let s = check(&IntMatrix::identity(2));
        assert_eq!(s.d, IntMatrix::identity(2));
    }

    #[test]
    fn two_by_two() {
        let a = IntMatrix::from_i64(2, 2, &[2, 4, 6, 8]);
        let s = check(&a);
        assert_eq!(s.d, IntMatrix::from_i64(2, 2, &[2, 0, 0, 4]));
    }

    #[test]
    fn zero_one_by_one() {
        let s = check(&IntMatrix::zeros(1, 1));
        assert_eq!(s.d, IntMatrix::zeros(1, 1));
    }

    #[test]
    fn divisibility_fixup() {
        // diag(2, 3) is diagonal but not in Smith form.
        let a = IntMatrix::from_i64(2, 2, &[2, 0, 0, 3]);
        let s = check(&a);
        assert_eq!(s.diagonal(), vec![BigInt::from(1), BigInt::from(6)]);
    }

    #[test]
    fn empty_shapes() {
        for (r, c) in [(0, 0), (0, 3), (3, 0)] {
            let s = check(&IntMatrix::zeros(r, c));
            assert!(s.diagonal().is_empty());
        }
    }

    #[test]
    fn rectangular() {
        let a = IntMatrix::from_i64(2, 3, &[1, 1, 0, 0, 2, 2]);
        let s = check(&a);
        assert_eq!(s.diagonal(), vec![BigInt::from(1), BigInt::from(2)]);
        assert_eq!(invariant_factors(&a), s.diagonal());
    }
}
