//! Double description method for pointed polyhedral cones.
//!
//! Given constraints `a_1, …, a_m ∈ ℤ^d` of full rank `d`, computes the
//! extreme rays of `{x : ⟨a_i, x⟩ ≥ 0 for all i}`. Arithmetic is exact;
//! every ray is kept as a primitive integer vector, which is the same as
//! working over ℚ up to positive scaling.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::linalg::{dot, pivot_rows, primitive, IntMatrix};

struct Candidate {
    v: Vec<BigInt>,
    /// `zeros[i]` is meaningful only for already processed constraints.
    zeros: Vec<bool>,
}

/// Extreme rays of `{x : ⟨a, x⟩ ≥ 0 for a in constraints}`, sorted.
///
/// Panics if the constraints do not have rank `dim` (the cone would not be
/// pointed and would have no ray description).
pub fn extreme_rays(constraints: &[Vec<BigInt>], dim: usize) -> Vec<Vec<BigInt>> {
    if dim == 0 {
        return Vec::new();
    }
    let a = IntMatrix::from_rows(dim, constraints);
    let initial = pivot_rows(&a);
    assert_eq!(initial.len(), dim, "constraint matrix must have full column rank");

    let m = constraints.len();
    let mut processed = vec![false; m];
    let mut order: Vec<usize> = initial.clone();
    order.extend((0..m).filter(|i| !initial.contains(i)));

    // Start from the simplicial cone cut out by the independent rows:
    // its rays are the columns of adj(A0), up to the sign of det(A0).
    let cols: Vec<usize> = (0..dim).collect();
    let a0 = a.submatrix(&initial, &cols);
    let det = a0.determinant();
    let mut rays: Vec<Candidate> = (0..dim)
        .map(|j| {
            let v: Vec<BigInt> = (0..dim)
                .map(|i| {
                    let mut replaced = a0.clone();
                    for k in 0..dim {
                        replaced.set(k, i, BigInt::from((k == j) as i64));
                    }
                    let x = replaced.determinant();
                    if det.is_negative() {
                        -x
                    } else {
                        x
                    }
                })
                .collect();
            Candidate {
                v: primitive(&v),
                zeros: vec![false; m],
            }
        })
        .collect();
    for &i in &initial {
        processed[i] = true;
        for ray in rays.iter_mut() {
            ray.zeros[i] = dot(&constraints[i], &ray.v).is_zero();
        }
    }

    for &c in &order[dim..] {
        let values: Vec<BigInt> = rays.iter().map(|r| dot(&constraints[c], &r.v)).collect();
        let pos: Vec<usize> = (0..rays.len()).filter(|&i| values[i].is_positive()).collect();
        let neg: Vec<usize> = (0..rays.len()).filter(|&i| values[i].is_negative()).collect();

        let mut fresh: Vec<Vec<BigInt>> = Vec::new();
        for &p in &pos {
            for &n in &neg {
                if !adjacent(&rays, p, n, &processed, dim) {
                    continue;
                }
                let v: Vec<BigInt> = rays[n]
                    .v
                    .iter()
                    .zip(&rays[p].v)
                    .map(|(xn, xp)| &values[p] * xn - &values[n] * xp)
                    .collect();
                fresh.push(primitive(&v));
            }
        }

        let mut next: Vec<Candidate> = rays
            .into_iter()
            .zip(&values)
            .filter(|(_, val)| !val.is_negative())
            .map(|(r, _)| r)
            .collect();
        processed[c] = true;
        for r in next.iter_mut() {
            r.zeros[c] = dot(&constraints[c], &r.v).is_zero();
        }
        for v in fresh {
            let zeros = (0..m)
                .map(|i| processed[i] && dot(&constraints[i], &v).is_zero())
                .collect();
            next.push(Candidate { v, zeros });
        }
        rays = next;
    }

    let mut out: Vec<Vec<BigInt>> = rays.into_iter().map(|r| r.v).collect();
    out.sort();
    out.dedup();
    out
}

/// Combinatorial adjacency test: `p` and `n` span a 2-face iff no third
/// ray is tight on every constraint that both of them are tight on.
fn adjacent(rays: &[Candidate], p: usize, n: usize, processed: &[bool], dim: usize) -> bool {
    let common: Vec<usize> = (0..processed.len())
        .filter(|&i| processed[i] && rays[p].zeros[i] && rays[n].zeros[i])
        .collect();
    if common.len() + 2 < dim {
        return false;
    }
    !rays
        .iter()
        .enumerate()
        .any(|(k, r)| k != p && k != n && common.iter().all(|&i| r.zeros[i]))
}
