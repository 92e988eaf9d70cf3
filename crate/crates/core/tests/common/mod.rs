//! Reference computations used by the integration tests. Everything here
//! is deliberately naive and works on machine integers, so it shares no
//! code path with the library.

#![allow(dead_code)]

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use rand::Rng;

use toricseq_core::{builtin, Fan, IntMatrix};

pub const BUILTINS: &[&str] = &[
    "p1",
    "p2",
    "p3",
    "p1xp1",
    "hirzebruch:0",
    "hirzebruch:1",
    "hirzebruch:2",
    "hirzebruch:3",
    "wp112",
];

pub fn fan(name: &str) -> Fan {
    builtin(name).unwrap().to_fan().unwrap()
}

pub fn to_i128(m: &IntMatrix) -> Vec<Vec<i128>> {
    (0..m.nrows())
        .map(|i| m.row(i).iter().map(|x| x.to_i128().expect("small entry")).collect())
        .collect()
}

pub fn from_i128(rows: usize, cols: usize, data: &[Vec<i128>]) -> IntMatrix {
    let flat: Vec<BigInt> = data.iter().flatten().map(|&x| BigInt::from(x)).collect();
    IntMatrix::from_vec(rows, cols, flat)
}

/// Laplace expansion along the first row.
pub fn det(m: &[Vec<i128>]) -> i128 {
    let n = m.len();
    if n == 0 {
        return 1;
    }
    if n == 1 {
        return m[0][0];
    }
    let mut total = 0;
    for j in 0..n {
        if m[0][j] == 0 {
            continue;
        }
        let minor: Vec<Vec<i128>> = m[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|&(c, _)| c != j)
                    .map(|(_, &x)| x)
                    .collect()
            })
            .collect();
        let sign = if j % 2 == 0 { 1 } else { -1 };
        total += sign * m[0][j] * det(&minor);
    }
    total
}

pub fn gcd(a: i128, b: i128) -> i128 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Increasing `r`-subsets of `0..n`, lexicographic.
pub fn subsets(n: usize, r: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, r: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == r {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, r, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, r, &mut Vec::new(), &mut out);
    out
}

pub fn rank(m: &[Vec<i128>], cols: usize) -> usize {
    let rows = m.len();
    for r in (1..=rows.min(cols)).rev() {
        for rs in subsets(rows, r) {
            for cs in subsets(cols, r) {
                let sub: Vec<Vec<i128>> = rs.iter().map(|&i| cs.iter().map(|&j| m[i][j]).collect()).collect();
                if det(&sub) != 0 {
                    return r;
                }
            }
        }
    }
    0
}

/// Matrix of all `r × r` minors, rows and columns in lexicographic order.
pub fn minors(m: &[Vec<i128>], rows: usize, cols: usize, r: usize) -> Vec<Vec<i128>> {
    let rs = subsets(rows, r);
    let cs = subsets(cols, r);
    rs.iter()
        .map(|ri| {
            cs.iter()
                .map(|ci| {
                    let sub: Vec<Vec<i128>> = ri.iter().map(|&i| ci.iter().map(|&j| m[i][j]).collect()).collect();
                    det(&sub)
                })
                .collect()
        })
        .collect()
}

/// gcd of the maximal minors of a tall `n × k` matrix of rank `k`; equal
/// to 1 exactly when its columns span a saturated sublattice.
pub fn maximal_minor_gcd(m: &[Vec<i128>], rows: usize, cols: usize) -> i128 {
    minors(m, rows, cols, cols).iter().flatten().fold(0, |g, &x| gcd(g, x))
}

/// Extreme rays of `{x : ⟨a, x⟩ ≥ 0}` by trying every `(d-1)`-subset of
/// constraints. The constraints must have rank `d`.
pub fn brute_extreme_rays(constraints: &[Vec<i64>], d: usize) -> Vec<Vec<i64>> {
    let a: Vec<Vec<i128>> = constraints
        .iter()
        .map(|r| r.iter().map(|&x| x as i128).collect())
        .collect();
    let mut found: Vec<Vec<i64>> = Vec::new();
    if d == 1 {
        for s in [1i128, -1] {
            if a.iter().all(|row| row[0] * s >= 0) {
                found.push(vec![s as i64]);
            }
        }
        return found;
    }
    for subset in subsets(a.len(), d - 1) {
        let sub: Vec<Vec<i128>> = subset.iter().map(|&i| a[i].clone()).collect();
        // Generalized cross product: v_j = (-1)^j det(sub without column j).
        let v: Vec<i128> = (0..d)
            .map(|j| {
                let minor: Vec<Vec<i128>> = sub
                    .iter()
                    .map(|row| {
                        row.iter()
                            .enumerate()
                            .filter(|&(c, _)| c != j)
                            .map(|(_, &x)| x)
                            .collect()
                    })
                    .collect();
                if j % 2 == 0 {
                    det(&minor)
                } else {
                    -det(&minor)
                }
            })
            .collect();
        if v.iter().all(|&x| x == 0) {
            continue;
        }
        let g = v.iter().fold(0, |g, &x| gcd(g, x));
        for s in [1i128, -1] {
            let cand: Vec<i128> = v.iter().map(|&x| s * x / g).collect();
            if a.iter()
                .all(|row| row.iter().zip(&cand).map(|(p, q)| p * q).sum::<i128>() >= 0)
            {
                let c: Vec<i64> = cand.iter().map(|&x| x as i64).collect();
                if !found.contains(&c) {
                    found.push(c);
                }
            }
        }
    }
    found.sort();
    found
}

pub fn binom(n: usize, k: usize) -> i64 {
    if k > n {
        return 0;
    }
    (0..k).fold(1i64, |acc, i| acc * (n - i) as i64 / (i as i64 + 1))
}

/// Betti numbers of a complete simplicial toric variety from the numbers
/// of cones: `b_{2k} = Σ_i (-1)^{i-k} C(i,k) |Δ^(i)|`, odd ones zero.
pub fn counting_betti(codim_counts: &[usize]) -> Vec<usize> {
    let n = codim_counts.len() - 1;
    let mut b = vec![0usize; 2 * n + 1];
    for k in 0..=n {
        let v: i64 = (k..=n)
            .map(|i| {
                let sign = if (i - k) % 2 == 0 { 1 } else { -1 };
                sign * binom(i, k) * codim_counts[i] as i64
            })
            .sum();
        assert!(v >= 0, "negative Betti number from counting formula");
        b[2 * k] = v as usize;
    }
    b
}

pub fn is_simplicial(fan: &Fan) -> bool {
    fan.cones().iter().all(|c| c.rays().len() == c.dim())
}

pub fn random_matrix<R: Rng>(rng: &mut R, rows: usize, cols: usize, bound: i64) -> IntMatrix {
    let data: Vec<i64> = (0..rows * cols).map(|_| rng.gen_range(-bound..=bound)).collect();
    IntMatrix::from_i64(rows, cols, &data)
}

/// A product of random elementary integer matrices, with its inverse.
pub fn random_unimodular<R: Rng>(rng: &mut R, n: usize) -> (IntMatrix, IntMatrix) {
    let mut u = IntMatrix::identity(n);
    let mut inv = IntMatrix::identity(n);
    if n < 2 {
        return (u, inv);
    }
    for _ in 0..3 * n {
        let i = rng.gen_range(0..n);
        let mut j = rng.gen_range(0..n - 1);
        if j >= i {
            j += 1;
        }
        let c: i64 = rng.gen_range(-2..=2);
        let mut e = IntMatrix::identity(n);
        e.set(i, j, c.into());
        let mut e_inv = IntMatrix::identity(n);
        e_inv.set(i, j, (-c).into());
        u = &u * &e;
        inv = &e_inv * &inv;
        if rng.gen_bool(0.3) {
            let mut p = IntMatrix::identity(n);
            p.set(i, i, 0.into());
            p.set(j, j, 0.into());
            p.set(i, j, 1.into());
            p.set(j, i, 1.into());
            u = &u * &p;
            inv = &p * &inv;
        }
    }
    (u, inv)
}

/// A random strictly convex cone in `ℤ^n`: up to `n + 2` generators drawn
/// from an open half-space.
pub fn random_cone<R: Rng>(rng: &mut R, n: usize) -> toricseq_core::Cone {
    loop {
        let f: Vec<i64> = (0..n).map(|_| rng.gen_range(-2..=2)).collect();
        if f.iter().all(|&x| x == 0) {
            continue;
        }
        let count = rng.gen_range(1..=n + 2);
        let mut gens = Vec::new();
        while gens.len() < count {
            let v: Vec<i64> = (0..n).map(|_| rng.gen_range(-3..=3)).collect();
            if v.iter().zip(&f).map(|(a, b)| a * b).sum::<i64>() > 0 {
                gens.push(v.iter().map(|&x| BigInt::from(x)).collect::<Vec<_>>());
            }
        }
        if let Ok(c) = toricseq_core::Cone::new(n, &gens) {
            return c;
        }
    }
}

pub fn random_sign<R: Rng>(rng: &mut R) -> toricseq_core::Sign {
    if rng.gen_bool(0.5) {
        toricseq_core::Sign::Positive
    } else {
        toricseq_core::Sign::Negative
    }
}

fn dot(a: &[BigInt], b: &[BigInt]) -> BigInt {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// A random valid choice of supporting functional `u` and inward vector
/// `w` for the facet `tau` of `sigma`: `u = a·u_0 + (element of σ^⊥)` with
/// `a ≥ 1`, and `w` a positive combination of the rays off the facet plus
/// any combination of the rays of `tau`.
pub fn random_choice<R: Rng>(
    rng: &mut R,
    tau: &toricseq_core::Cone,
    sigma: &toricseq_core::Cone,
) -> (Vec<BigInt>, Vec<BigInt>) {
    use toricseq_core::linalg::kernel_basis;
    let n = sigma.ambient();
    let rows = |rays: &[Vec<BigInt>]| IntMatrix::from_rows(n, rays);
    let off: Vec<Vec<BigInt>> = sigma
        .rays()
        .iter()
        .filter(|r| !tau.rays().contains(r))
        .cloned()
        .collect();
    let tau_perp = kernel_basis(&rows(tau.rays()));
    let u0 = tau_perp
        .columns()
        .into_iter()
        .find_map(|k| {
            let p = dot(&k, &off[0]);
            if p > BigInt::from(0) {
                Some(k)
            } else if p < BigInt::from(0) {
                Some(k.iter().map(|x| -x).collect())
            } else {
                None
            }
        })
        .expect("some functional vanishing on τ separates σ");
    let sigma_perp = kernel_basis(&rows(sigma.rays()));
    let a = BigInt::from(rng.gen_range(1..=4));
    let mut u: Vec<BigInt> = u0.iter().map(|x| x * &a).collect();
    for k in sigma_perp.columns() {
        let c = BigInt::from(rng.gen_range(-3..=3));
        for (x, y) in u.iter_mut().zip(&k) {
            *x += y * &c;
        }
    }
    let mut w = vec![BigInt::from(0); n];
    for r in &off {
        let c = BigInt::from(rng.gen_range(1..=3));
        for (x, y) in w.iter_mut().zip(r) {
            *x += y * &c;
        }
    }
    for r in tau.rays() {
        let c = BigInt::from(rng.gen_range(-3..=3));
        for (x, y) in w.iter_mut().zip(r) {
            *x += y * &c;
        }
    }
    (u, w)
}
