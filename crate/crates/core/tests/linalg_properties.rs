mod common;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use common::{det, from_i128, maximal_minor_gcd, minors, random_unimodular, rank, to_i128};
use toricseq_core::linalg::{
    hnf_basis, homology_at, invariant_factors, is_saturated, kernel_basis, right_inverse, smith_normal_form,
    solve_in_basis, wedge_power_matrix,
};
use toricseq_core::IntMatrix;

fn matrix(max_rows: usize, max_cols: usize, bound: i64) -> impl Strategy<Value = IntMatrix> {
    (0..=max_rows, 0..=max_cols).prop_flat_map(move |(r, c)| {
        prop::collection::vec(-bound..=bound, r * c).prop_map(move |v| IntMatrix::from_i64(r, c, &v))
    })
}

fn product_pair(n: usize) -> impl Strategy<Value = (IntMatrix, IntMatrix)> {
    (1..=n, 1..=n, 1..=n).prop_flat_map(|(p, q, t)| {
        (
            prop::collection::vec(-4i64..=4, p * q).prop_map(move |v| IntMatrix::from_i64(p, q, &v)),
            prop::collection::vec(-4i64..=4, q * t).prop_map(move |v| IntMatrix::from_i64(q, t, &v)),
        )
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn smith_form_reconstructs(a in matrix(5, 5, 9)) {
        let s = smith_normal_form(&a);
        prop_assert_eq!(&(&s.u * &s.d) * &s.v, a.clone());
        prop_assert!(s.u.determinant().abs().is_one());
        prop_assert!(s.v.determinant().abs().is_one());
        let diag = s.diagonal();
        for i in 0..s.d.nrows() {
            for j in 0..s.d.ncols() {
                if i != j {
                    prop_assert!(s.d.get(i, j).is_zero());
                }
            }
        }
        for w in diag.windows(2) {
            prop_assert!(!w[0].is_negative());
            if w[0].is_zero() {
                prop_assert!(w[1].is_zero());
            } else {
                prop_assert!((&w[1] % &w[0]).is_zero());
            }
        }
        let nonzero: Vec<BigInt> = diag.into_iter().filter(|x| !x.is_zero()).collect();
        prop_assert_eq!(invariant_factors(&a), nonzero);
    }

    #[test]
    fn smith_form_product_matches_determinant(a in matrix(4, 4, 9).prop_filter("square", |m| m.is_square())) {
        let product: BigInt = invariant_factors(&a).iter().product();
        let d = det(&to_i128(&a)).abs();
        if a.rank() == a.nrows() {
            prop_assert_eq!(product, BigInt::from(d));
        } else {
            prop_assert_eq!(d, 0);
        }
    }

    #[test]
    fn rank_matches_minor_rank(a in matrix(4, 4, 5)) {
        prop_assert_eq!(a.rank(), rank(&to_i128(&a), a.ncols()));
    }

    #[test]
    fn kernel_is_saturated_and_complete(a in matrix(4, 5, 6)) {
        let k = kernel_basis(&a);
        prop_assert_eq!(k.nrows(), a.ncols());
        prop_assert!((&a * &k).is_zero());
        prop_assert_eq!(k.ncols(), a.ncols() - rank(&to_i128(&a), a.ncols()));
        if k.ncols() > 0 {
            prop_assert_eq!(maximal_minor_gcd(&to_i128(&k), k.nrows(), k.ncols()), 1);
            prop_assert!(is_saturated(&k));
        }
    }

    #[test]
    fn saturation_contains_input(cols in matrix(5, 3, 6)) {
        let vectors = cols.transpose().rows_vec();
        let dim = cols.nrows();
        let b = hnf_basis(&vectors, dim);
        prop_assert_eq!(b.ncols(), cols.rank());
        for v in &vectors {
            prop_assert!(solve_in_basis(&b, v).is_some());
        }
        if b.ncols() > 0 {
            prop_assert_eq!(maximal_minor_gcd(&to_i128(&b), b.nrows(), b.ncols()), 1);
        }
    }

    #[test]
    fn wedge_power_is_the_minor_matrix(a in matrix(4, 4, 5), r in 0usize..=3) {
        let w = wedge_power_matrix(&a, r);
        let expected = if r == 0 {
            vec![vec![1]]
        } else {
            minors(&to_i128(&a), a.nrows(), a.ncols(), r)
        };
        let rows = expected.len();
        let cols = expected.first().map_or(common::subsets(a.ncols(), r).len(), Vec::len);
        prop_assert_eq!(w, from_i128(rows, cols, &expected));
    }

    #[test]
    fn wedge_power_is_functorial((a, b) in product_pair(4), r in 0usize..=3) {
        prop_assert_eq!(
            wedge_power_matrix(&(&a * &b), r),
            &wedge_power_matrix(&a, r) * &wedge_power_matrix(&b, r)
        );
    }

    #[test]
    fn right_inverse_of_surjection(k in matrix(5, 3, 5)) {
        // Kernel bases are primitive systems; their transposes are onto.
        let basis = kernel_basis(&k.transpose());
        let p = basis.transpose();
        if p.nrows() > 0 {
            let s = right_inverse(&p).expect("surjective");
            prop_assert_eq!(&p * &s, IntMatrix::identity(p.nrows()));
        }
    }

    #[test]
    fn homology_is_invariant_under_change_of_basis(
        d_out in matrix(3, 5, 4),
        extra in prop::collection::vec(-3i64..=3, 0..=12),
        seed in any::<u64>(),
    ) {
        // Build d_in with image inside ker d_out.
        let m = d_out.ncols();
        let k = kernel_basis(&d_out);
        let width = if k.ncols() == 0 { 0 } else { extra.len() / k.ncols().max(1) };
        let coeffs = IntMatrix::from_i64(k.ncols(), width, &extra[..k.ncols() * width]);
        let d_in = &k * &coeffs;
        let h = homology_at(&d_in, &d_out).unwrap();

        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (u, u_inv) = random_unimodular(&mut rng, m);
        let (v, _) = random_unimodular(&mut rng, d_in.ncols());
        let (w, _) = random_unimodular(&mut rng, d_out.nrows());
        let h2 = homology_at(&(&(&u * &d_in) * &v), &(&(&w * &d_out) * &u_inv)).unwrap();
        prop_assert_eq!(h, h2);
    }
}

#[test]
fn unimodular_helper_is_consistent() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for n in 0..5 {
        let (u, inv) = random_unimodular(&mut rng, n);
        assert_eq!(&u * &inv, IntMatrix::identity(n));
    }
}

#[test]
fn homology_of_a_known_complex() {
    // ℤ --2--> ℤ --0--> 0: H = ℤ/2 at the middle.
    let d_in = IntMatrix::from_i64(1, 1, &[2]);
    let d_out = IntMatrix::zeros(0, 1);
    let h = homology_at(&d_in, &d_out).unwrap();
    assert_eq!(h.rank, 0);
    assert_eq!(h.torsion, vec![BigInt::from(2)]);
}
