//! Seeded generators of random complete fans, for property tests and
//! benchmarks.

use std::cmp::Ordering;

use num_integer::Integer;
use rand::Rng;

use crate::document::FanDocument;
use crate::polyhedral::Fan;

/// Exact angular order on nonzero plane vectors, starting at the positive
/// x-axis and turning counterclockwise.
fn angle_cmp(a: &[i64; 2], b: &[i64; 2]) -> Ordering {
    let half = |v: &[i64; 2]| u8::from(!(v[1] > 0 || (v[1] == 0 && v[0] > 0)));
    half(a).cmp(&half(b)).then_with(|| 0.cmp(&(a[0] * b[1] - a[1] * b[0])))
}

/// A complete fan in `ℤ^2` with `nrays` random primitive rays (coordinates
/// in `[-bound, bound]`), maximal cones between angularly consecutive rays.
///
/// Samples until every consecutive pair turns by strictly less than π, so
/// each maximal cone is strictly convex. Panics if `nrays < 3`.
pub fn random_complete_fan_2d<R: Rng + ?Sized>(rng: &mut R, nrays: usize, bound: i64) -> FanDocument {
    assert!(nrays >= 3, "a complete plane fan needs at least 3 rays");
    loop {
        let mut rays: Vec<[i64; 2]> = Vec::with_capacity(nrays);
        let mut attempts = 0;
        while rays.len() < nrays && attempts < 10_000 {
            attempts += 1;
            let v = [rng.gen_range(-bound..=bound), rng.gen_range(-bound..=bound)];
            if v == [0, 0] || v[0].gcd(&v[1]) != 1 || rays.contains(&v) {
                continue;
            }
            rays.push(v);
        }
        if rays.len() < nrays {
            continue;
        }
        rays.sort_by(angle_cmp);
        let convex = (0..nrays).all(|i| {
            let (a, b) = (rays[i], rays[(i + 1) % nrays]);
            a[0] * b[1] - a[1] * b[0] > 0
        });
        if !convex {
            continue;
        }
        return FanDocument {
            rank: 2,
            rays: rays.iter().map(|v| v.to_vec()).collect(),
            max_cones: (0..nrays).map(|i| vec![i, (i + 1) % nrays]).collect(),
            name: Some(format!("random2d:{nrays}")),
        };
    }
}

/// As [`random_complete_fan_2d`], built into a [`Fan`].
pub fn random_fan_2d<R: Rng + ?Sized>(rng: &mut R, nrays: usize) -> Fan {
    random_complete_fan_2d(rng, nrays, 6)
        .to_fan()
        .expect("generated fan is complete")
}
