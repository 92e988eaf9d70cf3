use std::collections::BTreeMap;

use super::*;
use crate::{builtin, FgAbGroup, IntMatrix};

fn fan(name: &str) -> Fan {
    builtin(name).unwrap().to_fan().unwrap()
}

fn ss(name: &str) -> SpectralSequence {
    SpectralSequence::compute(&fan(name), Mode::Morphic).unwrap()
}

#[test]
fn e1_ranks_of_projective_line() {
    let e1 = build_e1(&fan("p1"), Mode::Morphic).unwrap();
    let expected: BTreeMap<_, _> = [((0, 0), 2), ((0, 1), 1), ((1, 1), 1)].into_iter().collect();
    assert_eq!(e1.ranks(), expected);
    assert_eq!(e1.block_rank(1, 0), 0);
}

#[test]
fn e1_ranks_of_projective_plane() {
    let e1 = build_e1(&fan("p2"), Mode::Singular).unwrap();
    let expected: BTreeMap<_, _> = [
        ((0, 0), 3),
        ((0, 1), 3),
        ((1, 1), 3),
        ((0, 2), 1),
        ((1, 2), 2),
        ((2, 2), 1),
    ]
    .into_iter()
    .collect();
    assert_eq!(e1.ranks(), expected);
}

#[test]
fn d1_of_projective_line() {
    let f = fan("p1");
    let s = SpectralSequence::compute(&f, Mode::Morphic).unwrap();
    // Maximal cones in fan order: cone(-e1), cone(e1).
    assert_eq!(s.d1.map(&s.e1, 0, 0), IntMatrix::from_i64(1, 2, &[-1, 1]));
    assert_eq!(s.d1.map(&s.e1, 1, 0).ncols(), 0);
    assert_eq!(s.e2.group(0, 0), FgAbGroup::free(1));
    assert_eq!(s.e2.group(0, 1), FgAbGroup::trivial());
    assert_eq!(s.e2.group(1, 1), FgAbGroup::free(1));
}

#[test]
fn d1_weight_one_of_projective_plane() {
    let s = ss("p2");
    let d = s.d1.map(&s.e1, 1, 1);
    assert_eq!((d.nrows(), d.ncols()), (2, 3));
    assert_eq!(d.rank(), 2);
    // Each ray's orthogonal line includes into M as ± a primitive vector.
    for j in 0..3 {
        let col = d.column(j);
        assert!(crate::linalg::is_primitive(&col));
    }
}

#[test]
fn e2_of_projective_plane() {
    let s = ss("p2");
    for (&(r, c), g) in s.e2.groups() {
        let expected = if r == c {
            FgAbGroup::free(1)
        } else {
            FgAbGroup::trivial()
        };
        assert_eq!(g, &expected, "E2^{{{r},{c}}}");
    }
}

#[test]
fn zero_differential_gives_e1() {
    let e1 = build_e1(&fan("p2"), Mode::Morphic).unwrap();
    let e2 = compute_e2(&e1, &D1::zero(&e1)).unwrap();
    for ((r, s), rank) in e1.ranks() {
        assert_eq!(e2.group(r, s), FgAbGroup::free(rank));
    }
}

#[test]
fn morphic_tables() {
    assert_eq!(ss("p1").morphic_table(Some(1)).ranks[1], vec![1, 0, 1]);
    assert_eq!(ss("p2").morphic_table(Some(2)).ranks[2], vec![1, 0, 1, 0, 1]);
    assert_eq!(ss("p2").morphic_table(Some(0)).ranks, vec![vec![1, 0, 0, 0, 0]]);
    assert_eq!(ss("p2").morphic_table(None).qmax, 2);
}

#[test]
fn betti_numbers() {
    assert_eq!(
        ss("p1xp1").betti_table(),
        BettiTable {
            betti: vec![1, 0, 2, 0, 1],
            euler: 4
        }
    );
    assert_eq!(ss("wp112").betti_table().betti, vec![1, 0, 1, 0, 1]);
    assert_eq!(ss("p3").betti_table().betti, vec![1, 0, 1, 0, 1, 0, 1]);
}

#[test]
fn euler_characteristic_counts_maximal_cones() {
    for name in ["p1", "p2", "p3", "p1xp1", "hirzebruch:2", "wp112"] {
        let f = fan(name);
        let s = SpectralSequence::compute(&f, Mode::Singular).unwrap();
        assert_eq!(s.betti_table().euler, f.maximal_cones().len() as i64, "{name}");
    }
}

#[test]
fn weight_action() {
    let s = ss("p2");
    for m in [1, 2, 3, -1] {
        assert!(s.weight_action_check(m));
    }
}

#[test]
fn modes_share_pages() {
    let f = fan("hirzebruch:1");
    let a = SpectralSequence::compute(&f, Mode::Morphic).unwrap();
    let b = SpectralSequence::compute(&f, Mode::Singular).unwrap();
    assert_eq!(a.e2, b.e2);
    assert_eq!(a.morphic_table(Some(2)).ranks[2], b.betti_table().betti);
}

#[test]
fn incomplete_fan_is_rejected() {
    let doc = crate::FanDocument {
        rank: 2,
        rays: vec![vec![1, 0], vec![0, 1]],
        max_cones: vec![vec![0, 1]],
        name: None,
    };
    let f = doc.build().unwrap();
    assert!(matches!(build_e1(&f, Mode::Morphic), Err(crate::Error::NotComplete)));
}

#[test]
fn mode_parsing() {
    assert_eq!("morphic".parse::<Mode>().unwrap(), Mode::Morphic);
    assert_eq!(Mode::Singular.to_string(), "singular");
    assert!("lawson".parse::<Mode>().is_err());
}
