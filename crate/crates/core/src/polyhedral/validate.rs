use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_traits::Zero;
use serde::Serialize;

use super::cone::{rays_to_i64, Cone, ConeKey, Ray};
use super::dd::extreme_rays;
use crate::error::Error;
use crate::linalg::{is_primitive, primitive};

/// One violated fan invariant.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Violation {
    DimensionMismatch { cone: usize, expected: usize },
    ZeroRay { cone: usize },
    NonPrimitiveRay { cone: usize, ray: Vec<i64> },
    NotStrictlyConvex { cone: usize },
    MissingFace { cone: usize, face: Vec<Vec<i64>> },
    BadIntersection { first: usize, second: usize },
    NotComplete { reason: String },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::DimensionMismatch { cone, expected } => {
                write!(f, "cone {cone}: generator length differs from rank {expected}")
            }
            Violation::ZeroRay { cone } => write!(f, "cone {cone}: zero generator"),
            Violation::NonPrimitiveRay { cone, ray } => {
                write!(f, "cone {cone}: generator {ray:?} is not primitive")
            }
            Violation::NotStrictlyConvex { cone } => {
                write!(f, "cone {cone}: not strictly convex")
            }
            Violation::MissingFace { cone, face } => {
                write!(f, "cone {cone}: face {face:?} is missing (not closed under faces)")
            }
            Violation::BadIntersection { first, second } => {
                write!(f, "cones {first} and {second}: intersection is not a face of both")
            }
            Violation::NotComplete { reason } => write!(f, "not complete: {reason}"),
        }
    }
}

/// Result of fan validation. An empty report means a valid complete fan.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_empty(&self) -> bool {
        self.violations.is_empty()
    }

    /// True when the cones form a fan, complete or not.
    pub fn is_fan(&self) -> bool {
        self.violations
            .iter()
            .all(|v| matches!(v, Violation::NotComplete { .. }))
    }

    pub fn is_complete(&self) -> bool {
        self.is_empty()
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.violations.is_empty() {
            return write!(f, "valid complete fan");
        }
        let lines: Vec<String> = self.violations.iter().map(ToString::to_string).collect();
        write!(f, "{}", lines.join("; "))
    }
}

/// Checks a list of cones, each given by generators in `ℤ^rank`, against
/// the fan axioms and the completeness test. Never fails; every problem
/// lands in the report.
///
/// Completeness means: every maximal cone is `rank`-dimensional and every
/// cone of codimension one is a facet of exactly two maximal cones.
pub fn validate_cones(rank: usize, cones: &[Vec<Ray>]) -> ValidationReport {
    let mut violations = Vec::new();

    // Per-cone checks.
    let mut built: Vec<(usize, Cone)> = Vec::new();
    for (i, gens) in cones.iter().enumerate() {
        if gens.iter().any(|g| g.len() != rank) {
            violations.push(Violation::DimensionMismatch {
                cone: i,
                expected: rank,
            });
            continue;
        }
        if gens.iter().any(|g| g.iter().all(Zero::is_zero)) {
            violations.push(Violation::ZeroRay { cone: i });
            continue;
        }
        for g in gens {
            if !is_primitive(g) {
                violations.push(Violation::NonPrimitiveRay {
                    cone: i,
                    ray: rays_to_i64(std::slice::from_ref(g)).remove(0),
                });
            }
        }
        let normalized: Vec<Ray> = gens.iter().map(|g| primitive(g)).collect();
        match Cone::new(rank, &normalized) {
            Ok(c) => built.push((i, c)),
            Err(Error::NotStrictlyConvex) => violations.push(Violation::NotStrictlyConvex { cone: i }),
            Err(e) => unreachable!("generators were checked: {e}"),
        }
    }

    // Distinct cones by canonical key; first occurrence names the cone.
    let mut by_key: BTreeMap<ConeKey, (usize, Cone)> = BTreeMap::new();
    for (i, c) in built {
        by_key.entry(c.key()).or_insert((i, c));
    }

    // Closure under faces.
    let mut face_sets: BTreeMap<ConeKey, BTreeSet<ConeKey>> = BTreeMap::new();
    for (key, (i, c)) in &by_key {
        let faces = c.face_keys();
        for face in &faces {
            if !by_key.contains_key(face) {
                violations.push(Violation::MissingFace {
                    cone: *i,
                    face: rays_to_i64(face),
                });
            }
        }
        face_sets.insert(key.clone(), faces);
    }

    let maximal: Vec<&ConeKey> = by_key
        .keys()
        .filter(|k| !face_sets.iter().any(|(other, faces)| other != *k && faces.contains(*k)))
        .collect();

    // Intersections of maximal cones; with face closure this covers all pairs.
    for (a, ka) in maximal.iter().enumerate() {
        for kb in &maximal[a + 1..] {
            let (ia, ca) = &by_key[*ka];
            let (ib, cb) = &by_key[*kb];
            let meet = intersection_rays(rank, ca, cb);
            if !face_sets[*ka].contains(&meet) || !face_sets[*kb].contains(&meet) {
                violations.push(Violation::BadIntersection {
                    first: *ia.min(ib),
                    second: *ia.max(ib),
                });
            }
        }
    }

    // Completeness.
    if by_key.is_empty() {
        violations.push(Violation::NotComplete {
            reason: "no cones".into(),
        });
    }
    for k in &maximal {
        let (i, c) = &by_key[*k];
        if c.dim() != rank {
            violations.push(Violation::NotComplete {
                reason: format!("maximal cone {i} has dimension {} < {rank}", c.dim()),
            });
        }
    }
    if rank > 0 {
        for (key, (i, c)) in &by_key {
            if c.dim() + 1 != rank {
                continue;
            }
            let count = maximal
                .iter()
                .filter(|m| by_key[**m].1.dim() == rank && face_sets[**m].contains(key))
                .count();
            if count != 2 {
                violations.push(Violation::NotComplete {
                    reason: format!("wall {i} borders {count} maximal cone(s) instead of 2"),
                });
            }
        }
    }

    ValidationReport { violations }
}

/// Extreme rays of `a ∩ b`, via the double description of the combined
/// inequality system (facet normals plus both signs of each span equation).
fn intersection_rays(rank: usize, a: &Cone, b: &Cone) -> ConeKey {
    let mut constraints: Vec<Ray> = Vec::new();
    for c in [a, b] {
        constraints.extend(c.facet_normals().iter().cloned());
        for u in c.orthogonal_lattice_basis().columns() {
            constraints.push(u.iter().map(|x| -x).collect());
            constraints.push(u);
        }
    }
    if rank == 0 {
        return Vec::new();
    }
    extreme_rays(&constraints, rank)
}

#[cfg(test)]
mod tests {
    use num_bigint::BigInt;

    use super::*;

    fn cones(list: &[&[&[i64]]]) -> Vec<Vec<Ray>> {
        list.iter()
            .map(|c| c.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect())
            .collect()
    }

    #[test]
    fn projective_plane_is_complete() {
        let list = cones(&[
            &[],
            &[&[1, 0]],
            &[&[0, 1]],
            &[&[-1, -1]],
            &[&[1, 0], &[0, 1]],
            &[&[0, 1], &[-1, -1]],
            &[&[-1, -1], &[1, 0]],
        ]);
        let report = validate_cones(2, &list);
        assert!(report.is_empty(), "{report}");
    }

    #[test]
    fn affine_plane_is_a_fan_but_not_complete() {
        let list = cones(&[&[], &[&[1, 0]], &[&[0, 1]], &[&[1, 0], &[0, 1]]]);
        let report = validate_cones(2, &list);
        assert!(report.is_fan());
        assert!(!report.is_complete());
    }

    #[test]
    fn missing_ray_face() {
        let list = cones(&[&[], &[&[1, 0]], &[&[1, 0], &[0, 1]]]);
        let report = validate_cones(2, &list);
        assert!(report
            .violations
            .iter()
            .any(|v| matches!(v, Violation::MissingFace { .. })));
    }

    #[test]
    fn overlapping_cones() {
        let list = cones(&[
            &[],
            &[&[1, 0]],
            &[&[0, 1]],
            &[&[1, 1]],
            &[&[1, 0], &[0, 1]],
            &[&[1, 0], &[1, 1]],
        ]);
        let report = validate_cones(2, &list);
        assert!(report
            .violations
            .iter()
            .any(|v| matches!(v, Violation::BadIntersection { .. })));
    }

    #[test]
    fn non_primitive_and_line() {
        let list = cones(&[&[&[2, 0]], &[&[1, 0], &[-1, 0]]]);
        let report = validate_cones(2, &list);
        assert!(report
            .violations
            .iter()
            .any(|v| matches!(v, Violation::NonPrimitiveRay { .. })));
        assert!(report
            .violations
            .iter()
            .any(|v| matches!(v, Violation::NotStrictlyConvex { cone: 1 })));
    }
}
