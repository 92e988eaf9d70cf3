use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use rand::Rng;

use super::cone::{Cone, ConeKey, Ray, Sign};
use super::incidence::incidence_sign;
use super::validate::{validate_cones, ValidationReport, Violation};
use crate::error::{Error, Result};
use crate::linalg::IntMatrix;

/// A rational polyhedral fan with its full face lattice.
///
/// Cones are stored in the total order (dimension, sorted rays); all
/// indices handed out by the methods below refer to that order.
#[derive(Clone, Debug)]
pub struct Fan {
    rank: usize,
    cones: Vec<Cone>,
    index: HashMap<ConeKey, usize>,
    /// `faces[i]`: every face of cone `i`, itself included, ascending.
    faces: Vec<Vec<usize>>,
    facets: Vec<Vec<usize>>,
    cofacets: Vec<Vec<usize>>,
    by_codim: Vec<Vec<usize>>,
    report: ValidationReport,
}

impl PartialEq for Fan {
    fn eq(&self, other: &Self) -> bool {
        self.rank == other.rank && self.cones == other.cones
    }
}

impl Eq for Fan {}

impl Fan {
    /// Builds the fan generated by the given maximal cones (as lists of
    /// indices into `rays`), generating every face.
    ///
    /// Fails with [`Error::InvalidFan`] if the cones do not form a fan.
    /// Incomplete fans are accepted; see [`Fan::is_complete`].
    pub fn from_max_cones(rank: usize, rays: &[Ray], max_cones: &[Vec<usize>]) -> Result<Fan> {
        let mut generators: Vec<Vec<Ray>> = Vec::with_capacity(max_cones.len());
        for cone in max_cones {
            let mut gens = Vec::with_capacity(cone.len());
            for &i in cone {
                let r = rays
                    .get(i)
                    .ok_or_else(|| Error::Parse(format!("ray index {i} out of range ({} rays)", rays.len())))?;
                gens.push(r.clone());
            }
            generators.push(gens);
        }

        let mut all: BTreeMap<ConeKey, Cone> = BTreeMap::new();
        for (i, gens) in generators.iter().enumerate() {
            let cone = match Cone::new(rank, gens) {
                Ok(c) => c,
                Err(Error::NotStrictlyConvex) => {
                    return Err(Error::InvalidFan(ValidationReport {
                        violations: vec![Violation::NotStrictlyConvex { cone: i }],
                    }))
                }
                Err(e) => return Err(e),
            };
            for face in cone.faces() {
                all.entry(face.key()).or_insert(face);
            }
        }
        if all.is_empty() {
            all.insert(Vec::new(), Cone::zero(rank));
        }
        let keys: Vec<ConeKey> = all.keys().cloned().collect();
        let report = validate_cones(rank, &keys);
        if !report.is_fan() {
            return Err(Error::InvalidFan(report));
        }
        Ok(Self::assemble(rank, all.into_values().collect(), report))
    }

    /// Assembles a fan from a face-closed list of cones whose validity has
    /// already been established.
    pub(crate) fn assemble(rank: usize, mut cones: Vec<Cone>, report: ValidationReport) -> Fan {
        cones.sort_by(|a, b| a.order_key().cmp(&b.order_key()));
        let index: HashMap<ConeKey, usize> = cones.iter().enumerate().map(|(i, c)| (c.key(), i)).collect();
        let faces: Vec<Vec<usize>> = cones
            .iter()
            .map(|c| {
                let mut f: Vec<usize> = c
                    .face_keys()
                    .iter()
                    .map(|k| *index.get(k).expect("fan is closed under faces"))
                    .collect();
                f.sort_unstable();
                f
            })
            .collect();
        let facets: Vec<Vec<usize>> = (0..cones.len())
            .map(|i| {
                faces[i]
                    .iter()
                    .copied()
                    .filter(|&j| cones[j].dim() + 1 == cones[i].dim())
                    .collect()
            })
            .collect();
        let mut cofacets = vec![Vec::new(); cones.len()];
        for (i, fs) in facets.iter().enumerate() {
            for &j in fs {
                cofacets[j].push(i);
            }
        }
        let mut by_codim = vec![Vec::new(); rank + 1];
        for (i, c) in cones.iter().enumerate() {
            by_codim[c.codim()].push(i);
        }
        Fan {
            rank,
            cones,
            index,
            faces,
            facets,
            cofacets,
            by_codim,
            report,
        }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn cones(&self) -> &[Cone] {
        &self.cones
    }

    pub fn cone(&self, i: usize) -> &Cone {
        &self.cones[i]
    }

    pub fn len(&self) -> usize {
        self.cones.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cones.is_empty()
    }

    pub fn index_of(&self, cone: &Cone) -> Option<usize> {
        self.index.get(cone.rays()).copied()
    }

    pub fn index_of_rays(&self, rays: &[Ray]) -> Option<usize> {
        let mut key: ConeKey = rays.to_vec();
        key.sort();
        self.index.get(&key).copied()
    }

    /// Index of `cone`, or [`Error::ConeNotInFan`].
    pub fn require(&self, cone: &Cone) -> Result<usize> {
        if cone.ambient() != self.rank {
            return Err(Error::ConeNotInFan);
        }
        self.index_of(cone).ok_or(Error::ConeNotInFan)
    }

    pub fn zero_cone(&self) -> usize {
        0
    }

    /// `Δ^(k)`: indices of the cones of codimension `k`.
    pub fn codim(&self, k: usize) -> &[usize] {
        self.by_codim.get(k).map_or(&[], Vec::as_slice)
    }

    /// Counts `|Δ^(k)|` for `k = 0..=rank`.
    pub fn codim_counts(&self) -> Vec<usize> {
        self.by_codim.iter().map(Vec::len).collect()
    }

    pub fn maximal_cones(&self) -> &[usize] {
        self.codim(0)
    }

    /// Every face of cone `i`, including `i`.
    pub fn faces_of(&self, i: usize) -> &[usize] {
        &self.faces[i]
    }

    pub fn facets_of(&self, i: usize) -> &[usize] {
        &self.facets[i]
    }

    /// Cones having `i` as a facet.
    pub fn cofacets_of(&self, i: usize) -> &[usize] {
        &self.cofacets[i]
    }

    /// `τ ≤ σ` in the face order.
    pub fn is_face(&self, tau: usize, sigma: usize) -> bool {
        self.faces[sigma].binary_search(&tau).is_ok()
    }

    /// Cones having `i` as a face (the star of `i`), ascending.
    pub fn star_of(&self, i: usize) -> Vec<usize> {
        (0..self.cones.len()).filter(|&j| self.is_face(i, j)).collect()
    }

    pub fn validation_report(&self) -> &ValidationReport {
        &self.report
    }

    pub fn is_complete(&self) -> bool {
        self.report.is_complete()
    }

    pub fn require_complete(&self) -> Result<()> {
        if self.is_complete() {
            Ok(())
        } else {
            Err(Error::NotComplete)
        }
    }

    /// `ε(τ, σ)` for cone indices, with `τ` a facet of `σ`.
    pub fn incidence(&self, tau: usize, sigma: usize) -> Result<Sign> {
        incidence_sign(&self.cones[tau], &self.cones[sigma])
    }

    /// ℤ-basis of `σ^⊥ ∩ M` for a cone of the fan.
    pub fn orthogonal_lattice_basis(&self, sigma: &Cone) -> Result<IntMatrix> {
        let i = self.require(sigma)?;
        Ok(self.cones[i].orthogonal_lattice_basis())
    }

    /// All ray vectors of the fan, sorted.
    pub fn rays(&self) -> Vec<Ray> {
        self.codim(self.rank.saturating_sub(1))
            .iter()
            .filter(|&&i| self.cones[i].dim() == 1)
            .map(|&i| self.cones[i].rays()[0].clone())
            .collect()
    }

    /// The same fan with cone `i` carrying `orientation`.
    pub fn with_orientation(&self, i: usize, orientation: Sign) -> Fan {
        let mut out = self.clone();
        out.cones[i].set_orientation(orientation);
        out
    }

    /// Resets every cone to the default orientation.
    pub fn with_default_orientations(&self) -> Fan {
        let mut out = self.clone();
        for c in &mut out.cones {
            c.set_orientation(Sign::Positive);
        }
        out
    }

    /// Flips the orientation of each cone independently with probability 1/2.
    pub fn scrambled<R: Rng + ?Sized>(&self, rng: &mut R) -> Fan {
        let mut out = self.clone();
        for c in &mut out.cones {
            if rng.gen_bool(0.5) {
                let o = c.orientation().flipped();
                c.set_orientation(o);
            }
        }
        out
    }
}

/// Convenience for tests and builtins: rays from `i64` rows.
pub fn rays_from_i64(rows: &[Vec<i64>]) -> Vec<Ray> {
    rows.iter()
        .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p2() -> Fan {
        let rays = rays_from_i64(&[vec![1, 0], vec![0, 1], vec![-1, -1]]);
        Fan::from_max_cones(2, &rays, &[vec![0, 1], vec![1, 2], vec![2, 0]]).unwrap()
    }

    #[test]
    fn projective_plane_structure() {
        let fan = p2();
        assert!(fan.is_complete());
        assert_eq!(fan.codim_counts(), vec![3, 3, 1]);
        assert_eq!(fan.len(), 7);
        for &w in fan.codim(1) {
            assert_eq!(fan.cofacets_of(w).len(), 2);
        }
        assert_eq!(fan.codim(2), &[0]);
    }

    #[test]
    fn affine_plane_is_not_complete() {
        let rays = rays_from_i64(&[vec![1, 0], vec![0, 1]]);
        let fan = Fan::from_max_cones(2, &rays, &[vec![0, 1]]).unwrap();
        assert!(!fan.is_complete());
        assert!(matches!(fan.require_complete(), Err(Error::NotComplete)));
    }

    #[test]
    fn overlapping_max_cones_are_rejected() {
        let rays = rays_from_i64(&[vec![1, 0], vec![0, 1], vec![1, 1]]);
        let err = Fan::from_max_cones(2, &rays, &[vec![0, 1], vec![0, 2]]).unwrap_err();
        assert!(matches!(err, Error::InvalidFan(_)));
    }

    #[test]
    fn faces_of_faces_are_faces() {
        let fan = p2();
        for i in 0..fan.len() {
            for &j in fan.faces_of(i) {
                for &k in fan.faces_of(j) {
                    assert!(fan.is_face(k, i));
                }
            }
        }
    }
}
