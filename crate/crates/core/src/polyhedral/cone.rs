use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::Serialize;

use super::dd::extreme_rays;
use crate::error::{Error, Result};
use crate::linalg::{dot, hnf_basis, kernel_basis, primitive, right_inverse, solve_in_basis, IntMatrix};

/// A lattice vector in `N ≅ ℤ^n` (or in the dual lattice `M`).
pub type Ray = Vec<BigInt>;

/// Canonical identity of a cone: its sorted primitive extremal rays.
pub type ConeKey = Vec<Ray>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Sign {
    Positive,
    Negative,
}

impl Sign {
    pub fn value(self) -> i64 {
        match self {
            Sign::Positive => 1,
            Sign::Negative => -1,
        }
    }

    pub fn flipped(self) -> Sign {
        match self {
            Sign::Positive => Sign::Negative,
            Sign::Negative => Sign::Positive,
        }
    }

    pub fn of(x: &BigInt) -> Option<Sign> {
        if x.is_positive() {
            Some(Sign::Positive)
        } else if x.is_negative() {
            Some(Sign::Negative)
        } else {
            None
        }
    }
}

impl std::ops::Mul for Sign {
    type Output = Sign;

    fn mul(self, rhs: Sign) -> Sign {
        if self == rhs {
            Sign::Positive
        } else {
            Sign::Negative
        }
    }
}

/// A strictly convex rational polyhedral cone with a chosen orientation.
///
/// The orientation is stored as a sign relative to `basis`, the Hermite
/// basis of the saturated lattice `ℝσ ∩ N`. For full-dimensional cones that
/// basis is the standard basis of `N`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cone {
    ambient: usize,
    rays: Vec<Ray>,
    basis: IntMatrix,
    orientation: Sign,
    facet_normals: Vec<Ray>,
}

impl Cone {
    /// The cone generated by `generators` inside `ℤ^ambient`.
    ///
    /// Generators are scaled to primitive vectors; redundant (non-extremal)
    /// generators are dropped.
    pub fn new(ambient: usize, generators: &[Ray]) -> Result<Cone> {
        let mut gens: Vec<Ray> = Vec::with_capacity(generators.len());
        for g in generators {
            if g.len() != ambient {
                return Err(Error::DimensionMismatch(format!(
                    "ray of length {} in a lattice of rank {ambient}",
                    g.len()
                )));
            }
            if g.iter().all(Zero::is_zero) {
                return Err(Error::ZeroRay);
            }
            gens.push(primitive(g));
        }
        gens.sort();
        gens.dedup();

        let basis = hnf_basis(&gens, ambient);
        let dim = basis.ncols();
        if dim == 0 {
            return Ok(Self::zero(ambient));
        }

        let coords: Vec<Ray> = gens
            .iter()
            .map(|g| solve_in_basis(&basis, g).expect("generator lies in its saturated span"))
            .collect();
        let normals = extreme_rays(&coords, dim);
        if normals.len() < dim || IntMatrix::from_rows(dim, &normals).rank() < dim {
            return Err(Error::NotStrictlyConvex);
        }

        let rays: Vec<Ray> = if dim == 1 {
            gens.clone()
        } else {
            gens.iter()
                .zip(&coords)
                .filter(|(_, x)| {
                    let tight: Vec<Ray> = normals.iter().filter(|u| dot(u, x).is_zero()).cloned().collect();
                    !tight.is_empty() && IntMatrix::from_rows(dim, &tight).rank() == dim - 1
                })
                .map(|(g, _)| g.clone())
                .collect()
        };

        // Lift the intrinsic normals to M through a section of basisᵀ.
        let section = right_inverse(&basis.transpose()).expect("basis of a saturated lattice is a primitive system");
        let mut facet_normals: Vec<Ray> = normals.iter().map(|u| section.mul_vec(u)).collect();
        facet_normals.sort();

        Ok(Cone {
            ambient,
            rays,
            basis,
            orientation: Sign::Positive,
            facet_normals,
        })
    }

    pub fn zero(ambient: usize) -> Cone {
        Cone {
            ambient,
            rays: Vec::new(),
            basis: IntMatrix::zeros(ambient, 0),
            orientation: Sign::Positive,
            facet_normals: Vec::new(),
        }
    }

    pub fn from_i64(ambient: usize, generators: &[&[i64]]) -> Result<Cone> {
        let gens: Vec<Ray> = generators
            .iter()
            .map(|g| g.iter().map(|&x| BigInt::from(x)).collect())
            .collect();
        Cone::new(ambient, &gens)
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.ncols()
    }

    pub fn codim(&self) -> usize {
        self.ambient - self.dim()
    }

    pub fn rays(&self) -> &[Ray] {
        &self.rays
    }

    pub fn key(&self) -> ConeKey {
        self.rays.clone()
    }

    /// Hermite basis of `ℝσ ∩ N`, as columns.
    pub fn basis(&self) -> &IntMatrix {
        &self.basis
    }

    pub fn orientation(&self) -> Sign {
        self.orientation
    }

    pub fn with_orientation(mut self, orientation: Sign) -> Cone {
        self.orientation = orientation;
        self
    }

    pub(crate) fn set_orientation(&mut self, orientation: Sign) {
        self.orientation = orientation;
    }

    /// The stored basis with its first vector negated when the orientation
    /// is negative. Empty for the zero cone, whose orientation is a bare sign.
    pub fn oriented_basis(&self) -> IntMatrix {
        let mut b = self.basis.clone();
        if self.orientation == Sign::Negative && b.ncols() > 0 {
            b.negate_col(0);
        }
        b
    }

    /// Primitive inward normals of the facets, lifted to `M`. They cut out
    /// the cone inside its span.
    pub fn facet_normals(&self) -> &[Ray] {
        &self.facet_normals
    }

    pub fn is_full_dimensional(&self) -> bool {
        self.dim() == self.ambient
    }

    pub fn contains_ray(&self, ray: &Ray) -> bool {
        self.rays.binary_search(ray).is_ok()
    }

    /// True when every ray of `other` is a ray of `self`. For cones of a
    /// fan this is the face relation.
    pub fn has_rays_of(&self, other: &Cone) -> bool {
        other.rays.iter().all(|r| self.contains_ray(r))
    }

    /// Rays of `self` on which `u` vanishes.
    pub fn tight_rays(&self, u: &Ray) -> Vec<Ray> {
        self.rays.iter().filter(|r| dot(u, r).is_zero()).cloned().collect()
    }

    /// Ray sets of all faces, `σ ∩ u^⊥` for `u` ranging over sums of facet
    /// normals, from `{0}` up to `σ` itself.
    pub fn face_keys(&self) -> BTreeSet<ConeKey> {
        let facet_sets: Vec<ConeKey> = self.facet_normals.iter().map(|u| self.tight_rays(u)).collect();
        // Every subset sum of normals cuts out the intersection of the
        // corresponding facets, so closing under intersection enumerates them.
        let mut faces: BTreeSet<ConeKey> = BTreeSet::new();
        let mut frontier = vec![self.rays.clone()];
        while let Some(face) = frontier.pop() {
            if !faces.insert(face.clone()) {
                continue;
            }
            for facet in &facet_sets {
                let meet: ConeKey = face.iter().filter(|r| facet.contains(r)).cloned().collect();
                if !faces.contains(&meet) {
                    frontier.push(meet);
                }
            }
        }
        faces
    }

    /// All faces, each in canonical form with the default orientation,
    /// sorted by dimension and then rays.
    pub fn faces(&self) -> Vec<Cone> {
        let mut out: Vec<Cone> = self
            .face_keys()
            .into_iter()
            .map(|rays| Cone::new(self.ambient, &rays).expect("faces of a cone are cones"))
            .collect();
        out.sort_by(|a, b| a.order_key().cmp(&b.order_key()));
        out
    }

    /// Total order on cones: dimension first, then sorted ray list.
    pub fn order_key(&self) -> (usize, &[Ray]) {
        (self.dim(), &self.rays)
    }

    /// ℤ-basis of `σ^⊥ ∩ M` (columns, Hermite form). Its rank is the
    /// codimension of the cone.
    pub fn orthogonal_lattice_basis(&self) -> IntMatrix {
        kernel_basis(&IntMatrix::from_rows(self.ambient, &self.rays))
    }

    /// Coordinates of a vector of `ℝσ ∩ N` in the stored basis.
    pub fn coordinates(&self, v: &Ray) -> Option<Vec<BigInt>> {
        solve_in_basis(&self.basis, v)
    }
}

/// Rays of a cone as `i64` rows, for display and serialization.
pub fn rays_to_i64(rays: &[Ray]) -> Vec<Vec<i64>> {
    use num_traits::ToPrimitive;
    rays.iter()
        .map(|r| r.iter().map(|x| x.to_i64().expect("coordinate fits in i64")).collect())
        .collect()
}
