//! The complex `Č_*(Δ, ℤ)`: free on the cones of codimension `k` in degree
//! `k`, with `d_k([τ]) = Σ_{σ ⊃ τ facet} ε(τ, σ) [σ]`.
//!
//! For a complete fan this complex resolves `ℤ` through the augmentation
//! `a(x) = Σ_{σ maximal} x_σ`; the fiber at a point of the orbit `T_σ` is
//! the subcomplex on the star of `σ`, isomorphic to the complex of `Δ_σ`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::{homology_at, FgAbGroup, IntMatrix};
use crate::polyhedral::{rays_to_i64, Fan};

/// Graded free ℤ-module with labeled bases and a degree −1 differential.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainComplex {
    labels: Vec<Vec<usize>>,
    /// `differentials[k] : C_k → C_{k-1}`; `differentials[0]` has no rows.
    differentials: Vec<IntMatrix>,
}

impl ChainComplex {
    /// Checks shapes and `d_{k-1} ∘ d_k = 0`.
    pub fn new(labels: Vec<Vec<usize>>, differentials: Vec<IntMatrix>) -> Result<ChainComplex> {
        if labels.len() != differentials.len() {
            return Err(Error::DimensionMismatch(
                "one differential per degree is required".into(),
            ));
        }
        for (k, d) in differentials.iter().enumerate() {
            let rows = if k == 0 { 0 } else { labels[k - 1].len() };
            if d.nrows() != rows || d.ncols() != labels[k].len() {
                return Err(Error::DimensionMismatch(format!(
                    "d_{k} is {}x{}, expected {rows}x{}",
                    d.nrows(),
                    d.ncols(),
                    labels[k].len()
                )));
            }
        }
        let cpx = ChainComplex { labels, differentials };
        for k in 2..cpx.differentials.len() {
            if !(&cpx.differentials[k - 1] * &cpx.differentials[k]).is_zero() {
                return Err(Error::CompositionNotZero {
                    context: format!("d_{} ∘ d_{k}", k - 1),
                });
            }
        }
        Ok(cpx)
    }

    /// Number of degrees (`0..len`).
    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self, k: usize) -> &[usize] {
        &self.labels[k]
    }

    pub fn rank(&self, k: usize) -> usize {
        self.labels.get(k).map_or(0, Vec::len)
    }

    pub fn ranks(&self) -> Vec<usize> {
        self.labels.iter().map(Vec::len).collect()
    }

    pub fn differential(&self, k: usize) -> &IntMatrix {
        &self.differentials[k]
    }

    /// `H_k` for every degree.
    pub fn homology(&self) -> Result<Vec<FgAbGroup>> {
        (0..self.len())
            .map(|k| {
                let d_in = match self.differentials.get(k + 1) {
                    Some(d) => d.clone(),
                    None => IntMatrix::zeros(self.rank(k), 0),
                };
                homology_at(&d_in, &self.differentials[k])
            })
            .collect()
    }

    /// `Σ (-1)^k rank C_k`.
    pub fn euler_characteristic(&self) -> i64 {
        self.ranks()
            .iter()
            .enumerate()
            .map(|(k, &r)| if k % 2 == 0 { r as i64 } else { -(r as i64) })
            .sum()
    }
}

/// Complex on the given cones of `fan`, degree `k` holding `degrees[k]`,
/// with incidence-sign entries.
fn complex_on(fan: &Fan, degrees: Vec<Vec<usize>>) -> Result<ChainComplex> {
    let mut differentials = Vec::with_capacity(degrees.len());
    differentials.push(IntMatrix::zeros(0, degrees.first().map_or(0, Vec::len)));
    for k in 1..degrees.len() {
        let (rows, cols) = (&degrees[k - 1], &degrees[k]);
        let mut d = IntMatrix::zeros(rows.len(), cols.len());
        for (j, &tau) in cols.iter().enumerate() {
            for &sigma in fan.cofacets_of(tau) {
                if let Some(i) = rows.iter().position(|&r| r == sigma) {
                    d.set(i, j, fan.incidence(tau, sigma)?.value().into());
                }
            }
        }
        differentials.push(d);
    }
    ChainComplex::new(degrees, differentials)
}

/// `Č_*(Δ, ℤ)` of a complete fan, degrees `0..=rank`.
pub fn build_cech_complex(fan: &Fan) -> Result<ChainComplex> {
    fan.require_complete()?;
    let degrees = (0..=fan.rank()).map(|k| fan.codim(k).to_vec()).collect();
    complex_on(fan, degrees)
}

/// The subcomplex spanned by the cones containing `sigma`, in degrees
/// `0..=codim σ`. Its matrices equal those of the complex of the quotient
/// fan under the cone bijection.
pub fn fiber_complex(fan: &Fan, sigma: &crate::polyhedral::Cone) -> Result<ChainComplex> {
    let s = fan.require(sigma)?;
    fiber_complex_at(fan, s)
}

pub fn fiber_complex_at(fan: &Fan, s: usize) -> Result<ChainComplex> {
    let codim = fan.cone(s).codim();
    let degrees = (0..=codim)
        .map(|k| fan.codim(k).iter().copied().filter(|&t| fan.is_face(s, t)).collect())
        .collect();
    complex_on(fan, degrees)
}

/// True iff `a ∘ d_1 = 0` and `a` induces `H_0(Č) ≅ ℤ`, where `a` sums the
/// coefficients of the maximal cones.
pub fn augmentation_check(cpx: &ChainComplex) -> bool {
    let n0 = cpx.rank(0);
    if n0 == 0 {
        return false;
    }
    let augmentation = IntMatrix::from_i64(1, n0, &vec![1; n0]);
    let d1 = match cpx.len() {
        0 | 1 => IntMatrix::zeros(n0, 0),
        _ => cpx.differential(1).clone(),
    };
    // The all-ones row is onto ℤ, so an isomorphism H_0 → ℤ is the same as
    // ker(a) = im(d_1).
    match homology_at(&d1, &augmentation) {
        Ok(h) => h.is_trivial(),
        Err(_) => false,
    }
}

/// `H_*(Č(Δ))` of a complete fan; fails with [`Error::ResolutionFailure`]
/// unless it is `(ℤ, 0, …, 0)`.
pub fn cech_homology(fan: &Fan) -> Result<Vec<FgAbGroup>> {
    let cpx = build_cech_complex(fan)?;
    let h = cpx.homology()?;
    check_point_homology(&h)?;
    Ok(h)
}

pub(crate) fn check_point_homology(h: &[FgAbGroup]) -> Result<()> {
    let ok = h.first().is_some_and(FgAbGroup::is_integers) && h[1..].iter().all(FgAbGroup::is_trivial);
    if ok {
        Ok(())
    } else {
        let shown: Vec<String> = h.iter().map(ToString::to_string).collect();
        Err(Error::ResolutionFailure(format!("homology is ({})", shown.join(", "))))
    }
}

/// JSON form of a complex built on a fan.
#[derive(Clone, Debug, Serialize)]
pub struct ComplexDocument {
    pub rank: usize,
    pub ranks: Vec<usize>,
    pub degrees: Vec<DegreeDocument>,
    pub homology: Vec<FgAbGroup>,
    pub augmentation_exact: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct DegreeDocument {
    pub degree: usize,
    pub rank: usize,
    /// Rays of the cone labeling each basis element.
    pub basis: Vec<Vec<Vec<i64>>>,
    /// `d_k` as row-major integer arrays (`rank(k-1)` rows).
    #[serde(serialize_with = "crate::serde_int::serialize_matrix")]
    pub differential: IntMatrix,
}

impl ComplexDocument {
    pub fn new(fan: &Fan, cpx: &ChainComplex) -> Result<ComplexDocument> {
        let degrees = (0..cpx.len())
            .map(|k| DegreeDocument {
                degree: k,
                rank: cpx.rank(k),
                basis: cpx.labels(k).iter().map(|&c| rays_to_i64(fan.cone(c).rays())).collect(),
                differential: cpx.differential(k).clone(),
            })
            .collect();
        Ok(ComplexDocument {
            rank: fan.rank(),
            ranks: cpx.ranks(),
            degrees,
            homology: cpx.homology()?,
            augmentation_exact: augmentation_check(cpx),
        })
    }
}
