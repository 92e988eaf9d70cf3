use super::cone::{Cone, Ray, Sign};
use super::fan::Fan;
use super::validate::validate_cones;
use crate::error::{Error, Result};
use crate::linalg::{right_inverse, IntMatrix};

/// The star fan `Δ_σ` in `N / (ℝσ ∩ N)`, together with the bijection to the
/// cones of `Δ` containing `σ`.
#[derive(Clone, Debug)]
pub struct QuotientFan {
    pub fan: Fan,
    /// `lift[i]` is the cone of the original fan projecting to cone `i`.
    pub lift: Vec<usize>,
    /// The projection `N → N/(ℝσ ∩ N) ≅ ℤ^codim σ`.
    pub projection: IntMatrix,
}

/// Projects the star of `sigma` to the quotient lattice.
///
/// The projection is `Kᵀ` for `K` the basis of `σ^⊥ ∩ M`; it is surjective
/// because that sublattice is saturated. Orientations are transported so
/// that `orientation(τ) = lift(orientation(τ̄)) ∧ orientation(σ)`; with this
/// order the incidence signs of `Δ_σ` equal those of the star of `σ` in `Δ`.
pub fn quotient_fan(fan: &Fan, sigma: &Cone) -> Result<QuotientFan> {
    let s = fan.require(sigma)?;
    quotient_fan_at(fan, s)
}

pub fn quotient_fan_at(fan: &Fan, s: usize) -> Result<QuotientFan> {
    let sigma = fan.cone(s);
    let rank = sigma.codim();
    let projection = sigma.orthogonal_lattice_basis().transpose();
    let section = right_inverse(&projection).expect("orthogonal lattice is saturated");

    let star = fan.star_of(s);
    let mut cones: Vec<(Cone, usize)> = Vec::with_capacity(star.len());
    for &t in &star {
        let tau = fan.cone(t);
        let gens: Vec<Ray> = tau
            .rays()
            .iter()
            .filter(|r| !sigma.contains_ray(r))
            .map(|r| projection.mul_vec(r))
            .collect();
        let mut image = Cone::new(rank, &gens)?;
        let orientation = transported_orientation(tau, sigma, &image, &section);
        image.set_orientation(orientation);
        cones.push((image, t));
    }

    let keys: Vec<Vec<Ray>> = cones.iter().map(|(c, _)| c.key()).collect();
    let report = validate_cones(rank, &keys);
    if !report.is_fan() {
        return Err(Error::InvalidFan(report));
    }
    let quotient = Fan::assemble(rank, cones.iter().map(|(c, _)| c.clone()).collect(), report);
    let mut lift = vec![0; quotient.len()];
    for (c, t) in &cones {
        let i = quotient.index_of(c).expect("cone was just inserted");
        lift[i] = *t;
    }
    Ok(QuotientFan {
        fan: quotient,
        lift,
        projection,
    })
}

/// Sign `ō` making `[S·B̄ | B_σ]` positively oriented against the oriented
/// basis of `τ`, where `B̄` is the stored basis of the image cone and `S` a
/// section of the projection. Lifts through `S` stay inside `ℝτ` because the
/// kernel of the projection is `ℝσ ⊆ ℝτ`.
fn transported_orientation(tau: &Cone, sigma: &Cone, image: &Cone, section: &IntMatrix) -> Sign {
    let lifted = section * image.basis();
    let frame = lifted.hstack(sigma.basis());
    let coords: Vec<Vec<_>> = frame
        .columns()
        .iter()
        .map(|c| crate::linalg::solve_in_basis(tau.basis(), c).expect("lift lies in the span of τ"))
        .collect();
    let det = IntMatrix::from_columns(tau.dim(), &coords).determinant();
    Sign::of(&det).expect("lifted frame is a basis") * sigma.orientation() * tau.orientation()
}
