use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::cone::{Cone, Ray, Sign};
use crate::error::{Error, Result};
use crate::linalg::{dot, IntMatrix};

/// `ε(τ, σ)`: compares the orientation that `σ` induces on its facet `τ`
/// with the orientation stored on `τ`.
///
/// The induced orientation puts an inward vector `w` (positive on the
/// supporting functional `u` with `τ = σ ∩ u^⊥`) in front of the oriented
/// basis of `τ`. Here `u` is the stored facet normal and `w` the sum of the
/// rays of `σ` off the facet.
pub fn incidence_sign(tau: &Cone, sigma: &Cone) -> Result<Sign> {
    check_facet(tau, sigma)?;
    let u = sigma
        .facet_normals()
        .iter()
        .find(|u| sigma.tight_rays(u) == tau.rays())
        .ok_or(Error::NotFacet { codim: 1 })?
        .clone();
    let mut w: Ray = vec![BigInt::zero(); sigma.ambient()];
    for r in sigma.rays() {
        if dot(&u, r).is_positive() {
            for (x, y) in w.iter_mut().zip(r) {
                *x += y;
            }
        }
    }
    incidence_sign_with(tau, sigma, &u, &w)
}

/// `ε(τ, σ)` computed from caller-supplied choices of the supporting
/// functional `u ∈ M` and the inward vector `w ∈ ℝσ ∩ N`. Both are
/// validated; the sign does not depend on which valid pair is used.
pub fn incidence_sign_with(tau: &Cone, sigma: &Cone, u: &Ray, w: &Ray) -> Result<Sign> {
    check_facet(tau, sigma)?;
    if u.len() != sigma.ambient() || w.len() != sigma.ambient() {
        return Err(Error::DimensionMismatch("u or w has the wrong length".into()));
    }
    if sigma.rays().iter().any(|r| dot(u, r).is_negative()) {
        return Err(Error::InvalidChoice("u is negative on a ray of σ".into()));
    }
    if sigma.tight_rays(u) != tau.rays() {
        return Err(Error::InvalidChoice("σ ∩ u^⊥ is not τ".into()));
    }
    if !dot(u, w).is_positive() {
        return Err(Error::InvalidChoice("⟨u, w⟩ is not positive".into()));
    }

    // Columns [w | basis of τ] in the basis of σ; the stored signs of both
    // cones are applied afterwards, which also covers the zero cone.
    let frame = IntMatrix::from_columns(sigma.ambient(), std::slice::from_ref(w)).hstack(tau.basis());
    let mut coords = Vec::with_capacity(frame.ncols());
    for col in frame.columns() {
        let x = crate::linalg::solve_in_basis(sigma.basis(), &col)
            .ok_or_else(|| Error::InvalidChoice("w does not lie in the span of σ".into()))?;
        coords.push(x);
    }
    let change = IntMatrix::from_columns(sigma.dim(), &coords);
    let sign = Sign::of(&change.determinant()).ok_or_else(|| Error::InvalidChoice("w lies in the span of τ".into()))?;
    Ok(sign * tau.orientation() * sigma.orientation())
}

fn check_facet(tau: &Cone, sigma: &Cone) -> Result<()> {
    let codim = sigma.dim() as isize - tau.dim() as isize;
    if codim != 1 || !sigma.face_keys().contains(&tau.key()) {
        return Err(Error::NotFacet { codim });
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn projective_line_signs() {
        let zero = Cone::zero(1);
        let plus = Cone::from_i64(1, &[&[1]]).unwrap();
        let minus = Cone::from_i64(1, &[&[-1]]).unwrap();
        assert_eq!(incidence_sign(&zero, &plus).unwrap(), Sign::Positive);
        assert_eq!(incidence_sign(&zero, &minus).unwrap(), Sign::Negative);
        let zero_flipped = zero.with_orientation(Sign::Negative);
        assert_eq!(incidence_sign(&zero_flipped, &plus).unwrap(), Sign::Negative);
    }

    #[test]
    fn flipping_sigma_flips_sign() {
        let tau = Cone::from_i64(2, &[&[1, 0]]).unwrap();
        let sigma = Cone::from_i64(2, &[&[1, 0], &[0, 1]]).unwrap();
        let e = incidence_sign(&tau, &sigma).unwrap();
        let flipped = sigma.clone().with_orientation(Sign::Negative);
        assert_eq!(incidence_sign(&tau, &flipped).unwrap(), e.flipped());
        let tau_flipped = tau.with_orientation(Sign::Negative);
        assert_eq!(incidence_sign(&tau_flipped, &sigma).unwrap(), e.flipped());
    }

    #[test]
    fn codimension_two_is_rejected() {
        let sigma = Cone::from_i64(2, &[&[1, 0], &[0, 1]]).unwrap();
        assert!(matches!(
            incidence_sign(&Cone::zero(2), &sigma),
            Err(Error::NotFacet { codim: 2 })
        ));
    }

    #[test]
    fn bad_choices_are_rejected() {
        let tau = Cone::from_i64(2, &[&[1, 0]]).unwrap();
        let sigma = Cone::from_i64(2, &[&[1, 0], &[0, 1]]).unwrap();
        let big = |v: &[i64]| -> Ray { v.iter().map(|&x| BigInt::from(x)).collect() };
        assert!(incidence_sign_with(&tau, &sigma, &big(&[1, 0]), &big(&[0, 1])).is_err());
        assert!(incidence_sign_with(&tau, &sigma, &big(&[0, 1]), &big(&[0, -1])).is_err());
        assert_eq!(
            incidence_sign_with(&tau, &sigma, &big(&[0, 3]), &big(&[-5, 2])).unwrap(),
            incidence_sign(&tau, &sigma).unwrap()
        );
    }
}
