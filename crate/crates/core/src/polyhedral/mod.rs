//! Cones, fans, face lattices, orientations and incidence signs.
//!
//! Conventions fixed here and relied on downstream:
//!
//! * a cone is identified by its sorted list of primitive extremal rays;
//! * cones of a fan are ordered by `(dimension, rays)`;
//! * every cone is oriented by the Hermite basis of its saturated span,
//!   up to a stored sign (default `+`); maximal cones therefore carry the
//!   standard orientation of `N_ℝ`, and the zero cone carries `+`.

mod cone;
mod dd;
mod fan;
mod incidence;
mod quotient;
mod validate;

pub use cone::{rays_to_i64, Cone, ConeKey, Ray, Sign};
pub use dd::extreme_rays;
pub use fan::{rays_from_i64, Fan};
pub use incidence::{incidence_sign, incidence_sign_with};
pub use quotient::{quotient_fan, quotient_fan_at, QuotientFan};
pub use validate::{validate_cones, ValidationReport, Violation};

/// Facet normals of the cone generated by `rays` (see [`Cone::facet_normals`]).
pub fn dual_description(ambient: usize, rays: &[Ray]) -> crate::Result<Vec<Ray>> {
    Ok(Cone::new(ambient, rays)?.facet_normals().to_vec())
}

/// All faces of `sigma`, from the zero cone up to `sigma` itself.
pub fn faces(sigma: &Cone) -> Vec<Cone> {
    sigma.faces()
}
