//! Exact integer linear algebra.
//!
//! Everything here works over arbitrary-precision integers: Smith and
//! Hermite normal forms, integral kernels, saturation, exterior powers and
//! homology of complexes of free ℤ-modules.

mod exterior;
mod group;
mod homology;
mod lattice;
mod matrix;
mod snf;

pub use exterior::{binomial, combinations, wedge_power_matrix};
pub use group::FgAbGroup;
pub use homology::homology_at;
pub use lattice::{hnf_basis, hnf_rows, is_saturated, kernel_basis, right_inverse, solve_in_basis};
pub use matrix::{dot, is_primitive, pivot_rows, primitive, IntMatrix};
pub use snf::{invariant_factors, smith_normal_form, SmithForm};
