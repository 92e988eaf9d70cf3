//! Exact computation of the fan spectral sequence of a complete toric
//! variety.
//!
//! Given a complete rational fan `Δ`, the crate builds the Čech-type
//! complex `Č_*(Δ, ℤ)` (free on cones graded by codimension, with signed
//! incidence differential), checks that it resolves `ℤ`, cross-checks it
//! against the flag complex `K(Δ)`, and assembles the first two pages of
//! the spectral sequence
//!
//! ```text
//! E1^{r,s} = ⊕_{σ ∈ Δ^(s)} ∧^r(σ^⊥ ∩ M)   ⇒   H^{r+s}(X(Δ))
//! ```
//!
//! from which rational morphic cohomology ranks and Betti numbers follow.
//! All arithmetic is over arbitrary-precision integers.
//!
//! ```
//! use toricseq_core::{builtin, spectral};
//!
//! let fan = builtin("p2").unwrap().to_fan().unwrap();
//! let ss = spectral::SpectralSequence::compute(&fan, spectral::Mode::Singular).unwrap();
//! assert_eq!(ss.betti_table().betti, vec![1, 0, 1, 0, 1]);
//! ```

pub mod cech;
pub mod cells;
pub mod document;
mod error;
pub mod linalg;
pub mod polyhedral;
pub mod random;
pub(crate) mod serde_int;
pub mod spectral;

pub use document::{builtin, parse_fan, FanDocument, BUILTIN_NAMES};
pub use error::{Error, Result};
pub use linalg::{FgAbGroup, IntMatrix};
pub use polyhedral::{Cone, Fan, Sign};
