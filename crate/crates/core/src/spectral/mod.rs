//! The first two pages of the fan spectral sequence
//!
//! ```text
//! E1^{r,s} = ⊕_{σ ∈ Δ^(s)} ∧^r(σ^⊥ ∩ M)  ⇒  H^{r+s}(X(Δ))
//! ```
//!
//! with `d1` the signed sum of the maps induced by `σ^⊥ ⊆ τ^⊥` for facets
//! `τ` of `σ`. The sequence degenerates rationally at `E2`, so ranks of
//! `E2` give rational morphic cohomology (admitting exterior degree
//! `r ≤ q` in weight `q`) and Betti numbers (no truncation). Torsion in
//! `E2` is reported but not interpreted.

mod page;
mod report;

pub use page::{
    build_d1, build_e1, compute_e2, weight_action_check, BettiTable, E1Page, E2Page, Mode, MorphicTable, D1,
};
pub use report::{E1Document, E2Document};

use crate::error::Result;
use crate::polyhedral::Fan;

/// `E1`, `d1` and `E2` of one fan.
#[derive(Clone, Debug)]
pub struct SpectralSequence {
    pub e1: E1Page,
    pub d1: D1,
    pub e2: E2Page,
}

impl SpectralSequence {
    pub fn compute(fan: &Fan, mode: Mode) -> Result<SpectralSequence> {
        let e1 = build_e1(fan, mode)?;
        let d1 = build_d1(fan, &e1)?;
        let e2 = compute_e2(&e1, &d1)?;
        Ok(SpectralSequence { e1, d1, e2 })
    }

    /// Weight cut-off defaults to the rank of the fan.
    pub fn morphic_table(&self, qmax: Option<usize>) -> MorphicTable {
        self.e2.morphic_table(qmax.unwrap_or(self.e1.rank()))
    }

    pub fn betti_table(&self) -> BettiTable {
        self.e2.betti_table()
    }

    pub fn weight_action_check(&self, m: i64) -> bool {
        weight_action_check(&self.e1, &self.d1, m)
    }
}

#[cfg(test)]
mod tests;
