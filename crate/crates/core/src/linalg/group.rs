use std::fmt;

use num_bigint::BigInt;
use num_traits::One;
use serde::Serialize;

/// Finitely generated abelian group `ℤ^rank ⊕ ⊕ ℤ/d_i` in invariant-factor
/// form: every `d_i ≥ 2` and `d_i | d_{i+1}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct FgAbGroup {
    pub rank: usize,
    #[serde(serialize_with = "crate::serde_int::serialize_vec")]
    pub torsion: Vec<BigInt>,
}

impl FgAbGroup {
    pub fn trivial() -> Self {
        Self::free(0)
    }

    pub fn free(rank: usize) -> Self {
        FgAbGroup {
            rank,
            torsion: Vec::new(),
        }
    }

    /// Builds the group from invariant factors; units are dropped.
    pub fn new(rank: usize, factors: impl IntoIterator<Item = BigInt>) -> Self {
        let torsion: Vec<BigInt> = factors.into_iter().filter(|d| !d.is_one()).collect();
        debug_assert!(torsion.windows(2).all(|w| (&w[1] % &w[0]) == BigInt::from(0)));
        FgAbGroup { rank, torsion }
    }

    pub fn is_trivial(&self) -> bool {
        self.rank == 0 && self.torsion.is_empty()
    }

    pub fn is_free(&self) -> bool {
        self.torsion.is_empty()
    }

    /// True iff the group is `ℤ`.
    pub fn is_integers(&self) -> bool {
        self.rank == 1 && self.torsion.is_empty()
    }
}

impl fmt::Display for FgAbGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return write!(f, "0");
        }
        let mut parts = Vec::new();
        match self.rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        for d in &self.torsion {
            parts.push(format!("Z/{d}"));
        }
        write!(f, "{}", parts.join(" + "))
    }
}
