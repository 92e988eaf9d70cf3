use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::{binomial, combinations, homology_at, solve_in_basis, wedge_power_matrix, FgAbGroup, IntMatrix};
use crate::polyhedral::Fan;

/// Which cohomology theory the tables are assembled for. Both share the
/// same `E1` and `E2`; only the weight truncation differs.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Morphic,
    Singular,
}

impl FromStr for Mode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Mode> {
        match s {
            "morphic" => Ok(Mode::Morphic),
            "singular" => Ok(Mode::Singular),
            _ => Err(Error::Parse(format!("unknown mode {s:?}"))),
        }
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Morphic => "morphic",
            Mode::Singular => "singular",
        })
    }
}

/// `E1^{r,s} = ⊕_{σ ∈ Δ^(s)} ∧^r(σ^⊥ ∩ M)`.
///
/// The basis of block `(r, s)` runs over the cones of `Δ^(s)` in fan
/// order, and within a cone over increasing `r`-tuples of the columns of
/// its stored `σ^⊥ ∩ M` basis.
#[derive(Clone, Debug)]
pub struct E1Page {
    mode: Mode,
    rank: usize,
    /// `cones[s]` = `Δ^(s)`.
    cones: Vec<Vec<usize>>,
    /// Basis of `σ^⊥ ∩ M` (`rank × codim σ`) for every cone of the fan.
    perp: Vec<IntMatrix>,
}

impl E1Page {
    pub fn mode(&self) -> Mode {
        self.mode
    }

    /// Rank of the lattice `N`.
    pub fn rank(&self) -> usize {
        self.rank
    }

    /// `Δ^(s)`.
    pub fn cones(&self, s: usize) -> &[usize] {
        self.cones.get(s).map_or(&[], Vec::as_slice)
    }

    pub fn perp_basis(&self, cone: usize) -> &IntMatrix {
        &self.perp[cone]
    }

    /// `rank E1^{r,s} = |Δ^(s)| · C(s, r)`.
    pub fn block_rank(&self, r: usize, s: usize) -> usize {
        self.cones(s).len() * binomial(s, r)
    }

    /// Basis labels of block `(r, s)`: a cone and an increasing tuple of
    /// positions in its `σ^⊥ ∩ M` basis.
    pub fn basis(&self, r: usize, s: usize) -> Vec<(usize, Vec<usize>)> {
        let tuples = combinations(s, r);
        self.cones(s)
            .iter()
            .flat_map(|&c| tuples.iter().map(move |t| (c, t.clone())))
            .collect()
    }

    /// Block ranks for `0 ≤ r ≤ s ≤ rank`.
    pub fn ranks(&self) -> BTreeMap<(usize, usize), usize> {
        self.support().map(|(r, s)| ((r, s), self.block_rank(r, s))).collect()
    }

    pub(crate) fn support(&self) -> impl Iterator<Item = (usize, usize)> {
        let n = self.rank;
        (0..=n).flat_map(move |s| (0..=s).map(move |r| (r, s)))
    }
}

/// The first page of a complete fan.
pub fn build_e1(fan: &Fan, mode: Mode) -> Result<E1Page> {
    fan.require_complete()?;
    Ok(E1Page {
        mode,
        rank: fan.rank(),
        cones: (0..=fan.rank()).map(|s| fan.codim(s).to_vec()).collect(),
        perp: fan.cones().iter().map(|c| c.orthogonal_lattice_basis()).collect(),
    })
}

/// The differential `d1^{r,s} : E1^{r,s} → E1^{r,s+1}` for every `r, s`.
#[derive(Clone, Debug)]
pub struct D1 {
    rank: usize,
    maps: BTreeMap<(usize, usize), IntMatrix>,
}

impl D1 {
    /// `d1^{r,s}`; maps leaving the support are zero of the right shape.
    pub fn map(&self, page: &E1Page, r: usize, s: usize) -> IntMatrix {
        match self.maps.get(&(r, s)) {
            Some(m) => m.clone(),
            None => IntMatrix::zeros(page.block_rank(r, s + 1), page.block_rank(r, s)),
        }
    }

    /// Map into `E1^{r,s}` (zero with no columns for `s = 0`).
    pub fn incoming(&self, page: &E1Page, r: usize, s: usize) -> IntMatrix {
        match s.checked_sub(1) {
            Some(p) => self.map(page, r, p),
            None => IntMatrix::zeros(page.block_rank(r, 0), 0),
        }
    }

    /// All zero maps on the same page.
    pub fn zero(page: &E1Page) -> D1 {
        D1 {
            rank: page.rank,
            maps: BTreeMap::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Checks `d1^{r,s+1} ∘ d1^{r,s} = 0` everywhere.
    pub fn check_square_zero(&self, page: &E1Page) -> Result<()> {
        for (r, s) in page.support() {
            if s + 2 > page.rank {
                continue;
            }
            if !(&self.map(page, r, s + 1) * &self.map(page, r, s)).is_zero() {
                return Err(Error::CompositionNotZero {
                    context: format!("d1^{{{r},{}}} ∘ d1^{{{r},{s}}}", s + 1),
                });
            }
        }
        Ok(())
    }
}

/// `X` with `K_σ = K_τ · X`, the inclusion `σ^⊥ ∩ M ⊆ τ^⊥ ∩ M` in stored
/// bases.
fn inclusion(k_tau: &IntMatrix, k_sigma: &IntMatrix) -> Result<IntMatrix> {
    let cols = k_sigma
        .columns()
        .iter()
        .map(|c| solve_in_basis(k_tau, c).ok_or(Error::NonIntegralInclusion))
        .collect::<Result<Vec<_>>>()?;
    Ok(IntMatrix::from_columns(k_tau.ncols(), &cols))
}

/// The block from `σ ∈ Δ^(s)` to each facet `τ ∈ Δ^(s+1)` is
/// `ε(τ, σ) · ∧^r(X_{τσ})`.
pub fn build_d1(fan: &Fan, page: &E1Page) -> Result<D1> {
    let n = page.rank;
    let mut maps = BTreeMap::new();
    for s in 0..n {
        let (sources, targets) = (page.cones(s), page.cones(s + 1));
        let target_pos: BTreeMap<usize, usize> = targets.iter().enumerate().map(|(i, &t)| (t, i)).collect();
        // Inclusions and signs do not depend on r.
        let mut pieces = Vec::new();
        for (j, &sigma) in sources.iter().enumerate() {
            for &tau in fan.facets_of(sigma) {
                let i = target_pos[&tau];
                let x = inclusion(&page.perp[tau], &page.perp[sigma])?;
                let sign = fan.incidence(tau, sigma)?;
                pieces.push((i, j, x, sign));
            }
        }
        for r in 0..=s {
            let (src_w, tgt_w) = (binomial(s, r), binomial(s + 1, r));
            let mut d = IntMatrix::zeros(targets.len() * tgt_w, sources.len() * src_w);
            for (i, j, x, sign) in &pieces {
                let block = wedge_power_matrix(x, r);
                for a in 0..tgt_w {
                    for b in 0..src_w {
                        let v = block.get(a, b);
                        let v = if sign.value() < 0 { -v } else { v.clone() };
                        d.set(i * tgt_w + a, j * src_w + b, v);
                    }
                }
            }
            maps.insert((r, s), d);
        }
    }
    let d1 = D1 { rank: n, maps };
    d1.check_square_zero(page)?;
    Ok(d1)
}

/// `E2^{r,s}` for `0 ≤ r ≤ s ≤ rank`, integral with torsion.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct E2Page {
    rank: usize,
    groups: BTreeMap<(usize, usize), FgAbGroup>,
}

impl E2Page {
    pub fn rank(&self) -> usize {
        self.rank
    }

    /// `E2^{r,s}`; trivial outside the support.
    pub fn group(&self, r: usize, s: usize) -> FgAbGroup {
        self.groups.get(&(r, s)).cloned().unwrap_or_else(FgAbGroup::trivial)
    }

    pub fn groups(&self) -> &BTreeMap<(usize, usize), FgAbGroup> {
        &self.groups
    }

    /// Free ranks `rank E2^{r,s}` indexed `[r][s]`.
    pub fn rank_grid(&self) -> Vec<Vec<usize>> {
        (0..=self.rank)
            .map(|r| (0..=self.rank).map(|s| self.group(r, s).rank).collect())
            .collect()
    }

    /// Rank of the page in total degree `n = r + s`, admitting only `r ≤ q`.
    fn total_rank(&self, n: usize, qmax: usize) -> usize {
        (0..=n.min(qmax))
            .filter(|&r| n - r <= self.rank)
            .map(|r| self.group(r, n - r).rank)
            .sum()
    }

    /// Ranks of `L^q H^n(X)_ℚ` for `0 ≤ q ≤ qmax`, `0 ≤ n ≤ 2·rank`.
    pub fn morphic_table(&self, qmax: usize) -> MorphicTable {
        let ranks = (0..=qmax)
            .map(|q| (0..=2 * self.rank).map(|n| self.total_rank(n, q)).collect())
            .collect();
        MorphicTable { qmax, ranks }
    }

    /// Rational Betti numbers `b_0, …, b_{2·rank}` and their alternating sum.
    pub fn betti_table(&self) -> BettiTable {
        let betti: Vec<usize> = (0..=2 * self.rank).map(|n| self.total_rank(n, n)).collect();
        let euler = betti
            .iter()
            .enumerate()
            .map(|(n, &b)| if n % 2 == 0 { b as i64 } else { -(b as i64) })
            .sum();
        BettiTable { betti, euler }
    }
}

/// `E2^{r,s} = ker d1^{r,s} / im d1^{r,s-1}`.
pub fn compute_e2(page: &E1Page, d1: &D1) -> Result<E2Page> {
    let groups = page
        .support()
        .map(|(r, s)| {
            let h = homology_at(&d1.incoming(page, r, s), &d1.map(page, r, s))?;
            Ok(((r, s), h))
        })
        .collect::<Result<_>>()?;
    Ok(E2Page {
        rank: page.rank,
        groups,
    })
}

/// `ranks[q][n] = rank L^q H^n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MorphicTable {
    pub qmax: usize,
    pub ranks: Vec<Vec<usize>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BettiTable {
    pub betti: Vec<usize>,
    pub euler: i64,
}

/// Checks the action of multiplication by `m` on the tori: it acts on
/// `∧^r(σ^⊥ ∩ M)` by `∧^r(m·I) = m^r·I` and commutes with `d1`.
pub fn weight_action_check(page: &E1Page, d1: &D1, m: i64) -> bool {
    let m = BigInt::from(m);
    let action = |r: usize, s: usize| -> Option<IntMatrix> {
        let local = wedge_power_matrix(&IntMatrix::scalar(s, &m), r);
        let expected = IntMatrix::scalar(binomial(s, r), &m.pow(r as u32));
        if local != expected {
            return None;
        }
        let w = binomial(s, r);
        let count = page.cones(s).len();
        let mut a = IntMatrix::zeros(count * w, count * w);
        for c in 0..count {
            for i in 0..w {
                for j in 0..w {
                    a.set(c * w + i, c * w + j, local.get(i, j).clone());
                }
            }
        }
        Some(a)
    };
    for (r, s) in page.support() {
        let Some(here) = action(r, s) else {
            return false;
        };
        if s + 1 > page.rank {
            continue;
        }
        let Some(there) = action(r, s + 1) else {
            return false;
        };
        let d = d1.map(page, r, s);
        if &d * &here != &there * &d {
            return false;
        }
    }
    true
}
