//! The flag complex `K(Δ)` and the dual-cell subcomplexes, used as an
//! independent check on the Čech complex.
//!
//! Everything here is purely combinatorial: a `k`-simplex of `K(Δ)` is a
//! chain `τ_0 < τ_1 < … < τ_k` of cones, and the dual cell of `σ` is the
//! full subcomplex on chains whose minimum contains `σ`.

use std::collections::{BTreeSet, HashMap};

use serde::Serialize;

use crate::cech::{build_cech_complex, ChainComplex};
use crate::error::Result;
use crate::linalg::{homology_at, FgAbGroup, IntMatrix};
use crate::polyhedral::{quotient_fan_at, rays_to_i64, Fan};

/// Finite abstract simplicial complex on labeled vertices.
///
/// Simplices are stored as strictly increasing label lists, grouped by
/// dimension and sorted lexicographically; that order fixes the boundary
/// matrices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialComplex {
    vertices: Vec<usize>,
    simplices: Vec<Vec<Vec<usize>>>,
}

impl SimplicialComplex {
    /// The downward closure of `maximal`.
    pub fn from_maximal_simplices(maximal: &[Vec<usize>]) -> SimplicialComplex {
        let mut all: BTreeSet<Vec<usize>> = BTreeSet::new();
        for s in maximal {
            let mut s = s.clone();
            s.sort_unstable();
            s.dedup();
            let k = s.len();
            for mask in 1u64..(1u64 << k) {
                let face = (0..k).filter(|i| mask >> i & 1 == 1).map(|i| s[i]).collect();
                all.insert(face);
            }
        }
        Self::from_closed(all)
    }

    fn from_closed(all: BTreeSet<Vec<usize>>) -> SimplicialComplex {
        let top = all.iter().map(Vec::len).max().unwrap_or(0);
        let mut simplices = vec![Vec::new(); top];
        for s in all {
            simplices[s.len() - 1].push(s);
        }
        for level in &mut simplices {
            level.sort();
        }
        let vertices = simplices
            .first()
            .map_or(Vec::new(), |v| v.iter().map(|s| s[0]).collect());
        SimplicialComplex { vertices, simplices }
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    /// The `k`-simplices.
    pub fn simplices(&self, k: usize) -> &[Vec<usize>] {
        self.simplices.get(k).map_or(&[], Vec::as_slice)
    }

    /// Dimension, or `None` for the empty complex.
    pub fn dim(&self) -> Option<usize> {
        self.simplices.len().checked_sub(1)
    }

    /// `f_k` = number of `k`-simplices.
    pub fn f_vector(&self) -> Vec<usize> {
        self.simplices.iter().map(Vec::len).collect()
    }

    pub fn euler_characteristic(&self) -> i64 {
        alternating_sum(&self.f_vector())
    }

    /// Image of the complex under a relabeling of vertices.
    pub fn relabeled(&self, map: impl Fn(usize) -> usize) -> SimplicialComplex {
        let all = self
            .simplices
            .iter()
            .flatten()
            .map(|s| {
                let mut t: Vec<usize> = s.iter().map(|&v| map(v)).collect();
                t.sort_unstable();
                t
            })
            .collect();
        Self::from_closed(all)
    }

    /// `∂_k : C_k → C_{k-1}` with `∂[v_0 … v_k] = Σ (-1)^i [… v̂_i …]`;
    /// `∂_0` is the augmentation to `ℤ`.
    pub fn boundary(&self, k: usize) -> IntMatrix {
        let cols = self.simplices(k);
        if k == 0 {
            return IntMatrix::from_i64(1, cols.len(), &vec![1; cols.len()]);
        }
        let rows = self.simplices(k - 1);
        let index: HashMap<&[usize], usize> = rows.iter().enumerate().map(|(i, s)| (s.as_slice(), i)).collect();
        let mut d = IntMatrix::zeros(rows.len(), cols.len());
        for (j, s) in cols.iter().enumerate() {
            for i in 0..s.len() {
                let mut face = s.clone();
                face.remove(i);
                let row = index[face.as_slice()];
                d.set(row, j, if i % 2 == 0 { 1 } else { -1 }.into());
            }
        }
        d
    }
}

fn alternating_sum(counts: &[usize]) -> i64 {
    counts
        .iter()
        .enumerate()
        .map(|(k, &c)| if k % 2 == 0 { c as i64 } else { -(c as i64) })
        .sum()
}

/// Reduced homology `H̃_k(K; ℤ)` for `k = 0..=dim K`.
pub fn simplicial_homology(k: &SimplicialComplex) -> Vec<FgAbGroup> {
    let Some(top) = k.dim() else {
        return Vec::new();
    };
    (0..=top)
        .map(|d| {
            let d_in = if d < top {
                k.boundary(d + 1)
            } else {
                IntMatrix::zeros(k.simplices(d).len(), 0)
            };
            homology_at(&d_in, &k.boundary(d)).expect("simplicial boundary squares to zero")
        })
        .collect()
}

/// Chains of cones, all of whose members contain cone `base`.
fn chains_above(fan: &Fan, base: usize) -> SimplicialComplex {
    let star = fan.star_of(base);
    let mut all = BTreeSet::new();
    let mut stack: Vec<Vec<usize>> = star.iter().map(|&c| vec![c]).collect();
    while let Some(chain) = stack.pop() {
        let last = *chain.last().expect("chains are nonempty");
        for &next in &star {
            if next != last && fan.is_face(last, next) {
                let mut longer = chain.clone();
                longer.push(next);
                stack.push(longer);
            }
        }
        all.insert(chain);
    }
    SimplicialComplex::from_closed(all)
}

/// `K(Δ)`: vertices are the cones (in fan order, the zero cone included),
/// simplices are strictly increasing chains.
pub fn flag_complex(fan: &Fan) -> SimplicialComplex {
    chains_above(fan, fan.zero_cone())
}

/// The dual cell of `sigma` as the full subcomplex of `K(Δ)` on the
/// cones containing `sigma`.
pub fn dual_cell_subcomplex(fan: &Fan, sigma: &crate::polyhedral::Cone) -> Result<SimplicialComplex> {
    let s = fan.require(sigma)?;
    Ok(chains_above(fan, s))
}

/// `true` iff `dual_cell_subcomplex(fan, σ)` is the image of
/// `flag_complex(Δ_σ)` under the cone bijection of the quotient fan.
pub fn dual_cell_matches_quotient(fan: &Fan, s: usize) -> Result<bool> {
    let q = quotient_fan_at(fan, s)?;
    let image = flag_complex(&q.fan).relabeled(|v| q.lift[v]);
    Ok(image == chains_above(fan, s))
}

#[derive(Clone, Debug, Serialize)]
pub struct DualCellCheck {
    pub cone: Vec<Vec<i64>>,
    pub codim: usize,
    pub cell_dim: usize,
    pub isomorphic_to_quotient: bool,
    pub contractible: bool,
}

/// Summary of the combinatorial cross-checks for one fan.
#[derive(Clone, Debug, Serialize)]
pub struct OracleReport {
    pub flag_f_vector: Vec<usize>,
    pub flag_euler: i64,
    pub flag_reduced_homology: Vec<FgAbGroup>,
    pub flag_contractible: bool,
    pub dual_cells: Vec<DualCellCheck>,
    /// `|Δ^(k)|`.
    pub cone_counts: Vec<usize>,
    /// Number of dual cells of dimension `k`.
    pub dual_cell_counts: Vec<usize>,
    pub cech_ranks: Vec<usize>,
    pub ranks_agree: bool,
    pub cech_homology: Vec<FgAbGroup>,
    pub homology_agrees: bool,
    pub failures: Vec<String>,
    pub passed: bool,
}

/// Runs every check; the fan must be complete.
pub fn oracle_report(fan: &Fan) -> Result<OracleReport> {
    let cech: ChainComplex = build_cech_complex(fan)?;
    let flag = flag_complex(fan);
    let flag_reduced_homology = simplicial_homology(&flag);
    let flag_contractible = flag_reduced_homology.iter().all(FgAbGroup::is_trivial);

    let mut failures = Vec::new();
    if !flag_contractible {
        failures.push("flag complex has nonzero reduced homology".to_string());
    }
    if flag.euler_characteristic() != 1 {
        failures.push(format!(
            "flag complex has Euler characteristic {}",
            flag.euler_characteristic()
        ));
    }

    let mut dual_cells = Vec::with_capacity(fan.len());
    let mut dual_cell_counts = vec![0; fan.rank() + 1];
    for s in 0..fan.len() {
        let cell = chains_above(fan, s);
        let cell_dim = cell.dim().unwrap_or(0);
        dual_cell_counts[cell_dim] += 1;
        let check = DualCellCheck {
            cone: rays_to_i64(fan.cone(s).rays()),
            codim: fan.cone(s).codim(),
            cell_dim,
            isomorphic_to_quotient: dual_cell_matches_quotient(fan, s)?,
            contractible: simplicial_homology(&cell).iter().all(FgAbGroup::is_trivial),
        };
        if !check.isomorphic_to_quotient {
            failures.push(format!(
                "dual cell of {:?} differs from the quotient flag complex",
                check.cone
            ));
        }
        if !check.contractible {
            failures.push(format!("dual cell of {:?} is not acyclic", check.cone));
        }
        dual_cells.push(check);
    }

    let cone_counts = fan.codim_counts();
    let cech_ranks = cech.ranks();
    let ranks_agree = cech_ranks == cone_counts && dual_cell_counts == cone_counts;
    if !ranks_agree {
        failures.push(format!(
            "ranks differ: cech {cech_ranks:?}, cones {cone_counts:?}, dual cells {dual_cell_counts:?}"
        ));
    }

    let cech_homology = cech.homology()?;
    let cech_point = crate::cech::check_point_homology(&cech_homology).is_ok();
    let homology_agrees = cech_point && flag_contractible;
    if !cech_point {
        failures.push("Čech complex does not have the homology of a point".to_string());
    }

    Ok(OracleReport {
        flag_f_vector: flag.f_vector(),
        flag_euler: flag.euler_characteristic(),
        flag_reduced_homology,
        flag_contractible,
        dual_cells,
        cone_counts,
        dual_cell_counts,
        cech_ranks,
        ranks_agree,
        cech_homology,
        homology_agrees,
        passed: failures.is_empty(),
        failures,
    })
}
