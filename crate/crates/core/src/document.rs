//! The JSON fan document and the library of named fans.
//!
//! ```json
//! {"rank": 2, "rays": [[1,0],[0,1],[-1,-1]], "max_cones": [[0,1],[1,2],[2,0]]}
//! ```
//!
//! Only maximal cones are given; faces are always generated. Orientations
//! are not part of the format.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::primitive;
use crate::polyhedral::{rays_to_i64, Fan, Ray};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FanDocument {
    pub rank: usize,
    pub rays: Vec<Vec<i64>>,
    pub max_cones: Vec<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
}

/// Names accepted by [`builtin`]. `hirzebruch:a` takes any integer `a ≥ 0`
/// and `pK` any `K ≥ 1`.
pub const BUILTIN_NAMES: &[&str] = &["p1", "p2", "p3", "p1xp1", "hirzebruch:a", "wp112"];

impl FanDocument {
    pub fn from_json(text: &str) -> Result<FanDocument> {
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("document serializes")
    }

    /// Builds the fan, which may be incomplete. Schema-level problems
    /// (ragged or zero rays, duplicates, bad indices) are parse errors;
    /// cones that do not form a fan give [`Error::InvalidFan`].
    pub fn build(&self) -> Result<Fan> {
        let mut rays: Vec<Ray> = Vec::with_capacity(self.rays.len());
        let mut seen = BTreeSet::new();
        for (i, r) in self.rays.iter().enumerate() {
            if r.len() != self.rank {
                return Err(Error::Parse(format!(
                    "ray {i} has {} coordinates, rank is {}",
                    r.len(),
                    self.rank
                )));
            }
            let v: Ray = r.iter().map(|&x| BigInt::from(x)).collect();
            if v.iter().all(Zero::is_zero) {
                return Err(Error::Parse(format!("ray {i} is zero")));
            }
            let v = primitive(&v);
            if !seen.insert(v.clone()) {
                return Err(Error::Parse(format!("ray {i} duplicates an earlier ray")));
            }
            rays.push(v);
        }
        for (c, cone) in self.max_cones.iter().enumerate() {
            if let Some(&bad) = cone.iter().find(|&&i| i >= rays.len()) {
                return Err(Error::Parse(format!(
                    "max cone {c} refers to ray {bad}, but there are {} rays",
                    rays.len()
                )));
            }
        }
        Fan::from_max_cones(self.rank, &rays, &self.max_cones)
    }

    /// Builds the fan and requires it to be a valid complete fan.
    pub fn to_fan(&self) -> Result<Fan> {
        let fan = self.build()?;
        if !fan.is_complete() {
            return Err(Error::InvalidFan(fan.validation_report().clone()));
        }
        Ok(fan)
    }

    /// Canonical document of a fan: sorted rays, maximal cones in fan order.
    pub fn from_fan(fan: &Fan) -> FanDocument {
        let rays = fan.rays();
        let max_cones = fan
            .maximal_cones()
            .iter()
            .map(|&i| {
                fan.cone(i)
                    .rays()
                    .iter()
                    .map(|r| rays.binary_search(r).expect("ray of the fan"))
                    .collect()
            })
            .collect();
        FanDocument {
            rank: fan.rank(),
            rays: rays_to_i64(&rays),
            max_cones,
            name: None,
        }
    }
}

/// Parses a JSON fan document into a validated complete fan.
pub fn parse_fan(text: &str) -> Result<Fan> {
    FanDocument::from_json(text)?.to_fan()
}

/// The standard fan document of a named toric variety.
pub fn builtin(name: &str) -> Result<FanDocument> {
    let unknown = || Error::UnknownBuiltin(name.to_string());
    let (rank, rays, max_cones): (usize, Vec<Vec<i64>>, Vec<Vec<usize>>) = match name {
        "p1xp1" => (2, vec![vec![1, 0], vec![0, 1], vec![-1, 0], vec![0, -1]], cycle(4)),
        "wp112" => (2, vec![vec![1, 0], vec![0, 1], vec![-1, -2]], cycle(3)),
        _ if name.starts_with("hirzebruch:") => {
            let a: i64 = name["hirzebruch:".len()..].parse().map_err(|_| unknown())?;
            if a < 0 {
                return Err(unknown());
            }
            (2, vec![vec![1, 0], vec![0, 1], vec![-1, a], vec![0, -1]], cycle(4))
        }
        _ if name.starts_with('p') => {
            let k: usize = name[1..].parse().map_err(|_| unknown())?;
            if k == 0 {
                return Err(unknown());
            }
            projective_space(k)
        }
        _ => return Err(unknown()),
    };
    Ok(FanDocument {
        rank,
        rays,
        max_cones,
        name: Some(name.to_string()),
    })
}

/// Consecutive pairs around a polygon: the maximal cones of a complete
/// fan in the plane with rays listed by angle.
fn cycle(n: usize) -> Vec<Vec<usize>> {
    (0..n).map(|i| vec![i, (i + 1) % n]).collect()
}

/// `ℙ^k`: rays `e_1, …, e_k, -(e_1 + … + e_k)`, maximal cones all
/// `k`-subsets of the rays.
fn projective_space(k: usize) -> (usize, Vec<Vec<i64>>, Vec<Vec<usize>>) {
    let mut rays: Vec<Vec<i64>> = (0..k).map(|i| (0..k).map(|j| i64::from(i == j)).collect()).collect();
    rays.push(vec![-1; k]);
    let max_cones = (0..=k).map(|skip| (0..=k).filter(|&i| i != skip).collect()).collect();
    (k, rays, max_cones)
}
