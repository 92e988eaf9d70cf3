use num_bigint::BigInt;
use serde::Serialize;

use super::page::{E1Page, E2Page, Mode, D1};
use crate::linalg::IntMatrix;

#[derive(Clone, Debug, Serialize)]
pub struct E1Block {
    pub r: usize,
    pub s: usize,
    pub rank: usize,
    /// Number of cones contributing a summand.
    pub summands: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct D1Block {
    pub r: usize,
    pub s: usize,
    pub rows: usize,
    pub cols: usize,
    #[serde(serialize_with = "crate::serde_int::serialize_matrix")]
    pub matrix: IntMatrix,
}

/// JSON form of `E1` with its differential.
#[derive(Clone, Debug, Serialize)]
pub struct E1Document {
    pub mode: Mode,
    pub rank: usize,
    pub blocks: Vec<E1Block>,
    pub d1: Vec<D1Block>,
}

impl E1Document {
    pub fn new(page: &E1Page, d1: &D1) -> E1Document {
        let blocks = page
            .support()
            .map(|(r, s)| E1Block {
                r,
                s,
                rank: page.block_rank(r, s),
                summands: page.cones(s).len(),
            })
            .collect();
        let d1 = page
            .support()
            .filter(|&(_, s)| s < page.rank())
            .map(|(r, s)| {
                let matrix = d1.map(page, r, s);
                D1Block {
                    r,
                    s,
                    rows: matrix.nrows(),
                    cols: matrix.ncols(),
                    matrix,
                }
            })
            .collect();
        E1Document {
            mode: page.mode(),
            rank: page.rank(),
            blocks,
            d1,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct E2Block {
    pub r: usize,
    pub s: usize,
    pub rank: usize,
    #[serde(serialize_with = "crate::serde_int::serialize_vec")]
    pub torsion: Vec<BigInt>,
}

/// JSON form of `E2`.
#[derive(Clone, Debug, Serialize)]
pub struct E2Document {
    pub mode: Mode,
    pub rank: usize,
    pub blocks: Vec<E2Block>,
}

impl E2Document {
    pub fn new(mode: Mode, page: &E2Page) -> E2Document {
        let blocks = page
            .groups()
            .iter()
            .map(|(&(r, s), g)| E2Block {
                r,
                s,
                rank: g.rank,
                torsion: g.torsion.clone(),
            })
            .collect();
        E2Document {
            mode,
            rank: page.rank(),
            blocks,
        }
    }
}
