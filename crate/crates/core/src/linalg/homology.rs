use num_traits::One;

use super::group::FgAbGroup;
use super::matrix::IntMatrix;
use super::snf::invariant_factors;
use crate::error::{Error, Result};

/// `ker(d_out) / im(d_in)` for free modules `ℤ^a --d_in--> ℤ^m --d_out--> ℤ^b`.
///
/// The free rank is `m - rank d_out - rank d_in`; the torsion is read off
/// the invariant factors of `d_in` (the quotient `ℤ^m / ker d_out` is free,
/// so all torsion of the cokernel of `d_in` lives in the homology).
pub fn homology_at(d_in: &IntMatrix, d_out: &IntMatrix) -> Result<FgAbGroup> {
    let m = d_in.nrows();
    if d_out.ncols() != m {
        return Err(Error::DimensionMismatch(format!(
            "incoming map has {} rows but outgoing map has {} columns",
            m,
            d_out.ncols()
        )));
    }
    if !(d_out * d_in).is_zero() {
        return Err(Error::CompositionNotZero {
            context: format!("{}x{} after {}x{}", d_out.nrows(), d_out.ncols(), m, d_in.ncols()),
        });
    }
    let factors = invariant_factors(d_in);
    let rank_out = d_out.rank();
    let rank = m - rank_out - factors.len();
    Ok(FgAbGroup::new(rank, factors.into_iter().filter(|d| !d.is_one())))
}

#[cfg(test)]
mod tests {
    use num_bigint::BigInt;

    use super::*;

    #[test]
    fn zero_maps() {
        let h = homology_at(&IntMatrix::zeros(3, 0), &IntMatrix::zeros(0, 3)).unwrap();
        assert_eq!(h, FgAbGroup::free(3));
    }

    #[test]
    fn multiplication_by_two() {
        let h = homology_at(&IntMatrix::from_i64(1, 1, &[2]), &IntMatrix::zeros(0, 1)).unwrap();
        assert_eq!(h, FgAbGroup::new(0, [BigInt::from(2)]));
    }

    #[test]
    fn projective_line_degree_zero() {
        // Two maximal cones, one zero cone, d1 = (1, -1)^T.
        let d1 = IntMatrix::from_i64(2, 1, &[1, -1]);
        let h = homology_at(&d1, &IntMatrix::zeros(0, 2)).unwrap();
        assert_eq!(h, FgAbGroup::free(1));
    }

    #[test]
    fn composition_checked() {
        let d_in = IntMatrix::from_i64(1, 1, &[1]);
        let d_out = IntMatrix::from_i64(1, 1, &[1]);
        assert!(matches!(
            homology_at(&d_in, &d_out),
            Err(Error::CompositionNotZero { .. })
        ));
    }
}
