use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::Serialize;

use super::Polynomial;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum DualityKind {
    Linear,
    Elliptic,
    Toric,
}

/// Duality dimension of an arrangement complement of corank `r` in an
/// `n`-dimensional ambient space: `n - r`, `n + r` or `n`.
///
/// The elliptic case needs a non-empty arrangement, so the number of
/// hypersurfaces is passed along.
pub fn duality_dimension(kind: DualityKind, n: usize, r: usize, hypersurfaces: usize) -> Result<usize> {
    if r > n {
        return Err(Error::InvalidCorank { n, r });
    }
    match kind {
        DualityKind::Linear => Ok(n - r),
        DualityKind::Elliptic if hypersurfaces == 0 => Err(Error::EmptyElliptic),
        DualityKind::Elliptic => Ok(n + r),
        DualityKind::Toric => Ok(n),
    }
}

/// Necessary conditions on the Betti numbers of an abelian duality space of
/// dimension `d`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DualityConstraints {
    pub dimension: usize,
    /// `b_i > 0` for `i <= d` and `b_i = 0` above.
    pub betti_positive: bool,
    pub b1_at_least_d: bool,
    /// `(-1)^d χ >= 0`
    pub signed_euler_ok: bool,
    #[serde(serialize_with = "crate::report::bigint_as_i64_or_string")]
    pub signed_euler: BigInt,
}

impl DualityConstraints {
    pub fn passes(&self) -> bool {
        self.betti_positive && self.b1_at_least_d && self.signed_euler_ok
    }
}

pub fn abelian_duality_constraints(poin: &Polynomial, d: usize) -> DualityConstraints {
    let betti_positive = (0..=d).all(|i| poin.coeff(i).is_positive())
        && poin.coeffs().iter().skip(d + 1).all(Zero::is_zero);
    let b1_at_least_d = poin.coeff(1) >= BigInt::from(d);
    let chi = poin.eval_i64(-1);
    let signed_euler = if d.is_multiple_of(2) { chi } else { -chi };
    DualityConstraints {
        dimension: d,
        betti_positive,
        b1_at_least_d,
        signed_euler_ok: !signed_euler.is_negative(),
        signed_euler,
    }
}
