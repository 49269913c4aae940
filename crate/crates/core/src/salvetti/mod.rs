//! Finite CW model of the complement of a complexified-real arrangement and
//! its cohomology with rank-1 coefficients over GF(p).

mod character;
mod cw;
mod faces;

pub use character::{betti_sweep, sweep_characters, torus_size, twisted_betti, Character, SweepMode, EXHAUSTIVE_BUDGET};
pub use cw::{build_cw_model, BoundaryEntry, CWModel, Cell};
pub use faces::{chamber_points, compose, conforms, enumerate_faces, enumerate_faces_bounded, Face, FaceBounds, FacePoset, SignVector};

use std::collections::BTreeSet;

use crate::arrangement::Arrangement;
use crate::error::Result;

/// Characters of the sweep with nonvanishing degree-`q` cohomology: the
/// GF(p)-points of the characteristic variety `V^q` seen by the sweep.
pub fn characteristic_variety(a: &Arrangement, prime: u64, q: usize, mode: SweepMode) -> Result<BTreeSet<Character>> {
    let model = build_cw_model(&enumerate_faces(a)?);
    let chars = sweep_characters(prime, a.len(), mode)?;
    let betti = betti_sweep(&model, &chars)?;
    Ok(chars
        .into_iter()
        .zip(betti)
        .filter(|(_, b)| b.get(q).is_some_and(|&v| v > 0))
        .map(|(c, _)| c)
        .collect())
}
