//! Named arrangements used by the examples, the tests and the CLI docs.

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::arrangement::{Arrangement, Hyperplane};
use crate::toric::{ToricArrangement, ToricHypersurface};

pub struct CorpusEntry {
    pub name: &'static str,
    pub arrangement: Arrangement,
}

/// Coordinate hyperplanes `x_i = 0` in `n` dimensions.
pub fn boolean(n: usize) -> Arrangement {
    let hs = (0..n)
        .map(|i| {
            let normal = (0..n).map(|j| if i == j { BigRational::one() } else { BigRational::zero() }).collect();
            Hyperplane::new(normal, BigRational::zero())
        })
        .collect();
    Arrangement::new(n, hs).expect("distinct coordinate hyperplanes")
}

/// `x = 0, y = 0, x + y = 1`.
pub fn generic3() -> Arrangement {
    Arrangement::from_i64(2, &[&[1, 0, 0], &[0, 1, 0], &[1, 1, 1]]).unwrap()
}

/// `k` lines `x + i·y = i²`, no two parallel and no three concurrent.
pub fn generic_lines(k: usize) -> Arrangement {
    let rows: Vec<Vec<i64>> = (0..k as i64).map(|i| vec![1, i, i * i]).collect();
    let refs: Vec<&[i64]> = rows.iter().map(|r| r.as_slice()).collect();
    Arrangement::from_i64(2, &refs).unwrap()
}

/// `x = 0, y = 0, x = y`.
pub fn concurrent3() -> Arrangement {
    Arrangement::from_i64(2, &[&[1, 0, 0], &[0, 1, 0], &[1, -1, 0]]).unwrap()
}

/// `x = 0, x = 1, y = 0`.
pub fn parallels_transversal() -> Arrangement {
    Arrangement::from_i64(2, &[&[1, 0, 0], &[1, 0, 1], &[0, 1, 0]]).unwrap()
}

/// `d` points `x = 0, 1, ..., d-1` on the line.
pub fn points_on_line(d: usize) -> Arrangement {
    let rows: Vec<Vec<i64>> = (0..d as i64).map(|i| vec![1, i]).collect();
    let refs: Vec<&[i64]> = rows.iter().map(|r| r.as_slice()).collect();
    Arrangement::from_i64(1, &refs).unwrap()
}

/// Braid arrangement `x_i = x_j` in `n` dimensions (central, corank 1).
pub fn braid(n: usize) -> Arrangement {
    let mut hs = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let mut normal = vec![BigRational::zero(); n];
            normal[i] = BigRational::one();
            normal[j] = -BigRational::one();
            hs.push(Hyperplane::new(normal, BigRational::zero()));
        }
    }
    Arrangement::new(n, hs).unwrap()
}

/// Braid arrangement on 4 coordinates deconed at `x_1 = x_2`: 5 affine
/// planes in 3 dimensions, corank 1.
pub fn deconed_braid() -> Arrangement {
    braid(4).decone(0).unwrap()
}

/// Essential braid arrangement of rank 3:
/// `x, y, z, x - y, x - z, y - z` in 3 dimensions.
pub fn braid_essential3() -> Arrangement {
    Arrangement::from_i64(
        3,
        &[&[1, 0, 0, 0], &[0, 1, 0, 0], &[0, 0, 1, 0], &[1, -1, 0, 0], &[1, 0, -1, 0], &[0, 1, -1, 0]],
    )
    .unwrap()
}

/// Coordinate planes plus `x + y + z = 1`.
pub fn simplex3() -> Arrangement {
    Arrangement::from_i64(3, &[&[1, 0, 0, 0], &[0, 1, 0, 0], &[0, 0, 1, 0], &[1, 1, 1, 1]]).unwrap()
}

/// Near pencil in the plane: three lines through the origin and one more,
/// 4 lines with one triple point.
pub fn near_pencil4() -> Arrangement {
    Arrangement::from_i64(2, &[&[1, 0, 0], &[0, 1, 0], &[1, -1, 0], &[1, 1, 1]]).unwrap()
}

/// The complexified-real test corpus.
pub fn real_corpus() -> Vec<CorpusEntry> {
    let e = |name, arrangement| CorpusEntry { name, arrangement };
    vec![
        e("boolean1", boolean(1)),
        e("boolean2", boolean(2)),
        e("boolean3", boolean(3)),
        e("generic2", generic_lines(2)),
        e("generic3", generic3()),
        e("generic4", generic_lines(4)),
        e("concurrent3", concurrent3()),
        e("parallels_transversal", parallels_transversal()),
        e("deconed_braid", deconed_braid()),
        e("simplex3", simplex3()),
        e("braid_essential3", braid_essential3()),
        e("near_pencil4", near_pencil4()),
        e("points3", points_on_line(3)),
        e("two_parallels", Arrangement::from_i64(2, &[&[1, 0, 0], &[1, 0, 1]]).unwrap()),
    ]
}

pub struct ToricEntry {
    pub name: &'static str,
    pub arrangement: ToricArrangement,
}

fn toric(n: usize, rows: &[(&[i64], i64, i64)]) -> ToricArrangement {
    let hs = rows.iter().map(|(a, p, q)| ToricHypersurface::from_i64(a, *p, *q).unwrap()).collect();
    ToricArrangement::new(n, hs).unwrap()
}

/// `{x = 1}, {y = 1}, {xy = 1}` in `(C*)^2`.
pub fn three_subtori() -> ToricArrangement {
    toric(2, &[(&[1, 0], 0, 1), (&[0, 1], 0, 1), (&[1, 1], 0, 1)])
}

pub fn toric_corpus() -> Vec<ToricEntry> {
    let e = |name, arrangement| ToricEntry { name, arrangement };
    vec![
        e("punctured1", ToricArrangement::punctured_circle(1)),
        e("punctured3", ToricArrangement::punctured_circle(3)),
        e("axes2", toric(2, &[(&[1, 0], 0, 1), (&[0, 1], 0, 1)])),
        e("three_subtori", three_subtori()),
        e("two_points", toric(2, &[(&[1, 1], 0, 1), (&[1, -1], 0, 1)])),
        e("twisted_pair", toric(2, &[(&[1, 2], 0, 1), (&[1, 0], 1, 2), (&[0, 1], 1, 3)])),
        e("coordinate3", toric(3, &[(&[1, 0, 0], 0, 1), (&[0, 1, 0], 0, 1), (&[0, 0, 1], 0, 1), (&[1, 1, 1], 0, 1)])),
        e("mixed3", toric(3, &[(&[1, 1, 0], 0, 1), (&[0, 1, 1], 1, 2), (&[1, 0, -1], 0, 1)])),
        e("corank1", toric(3, &[(&[1, 0, 0], 0, 1), (&[1, 0, 0], 1, 2), (&[1, 1, 0], 0, 1)])),
    ]
}
