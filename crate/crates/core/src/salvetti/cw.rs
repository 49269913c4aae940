//! Salvetti complex of a complexified-real arrangement.
//!
//! Cells are pairs `[C ≺ F]` of a face `F` and a chamber `C` whose closure
//! contains `F`; the cell has dimension `codim F`. The boundary is
//!
//! ```text
//! ∂[C ≺ F] = Σ_{G covers F} σ(F, G) · t^{w(C, G∘C)} [G∘C ≺ G]
//! ```
//!
//! where `σ(F, G)` are incidence numbers of the dual cell `F*` and
//! `w(C, D) = Σ e_H` over hyperplanes `H` separating `C` from `D` for which
//! `C` lies on the same side as the base chamber (the first chamber).
//! The exponents lift each cell to the universal abelian cover, so
//! specializing `t_H` to character values gives the twisted complex.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_rational::BigRational;

use super::faces::{compose, FacePoset};
use crate::exactlin::RationalMatrix;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cell {
    pub chamber: usize,
    pub face: usize,
}

/// One nonzero entry of `∂_k`: `sign · t^exponent` from `col` (a k-cell)
/// to `row` (a (k-1)-cell).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundaryEntry {
    pub row: usize,
    pub col: usize,
    pub sign: i8,
    pub exponent: Vec<i64>,
}

#[derive(Clone, Debug)]
pub struct CWModel {
    dim: usize,
    num_hyperplanes: usize,
    cells: Vec<Vec<Cell>>,
    /// `boundaries[k]` is `∂_k : C_k → C_{k-1}`; index 0 is empty.
    boundaries: Vec<Vec<BoundaryEntry>>,
}

/// Incidence numbers of the dual cells: `σ[f]` maps each face covering `f`
/// to ±1 so that `∂∂ = 0` on the dual complex.
fn dual_incidences(fp: &FacePoset) -> Vec<HashMap<usize, i8>> {
    let n = fp.faces().len();
    let mut sigma: Vec<HashMap<usize, i8>> = vec![HashMap::new(); n];
    // lower codimension first so σ(G, ·) is known when orienting F*
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&i| fp.codim(i));
    for f in order {
        let covers = fp.covers(f);
        match fp.codim(f) {
            0 => {}
            1 => {
                let h = fp.face(f).signs.iter().position(|&s| s == 0).expect("codim-1 face lies on a hyperplane");
                for &g in covers {
                    sigma[f].insert(g, fp.face(g).signs[h]);
                }
            }
            _ => {
                let mut assigned: HashMap<usize, i8> = HashMap::new();
                assigned.insert(covers[0], 1);
                let mut queue = vec![covers[0]];
                while let Some(g) = queue.pop() {
                    let sg = assigned[&g];
                    for (&k, &s_gk) in &sigma[g] {
                        // the other facet of F* through the ridge K*
                        let other = covers
                            .iter()
                            .copied()
                            .find(|&g2| g2 != g && sigma[g2].contains_key(&k))
                            .expect("ridge lies in two facets");
                        let want = -sg * s_gk * sigma[other][&k];
                        match assigned.get(&other) {
                            Some(&v) => assert_eq!(v, want, "dual cell orientation is inconsistent"),
                            None => {
                                assigned.insert(other, want);
                                queue.push(other);
                            }
                        }
                    }
                }
                assert_eq!(assigned.len(), covers.len(), "dual cell boundary is disconnected");
                sigma[f] = assigned;
            }
        }
    }
    sigma
}

pub fn build_cw_model(fp: &FacePoset) -> CWModel {
    let n = fp.dim();
    let m = fp.num_hyperplanes();
    let base = &fp.face(fp.chambers()[0]).signs;

    let mut cells: Vec<Vec<Cell>> = vec![Vec::new(); n + 1];
    for f in 0..fp.faces().len() {
        for c in fp.adjacent_chambers(f) {
            cells[fp.codim(f)].push(Cell { chamber: c, face: f });
        }
    }
    for layer in &mut cells {
        layer.sort_by_key(|x| (x.face, x.chamber));
    }
    let index: Vec<HashMap<Cell, usize>> =
        cells.iter().map(|layer| layer.iter().enumerate().map(|(i, &c)| (c, i)).collect()).collect();

    let sigma = dual_incidences(fp);
    let mut boundaries = vec![Vec::new(); n + 1];
    for k in 1..=n {
        for (col, cell) in cells[k].iter().enumerate() {
            let c = &fp.face(cell.chamber).signs;
            for &g in fp.covers(cell.face) {
                let target = compose(&fp.face(g).signs, c);
                let target_chamber = fp.index_of(&target).expect("composition with a chamber is a chamber");
                let exponent: Vec<i64> = (0..m)
                    .map(|h| i64::from(c[h] != target[h] && c[h] == base[h]))
                    .collect();
                let row = index[k - 1][&Cell { chamber: target_chamber, face: g }];
                boundaries[k].push(BoundaryEntry { row, col, sign: sigma[cell.face][&g], exponent });
            }
        }
    }
    CWModel { dim: n, num_hyperplanes: m, cells, boundaries }
}

impl CWModel {
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn num_hyperplanes(&self) -> usize {
        self.num_hyperplanes
    }

    pub fn cells(&self, k: usize) -> &[Cell] {
        &self.cells[k]
    }

    pub fn cell_counts(&self) -> Vec<usize> {
        self.cells.iter().map(Vec::len).collect()
    }

    pub fn boundary(&self, k: usize) -> &[BoundaryEntry] {
        &self.boundaries[k]
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.cells
            .iter()
            .enumerate()
            .map(|(k, c)| if k % 2 == 0 { c.len() as i64 } else { -(c.len() as i64) })
            .sum()
    }

    /// Betti numbers over ℚ with trivial coefficients.
    pub fn untwisted_betti(&self) -> Vec<usize> {
        let ranks: Vec<usize> = (0..=self.dim + 1)
            .map(|k| {
                if k == 0 || k > self.dim {
                    return 0;
                }
                let mut m = RationalMatrix::zeros(self.cells[k - 1].len(), self.cells[k].len());
                for e in &self.boundaries[k] {
                    m[(e.row, e.col)] += BigRational::from_integer(BigInt::from(e.sign));
                }
                m.rank()
            })
            .collect();
        (0..=self.dim).map(|k| self.cells[k].len() - ranks[k] - ranks[k + 1]).collect()
    }

    /// `∂_{k-1} ∘ ∂_k = 0` as matrices over the Laurent polynomial ring.
    pub fn boundary_squares_vanish(&self) -> bool {
        (2..=self.dim).all(|k| {
            let mut by_row: HashMap<usize, Vec<&BoundaryEntry>> = HashMap::new();
            for e in &self.boundaries[k - 1] {
                by_row.entry(e.col).or_default().push(e);
            }
            let mut acc: HashMap<(usize, usize, Vec<i64>), i64> = HashMap::new();
            for outer in &self.boundaries[k] {
                for inner in by_row.get(&outer.row).into_iter().flatten() {
                    let exp: Vec<i64> = outer.exponent.iter().zip(&inner.exponent).map(|(a, b)| a + b).collect();
                    *acc.entry((inner.row, outer.col, exp)).or_default() += i64::from(outer.sign * inner.sign);
                }
            }
            acc.values().all(|&v| v == 0)
        })
    }
}
