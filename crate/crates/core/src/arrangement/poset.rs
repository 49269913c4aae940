use std::collections::{BTreeMap, VecDeque};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::{dot, Arrangement, Polynomial};
use crate::exactlin::RationalMatrix;

/// Index of a flat inside its [`FlatPoset`].
pub type FlatId = usize;

/// A nonempty intersection of hyperplanes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Flat {
    indices: Vec<usize>,
    point: Vec<BigRational>,
    directions: Vec<Vec<BigRational>>,
    codim: usize,
    equations: RationalMatrix,
}

impl Flat {
    /// Sorted, closed: every hyperplane containing the flat is listed.
    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    pub fn point(&self) -> &[BigRational] {
        &self.point
    }

    pub fn directions(&self) -> &[Vec<BigRational>] {
        &self.directions
    }

    pub fn codim(&self) -> usize {
        self.codim
    }

    pub fn rank(&self) -> usize {
        self.codim
    }

    pub fn dim(&self) -> usize {
        self.directions.len()
    }

    /// Reduced row-echelon form of the augmented defining system `[A | c]`;
    /// equal iff the subspaces are equal.
    pub fn equations(&self) -> &RationalMatrix {
        &self.equations
    }

    pub fn contains_hyperplane(&self, i: usize) -> bool {
        self.indices.binary_search(&i).is_ok()
    }
}

/// Intersection poset of an affine arrangement, ranked by codimension.
///
/// Flats are sorted by `(codim, indices)`; id 0 is the ambient space.
/// `X <= Y` means `X ⊇ Y`, equivalently `indices(X) ⊆ indices(Y)`.
#[derive(Clone, Debug)]
pub struct FlatPoset {
    dim: usize,
    hyperplanes: usize,
    flats: Vec<Flat>,
    lookup: BTreeMap<Vec<usize>, FlatId>,
    mobius: Vec<BigInt>,
}

impl FlatPoset {
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn num_hyperplanes(&self) -> usize {
        self.hyperplanes
    }

    pub fn len(&self) -> usize {
        self.flats.len()
    }

    pub fn is_empty(&self) -> bool {
        self.flats.is_empty()
    }

    pub fn bottom(&self) -> FlatId {
        0
    }

    pub fn flats(&self) -> &[Flat] {
        &self.flats
    }

    pub fn flat(&self, id: FlatId) -> &Flat {
        &self.flats[id]
    }

    pub fn ids(&self) -> std::ops::Range<FlatId> {
        0..self.flats.len()
    }

    /// Flat whose closed index set is exactly `indices` (sorted or not).
    pub fn find(&self, indices: &[usize]) -> Option<FlatId> {
        let mut key = indices.to_vec();
        key.sort_unstable();
        self.lookup.get(&key).copied()
    }

    /// Smallest flat containing all listed hyperplanes, if they meet.
    pub fn closure(&self, hyperplanes: &[usize]) -> Option<FlatId> {
        self.ids()
            .filter(|&id| hyperplanes.iter().all(|&h| self.flats[id].contains_hyperplane(h)))
            .min_by_key(|&id| self.flats[id].indices.len())
    }

    /// Join `X ∨ Y ∨ ...`: the flat of the intersection, `None` if empty.
    pub fn join(&self, ids: &[FlatId]) -> Option<FlatId> {
        let mut all: Vec<usize> = ids.iter().flat_map(|&id| self.flats[id].indices.iter().copied()).collect();
        all.sort_unstable();
        all.dedup();
        self.closure(&all)
    }

    pub fn le(&self, x: FlatId, y: FlatId) -> bool {
        let (a, b) = (&self.flats[x].indices, &self.flats[y].indices);
        a.len() <= b.len() && a.iter().all(|i| b.binary_search(i).is_ok())
    }

    pub fn lt(&self, x: FlatId, y: FlatId) -> bool {
        x != y && self.le(x, y)
    }

    pub fn rank(&self, x: FlatId) -> usize {
        self.flats[x].codim
    }

    pub fn max_rank(&self) -> usize {
        self.flats.iter().map(|f| f.codim).max().unwrap_or(0)
    }

    pub fn of_rank(&self, r: usize) -> impl Iterator<Item = FlatId> + '_ {
        self.ids().filter(move |&id| self.flats[id].codim == r)
    }

    /// `μ(0̂, X)`.
    pub fn mobius(&self, x: FlatId) -> &BigInt {
        &self.mobius[x]
    }

    /// Flats strictly below `x`.
    pub fn below(&self, x: FlatId) -> impl Iterator<Item = FlatId> + '_ {
        self.ids().filter(move |&z| self.lt(z, x))
    }

    /// Number of flats per rank.
    pub fn rank_counts(&self) -> Vec<usize> {
        let mut counts = vec![0; self.max_rank() + 1];
        for f in &self.flats {
            counts[f.codim] += 1;
        }
        counts
    }
}

struct RawFlat {
    point: Vec<BigRational>,
    directions: Vec<Vec<BigRational>>,
}

/// Hyperplanes containing the affine subspace `point + span(directions)`.
fn containing(a: &Arrangement, f: &RawFlat) -> Vec<usize> {
    (0..a.len())
        .filter(|&i| {
            let h = a.hyperplane(i);
            h.eval(&f.point).is_zero() && f.directions.iter().all(|d| dot(h.normal(), d).is_zero())
        })
        .collect()
}

/// Intersects a flat with one hyperplane; `None` if parallel.
fn cut(f: &RawFlat, normal: &[BigRational], offset: &BigRational) -> Option<RawFlat> {
    let coeffs: Vec<BigRational> = f.directions.iter().map(|d| dot(normal, d)).collect();
    let j = coeffs.iter().position(|c| !c.is_zero())?;
    let rhs = offset - dot(normal, &f.point);
    let step = &rhs / &coeffs[j];
    let pivot = &f.directions[j];
    let point = f.point.iter().zip(pivot).map(|(p, d)| p + &step * d).collect();
    let directions = f
        .directions
        .iter()
        .enumerate()
        .filter(|&(i, _)| i != j)
        .map(|(i, d)| {
            let r = &coeffs[i] / &coeffs[j];
            d.iter().zip(pivot).map(|(x, y)| x - &r * y).collect()
        })
        .collect();
    Some(RawFlat { point, directions })
}

fn canonical_equations(a: &Arrangement, indices: &[usize]) -> RationalMatrix {
    let rows = indices
        .iter()
        .map(|&i| {
            let h = a.hyperplane(i);
            let mut row = h.normal().to_vec();
            row.push(h.offset().clone());
            row
        })
        .collect();
    let (r, pivots) = RationalMatrix::from_rows(a.dim() + 1, rows).rref();
    let kept = (0..pivots.len()).map(|i| r.row(i).to_vec()).collect();
    RationalMatrix::from_rows(a.dim() + 1, kept)
}

pub fn build_flat_poset(a: &Arrangement) -> FlatPoset {
    let n = a.dim();
    let identity: Vec<Vec<BigRational>> = (0..n)
        .map(|i| (0..n).map(|j| if i == j { BigRational::one() } else { BigRational::zero() }).collect())
        .collect();
    let ambient = RawFlat { point: vec![BigRational::zero(); n], directions: identity };

    let mut found: BTreeMap<Vec<usize>, RawFlat> = BTreeMap::new();
    let mut queue: VecDeque<Vec<usize>> = VecDeque::new();
    found.insert(Vec::new(), ambient);
    queue.push_back(Vec::new());
    while let Some(key) = queue.pop_front() {
        for h in 0..a.len() {
            if key.binary_search(&h).is_ok() {
                continue;
            }
            let base = &found[&key];
            let hp = a.hyperplane(h);
            let Some(next) = cut(base, hp.normal(), hp.offset()) else {
                continue;
            };
            let idx = containing(a, &next);
            if !found.contains_key(&idx) {
                found.insert(idx.clone(), next);
                queue.push_back(idx);
            }
        }
    }

    let mut flats: Vec<Flat> = found
        .into_iter()
        .map(|(indices, raw)| Flat {
            codim: n - raw.directions.len(),
            equations: canonical_equations(a, &indices),
            indices,
            point: raw.point,
            directions: raw.directions,
        })
        .collect();
    flats.sort_by(|x, y| (x.codim, &x.indices).cmp(&(y.codim, &y.indices)));
    let lookup = flats.iter().enumerate().map(|(i, f)| (f.indices.clone(), i)).collect();

    let mut poset = FlatPoset { dim: n, hyperplanes: a.len(), flats, lookup, mobius: Vec::new() };
    let mut mobius: Vec<BigInt> = Vec::with_capacity(poset.len());
    for x in poset.ids() {
        if x == 0 {
            mobius.push(BigInt::one());
            continue;
        }
        let s: BigInt = poset.below(x).map(|z| mobius[z].clone()).sum();
        mobius.push(-s);
    }
    poset.mobius = mobius;
    poset
}

/// `Σ_X |μ(0̂, X)| t^{r(X)}`.
pub fn whitney_poincare(p: &FlatPoset) -> Polynomial {
    let mut coeffs = vec![BigInt::zero(); p.max_rank() + 1];
    for x in p.ids() {
        coeffs[p.rank(x)] += p.mobius(x).abs();
    }
    Polynomial::new(coeffs)
}

pub fn euler_characteristic(p: &FlatPoset) -> BigInt {
    whitney_poincare(p).eval_i64(-1)
}

/// `n - max rank of a flat`.
pub fn corank(a: &Arrangement) -> usize {
    a.dim() - build_flat_poset(a).max_rank()
}
