//! Building sets, nested set complexes and the local torus data attached to
//! nested sets.
//!
//! A flat `g` is a member of the building set; for a flat `X` the local
//! building set `G_X` is `{g in G : g <= X}` (flats containing `X`), which
//! for the minimal and maximal flavours is exactly the minimal and maximal
//! building set of the local arrangement at `X`.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::arrangement::{Arrangement, Flat, FlatId, FlatPoset};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum BuildingFlavor {
    Minimal,
    Maximal,
    Custom,
}

/// Finest partition of the hyperplanes `indices` into parts whose normal
/// ranks add up to the rank of the whole: the irreducible components of
/// the central arrangement they span. Parts are sorted.
pub fn decompose(a: &Arrangement, indices: &[usize]) -> Vec<Vec<usize>> {
    match split_once(a, indices) {
        None => vec![indices.to_vec()],
        Some((left, right)) => {
            let mut parts = decompose(a, &left);
            parts.extend(decompose(a, &right));
            parts.sort();
            parts
        }
    }
}

fn split_once(a: &Arrangement, indices: &[usize]) -> Option<(Vec<usize>, Vec<usize>)> {
    let k = indices.len();
    if k < 2 {
        return None;
    }
    let total = a.normals(indices).rank();
    // first element always on the left; masks over the remaining k - 1
    for mask in 0u64..(1u64 << (k - 1)) - 1 {
        let mut left = vec![indices[0]];
        let mut right = Vec::new();
        for (b, &i) in indices[1..].iter().enumerate() {
            if mask >> b & 1 == 1 {
                left.push(i);
            } else {
                right.push(i);
            }
        }
        if a.normals(&left).rank() + a.normals(&right).rank() == total {
            return Some((left, right));
        }
    }
    None
}

/// No split of the localization at `x` into two parts with ranks adding to `r(x)`.
pub fn is_irreducible(a: &Arrangement, x: &Flat) -> bool {
    debug_assert!(x.rank() >= 1);
    split_once(a, x.indices()).is_none()
}

#[derive(Clone, Debug)]
pub struct BuildingSet<'a> {
    arrangement: &'a Arrangement,
    poset: &'a FlatPoset,
    members: Vec<FlatId>,
    is_member: Vec<bool>,
    flavor: BuildingFlavor,
}

impl<'a> BuildingSet<'a> {
    fn from_members(arrangement: &'a Arrangement, poset: &'a FlatPoset, members: Vec<FlatId>, flavor: BuildingFlavor) -> Self {
        let mut is_member = vec![false; poset.len()];
        for &g in &members {
            is_member[g] = true;
        }
        Self { arrangement, poset, members, is_member, flavor }
    }

    /// Validated against the decomposition property.
    pub fn custom(arrangement: &'a Arrangement, poset: &'a FlatPoset, mut members: Vec<FlatId>) -> Result<Self> {
        members.sort_unstable();
        members.dedup();
        if let Some(&bad) = members.iter().find(|&&g| g >= poset.len() || poset.rank(g) == 0) {
            return Err(Error::InvalidBuildingSet(format!("flat {bad} is not a flat of positive rank")));
        }
        let g = Self::from_members(arrangement, poset, members, BuildingFlavor::Custom);
        g.validate()?;
        Ok(g)
    }

    pub fn arrangement(&self) -> &'a Arrangement {
        self.arrangement
    }

    pub fn poset(&self) -> &'a FlatPoset {
        self.poset
    }

    pub fn members(&self) -> &[FlatId] {
        &self.members
    }

    pub fn flavor(&self) -> BuildingFlavor {
        self.flavor
    }

    pub fn contains(&self, x: FlatId) -> bool {
        self.is_member[x]
    }

    /// `G_X`: members containing the flat `x`.
    pub fn local(&self, x: FlatId) -> Vec<FlatId> {
        self.members.iter().copied().filter(|&g| self.poset.le(g, x)).collect()
    }

    /// Maximal members below `x`.
    pub fn factors(&self, x: FlatId) -> Vec<FlatId> {
        let below = self.local(x);
        below.iter().copied().filter(|&g| !below.iter().any(|&h| self.poset.lt(g, h))).collect()
    }

    /// Every flat of positive rank is the disjoint union of its factors,
    /// with ranks adding.
    pub fn validate(&self) -> Result<()> {
        for x in self.poset.ids().filter(|&x| self.poset.rank(x) > 0) {
            let factors = self.factors(x);
            let mut union: Vec<usize> = factors.iter().flat_map(|&g| self.poset.flat(g).indices().iter().copied()).collect();
            let total = union.len();
            union.sort_unstable();
            union.dedup();
            let ranks: usize = factors.iter().map(|&g| self.poset.rank(g)).sum();
            if union.len() != total || union != self.poset.flat(x).indices() || ranks != self.poset.rank(x) {
                return Err(Error::InvalidBuildingSet(format!(
                    "flat {:?} does not decompose into its factors {:?}",
                    self.poset.flat(x).indices(),
                    factors
                )));
            }
        }
        Ok(())
    }

    /// Nested-set test for an antichain inside `S`: join exists, is not a
    /// member, and has exactly the antichain as its factors.
    fn antichain_ok(&self, antichain: &[FlatId]) -> bool {
        let Some(j) = self.poset.join(antichain) else {
            return false;
        };
        if self.contains(j) {
            return false;
        }
        let mut f = self.factors(j);
        f.sort_unstable();
        let mut s = antichain.to_vec();
        s.sort_unstable();
        f == s
    }

    fn is_antichain(&self, set: &[FlatId]) -> bool {
        set.iter().all(|&x| set.iter().all(|&y| x == y || !self.poset.le(x, y)))
    }

    /// Whether adding `g` to the nested set `s` keeps it nested; only the
    /// antichains through `g` need checking.
    fn extends(&self, s: &[FlatId], g: FlatId) -> bool {
        let k = s.len();
        let comparable: Vec<bool> = s.iter().map(|&h| self.poset.le(h, g) || self.poset.le(g, h)).collect();
        let free: Vec<FlatId> = (0..k).filter(|&i| !comparable[i]).map(|i| s[i]).collect();
        for mask in 1u64..(1u64 << free.len()) {
            let mut chain = vec![g];
            chain.extend((0..free.len()).filter(|b| mask >> b & 1 == 1).map(|b| free[b]));
            if self.is_antichain(&chain) && !self.antichain_ok(&chain) {
                return false;
            }
        }
        true
    }

    pub fn is_nested(&self, s: &[FlatId]) -> bool {
        if !s.iter().all(|&g| g < self.poset.len() && self.contains(g)) {
            return false;
        }
        let mut sorted = s.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.len() != s.len() {
            return false;
        }
        (1..sorted.len()).all(|i| self.extends(&sorted[..i], sorted[i]))
    }
}

pub fn minimal_building_set<'a>(a: &'a Arrangement, p: &'a FlatPoset) -> BuildingSet<'a> {
    let members = p.ids().filter(|&x| p.rank(x) > 0 && is_irreducible(a, p.flat(x))).collect();
    BuildingSet::from_members(a, p, members, BuildingFlavor::Minimal)
}

pub fn maximal_building_set<'a>(a: &'a Arrangement, p: &'a FlatPoset) -> BuildingSet<'a> {
    let members = p.ids().filter(|&x| p.rank(x) > 0).collect();
    BuildingSet::from_members(a, p, members, BuildingFlavor::Maximal)
}

pub fn building_set<'a>(a: &'a Arrangement, p: &'a FlatPoset, flavor: BuildingFlavor) -> BuildingSet<'a> {
    match flavor {
        BuildingFlavor::Maximal => maximal_building_set(a, p),
        _ => minimal_building_set(a, p),
    }
}

/// Simplicial complex of nested sets, faces sorted by `(size, members)`.
/// The empty face is included.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NestedSetComplex {
    faces: Vec<Vec<FlatId>>,
}

impl NestedSetComplex {
    pub fn faces(&self) -> &[Vec<FlatId>] {
        &self.faces
    }

    /// `f_{-1}, f_0, f_1, ...`: number of faces of each size `0, 1, 2, ...`.
    pub fn f_vector(&self) -> Vec<usize> {
        let top = self.faces.iter().map(Vec::len).max().unwrap_or(0);
        let mut f = vec![0; top + 1];
        for s in &self.faces {
            f[s.len()] += 1;
        }
        f
    }

    /// Inclusion-maximal faces.
    pub fn facets(&self) -> Vec<Vec<FlatId>> {
        self.faces
            .iter()
            .filter(|s| !self.faces.iter().any(|t| t.len() == s.len() + 1 && s.iter().all(|x| t.contains(x))))
            .cloned()
            .collect()
    }

    pub fn max_face_size(&self) -> usize {
        self.faces.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn contains(&self, s: &[FlatId]) -> bool {
        let mut k = s.to_vec();
        k.sort_unstable();
        self.faces.binary_search_by(|f| (f.len(), f.as_slice()).cmp(&(k.len(), k.as_slice()))).is_ok()
    }
}

/// Depth-first over increasing member sequences; a set is extended only by
/// members larger than its maximum, so each face is produced once.
pub fn nested_set_complex(g: &BuildingSet<'_>) -> NestedSetComplex {
    let mut faces = vec![Vec::new()];
    let mut stack: Vec<Vec<FlatId>> = vec![Vec::new()];
    while let Some(s) = stack.pop() {
        let start = s.last().map_or(0, |&last| g.members.partition_point(|&m| m <= last));
        for &m in &g.members[start..] {
            if g.extends(&s, m) {
                let mut t = s.clone();
                t.push(m);
                faces.push(t.clone());
                stack.push(t);
            }
        }
    }
    faces.sort_by(|x, y| (x.len(), x).cmp(&(y.len(), y)));
    NestedSetComplex { faces }
}

/// Rank and meridian classes of the free abelian subgroup attached to a
/// nested set of the local building set at a flat.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LocalTorusData {
    pub flat: FlatId,
    pub nested: Vec<FlatId>,
    pub rank: usize,
    /// For each member, the indicator of the hyperplanes containing it.
    pub generators: Vec<Vec<i64>>,
}

/// Indicator vector of the hyperplanes containing `g`.
pub fn meridian_class(p: &FlatPoset, g: FlatId) -> Vec<i64> {
    let mut v = vec![0; p.num_hyperplanes()];
    for &h in p.flat(g).indices() {
        v[h] = 1;
    }
    v
}

pub fn local_torus_data(g: &BuildingSet<'_>, x: FlatId, s: &[FlatId]) -> Result<LocalTorusData> {
    if x >= g.poset.len() {
        return Err(Error::UnknownFlat(x));
    }
    if !s.iter().all(|&m| m < g.poset.len() && g.poset.le(m, x)) || !g.is_nested(s) {
        return Err(Error::NotNested);
    }
    Ok(LocalTorusData {
        flat: x,
        nested: s.to_vec(),
        rank: s.len(),
        generators: s.iter().map(|&m| meridian_class(g.poset, m)).collect(),
    })
}

/// Meridian classes of every member of every local building set, sorted.
pub fn all_gamma_classes(g: &BuildingSet<'_>) -> Vec<Vec<i64>> {
    let set: BTreeSet<Vec<i64>> = g
        .poset
        .ids()
        .flat_map(|x| g.local(x))
        .map(|m| meridian_class(g.poset, m))
        .collect();
    set.into_iter().collect()
}
