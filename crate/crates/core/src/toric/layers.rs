use std::collections::{BTreeMap, VecDeque};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::{frac, saturate, ToricArrangement};
use crate::exactlin::{hermite_normal_form, smith_normal_form, IntegerMatrix, RationalMatrix};

/// A connected component of an intersection: `{θ : h · θ ≡ o_h}` for the
/// rows `h` of a saturated lattice in Hermite normal form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Layer {
    ambient: usize,
    indices: Vec<usize>,
    lattice: Vec<Vec<BigInt>>,
    offsets: Vec<BigRational>,
    point: Vec<BigRational>,
}

impl Layer {
    /// Hypersurfaces containing the layer.
    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    pub fn lattice(&self) -> &[Vec<BigInt>] {
        &self.lattice
    }

    pub fn offsets(&self) -> &[BigRational] {
        &self.offsets
    }

    /// Some `θ` on the layer.
    pub fn point(&self) -> &[BigRational] {
        &self.point
    }

    pub fn codim(&self) -> usize {
        self.lattice.len()
    }

    pub fn dim(&self) -> usize {
        self.ambient - self.lattice.len()
    }

    pub fn contains_hypersurface(&self, i: usize) -> bool {
        self.indices.binary_search(&i).is_ok()
    }

    pub fn contains_point(&self, theta: &[BigRational]) -> bool {
        self.lattice.iter().zip(&self.offsets).all(|(h, o)| (super::dot_int_rat(h, theta) - o).is_integer())
    }

    /// Whether `other ⊆ self`.
    pub fn contains_layer(&self, other: &Layer) -> bool {
        self.codim() <= other.codim() && in_span(&other.lattice, &self.lattice, self.ambient) && self.contains_point(&other.point)
    }
}

fn rational_rows(rows: &[Vec<BigInt>]) -> Vec<Vec<BigRational>> {
    rows.iter().map(|r| r.iter().map(|x| BigRational::from_integer(x.clone())).collect()).collect()
}

/// Whether every row of `extra` lies in the rational span of `base`.
fn in_span(base: &[Vec<BigInt>], extra: &[Vec<BigInt>], n: usize) -> bool {
    if extra.is_empty() {
        return true;
    }
    let all: Vec<Vec<BigInt>> = base.iter().chain(extra).cloned().collect();
    RationalMatrix::from_rows(n, rational_rows(&all)).rank() == base.len()
}

/// HNF basis of the lattice and the offsets of its rows at `point`.
pub(crate) fn canonical_layer(lattice: &[Vec<BigInt>], point: &[BigRational], n: usize) -> (Vec<Vec<BigInt>>, Vec<BigRational>) {
    if lattice.is_empty() {
        return (vec![], vec![]);
    }
    let h = hermite_normal_form(&IntegerMatrix::from_rows(n, lattice.to_vec()));
    let rows: Vec<Vec<BigInt>> = (0..h.rows()).map(|i| h.row(i).to_vec()).collect();
    let offsets = rows.iter().map(|r| frac(&super::dot_int_rat(r, point))).collect();
    (rows, offsets)
}

/// Component count of an intersection, certified by the Smith normal form
/// of its exponent matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComponentCount {
    /// Nonzero invariant factors.
    pub invariant_factors: Vec<BigInt>,
    /// Whether the offsets are compatible with the torsion-free part.
    pub solvable: bool,
    pub count: BigInt,
}

type RawLayer = (Vec<Vec<BigInt>>, Vec<BigRational>, Vec<BigRational>);

/// Components of `{θ : rows · θ ≡ offsets}`.
fn components(rows: &[Vec<BigInt>], offsets: &[BigRational], n: usize) -> (ComponentCount, Vec<RawLayer>) {
    let origin = vec![BigRational::zero(); n];
    if rows.is_empty() {
        let cc = ComponentCount { invariant_factors: vec![], solvable: true, count: BigInt::one() };
        return (cc, vec![(vec![], vec![], origin)]);
    }
    let snf = smith_normal_form(&IntegerMatrix::from_rows(n, rows.to_vec()));
    let r = snf.rank();
    let d: Vec<BigInt> = snf.diagonal[..r].to_vec();
    let ub: Vec<BigRational> = (0..rows.len())
        .map(|j| (0..rows.len()).map(|i| &offsets[i] * &snf.left[(j, i)]).sum())
        .collect();
    let solvable = ub[r..].iter().all(|x| x.is_integer());
    let count = if solvable { d.iter().product() } else { BigInt::zero() };
    let cc = ComponentCount { invariant_factors: d.clone(), solvable, count };
    if !solvable {
        return (cc, vec![]);
    }
    let lattice = saturate(rows, n);
    let mut out = Vec::new();
    let mut t = vec![BigInt::zero(); r];
    loop {
        let phi: Vec<BigRational> = (0..r).map(|j| (&ub[j] + BigRational::from_integer(t[j].clone())) / BigRational::from_integer(d[j].clone())).collect();
        let theta: Vec<BigRational> = (0..n).map(|i| (0..r).map(|j| &phi[j] * &snf.right[(i, j)]).sum()).collect();
        let (lat, offs) = canonical_layer(&lattice, &theta, n);
        out.push((lat, offs, theta));
        // odometer over t_j in 0..d_j
        let mut j = 0;
        while j < r {
            t[j] += 1;
            if t[j] < d[j] {
                break;
            }
            t[j] = BigInt::zero();
            j += 1;
        }
        if j == r {
            break;
        }
    }
    (cc, out)
}

pub fn component_count(t: &ToricArrangement, subset: &[usize]) -> ComponentCount {
    let rows: Vec<Vec<BigInt>> = subset.iter().map(|&i| t.hypersurfaces()[i].exponent_big()).collect();
    let offs: Vec<BigRational> = subset.iter().map(|&i| t.hypersurfaces()[i].offset().clone()).collect();
    components(&rows, &offs, t.dim()).0
}

/// Layers ordered by reverse inclusion, the whole torus first.
#[derive(Clone, Debug)]
pub struct LayerPoset {
    dim: usize,
    layers: Vec<Layer>,
    below: Vec<Vec<usize>>,
    mobius: Vec<BigInt>,
}

impl LayerPoset {
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.layers.len()
    }

    pub fn is_empty(&self) -> bool {
        self.layers.is_empty()
    }

    pub fn bottom(&self) -> usize {
        0
    }

    pub fn layers(&self) -> &[Layer] {
        &self.layers
    }

    pub fn layer(&self, id: usize) -> &Layer {
        &self.layers[id]
    }

    /// `x <= y` iff `y ⊆ x`.
    pub fn le(&self, x: usize, y: usize) -> bool {
        x == y || self.below[y].binary_search(&x).is_ok()
    }

    /// Layers strictly below `y`.
    pub fn below(&self, y: usize) -> &[usize] {
        &self.below[y]
    }

    pub fn mobius(&self, x: usize) -> &BigInt {
        &self.mobius[x]
    }

    pub fn find(&self, lattice: &[Vec<BigInt>], offsets: &[BigRational]) -> Option<usize> {
        self.layers.iter().position(|l| l.lattice == lattice && l.offsets == offsets)
    }

    /// Number of layers of each codimension.
    pub fn codim_counts(&self) -> Vec<usize> {
        let mut c = vec![0; self.dim + 1];
        for l in &self.layers {
            c[l.codim()] += 1;
        }
        c
    }
}

pub fn layer_poset(t: &ToricArrangement) -> LayerPoset {
    let n = t.dim();
    let hs = t.hypersurfaces();
    let contains = |lat: &[Vec<BigInt>], point: &[BigRational], i: usize| {
        in_span(lat, &[hs[i].exponent_big()], n) && hs[i].contains_point(point)
    };

    let mut seen: BTreeMap<(Vec<Vec<BigInt>>, Vec<BigRational>), Vec<BigRational>> = BTreeMap::new();
    let mut queue = VecDeque::new();
    let torus = (vec![], vec![]);
    seen.insert(torus.clone(), vec![BigRational::zero(); n]);
    queue.push_back(torus);
    while let Some(key) = queue.pop_front() {
        let point = seen[&key].clone();
        for i in 0..hs.len() {
            if contains(&key.0, &point, i) {
                continue;
            }
            let mut rows = key.0.clone();
            rows.push(hs[i].exponent_big());
            let mut offs = key.1.clone();
            offs.push(hs[i].offset().clone());
            for (lat, o, p) in components(&rows, &offs, n).1 {
                let k = (lat, o);
                if !seen.contains_key(&k) {
                    seen.insert(k.clone(), p);
                    queue.push_back(k);
                }
            }
        }
    }

    let mut layers: Vec<Layer> = seen
        .into_iter()
        .map(|((lattice, offsets), point)| {
            let indices = (0..hs.len()).filter(|&i| contains(&lattice, &point, i)).collect();
            Layer { ambient: n, indices, lattice, offsets, point }
        })
        .collect();
    layers.sort_by(|a, b| {
        (a.codim(), &a.indices, &a.lattice, &a.offsets).cmp(&(b.codim(), &b.indices, &b.lattice, &b.offsets))
    });

    let below: Vec<Vec<usize>> = (0..layers.len())
        .map(|y| (0..y).filter(|&x| layers[x].codim() < layers[y].codim() && layers[x].contains_layer(&layers[y])).collect())
        .collect();
    let mut mobius = vec![BigInt::zero(); layers.len()];
    for y in 0..layers.len() {
        mobius[y] = if y == 0 { BigInt::one() } else { -below[y].iter().map(|&x| &mobius[x]).sum::<BigInt>() };
    }
    LayerPoset { dim: n, layers, below, mobius }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::toric::ToricHypersurface;

    fn arr(n: usize, rows: &[(&[i64], i64, i64)]) -> ToricArrangement {
        ToricArrangement::new(n, rows.iter().map(|(a, p, q)| ToricHypersurface::from_i64(a, *p, *q).unwrap()).collect()).unwrap()
    }

    #[test]
    fn one_dimensional_layers() {
        assert_eq!(layer_poset(&arr(1, &[(&[1], 0, 1)])).len(), 2);
        let lp = layer_poset(&arr(1, &[(&[1], 0, 1), (&[1], 1, 2)]));
        assert_eq!(lp.len(), 3);
        assert_eq!(lp.codim_counts(), vec![1, 2]);
    }

    #[test]
    fn three_subtori_meet_at_one_point() {
        let t = arr(2, &[(&[1, 0], 0, 1), (&[0, 1], 0, 1), (&[1, 1], 0, 1)]);
        let lp = layer_poset(&t);
        assert_eq!(lp.codim_counts(), vec![1, 3, 1]);
        let top = lp.layer(4);
        assert_eq!(top.indices(), &[0, 1, 2]);
        assert!(top.point().iter().all(|x| x.is_integer()));
        assert_eq!(lp.mobius(4), &BigInt::from(2));
        for s in [[0, 1], [0, 2], [1, 2]] {
            assert_eq!(component_count(&t, &s).count, BigInt::one());
        }
    }

    #[test]
    fn disconnected_intersection() {
        // xy = 1 and x y^-1 = 1 meet at (1, 1) and (-1, -1)
        let t = arr(2, &[(&[1, 1], 0, 1), (&[1, -1], 0, 1)]);
        let cc = component_count(&t, &[0, 1]);
        assert_eq!(cc.count, BigInt::from(2));
        let lp = layer_poset(&t);
        assert_eq!(lp.codim_counts(), vec![1, 2, 2]);
        let half = BigRational::new(1.into(), 2.into());
        assert!(lp.layers().iter().any(|l| l.dim() == 0 && l.point().iter().all(|x| frac(x) == half)));
    }

    #[test]
    fn incompatible_offsets_are_empty() {
        // two parallel circles x = 1 and x = -1 in (C*)^2
        let t = arr(2, &[(&[1, 0], 0, 1), (&[1, 0], 1, 2)]);
        let cc = component_count(&t, &[0, 1]);
        assert!(!cc.solvable);
        assert_eq!(cc.count, BigInt::zero());
        assert_eq!(layer_poset(&t).len(), 3);
    }

    #[test]
    fn order_is_reverse_inclusion() {
        let t = arr(2, &[(&[1, 0], 0, 1), (&[0, 1], 0, 1), (&[1, 1], 0, 1)]);
        let lp = layer_poset(&t);
        for y in 0..lp.len() {
            assert!(lp.le(0, y));
            for x in 0..lp.len() {
                if lp.le(x, y) {
                    assert!(lp.layer(x).indices().iter().all(|i| lp.layer(y).contains_hypersurface(*i)));
                }
            }
        }
    }
}
