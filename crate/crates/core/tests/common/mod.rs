#![allow(dead_code)]

//! Brute-force oracles shared by the integration tests. None of them call
//! the algorithm they check.

use std::collections::{BTreeMap, BTreeSet};

use arrcoh::arrangement::{Arrangement, FlatId, FlatPoset};
use arrcoh::orbitconfig::{Block, BlockKind, OrbitConfigSpec, OrbitStratum};
use arrcoh::toric::ToricArrangement;
use arrcoh::wonderful::BuildingSet;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

/// Nested sets straight from the antichain-join definition: every antichain
/// of size at least 2 has a join outside the building set whose maximal
/// members below it are exactly the antichain.
pub fn nested_brute(g: &BuildingSet<'_>) -> Vec<Vec<FlatId>> {
    let p = g.poset();
    let members = g.members().to_vec();
    let le = |x: FlatId, y: FlatId| p.flat(x).indices().iter().all(|i| p.flat(y).indices().contains(i));
    let join = |xs: &[FlatId]| -> Option<FlatId> {
        let mut hs: Vec<usize> = xs.iter().flat_map(|&x| p.flat(x).indices().to_vec()).collect();
        hs.sort();
        hs.dedup();
        // smallest flat containing all the hyperplanes, if the intersection is nonempty
        p.ids().filter(|&y| hs.iter().all(|h| p.flat(y).indices().contains(h))).min_by_key(|&y| p.flat(y).indices().len())
    };
    let mut out = Vec::new();
    for mask in 0u64..(1 << members.len()) {
        let s: Vec<FlatId> = (0..members.len()).filter(|i| mask >> i & 1 == 1).map(|i| members[i]).collect();
        let mut ok = true;
        'anti: for sub in 0u64..(1 << s.len()) {
            if sub.count_ones() < 2 {
                continue;
            }
            let a: Vec<FlatId> = (0..s.len()).filter(|i| sub >> i & 1 == 1).map(|i| s[i]).collect();
            let antichain = a.iter().all(|&x| a.iter().all(|&y| x == y || (!le(x, y) && !le(y, x))));
            if !antichain {
                continue;
            }
            let Some(j) = join(&a) else {
                ok = false;
                break 'anti;
            };
            if members.contains(&j) {
                ok = false;
                break 'anti;
            }
            let below: Vec<FlatId> = members.iter().copied().filter(|&m| le(m, j)).collect();
            let mut factors: Vec<FlatId> = below.iter().copied().filter(|&m| !below.iter().any(|&o| o != m && le(m, o))).collect();
            factors.sort();
            let mut sorted = a.clone();
            sorted.sort();
            if factors != sorted {
                ok = false;
                break 'anti;
            }
        }
        if ok {
            out.push(s);
        }
    }
    for f in &mut out {
        f.sort();
    }
    out.sort_by(|a, b| (a.len(), a).cmp(&(b.len(), b)));
    out
}

pub fn is_chain(p: &FlatPoset, s: &[FlatId]) -> bool {
    let le = |x: FlatId, y: FlatId| p.flat(x).indices().iter().all(|i| p.flat(y).indices().contains(i));
    s.iter().all(|&x| s.iter().all(|&y| le(x, y) || le(y, x)))
}

/// Bell numbers from the Bell triangle.
pub fn bell(n: usize) -> u64 {
    let mut row = vec![1u64];
    for _ in 0..n {
        let mut next = vec![*row.last().unwrap()];
        for x in &row {
            let v = next.last().unwrap() + x;
            next.push(v);
        }
        row = next;
    }
    row[0]
}

/// Stirling numbers of the second kind by inclusion-exclusion.
pub fn stirling2(n: usize, k: usize) -> u64 {
    let mut s = BigInt::zero();
    let mut binom = BigInt::from(1);
    let mut fact = BigInt::from(1);
    for j in 0..=k {
        let term = &binom * BigInt::from((k - j) as u64).pow(n as u32);
        if j % 2 == 0 {
            s += term;
        } else {
            s -= term;
        }
        binom = binom * BigInt::from(k - j) / BigInt::from(j + 1);
    }
    for i in 1..=k {
        fact *= i;
    }
    (s / fact).to_u64().unwrap()
}

/// Number of functions `block -> Z/m` modulo adding a constant, counted by
/// listing all functions and keeping one representative per class.
pub fn label_classes(size: usize, m: u32) -> usize {
    let mut classes = BTreeSet::new();
    let total = (m as usize).pow(size as u32);
    for code in 0..total {
        let f: Vec<u32> = (0..size).map(|i| (code / (m as usize).pow(i as u32)) as u32 % m).collect();
        let rep = (0..m).map(|c| f.iter().map(|x| (x + c) % m).collect::<Vec<u32>>()).min().unwrap();
        classes.insert(rep);
    }
    classes.len()
}

/// Strata realized by a finite model of the surface: `k / m` puncture orbits
/// and `n` generic orbits, each a copy of `Z/m`. Every tuple of points is
/// sent to its partition into orbits, the relative group labels and the
/// puncture under the least point of each puncture block.
pub fn strata_from_points(spec: &OrbitConfigSpec) -> BTreeSet<OrbitStratum> {
    let m = spec.group_order as usize;
    let pun = spec.puncture_orbits() as usize;
    let orbits = pun + spec.points;
    let size = orbits * m;
    let n = spec.points;
    let mut out = BTreeSet::new();
    let mut x = vec![0usize; n];
    loop {
        let mut blocks: Vec<Block> = Vec::new();
        let mut seen_orbit: BTreeMap<usize, usize> = BTreeMap::new();
        for i in 0..n {
            let (o, r) = (x[i] / m, x[i] % m);
            match seen_orbit.get(&o) {
                Some(&b) => {
                    let base = x[blocks[b].elements[0] - 1] % m;
                    blocks[b].elements.push(i + 1);
                    blocks[b].labels.push(((r + m - base) % m) as u32);
                }
                None => {
                    let kind = if o < pun { BlockKind::Puncture { puncture: (o * m + r + 1) as u32 } } else { BlockKind::Surface };
                    seen_orbit.insert(o, blocks.len());
                    blocks.push(Block { elements: vec![i + 1], labels: vec![0], kind });
                }
            }
        }
        out.insert(OrbitStratum { blocks });
        let mut j = 0;
        while j < n {
            x[j] += 1;
            if x[j] < size {
                break;
            }
            x[j] = 0;
            j += 1;
        }
        if j == n {
            break;
        }
    }
    out
}

/// `a` scaled to coprime integers, as `(normal, offset)`.
fn integer_form(a: &Arrangement, i: usize) -> (Vec<BigInt>, BigInt) {
    let h = &a.hyperplanes()[i];
    let mut den = h.offset().denom().clone();
    for x in h.normal() {
        den = den.lcm(x.denom());
    }
    let scale = |q: &num_rational::BigRational| (q * &den).to_integer();
    (h.normal().iter().map(scale).collect(), scale(h.offset()))
}

/// Points of `F_p^n` off every hyperplane, by enumeration.
pub fn complement_points_mod_p(a: &Arrangement, p: u64) -> u64 {
    let n = a.dim();
    let forms: Vec<(Vec<i64>, i64)> = (0..a.len())
        .map(|i| {
            let (v, c) = integer_form(a, i);
            let md = |x: &BigInt| x.mod_floor(&BigInt::from(p)).to_i64().unwrap();
            (v.iter().map(md).collect(), md(&c))
        })
        .collect();
    let mut count = 0;
    let mut x = vec![0i64; n];
    loop {
        let off = forms.iter().all(|(v, c)| (v.iter().zip(&x).map(|(a, b)| a * b).sum::<i64>() - c).rem_euclid(p as i64) != 0);
        if off {
            count += 1;
        }
        let mut j = 0;
        while j < n {
            x[j] += 1;
            if x[j] < p as i64 {
                break;
            }
            x[j] = 0;
            j += 1;
        }
        if j == n {
            break;
        }
    }
    count
}

/// `θ ∈ (1/N) Z^n / Z^n` lying on every hypersurface of `subset`.
pub fn torsion_points_on(t: &ToricArrangement, subset: &[usize], big_n: i64) -> Vec<Vec<i64>> {
    let n = t.dim();
    let mut out = Vec::new();
    let mut x = vec![0i64; n];
    loop {
        let on_all = subset.iter().all(|&i| {
            let h = &t.hypersurfaces()[i];
            // a·x / N ≡ p/q  <=>  q a·x ≡ p N (mod qN)
            let ax: i64 = h.exponent().iter().zip(&x).map(|(a, b)| a * b).sum();
            let (p, q) = (h.offset().numer().to_i64().unwrap(), h.offset().denom().to_i64().unwrap());
            (q * ax - p * big_n).rem_euclid(q * big_n) == 0
        });
        if on_all {
            out.push(x.clone());
        }
        let mut j = 0;
        while j < n {
            x[j] += 1;
            if x[j] < big_n {
                break;
            }
            x[j] = 0;
            j += 1;
        }
        if j == n {
            break;
        }
    }
    out
}

/// A grid fine enough to contain every torsion point of every finite
/// intersection in dimension at most 2.
pub fn torsion_grid(t: &ToricArrangement) -> i64 {
    let mut den = 1i64;
    for h in t.hypersurfaces() {
        den = den.lcm(&h.offset().denom().to_i64().unwrap());
    }
    let mut minors = 1i64;
    let hs = t.hypersurfaces();
    for i in 0..hs.len() {
        for j in 0..hs.len() {
            let d = match t.dim() {
                1 => hs[i].exponent()[0].abs(),
                _ => (hs[i].exponent()[0] * hs[j].exponent()[1] - hs[i].exponent()[1] * hs[j].exponent()[0]).abs(),
            };
            if d != 0 {
                minors = minors.lcm(&d);
            }
        }
    }
    den * minors
}

/// Whether the grid point `x / N` misses hypersurface `i`.
pub fn misses_hypersurface(t: &ToricArrangement, i: usize, big_n: i64, x: &[i64]) -> bool {
    let h = &t.hypersurfaces()[i];
    let ax: i64 = h.exponent().iter().zip(x).map(|(a, b)| a * b).sum();
    let (p, q) = (h.offset().numer().to_i64().unwrap(), h.offset().denom().to_i64().unwrap());
    (q * ax - p * big_n).rem_euclid(q * big_n) != 0
}
