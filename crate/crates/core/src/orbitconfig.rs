//! Strata and Euler characteristics of orbit configuration spaces
//! `F_Γ(Σ_{g,k}, n)` for a finite group `Γ` acting freely.
//!
//! A point `x ∈ Σ_g^n` determines a partition of `{1..n}` (points in a common
//! orbit) and, inside each block, the group elements relating its points to
//! the least one. Blocks landing on punctures also record which puncture the
//! least point sits on. Group labels are elements of `Z/m`; the puncture
//! `l` (1-based) lies in orbit `(l - 1) / m` at position `(l - 1) % m`, and
//! a generator moves each puncture one position along its orbit.

use std::collections::BTreeSet;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};

/// Enumeration refuses to materialize more strata than this.
pub const STRATA_LIMIT: u64 = 1_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct OrbitConfigSpec {
    pub genus: u32,
    pub punctures: u32,
    pub points: usize,
    pub group_order: u32,
    /// The group is cyclic, so labels compose in `Z/m`.
    pub cyclic: bool,
}

impl OrbitConfigSpec {
    pub fn new(genus: u32, punctures: u32, points: usize, group_order: u32) -> Result<Self> {
        let s = OrbitConfigSpec { genus, punctures, points, group_order, cyclic: true };
        s.validate()?;
        Ok(s)
    }

    pub fn validate(&self) -> Result<()> {
        if self.points == 0 {
            return Err(Error::InvalidOrbitSpec("need at least one point".into()));
        }
        if self.group_order == 0 {
            return Err(Error::InvalidOrbitSpec("group order must be positive".into()));
        }
        if self.punctures > 0 && !self.punctures.is_multiple_of(self.group_order) {
            return Err(Error::InvalidOrbitSpec(format!(
                "a free action of a group of order {} needs the puncture count {} to be a multiple of it",
                self.group_order, self.punctures
            )));
        }
        Ok(())
    }

    pub fn puncture_orbits(&self) -> u32 {
        self.punctures / self.group_order
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum BlockKind {
    Surface,
    /// The least point of the block sits on this puncture (1-based).
    Puncture { puncture: u32 },
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Block {
    /// 1-based, increasing.
    pub elements: Vec<usize>,
    /// `x_e = labels[i] · x_{elements[0]}`, so `labels[0] = 0`.
    pub labels: Vec<u32>,
    pub kind: BlockKind,
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct OrbitStratum {
    pub blocks: Vec<Block>,
}

/// Hypersurfaces `x_i = γ x_j` (`i < j`) and `x_i = p_l`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct StratumHypersurfaces {
    pub diagonals: BTreeSet<(usize, usize, u32)>,
    pub punctures: BTreeSet<(usize, u32)>,
}

impl OrbitStratum {
    pub fn partition(&self) -> Vec<Vec<usize>> {
        self.blocks.iter().map(|b| b.elements.clone()).collect()
    }

    pub fn is_open(&self) -> bool {
        self.blocks.iter().all(|b| b.elements.len() == 1 && b.kind == BlockKind::Surface)
    }

    /// Hypersurfaces containing the stratum. Needs the group law, so only
    /// cyclic groups (or orders below 4, which are all cyclic) are accepted.
    pub fn hypersurfaces(&self, spec: &OrbitConfigSpec) -> Result<StratumHypersurfaces> {
        let m = spec.group_order;
        if !spec.cyclic && m >= 4 {
            return Err(Error::InvalidOrbitSpec("closure relations need a cyclic group".into()));
        }
        let mut out = StratumHypersurfaces::default();
        for b in &self.blocks {
            for (a, (&i, &gi)) in b.elements.iter().zip(&b.labels).enumerate() {
                for (&j, &gj) in b.elements.iter().zip(&b.labels).skip(a + 1) {
                    out.diagonals.insert((i, j, (gi + m - gj) % m));
                }
                if let BlockKind::Puncture { puncture } = b.kind {
                    let orbit = (puncture - 1) / m;
                    let pos = (puncture - 1) % m;
                    out.punctures.insert((i, orbit * m + (pos + gi) % m + 1));
                }
            }
        }
        Ok(out)
    }

    /// Whether `other` lies in the closure of `self`.
    pub fn closure_contains(&self, other: &OrbitStratum, spec: &OrbitConfigSpec) -> Result<bool> {
        let (a, b) = (self.hypersurfaces(spec)?, other.hypersurfaces(spec)?);
        Ok(a.diagonals.is_subset(&b.diagonals) && a.punctures.is_subset(&b.punctures))
    }
}

/// All set partitions of `{1..n}`, blocks ordered by least element.
pub fn set_partitions(n: usize) -> Vec<Vec<Vec<usize>>> {
    fn rec(i: usize, n: usize, cur: &mut Vec<Vec<usize>>, out: &mut Vec<Vec<Vec<usize>>>) {
        if i > n {
            out.push(cur.clone());
            return;
        }
        for b in 0..cur.len() {
            cur[b].push(i);
            rec(i + 1, n, cur, out);
            cur[b].pop();
        }
        cur.push(vec![i]);
        rec(i + 1, n, cur, out);
        cur.pop();
    }
    let mut out = Vec::new();
    rec(1, n, &mut Vec::new(), &mut out);
    out
}

/// Number of strata, without enumerating them.
pub fn count_strata(spec: &OrbitConfigSpec) -> Result<BigUint> {
    spec.validate()?;
    let n = spec.points;
    let m = BigUint::from(spec.group_order);
    let k = spec.punctures as u64;
    // stirling[j] = S(n, j)
    let mut stirling = vec![BigUint::one()];
    for i in 1..=n {
        let mut next = vec![BigUint::zero(); i + 1];
        for j in 1..=i {
            let carry = if j < i { &stirling[j] * BigUint::from(j) } else { BigUint::zero() };
            next[j] = carry + &stirling[j - 1];
        }
        stirling = next;
    }
    let mut total = BigUint::zero();
    for (j, s) in stirling.iter().enumerate().skip(1) {
        // Σ_s C(j, s) k (k - m) ... (k - (s - 1) m)
        let mut inner = BigUint::zero();
        let mut falling = BigUint::one();
        let mut binom = BigUint::one();
        for t in 0..=j {
            inner += &binom * &falling;
            let left = k as i64 - t as i64 * spec.group_order as i64;
            if left <= 0 {
                break;
            }
            falling *= BigUint::from(left as u64);
            binom = binom * BigUint::from(j - t) / BigUint::from(t + 1);
        }
        total += s * m.pow((n - j) as u32) * inner;
    }
    Ok(total)
}

fn label_vectors(len: usize, m: u32) -> Vec<Vec<u32>> {
    let mut out = vec![vec![0]];
    for _ in 1..len {
        out = out.into_iter().flat_map(|v| (0..m).map(move |g| [v.clone(), vec![g]].concat())).collect();
    }
    out
}

pub fn enumerate_strata(spec: &OrbitConfigSpec) -> Result<Vec<OrbitStratum>> {
    let count = count_strata(spec)?;
    if count > BigUint::from(STRATA_LIMIT) {
        return Err(Error::TooLarge(format!("{count} strata")));
    }
    let m = spec.group_order;
    let orbits = spec.puncture_orbits();
    let mut out = Vec::new();
    for partition in set_partitions(spec.points) {
        let mut partial: Vec<(Vec<Block>, BTreeSet<u32>)> = vec![(Vec::new(), BTreeSet::new())];
        for block in &partition {
            let mut next = Vec::new();
            for (blocks, used) in partial {
                for labels in label_vectors(block.len(), m) {
                    let surface = Block { elements: block.clone(), labels: labels.clone(), kind: BlockKind::Surface };
                    next.push(([blocks.clone(), vec![surface]].concat(), used.clone()));
                    for o in (0..orbits).filter(|o| !used.contains(o)) {
                        for pos in 0..m {
                            let kind = BlockKind::Puncture { puncture: o * m + pos + 1 };
                            let b = Block { elements: block.clone(), labels: labels.clone(), kind };
                            let mut u = used.clone();
                            u.insert(o);
                            next.push(([blocks.clone(), vec![b]].concat(), u));
                        }
                    }
                }
            }
            partial = next;
        }
        out.extend(partial.into_iter().map(|(blocks, _)| OrbitStratum { blocks }));
    }
    Ok(out)
}

/// Number of surface blocks: the closure of the stratum is again an orbit
/// configuration space of that many points.
pub fn stratum_complement_type(s: &OrbitStratum) -> usize {
    s.blocks.iter().filter(|b| b.kind == BlockKind::Surface).count()
}

/// `∏_{i<n} (2 - 2g - k - i m)`.
pub fn euler_orbit_config(spec: &OrbitConfigSpec) -> BigInt {
    let base = 2 - 2 * spec.genus as i64 - spec.punctures as i64;
    (0..spec.points).map(|i| BigInt::from(base - i as i64 * spec.group_order as i64)).product()
}

/// Coefficients of `(1 + t)^{2 - 2g}` through `t^{n_max}`, by expanding the
/// polynomial `(1 + t)^{|2 - 2g|}` and inverting it as a power series when
/// the exponent is negative.
pub fn unordered_euler_series(g: u32, n_max: usize) -> Vec<BigInt> {
    let e = 2 - 2 * g as i64;
    let mut poly = vec![BigInt::one()];
    for _ in 0..e.unsigned_abs() {
        let mut next = vec![BigInt::zero(); poly.len() + 1];
        for (i, c) in poly.iter().enumerate() {
            next[i] += c;
            next[i + 1] += c;
        }
        poly = next;
    }
    poly.resize(poly.len().max(n_max + 1), BigInt::zero());
    if e >= 0 {
        poly.truncate(n_max + 1);
        return poly;
    }
    let mut inv = vec![BigInt::zero(); n_max + 1];
    inv[0] = BigInt::one();
    for i in 1..=n_max {
        let s: BigInt = (1..=i).map(|j| &poly[j] * &inv[i - j]).sum();
        inv[i] = -s;
    }
    inv
}

/// `n! [t^n] (1 + t)^{2 - 2g} = ∏_{i<n} (2 - 2g - i)` for `1 <= n <= n_max`.
pub fn euler_unordered_series_check(g: u32, n_max: usize) -> bool {
    let series = unordered_euler_series(g, n_max);
    let mut fact = BigInt::one();
    (1..=n_max).all(|n| {
        fact *= n;
        let spec = OrbitConfigSpec { genus: g, punctures: 0, points: n, group_order: 1, cyclic: true };
        &fact * &series[n] == euler_orbit_config(&spec)
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Yes,
    No,
    Unknown,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Reason {
    /// `k > 0`: every stratum is Stein.
    Punctured,
    /// The plane: a central braid arrangement complement, so one dimension lower.
    Plane,
    /// Closed genus 1: elliptic arrangement complement.
    GenusOne,
    /// Closed genus at least 2, trivial group: the signed Euler characteristic has the wrong sign.
    HigherGenusTrivialGroup,
    /// Closed genus at least 2, nontrivial group, `n >= 2`.
    HigherGenusNontrivialGroup,
    /// `n = 1` on a closed surface, which is `Σ_g` itself.
    SingleClosedSurface,
    /// The sphere with trivial group.
    Sphere,
    /// The sphere with a nontrivial group and `n >= 2`.
    SphereNontrivialGroup,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct DualityClassification {
    pub is_duality: Verdict,
    pub is_abelian_duality: Verdict,
    pub dimension: Option<usize>,
    pub reason: Reason,
}

pub fn classify_duality(spec: &OrbitConfigSpec) -> DualityClassification {
    use Verdict::*;
    let n = spec.points;
    let c = |d, a, dim, reason| DualityClassification { is_duality: d, is_abelian_duality: a, dimension: dim, reason };
    if spec.genus == 0 && spec.punctures == 1 {
        return c(Yes, Yes, Some(n - 1), Reason::Plane);
    }
    if spec.punctures > 0 {
        return c(Yes, Yes, Some(n), Reason::Punctured);
    }
    match spec.genus {
        0 if spec.group_order == 1 || n == 1 => c(No, No, None, Reason::Sphere),
        0 => c(Unknown, Unknown, None, Reason::SphereNontrivialGroup),
        1 => c(Yes, Yes, Some(n + 1), Reason::GenusOne),
        _ if spec.group_order == 1 => c(Yes, No, Some(n + 1), Reason::HigherGenusTrivialGroup),
        _ if n == 1 => c(Yes, No, Some(n + 1), Reason::SingleClosedSurface),
        _ => c(Yes, Unknown, Some(n + 1), Reason::HigherGenusNontrivialGroup),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SignedEulerReport {
    #[serde(serialize_with = "crate::report::bigint_as_i64_or_string")]
    pub euler: BigInt,
    pub classification: DualityClassification,
    /// `(-1)^d χ >= 0` when classified abelian duality of dimension `d`.
    pub abelian_sign_ok: Option<bool>,
    /// `(-1)^{n+1} χ < 0` for closed genus at least 2 with trivial group.
    pub obstruction_holds: Option<bool>,
    pub consistent: bool,
}

fn signed(d: usize, x: &BigInt) -> BigInt {
    if d.is_multiple_of(2) {
        x.clone()
    } else {
        -x
    }
}

pub fn signed_euler_consistency(spec: &OrbitConfigSpec) -> SignedEulerReport {
    let euler = euler_orbit_config(spec);
    let classification = classify_duality(spec);
    let abelian_sign_ok = match (classification.is_abelian_duality, classification.dimension) {
        (Verdict::Yes, Some(d)) => Some(!signed(d, &euler).is_negative()),
        _ => None,
    };
    let obstruction_holds = (spec.genus >= 2 && spec.punctures == 0 && spec.group_order == 1)
        .then(|| signed(spec.points + 1, &euler).is_negative());
    let consistent = abelian_sign_ok.unwrap_or(true) && obstruction_holds.unwrap_or(true);
    SignedEulerReport { euler, classification, abelian_sign_ok, obstruction_holds, consistent }
}
