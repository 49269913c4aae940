//! Sweeps of rank-1 characters checking propagation of characteristic
//! varieties and generic vanishing for nonresonant characters.
//!
//! Violations are reported, never corrected.

use std::collections::BTreeMap;

use num_traits::ToPrimitive;
use serde::Serialize;

use crate::arrangement::{build_flat_poset, corank, duality_dimension, euler_characteristic, Arrangement, DualityKind};
use crate::error::Result;
use crate::salvetti::{betti_sweep, build_cw_model, enumerate_faces, sweep_characters, twisted_betti, Character, SweepMode};
use crate::wonderful::{all_gamma_classes, building_set, BuildingFlavor};

/// Values of a character on meridian classes; resonant where the value is 1.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NonresonanceCertificate {
    pub character: Vec<u64>,
    pub prime: u64,
    pub checked: Vec<(Vec<i64>, u64)>,
    pub resonant: Vec<Vec<i64>>,
}

impl NonresonanceCertificate {
    pub fn is_nonresonant(&self) -> bool {
        self.resonant.is_empty()
    }
}

pub fn is_nonresonant(rho: &Character, gammas: &[Vec<i64>]) -> NonresonanceCertificate {
    let checked: Vec<(Vec<i64>, u64)> = gammas.iter().map(|g| (g.clone(), rho.evaluate(g))).collect();
    let resonant = checked.iter().filter(|(_, v)| *v == 1).map(|(g, _)| g.clone()).collect();
    NonresonanceCertificate { character: rho.values().to_vec(), prime: rho.prime(), checked, resonant }
}

/// Betti vectors of every swept character, with the data the checks need.
#[derive(Clone, Debug)]
pub struct SweepData {
    pub prime: u64,
    pub mode: SweepMode,
    /// Duality dimension `n - r` used as the top of the propagation chain.
    pub n_eff: usize,
    pub euler: i64,
    pub characters: Vec<Character>,
    pub betti: Vec<Vec<usize>>,
    /// Betti vector of the trivial character, always computed.
    pub trivial_betti: Vec<usize>,
}

pub fn run_sweep(a: &Arrangement, prime: u64, mode: SweepMode) -> Result<SweepData> {
    let model = build_cw_model(&enumerate_faces(a)?);
    let n_eff = duality_dimension(DualityKind::Linear, a.dim(), corank(a), a.len())?;
    let euler = euler_characteristic(&build_flat_poset(a)).to_i64().expect("small Euler characteristic");
    let characters = sweep_characters(prime, a.len(), mode)?;
    let betti = betti_sweep(&model, &characters)?;
    let trivial_betti = twisted_betti(&model, &Character::trivial(prime, a.len())?)?;
    Ok(SweepData { prime, mode, n_eff, euler, characters, betti, trivial_betti })
}

fn alternating_sum(b: &[usize]) -> i64 {
    b.iter().enumerate().map(|(i, &v)| if i % 2 == 0 { v as i64 } else { -(v as i64) }).sum()
}

fn histogram(betti: &[Vec<usize>]) -> BTreeMap<String, usize> {
    let mut h = BTreeMap::new();
    for b in betti {
        let key = b.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(",");
        *h.entry(key).or_insert(0) += 1;
    }
    h
}

/// `ρ ∈ V^lower` but `ρ ∉ V^upper` with `lower < upper <= n_eff`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PropagationViolation {
    pub character: Vec<u64>,
    pub lower: usize,
    pub upper: usize,
    pub betti: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PropagationReport {
    pub arrangement: String,
    pub prime: u64,
    pub mode: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub samples: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    pub n_eff: usize,
    pub evaluated: usize,
    pub euler: i64,
    pub violations: Vec<PropagationViolation>,
    /// Characters whose alternating Betti sum differs from `χ(M)`.
    pub euler_mismatches: Vec<Vec<u64>>,
    /// `b_0(ρ) > 0` exactly for the trivial character.
    pub v0_is_trivial: bool,
    pub nonresonant_count: usize,
    pub betti_histogram: BTreeMap<String, usize>,
}

impl PropagationReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty() && self.v0_is_trivial && self.euler_mismatches.is_empty()
    }
}

/// Witness that a nonresonant character has the wrong cohomology.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VanishingException {
    pub character: Vec<u64>,
    pub betti: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GenericVanishingReport {
    pub arrangement: String,
    pub prime: u64,
    pub mode: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub samples: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    pub building: BuildingFlavor,
    pub n_eff: usize,
    pub evaluated: usize,
    pub euler: i64,
    /// Expected top Betti number `(-1)^{n_eff} χ(M)`.
    pub expected_top: i64,
    pub gamma_classes: Vec<Vec<i64>>,
    pub nonresonant_count: usize,
    pub violations: Vec<VanishingException>,
    pub betti_histogram: BTreeMap<String, usize>,
}

impl GenericVanishingReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

fn mode_fields(mode: SweepMode) -> (String, Option<usize>, Option<u64>) {
    match mode {
        SweepMode::Exhaustive => ("exhaustive".into(), None, None),
        SweepMode::Sampled { samples, seed } => ("sampled".into(), Some(samples), Some(seed)),
    }
}

impl SweepData {
    pub fn euler_mismatches(&self) -> Vec<Vec<u64>> {
        self.characters
            .iter()
            .zip(&self.betti)
            .filter(|(_, b)| alternating_sum(b) != self.euler)
            .map(|(c, _)| c.values().to_vec())
            .collect()
    }

    pub fn propagation(&self, gammas: &[Vec<i64>]) -> PropagationReport {
        let mut violations = Vec::new();
        for (c, b) in self.characters.iter().zip(&self.betti) {
            let top = self.n_eff.min(b.len() - 1);
            for lower in 0..=top {
                if b[lower] == 0 {
                    continue;
                }
                for upper in lower + 1..=top {
                    if b[upper] == 0 {
                        violations.push(PropagationViolation {
                            character: c.values().to_vec(),
                            lower,
                            upper,
                            betti: b.clone(),
                        });
                    }
                }
            }
        }
        let v0_is_trivial = self.trivial_betti[0] > 0
            && self.characters.iter().zip(&self.betti).all(|(c, b)| (b[0] > 0) == c.is_trivial());
        let (mode, samples, seed) = mode_fields(self.mode);
        PropagationReport {
            arrangement: String::new(),
            prime: self.prime,
            mode,
            samples,
            seed,
            n_eff: self.n_eff,
            evaluated: self.characters.len(),
            euler: self.euler,
            violations,
            euler_mismatches: self.euler_mismatches(),
            v0_is_trivial,
            nonresonant_count: self.nonresonant_count(gammas),
            betti_histogram: histogram(&self.betti),
        }
    }

    fn nonresonant_count(&self, gammas: &[Vec<i64>]) -> usize {
        self.characters.iter().filter(|c| is_nonresonant(c, gammas).is_nonresonant()).count()
    }

    pub fn generic_vanishing(&self, gammas: &[Vec<i64>], building: BuildingFlavor) -> GenericVanishingReport {
        let d = self.n_eff;
        let expected_top = if d.is_multiple_of(2) { self.euler } else { -self.euler };
        let mut violations = Vec::new();
        let mut nonresonant_count = 0;
        for (c, b) in self.characters.iter().zip(&self.betti) {
            if !is_nonresonant(c, gammas).is_nonresonant() {
                continue;
            }
            nonresonant_count += 1;
            let low_vanish = b[..d].iter().all(|&v| v == 0);
            let top_ok = b.get(d).map(|&v| v as i64) == Some(expected_top);
            if !(low_vanish && top_ok) {
                violations.push(VanishingException { character: c.values().to_vec(), betti: b.clone() });
            }
        }
        let (mode, samples, seed) = mode_fields(self.mode);
        GenericVanishingReport {
            arrangement: String::new(),
            prime: self.prime,
            mode,
            samples,
            seed,
            building,
            n_eff: d,
            evaluated: self.characters.len(),
            euler: self.euler,
            expected_top,
            gamma_classes: gammas.to_vec(),
            nonresonant_count,
            violations,
            betti_histogram: histogram(&self.betti),
        }
    }

    /// Characters grouped by the set of meridian classes they resonate on.
    pub fn resonance_summary(&self, gammas: &[Vec<i64>]) -> Vec<ResonanceCell> {
        let mut cells: BTreeMap<Vec<Vec<i64>>, usize> = BTreeMap::new();
        for c in &self.characters {
            *cells.entry(is_nonresonant(c, gammas).resonant).or_insert(0) += 1;
        }
        cells.into_iter().map(|(resonant, count)| ResonanceCell { resonant, count }).collect()
    }
}

fn gammas_for(a: &Arrangement, flavor: BuildingFlavor) -> Vec<Vec<i64>> {
    let poset = build_flat_poset(a);
    all_gamma_classes(&building_set(a, &poset, flavor))
}

pub fn check_propagation(a: &Arrangement, prime: u64, mode: SweepMode) -> Result<PropagationReport> {
    let data = run_sweep(a, prime, mode)?;
    Ok(data.propagation(&gammas_for(a, BuildingFlavor::Minimal)))
}

pub fn check_generic_vanishing(a: &Arrangement, prime: u64, mode: SweepMode, flavor: BuildingFlavor) -> Result<GenericVanishingReport> {
    let data = run_sweep(a, prime, mode)?;
    Ok(data.generic_vanishing(&gammas_for(a, flavor), flavor))
}

/// One row of the resonance table: characters resonating on exactly these
/// classes. The empty pattern is the nonresonant locus.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ResonanceCell {
    pub resonant: Vec<Vec<i64>>,
    pub count: usize,
}

pub fn resonance_locus_summary(a: &Arrangement, prime: u64, mode: SweepMode, flavor: BuildingFlavor) -> Result<Vec<ResonanceCell>> {
    let gammas = gammas_for(a, flavor);
    let characters = sweep_characters(prime, a.len(), mode)?;
    let mut cells: BTreeMap<Vec<Vec<i64>>, usize> = BTreeMap::new();
    for c in &characters {
        *cells.entry(is_nonresonant(c, &gammas).resonant).or_insert(0) += 1;
    }
    Ok(cells.into_iter().map(|(resonant, count)| ResonanceCell { resonant, count }).collect())
}
