use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::cw::CWModel;
use crate::error::{Error, Result};
use crate::exactlin::{is_prime, mod_inv, mod_pow, rank_mod_p_in_place};

/// Rank-1 character: one unit `t_H` of GF(p) per hyperplane meridian.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Character {
    prime: u64,
    values: Vec<u64>,
}

impl Character {
    pub fn new(prime: u64, values: Vec<u64>) -> Result<Self> {
        if prime < 3 || !is_prime(prime) {
            return Err(Error::NotPrime(prime));
        }
        let values: Vec<u64> = values.into_iter().map(|v| v % prime).collect();
        if let Some(i) = values.iter().position(|&v| v == 0) {
            return Err(Error::ZeroCharacter(i));
        }
        Ok(Self { prime, values })
    }

    pub fn trivial(prime: u64, len: usize) -> Result<Self> {
        Self::new(prime, vec![1; len])
    }

    pub fn prime(&self) -> u64 {
        self.prime
    }

    pub fn values(&self) -> &[u64] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn is_trivial(&self) -> bool {
        self.values.iter().all(|&v| v == 1)
    }

    /// `∏ t_H^{v_H}`; negative exponents use inverses.
    pub fn evaluate(&self, exponent: &[i64]) -> u64 {
        let p = self.prime;
        exponent.iter().zip(&self.values).fold(1u64, |acc, (&e, &t)| {
            let base = if e < 0 { mod_inv(t, p) } else { t };
            let f = mod_pow(base, e.unsigned_abs(), p);
            ((acc as u128 * f as u128) % p as u128) as u64
        })
    }

    /// Same character with the coordinates permuted: `out[i] = self[perm[i]]`.
    pub fn permuted(&self, perm: &[usize]) -> Character {
        Character { prime: self.prime, values: perm.iter().map(|&i| self.values[i]).collect() }
    }
}

/// `(b_0, ..., b_n)` with `b_q = dim H^q(M, k_ρ)` over GF(p).
///
/// Cochains are `Hom(C_*, k_ρ)`, so `δ^q` is the transpose of `∂_{q+1}`
/// with `t ↦ ρ`, and `b_q = c_q - rank ∂_q(ρ) - rank ∂_{q+1}(ρ)`.
pub fn twisted_betti(model: &CWModel, rho: &Character) -> Result<Vec<usize>> {
    if rho.len() != model.num_hyperplanes() {
        return Err(Error::CharacterLength { expected: model.num_hyperplanes(), found: rho.len() });
    }
    let p = rho.prime;
    let n = model.dim();
    let counts = model.cell_counts();
    let mut ranks = vec![0usize; n + 2];
    for k in 1..=n {
        let (rows, cols) = (counts[k - 1], counts[k]);
        let mut buf = vec![0u64; rows * cols];
        for e in model.boundary(k) {
            let v = rho.evaluate(&e.exponent);
            let v = if e.sign < 0 { (p - v) % p } else { v };
            let slot = &mut buf[e.row * cols + e.col];
            *slot = (*slot + v) % p;
        }
        ranks[k] = rank_mod_p_in_place(&mut buf, rows, cols, p);
    }
    Ok((0..=n).map(|k| counts[k] - ranks[k] - ranks[k + 1]).collect())
}

/// How characters are drawn for a sweep.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SweepMode {
    Exhaustive,
    Sampled { samples: usize, seed: u64 },
}

impl SweepMode {
    pub fn name(&self) -> &'static str {
        match self {
            SweepMode::Exhaustive => "exhaustive",
            SweepMode::Sampled { .. } => "sampled",
        }
    }
}

/// Exhaustive sweeps are capped at this many characters.
pub const EXHAUSTIVE_BUDGET: u64 = 1_000_000;

/// `(p - 1)^len`, saturating.
pub fn torus_size(prime: u64, len: usize) -> u64 {
    (0..len).fold(1u64, |acc, _| acc.saturating_mul(prime - 1))
}

/// Characters of the sweep. Exhaustive order is lexicographic in the
/// residues `1..p`; sampled characters come from a ChaCha8 stream seeded
/// with `seed`, kept in draw order (repeats allowed).
pub fn sweep_characters(prime: u64, len: usize, mode: SweepMode) -> Result<Vec<Character>> {
    if prime < 3 || !is_prime(prime) {
        return Err(Error::NotPrime(prime));
    }
    match mode {
        SweepMode::Exhaustive => {
            let total = torus_size(prime, len);
            if total > EXHAUSTIVE_BUDGET {
                return Err(Error::Usage(format!(
                    "exhaustive sweep of {total} characters exceeds the budget of {EXHAUSTIVE_BUDGET}; use --samples N --seed S"
                )));
            }
            let mut out = Vec::with_capacity(total as usize);
            let mut cur = vec![1u64; len];
            loop {
                out.push(Character { prime, values: cur.clone() });
                let mut i = len;
                loop {
                    if i == 0 {
                        return Ok(out);
                    }
                    i -= 1;
                    if cur[i] + 1 < prime {
                        cur[i] += 1;
                        break;
                    }
                    cur[i] = 1;
                }
            }
        }
        SweepMode::Sampled { samples, seed } => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            Ok((0..samples)
                .map(|_| Character { prime, values: (0..len).map(|_| rng.gen_range(1..prime)).collect() })
                .collect())
        }
    }
}

/// Twisted Betti numbers for every character, in input order.
pub fn betti_sweep(model: &CWModel, characters: &[Character]) -> Result<Vec<Vec<usize>>> {
    characters.par_iter().map(|rho| twisted_betti(model, rho)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;
    use crate::salvetti::{build_cw_model, enumerate_faces};

    fn model(a: &crate::arrangement::Arrangement) -> CWModel {
        build_cw_model(&enumerate_faces(a).unwrap())
    }

    fn ch(p: u64, v: &[u64]) -> Character {
        Character::new(p, v.to_vec()).unwrap()
    }

    #[test]
    fn circle_monodromy() {
        let m = model(&corpus::points_on_line(1));
        assert_eq!(twisted_betti(&m, &ch(5, &[1])).unwrap(), vec![1, 1]);
        for t in 2..5 {
            assert_eq!(twisted_betti(&m, &ch(5, &[t])).unwrap(), vec![0, 0]);
        }
    }

    #[test]
    fn torus_kunneth() {
        let m = model(&corpus::boolean(2));
        assert_eq!(twisted_betti(&m, &ch(5, &[2, 3])).unwrap(), vec![0, 0, 0]);
        assert_eq!(twisted_betti(&m, &ch(5, &[1, 3])).unwrap(), vec![0, 0, 0]);
        assert_eq!(twisted_betti(&m, &ch(5, &[1, 1])).unwrap(), vec![1, 2, 1]);
    }

    #[test]
    fn concurrent_lines_resonant_character() {
        let m = model(&corpus::concurrent3());
        assert_eq!(twisted_betti(&m, &ch(7, &[2, 4, 1])).unwrap(), vec![0, 1, 1]);
        // product ≠ 1 kills everything: the central C* factor has nontrivial monodromy
        assert_eq!(twisted_betti(&m, &ch(7, &[2, 3, 1])).unwrap(), vec![0, 0, 0]);
    }

    #[test]
    fn character_validation() {
        assert_eq!(Character::new(5, vec![1, 0]).unwrap_err(), Error::ZeroCharacter(1));
        assert_eq!(Character::new(5, vec![1, 5]).unwrap_err(), Error::ZeroCharacter(1));
        assert_eq!(Character::new(4, vec![1]).unwrap_err(), Error::NotPrime(4));
        let m = model(&corpus::boolean(2));
        assert!(matches!(twisted_betti(&m, &ch(5, &[2])), Err(Error::CharacterLength { .. })));
    }

    #[test]
    fn evaluation() {
        let rho = ch(7, &[2, 4, 1]);
        assert_eq!(rho.evaluate(&[1, 1, 1]), 1);
        assert_eq!(rho.evaluate(&[1, 0, 0]), 2);
        assert_eq!(rho.evaluate(&[-1, 0, 0]), 4);
        assert_eq!(rho.evaluate(&[2, 1, 5]), 2);
    }

    #[test]
    fn sweeps() {
        let all = sweep_characters(5, 2, SweepMode::Exhaustive).unwrap();
        assert_eq!(all.len(), 16);
        assert_eq!(all[0].values(), &[1, 1]);
        assert_eq!(all[1].values(), &[1, 2]);
        assert_eq!(all[15].values(), &[4, 4]);
        assert!(all.windows(2).all(|w| w[0] < w[1]));

        let a = sweep_characters(7, 6, SweepMode::Sampled { samples: 50, seed: 9 }).unwrap();
        let b = sweep_characters(7, 6, SweepMode::Sampled { samples: 50, seed: 9 }).unwrap();
        assert_eq!(a, b);
        assert!(a.iter().all(|c| c.values().iter().all(|&v| (1..7).contains(&v))));
        let c = sweep_characters(7, 6, SweepMode::Sampled { samples: 50, seed: 10 }).unwrap();
        assert_ne!(a, c);

        assert!(sweep_characters(7, 9, SweepMode::Exhaustive).is_err());
        assert_eq!(torus_size(5, 3), 64);
    }
}
