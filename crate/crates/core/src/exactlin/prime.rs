use crate::error::{Error, Result};

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

#[inline]
fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

pub fn mod_pow(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, p);
        }
        base = mul_mod(base, base, p);
        exp >>= 1;
    }
    acc
}

/// Inverse of a nonzero residue via Fermat; `p` must be prime.
pub fn mod_inv(a: u64, p: u64) -> u64 {
    debug_assert!(!a.is_multiple_of(p));
    mod_pow(a, p - 2, p)
}

/// Matrix over GF(p) for a prime `p >= 3`; entries always reduced.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrimeFieldMatrix {
    p: u64,
    rows: usize,
    cols: usize,
    data: Vec<u64>,
}

impl PrimeFieldMatrix {
    pub fn new(p: u64, rows: usize, cols: usize) -> Result<Self> {
        check_modulus(p)?;
        Ok(Self { p, rows, cols, data: vec![0; rows * cols] })
    }

    /// Reduces signed integer entries mod `p`.
    pub fn from_i64_rows(p: u64, cols: usize, rows: &[&[i64]]) -> Result<Self> {
        check_modulus(p)?;
        let mut data = Vec::with_capacity(rows.len() * cols);
        for row in rows {
            assert_eq!(row.len(), cols, "ragged matrix");
            data.extend(row.iter().map(|&v| v.rem_euclid(p as i64) as u64));
        }
        Ok(Self { p, rows: rows.len(), cols, data })
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: u64) {
        self.data[i * self.cols + j] = v % self.p;
    }

    pub fn rank(&self) -> usize {
        let mut scratch = self.data.clone();
        rank_mod_p_in_place(&mut scratch, self.rows, self.cols, self.p)
    }
}

fn check_modulus(p: u64) -> Result<()> {
    if p < 3 || !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    Ok(())
}

/// Gaussian elimination on a row-major buffer of residues; destroys it.
///
/// Pivot: first row (from the current one down) with a nonzero entry in the
/// leftmost remaining column.
pub fn rank_mod_p_in_place(m: &mut [u64], rows: usize, cols: usize, p: u64) -> usize {
    debug_assert_eq!(m.len(), rows * cols);
    let mut rank = 0;
    for c in 0..cols {
        if rank == rows {
            break;
        }
        let Some(piv) = (rank..rows).find(|&i| m[i * cols + c] != 0) else {
            continue;
        };
        if piv != rank {
            for j in c..cols {
                m.swap(piv * cols + j, rank * cols + j);
            }
        }
        let inv = mod_inv(m[rank * cols + c], p);
        for j in c..cols {
            m[rank * cols + j] = mul_mod(m[rank * cols + j], inv, p);
        }
        for i in rank + 1..rows {
            let f = m[i * cols + c];
            if f == 0 {
                continue;
            }
            for j in c..cols {
                let sub = mul_mod(f, m[rank * cols + j], p);
                let v = m[i * cols + j];
                m[i * cols + j] = if v >= sub { v - sub } else { v + p - sub };
            }
        }
        rank += 1;
    }
    rank
}

pub fn prime_field_rank(m: &PrimeFieldMatrix) -> usize {
    m.rank()
}
