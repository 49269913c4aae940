use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// Dense integer polynomial in `t`, lowest degree first, no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Polynomial(Vec<BigInt>);

impl Polynomial {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self(coeffs)
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn one() -> Self {
        Self(vec![BigInt::one()])
    }

    /// `(1 + t)^k`
    pub fn one_plus_t_pow(k: usize) -> Self {
        let base = Self::from_i64(&[1, 1]);
        (0..k).fold(Self::one(), |acc, _| acc.mul(&base))
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.0
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.0.get(i).cloned().unwrap_or_default()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn eval_i64(&self, t: i64) -> BigInt {
        let t = BigInt::from(t);
        self.0.iter().rev().fold(BigInt::zero(), |acc, c| acc * &t + c)
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        let n = self.0.len().max(other.0.len());
        Self::new((0..n).map(|i| self.coeff(i) + other.coeff(i)).collect())
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        if self.0.is_empty() || other.0.is_empty() {
            return Self(Vec::new());
        }
        let mut out = vec![BigInt::zero(); self.0.len() + other.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in other.0.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    pub fn scale(&self, k: &BigInt) -> Polynomial {
        Self::new(self.0.iter().map(|c| c * k).collect())
    }
}

/// `1 + 3t + 2t^2`
impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.0.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if c.is_negative() { '-' } else { '+' })?;
            }
            first = false;
            let show_mag = i == 0 || !mag.is_one();
            if show_mag {
                write!(f, "{mag}")?;
            }
            match i {
                0 => {}
                1 => write!(f, "t")?,
                _ => write!(f, "t^{i}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn display() {
        assert_eq!(Polynomial::from_i64(&[1, 2, 1]).to_string(), "1 + 2t + t^2");
        assert_eq!(Polynomial::from_i64(&[1, -3, 0, 2]).to_string(), "1 - 3t + 2t^3");
        assert_eq!(Polynomial::from_i64(&[0, 0]).to_string(), "0");
        assert_eq!(Polynomial::from_i64(&[0, -1]).to_string(), "-t");
    }

    #[test]
    fn arithmetic() {
        let p = Polynomial::one_plus_t_pow(3);
        assert_eq!(p, Polynomial::from_i64(&[1, 3, 3, 1]));
        assert_eq!(p.eval_i64(-1), BigInt::zero());
        assert_eq!(p.degree(), Some(3));
        assert_eq!(Polynomial::from_i64(&[1, 2]).add(&Polynomial::from_i64(&[0, 1, 5])), Polynomial::from_i64(&[1, 3, 5]));
    }
}
