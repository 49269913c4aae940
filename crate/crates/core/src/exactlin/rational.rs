use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Dense matrix of exact rationals, row-major.
///
/// `BigRational` keeps every entry in lowest terms with a positive
/// denominator, so structural equality is value equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigRational>,
}

impl RationalMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { rows, cols, data: vec![BigRational::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = BigRational::one();
        }
        m
    }

    /// Builds a matrix from rows; every row must have length `cols`.
    pub fn from_rows(cols: usize, rows: Vec<Vec<BigRational>>) -> Self {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * cols);
        for row in rows {
            assert_eq!(row.len(), cols, "ragged rational matrix");
            data.extend(row);
        }
        Self { rows: n, cols, data }
    }

    pub fn from_i64_rows(cols: usize, rows: &[&[i64]]) -> Self {
        Self::from_rows(
            cols,
            rows.iter()
                .map(|r| r.iter().map(|&v| BigRational::from_integer(BigInt::from(v))).collect())
                .collect(),
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[BigRational] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    /// Rank over the rationals by fraction-free (Bareiss) elimination.
    pub fn rank(&self) -> usize {
        let mut m = self.integer_rows();
        bareiss_rank(&mut m, self.rows, self.cols)
    }

    /// Each row scaled by the lcm of its denominators; row scaling keeps rank.
    fn integer_rows(&self) -> Vec<BigInt> {
        let mut out = Vec::with_capacity(self.data.len());
        for i in 0..self.rows {
            let row = self.row(i);
            let l = row.iter().fold(BigInt::one(), |acc, v| acc.lcm(v.denom()));
            out.extend(row.iter().map(|v| v.numer() * (&l / v.denom())));
        }
        out
    }

    /// Reduced row-echelon form and its pivot columns.
    pub fn rref(&self) -> (RationalMatrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m[(i, c)].is_zero()) else {
                continue;
            };
            m.swap_rows(r, p);
            let inv = m[(r, c)].recip();
            for j in c..m.cols {
                let v = &m[(r, j)] * &inv;
                m[(r, j)] = v;
            }
            for i in 0..m.rows {
                if i == r || m[(i, c)].is_zero() {
                    continue;
                }
                let f = m[(i, c)].clone();
                for j in c..m.cols {
                    let v = &m[(i, j)] - &f * &m[(r, j)];
                    m[(i, j)] = v;
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    /// Basis of the right kernel, one vector per free column of the RREF.
    pub fn nullspace(&self) -> Vec<Vec<BigRational>> {
        let (r, pivots) = self.rref();
        let mut basis = Vec::new();
        let mut pivot_of_col = vec![None; self.cols];
        for (i, &c) in pivots.iter().enumerate() {
            pivot_of_col[c] = Some(i);
        }
        for free in (0..self.cols).filter(|&c| pivot_of_col[c].is_none()) {
            let mut v = vec![BigRational::zero(); self.cols];
            v[free] = BigRational::one();
            for (i, &c) in pivots.iter().enumerate() {
                v[c] = -r[(i, free)].clone();
            }
            basis.push(v);
        }
        basis
    }

    /// One solution of `self · x = rhs`, or `None` when inconsistent.
    pub fn solve(&self, rhs: &[BigRational]) -> Option<Vec<BigRational>> {
        assert_eq!(rhs.len(), self.rows);
        let mut aug = Self::zeros(self.rows, self.cols + 1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug[(i, j)] = self[(i, j)].clone();
            }
            aug[(i, self.cols)] = rhs[i].clone();
        }
        let (r, pivots) = aug.rref();
        if pivots.last() == Some(&self.cols) {
            return None;
        }
        let mut x = vec![BigRational::zero(); self.cols];
        for (i, &c) in pivots.iter().enumerate() {
            x[c] = r[(i, self.cols)].clone();
        }
        Some(x)
    }

    pub fn mul_vec(&self, v: &[BigRational]) -> Vec<BigRational> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|i| self.row(i).iter().zip(v).map(|(a, b)| a * b).sum())
            .collect()
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }
}

fn bareiss_rank(m: &mut [BigInt], rows: usize, cols: usize) -> usize {
    let mut rank = 0;
    let mut prev = BigInt::one();
    for c in 0..cols {
        if rank == rows {
            break;
        }
        let Some(p) = (rank..rows).find(|&i| !m[i * cols + c].is_zero()) else {
            continue;
        };
        if p != rank {
            for j in 0..cols {
                m.swap(p * cols + j, rank * cols + j);
            }
        }
        let pivot = m[rank * cols + c].clone();
        for i in rank + 1..rows {
            let f = m[i * cols + c].clone();
            for j in c..cols {
                let v = (&pivot * &m[i * cols + j] - &f * &m[rank * cols + j]) / &prev;
                m[i * cols + j] = v;
            }
        }
        prev = pivot;
        rank += 1;
    }
    rank
}

impl std::ops::Index<(usize, usize)> for RationalMatrix {
    type Output = BigRational;
    fn index(&self, (i, j): (usize, usize)) -> &BigRational {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for RationalMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut BigRational {
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Debug for RationalMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "RationalMatrix {}x{}", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|v| v.to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

pub fn rational_rank(m: &RationalMatrix) -> usize {
    m.rank()
}

pub fn nullspace_rational(m: &RationalMatrix) -> Vec<Vec<BigRational>> {
    m.nullspace()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::{q, qi};

    #[test]
    fn rank_examples() {
        assert_eq!(RationalMatrix::identity(2).rank(), 2);
        assert_eq!(RationalMatrix::zeros(3, 4).rank(), 0);
        let m = RationalMatrix::from_i64_rows(3, &[&[1, 1, 0], &[0, 1, 1], &[1, 2, 1]]);
        assert_eq!(m.rank(), 2);
        assert_eq!(m.transpose().rank(), 2);
    }

    #[test]
    fn rank_with_fractions() {
        let m = RationalMatrix::from_rows(2, vec![vec![q(1, 2), q(1, 3)], vec![q(3, 2), qi(1)]]);
        assert_eq!(m.rank(), 1);
        let m = RationalMatrix::from_rows(2, vec![vec![q(1, 2), q(1, 3)], vec![q(3, 2), q(1, 2)]]);
        assert_eq!(m.rank(), 2);
    }

    #[test]
    fn nullspace_examples() {
        assert!(RationalMatrix::identity(2).nullspace().is_empty());

        let m = RationalMatrix::from_i64_rows(2, &[&[1, 1]]);
        let ns = m.nullspace();
        assert_eq!(ns.len(), 1);
        assert_eq!(ns[0][0], -ns[0][1].clone());

        let m = RationalMatrix::from_i64_rows(3, &[&[1, 0, 1], &[0, 1, 1]]);
        let ns = m.nullspace();
        assert_eq!(ns.len(), 1);
        // proportional to (1, 1, -1)
        let v = &ns[0];
        assert_eq!(v[0], v[1]);
        assert_eq!(v[0], -v[2].clone());
        assert!(m.mul_vec(v).iter().all(|x| x.is_zero()));
    }

    #[test]
    fn solve_consistent_and_not() {
        let m = RationalMatrix::from_i64_rows(2, &[&[1, 1], &[1, -1]]);
        let x = m.solve(&[qi(3), qi(1)]).unwrap();
        assert_eq!(x, vec![qi(2), qi(1)]);
        let m = RationalMatrix::from_i64_rows(2, &[&[1, 1], &[2, 2]]);
        assert!(m.solve(&[qi(1), qi(3)]).is_none());
    }
}
