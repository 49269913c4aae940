use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Dense matrix of arbitrary-precision integers, row-major.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntegerMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntegerMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { rows, cols, data: vec![BigInt::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = BigInt::one();
        }
        m
    }

    pub fn from_rows(cols: usize, rows: Vec<Vec<BigInt>>) -> Self {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * cols);
        for row in rows {
            assert_eq!(row.len(), cols, "ragged integer matrix");
            data.extend(row);
        }
        Self { rows: n, cols, data }
    }

    pub fn from_i64_rows(cols: usize, rows: &[&[i64]]) -> Self {
        Self::from_rows(cols, rows.iter().map(|r| r.iter().map(|&v| BigInt::from(v)).collect()).collect())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<BigInt> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
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

    pub fn mul(&self, other: &IntegerMatrix) -> IntegerMatrix {
        assert_eq!(self.cols, other.rows);
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    out[(i, j)] += a * &other[(k, j)];
                }
            }
        }
        out
    }

    /// Determinant by fraction-free elimination; square matrices only.
    pub fn determinant(&self) -> BigInt {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut m = self.data.clone();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n {
            let Some(p) = (k..n).find(|&i| !m[i * n + k].is_zero()) else {
                return BigInt::zero();
            };
            if p != k {
                for j in 0..n {
                    m.swap(p * n + j, k * n + j);
                }
                sign = -sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = (&m[k * n + k] * &m[i * n + j] - &m[i * n + k] * &m[k * n + j]) / &prev;
                    m[i * n + j] = v;
                }
            }
            prev = m[k * n + k].clone();
        }
        if n == 0 {
            return BigInt::one();
        }
        sign * &m[n * n - 1]
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.data.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a != b {
            for i in 0..self.rows {
                self.data.swap(i * self.cols + a, i * self.cols + b);
            }
        }
    }

    /// row[dst] += f * row[src]
    fn add_row(&mut self, dst: usize, src: usize, f: &BigInt) {
        for j in 0..self.cols {
            let v = f * &self[(src, j)];
            self[(dst, j)] += v;
        }
    }

    /// col[dst] += f * col[src]
    fn add_col(&mut self, dst: usize, src: usize, f: &BigInt) {
        for i in 0..self.rows {
            let v = f * &self[(i, src)];
            self[(i, dst)] += v;
        }
    }

    fn negate_row(&mut self, i: usize) {
        for j in 0..self.cols {
            let v = -&self[(i, j)];
            self[(i, j)] = v;
        }
    }
}

impl std::ops::Index<(usize, usize)> for IntegerMatrix {
    type Output = BigInt;
    fn index(&self, (i, j): (usize, usize)) -> &BigInt {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for IntegerMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut BigInt {
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Debug for IntegerMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "IntegerMatrix {}x{}", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|v| v.to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// `left · m · right = diag(diagonal)` with `left`, `right` unimodular and
/// `diagonal[0] | diagonal[1] | ...`, all entries nonnegative.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmithForm {
    pub diagonal: Vec<BigInt>,
    pub left: IntegerMatrix,
    pub right: IntegerMatrix,
}

impl SmithForm {
    /// Number of nonzero invariant factors.
    pub fn rank(&self) -> usize {
        self.diagonal.iter().take_while(|d| !d.is_zero()).count()
    }
}

pub fn smith_normal_form(m: &IntegerMatrix) -> SmithForm {
    let (rows, cols) = (m.rows, m.cols);
    let mut a = m.clone();
    let mut left = IntegerMatrix::identity(rows);
    let mut right = IntegerMatrix::identity(cols);
    let steps = rows.min(cols);

    for t in 0..steps {
        // smallest nonzero |entry| in the trailing block; ties broken row-major
        let mut best: Option<(usize, usize)> = None;
        for i in t..rows {
            for j in t..cols {
                if a[(i, j)].is_zero() {
                    continue;
                }
                if best.is_none_or(|(bi, bj)| a[(i, j)].abs() < a[(bi, bj)].abs()) {
                    best = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = best else { break };
        a.swap_rows(t, pi);
        left.swap_rows(t, pi);
        a.swap_cols(t, pj);
        right.swap_cols(t, pj);

        loop {
            let mut dirty = false;
            for i in t + 1..rows {
                if a[(i, t)].is_zero() {
                    continue;
                }
                let f = -a[(i, t)].div_floor(&a[(t, t)]);
                a.add_row(i, t, &f);
                left.add_row(i, t, &f);
                if !a[(i, t)].is_zero() {
                    a.swap_rows(t, i);
                    left.swap_rows(t, i);
                    dirty = true;
                }
            }
            for j in t + 1..cols {
                if a[(t, j)].is_zero() {
                    continue;
                }
                let f = -a[(t, j)].div_floor(&a[(t, t)]);
                a.add_col(j, t, &f);
                right.add_col(j, t, &f);
                if !a[(t, j)].is_zero() {
                    a.swap_cols(t, j);
                    right.swap_cols(t, j);
                    dirty = true;
                }
            }
            if dirty {
                continue;
            }
            // enforce divisibility of the trailing block by the pivot
            let bad = (t + 1..rows)
                .flat_map(|i| (t + 1..cols).map(move |j| (i, j)))
                .find(|&(i, j)| !a[(i, j)].is_multiple_of(&a[(t, t)]));
            match bad {
                Some((i, _)) => {
                    let one = BigInt::one();
                    a.add_row(t, i, &one);
                    left.add_row(t, i, &one);
                }
                None => break,
            }
        }
        if a[(t, t)].is_negative() {
            a.negate_row(t);
            left.negate_row(t);
        }
    }

    let diagonal = (0..steps).map(|i| a[(i, i)].clone()).collect();
    SmithForm { diagonal, left, right }
}

/// Row-style Hermite normal form with the zero rows dropped.
///
/// Pivots are positive, entries above a pivot lie in `0..pivot`, so two
/// integer matrices span the same row lattice iff their HNFs coincide.
pub fn hermite_normal_form(m: &IntegerMatrix) -> IntegerMatrix {
    let mut a = m.clone();
    let (rows, cols) = (a.rows, a.cols);
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        loop {
            // Euclid down the column until one nonzero entry remains at or below r
            let nz: Vec<usize> = (r..rows).filter(|&i| !a[(i, c)].is_zero()).collect();
            if nz.is_empty() {
                break;
            }
            let p = *nz.iter().min_by(|&&x, &&y| a[(x, c)].abs().cmp(&a[(y, c)].abs()).then(x.cmp(&y))).unwrap();
            a.swap_rows(r, p);
            let mut done = true;
            for i in r + 1..rows {
                if a[(i, c)].is_zero() {
                    continue;
                }
                let f = -a[(i, c)].div_floor(&a[(r, c)]);
                a.add_row(i, r, &f);
                if !a[(i, c)].is_zero() {
                    done = false;
                }
            }
            if done {
                break;
            }
        }
        if a[(r, c)].is_zero() {
            continue;
        }
        if a[(r, c)].is_negative() {
            a.negate_row(r);
        }
        for i in 0..r {
            let f = -a[(i, c)].div_floor(&a[(r, c)]);
            if !f.is_zero() {
                a.add_row(i, r, &f);
            }
        }
        r += 1;
    }
    let kept: Vec<Vec<BigInt>> = (0..r).map(|i| a.row(i).to_vec()).collect();
    IntegerMatrix::from_rows(cols, kept)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn is_diagonal_divisible(d: &IntegerMatrix, diag: &[BigInt]) -> bool {
        for i in 0..d.rows() {
            for j in 0..d.cols() {
                if i != j && !d[(i, j)].is_zero() {
                    return false;
                }
            }
        }
        diag.windows(2).all(|w| {
            (w[0].is_zero() && w[1].is_zero()) || (!w[0].is_zero() && w[1].is_multiple_of(&w[0]))
        })
    }

    fn check(m: &IntegerMatrix, expected: &[i64]) {
        let s = smith_normal_form(m);
        let d = s.left.mul(m).mul(&s.right);
        assert!(is_diagonal_divisible(&d, &s.diagonal), "{d:?}");
        assert_eq!(s.left.determinant().abs(), BigInt::one());
        assert_eq!(s.right.determinant().abs(), BigInt::one());
        let exp: Vec<BigInt> = expected.iter().map(|&v| BigInt::from(v)).collect();
        assert_eq!(s.diagonal, exp);
    }

    #[test]
    fn snf_examples() {
        check(&IntegerMatrix::from_i64_rows(2, &[&[2, 0], &[0, 3]]), &[1, 6]);
        check(&IntegerMatrix::identity(3), &[1, 1, 1]);
        check(&IntegerMatrix::from_i64_rows(2, &[&[2, 4]]), &[2]);
        check(&IntegerMatrix::from_i64_rows(3, &[&[2, 4, 4], &[-6, 6, 12], &[10, -4, -16]]), &[2, 6, 12]);
        check(&IntegerMatrix::zeros(2, 3), &[0, 0]);
    }

    #[test]
    fn hnf_canonical() {
        let a = IntegerMatrix::from_i64_rows(2, &[&[1, 1], &[1, -1]]);
        let b = IntegerMatrix::from_i64_rows(2, &[&[2, 0], &[1, 1], &[0, 2]]);
        assert_eq!(hermite_normal_form(&a), hermite_normal_form(&b));
        let h = hermite_normal_form(&a);
        assert_eq!(h, IntegerMatrix::from_i64_rows(2, &[&[1, 1], &[0, 2]]));
    }

    #[test]
    fn determinant_small() {
        let m = IntegerMatrix::from_i64_rows(3, &[&[2, 0, 1], &[1, 3, 2], &[1, 1, 2]]);
        assert_eq!(m.determinant(), BigInt::from(6));
        let m = IntegerMatrix::from_i64_rows(2, &[&[0, 1], &[1, 0]]);
        assert_eq!(m.determinant(), BigInt::from(-1));
    }
}
