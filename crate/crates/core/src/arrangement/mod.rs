//! Affine hyperplane arrangements over the rationals and their intersection
//! posets.

mod duality;
pub(crate) mod format;
mod poly;
mod poset;

pub use duality::{abelian_duality_constraints, duality_dimension, DualityConstraints, DualityKind};
pub use format::{parse_arrangement, to_text};
pub use poly::Polynomial;
pub use poset::{build_flat_poset, corank, euler_characteristic, whitney_poincare, Flat, FlatId, FlatPoset};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactlin::RationalMatrix;

/// The affine hyperplane `{x : normal · x = offset}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Hyperplane {
    normal: Vec<BigRational>,
    offset: BigRational,
}

impl Hyperplane {
    pub fn new(normal: Vec<BigRational>, offset: BigRational) -> Self {
        Self { normal, offset }
    }

    /// `coeffs = [a_1, ..., a_n, c]` meaning `a · x = c`.
    pub fn from_i64(coeffs: &[i64]) -> Self {
        let (c, a) = coeffs.split_last().expect("at least the offset");
        Self {
            normal: a.iter().map(|&v| BigRational::from_integer(BigInt::from(v))).collect(),
            offset: BigRational::from_integer(BigInt::from(*c)),
        }
    }

    pub fn normal(&self) -> &[BigRational] {
        &self.normal
    }

    pub fn offset(&self) -> &BigRational {
        &self.offset
    }

    pub fn dim(&self) -> usize {
        self.normal.len()
    }

    pub fn is_zero_normal(&self) -> bool {
        self.normal.iter().all(Zero::is_zero)
    }

    /// `normal · x - offset`; its sign says which side `x` lies on.
    pub fn eval(&self, x: &[BigRational]) -> BigRational {
        dot(&self.normal, x) - &self.offset
    }

    /// Scaled so the first nonzero normal coefficient is 1. Two hyperplanes
    /// are the same affine subspace iff their canonical forms agree.
    pub fn canonical(&self) -> Hyperplane {
        let Some(lead) = self.normal.iter().find(|v| !v.is_zero()) else {
            return self.clone();
        };
        let inv = lead.recip();
        Hyperplane {
            normal: self.normal.iter().map(|v| v * &inv).collect(),
            offset: &self.offset * &inv,
        }
    }

    pub fn same_subspace(&self, other: &Hyperplane) -> bool {
        self.canonical() == other.canonical()
    }
}

pub(crate) fn dot(a: &[BigRational], b: &[BigRational]) -> BigRational {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// An ordered list of distinct affine hyperplanes in an `n`-dimensional space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Arrangement {
    dim: usize,
    hyperplanes: Vec<Hyperplane>,
    labels: Vec<String>,
}

impl Arrangement {
    /// Rejects zero normals, wrong lengths and repeated hyperplanes.
    pub fn new(dim: usize, hyperplanes: Vec<Hyperplane>) -> Result<Self> {
        let labels = (1..=hyperplanes.len()).map(|i| format!("H{i}")).collect();
        Self::with_labels(dim, hyperplanes, labels)
    }

    pub fn with_labels(dim: usize, hyperplanes: Vec<Hyperplane>, labels: Vec<String>) -> Result<Self> {
        assert_eq!(labels.len(), hyperplanes.len(), "one label per hyperplane");
        let mut canon: Vec<Hyperplane> = Vec::with_capacity(hyperplanes.len());
        for (i, h) in hyperplanes.iter().enumerate() {
            if h.dim() != dim {
                return Err(Error::Dimension { expected: dim, found: h.dim() });
            }
            if h.is_zero_normal() {
                return Err(Error::ZeroNormal(i));
            }
            let c = h.canonical();
            if let Some(j) = canon.iter().position(|o| *o == c) {
                return Err(Error::DuplicateHyperplane { first: j, second: i });
            }
            canon.push(c);
        }
        Ok(Self { dim, hyperplanes, labels })
    }

    /// Rows `[a_1, ..., a_n, c]`.
    pub fn from_i64(dim: usize, rows: &[&[i64]]) -> Result<Self> {
        Self::new(dim, rows.iter().map(|r| Hyperplane::from_i64(r)).collect())
    }

    pub fn empty(dim: usize) -> Self {
        Self { dim, hyperplanes: Vec::new(), labels: Vec::new() }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.hyperplanes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.hyperplanes.is_empty()
    }

    pub fn hyperplanes(&self) -> &[Hyperplane] {
        &self.hyperplanes
    }

    pub fn hyperplane(&self, i: usize) -> &Hyperplane {
        &self.hyperplanes[i]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn is_central(&self) -> bool {
        self.hyperplanes.iter().all(|h| h.offset.is_zero())
    }

    /// Matrix whose rows are the normals of the listed hyperplanes.
    pub fn normals(&self, indices: &[usize]) -> RationalMatrix {
        RationalMatrix::from_rows(self.dim, indices.iter().map(|&i| self.hyperplanes[i].normal.clone()).collect())
    }

    /// Rank of the normal vectors, i.e. the codimension of the deepest flat.
    pub fn rank(&self) -> usize {
        let all: Vec<usize> = (0..self.len()).collect();
        self.normals(&all).rank()
    }

    pub fn subarrangement(&self, indices: &[usize]) -> Arrangement {
        Arrangement {
            dim: self.dim,
            hyperplanes: indices.iter().map(|&i| self.hyperplanes[i].clone()).collect(),
            labels: indices.iter().map(|&i| self.labels[i].clone()).collect(),
        }
    }

    /// Hyperplanes containing the flat.
    pub fn localize(&self, x: &Flat) -> Arrangement {
        self.subarrangement(x.indices())
    }

    /// The localization translated so the flat passes through the origin.
    pub fn local_tangent(&self, x: &Flat) -> Arrangement {
        let mut loc = self.localize(x);
        for h in &mut loc.hyperplanes {
            h.offset = BigRational::zero();
        }
        loc
    }

    /// Traces of the hyperplanes not containing `x`, in the coordinates
    /// `x = point + Σ y_i direction_i`. Parallel hyperplanes drop out and
    /// coincident traces are merged (their labels joined with `=`).
    pub fn restrict(&self, x: &Flat) -> Result<Arrangement> {
        if x.dim() == 0 {
            return Err(Error::RestrictToPoint);
        }
        let (hyperplanes, labels) = self.traces(x.point(), x.directions(), x.indices());
        Ok(Arrangement { dim: x.dim(), hyperplanes, labels })
    }

    pub(crate) fn traces(
        &self,
        point: &[BigRational],
        directions: &[Vec<BigRational>],
        skip: &[usize],
    ) -> (Vec<Hyperplane>, Vec<String>) {
        let mut hyperplanes: Vec<Hyperplane> = Vec::new();
        let mut canon: Vec<Hyperplane> = Vec::new();
        let mut labels: Vec<String> = Vec::new();
        for (i, h) in self.hyperplanes.iter().enumerate() {
            if skip.contains(&i) {
                continue;
            }
            let normal: Vec<BigRational> = directions.iter().map(|d| dot(&h.normal, d)).collect();
            if normal.iter().all(Zero::is_zero) {
                continue;
            }
            let trace = Hyperplane { normal, offset: &h.offset - dot(&h.normal, point) };
            let c = trace.canonical();
            match canon.iter().position(|o| *o == c) {
                Some(j) => {
                    labels[j].push('=');
                    labels[j].push_str(&self.labels[i]);
                }
                None => {
                    canon.push(c);
                    hyperplanes.push(trace);
                    labels.push(self.labels[i].clone());
                }
            }
        }
        (hyperplanes, labels)
    }

    /// Cone: homogenize with a new last coordinate `x_{n+1}` and append the
    /// hyperplane `x_{n+1} = 0`.
    pub fn cone(&self) -> Arrangement {
        let n = self.dim;
        let mut hyperplanes: Vec<Hyperplane> = self
            .hyperplanes
            .iter()
            .map(|h| {
                let mut normal = h.normal.clone();
                normal.push(-h.offset.clone());
                Hyperplane { normal, offset: BigRational::zero() }
            })
            .collect();
        let mut inf = vec![BigRational::zero(); n + 1];
        inf[n] = BigRational::one();
        hyperplanes.push(Hyperplane { normal: inf, offset: BigRational::zero() });
        let mut labels = self.labels.clone();
        labels.push("H_inf".to_string());
        Arrangement { dim: n + 1, hyperplanes, labels }
    }

    /// Decone a central arrangement with respect to hyperplane `h`: the
    /// remaining hyperplanes are intersected with the affine chart
    /// `normal_h · x = 1`, expressed in coordinates of that chart.
    pub fn decone(&self, h: usize) -> Result<Arrangement> {
        if !self.is_central() {
            return Err(Error::Usage("decone requires a central arrangement".into()));
        }
        let chart = Hyperplane { normal: self.hyperplanes[h].normal.clone(), offset: BigRational::one() };
        let eq = RationalMatrix::from_rows(self.dim, vec![chart.normal.clone()]);
        let point = eq.solve(&[BigRational::one()]).expect("nonzero normal");
        let directions = eq.nullspace();
        let (hyperplanes, labels) = self.traces(&point, &directions, &[h]);
        Arrangement::with_labels(self.dim - 1, hyperplanes, labels)
    }

    /// Arrangement in the product space: `self` on the first coordinates,
    /// `other` on the last.
    pub fn product(&self, other: &Arrangement) -> Arrangement {
        let n = self.dim + other.dim;
        let pad = |h: &Hyperplane, before: usize| {
            let mut normal = vec![BigRational::zero(); n];
            for (k, v) in h.normal.iter().enumerate() {
                normal[before + k] = v.clone();
            }
            Hyperplane { normal, offset: h.offset.clone() }
        };
        let mut hyperplanes: Vec<Hyperplane> = self.hyperplanes.iter().map(|h| pad(h, 0)).collect();
        hyperplanes.extend(other.hyperplanes.iter().map(|h| pad(h, self.dim)));
        let mut labels = self.labels.clone();
        labels.extend(other.labels.iter().map(|l| format!("{l}'")));
        Arrangement { dim: n, hyperplanes, labels }
    }
}
