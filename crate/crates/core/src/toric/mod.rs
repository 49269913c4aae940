//! Toric arrangements in `(C*)^n` with torsion offsets.
//!
//! A point of the torus is written `x = exp(2πi θ)` with `θ ∈ R^n / Z^n`.
//! A hypersurface `x^a = exp(2πi b)` becomes `a · θ ≡ b (mod 1)`, so every
//! layer is a coset of a subtorus and all data stays in integer and rational
//! linear algebra.

mod format;
mod layers;

pub use format::{parse_toric, toric_to_text};
pub use layers::{component_count, layer_poset, ComponentCount, Layer, LayerPoset};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::arrangement::{abelian_duality_constraints, duality_dimension, DualityConstraints, DualityKind, Polynomial};
use crate::error::{Error, Result};
use crate::exactlin::{smith_normal_form, IntegerMatrix, RationalMatrix};

/// Fractional part in `[0, 1)`.
pub(crate) fn frac(q: &BigRational) -> BigRational {
    q - q.floor()
}

/// `{x : x^a = exp(2πi b)}` with `a` primitive and `b ∈ [0, 1)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ToricHypersurface {
    exponent: Vec<i64>,
    offset: BigRational,
}

impl ToricHypersurface {
    pub fn new(exponent: Vec<i64>, offset: BigRational) -> Result<Self> {
        let g = exponent.iter().fold(0i64, |g, &e| g.gcd(&e));
        if g != 1 {
            return Err(Error::NotPrimitive(exponent));
        }
        Ok(ToricHypersurface { exponent, offset: frac(&offset) })
    }

    /// `x^a = exp(2πi p/q)`.
    pub fn from_i64(exponent: &[i64], p: i64, q: i64) -> Result<Self> {
        Self::new(exponent.to_vec(), BigRational::new(p.into(), q.into()))
    }

    pub fn exponent(&self) -> &[i64] {
        &self.exponent
    }

    pub fn offset(&self) -> &BigRational {
        &self.offset
    }

    pub fn dim(&self) -> usize {
        self.exponent.len()
    }

    /// The same hypersurface written with the first nonzero exponent positive.
    pub fn canonical(&self) -> ToricHypersurface {
        let first = self.exponent.iter().find(|e| **e != 0).copied().unwrap_or(1);
        if first > 0 {
            self.clone()
        } else {
            ToricHypersurface { exponent: self.exponent.iter().map(|e| -e).collect(), offset: frac(&-&self.offset) }
        }
    }

    pub(crate) fn exponent_big(&self) -> Vec<BigInt> {
        self.exponent.iter().map(|&e| BigInt::from(e)).collect()
    }

    /// Whether `exp(2πi θ)` lies on the hypersurface.
    pub fn contains_point(&self, theta: &[BigRational]) -> bool {
        let v: BigRational = self.exponent.iter().zip(theta).map(|(&a, t)| t * BigInt::from(a)).sum();
        (v - &self.offset).is_integer()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ToricArrangement {
    dim: usize,
    hypersurfaces: Vec<ToricHypersurface>,
}

impl ToricArrangement {
    pub fn new(dim: usize, hypersurfaces: Vec<ToricHypersurface>) -> Result<Self> {
        for (j, h) in hypersurfaces.iter().enumerate() {
            if h.dim() != dim {
                return Err(Error::Dimension { expected: dim, found: h.dim() });
            }
            if let Some(i) = hypersurfaces[..j].iter().position(|g| g.canonical() == h.canonical()) {
                return Err(Error::DuplicateHyperplane { first: i, second: j });
            }
        }
        Ok(ToricArrangement { dim, hypersurfaces })
    }

    pub fn empty(dim: usize) -> Self {
        ToricArrangement { dim, hypersurfaces: Vec::new() }
    }

    /// `C*` minus the `d` roots of unity of order `d`.
    pub fn punctured_circle(d: usize) -> Self {
        let hs = (0..d).map(|j| ToricHypersurface::from_i64(&[1], j as i64, d as i64).unwrap()).collect();
        ToricArrangement { dim: 1, hypersurfaces: hs }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.hypersurfaces.len()
    }

    pub fn is_empty(&self) -> bool {
        self.hypersurfaces.is_empty()
    }

    pub fn hypersurfaces(&self) -> &[ToricHypersurface] {
        &self.hypersurfaces
    }

    /// Rank of the lattice spanned by the exponent vectors.
    pub fn rank(&self) -> usize {
        let rows: Vec<Vec<BigRational>> = self
            .hypersurfaces
            .iter()
            .map(|h| h.exponent.iter().map(|&e| BigRational::from_integer(e.into())).collect())
            .collect();
        RationalMatrix::from_rows(self.dim, rows).rank()
    }

    pub fn corank(&self) -> usize {
        self.dim - self.rank()
    }

    /// Arrangement in the product torus `(C*)^n × (C*)^m`.
    pub fn product(&self, other: &ToricArrangement) -> ToricArrangement {
        let (n, m) = (self.dim, other.dim);
        let mut hs = Vec::new();
        for h in &self.hypersurfaces {
            let mut e = h.exponent.clone();
            e.resize(n + m, 0);
            hs.push(ToricHypersurface { exponent: e, offset: h.offset.clone() });
        }
        for h in &other.hypersurfaces {
            let mut e = vec![0; n];
            e.extend_from_slice(&h.exponent);
            hs.push(ToricHypersurface { exponent: e, offset: h.offset.clone() });
        }
        ToricArrangement { dim: n + m, hypersurfaces: hs }
    }
}

/// Integer basis of `{v ∈ Z^n : r · v = 0 for every row r}`, a saturated
/// lattice. Returned as vectors of length `n`.
pub(crate) fn integer_kernel(rows: &[Vec<BigInt>], n: usize) -> Vec<Vec<BigInt>> {
    if rows.is_empty() {
        return (0..n).map(|i| (0..n).map(|j| BigInt::from(i32::from(i == j))).collect()).collect();
    }
    let snf = smith_normal_form(&IntegerMatrix::from_rows(n, rows.to_vec()));
    (snf.rank()..n).map(|j| snf.right.column(j)).collect()
}

/// Saturation of the lattice spanned by `rows`.
pub(crate) fn saturate(rows: &[Vec<BigInt>], n: usize) -> Vec<Vec<BigInt>> {
    integer_kernel(&integer_kernel(rows, n), n)
}

pub(crate) fn dot_int_rat(a: &[BigInt], theta: &[BigRational]) -> BigRational {
    a.iter().zip(theta).map(|(x, t)| t * x).sum()
}

fn gcd_all(v: &[BigInt]) -> BigInt {
    v.iter().fold(BigInt::zero(), |g, x| g.gcd(x))
}

/// Sum of `|μ(X)| t^{codim X} (1 + t)^{dim X}` over the layers.
pub fn toric_poincare(lp: &LayerPoset) -> Polynomial {
    let mut total = Polynomial::new(vec![]);
    for (id, layer) in lp.layers().iter().enumerate() {
        let mut shift = vec![BigInt::zero(); layer.codim()];
        shift.push(lp.mobius(id).abs());
        let term = Polynomial::new(shift).mul(&Polynomial::one_plus_t_pow(layer.dim()));
        total = total.add(&term);
    }
    total
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ToricDualityReport {
    pub dim: usize,
    /// Reported only; the duality dimension stays `n`.
    pub corank: usize,
    pub layers: usize,
    #[serde(serialize_with = "crate::report::bigints_as_i64_or_string")]
    pub poincare: Vec<BigInt>,
    #[serde(serialize_with = "crate::report::bigint_as_i64_or_string")]
    pub euler: BigInt,
    pub constraints: DualityConstraints,
}

impl ToricDualityReport {
    pub fn passes(&self) -> bool {
        self.constraints.passes()
    }
}

pub fn toric_duality_check(t: &ToricArrangement) -> ToricDualityReport {
    let lp = layer_poset(t);
    let poin = toric_poincare(&lp);
    let d = duality_dimension(DualityKind::Toric, t.dim(), t.corank(), t.len()).expect("corank never exceeds n");
    ToricDualityReport {
        dim: t.dim(),
        corank: t.corank(),
        layers: lp.len(),
        poincare: poin.coeffs().to_vec(),
        euler: poin.eval_i64(-1),
        constraints: abelian_duality_constraints(&poin, d),
    }
}

/// The arrangement of traces on a layer, in coordinates `θ = base + K ψ`
/// where the columns of `K` are an integer basis of the layer's directions.
#[derive(Clone, Debug)]
pub struct ToricRestriction {
    pub arrangement: ToricArrangement,
    pub base_point: Vec<BigRational>,
    /// `dim` vectors of length `n`.
    pub directions: Vec<Vec<BigInt>>,
    /// Original hypersurfaces whose traces give each restricted hypersurface.
    pub sources: Vec<Vec<usize>>,
}

impl ToricRestriction {
    pub fn lift(&self, psi: &[BigRational]) -> Vec<BigRational> {
        let mut theta = self.base_point.clone();
        for (k, p) in self.directions.iter().zip(psi) {
            for (t, x) in theta.iter_mut().zip(k) {
                *t += p * x;
            }
        }
        theta
    }

    /// Image of a layer of the restricted arrangement as a layer of the
    /// ambient torus, given as `(lattice, offsets)` ready for lookup.
    pub fn image(&self, layer: &Layer) -> (Vec<Vec<BigInt>>, Vec<BigRational>) {
        let n = self.base_point.len();
        let inner = integer_kernel(layer.lattice(), self.directions.len());
        let dirs: Vec<Vec<BigInt>> = inner
            .iter()
            .map(|c| {
                let mut v = vec![BigInt::zero(); n];
                for (k, x) in self.directions.iter().zip(c) {
                    for (vi, ki) in v.iter_mut().zip(k) {
                        *vi += ki * x;
                    }
                }
                v
            })
            .collect();
        let lattice = integer_kernel(&dirs, n);
        layers::canonical_layer(&lattice, &self.lift(layer.point()), n)
    }
}

pub fn restrict_to_layer(t: &ToricArrangement, lp: &LayerPoset, id: usize) -> Result<ToricRestriction> {
    let layer = lp.layers().get(id).ok_or(Error::UnknownFlat(id))?;
    if layer.dim() == 0 {
        return Err(Error::ZeroDimLayer(id));
    }
    let n = t.dim();
    let directions = integer_kernel(layer.lattice(), n);
    let base = layer.point().to_vec();
    let mut found: Vec<(ToricHypersurface, Vec<usize>)> = Vec::new();
    for (i, h) in t.hypersurfaces().iter().enumerate() {
        if layer.contains_hypersurface(i) {
            continue;
        }
        let a = h.exponent_big();
        let c: Vec<BigInt> = directions.iter().map(|k| a.iter().zip(k).map(|(x, y)| x * y).sum()).collect();
        if c.iter().all(Zero::is_zero) {
            continue;
        }
        let g = gcd_all(&c);
        let exponent = c
            .iter()
            .map(|x| (x / &g).to_i64().ok_or_else(|| Error::TooLarge("exponent overflow".into())))
            .collect::<Result<Vec<i64>>>()?;
        let rhs = h.offset() - dot_int_rat(&a, &base);
        let gq = BigRational::from_integer(g.clone());
        let mut step = BigInt::zero();
        while step < g {
            let off = (&rhs + BigRational::from_integer(step.clone())) / &gq;
            let trace = ToricHypersurface { exponent: exponent.clone(), offset: frac(&off) }.canonical();
            match found.iter_mut().find(|(f, _)| *f == trace) {
                Some((_, src)) => src.push(i),
                None => found.push((trace, vec![i])),
            }
            step += 1;
        }
    }
    let (hs, sources) = found.into_iter().unzip();
    Ok(ToricRestriction {
        arrangement: ToricArrangement { dim: directions.len(), hypersurfaces: hs },
        base_point: base,
        directions,
        sources,
    })
}
