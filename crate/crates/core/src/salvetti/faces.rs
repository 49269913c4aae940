//! Faces of the real stratification cut out by an arrangement, found with
//! exact witness points.
//!
//! Chambers come from deletion-restriction: adding a hyperplane `H` splits
//! exactly those chambers that meet `H`, and those correspond to chambers of
//! the arrangement restricted to `H`, whose witness points are computed
//! recursively. A chamber met by `H` at `y` is replaced by `y ± ε·normal_H`
//! with `ε` small enough to preserve every other sign. Faces supported on a
//! flat `X` are the chambers of the restriction to `X`.

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::arrangement::{build_flat_poset, dot, Arrangement, FlatId, FlatPoset};
use crate::error::{Error, Result};
use crate::exactlin::RationalMatrix;

/// Size limits for face enumeration.
#[derive(Clone, Copy, Debug)]
pub struct FaceBounds {
    pub max_hyperplanes: usize,
    pub max_dim: usize,
}

impl Default for FaceBounds {
    fn default() -> Self {
        Self { max_hyperplanes: 9, max_dim: 4 }
    }
}

pub type SignVector = Vec<i8>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Face {
    pub signs: SignVector,
    pub dim: usize,
    /// Flat spanned by the face (its zero set).
    pub support: FlatId,
    /// A point of the relative interior.
    pub point: Vec<BigRational>,
}

/// Faces sorted by `(codim, signs)`; `covers[f]` lists the faces one
/// dimension up having `f` in their closure.
#[derive(Clone, Debug)]
pub struct FacePoset {
    dim: usize,
    num_hyperplanes: usize,
    faces: Vec<Face>,
    covers: Vec<Vec<usize>>,
    chambers: Vec<usize>,
}

fn sign(v: &BigRational) -> i8 {
    if v.is_zero() {
        0
    } else if v.is_positive() {
        1
    } else {
        -1
    }
}

fn sign_vector(a: &Arrangement, x: &[BigRational]) -> SignVector {
    a.hyperplanes().iter().map(|h| sign(&h.eval(x))).collect()
}

/// `F <= G` in the face order: `G` agrees with `F` wherever `F` is nonzero.
pub fn conforms(f: &[i8], g: &[i8]) -> bool {
    f.iter().zip(g).all(|(&a, &b)| a == 0 || a == b)
}

/// `F ∘ G`: `F` where nonzero, else `G`.
pub fn compose(f: &[i8], g: &[i8]) -> SignVector {
    f.iter().zip(g).map(|(&a, &b)| if a != 0 { a } else { b }).collect()
}

impl FacePoset {
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn num_hyperplanes(&self) -> usize {
        self.num_hyperplanes
    }

    pub fn faces(&self) -> &[Face] {
        &self.faces
    }

    pub fn face(&self, i: usize) -> &Face {
        &self.faces[i]
    }

    pub fn covers(&self, i: usize) -> &[usize] {
        &self.covers[i]
    }

    pub fn chambers(&self) -> &[usize] {
        &self.chambers
    }

    pub fn codim(&self, i: usize) -> usize {
        self.dim - self.faces[i].dim
    }

    pub fn index_of(&self, signs: &[i8]) -> Option<usize> {
        self.faces.iter().position(|f| f.signs == signs)
    }

    /// Chambers whose closure contains face `i`.
    pub fn adjacent_chambers(&self, i: usize) -> impl Iterator<Item = usize> + '_ {
        let s = &self.faces[i].signs;
        self.chambers.iter().copied().filter(move |&c| conforms(s, &self.faces[c].signs))
    }

    /// Face counts by dimension `0..=n`.
    pub fn f_vector(&self) -> Vec<usize> {
        let mut f = vec![0; self.dim + 1];
        for face in &self.faces {
            f[face.dim] += 1;
        }
        f
    }

    /// `Σ_F (-1)^{dim F}`, which is `(-1)^n` for a decomposition of `R^n`.
    pub fn euler_sum(&self) -> i64 {
        self.faces.iter().map(|f| if f.dim % 2 == 0 { 1 } else { -1 }).sum()
    }
}

pub fn enumerate_faces(a: &Arrangement) -> Result<FacePoset> {
    enumerate_faces_bounded(a, FaceBounds::default())
}

pub fn enumerate_faces_bounded(a: &Arrangement, bounds: FaceBounds) -> Result<FacePoset> {
    if a.len() > bounds.max_hyperplanes {
        return Err(Error::TooLarge(format!("{} hyperplanes (limit {})", a.len(), bounds.max_hyperplanes)));
    }
    if a.dim() > bounds.max_dim {
        return Err(Error::TooLarge(format!("dimension {} (limit {})", a.dim(), bounds.max_dim)));
    }
    let poset = build_flat_poset(a);
    Ok(faces_from_poset(a, &poset))
}

pub(crate) fn faces_from_poset(a: &Arrangement, poset: &FlatPoset) -> FacePoset {
    let n = a.dim();
    let mut faces = Vec::new();
    for x in poset.ids() {
        let flat = poset.flat(x);
        let local_points = if flat.dim() == 0 {
            vec![Vec::new()]
        } else {
            let restricted = a.restrict(flat).expect("positive-dimensional flat");
            chamber_points(&restricted)
        };
        for y in local_points {
            let mut point = flat.point().to_vec();
            for (coef, d) in y.iter().zip(flat.directions()) {
                for (p, di) in point.iter_mut().zip(d) {
                    *p += coef * di;
                }
            }
            let signs = sign_vector(a, &point);
            debug_assert!(signs.iter().enumerate().all(|(i, &s)| (s == 0) == flat.contains_hyperplane(i)));
            faces.push(Face { signs, dim: flat.dim(), support: x, point });
        }
    }
    faces.sort_by(|f, g| (n - f.dim, &f.signs).cmp(&(n - g.dim, &g.signs)));

    let covers = (0..faces.len())
        .map(|i| {
            (0..faces.len())
                .filter(|&j| faces[j].dim == faces[i].dim + 1 && conforms(&faces[i].signs, &faces[j].signs))
                .collect()
        })
        .collect();
    let chambers = (0..faces.len()).filter(|&i| faces[i].dim == n).collect();
    FacePoset { dim: n, num_hyperplanes: a.len(), faces, covers, chambers }
}

/// One interior point per chamber, in a deterministic order.
pub fn chamber_points(a: &Arrangement) -> Vec<Vec<BigRational>> {
    let n = a.dim();
    let mut points = vec![vec![BigRational::zero(); n]];
    if n == 0 {
        return points;
    }
    for k in 0..a.len() {
        let sub = a.subarrangement(&(0..k).collect::<Vec<_>>());
        let h = a.hyperplane(k);
        // witness points of the chambers of `sub` meeting `h`, lifted to R^n
        let eq = RationalMatrix::from_rows(n, vec![h.normal().to_vec()]);
        let base = eq.solve(&[h.offset().clone()]).expect("nonzero normal");
        let dirs = eq.nullspace();
        let (traces, _) = sub.traces(&base, &dirs, &[]);
        let on_h = Arrangement::new(n - 1, traces).expect("traces are deduplicated");
        let mut hits: Vec<(SignVector, Vec<BigRational>)> = chamber_points(&on_h)
            .into_iter()
            .map(|y| {
                let mut x = base.clone();
                for (c, d) in y.iter().zip(&dirs) {
                    for (xi, di) in x.iter_mut().zip(d) {
                        *xi += c * di;
                    }
                }
                (sign_vector(&sub, &x), x)
            })
            .collect();
        hits.sort_by(|u, v| u.0.cmp(&v.0));

        let mut next = Vec::with_capacity(points.len() * 2);
        for x in &points {
            let s = sign_vector(&sub, x);
            match hits.binary_search_by(|(t, _)| t.cmp(&s)) {
                Ok(j) => {
                    let y = &hits[j].1;
                    let eps = push_distance(&sub, y, h.normal());
                    for dir in [-1i64, 1] {
                        let step = &eps * BigRational::from_integer(dir.into());
                        next.push(y.iter().zip(h.normal()).map(|(yi, ni)| yi + &step * ni).collect());
                    }
                }
                Err(_) => next.push(x.clone()),
            }
        }
        points = next;
    }
    points
}

/// Largest convenient step along `dir` from `y` that keeps all signs of
/// `sub` at `y` (all nonzero there).
fn push_distance(sub: &Arrangement, y: &[BigRational], dir: &[BigRational]) -> BigRational {
    let mut eps = BigRational::one();
    for h in sub.hyperplanes() {
        let rate = dot(h.normal(), dir).abs();
        if rate.is_zero() {
            continue;
        }
        let room = h.eval(y).abs() / (rate * BigRational::from_integer(2.into()));
        if room < eps {
            eps = room;
        }
    }
    eps
}
