//! Affine and central hyperplane arrangements over the rationals.
//!
//! A hyperplane `{v : α(v) = k}` is stored with `α` scaled to a primitive
//! integer vector whose first nonzero entry is positive, so structural
//! equality is set equality of hyperplanes.

use std::collections::HashSet;
use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::flat::Flat;
use crate::linalg::{nullspace, primitive_integer, rat, to_i64, Rat};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Hyperplane {
    normal: Vec<i64>,
    offset: Rat,
}

impl Hyperplane {
    /// The hyperplane `normal · v = offset`, brought into canonical form.
    pub fn new(normal: &[i64], offset: Rat) -> Result<Self> {
        let n: Vec<Rat> = normal.iter().map(|&x| rat(x)).collect();
        Self::from_rational(&n, offset)
    }

    pub fn central(normal: &[i64]) -> Result<Self> {
        Self::new(normal, Rat::zero())
    }

    pub fn from_rational(normal: &[Rat], offset: Rat) -> Result<Self> {
        if normal.iter().all(Zero::is_zero) {
            return Err(Error::InvalidInput("hyperplane normal must be nonzero".into()));
        }
        let (ints, factor) = primitive_integer(normal);
        Ok(Hyperplane {
            normal: ints.iter().map(to_i64).collect(),
            offset: offset * factor,
        })
    }

    /// The coordinate hyperplane `x_i = 0` in dimension `dim`.
    pub fn coordinate(dim: usize, i: usize) -> Self {
        let mut n = vec![0; dim];
        n[i] = 1;
        Hyperplane {
            normal: n,
            offset: Rat::zero(),
        }
    }

    pub fn normal(&self) -> &[i64] {
        &self.normal
    }

    pub fn offset(&self) -> &Rat {
        &self.offset
    }

    pub fn dim(&self) -> usize {
        self.normal.len()
    }

    pub fn is_central(&self) -> bool {
        self.offset.is_zero()
    }

    /// Augmented row `[normal | offset]`.
    pub fn row(&self) -> Vec<Rat> {
        let mut r: Vec<Rat> = self.normal.iter().map(|&x| rat(x)).collect();
        r.push(self.offset.clone());
        r
    }

    pub fn is_parallel_to(&self, other: &Hyperplane) -> bool {
        self.normal == other.normal
    }

    pub fn contains_point(&self, p: &[Rat]) -> bool {
        let s: Rat = self.normal.iter().zip(p).map(|(&a, x)| rat(a) * x).sum();
        s == self.offset
    }
}

impl fmt::Display for Hyperplane {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &c) in self.normal.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let sign = if c < 0 { "-" } else if first { "" } else { "+" };
            let mag = c.abs();
            let coef = if mag == 1 { String::new() } else { mag.to_string() };
            if first {
                write!(f, "{sign}{coef}x{i}")?;
            } else {
                write!(f, " {sign} {coef}x{i}")?;
            }
            first = false;
        }
        write!(f, " = {}", self.offset)
    }
}

/// A finite set of hyperplanes in a common ambient space, kept in insertion
/// order.
#[derive(Clone, Debug)]
pub struct Arrangement {
    dim: usize,
    hyperplanes: Vec<Hyperplane>,
    index: HashSet<Hyperplane>,
}

impl PartialEq for Arrangement {
    /// Set equality; insertion order is ignored.
    fn eq(&self, other: &Self) -> bool {
        self.dim == other.dim && self.index == other.index
    }
}

impl Eq for Arrangement {}

impl Arrangement {
    pub fn empty(dim: usize) -> Self {
        Arrangement {
            dim,
            hyperplanes: Vec::new(),
            index: HashSet::new(),
        }
    }

    /// Builds an arrangement, silently dropping repeated hyperplanes.
    pub fn from_hyperplanes(dim: usize, hs: impl IntoIterator<Item = Hyperplane>) -> Result<Self> {
        let mut a = Self::empty(dim);
        for h in hs {
            a.insert(h)?;
        }
        Ok(a)
    }

    /// Adds `h`; returns `false` when it was already present.
    pub fn insert(&mut self, h: Hyperplane) -> Result<bool> {
        if h.dim() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: h.dim(),
            });
        }
        if self.index.contains(&h) {
            return Ok(false);
        }
        self.index.insert(h.clone());
        self.hyperplanes.push(h);
        Ok(true)
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

    pub fn iter(&self) -> std::slice::Iter<'_, Hyperplane> {
        self.hyperplanes.iter()
    }

    pub fn contains(&self, h: &Hyperplane) -> bool {
        self.index.contains(h)
    }

    pub fn is_central(&self) -> bool {
        self.hyperplanes.iter().all(Hyperplane::is_central)
    }

    /// Copy of the arrangement with `h` removed.
    pub fn without(&self, h: &Hyperplane) -> Result<Self> {
        if !self.contains(h) {
            return Err(Error::MissingHyperplane(h.to_string()));
        }
        Self::from_hyperplanes(self.dim, self.hyperplanes.iter().filter(|x| *x != h).cloned())
    }

    /// Rank of the span of the normals.
    pub fn rank(&self) -> usize {
        let rows: Vec<Vec<Rat>> = self
            .hyperplanes
            .iter()
            .map(|h| h.normal.iter().map(|&x| rat(x)).collect())
            .collect();
        crate::linalg::rank(&rows, self.dim)
    }
}

impl<'a> IntoIterator for &'a Arrangement {
    type Item = &'a Hyperplane;
    type IntoIter = std::slice::Iter<'a, Hyperplane>;
    fn into_iter(self) -> Self::IntoIter {
        self.hyperplanes.iter()
    }
}

/// An arrangement together with a non-negative multiplicity per hyperplane.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiArrangement {
    pub arrangement: Arrangement,
    pub mults: Vec<u32>,
}

impl MultiArrangement {
    pub fn new(arrangement: Arrangement, mults: Vec<u32>) -> Result<Self> {
        if mults.len() != arrangement.len() {
            return Err(Error::DimensionMismatch {
                expected: arrangement.len(),
                found: mults.len(),
            });
        }
        Ok(MultiArrangement { arrangement, mults })
    }

    pub fn total(&self) -> u32 {
        self.mults.iter().sum()
    }

    pub fn multiplicity(&self, h: &Hyperplane) -> Option<u32> {
        self.arrangement
            .iter()
            .position(|x| x == h)
            .map(|i| self.mults[i])
    }

    /// Equality as multisets of (hyperplane, multiplicity) pairs.
    pub fn same_as(&self, other: &MultiArrangement) -> bool {
        self.arrangement == other.arrangement
            && self
                .arrangement
                .iter()
                .zip(&self.mults)
                .all(|(h, &m)| other.multiplicity(h) == Some(m))
    }
}

/// The hyperplane at infinity `x_0 = 0` of a cone over a `dim`-dimensional
/// space; `x_0` is the last coordinate.
pub fn infinity_hyperplane(dim: usize) -> Hyperplane {
    Hyperplane::coordinate(dim + 1, dim)
}

/// Coning: `{α = k}` becomes `{α - k x_0 = 0}` in one more dimension, and the
/// hyperplane at infinity is put first.
pub fn cone(arr: &Arrangement) -> Arrangement {
    let n = arr.dim();
    let mut out = Arrangement::empty(n + 1);
    out.insert(infinity_hyperplane(n)).expect("dimension matches");
    for h in arr {
        let mut normal: Vec<Rat> = h.normal.iter().map(|&x| rat(x)).collect();
        normal.push(-h.offset.clone());
        let c = Hyperplane::from_rational(&normal, Rat::zero()).expect("nonzero normal");
        out.insert(c).expect("dimension matches");
    }
    out
}

/// Inverse of [`cone`] relative to `infinity`.
///
/// Coordinates: with `p` the last coordinate on which `infinity` is nonzero,
/// the new chart keeps every coordinate except `p` and sets the linear form
/// of `infinity` to 1. When `infinity` is `x_last = 0` this just drops the
/// last coordinate, so `decone(cone(A), H∞) == A`.
pub fn decone(arr: &Arrangement, infinity: &Hyperplane) -> Result<Arrangement> {
    if !arr.is_central() {
        return Err(Error::NotCentral);
    }
    if !arr.contains(infinity) {
        return Err(Error::MissingHyperplane(infinity.to_string()));
    }
    let n = arr.dim();
    let eta = infinity.normal();
    let p = (0..n).rev().find(|&i| eta[i] != 0).expect("nonzero normal");
    let eta_p = rat(eta[p]);
    let mut out = Arrangement::empty(n - 1);
    for h in arr.iter().filter(|h| *h != infinity) {
        let np = rat(h.normal[p]) / &eta_p;
        let normal: Vec<Rat> = (0..n)
            .filter(|&i| i != p)
            .map(|i| rat(h.normal[i]) - &np * rat(eta[i]))
            .collect();
        out.insert(Hyperplane::from_rational(&normal, -np)?)?;
    }
    Ok(out)
}

/// `A_X`: the hyperplanes containing the flat.
pub fn localization(arr: &Arrangement, flat: &Flat) -> Arrangement {
    assert_eq!(arr.dim(), flat.ambient_dim());
    let hs = arr.iter().filter(|h| flat.lies_in(h)).cloned();
    Arrangement::from_hyperplanes(arr.dim(), hs).expect("dimension matches")
}

/// Basis of a central hyperplane, as the columns of an `n × (n-1)` matrix:
/// one vector per free column of the reduced normal.
pub fn hyperplane_basis(h: &Hyperplane) -> Vec<Vec<Rat>> {
    let row: Vec<Rat> = h.normal.iter().map(|&x| rat(x)).collect();
    nullspace(&[row], h.dim())
}

/// Ziegler restriction of a central arrangement onto `h0`.
///
/// Every other hyperplane `K` contributes `K ∩ h0`, written in the basis of
/// [`hyperplane_basis`]; the multiplicity counts how many `K` give the same
/// restricted hyperplane, so multiplicities sum to `|arr| - 1`.
pub fn ziegler_restriction(arr: &Arrangement, h0: &Hyperplane) -> Result<MultiArrangement> {
    if !arr.is_central() {
        return Err(Error::NotCentral);
    }
    if !arr.contains(h0) {
        return Err(Error::MissingHyperplane(h0.to_string()));
    }
    let basis = hyperplane_basis(h0);
    let mut restricted = Arrangement::empty(arr.dim() - 1);
    let mut mults: Vec<u32> = Vec::new();
    for k in arr.iter().filter(|k| *k != h0) {
        let form: Vec<Rat> = basis
            .iter()
            .map(|b| k.normal.iter().zip(b).map(|(&x, y)| rat(x) * y).sum())
            .collect();
        let r = Hyperplane::from_rational(&form, Rat::zero())?;
        match restricted.iter().position(|x| *x == r) {
            Some(i) => mults[i] += 1,
            None => {
                restricted.insert(r)?;
                mults.push(1);
            }
        }
    }
    MultiArrangement::new(restricted, mults)
}

/// Coordinates of the normals in the basis of their span, taken from the
/// pivot columns of the reduced normal matrix. Returns the pivot columns and
/// one coordinate vector per hyperplane.
pub fn essential_coordinates(arr: &Arrangement) -> (Vec<usize>, Vec<Vec<BigInt>>) {
    let mut rows: Vec<Vec<Rat>> = arr
        .iter()
        .map(|h| h.normal.iter().map(|&x| rat(x)).collect())
        .collect();
    let pivots = crate::linalg::rref(&mut rows, arr.dim());
    let coords = arr
        .iter()
        .map(|h| pivots.iter().map(|&p| BigInt::from(h.normal[p])).collect())
        .collect();
    (pivots, coords)
}

/// Rank-2 central arrangement with multiplicities as primitive integer line
/// forms in the plane spanned by its normals.
pub fn planar_forms(ma: &MultiArrangement) -> Result<Vec<((i64, i64), u32)>> {
    let arr = &ma.arrangement;
    if !arr.is_central() {
        return Err(Error::NotCentral);
    }
    let (pivots, coords) = essential_coordinates(arr);
    if pivots.len() > 2 {
        return Err(Error::WrongRank {
            expected: 2,
            found: pivots.len(),
        });
    }
    let mut out = Vec::new();
    for (c, &m) in coords.iter().zip(&ma.mults) {
        let mut v: Vec<Rat> = c.iter().map(|x| Rat::from_integer(x.clone())).collect();
        v.resize(2, Rat::zero());
        let (ints, _) = primitive_integer(&v);
        out.push(((to_i64(&ints[0]), to_i64(&ints[1])), m));
    }
    Ok(out)
}

/// JSON form of a hyperplane; the offset is a rational string such as
/// `"3/1"` or `"-1/2"`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HyperplaneJson {
    pub normal: Vec<i64>,
    pub offset: String,
}

/// `{dim, hyperplanes: [{normal, offset}], central}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ArrangementJson {
    pub dim: usize,
    pub hyperplanes: Vec<HyperplaneJson>,
    #[serde(default)]
    pub central: bool,
}

fn rat_string(x: &Rat) -> String {
    format!("{}/{}", x.numer(), x.denom())
}

impl From<&Arrangement> for ArrangementJson {
    fn from(arr: &Arrangement) -> Self {
        ArrangementJson {
            dim: arr.dim,
            hyperplanes: arr
                .iter()
                .map(|h| HyperplaneJson {
                    normal: h.normal.clone(),
                    offset: rat_string(&h.offset),
                })
                .collect(),
            central: arr.is_central(),
        }
    }
}

impl TryFrom<&ArrangementJson> for Arrangement {
    type Error = Error;

    fn try_from(j: &ArrangementJson) -> Result<Self> {
        let mut arr = Arrangement::empty(j.dim);
        for h in &j.hyperplanes {
            let offset: Rat = h
                .offset
                .trim()
                .parse()
                .map_err(|_| Error::InvalidInput(format!("bad offset {:?}", h.offset)))?;
            arr.insert(Hyperplane::new(&h.normal, offset)?)?;
        }
        Ok(arr)
    }
}
