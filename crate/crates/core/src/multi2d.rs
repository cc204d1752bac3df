//! Logarithmic derivation modules of rank-2 multiarrangements.
//!
//! For lines `α_i = a_i x + b_i y` with multiplicities `m_i`, the degree-`d`
//! part of `D(A,m)` is the space of pairs `(P, Q)` of degree-`d` forms with
//! `α_i^{m_i} | a_i P + b_i Q` for every `i`. Each divisibility condition is
//! linear in the coefficients of `P` and `Q`, so every slice is an exact
//! nullspace computation.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::{ext_gcd, gcd_i64, nullspace, rank, rat, Rat};

/// Homogeneous bivariate form; `coeffs[i]` multiplies `x^{d-i} y^i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomPoly {
    pub degree: usize,
    pub coeffs: Vec<Rat>,
}

impl HomPoly {
    pub fn zero(degree: usize) -> Self {
        HomPoly {
            degree,
            coeffs: vec![Rat::zero(); degree + 1],
        }
    }

    pub fn linear(a: i64, b: i64) -> Self {
        HomPoly {
            degree: 1,
            coeffs: vec![rat(a), rat(b)],
        }
    }

    pub fn monomial(x_pow: usize, y_pow: usize) -> Self {
        let mut p = Self::zero(x_pow + y_pow);
        p.coeffs[y_pow] = Rat::one();
        p
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn mul(&self, other: &HomPoly) -> HomPoly {
        let mut out = HomPoly::zero(self.degree + other.degree);
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out.coeffs[i + j] += a * b;
            }
        }
        out
    }

    pub fn pow(&self, k: u32) -> HomPoly {
        (0..k).fold(HomPoly::monomial(0, 0), |acc, _| acc.mul(self))
    }

    pub fn sub(&self, other: &HomPoly) -> HomPoly {
        assert_eq!(self.degree, other.degree);
        HomPoly {
            degree: self.degree,
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a - b).collect(),
        }
    }

    pub fn scale(&self, c: &Rat) -> HomPoly {
        HomPoly {
            degree: self.degree,
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }
}

/// `θ = P ∂x + Q ∂y` with `P`, `Q` of a common degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Derivation2 {
    pub p: HomPoly,
    pub q: HomPoly,
}

impl Derivation2 {
    pub fn degree(&self) -> usize {
        self.p.degree
    }

    fn from_vector(d: usize, v: &[Rat]) -> Self {
        Derivation2 {
            p: HomPoly {
                degree: d,
                coeffs: v[..=d].to_vec(),
            },
            q: HomPoly {
                degree: d,
                coeffs: v[d + 1..].to_vec(),
            },
        }
    }

    fn to_vector(&self) -> Vec<Rat> {
        self.p.coeffs.iter().chain(&self.q.coeffs).cloned().collect()
    }

    /// `θ(a x + b y) = a P + b Q`.
    pub fn apply(&self, a: i64, b: i64) -> HomPoly {
        HomPoly {
            degree: self.degree(),
            coeffs: self
                .p
                .coeffs
                .iter()
                .zip(&self.q.coeffs)
                .map(|(p, q)| rat(a) * p + rat(b) * q)
                .collect(),
        }
    }

    pub fn times(&self, f: &HomPoly) -> Derivation2 {
        Derivation2 {
            p: self.p.mul(f),
            q: self.q.mul(f),
        }
    }

    /// Euler derivation `x ∂x + y ∂y`.
    pub fn euler() -> Self {
        Derivation2 {
            p: HomPoly::monomial(1, 0),
            q: HomPoly::monomial(0, 1),
        }
    }
}

/// A rank-2 multiarrangement: pairwise non-parallel lines with
/// multiplicities.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Multi2D {
    lines: Vec<(i64, i64)>,
    mults: Vec<u32>,
}

impl Multi2D {
    /// Lines are normalized to primitive form with positive leading entry.
    pub fn new(lines: Vec<(i64, i64)>, mults: Vec<u32>) -> Result<Self> {
        if lines.len() != mults.len() {
            return Err(Error::DimensionMismatch {
                expected: lines.len(),
                found: mults.len(),
            });
        }
        let mut norm = Vec::with_capacity(lines.len());
        for &(a, b) in &lines {
            if a == 0 && b == 0 {
                return Err(Error::InvalidInput("zero line form".into()));
            }
            let g = gcd_i64(a, b);
            let s = if a < 0 || (a == 0 && b < 0) { -g } else { g };
            let l = (a / s, b / s);
            if norm.contains(&l) {
                return Err(Error::InvalidInput(format!("parallel lines {l:?}")));
            }
            norm.push(l);
        }
        Ok(Multi2D { lines: norm, mults })
    }

    pub fn lines(&self) -> &[(i64, i64)] {
        &self.lines
    }

    pub fn mults(&self) -> &[u32] {
        &self.mults
    }

    /// `|m|`.
    pub fn total(&self) -> u32 {
        self.mults.iter().sum()
    }

    fn active(&self) -> impl Iterator<Item = ((i64, i64), u32)> + '_ {
        self.lines.iter().copied().zip(self.mults.iter().copied()).filter(|&(_, m)| m > 0)
    }

    /// `∏ α_i^{m_i}`.
    pub fn defining_form(&self) -> HomPoly {
        self.active()
            .fold(HomPoly::monomial(0, 0), |acc, ((a, b), m)| acc.mul(&HomPoly::linear(a, b).pow(m)))
    }
}

fn binomial(n: usize, k: usize) -> BigInt {
    (0..k).fold(BigInt::one(), |acc, i| acc * BigInt::from(n - i) / BigInt::from(i + 1))
}

/// Linear map taking the coefficients of a degree-`d` form in `(x, y)` to
/// its coefficients in `(u, w)`, where `u = a x + b y` and `(u, w)` is a
/// unimodular coordinate change. Row `j` is the coefficient of `u^j w^{d-j}`.
#[allow(clippy::needless_range_loop)]
fn change_to_line_coords(a: i64, b: i64, d: usize) -> Vec<Vec<BigInt>> {
    let (g, x0, y0) = ext_gcd(a, b);
    debug_assert_eq!(g, 1);
    // [[a, b], [c, e]] has determinant 1; its inverse gives
    // x = e u - b w, y = -c u + a w.
    let (c, e) = (-y0, x0);
    let power = |p: i64, q: i64, k: usize| -> Vec<BigInt> {
        // (p u + q w)^k, coefficient of u^j
        (0..=k)
            .map(|j| binomial(k, j) * BigInt::from(p).pow(j as u32) * BigInt::from(q).pow((k - j) as u32))
            .collect()
    };
    let mut t = vec![vec![BigInt::zero(); d + 1]; d + 1];
    for i in 0..=d {
        let xs = power(e, -b, d - i);
        let ys = power(-c, a, i);
        for (j1, u1) in xs.iter().enumerate() {
            for (j2, u2) in ys.iter().enumerate() {
                t[j1 + j2][i] += u1 * u2;
            }
        }
    }
    t
}

fn conditions(ma: &Multi2D, d: usize) -> Vec<Vec<Rat>> {
    let mut rows = Vec::new();
    for ((a, b), m) in ma.active() {
        let t = change_to_line_coords(a, b, d);
        for tj in t.iter().take((m as usize).min(d + 1)) {
            let mut row = Vec::with_capacity(2 * (d + 1));
            row.extend(tj.iter().map(|x| Rat::from_integer(x * a)));
            row.extend(tj.iter().map(|x| Rat::from_integer(x * b)));
            rows.push(row);
        }
    }
    rows
}

/// `α^m` divides `f`.
fn divides(a: i64, b: i64, m: u32, f: &HomPoly) -> bool {
    if f.is_zero() {
        return true;
    }
    if m as usize > f.degree {
        return false;
    }
    let t = change_to_line_coords(a, b, f.degree);
    t.iter().take(m as usize).all(|row| {
        let s: Rat = row.iter().zip(&f.coeffs).map(|(x, c)| Rat::from_integer(x.clone()) * c).sum();
        s.is_zero()
    })
}

pub fn in_derivation_module(theta: &Derivation2, ma: &Multi2D) -> bool {
    ma.active().all(|((a, b), m)| divides(a, b, m, &theta.apply(a, b)))
}

/// `dim_Q D(A,m)_d`.
pub fn derivation_space_dim(ma: &Multi2D, d: usize) -> usize {
    2 * (d + 1) - rank(&conditions(ma, d), 2 * (d + 1))
}

fn derivation_basis(ma: &Multi2D, d: usize) -> Vec<Derivation2> {
    nullspace(&conditions(ma, d), 2 * (d + 1))
        .iter()
        .map(|v| Derivation2::from_vector(d, v))
        .collect()
}

/// The constant `c` with `det = c ∏ α^m`, if it exists and is nonzero.
fn saito_constant(t1: &Derivation2, t2: &Derivation2, ma: &Multi2D) -> Option<Rat> {
    let det = t1.p.mul(&t2.q).sub(&t1.q.mul(&t2.p));
    let q = ma.defining_form();
    if det.degree != q.degree || det.is_zero() {
        return None;
    }
    let k = q.coeffs.iter().position(|x| !x.is_zero())?;
    let c = &det.coeffs[k] / &q.coeffs[k];
    (det == q.scale(&c)).then_some(c)
}

/// Saito's criterion in rank 2: `θ1, θ2 ∈ D(A,m)` form a basis iff their
/// coefficient determinant is a nonzero constant multiple of `∏ α^m`.
pub fn saito_check(t1: &Derivation2, t2: &Derivation2, ma: &Multi2D) -> Result<bool> {
    if !in_derivation_module(t1, ma) || !in_derivation_module(t2, ma) {
        return Err(Error::NotInDerivationModule);
    }
    Ok(saito_constant(t1, t2, ma).is_some())
}

/// Exponents `d1 ≤ d2` of `D(A,m)` with a verified homogeneous basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Exponents2D {
    pub d1: usize,
    pub d2: usize,
    pub theta1: Derivation2,
    pub theta2: Derivation2,
    pub saito_constant: Rat,
}

impl Exponents2D {
    pub fn pair(&self) -> (usize, usize) {
        (self.d1, self.d2)
    }
}

pub fn exponents2d(ma: &Multi2D) -> Result<Exponents2D> {
    let total = ma.total() as usize;
    if total == 0 {
        return Err(Error::InvalidInput("multiarrangement has no positive multiplicity".into()));
    }
    let (d1, theta1) = (0..=total.div_ceil(2))
        .find_map(|d| derivation_basis(ma, d).into_iter().next().map(|t| (d, t)))
        .ok_or_else(|| Error::Internal("no derivation found below |m|/2".into()))?;
    let d2 = total - d1;
    let shift = d2 - d1;
    let multiples: Vec<Vec<Rat>> = (0..=shift)
        .map(|i| theta1.times(&HomPoly::monomial(shift - i, i)).to_vector())
        .collect();
    let base_rank = rank(&multiples, 2 * (d2 + 1));
    for cand in derivation_basis(ma, d2) {
        let mut m = multiples.clone();
        m.push(cand.to_vector());
        if rank(&m, 2 * (d2 + 1)) == base_rank {
            continue;
        }
        if let Some(c) = saito_constant(&theta1, &cand, ma) {
            debug_assert_eq!(d1 + d2, total);
            return Ok(Exponents2D {
                d1,
                d2,
                theta1,
                theta2: cand,
                saito_constant: c,
            });
        }
    }
    Err(Error::Internal(format!(
        "no Saito basis in degrees ({d1}, {d2}) for |m| = {total}"
    )))
}

/// `{exponents, basis, saito_det_constant}`; polynomials as lists of
/// rational coefficient strings, `x^{d-i} y^i` at position `i`.
#[derive(Serialize)]
pub struct Exponents2DJson {
    pub exponents: [usize; 2],
    pub basis: [[Vec<String>; 2]; 2],
    pub saito_det_constant: String,
}

impl From<&Exponents2D> for Exponents2DJson {
    fn from(e: &Exponents2D) -> Self {
        let s = |p: &HomPoly| p.coeffs.iter().map(|c| c.to_string()).collect();
        Exponents2DJson {
            exponents: [e.d1, e.d2],
            basis: [[s(&e.theta1.p), s(&e.theta1.q)], [s(&e.theta2.p), s(&e.theta2.q)]],
            saito_det_constant: e.saito_constant.to_string(),
        }
    }
}
