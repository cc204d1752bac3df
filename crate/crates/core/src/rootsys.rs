//! Crystallographic root systems in integer coordinates, their W-orbits of
//! positive roots, and per-orbit exponents.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::arrangement::{Arrangement, Hyperplane};
use crate::error::{Error, Result};
use crate::poset;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum WeylType {
    A,
    B,
    C,
    D,
    G,
}

/// A Weyl type together with its rank, e.g. `B3` or `G2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TypeLabel {
    pub kind: WeylType,
    pub rank: usize,
}

impl TypeLabel {
    pub fn new(kind: WeylType, rank: usize) -> Result<Self> {
        let ok = match kind {
            WeylType::A => (1..=4).contains(&rank),
            WeylType::B | WeylType::C => (2..=4).contains(&rank),
            WeylType::D => (3..=4).contains(&rank),
            WeylType::G => rank == 2,
        };
        if ok {
            Ok(TypeLabel { kind, rank })
        } else {
            Err(Error::UnsupportedType(format!("{kind:?}{rank}")))
        }
    }

    /// Every supported label, in a fixed order.
    pub fn all() -> Vec<TypeLabel> {
        let mut v = Vec::new();
        for (kind, ranks) in [
            (WeylType::A, 1..=4),
            (WeylType::B, 2..=4),
            (WeylType::C, 2..=4),
            (WeylType::D, 3..=4),
            (WeylType::G, 2..=2),
        ] {
            for r in ranks {
                v.push(TypeLabel { kind, rank: r });
            }
        }
        v
    }
}

impl fmt::Display for TypeLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}{}", self.kind, self.rank)
    }
}

impl FromStr for TypeLabel {
    type Err = Error;

    /// Parses labels such as `A2`, `b3` or `G2`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::UnsupportedType(s.to_string());
        let mut chars = s.chars();
        let kind = match chars.next().map(|c| c.to_ascii_uppercase()) {
            Some('A') => WeylType::A,
            Some('B') => WeylType::B,
            Some('C') => WeylType::C,
            Some('D') => WeylType::D,
            Some('G') => WeylType::G,
            _ => return Err(bad()),
        };
        let rank: usize = chars.as_str().parse().map_err(|_| bad())?;
        TypeLabel::new(kind, rank)
    }
}

/// Positive roots of a Weyl group with their orbit decomposition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootSystem {
    label: TypeLabel,
    ambient_dim: usize,
    positive_roots: Vec<Vec<i64>>,
    simple_roots: Vec<usize>,
    orbits: Vec<Vec<usize>>,
    orbit_exponents: Vec<Vec<i64>>,
    orbit_h: Vec<i64>,
}

fn unit(n: usize, i: usize, c: i64) -> Vec<i64> {
    let mut v = vec![0; n];
    v[i] = c;
    v
}

fn add(a: &[i64], b: &[i64]) -> Vec<i64> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

fn neg(a: &[i64]) -> Vec<i64> {
    a.iter().map(|x| -x).collect()
}

pub(crate) fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn lex_positive(v: &[i64]) -> bool {
    v.iter().find(|&&x| x != 0).is_some_and(|&x| x > 0)
}

/// Positive roots in the standard realization, listed in the conventional
/// order (`e_i ± e_j` before `e_i` / `2e_i` for B and C).
fn standard_positive_roots(label: TypeLabel) -> (usize, Vec<Vec<i64>>) {
    let l = label.rank;
    let mut roots = Vec::new();
    let pm = |n: usize, roots: &mut Vec<Vec<i64>>, with_plus: bool| {
        for i in 0..n {
            for j in i + 1..n {
                roots.push(add(&unit(n, i, 1), &unit(n, j, -1)));
                if with_plus {
                    roots.push(add(&unit(n, i, 1), &unit(n, j, 1)));
                }
            }
        }
    };
    let n = match label.kind {
        WeylType::A => {
            pm(l + 1, &mut roots, false);
            l + 1
        }
        WeylType::B => {
            pm(l, &mut roots, true);
            roots.extend((0..l).map(|i| unit(l, i, 1)));
            l
        }
        WeylType::C => {
            pm(l, &mut roots, true);
            roots.extend((0..l).map(|i| unit(l, i, 2)));
            l
        }
        WeylType::D => {
            pm(l, &mut roots, true);
            l
        }
        WeylType::G => {
            pm(3, &mut roots, false);
            for i in 0..3 {
                let mut v = vec![-1; 3];
                v[i] = 2;
                roots.push(if lex_positive(&v) { v } else { neg(&v) });
            }
            3
        }
    };
    debug_assert!(roots.iter().all(|r| lex_positive(r)));
    (n, roots)
}

/// `s_α(β) = β - 2(α·β)/(α·α) α`.
pub fn reflect(alpha: &[i64], beta: &[i64]) -> Vec<i64> {
    let num = 2 * dot(alpha, beta);
    let den = dot(alpha, alpha);
    debug_assert_eq!(num % den, 0, "root system is not crystallographic");
    let c = num / den;
    beta.iter().zip(alpha).map(|(b, a)| b - c * a).collect()
}

impl RootSystem {
    pub fn label(&self) -> TypeLabel {
        self.label
    }

    /// ℓ.
    pub fn rank(&self) -> usize {
        self.label.rank
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn positive_roots(&self) -> &[Vec<i64>] {
        &self.positive_roots
    }

    pub fn simple_roots(&self) -> &[usize] {
        &self.simple_roots
    }

    pub fn orbits(&self) -> &[Vec<usize>] {
        &self.orbits
    }

    pub fn orbit_count(&self) -> usize {
        self.orbits.len()
    }

    pub fn orbit_exponents(&self) -> &[Vec<i64>] {
        &self.orbit_exponents
    }

    /// `h_j`, the largest exponent of orbit `j` plus one.
    pub fn h_vector(&self) -> &[i64] {
        &self.orbit_h
    }

    /// Orbit containing the root with the given index.
    pub fn orbit_of(&self, root: usize) -> usize {
        self.orbits
            .iter()
            .position(|o| o.contains(&root))
            .expect("every root lies in an orbit")
    }

    /// Index of the positive root whose reflecting hyperplane has this
    /// (primitive) normal.
    pub fn root_of_normal(&self, normal: &[i64]) -> Option<usize> {
        self.positive_roots.iter().position(|r| {
            let h = Hyperplane::central(r).expect("roots are nonzero");
            h.normal() == normal
        })
    }

    /// Exponents of the full root system.
    pub fn exponents(&self) -> Result<Vec<i64>> {
        let all: Vec<usize> = (0..self.orbit_count()).collect();
        orbit_exponents(self, &all)
    }
}

pub fn build_root_system(label: TypeLabel) -> Result<RootSystem> {
    let label = TypeLabel::new(label.kind, label.rank)?;
    let (n, roots) = standard_positive_roots(label);
    let simple = simple_roots(&roots);
    let orbits = compute_orbits(&roots);
    let mut rs = RootSystem {
        label,
        ambient_dim: n,
        positive_roots: roots,
        simple_roots: simple,
        orbits,
        orbit_exponents: Vec::new(),
        orbit_h: Vec::new(),
    };
    for j in 0..rs.orbits.len() {
        let e = orbit_exponents(&rs, &[j])?;
        rs.orbit_h.push(e.last().copied().unwrap_or(0) + 1);
        rs.orbit_exponents.push(e);
    }
    Ok(rs)
}

/// Positive roots that are not the sum of two positive roots.
fn simple_roots(roots: &[Vec<i64>]) -> Vec<usize> {
    (0..roots.len())
        .filter(|&k| !roots.iter().any(|a| roots.iter().any(|b| add(a, b) == roots[k])))
        .collect()
}

/// Partition of positive-root indices into classes closed under every
/// reflection `s_α` (images taken up to sign), ordered by squared root
/// length and then by first index.
pub fn compute_orbits(roots: &[Vec<i64>]) -> Vec<Vec<usize>> {
    let find = |v: &[i64]| -> usize {
        let v = if lex_positive(v) { v.to_vec() } else { neg(v) };
        roots.iter().position(|r| *r == v).expect("root system closed under reflections")
    };
    let mut orbit_id = vec![usize::MAX; roots.len()];
    let mut orbits: Vec<Vec<usize>> = Vec::new();
    for start in 0..roots.len() {
        if orbit_id[start] != usize::MAX {
            continue;
        }
        let id = orbits.len();
        let mut members = vec![start];
        orbit_id[start] = id;
        let mut k = 0;
        while k < members.len() {
            let beta = roots[members[k]].clone();
            for alpha in roots {
                let img = find(&reflect(alpha, &beta));
                if orbit_id[img] == usize::MAX {
                    orbit_id[img] = id;
                    members.push(img);
                }
            }
            k += 1;
        }
        members.sort_unstable();
        orbits.push(members);
    }
    orbits.sort_by_key(|o| (dot(&roots[o[0]], &roots[o[0]]), o[0]));
    orbits
}

/// Central arrangement of the reflecting hyperplanes of the selected orbits.
pub fn orbit_arrangement(rs: &RootSystem, orbit_subset: &[usize]) -> Arrangement {
    let mut idx: Vec<usize> = orbit_subset
        .iter()
        .flat_map(|&j| rs.orbits[j].iter().copied())
        .collect();
    idx.sort_unstable();
    Arrangement::from_hyperplanes(
        rs.ambient_dim,
        idx.iter()
            .map(|&i| Hyperplane::central(&rs.positive_roots[i]).expect("roots are nonzero")),
    )
    .expect("dimension matches")
}

/// Exponents of the union of the selected orbits, read off as the roots of
/// its characteristic polynomial and padded with zeros to length ℓ.
pub fn orbit_exponents(rs: &RootSystem, orbit_subset: &[usize]) -> Result<Vec<i64>> {
    if let Some(&j) = orbit_subset.iter().find(|&&j| j >= rs.orbit_count()) {
        return Err(Error::InvalidInput(format!("orbit index {j} out of range")));
    }
    let arr = orbit_arrangement(rs, orbit_subset);
    let chi = poset::char_poly(&arr)?;
    let lineality = rs.ambient_dim - rs.rank();
    let reduced = chi
        .divide_by_t_power(lineality)
        .ok_or_else(|| Error::NonIntegralExponents { poly: chi.to_string() })?;
    let mut roots = reduced
        .nonnegative_integer_roots(arr.len() as i64)
        .ok_or_else(|| Error::NonIntegralExponents { poly: chi.to_string() })?;
    if roots.len() != rs.rank() {
        return Err(Error::NonIntegralExponents { poly: chi.to_string() });
    }
    roots.sort_unstable();
    Ok(roots)
}

/// JSON view: `{type, rank, roots, orbits, exponents, h}`.
#[derive(Serialize)]
pub struct RootSystemJson {
    #[serde(rename = "type")]
    pub type_label: String,
    pub rank: usize,
    pub roots: Vec<Vec<i64>>,
    pub orbits: Vec<Vec<usize>>,
    pub exponents: Vec<Vec<i64>>,
    pub h: Vec<i64>,
}

impl From<&RootSystem> for RootSystemJson {
    fn from(rs: &RootSystem) -> Self {
        RootSystemJson {
            type_label: rs.label.to_string(),
            rank: rs.rank(),
            roots: rs.positive_roots.clone(),
            orbits: rs.orbits.clone(),
            exponents: rs.orbit_exponents.clone(),
            h: rs.orbit_h.clone(),
        }
    }
}
