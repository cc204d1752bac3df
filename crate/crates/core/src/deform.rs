//! Weyl arrangements and their W-equivariant deformations `A^[-a,b]`.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::arrangement::{cone, infinity_hyperplane, Arrangement, Hyperplane};
use crate::error::{Error, Result};
use crate::flat::Flat;
use crate::linalg::{rat, Rat};
use crate::rootsys::RootSystem;

/// A W-equivariant multiplicity, one non-negative value per orbit in the
/// orbit order of the root system.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct EquivMult(pub Vec<u32>);

impl EquivMult {
    pub fn new(values: Vec<u32>) -> Self {
        EquivMult(values)
    }

    pub fn constant(k: usize, value: u32) -> Self {
        EquivMult(vec![value; k])
    }

    pub fn values(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn get(&self, j: usize) -> u32 {
        self.0[j]
    }

    fn check(&self, rs: &RootSystem) -> Result<()> {
        if self.len() != rs.orbit_count() {
            return Err(Error::DimensionMismatch {
                expected: rs.orbit_count(),
                found: self.len(),
            });
        }
        Ok(())
    }

    /// `Σ_j m_j h_j`.
    pub fn dot_h(&self, rs: &RootSystem) -> i64 {
        self.0.iter().zip(rs.h_vector()).map(|(&m, &h)| m as i64 * h).sum()
    }
}

impl fmt::Display for EquivMult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(u32::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl FromStr for EquivMult {
    type Err = Error;

    /// Comma-separated values, e.g. `1,0`.
    fn from_str(s: &str) -> Result<Self> {
        s.split(',')
            .map(|x| {
                x.trim()
                    .parse::<u32>()
                    .map_err(|_| Error::InvalidInput(format!("bad multiplicity entry {x:?}")))
            })
            .collect::<Result<Vec<_>>>()
            .map(EquivMult)
    }
}

/// `{H_α : α ∈ Φ₊}`.
pub fn weyl_arrangement(rs: &RootSystem) -> Arrangement {
    let all: Vec<usize> = (0..rs.orbit_count()).collect();
    crate::rootsys::orbit_arrangement(rs, &all)
}

/// `a_j - b_j ∈ {-1, 0}` for every orbit. Equivariance is built into
/// [`EquivMult`].
pub fn is_shi_catalan(rs: &RootSystem, a: &EquivMult, b: &EquivMult) -> Result<bool> {
    a.check(rs)?;
    b.check(rs)?;
    Ok(a.0.iter().zip(&b.0).all(|(&x, &y)| {
        let d = x as i64 - y as i64;
        d == 0 || d == -1
    }))
}

/// Like [`is_shi_catalan`] but reports the first offending orbit.
pub fn require_shi_catalan(rs: &RootSystem, a: &EquivMult, b: &EquivMult) -> Result<()> {
    a.check(rs)?;
    b.check(rs)?;
    for (j, (&x, &y)) in a.0.iter().zip(&b.0).enumerate() {
        let d = x as i64 - y as i64;
        if d != 0 && d != -1 {
            return Err(Error::NotShiCatalan { orbit: j, diff: d });
        }
    }
    Ok(())
}

/// Every Shi-Catalan pair `(a, b)` over `k` orbits with `b_j <= max`, in
/// lexicographic order of `(b_1, a_1, b_2, a_2, ...)`.
pub fn shi_catalan_pairs(k: usize, max: u32) -> Vec<(EquivMult, EquivMult)> {
    let mut grid: Vec<(Vec<u32>, Vec<u32>)> = vec![(Vec::new(), Vec::new())];
    for _ in 0..k {
        let mut next = Vec::new();
        for (a, b) in &grid {
            for bj in 0..=max {
                for aj in [bj.checked_sub(1), Some(bj)].into_iter().flatten() {
                    let (mut a, mut b) = (a.clone(), b.clone());
                    a.push(aj);
                    b.push(bj);
                    next.push((a, b));
                }
            }
        }
        grid = next;
    }
    grid.into_iter().map(|(a, b)| (EquivMult(a), EquivMult(b))).collect()
}

/// One hyperplane `α(v) = k` of a deformation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeformedHyperplane {
    pub root: usize,
    pub level: i64,
    pub hyperplane: Hyperplane,
}

/// Hyperplanes `α(v) = k` for each root α in orbit `j` and each integer `k`
/// in `ranges[j]` (inclusive; an empty range contributes nothing). Roots are
/// visited in root order, levels in increasing order.
pub fn deformation_terms(rs: &RootSystem, ranges: &[(i64, i64)]) -> Result<Vec<DeformedHyperplane>> {
    if ranges.len() != rs.orbit_count() {
        return Err(Error::DimensionMismatch {
            expected: rs.orbit_count(),
            found: ranges.len(),
        });
    }
    let mut out = Vec::new();
    for (i, root) in rs.positive_roots().iter().enumerate() {
        let (lo, hi) = ranges[rs.orbit_of(i)];
        for k in lo..=hi {
            out.push(DeformedHyperplane {
                root: i,
                level: k,
                hyperplane: Hyperplane::new(root, rat(k))?,
            });
        }
    }
    Ok(out)
}

pub fn deform_ranges(rs: &RootSystem, ranges: &[(i64, i64)]) -> Result<Arrangement> {
    Arrangement::from_hyperplanes(
        rs.ambient_dim(),
        deformation_terms(rs, ranges)?.into_iter().map(|t| t.hyperplane),
    )
}

fn ranges_of(a: &EquivMult, b: &EquivMult) -> Vec<(i64, i64)> {
    a.0.iter().zip(&b.0).map(|(&x, &y)| (-(x as i64), y as i64)).collect()
}

/// `A^[-a,b] = {H_{α,k} : -a(H_α) ≤ k ≤ b(H_α)}`.
pub fn deform(rs: &RootSystem, a: &EquivMult, b: &EquivMult) -> Result<Arrangement> {
    a.check(rs)?;
    b.check(rs)?;
    deform_ranges(rs, &ranges_of(a, b))
}

pub fn deform_terms(rs: &RootSystem, a: &EquivMult, b: &EquivMult) -> Result<Vec<DeformedHyperplane>> {
    a.check(rs)?;
    b.check(rs)?;
    deformation_terms(rs, &ranges_of(a, b))
}

/// `Σ_j |orbit_j| (a_j + b_j + 1)`.
pub fn deformation_size(rs: &RootSystem, a: &EquivMult, b: &EquivMult) -> usize {
    rs.orbits()
        .iter()
        .enumerate()
        .map(|(j, o)| o.len() * (a.get(j) + b.get(j) + 1) as usize)
        .sum()
}

/// `a + b + 1`, orbitwise.
pub fn ziegler_multiplicity(a: &EquivMult, b: &EquivMult) -> EquivMult {
    EquivMult(a.0.iter().zip(&b.0).map(|(x, y)| x + y + 1).collect())
}

/// For a flat `X ⊆ H∞` of `c(A^[-a,b])`, the unique central flat `Y` of the
/// Weyl arrangement with `X = cY ∩ H∞`.
///
/// `Y` is read off geometrically as `{v : (v, 0) ∈ X}` and then checked to be
/// an intersection of reflecting hyperplanes.
pub fn flat_at_infinity_correspondence(
    rs: &RootSystem,
    a: &EquivMult,
    b: &EquivMult,
    x: &Flat,
) -> Result<Flat> {
    a.check(rs)?;
    b.check(rs)?;
    let n = rs.ambient_dim();
    if x.ambient_dim() != n + 1 {
        return Err(Error::DimensionMismatch {
            expected: n + 1,
            found: x.ambient_dim(),
        });
    }
    if !x.lies_in(&infinity_hyperplane(n)) {
        return Err(Error::NotAtInfinity);
    }
    let rows: Vec<Vec<Rat>> = x
        .equations()
        .iter()
        .map(|r| {
            let mut v = r[..n].to_vec();
            v.push(r[n + 1].clone());
            v
        })
        .collect();
    let y = Flat::from_equations(n, rows).ok_or(Error::Internal("empty flat at infinity".into()))?;
    let weyl = weyl_arrangement(rs);
    let through: Vec<&Hyperplane> = weyl.iter().filter(|h| y.lies_in(h)).collect();
    let closure = Flat::from_hyperplanes(n, through).expect("central hyperplanes meet");
    if closure != y {
        return Err(Error::Internal(format!(
            "flat at infinity does not come from the Weyl arrangement (dim {} vs {})",
            y.dim(),
            closure.dim()
        )));
    }
    Ok(y)
}

/// `c((A_Y)^[-a_Y, b_Y])`: the cone of the deformation restricted to the
/// roots whose hyperplanes contain `Y`.
pub fn localized_deformation_cone(
    rs: &RootSystem,
    a: &EquivMult,
    b: &EquivMult,
    y: &Flat,
) -> Result<Arrangement> {
    let terms = deform_terms(rs, a, b)?;
    let kept = terms
        .into_iter()
        .filter(|t| {
            let central = Hyperplane::central(&rs.positive_roots()[t.root]).expect("nonzero root");
            y.lies_in(&central)
        })
        .map(|t| t.hyperplane);
    Ok(cone(&Arrangement::from_hyperplanes(rs.ambient_dim(), kept)?))
}
