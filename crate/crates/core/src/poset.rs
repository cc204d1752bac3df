//! Intersection posets, Möbius functions, and the polynomials and chamber
//! counts derived from them.

use std::collections::{BTreeSet, HashMap};

use serde::Serialize;

use crate::arrangement::Arrangement;
use crate::error::{Error, Result};
use crate::flat::{Flat, Meet};
use crate::linalg::{rat, Rat};
use crate::poly::IntPolynomial;

pub const DEFAULT_FLAT_BUDGET: usize = 1_000_000;
pub const FLAT_BUDGET_ENV: &str = "ARRLAB_FLAT_BUDGET";

/// Upper bound on the number of flats a poset construction may create.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FlatBudget(pub usize);

impl Default for FlatBudget {
    fn default() -> Self {
        FlatBudget(DEFAULT_FLAT_BUDGET)
    }
}

impl FlatBudget {
    /// Reads `ARRLAB_FLAT_BUDGET`, falling back to the default when unset or
    /// unparsable.
    pub fn from_env() -> Self {
        std::env::var(FLAT_BUDGET_ENV)
            .ok()
            .and_then(|v| v.trim().parse().ok())
            .map(FlatBudget)
            .unwrap_or_default()
    }
}

#[derive(Clone, Debug)]
struct Bits(Vec<u64>);

impl Bits {
    fn new(n: usize) -> Self {
        Bits(vec![0; n.div_ceil(64).max(1)])
    }
    fn set(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }
    fn get(&self, i: usize) -> bool {
        self.0[i / 64] >> (i % 64) & 1 == 1
    }
    fn union_with(&mut self, other: &Bits) {
        for (a, b) in self.0.iter_mut().zip(&other.0) {
            *a |= b;
        }
    }
}

#[derive(Clone, Debug)]
pub struct PosetFlat {
    pub flat: Flat,
    /// Indices of the hyperplanes containing the flat.
    pub containing: Vec<usize>,
    pub mobius: i64,
    /// Flats of codimension one less that contain this one.
    pub covers: Vec<usize>,
}

impl PosetFlat {
    pub fn codim(&self) -> usize {
        self.flat.codim()
    }
}

/// `L(A)`: every nonempty intersection of hyperplanes, ordered by reverse
/// inclusion, with the ambient space as index 0.
#[derive(Clone, Debug)]
pub struct IntersectionPoset {
    ambient: usize,
    flats: Vec<PosetFlat>,
    levels: Vec<Vec<usize>>,
}

pub fn intersection_poset(arr: &Arrangement) -> Result<IntersectionPoset> {
    intersection_poset_with_budget(arr, FlatBudget::from_env())
}

pub fn intersection_poset_with_budget(arr: &Arrangement, budget: FlatBudget) -> Result<IntersectionPoset> {
    let n = arr.dim();
    let hs = arr.hyperplanes();
    let mut flats = vec![PosetFlat {
        flat: Flat::ambient(n),
        containing: Vec::new(),
        mobius: 1,
        covers: Vec::new(),
    }];
    let mut bits = vec![Bits::new(hs.len())];
    let mut levels: Vec<Vec<usize>> = vec![vec![0]];
    let mut lookup: HashMap<Flat, usize> = HashMap::new();

    loop {
        let current = levels.last().expect("nonempty").clone();
        let codim = levels.len();
        let mut next = Vec::new();
        for &x in &current {
            let mut done = bits[x].clone();
            for (i, h) in hs.iter().enumerate() {
                if done.get(i) {
                    continue;
                }
                let y = match flats[x].flat.meet(h) {
                    Meet::Proper(y) => y,
                    Meet::Empty => continue,
                    Meet::Inside => unreachable!("containment is tracked in the bitset"),
                };
                let yi = match lookup.get(&y) {
                    Some(&yi) => yi,
                    None => {
                        if flats.len() >= budget.0 {
                            return Err(Error::FlatBudgetExceeded { codim, budget: budget.0 });
                        }
                        let mut b = Bits::new(hs.len());
                        let mut containing = Vec::new();
                        for (j, k) in hs.iter().enumerate() {
                            if y.lies_in(k) {
                                b.set(j);
                                containing.push(j);
                            }
                        }
                        let yi = flats.len();
                        lookup.insert(y.clone(), yi);
                        flats.push(PosetFlat {
                            flat: y,
                            containing,
                            mobius: 0,
                            covers: Vec::new(),
                        });
                        bits.push(b);
                        next.push(yi);
                        yi
                    }
                };
                flats[yi].covers.push(x);
                let by = bits[yi].clone();
                done.union_with(&by);
            }
        }
        if next.is_empty() {
            break;
        }
        levels.push(next);
    }

    // μ(Y) = -Σ μ(Z) over all Z strictly above Y, found by walking covers.
    let mut stamp = vec![usize::MAX; flats.len()];
    let mut stack = Vec::new();
    for y in 1..flats.len() {
        let mut sum = 0i64;
        stack.clear();
        stack.extend(flats[y].covers.iter().copied());
        while let Some(z) = stack.pop() {
            if stamp[z] == y {
                continue;
            }
            stamp[z] = y;
            sum += flats[z].mobius;
            stack.extend(flats[z].covers.iter().copied());
        }
        flats[y].mobius = -sum;
    }

    Ok(IntersectionPoset {
        ambient: n,
        flats,
        levels,
    })
}

#[derive(Serialize)]
struct FlatExport {
    dim: usize,
    mobius: i64,
    hyperplanes: Vec<usize>,
}

impl IntersectionPoset {
    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn flats(&self) -> &[PosetFlat] {
        &self.flats
    }

    pub fn len(&self) -> usize {
        self.flats.len()
    }

    pub fn is_empty(&self) -> bool {
        self.flats.is_empty()
    }

    /// Flat indices grouped by codimension.
    pub fn levels(&self) -> &[Vec<usize>] {
        &self.levels
    }

    /// Maximal codimension of a flat.
    pub fn rank(&self) -> usize {
        self.levels.len() - 1
    }

    pub fn index_of(&self, flat: &Flat) -> Option<usize> {
        self.flats.iter().position(|f| &f.flat == flat)
    }

    /// `π(A,t) = Σ |μ(X)| t^{codim X}`.
    pub fn poincare(&self) -> IntPolynomial {
        let mut c = vec![0i64; self.levels.len()];
        for f in &self.flats {
            c[f.codim()] += f.mobius.abs();
        }
        IntPolynomial::new(c)
    }

    /// `χ(A,t) = Σ μ(X) t^{dim X}`.
    pub fn characteristic(&self) -> IntPolynomial {
        let mut c = vec![0i64; self.ambient + 1];
        for f in &self.flats {
            c[f.flat.dim()] += f.mobius;
        }
        IntPolynomial::new(c)
    }

    pub fn chambers(&self) -> u64 {
        self.poincare().eval(1) as u64
    }

    /// Flats with dimension and Möbius value, for debugging dumps.
    pub fn export(&self) -> impl Serialize {
        self.flats
            .iter()
            .map(|f| FlatExport {
                dim: f.flat.dim(),
                mobius: f.mobius,
                hyperplanes: f.containing.clone(),
            })
            .collect::<Vec<_>>()
    }
}

pub fn poincare(arr: &Arrangement) -> Result<IntPolynomial> {
    Ok(intersection_poset(arr)?.poincare())
}

/// Number of chambers, `π(A,1)`.
pub fn chambers(arr: &Arrangement) -> Result<u64> {
    Ok(intersection_poset(arr)?.chambers())
}

/// Characteristic polynomial of a central arrangement.
pub fn char_poly(arr: &Arrangement) -> Result<IntPolynomial> {
    if !arr.is_central() {
        return Err(Error::NotCentral);
    }
    Ok(intersection_poset(arr)?.characteristic())
}

/// A line `a X + b Y = c` in the plane.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlaneLine {
    pub a: Rat,
    pub b: Rat,
    pub c: Rat,
}

/// Writes an arrangement of rank at most 2 as lines in a plane.
///
/// The plane coordinates are a basis of the span of the normals (pivot
/// columns of the reduced normal matrix), padded with unused coordinate
/// functionals when the rank is below 2.
pub fn planar_lines(arr: &Arrangement) -> Result<Vec<PlaneLine>> {
    let (pivots, _) = crate::arrangement::essential_coordinates(arr);
    if pivots.len() > 2 {
        return Err(Error::WrongRank {
            expected: 2,
            found: pivots.len(),
        });
    }
    if arr.dim() < 2 {
        return Err(Error::WrongRank {
            expected: 2,
            found: arr.dim(),
        });
    }
    // Coordinates of a normal in the span basis are its entries at the
    // pivot columns; padding columns carry zero coefficients.
    let mut cols = pivots.clone();
    for c in 0..arr.dim() {
        if cols.len() == 2 {
            break;
        }
        if !cols.contains(&c) {
            cols.push(c);
        }
    }
    Ok(arr
        .iter()
        .map(|h| {
            let coef = |i: usize| {
                if i < pivots.len() {
                    rat(h.normal()[cols[i]])
                } else {
                    rat(0)
                }
            };
            PlaneLine {
                a: coef(0),
                b: coef(1),
                c: h.offset().clone(),
            }
        })
        .collect())
}

/// Region count of a planar line arrangement by incremental insertion: each
/// new line meeting earlier lines in `p` distinct points adds `p + 1`
/// regions. Independent of the intersection poset.
pub fn chambers_2d_oracle(arr: &Arrangement) -> Result<u64> {
    let lines = planar_lines(arr)?;
    let mut regions = 1u64;
    for (i, l) in lines.iter().enumerate() {
        let mut points: BTreeSet<(Rat, Rat)> = BTreeSet::new();
        for m in &lines[..i] {
            let det = &l.a * &m.b - &l.b * &m.a;
            if det == rat(0) {
                continue;
            }
            let x = (&l.c * &m.b - &l.b * &m.c) / &det;
            let y = (&l.a * &m.c - &l.c * &m.a) / &det;
            points.insert((x, y));
        }
        regions += 1 + points.len() as u64;
    }
    Ok(regions)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arrangement::Hyperplane;

    fn arr(dim: usize, hs: &[(&[i64], i64)]) -> Arrangement {
        Arrangement::from_hyperplanes(dim, hs.iter().map(|(n, k)| Hyperplane::new(n, rat(*k)).unwrap()))
            .unwrap()
    }

    #[test]
    fn empty_arrangement_has_one_flat() {
        let p = intersection_poset(&Arrangement::empty(2)).unwrap();
        assert_eq!(p.len(), 1);
        assert_eq!(p.flats()[0].mobius, 1);
        assert_eq!(p.poincare(), IntPolynomial::one());
        assert_eq!(p.chambers(), 1);
    }

    #[test]
    fn three_concurrent_lines() {
        let a = arr(2, &[(&[1, 0], 0), (&[0, 1], 0), (&[1, 1], 0)]);
        let p = intersection_poset(&a).unwrap();
        assert_eq!(p.len(), 5);
        let origin = p.levels()[2][0];
        assert_eq!(p.flats()[origin].mobius, 2);
        assert_eq!(p.poincare(), IntPolynomial::new(vec![1, 3, 2]));
        assert_eq!(char_poly(&a).unwrap(), IntPolynomial::new(vec![2, -3, 1]));
    }

    #[test]
    fn three_points_on_a_line() {
        let a = arr(1, &[(&[1], -1), (&[1], 0), (&[1], 1)]);
        assert_eq!(chambers(&a).unwrap(), 4);
    }

    #[test]
    fn char_poly_rejects_affine() {
        let a = arr(1, &[(&[1], 1)]);
        assert_eq!(char_poly(&a), Err(Error::NotCentral));
    }

    #[test]
    fn single_hyperplane_char_poly() {
        let a = arr(3, &[(&[1, 0, 0], 0)]);
        assert_eq!(char_poly(&a).unwrap(), IntPolynomial::new(vec![0, 0, -1, 1]));
    }

    #[test]
    fn oracle_two_crossing_lines() {
        let a = arr(2, &[(&[1, 0], 0), (&[0, 1], 3)]);
        assert_eq!(chambers_2d_oracle(&a).unwrap(), 4);
    }

    #[test]
    fn oracle_rejects_rank_three() {
        let a = arr(3, &[(&[1, 0, 0], 0), (&[0, 1, 0], 0), (&[0, 0, 1], 0)]);
        assert!(matches!(chambers_2d_oracle(&a), Err(Error::WrongRank { .. })));
    }

    #[test]
    fn budget_is_enforced() {
        let a = arr(2, &[(&[1, 0], 0), (&[0, 1], 0), (&[1, 1], 1)]);
        let e = intersection_poset_with_budget(&a, FlatBudget(3)).unwrap_err();
        assert!(matches!(e, Error::FlatBudgetExceeded { codim: 1, budget: 3 }));
    }
}
