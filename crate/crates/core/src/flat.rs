//! Affine subspaces in canonical reduced-echelon form.

use crate::arrangement::Hyperplane;
use crate::linalg::{rref, Rat};
use num_traits::{One, Zero};

/// An affine subspace `{v : M v = c}` stored as the reduced row echelon form
/// of the augmented system `[M | c]`. Two flats describe the same subspace
/// iff their stored systems are identical.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Flat {
    ambient: usize,
    rows: Vec<Vec<Rat>>,
}

/// Result of intersecting a flat with a hyperplane.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Meet {
    /// The flat already lies in the hyperplane.
    Inside,
    /// The hyperplane is parallel to the flat and misses it.
    Empty,
    Proper(Flat),
}

impl Flat {
    pub fn ambient(n: usize) -> Self {
        Flat {
            ambient: n,
            rows: Vec::new(),
        }
    }

    /// Solution set of the augmented system; `None` when inconsistent.
    pub fn from_equations(n: usize, mut rows: Vec<Vec<Rat>>) -> Option<Self> {
        assert!(rows.iter().all(|r| r.len() == n + 1), "augmented rows must have n+1 entries");
        let pivots = rref(&mut rows, n + 1);
        if pivots.last() == Some(&n) {
            return None;
        }
        Some(Flat { ambient: n, rows })
    }

    pub fn from_hyperplanes<'a>(n: usize, hs: impl IntoIterator<Item = &'a Hyperplane>) -> Option<Self> {
        Flat::from_equations(n, hs.into_iter().map(|h| h.row()).collect())
    }

    pub fn point(coords: &[Rat]) -> Self {
        let n = coords.len();
        let rows = (0..n)
            .map(|i| {
                let mut r = vec![Rat::zero(); n + 1];
                r[i] = Rat::one();
                r[n] = coords[i].clone();
                r
            })
            .collect();
        Flat { ambient: n, rows }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.ambient - self.rows.len()
    }

    pub fn codim(&self) -> usize {
        self.rows.len()
    }

    /// Canonical augmented equations.
    pub fn equations(&self) -> &[Vec<Rat>] {
        &self.rows
    }

    pub fn contains_origin(&self) -> bool {
        self.rows.iter().all(|r| r[self.ambient].is_zero())
    }

    fn pivot(row: &[Rat]) -> usize {
        row.iter().position(|x| !x.is_zero()).expect("zero row in echelon form")
    }

    /// Reduces an augmented row modulo the flat's equations.
    fn reduce(&self, mut row: Vec<Rat>) -> Vec<Rat> {
        for r in &self.rows {
            let p = Self::pivot(r);
            if !row[p].is_zero() {
                let f = row[p].clone();
                for (x, y) in row.iter_mut().zip(r) {
                    if !y.is_zero() {
                        *x -= &f * y;
                    }
                }
            }
        }
        row
    }

    fn implies(&self, row: Vec<Rat>) -> bool {
        self.reduce(row).iter().all(Zero::is_zero)
    }

    pub fn lies_in(&self, h: &Hyperplane) -> bool {
        debug_assert_eq!(h.dim(), self.ambient);
        self.implies(h.row())
    }

    pub fn contains_point(&self, p: &[Rat]) -> bool {
        self.rows.iter().all(|r| {
            let s: Rat = r[..self.ambient].iter().zip(p).map(|(a, b)| a * b).sum();
            s == r[self.ambient]
        })
    }

    /// `self ⊆ other` as point sets.
    pub fn is_subset_of(&self, other: &Flat) -> bool {
        other.rows.iter().all(|r| self.implies(r.clone()))
    }

    pub fn meet(&self, h: &Hyperplane) -> Meet {
        self.meet_row(h.row())
    }

    pub fn meet_row(&self, row: Vec<Rat>) -> Meet {
        let n = self.ambient;
        let mut row = self.reduce(row);
        let Some(p) = row[..n].iter().position(|x| !x.is_zero()) else {
            return if row[n].is_zero() { Meet::Inside } else { Meet::Empty };
        };
        let lead = row[p].clone();
        for x in row.iter_mut() {
            *x /= &lead;
        }
        let mut rows = self.rows.clone();
        for r in rows.iter_mut() {
            if !r[p].is_zero() {
                let f = r[p].clone();
                for (x, y) in r.iter_mut().zip(&row) {
                    if !y.is_zero() {
                        *x -= &f * y;
                    }
                }
            }
        }
        let at = rows.iter().position(|r| Self::pivot(r) > p).unwrap_or(rows.len());
        rows.insert(at, row);
        Meet::Proper(Flat { ambient: n, rows })
    }

    /// Intersection with another flat; `None` when disjoint.
    pub fn intersect(&self, other: &Flat) -> Option<Flat> {
        let mut acc = self.clone();
        for r in &other.rows {
            match acc.meet_row(r.clone()) {
                Meet::Inside => {}
                Meet::Empty => return None,
                Meet::Proper(f) => acc = f,
            }
        }
        Some(acc)
    }
}
