//! The addition half of Terao's addition-deletion theorem for rank-3
//! central arrangements, and the rank-3 Ziegler restriction check used to
//! certify the starting arrangement of a chain.

use std::collections::HashSet;

use serde::Serialize;

use crate::arrangement::{planar_forms, ziegler_restriction, Arrangement, Hyperplane};
use crate::error::{Error, Result};
use crate::flat::{Flat, Meet};
use crate::multi2d::{exponents2d, Multi2D};
use crate::poly::IntPolynomial;

/// Number of distinct flats `h ∩ K` for `K` in `arr`, `K ≠ h`; for a rank-3
/// central arrangement this is `|A^h|`.
pub fn restriction_count(arr: &Arrangement, h: &Hyperplane) -> usize {
    let base = Flat::from_hyperplanes(arr.dim(), [h]).expect("a hyperplane is nonempty");
    let mut seen = HashSet::new();
    for k in arr.iter().filter(|k| *k != h) {
        if let Meet::Proper(f) = base.meet(k) {
            seen.insert(f);
        }
    }
    seen.len()
}

/// Result of trying to add one hyperplane.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Addition {
    pub restriction_count: usize,
    /// New exponents when the theorem applies; `None` means inconclusive,
    /// not non-free.
    pub exponents: Option<Vec<i64>>,
}

/// If `current` is free with exponents `current_exp` and the restriction of
/// `current ∪ {h}` to `h` has `t` lines, the union is free with exponents
/// `{1, t-1, r+1}` whenever `{1, t-1}` is a sub-multiset of `current_exp`
/// with remaining element `r`.
pub fn addition_step(current: &Arrangement, current_exp: &[i64], h: &Hyperplane) -> Result<Addition> {
    if current.contains(h) {
        return Err(Error::DuplicateHyperplane(h.to_string()));
    }
    if current_exp.len() != 3 {
        return Err(Error::WrongRank {
            expected: 3,
            found: current_exp.len(),
        });
    }
    let t = restriction_count(current, h);
    let mut rest = current_exp.to_vec();
    let exponents = (|| {
        let i = rest.iter().position(|&x| x == 1)?;
        rest.remove(i);
        let j = rest.iter().position(|&x| x == t as i64 - 1)?;
        rest.remove(j);
        let mut e = vec![1, t as i64 - 1, rest[0] + 1];
        e.sort_unstable();
        Some(e)
    })();
    Ok(Addition {
        restriction_count: t,
        exponents,
    })
}

/// Outcome of the rank-3 freeness check through the Ziegler restriction.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Rank3Check {
    pub ziegler_exponents: [usize; 2],
    pub poincare: IntPolynomial,
    /// `Some((1, d2, d3))` when `π(A,t) = (1+t)(1+d2 t)(1+d3 t)`.
    pub free_exponents: Option<Vec<i64>>,
}

/// Rank-2 multiarrangement of the Ziegler restriction onto `h0`, in plane
/// coordinates.
pub fn ziegler_multi2d(arr: &Arrangement, h0: &Hyperplane) -> Result<Multi2D> {
    let z = ziegler_restriction(arr, h0)?;
    let forms = planar_forms(&z)?;
    let (lines, mults) = forms.into_iter().unzip();
    Multi2D::new(lines, mults)
}

/// A central arrangement of rank 3 is free with exponents `(1, d2, d3)` iff
/// its Ziegler restriction onto `h0` has exponents `(d2, d3)` and the
/// Poincaré polynomial factors as `(1+t)(1+d2 t)(1+d3 t)`.
pub fn rank3_ziegler_pi_check(arr: &Arrangement, h0: &Hyperplane) -> Result<Rank3Check> {
    if !arr.is_central() {
        return Err(Error::NotCentral);
    }
    let r = arr.rank();
    if r != 3 {
        return Err(Error::WrongRank { expected: 3, found: r });
    }
    let e = exponents2d(&ziegler_multi2d(arr, h0)?)?;
    let (d2, d3) = (e.d1 as i64, e.d2 as i64);
    let poincare = crate::poset::poincare(arr)?;
    let free = crate::poly::factorization_check(&poincare, &[1, d2, d3]).then(|| {
        let mut v = vec![1, d2, d3];
        v.sort_unstable();
        v
    });
    Ok(Rank3Check {
        ziegler_exponents: [e.d1, e.d2],
        poincare,
        free_exponents: free,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::rat;

    fn h(n: &[i64]) -> Hyperplane {
        Hyperplane::new(n, rat(0)).unwrap()
    }

    fn boolean() -> Arrangement {
        Arrangement::from_hyperplanes(3, [h(&[1, 0, 0]), h(&[0, 1, 0]), h(&[0, 0, 1])]).unwrap()
    }

    #[test]
    fn boolean_plus_diagonal() {
        let a = addition_step(&boolean(), &[1, 1, 1], &h(&[1, -1, 0])).unwrap();
        assert_eq!(a.restriction_count, 2);
        assert_eq!(a.exponents, Some(vec![1, 1, 2]));
    }

    #[test]
    fn addition_rejects_existing() {
        assert!(addition_step(&boolean(), &[1, 1, 1], &h(&[1, 0, 0])).is_err());
    }

    #[test]
    fn inconclusive_when_count_does_not_match() {
        // x+y+z meets each coordinate plane in a different line: t = 3,
        // but 2 is not an exponent of the Boolean arrangement.
        let a = addition_step(&boolean(), &[1, 1, 1], &h(&[1, 1, 1])).unwrap();
        assert_eq!(a.restriction_count, 3);
        assert_eq!(a.exponents, None);
    }

    #[test]
    fn near_pencil_cone_is_free() {
        // Cone of three lines forming a triangle: generic, not free.
        let tri = Arrangement::from_hyperplanes(
            3,
            [h(&[1, 0, 0]), h(&[0, 1, 0]), h(&[1, 1, -1]), h(&[0, 0, 1])],
        )
        .unwrap();
        let c = rank3_ziegler_pi_check(&tri, &h(&[0, 0, 1])).unwrap();
        assert_eq!(c.free_exponents, None);

        // Three concurrent lines plus the line at infinity.
        let pencil = Arrangement::from_hyperplanes(
            3,
            [h(&[1, 0, 0]), h(&[0, 1, 0]), h(&[1, 1, 0]), h(&[0, 0, 1])],
        )
        .unwrap();
        let c = rank3_ziegler_pi_check(&pencil, &h(&[0, 0, 1])).unwrap();
        assert_eq!(c.free_exponents, Some(vec![1, 1, 2]));
    }

    #[test]
    fn rank3_check_rejects_wrong_rank() {
        let a = Arrangement::from_hyperplanes(3, [h(&[1, 0, 0]), h(&[0, 1, 0])]).unwrap();
        assert!(matches!(
            rank3_ziegler_pi_check(&a, &h(&[1, 0, 0])),
            Err(Error::WrongRank { expected: 3, found: 2 })
        ));
    }
}
