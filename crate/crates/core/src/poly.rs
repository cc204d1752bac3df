//! Univariate integer polynomials: Poincaré and characteristic polynomials.

use std::fmt;

use serde::Serialize;

/// Integer coefficients in increasing degree, trailing zeros trimmed.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct IntPolynomial(Vec<i64>);

impl IntPolynomial {
    pub fn new(mut coeffs: Vec<i64>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        IntPolynomial(coeffs)
    }

    pub fn one() -> Self {
        IntPolynomial(vec![1])
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.0
    }

    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn eval(&self, t: i64) -> i128 {
        self.0.iter().rev().fold(0i128, |acc, &c| acc * t as i128 + c as i128)
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.0.len().max(other.0.len());
        let at = |v: &[i64], i: usize| v.get(i).copied().unwrap_or(0);
        IntPolynomial::new((0..n).map(|i| at(&self.0, i) + at(&other.0, i)).collect())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.0.is_empty() || other.0.is_empty() {
            return IntPolynomial(Vec::new());
        }
        let mut out = vec![0i64; self.0.len() + other.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in other.0.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPolynomial::new(out)
    }

    /// `∏ (1 + e t)`.
    pub fn one_plus_product(exps: &[i64]) -> Self {
        exps.iter()
            .fold(Self::one(), |acc, &e| acc.mul(&IntPolynomial(vec![1, e])))
    }

    /// `∏ (t - e)`.
    pub fn monic_from_roots(roots: &[i64]) -> Self {
        roots
            .iter()
            .fold(Self::one(), |acc, &e| acc.mul(&IntPolynomial(vec![-e, 1])))
    }

    /// Drops the factor `t^k` (the lowest `k` coefficients must vanish).
    pub fn divide_by_t_power(&self, k: usize) -> Option<Self> {
        if self.0.iter().take(k).any(|&c| c != 0) {
            return None;
        }
        Some(IntPolynomial::new(self.0.iter().skip(k).copied().collect()))
    }

    /// Synthetic division by `t - r`, if exact.
    fn divide_linear(&self, r: i64) -> Option<Self> {
        let n = self.0.len();
        if n < 2 {
            return None;
        }
        let mut q = vec![0i64; n - 1];
        let mut carry = 0i64;
        for i in (1..n).rev() {
            carry = self.0[i] + carry * r;
            q[i - 1] = carry;
        }
        (self.0[0] + carry * r == 0).then(|| IntPolynomial::new(q))
    }

    /// Integer roots with multiplicity, searched in `0..=bound`, provided the
    /// polynomial is monic and splits completely over them.
    pub fn nonnegative_integer_roots(&self, bound: i64) -> Option<Vec<i64>> {
        if self.0.last() != Some(&1) {
            return None;
        }
        let mut p = self.clone();
        let mut roots = Vec::new();
        let mut r = 0;
        while p.0.len() > 1 {
            if r > bound {
                return None;
            }
            match p.divide_linear(r) {
                Some(q) => {
                    roots.push(r);
                    p = q;
                }
                None => r += 1,
            }
        }
        Some(roots)
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, &c) in self.0.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let mag = c.unsigned_abs();
            if first {
                if c < 0 {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if c < 0 { '-' } else { '+' })?;
            }
            match (i, mag) {
                (0, _) => write!(f, "{mag}")?,
                (1, 1) => write!(f, "t")?,
                (1, _) => write!(f, "{mag}t")?,
                (_, 1) => write!(f, "t^{i}")?,
                _ => write!(f, "{mag}t^{i}")?,
            }
            first = false;
        }
        Ok(())
    }
}

/// Whether `p = ∏ (1 + m t)` over the multiset `exps`.
pub fn factorization_check(p: &IntPolynomial, exps: &[i64]) -> bool {
    *p == IntPolynomial::one_plus_product(exps)
}
