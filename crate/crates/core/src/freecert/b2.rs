//! B2: coordinate lines `x, y = -s..s` with `x ± y = 0`, then the lines
//! `x ∓ y = ±a` added four at a time.

use super::certificate::{ChainBuilder, FreenessCertificate};
use super::predict::predict_cone_exponents;
use super::table::{record_row, Expectation, Table};
use crate::arrangement::{Arrangement, Hyperplane};
use crate::deform::{deform, deform_ranges, EquivMult};
use crate::error::{Error, Result};
use crate::linalg::rat;
use crate::rootsys::{build_root_system, RootSystem, TypeLabel, WeylType};

pub fn b2() -> RootSystem {
    build_root_system(TypeLabel::new(WeylType::B, 2).expect("B2 is supported")).expect("B2 builds")
}

fn check_params(s: i64, t: i64) -> Result<()> {
    if s < 0 || t < 0 {
        return Err(Error::InvalidInput("s and t must be non-negative".into()));
    }
    Ok(())
}

/// `x, y ∈ {-s..s}`, `x ± y = 0`.
pub fn b2_base(s: i64) -> Result<Arrangement> {
    check_params(s, 0)?;
    deform_ranges(&b2(), &[(-s, s), (0, 0)])
}

/// `x-y = -a`, `x+y = a`, `x-y = a`, `x+y = -a` for `a = 1..t`.
pub fn b2_additions(t: i64) -> Vec<Hyperplane> {
    let mut out = Vec::new();
    for a in 1..=t {
        for (normal, k) in [([1, -1], -a), ([1, 1], a), ([1, -1], a), ([1, 1], -a)] {
            out.push(Hyperplane::new(&normal, rat(k)).expect("nonzero normal"));
        }
    }
    out
}

/// Catalan deformation with `s` on the short orbit and `t` on the long one.
pub fn b2_target(s: i64, t: i64) -> Result<Arrangement> {
    check_params(s, t)?;
    let m = EquivMult::new(vec![s as u32, t as u32]);
    deform(&b2(), &m, &m)
}

/// Counts `t` for which adding a hyperplane to a free arrangement with these
/// exponents satisfies the addition theorem.
pub fn admissible_counts(exps: &[i64]) -> Vec<usize> {
    let mut rest = exps.to_vec();
    let Some(i) = rest.iter().position(|&x| x == 1) else {
        return Vec::new();
    };
    rest.remove(i);
    let mut out: Vec<usize> = rest.iter().map(|&e| (e + 1) as usize).collect();
    out.sort_unstable();
    out.dedup();
    out
}

fn run(s: i64, t: i64) -> Result<(ChainBuilder, Table)> {
    check_params(s, t)?;
    let mut b = ChainBuilder::start(&b2_base(s)?)?;
    let base_expected = vec![1, 2 * s + 1, 2 * s + 3];
    if b.exponents() != base_expected.as_slice() {
        return Err(Error::TableMismatch {
            row: 0,
            expected: format!("base exponents {base_expected:?}"),
            computed: format!("{:?}", b.exponents()),
        });
    }
    let mut table = Table::new("B", s, t);
    for (i, h) in b2_additions(t).into_iter().enumerate() {
        let expected = Expectation {
            pattern: "runtime".into(),
            a: None,
            counts: admissible_counts(b.exponents()),
            exponents: None,
        };
        if !record_row(&mut b, &mut table, i + 1, h, None, None, expected)? {
            break;
        }
    }
    Ok((b, table))
}

/// The `4t` addition rows on top of the base for `s`.
pub fn b2_table(s: i64, t: i64) -> Result<Table> {
    Ok(run(s, t)?.1)
}

pub fn certify_b2(s: i64, t: i64) -> Result<FreenessCertificate> {
    let (b, table) = run(s, t)?;
    if let Some(i) = table.first_mismatch {
        return Err(Error::Certificate {
            step: i + 1,
            detail: format!("adding {}: {}", table.rows[i].hyperplane, table.rows[i].describe_computed()),
        });
    }
    let cert = b.finish();
    cert.require_target(&b2_target(s, t)?)?;
    let m = EquivMult::new(vec![s as u32, t as u32]);
    let predicted = predict_cone_exponents(&b2(), &m, &m)?;
    if cert.final_exponents != predicted {
        return Err(Error::Certificate {
            step: cert.steps.len(),
            detail: format!("final exponents {:?}, predicted {:?}", cert.final_exponents, predicted),
        });
    }
    Ok(cert)
}
