//! The four G2 Shi-Catalan families and their addition tables.
//!
//! Roots are in the sum-zero realization: short roots `e0-e1`, `e0-e2`,
//! `e1-e2` (indices 0–2), long roots `L1 = 2e0-e1-e2`, `L2 = e0-2e1+e2`,
//! `L3 = e0+e1-2e2` (indices 3–5). `L1 = L2 + L3`.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use super::certificate::{ChainBuilder, FreenessCertificate};
use super::addition::addition_step;
use super::certificate::cone_hyperplane;
use super::table::{record_row, Expectation, Table};
use crate::arrangement::{cone, Arrangement, Hyperplane};
use crate::deform::{deform_ranges, EquivMult};
use crate::error::{Error, Result};
use crate::linalg::rat;
use crate::rootsys::{build_root_system, RootSystem, TypeLabel, WeylType};

const L1: usize = 3;
const L2: usize = 4;
const L3: usize = 5;

/// `(Catalan|Shi on short roots, Catalan|Shi on long roots)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum G2Case {
    /// Catalan on both orbits: short `[-s,s]`, long `[-t,t]`.
    I,
    /// Shi on short roots: short `[-(s-1),s]`, long `[-t,t]`.
    II,
    /// Shi on long roots: short `[-s,s]`, long `[-(t-1),t]`.
    III,
    /// Shi on both: short `[-(s-1),s]`, long `[-(t-1),t]`.
    IV,
}

impl G2Case {
    pub const ALL: [G2Case; 4] = [G2Case::I, G2Case::II, G2Case::III, G2Case::IV];
}

impl fmt::Display for G2Case {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            G2Case::I => "G-i",
            G2Case::II => "G-ii",
            G2Case::III => "G-iii",
            G2Case::IV => "G-iv",
        })
    }
}

impl FromStr for G2Case {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "g-i" | "i" => Ok(G2Case::I),
            "g-ii" | "ii" => Ok(G2Case::II),
            "g-iii" | "iii" => Ok(G2Case::III),
            "g-iv" | "iv" => Ok(G2Case::IV),
            _ => Err(Error::InvalidInput(format!("unknown G2 case {s:?}"))),
        }
    }
}

pub fn g2() -> RootSystem {
    build_root_system(TypeLabel::new(WeylType::G, 2).expect("G2 is supported")).expect("G2 builds")
}

/// Level ranges `[short, long]` of a case.
pub fn g2_ranges(case: G2Case, s: i64, t: i64) -> Result<[(i64, i64); 2]> {
    if s < 0 || t < 0 {
        return Err(Error::InvalidInput("s and t must be non-negative".into()));
    }
    let short = match case {
        G2Case::I | G2Case::III => (-s, s),
        G2Case::II | G2Case::IV => (-(s - 1), s),
    };
    let long = match case {
        G2Case::I | G2Case::II => (-t, t),
        G2Case::III | G2Case::IV => {
            if t == 0 {
                return Err(Error::InvalidInput(format!("{case} needs t >= 1")));
            }
            (-(t - 1), t)
        }
    };
    Ok([short, long])
}

/// The affine arrangement of a case.
pub fn g2_arrangement(case: G2Case, s: i64, t: i64) -> Result<Arrangement> {
    deform_ranges(&g2(), &g2_ranges(case, s, t)?)
}

/// Case and parameters of a Shi-Catalan pair on G2 (orbit order short,
/// long); `s = b_short`, `t = b_long`.
pub fn g2_case_of(a: &EquivMult, b: &EquivMult) -> Result<(G2Case, i64, i64)> {
    let rs = g2();
    crate::deform::require_shi_catalan(&rs, a, b)?;
    let shi = |j: usize| a.get(j) != b.get(j);
    let case = match (shi(0), shi(1)) {
        (false, false) => G2Case::I,
        (true, false) => G2Case::II,
        (false, true) => G2Case::III,
        (true, true) => G2Case::IV,
    };
    Ok((case, b.get(0) as i64, b.get(1) as i64))
}

/// Closed-form cone exponents of a case.
pub fn g2_closed_form(case: G2Case, s: i64, t: i64) -> Result<Vec<i64>> {
    g2_ranges(case, s, t)?;
    Ok(match case {
        G2Case::I => {
            let a = 3 * s + 3 * t;
            if (s + t) % 2 == 1 {
                vec![1, a + 2, a + 4]
            } else {
                vec![1, a + 1, a + 5]
            }
        }
        G2Case::II => {
            let a = 3 * s + 3 * t;
            vec![1, a + 1, a + 2]
        }
        G2Case::III => {
            let a = 3 * s + 3 * (t - 1);
            vec![1, a + 4, a + 5]
        }
        G2Case::IV => {
            let a = 3 * s + 3 * (t - 1);
            vec![1, a + 3, a + 3]
        }
    })
}

/// One table row: long root, sign of the level, level offset over the
/// table's `t`, count offset over `A`, exponents after as offsets over `A`.
#[derive(Clone, Copy, Debug)]
struct RowSpec {
    root: usize,
    sign: i64,
    level_offset: i64,
    count_offset: i64,
    exps: [i64; 2],
}

const fn r(root: usize, sign: i64, level_offset: i64, count_offset: i64, e2: i64, e3: i64) -> RowSpec {
    RowSpec {
        root,
        sign,
        level_offset,
        count_offset,
        exps: [e2, e3],
    }
}

/// Catalan-on-long table: levels `t+1` then `t+2`, from exponents
/// `(1, A+2, A+4)`.
const G_I_ROWS: [RowSpec; 12] = [
    r(L1, 1, 1, 5, 3, 4),
    r(L2, 1, 1, 5, 4, 4),
    r(L3, 1, 1, 5, 4, 5),
    r(L1, -1, 1, 5, 4, 6),
    r(L2, -1, 1, 5, 4, 7),
    r(L3, -1, 1, 5, 4, 8),
    r(L1, 1, 2, 9, 5, 8),
    r(L2, 1, 2, 9, 6, 8),
    r(L3, 1, 2, 9, 7, 8),
    r(L1, -1, 2, 9, 8, 8),
    r(L2, -1, 2, 9, 8, 9),
    r(L3, -1, 2, 9, 8, 10),
];

/// Shi-on-short table: level `t+1`, from exponents `(1, A+1, A+2)`. The
/// order matters.
const G_II_ROWS: [RowSpec; 6] = [
    r(L1, 1, 1, 3, 2, 2),
    r(L3, 1, 1, 3, 2, 3),
    r(L2, 1, 1, 4, 3, 3),
    r(L2, -1, 1, 4, 3, 4),
    r(L3, -1, 1, 5, 4, 4),
    r(L1, -1, 1, 5, 4, 5),
];

fn row_hyperplane(rs: &RootSystem, spec: &RowSpec, t: i64) -> (Hyperplane, i64) {
    let level = spec.sign * (t + spec.level_offset);
    let h = Hyperplane::new(&rs.positive_roots()[spec.root], rat(level)).expect("nonzero root");
    (h, level)
}

/// Replays `rows` (1-based positions `first_row..`) with table parameters
/// `t` and `a`, appending to `table`. Stops at the first mismatch.
fn replay(
    rs: &RootSystem,
    builder: &mut ChainBuilder,
    table: &mut Table,
    rows: &[RowSpec],
    first_row: usize,
    t: i64,
    a: i64,
) -> Result<bool> {
    for (i, spec) in rows.iter().enumerate() {
        let (h, level) = row_hyperplane(rs, spec, t);
        let expected = Expectation {
            pattern: format!("A+{}", spec.count_offset),
            a: Some(a),
            counts: vec![(a + spec.count_offset) as usize],
            exponents: Some(vec![1, a + spec.exps[0], a + spec.exps[1]]),
        };
        if !record_row(builder, table, first_row + i, h, Some(spec.root), Some(level), expected)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Raises the long-root range of a Catalan-on-long chain from `[-u,u]` to
/// `[-(u+1),u+1]`, or only its positive side when `only_positive`.
///
/// When `s+u` is odd this is the first half of the table with `A = 3s+3u`;
/// when it is even it is the second half with the table's `t = u-1`.
fn g1_level(
    rs: &RootSystem,
    builder: &mut ChainBuilder,
    table: &mut Table,
    s: i64,
    u: i64,
    only_positive: bool,
) -> Result<bool> {
    let (rows, first_row, t) = if (s + u) % 2 == 1 {
        (&G_I_ROWS[0..6], 1, u)
    } else {
        (&G_I_ROWS[6..12], 7, u - 1)
    };
    let rows = if only_positive { &rows[..3] } else { rows };
    replay(rs, builder, table, rows, first_row, t, 3 * s + 3 * t)
}

fn g2_level(
    rs: &RootSystem,
    builder: &mut ChainBuilder,
    table: &mut Table,
    s: i64,
    u: i64,
    only_positive: bool,
) -> Result<bool> {
    let rows = if only_positive { &G_II_ROWS[..3] } else { &G_II_ROWS[..] };
    replay(rs, builder, table, rows, 1, u, 3 * s + 3 * u)
}

/// Base of a chain: the case with long range `[0,0]`, certified by the
/// Ziegler restriction check, with exponents compared to the closed form.
fn start(case: G2Case, s: i64) -> Result<ChainBuilder> {
    let base = g2_arrangement(case, s, 0)?;
    let b = ChainBuilder::start(&base)?;
    let expected = g2_closed_form(case, s, 0)?;
    if b.exponents() != expected.as_slice() {
        return Err(Error::TableMismatch {
            row: 0,
            expected: format!("base exponents {expected:?}"),
            computed: format!("{:?}", b.exponents()),
        });
    }
    Ok(b)
}

/// Builds the chain up to `(case, s, t)`, recording every row in `table`.
fn chain(case: G2Case, s: i64, t: i64, table: &mut Table) -> Result<ChainBuilder> {
    g2_ranges(case, s, t)?;
    let rs = g2();
    let (base_case, full_levels, partial) = match case {
        G2Case::I => (G2Case::I, t, false),
        G2Case::II => (G2Case::II, t, false),
        G2Case::III => (G2Case::I, t - 1, true),
        G2Case::IV => (G2Case::II, t - 1, true),
    };
    let mut b = start(base_case, s)?;
    let level = |b: &mut ChainBuilder, table: &mut Table, u: i64, only_positive: bool| match base_case {
        G2Case::I => g1_level(&rs, b, table, s, u, only_positive),
        _ => g2_level(&rs, b, table, s, u, only_positive),
    };
    for u in 0..full_levels {
        if !level(&mut b, table, u, false)? {
            return Ok(b);
        }
    }
    if partial {
        level(&mut b, table, full_levels, true)?;
    }
    Ok(b)
}

/// Certificate for the cone of `(case, s, t)` by inductive replay of the
/// tables. Every row must match.
pub fn certify_g2(case: G2Case, s: i64, t: i64) -> Result<FreenessCertificate> {
    let mut table = Table::new(case.to_string(), s, t);
    let b = chain(case, s, t, &mut table)?;
    table.require_match()?;
    let cert = b.finish();
    cert.require_target(&g2_arrangement(case, s, t)?)?;
    let expected = g2_closed_form(case, s, t)?;
    if cert.final_exponents != expected {
        return Err(Error::Certificate {
            step: cert.steps.len(),
            detail: format!("final exponents {:?}, closed form {:?}", cert.final_exponents, expected),
        });
    }
    Ok(cert)
}

/// The rows applied on top of `(case, s, t)`: twelve for G-i (levels
/// `t+1`, `t+2`), six for G-ii (level `t+1`).
pub fn g2_table(case: G2Case, s: i64, t: i64) -> Result<Table> {
    let rs = g2();
    let mut prefix = Table::new(case.to_string(), s, t);
    let mut b = chain(case, s, t, &mut prefix)?;
    prefix.require_match()?;
    let mut table = Table::new(case.to_string(), s, t);
    match case {
        G2Case::I => {
            if g1_level(&rs, &mut b, &mut table, s, t, false)? {
                g1_level(&rs, &mut b, &mut table, s, t + 1, false)?;
            }
        }
        G2Case::II => {
            g2_level(&rs, &mut b, &mut table, s, t, false)?;
        }
        _ => {
            return Err(Error::InvalidInput(format!(
                "{case} has no table of its own; its chain is a prefix of the neighbouring case"
            )))
        }
    }
    Ok(table)
}

/// How the six G-ii additions at level `t+1` behave under reordering.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OrderAnalysis {
    pub s: i64,
    pub t: i64,
    pub orderings: u64,
    /// Orderings in which every step satisfies the addition theorem.
    pub successful_orderings: u64,
    pub table_order_succeeds: bool,
    pub swapped_first_two_succeeds: bool,
    /// The table order is the only ordering that works.
    pub order_necessary: bool,
}

/// Counts, over all 720 orderings of the six G-ii rows, those along which
/// the addition theorem applies at every step.
pub fn g2_ii_order_analysis(s: i64, t: i64) -> Result<OrderAnalysis> {
    let rs = g2();
    let mut prefix = Table::new("G-ii", s, t);
    let b = chain(G2Case::II, s, t, &mut prefix)?;
    prefix.require_match()?;
    let start_cone = cone(b.affine());
    let hs: Vec<Hyperplane> = G_II_ROWS
        .iter()
        .map(|spec| cone_hyperplane(&row_hyperplane(&rs, spec, t).0))
        .collect();
    let n = hs.len();
    let arr_of = |mask: usize| {
        let mut a = start_cone.clone();
        for (i, h) in hs.iter().enumerate() {
            if mask >> i & 1 == 1 {
                a.insert(h.clone()).expect("dimension matches");
            }
        }
        a
    };
    let mut exps: Vec<Option<Vec<i64>>> = vec![None; 1 << n];
    let mut ways = vec![0u64; 1 << n];
    exps[0] = Some(b.exponents().to_vec());
    ways[0] = 1;
    let mut masks: Vec<usize> = (0..1 << n).collect();
    masks.sort_by_key(|m| m.count_ones());
    for mask in masks {
        if ways[mask] == 0 {
            continue;
        }
        let arr = arr_of(mask);
        let e = exps[mask].clone().expect("reached states have exponents");
        for (i, h) in hs.iter().enumerate() {
            if mask >> i & 1 == 1 {
                continue;
            }
            if let Some(after) = addition_step(&arr, &e, h)?.exponents {
                let next = mask | 1 << i;
                match &exps[next] {
                    Some(prev) if *prev != after => {
                        return Err(Error::Internal(format!(
                            "exponents of a free arrangement depend on the path: {prev:?} vs {after:?}"
                        )))
                    }
                    _ => exps[next] = Some(after),
                }
                ways[next] += ways[mask];
            }
        }
    }
    let run = |order: &[usize]| -> Result<bool> {
        let mut mask = 0usize;
        for &i in order {
            let e = match &exps[mask] {
                Some(e) if ways[mask] > 0 => e.clone(),
                _ => return Ok(false),
            };
            if addition_step(&arr_of(mask), &e, &hs[i])?.exponents.is_none() {
                return Ok(false);
            }
            mask |= 1 << i;
        }
        Ok(true)
    };
    let successful = ways[(1 << n) - 1];
    let table_order_succeeds = run(&[0, 1, 2, 3, 4, 5])?;
    Ok(OrderAnalysis {
        s,
        t,
        orderings: (1..=n as u64).product(),
        successful_orderings: successful,
        table_order_succeeds,
        swapped_first_two_succeeds: run(&[1, 0, 2, 3, 4, 5])?,
        order_necessary: table_order_succeeds && successful == 1,
    })
}
