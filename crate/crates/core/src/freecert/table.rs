//! Side-by-side addition tables: computed restriction counts and exponents
//! against the expected pattern for each row.

use std::fmt;

use serde::Serialize;

use super::certificate::{AdditionStep, ChainBuilder};
use crate::arrangement::Hyperplane;
use crate::error::{Error, Result};

/// What a row is expected to produce.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Expectation {
    /// Symbolic count, e.g. `A+5`, or `runtime` when derived from the
    /// exponents before the step.
    pub pattern: String,
    /// Value of `A` the pattern is evaluated at, if any.
    pub a: Option<i64>,
    /// Acceptable restriction counts.
    pub counts: Vec<usize>,
    /// Exponents after the step, when fixed in advance.
    pub exponents: Option<Vec<i64>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TableRow {
    /// Position in the table the row was taken from (1-based).
    pub row: usize,
    pub hyperplane: String,
    pub root: Option<usize>,
    pub level: Option<i64>,
    pub expected: Expectation,
    pub computed_count: usize,
    /// `None` when the addition theorem did not apply.
    pub computed_exponents: Option<Vec<i64>>,
}

impl TableRow {
    pub fn matches(&self) -> bool {
        self.expected.counts.contains(&self.computed_count)
            && match (&self.computed_exponents, &self.expected.exponents) {
                (None, _) => false,
                (Some(_), None) => true,
                (Some(c), Some(e)) => c == e,
            }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Table {
    pub case: String,
    pub s: i64,
    pub t: i64,
    pub rows: Vec<TableRow>,
    /// Index into `rows` of the first row that did not match; the table
    /// stops there.
    pub first_mismatch: Option<usize>,
}

impl Table {
    pub fn new(case: impl Into<String>, s: i64, t: i64) -> Self {
        Table {
            case: case.into(),
            s,
            t,
            rows: Vec::new(),
            first_mismatch: None,
        }
    }

    pub fn all_match(&self) -> bool {
        self.first_mismatch.is_none()
    }

    /// Converts a mismatch into [`Error::TableMismatch`].
    pub fn require_match(&self) -> Result<()> {
        match self.first_mismatch {
            None => Ok(()),
            Some(i) => {
                let r = &self.rows[i];
                Err(Error::TableMismatch {
                    row: r.row,
                    expected: r.expected.describe(),
                    computed: r.describe_computed(),
                })
            }
        }
    }
}

impl Expectation {
    pub fn describe(&self) -> String {
        let counts: Vec<String> = self.counts.iter().map(usize::to_string).collect();
        let mut s = match self.a {
            Some(a) => format!("{} = {} (A = {a})", self.pattern, counts.join("|")),
            None => format!("{} = {}", self.pattern, counts.join("|")),
        };
        if let Some(e) = &self.exponents {
            s.push_str(&format!(", exponents {}", fmt_exps(e)));
        }
        s
    }
}

impl TableRow {
    pub fn describe_computed(&self) -> String {
        match &self.computed_exponents {
            Some(e) => format!("{}, exponents {}", self.computed_count, fmt_exps(e)),
            None => format!("{}, addition theorem does not apply", self.computed_count),
        }
    }
}

pub fn fmt_exps(e: &[i64]) -> String {
    let parts: Vec<String> = e.iter().map(i64::to_string).collect();
    format!("({})", parts.join(","))
}

impl fmt::Display for Table {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "case {} s={} t={}", self.case, self.s, self.t)?;
        writeln!(
            f,
            "{:>3}  {:<28} {:>8} {:>8}  {:<16} {:<16} ok",
            "row", "hyperplane", "t", "expected", "exponents", "expected"
        )?;
        for r in &self.rows {
            let counts: Vec<String> = r.expected.counts.iter().map(usize::to_string).collect();
            writeln!(
                f,
                "{:>3}  {:<28} {:>8} {:>8}  {:<16} {:<16} {}",
                r.row,
                r.hyperplane,
                r.computed_count,
                counts.join("|"),
                r.computed_exponents.as_deref().map_or("-".to_string(), fmt_exps),
                r.expected.exponents.as_deref().map_or("-".to_string(), fmt_exps),
                if r.matches() { "yes" } else { "NO" }
            )?;
        }
        match self.first_mismatch {
            None => write!(f, "all {} rows match", self.rows.len()),
            Some(i) => write!(f, "first mismatch at row {}", self.rows[i].row),
        }
    }
}

/// Adds `h` through the builder and records the row. Returns `false` when
/// the row does not match; the builder is left unchanged if the addition
/// theorem did not apply.
pub(crate) fn record_row(
    builder: &mut ChainBuilder,
    table: &mut Table,
    row: usize,
    h: Hyperplane,
    root: Option<usize>,
    level: Option<i64>,
    expected: Expectation,
) -> Result<bool> {
    let label = h.to_string();
    let ch = super::certificate::cone_hyperplane(&h);
    let step: Option<AdditionStep> = builder.try_add(h)?;
    let computed_count = match &step {
        Some(s) => s.restriction_count,
        None => super::addition::restriction_count(&crate::arrangement::cone(builder.affine()), &ch),
    };
    let r = TableRow {
        row,
        hyperplane: label,
        root,
        level,
        expected,
        computed_count,
        computed_exponents: step.map(|s| s.exponents_after),
    };
    let ok = r.matches();
    if !ok && table.first_mismatch.is_none() {
        table.first_mismatch = Some(table.rows.len());
    }
    table.rows.push(r);
    Ok(ok)
}
