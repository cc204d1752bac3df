use std::fmt::Write as _;
use std::io::{self, Write as _};
use std::process::ExitCode;

use serde::Serialize;

use arrlab::arrangement::ArrangementJson;
use arrlab::freecert::{CertificateJson, LemmaReport, Status};
use arrlab::multi2d::{Exponents2DJson, Multi2D};
use arrlab::rootsys::RootSystemJson;
use arrlab::Error;

use crate::{ChambersOut, CharpolyOut, PredictOut, RunReport, SvgOut, TableOut, ZieglerOut};

pub const EXIT_CHECK: u8 = 1;
pub const EXIT_INPUT: u8 = 2;
pub const EXIT_RESOURCE: u8 = 3;
pub const EXIT_MISMATCH: u8 = 4;

#[derive(Debug)]
pub enum Failure {
    Lib(Error),
    Io(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

impl Failure {
    pub fn code(&self) -> u8 {
        match self {
            Failure::Io(_) => EXIT_INPUT,
            Failure::Lib(e) => match e {
                Error::FlatBudgetExceeded { .. } => EXIT_RESOURCE,
                Error::TableMismatch { .. } => EXIT_MISMATCH,
                Error::Certificate { .. }
                | Error::NonIntegralExponents { .. }
                | Error::Internal(_)
                | Error::NotInDerivationModule => EXIT_CHECK,
                _ => EXIT_INPUT,
            },
        }
    }

    pub fn report(&self, json: bool) -> ExitCode {
        let msg = match self {
            Failure::Lib(e) => e.to_string(),
            Failure::Io(m) => m.clone(),
        };
        if json {
            let body = serde_json::json!({ "error": msg, "exit_code": self.code() });
            let _ = writeln!(io::stdout(), "{}", serde_json::to_string_pretty(&body).unwrap_or_default());
        }
        eprintln!("error: {msg}");
        ExitCode::from(self.code())
    }
}

/// Prints `value` as JSON, or through `human` otherwise.
pub fn emit<T: Serialize>(json: bool, value: &T, human: fn(&T) -> String) -> Result<(), Failure> {
    let text = if json {
        let mut s = serde_json::to_string_pretty(value).map_err(|e| Failure::Io(e.to_string()))?;
        s.push('\n');
        s
    } else {
        human(value)
    };
    match io::stdout().lock().write_all(text.as_bytes()) {
        Err(e) if e.kind() != io::ErrorKind::BrokenPipe => Err(Failure::Io(e.to_string())),
        _ => Ok(()),
    }
}

/// Parses `--lines "1,0;0,1"` and `--mults "2,3"`.
pub fn parse_multi2d(lines: &str, mults: &str) -> Result<Multi2D, Error> {
    let bad = |what: &str| Error::InvalidInput(format!("cannot parse {what}"));
    let ls = lines
        .split(';')
        .map(|l| {
            let v: Vec<i64> = l
                .split(',')
                .map(|x| x.trim().parse().map_err(|_| bad(l)))
                .collect::<Result<_, _>>()?;
            match v[..] {
                [a, b] => Ok((a, b)),
                _ => Err(bad(l)),
            }
        })
        .collect::<Result<Vec<_>, _>>()?;
    let ms = mults
        .split(',')
        .map(|x| x.trim().parse().map_err(|_| bad(mults)))
        .collect::<Result<Vec<u32>, _>>()?;
    Multi2D::new(ls, ms)
}

fn exps(v: &[i64]) -> String {
    let s: Vec<String> = v.iter().map(i64::to_string).collect();
    format!("({})", s.join(","))
}

pub fn roots(r: &RootSystemJson) -> String {
    let mut s = format!("type {}  rank {}\n", r.type_label, r.rank);
    for (j, orbit) in r.orbits.iter().enumerate() {
        let _ = writeln!(
            s,
            "orbit {j}: {} roots  exponents {}  h {}",
            orbit.len(),
            exps(&r.exponents[j]),
            r.h[j]
        );
        for &i in orbit {
            let _ = writeln!(s, "  {i:>3}  {}", exps(&r.roots[i]));
        }
    }
    s
}

pub fn arrangement(a: &ArrangementJson) -> String {
    let mut s = format!("dim {}  hyperplanes {}  central {}\n", a.dim, a.hyperplanes.len(), a.central);
    for h in &a.hyperplanes {
        let _ = writeln!(s, "  {}  {}", exps(&h.normal), h.offset);
    }
    s
}

pub fn chambers(c: &ChambersOut) -> String {
    let mut s = format!("hyperplanes {}\nchambers {}\n", c.hyperplanes, c.mobius);
    if let Some(o) = c.oracle {
        let _ = writeln!(s, "line insertion {o}");
    }
    s
}

pub fn charpoly(c: &CharpolyOut) -> String {
    format!(
        "hyperplanes {}  central {}\nchi(t) = {}\npi(t) = {}\n",
        c.hyperplanes, c.central, c.characteristic, c.poincare
    )
}

pub fn predict(p: &PredictOut) -> String {
    format!(
        "{} a={} b={}\nhyperplanes {}\ncone exponents {}\nZiegler exponents {}\nchambers {} (printed formula {})\n",
        p.type_label,
        p.a,
        p.b,
        p.hyperplanes,
        exps(&p.exponents),
        exps(&p.ziegler_exponents),
        p.chambers_product,
        p.chambers_printed
    )
}

pub fn multi_exp(e: &Exponents2DJson) -> String {
    let poly = |c: &[String]| format!("[{}]", c.join(", "));
    format!(
        "exponents ({},{})\ntheta1 = ({}, {})\ntheta2 = ({}, {})\nsaito constant {}\n",
        e.exponents[0],
        e.exponents[1],
        poly(&e.basis[0][0]),
        poly(&e.basis[0][1]),
        poly(&e.basis[1][0]),
        poly(&e.basis[1][1]),
        e.saito_det_constant
    )
}

pub fn ziegler(z: &ZieglerOut) -> String {
    let mut s = format!("lines {}  |m| = {}\n", z.lines.len(), z.total);
    for l in &z.lines {
        let _ = writeln!(s, "  {}  m={}", exps(&l.normal), l.multiplicity);
    }
    if let Some([d1, d2]) = z.exponents {
        let _ = writeln!(s, "exponents ({d1},{d2})");
    }
    s
}

pub fn certificate(c: &CertificateJson) -> String {
    let mut s = format!(
        "base: {} hyperplanes  exponents {}  Ziegler ({},{})  pi = {}\n",
        c.base.hyperplanes,
        exps(&c.base.exponents),
        c.base.ziegler_exponents[0],
        c.base.ziegler_exponents[1],
        c.base.poincare
    );
    for (i, st) in c.steps.iter().enumerate() {
        let _ = writeln!(
            s,
            "{:>3}  {:<28} t={:<3} {} -> {}",
            i + 1,
            st.hyperplane,
            st.t,
            exps(&st.exp_before),
            exps(&st.exp_after)
        );
    }
    let ch = &c.checks;
    let _ = writeln!(
        s,
        "final exponents {}\nchecks: chain {}  sum {}  t-1 {}  replay {}",
        exps(&c.final_exponents),
        ch.chain,
        ch.sum_rule,
        ch.contains_t_minus_1,
        ch.replay
    );
    s
}

fn status(st: Status) -> &'static str {
    match st {
        Status::Pass => "pass",
        Status::Fail => "FAIL",
        Status::Inconclusive => "inconclusive",
        Status::Skipped => "skipped",
    }
}

pub fn run_report(r: &RunReport) -> String {
    let mut s = String::new();
    for p in &r.instances {
        let ch = &p.chambers;
        let _ = writeln!(
            s,
            "{} a={} b={}  hyperplanes {}  exponents {}  {}",
            p.type_label,
            p.a,
            p.b,
            p.hyperplanes,
            exps(&p.predicted_exponents),
            if p.passed() { "PASS" } else { "FAIL" }
        );
        let _ = writeln!(
            s,
            "  chambers: mobius {}  oracle {}  product {}  printed {}",
            ch.mobius,
            ch.oracle.map_or("-".to_string(), |o| o.to_string()),
            ch.product,
            ch.printed
        );
        let _ = writeln!(s, "  pi(t) = {}", p.poincare);
        for c in &p.checks {
            let _ = writeln!(s, "  {:<20} {:<12} {}", c.name, status(c.status), c.detail);
        }
    }
    let passed = r.instances.iter().filter(|p| p.passed()).count();
    let _ = writeln!(s, "{passed}/{} instances pass", r.instances.len());
    if let Some(ms) = r.timing_ms {
        let _ = writeln!(s, "elapsed {ms} ms");
    }
    s
}

pub fn table(t: &TableOut) -> String {
    let mut s = format!("{}\n", t.table);
    if let Some(o) = &t.orders {
        let _ = writeln!(
            s,
            "orders: {}/{} succeed  table order {}  swapped first two {}  order unique {}",
            o.successful_orderings,
            o.orderings,
            o.table_order_succeeds,
            o.swapped_first_two_succeeds,
            o.order_necessary
        );
    }
    s
}

pub fn lemma(l: &LemmaReport) -> String {
    let mut s = format!(
        "{} a={} b={}\nflats at infinity {}\nunique preimage {}\nlocalization matches {}\n",
        l.type_label, l.a, l.b, l.flats_at_infinity, l.unique_preimage, l.localization_matches
    );
    for f in &l.failures {
        let _ = writeln!(s, "  failure: {f}");
    }
    let _ = writeln!(s, "{}", if l.passed() { "PASS" } else { "FAIL" });
    s
}

pub fn svg(o: &SvgOut) -> String {
    format!("wrote {} ({} bytes)\n", o.path, o.bytes)
}
