use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use rayon::prelude::*;
use serde::Serialize;

use arrlab::arrangement::{cone, infinity_hyperplane, planar_forms, ziegler_restriction, ArrangementJson};
use arrlab::deform::{deform, require_shi_catalan, shi_catalan_pairs, EquivMult};
use arrlab::freecert::{self, G2Case, PipelineReport, Table};
use arrlab::multi2d::{exponents2d, Exponents2DJson, Multi2D};
use arrlab::poset::{chambers_2d_oracle, intersection_poset};
use arrlab::rootsys::{RootSystem, RootSystemJson};
use arrlab::{Arrangement, Error};

mod output;

use output::{emit, Failure};

#[derive(Parser)]
#[command(name = "arrlab", version, about = "Shi-Catalan deformations of Weyl arrangements")]
struct Cli {
    /// Print machine-readable JSON instead of text.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Positive roots, orbits, orbit exponents and h-vector.
    Roots(TypeArgs),
    /// The deformation A^[-a,b], or its cone.
    Build {
        #[command(flatten)]
        inst: Instance,
        #[arg(long)]
        cone: bool,
    },
    /// Chamber count from the Möbius function (and the line-insertion count
    /// in rank 2).
    Chambers(Source),
    /// Characteristic and Poincaré polynomials.
    Charpoly {
        #[command(flatten)]
        src: Source,
        #[arg(long)]
        cone: bool,
    },
    /// Predicted cone exponents and chamber counts.
    Predict(Instance),
    /// Exponents and a Saito basis of a rank-2 multiarrangement.
    MultiExp {
        /// Lines as `a,b;a,b;...` for the forms `a x + b y`.
        #[arg(long)]
        lines: String,
        /// Multiplicities, comma separated.
        #[arg(long)]
        mults: String,
    },
    /// Ziegler restriction of the cone onto the hyperplane at infinity.
    Ziegler(Instance),
    /// Freeness certificate by additions.
    Certify(CertifyArgs),
    /// Run every check on one instance or on a grid.
    Verify(VerifyArgs),
    /// Computed versus expected addition table.
    Table(TableArgs),
    /// Check the flats-at-infinity correspondence and localization identity.
    LemmaCheck(Instance),
    /// Draw a rank-2 deformation as SVG.
    Svg {
        #[command(flatten)]
        inst: Instance,
        #[arg(long)]
        out: PathBuf,
    },
}

#[derive(Args, Clone)]
struct TypeArgs {
    /// Weyl type, e.g. `G2`, `B3`, or `B` together with `--rank 3`.
    #[arg(long = "type")]
    type_label: String,
    #[arg(long)]
    rank: Option<usize>,
}

impl TypeArgs {
    fn root_system(&self) -> Result<RootSystem, Error> {
        let label = match self.rank {
            Some(r) if self.type_label.chars().all(|c| c.is_ascii_alphabetic()) => {
                format!("{}{r}", self.type_label)
            }
            Some(r) if !self.type_label.ends_with(&r.to_string()) => {
                return Err(Error::InvalidInput(format!(
                    "type {} disagrees with --rank {r}",
                    self.type_label
                )))
            }
            _ => self.type_label.clone(),
        };
        arrlab::build_root_system(label.parse()?)
    }
}

#[derive(Args, Clone)]
struct Instance {
    #[command(flatten)]
    ty: TypeArgs,
    /// Per-orbit values of a, in the orbit order printed by `roots`.
    #[arg(long)]
    a: String,
    /// Per-orbit values of b.
    #[arg(long)]
    b: String,
}

impl Instance {
    fn resolve(&self) -> Result<(RootSystem, EquivMult, EquivMult), Error> {
        let rs = self.ty.root_system()?;
        let a: EquivMult = self.a.parse()?;
        let b: EquivMult = self.b.parse()?;
        require_shi_catalan(&rs, &a, &b)?;
        Ok((rs, a, b))
    }
}

#[derive(Args)]
struct Source {
    #[arg(long = "type")]
    type_label: Option<String>,
    #[arg(long)]
    rank: Option<usize>,
    #[arg(long)]
    a: Option<String>,
    #[arg(long)]
    b: Option<String>,
    /// Arrangement JSON file instead of a deformation.
    #[arg(long, conflicts_with_all = ["type_label", "a", "b"])]
    input: Option<PathBuf>,
}

impl Source {
    fn arrangement(&self) -> Result<Arrangement, Error> {
        if let Some(path) = &self.input {
            let text = std::fs::read_to_string(path)
                .map_err(|e| Error::InvalidInput(format!("{}: {e}", path.display())))?;
            let j: ArrangementJson =
                serde_json::from_str(&text).map_err(|e| Error::InvalidInput(format!("{}: {e}", path.display())))?;
            return Arrangement::try_from(&j);
        }
        let missing = || Error::InvalidInput("give --type, --a and --b, or --input".into());
        let inst = Instance {
            ty: TypeArgs {
                type_label: self.type_label.clone().ok_or_else(missing)?,
                rank: self.rank,
            },
            a: self.a.clone().ok_or_else(missing)?,
            b: self.b.clone().ok_or_else(missing)?,
        };
        let (rs, a, b) = inst.resolve()?;
        deform(&rs, &a, &b)
    }
}

#[derive(Args)]
struct CertifyArgs {
    #[arg(long = "type")]
    type_label: Option<String>,
    #[arg(long)]
    rank: Option<usize>,
    #[arg(long)]
    a: Option<String>,
    #[arg(long)]
    b: Option<String>,
    /// `G-i`, `G-ii`, `G-iii`, `G-iv` or `B`, with `--s` and `--t`.
    #[arg(long, conflicts_with_all = ["type_label", "a", "b"])]
    case: Option<String>,
    #[arg(long, default_value_t = 0)]
    s: i64,
    #[arg(long, default_value_t = 0)]
    t: i64,
}

#[derive(Args)]
struct VerifyArgs {
    #[command(flatten)]
    ty: TypeArgs,
    #[arg(long, required_unless_present = "grid")]
    a: Option<String>,
    #[arg(long, required_unless_present = "grid")]
    b: Option<String>,
    /// Sweep every Shi-Catalan pair with entries at most N.
    #[arg(long, conflicts_with_all = ["a", "b"])]
    grid: Option<u32>,
    /// Include wall-clock time in the report.
    #[arg(long)]
    timing: bool,
}

#[derive(Args)]
struct TableArgs {
    /// `G-i`, `G-ii` or `B`.
    #[arg(long)]
    case: String,
    #[arg(long, default_value_t = 0)]
    s: i64,
    #[arg(long, default_value_t = 0)]
    t: i64,
    /// For G-ii, also count the addition orders that work.
    #[arg(long)]
    orders: bool,
}

#[derive(Serialize)]
struct RunReport {
    command: String,
    passed: bool,
    instances: Vec<PipelineReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    timing_ms: Option<u128>,
}

#[derive(Serialize)]
struct ChambersOut {
    hyperplanes: usize,
    mobius: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    oracle: Option<u64>,
}

#[derive(Serialize)]
struct CharpolyOut {
    hyperplanes: usize,
    central: bool,
    characteristic: arrlab::poly::IntPolynomial,
    poincare: arrlab::poly::IntPolynomial,
}

#[derive(Serialize)]
struct PredictOut {
    #[serde(rename = "type")]
    type_label: String,
    a: EquivMult,
    b: EquivMult,
    hyperplanes: usize,
    exponents: Vec<i64>,
    ziegler_exponents: Vec<i64>,
    chambers_product: i64,
    chambers_printed: i64,
}

#[derive(Serialize)]
struct ZieglerOut {
    lines: Vec<ZieglerLine>,
    total: u32,
    #[serde(skip_serializing_if = "Option::is_none")]
    exponents: Option<[usize; 2]>,
}

#[derive(Serialize)]
struct ZieglerLine {
    normal: Vec<i64>,
    multiplicity: u32,
}

#[derive(Serialize)]
struct TableOut {
    table: Table,
    #[serde(skip_serializing_if = "Option::is_none")]
    orders: Option<freecert::OrderAnalysis>,
}

#[derive(Serialize)]
struct SvgOut {
    path: String,
    bytes: usize,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let echo = std::env::args().skip(1).collect::<Vec<_>>().join(" ");
    match run(&cli, echo) {
        Ok(code) => code,
        Err(f) => f.report(cli.json),
    }
}

fn run(cli: &Cli, echo: String) -> Result<ExitCode, Failure> {
    let json = cli.json;
    match &cli.command {
        Command::Roots(ty) => {
            let rs = ty.root_system()?;
            emit(json, &RootSystemJson::from(&rs), output::roots)?;
        }
        Command::Build { inst, cone: c } => {
            let (rs, a, b) = inst.resolve()?;
            let arr = deform(&rs, &a, &b)?;
            let arr = if *c { cone(&arr) } else { arr };
            emit(json, &ArrangementJson::from(&arr), output::arrangement)?;
        }
        Command::Chambers(src) => {
            let arr = src.arrangement()?;
            let mobius = intersection_poset(&arr)?.chambers();
            let oracle = if arr.rank() <= 2 && arr.dim() >= 2 {
                Some(chambers_2d_oracle(&arr)?)
            } else {
                None
            };
            emit(
                json,
                &ChambersOut {
                    hyperplanes: arr.len(),
                    mobius,
                    oracle,
                },
                output::chambers,
            )?;
        }
        Command::Charpoly { src, cone: c } => {
            let arr = src.arrangement()?;
            let arr = if *c { cone(&arr) } else { arr };
            let poset = intersection_poset(&arr)?;
            emit(
                json,
                &CharpolyOut {
                    hyperplanes: arr.len(),
                    central: arr.is_central(),
                    characteristic: poset.characteristic(),
                    poincare: poset.poincare(),
                },
                output::charpoly,
            )?;
        }
        Command::Predict(inst) => {
            let (rs, a, b) = inst.resolve()?;
            let exponents = freecert::predict_cone_exponents(&rs, &a, &b)?;
            emit(
                json,
                &PredictOut {
                    type_label: rs.label().to_string(),
                    hyperplanes: arrlab::deform::deformation_size(&rs, &a, &b),
                    ziegler_exponents: freecert::predict_ziegler_exponents(&rs, &a, &b)?,
                    chambers_product: freecert::product_chamber_count(&exponents),
                    chambers_printed: freecert::printed_chamber_formula(&rs, &a, &b)?,
                    exponents,
                    a,
                    b,
                },
                output::predict,
            )?;
        }
        Command::MultiExp { lines, mults } => {
            let ma = output::parse_multi2d(lines, mults)?;
            let e = exponents2d(&ma)?;
            emit(json, &Exponents2DJson::from(&e), output::multi_exp)?;
        }
        Command::Ziegler(inst) => {
            let (rs, a, b) = inst.resolve()?;
            let c = cone(&deform(&rs, &a, &b)?);
            let z = ziegler_restriction(&c, &infinity_hyperplane(rs.ambient_dim()))?;
            let exponents = if z.arrangement.rank() == 2 {
                let (ls, ms) = planar_forms(&z)?.into_iter().unzip();
                Some(exponents2d(&Multi2D::new(ls, ms)?)?.pair().into())
            } else {
                None
            };
            let out = ZieglerOut {
                lines: z
                    .arrangement
                    .iter()
                    .zip(&z.mults)
                    .map(|(h, &m)| ZieglerLine {
                        normal: h.normal().to_vec(),
                        multiplicity: m,
                    })
                    .collect(),
                total: z.total(),
                exponents,
            };
            emit(json, &out, output::ziegler)?;
        }
        Command::Certify(args) => {
            let cert = match &args.case {
                Some(case) if case.eq_ignore_ascii_case("b") => freecert::certify_b2(args.s, args.t)?,
                Some(case) => freecert::certify_g2(case.parse::<G2Case>()?, args.s, args.t)?,
                None => {
                    let missing = || Error::InvalidInput("give --type, --a and --b, or --case".into());
                    let inst = Instance {
                        ty: TypeArgs {
                            type_label: args.type_label.clone().ok_or_else(missing)?,
                            rank: args.rank,
                        },
                        a: args.a.clone().ok_or_else(missing)?,
                        b: args.b.clone().ok_or_else(missing)?,
                    };
                    let (rs, a, b) = inst.resolve()?;
                    freecert::certify(&rs, &a, &b)?
                }
            };
            emit(json, &cert.to_json(), output::certificate)?;
        }
        Command::Verify(args) => {
            let start = Instant::now();
            let rs = args.ty.root_system()?;
            let pairs = match args.grid {
                Some(n) => shi_catalan_pairs(rs.orbit_count(), n),
                None => {
                    let a: EquivMult = args.a.as_deref().unwrap_or_default().parse()?;
                    let b: EquivMult = args.b.as_deref().unwrap_or_default().parse()?;
                    vec![(a, b)]
                }
            };
            let instances = pairs
                .par_iter()
                .map(|(a, b)| freecert::verify_pipeline(&rs, a, b))
                .collect::<Result<Vec<_>, _>>()?;
            let report = RunReport {
                command: echo,
                passed: instances.iter().all(PipelineReport::passed),
                instances,
                timing_ms: args.timing.then(|| start.elapsed().as_millis()),
            };
            emit(json, &report, output::run_report)?;
            if !report.passed {
                return Ok(ExitCode::from(1));
            }
        }
        Command::Table(args) => {
            let table = if args.case.eq_ignore_ascii_case("b") {
                freecert::b2_table(args.s, args.t)?
            } else {
                let case: G2Case = args.case.parse()?;
                freecert::g2_table(case, args.s, args.t)?
            };
            let orders = if args.orders && args.case.parse::<G2Case>().ok() == Some(G2Case::II) {
                Some(freecert::g2_ii_order_analysis(args.s, args.t)?)
            } else {
                None
            };
            let ok = table.all_match();
            emit(json, &TableOut { table, orders }, output::table)?;
            if !ok {
                return Ok(ExitCode::from(output::EXIT_MISMATCH));
            }
        }
        Command::LemmaCheck(inst) => {
            let (rs, a, b) = inst.resolve()?;
            let rep = freecert::lemma_check(&rs, &a, &b)?;
            emit(json, &rep, output::lemma)?;
            if !rep.passed() {
                return Ok(ExitCode::from(1));
            }
        }
        Command::Svg { inst, out } => {
            let (rs, a, b) = inst.resolve()?;
            let svg = arrlab::render::render_svg(&rs, &a, &b)?;
            std::fs::write(out, &svg).map_err(|e| Failure::Io(format!("{}: {e}", out.display())))?;
            emit(
                json,
                &SvgOut {
                    path: out.display().to_string(),
                    bytes: svg.len(),
                },
                output::svg,
            )?;
        }
    }
    Ok(ExitCode::SUCCESS)
}
