use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use num_rational::Ratio;
use serde_json::json;

use gaugeknot::braid::BraidWord;
use gaugeknot::engine::{matveev_test, tangle_invariant, verify_handle, Isotopy, StateModel, DEFAULT_MAX_TERMS};
use gaugeknot::harness::{default_table, find_knot, run_suite};
use gaugeknot::oracles::{alexander, jones};
use gaugeknot::rmat::{
    build_trig_gauge_free, build_trig_gauged, eigen_check, eigenvector_deficiency, quantum_r, spectral_limit,
    tabulated_eigenvalues, GaugeCase, GaugeMatrix,
};
use gaugeknot::ybe::{verify_gauge_properties, verify_qybe, verify_tybe_additive};

#[derive(Parser)]
#[command(name = "gaugeknot", version, about = "Exact U_q[gl(2|1)] R-matrices and (1,1)-tangle invariants")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum OracleKind {
    Alexander,
    Jones,
}

#[derive(Clone, Copy, ValueEnum)]
enum IsotopyArg {
    Ambient,
    Regular,
}

#[derive(clap::Args)]
struct KnotArg {
    /// Braid word `n : k1 k2 ...`.
    #[arg(long, conflicts_with = "knot", required_unless_present = "knot")]
    braid: Option<String>,
    /// Knot name from the table.
    #[arg(long)]
    knot: Option<String>,
}

#[derive(Subcommand)]
enum Command {
    /// Run the symbolic Yang–Baxter, gauge and handle checks.
    Verify,
    /// Print R-matrices.
    Rmatrix {
        #[command(subcommand)]
        what: RmatrixCmd,
    },
    /// Check the tabulated eigenvalues of a quantum R-matrix.
    Eigen {
        #[arg(long)]
        case: u8,
        #[arg(long, default_value_t = 5)]
        points: usize,
    },
    /// Tangle invariant of a knot.
    Invariant {
        #[arg(long)]
        case: u8,
        #[arg(long, value_enum)]
        isotopy: IsotopyArg,
        #[command(flatten)]
        knot: KnotArg,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Classical polynomial of a knot.
    Oracle {
        #[arg(value_enum)]
        kind: OracleKind,
        #[command(flatten)]
        knot: KnotArg,
    },
    /// Matveev braid-pair test.
    Matveev {
        #[arg(long)]
        case: u8,
    },
    /// Batch comparison over the knot table.
    Suite {
        #[arg(long, value_delimiter = ',', default_value = "2,3,4")]
        cases: Vec<u8>,
        #[arg(long, default_value_t = 8)]
        max_crossings: u32,
        #[arg(long)]
        out: PathBuf,
        #[arg(long, default_value_t = 4)]
        jobs: usize,
    },
}

#[derive(Subcommand)]
enum RmatrixCmd {
    /// Show a quantum or trigonometric R-matrix.
    Show {
        /// Quantum case 1..4; omitted for the trigonometric operator.
        #[arg(long)]
        case: Option<u8>,
        /// Take the spectral limit of the gauged operator instead of the table.
        #[arg(long)]
        limit: bool,
        /// Gauge parameter for case 4 limits, as `a/b`.
        #[arg(long)]
        gamma: Option<String>,
        /// Trigonometric operator with the gauge applied.
        #[arg(long)]
        gauged: bool,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
}

enum Failure {
    Check(String),
    Usage(String),
}

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure::Usage(e.to_string())
    }
}

type Outcome = Result<(), Failure>;

fn word(k: &KnotArg) -> Result<(String, BraidWord), Failure> {
    match (&k.braid, &k.knot) {
        (Some(b), _) => Ok((b.clone(), BraidWord::parse(b)?)),
        (None, Some(name)) => {
            let table = default_table()?;
            Ok((name.clone(), find_knot(&table, name)?.word.clone()))
        }
        (None, None) => Err(Failure::Usage("one of --braid or --knot is required".into())),
    }
}

fn check(label: &str, ok: bool, failed: &mut Vec<String>) {
    println!("{} {label}", if ok { "PASS" } else { "FAIL" });
    if !ok {
        failed.push(label.to_string());
    }
}

fn verify() -> Outcome {
    let mut failed = Vec::new();
    let gauge_free = build_trig_gauge_free();
    let gauged = build_trig_gauged();
    check("trigonometric operators have 36 entries", gauge_free.nnz() == 36 && gauged.nnz() == 36, &mut failed);
    for case in 1..=4 {
        let r = quantum_r(case)?;
        check(&format!("QYBE R{case}"), verify_qybe(&r).pass(), &mut failed);
        let lim = spectral_limit(&gauged, GaugeCase::from_index(case)?)?;
        check(&format!("spectral limit {case}"), lim == r, &mut failed);
    }
    for (name, r) in [("gauge-free", &gauge_free), ("gauged", &gauged)] {
        let o = verify_tybe_additive(r);
        if let Some(w) = &o.witness {
            println!("  {w}");
        }
        check(&format!("TYBE {name}"), o.pass(), &mut failed);
    }
    check("gauge properties", verify_gauge_properties(&GaugeMatrix::standard(), &gauge_free).pass(), &mut failed);
    for (case, iso) in [
        (1, Isotopy::Ambient),
        (2, Isotopy::Ambient),
        (4, Isotopy::Ambient),
        (2, Isotopy::Regular),
        (3, Isotopy::Regular),
    ] {
        let m = StateModel::new(case, iso)?;
        check(&format!("QYBE sigma {case} {iso}"), verify_qybe(&m.sigma).pass(), &mut failed);
        check(&format!("handle {case} {iso}"), verify_handle(&m)?.pass, &mut failed);
    }
    if failed.is_empty() {
        Ok(())
    } else {
        Err(Failure::Check(format!("{} checks failed", failed.len())))
    }
}

fn rmatrix_show(case: Option<u8>, limit: bool, gamma: Option<String>, gauged: bool, format: Format) -> Outcome {
    let (text, json) = match case {
        None => {
            let r = if gauged { build_trig_gauged() } else { build_trig_gauge_free() };
            (r.to_text(), r.to_json())
        }
        Some(c) => {
            let r = if limit || gamma.is_some() {
                let g = match (&gamma, c) {
                    (Some(s), 4) => {
                        let (a, b) = s.split_once('/').ok_or_else(|| Failure::Usage(format!("bad gamma `{s}`")))?;
                        GaugeCase::four(Ratio::new(a.trim().parse()?, b.trim().parse()?))?
                    }
                    (Some(_), _) => return Err(Failure::Usage("--gamma applies to case 4 only".into())),
                    (None, _) => GaugeCase::from_index(c)?,
                };
                spectral_limit(&build_trig_gauged(), g)?
            } else {
                quantum_r(c)?
            };
            (r.to_text(), r.to_json())
        }
    };
    match format {
        Format::Text => print!("{text}"),
        Format::Json => println!("{json}"),
    }
    Ok(())
}

fn eigen(case: u8, points: usize) -> Outcome {
    let claimed = tabulated_eigenvalues(case)?;
    let r = quantum_r(case)?;
    let report = eigen_check(&r, &claimed, points).map_err(|e| Failure::Check(e.to_string()))?;
    println!("case {case}: {} distinct eigenvalues at {} points", report.distinct, report.points);
    for (v, m) in claimed.iter().zip(&report.multiplicities) {
        println!("  {v}  x{m}");
    }
    println!("eigenspace dimension: {}", eigenvector_deficiency(&r)?);
    Ok(())
}

fn invariant(case: u8, isotopy: IsotopyArg, knot: &KnotArg, format: Format) -> Outcome {
    let (name, b) = word(knot)?;
    let iso = match isotopy {
        IsotopyArg::Ambient => Isotopy::Ambient,
        IsotopyArg::Regular => Isotopy::Regular,
    };
    let model = StateModel::new(case, iso)?;
    let t = tangle_invariant(&b, &model, DEFAULT_MAX_TERMS)?;
    let rows: Vec<Vec<String>> = t.matrix.iter().map(|r| r.iter().map(|e| e.to_string()).collect()).collect();
    match format {
        Format::Text => {
            println!("{name}  case {case} {iso}  writhe {}", b.writhe());
            match t.scalar() {
                Some(s) if iso == Isotopy::Ambient => println!("{s}"),
                _ if t.is_diagonal() => {
                    for (i, e) in t.diagonal().iter().enumerate() {
                        println!("[{}{}] {e}", i + 1, i + 1);
                    }
                }
                _ => {
                    for r in &rows {
                        println!("{}", r.join(" | "));
                    }
                }
            }
        }
        Format::Json => {
            let v =
                json!({"knot": name, "case": case, "isotopy": iso.to_string(), "writhe": b.writhe(), "matrix": rows});
            println!("{}", serde_json::to_string_pretty(&v)?);
        }
    }
    Ok(())
}

fn run(cli: Cli) -> Outcome {
    match cli.command {
        Command::Verify => verify(),
        Command::Rmatrix { what: RmatrixCmd::Show { case, limit, gamma, gauged, format } } => {
            rmatrix_show(case, limit, gamma, gauged, format)
        }
        Command::Eigen { case, points } => eigen(case, points),
        Command::Invariant { case, isotopy, knot, format } => invariant(case, isotopy, &knot, format),
        Command::Oracle { kind, knot } => {
            let (_, b) = word(&knot)?;
            let p = match kind {
                OracleKind::Alexander => alexander(&b)?,
                OracleKind::Jones => jones(&b)?,
            };
            println!("{p}");
            Ok(())
        }
        Command::Matveev { case } => {
            let iso = if case == 3 { Isotopy::Regular } else { Isotopy::Ambient };
            let r = matveev_test(&StateModel::new(case, iso)?)?;
            println!("distinguishes: {}", r.distinguishes);
            if let Some(s) = r.symbolic_distinguishes {
                println!("distinguishes with symbolic p, Q: {s}");
            }
            Ok(())
        }
        Command::Suite { cases, max_crossings, out, jobs } => {
            let table = default_table()?;
            let report = run_suite(&cases, &table, max_crossings, jobs)?;
            report.write(&out)?;
            let t = &report.totals;
            println!("{} rows: {} match, {} unit-mismatch, {} fail", t.rows, t.matched, t.unit_mismatch, t.failed);
            for c in &report.cases {
                println!(
                    "case {}: units [{}] conventions [{}] matveev {:?}",
                    c.case,
                    c.units.join(", "),
                    c.conventions.join(", "),
                    c.matveev_distinguishes
                );
            }
            if report.pass() {
                Ok(())
            } else {
                Err(Failure::Check("suite failed".into()))
            }
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Check(m)) => {
            eprintln!("{m}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(2)
        }
    }
}
