//! Knot table ingestion and batch runs over the table.

use std::collections::{BTreeMap, BTreeSet, HashSet};
use std::fmt::Write as _;
use std::path::Path;
use std::time::Instant;

use serde::Serialize;
use thiserror::Error;

use crate::braid::BraidWord;
use crate::engine::{matveev_test, tangle_invariant, EngineError, Isotopy, StateModel, DEFAULT_MAX_TERMS};
use crate::oracles::{alexander, compare_case2, compare_case3, Comparison, OnePoly, Status};
use crate::ring::{LaurentPoly, Monomial, Regime, Replacement, Var};

/// Table shipped with the crate.
pub const BUNDLED_TABLE: &str = include_str!("../../data/knots.txt");

/// Environment variable naming a replacement table file.
pub const TABLE_ENV: &str = "GAUGEKNOT_TABLE";

#[derive(Debug, Error)]
pub enum HarnessError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("line {line}: closure of `{name}` has {components} components")]
    NotAKnot { line: usize, name: String, components: usize },
    #[error("line {line}: duplicate knot name `{name}`")]
    Duplicate { line: usize, name: String },
    #[error("unknown knot `{0}`")]
    UnknownKnot(String),
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KnotRecord {
    pub name: String,
    pub word: BraidWord,
}

impl KnotRecord {
    pub fn strands(&self) -> usize {
        self.word.strands()
    }

    /// Crossing number read from a name like `8_19`, otherwise the word length.
    pub fn crossings(&self) -> u32 {
        match self.name.split_once('_') {
            Some((c, _)) => c.parse().unwrap_or(self.word.len() as u32),
            None => self.word.len() as u32,
        }
    }

    fn sort_key(&self) -> (u32, u32, String) {
        let mut parts = self.name.splitn(2, '_');
        let c = parts.next().and_then(|c| c.parse().ok()).unwrap_or(u32::MAX);
        let rest = parts.next().unwrap_or("");
        let digits: String = rest.chars().take_while(char::is_ascii_digit).collect();
        (c, digits.parse().unwrap_or(u32::MAX), rest.to_string())
    }
}

/// Parses `name ; strands ; letters` lines; `#` starts a comment.
pub fn parse_table(text: &str) -> Result<Vec<KnotRecord>, HarnessError> {
    let mut out = Vec::new();
    let mut names = HashSet::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let body = raw.split('#').next().unwrap_or("").trim();
        if body.is_empty() {
            continue;
        }
        let fields: Vec<&str> = body.split(';').map(str::trim).collect();
        let [name, strands, letters] = fields[..] else {
            return Err(HarnessError::Parse { line, message: "expected `name ; strands ; letters`".into() });
        };
        if name.is_empty() {
            return Err(HarnessError::Parse { line, message: "empty knot name".into() });
        }
        let word = BraidWord::parse(&format!("{strands} : {letters}"))
            .map_err(|e| HarnessError::Parse { line, message: e.to_string() })?;
        if !word.is_knot() {
            return Err(HarnessError::NotAKnot { line, name: name.into(), components: word.components() });
        }
        if !names.insert(name.to_string()) {
            return Err(HarnessError::Duplicate { line, name: name.into() });
        }
        out.push(KnotRecord { name: name.into(), word });
    }
    Ok(out)
}

pub fn load_table(path: impl AsRef<Path>) -> Result<Vec<KnotRecord>, HarnessError> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path)
        .map_err(|source| HarnessError::Io { path: path.display().to_string(), source })?;
    parse_table(&text)
}

/// The table named by `GAUGEKNOT_TABLE`, or the bundled one.
pub fn default_table() -> Result<Vec<KnotRecord>, HarnessError> {
    match std::env::var_os(TABLE_ENV) {
        Some(p) => load_table(p),
        None => parse_table(BUNDLED_TABLE),
    }
}

pub fn find_knot<'a>(table: &'a [KnotRecord], name: &str) -> Result<&'a KnotRecord, HarnessError> {
    table.iter().find(|k| k.name == name).ok_or_else(|| HarnessError::UnknownKnot(name.into()))
}

/// One line of the suite report.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReportRow {
    pub knot: String,
    pub case: u8,
    pub isotopy: String,
    pub writhe: i32,
    pub entries: [String; 4],
    pub status: String,
    pub unit: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Totals {
    pub rows: usize,
    pub matched: usize,
    pub unit_mismatch: usize,
    pub failed: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CaseSummary {
    pub case: u8,
    /// Distinct units over the non-failing rows; more than one is a failure.
    pub units: Vec<String>,
    pub conventions: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub matveev_distinguishes: Option<bool>,
}

#[derive(Clone, Debug)]
pub struct Timing {
    pub knot: String,
    pub case: u8,
    pub seconds: f64,
}

#[derive(Clone, Debug, Serialize)]
pub struct RunReport {
    pub rows: Vec<ReportRow>,
    pub cases: Vec<CaseSummary>,
    pub totals: Totals,
    #[serde(skip)]
    pub timings: Vec<Timing>,
}

impl RunReport {
    /// No failed row, a single unit per case and the expected Matveev verdicts.
    pub fn pass(&self) -> bool {
        self.totals.failed == 0
            && self.cases.iter().all(|c| {
                c.units.len() <= 1
                    && c.conventions.len() <= 1
                    && c.matveev_distinguishes.is_none_or(|d| d == (c.case != 4))
            })
    }

    pub fn to_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record([
            "knot", "case", "isotopy", "writhe", "entry11", "entry22", "entry33", "entry44", "status", "unit",
        ])
        .expect("in-memory write");
        for r in &self.rows {
            let mut rec = vec![r.knot.clone(), r.case.to_string(), r.isotopy.clone(), r.writhe.to_string()];
            rec.extend(r.entries.iter().cloned());
            rec.push(r.status.clone());
            rec.push(r.unit.clone());
            w.write_record(&rec).expect("in-memory write");
        }
        String::from_utf8(w.into_inner().expect("flush")).expect("utf-8")
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serialisable") + "\n"
    }

    pub fn timings_csv(&self) -> String {
        let mut s = String::from("knot,case,seconds\n");
        for t in &self.timings {
            let _ = writeln!(s, "{},{},{:.3}", t.knot, t.case, t.seconds);
        }
        s
    }

    /// Writes `report.csv`, `report.json` and `timings.csv` into `dir`.
    pub fn write(&self, dir: impl AsRef<Path>) -> Result<(), HarnessError> {
        let dir = dir.as_ref();
        let io = |source| HarnessError::Io { path: dir.display().to_string(), source };
        std::fs::create_dir_all(dir).map_err(io)?;
        std::fs::write(dir.join("report.csv"), self.to_csv()).map_err(io)?;
        std::fs::write(dir.join("report.json"), self.to_json()).map_err(io)?;
        std::fs::write(dir.join("timings.csv"), self.timings_csv()).map_err(io)?;
        Ok(())
    }
}

fn entry_strings(d: &[LaurentPoly; 4]) -> [String; 4] {
    std::array::from_fn(|i| d[i].to_string())
}

fn row(k: &KnotRecord, case: u8, isotopy: Isotopy) -> ReportRow {
    ReportRow {
        knot: k.name.clone(),
        case,
        isotopy: isotopy.to_string(),
        writhe: k.word.writhe(),
        entries: Default::default(),
        status: Status::Fail.to_string(),
        unit: "-".into(),
        error: None,
    }
}

fn comparison_row(k: &KnotRecord, c: &Comparison) -> Tagged {
    let mut r = row(k, c.case, Isotopy::Regular);
    r.entries = entry_strings(&c.engine);
    r.status = c.status.to_string();
    r.unit = c.unit_string();
    (r, Some(c.convention.to_string()))
}

fn failed_row(k: &KnotRecord, case: u8, isotopy: Isotopy, e: impl ToString) -> ReportRow {
    let mut r = row(k, case, isotopy);
    r.error = Some(e.to_string());
    r
}

/// Ambient invariant of a knot as a report row.
///
/// The scalar must be `Y`-free; case 2 must also be real and agree with
/// `Δ(Q²)`, case 4 must be `1` and case 1 must reduce to `Δ(p²)²` at `Q = 1`.
fn ambient_row(k: &KnotRecord, case: u8) -> ReportRow {
    let run = || -> Result<(ReportRow, bool), Box<dyn std::error::Error>> {
        let model = StateModel::new(case, Isotopy::Ambient)?;
        let t = tangle_invariant(&k.word, &model, DEFAULT_MAX_TERMS)?;
        let mut r = row(k, case, Isotopy::Ambient);
        r.entries = entry_strings(&t.diagonal());
        let Some(s) = t.scalar() else { return Ok((r, false)) };
        let mut ok = t.y_free();
        match case {
            1 => {
                let d = alexander(&k.word)?;
                let at_q1 = s.substitute(Var::Q, &Replacement::one())?;
                ok &= at_q1 == alexander_at(&d, Monomial::pow(Var::P, 1)).pow(2);
            }
            2 => {
                let d = alexander(&k.word)?;
                ok &= t.is_real() && s == alexander_at(&d, Monomial::pow(Var::Q, 1));
            }
            _ => ok &= s.is_one(),
        }
        if ok {
            r.unit = "1".into();
        }
        Ok((r, ok))
    };
    match run() {
        Ok((mut r, ok)) => {
            if ok {
                r.status = Status::Match.to_string();
            }
            r
        }
        Err(e) => failed_row(k, case, Isotopy::Ambient, e),
    }
}

fn alexander_at(d: &OnePoly, half: Monomial) -> LaurentPoly {
    d.substitute(Regime::Quantum, half)
}

/// A row with the convention that produced it.
type Tagged = (ReportRow, Option<String>);

fn knot_rows(k: &KnotRecord, case: u8) -> Vec<Tagged> {
    match case {
        2 => {
            let reg = match compare_case2(&k.word) {
                Ok(c) => comparison_row(k, &c),
                Err(e) => (failed_row(k, 2, Isotopy::Regular, e), None),
            };
            vec![(ambient_row(k, 2), None), reg]
        }
        3 => vec![match compare_case3(&k.word) {
            Ok(c) => comparison_row(k, &c),
            Err(e) => (failed_row(k, 3, Isotopy::Regular, e), None),
        }],
        _ => vec![(ambient_row(k, case), None)],
    }
}

fn matveev_for(case: u8) -> Option<bool> {
    let iso = if case == 3 { Isotopy::Regular } else { Isotopy::Ambient };
    let model = StateModel::new(case, iso).ok()?;
    let report = matveev_test(&model).ok()?;
    Some(report.distinguishes || report.symbolic_distinguishes.unwrap_or(false))
}

/// Runs the per-case checks over the knots with at most `max_crossings`
/// crossings, using `jobs` worker threads.
pub fn run_suite(
    cases: &[u8],
    table: &[KnotRecord],
    max_crossings: u32,
    jobs: usize,
) -> Result<RunReport, EngineError> {
    use rayon::prelude::*;
    let cases: BTreeSet<u8> = cases.iter().copied().collect();
    for &c in &cases {
        if !(1..=4).contains(&c) {
            return Err(EngineError::Rmat(crate::rmat::RmatError::BadCase(c)));
        }
    }
    let knots: Vec<&KnotRecord> = table.iter().filter(|k| k.crossings() <= max_crossings).collect();
    let work: Vec<(&KnotRecord, u8)> = knots.iter().flat_map(|k| cases.iter().map(move |&c| (*k, c))).collect();
    let pool = rayon::ThreadPoolBuilder::new().num_threads(jobs.max(1)).build().expect("thread pool");
    let results: Vec<(Vec<Tagged>, Timing)> = pool.install(|| {
        work.par_iter()
            .map(|(k, c)| {
                let start = Instant::now();
                let rows = knot_rows(k, *c);
                (rows, Timing { knot: k.name.clone(), case: *c, seconds: start.elapsed().as_secs_f64() })
            })
            .collect()
    });
    let matveev: BTreeMap<u8, Option<bool>> =
        pool.install(|| cases.par_iter().map(|&c| (c, matveev_for(c))).collect::<Vec<_>>()).into_iter().collect();

    let order: BTreeMap<&str, (u32, u32, String)> = knots.iter().map(|k| (k.name.as_str(), k.sort_key())).collect();
    let mut rows = Vec::new();
    let mut timings = Vec::new();
    let mut conventions: BTreeMap<u8, BTreeSet<String>> = BTreeMap::new();
    for (rs, t) in results {
        for (r, conv) in rs {
            if let Some(conv) = conv {
                if r.status != Status::Fail.to_string() {
                    conventions.entry(r.case).or_default().insert(conv);
                }
            }
            rows.push(r);
        }
        timings.push(t);
    }
    rows.sort_by(|a, b| {
        (&order[a.knot.as_str()], a.case, &a.isotopy).cmp(&(&order[b.knot.as_str()], b.case, &b.isotopy))
    });
    timings.sort_by(|a, b| (&order[a.knot.as_str()], a.case).cmp(&(&order[b.knot.as_str()], b.case)));

    let cases = cases
        .iter()
        .map(|&c| {
            let units: BTreeSet<String> = rows
                .iter()
                .filter(|r| r.case == c && r.isotopy == "regular" && r.status != Status::Fail.to_string())
                .map(|r| r.unit.clone())
                .collect();
            CaseSummary {
                case: c,
                units: units.into_iter().collect(),
                conventions: conventions.remove(&c).unwrap_or_default().into_iter().collect(),
                matveev_distinguishes: matveev[&c],
            }
        })
        .collect();
    let count = |s: Status| rows.iter().filter(|r| r.status == s.to_string()).count();
    let totals = Totals {
        rows: rows.len(),
        matched: count(Status::Match),
        unit_mismatch: count(Status::UnitMismatch),
        failed: count(Status::Fail),
    };
    Ok(RunReport { rows, cases, totals, timings })
}
