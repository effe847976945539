//! Batch evaluation: solve every graph from a source, check every claim,
//! and keep a per-graph journal so an interrupted run can resume.
//!
//! Output directory layout:
//!
//! - `journal.jsonl`: one [`SweepRecord`] per finished graph, appended as
//!   graphs complete (any order).
//! - `summary.json`: the [`SweepSummary`], written at the end.
//! - `summary.csv`: `graph6,n,m,chi_prime,rc,prc,violated`, one row per
//!   graph in input order.
//!
//! The summary is built from the journal sorted by input index, so it does
//! not depend on worker scheduling or on whether the run was resumed.

use crate::bounds::{evaluate_bounds, BoundReport, Solved};
use crate::colouring::Certificate;
use crate::error::{Error, Result};
use crate::graph::{connected_catalogue_codes, parse_graph6, write_graph6, FamilySpec, Graph};
use crate::random::{rng_from_seed, RandomModel};
use crate::solver::{brute_force_oracle, solve, Determinism, Parameter, SearchConfig};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, BTreeSet};
use std::fs::{File, OpenOptions};
use std::io::{BufRead, BufReader, Write};
use std::path::{Path, PathBuf};
use std::sync::Mutex;
use std::time::Instant;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum SweepSource {
    /// One graph6 string per line; blank lines and `#` comments ignored.
    Graph6File { path: PathBuf },
    /// The bundled catalogue of connected graphs of the given orders.
    Catalogue { min_order: usize, max_order: usize },
    /// Family specs, each possibly with ranges (`cycle:4..12`).
    FamilyGrid { specs: Vec<String> },
    Random {
        model: RandomModel,
        count: usize,
        min_order: usize,
        max_order: usize,
    },
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepJob {
    pub source: SweepSource,
    pub parameters: Vec<Parameter>,
    /// Claim ids to judge; empty means all.
    pub claims: Vec<String>,
    pub search: SearchConfig,
    /// Cross-check each solved value with the brute-force oracle when it fits its cap.
    pub oracle: bool,
    pub seed: u64,
    pub jobs: usize,
    pub out_dir: PathBuf,
    pub resume: bool,
}

impl SweepJob {
    pub fn new(source: SweepSource, out_dir: impl Into<PathBuf>) -> Self {
        SweepJob {
            source,
            parameters: vec![Parameter::ChiPrime, Parameter::Rc, Parameter::Prc],
            claims: Vec::new(),
            search: SearchConfig::default(),
            oracle: false,
            seed: crate::random::DEFAULT_SEED,
            jobs: 1,
            out_dir: out_dir.into(),
            resume: false,
        }
    }

    pub fn validate(&self) -> Result<()> {
        self.search.validate()?;
        if self.jobs == 0 {
            return Err(Error::Config("jobs must be positive".into()));
        }
        if self.parameters.is_empty() {
            return Err(Error::Config("no parameters to solve".into()));
        }
        Ok(())
    }
}

/// One input item before solving.
#[derive(Debug, Clone)]
struct Item {
    index: usize,
    label: Option<String>,
    parsed: std::result::Result<(Graph, Option<FamilySpec>), String>,
    raw: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Solution {
    pub value: usize,
    pub exact: bool,
    pub lower: usize,
    pub certificate: Certificate,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepRecord {
    pub index: usize,
    pub graph6: String,
    pub label: Option<String>,
    pub n: usize,
    pub m: usize,
    pub solutions: BTreeMap<Parameter, Solution>,
    pub claims: Option<BoundReport>,
    pub violations: Vec<String>,
    /// Parameters where the oracle disagreed with the solver.
    pub oracle_mismatches: Vec<Parameter>,
    /// Parameters the oracle confirmed.
    pub oracle_checked: Vec<Parameter>,
    pub error: Option<String>,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClaimCounts {
    pub pass: usize,
    pub fail: usize,
    pub na: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Violation {
    pub graph6: String,
    pub claims: Vec<String>,
    pub oracle_mismatches: Vec<Parameter>,
    pub solutions: BTreeMap<Parameter, Solution>,
    /// Shell command that replays the solve.
    pub reproduce: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepSummary {
    pub processed: usize,
    pub malformed: usize,
    pub errors: usize,
    pub inexact: usize,
    pub oracle_checks: usize,
    pub claims: BTreeMap<String, ClaimCounts>,
    pub violations: Vec<Violation>,
    pub seed: u64,
    pub wall_secs: f64,
}

impl SweepSummary {
    /// Everything except wall time, for comparing runs.
    pub fn same_outcome(&self, other: &SweepSummary) -> bool {
        let strip = |s: &SweepSummary| SweepSummary {
            wall_secs: 0.0,
            ..s.clone()
        };
        strip(self) == strip(other)
    }
}

fn load_items(job: &SweepJob) -> Result<Vec<Item>> {
    let from_code = |index: usize, code: &str, label: Option<String>| Item {
        index,
        label,
        parsed: parse_graph6(code.as_bytes())
            .map(|g| (g, None))
            .map_err(|e| e.to_string()),
        raw: code.to_string(),
    };
    let items = match &job.source {
        SweepSource::Graph6File { path } => {
            let file = File::open(path)?;
            let mut items = Vec::new();
            for line in BufReader::new(file).lines() {
                let line = line?;
                let code = line.trim();
                if code.is_empty() || code.starts_with('#') {
                    continue;
                }
                items.push(from_code(items.len(), code, None));
            }
            items
        }
        SweepSource::Catalogue {
            min_order,
            max_order,
        } => (*min_order..=*max_order)
            .flat_map(connected_catalogue_codes)
            .enumerate()
            .map(|(i, code)| from_code(i, code, None))
            .collect(),
        SweepSource::FamilyGrid { specs } => {
            let mut items = Vec::new();
            for text in specs {
                for spec in FamilySpec::expand_grid(text)? {
                    let g = spec.generate()?;
                    let raw = write_graph6(&g)?;
                    items.push(Item {
                        index: items.len(),
                        label: Some(spec.to_string()),
                        parsed: Ok((g, Some(spec))),
                        raw,
                    });
                }
            }
            items
        }
        SweepSource::Random {
            model,
            count,
            min_order,
            max_order,
        } => {
            if min_order > max_order || *min_order < 2.max(model.min_order()) {
                return Err(Error::Config(format!(
                    "random sweep needs {} <= min_order <= max_order",
                    2.max(model.min_order())
                )));
            }
            let mut rng = rng_from_seed(job.seed);
            (0..*count)
                .map(|i| {
                    let n = rand::Rng::gen_range(&mut rng, *min_order..=*max_order);
                    let g = model.sample(&mut rng, n);
                    let raw = write_graph6(&g).expect("small graph");
                    Item {
                        index: i,
                        label: None,
                        parsed: Ok((g, None)),
                        raw,
                    }
                })
                .collect()
        }
    };
    Ok(items)
}

fn reproduce_command(graph6: &str, p: Parameter, cfg: &SearchConfig) -> String {
    format!(
        "echo '{graph6}' | prclab solve - --param {} --budget-nodes {} --budget-secs {}",
        p.tag(),
        cfg.node_budget,
        cfg.time_budget_secs
    )
}

fn oracle_agrees(g: &Graph, p: Parameter, value: usize) -> Option<bool> {
    let at = brute_force_oracle(g, p, value).ok()?;
    let below = if value == 0 {
        false
    } else {
        brute_force_oracle(g, p, value - 1).ok()?
    };
    Some(at && !below)
}

fn process(item: &Item, job: &SweepJob) -> SweepRecord {
    let mut rec = SweepRecord {
        index: item.index,
        graph6: item.raw.clone(),
        label: item.label.clone(),
        n: 0,
        m: 0,
        solutions: BTreeMap::new(),
        claims: None,
        violations: Vec::new(),
        oracle_mismatches: Vec::new(),
        oracle_checked: Vec::new(),
        error: None,
    };
    let (g, family) = match &item.parsed {
        Ok(x) => x,
        Err(e) => {
            rec.error = Some(format!("malformed: {e}"));
            return rec;
        }
    };
    rec.n = g.order();
    rec.m = g.size();
    let mut solved = Solved::default();
    for &p in &job.parameters {
        match solve(g, p, &job.search) {
            Ok(r) => {
                if r.exact {
                    match p {
                        Parameter::ChiPrime => solved.chi_prime = Some(r.value),
                        Parameter::Rc => solved.rc = Some(r.value),
                        Parameter::Prc => solved.prc = Some(r.value),
                    }
                    if job.oracle {
                        match oracle_agrees(g, p, r.value) {
                            Some(true) => rec.oracle_checked.push(p),
                            Some(false) => rec.oracle_mismatches.push(p),
                            None => {}
                        }
                    }
                }
                let (lower, _) = r.bracket();
                rec.solutions.insert(
                    p,
                    Solution {
                        value: r.value,
                        exact: r.exact,
                        lower,
                        certificate: r.certificate.to_certificate(g),
                    },
                );
            }
            Err(e) => {
                rec.error = Some(format!("{p}: {e}"));
                return rec;
            }
        }
    }
    match evaluate_bounds(g, &solved, family.as_ref()) {
        Ok(mut report) => {
            if !job.claims.is_empty() {
                report.claims.retain(|id, _| job.claims.contains(id));
            }
            rec.violations = report.violations().into_iter().map(String::from).collect();
            rec.claims = Some(report);
        }
        Err(e) => rec.error = Some(e.to_string()),
    }
    rec
}

fn read_journal(path: &Path) -> Result<BTreeMap<usize, SweepRecord>> {
    let mut done = BTreeMap::new();
    if !path.exists() {
        return Ok(done);
    }
    for line in BufReader::new(File::open(path)?).lines() {
        let line = line?;
        // A run killed mid-write can leave a truncated last line; ignore it.
        if let Ok(rec) = serde_json::from_str::<SweepRecord>(&line) {
            done.insert(rec.index, rec);
        }
    }
    Ok(done)
}

/// Runs (or resumes) a sweep and writes its outputs.
pub fn run_sweep(job: &SweepJob) -> Result<SweepSummary> {
    run_sweep_limited(job, usize::MAX)
}

/// Like [`run_sweep`] but stops after `limit` new graphs without writing the
/// summary. Returns `Ok(None)` in that case; used to simulate interruptions.
pub fn run_sweep_partial(job: &SweepJob, limit: usize) -> Result<Option<SweepSummary>> {
    let items = load_items(job)?;
    let done = prepare_journal(job)?;
    let todo: Vec<&Item> = items
        .iter()
        .filter(|i| !done.contains_key(&i.index))
        .collect();
    if todo.len() <= limit {
        return run_sweep(job).map(Some);
    }
    let journal = Mutex::new(open_journal(job)?);
    for item in todo.into_iter().take(limit) {
        append(&journal, &process(item, job))?;
    }
    Ok(None)
}

fn prepare_journal(job: &SweepJob) -> Result<BTreeMap<usize, SweepRecord>> {
    std::fs::create_dir_all(&job.out_dir)?;
    let path = job.out_dir.join("journal.jsonl");
    if job.resume {
        read_journal(&path)
    } else {
        File::create(&path)?;
        Ok(BTreeMap::new())
    }
}

fn open_journal(job: &SweepJob) -> Result<File> {
    Ok(OpenOptions::new()
        .create(true)
        .append(true)
        .open(job.out_dir.join("journal.jsonl"))?)
}

fn append(journal: &Mutex<File>, rec: &SweepRecord) -> Result<()> {
    let line = serde_json::to_string(rec)?;
    let mut f = journal.lock().expect("journal lock");
    writeln!(f, "{line}")?;
    f.flush()?;
    Ok(())
}

fn run_sweep_limited(job: &SweepJob, limit: usize) -> Result<SweepSummary> {
    job.validate()?;
    let started = Instant::now();
    let items = load_items(job)?;
    let mut done = prepare_journal(job)?;
    let todo: Vec<&Item> = items
        .iter()
        .filter(|i| !done.contains_key(&i.index))
        .take(limit)
        .collect();
    let journal = Mutex::new(open_journal(job)?);
    // A sequential-canonical request runs the whole sweep on one worker.
    let jobs = if job.search.determinism == Determinism::SequentialCanonical {
        1
    } else {
        job.jobs
    };
    // Each graph is solved single-threaded; the parallelism is across graphs.
    let per_graph = SweepJob {
        search: SearchConfig {
            determinism: Determinism::SequentialCanonical,
            ..job.search.clone()
        },
        ..job.clone()
    };
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| Error::Config(e.to_string()))?;
    let fresh: Vec<SweepRecord> = pool.install(|| {
        todo.par_iter()
            .map(|item| {
                let rec = process(item, &per_graph);
                append(&journal, &rec).map(|_| rec)
            })
            .collect::<Result<Vec<_>>>()
    })?;
    for rec in fresh {
        done.insert(rec.index, rec);
    }
    let records: Vec<&SweepRecord> = items.iter().filter_map(|i| done.get(&i.index)).collect();
    let summary = summarise(&records, job, started.elapsed().as_secs_f64());
    write_outputs(&job.out_dir, &records, &summary)?;
    Ok(summary)
}

fn summarise(records: &[&SweepRecord], job: &SweepJob, wall_secs: f64) -> SweepSummary {
    let mut claims: BTreeMap<String, ClaimCounts> = BTreeMap::new();
    let mut violations = Vec::new();
    let mut malformed = 0;
    let mut errors = 0;
    let mut inexact = 0;
    let mut oracle_checks = 0;
    for rec in records {
        match &rec.error {
            Some(e) if e.starts_with("malformed") => {
                malformed += 1;
                continue;
            }
            Some(_) => {
                errors += 1;
                continue;
            }
            None => {}
        }
        if rec.solutions.values().any(|s| !s.exact) {
            inexact += 1;
        }
        oracle_checks += rec.oracle_checked.len();
        if let Some(report) = &rec.claims {
            for (id, c) in &report.claims {
                let e = claims.entry(id.clone()).or_default();
                match c.satisfied {
                    Some(true) => e.pass += 1,
                    Some(false) => e.fail += 1,
                    None => e.na += 1,
                }
            }
        }
        if !rec.violations.is_empty() || !rec.oracle_mismatches.is_empty() {
            let p = rec
                .oracle_mismatches
                .first()
                .copied()
                .unwrap_or(Parameter::Prc);
            violations.push(Violation {
                graph6: rec.graph6.clone(),
                claims: rec.violations.clone(),
                oracle_mismatches: rec.oracle_mismatches.clone(),
                solutions: rec.solutions.clone(),
                reproduce: reproduce_command(&rec.graph6, p, &job.search),
            });
        }
    }
    SweepSummary {
        processed: records.len() - malformed,
        malformed,
        errors,
        inexact,
        oracle_checks,
        claims,
        violations,
        seed: job.seed,
        wall_secs,
    }
}

fn write_outputs(dir: &Path, records: &[&SweepRecord], summary: &SweepSummary) -> Result<()> {
    std::fs::write(
        dir.join("summary.json"),
        serde_json::to_string_pretty(summary)? + "\n",
    )?;
    let mut csv = String::from("graph6,n,m,chi_prime,rc,prc,violated\n");
    let cell = |rec: &SweepRecord, p: Parameter| match rec.solutions.get(&p) {
        Some(s) if s.exact => s.value.to_string(),
        Some(s) => format!("{}..{}", s.lower, s.value),
        None => String::new(),
    };
    for rec in records {
        let violated: BTreeSet<&str> = rec.violations.iter().map(String::as_str).collect();
        csv.push_str(&format!(
            "{},{},{},{},{},{},{}\n",
            csv_field(&rec.graph6),
            rec.n,
            rec.m,
            cell(rec, Parameter::ChiPrime),
            cell(rec, Parameter::Rc),
            cell(rec, Parameter::Prc),
            violated.into_iter().collect::<Vec<_>>().join(";")
        ));
    }
    std::fs::write(dir.join("summary.csv"), csv)?;
    Ok(())
}

/// Quotes a CSV field if it contains a delimiter or quote (graph6 can contain both).
fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}
