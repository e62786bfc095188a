//! Command-line front end: corpus pipelines over graph6 files, per-graph
//! analysis bundles, lemma audits, discharging ledgers, and the
//! inequality-certification run.
//!
//! Exit codes: 0 success (Unknown/Indeterminate verdicts included),
//! 1 refuted inequality, 2 input error, 3 parameter error.

mod config;
mod output;

use std::collections::BTreeSet;
use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Parser, Subcommand, ValueEnum};
use num::FromPrimitive;
use rayon::prelude::*;
use serde_json::json;

use critlab_core::chi::{chromatic_index, delta_coloring_of_deletion};
use critlab_core::claims::{verify_claims, ClaimStatus};
use critlab_core::discharge::{run_discharging, ChargeLedger};
use critlab_core::graph::Graph;
use critlab_core::graph6::parse_file;
use critlab_core::mis::{bound_report, max_independent_set};
use critlab_core::palette;
use critlab_core::params::Params;
use critlab_core::report::{analyze_graph, audit_to_json, claim_to_json, ReportOptions};
use critlab_core::Rat;

use config::ConfigFile;
use output::{Format, Sink};

#[derive(Parser)]
#[command(
    name = "critlab",
    version,
    about = "Exact analysis of edge-chromatic critical graphs"
)]
struct Cli {
    /// Flat key=value config file; command-line flags take precedence.
    #[arg(long, global = true)]
    config: Option<PathBuf>,

    /// Worker threads (fallback: env CRITLAB_JOBS, then all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,

    /// Write the report to this file instead of stdout.
    #[arg(long, global = true)]
    report: Option<PathBuf>,

    /// Report format.
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,

    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Exact chromatic index (class 1 / class 2 / unknown) per record.
    Chi {
        /// graph6 input file, one record per line.
        input: Option<PathBuf>,
        /// Backtracking budget (decision nodes) per search.
        #[arg(long)]
        budget: Option<u64>,
    },
    /// Full per-graph pipeline: class, criticality, alpha, bounds, audits.
    Critical {
        input: Option<PathBuf>,
        #[arg(long)]
        budget: Option<u64>,
        /// Attach a discharging digest for this minimum-degree parameter.
        #[arg(long)]
        d: Option<u32>,
        /// Rational omega for d outside {3, 4} (e.g. "5/2").
        #[arg(long)]
        omega_override: Option<String>,
    },
    /// Exact maximum independent set and independence-number bounds.
    Mis {
        input: Option<PathBuf>,
    },
    /// Adjacency-lemma audits on every edge of every input graph.
    AuditLemmas {
        input: Option<PathBuf>,
        #[arg(long)]
        budget: Option<u64>,
        /// Parameter family for the audit thresholds.
        #[arg(long)]
        d: Option<u32>,
        #[arg(long)]
        omega_override: Option<String>,
        /// Run scale-dependent audits even when Delta is below threshold.
        #[arg(long)]
        assume_hypotheses: bool,
    },
    /// Charge ledger of the discharging procedure on one graph.
    Discharge {
        input: Option<PathBuf>,
        #[arg(long)]
        d: Option<u32>,
        /// Independent set X as comma-separated vertices (default: a
        /// maximum independent set).
        #[arg(long, short = 'x')]
        x_set: Option<String>,
        /// Proceed even when the minimum degree is below d.
        #[arg(long)]
        force: bool,
        #[arg(long)]
        omega_override: Option<String>,
    },
    /// Certify the inequality suite for one parameter family.
    VerifyClaims {
        #[arg(long)]
        d: Option<u32>,
        /// Delta at which scale-dependent claims are evaluated.
        #[arg(long)]
        delta: Option<String>,
        /// Grid points per continuous claim.
        #[arg(long)]
        grid: Option<usize>,
        /// Interval-precision ceiling in bits.
        #[arg(long)]
        precision_cap: Option<u32>,
        #[arg(long)]
        omega_override: Option<String>,
    },
}

/// An error carrying its process exit code.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn input(message: impl Into<String>) -> Failure {
        Failure {
            code: 2,
            message: message.into(),
        }
    }
    fn param(message: impl Into<String>) -> Failure {
        Failure {
            code: 3,
            message: message.into(),
        }
    }
}

type CliResult = Result<u8, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn run(cli: Cli) -> CliResult {
    let cfg = match &cli.config {
        Some(path) => ConfigFile::load(path)
            .map_err(|e| Failure::param(format!("config {}: {e}", path.display())))?,
        None => ConfigFile::empty(),
    };

    let jobs = cli
        .jobs
        .or(cfg.get_usize("jobs")?)
        .or_else(|| {
            std::env::var("CRITLAB_JOBS")
                .ok()
                .and_then(|v| v.parse().ok())
        })
        .unwrap_or(0);
    // A second build attempt (e.g. in tests) is harmless; keep the pool.
    let _ = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build_global();

    let report_path = cli.report.clone().or(cfg.get_path("report"));
    let format = match cli.format {
        Some(f) => f,
        None => match cfg.get("format") {
            Some(s) => Format::from_str(s, true)
                .map_err(|e| Failure::param(format!("format: {e}")))?,
            None => Format::Json,
        },
    };
    let mut sink = Sink::open(report_path.as_deref())
        .map_err(|e| Failure::input(format!("cannot open report target: {e}")))?;

    match cli.cmd {
        Cmd::Chi { input, budget } => {
            let records = read_corpus(input.as_ref(), &cfg)?;
            let budget = resolve_budget(budget, &cfg)?;
            cmd_chi(&records, budget, format, &mut sink)
        }
        Cmd::Critical {
            input,
            budget,
            d,
            omega_override,
        } => {
            let records = read_corpus(input.as_ref(), &cfg)?;
            let budget = resolve_budget(budget, &cfg)?;
            let d = d.or(cfg.get_u32("d")?);
            let omega = resolve_omega(omega_override, &cfg)?;
            cmd_critical(&records, budget, d, omega, format, &mut sink)
        }
        Cmd::Mis { input } => {
            let records = read_corpus(input.as_ref(), &cfg)?;
            cmd_mis(&records, format, &mut sink)
        }
        Cmd::AuditLemmas {
            input,
            budget,
            d,
            omega_override,
            assume_hypotheses,
        } => {
            let records = read_corpus(input.as_ref(), &cfg)?;
            let budget = resolve_budget(budget, &cfg)?;
            let d = d.or(cfg.get_u32("d")?).unwrap_or(3);
            let omega = resolve_omega(omega_override, &cfg)?;
            let assume = assume_hypotheses || cfg.get_bool("assume-hypotheses")?;
            cmd_audit_lemmas(&records, budget, d, omega, assume, format, &mut sink)
        }
        Cmd::Discharge {
            input,
            d,
            x_set,
            force,
            omega_override,
        } => {
            let records = read_corpus(input.as_ref(), &cfg)?;
            let d = d
                .or(cfg.get_u32("d")?)
                .ok_or_else(|| Failure::param("discharge requires --d"))?;
            let x_set = x_set.or_else(|| cfg.get("x").map(str::to_owned));
            let force = force || cfg.get_bool("force")?;
            let omega = resolve_omega(omega_override, &cfg)?;
            cmd_discharge(&records, d, x_set.as_deref(), force, omega, &mut sink)
        }
        Cmd::VerifyClaims {
            d,
            delta,
            grid,
            precision_cap,
            omega_override,
        } => {
            let d = d
                .or(cfg.get_u32("d")?)
                .ok_or_else(|| Failure::param("verify-claims requires --d"))?;
            let delta = match delta.or_else(|| cfg.get("delta").map(str::to_owned)) {
                Some(s) => parse_rat(&s, "delta")?,
                None => Rat::from_u64(1_000_000).unwrap(),
            };
            let grid = grid.or(cfg.get_usize("grid")?).unwrap_or(10_000);
            let cap = precision_cap
                .or(cfg.get_u32("precision-cap")?)
                .unwrap_or(4096);
            if grid == 0 || cap == 0 {
                return Err(Failure::param("grid and precision cap must be positive"));
            }
            let omega = resolve_omega(omega_override, &cfg)?;
            cmd_verify_claims(d, delta, grid, cap, omega, format, &mut sink)
        }
    }
}

fn resolve_budget(flag: Option<u64>, cfg: &ConfigFile) -> Result<u64, Failure> {
    let budget = flag.or(cfg.get_u64("budget")?).unwrap_or(2_000_000);
    if budget == 0 {
        return Err(Failure::param("budget must be positive"));
    }
    Ok(budget)
}

fn resolve_omega(flag: Option<String>, cfg: &ConfigFile) -> Result<Option<Rat>, Failure> {
    let raw = flag.or_else(|| cfg.get("omega-override").map(str::to_owned));
    raw.map(|s| parse_rat(&s, "omega-override")).transpose()
}

fn parse_rat(s: &str, what: &str) -> Result<Rat, Failure> {
    Rat::from_str(s)
        .map_err(|e| Failure::param(format!("{what}: cannot parse {s:?} as a rational: {e}")))
}

/// Build the parameter family, mapping the domain errors to exit code 3.
fn build_params(d: u32, delta: Rat, omega: Option<&Rat>) -> Result<Params, Failure> {
    match omega {
        Some(w) => Params::with_omega_override(d, delta, w.clone()),
        None => Params::new(d, delta),
    }
    .map_err(|e| Failure::param(e.to_string()))
}

fn read_corpus(
    flag: Option<&PathBuf>,
    cfg: &ConfigFile,
) -> Result<Vec<(usize, Graph)>, Failure> {
    let path = flag
        .cloned()
        .or_else(|| cfg.get_path("input"))
        .ok_or_else(|| Failure::input("no input file given"))?;
    let text = std::fs::read_to_string(&path)
        .map_err(|e| Failure::input(format!("{}: {e}", path.display())))?;
    parse_file(&text).map_err(|e| Failure::input(e.to_string()))
}

fn cmd_chi(
    records: &[(usize, Graph)],
    budget: u64,
    format: Format,
    sink: &mut Sink,
) -> CliResult {
    if format == Format::Csv {
        sink.line("id,graph6,n,max_degree,class,budget_spent");
    }
    let rows: Vec<String> = records
        .par_iter()
        .map(|(line, g)| {
            let r = chromatic_index(g, budget);
            let g6 = critlab_core::graph6::encode_graph6(g);
            match format {
                Format::Json => json!({
                    "id": line,
                    "graph6": g6,
                    "n": g.n(),
                    "max_degree": g.max_degree(),
                    "class": r.verdict,
                    "budget_spent": r.budget_spent,
                })
                .to_string(),
                Format::Csv => format!(
                    "{line},{g6},{},{},{:?},{}",
                    g.n(),
                    g.max_degree(),
                    r.verdict,
                    r.budget_spent
                ),
            }
        })
        .collect();
    for row in rows {
        sink.line(&row);
    }
    Ok(0)
}

fn cmd_critical(
    records: &[(usize, Graph)],
    budget: u64,
    d: Option<u32>,
    omega: Option<Rat>,
    format: Format,
    sink: &mut Sink,
) -> CliResult {
    // Surface parameter errors before spending any budget.
    if let Some(d) = d {
        build_params(d, Rat::from_u64(1).unwrap(), omega.as_ref())?;
    }
    if format == Format::Csv {
        sink.line("id,graph6,n,class,critical,alpha");
    }
    let rows: Vec<String> = records
        .par_iter()
        .map(|(line, g)| {
            let ledger_params = d.and_then(|d| {
                let delta = Rat::from_usize(g.max_degree())?;
                build_params(d, delta, omega.as_ref()).ok()
            });
            let mut opts = ReportOptions {
                budget,
                ledger_params,
                ..ReportOptions::default()
            };
            if let Some(d) = d {
                // eps = omega / (d + 2); rational whenever the ledger is.
                if let Some(w) = opts
                    .ledger_params
                    .as_ref()
                    .and_then(|p| p.omega.as_rational())
                {
                    opts.eps = w / Rat::from_u32(d + 2).unwrap();
                }
            }
            let rep = analyze_graph(g, *line, &opts);
            match format {
                Format::Json => serde_json::to_string(&rep).expect("report serializes"),
                Format::Csv => format!(
                    "{},{},{},{:?},{},{}",
                    rep.id,
                    rep.graph6,
                    rep.n,
                    rep.class,
                    matches!(
                        rep.criticality,
                        critlab_core::chi::CriticalityVerdict::Critical
                    ),
                    rep.alpha
                ),
            }
        })
        .collect();
    for row in rows {
        sink.line(&row);
    }
    Ok(0)
}

fn cmd_mis(records: &[(usize, Graph)], format: Format, sink: &mut Sink) -> CliResult {
    if format == Format::Csv {
        sink.line("id,graph6,n,alpha");
    }
    let rows: Vec<String> = records
        .par_iter()
        .map(|(line, g)| {
            let r = max_independent_set(g);
            let g6 = critlab_core::graph6::encode_graph6(g);
            match format {
                Format::Json => json!({
                    "id": line,
                    "graph6": g6,
                    "n": g.n(),
                    "alpha": r.alpha,
                    "witness": r.witness,
                    "bounds": bound_report(g, r.alpha),
                })
                .to_string(),
                Format::Csv => format!("{line},{g6},{},{}", g.n(), r.alpha),
            }
        })
        .collect();
    for row in rows {
        sink.line(&row);
    }
    Ok(0)
}

fn cmd_audit_lemmas(
    records: &[(usize, Graph)],
    budget: u64,
    d: u32,
    omega: Option<Rat>,
    assume_hypotheses: bool,
    format: Format,
    sink: &mut Sink,
) -> CliResult {
    build_params(d, Rat::from_u64(1).unwrap(), omega.as_ref())?;
    if format == Format::Csv {
        sink.line("id,graph6,x,y,lemma,status");
    }
    let rows: Vec<Vec<String>> = records
        .par_iter()
        .map(|(line, g)| {
            let mut out = Vec::new();
            let g6 = critlab_core::graph6::encode_graph6(g);
            let delta = g.max_degree();
            if delta == 0 {
                return out;
            }
            let params = match build_params(
                d,
                Rat::from_usize(delta).unwrap(),
                omega.as_ref(),
            ) {
                Ok(p) => p,
                Err(_) => return out,
            };
            let (eps, lambda, n_cap, d0) = match params.omega.as_rational() {
                Some(w) => (
                    w / Rat::from_u32(d + 2).unwrap(),
                    params.lambda.clone(),
                    params.n_bound.clone(),
                    params.d0.clone(),
                ),
                // Irrational omega (d >= 19): audits use a slightly
                // smaller rational eps; thresholds stay sound because
                // every gate is an inequality on integers.
                None => (
                    Rat::new(1.into(), 3.into()),
                    params.lambda.clone(),
                    params.n_bound.clone(),
                    params.d0.clone(),
                ),
            };
            for (x, y) in g.edges() {
                let phi = match delta_coloring_of_deletion(g, x, y, budget) {
                    Some(phi) => phi,
                    None => continue,
                };
                let mut audits = Vec::new();
                if let Ok(rep) = palette::audit_smalldegree(g, &phi, x, y, &eps) {
                    audits.push(rep);
                }
                if let Ok(rep) = palette::audit_largedegree(
                    g,
                    &phi,
                    x,
                    y,
                    &eps,
                    &lambda,
                    &n_cap,
                    &d0,
                    assume_hypotheses,
                ) {
                    audits.push(rep);
                }
                if let Ok(rep) = palette::audit_degree3(g, &phi, x, y, &eps) {
                    audits.push(rep);
                }
                if let Ok(rep) = palette::audit_p1(g, &phi, x, y, &eps) {
                    audits.push(rep);
                }
                if let Ok(rep) = palette::audit_bbcolor2(g, &phi, x, y, &eps) {
                    audits.push(rep);
                }
                match format {
                    Format::Json => out.push(
                        json!({
                            "id": line,
                            "graph6": g6,
                            "edge": [x, y],
                            "audits": audits
                                .iter()
                                .map(audit_to_json)
                                .collect::<Vec<_>>(),
                        })
                        .to_string(),
                    ),
                    Format::Csv => {
                        for rep in &audits {
                            out.push(format!(
                                "{line},{g6},{x},{y},{},{:?}",
                                rep.lemma_id, rep.status
                            ));
                        }
                    }
                }
            }
            out
        })
        .collect();
    for group in rows {
        for row in group {
            sink.line(&row);
        }
    }
    Ok(0)
}

fn parse_x_set(spec: &str, g: &Graph) -> Result<BTreeSet<usize>, Failure> {
    let mut out = BTreeSet::new();
    for part in spec.split(',') {
        let part = part.trim();
        if part.is_empty() {
            continue;
        }
        let v: usize = part
            .parse()
            .map_err(|_| Failure::param(format!("bad vertex in x set: {part:?}")))?;
        if v >= g.n() {
            return Err(Failure::param(format!(
                "vertex {v} out of range (n = {})",
                g.n()
            )));
        }
        out.insert(v);
    }
    Ok(out)
}

fn cmd_discharge(
    records: &[(usize, Graph)],
    d: u32,
    x_spec: Option<&str>,
    force: bool,
    omega: Option<Rat>,
    sink: &mut Sink,
) -> CliResult {
    for (line, g) in records {
        if g.min_degree() < d as usize && !force {
            return Err(Failure::param(format!(
                "record {line}: minimum degree {} is below d = {d}; pass --force to proceed",
                g.min_degree()
            )));
        }
        let delta = Rat::from_usize(g.max_degree()).unwrap();
        let params = build_params(d, delta, omega.as_ref())?;
        let x_set = match x_spec {
            Some(spec) => parse_x_set(spec, g)?,
            None => max_independent_set(g).witness.into_iter().collect(),
        };
        let ledger = run_discharging(g, &x_set, &params).map_err(|e| Failure::param(e.to_string()))?;
        sink.line(&format!("# record {line}, d = {d}, |X| = {}", x_set.len()));
        sink.text(&ledger.to_csv());
        let m0 = ChargeLedger::total(&ledger.m0);
        let m0s = ChargeLedger::total(&ledger.m0_star);
        let m1s = ChargeLedger::total(&ledger.m1_star);
        let m2s = ChargeLedger::total(&ledger.m2_star);
        sink.line(&format!(
            "# step0 conservation: M0 total = {m0}, M0* total = {m0s}"
        ));
        sink.line(&format!(
            "# post-split totals: M1* = {m1s}, M2* = {m2s}"
        ));
        sink.line(&format!(
            "# satisfied: {:?}",
            ledger.satisfied().into_iter().collect::<Vec<_>>()
        ));
        sink.line(&format!(
            "# deficient: {:?}",
            ledger.deficient().into_iter().collect::<Vec<_>>()
        ));
    }
    Ok(0)
}

fn cmd_verify_claims(
    d: u32,
    delta: Rat,
    grid: usize,
    cap: u32,
    omega: Option<Rat>,
    format: Format,
    sink: &mut Sink,
) -> CliResult {
    let params = build_params(d, delta, omega.as_ref())?;
    let verdicts = verify_claims(&params, grid, cap);
    if format == Format::Csv {
        sink.line("claim,status,lo,hi,precision_bits");
    }
    let mut refuted = 0usize;
    for v in &verdicts {
        match v.status {
            ClaimStatus::Refuted => refuted += 1,
            ClaimStatus::Indeterminate => eprintln!(
                "warning: {} indeterminate at precision cap {} bits",
                v.claim_id, v.precision_bits
            ),
            ClaimStatus::Certified => {}
        }
        match format {
            Format::Json => sink.line(&claim_to_json(v, &params).to_string()),
            Format::Csv => {
                let (lo, hi) = v
                    .interval
                    .as_ref()
                    .map(|iv| (iv.decimal_lo(8), iv.decimal_hi(8)))
                    .unwrap_or_default();
                sink.line(&format!(
                    "{},{:?},{lo},{hi},{}",
                    v.claim_id, v.status, v.precision_bits
                ));
            }
        }
    }
    if refuted > 0 {
        eprintln!("error: {refuted} claim(s) refuted");
        return Ok(1);
    }
    Ok(0)
}
