//! Per-graph analysis bundles and the JSON wire formats.
//!
//! A [`GraphReport`] collects everything the pipeline knows about one
//! input record: degree data, class and criticality verdicts, the
//! independence number with its bound checks, the adjacency-lemma audit,
//! per-edge palette audits, and (optionally) a discharging-ledger digest.
//! Reports serialize as single JSON objects, one per line in corpus runs.

use std::collections::BTreeSet;

use num::FromPrimitive;
use serde::Serialize;
use serde_json::json;

use crate::chi::{chromatic_index, is_delta_critical, Classification, CriticalityVerdict};
use crate::claims::{ClaimStatus, ClaimVerdict};
use crate::coloring::EdgeColoring;
use crate::discharge::{run_discharging, ChargeLedger};
use crate::graph::Graph;
use crate::mis::{bound_report, max_independent_set, BoundReport};
use crate::palette::{self, AuditReport, AuditStatus};
use crate::params::Params;
use crate::Rat;

/// Summary of the per-edge palette audits for one uncolored edge.
#[derive(Clone, Debug, Serialize)]
pub struct EdgeAuditSummary {
    pub x: usize,
    pub y: usize,
    /// Missing sets of the endpoints are disjoint (a consequence of
    /// criticality; false values are surfaced, not suppressed).
    pub missing_disjoint: bool,
    pub smalldegree: AuditStatus,
    pub degree3: AuditStatus,
    pub p1: AuditStatus,
    pub bbcolor2: AuditStatus,
    /// Worst outcome of the chained-beta audit over all w in N(x, B).
    pub bbcolor: AuditStatus,
}

/// Compact view of a discharging run.
#[derive(Clone, Debug, Serialize)]
pub struct LedgerDigest {
    pub d: u32,
    pub omega: String,
    pub outside_supported_range: bool,
    pub x_size: usize,
    pub step0_total: String,
    pub final_total: String,
    pub satisfied: usize,
    pub deficient: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct GraphReport {
    pub id: usize,
    pub graph6: String,
    pub n: usize,
    pub min_degree: usize,
    pub max_degree: usize,
    pub degree_sequence: Vec<usize>,
    pub class: Classification,
    pub criticality: CriticalityVerdict,
    pub alpha: usize,
    pub bounds: BoundReport,
    pub val: AuditReport,
    pub edge_audits: Vec<EdgeAuditSummary>,
    pub ledger: Option<LedgerDigest>,
}

/// Knobs for one report run.
#[derive(Clone, Debug)]
pub struct ReportOptions {
    pub budget: u64,
    /// Threshold parameter for the palette audits; q = (1 - eps) * Delta.
    pub eps: Rat,
    /// Run the lemma audits on every edge of critical graphs.
    pub audit_edges: bool,
    /// Attach a discharging digest (needs a rational-omega parameter
    /// family compatible with the graph).
    pub ledger_params: Option<Params>,
}

impl Default for ReportOptions {
    fn default() -> Self {
        ReportOptions {
            budget: 2_000_000,
            eps: Rat::new(1.into(), 3.into()),
            audit_edges: true,
            ledger_params: None,
        }
    }
}

fn worst(statuses: impl IntoIterator<Item = AuditStatus>) -> AuditStatus {
    let mut saw_verified = false;
    for s in statuses {
        match s {
            AuditStatus::Counterexample => return AuditStatus::Counterexample,
            AuditStatus::Verified => saw_verified = true,
            AuditStatus::NotApplicable => {}
        }
    }
    if saw_verified {
        AuditStatus::Verified
    } else {
        AuditStatus::NotApplicable
    }
}

/// Audit one uncolored edge of a (presumed critical) graph.
pub fn audit_edge(
    g: &Graph,
    phi: &EdgeColoring,
    x: usize,
    y: usize,
    eps: &Rat,
) -> EdgeAuditSummary {
    let missing_disjoint = phi
        .missing(x)
        .intersection(&phi.missing(y))
        .next()
        .is_none();
    let status = |r: crate::error::Result<AuditReport>| match r {
        Ok(rep) => rep.status,
        Err(_) => AuditStatus::NotApplicable,
    };
    let delta = Rat::from_usize(g.max_degree()).unwrap();
    let q = (Rat::from_i64(1).unwrap() - eps) * &delta;
    let bbcolor = {
        let pa = palette::analyze(g, phi, x, y, &q);
        match pa {
            Ok(pa) => worst(
                pa.nx_b
                    .iter()
                    .map(|&w| status(palette::audit_bbcolor(g, phi, x, y, w, eps))),
            ),
            Err(_) => AuditStatus::NotApplicable,
        }
    };
    EdgeAuditSummary {
        x,
        y,
        missing_disjoint,
        smalldegree: status(palette::audit_smalldegree(g, phi, x, y, eps)),
        degree3: status(palette::audit_degree3(g, phi, x, y, eps)),
        p1: status(palette::audit_p1(g, phi, x, y, eps)),
        bbcolor2: status(palette::audit_bbcolor2(g, phi, x, y, eps)),
        bbcolor,
    }
}

/// Run the full pipeline on one graph.
pub fn analyze_graph(g: &Graph, id: usize, opts: &ReportOptions) -> GraphReport {
    let profile = g.degree_profile();
    let class = chromatic_index(g, opts.budget);
    let criticality = is_delta_critical(g, opts.budget);
    let mis = max_independent_set(g);
    let alpha = mis.alpha;
    let bounds = bound_report(g, alpha);
    let val = palette::audit_val(g);

    let mut edge_audits = Vec::new();
    if opts.audit_edges && criticality == CriticalityVerdict::Critical {
        for (x, y) in g.edges() {
            if let Some(phi) = crate::chi::delta_coloring_of_deletion(g, x, y, opts.budget) {
                edge_audits.push(audit_edge(g, &phi, x, y, &opts.eps));
            }
        }
    }

    let ledger = opts.ledger_params.as_ref().and_then(|params| {
        let x_set: BTreeSet<usize> = mis.witness.iter().copied().collect();
        run_discharging(g, &x_set, params).ok().map(|ledger| {
            let omega = params
                .omega
                .as_rational()
                .map(|w| w.to_string())
                .unwrap_or_else(|| params.omega.to_string());
            LedgerDigest {
                d: params.d,
                omega,
                outside_supported_range: params.outside_supported_range,
                x_size: x_set.len(),
                step0_total: ChargeLedger::total(&ledger.m0_star).to_string(),
                final_total: ChargeLedger::total(&ledger.m2_star).to_string(),
                satisfied: ledger.satisfied().len(),
                deficient: ledger.deficient().len(),
            }
        })
    });

    GraphReport {
        id,
        graph6: crate::graph6::encode_graph6(g),
        n: g.n(),
        min_degree: profile.min_degree,
        max_degree: profile.max_degree,
        degree_sequence: profile.degree_sequence,
        class: class.verdict,
        criticality,
        alpha,
        bounds,
        val,
        edge_audits,
        ledger,
    }
}

/// The verify-claims wire format:
/// {claim, status, interval: [lo, hi], precision_bits, params}.
pub fn claim_to_json(v: &ClaimVerdict, params: &Params) -> serde_json::Value {
    let interval = v
        .interval
        .as_ref()
        .map(|iv| json!([iv.decimal_lo(8), iv.decimal_hi(8)]))
        .unwrap_or(serde_json::Value::Null);
    let status = match v.status {
        ClaimStatus::Certified => "Certified",
        ClaimStatus::Refuted => "Refuted",
        ClaimStatus::Indeterminate => "Indeterminate",
    };
    json!({
        "claim": v.claim_id,
        "status": status,
        "interval": interval,
        "precision_bits": v.precision_bits,
        "params": {
            "d": params.d,
            "delta": params.delta.to_string(),
            "omega": params.omega.to_string(),
            "outside_supported_range": params.outside_supported_range,
        },
        "notes": v.notes,
    })
}

/// The lemma-audit wire format: {lemma, status, hypotheses, witness}.
pub fn audit_to_json(rep: &AuditReport) -> serde_json::Value {
    json!({
        "lemma": rep.lemma_id,
        "status": match rep.status {
            AuditStatus::Verified => "Verified",
            AuditStatus::Counterexample => "Counterexample",
            AuditStatus::NotApplicable => "NotApplicable",
        },
        "hypotheses": rep.hypothesis_log,
        "witness": rep.witnesses,
    })
}
