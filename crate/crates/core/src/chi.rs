//! Exact chromatic index by budgeted backtracking, class verdicts, and
//! the delta-criticality test.

use serde::Serialize;

use crate::coloring::EdgeColoring;
use crate::graph::Graph;
use crate::vizing::vizing_color;

/// Verdict of an exact chromatic-index computation.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub enum Classification {
    /// chi' = Delta.
    Class1,
    /// chi' = Delta + 1, established by exhaustive refutation.
    Class2,
    /// Search budget exhausted before a verdict.
    Unknown,
}

#[derive(Clone, Debug)]
pub struct ClassResult {
    pub verdict: Classification,
    /// A coloring achieving chi' when the verdict is definite.
    pub witness: Option<EdgeColoring>,
    /// Decision nodes spent by the backtracking search.
    pub budget_spent: u64,
}

/// Outcome of a bounded search for a total proper k-edge-coloring.
pub enum SearchOutcome {
    Found(EdgeColoring),
    /// The whole search space was exhausted: no k-edge-coloring exists.
    Impossible,
    BudgetExhausted,
}

/// Edges ordered by decreasing endpoint degree sum, ties lexicographic.
fn search_order(g: &Graph) -> Vec<(usize, usize)> {
    let mut edges = g.edges();
    edges.sort_by_key(|&(u, v)| {
        (
            std::cmp::Reverse(g.degree(u) + g.degree(v)),
            u,
            v,
        )
    });
    edges
}

/// Backtracking search for a total proper coloring of `g` with colors
/// `1..=k`. Counts one decision node per attempted color assignment.
/// Color symmetry is broken by allowing at most one fresh color per step.
pub fn find_k_coloring(g: &Graph, k: usize, budget: u64) -> (SearchOutcome, u64) {
    let edges = search_order(g);
    if edges.is_empty() {
        return (SearchOutcome::Found(EdgeColoring::new(g.n(), k)), 0);
    }
    if g.max_degree() > k {
        return (SearchOutcome::Impossible, 0);
    }
    let mut spent = 0u64;
    let coloring = EdgeColoring::new(g.n(), k);
    match place(&edges, 0, &coloring, k, 0, budget, &mut spent) {
        Placement::Done(c) => (SearchOutcome::Found(c), spent),
        Placement::Refuted => (SearchOutcome::Impossible, spent),
        Placement::OutOfBudget => (SearchOutcome::BudgetExhausted, spent),
    }
}

enum Placement {
    Done(EdgeColoring),
    Refuted,
    OutOfBudget,
}

fn place(
    edges: &[(usize, usize)],
    idx: usize,
    coloring: &EdgeColoring,
    k: usize,
    max_used: usize,
    budget: u64,
    spent: &mut u64,
) -> Placement {
    if idx == edges.len() {
        return Placement::Done(coloring.clone());
    }
    let (u, v) = edges[idx];
    let ceiling = k.min(max_used + 1);
    let mut out_of_budget = false;
    for color in 1..=ceiling {
        if !coloring.is_missing(u, color) || !coloring.is_missing(v, color) {
            continue;
        }
        if *spent >= budget {
            out_of_budget = true;
            break;
        }
        *spent += 1;
        let next = coloring
            .color_edge(u, v, color)
            .expect("palette check precedes assignment");
        match place(edges, idx + 1, &next, k, max_used.max(color), budget, spent) {
            Placement::Done(c) => return Placement::Done(c),
            Placement::Refuted => {}
            Placement::OutOfBudget => return Placement::OutOfBudget,
        }
    }
    if out_of_budget {
        Placement::OutOfBudget
    } else {
        Placement::Refuted
    }
}

/// Exact chromatic index: `Class1` with a Delta-coloring witness,
/// `Class2` with a (Delta+1)-coloring witness after exhaustive refutation
/// of Delta-colorability, or `Unknown` when the budget runs out.
pub fn chromatic_index(g: &Graph, budget: u64) -> ClassResult {
    let delta = g.max_degree();
    if delta == 0 {
        return ClassResult {
            verdict: Classification::Class1,
            witness: Some(EdgeColoring::new(g.n(), 0)),
            budget_spent: 0,
        };
    }
    let (outcome, spent) = find_k_coloring(g, delta, budget);
    match outcome {
        SearchOutcome::Found(c) => ClassResult {
            verdict: Classification::Class1,
            witness: Some(c),
            budget_spent: spent,
        },
        SearchOutcome::Impossible => ClassResult {
            verdict: Classification::Class2,
            witness: Some(vizing_color(g)),
            budget_spent: spent,
        },
        SearchOutcome::BudgetExhausted => ClassResult {
            verdict: Classification::Unknown,
            witness: None,
            budget_spent: spent,
        },
    }
}

/// Three-valued criticality verdict with the first failing edge, if any.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum CriticalityVerdict {
    Critical,
    NotCritical {
        /// Edge whose deletion stays class 2, when that is the reason.
        failing_edge: Option<(usize, usize)>,
        reason: String,
    },
    Unknown,
}

/// Tests delta-criticality: connected, class 2, and `G - e` is
/// Delta(G)-colorable for every edge `e`.
pub fn is_delta_critical(g: &Graph, budget: u64) -> CriticalityVerdict {
    if !g.is_connected() {
        return CriticalityVerdict::NotCritical {
            failing_edge: None,
            reason: "disconnected".into(),
        };
    }
    let delta = g.max_degree();
    match chromatic_index(g, budget).verdict {
        Classification::Class1 => {
            return CriticalityVerdict::NotCritical {
                failing_edge: None,
                reason: "class 1".into(),
            }
        }
        Classification::Unknown => return CriticalityVerdict::Unknown,
        Classification::Class2 => {}
    }
    for (u, v) in g.edges() {
        let reduced = g.delete_edge(u, v).expect("edge exists");
        let (outcome, _) = find_k_coloring(&reduced, delta, budget);
        match outcome {
            SearchOutcome::Found(_) => {}
            SearchOutcome::Impossible => {
                return CriticalityVerdict::NotCritical {
                    failing_edge: Some((u, v)),
                    reason: format!("G - ({u}, {v}) is still class 2"),
                }
            }
            SearchOutcome::BudgetExhausted => return CriticalityVerdict::Unknown,
        }
    }
    CriticalityVerdict::Critical
}

/// A proper Delta(G)-coloring of `G - xy`, the ambient object of all
/// palette analysis. Fast path through the fan algorithm; falls back to
/// exact search. `None` when the budget is exhausted (criticality
/// guarantees existence, search does not).
pub fn delta_coloring_of_deletion(
    g: &Graph,
    x: usize,
    y: usize,
    budget: u64,
) -> Option<EdgeColoring> {
    let delta = g.max_degree();
    let reduced = g.delete_edge(x, y).ok()?;
    let fan = vizing_color(&reduced);
    if fan.assignments().iter().all(|&(_, _, c)| c <= delta) {
        return Some(fan.with_k(delta).expect("colors fit"));
    }
    match find_k_coloring(&reduced, delta, budget).0 {
        SearchOutcome::Found(c) => Some(c),
        _ => None,
    }
}
