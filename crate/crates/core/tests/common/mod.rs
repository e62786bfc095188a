//! Shared fixtures for the integration suites: exhaustive enumeration of
//! small connected graphs up to isomorphism, seeded random graphs, and
//! independently written oracles for the quantities under test.
//!
//! The oracles deliberately avoid the library's data structures and
//! search heuristics: plain edge lists, natural orderings, and direct
//! definitions, so agreement is meaningful.
#![allow(dead_code)]

use std::collections::BTreeSet;

use critlab_core::graph::Graph;
use critlab_core::EdgeColoring;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Upper-triangle bit index of the pair (i, j), i < j.
fn pair_bit(i: usize, j: usize) -> usize {
    debug_assert!(i < j);
    j * (j - 1) / 2 + i
}

/// Graph on `n` labeled vertices as an upper-triangle bitmask.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
struct Mask {
    n: usize,
    bits: u64,
}

impl Mask {
    fn has(&self, i: usize, j: usize) -> bool {
        let (i, j) = if i < j { (i, j) } else { (j, i) };
        self.bits >> pair_bit(i, j) & 1 == 1
    }

    fn to_graph(self) -> Graph {
        let mut edges = Vec::new();
        for j in 1..self.n {
            for i in 0..j {
                if self.has(i, j) {
                    edges.push((i, j));
                }
            }
        }
        Graph::from_edges(self.n, &edges).unwrap()
    }

    /// Relabel through `perm` (perm[old] = new).
    fn relabel(&self, perm: &[usize]) -> Mask {
        let mut bits = 0u64;
        for j in 1..self.n {
            for i in 0..j {
                if self.has(i, j) {
                    let (a, b) = (perm[i].min(perm[j]), perm[i].max(perm[j]));
                    bits |= 1 << pair_bit(a, b);
                }
            }
        }
        Mask { n: self.n, bits }
    }

    /// Minimum bitmask over all vertex permutations.
    fn canonical(&self) -> Mask {
        let mut perm: Vec<usize> = (0..self.n).collect();
        let mut best = self.relabel(&perm);
        permute(&mut perm, 0, &mut |p| {
            let m = self.relabel(p);
            if m.bits < best.bits {
                best = m;
            }
        });
        best
    }
}

fn permute(perm: &mut Vec<usize>, k: usize, visit: &mut impl FnMut(&[usize])) {
    if k == perm.len() {
        visit(perm);
        return;
    }
    for i in k..perm.len() {
        perm.swap(k, i);
        permute(perm, k + 1, visit);
        perm.swap(k, i);
    }
}

fn is_connected_mask(m: &Mask) -> bool {
    if m.n == 0 {
        return true;
    }
    let mut seen = vec![false; m.n];
    let mut stack = vec![0usize];
    seen[0] = true;
    while let Some(v) = stack.pop() {
        for u in 0..m.n {
            if u != v && m.has(u.min(v), u.max(v)) && !seen[u] {
                seen[u] = true;
                stack.push(u);
            }
        }
    }
    seen.into_iter().all(|s| s)
}

/// All connected graphs on exactly `n` vertices, one per isomorphism
/// class. Grown by attaching a new vertex to every nonempty subset of a
/// smaller graph: every connected graph has a non-cut vertex, so each
/// class is reached. Counts: 1, 1, 2, 6, 21, 112, 853 for n = 1..7.
pub fn connected_graphs(n: usize) -> Vec<Graph> {
    assert!(n >= 1 && n <= 8, "enumeration is sized for n <= 8");
    let mut level: Vec<Mask> = vec![Mask { n: 1, bits: 0 }];
    for size in 2..=n {
        let mut next: BTreeSet<Mask> = BTreeSet::new();
        for g in &level {
            for subset in 1u64..(1 << (size - 1)) {
                let mut bits = g.bits;
                for i in 0..size - 1 {
                    if subset >> i & 1 == 1 {
                        bits |= 1 << pair_bit(i, size - 1);
                    }
                }
                let m = Mask { n: size, bits };
                next.insert(m.canonical());
            }
        }
        level = next.into_iter().collect();
    }
    level.into_iter().map(Mask::to_graph).collect()
}

/// All connected graphs with 1..=7 vertices, one per isomorphism class,
/// computed once per process. `levels[k]` holds the graphs on k+1
/// vertices.
pub fn connected_levels_upto7() -> &'static Vec<Vec<Graph>> {
    static LEVELS: std::sync::OnceLock<Vec<Vec<Graph>>> = std::sync::OnceLock::new();
    LEVELS.get_or_init(|| (1..=7).map(connected_graphs).collect())
}

/// Seeded random connected graph on `n` vertices: a uniform spanning
/// chain under a random vertex order plus independent edges with
/// probability `p` in percent.
pub fn random_connected_graph(rng: &mut ChaCha8Rng, n: usize, p_percent: u32) -> Graph {
    let mut order: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        let j = rng.gen_range(0..=i);
        order.swap(i, j);
    }
    let mut edges = BTreeSet::new();
    for w in 1..n {
        let anchor = order[rng.gen_range(0..w)];
        let v = order[w];
        edges.insert((anchor.min(v), anchor.max(v)));
    }
    for i in 0..n {
        for j in i + 1..n {
            if rng.gen_range(0..100) < p_percent {
                edges.insert((i, j));
            }
        }
    }
    let edges: Vec<_> = edges.into_iter().collect();
    Graph::from_edges(n, &edges).unwrap()
}

/// Oracle chromatic index: smallest k admitting a proper total edge
/// coloring, found by unpruned backtracking over the natural edge order
/// (conflicts checked by scanning the partial assignment, first unused
/// color capped for symmetry only).
pub fn oracle_chromatic_index(g: &Graph) -> usize {
    let edges = g.edges();
    if edges.is_empty() {
        return 0;
    }
    let delta = g.max_degree();
    for k in delta..=delta + 1 {
        let mut colors = vec![0usize; edges.len()];
        if oracle_color(&edges, &mut colors, 0, k) {
            return k;
        }
    }
    unreachable!("a (Delta + 1)-coloring always exists");
}

fn oracle_color(edges: &[(usize, usize)], colors: &mut [usize], idx: usize, k: usize) -> bool {
    if idx == edges.len() {
        return true;
    }
    let max_used = colors[..idx].iter().copied().max().unwrap_or(0);
    let (u, v) = edges[idx];
    for c in 1..=k.min(max_used + 1) {
        let clash = edges[..idx].iter().zip(colors.iter()).any(|(&(a, b), &col)| {
            col == c && (a == u || a == v || b == u || b == v)
        });
        if !clash {
            colors[idx] = c;
            if oracle_color(edges, colors, idx + 1, k) {
                return true;
            }
            colors[idx] = 0;
        }
    }
    false
}

/// Oracle independence number: direct maximum over all vertex subsets.
pub fn oracle_alpha(g: &Graph) -> usize {
    let n = g.n();
    assert!(n <= 20);
    let edges = g.edges();
    let mut best = 0;
    for mask in 0u64..(1 << n) {
        if edges
            .iter()
            .any(|&(u, v)| mask >> u & 1 == 1 && mask >> v & 1 == 1)
        {
            continue;
        }
        best = best.max(mask.count_ones() as usize);
    }
    best
}

/// Independent properness scanner: collects incident colors per vertex
/// straight from the assignment list and looks for duplicates.
pub fn oracle_is_proper(g: &Graph, c: &EdgeColoring) -> bool {
    let mut at_vertex: Vec<Vec<usize>> = vec![Vec::new(); g.n()];
    for (u, v, col) in c.assignments() {
        if !g.has_edge(u, v) {
            return false;
        }
        at_vertex[u].push(col);
        at_vertex[v].push(col);
    }
    at_vertex.iter().all(|cols| {
        let set: BTreeSet<_> = cols.iter().collect();
        set.len() == cols.len()
    })
}

pub fn seeded_rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}
