//! Partial proper edge colorings with per-vertex palettes.
//!
//! Colors are the integers `1..=k`, matching the `[1, Delta]` convention
//! used throughout the adjacency-lemma machinery. A coloring is a value:
//! every recoloring operation returns a new coloring and leaves the input
//! untouched.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// A partial proper edge coloring. Properness is structural: each vertex
/// maps each color to at most one neighbor.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct EdgeColoring {
    n: usize,
    k: usize,
    /// Per vertex: color -> the neighbor reached by the edge of that color.
    at: Vec<BTreeMap<usize, usize>>,
}

#[derive(Serialize)]
struct ColoringJson {
    k: usize,
    edges: Vec<(usize, usize, usize)>,
}

impl EdgeColoring {
    /// The empty coloring on `n` vertices with colors `1..=k`.
    pub fn new(n: usize, k: usize) -> Self {
        EdgeColoring {
            n,
            k,
            at: vec![BTreeMap::new(); n],
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// Reinterpret the coloring with a different number of available
    /// colors. Fails if an assigned color exceeds the new `k`.
    pub fn with_k(&self, k: usize) -> Result<Self> {
        for m in &self.at {
            if let Some((&c, _)) = m.iter().next_back() {
                if c > k {
                    return Err(Error::ColorOutOfRange(c, k));
                }
            }
        }
        let mut c = self.clone();
        c.k = k;
        Ok(c)
    }

    pub fn color_of(&self, u: usize, v: usize) -> Option<usize> {
        self.at[u]
            .iter()
            .find_map(|(&c, &w)| (w == v).then_some(c))
    }

    /// The neighbor reached from `v` by the edge colored `color`, if any.
    pub fn endpoint(&self, v: usize, color: usize) -> Option<usize> {
        self.at[v].get(&color).copied()
    }

    pub fn colored_count(&self) -> usize {
        self.at.iter().map(|m| m.len()).sum::<usize>() / 2
    }

    /// Colors present at `v`.
    pub fn present(&self, v: usize) -> BTreeSet<usize> {
        self.at[v].keys().copied().collect()
    }

    /// Colors missing at `v`: `[1, k]` minus the present set.
    pub fn missing(&self, v: usize) -> BTreeSet<usize> {
        (1..=self.k)
            .filter(|c| !self.at[v].contains_key(c))
            .collect()
    }

    pub fn is_missing(&self, v: usize, color: usize) -> bool {
        color >= 1 && color <= self.k && !self.at[v].contains_key(&color)
    }

    fn check_color(&self, color: usize) -> Result<()> {
        if color < 1 || color > self.k {
            return Err(Error::ColorOutOfRange(color, self.k));
        }
        Ok(())
    }

    fn set(&mut self, u: usize, v: usize, color: usize) {
        self.at[u].insert(color, v);
        self.at[v].insert(color, u);
    }

    fn unset(&mut self, u: usize, v: usize, color: usize) {
        debug_assert_eq!(self.at[u].get(&color), Some(&v));
        self.at[u].remove(&color);
        self.at[v].remove(&color);
    }

    /// Assign `color` to the uncolored edge `uv`.
    pub fn color_edge(&self, u: usize, v: usize, color: usize) -> Result<Self> {
        self.check_color(color)?;
        if self.color_of(u, v).is_some() {
            return Err(Error::AlreadyColored(u.min(v), u.max(v)));
        }
        for (w, blocking) in [(u, u), (v, v)] {
            if self.at[w].contains_key(&color) {
                return Err(Error::PropernessViolation {
                    u: u.min(v),
                    v: u.max(v),
                    color,
                    blocking,
                });
            }
        }
        let mut c = self.clone();
        c.set(u, v, color);
        Ok(c)
    }

    /// Remove the color from the edge `uv`.
    pub fn uncolor_edge(&self, u: usize, v: usize) -> Result<Self> {
        let color = self
            .color_of(u, v)
            .ok_or(Error::NotColored(u.min(v), u.max(v)))?;
        let mut c = self.clone();
        c.unset(u, v, color);
        Ok(c)
    }

    /// Exchange colors `alpha` and `beta` along the maximal
    /// (alpha, beta)-alternating path or cycle through `v`. If neither
    /// color is present at `v` the chain is empty and the input is
    /// returned unchanged.
    pub fn kempe_swap(&self, v: usize, alpha: usize, beta: usize) -> Result<Self> {
        self.check_color(alpha)?;
        self.check_color(beta)?;
        if alpha == beta {
            return Err(Error::EqualKempeColors(alpha));
        }
        let chain = self.kempe_chain(v, alpha, beta);
        let mut c = self.clone();
        for &(a, b, color) in &chain {
            c.unset(a, b, color);
        }
        for &(a, b, color) in &chain {
            let other = if color == alpha { beta } else { alpha };
            c.set(a, b, other);
        }
        Ok(c)
    }

    /// Edges of the maximal (alpha, beta)-chain through `v`, each with its
    /// current color.
    pub fn kempe_chain(&self, v: usize, alpha: usize, beta: usize) -> Vec<(usize, usize, usize)> {
        let mut edges = Vec::new();
        let mut seen = BTreeSet::new();
        // Walk away from v twice, once per color; a cycle is caught by the
        // seen-set.
        for start_color in [alpha, beta] {
            let mut at = v;
            let mut color = start_color;
            while let Some(&next) = self.at[at].get(&color) {
                let key = (at.min(next), at.max(next));
                if !seen.insert(key) {
                    break;
                }
                edges.push((key.0, key.1, color));
                at = next;
                color = if color == alpha { beta } else { alpha };
            }
        }
        edges
    }

    /// Vertices of the (alpha, beta)-chain through `v`, including `v`.
    pub fn kempe_chain_vertices(&self, v: usize, alpha: usize, beta: usize) -> BTreeSet<usize> {
        let mut verts = BTreeSet::from([v]);
        for (a, b, _) in self.kempe_chain(v, alpha, beta) {
            verts.insert(a);
            verts.insert(b);
        }
        verts
    }

    /// All colored edges as `(u, v, color)` with `u < v`, lexicographic.
    pub fn assignments(&self) -> Vec<(usize, usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for (&c, &v) in &self.at[u] {
                if u < v {
                    out.push((u, v, c));
                }
            }
        }
        out.sort_unstable();
        out
    }

    /// Full consistency scan against a graph: every colored pair is an
    /// edge of `g`, colors are in range, and no color repeats at a vertex.
    pub fn check_proper(&self, g: &Graph) -> Result<()> {
        for v in 0..self.n {
            for (&c, &w) in &self.at[v] {
                if c < 1 || c > self.k {
                    return Err(Error::ColorOutOfRange(c, self.k));
                }
                if !g.has_edge(v, w) {
                    return Err(Error::NotAnEdge(v.min(w), v.max(w)));
                }
                if self.at[w].get(&c) != Some(&v) {
                    return Err(Error::ImproperColoring { vertex: w, color: c });
                }
            }
        }
        Ok(())
    }

    /// True when every edge of `g` is colored.
    pub fn is_total(&self, g: &Graph) -> bool {
        self.colored_count() == g.edge_count()
            && g.edges().iter().all(|&(u, v)| self.color_of(u, v).is_some())
    }

    /// Serialization per the wire format: `{k, edges: [[u, v, color], ...]}`
    /// with edges sorted lexicographically.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(ColoringJson {
            k: self.k,
            edges: self.assignments(),
        })
        .expect("coloring serialization cannot fail")
    }
}
