//! Simple undirected graphs on vertices `0..n-1`.
//!
//! Graphs are immutable after construction; edge deletion returns a new
//! value so that derived colorings of `G - xy` can be held alongside `G`.

use crate::error::{Error, Result};

/// Hard cap on the vertex count. Corpus work targets n <= 16; the cap
/// exists so bit-level structures can assume bounded indices.
pub const MAX_VERTICES: usize = 1024;

/// A simple undirected graph: no loops, no parallel edges.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Graph {
    n: usize,
    adj: Vec<Vec<bool>>,
    neighbors: Vec<Vec<usize>>,
}

/// Degree statistics of a graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeProfile {
    pub min_degree: usize,
    pub max_degree: usize,
    /// Degree of each vertex, indexed by vertex.
    pub degree_sequence: Vec<usize>,
}

impl Graph {
    /// An edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        if n == 0 || n > MAX_VERTICES {
            return Err(Error::TooLarge(n, MAX_VERTICES));
        }
        Ok(Graph {
            n,
            adj: vec![vec![false; n]; n],
            neighbors: vec![Vec::new(); n],
        })
    }

    /// Build a graph from an edge list.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            g.insert_edge(u, v)?;
        }
        Ok(g)
    }

    fn insert_edge(&mut self, u: usize, v: usize) -> Result<()> {
        if u >= self.n {
            return Err(Error::VertexOutOfRange(u, self.n));
        }
        if v >= self.n {
            return Err(Error::VertexOutOfRange(v, self.n));
        }
        if u == v || self.adj[u][v] {
            return Err(Error::AlreadyAnEdge(u, v));
        }
        self.adj[u][v] = true;
        self.adj[v][u] = true;
        self.neighbors[u].push(v);
        self.neighbors[v].push(u);
        self.neighbors[u].sort_unstable();
        self.neighbors[v].sort_unstable();
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u][v]
    }

    /// Neighbors of `v` in increasing order.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.neighbors[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.neighbors[v].len()
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn edge_count(&self) -> usize {
        self.neighbors.iter().map(|ns| ns.len()).sum::<usize>() / 2
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for &v in &self.neighbors[u] {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn degree_profile(&self) -> DegreeProfile {
        let seq: Vec<usize> = (0..self.n).map(|v| self.degree(v)).collect();
        DegreeProfile {
            min_degree: seq.iter().copied().min().unwrap_or(0),
            max_degree: seq.iter().copied().max().unwrap_or(0),
            degree_sequence: seq,
        }
    }

    /// `G - uv`: the same vertex set with the edge `uv` removed.
    pub fn delete_edge(&self, u: usize, v: usize) -> Result<Graph> {
        if !self.has_edge(u, v) {
            return Err(Error::NotAnEdge(u, v));
        }
        let mut g = self.clone();
        g.adj[u][v] = false;
        g.adj[v][u] = false;
        g.neighbors[u].retain(|&w| w != v);
        g.neighbors[v].retain(|&w| w != u);
        Ok(g)
    }

    /// Re-add an edge; inverse of [`Graph::delete_edge`].
    pub fn add_edge(&self, u: usize, v: usize) -> Result<Graph> {
        let mut g = self.clone();
        g.insert_edge(u, v)?;
        Ok(g)
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let mut seen = vec![false; self.n];
        let mut stack = vec![0usize];
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for &w in &self.neighbors[v] {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count == self.n
    }

    /// Checks that a vertex set is independent; reports the first violating
    /// edge otherwise.
    pub fn check_independent(&self, set: &[usize]) -> Result<()> {
        for (i, &u) in set.iter().enumerate() {
            if u >= self.n {
                return Err(Error::VertexOutOfRange(u, self.n));
            }
            for &v in &set[i + 1..] {
                if self.has_edge(u, v) {
                    return Err(Error::NotIndependent(u.min(v), u.max(v)));
                }
            }
        }
        Ok(())
    }
}
