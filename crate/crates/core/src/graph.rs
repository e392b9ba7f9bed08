//! Simple undirected graphs on the vertex set `0..n`.
//!
//! A [`Graph`] is immutable once built. Neighbor lists are kept sorted, so
//! every iterator and every derived list comes out in ascending order.

use std::collections::BTreeSet;

use crate::error::{Error, Result};

/// A set of vertex ids, iterated in ascending order.
pub type VertexSet = BTreeSet<usize>;

/// Simple undirected graph with sorted adjacency lists.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
}

impl Graph {
    /// Builds a graph from an edge list. Duplicate pairs (in either
    /// orientation) collapse to a single edge.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
        }
        Ok(Self { adj })
    }

    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Self {
            adj: vec![Vec::new(); n],
        }
    }

    /// Builds a graph from a symmetric adjacency predicate.
    pub fn from_fn(n: usize, mut adjacent: impl FnMut(usize, usize) -> bool) -> Self {
        let mut adj = vec![Vec::new(); n];
        for u in 0..n {
            for v in u + 1..n {
                if adjacent(u, v) {
                    adj[u].push(v);
                    adj[v].push(u);
                }
            }
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Self { adj }
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn num_edges(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// Sorted neighbors of `v`.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn neighbor_set(&self, v: usize) -> VertexSet {
        self.adj[v].iter().copied().collect()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && self.adj[u].binary_search(&v).is_ok()
    }

    /// All edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    /// All non-adjacent pairs `(u, v)` with `u < v`, in lexicographic order.
    pub fn non_edges(&self) -> Vec<(usize, usize)> {
        let n = self.n();
        let mut out = Vec::with_capacity(n * n.saturating_sub(1) / 2 - self.num_edges());
        for u in 0..n {
            let mut it = self.adj[u].iter().copied().peekable();
            for v in u + 1..n {
                while it.next_if(|&w| w < v).is_some() {}
                if it.peek() != Some(&v) {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn complement(&self) -> Self {
        Self::from_fn(self.n(), |u, v| !self.has_edge(u, v))
    }

    /// Returns a copy with the given pairs added as edges.
    pub fn with_edges(&self, extra: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut edges: Vec<(usize, usize)> = self.edges().collect();
        edges.extend(extra);
        Self::new(self.n(), &edges)
    }

    /// Subgraph induced on `vertices`. Vertex `k` of the result corresponds to
    /// the `k`-th smallest member of `vertices`; that map is returned alongside.
    pub fn induced(&self, vertices: &VertexSet) -> Result<(Self, Vec<usize>)> {
        if let Some(&v) = vertices.iter().next_back().filter(|&&v| v >= self.n()) {
            return Err(Error::VertexOutOfRange { vertex: v, n: self.n() });
        }
        let map: Vec<usize> = vertices.iter().copied().collect();
        let sub = Self::from_fn(map.len(), |a, b| self.has_edge(map[a], map[b]));
        Ok((sub, map))
    }

    pub fn is_clique(&self, set: &VertexSet) -> bool {
        set.iter()
            .all(|&u| set.range(u + 1..).all(|&v| self.has_edge(u, v)))
    }

    pub fn is_independent(&self, set: &VertexSet) -> bool {
        set.iter()
            .all(|&u| set.range(u + 1..).all(|&v| !self.has_edge(u, v)))
    }

    pub fn is_complete(&self) -> bool {
        let n = self.n();
        self.adj.iter().all(|list| list.len() + 1 == n)
    }

    /// Connected components as sorted vertex lists, ordered by smallest member.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n()];
        let mut out = Vec::new();
        for start in 0..self.n() {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut comp = vec![start];
            let mut stack = vec![start];
            while let Some(u) = stack.pop() {
                for &w in &self.adj[u] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        stack.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// True iff the graph is a single cycle: connected, 2-regular, `n >= 3`.
    pub fn is_cycle_graph(&self) -> bool {
        self.n() >= 3 && self.adj.iter().all(|l| l.len() == 2) && self.components().len() == 1
    }
}

/// Named graph families.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GeneratorKind {
    Complete,
    Path,
    Cycle,
    CompleteMultipartite,
    Crown,
}

impl std::str::FromStr for GeneratorKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "complete" => Self::Complete,
            "path" => Self::Path,
            "cycle" => Self::Cycle,
            "complete_multipartite" | "multipartite" => Self::CompleteMultipartite,
            "crown" => Self::Crown,
            other => return Err(Error::UnknownGenerator(other.to_string())),
        })
    }
}

fn single_param(kind: &str, params: &[usize], min: usize) -> Result<usize> {
    match params {
        [n] if *n >= min => Ok(*n),
        _ => Err(Error::InvalidParams(format!(
            "{kind} takes one parameter >= {min}, got {params:?}"
        ))),
    }
}

/// Builds a named graph.
///
/// | kind | params | graph |
/// |------|--------|-------|
/// | `complete` | `[n]` | K_n |
/// | `path` | `[n]` | path on n vertices |
/// | `cycle` | `[n]`, n >= 3 | C_n |
/// | `complete_multipartite` | part sizes | parts laid out consecutively |
/// | `crown` | `[n]`, n >= 2 | K_{n,n} minus the matching `i -- n+i` |
pub fn generate(kind: &str, params: &[usize]) -> Result<Graph> {
    let g = match kind.parse::<GeneratorKind>()? {
        GeneratorKind::Complete => {
            let n = single_param(kind, params, 1)?;
            Graph::from_fn(n, |_, _| true)
        }
        GeneratorKind::Path => {
            let n = single_param(kind, params, 1)?;
            Graph::from_fn(n, |u, v| v == u + 1)
        }
        GeneratorKind::Cycle => {
            let n = single_param(kind, params, 3)?;
            Graph::from_fn(n, |u, v| v == u + 1 || (u == 0 && v == n - 1))
        }
        GeneratorKind::CompleteMultipartite => {
            if params.is_empty() || params.contains(&0) {
                return Err(Error::InvalidParams(format!(
                    "complete_multipartite takes positive part sizes, got {params:?}"
                )));
            }
            let part: Vec<usize> = params
                .iter()
                .enumerate()
                .flat_map(|(i, &s)| std::iter::repeat_n(i, s))
                .collect();
            Graph::from_fn(part.len(), |u, v| part[u] != part[v])
        }
        GeneratorKind::Crown => {
            let n = single_param(kind, params, 2)?;
            Graph::from_fn(2 * n, |u, v| u < n && v >= n && v != u + n)
        }
    };
    Ok(g)
}
