//! Chordal, split, asteroidal-triple and interval recognition.

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// Perfect elimination ordering from maximum cardinality search, or `None`
/// when the graph is not chordal.
///
/// Search picks the unnumbered vertex with the most numbered neighbors, ties to
/// the lowest id; the elimination ordering is the reverse of the visit order.
pub fn perfect_elimination_ordering(g: &Graph) -> Option<Vec<usize>> {
    let n = g.n();
    let mut weight = vec![0usize; n];
    let mut numbered = vec![false; n];
    let mut visit = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| !numbered[v])
            .max_by(|&a, &b| weight[a].cmp(&weight[b]).then(b.cmp(&a)))
            .expect("an unnumbered vertex remains");
        numbered[v] = true;
        visit.push(v);
        for &w in g.neighbors(v) {
            if !numbered[w] {
                weight[w] += 1;
            }
        }
    }
    visit.reverse();
    is_perfect_elimination_ordering(g, &visit).then_some(visit)
}

/// Checks that the later neighbors of each vertex in `order` form a clique.
pub fn is_perfect_elimination_ordering(g: &Graph, order: &[usize]) -> bool {
    let n = g.n();
    if order.len() != n {
        return false;
    }
    let mut pos = vec![usize::MAX; n];
    for (i, &v) in order.iter().enumerate() {
        if v >= n || pos[v] != usize::MAX {
            return false;
        }
        pos[v] = i;
    }
    order.iter().all(|&v| {
        let later: Vec<usize> = g
            .neighbors(v)
            .iter()
            .copied()
            .filter(|&w| pos[w] > pos[v])
            .collect();
        // the earliest later neighbor must see all the others
        match later.iter().copied().min_by_key(|&w| pos[w]) {
            None => true,
            Some(parent) => later
                .iter()
                .all(|&w| w == parent || g.has_edge(parent, w)),
        }
    })
}

pub fn is_chordal(g: &Graph) -> bool {
    perfect_elimination_ordering(g).is_some()
}

/// Maximal cliques of a chordal graph read off a perfect elimination
/// ordering, sorted lexicographically.
pub fn maximal_cliques(g: &Graph, peo: &[usize]) -> Vec<VertexSet> {
    let mut pos = vec![0; g.n()];
    for (i, &v) in peo.iter().enumerate() {
        pos[v] = i;
    }
    let candidates: Vec<VertexSet> = peo
        .iter()
        .map(|&v| {
            let mut c: VertexSet = g
                .neighbors(v)
                .iter()
                .copied()
                .filter(|&w| pos[w] > pos[v])
                .collect();
            c.insert(v);
            c
        })
        .collect();
    let mut out: Vec<VertexSet> = candidates
        .iter()
        .enumerate()
        .filter(|(i, c)| {
            !candidates
                .iter()
                .enumerate()
                .any(|(j, d)| j != *i && c.is_subset(d) && (c.len() < d.len() || j < *i))
        })
        .map(|(_, c)| c.clone())
        .collect();
    out.sort();
    out
}

/// Partition of the vertex set into an independent set and a clique.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SplitPartition {
    pub independent: VertexSet,
    pub clique: VertexSet,
}

impl SplitPartition {
    pub fn validate(&self, g: &Graph) -> Result<()> {
        if let Some(v) = self.independent.intersection(&self.clique).next() {
            return Err(Error::InvalidPartition(format!("vertex {v} is on both sides")));
        }
        let covered = self.independent.len() + self.clique.len();
        let in_range = self
            .independent
            .iter()
            .chain(&self.clique)
            .all(|&v| v < g.n());
        if covered != g.n() || !in_range {
            return Err(Error::InvalidPartition(format!(
                "sides do not cover the {} vertices exactly",
                g.n()
            )));
        }
        if !g.is_independent(&self.independent) {
            return Err(Error::InvalidPartition("independent side has an edge".into()));
        }
        if !g.is_clique(&self.clique) {
            return Err(Error::InvalidPartition("clique side misses an edge".into()));
        }
        Ok(())
    }
}

/// Split partition of `g`, or `None` when `g` is not split.
///
/// `g` is split iff both it and its complement are chordal; the partition
/// then uses some maximal clique of `g` as its clique side. Clique vertices
/// with no neighbor on the independent side are moved across afterwards, in
/// ascending id order.
pub fn split_partition(g: &Graph) -> Option<SplitPartition> {
    let peo = perfect_elimination_ordering(g)?;
    if !is_chordal(&g.complement()) {
        return None;
    }
    let mut cliques = maximal_cliques(g, &peo);
    if cliques.is_empty() {
        cliques.push(VertexSet::new());
    }
    // largest first, then lexicographic
    cliques.sort_by(|a, b| b.len().cmp(&a.len()).then_with(|| a.cmp(b)));
    let all: VertexSet = (0..g.n()).collect();
    let mut part = cliques.into_iter().find_map(|clique| {
        let independent: VertexSet = all.difference(&clique).copied().collect();
        g.is_independent(&independent)
            .then_some(SplitPartition { independent, clique })
    })?;
    let movable: Vec<usize> = part.clique.iter().copied().collect();
    for v in movable {
        if g.neighbors(v).iter().all(|w| !part.independent.contains(w)) {
            part.clique.remove(&v);
            part.independent.insert(v);
        }
    }
    Some(part)
}

pub fn is_split(g: &Graph) -> bool {
    split_partition(g).is_some()
}

/// An asteroidal triple, with one witness path per pair.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ATriple {
    pub u: usize,
    pub v: usize,
    pub w: usize,
    /// Paths `u..v`, `v..w`, `w..u`; the path between two members avoids
    /// the neighborhood of the third.
    pub paths: Option<[Vec<usize>; 3]>,
}

impl ATriple {
    pub fn vertices(&self) -> [usize; 3] {
        [self.u, self.v, self.w]
    }
}

/// Component labels of `g - N[w]`; vertices in `N[w]` get `None`.
fn components_avoiding(g: &Graph, w: usize) -> Vec<Option<usize>> {
    let n = g.n();
    let mut label = vec![None; n];
    let mut blocked = vec![false; n];
    blocked[w] = true;
    for &x in g.neighbors(w) {
        blocked[x] = true;
    }
    let mut next = 0;
    for start in 0..n {
        if blocked[start] || label[start].is_some() {
            continue;
        }
        label[start] = Some(next);
        let mut stack = vec![start];
        while let Some(x) = stack.pop() {
            for &y in g.neighbors(x) {
                if !blocked[y] && label[y].is_none() {
                    label[y] = Some(next);
                    stack.push(y);
                }
            }
        }
        next += 1;
    }
    label
}

/// Shortest path from `from` to `to` in `g - N[avoid]`. Neighbors are
/// scanned in ascending order, so each vertex keeps the earliest-discovered
/// predecessor.
pub fn path_avoiding(g: &Graph, from: usize, to: usize, avoid: usize) -> Option<Vec<usize>> {
    let n = g.n();
    let mut blocked = vec![false; n];
    blocked[avoid] = true;
    for &x in g.neighbors(avoid) {
        blocked[x] = true;
    }
    if blocked[from] || blocked[to] {
        return None;
    }
    let mut pred = vec![usize::MAX; n];
    pred[from] = from;
    let mut queue = VecDeque::from([from]);
    while let Some(x) = queue.pop_front() {
        if x == to {
            let mut path = vec![to];
            let mut cur = to;
            while cur != from {
                cur = pred[cur];
                path.push(cur);
            }
            path.reverse();
            return Some(path);
        }
        for &y in g.neighbors(x) {
            if !blocked[y] && pred[y] == usize::MAX {
                pred[y] = x;
                queue.push_back(y);
            }
        }
    }
    None
}

/// Checks one triple and attaches witness paths when it is asteroidal.
pub fn check_triple(g: &Graph, u: usize, v: usize, w: usize) -> Option<ATriple> {
    if u == v || v == w || u == w {
        return None;
    }
    let uv = path_avoiding(g, u, v, w)?;
    let vw = path_avoiding(g, v, w, u)?;
    let wu = path_avoiding(g, w, u, v)?;
    Some(ATriple {
        u,
        v,
        w,
        paths: Some([uv, vw, wu]),
    })
}

/// Asteroidal triples `u < v < w` in lexicographic order. With
/// `find_all == false` the search stops after the first one.
///
/// A triple is asteroidal iff each pair lies in one component of the graph
/// with the closed neighborhood of the third vertex removed. A path that
/// avoids the open neighborhood of `w` cannot pass through `w` either, so
/// this is the same as asking for paths avoiding `N(w)`.
pub fn asteroidal_triples(g: &Graph, find_all: bool) -> Vec<ATriple> {
    let n = g.n();
    let comps: Vec<Vec<Option<usize>>> = (0..n).map(|w| components_avoiding(g, w)).collect();
    let together = |a: usize, b: usize, w: usize| {
        comps[w][a].is_some() && comps[w][a] == comps[w][b]
    };
    let mut out = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if g.has_edge(u, v) {
                continue;
            }
            for w in v + 1..n {
                if together(u, v, w) && together(v, w, u) && together(w, u, v) {
                    out.push(check_triple(g, u, v, w).expect("component criterion implies paths"));
                    if !find_all {
                        return out;
                    }
                }
            }
        }
    }
    out
}

pub fn has_asteroidal_triple(g: &Graph) -> bool {
    !asteroidal_triples(g, false).is_empty()
}

/// Interval graphs are exactly the chordal graphs without asteroidal triples.
pub fn is_interval(g: &Graph) -> bool {
    is_chordal(g) && !has_asteroidal_triple(g)
}

/// Sufficient condition for a split graph to be interval: among any three
/// vertices of the independent side, two have nested neighborhoods.
pub fn lemma23_premise(g: &Graph, p: &SplitPartition) -> Result<bool> {
    p.validate(g)?;
    let s: Vec<usize> = p.independent.iter().copied().collect();
    let nbhd: Vec<VertexSet> = s.iter().map(|&v| g.neighbor_set(v)).collect();
    let comparable = |a: usize, b: usize| nbhd[a].is_subset(&nbhd[b]) || nbhd[b].is_subset(&nbhd[a]);
    for a in 0..s.len() {
        for b in a + 1..s.len() {
            if comparable(a, b) {
                continue;
            }
            for c in b + 1..s.len() {
                if !comparable(a, c) && !comparable(b, c) {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::generate;

    fn set(vs: &[usize]) -> VertexSet {
        vs.iter().copied().collect()
    }

    fn g62() -> Graph {
        Graph::from_fn(6, |u, v| (2..=4).contains(&((v + 6 - u) % 6)))
    }

    fn star3() -> Graph {
        Graph::new(4, &[(0, 1), (0, 2), (0, 3)]).unwrap()
    }

    #[test]
    fn chordal_examples() {
        let k4 = generate("complete", &[4]).unwrap();
        let peo = perfect_elimination_ordering(&k4).unwrap();
        assert!(is_perfect_elimination_ordering(&k4, &peo));
        assert!(!is_chordal(&generate("cycle", &[4]).unwrap()));
        assert!(!is_chordal(&g62()));
        let (c, _) = g62().induced(&set(&[0, 1, 3, 4])).unwrap();
        assert!(c.is_cycle_graph());
    }

    #[test]
    fn split_examples() {
        let p = split_partition(&star3()).unwrap();
        assert_eq!(p.independent, set(&[1, 2, 3]));
        assert_eq!(p.clique, set(&[0]));
        assert!(split_partition(&generate("cycle", &[5]).unwrap()).is_none());

        // H_1 of G_{6,2}: non-edges exactly 01, 05, 12
        let h1 = Graph::from_fn(6, |u, v| !matches!((u, v), (0, 1) | (0, 5) | (1, 2)));
        let p = split_partition(&h1).unwrap();
        assert_eq!(p.independent, set(&[0, 1]));
        assert_eq!(p.clique, set(&[2, 3, 4, 5]));
    }

    #[test]
    fn split_needs_fallback_past_the_first_maximum_clique() {
        // P4: the maximum clique {0,1} leaves the edge 23 on the other side
        let p4 = generate("path", &[4]).unwrap();
        let p = split_partition(&p4).unwrap();
        p.validate(&p4).unwrap();
        assert_eq!(p.clique, set(&[1, 2]));
    }

    #[test]
    fn split_degenerate() {
        let p = split_partition(&Graph::empty(3)).unwrap();
        assert_eq!(p.independent, set(&[0, 1, 2]));
        assert!(p.clique.is_empty());
        let p = split_partition(&Graph::empty(0)).unwrap();
        assert!(p.independent.is_empty() && p.clique.is_empty());
    }

    #[test]
    fn partition_validation_errors() {
        let g = star3();
        let bad = SplitPartition {
            independent: set(&[0, 1]),
            clique: set(&[2, 3]),
        };
        assert!(matches!(bad.validate(&g), Err(Error::InvalidPartition(_))));
        let short = SplitPartition {
            independent: set(&[1, 2]),
            clique: set(&[0]),
        };
        assert!(short.validate(&g).is_err());
        assert!(lemma23_premise(&g, &short).is_err());
    }

    #[test]
    fn at_examples() {
        assert!(asteroidal_triples(&star3(), true).is_empty());

        // spider: center 0, legs 0-1-2, 0-3-4, 0-5-6
        let spider =
            Graph::new(7, &[(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6)]).unwrap();
        let ats = asteroidal_triples(&spider, true);
        assert_eq!(ats.iter().map(ATriple::vertices).collect::<Vec<_>>(), vec![[2, 4, 6]]);
        assert_eq!(
            ats[0].paths,
            Some([vec![2, 1, 0, 3, 4], vec![4, 3, 0, 5, 6], vec![6, 5, 0, 1, 2]])
        );

        let g93 = Graph::from_fn(9, |u, v| (3..=6).contains(&((v + 9 - u) % 9)));
        let ats = asteroidal_triples(&g93, true);
        assert!(ats.iter().any(|t| t.vertices() == [1, 2, 3]));
        assert_eq!(asteroidal_triples(&g93, false).len(), 1);
    }

    #[test]
    fn interval_examples() {
        assert!(is_interval(&generate("path", &[4]).unwrap()));
        assert!(!is_interval(&generate("cycle", &[4]).unwrap()));
        let c6 = generate("cycle", &[6]).unwrap();
        assert!(!is_interval(&c6));
        assert!(check_triple(&c6, 0, 2, 4).is_some());
    }

    #[test]
    fn premise_examples() {
        // clique {0,1,2}, S = {3,4,5}
        let mk = |nbhds: [&[usize]; 3]| {
            let mut edges = vec![(0, 1), (1, 2), (0, 2)];
            for (i, nb) in nbhds.iter().enumerate() {
                edges.extend(nb.iter().map(|&k| (3 + i, k)));
            }
            let g = Graph::new(6, &edges).unwrap();
            let p = SplitPartition {
                independent: set(&[3, 4, 5]),
                clique: set(&[0, 1, 2]),
            };
            (g, p)
        };
        let (g, p) = mk([&[0, 1], &[1], &[2]]);
        assert!(lemma23_premise(&g, &p).unwrap());
        let (g, p) = mk([&[0, 1], &[1, 2], &[2, 0]]);
        assert!(!lemma23_premise(&g, &p).unwrap());

        let p = split_partition(&generate("path", &[3]).unwrap()).unwrap();
        assert!(lemma23_premise(&generate("path", &[3]).unwrap(), &p).unwrap());
    }
}
