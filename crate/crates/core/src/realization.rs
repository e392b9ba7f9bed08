//! Interval models and box representations with integer endpoints.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::recognition::{maximal_cliques, perfect_elimination_ordering, SplitPartition};
use crate::witness::SplitIntervalFamily;

/// Closed interval `[lo, hi]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(into = "[i64; 2]", from = "[i64; 2]")]
pub struct Interval {
    pub lo: i64,
    pub hi: i64,
}

impl Interval {
    pub fn new(lo: i64, hi: i64) -> Self {
        debug_assert!(lo <= hi);
        Self { lo, hi }
    }

    pub fn point(x: i64) -> Self {
        Self { lo: x, hi: x }
    }

    /// Touching endpoints count as intersecting.
    pub fn intersects(&self, other: &Self) -> bool {
        self.lo <= other.hi && other.lo <= self.hi
    }
}

impl From<Interval> for [i64; 2] {
    fn from(i: Interval) -> Self {
        [i.lo, i.hi]
    }
}

impl From<[i64; 2]> for Interval {
    fn from([lo, hi]: [i64; 2]) -> Self {
        Self { lo, hi }
    }
}

/// One interval per vertex, indexed by vertex id.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntervalRealization {
    pub intervals: Vec<Interval>,
}

/// One box (a list of `k` intervals) per vertex, indexed by vertex id.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoxRepresentation {
    pub k: usize,
    pub boxes: Vec<Vec<Interval>>,
}

/// Point intervals for the independent side, centered intervals for the
/// clique side.
///
/// `order` lists the independent side so that neighborhoods descend up to
/// the 1-based `pivot` and ascend after it. Descending vertex `j` sits at
/// `-j`, ascending vertex `j` at `m - j + 1`; each clique vertex stretches
/// left to the farthest descending neighbor and right to the farthest
/// ascending one, always covering `0`.
pub fn realize_chain_split(
    h: &Graph,
    p: &SplitPartition,
    order: &[usize],
    pivot: usize,
) -> Result<IntervalRealization> {
    p.validate(h)?;
    let m = order.len();
    let listed: VertexSet = order.iter().copied().collect();
    if listed != p.independent || listed.len() != m {
        return Err(Error::ChainViolated(
            "order is not a permutation of the independent side".into(),
        ));
    }
    if pivot > m || (pivot == 0 && m > 0) {
        return Err(Error::ChainViolated(format!("pivot {pivot} outside 1..={m}")));
    }
    let nbhd: Vec<VertexSet> = order.iter().map(|&v| h.neighbor_set(v)).collect();
    for j in 0..m.saturating_sub(1) {
        let ok = if j + 1 < pivot {
            nbhd[j + 1].is_subset(&nbhd[j])
        } else if j + 1 > pivot {
            nbhd[j].is_subset(&nbhd[j + 1])
        } else {
            true
        };
        if !ok {
            return Err(Error::ChainViolated(format!(
                "neighborhoods of {} and {} are out of order",
                order[j],
                order[j + 1]
            )));
        }
    }

    let mut intervals = vec![Interval::point(0); h.n()];
    for (idx, &s) in order.iter().enumerate() {
        let j = idx as i64 + 1;
        intervals[s] = if idx < pivot {
            Interval::point(-j)
        } else {
            Interval::point(m as i64 - j + 1)
        };
    }
    for &x in &p.clique {
        let mut lo = 0;
        let mut hi = 0;
        for &s in order {
            if !h.has_edge(x, s) {
                continue;
            }
            let at = intervals[s].lo;
            lo = lo.min(at);
            hi = hi.max(at);
        }
        intervals[x] = Interval::new(lo, hi);
    }
    let r = IntervalRealization { intervals };
    if !verify_realization(h, &r)? {
        return Err(Error::RealizationMismatch(
            "chain realization disagrees with the graph".into(),
        ));
    }
    Ok(r)
}

struct CliqueArrangement<'a> {
    cliques: &'a [VertexSet],
    /// For each vertex, how many of its cliques are not yet placed.
    remaining: Vec<usize>,
    /// Vertices whose run of cliques has ended.
    closed: Vec<bool>,
    placed: Vec<bool>,
    order: Vec<usize>,
}

impl CliqueArrangement<'_> {
    fn search(&mut self) -> bool {
        if self.order.len() == self.cliques.len() {
            return true;
        }
        let last = self.order.last().map(|&c| &self.cliques[c]);
        for c in 0..self.cliques.len() {
            if self.placed[c] {
                continue;
            }
            let clique = &self.cliques[c];
            if clique.iter().any(|&v| self.closed[v]) {
                continue;
            }
            // an open vertex with cliques left must continue into this one
            if let Some(last) = last {
                if last
                    .iter()
                    .any(|v| self.remaining[*v] > 0 && !clique.contains(v))
                {
                    continue;
                }
            }
            let newly_closed: Vec<usize> = last
                .map(|l| l.iter().copied().filter(|v| !clique.contains(v) && !self.closed[*v]).collect())
                .unwrap_or_default();
            for &v in &newly_closed {
                self.closed[v] = true;
            }
            for &v in clique {
                self.remaining[v] -= 1;
            }
            self.placed[c] = true;
            self.order.push(c);
            if self.search() {
                return true;
            }
            self.order.pop();
            self.placed[c] = false;
            for &v in clique {
                self.remaining[v] += 1;
            }
            for &v in &newly_closed {
                self.closed[v] = false;
            }
        }
        false
    }
}

/// Interval model from a consecutive arrangement of maximal cliques, or
/// `None` when the graph is not an interval graph.
///
/// Vertex `v` gets `[first, last]`, the positions of the first and last
/// clique containing it. Isolated vertices are their own singleton cliques.
pub fn realize_interval(g: &Graph) -> Option<IntervalRealization> {
    let peo = perfect_elimination_ordering(g)?;
    let cliques = maximal_cliques(g, &peo);
    let mut remaining = vec![0; g.n()];
    for c in &cliques {
        for &v in c {
            remaining[v] += 1;
        }
    }
    let mut arr = CliqueArrangement {
        cliques: &cliques,
        remaining,
        closed: vec![false; g.n()],
        placed: vec![false; cliques.len()],
        order: Vec::with_capacity(cliques.len()),
    };
    if !arr.search() {
        return None;
    }
    let mut intervals = vec![Interval::point(0); g.n()];
    let mut seen = vec![false; g.n()];
    for (pos, &c) in arr.order.iter().enumerate() {
        for &v in &cliques[c] {
            let pos = pos as i64;
            if std::mem::replace(&mut seen[v], true) {
                intervals[v].hi = pos;
            } else {
                intervals[v] = Interval::point(pos);
            }
        }
    }
    Some(IntervalRealization { intervals })
}

/// True iff intervals intersect exactly on the edges of `g`.
pub fn verify_realization(g: &Graph, r: &IntervalRealization) -> Result<bool> {
    if r.intervals.len() != g.n() {
        return Err(Error::DomainMismatch(format!(
            "{} intervals for {} vertices",
            r.intervals.len(),
            g.n()
        )));
    }
    let iv = &r.intervals;
    if iv.iter().any(|i| i.lo > i.hi) {
        return Ok(false);
    }
    Ok((0..g.n()).all(|u| (u + 1..g.n()).all(|v| iv[u].intersects(&iv[v]) == g.has_edge(u, v))))
}

/// Box of `v` = product of its intervals across the family members.
pub fn assemble_boxes(
    g: &Graph,
    fam: &SplitIntervalFamily,
    realizations: &[IntervalRealization],
) -> Result<BoxRepresentation> {
    if realizations.len() != fam.len() {
        return Err(Error::DomainMismatch(format!(
            "{} realizations for {} members",
            realizations.len(),
            fam.len()
        )));
    }
    for (i, (m, r)) in fam.members.iter().zip(realizations).enumerate() {
        if !verify_realization(&m.graph, r)? {
            return Err(Error::RealizationMismatch(format!(
                "realization {} does not match member H_{}",
                i + 1,
                i + 1
            )));
        }
    }
    let boxes = (0..g.n())
        .map(|v| realizations.iter().map(|r| r.intervals[v]).collect())
        .collect();
    let b = BoxRepresentation { k: fam.len(), boxes };
    if !verify_boxes(g, &b)? {
        return Err(Error::RealizationMismatch(
            "assembled boxes do not realize the graph".into(),
        ));
    }
    Ok(b)
}

/// True iff boxes intersect (in every coordinate) exactly on the edges of `g`.
/// With `k = 0` every pair intersects, so only complete graphs pass.
pub fn verify_boxes(g: &Graph, b: &BoxRepresentation) -> Result<bool> {
    if b.boxes.len() != g.n() {
        return Err(Error::DomainMismatch(format!(
            "{} boxes for {} vertices",
            b.boxes.len(),
            g.n()
        )));
    }
    if let Some(v) = b.boxes.iter().position(|bx| bx.len() != b.k) {
        return Err(Error::DomainMismatch(format!(
            "box of vertex {v} has {} sides, expected {}",
            b.boxes[v].len(),
            b.k
        )));
    }
    let meets = |u: usize, v: usize| {
        b.boxes[u]
            .iter()
            .zip(&b.boxes[v])
            .all(|(x, y)| x.intersects(y))
    };
    Ok((0..g.n()).all(|u| (u + 1..g.n()).all(|v| meets(u, v) == g.has_edge(u, v))))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::generate;
    use crate::witness::{build_family, from_neighborhoods, WitnessFamily};
    use crate::coloring::ColorClasses;
    use crate::recognition::split_partition;

    fn set(vs: &[usize]) -> VertexSet {
        vs.iter().copied().collect()
    }

    fn iv(pairs: &[(i64, i64)]) -> IntervalRealization {
        IntervalRealization {
            intervals: pairs.iter().map(|&(l, h)| Interval::new(l, h)).collect(),
        }
    }

    fn h1_of_g62() -> (Graph, SplitPartition) {
        let h = Graph::from_fn(6, |u, v| !matches!((u, v), (0, 1) | (0, 5) | (1, 2)));
        let p = SplitPartition {
            independent: set(&[0, 1]),
            clique: set(&[2, 3, 4, 5]),
        };
        (h, p)
    }

    #[test]
    fn chain_split_examples() {
        let (h, p) = h1_of_g62();
        let r = realize_chain_split(&h, &p, &[0, 1], 1).unwrap();
        assert_eq!(r, iv(&[(-1, -1), (1, 1), (-1, 0), (-1, 1), (-1, 1), (0, 1)]));
        assert!(verify_realization(&h, &r).unwrap());

        let k4 = generate("complete", &[4]).unwrap();
        let p = SplitPartition {
            independent: VertexSet::new(),
            clique: set(&[0, 1, 2, 3]),
        };
        let r = realize_chain_split(&k4, &p, &[], 0).unwrap();
        assert_eq!(r, iv(&[(0, 0); 4]));

        let k4 = generate("complete", &[4]).unwrap();
        let p = SplitPartition {
            independent: set(&[0]),
            clique: set(&[1, 2, 3]),
        };
        let r = realize_chain_split(&k4, &p, &[0], 1).unwrap();
        assert_eq!(r, iv(&[(-1, -1), (-1, 0), (-1, 0), (-1, 0)]));
    }

    #[test]
    fn chain_split_rejects_bad_orders() {
        let (h, p) = h1_of_g62();
        assert!(matches!(
            realize_chain_split(&h, &p, &[0], 1),
            Err(Error::ChainViolated(_))
        ));
        assert!(realize_chain_split(&h, &p, &[0, 1], 3).is_err());
        // three pairwise incomparable neighborhoods cannot form two chains
        let mut edges = vec![(0, 1), (1, 2), (0, 2)];
        edges.extend([(3, 0), (3, 1), (4, 1), (4, 2), (5, 2), (5, 0)]);
        let g = Graph::new(6, &edges).unwrap();
        let p = split_partition(&g).unwrap();
        let order: Vec<usize> = p.independent.iter().copied().collect();
        for pivot in 1..=3 {
            assert!(matches!(
                realize_chain_split(&g, &p, &order, pivot),
                Err(Error::ChainViolated(_))
            ));
        }
    }

    #[test]
    fn realize_interval_examples() {
        let k2 = generate("complete", &[2]).unwrap();
        assert_eq!(realize_interval(&k2).unwrap(), iv(&[(0, 0), (0, 0)]));
        let star = Graph::new(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_eq!(
            realize_interval(&star).unwrap(),
            iv(&[(0, 2), (0, 0), (1, 1), (2, 2)])
        );
        assert!(realize_interval(&generate("cycle", &[4]).unwrap()).is_none());
        let r = realize_interval(&Graph::empty(3)).unwrap();
        assert!(verify_realization(&Graph::empty(3), &r).unwrap());
    }

    #[test]
    fn verify_realization_examples() {
        let p3 = generate("path", &[3]).unwrap();
        assert!(verify_realization(&p3, &iv(&[(0, 1), (1, 2), (2, 3)])).unwrap());
        assert!(!verify_realization(&p3, &iv(&[(0, 3), (1, 2), (2, 3)])).unwrap());
        assert!(matches!(
            verify_realization(&p3, &iv(&[(0, 1)])),
            Err(Error::DomainMismatch(_))
        ));
    }

    #[test]
    fn boxes_examples() {
        let k3 = generate("complete", &[3]).unwrap();
        let zero = BoxRepresentation { k: 0, boxes: vec![vec![]; 3] };
        assert!(verify_boxes(&k3, &zero).unwrap());
        assert!(!verify_boxes(&generate("path", &[3]).unwrap(), &zero).unwrap());

        let c4 = generate("cycle", &[4]).unwrap();
        let line = BoxRepresentation {
            k: 1,
            boxes: vec![
                vec![Interval::new(0, 1)],
                vec![Interval::new(1, 2)],
                vec![Interval::new(2, 3)],
                vec![Interval::new(3, 4)],
            ],
        };
        assert!(!verify_boxes(&c4, &line).unwrap());
        let ragged = BoxRepresentation { k: 1, boxes: vec![vec![]; 4] };
        assert!(verify_boxes(&c4, &ragged).is_err());

        let w = from_neighborhoods(&c4, &ColorClasses::new(vec![vec![0, 2], vec![1, 3]]))
            .unwrap()
            .unwrap();
        let fam = build_family(&c4, &w).unwrap();
        let reals: Vec<IntervalRealization> = fam
            .members
            .iter()
            .zip(&w.coloring.classes)
            .zip(&w.pivots)
            .map(|((m, order), &pivot)| realize_chain_split(&m.graph, &m.partition, order, pivot).unwrap())
            .collect();
        let b = assemble_boxes(&c4, &fam, &reals).unwrap();
        assert_eq!(b.k, 2);
        assert!(verify_boxes(&c4, &b).unwrap());
        assert!(assemble_boxes(&c4, &fam, &reals[..1]).is_err());
    }

    #[test]
    fn single_member_family_gives_intervals() {
        let p4 = generate("path", &[4]).unwrap();
        // one class is impossible for a graph with edges; use the empty graph
        let g = Graph::empty(3);
        let w = WitnessFamily {
            coloring: ColorClasses::new(vec![vec![0, 1, 2]]),
            pivots: vec![3],
            x_sets: vec![vec![VertexSet::new(); 3]],
        };
        let fam = build_family(&g, &w).unwrap();
        let m = &fam.members[0];
        let r = realize_chain_split(&m.graph, &m.partition, &[0, 1, 2], 3).unwrap();
        let b = assemble_boxes(&g, &fam, std::slice::from_ref(&r)).unwrap();
        assert_eq!(b.k, 1);
        assert_eq!(b.boxes, r.intervals.iter().map(|&i| vec![i]).collect::<Vec<_>>());
        assert!(realize_interval(&p4).is_some());
    }
}
