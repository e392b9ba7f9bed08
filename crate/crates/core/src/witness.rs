//! Witness families for `box(G) <= chi(G)` and the split interval
//! supergraphs they induce.
//!
//! A witness assigns each vertex `v_{i,j}` (class `i`, position `j`) a set
//! `X_{i,j}` with `N(v_{i,j}) ⊆ X_{i,j} ⊆ V \ V_i`. When
//!
//! 1. each class's sets descend up to the pivot `k(i)` and ascend after it,
//! 2. no nonadjacent pair from different classes sees itself in both of the
//!    other's sets,
//!
//! the supergraph `H_i` (add `v_{i,j} -- X_{i,j}`, make `V \ V_i` a clique)
//! is a split interval graph for every class, and the edge sets of all `H_i`
//! intersect to exactly `E(G)`. That gives one interval graph per color.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::coloring::ColorClasses;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::recognition::{is_interval, lemma23_premise, split_partition, SplitPartition};

/// Class sizes at or below this are arranged by exhaustive permutation search.
pub const EXHAUSTIVE_ARRANGEMENT_LIMIT: usize = 8;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessFamily {
    #[serde(rename = "classes")]
    pub coloring: ColorClasses,
    /// 1-based pivot per class.
    pub pivots: Vec<usize>,
    /// `x_sets[i][j]` belongs to `coloring.classes[i][j]`.
    pub x_sets: Vec<Vec<VertexSet>>,
}

impl WitnessFamily {
    pub fn num_classes(&self) -> usize {
        self.coloring.len()
    }

    fn check_shape(&self) -> Result<()> {
        let classes = &self.coloring.classes;
        if self.pivots.len() != classes.len() || self.x_sets.len() != classes.len() {
            return Err(Error::InvalidWitness(format!(
                "{} classes but {} pivots and {} x-set lists",
                classes.len(),
                self.pivots.len(),
                self.x_sets.len()
            )));
        }
        for (i, class) in classes.iter().enumerate() {
            if self.x_sets[i].len() != class.len() {
                return Err(Error::InvalidWitness(format!(
                    "class {} has {} vertices but {} x-sets",
                    i + 1,
                    class.len(),
                    self.x_sets[i].len()
                )));
            }
            if !(1..=class.len()).contains(&self.pivots[i]) {
                return Err(Error::InvalidWitness(format!(
                    "pivot {} of class {} outside 1..={}",
                    self.pivots[i],
                    i + 1,
                    class.len()
                )));
            }
        }
        Ok(())
    }
}

/// A vertex `v_{class,index}`, both 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Slot {
    pub class: usize,
    pub index: usize,
    pub vertex: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ContainmentIssue {
    /// Neighbors missing from the set.
    MissingNeighbors(Vec<usize>),
    /// Members of the vertex's own class present in the set.
    OwnClassMembers(Vec<usize>),
    /// Ids that are not vertices at all.
    OutOfRange(Vec<usize>),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ContainmentFailure {
    pub slot: Slot,
    pub issue: ContainmentIssue,
}

/// `X_{class,index}` and `X_{class,index+1}` break the chain shape.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChainFailure {
    pub class: usize,
    pub index: usize,
    /// `true` on the descending side (`X_index ⊇ X_index+1` failed).
    pub descending: bool,
}

/// Nonadjacent pair with each vertex inside the other's set.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExclusionFailure {
    pub first: Slot,
    pub second: Slot,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValidationReport {
    pub containment: Vec<ContainmentFailure>,
    pub chain: Vec<ChainFailure>,
    pub exclusion: Vec<ExclusionFailure>,
}

impl ValidationReport {
    pub fn containment_ok(&self) -> bool {
        self.containment.is_empty()
    }

    pub fn chain_ok(&self) -> bool {
        self.chain.is_empty()
    }

    pub fn exclusion_ok(&self) -> bool {
        self.exclusion.is_empty()
    }

    pub fn passes(&self) -> bool {
        self.containment_ok() && self.chain_ok() && self.exclusion_ok()
    }

    pub fn summary(&self) -> String {
        let mut parts = Vec::new();
        if let Some(f) = self.containment.first() {
            parts.push(format!(
                "{} containment failure(s), first at X_{{{},{}}}: {:?}",
                self.containment.len(),
                f.slot.class,
                f.slot.index,
                f.issue
            ));
        }
        if let Some(f) = self.chain.first() {
            parts.push(format!(
                "{} chain failure(s), first in class {} at index {}",
                self.chain.len(),
                f.class,
                f.index
            ));
        }
        if !self.exclusion.is_empty() {
            let pairs: Vec<String> = self
                .exclusion
                .iter()
                .map(|f| format!("({}, {})", f.first.vertex, f.second.vertex))
                .collect();
            parts.push(format!("exclusion fails for pair(s) {}", pairs.join(", ")));
        }
        parts.join("; ")
    }
}

/// Checks a witness family against `g`.
///
/// Errors only when the coloring is not proper or the family's shape does
/// not match it; otherwise every failure is collected into the report.
pub fn validate_witness(g: &Graph, w: &WitnessFamily) -> Result<ValidationReport> {
    w.coloring.check(g).map_err(Error::InvalidColoring)?;
    w.check_shape()?;
    let n = g.n();
    let pos = w.coloring.positions(n);
    let slot = |v: usize| {
        let (i, j) = pos[v].expect("proper coloring covers every vertex");
        Slot {
            class: i + 1,
            index: j + 1,
            vertex: v,
        }
    };
    let mut report = ValidationReport::default();

    for (i, class) in w.coloring.classes.iter().enumerate() {
        for (j, &v) in class.iter().enumerate() {
            let x = &w.x_sets[i][j];
            let s = slot(v);
            let outside: Vec<usize> = x.iter().copied().filter(|&y| y >= n).collect();
            if !outside.is_empty() {
                report.containment.push(ContainmentFailure {
                    slot: s,
                    issue: ContainmentIssue::OutOfRange(outside),
                });
            }
            let own: Vec<usize> = class.iter().copied().filter(|y| x.contains(y)).collect();
            if !own.is_empty() {
                report.containment.push(ContainmentFailure {
                    slot: s,
                    issue: ContainmentIssue::OwnClassMembers(own),
                });
            }
            let missing: Vec<usize> = g
                .neighbors(v)
                .iter()
                .copied()
                .filter(|y| !x.contains(y))
                .collect();
            if !missing.is_empty() {
                report.containment.push(ContainmentFailure {
                    slot: s,
                    issue: ContainmentIssue::MissingNeighbors(missing),
                });
            }
        }

        let xs = &w.x_sets[i];
        let pivot = w.pivots[i];
        for j in 0..xs.len().saturating_sub(1) {
            let (descending, ok) = if j + 1 < pivot {
                (true, xs[j + 1].is_subset(&xs[j]))
            } else if j + 1 > pivot {
                (false, xs[j].is_subset(&xs[j + 1]))
            } else {
                // X_pivot and X_pivot+1 are unrelated
                continue;
            };
            if !ok {
                report.chain.push(ChainFailure {
                    class: i + 1,
                    index: j + 1,
                    descending,
                });
            }
        }
    }

    let x_of = |v: usize| {
        let (i, j) = pos[v].unwrap();
        &w.x_sets[i][j]
    };
    for (u, v) in g.non_edges() {
        let (iu, iv) = (pos[u].unwrap().0, pos[v].unwrap().0);
        if iu != iv && x_of(u).contains(&v) && x_of(v).contains(&u) {
            report.exclusion.push(ExclusionFailure {
                first: slot(u),
                second: slot(v),
            });
        }
    }
    Ok(report)
}

fn require_valid(g: &Graph, w: &WitnessFamily) -> Result<()> {
    let report = validate_witness(g, w)?;
    if report.passes() {
        Ok(())
    } else {
        Err(Error::WitnessRejected(report.summary()))
    }
}

fn build_member(g: &Graph, w: &WitnessFamily, i: usize) -> (Graph, SplitPartition) {
    let class = w.coloring.class(i);
    let independent: VertexSet = class.iter().copied().collect();
    let clique: VertexSet = (0..g.n()).filter(|v| !independent.contains(v)).collect();
    let added = class
        .iter()
        .zip(&w.x_sets[i])
        .flat_map(|(&v, x)| x.iter().map(move |&y| (v, y)));
    let within = clique
        .iter()
        .flat_map(|&x| clique.range(x + 1..).map(move |&y| (x, y)));
    let h = g
        .with_edges(added.chain(within))
        .expect("validated witness only names vertices of g");
    (h, SplitPartition { independent, clique })
}

/// The supergraph `H_i` for the 0-based class index `i`, with its split
/// partition (`V_i` independent, the rest a clique).
pub fn build_h(g: &Graph, w: &WitnessFamily, i: usize) -> Result<(Graph, SplitPartition)> {
    require_valid(g, w)?;
    if i >= w.num_classes() {
        return Err(Error::InvalidParams(format!(
            "class index {i} out of range for {} classes",
            w.num_classes()
        )));
    }
    Ok(build_member(g, w, i))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyMember {
    pub graph: Graph,
    pub partition: SplitPartition,
    /// Whether the nested-neighborhood sufficient condition held too. It is
    /// sufficient only, so `false` here is informational.
    pub premise_holds: bool,
}

/// Verified split interval supergraphs whose edge sets intersect to `E(G)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SplitIntervalFamily {
    pub members: Vec<FamilyMember>,
}

impl SplitIntervalFamily {
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}

/// Checks that the members' edge sets intersect to exactly `E(g)`.
pub fn check_intersection(g: &Graph, members: &[Graph]) -> Result<()> {
    for (k, h) in members.iter().enumerate() {
        if h.n() != g.n() {
            return Err(Error::DomainMismatch(format!(
                "member {} has {} vertices, graph has {}",
                k + 1,
                h.n(),
                g.n()
            )));
        }
        if let Some((u, v)) = g.edges().find(|&(u, v)| !h.has_edge(u, v)) {
            return Err(Error::IntersectionMismatch(u, v, "is an edge missing from a member"));
        }
    }
    if let Some((u, v)) = g
        .non_edges()
        .into_iter()
        .find(|&(u, v)| members.iter().all(|h| h.has_edge(u, v)))
    {
        return Err(Error::IntersectionMismatch(u, v, "is a non-edge surviving in every member"));
    }
    Ok(())
}

/// Builds and verifies every `H_i`.
///
/// Each member must pass the split partition check, the split recognizer
/// and the interval recognizer; the edge intersection must equal `E(g)`.
pub fn build_family(g: &Graph, w: &WitnessFamily) -> Result<SplitIntervalFamily> {
    require_valid(g, w)?;
    let members: Vec<FamilyMember> = (0..w.num_classes())
        .into_par_iter()
        .map(|i| {
            let (graph, partition) = build_member(g, w, i);
            partition
                .validate(&graph)
                .map_err(|_| Error::MemberNotInterval { member: i + 1, property: "split" })?;
            if split_partition(&graph).is_none() {
                return Err(Error::MemberNotInterval { member: i + 1, property: "split" });
            }
            if !is_interval(&graph) {
                return Err(Error::MemberNotInterval { member: i + 1, property: "interval" });
            }
            let premise_holds = lemma23_premise(&graph, &partition)?;
            Ok(FamilyMember {
                graph,
                partition,
                premise_holds,
            })
        })
        .collect::<Result<_>>()?;
    let graphs: Vec<Graph> = members.iter().map(|m| m.graph.clone()).collect();
    check_intersection(g, &graphs)?;
    Ok(SplitIntervalFamily { members })
}

/// Arrangement of one class: member order and 1-based pivot.
pub type Arrangement = (Vec<usize>, usize);

fn chain_shape_holds(sets: &[&VertexSet], pivot: usize) -> bool {
    (0..sets.len().saturating_sub(1)).all(|j| {
        if j + 1 < pivot {
            sets[j + 1].is_subset(sets[j])
        } else if j + 1 > pivot {
            sets[j].is_subset(sets[j + 1])
        } else {
            true
        }
    })
}

/// Exhaustive arrangement search: permutations of `class` in lexicographic
/// order (starting from ascending ids), pivots ascending, first hit wins.
pub fn arrange_exhaustive(g: &Graph, class: &[usize]) -> Option<Arrangement> {
    let mut perm: Vec<usize> = class.to_vec();
    perm.sort_unstable();
    if perm.is_empty() {
        return None;
    }
    let nbhd: Vec<VertexSet> = (0..g.n()).map(|v| g.neighbor_set(v)).collect();
    loop {
        let sets: Vec<&VertexSet> = perm.iter().map(|&v| &nbhd[v]).collect();
        if let Some(pivot) = (1..=perm.len()).find(|&p| chain_shape_holds(&sets, p)) {
            return Some((perm, pivot));
        }
        if !next_permutation(&mut perm) {
            return None;
        }
    }
}

fn next_permutation(xs: &mut [usize]) -> bool {
    let Some(i) = (1..xs.len()).rev().find(|&i| xs[i - 1] < xs[i]) else {
        return false;
    };
    let j = (i..xs.len()).rev().find(|&j| xs[j] > xs[i - 1]).unwrap();
    xs.swap(i - 1, j);
    xs[i..].reverse();
    true
}

/// Arrangement via a two-chain cover of the neighborhood inclusion preorder.
///
/// The chain shape only relates sets on the same side of the pivot, so an
/// arrangement exists iff the neighborhoods split into two inclusion chains,
/// i.e. iff the incomparability graph is bipartite. The side holding the
/// smallest vertex of each component becomes the descending chain.
pub fn arrange_by_chains(g: &Graph, class: &[usize]) -> Option<Arrangement> {
    let mut members: Vec<usize> = class.to_vec();
    members.sort_unstable();
    if members.is_empty() {
        return None;
    }
    let nbhd: Vec<VertexSet> = members.iter().map(|&v| g.neighbor_set(v)).collect();
    let m = members.len();
    let incomparable =
        |a: usize, b: usize| !nbhd[a].is_subset(&nbhd[b]) && !nbhd[b].is_subset(&nbhd[a]);
    let mut side = vec![None; m];
    for start in 0..m {
        if side[start].is_some() {
            continue;
        }
        side[start] = Some(false);
        let mut stack = vec![start];
        while let Some(a) = stack.pop() {
            for b in 0..m {
                if b == a || !incomparable(a, b) {
                    continue;
                }
                match side[b] {
                    None => {
                        side[b] = Some(!side[a].unwrap());
                        stack.push(b);
                    }
                    Some(s) if s == side[a].unwrap() => return None,
                    Some(_) => {}
                }
            }
        }
    }
    let mut desc: Vec<usize> = (0..m).filter(|&a| side[a] == Some(false)).collect();
    let mut asc: Vec<usize> = (0..m).filter(|&a| side[a] == Some(true)).collect();
    desc.sort_by(|&a, &b| nbhd[b].len().cmp(&nbhd[a].len()).then(a.cmp(&b)));
    asc.sort_by(|&a, &b| nbhd[a].len().cmp(&nbhd[b].len()).then(a.cmp(&b)));
    let pivot = desc.len();
    let order = desc.into_iter().chain(asc).map(|a| members[a]).collect();
    Some((order, pivot))
}

/// Witness with `X = N` after reordering each class into a descending then
/// ascending neighborhood chain, or `None` if some class admits no such
/// order. Exact neighborhoods satisfy the exclusion condition automatically.
pub fn from_neighborhoods(g: &Graph, c: &ColorClasses) -> Result<Option<WitnessFamily>> {
    c.check(g).map_err(Error::InvalidColoring)?;
    let mut classes = Vec::with_capacity(c.len());
    let mut pivots = Vec::with_capacity(c.len());
    let mut x_sets = Vec::with_capacity(c.len());
    for class in &c.classes {
        let found = if class.len() <= EXHAUSTIVE_ARRANGEMENT_LIMIT {
            arrange_exhaustive(g, class)
        } else {
            arrange_by_chains(g, class)
        };
        let Some((order, pivot)) = found else {
            return Ok(None);
        };
        x_sets.push(order.iter().map(|&v| g.neighbor_set(v)).collect());
        classes.push(order);
        pivots.push(pivot);
    }
    Ok(Some(WitnessFamily {
        coloring: ColorClasses::new(classes),
        pivots,
        x_sets,
    }))
}
