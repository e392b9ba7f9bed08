//! Exact boxicity for small graphs.
//!
//! `box(G) <= k` iff there are `k` interval supergraphs of `G` on `V(G)`
//! whose edge sets intersect to `E(G)`. Call the non-edges of `G` that a
//! supergraph leaves absent its *excluded set*; the condition is that `k`
//! excluded sets cover every non-edge. Swapping an excluded set for any
//! superset that is itself excluded by some interval supergraph keeps the
//! cover, so it is enough to search over the inclusion-maximal excluded
//! sets. The catalog below enumerates every subset of non-edges, keeps those
//! whose addition yields an interval graph, and filters to maximal sets.
//!
//! Excluded sets are bitmasks over the indices of [`Graph::non_edges`].

use std::collections::HashSet;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::recognition::is_interval;

/// Default cap on the number of non-edges the subset enumeration accepts.
pub const DEFAULT_GUARD: usize = 20;

/// Environment variable overriding [`DEFAULT_GUARD`].
pub const GUARD_ENV: &str = "BOXKIT_GUARD";

/// [`DEFAULT_GUARD`] unless `BOXKIT_GUARD` holds a number.
pub fn guard_from_env() -> usize {
    std::env::var(GUARD_ENV)
        .ok()
        .and_then(|s| s.trim().parse().ok())
        .unwrap_or(DEFAULT_GUARD)
}

/// Inclusion-maximal excluded sets of the interval completions of a graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CompletionCatalog {
    pub graph: Graph,
    pub non_edges: Vec<(usize, usize)>,
    /// Sorted ascending; pairwise incomparable.
    pub entries: Vec<u64>,
}

impl CompletionCatalog {
    pub fn full_mask(&self) -> u64 {
        full_mask(self.non_edges.len())
    }

    pub fn excluded_pairs(&self, mask: u64) -> Vec<(usize, usize)> {
        self.non_edges
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &p)| p)
            .collect()
    }

    /// The supergraph that adds every non-edge outside `mask`.
    pub fn supergraph(&self, mask: u64) -> Graph {
        let added = self
            .non_edges
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 0)
            .map(|(_, &p)| p);
        self.graph.with_edges(added).expect("non-edges are in range")
    }
}

fn full_mask(m: usize) -> u64 {
    if m == 64 {
        u64::MAX
    } else {
        (1u64 << m) - 1
    }
}

/// Keeps the inclusion-maximal masks, sorted ascending.
pub fn maximal_sets(masks: impl IntoIterator<Item = u64>) -> Vec<u64> {
    let mut all: Vec<u64> = masks.into_iter().collect::<HashSet<_>>().into_iter().collect();
    all.sort_by(|a, b| b.count_ones().cmp(&a.count_ones()).then(a.cmp(b)));
    let mut kept: Vec<u64> = Vec::new();
    for m in all {
        if !kept.iter().any(|&k| m & k == m) {
            kept.push(m);
        }
    }
    kept.sort_unstable();
    kept
}

fn plus_mask(g: &Graph, non_edges: &[(usize, usize)], added: u64) -> Graph {
    let extra = non_edges
        .iter()
        .enumerate()
        .filter(|(i, _)| added >> i & 1 == 1)
        .map(|(_, &p)| p);
    g.with_edges(extra).expect("non-edges are in range")
}

/// Enumerates every subset of non-edges; guarded by `limit` non-edges.
pub fn interval_completions(g: &Graph, limit: usize) -> Result<CompletionCatalog> {
    let non_edges = g.non_edges();
    let m = non_edges.len();
    let limit = limit.min(40);
    if m > limit {
        return Err(Error::GuardExceeded {
            what: "non-edge count",
            actual: m,
            limit,
        });
    }
    let full = full_mask(m);
    // shard on the top bits of the added-edge mask
    let shard_bits = m.min(8);
    let low_bits = m - shard_bits;
    let excluded: Vec<u64> = (0u64..1 << shard_bits)
        .into_par_iter()
        .flat_map_iter(|prefix| {
            let found: Vec<u64> = (0u64..1 << low_bits)
                .map(|low| prefix << low_bits | low)
                .filter(|&added| is_interval(&plus_mask(g, &non_edges, added)))
                .map(|added| full & !added)
                .collect();
            maximal_sets(found)
        })
        .collect();
    Ok(CompletionCatalog {
        graph: g.clone(),
        non_edges,
        entries: maximal_sets(excluded),
    })
}

struct Cover<'a> {
    entries: &'a [u64],
    chosen: Vec<u64>,
}

impl Cover<'_> {
    fn search(&mut self, uncovered: u64, k_left: usize) -> bool {
        if uncovered == 0 {
            return true;
        }
        if k_left == 0 {
            return false;
        }
        let best_gain = self
            .entries
            .iter()
            .map(|&e| (e & uncovered).count_ones())
            .max()
            .unwrap_or(0);
        if (best_gain as usize) * k_left < uncovered.count_ones() as usize {
            return false;
        }
        // branch on the uncovered non-edge with the fewest covering entries
        let mut bits = uncovered;
        let mut pick = (usize::MAX, 0);
        while bits != 0 {
            let i = bits.trailing_zeros();
            bits &= bits - 1;
            let count = self.entries.iter().filter(|&&e| e >> i & 1 == 1).count();
            if count < pick.0 {
                pick = (count, i);
            }
        }
        let bit = 1u64 << pick.1;
        for idx in 0..self.entries.len() {
            let e = self.entries[idx];
            if e & bit == 0 {
                continue;
            }
            self.chosen.push(e);
            if self.search(uncovered & !e, k_left - 1) {
                return true;
            }
            self.chosen.pop();
        }
        false
    }
}

/// Smallest cover of all non-edges by at most `k_max` catalog entries.
pub fn min_cover(catalog: &CompletionCatalog, k_max: usize) -> Option<Vec<u64>> {
    let full = catalog.full_mask();
    (0..=k_max).find_map(|k| {
        let mut c = Cover {
            entries: &catalog.entries,
            chosen: Vec::new(),
        };
        c.search(full, k).then_some(c.chosen)
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoxicityReport {
    pub boxicity: usize,
    pub non_edges: usize,
    pub catalog_size: usize,
    /// Excluded pairs of each interval supergraph in an optimal cover.
    pub cover: Vec<Vec<(usize, usize)>>,
}

/// Exact boxicity with the cover that certifies it.
pub fn boxicity_report(g: &Graph, k_max: usize, limit: usize) -> Result<BoxicityReport> {
    let catalog = interval_completions(g, limit)?;
    let cover = min_cover(&catalog, k_max).ok_or(Error::KMaxInsufficient { k_max })?;
    Ok(BoxicityReport {
        boxicity: cover.len(),
        non_edges: catalog.non_edges.len(),
        catalog_size: catalog.entries.len(),
        cover: cover.iter().map(|&m| catalog.excluded_pairs(m)).collect(),
    })
}

/// Least `k <= k_max` with `box(g) <= k`; `0` exactly for complete graphs.
pub fn boxicity_exact(g: &Graph, k_max: usize, limit: usize) -> Result<usize> {
    boxicity_report(g, k_max, limit).map(|r| r.boxicity)
}

/// Excluded set of the interval supergraph laid out along `order`.
///
/// Vertex `v` at position `p` gets `[p, q]` with `q` the last position among
/// `v` and its neighbors. This contains `g`, and every interval supergraph of
/// `g` contains the layout of its own left-endpoint order, so these layouts
/// reach every maximal excluded set.
pub fn ordering_excluded(g: &Graph, non_edges: &[(usize, usize)], order: &[usize]) -> u64 {
    let n = g.n();
    let mut pos = vec![0; n];
    for (p, &v) in order.iter().enumerate() {
        pos[v] = p;
    }
    let reach: Vec<usize> = (0..n)
        .map(|v| g.neighbors(v).iter().map(|&w| pos[w]).fold(pos[v], usize::max))
        .collect();
    non_edges
        .iter()
        .enumerate()
        .filter(|(_, &(u, v))| {
            let (a, b) = if pos[u] < pos[v] { (u, v) } else { (v, u) };
            reach[a] < pos[b]
        })
        .fold(0u64, |m, (i, _)| m | 1 << i)
}

/// Maximal excluded sets found by laying out along every vertex ordering.
/// Factorial cost; meant as an independent check on small graphs.
pub fn ordering_catalog(g: &Graph) -> Vec<u64> {
    let non_edges = g.non_edges();
    let mut order: Vec<usize> = (0..g.n()).collect();
    let mut seen = HashSet::new();
    for_each_permutation(&mut order, 0, &mut |o| {
        seen.insert(ordering_excluded(g, &non_edges, o));
    });
    maximal_sets(seen)
}

fn for_each_permutation(xs: &mut [usize], k: usize, f: &mut impl FnMut(&[usize])) {
    if k + 1 >= xs.len() {
        f(xs);
        return;
    }
    for i in k..xs.len() {
        xs.swap(k, i);
        for_each_permutation(xs, k + 1, f);
        xs.swap(k, i);
    }
}

/// Results of the exhaustive crown enumeration.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExhaustiveCrown {
    /// Orderings starting at vertex 0 that were laid out.
    pub orderings: u64,
    pub automorphisms: usize,
    pub maximal_sets: usize,
    pub two_cover_exists: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CrownReport {
    pub side: usize,
    pub vertices: usize,
    pub non_edges: usize,
    pub seed: u64,
    pub trials: u64,
    /// Most non-edges any sampled pair of completions left uncovered-free.
    pub best_coverage: usize,
    pub none_found: bool,
    /// The strict bound `box > 2` is only claimed for at least 10 vertices.
    pub claim_applies: bool,
    pub exhaustive: Option<ExhaustiveCrown>,
}

impl CrownReport {
    /// `true` only when the exhaustive run finished without a 2-cover.
    pub fn proves_box_above_two(&self) -> bool {
        self.exhaustive.as_ref().is_some_and(|e| !e.two_cover_exists)
    }
}

fn crown_automorphisms(n: usize) -> Vec<Vec<usize>> {
    let mut perms = Vec::new();
    let mut base: Vec<usize> = (0..n).collect();
    for_each_permutation(&mut base, 0, &mut |p| perms.push(p.to_vec()));
    let mut out = Vec::with_capacity(2 * perms.len());
    for p in perms {
        for swap in [false, true] {
            let map: Vec<usize> = (0..2 * n)
                .map(|v| {
                    let (side, i) = (v / n, v % n);
                    let side = if swap { 1 - side } else { side };
                    side * n + p[i]
                })
                .collect();
            out.push(map);
        }
    }
    out
}

/// Searches for two interval supergraphs of the crown `K_{n,n} - nK_2` whose
/// excluded sets cover all `n^2` non-edges, i.e. a 2-dimensional box model.
///
/// Trial `t` draws two random orderings from a ChaCha stream keyed by
/// `(seed, t)`, so results do not depend on the number of worker threads.
/// The exhaustive mode lays out every ordering that starts at vertex 0,
/// closes the excluded sets under the crown's automorphisms (so every
/// starting vertex is accounted for) and checks all pairs of maximal sets.
pub fn crown_search(n: usize, trials: u64, seed: u64, exhaustive: bool) -> Result<CrownReport> {
    if !(2..=8).contains(&n) {
        return Err(Error::InvalidParams(format!("crown side must be in 2..=8, got {n}")));
    }
    let g = crate::graph::generate("crown", &[n])?;
    let non_edges = g.non_edges();
    let full = full_mask(non_edges.len());

    let best = (0..trials)
        .into_par_iter()
        .map(|t| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            rng.set_stream(t);
            let mut a: Vec<usize> = (0..2 * n).collect();
            let mut b = a.clone();
            a.shuffle(&mut rng);
            b.shuffle(&mut rng);
            let covered = ordering_excluded(&g, &non_edges, &a) | ordering_excluded(&g, &non_edges, &b);
            (covered & full).count_ones() as usize
        })
        .max()
        .unwrap_or(0);

    let exhaustive = exhaustive.then(|| {
        let tails: Vec<usize> = (1..2 * n).collect();
        let (orderings, found) = tails
            .par_iter()
            .map(|&second| {
                let mut rest: Vec<usize> = (1..2 * n).filter(|&v| v != second).collect();
                let mut seen = HashSet::new();
                let mut count = 0u64;
                let mut order = vec![0, second];
                order.extend_from_slice(&rest);
                for_each_permutation(&mut rest, 0, &mut |tail| {
                    order[2..].copy_from_slice(tail);
                    count += 1;
                    seen.insert(ordering_excluded(&g, &non_edges, &order));
                });
                (count, seen)
            })
            .reduce(
                || (0, HashSet::new()),
                |(c1, mut s1), (c2, s2)| {
                    s1.extend(s2);
                    (c1 + c2, s1)
                },
            );
        let autos = crown_automorphisms(n);
        let index: std::collections::HashMap<(usize, usize), usize> =
            non_edges.iter().enumerate().map(|(i, &p)| (p, i)).collect();
        let image = |mask: u64, map: &[usize]| {
            (0..non_edges.len())
                .filter(|i| mask >> i & 1 == 1)
                .fold(0u64, |acc, i| {
                    let (u, v) = non_edges[i];
                    let (x, y) = (map[u].min(map[v]), map[u].max(map[v]));
                    acc | 1 << index[&(x, y)]
                })
        };
        let reps = maximal_sets(found);
        let closed = maximal_sets(
            reps.iter()
                .flat_map(|&m| autos.iter().map(move |a| (m, a)))
                .map(|(m, a)| image(m, a))
                .collect::<Vec<_>>(),
        );
        let two_cover_exists = reps
            .par_iter()
            .any(|&a| closed.iter().any(|&b| (a | b) & full == full));
        ExhaustiveCrown {
            orderings,
            automorphisms: autos.len(),
            maximal_sets: closed.len(),
            two_cover_exists,
        }
    });

    Ok(CrownReport {
        side: n,
        vertices: 2 * n,
        non_edges: non_edges.len(),
        seed,
        trials,
        best_coverage: best,
        none_found: best < non_edges.len(),
        claim_applies: 2 * n >= 10,
        exhaustive,
    })
}
