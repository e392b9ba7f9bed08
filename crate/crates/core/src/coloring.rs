//! Proper colorings, exact chromatic number and exact independence number.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Default vertex limit for [`chromatic_number`].
pub const CHROMATIC_GUARD: usize = 32;
/// Default vertex limit for [`independence_number`]; also the hard maximum,
/// since the search packs vertex sets into a `u64`.
pub const INDEPENDENCE_GUARD: usize = 64;

/// Ordered color classes. Class `i` (0-based) lists its members in subscript
/// order: `classes[i][j]` is the vertex written `v_{i+1, j+1}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ColorClasses {
    pub classes: Vec<Vec<usize>>,
}

impl ColorClasses {
    pub fn new(classes: Vec<Vec<usize>>) -> Self {
        Self { classes }
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn class(&self, i: usize) -> &[usize] {
        &self.classes[i]
    }

    pub fn num_vertices(&self) -> usize {
        self.classes.iter().map(Vec::len).sum()
    }

    /// For each vertex `v < n`, its `(class, position)`; `None` for vertices
    /// missing from every class. Duplicates keep the last occurrence.
    pub fn positions(&self, n: usize) -> Vec<Option<(usize, usize)>> {
        let mut pos = vec![None; n];
        for (i, class) in self.classes.iter().enumerate() {
            for (j, &v) in class.iter().enumerate() {
                if v < n {
                    pos[v] = Some((i, j));
                }
            }
        }
        pos
    }

    /// Describes the first way the classes fail to be a proper coloring of `g`.
    pub fn check(&self, g: &Graph) -> std::result::Result<(), String> {
        let n = g.n();
        let mut seen = vec![false; n];
        for (i, class) in self.classes.iter().enumerate() {
            if class.is_empty() {
                return Err(format!("class {i} is empty"));
            }
            for &v in class {
                if v >= n {
                    return Err(format!("vertex {v} out of range"));
                }
                if std::mem::replace(&mut seen[v], true) {
                    return Err(format!("vertex {v} appears twice"));
                }
            }
            for (a, &u) in class.iter().enumerate() {
                if let Some(&v) = class[a + 1..].iter().find(|&&v| g.has_edge(u, v)) {
                    return Err(format!("edge ({u}, {v}) inside class {i}"));
                }
            }
        }
        match seen.iter().position(|s| !s) {
            Some(v) => Err(format!("vertex {v} is uncolored")),
            None => Ok(()),
        }
    }
}

/// True iff the classes partition `V(g)` into nonempty independent sets.
pub fn verify_coloring(g: &Graph, c: &ColorClasses) -> bool {
    c.check(g).is_ok()
}

fn masks(g: &Graph) -> Vec<u64> {
    (0..g.n())
        .map(|v| g.neighbors(v).iter().fold(0u64, |m, &w| m | 1 << w))
        .collect()
}

fn guard(what: &'static str, actual: usize, limit: usize) -> Result<()> {
    let limit = limit.min(64);
    if actual > limit {
        return Err(Error::GuardExceeded { what, actual, limit });
    }
    Ok(())
}

struct ColorSearch<'a> {
    order: &'a [usize],
    nbr: &'a [u64],
    k: usize,
    class_masks: Vec<u64>,
    color: Vec<usize>,
}

impl ColorSearch<'_> {
    fn extend(&mut self, idx: usize, used: usize) -> bool {
        let Some(&v) = self.order.get(idx) else {
            return true;
        };
        // a fresh color is interchangeable with any other fresh color
        for c in 0..(used + 1).min(self.k) {
            if self.class_masks[c] & self.nbr[v] != 0 {
                continue;
            }
            self.class_masks[c] |= 1 << v;
            self.color[v] = c;
            if self.extend(idx + 1, used.max(c + 1)) {
                return true;
            }
            self.class_masks[c] &= !(1 << v);
        }
        false
    }
}

/// Exact chromatic number with a witness coloring.
///
/// Iterative deepening over `k` from a greedy clique bound; each round is a
/// complete backtracking search over vertices in descending degree order
/// (ties by id), so every failed round proves that no `k`-coloring exists.
/// Witness classes list their members in ascending id order.
pub fn chromatic_number(g: &Graph, limit: usize) -> Result<(usize, ColorClasses)> {
    let n = g.n();
    if n == 0 {
        return Err(Error::InvalidParams("chromatic number needs at least one vertex".into()));
    }
    guard("vertex count", n, limit)?;
    let nbr = masks(g);
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| g.degree(b).cmp(&g.degree(a)).then(a.cmp(&b)));

    let mut clique: Vec<usize> = Vec::new();
    for &v in &order {
        if clique.iter().all(|&u| g.has_edge(u, v)) {
            clique.push(v);
        }
    }

    for k in clique.len().max(1)..=n {
        let mut search = ColorSearch {
            order: &order,
            nbr: &nbr,
            k,
            class_masks: vec![0; k],
            color: vec![0; n],
        };
        if search.extend(0, 0) {
            let mut classes = vec![Vec::new(); k];
            for v in 0..n {
                classes[search.color[v]].push(v);
            }
            classes.retain(|c| !c.is_empty());
            return Ok((classes.len(), ColorClasses::new(classes)));
        }
    }
    unreachable!("n colors always suffice")
}

/// Colors vertices in `order`, each with the smallest color unused by its
/// already-colored neighbors. Classes are returned by color, members ascending.
pub fn greedy_coloring(g: &Graph, order: &[usize]) -> Result<ColorClasses> {
    let n = g.n();
    let mut seen = vec![false; n];
    if order.len() != n {
        return Err(Error::InvalidParams(format!(
            "order has {} entries for {n} vertices",
            order.len()
        )));
    }
    for &v in order {
        if v >= n || std::mem::replace(&mut seen[v], true) {
            return Err(Error::InvalidParams(format!("order is not a permutation (at {v})")));
        }
    }
    let mut color = vec![usize::MAX; n];
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for &v in order {
        let taken: Vec<usize> = g
            .neighbors(v)
            .iter()
            .map(|&w| color[w])
            .filter(|&c| c != usize::MAX)
            .collect();
        let c = (0..).find(|c| !taken.contains(c)).unwrap();
        if c == classes.len() {
            classes.push(Vec::new());
        }
        color[v] = c;
        classes[c].push(v);
    }
    for class in &mut classes {
        class.sort_unstable();
    }
    Ok(ColorClasses::new(classes))
}

struct CliqueSearch {
    adj: Vec<u64>,
    best: u64,
}

impl CliqueSearch {
    /// Branch and bound over `candidates`; the greedy coloring of the
    /// candidate set bounds how many more vertices can join `current`.
    fn expand(&mut self, current: u64, mut candidates: u64) {
        if candidates == 0 {
            if current.count_ones() > self.best.count_ones() {
                self.best = current;
            }
            return;
        }
        let (order, bounds) = self.color_bound(candidates);
        for (&v, &bound) in order.iter().zip(&bounds).rev() {
            if current.count_ones() as usize + bound <= self.best.count_ones() as usize {
                return;
            }
            self.expand(current | 1 << v, candidates & self.adj[v]);
            candidates &= !(1 << v);
        }
        if current.count_ones() > self.best.count_ones() {
            self.best = current;
        }
    }

    fn color_bound(&self, mut uncolored: u64) -> (Vec<usize>, Vec<usize>) {
        let mut order = Vec::new();
        let mut bounds = Vec::new();
        let mut color = 0;
        while uncolored != 0 {
            color += 1;
            let mut avail = uncolored;
            while avail != 0 {
                let v = avail.trailing_zeros() as usize;
                avail &= !(1 << v) & !self.adj[v];
                uncolored &= !(1 << v);
                order.push(v);
                bounds.push(color);
            }
        }
        (order, bounds)
    }
}

/// A maximum independent set, as an ascending vertex list.
pub fn maximum_independent_set(g: &Graph, limit: usize) -> Result<Vec<usize>> {
    let n = g.n();
    guard("vertex count", n, limit)?;
    let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    // independent sets of g are cliques of the complement
    let adj: Vec<u64> = masks(g)
        .iter()
        .enumerate()
        .map(|(v, &m)| all & !m & !(1 << v))
        .collect();
    let mut search = CliqueSearch { adj, best: 0 };
    search.expand(0, all);
    Ok((0..n).filter(|&v| search.best >> v & 1 == 1).collect())
}

/// Exact independence number.
pub fn independence_number(g: &Graph, limit: usize) -> Result<usize> {
    maximum_independent_set(g, limit).map(|s| s.len())
}
