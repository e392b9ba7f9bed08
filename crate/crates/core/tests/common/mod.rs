//! Brute-force oracles. Nothing here calls into the algorithms it checks.

#![allow(dead_code)]

use boxkit::Graph;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Every labeled graph on `n` vertices.
pub fn all_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    (0u64..1 << pairs.len()).map(move |mask| {
        let edges: Vec<(usize, usize)> = pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &p)| p)
            .collect();
        Graph::new(n, &edges).unwrap()
    })
}

pub fn random_graph(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.random_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, &edges).unwrap()
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Circulant adjacency written out directly from the difference rule.
pub fn circulant_by_rule(a: usize, b: usize) -> Graph {
    let mut edges = Vec::new();
    for u in 0..a {
        for v in 0..a {
            let d = (v + a - u) % a;
            if u < v && d >= b && d <= a - b {
                edges.push((u, v));
            }
        }
    }
    Graph::new(a, &edges).unwrap()
}

/// Does some vertex subset of size >= 4 induce a cycle?
pub fn has_long_induced_cycle(g: &Graph) -> bool {
    let n = g.n();
    for mask in 0u32..1 << n {
        let vs: Vec<usize> = (0..n).filter(|v| mask >> v & 1 == 1).collect();
        if vs.len() < 4 {
            continue;
        }
        let deg_two = vs
            .iter()
            .all(|&v| vs.iter().filter(|&&w| g.has_edge(v, w)).count() == 2);
        if !deg_two {
            continue;
        }
        // connected?
        let mut seen = vec![vs[0]];
        let mut stack = vec![vs[0]];
        while let Some(x) = stack.pop() {
            for &y in &vs {
                if g.has_edge(x, y) && !seen.contains(&y) {
                    seen.push(y);
                    stack.push(y);
                }
            }
        }
        if seen.len() == vs.len() {
            return true;
        }
    }
    false
}

fn some_path_avoids(g: &Graph, from: usize, to: usize, forbidden: &[bool]) -> bool {
    // depth-first enumeration of simple paths
    fn walk(g: &Graph, at: usize, to: usize, forbidden: &[bool], on_path: &mut Vec<bool>) -> bool {
        if at == to {
            return true;
        }
        for &next in g.neighbors(at) {
            if on_path[next] || forbidden[next] {
                continue;
            }
            on_path[next] = true;
            if walk(g, next, to, forbidden, on_path) {
                return true;
            }
            on_path[next] = false;
        }
        false
    }
    if forbidden[from] || forbidden[to] {
        return false;
    }
    let mut on_path = vec![false; g.n()];
    on_path[from] = true;
    walk(g, from, to, forbidden, &mut on_path)
}

/// Literal definition: paths between each pair whose vertices avoid the
/// open neighborhood of the third vertex.
pub fn is_asteroidal_by_paths(g: &Graph, u: usize, v: usize, w: usize) -> bool {
    let open = |x: usize| {
        let mut f = vec![false; g.n()];
        for &y in g.neighbors(x) {
            f[y] = true;
        }
        f
    };
    some_path_avoids(g, u, v, &open(w))
        && some_path_avoids(g, v, w, &open(u))
        && some_path_avoids(g, w, u, &open(v))
}

pub fn asteroidal_triples_by_paths(g: &Graph) -> Vec<[usize; 3]> {
    let n = g.n();
    let mut out = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            for w in v + 1..n {
                if is_asteroidal_by_paths(g, u, v, w) {
                    out.push([u, v, w]);
                }
            }
        }
    }
    out
}

/// Chromatic number by trying every assignment with k colors.
pub fn chromatic_by_enumeration(g: &Graph) -> usize {
    let n = g.n();
    for k in 1..=n {
        let mut colors = vec![0usize; n];
        loop {
            if g.edges().all(|(u, v)| colors[u] != colors[v]) {
                return k;
            }
            // odometer
            let mut i = 0;
            while i < n {
                colors[i] += 1;
                if colors[i] < k {
                    break;
                }
                colors[i] = 0;
                i += 1;
            }
            if i == n {
                break;
            }
        }
    }
    n
}

pub fn independence_by_enumeration(g: &Graph) -> usize {
    let n = g.n();
    (0u64..1 << n)
        .filter(|&m| g.edges().all(|(u, v)| m >> u & 1 == 0 || m >> v & 1 == 0))
        .map(|m| m.count_ones() as usize)
        .max()
        .unwrap_or(0)
}
