//! The circulant graphs `G_{a,b}` and their explicit witness families.
//!
//! `G_{a,b}` has vertices `0..a` with `u ~ v` iff `(u - v) mod a` lies in
//! `b..=a-b`, so every run of `b` consecutive vertices is independent.
//! Colorings here group consecutive runs into classes; the witnesses add to
//! each neighborhood a range of vertices from the adjacent classes.

use serde::{Deserialize, Serialize};

use crate::coloring::ColorClasses;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::recognition::{check_triple, ATriple};
use crate::witness::WitnessFamily;

/// `a = n*b + r` with `0 <= r < b`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct CirculantParams {
    pub a: usize,
    pub b: usize,
    pub n: usize,
    pub r: usize,
}

impl CirculantParams {
    pub fn new(a: usize, b: usize) -> Result<Self> {
        if b < 1 || a < 2 * b {
            return Err(Error::InvalidParams(format!(
                "circulant needs a >= 2b >= 2, got a={a}, b={b}"
            )));
        }
        Ok(Self { a, b, n: a / b, r: a % b })
    }
}

pub fn gen_circulant(a: usize, b: usize) -> Result<Graph> {
    CirculantParams::new(a, b)?;
    Ok(Graph::from_fn(a, |u, v| (b..=a - b).contains(&((v + a - u) % a))))
}

/// Classes laid out as consecutive runs with the given sizes.
fn consecutive_classes(sizes: &[usize]) -> ColorClasses {
    let mut next = 0;
    ColorClasses::new(
        sizes
            .iter()
            .map(|&s| {
                let class: Vec<usize> = (next..next + s).collect();
                next += s;
                class
            })
            .collect(),
    )
}

/// `n` classes of `b` consecutive vertices: `v_{i,j} = (i-1)b + j - 1`.
pub fn coloring_41(n: usize, b: usize) -> Result<ColorClasses> {
    if n < 2 || b < 1 {
        return Err(Error::InvalidParams(format!(
            "needs n >= 2 and b >= 1, got n={n}, b={b}"
        )));
    }
    Ok(consecutive_classes(&vec![b; n]))
}

/// Cyclic class layout with 1-based `(i, j)` addressing; class `0` is the
/// last class and class `len + 1` the first.
struct Layout<'a> {
    classes: &'a ColorClasses,
}

impl Layout<'_> {
    fn count(&self) -> usize {
        self.classes.len()
    }

    fn wrap(&self, i: usize) -> usize {
        let k = self.count();
        ((i + k - 1) % k) + 1
    }

    fn size(&self, i: usize) -> usize {
        self.classes.class(self.wrap(i) - 1).len()
    }

    fn vertex(&self, i: usize, j: usize) -> usize {
        self.classes.class(self.wrap(i) - 1)[j - 1]
    }

    /// `{v_{i,from}, ..., v_{i,to}}`; empty when `from > to`.
    fn range(&self, i: usize, from: usize, to: usize) -> impl Iterator<Item = usize> + '_ {
        (from..=to).map(move |j| self.vertex(i, j))
    }
}

fn witness_from_y(
    g: &Graph,
    classes: ColorClasses,
    pivot_of: impl Fn(usize) -> usize,
    y: impl Fn(&Layout<'_>, usize, usize) -> Vec<usize>,
) -> WitnessFamily {
    let layout = Layout { classes: &classes };
    let mut pivots = Vec::with_capacity(classes.len());
    let mut x_sets = Vec::with_capacity(classes.len());
    for i in 1..=classes.len() {
        let size = layout.size(i);
        pivots.push(pivot_of(size));
        x_sets.push(
            (1..=size)
                .map(|j| {
                    let mut x: VertexSet = g.neighbor_set(layout.vertex(i, j));
                    x.extend(y(&layout, i, j));
                    x
                })
                .collect(),
        );
    }
    WitnessFamily {
        coloring: classes,
        pivots,
        x_sets,
    }
}

/// Witness for `G_{nb,b}` over [`coloring_41`].
///
/// With `h = ceil(b/2)` as pivot, `X_{i,j} = N(v_{i,j})` plus
/// `v_{i-1,j..=h}` for `j <= h`, and plus `v_{i+1,h+1..=j}` (even `b`) or
/// `v_{i+1,h..=j}` (odd `b`) for `j > h`. Neighborhoods come from the graph.
pub fn witness_41(n: usize, b: usize) -> Result<WitnessFamily> {
    let classes = coloring_41(n, b)?;
    let g = gen_circulant(n * b, b)?;
    let h = b.div_ceil(2);
    let ascending_start = if b.is_multiple_of(2) { h + 1 } else { h };
    Ok(witness_from_y(
        &g,
        classes,
        |_| h,
        |l, i, j| {
            if j <= h {
                l.range(i - 1, j, h).collect()
            } else {
                l.range(i + 1, ascending_start, j).collect()
            }
        },
    ))
}

fn check_42(n: usize, b: usize, r: usize) -> Result<usize> {
    if n < 2 || b < 2 || r < 1 || r >= b || n + r + 1 < b {
        return Err(Error::InvalidParams(format!(
            "needs n >= 2, b >= 2, 1 <= r < b, n >= b-r-1; got n={n}, b={b}, r={r}"
        )));
    }
    Ok(n + r + 1 - b)
}

/// `n+1` classes for `G_{nb+r,b}`: the first `k = n-b+r+1` of size `b`, the
/// remaining `b-r` of size `b-1`, all consecutive.
pub fn coloring_42(n: usize, b: usize, r: usize) -> Result<ColorClasses> {
    let k = check_42(n, b, r)?;
    let sizes: Vec<usize> = (1..=n + 1).map(|i| if i <= k { b } else { b - 1 }).collect();
    Ok(consecutive_classes(&sizes))
}

/// Witness for `G_{nb+r,b}` over [`coloring_42`].
///
/// For class size `m` the pivot is `h = ceil(m/2)`. For `j <= h` the added
/// range is `v_{i-1,j..=h}` when `|V_{i-1}| = b`, and
/// `v_{i-1,max(1,j-1)..=h-1}` when `|V_{i-1}| = b-1`. For `j > h` it comes
/// from `V_{i+1}`, ending at `min(j, |V_{i+1}|)` when `m = b` and at
/// `min(j+1, |V_{i+1}|)` when `m = b-1`, starting at
///
/// | `m` | even | odd |
/// |-----|------|-----|
/// | `b` | `h+1` | `h` |
/// | `b-1` | `h+2` | `h+1` |
pub fn witness_42(n: usize, b: usize, r: usize) -> Result<WitnessFamily> {
    let classes = coloring_42(n, b, r)?;
    let g = gen_circulant(n * b + r, b)?;
    Ok(witness_from_y(
        &g,
        classes,
        |m| m.div_ceil(2),
        |l, i, j| {
            let m = l.size(i);
            let h = m.div_ceil(2);
            if j <= h {
                if l.size(i - 1) == b {
                    l.range(i - 1, j, h).collect()
                } else {
                    l.range(i - 1, j.saturating_sub(1).max(1), h - 1).collect()
                }
            } else {
                let full = m == b;
                let start = match (full, m % 2 == 0) {
                    (true, true) => h + 1,
                    (true, false) => h,
                    (false, true) => h + 2,
                    (false, false) => h + 1,
                };
                let end = if full { j } else { j + 1 }.min(l.size(i + 1));
                l.range(i + 1, start, end).collect()
            }
        },
    ))
}

/// The triple `(1, ceil(b/2), b)`, asteroidal in `G_{a,b}` for `a >= 3b`
/// and `b >= 3`, with witness paths.
pub fn at_witness(a: usize, b: usize) -> Result<ATriple> {
    if b < 3 || a < 3 * b {
        return Err(Error::InvalidParams(format!(
            "asteroidal witness needs a >= 3b and b >= 3, got a={a}, b={b}"
        )));
    }
    let g = gen_circulant(a, b)?;
    let (u, v, w) = (1, b.div_ceil(2), b);
    check_triple(&g, u, v, w).ok_or_else(|| {
        Error::WitnessRejected(format!("({u}, {v}, {w}) is not asteroidal in G_{{{a},{b}}}"))
    })
}
