//! End-to-end certificates: witness → split interval family → interval
//! models → box representation, plus the circulant parameter sweep.

use serde::{Deserialize, Serialize};

use crate::circulant::{self, CirculantParams};
use crate::coloring::{chromatic_number, verify_coloring};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::realization::{
    assemble_boxes, realize_chain_split, realize_interval, verify_realization, BoxRepresentation,
    IntervalRealization,
};
use crate::witness::{build_family, from_neighborhoods, validate_witness, SplitIntervalFamily, WitnessFamily};

#[derive(Debug, Clone)]
pub struct Certificate {
    pub family: SplitIntervalFamily,
    pub realizations: Vec<IntervalRealization>,
    pub boxes: BoxRepresentation,
}

/// Runs the whole chain for a witness. Each member is realized analytically
/// from its chain order; the generic clique-arrangement realizer must agree
/// that the member is an interval graph.
pub fn certify(g: &Graph, w: &WitnessFamily) -> Result<Certificate> {
    let family = build_family(g, w)?;
    let mut realizations = Vec::with_capacity(family.len());
    for (i, m) in family.members.iter().enumerate() {
        let r = realize_chain_split(&m.graph, &m.partition, w.coloring.class(i), w.pivots[i])?;
        let generic = realize_interval(&m.graph).ok_or(Error::MemberNotInterval {
            member: i + 1,
            property: "realizable by a clique arrangement",
        })?;
        if !verify_realization(&m.graph, &generic)? {
            return Err(Error::RealizationMismatch(format!(
                "clique arrangement for H_{} is wrong",
                i + 1
            )));
        }
        realizations.push(r);
    }
    let boxes = assemble_boxes(g, &family, &realizations)?;
    Ok(Certificate {
        family,
        realizations,
        boxes,
    })
}

/// One row of the `G_{a,b}` sweep.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExploreRow {
    pub a: usize,
    pub b: usize,
    pub n: usize,
    pub r: usize,
    pub chromatic: Option<usize>,
    /// Name of the first construction that produced a verified certificate.
    pub witness: Option<String>,
    /// Box dimension of that certificate.
    pub dimension: Option<usize>,
    pub is_cycle: bool,
}

/// Tries, in order, the `r = 0` construction, the `r > 0` construction, and
/// neighborhood chains over an exact optimal coloring (when `a <= chi_limit`).
pub fn explore(a_max: usize, b_max: usize, chi_limit: usize) -> Result<Vec<ExploreRow>> {
    let mut rows = Vec::new();
    for b in 1..=b_max {
        for a in 2 * b..=a_max {
            let p = CirculantParams::new(a, b)?;
            let g = circulant::gen_circulant(a, b)?;
            let chromatic = (a <= chi_limit)
                .then(|| chromatic_number(&g, chi_limit))
                .transpose()?;
            let mut candidates: Vec<(&str, WitnessFamily)> = Vec::new();
            if p.r == 0 {
                candidates.push(("thm41", circulant::witness_41(p.n, b)?));
            } else if let Ok(w) = circulant::witness_42(p.n, b, p.r) {
                candidates.push(("thm42", w));
            }
            if let Some((_, c)) = &chromatic {
                if verify_coloring(&g, c) {
                    if let Some(w) = from_neighborhoods(&g, c)? {
                        candidates.push(("cor33", w));
                    }
                }
            }
            let found = candidates.into_iter().find_map(|(name, w)| {
                let valid = validate_witness(&g, &w).ok()?.passes();
                let cert = valid.then(|| certify(&g, &w).ok()).flatten()?;
                Some((name.to_string(), cert.boxes.k))
            });
            rows.push(ExploreRow {
                a,
                b,
                n: p.n,
                r: p.r,
                chromatic: chromatic.map(|(k, _)| k),
                dimension: found.as_ref().map(|f| f.1),
                witness: found.map(|f| f.0),
                is_cycle: g.is_cycle_graph(),
            });
        }
    }
    Ok(rows)
}
