//! Acceptance criteria. Each test prints one `PASS`/`FAIL` line and then
//! asserts, so `cargo test --test acceptance -- --nocapture --test-threads 1`
//! gives a readable report.

mod common;

use std::time::{Duration, Instant};

use boxkit::circulant::{at_witness, gen_circulant, witness_41, witness_42};
use boxkit::coloring::{chromatic_number, independence_number};
use boxkit::graph::generate;
use boxkit::oracle::{boxicity_exact, crown_search, DEFAULT_GUARD};
use boxkit::pipeline::certify;
use boxkit::realization::{realize_interval, verify_boxes, verify_realization};
use boxkit::recognition::{asteroidal_triples, is_chordal, is_interval};
use boxkit::witness::{build_family, check_intersection, from_neighborhoods, validate_witness, WitnessFamily};
use boxkit::Graph;
use rayon::prelude::*;

use common::*;

fn report(id: u32, name: &str, budget: Duration, start: Instant, failures: &[String]) {
    let elapsed = start.elapsed();
    let ok = failures.is_empty() && elapsed <= budget;
    println!(
        "{} criterion {id:>2}: {name} ({:.2?} of {:.0?})",
        if ok { "PASS" } else { "FAIL" },
        elapsed,
        budget
    );
    for f in failures.iter().take(20) {
        println!("    {f}");
    }
    assert!(failures.is_empty(), "criterion {id} failed: {} problems", failures.len());
    assert!(elapsed <= budget, "criterion {id} over budget: {elapsed:?}");
}

/// Validates, builds, realizes and boxes; re-checks every artifact.
fn full_pipeline(g: &Graph, w: &WitnessFamily, members: usize) -> Result<(), String> {
    let report = validate_witness(g, w).map_err(|e| e.to_string())?;
    if !report.passes() {
        return Err(report.summary());
    }
    let cert = certify(g, w).map_err(|e| e.to_string())?;
    if cert.family.len() != members {
        return Err(format!("{} members, expected {members}", cert.family.len()));
    }
    let graphs: Vec<Graph> = cert.family.members.iter().map(|m| m.graph.clone()).collect();
    check_intersection(g, &graphs).map_err(|e| e.to_string())?;
    for (m, r) in cert.family.members.iter().zip(&cert.realizations) {
        if !is_interval(&m.graph) || !verify_realization(&m.graph, r).map_err(|e| e.to_string())? {
            return Err("member realization rejected".into());
        }
    }
    if cert.boxes.k != members || !verify_boxes(g, &cert.boxes).map_err(|e| e.to_string())? {
        return Err("box representation rejected".into());
    }
    Ok(())
}

fn grid_42() -> Vec<(usize, usize, usize)> {
    let mut out = Vec::new();
    for n in 2..=5 {
        for b in 2..=5usize {
            for r in 1..b {
                if n + 1 + r >= b && n * b + r <= 25 {
                    out.push((n, b, r));
                }
            }
        }
    }
    out
}

#[test]
fn criterion_01_exact_multiple_construction() {
    let start = Instant::now();
    let mut failures = Vec::new();
    for n in 2..=5 {
        for b in 1..=5 {
            let g = gen_circulant(n * b, b).unwrap();
            let result = witness_41(n, b)
                .map_err(|e| e.to_string())
                .and_then(|w| full_pipeline(&g, &w, n));
            if let Err(e) = result {
                failures.push(format!("G_{{{},{b}}}: {e}", n * b));
            }
        }
    }
    report(1, "a = nb witnesses give n-box models", Duration::from_secs(10), start, &failures);
}

#[test]
fn criterion_02_remainder_construction() {
    let start = Instant::now();
    let mut failures = Vec::new();
    let grid = grid_42();
    assert!(!grid.is_empty());
    for (n, b, r) in grid {
        let a = n * b + r;
        let g = gen_circulant(a, b).unwrap();
        let result = witness_42(n, b, r)
            .map_err(|e| e.to_string())
            .and_then(|w| full_pipeline(&g, &w, n + 1));
        if let Err(e) = result {
            failures.push(format!("G_{{{a},{b}}} (n={n}, r={r}): {e}"));
        }
    }
    report(2, "a = nb + r witnesses give (n+1)-box models", Duration::from_secs(15), start, &failures);
}

#[test]
fn criterion_03_chromatic_numbers() {
    let start = Instant::now();
    let mut failures = Vec::new();
    let mut cases: Vec<(usize, usize, usize)> = Vec::new();
    for n in 2..=5 {
        for b in 1..=5 {
            cases.push((n * b, b, n));
        }
    }
    for (n, b, r) in grid_42() {
        cases.push((n * b + r, b, n + 1));
    }
    for (a, b, expected) in cases.into_iter().filter(|c| c.0 <= 15) {
        let g = gen_circulant(a, b).unwrap();
        let (chi, classes) = chromatic_number(&g, 32).unwrap();
        if chi != expected || classes.len() != chi || classes.check(&g).is_err() {
            failures.push(format!("G_{{{a},{b}}}: chi {chi}, expected {expected}"));
        }
        // small instances also against plain enumeration
        if a <= 8 && chromatic_by_enumeration(&g) != expected {
            failures.push(format!("G_{{{a},{b}}}: enumeration disagrees"));
        }
    }
    report(3, "chromatic number of circulants", Duration::from_secs(30), start, &failures);
}

#[test]
fn criterion_04_independence_numbers() {
    let start = Instant::now();
    let mut failures = Vec::new();
    for b in 1..=10 {
        for a in 2 * b..=20 {
            let g = gen_circulant(a, b).unwrap();
            let alpha = independence_number(&g, 64).unwrap();
            if alpha != b {
                failures.push(format!("G_{{{a},{b}}}: alpha {alpha}"));
            }
            if a <= 14 && independence_by_enumeration(&g) != b {
                failures.push(format!("G_{{{a},{b}}}: enumeration disagrees"));
            }
        }
    }
    report(4, "independence number of circulants is b", Duration::from_secs(10), start, &failures);
}

#[test]
fn criterion_05_asteroidal_witness() {
    let start = Instant::now();
    let mut failures = Vec::new();
    for b in 3..=5 {
        for a in 3 * b..=3 * b + 3 {
            let g = gen_circulant(a, b).unwrap();
            let triple = [1, b.div_ceil(2), b];
            let detected = asteroidal_triples(&g, true).iter().any(|t| t.vertices() == triple);
            let witness = at_witness(a, b).is_ok();
            let by_paths = is_asteroidal_by_paths(&g, triple[0], triple[1], triple[2]);
            if !(detected && witness && by_paths) {
                failures.push(format!(
                    "G_{{{a},{b}}}: detector {detected}, witness {witness}, paths {by_paths}"
                ));
            }
        }
    }
    report(5, "(1, ceil(b/2), b) is asteroidal", Duration::from_secs(5), start, &failures);
}

#[test]
fn criterion_06_oracle_ground_truths() {
    let start = Instant::now();
    let mut failures = Vec::new();
    let mut expect = |name: String, g: Graph, want: usize| match boxicity_exact(&g, 4, DEFAULT_GUARD) {
        Ok(got) if got == want => {}
        other => failures.push(format!("{name}: {other:?}, expected {want}")),
    };
    for n in 1..=6 {
        expect(format!("K_{n}"), generate("complete", &[n]).unwrap(), 0);
    }
    // P_2 is K_2, which is complete and so has boxicity 0
    expect("P_2".into(), generate("path", &[2]).unwrap(), 0);
    for n in 3..=6 {
        expect(format!("P_{n}"), generate("path", &[n]).unwrap(), 1);
    }
    expect("K_1,3".into(), generate("multipartite", &[1, 3]).unwrap(), 1);
    for n in 4..=7 {
        expect(format!("C_{n}"), generate("cycle", &[n]).unwrap(), 2);
    }
    expect("K_2,2,2".into(), generate("multipartite", &[2, 2, 2]).unwrap(), 3);
    report(6, "exact boxicity of small reference graphs", Duration::from_secs(60), start, &failures);
}

/// Graphs on at most 7 vertices with at most 20 non-edges, each with a
/// witness candidate.
fn witness_corpus() -> Vec<(String, Graph, WitnessFamily)> {
    let mut out = Vec::new();
    for b in 1..=3 {
        for n in 2..=7 / b {
            out.push((format!("G_{{{},{b}}}", n * b), gen_circulant(n * b, b).unwrap(), witness_41(n, b).unwrap()));
        }
    }
    for (n, b, r) in [(2, 2, 1), (2, 3, 1)] {
        let a = n * b + r;
        out.push((format!("G_{{{a},{b}}}"), gen_circulant(a, b).unwrap(), witness_42(n, b, r).unwrap()));
    }
    let mut graphs: Vec<(String, Graph)> = Vec::new();
    for n in 2..=7 {
        graphs.push((format!("P_{n}"), generate("path", &[n]).unwrap()));
    }
    for n in 4..=7 {
        graphs.push((format!("C_{n}"), generate("cycle", &[n]).unwrap()));
    }
    for parts in [vec![1, 3], vec![2, 2, 2], vec![3, 3], vec![2, 2], vec![1, 2, 3], vec![2, 2, 3], vec![3, 4]] {
        graphs.push((format!("K{parts:?}"), generate("multipartite", &parts).unwrap()));
    }
    graphs.push(("crown_3".into(), generate("crown", &[3]).unwrap()));
    let mut rng = rng(7);
    for i in 0..40 {
        let n = 5 + i % 3;
        let g = random_graph(&mut rng, n, 0.6);
        graphs.push((format!("random_{i}"), g));
    }
    for (name, g) in graphs {
        if g.non_edges().len() > 20 {
            continue;
        }
        let (_, c) = chromatic_number(&g, 32).unwrap();
        if let Some(w) = from_neighborhoods(&g, &c).unwrap() {
            out.push((name, g, w));
        }
    }
    out
}

#[test]
fn criterion_07_witness_bounds_exact_boxicity() {
    let start = Instant::now();
    let corpus = witness_corpus();
    let checked: Vec<Result<(), String>> = corpus
        .par_iter()
        .filter(|(_, g, w)| g.non_edges().len() <= 20 && validate_witness(g, w).unwrap().passes())
        .map(|(name, g, w)| {
            build_family(g, w).map_err(|e| format!("{name}: {e}"))?;
            let k = w.num_classes();
            match boxicity_exact(g, k, DEFAULT_GUARD) {
                Ok(bx) if bx <= k => Ok(()),
                other => Err(format!("{name}: boxicity {other:?} vs family size {k}")),
            }
        })
        .collect();
    let failures: Vec<String> = checked.iter().filter_map(|r| r.clone().err()).collect();
    println!("    {} validated witnesses checked", checked.len());
    let mut failures = failures;
    if checked.len() < 20 {
        failures.push(format!("corpus too small: {}", checked.len()));
    }
    report(7, "boxicity never exceeds witness family size", Duration::from_secs(120), start, &failures);
}

#[test]
fn criterion_08_crown_sampling() {
    let start = Instant::now();
    let mut failures = Vec::new();
    let crown = generate("crown", &[5]).unwrap();
    let (chi, _) = chromatic_number(&crown, 32).unwrap();
    if chi != 2 {
        failures.push(format!("chi(crown_5) = {chi}"));
    }
    let r = crown_search(5, 100_000, 2024, false).unwrap();
    if !r.none_found || !r.claim_applies {
        failures.push(format!("sampling found a 2-cover: {r:?}"));
    }
    println!("    best pair covered {} of {} non-edges", r.best_coverage, r.non_edges);
    report(8, "no sampled 2-cover of the crown's non-edges", Duration::from_secs(120), start, &failures);
}

#[test]
fn criterion_08_crown_exhaustive() {
    let start = Instant::now();
    let r = crown_search(5, 0, 0, true).unwrap();
    let mut failures = Vec::new();
    if !r.proves_box_above_two() {
        failures.push(format!("{:?}", r.exhaustive));
    }
    println!("    {:?}", r.exhaustive);
    report(8, "exhaustive crown search proves box > 2", Duration::from_secs(30 * 60), start, &failures);
}

#[test]
fn criterion_09_cycle_instances() {
    let start = Instant::now();
    let failures: Vec<String> = (2..=6)
        .filter(|&b| !gen_circulant(2 * b + 1, b).unwrap().is_cycle_graph())
        .map(|b| format!("G_{{{},{b}}} is not a cycle", 2 * b + 1))
        .collect();
    report(9, "G_{2b+1,b} is a cycle", Duration::from_secs(1), start, &failures);
}

#[test]
fn criterion_10_property_suites() {
    let start = Instant::now();
    let mut failures = Vec::new();

    // interval recognition agrees with the model builder, all labeled n <= 6
    for n in 1..=6 {
        let bad: Vec<String> = all_graphs(n)
            .collect::<Vec<_>>()
            .par_iter()
            .filter_map(|g| {
                let model = realize_interval(g);
                let agrees = match &model {
                    Some(r) => verify_realization(g, r).unwrap() && is_interval(g),
                    None => !is_interval(g),
                };
                (!agrees).then(|| format!("interval mismatch on {g:?}"))
            })
            .collect();
        failures.extend(bad);
    }

    // chordality and asteroidal triples against brute force, all labeled n <= 7
    for n in 1..=7 {
        let bad: Vec<String> = all_graphs(n)
            .collect::<Vec<_>>()
            .par_iter()
            .filter_map(|g| {
                if is_chordal(g) == has_long_induced_cycle(g) {
                    return Some(format!("chordality mismatch on {g:?}"));
                }
                let fast: Vec<[usize; 3]> = asteroidal_triples(g, true).iter().map(|t| t.vertices()).collect();
                (fast != asteroidal_triples_by_paths(g)).then(|| format!("AT mismatch on {g:?}"))
            })
            .collect();
        failures.extend(bad);
    }

    // every constructed circulant artifact re-verifies
    for n in 2..=5 {
        for b in 1..=5 {
            let g = gen_circulant(n * b, b).unwrap();
            if let Err(e) = full_pipeline(&g, &witness_41(n, b).unwrap(), n) {
                failures.push(format!("G_{{{},{b}}}: {e}", n * b));
            }
        }
    }
    report(10, "recognition, realization and verifier property suites", Duration::from_secs(600), start, &failures);
}
