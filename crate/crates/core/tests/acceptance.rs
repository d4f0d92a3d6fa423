//! Acceptance run: one PASS/FAIL line per criterion. Built with
//! `harness = false`, so it prints its own report and exits non-zero if any
//! criterion fails.

mod common;

use std::time::{Duration, Instant};

use common::*;
use graph_minors::chromatic::{chromatic_number, extract_clique_minor, hadwiger_scan, max_chromatic_layer, ScanMode};
use graph_minors::connectivity::{fan, vertex_connectivity};
use graph_minors::graph::{complete, complete_bipartite, cycle, is_isomorphic, petersen, Graph, Vertex};
use graph_minors::minor::{
    apply_edits, find_minor_model, has_minor_oracle, minimize_minor_witness, model_to_edit_sequence, MinimalWitness,
};
use graph_minors::planarity::{is_planar, kuratowski_witness, planarity_oracle, KuratowskiKind};
use graph_minors::topo::{find_subdivision, minor_to_subdivision, subdivision_to_model};
use rand::seq::SliceRandom;
use rand::Rng;

struct Verdict {
    pass: bool,
    detail: String,
}

fn verdict(pass: bool, detail: impl Into<String>) -> Verdict {
    Verdict { pass, detail: detail.into() }
}

fn within(limit: Duration, start: Instant) -> (bool, String) {
    let t = start.elapsed();
    (t < limit, format!("{:.2}s (limit {}s)", t.as_secs_f64(), limit.as_secs()))
}

fn petersen_suite() -> Verdict {
    let start = Instant::now();
    let p = petersen();
    let k5 = complete(5).unwrap();
    let k33 = complete_bipartite(3, 3).unwrap();
    let regular = p.vertices().all(|v| p.degree(v) == 3);
    let model = find_minor_model(&p, &k5).unwrap();
    let model_ok = model.as_ref().is_some_and(|m| m.verify().unwrap() && model_is_valid(&p, &k5, &m.sets));
    let no_k5_sub = find_subdivision(&p, &k5).unwrap().is_none();
    let k33_sub = find_subdivision(&p, &k33).unwrap();
    let k33_ok = k33_sub.as_ref().is_some_and(|e| subdivision_is_valid(&p, &k33, &e.branch, &e.paths));
    let nonplanar = !is_planar(&p).unwrap();
    let kappa = vertex_connectivity(&p);
    let chi = chromatic_number(&p).unwrap().0;
    let (fast, time) = within(Duration::from_secs(10), start);
    let pass = regular && model_ok && no_k5_sub && k33_ok && nonplanar && kappa == 3 && chi == 3 && fast;
    verdict(
        pass,
        format!(
            "3-regular={regular} K5-model={model_ok} no-K5-subdivision={no_k5_sub} K33-subdivision={k33_ok} \
             non-planar={nonplanar} kappa={kappa} chi={chi} in {time}"
        ),
    )
}

fn definition_equivalence() -> Verdict {
    let start = Instant::now();
    let patterns = [
        complete(2).unwrap(),
        complete(3).unwrap(),
        cycle(4).unwrap(),
        complete(4).unwrap(),
        complete_bipartite(1, 3).unwrap(),
    ];
    let (mut pairs, mut disagreements, mut bad_edits, mut found) = (0, 0, 0, 0);
    for mask in 0u64..1 << 15 {
        let g = Graph::from_edge_mask(6, mask).unwrap();
        for h in &patterns {
            pairs += 1;
            let model = find_minor_model(&g, h).unwrap();
            if model.is_some() != has_minor_oracle(&g, h).unwrap() {
                disagreements += 1;
            }
            if let Some(m) = model {
                found += 1;
                let steps = model_to_edit_sequence(&m).unwrap();
                let end = apply_edits(&g, &steps).unwrap();
                if !model_is_valid(&g, h, &m.sets) || !is_isomorphic(&end, h).unwrap() {
                    bad_edits += 1;
                }
            }
        }
    }
    let (fast, time) = within(Duration::from_secs(600), start);
    verdict(
        disagreements == 0 && bad_edits == 0 && fast,
        format!("{pairs} pairs, {found} minors, {disagreements} oracle disagreements, {bad_edits} bad edit sequences in {time}"),
    )
}

fn containment_chain() -> Verdict {
    let mut rng = rng(0xC06);
    let (mut violations, mut subgraphs, mut subdivisions, mut minors) = (0, 0, 0, 0);
    for _ in 0..1000 {
        let n = rng.gen_range(1..=9);
        let g = random_graph_between(&mut rng, n, 0.15, 0.8);
        let k = rng.gen_range(1..=5);
        let h = random_graph_between(&mut rng, k, 0.2, 0.9);
        let sub = contains_subgraph(&g, &h);
        let topo = find_subdivision(&g, &h).unwrap();
        let minor = find_minor_model(&g, &h).unwrap();
        if let Some(e) = &topo {
            if !subdivision_is_valid(&g, &h, &e.branch, &e.paths) {
                violations += 1;
            }
        }
        if let Some(m) = &minor {
            if !model_is_valid(&g, &h, &m.sets) {
                violations += 1;
            }
        }
        if (sub && topo.is_none()) || (topo.is_some() && minor.is_none()) {
            violations += 1;
        }
        subgraphs += sub as usize;
        subdivisions += topo.is_some() as usize;
        minors += minor.is_some() as usize;
    }
    verdict(
        violations == 0,
        format!(
            "1000 pairs: {subgraphs} subgraph, {subdivisions} subdivision, {minors} minor; {violations} violations"
        ),
    )
}

fn patterns_max_degree_three() -> Vec<Graph> {
    (1..=5).flat_map(graphs_up_to_iso).filter(|h| h.max_degree() <= 3).collect()
}

fn subcubic_equivalence() -> Verdict {
    let patterns = patterns_max_degree_three();
    let mut rng = rng(0x10);
    let (mut checks, mut mismatches, mut bad_certs, mut positives) = (0, 0, 0, 0);
    for _ in 0..500 {
        let n = rng.gen_range(1..=9);
        let g = random_graph_between(&mut rng, n, 0.15, 0.7);
        for h in &patterns {
            checks += 1;
            let minor = find_minor_model(&g, h).unwrap().is_some();
            let topo = find_subdivision(&g, h).unwrap().is_some();
            if minor != topo {
                mismatches += 1;
            }
            match minor_to_subdivision(&g, h).unwrap() {
                Some(e) => {
                    positives += 1;
                    if !minor || !e.verify().unwrap() || !subdivision_is_valid(&g, h, &e.branch, &e.paths) {
                        bad_certs += 1;
                    }
                }
                None if minor => bad_certs += 1,
                None => {}
            }
        }
    }
    verdict(
        mismatches == 0 && bad_certs == 0,
        format!(
            "{} patterns x 500 hosts = {checks} checks, {positives} certificates, {mismatches} mismatches, {bad_certs} bad certificates",
            patterns.len()
        ),
    )
}

fn wagner_vs_oracle() -> Verdict {
    let start = Instant::now();
    let (mut graphs, mut disagreements, mut witness_errors, mut nonplanar) = (0, 0, 0, 0);
    let mut check = |g: &Graph| {
        graphs += 1;
        let wagner = is_planar(g).unwrap();
        if wagner != planarity_oracle(g).unwrap() {
            disagreements += 1;
        }
        match kuratowski_witness(g).unwrap() {
            Some(w) => {
                nonplanar += 1;
                let pattern = match w.kind {
                    KuratowskiKind::K5 => complete(5).unwrap(),
                    KuratowskiKind::K33 => complete_bipartite(3, 3).unwrap(),
                };
                let e = &w.embedding;
                let sound = !wagner
                    && w.verify().unwrap()
                    && subdivision_is_valid(g, &pattern, &e.branch, &e.paths)
                    && model_is_valid(g, &pattern, &subdivision_to_model(e).unwrap().sets);
                if !sound {
                    witness_errors += 1;
                }
            }
            None if !wagner => witness_errors += 1,
            None => {}
        }
    };
    for n in 1..=6 {
        for mask in 0u64..1 << (n * (n - 1) / 2) {
            check(&Graph::from_edge_mask(n, mask).unwrap());
        }
    }
    let exhaustive: usize = (1..=6).map(|n| 1usize << (n * (n - 1) / 2)).sum();
    let mut rng = rng(0x13);
    for _ in 0..500 {
        let n = *[7, 8].choose(&mut rng).unwrap();
        let m = rng.gen_range(0..=16);
        check(&random_graph_m(&mut rng, n, m));
    }
    let (fast, time) = within(Duration::from_secs(1800), start);
    verdict(
        disagreements == 0 && witness_errors == 0 && fast,
        format!(
            "{exhaustive} graphs n<=6 + 500 random n in {{7,8}}: {nonplanar} non-planar, {disagreements} disagreements, \
             {witness_errors} witness errors in {time}"
        ),
    )
}

fn fan_bound() -> Verdict {
    let mut rng = rng(0x15);
    let (mut trials, mut failures) = (0, 0);
    while trials < 400 {
        let n = rng.gen_range(3..=8);
        let g = random_graph_between(&mut rng, n, 0.4, 0.95);
        let kappa = connectivity_oracle(&g);
        if kappa == 0 {
            continue;
        }
        let k = rng.gen_range(1..=kappa.min(4));
        let center = rng.gen_range(0..n);
        let mut others: Vec<Vertex> = (0..n).filter(|&v| v != center).collect();
        others.shuffle(&mut rng);
        let size = rng.gen_range(k..=others.len());
        let targets = &others[..size];
        trials += 1;
        let f = fan(&g, center, targets).unwrap();
        if f.size() < k || !f.verify(&g) || !fan_is_valid(&g, center, targets, &f.paths) {
            failures += 1;
        }
    }
    verdict(failures == 0, format!("{trials} trials, {failures} failures"))
}

fn layer_bound() -> Verdict {
    let mut rng = rng(0x23);
    let (mut graphs, mut roots, mut failures, mut chi_errors) = (0, 0, 0, 0);
    while graphs < 250 {
        let n = rng.gen_range(1..=10);
        let g = random_graph_between(&mut rng, n, 0.2, 0.9);
        if !g.is_connected() {
            continue;
        }
        graphs += 1;
        let chi = chromatic_number(&g).unwrap().0;
        if chi != chromatic_oracle(&g) {
            chi_errors += 1;
        }
        for x in g.vertices() {
            roots += 1;
            let c = max_chromatic_layer(&g, x).unwrap();
            let (layer, _) = g.induced_subgraph(&c.layers.layers[c.d]).unwrap();
            let layer_chi = chromatic_oracle(&layer);
            let best =
                c.layers.layers.iter().map(|s| chromatic_oracle(&g.induced_subgraph(s).unwrap().0)).max().unwrap();
            if layer_chi != c.chi() || layer_chi != best || 2 * layer_chi < chi {
                failures += 1;
            }
        }
    }
    verdict(
        failures == 0 && chi_errors == 0,
        format!("{graphs} graphs, {roots} roots, {failures} bound failures, {chi_errors} chromatic mismatches"),
    )
}

fn clique_extraction() -> Verdict {
    let mut failures = 0;
    let mut cases = 0;
    let mut k8_time = Duration::ZERO;
    let check = |g: &Graph, k: usize, oracle: bool| -> bool {
        let t = extract_clique_minor(g, k).unwrap();
        let pattern = complete(k).unwrap();
        let mut ok = t.model.verify().unwrap() && model_is_valid(g, &pattern, &t.model.sets);
        let mut prev = chromatic_oracle(g);
        for l in &t.levels {
            ok &= l.layer > 0 && 2 * l.layer_chi >= prev;
            prev = l.layer_chi;
        }
        if oracle {
            ok &= has_minor_oracle(g, &pattern).unwrap();
        }
        ok
    };
    for k in [2usize, 3] {
        for m in (1 << k)..=10 {
            let g = complete(m).unwrap();
            let start = Instant::now();
            cases += 1;
            failures += !check(&g, k, true) as usize;
            if (m, k) == (8, 3) {
                k8_time = start.elapsed();
            }
        }
    }
    let mut rng = rng(0x24);
    let mut random = 0;
    while random < 50 {
        let n = rng.gen_range(4..=10);
        let g = random_graph_between(&mut rng, n, 0.5, 0.95);
        if chromatic_oracle(&g) < 4 {
            continue;
        }
        random += 1;
        cases += 1;
        failures += !check(&g, 2, false) as usize;
    }
    let fast = k8_time < Duration::from_secs(1);
    verdict(
        failures == 0 && fast,
        format!("{cases} extractions, {failures} failures; K8 with k=3 took {:.3}s (limit 1s)", k8_time.as_secs_f64()),
    )
}

fn hadwiger_small() -> Verdict {
    let start = Instant::now();
    let report = hadwiger_scan(6, 6, ScanMode::Exhaustive).unwrap();
    let (fast, time) = within(Duration::from_secs(1800), start);
    verdict(
        report.counterexamples.is_empty() && report.graphs == 1 + 2 + 8 + 64 + 1024 + 32768 && fast,
        format!(
            "{} graphs, {} checks, {} counterexamples in {time}",
            report.graphs,
            report.checks,
            report.counterexamples.len()
        ),
    )
}

/// The six structural clauses, recomputed from the witness graph alone.
fn witness_clauses(w: &MinimalWitness) -> [bool; 6] {
    let g = &w.subgraph;
    let h = &w.model.pattern;
    let sets = &w.model.sets;
    let owner = |v: Vertex| sets.iter().position(|s| s.contains(&v));
    let inside = |s: &[Vertex]| g.edges().filter(|&(a, b)| s.contains(&a) && s.contains(&b)).count();
    let trees = sets.iter().all(|s| connected_within(g, s) && inside(s) + 1 == s.len());
    let between = |i: usize, j: usize| {
        g.edges()
            .filter(|&(a, b)| {
                let (oa, ob) = (owner(a), owner(b));
                (oa, ob) == (Some(i), Some(j)) || (oa, ob) == (Some(j), Some(i))
            })
            .count()
    };
    let pairs = all_pairs(h.vertex_count());
    let one_edge = pairs.iter().filter(|&&(i, j)| h.has_edge(i, j)).all(|&(i, j)| between(i, j) == 1);
    let no_edge = pairs.iter().filter(|&&(i, j)| !h.has_edge(i, j)).all(|&(i, j)| between(i, j) == 0);
    let tree_leaves = |s: &[Vertex]| -> Vec<Vertex> {
        if s.len() < 2 {
            return Vec::new();
        }
        s.iter().copied().filter(|&v| s.iter().filter(|&&u| g.has_edge(u, v)).count() == 1).collect()
    };
    let leaves_reach = sets.iter().enumerate().all(|(i, s)| {
        tree_leaves(s).into_iter().all(|v| g.neighbors(v).iter().any(|&x| owner(x).is_some_and(|j| j != i)))
    });
    let leaves_bounded = sets.iter().enumerate().all(|(i, s)| tree_leaves(s).len() <= h.degree(i));
    let cover = g.vertices().all(|v| owner(v).is_some());
    [trees, one_edge, no_edge, leaves_reach, leaves_bounded, cover]
}

fn minimal_witness_clauses() -> Verdict {
    let mut rng = rng(0x09);
    let mut pairs = 0;
    let mut clause_failures = [0usize; 6];
    let mut bad_models = 0;
    while pairs < 100 {
        let n = rng.gen_range(3..=9);
        let g = random_graph_between(&mut rng, n, 0.3, 0.8);
        let k = rng.gen_range(2..=5);
        let h = random_graph_between(&mut rng, k, 0.3, 1.0);
        let Some(w) = minimize_minor_witness(&g, &h).unwrap() else {
            continue;
        };
        pairs += 1;
        let sub_ok = w.host_edges().iter().all(|&(a, b)| g.has_edge(a, b));
        if !sub_ok || !model_is_valid(&w.subgraph, &h, &w.model.sets) {
            bad_models += 1;
        }
        for (count, ok) in clause_failures.iter_mut().zip(witness_clauses(&w)) {
            *count += !ok as usize;
        }
    }
    let names = ["trees", "one-edge", "no-edge", "leaves-reach", "leaves<=deg", "cover"];
    let summary: Vec<String> = names.iter().zip(clause_failures).map(|(n, c)| format!("{n}:{c}")).collect();
    verdict(
        clause_failures.iter().all(|&c| c == 0) && bad_models == 0,
        format!("{pairs} pairs, {bad_models} bad models, clause failures [{}]", summary.join(" ")),
    )
}

fn main() {
    type Criterion = (&'static str, fn() -> Verdict);
    let criteria: [Criterion; 10] = [
        ("Petersen suite", petersen_suite),
        ("minor definitions agree", definition_equivalence),
        ("subgraph => subdivision => minor", containment_chain),
        ("subcubic minor <=> subdivision", subcubic_equivalence),
        ("forbidden minors vs embedding oracle", wagner_vs_oracle),
        ("fan bound", fan_bound),
        ("layer chromatic bound", layer_bound),
        ("clique minor extraction", clique_extraction),
        ("small-order Hadwiger scan", hadwiger_small),
        ("minimal witness structure", minimal_witness_clauses),
    ];
    let filter: Vec<usize> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let id = i + 1;
        if !filter.is_empty() && !filter.contains(&id) {
            continue;
        }
        let start = Instant::now();
        let v = run();
        let tag = if v.pass { "PASS" } else { "FAIL" };
        println!("criterion {id:>2} [{tag}] {name}: {} ({:.1}s)", v.detail, start.elapsed().as_secs_f64());
        failed += !v.pass as usize;
    }
    if failed > 0 {
        eprintln!("{failed} criteria failed");
        std::process::exit(1);
    }
}
