//! Exit criteria. Each test prints one `[PASS]`/`[FAIL]` line and then
//! asserts, so `cargo test --test acceptance -- --nocapture` gives a summary.

mod common;

use std::time::{Duration, Instant};

use common::random_graphs;
use superline_core::graph::diamond;
use superline_core::*;

fn report(id: &str, what: &str, ok: bool, elapsed: Duration, detail: &str) {
    println!(
        "[{}] {id} {what} ({:.3}s){}{detail}",
        if ok { "PASS" } else { "FAIL" },
        elapsed.as_secs_f64(),
        if detail.is_empty() { "" } else { ": " }
    );
}

fn spec(n: usize, m: usize) -> GridSpec {
    GridSpec::new(n, m).unwrap()
}

#[test]
fn c1_golden_formula_values() {
    let start = Instant::now();
    let mut wrong = Vec::new();
    let mut cases = vec![(6, 4, 18), (5, 4, 14), (7, 5, 26), (1, 1, 0)];
    cases.extend((2..=10).map(|k| (k, 1, k / 2)));
    for (n, m, want) in cases {
        let got = lc_grid_formula(n, m).unwrap().value;
        if got != want {
            wrong.push(format!("({n},{m}) -> {got}, want {want}"));
        }
    }
    let elapsed = start.elapsed();
    let ok = wrong.is_empty() && elapsed < Duration::from_secs(1);
    report(
        "C1",
        "golden formula values",
        ok,
        elapsed,
        &wrong.join("; "),
    );
    assert!(ok, "{wrong:?}");
}

#[test]
fn c2_super_line_graph_golden() {
    let start = Instant::now();
    let l = super_line_graph(&path(5).unwrap(), 2).unwrap();
    let (v, e, complete) = (
        l.graph.vertex_count(),
        l.graph.edge_count(),
        l.graph.is_complete(),
    );
    let elapsed = start.elapsed();
    let ok = v == 6 && e == 15 && complete && elapsed < Duration::from_secs(1);
    report(
        "C2",
        "L_2(P_5) = K_6",
        ok,
        elapsed,
        &format!("{v} vertices, {e} edges, complete = {complete}"),
    );
    assert!(ok);
}

#[test]
fn c3_line_graph_golden() {
    let start = Instant::now();
    let l = line_graph(&diamond());
    let elapsed = start.elapsed();
    let ok = l.vertex_count() == 5 && l.edge_count() == 8 && elapsed < Duration::from_secs(1);
    report(
        "C3",
        "line graph of the diamond",
        ok,
        elapsed,
        &format!("{} vertices, {} edges", l.vertex_count(), l.edge_count()),
    );
    assert!(ok);
}

#[test]
fn c4_oracle_matches_formula_on_small_grids() {
    let start = Instant::now();
    let mut rows = Vec::new();
    let mut mismatches = Vec::new();
    for (n, m) in [
        (2, 2),
        (3, 2),
        (2, 3),
        (4, 2),
        (2, 4),
        (3, 3),
        (5, 2),
        (2, 5),
    ] {
        let oracle = lc_bruteforce(&grid(spec(n, m)).unwrap()).unwrap().r;
        let formula = lc_grid_formula(n, m).unwrap().value;
        rows.push(format!("{n}x{m}: oracle {oracle}, formula {formula}"));
        if oracle != formula {
            mismatches.push(format!("{n}x{m}: oracle {oracle} != formula {formula}"));
        }
    }
    let elapsed = start.elapsed();
    let ok = mismatches.is_empty() && elapsed <= Duration::from_secs(60);
    report(
        "C4",
        "exhaustive search agrees with the closed form on grids <= 13 edges",
        ok,
        elapsed,
        &if ok {
            rows.join("; ")
        } else {
            mismatches.join("; ")
        },
    );
    assert!(ok, "{mismatches:?}");
}

#[test]
fn c5_witness_suite() {
    let start = Instant::now();
    let mut failures = Vec::new();
    for n in 2..=12 {
        for m in 2..=12 {
            let sp = spec(n, m);
            let s = best_slicing(sp).unwrap();
            let report = verify_slicing(&grid(sp).unwrap(), &s).unwrap();
            if !report.passed() || report.checks.len() != 5 {
                failures.push(format!("{n}x{m}"));
            }
        }
    }
    let elapsed = start.elapsed();
    let ok = failures.is_empty() && elapsed < Duration::from_secs(5);
    report(
        "C5",
        "best slicing passes all five checks for 2 <= n, m <= 12",
        ok,
        elapsed,
        &failures.join(", "),
    );
    assert!(ok, "{failures:?}");
}

#[test]
fn c6_monotonicity() {
    let start = Instant::now();
    let mut graphs: Vec<(String, Graph)> = Vec::new();
    for rows in 1..=11 {
        for cols in 1..=11 {
            let sp = GridSpec { cols, rows };
            if sp.edge_count() <= 10 {
                graphs.push((format!("grid {cols}x{rows}"), grid(sp).unwrap()));
            }
        }
    }
    for (i, g) in random_graphs(50, 10, 0xacce97).into_iter().enumerate() {
        graphs.push((format!("random #{i}"), g));
    }
    let mut violations = Vec::new();
    let mut checked = 0;
    for (name, g) in &graphs {
        for r in 1..g.edge_count() {
            checked += 1;
            if is_complete_index(g, r).unwrap() && !is_complete_index(g, r + 1).unwrap() {
                violations.push(format!("{name} at r = {r}"));
            }
        }
    }
    let elapsed = start.elapsed();
    let ok = violations.is_empty();
    report(
        "C6",
        "completeness is monotone in r",
        ok,
        elapsed,
        &format!(
            "{} graphs, {checked} (g, r) pairs{}",
            graphs.len(),
            if violations.is_empty() {
                String::new()
            } else {
                format!("; {}", violations.join(", "))
            }
        ),
    );
    assert!(ok, "{violations:?}");
}

#[test]
fn c7_r1_reduction() {
    let start = Instant::now();
    let graphs = [
        ("diamond", diamond()),
        ("path(5)", path(5).unwrap()),
        ("grid(3,3)", grid(spec(3, 3)).unwrap()),
    ];
    let mut failures = Vec::new();
    for (name, g) in &graphs {
        let l1 = super_line_graph(g, 1).unwrap();
        let singletons = l1
            .labels
            .iter()
            .enumerate()
            .all(|(k, s)| s.to_vec() == vec![k]);
        if !singletons || l1.graph != line_graph(g) {
            failures.push(*name);
        }
    }
    let elapsed = start.elapsed();
    let ok = failures.is_empty();
    report(
        "C7",
        "L_1(G) equals L(G)",
        ok,
        elapsed,
        &failures.join(", "),
    );
    assert!(ok);
}
