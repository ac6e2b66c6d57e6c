mod common;

use common::*;
use proptest::prelude::*;
use superline_core::graph::diamond;
use superline_core::superline::{binomial, find_nonadjacent_pair, SearchBudget};
use superline_core::*;

fn corpus() -> Vec<Graph> {
    let mut gs: Vec<Graph> = small_grids(10)
        .into_iter()
        .map(|s| grid(s).unwrap())
        .collect();
    gs.push(diamond());
    gs.extend(random_graphs(50, 10, 0x5eed));
    gs
}

fn check_witness(g: &Graph, w: &WitnessPair) {
    let (s, t) = (w.s().to_vec(), w.t().to_vec());
    assert_eq!(s.len(), w.r());
    assert_eq!(t.len(), w.r());
    assert_ne!(s, t);
    assert!(!naive_adjacent(g, &s, &t));
    assert!(!sets_adjacent(g, w.s(), w.t()).unwrap());
}

#[test]
fn search_matches_naive_first_pair_everywhere() {
    for g in corpus() {
        for r in 1..=g.edge_count() {
            let fast = find_nonadjacent_pair(&g, r).unwrap();
            let slow = naive_first_pair(&g, r);
            assert_eq!(
                fast.as_ref().map(|w| (w.s().to_vec(), w.t().to_vec())),
                slow,
                "graph {:?}, r = {r}",
                g.edges()
            );
            if let Some(w) = fast {
                check_witness(&g, &w);
            }
        }
    }
}

#[test]
fn monotonicity() {
    for g in corpus() {
        let complete: Vec<bool> = (1..=g.edge_count())
            .map(|r| is_complete_index(&g, r).unwrap())
            .collect();
        for pair in complete.windows(2) {
            assert!(!pair[0] || pair[1], "graph {:?}: {complete:?}", g.edges());
        }
    }
}

#[test]
fn oracle_consistency() {
    for g in corpus() {
        let lc = lc_bruteforce(&g).unwrap();
        assert_eq!(lc.r, naive_lc(&g));
        match max_nonadjacent_r(&g).unwrap() {
            Some(best) => {
                assert_eq!(lc.r, best.r_max + 1);
                check_witness(&g, &best.witness);
                assert_eq!(lc.witness_at_r_minus_1.as_ref(), Some(&best.witness));
            }
            None => assert!(lc.r <= 1),
        }
        if let Some(w) = &lc.witness_at_r_minus_1 {
            assert_eq!(w.r() + 1, lc.r);
        }
    }
}

#[test]
fn r1_reduction_and_materialised_completeness() {
    for g in corpus().into_iter().filter(|g| g.edge_count() > 0) {
        let l1 = super_line_graph(&g, 1).unwrap();
        assert_eq!(l1.graph, line_graph(&g));
        for (k, label) in l1.labels.iter().enumerate() {
            assert_eq!(label.to_vec(), vec![k]);
        }
        for r in 1..=g.edge_count().min(6) {
            let l = super_line_graph(&g, r).unwrap();
            let n = binomial(g.edge_count(), r).unwrap() as usize;
            assert_eq!(l.graph.vertex_count(), n);
            assert_eq!(
                is_complete_index(&g, r).unwrap(),
                l.graph.edge_count() == n * (n - 1) / 2
            );
        }
    }
}

#[test]
fn overlapping_pairs_are_searched() {
    // Three disjoint edges: {e0, e1} and {e0, e2} share e0 yet no two
    // distinct edges touch, so L_2 is incomplete.
    let g = Graph::new(6, vec![(0, 1), (2, 3), (4, 5)]).unwrap();
    let w = find_nonadjacent_pair(&g, 2).unwrap().unwrap();
    assert_eq!((w.s().to_vec(), w.t().to_vec()), (vec![0, 1], vec![0, 2]));
    assert_eq!(lc_bruteforce(&g).unwrap().r, 3);
}

#[test]
fn paths_agree_with_floor_half() {
    for k in 2..=9 {
        assert_eq!(lc_bruteforce(&path(k).unwrap()).unwrap().r, k / 2);
    }
}

#[test]
fn larger_budget_is_never_less_decisive() {
    let g = grid(GridSpec::new(3, 3).unwrap()).unwrap();
    let exact = lc_bruteforce(&g).unwrap().r;
    for probes in [1, 2, 4, 16, 256, 1 << 20] {
        match superline::lc_bruteforce_with(&g, &SearchBudget::new(probes).unwrap()) {
            Ok(res) => assert_eq!(res.r, exact),
            Err(Error::Budget {
                decided_through, ..
            }) => assert!(decided_through < exact),
            Err(e) => panic!("{e}"),
        }
    }
}

fn arb_graph() -> impl Strategy<Value = Graph> {
    (2usize..=7)
        .prop_flat_map(|n| {
            let pairs: Vec<(usize, usize)> = (0..n)
                .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
                .collect();
            (
                Just(n),
                proptest::sample::subsequence(pairs.clone(), 0..=pairs.len().min(9)),
            )
        })
        .prop_map(|(n, edges)| Graph::new(n, edges).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn prop_search_agrees_with_naive(g in arb_graph()) {
        for r in 1..=g.edge_count() {
            let fast = find_nonadjacent_pair(&g, r).unwrap();
            prop_assert_eq!(
                fast.as_ref().map(|w| (w.s().to_vec(), w.t().to_vec())),
                naive_first_pair(&g, r)
            );
        }
    }

    #[test]
    fn prop_sets_adjacent_is_symmetric(g in arb_graph(), seed in any::<u64>()) {
        prop_assume!(g.edge_count() > 0);
        let m = g.edge_count();
        let s = EdgeSet::from_indices(m, (0..m).filter(|i| seed >> i & 1 == 1)).unwrap();
        let t = EdgeSet::from_indices(m, (0..m).filter(|i| seed >> (i + 20) & 1 == 1)).unwrap();
        let fast = sets_adjacent(&g, &s, &t).unwrap();
        prop_assert_eq!(fast, sets_adjacent(&g, &t, &s).unwrap());
        prop_assert_eq!(fast, naive_adjacent(&g, &s.to_vec(), &t.to_vec()));
    }
}
