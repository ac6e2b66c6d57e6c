//! Reference implementations that share no code path with the library's
//! search: plain recursion over index vectors and endpoint comparisons.

#![allow(dead_code)]

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use superline_core::{Graph, GridSpec};

pub fn touches(a: (usize, usize), b: (usize, usize)) -> bool {
    a.0 == b.0 || a.0 == b.1 || a.1 == b.0 || a.1 == b.1
}

/// All k-subsets of 0..n in lexicographic order.
pub fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for x in start..n {
            if n - x < k - cur.len() {
                break;
            }
            cur.push(x);
            rec(x + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, k, &mut Vec::new(), &mut out);
    out
}

pub fn naive_adjacent(g: &Graph, s: &[usize], t: &[usize]) -> bool {
    let e = g.edges();
    s.iter()
        .any(|&i| t.iter().any(|&j| i != j && touches(e[i], e[j])))
}

/// Lexicographically first non-adjacent pair S < T of r-subsets.
pub fn naive_first_pair(g: &Graph, r: usize) -> Option<(Vec<usize>, Vec<usize>)> {
    let all = subsets(g.edge_count(), r);
    for (i, s) in all.iter().enumerate() {
        for t in &all[i + 1..] {
            if !naive_adjacent(g, s, t) {
                return Some((s.clone(), t.clone()));
            }
        }
    }
    None
}

pub fn naive_lc(g: &Graph) -> usize {
    if g.edge_count() == 0 {
        return 0;
    }
    (1..=g.edge_count())
        .find(|&r| naive_first_pair(g, r).is_none())
        .unwrap()
}

/// Seeded random simple graphs with at most `max_edges` edges.
pub fn random_graphs(count: usize, max_edges: usize, seed: u64) -> Vec<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let n = rng.gen_range(2..=8);
            let mut pairs: Vec<(usize, usize)> = (0..n)
                .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
                .collect();
            for i in (1..pairs.len()).rev() {
                pairs.swap(i, rng.gen_range(0..=i));
            }
            let m = rng.gen_range(0..=max_edges.min(pairs.len()));
            pairs.truncate(m);
            Graph::new(n, pairs).unwrap()
        })
        .collect()
}

/// Every grid (including paths) with at most `max_edges` edges.
pub fn small_grids(max_edges: usize) -> Vec<GridSpec> {
    let mut out = Vec::new();
    for rows in 1..=max_edges + 1 {
        for cols in 1..=max_edges + 1 {
            let spec = GridSpec { cols, rows };
            if spec.edge_count() <= max_edges {
                out.push(spec);
            }
        }
    }
    out
}
