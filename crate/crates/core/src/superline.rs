//! Super line graphs `L_r(G)` and the exhaustive line-completion oracle.
//!
//! Two `r`-subsets `S` and `T` of the edge set are adjacent in `L_r(G)` when
//! some `s in S` and `t in T` are distinct edges sharing an endpoint.
//! Overlapping subsets are ordinary vertices of `L_r(G)` and are searched like
//! any other pair.
//!
//! The pair search visits the `r`-subsets `S` in lexicographic order. For each
//! one it forms `N(S)`, the union of the adjacency masks of its edges; a
//! partner `T` is non-adjacent to `S` exactly when `T` avoids `N(S)`, so the
//! lexicographically smallest partner above `S` can be read straight off the
//! complement of `N(S)`. Partners below `S` need not be checked: such a pair
//! would already have been reported when its smaller member was visited.
//! Prefixes whose union leaves fewer than `r` edges free are skipped whole.

use serde::ser::{Serialize, SerializeSeq, Serializer};

use crate::edgeset::{count_above, next_bit, EdgeSet};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Default probe budget for exhaustive searches.
pub const DEFAULT_PAIR_BUDGET: u64 = 1_000_000_000;

/// Default ceiling on `C(|E|, r)` for [`super_line_graph`].
pub const DEFAULT_VERTEX_CAP: u64 = 100_000;

/// Default ceiling on the number of edges of a materialised `L_r(G)`.
pub const DEFAULT_SUPERLINE_EDGE_CAP: usize = 1 << 24;

impl Serialize for EdgeSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.len()))?;
        for i in self.iter() {
            seq.serialize_element(&i)?;
        }
        seq.end()
    }
}

/// Limit on the work an exhaustive search may do.
///
/// One probe is one candidate subset `S` checked against the complement of
/// its adjacency union; a probe settles every pair `(S, T)` at once.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchBudget {
    pub max_probes: u64,
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget {
            max_probes: DEFAULT_PAIR_BUDGET,
        }
    }
}

impl SearchBudget {
    pub fn new(max_probes: u64) -> Result<Self> {
        if max_probes == 0 {
            return Err(Error::invalid("search budget must be positive"));
        }
        Ok(SearchBudget { max_probes })
    }
}

/// Two distinct, equal-size, mutually non-adjacent edge subsets: a
/// certificate that `L_r(G)` is not complete.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct WitnessPair {
    r: usize,
    #[serde(rename = "S")]
    s: EdgeSet,
    #[serde(rename = "T")]
    t: EdgeSet,
}

impl WitnessPair {
    /// Checks the certificate against `g` before accepting it.
    pub fn new(g: &Graph, s: EdgeSet, t: EdgeSet) -> Result<Self> {
        if s.len() != t.len() {
            return Err(Error::invalid(format!(
                "witness sides differ in size ({} vs {})",
                s.len(),
                t.len()
            )));
        }
        if s == t {
            return Err(Error::invalid("witness sides are identical"));
        }
        if s.is_empty() {
            return Err(Error::invalid("witness sides are empty"));
        }
        if sets_adjacent(g, &s, &t)? {
            return Err(Error::invalid("witness sides are adjacent"));
        }
        Ok(WitnessPair { r: s.len(), s, t })
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn s(&self) -> &EdgeSet {
        &self.s
    }

    pub fn t(&self) -> &EdgeSet {
        &self.t
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    Formula,
    BruteForce,
}

/// A line completion number together with how it was obtained.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct LcResult {
    pub r: usize,
    pub method: Method,
    /// Certificate that `L_{r-1}` is incomplete, when `r >= 2`.
    pub witness_at_r_minus_1: Option<WitnessPair>,
}

/// Largest index admitting a non-adjacent pair, with the pair found there.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct MaxNonadjacent {
    pub r_max: usize,
    pub witness: WitnessPair,
}

fn check_universe(g: &Graph, set: &EdgeSet) -> Result<()> {
    if set.universe() != g.edge_count() {
        return Err(Error::invalid(format!(
            "edge set over {} edges used with a graph of {} edges",
            set.universe(),
            g.edge_count()
        )));
    }
    Ok(())
}

/// Union of the adjacency masks of the edges in `s`.
pub fn neighbourhood(g: &Graph, s: &EdgeSet) -> Result<EdgeSet> {
    check_universe(g, s)?;
    let adj = g.edge_adjacency();
    let mut out = EdgeSet::empty(g.edge_count());
    for i in s.iter() {
        for (w, a) in out.words_mut().iter_mut().zip(adj[i].words()) {
            *w |= a;
        }
    }
    out.recount();
    Ok(out)
}

/// Whether some edge of `s` and some distinct edge of `t` share an endpoint.
pub fn sets_adjacent(g: &Graph, s: &EdgeSet, t: &EdgeSet) -> Result<bool> {
    check_universe(g, t)?;
    Ok(neighbourhood(g, s)?.intersects(t))
}

/// Number of `k`-subsets of an `n`-set, or `None` on overflow.
pub fn binomial(n: usize, k: usize) -> Option<u64> {
    if k > n {
        return Some(0);
    }
    let k = k.min(n - k) as u128;
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc.checked_mul(n as u128 - i)? / (i + 1);
    }
    u64::try_from(acc).ok()
}

/// Lexicographic iterator over the `k`-subsets of `0..n`.
#[derive(Debug, Clone)]
pub struct Combinations {
    n: usize,
    current: Option<Vec<usize>>,
}

impl Combinations {
    pub fn new(n: usize, k: usize) -> Self {
        Combinations {
            n,
            current: (k <= n).then(|| (0..k).collect()),
        }
    }
}

impl Iterator for Combinations {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let out = self.current.clone()?;
        let cur = self.current.as_mut().unwrap();
        let k = cur.len();
        match (0..k).rev().find(|&i| cur[i] < self.n - k + i) {
            Some(i) => {
                cur[i] += 1;
                for j in i + 1..k {
                    cur[j] = cur[j - 1] + 1;
                }
            }
            None => self.current = None,
        }
        Some(out)
    }
}

struct Exhausted;

struct ProbeMeter {
    limit: u64,
    spent: u64,
}

impl ProbeMeter {
    fn new(budget: &SearchBudget) -> Self {
        ProbeMeter {
            limit: budget.max_probes,
            spent: 0,
        }
    }

    #[inline]
    fn tick(&mut self) -> std::result::Result<(), Exhausted> {
        self.spent += 1;
        if self.spent > self.limit {
            Err(Exhausted)
        } else {
            Ok(())
        }
    }
}

/// A non-adjacent pair as sorted index lists.
type Found = (Vec<usize>, Vec<usize>);

struct PairSearch<'a> {
    universe: usize,
    r: usize,
    adj: &'a [EdgeSet],
    chosen: Vec<usize>,
    /// `unions[k]` is the adjacency union of `chosen[..k]`.
    unions: Vec<Vec<u64>>,
    allowed: Vec<u64>,
    tail_mask: u64,
}

impl<'a> PairSearch<'a> {
    fn new(g: &'a Graph, r: usize) -> Self {
        let universe = g.edge_count();
        let words = universe.div_ceil(64);
        let rem = universe % 64;
        PairSearch {
            universe,
            r,
            adj: g.edge_adjacency(),
            chosen: vec![0; r],
            unions: vec![vec![0; words]; r + 1],
            allowed: vec![0; words],
            tail_mask: if rem == 0 {
                u64::MAX
            } else {
                (1u64 << rem) - 1
            },
        }
    }

    fn free_after(&self, depth: usize) -> usize {
        let taken: usize = self.unions[depth]
            .iter()
            .map(|w| w.count_ones() as usize)
            .sum();
        self.universe - taken
    }

    fn run(&mut self, meter: &mut ProbeMeter) -> std::result::Result<Option<Found>, Exhausted> {
        self.descend(0, 0, meter)
    }

    fn descend(
        &mut self,
        depth: usize,
        start: usize,
        meter: &mut ProbeMeter,
    ) -> std::result::Result<Option<Found>, Exhausted> {
        let r = self.r;
        for x in start..=self.universe - (r - depth) {
            self.chosen[depth] = x;
            let (lo, hi) = self.unions.split_at_mut(depth + 1);
            for ((dst, src), a) in hi[0].iter_mut().zip(&lo[depth]).zip(self.adj[x].words()) {
                *dst = src | a;
            }
            // Every extension of this prefix keeps at most this many edges
            // free, so fewer than r means no partner can exist below here.
            if self.free_after(depth + 1) < r {
                continue;
            }
            if depth + 1 == r {
                meter.tick()?;
                if let Some(t) = self.partner() {
                    return Ok(Some((self.chosen.clone(), t)));
                }
            } else if let Some(found) = self.descend(depth + 1, x + 1, meter)? {
                return Ok(Some(found));
            }
        }
        Ok(None)
    }

    /// Smallest r-subset of the free edges that is lexicographically above
    /// the current subset.
    fn partner(&mut self) -> Option<Vec<usize>> {
        let r = self.r;
        let last = self.allowed.len().wrapping_sub(1);
        for (i, (dst, src)) in self.allowed.iter_mut().zip(&self.unions[r]).enumerate() {
            *dst = !src;
            if i == last {
                *dst &= self.tail_mask;
            }
        }
        let allowed = &self.allowed;
        let in_allowed = |e: usize| allowed[e / 64] & (1u64 << (e % 64)) != 0;

        // T agrees with S on a prefix of length p, then strictly exceeds it.
        let shared = self.chosen.iter().take_while(|&&e| in_allowed(e)).count();
        for p in (0..=shared.min(r - 1)).rev() {
            let Some(pivot) = next_bit(allowed, Some(self.chosen[p])) else {
                continue;
            };
            let need = r - p - 1;
            if count_above(allowed, pivot) < need {
                continue;
            }
            let mut t = Vec::with_capacity(r);
            t.extend_from_slice(&self.chosen[..p]);
            t.push(pivot);
            let mut cursor = pivot;
            for _ in 0..need {
                cursor = next_bit(allowed, Some(cursor)).expect("counted above");
                t.push(cursor);
            }
            return Some(t);
        }
        None
    }
}

fn check_index(g: &Graph, r: usize) -> Result<()> {
    if r == 0 || r > g.edge_count() {
        return Err(Error::invalid(format!(
            "index r = {r} must lie in 1..={} for a graph with {} edges",
            g.edge_count(),
            g.edge_count()
        )));
    }
    Ok(())
}

fn search_at(
    g: &Graph,
    r: usize,
    meter: &mut ProbeMeter,
) -> std::result::Result<Option<WitnessPair>, Exhausted> {
    let found = PairSearch::new(g, r).run(meter)?;
    Ok(found.map(|(s, t)| {
        let m = g.edge_count();
        WitnessPair {
            r,
            s: EdgeSet::from_indices(m, s).expect("indices come from the search"),
            t: EdgeSet::from_indices(m, t).expect("indices come from the search"),
        }
    }))
}

/// Lexicographically first pair `(S, T)`, `S < T`, of non-adjacent
/// `r`-subsets, or `None` when `L_r(G)` is complete.
pub fn find_nonadjacent_pair(g: &Graph, r: usize) -> Result<Option<WitnessPair>> {
    find_nonadjacent_pair_with(g, r, &SearchBudget::default())
}

pub fn find_nonadjacent_pair_with(
    g: &Graph,
    r: usize,
    budget: &SearchBudget,
) -> Result<Option<WitnessPair>> {
    check_index(g, r)?;
    let mut meter = ProbeMeter::new(budget);
    search_at(g, r, &mut meter).map_err(|_| Error::Budget {
        budget: budget.max_probes,
        at_r: r,
        decided_through: 0,
    })
}

pub fn is_complete_index(g: &Graph, r: usize) -> Result<bool> {
    is_complete_index_with(g, r, &SearchBudget::default())
}

pub fn is_complete_index_with(g: &Graph, r: usize, budget: &SearchBudget) -> Result<bool> {
    Ok(find_nonadjacent_pair_with(g, r, budget)?.is_none())
}

/// Scans r = 1, 2, ... until L_r(G) is complete. Returns that index and the
/// witness found at the index before it.
fn scan_up(g: &Graph, budget: &SearchBudget) -> Result<(usize, Option<WitnessPair>)> {
    if g.edge_count() == 0 {
        return Ok((0, None));
    }
    let mut meter = ProbeMeter::new(budget);
    let mut last = None;
    for r in 1..=g.edge_count() {
        match search_at(g, r, &mut meter) {
            Ok(Some(w)) => last = Some(w),
            Ok(None) => return Ok((r, last)),
            Err(Exhausted) => {
                return Err(Error::Budget {
                    budget: budget.max_probes,
                    at_r: r,
                    decided_through: r - 1,
                })
            }
        }
    }
    unreachable!("L_|E|(G) has a single vertex and is always complete")
}

/// Line completion number by exhaustive search.
pub fn lc_bruteforce(g: &Graph) -> Result<LcResult> {
    lc_bruteforce_with(g, &SearchBudget::default())
}

pub fn lc_bruteforce_with(g: &Graph, budget: &SearchBudget) -> Result<LcResult> {
    let (r, witness) = scan_up(g, budget)?;
    Ok(LcResult {
        r,
        method: Method::BruteForce,
        witness_at_r_minus_1: witness,
    })
}

/// Largest `r` for which `L_r(G)` has a non-adjacent pair.
pub fn max_nonadjacent_r(g: &Graph) -> Result<Option<MaxNonadjacent>> {
    max_nonadjacent_r_with(g, &SearchBudget::default())
}

pub fn max_nonadjacent_r_with(g: &Graph, budget: &SearchBudget) -> Result<Option<MaxNonadjacent>> {
    let (_, witness) = scan_up(g, budget)?;
    Ok(witness.map(|w| MaxNonadjacent {
        r_max: w.r,
        witness: w,
    }))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SuperLineOptions {
    pub vertex_cap: u64,
    pub edge_cap: usize,
}

impl Default for SuperLineOptions {
    fn default() -> Self {
        SuperLineOptions {
            vertex_cap: DEFAULT_VERTEX_CAP,
            edge_cap: DEFAULT_SUPERLINE_EDGE_CAP,
        }
    }
}

/// A materialised `L_r(G)`: vertex `k` stands for `labels[k]`.
#[derive(Debug, Clone)]
pub struct SuperLineGraph {
    pub graph: Graph,
    pub labels: Vec<EdgeSet>,
}

pub fn super_line_graph(g: &Graph, r: usize) -> Result<SuperLineGraph> {
    super_line_graph_with(g, r, &SuperLineOptions::default())
}

pub fn super_line_graph_with(
    g: &Graph,
    r: usize,
    opts: &SuperLineOptions,
) -> Result<SuperLineGraph> {
    check_index(g, r)?;
    let m = g.edge_count();
    let count = binomial(m, r)
        .filter(|&c| c <= opts.vertex_cap)
        .ok_or_else(|| {
            let shown = binomial(m, r).map_or_else(|| "more than 2^64".into(), |c| c.to_string());
            Error::capacity(format!(
                "L_{r} has C({m}, {r}) = {shown} vertices, above the cap of {}",
                opts.vertex_cap
            ))
        })? as usize;

    let mut labels = Vec::with_capacity(count);
    let mut reach = Vec::with_capacity(count);
    for combo in Combinations::new(m, r) {
        let set = EdgeSet::from_indices(m, combo).expect("combination indices are valid");
        reach.push(neighbourhood(g, &set)?);
        labels.push(set);
    }

    let mut edges = Vec::new();
    for (i, near) in reach.iter().enumerate() {
        for (j, label) in labels.iter().enumerate().skip(i + 1) {
            if near.intersects(label) {
                if edges.len() == opts.edge_cap {
                    return Err(Error::capacity(format!(
                        "L_{r} has more than {} edges",
                        opts.edge_cap
                    )));
                }
                edges.push((i, j));
            }
        }
    }
    Ok(SuperLineGraph {
        graph: Graph::from_parts(count, edges),
        labels,
    })
}
