//! Simple undirected graphs with indexed edges, plus the generators used
//! throughout the crate (paths, Cartesian products, grids) and the classical
//! line graph.
//!
//! # Numbering conventions
//!
//! Every certificate and every file this crate writes refers to edges by
//! index, so the numbering below is part of the public contract.
//!
//! * `cartesian_product(g, h)`: vertex `(a, b)` has id `a * |V(h)| + b`.
//!   Edges are listed as all `h`-edges first (for each `a` in order, each
//!   edge of `h` in order), then all `g`-edges (for each edge of `g` in
//!   order, each `b` in order).
//! * `grid(GridSpec { cols: n, rows: m })` is `cartesian_product(path(m),
//!   path(n))`: cell `(row i, col j)` has id `i * n + j`, and the edge list
//!   holds the horizontal edges row-major first, then the vertical edges
//!   row-major.

use std::collections::HashSet;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::edgeset::EdgeSet;
use crate::error::{Error, Result};

/// Default ceiling on the number of edges accepted by [`Graph::new`].
pub const DEFAULT_EDGE_CAP: usize = 4096;

/// Immutable simple undirected graph.
///
/// Edges are stored as `(u, v)` with `u < v` in insertion order; the position
/// in that list is the edge index. Per-edge adjacency masks (edges sharing an
/// endpoint, never the edge itself) are built on first use.
#[derive(Debug, Clone)]
pub struct Graph {
    vertex_count: usize,
    edges: Vec<(usize, usize)>,
    adjacency: OnceLock<Vec<EdgeSet>>,
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.vertex_count == other.vertex_count && self.edges == other.edges
    }
}

impl Eq for Graph {}

impl Graph {
    /// Builds a graph from a raw edge list using [`DEFAULT_EDGE_CAP`].
    pub fn new(vertex_count: usize, edges: Vec<(usize, usize)>) -> Result<Self> {
        Self::with_edge_cap(vertex_count, edges, DEFAULT_EDGE_CAP)
    }

    /// Builds a graph from a raw edge list. Pairs are normalised to `u < v`;
    /// self-loops, duplicates and out-of-range endpoints are errors.
    pub fn with_edge_cap(
        vertex_count: usize,
        edges: Vec<(usize, usize)>,
        edge_cap: usize,
    ) -> Result<Self> {
        if edges.len() > edge_cap {
            return Err(Error::capacity(format!(
                "{} edges exceeds the edge cap of {edge_cap}",
                edges.len()
            )));
        }
        let mut seen = HashSet::with_capacity(edges.len());
        let mut normalised = Vec::with_capacity(edges.len());
        for (idx, (u, v)) in edges.into_iter().enumerate() {
            if u >= vertex_count || v >= vertex_count {
                return Err(Error::invalid(format!(
                    "edge {idx} ({u}, {v}) has an endpoint outside 0..{vertex_count}"
                )));
            }
            if u == v {
                return Err(Error::invalid(format!("edge {idx} is a self-loop at {u}")));
            }
            let e = (u.min(v), u.max(v));
            if !seen.insert(e) {
                return Err(Error::invalid(format!(
                    "edge {idx} ({}, {}) is a duplicate",
                    e.0, e.1
                )));
            }
            normalised.push(e);
        }
        Ok(Self::from_parts(vertex_count, normalised))
    }

    /// Trusted constructor for edge lists already known to be simple and
    /// normalised.
    pub(crate) fn from_parts(vertex_count: usize, edges: Vec<(usize, usize)>) -> Self {
        debug_assert!(edges.iter().all(|&(u, v)| u < v && v < vertex_count));
        Graph {
            vertex_count,
            edges,
            adjacency: OnceLock::new(),
        }
    }

    #[inline]
    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    #[inline]
    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    #[inline]
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge(&self, i: usize) -> Result<(usize, usize)> {
        self.edges.get(i).copied().ok_or_else(|| {
            Error::invalid(format!(
                "edge index {i} out of range for {} edges",
                self.edges.len()
            ))
        })
    }

    /// Adjacency masks indexed by edge.
    pub fn edge_adjacency(&self) -> &[EdgeSet] {
        self.adjacency.get_or_init(|| self.build_adjacency())
    }

    /// Mask of the edges sharing an endpoint with edge `i`.
    pub fn adjacency_of(&self, i: usize) -> Result<&EdgeSet> {
        self.edge(i)?;
        Ok(&self.edge_adjacency()[i])
    }

    fn build_adjacency(&self) -> Vec<EdgeSet> {
        let m = self.edges.len();
        let mut incident: Vec<Vec<usize>> = vec![Vec::new(); self.vertex_count];
        for (i, &(u, v)) in self.edges.iter().enumerate() {
            incident[u].push(i);
            incident[v].push(i);
        }
        self.edges
            .iter()
            .enumerate()
            .map(|(i, &(u, v))| {
                let mut mask = EdgeSet::empty(m);
                for &j in incident[u].iter().chain(&incident[v]) {
                    if j != i {
                        mask.insert(j);
                    }
                }
                mask
            })
            .collect()
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.vertex_count];
        for &(u, v) in &self.edges {
            deg[u] += 1;
            deg[v] += 1;
        }
        deg
    }

    pub fn sorted_degrees(&self) -> Vec<usize> {
        let mut deg = self.degrees();
        deg.sort_unstable();
        deg
    }

    /// True when every pair of distinct vertices is joined.
    pub fn is_complete(&self) -> bool {
        let n = self.vertex_count;
        self.edges.len() == n * n.saturating_sub(1) / 2
    }
}

/// Whether edges `i` and `j` are distinct and share an endpoint.
pub fn edges_adjacent(g: &Graph, i: usize, j: usize) -> Result<bool> {
    let (a, b) = g.edge(i)?;
    let (c, d) = g.edge(j)?;
    Ok(i != j && (a == c || a == d || b == c || b == d))
}

/// Path on `k` vertices; edge `i` joins vertices `i` and `i + 1`.
pub fn path(k: usize) -> Result<Graph> {
    if k == 0 {
        return Err(Error::invalid("a path needs at least one vertex"));
    }
    if k - 1 > DEFAULT_EDGE_CAP {
        return Err(Error::capacity(format!(
            "path({k}) has {} edges, above the edge cap of {DEFAULT_EDGE_CAP}",
            k - 1
        )));
    }
    Ok(Graph::from_parts(
        k,
        (0..k - 1).map(|i| (i, i + 1)).collect(),
    ))
}

/// Cartesian product of `g` and `h` (see the module docs for numbering).
pub fn cartesian_product(g: &Graph, h: &Graph) -> Result<Graph> {
    let (gv, hv) = (g.vertex_count(), h.vertex_count());
    let vertex_count = gv
        .checked_mul(hv)
        .ok_or_else(|| Error::capacity("product vertex count overflows"))?;
    let edge_count = gv
        .checked_mul(h.edge_count())
        .and_then(|x| {
            hv.checked_mul(g.edge_count())
                .and_then(|y| x.checked_add(y))
        })
        .ok_or_else(|| Error::capacity("product edge count overflows"))?;
    if edge_count > DEFAULT_EDGE_CAP {
        return Err(Error::capacity(format!(
            "product has {edge_count} edges, above the edge cap of {DEFAULT_EDGE_CAP}"
        )));
    }

    let id = |a: usize, b: usize| a * hv + b;
    let mut edges = Vec::with_capacity(edge_count);
    for a in 0..gv {
        for &(b, b2) in h.edges() {
            edges.push((id(a, b), id(a, b2)));
        }
    }
    for &(a, a2) in g.edges() {
        for b in 0..hv {
            edges.push((id(a, b), id(a2, b)));
        }
    }
    Ok(Graph::from_parts(vertex_count, edges))
}

/// Grid dimensions: `cols` is the horizontal extent (n), `rows` the vertical
/// extent (m).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GridSpec {
    pub cols: usize,
    pub rows: usize,
}

impl GridSpec {
    pub fn new(cols: usize, rows: usize) -> Result<Self> {
        let spec = GridSpec { cols, rows };
        spec.validate()?;
        Ok(spec)
    }

    pub fn validate(&self) -> Result<()> {
        if self.cols == 0 || self.rows == 0 {
            return Err(Error::invalid(format!(
                "grid dimensions must be at least 1 (got cols = {}, rows = {})",
                self.cols, self.rows
            )));
        }
        Ok(())
    }

    /// Vertex id of the cell at `(row, col)`.
    #[inline]
    pub fn vertex_id(&self, row: usize, col: usize) -> usize {
        row * self.cols + col
    }

    /// Inverse of [`GridSpec::vertex_id`], returning `(row, col)`.
    #[inline]
    pub fn cell(&self, vertex: usize) -> (usize, usize) {
        (vertex / self.cols, vertex % self.cols)
    }

    pub fn vertex_count(&self) -> usize {
        self.cols * self.rows
    }

    /// `2mn - m - n`.
    pub fn edge_count(&self) -> usize {
        let (n, m) = (self.cols, self.rows);
        m * (n - 1) + (m - 1) * n
    }

    /// Number of horizontal edges; indices below this are horizontal.
    pub fn horizontal_edge_count(&self) -> usize {
        self.rows * (self.cols - 1)
    }

    pub fn transposed(&self) -> GridSpec {
        GridSpec {
            cols: self.rows,
            rows: self.cols,
        }
    }
}

/// The grid `P_cols x P_rows`.
pub fn grid(spec: GridSpec) -> Result<Graph> {
    spec.validate()?;
    cartesian_product(&path(spec.rows)?, &path(spec.cols)?)
}

/// Line graph: vertex `k` is edge `k` of `g`.
pub fn line_graph(g: &Graph) -> Graph {
    let mut edges = Vec::new();
    for (i, mask) in g.edge_adjacency().iter().enumerate() {
        edges.extend(mask.iter().filter(|&j| j > i).map(|j| (i, j)));
    }
    Graph::from_parts(g.edge_count(), edges)
}

/// The diamond `K_4 - e` on vertices 0..4 (cycle 0-1-2-3 plus chord 0-2).
pub fn diamond() -> Graph {
    Graph::from_parts(4, vec![(0, 1), (1, 2), (2, 3), (0, 3), (0, 2)])
}
