//! Line completion numbers of grids `P_n x P_m` and the slicing certificates
//! behind their lower bounds.
//!
//! A slicing splits the grid's vertices into an `A` side, a `B` side and (for
//! two odd dimensions) one isolated centre cell. Edges with both ends on the
//! same side belong to that side; every other edge is removed. Because the
//! sides share no vertex, no edge of `A` touches an edge of `B`, so
//! `L_|A|(grid)` is not complete.
//!
//! Vertical family, on `n` columns and `m` rows:
//!
//! * `n` even: columns `0..n/2` form `A`, the rest `B`; `m` edges removed.
//! * `n` odd, `m` even: the centre column `c = (n-1)/2` belongs to `A` in
//!   rows `0..m/2` and to `B` below; `m + 1` edges removed.
//! * `n` odd, `m` odd: as above, switching at the middle row `h = (m-1)/2`
//!   whose centre cell is isolated; `m + 3` edges removed (2 when `m = 1`,
//!   where the grid is a path and the cell has no vertical edges).
//!
//! The horizontal family is the transpose.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::edgeset::EdgeSet;
use crate::error::{Error, Result};
use crate::graph::{grid, Graph, GridSpec};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FormulaCase {
    #[serde(rename = "trivial_1x1")]
    Trivial1x1,
    PathCase,
    BothEven,
    BothOdd,
    OppositeParity,
}

impl FormulaCase {
    pub fn name(self) -> &'static str {
        match self {
            FormulaCase::Trivial1x1 => "trivial_1x1",
            FormulaCase::PathCase => "path_case",
            FormulaCase::BothEven => "both_even",
            FormulaCase::BothOdd => "both_odd",
            FormulaCase::OppositeParity => "opposite_parity",
        }
    }

    pub fn classify(cols: usize, rows: usize) -> Result<Self> {
        GridSpec::new(cols, rows)?;
        Ok(match (cols, rows) {
            (1, 1) => FormulaCase::Trivial1x1,
            (1, _) | (_, 1) => FormulaCase::PathCase,
            _ if cols.is_multiple_of(2) && rows.is_multiple_of(2) => FormulaCase::BothEven,
            _ if !cols.is_multiple_of(2) && !rows.is_multiple_of(2) => FormulaCase::BothOdd,
            _ => FormulaCase::OppositeParity,
        })
    }
}

impl fmt::Display for FormulaCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct GridLc {
    pub value: usize,
    pub case: FormulaCase,
}

/// Closed-form line completion number of `P_cols x P_rows`.
pub fn lc_grid_formula(cols: usize, rows: usize) -> Result<GridLc> {
    let case = FormulaCase::classify(cols, rows)?;
    let (lo, hi) = (cols.min(rows), cols.max(rows));
    let area = cols
        .checked_mul(rows)
        .ok_or_else(|| Error::capacity("grid area overflows"))?;
    let value = match case {
        FormulaCase::Trivial1x1 => 0,
        FormulaCase::PathCase => hi / 2,
        FormulaCase::BothEven => area + 1 - (cols + rows) / 2 - lo / 2,
        FormulaCase::BothOdd => area - (cols + rows) / 2 - lo.div_ceil(2),
        FormulaCase::OppositeParity => area + 1 - lo - hi.div_ceil(2),
    };
    Ok(GridLc { value, case })
}

/// `floor(k / 2)`, the line completion number of the path on `k` vertices.
pub fn lc_path_formula(k: usize) -> Result<usize> {
    if k == 0 {
        return Err(Error::invalid("a path needs at least one vertex"));
    }
    Ok(k / 2)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Axis {
    Vertical,
    Horizontal,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Orientation {
    Vertical,
    AlmostVertical,
    Horizontal,
    AlmostHorizontal,
}

impl Orientation {
    pub fn axis(self) -> Axis {
        match self {
            Orientation::Vertical | Orientation::AlmostVertical => Axis::Vertical,
            Orientation::Horizontal | Orientation::AlmostHorizontal => Axis::Horizontal,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Orientation::Vertical => "vertical",
            Orientation::AlmostVertical => "almost-vertical",
            Orientation::Horizontal => "horizontal",
            Orientation::AlmostHorizontal => "almost-horizontal",
        }
    }
}

/// An edge partition `A | B | removed` of a grid with `A` and `B`
/// non-adjacent. Fields are public so third-party certificates can be loaded
/// as-is and checked with [`verify_slicing`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Slicing {
    pub spec: GridSpec,
    pub orientation: Orientation,
    pub a: EdgeSet,
    pub b: EdgeSet,
    pub removed: EdgeSet,
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Side {
    A,
    B,
    Isolated,
}

/// Side of cell `(row, col)` in the vertical family on `cols x rows`.
fn vertical_side(cols: usize, rows: usize, row: usize, col: usize) -> Side {
    let left_or_right = |on_left: bool| if on_left { Side::A } else { Side::B };
    if cols.is_multiple_of(2) {
        return left_or_right(col < cols / 2);
    }
    let centre = (cols - 1) / 2;
    if col != centre {
        return left_or_right(col < centre);
    }
    if rows.is_multiple_of(2) {
        left_or_right(row < rows / 2)
    } else {
        let middle = (rows - 1) / 2;
        if row == middle {
            Side::Isolated
        } else {
            left_or_right(row < middle)
        }
    }
}

/// Number of edges a slicing of the given orientation leaves out, or `None`
/// when that orientation does not apply to the grid.
pub fn expected_removed(spec: GridSpec, orientation: Orientation) -> Option<usize> {
    let (across, along) = match orientation.axis() {
        Axis::Vertical => (spec.cols, spec.rows),
        Axis::Horizontal => (spec.rows, spec.cols),
    };
    let straight = matches!(orientation, Orientation::Vertical | Orientation::Horizontal);
    match (straight, across % 2 == 0) {
        _ if across < 2 => None,
        (true, true) => Some(along),
        (false, false) if along % 2 == 0 => Some(along + 1),
        (false, false) if along == 1 => Some(2),
        (false, false) => Some(along + 3),
        _ => None,
    }
}

/// Slices the grid along `axis`.
pub fn slice(spec: GridSpec, axis: Axis) -> Result<Slicing> {
    spec.validate()?;
    let across = match axis {
        Axis::Vertical => spec.cols,
        Axis::Horizontal => spec.rows,
    };
    if across < 2 {
        return Err(Error::invalid(format!(
            "cannot slice {}x{} {}: the cut crosses a single {}",
            spec.cols,
            spec.rows,
            match axis {
                Axis::Vertical => "vertically",
                Axis::Horizontal => "horizontally",
            },
            match axis {
                Axis::Vertical => "column",
                Axis::Horizontal => "row",
            }
        )));
    }
    let orientation = match (axis, across % 2 == 0) {
        (Axis::Vertical, true) => Orientation::Vertical,
        (Axis::Vertical, false) => Orientation::AlmostVertical,
        (Axis::Horizontal, true) => Orientation::Horizontal,
        (Axis::Horizontal, false) => Orientation::AlmostHorizontal,
    };

    let side = |v: usize| {
        let (row, col) = spec.cell(v);
        match axis {
            Axis::Vertical => vertical_side(spec.cols, spec.rows, row, col),
            Axis::Horizontal => vertical_side(spec.rows, spec.cols, col, row),
        }
    };

    let g = grid(spec)?;
    let m = g.edge_count();
    let (mut a, mut b, mut removed) = (EdgeSet::empty(m), EdgeSet::empty(m), EdgeSet::empty(m));
    for (i, &(u, v)) in g.edges().iter().enumerate() {
        match (side(u), side(v)) {
            (Side::A, Side::A) => a.insert(i),
            (Side::B, Side::B) => b.insert(i),
            _ => removed.insert(i),
        };
    }
    Ok(Slicing {
        spec,
        orientation,
        a,
        b,
        removed,
    })
}

/// The slicing with the larger sides; ties go to the vertical one.
pub fn best_slicing(spec: GridSpec) -> Result<Slicing> {
    spec.validate()?;
    if spec.cols < 2 || spec.rows < 2 {
        return Err(Error::invalid(format!(
            "{}x{} is a path; use `slice` along its long axis for the path witness",
            spec.cols, spec.rows
        )));
    }
    let vertical = slice(spec, Axis::Vertical)?;
    let horizontal = slice(spec, Axis::Horizontal)?;
    Ok(if horizontal.a.len() > vertical.a.len() {
        horizontal
    } else {
        vertical
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub checks: Vec<Check>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            writeln!(
                f,
                "[{}] {}: {}",
                if c.passed { "PASS" } else { "FAIL" },
                c.name,
                c.detail
            )?;
        }
        Ok(())
    }
}

fn check(name: &'static str, passed: bool, detail: String) -> Check {
    Check {
        name,
        passed,
        detail,
    }
}

/// Runs the five certificate checks: partition, non-adjacency, equal sizes,
/// removed-edge count for the orientation, and agreement with the formula.
pub fn verify_slicing(g: &Graph, s: &Slicing) -> Result<VerificationReport> {
    s.spec.validate()?;
    if *g != grid(s.spec)? {
        return Err(Error::invalid(format!(
            "graph is not the {}x{} grid",
            s.spec.cols, s.spec.rows
        )));
    }
    let m = g.edge_count();
    for (label, set) in [("A", &s.a), ("B", &s.b), ("R", &s.removed)] {
        if set.universe() != m {
            return Err(Error::invalid(format!(
                "set {label} ranges over {} edges, the grid has {m}",
                set.universe()
            )));
        }
    }

    let mut checks = Vec::with_capacity(5);

    let overlaps = [
        ("A", "B", s.a.intersects(&s.b)),
        ("A", "R", s.a.intersects(&s.removed)),
        ("B", "R", s.b.intersects(&s.removed)),
    ];
    let covered = s.a.len() + s.b.len() + s.removed.len();
    let partition_ok = overlaps.iter().all(|o| !o.2) && covered == m;
    let detail = match overlaps.iter().find(|o| o.2) {
        Some((x, y, _)) => format!("{x} and {y} overlap"),
        None if covered != m => format!("A, B, R cover {covered} of {m} edges"),
        None => format!("A, B, R partition all {m} edges"),
    };
    checks.push(check("partition", partition_ok, detail));

    let edges = g.edges();
    let clash = s.a.iter().find_map(|i| {
        let (u, v) = edges[i];
        s.b.iter()
            .find(|&j| {
                let (x, y) = edges[j];
                i != j && (u == x || u == y || v == x || v == y)
            })
            .map(|j| (i, j))
    });
    checks.push(match clash {
        Some((i, j)) => check(
            "non-adjacent",
            false,
            format!("e{i} in A shares an endpoint with e{j} in B"),
        ),
        None => check(
            "non-adjacent",
            true,
            "no edge of A shares an endpoint with an edge of B".into(),
        ),
    });

    checks.push(check(
        "equal-size",
        s.a.len() == s.b.len(),
        format!("|A| = {}, |B| = {}", s.a.len(), s.b.len()),
    ));

    let removed = s.removed.len();
    checks.push(match expected_removed(s.spec, s.orientation) {
        Some(want) => check(
            "removed-count",
            removed == want,
            format!(
                "|R| = {removed}, {} slicing of {}x{} leaves {want}",
                s.orientation.name(),
                s.spec.cols,
                s.spec.rows
            ),
        ),
        None => check(
            "removed-count",
            false,
            format!(
                "{} slicing does not apply to {}x{}",
                s.orientation.name(),
                s.spec.cols,
                s.spec.rows
            ),
        ),
    });

    let formula = lc_grid_formula(s.spec.cols, s.spec.rows)?;
    checks.push(check(
        "formula",
        s.a.len() + 1 == formula.value,
        format!(
            "|A| + 1 = {}, formula ({}) gives {}",
            s.a.len() + 1,
            formula.case,
            formula.value
        ),
    ));

    Ok(VerificationReport { checks })
}

#[derive(Serialize, Deserialize)]
struct SlicingWire {
    spec: GridSpec,
    orientation: Orientation,
    #[serde(rename = "A")]
    a: Vec<usize>,
    #[serde(rename = "B")]
    b: Vec<usize>,
    #[serde(rename = "R")]
    r: Vec<usize>,
}

impl Slicing {
    pub fn to_json(&self) -> String {
        let wire = SlicingWire {
            spec: self.spec,
            orientation: self.orientation,
            a: self.a.to_vec(),
            b: self.b.to_vec(),
            r: self.removed.to_vec(),
        };
        serde_json::to_string(&wire).expect("slicing serialises")
    }

    /// Parses a slicing certificate. Indices must be valid for the grid and
    /// appear at most once per set; whether the sets form a valid slicing is
    /// left to [`verify_slicing`].
    pub fn from_json(text: &str) -> Result<Slicing> {
        let wire: SlicingWire =
            serde_json::from_str(text).map_err(|e| Error::parse(e.line(), e.to_string()))?;
        wire.spec.validate()?;
        let m = wire.spec.edge_count();
        Ok(Slicing {
            spec: wire.spec,
            orientation: wire.orientation,
            a: EdgeSet::from_indices(m, wire.a)?,
            b: EdgeSet::from_indices(m, wire.b)?,
            removed: EdgeSet::from_indices(m, wire.r)?,
        })
    }
}
