//! Browser bindings for the grid explorer in `www/index.html`.
//!
//! Each binding returns a JSON string. The `*_json` functions hold the logic
//! and are plain Rust so they can be tested natively.

use serde::Serialize;
use superline_core::superline::{lc_bruteforce_with, SearchBudget};
use superline_core::{
    best_slicing, grid, lc_grid_formula, slice, verify_slicing, Axis, GridSpec, Slicing,
};
use wasm_bindgen::prelude::*;

/// Grids above this size are refused by the in-browser exhaustive search.
pub const MAX_SEARCH_EDGES: usize = 40;

#[derive(Serialize)]
struct FormulaView {
    cols: usize,
    rows: usize,
    lc: usize,
    case: &'static str,
}

/// One grid edge in cell coordinates plus the part it belongs to.
#[derive(Serialize)]
struct EdgeView {
    index: usize,
    from: [usize; 2],
    to: [usize; 2],
    part: &'static str,
}

#[derive(Serialize)]
struct SlicingView<'a> {
    cols: usize,
    rows: usize,
    orientation: &'static str,
    side_size: usize,
    removed: usize,
    formula: usize,
    passed: bool,
    checks: Vec<String>,
    edges: Vec<EdgeView>,
    certificate: &'a str,
}

#[derive(Serialize)]
struct SearchView {
    cols: usize,
    rows: usize,
    lc: usize,
    formula: usize,
    agrees: bool,
    witness_r: Option<usize>,
    edges: Vec<EdgeView>,
}

fn edge_views(
    spec: GridSpec,
    part_of: impl Fn(usize) -> &'static str,
) -> Result<Vec<EdgeView>, String> {
    let g = grid(spec).map_err(|e| e.to_string())?;
    Ok(g.edges()
        .iter()
        .enumerate()
        .map(|(i, &(u, v))| {
            let (a, b) = (spec.cell(u), spec.cell(v));
            EdgeView {
                index: i,
                from: [a.0, a.1],
                to: [b.0, b.1],
                part: part_of(i),
            }
        })
        .collect())
}

pub fn lc_formula_json(cols: usize, rows: usize) -> Result<String, String> {
    let lc = lc_grid_formula(cols, rows).map_err(|e| e.to_string())?;
    Ok(serde_json::to_string(&FormulaView {
        cols,
        rows,
        lc: lc.value,
        case: lc.case.name(),
    })
    .unwrap())
}

/// `axis` is `auto`, `vertical` or `horizontal`.
pub fn slicing_json(cols: usize, rows: usize, axis: &str) -> Result<String, String> {
    let spec = GridSpec::new(cols, rows).map_err(|e| e.to_string())?;
    let s: Slicing = match axis {
        "auto" if cols >= 2 && rows >= 2 => best_slicing(spec),
        "auto" if cols >= 2 => slice(spec, Axis::Vertical),
        "auto" => slice(spec, Axis::Horizontal),
        "vertical" => slice(spec, Axis::Vertical),
        "horizontal" => slice(spec, Axis::Horizontal),
        other => return Err(format!("unknown axis `{other}`")),
    }
    .map_err(|e| e.to_string())?;
    let report =
        verify_slicing(&grid(spec).map_err(|e| e.to_string())?, &s).map_err(|e| e.to_string())?;
    let edges = edge_views(spec, |i| {
        if s.a.contains(i) {
            "A"
        } else if s.b.contains(i) {
            "B"
        } else {
            "R"
        }
    })?;
    let certificate = s.to_json();
    Ok(serde_json::to_string(&SlicingView {
        cols,
        rows,
        orientation: s.orientation.name(),
        side_size: s.a.len(),
        removed: s.removed.len(),
        formula: lc_grid_formula(cols, rows)
            .map_err(|e| e.to_string())?
            .value,
        passed: report.passed(),
        checks: report.to_string().lines().map(str::to_owned).collect(),
        edges,
        certificate: &certificate,
    })
    .unwrap())
}

pub fn search_json(cols: usize, rows: usize, max_probes: u64) -> Result<String, String> {
    let spec = GridSpec::new(cols, rows).map_err(|e| e.to_string())?;
    if spec.edge_count() > MAX_SEARCH_EDGES {
        return Err(format!(
            "{cols}x{rows} has {} edges; the browser search stops at {MAX_SEARCH_EDGES}",
            spec.edge_count()
        ));
    }
    let g = grid(spec).map_err(|e| e.to_string())?;
    let budget = SearchBudget::new(max_probes).map_err(|e| e.to_string())?;
    let res = lc_bruteforce_with(&g, &budget).map_err(|e| e.to_string())?;
    let formula = lc_grid_formula(cols, rows)
        .map_err(|e| e.to_string())?
        .value;
    let w = res.witness_at_r_minus_1.as_ref();
    let edges = edge_views(spec, |i| match w {
        Some(w) if w.s().contains(i) && w.t().contains(i) => "AB",
        Some(w) if w.s().contains(i) => "A",
        Some(w) if w.t().contains(i) => "B",
        _ => "R",
    })?;
    Ok(serde_json::to_string(&SearchView {
        cols,
        rows,
        lc: res.r,
        formula,
        agrees: res.r == formula,
        witness_r: w.map(|w| w.r()),
        edges,
    })
    .unwrap())
}

#[wasm_bindgen]
pub fn lc_formula(cols: usize, rows: usize) -> Result<String, JsValue> {
    lc_formula_json(cols, rows).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn slicing(cols: usize, rows: usize, axis: &str) -> Result<String, JsValue> {
    slicing_json(cols, rows, axis).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn exhaustive_search(cols: usize, rows: usize, max_probes: f64) -> Result<String, JsValue> {
    search_json(cols, rows, max_probes as u64).map_err(|e| JsValue::from_str(&e))
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::Value;

    #[test]
    fn formula_binding() {
        let v: Value = serde_json::from_str(&lc_formula_json(6, 4).unwrap()).unwrap();
        assert_eq!(v["lc"], 18);
        assert_eq!(v["case"], "both_even");
        assert!(lc_formula_json(0, 4).is_err());
    }

    #[test]
    fn slicing_binding_labels_every_edge() {
        let v: Value = serde_json::from_str(&slicing_json(7, 5, "auto").unwrap()).unwrap();
        assert_eq!(v["side_size"], 25);
        assert_eq!(v["removed"], 8);
        assert_eq!(v["passed"], true);
        let edges = v["edges"].as_array().unwrap();
        assert_eq!(edges.len(), 58);
        assert_eq!(edges.iter().filter(|e| e["part"] == "R").count(), 8);
        assert!(slicing_json(3, 3, "diagonal").is_err());
        assert!(slicing_json(1, 3, "vertical").is_err());
    }

    #[test]
    fn search_binding() {
        let v: Value = serde_json::from_str(&search_json(3, 3, 1_000_000).unwrap()).unwrap();
        assert_eq!(v["lc"], 5);
        assert_eq!(v["formula"], 4);
        assert_eq!(v["agrees"], false);
        assert_eq!(v["witness_r"], 4);
        let v: Value = serde_json::from_str(&search_json(4, 3, 1_000_000).unwrap()).unwrap();
        assert_eq!(v["agrees"], true);
        assert!(search_json(7, 7, 10).is_err());
        assert!(search_json(3, 3, 1).is_err());
    }
}
