//! Super line graphs, line completion numbers, and grid slicing certificates.
//!
//! * [`graph`]: simple graphs, path/grid generators, line graphs.
//! * [`superline`]: `L_r(G)`, completeness tests and the exhaustive oracle.
//! * [`grid_lc`]: closed-form values for grids and the slicing certificates
//!   that back them.
//! * [`edgelist`]: the text format shared with the command-line tool.

pub mod edgelist;
pub mod edgeset;
pub mod error;
pub mod graph;
pub mod grid_lc;
pub mod superline;

pub use edgeset::EdgeSet;
pub use error::{Error, Result};
pub use graph::{cartesian_product, edges_adjacent, grid, line_graph, path, Graph, GridSpec};
pub use grid_lc::{
    best_slicing, lc_grid_formula, lc_path_formula, slice, verify_slicing, Axis, FormulaCase,
    GridLc, Orientation, Slicing, VerificationReport,
};
pub use superline::{
    find_nonadjacent_pair, is_complete_index, lc_bruteforce, max_nonadjacent_r, sets_adjacent,
    super_line_graph, LcResult, Method, SearchBudget, WitnessPair,
};
