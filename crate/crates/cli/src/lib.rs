//! Command-line front end. [`run`] does all the work and returns the exit
//! code with the text to print, so tests can drive it in-process.

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use superline_core::superline::{
    lc_bruteforce_with, super_line_graph_with, SearchBudget, SuperLineOptions, DEFAULT_PAIR_BUDGET,
    DEFAULT_VERTEX_CAP,
};
use superline_core::{
    best_slicing, edgelist, grid, lc_grid_formula, path, slice, verify_slicing, Axis, Error, Graph,
    GridSpec, LcResult, Slicing,
};

pub const EXIT_OK: i32 = 0;
/// A certificate failed verification or the cross-check found a disagreement.
pub const EXIT_CHECK_FAILED: i32 = 1;
/// Bad arguments or unreadable/invalid input.
pub const EXIT_USAGE: i32 = 2;
/// A search budget or size cap stopped the computation.
pub const EXIT_LIMIT: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "superline",
    version,
    about = "Super line graphs and line completion numbers"
)]
pub struct Cli {
    #[arg(long, value_enum, default_value_t = OutputFormat::Text, global = true)]
    pub output: OutputFormat,

    /// Probe budget for exhaustive searches.
    #[arg(long, default_value_t = DEFAULT_PAIR_BUDGET, global = true)]
    pub budget: u64,

    /// Largest vertex count allowed for a materialised super line graph.
    #[arg(long, default_value_t = DEFAULT_VERTEX_CAP, global = true)]
    pub vertex_cap: u64,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum AxisChoice {
    Auto,
    Vertical,
    Horizontal,
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct GraphSource {
    /// Edge-list file.
    #[arg(long)]
    pub input: Option<PathBuf>,
    /// Grid with N columns and M rows.
    #[arg(long, num_args = 2, value_names = ["N", "M"])]
    pub grid: Option<Vec<usize>>,
    /// Path on K vertices.
    #[arg(long, value_name = "K")]
    pub path: Option<usize>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Closed-form line completion number of the grid (cols = n, rows = m).
    LcFormula {
        #[arg(long)]
        cols: usize,
        #[arg(long)]
        rows: usize,
    },
    /// Line completion number by exhaustive search.
    LcBrute {
        #[command(flatten)]
        source: GraphSource,
    },
    /// Write the super line graph of index R as an edge list plus label table.
    Superline {
        #[arg(long)]
        index: usize,
        #[command(flatten)]
        source: GraphSource,
        #[arg(long)]
        out: PathBuf,
        /// Label table path (defaults to `<out>.labels`).
        #[arg(long)]
        labels: Option<PathBuf>,
    },
    /// Emit a slicing certificate as JSON.
    Slice {
        #[arg(long)]
        cols: usize,
        #[arg(long)]
        rows: usize,
        #[arg(long, value_enum, default_value_t = AxisChoice::Auto)]
        axis: AxisChoice,
    },
    /// Check a slicing certificate.
    Verify {
        #[arg(long)]
        slicing: PathBuf,
    },
    /// Compare the exhaustive search with the closed form on every grid with
    /// at most E edges.
    Xcheck {
        #[arg(long, value_name = "E")]
        max_edges: usize,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome {
            code: EXIT_OK,
            stdout,
            stderr: String::new(),
        }
    }

    fn error(err: &Error) -> Self {
        let code = match err {
            Error::Budget { .. } | Error::Capacity(_) => EXIT_LIMIT,
            Error::InvalidArgument(_) | Error::Parse { .. } => EXIT_USAGE,
        };
        Outcome {
            code,
            stdout: String::new(),
            stderr: format!("error: {err}\n"),
        }
    }
}

/// Parses `argv` (including the program name) and runs the command.
pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            return if e.use_stderr() {
                Outcome {
                    code: EXIT_USAGE,
                    stdout: String::new(),
                    stderr: rendered,
                }
            } else {
                Outcome::ok(rendered)
            };
        }
    };
    execute(&cli).unwrap_or_else(|e| Outcome::error(&e))
}

pub fn execute(cli: &Cli) -> Result<Outcome, Error> {
    if cli.vertex_cap == 0 {
        return Err(Error::InvalidArgument(
            "--vertex-cap must be positive".into(),
        ));
    }
    let budget = SearchBudget::new(cli.budget)?;
    let json = cli.output == OutputFormat::Json;

    match &cli.command {
        Command::LcFormula { cols, rows } => {
            let lc = lc_grid_formula(*cols, *rows)?;
            Ok(Outcome::ok(if json {
                to_json(&FormulaOut {
                    cols: *cols,
                    rows: *rows,
                    lc: lc.value,
                    case: lc.case.name(),
                })
            } else {
                format!("{} ({})\n", lc.value, lc.case)
            }))
        }

        Command::LcBrute { source } => {
            let g = load_graph(source)?;
            let res = lc_bruteforce_with(&g, &budget)?;
            Ok(Outcome::ok(if json {
                to_json(&BruteOut {
                    vertices: g.vertex_count(),
                    edges: g.edge_count(),
                    result: &res,
                })
            } else {
                render_lc(&g, &res)
            }))
        }

        Command::Superline {
            index,
            source,
            out,
            labels,
        } => {
            let g = load_graph(source)?;
            let opts = SuperLineOptions {
                vertex_cap: cli.vertex_cap,
                ..SuperLineOptions::default()
            };
            let l = super_line_graph_with(&g, *index, &opts)?;
            let labels_path = labels.clone().unwrap_or_else(|| {
                let mut p = out.clone().into_os_string();
                p.push(".labels");
                PathBuf::from(p)
            });
            write_file(out, &edgelist::write(&l.graph))?;
            write_file(&labels_path, &edgelist::write_labels(&l.labels))?;
            let summary = SuperlineOut {
                index: *index,
                vertices: l.graph.vertex_count(),
                edges: l.graph.edge_count(),
                complete: l.graph.is_complete(),
                out: out.display().to_string(),
                labels: labels_path.display().to_string(),
            };
            Ok(Outcome::ok(if json {
                to_json(&summary)
            } else {
                format!(
                    "L_{}: {} vertices, {} edges{}\nwrote {} and {}\n",
                    summary.index,
                    summary.vertices,
                    summary.edges,
                    if summary.complete { " (complete)" } else { "" },
                    summary.out,
                    summary.labels
                )
            }))
        }

        Command::Slice { cols, rows, axis } => {
            let spec = GridSpec::new(*cols, *rows)?;
            let s = match axis {
                AxisChoice::Auto if spec.cols >= 2 && spec.rows >= 2 => best_slicing(spec)?,
                AxisChoice::Auto if spec.cols >= 2 => slice(spec, Axis::Vertical)?,
                AxisChoice::Auto => slice(spec, Axis::Horizontal)?,
                AxisChoice::Vertical => slice(spec, Axis::Vertical)?,
                AxisChoice::Horizontal => slice(spec, Axis::Horizontal)?,
            };
            let mut text = s.to_json();
            text.push('\n');
            Ok(Outcome::ok(text))
        }

        Command::Verify { slicing } => {
            let s = Slicing::from_json(&read_file(slicing)?)?;
            let report = verify_slicing(&grid(s.spec)?, &s)?;
            let passed = report.passed();
            let stdout = if json {
                to_json(&VerifyOut {
                    passed,
                    checks: &report.checks,
                })
            } else {
                format!(
                    "{report}{}\n",
                    if passed {
                        "certificate valid"
                    } else {
                        "certificate INVALID"
                    }
                )
            };
            Ok(Outcome {
                code: if passed { EXIT_OK } else { EXIT_CHECK_FAILED },
                stdout,
                stderr: String::new(),
            })
        }

        Command::Xcheck { max_edges } => xcheck(*max_edges, &budget, json),
    }
}

#[derive(Serialize)]
struct FormulaOut {
    cols: usize,
    rows: usize,
    lc: usize,
    case: &'static str,
}

#[derive(Serialize)]
struct BruteOut<'a> {
    vertices: usize,
    edges: usize,
    #[serde(flatten)]
    result: &'a LcResult,
}

#[derive(Serialize)]
struct SuperlineOut {
    index: usize,
    vertices: usize,
    edges: usize,
    complete: bool,
    out: String,
    labels: String,
}

#[derive(Serialize)]
struct VerifyOut<'a> {
    passed: bool,
    checks: &'a [superline_core::grid_lc::Check],
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct XcheckRow {
    pub cols: usize,
    pub rows: usize,
    pub edges: usize,
    pub formula: usize,
    pub oracle: Option<usize>,
    pub status: XcheckStatus,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum XcheckStatus {
    Agree,
    Disagree,
    BudgetExhausted,
}

/// Every grid with at most `max_edges` edges, each dimension pair once per
/// orientation, ordered by edge count then columns.
pub fn xcheck_specs(max_edges: usize) -> Vec<GridSpec> {
    let mut specs = Vec::new();
    for cols in 1..=max_edges + 1 {
        for rows in 1..=max_edges + 1 {
            let spec = GridSpec { cols, rows };
            if spec.edge_count() <= max_edges {
                specs.push(spec);
            }
        }
    }
    specs.sort_by_key(|s| (s.edge_count(), s.cols));
    specs
}

pub fn xcheck_rows(max_edges: usize, budget: &SearchBudget) -> Result<Vec<XcheckRow>, Error> {
    let mut rows = Vec::new();
    for spec in xcheck_specs(max_edges) {
        let formula = lc_grid_formula(spec.cols, spec.rows)?.value;
        let (oracle, status) = match lc_bruteforce_with(&grid(spec)?, budget) {
            Ok(res) if res.r == formula => (Some(res.r), XcheckStatus::Agree),
            Ok(res) => (Some(res.r), XcheckStatus::Disagree),
            Err(Error::Budget { .. }) => (None, XcheckStatus::BudgetExhausted),
            Err(e) => return Err(e),
        };
        rows.push(XcheckRow {
            cols: spec.cols,
            rows: spec.rows,
            edges: spec.edge_count(),
            formula,
            oracle,
            status,
        });
    }
    Ok(rows)
}

fn xcheck(max_edges: usize, budget: &SearchBudget, json: bool) -> Result<Outcome, Error> {
    let rows = xcheck_rows(max_edges, budget)?;
    let disagreements: Vec<&XcheckRow> = rows
        .iter()
        .filter(|r| r.status == XcheckStatus::Disagree)
        .collect();
    let exhausted = rows
        .iter()
        .any(|r| r.status == XcheckStatus::BudgetExhausted);

    let code = if !disagreements.is_empty() {
        EXIT_CHECK_FAILED
    } else if exhausted {
        EXIT_LIMIT
    } else {
        EXIT_OK
    };

    let mut stderr = String::new();
    for d in &disagreements {
        writeln!(
            stderr,
            "DISAGREEMENT: {}x{} exhaustive search gives {}, closed form gives {}",
            d.cols,
            d.rows,
            d.oracle.unwrap(),
            d.formula
        )
        .unwrap();
    }

    let stdout = if json {
        to_json(&rows)
    } else {
        let mut out = String::new();
        writeln!(
            out,
            "{:>4} {:>4} {:>5} {:>7} {:>6}  status",
            "cols", "rows", "edges", "formula", "oracle"
        )
        .unwrap();
        for r in &rows {
            writeln!(
                out,
                "{:>4} {:>4} {:>5} {:>7} {:>6}  {}",
                r.cols,
                r.rows,
                r.edges,
                r.formula,
                r.oracle.map_or_else(|| "-".to_string(), |v| v.to_string()),
                match r.status {
                    XcheckStatus::Agree => "agree",
                    XcheckStatus::Disagree => "DISAGREE",
                    XcheckStatus::BudgetExhausted => "budget exhausted",
                }
            )
            .unwrap();
        }
        writeln!(
            out,
            "{} grids, {} agree, {} disagree{}",
            rows.len(),
            rows.iter()
                .filter(|r| r.status == XcheckStatus::Agree)
                .count(),
            disagreements.len(),
            if exhausted { ", some undecided" } else { "" }
        )
        .unwrap();
        out
    };
    Ok(Outcome {
        code,
        stdout,
        stderr,
    })
}

fn render_lc(g: &Graph, res: &LcResult) -> String {
    let mut out = format!(
        "graph: {} vertices, {} edges\nlc = {} (brute-force)\n",
        g.vertex_count(),
        g.edge_count(),
        res.r
    );
    if let Some(w) = &res.witness_at_r_minus_1 {
        writeln!(
            out,
            "L_{} is incomplete: S = {{{}}} and T = {{{}}} are not adjacent",
            w.r(),
            w.s(),
            w.t()
        )
        .unwrap();
    }
    out
}

fn load_graph(source: &GraphSource) -> Result<Graph, Error> {
    match (&source.input, &source.grid, source.path) {
        (Some(file), _, _) => edgelist::parse(&read_file(file)?),
        (_, Some(dims), _) => grid(GridSpec::new(dims[0], dims[1])?),
        (_, _, Some(k)) => path(k),
        _ => Err(Error::InvalidArgument(
            "one of --input, --grid, --path is required".into(),
        )),
    }
}

fn read_file(path: &Path) -> Result<String, Error> {
    fs::read_to_string(path)
        .map_err(|e| Error::InvalidArgument(format!("cannot read {}: {e}", path.display())))
}

fn write_file(path: &Path, contents: &str) -> Result<(), Error> {
    fs::write(path, contents)
        .map_err(|e| Error::InvalidArgument(format!("cannot write {}: {e}", path.display())))
}

fn to_json<T: Serialize + ?Sized>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("output serialises");
    s.push('\n');
    s
}
