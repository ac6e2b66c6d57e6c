//! Plain-text edge-list format.
//!
//! ```text
//! # comment
//! p <vertex_count> <edge_count>
//! <u> <v>
//! ...
//! ```
//!
//! Vertices are 0-based. `#` starts a comment anywhere on a line; blank lines
//! are ignored. Writers emit edges in index order.

use std::fmt::Write as _;

use crate::edgeset::EdgeSet;
use crate::error::{Error, Result};
use crate::graph::{Graph, DEFAULT_EDGE_CAP};

pub fn parse(text: &str) -> Result<Graph> {
    parse_with_edge_cap(text, DEFAULT_EDGE_CAP)
}

pub fn parse_with_edge_cap(text: &str, edge_cap: usize) -> Result<Graph> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges = Vec::new();

    for (idx, raw) in text.lines().enumerate() {
        let lineno = idx + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        match header {
            None => {
                if fields.len() != 3 || fields[0] != "p" {
                    return Err(Error::parse(
                        lineno,
                        "expected header `p <vertex_count> <edge_count>`",
                    ));
                }
                let n = parse_num(fields[1], lineno)?;
                let m = parse_num(fields[2], lineno)?;
                if m > edge_cap {
                    return Err(Error::capacity(format!(
                        "header declares {m} edges, above the edge cap of {edge_cap}"
                    )));
                }
                header = Some((n, m));
                edges.reserve(m);
            }
            Some(_) => {
                if fields.len() != 2 {
                    return Err(Error::parse(lineno, "expected `<u> <v>`"));
                }
                edges.push((parse_num(fields[0], lineno)?, parse_num(fields[1], lineno)?));
            }
        }
    }

    let (n, m) = header.ok_or_else(|| Error::parse(0, "missing `p` header"))?;
    if edges.len() != m {
        return Err(Error::parse(
            0,
            format!("header declares {m} edges but {} were listed", edges.len()),
        ));
    }
    Graph::with_edge_cap(n, edges, edge_cap)
}

fn parse_num(field: &str, line: usize) -> Result<usize> {
    field
        .parse()
        .map_err(|_| Error::parse(line, format!("`{field}` is not a non-negative integer")))
}

pub fn write(g: &Graph) -> String {
    let mut out = String::with_capacity(16 + g.edge_count() * 8);
    writeln!(out, "p {} {}", g.vertex_count(), g.edge_count()).unwrap();
    for &(u, v) in g.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}

/// Label table for a super line graph: one line `<vertex>: e<i1>,e<i2>,...`
/// per vertex.
pub fn write_labels(labels: &[EdgeSet]) -> String {
    let mut out = String::new();
    for (i, set) in labels.iter().enumerate() {
        writeln!(out, "{i}: {set}").unwrap();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{diamond, path};

    #[test]
    fn parses_with_comments() {
        let g = parse("# a triangle\np 3 3\n0 1 # first\n\n1 2\n0 2\n").unwrap();
        assert_eq!(g.edges(), &[(0, 1), (1, 2), (0, 2)]);
    }

    #[test]
    fn write_then_parse() {
        for g in [diamond(), path(7).unwrap(), path(1).unwrap()] {
            assert_eq!(parse(&write(&g)).unwrap(), g);
        }
    }

    #[test]
    fn reports_malformed_input() {
        assert!(matches!(parse("0 1\n"), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(parse("p 3 2\n0 1\n"), Err(Error::Parse { .. })));
        assert!(matches!(
            parse("p 3 1\n0 x\n"),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(matches!(parse("p 3 1\n0 1 2\n"), Err(Error::Parse { .. })));
        assert!(matches!(parse(""), Err(Error::Parse { .. })));
        // structural problems surface from graph construction
        assert!(matches!(
            parse("p 3 2\n0 1\n1 0\n"),
            Err(Error::InvalidArgument(_))
        ));
    }

    #[test]
    fn label_table_format() {
        let labels = vec![
            EdgeSet::from_indices(4, [0, 1]).unwrap(),
            EdgeSet::from_indices(4, [0, 3]).unwrap(),
        ];
        assert_eq!(write_labels(&labels), "0: e0,e1\n1: e0,e3\n");
    }
}
