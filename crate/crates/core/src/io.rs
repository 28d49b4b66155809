//! Graph files: DIMACS `.col` and the JSON `{n, edges}` document.

use std::path::Path;

use crate::coloring::VertexColoring;
use crate::error::{Error, Result};
use crate::graph::{Graph, GraphDoc};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Dimacs,
    Json,
}

impl Format {
    /// `.json` files are JSON; everything else is read as DIMACS.
    pub fn sniff(path: &Path) -> Format {
        match path.extension().and_then(|e| e.to_str()) {
            Some(e) if e.eq_ignore_ascii_case("json") => Format::Json,
            _ => Format::Dimacs,
        }
    }
}

/// Parses `p edge n m` / `e u v` with 1-based ids; `c` lines are comments.
/// Repeated edges collapse; a count differing from `m` is only logged.
pub fn parse_dimacs(text: &str) -> Result<Graph> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let bad = |why: &str| Error::Malformed(format!("line {}: {why}", lineno + 1));
        let mut tok = line.split_whitespace();
        match tok.next() {
            None | Some("c") => {}
            Some("p") => {
                if header.is_some() {
                    return Err(bad("second problem line"));
                }
                let _format = tok.next().ok_or_else(|| bad("missing format in problem line"))?;
                let n = parse_num(tok.next(), &bad)?;
                let m = parse_num(tok.next(), &bad)?;
                header = Some((n, m));
            }
            Some("e") => {
                let (n, _) = header.ok_or_else(|| bad("edge before problem line"))?;
                let u = parse_num(tok.next(), &bad)?;
                let v = parse_num(tok.next(), &bad)?;
                if u == 0 || v == 0 || u > n || v > n {
                    return Err(bad(&format!("vertex out of range 1..{n}")));
                }
                edges.push((u - 1, v - 1));
            }
            Some(other) => return Err(bad(&format!("unknown line type {other:?}"))),
        }
    }
    let (n, m) = header.ok_or_else(|| Error::Malformed("missing problem line".into()))?;
    let g = Graph::from_edges(n, &edges)?;
    if g.m() != m {
        log::warn!("problem line declares {m} edges, file has {} distinct edges", g.m());
    }
    Ok(g)
}

fn parse_num(tok: Option<&str>, bad: &dyn Fn(&str) -> Error) -> Result<usize> {
    tok.ok_or_else(|| bad("missing number"))?
        .parse()
        .map_err(|_| bad("expected a non-negative integer"))
}

/// DIMACS text for a graph whose ids are `0..n`.
pub fn write_dimacs(g: &Graph) -> Result<String> {
    if g.ids().iter().enumerate().any(|(i, &v)| i != v) {
        return Err(Error::Contract("DIMACS output needs vertex ids 0..n".into()));
    }
    let mut out = format!("p edge {} {}\n", g.n(), g.m());
    for (u, v) in g.edges() {
        out.push_str(&format!("e {} {}\n", u + 1, v + 1));
    }
    Ok(out)
}

pub fn parse_json_graph(text: &str) -> Result<Graph> {
    let doc: GraphDoc = serde_json::from_str(text).map_err(|e| Error::Malformed(format!("graph JSON: {e}")))?;
    Graph::try_from(doc)
}

pub fn parse_graph(text: &str, format: Format) -> Result<Graph> {
    match format {
        Format::Dimacs => parse_dimacs(text),
        Format::Json => parse_json_graph(text),
    }
}

/// Reads a graph file, sniffing the format from the extension unless one is
/// given.
pub fn read_graph(path: &Path, format: Option<Format>) -> Result<Graph> {
    let text = std::fs::read_to_string(path)?;
    parse_graph(&text, format.unwrap_or_else(|| Format::sniff(path)))
}

/// One `v <vertex> <color>` line per vertex, both 1-based.
pub fn coloring_lines(c: &VertexColoring) -> String {
    c.colors.iter().map(|(&v, &k)| format!("v {} {}\n", v + 1, k + 1)).collect()
}
