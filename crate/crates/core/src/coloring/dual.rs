use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::recognition::{reconstruct_line_graph_root, BasicVerdict, RootGraph};

use super::edge::{edge_color_sparse, lemma_dual_edge_colorings};
use super::exact::color_with_constraints;
use super::{EdgeColoring, VertexColoring};

/// Search-node budget for the exhaustive dual-coloring fallback (3^20).
pub const DEFAULT_FALLBACK_BUDGET: u64 = 3_486_784_401;

/// How a pair of dual colorings was obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DualRoute {
    /// The side is an induced a-b path.
    Cycle,
    /// The side plus a vertex joined to a and b is the prism with one edge
    /// subdivided.
    SubdividedPrism,
    /// The side plus a vertex joined to a and b is the line graph of a
    /// subdivided cubic graph; colorings come from Kempe swaps on its root.
    LineGraphLemma,
    ExhaustiveFallback,
}

/// Two proper 3-colorings of one side of a proper 2-cutset `{a, b}`: in
/// `same` the pair shares a color, in `different` it does not.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DualColorings {
    pub a: usize,
    pub b: usize,
    pub same: VertexColoring,
    pub different: VertexColoring,
    pub route: DualRoute,
}

impl DualColorings {
    pub fn validate(&self, tx: &Graph) -> bool {
        let small = |c: &VertexColoring| c.max_color().is_none_or(|m| m < 3);
        self.same.is_proper(tx)
            && self.different.is_proper(tx)
            && small(&self.same)
            && small(&self.different)
            && self.same.get(self.a) == self.same.get(self.b)
            && self.different.get(self.a) != self.different.get(self.b)
    }
}

/// Colors a basic graph classified as complete bipartite or as the line
/// graph of a sparse graph.
pub fn color_basic(g: &Graph, verdict: &BasicVerdict) -> Result<VertexColoring> {
    match verdict {
        BasicVerdict::CompleteBipartite(bp) => Ok(bp
            .left
            .iter()
            .map(|&v| (v, 0))
            .chain(bp.right.iter().map(|&v| (v, 1)))
            .collect()),
        BasicVerdict::LineOfSparse(root) => {
            let ec = edge_color_sparse(&root.graph())?;
            pull_back(g, root, &ec)
        }
        other => Err(Error::Contract(format!(
            "color_basic cannot color the {} branch",
            other.branch().as_str()
        ))),
    }
}

fn pull_back(g: &Graph, root: &RootGraph, ec: &EdgeColoring) -> Result<VertexColoring> {
    g.ids()
        .iter()
        .map(|&v| {
            root.edge(v)
                .and_then(|(x, y)| ec.get(x, y))
                .map(|c| (v, c))
                .ok_or_else(|| Error::Contract(format!("vertex {v} has no colored root edge")))
        })
        .collect()
}

/// Dual colorings of `tx = G[X ∪ {a, b}]` for a proper 2-cutset `{a, b}`.
///
/// Tries the constructive routes first and falls back to a budgeted exact
/// search, which is logged.
pub fn dual_colorings_for_side(tx: &Graph, a: usize, b: usize, budget: u64) -> Result<DualColorings> {
    if !tx.contains(a) || !tx.contains(b) || a == b {
        return Err(Error::Contract("a and b must be distinct vertices of the side".into()));
    }
    if tx.has_edge(a, b) {
        return Err(Error::Contract("a and b must be nonadjacent".into()));
    }
    let found = path_route(tx, a, b)
        .map(|(s, d)| (s, d, DualRoute::Cycle))
        .or_else(|| prism_route(tx, a, b).map(|(s, d)| (s, d, DualRoute::SubdividedPrism)))
        .or_else(|| lemma_route(tx, a, b).map(|(s, d)| (s, d, DualRoute::LineGraphLemma)));
    if let Some((same, different, route)) = found {
        let dual = DualColorings { a, b, same, different, route };
        if dual.validate(tx) {
            return Ok(dual);
        }
        log::warn!("{route:?} route produced invalid dual colorings; falling back");
    }
    log::warn!(
        "dual colorings: constructive routes missed a side with {} vertices, {} edges; using exhaustive search",
        tx.n(),
        tx.m()
    );
    let failure = |what: &str| Error::Classification {
        reason: format!("no proper 3-coloring of the side with a, b {what}"),
        subgraph: serde_json::to_string(&tx.to_doc()).unwrap_or_default(),
    };
    let same = color_with_constraints(tx, 3, &[(a, 0), (b, 0)], budget)?.ok_or_else(|| failure("equal"))?;
    let different =
        color_with_constraints(tx, 3, &[(a, 0), (b, 1)], budget)?.ok_or_else(|| failure("distinct"))?;
    Ok(DualColorings { a, b, same, different, route: DualRoute::ExhaustiveFallback })
}

/// `tx` is an induced path from `a` to `b`.
fn path_route(tx: &Graph, a: usize, b: usize) -> Option<(VertexColoring, VertexColoring)> {
    if tx.m() + 1 != tx.n() || !tx.is_connected() || tx.max_degree() > 2 {
        return None;
    }
    if tx.degree_of(a) != Some(1) || tx.degree_of(b) != Some(1) {
        return None;
    }
    let mut order = vec![a];
    let mut prev = usize::MAX;
    while let Some(&cur) = order.last() {
        if cur == b {
            break;
        }
        let next = tx.neighbor_ids(cur).into_iter().find(|&w| w != prev)?;
        prev = cur;
        order.push(next);
    }
    let len = order.len() - 1;
    let alternate = |i: usize| i % 2;
    // Alternate along the path; if the ends come out wrong, recolor the
    // second-to-last vertex 2 and the last vertex to match or differ.
    let build = |want_same: bool| -> VertexColoring {
        let mut col: Vec<usize> = (0..=len).map(alternate).collect();
        let ends_same = col[0] == col[len];
        if ends_same != want_same {
            col[len - 1] = 2;
            col[len] = if want_same { col[0] } else { 1 - col[0] };
        }
        order.iter().copied().zip(col).collect()
    };
    Some((build(true), build(false)))
}

/// `tx` is the prism minus one matching edge `ab`.
fn prism_route(tx: &Graph, a: usize, b: usize) -> Option<(VertexColoring, VertexColoring)> {
    if tx.n() != 6 || tx.m() != 8 {
        return None;
    }
    let na = tx.neighbor_ids(a);
    let nb = tx.neighbor_ids(b);
    let ([a1, a2], [b1, b2]) = (na.as_slice(), nb.as_slice()) else { return None };
    let (a1, a2, b1, b2) = (*a1, *a2, *b1, *b2);
    if !tx.has_edge(a1, a2) || !tx.has_edge(b1, b2) {
        return None;
    }
    // Pair a1 with its partner among b1, b2.
    let (b1, b2) = match (tx.has_edge(a1, b1), tx.has_edge(a1, b2)) {
        (true, false) => (b1, b2),
        (false, true) => (b2, b1),
        _ => return None,
    };
    if !tx.has_edge(a2, b2) || tx.has_edge(a2, b1) {
        return None;
    }
    let same = [(a, 0), (b, 0), (a2, 1), (b1, 1), (a1, 2), (b2, 2)].into_iter().collect();
    let different = [(a, 0), (b1, 0), (a2, 1), (b, 1), (a1, 2), (b2, 2)].into_iter().collect();
    Some((same, different))
}

/// `tx` plus a vertex `u` adjacent to `a` and `b` is the line graph of a
/// cubic graph with one edge subdivided twice (the one holding `u`) and
/// the others once.
fn lemma_route(tx: &Graph, a: usize, b: usize) -> Option<(VertexColoring, VertexColoring)> {
    let u = tx.ids().iter().max().map_or(0, |m| m + 1);
    let gp = tx.with_vertex(u, &[a, b]).ok()?;
    if !gp.is_connected() {
        return None;
    }
    let root = reconstruct_line_graph_root(&gp).ok()??;
    let h = root.graph();
    let (e1, e2) = (root.edge(a)?, root.edge(b)?);
    let (c1, c2) = lemma_dual_edge_colorings(&h, e1, e2).ok()?;
    // Both outer edges of the twice-subdivided path must flank u's edge.
    let (x, y) = root.edge(u)?;
    if h.degree_of(x)? != 2 || h.degree_of(y)? != 2 {
        return None;
    }
    let restrict = |ec: &EdgeColoring| -> Option<VertexColoring> {
        let full = pull_back(&gp, &root, ec).ok()?;
        Some(full.restrict(tx.ids()))
    };
    Some((restrict(&c1)?, restrict(&c2)?))
}
