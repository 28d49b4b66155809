//! End-to-end coloring: decompose, classify the leaves, color them, and
//! glue the colorings back together, producing a checkable certificate.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::coloring::{
    add_back_peeled, color_basic, dual_colorings_for_side, merge_at_clique, merge_at_proper2, DualColorings,
    DualRoute, VertexColoring, DEFAULT_FALLBACK_BUDGET,
};
use crate::cutsets::{build_clique_tree, find_clique_cutset, CliqueCutsetTree};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::recognition::{classify_basic, BasicVerdict, Branch};

pub const CERTIFICATE_VERSION: u32 = 1;

#[derive(Clone, Debug)]
pub struct PipelineOptions {
    /// Worker threads for coloring independent leaves; 1 runs inline.
    pub jobs: usize,
    /// Node budget for the exhaustive dual-coloring fallback.
    pub fallback_budget: u64,
}

impl Default for PipelineOptions {
    fn default() -> Self {
        PipelineOptions { jobs: 1, fallback_budget: DEFAULT_FALLBACK_BUDGET }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TreeSummary {
    pub nodes: usize,
    pub layers: usize,
    /// Cutsets in node order; an empty list marks a split of a
    /// disconnected residual.
    pub cutsets: Vec<Vec<usize>>,
    pub peeled: usize,
}

impl TreeSummary {
    pub fn of(tree: &CliqueCutsetTree) -> Self {
        TreeSummary {
            nodes: tree.nodes.len(),
            layers: tree.layers,
            cutsets: tree.nodes.iter().filter_map(|n| n.cutset.clone()).collect(),
            peeled: tree.nodes.iter().map(|n| n.removal_log.len()).sum(),
        }
    }
}

/// One side split off at a proper 2-cutset.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Extraction {
    pub a: usize,
    pub b: usize,
    pub side: Vec<usize>,
    pub route: DualRoute,
}

/// What happened at one basic leaf: the verdict sequence of the
/// extraction loop, the sides extracted, and reports for any remainder that
/// had to be decomposed again.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LeafReport {
    pub vertices: Vec<usize>,
    pub verdicts: Vec<Branch>,
    pub extractions: Vec<Extraction>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub nested: Vec<LeafReport>,
}

impl LeafReport {
    pub fn first_verdict(&self) -> Branch {
        self.verdicts.first().copied().unwrap_or(Branch::Unclassified)
    }

    fn walk<'a>(&'a self, out: &mut Vec<&'a LeafReport>) {
        out.push(self);
        for r in &self.nested {
            r.walk(out);
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ColoringCertificate {
    pub version: u32,
    pub graph_hash: String,
    pub n: usize,
    pub m: usize,
    pub coloring: VertexColoring,
    pub tree: TreeSummary,
    pub leaves: Vec<LeafReport>,
    pub fallback_count: usize,
    pub proper: bool,
    pub palette_size: usize,
}

impl ColoringCertificate {
    /// Every leaf report, including nested ones.
    pub fn all_leaves(&self) -> Vec<&LeafReport> {
        let mut out = Vec::new();
        for r in &self.leaves {
            r.walk(&mut out);
        }
        out
    }

    pub fn unclassified_count(&self) -> usize {
        self.all_leaves()
            .iter()
            .filter(|r| r.verdicts.contains(&Branch::Unclassified))
            .count()
    }
}

/// SHA-256 of the vertex ids and the sorted edge list, as lowercase hex.
pub fn graph_hash(g: &Graph) -> String {
    let mut h = Sha256::new();
    h.update(format!("{} {}\n", g.n(), g.m()));
    for id in g.ids() {
        h.update(format!("{id} "));
    }
    h.update("\n");
    for (u, v) in g.edges() {
        h.update(format!("{u} {v}\n"));
    }
    h.finalize().iter().map(|b| format!("{b:02x}")).collect()
}

pub fn color_class_member(g: &Graph) -> Result<ColoringCertificate> {
    color_class_member_with(g, &PipelineOptions::default())
}

/// Colors a member of the class with at most three colors.
///
/// Fails with a classification error, carrying the offending subgraph, if
/// some basic piece fits none of the known shapes; a wrong coloring is
/// never returned.
pub fn color_class_member_with(g: &Graph, opts: &PipelineOptions) -> Result<ColoringCertificate> {
    let run = || color_graph(g, opts);
    let (coloring, tree, leaves) = if opts.jobs > 1 {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(opts.jobs)
            .build()
            .map_err(|e| Error::Contract(format!("thread pool: {e}")))?;
        pool.install(run)?
    } else {
        run()?
    };
    let proper = coloring.is_proper(g) && coloring.len() == g.n();
    if !proper || coloring.max_color().is_some_and(|c| c >= 3) {
        return Err(Error::Classification {
            reason: "assembled coloring is not a proper 3-coloring".into(),
            subgraph: serde_json::to_string(&g.to_doc())?,
        });
    }
    let mut cert = ColoringCertificate {
        version: CERTIFICATE_VERSION,
        graph_hash: graph_hash(g),
        n: g.n(),
        m: g.m(),
        palette_size: coloring.palette_size(),
        coloring,
        tree: TreeSummary::of(&tree),
        leaves,
        fallback_count: 0,
        proper,
    };
    cert.fallback_count = cert
        .all_leaves()
        .iter()
        .flat_map(|r| &r.extractions)
        .filter(|e| e.route == DualRoute::ExhaustiveFallback)
        .count();
    if cert.fallback_count > 0 {
        log::warn!("{} dual colorings needed the exhaustive fallback", cert.fallback_count);
    }
    Ok(cert)
}

/// Recomputes the hash, properness and the three-color bound.
pub fn verify_certificate(g: &Graph, cert: &ColoringCertificate) -> bool {
    cert.version == CERTIFICATE_VERSION
        && cert.graph_hash == graph_hash(g)
        && cert.n == g.n()
        && cert.m == g.m()
        && cert.coloring.len() == g.n()
        && cert.coloring.is_proper(g)
        && cert.coloring.max_color().is_none_or(|c| c < 3)
        && cert.palette_size == cert.coloring.palette_size()
        && cert.proper
}

fn color_graph(g: &Graph, opts: &PipelineOptions) -> Result<(VertexColoring, CliqueCutsetTree, Vec<LeafReport>)> {
    let tree = build_clique_tree(g);
    let basic: Vec<usize> = tree.basic_leaves().map(|n| n.id).collect();
    let work = |&id: &usize| -> Result<(usize, VertexColoring, LeafReport)> {
        let h = g.induced_subgraph(&tree.nodes[id].residual)?;
        let (c, r) = color_basic_leaf(&h, opts)?;
        Ok((id, c, r))
    };
    let done: Vec<(usize, VertexColoring, LeafReport)> = if opts.jobs > 1 {
        basic.par_iter().map(work).collect::<Result<_>>()?
    } else {
        basic.iter().map(work).collect::<Result<_>>()?
    };

    let mut colorings: Vec<Option<VertexColoring>> = vec![None; tree.nodes.len()];
    let mut leaves = Vec::with_capacity(done.len());
    let mut residual_colorings: Vec<Option<VertexColoring>> = vec![None; tree.nodes.len()];
    for (id, c, r) in done {
        residual_colorings[id] = Some(c);
        leaves.push(r);
    }
    // Children always have larger ids than their parent.
    for id in (0..tree.nodes.len()).rev() {
        let node = &tree.nodes[id];
        let residual = if node.is_leaf() {
            residual_colorings[id].take().unwrap_or_default()
        } else {
            let mut pieces = Vec::with_capacity(node.children.len());
            for &c in &node.children {
                let piece = g.induced_subgraph(&tree.nodes[c].vertices)?;
                pieces.push((piece, colorings[c].take().expect("child colored first")));
            }
            merge_at_clique(&pieces, node.cutset.as_deref().unwrap_or(&[]))?
        };
        colorings[id] = Some(add_back_peeled(&residual, &node.removal_log));
    }
    let coloring = colorings[0].take().unwrap_or_default();
    Ok((coloring, tree, leaves))
}

/// No clique cutset and minimum degree at least three.
fn is_basic(g: &Graph) -> Result<bool> {
    if g.is_empty() || g.min_degree().is_none_or(|d| d < 3) || !g.is_connected() {
        return Ok(false);
    }
    Ok(find_clique_cutset(g)?.is_none())
}

fn classification_error(g: &Graph, reason: &str) -> Error {
    Error::Classification {
        reason: reason.into(),
        subgraph: serde_json::to_string(&g.to_doc()).unwrap_or_default(),
    }
}

/// Colors a basic graph, splitting off proper 2-cutset sides while the
/// remainder stays basic and has one, and merging back in reverse order.
fn color_basic_leaf(h: &Graph, opts: &PipelineOptions) -> Result<(VertexColoring, LeafReport)> {
    let mut report = LeafReport {
        vertices: h.ids().to_vec(),
        verdicts: Vec::new(),
        extractions: Vec::new(),
        nested: Vec::new(),
    };
    let mut duals: Vec<DualColorings> = Vec::new();
    let mut ty = h.clone();
    let mut verdict = classify_basic(&ty);
    let mut coloring = loop {
        report.verdicts.push(verdict.branch());
        match &verdict {
            BasicVerdict::CompleteBipartite(_) | BasicVerdict::LineOfSparse(_) => {
                break color_basic(&ty, &verdict)?;
            }
            BasicVerdict::Proper2Cutset(cut) => {
                let mut tx_ids = cut.x.clone();
                tx_ids.extend([cut.a, cut.b]);
                let tx = ty.induced_subgraph(&tx_ids)?;
                let dual = dual_colorings_for_side(&tx, cut.a, cut.b, opts.fallback_budget)?;
                report.extractions.push(Extraction { a: cut.a, b: cut.b, side: cut.x.clone(), route: dual.route });
                duals.push(dual);
                let mut ty_ids = cut.y.clone();
                ty_ids.extend([cut.a, cut.b]);
                ty = ty.induced_subgraph(&ty_ids)?;
                if is_basic(&ty)? {
                    verdict = classify_basic(&ty);
                    continue;
                }
                let (c, _, nested) = color_graph(&ty, opts)?;
                report.nested = nested;
                break c;
            }
            BasicVerdict::SeriesParallel => {
                let (c, _, nested) = color_graph(&ty, opts)?;
                report.nested = nested;
                break c;
            }
            BasicVerdict::Unclassified => {
                return Err(classification_error(&ty, "basic graph fits no known shape"));
            }
        }
    };
    for dual in duals.iter().rev() {
        coloring = merge_at_proper2(dual, &coloring, dual.a, dual.b)?;
    }
    if !coloring.is_proper(h) {
        return Err(classification_error(h, "merged leaf coloring is not proper"));
    }
    Ok((coloring, report))
}
