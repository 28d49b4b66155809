//! Classification of basic graphs: complete bipartite, line graph of a
//! sparse graph with maximum degree three, proper 2-cutset, or
//! series-parallel.

use std::collections::{BTreeMap, HashMap, VecDeque};

use serde::{Deserialize, Serialize};

use crate::cutsets::{find_proper_2_cutset, Proper2Cutset};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::patterns::find_diamond;

/// Bipartition `(A, B)` of a complete bipartite graph, as sorted ids.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Bipartition {
    pub left: Vec<usize>,
    pub right: Vec<usize>,
}

pub fn is_complete_bipartite(g: &Graph) -> Option<Bipartition> {
    if g.n() < 2 || !g.is_connected() {
        return None;
    }
    let mut side = vec![u8::MAX; g.n()];
    side[0] = 0;
    let mut queue = VecDeque::from([0]);
    while let Some(v) = queue.pop_front() {
        for &w in g.neighbors(v) {
            if side[w] == u8::MAX {
                side[w] = 1 - side[v];
                queue.push_back(w);
            } else if side[w] == side[v] {
                return None;
            }
        }
    }
    let left: Vec<usize> = (0..g.n()).filter(|&v| side[v] == 0).collect();
    let right: Vec<usize> = (0..g.n()).filter(|&v| side[v] == 1).collect();
    if g.m() != left.len() * right.len() {
        return None;
    }
    Some(Bipartition {
        left: left.into_iter().map(|v| g.id(v)).collect(),
        right: right.into_iter().map(|v| g.id(v)).collect(),
    })
}

/// Multigraph with edge multiplicities and loop counts, used only by the
/// series-parallel reduction.
#[derive(Clone, Debug, Default)]
pub struct MultiGraph {
    adj: HashMap<usize, BTreeMap<usize, usize>>,
    loops: HashMap<usize, usize>,
}

impl MultiGraph {
    pub fn from_graph(g: &Graph) -> Self {
        let mut mg = MultiGraph::default();
        for &v in g.ids() {
            mg.adj.entry(v).or_default();
        }
        for (u, v) in g.edges() {
            mg.add_edge(u, v);
        }
        mg
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        if u == v {
            *self.loops.entry(u).or_default() += 1;
            return;
        }
        *self.adj.entry(u).or_default().entry(v).or_default() += 1;
        *self.adj.entry(v).or_default().entry(u).or_default() += 1;
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    fn remove_vertex(&mut self, v: usize) {
        if let Some(nb) = self.adj.remove(&v) {
            for w in nb.keys() {
                if let Some(list) = self.adj.get_mut(w) {
                    list.remove(&v);
                }
            }
        }
        self.loops.remove(&v);
    }

    /// Applies the series-parallel reduction rules until none applies:
    /// delete loops, merge parallel edges, delete vertices of degree at
    /// most one, and suppress vertices of degree two.
    pub fn reduce(&mut self) {
        self.loops.clear();
        for nb in self.adj.values_mut() {
            for mult in nb.values_mut() {
                *mult = 1;
            }
        }
        let mut queue: VecDeque<usize> = self.adj.keys().copied().collect();
        let mut sorted: Vec<usize> = queue.drain(..).collect();
        sorted.sort_unstable();
        queue.extend(sorted);
        while let Some(v) = queue.pop_front() {
            let Some(nb) = self.adj.get(&v) else { continue };
            match nb.len() {
                0 | 1 => {
                    let around: Vec<usize> = nb.keys().copied().collect();
                    self.remove_vertex(v);
                    queue.extend(around);
                }
                2 => {
                    let mut it = nb.keys().copied();
                    let (u, w) = (it.next().unwrap(), it.next().unwrap());
                    self.remove_vertex(v);
                    // Series step; an existing u-w edge makes this a
                    // parallel pair, which collapses immediately.
                    self.adj.get_mut(&u).unwrap().insert(w, 1);
                    self.adj.get_mut(&w).unwrap().insert(u, 1);
                    queue.push_back(u);
                    queue.push_back(w);
                }
                _ => {}
            }
        }
    }
}

/// True iff `g` has no K4 minor, decided by series-parallel reduction: every
/// component must shrink away completely.
pub fn is_series_parallel(g: &Graph) -> bool {
    let mut mg = MultiGraph::from_graph(g);
    mg.reduce();
    mg.vertex_count() == 0
}

/// Root graph `H` of a line graph, with the map from vertices of the input
/// to edges of `H`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RootGraph {
    pub root: crate::graph::GraphDoc,
    /// `(vertex of G, (endpoint, endpoint) in H)`, sorted by vertex.
    pub edge_of: Vec<(usize, (usize, usize))>,
}

impl RootGraph {
    pub fn graph(&self) -> Graph {
        Graph::try_from(self.root.clone()).expect("root graph is well formed")
    }

    pub fn edge(&self, v: usize) -> Option<(usize, usize)> {
        self.edge_of
            .binary_search_by_key(&v, |&(u, _)| u)
            .ok()
            .map(|i| self.edge_of[i].1)
    }

    /// Every edge of `H` has at most one endpoint of degree above two.
    pub fn is_sparse(&self) -> bool {
        is_sparse(&self.graph())
    }

    /// Checks that the map is a bijection onto `E(H)` and that adjacency in
    /// `g` is exactly sharing an endpoint in `H`.
    pub fn validate(&self, g: &Graph) -> bool {
        let h = self.graph();
        if self.edge_of.len() != g.n() || h.m() != g.n() {
            return false;
        }
        let mut seen: Vec<(usize, usize)> = Vec::with_capacity(g.n());
        for &(v, (x, y)) in &self.edge_of {
            if !g.contains(v) || !h.has_edge(x, y) {
                return false;
            }
            seen.push((x.min(y), x.max(y)));
        }
        seen.sort_unstable();
        seen.dedup();
        if seen.len() != g.n() {
            return false;
        }
        for (i, &(u, eu)) in self.edge_of.iter().enumerate() {
            for &(v, ev) in &self.edge_of[i + 1..] {
                let share = eu.0 == ev.0 || eu.0 == ev.1 || eu.1 == ev.0 || eu.1 == ev.1;
                if share != g.has_edge(u, v) {
                    return false;
                }
            }
        }
        true
    }
}

pub fn is_sparse(h: &Graph) -> bool {
    h.local_edges()
        .iter()
        .all(|&(u, v)| h.degree(u) <= 2 || h.degree(v) <= 2)
}

/// Reconstructs a root graph of a connected diamond-free graph from its
/// unique partition into maximal cliques. Returns `None` unless `g` is a
/// line graph whose root is sparse with maximum degree at most three.
/// A lone triangle gets the root K1,3.
pub fn reconstruct_line_graph_root(g: &Graph) -> Result<Option<RootGraph>> {
    if let Some(w) = find_diamond(g) {
        return Err(Error::Contract(format!(
            "line-graph reconstruction needs a diamond-free graph, found {:?}",
            w.vertices
        )));
    }
    if g.n() == 0 {
        return Ok(None);
    }
    // In a diamond-free graph each edge uv lies in exactly one maximal
    // clique, namely {u, v} plus their common neighbors.
    let mut clique_index: HashMap<Vec<usize>, usize> = HashMap::new();
    let mut cliques_at: Vec<Vec<usize>> = vec![Vec::new(); g.n()];
    for (u, v) in g.local_edges() {
        let mut q: Vec<usize> = g
            .neighbors(u)
            .iter()
            .copied()
            .filter(|w| g.neighbors(v).binary_search(w).is_ok())
            .collect();
        q.push(u);
        q.push(v);
        q.sort_unstable();
        let next = clique_index.len();
        let k = *clique_index.entry(q.clone()).or_insert(next);
        if k == next {
            for &x in &q {
                cliques_at[x].push(k);
            }
        }
    }
    if cliques_at.iter().any(|c| c.len() > 2) {
        return Ok(None);
    }
    // H vertices: one per clique, then pendant ends for vertices in fewer
    // than two cliques.
    let mut next_vertex = clique_index.len();
    let mut edge_of = Vec::with_capacity(g.n());
    let mut h_edges = Vec::with_capacity(g.n());
    for v in 0..g.n() {
        let ends = match cliques_at[v].as_slice() {
            [p, q] => (*p, *q),
            [p] => {
                next_vertex += 1;
                (*p, next_vertex - 1)
            }
            [] => {
                next_vertex += 2;
                (next_vertex - 2, next_vertex - 1)
            }
            _ => unreachable!(),
        };
        edge_of.push((g.id(v), ends));
        h_edges.push(ends);
    }
    let h = Graph::from_edges(next_vertex, &h_edges)?;
    if h.m() != g.n() || h.max_degree() > 3 || !is_sparse(&h) {
        return Ok(None);
    }
    Ok(Some(RootGraph { root: h.to_doc(), edge_of }))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Branch {
    CompleteBipartite,
    SeriesParallel,
    LineOfSparse,
    Proper2Cutset,
    Unclassified,
}

impl Branch {
    pub fn as_str(self) -> &'static str {
        match self {
            Branch::CompleteBipartite => "complete_bipartite",
            Branch::SeriesParallel => "series_parallel",
            Branch::LineOfSparse => "line_of_sparse",
            Branch::Proper2Cutset => "proper_2_cutset",
            Branch::Unclassified => "unclassified",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "branch", content = "witness", rename_all = "snake_case")]
pub enum BasicVerdict {
    CompleteBipartite(Bipartition),
    SeriesParallel,
    LineOfSparse(RootGraph),
    #[serde(rename = "proper_2_cutset")]
    Proper2Cutset(Proper2Cutset),
    Unclassified,
}

impl BasicVerdict {
    pub fn branch(&self) -> Branch {
        match self {
            BasicVerdict::CompleteBipartite(_) => Branch::CompleteBipartite,
            BasicVerdict::SeriesParallel => Branch::SeriesParallel,
            BasicVerdict::LineOfSparse(_) => Branch::LineOfSparse,
            BasicVerdict::Proper2Cutset(_) => Branch::Proper2Cutset,
            BasicVerdict::Unclassified => Branch::Unclassified,
        }
    }
}

/// Tries complete bipartite, line graph of a sparse max-degree-3 graph,
/// proper 2-cutset (smallest small side) and series-parallel, in that order.
pub fn classify_basic(g: &Graph) -> BasicVerdict {
    if let Some(bp) = is_complete_bipartite(g) {
        return BasicVerdict::CompleteBipartite(bp);
    }
    if g.is_connected() && find_diamond(g).is_none() {
        if let Ok(Some(root)) = reconstruct_line_graph_root(g) {
            return BasicVerdict::LineOfSparse(root);
        }
    }
    if g.is_connected() {
        if let Some(cut) = find_proper_2_cutset(g, true) {
            return BasicVerdict::Proper2Cutset(cut);
        }
    }
    if is_series_parallel(g) {
        return BasicVerdict::SeriesParallel;
    }
    BasicVerdict::Unclassified
}
