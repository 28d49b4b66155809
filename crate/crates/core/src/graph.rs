//! Simple undirected graphs with stable vertex ids.
//!
//! A [`Graph`] stores its vertex ids in ascending order and addresses them
//! internally by *local index* (the position in that order). Induced
//! subgraphs keep the ids of their parent, so colorings computed on
//! different pieces of a decomposition can be combined by id directly.

use std::collections::{BTreeSet, VecDeque};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Graph {
    ids: Vec<usize>,
    adj: Vec<Vec<usize>>,
    m: usize,
}

impl Graph {
    /// Graph on ids `0..n` with the given edges. Duplicate edges collapse.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::Malformed(format!(
                    "edge ({u}, {v}) references a vertex outside 0..{n}"
                )));
            }
        }
        Graph::with_ids((0..n).collect(), edges)
    }

    /// Graph on an arbitrary set of vertex ids. Edges are given by id.
    pub fn with_ids(mut ids: Vec<usize>, edges: &[(usize, usize)]) -> Result<Graph> {
        ids.sort_unstable();
        if ids.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::Malformed("duplicate vertex id".into()));
        }
        let mut adj = vec![Vec::new(); ids.len()];
        for &(u, v) in edges {
            if u == v {
                return Err(Error::Malformed(format!("self-loop at vertex {u}")));
            }
            let (Ok(a), Ok(b)) = (ids.binary_search(&u), ids.binary_search(&v)) else {
                return Err(Error::Malformed(format!(
                    "edge ({u}, {v}) references an unknown vertex"
                )));
            };
            adj[a].push(b);
            adj[b].push(a);
        }
        let mut m = 0;
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
            m += list.len();
        }
        Ok(Graph { ids, adj, m: m / 2 })
    }

    pub fn empty() -> Graph {
        Graph { ids: Vec::new(), adj: Vec::new(), m: 0 }
    }

    pub fn n(&self) -> usize {
        self.ids.len()
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn is_empty(&self) -> bool {
        self.ids.is_empty()
    }

    /// Vertex ids in ascending order.
    pub fn ids(&self) -> &[usize] {
        &self.ids
    }

    pub fn id(&self, local: usize) -> usize {
        self.ids[local]
    }

    pub fn local(&self, id: usize) -> Option<usize> {
        self.ids.binary_search(&id).ok()
    }

    pub fn contains(&self, id: usize) -> bool {
        self.local(id).is_some()
    }

    /// Sorted local neighbor indices of local vertex `v`.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn neighbor_ids(&self, id: usize) -> Vec<usize> {
        match self.local(id) {
            Some(v) => self.adj[v].iter().map(|&w| self.ids[w]).collect(),
            None => Vec::new(),
        }
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn degree_of(&self, id: usize) -> Option<usize> {
        self.local(id).map(|v| self.adj[v].len())
    }

    pub fn min_degree(&self) -> Option<usize> {
        self.adj.iter().map(Vec::len).min()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        match (self.local(u), self.local(v)) {
            (Some(a), Some(b)) => self.adjacent(a, b),
            _ => false,
        }
    }

    /// Edges as local index pairs `(u, v)` with `u < v`, lexicographically sorted.
    pub fn local_edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.m);
        for (u, list) in self.adj.iter().enumerate() {
            for &v in list {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// Edges as id pairs `(u, v)` with `u < v`, lexicographically sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        self.local_edges()
            .into_iter()
            .map(|(u, v)| (self.ids[u], self.ids[v]))
            .collect()
    }

    /// Subgraph induced by the given ids. Ids keep their values.
    pub fn induced_subgraph(&self, ids: &[usize]) -> Result<Graph> {
        let mut locals = Vec::with_capacity(ids.len());
        for &id in ids {
            match self.local(id) {
                Some(v) => locals.push(v),
                None => {
                    return Err(Error::Malformed(format!(
                        "vertex {id} is not in the graph"
                    )))
                }
            }
        }
        Ok(self.induced_local(&locals))
    }

    /// Subgraph induced by local indices (duplicates ignored).
    pub fn induced_local(&self, locals: &[usize]) -> Graph {
        let mut sel: Vec<usize> = locals.to_vec();
        sel.sort_unstable();
        sel.dedup();
        let mut pos = vec![usize::MAX; self.n()];
        for (i, &v) in sel.iter().enumerate() {
            pos[v] = i;
        }
        let mut m = 0;
        let adj: Vec<Vec<usize>> = sel
            .iter()
            .map(|&v| {
                let list: Vec<usize> = self.adj[v]
                    .iter()
                    .filter_map(|&w| (pos[w] != usize::MAX).then_some(pos[w]))
                    .collect();
                m += list.len();
                list
            })
            .collect();
        Graph {
            ids: sel.iter().map(|&v| self.ids[v]).collect(),
            adj,
            m: m / 2,
        }
    }

    /// Graph with the given ids removed.
    pub fn without(&self, ids: &[usize]) -> Graph {
        let mut keep = vec![true; self.n()];
        for &id in ids {
            if let Some(v) = self.local(id) {
                keep[v] = false;
            }
        }
        let locals: Vec<usize> = (0..self.n()).filter(|&v| keep[v]).collect();
        self.induced_local(&locals)
    }

    /// Graph plus one new vertex `id` adjacent to the given existing ids.
    pub fn with_vertex(&self, id: usize, neighbors: &[usize]) -> Result<Graph> {
        if self.contains(id) {
            return Err(Error::Malformed(format!("vertex {id} already present")));
        }
        let mut ids = self.ids.clone();
        ids.push(id);
        let mut edges = self.edges();
        edges.extend(neighbors.iter().map(|&w| (id, w)));
        Graph::with_ids(ids, &edges)
    }

    /// Returns the same graph with every id `v` replaced by `f(v)`.
    pub fn relabel(&self, f: impl Fn(usize) -> usize) -> Result<Graph> {
        let ids = self.ids.iter().map(|&v| f(v)).collect();
        let edges: Vec<(usize, usize)> = self.edges().into_iter().map(|(u, v)| (f(u), f(v))).collect();
        Graph::with_ids(ids, &edges)
    }

    /// Local indices of the connected components, each sorted, ordered by
    /// smallest member.
    pub fn local_components(&self) -> Vec<Vec<usize>> {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        let mut queue = VecDeque::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            queue.push_back(s);
            let mut comp = Vec::new();
            while let Some(v) = queue.pop_front() {
                comp.push(v);
                for &w in &self.adj[v] {
                    if !seen[w] {
                        seen[w] = true;
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.n() <= 1 || self.local_components().len() == 1
    }

    pub fn to_doc(&self) -> GraphDoc {
        GraphDoc::from(self)
    }
}

/// Partition of the vertex ids into connected components.
pub fn connected_components(g: &Graph) -> Vec<Vec<usize>> {
    g.local_components()
        .into_iter()
        .map(|c| c.into_iter().map(|v| g.id(v)).collect())
        .collect()
}

/// One step of a degree peel: the removed vertex and its neighbors at the
/// moment it was removed.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Removal {
    pub vertex: usize,
    pub neighbors: Vec<usize>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct RemovalLog {
    pub removals: Vec<Removal>,
}

impl RemovalLog {
    pub fn len(&self) -> usize {
        self.removals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.removals.is_empty()
    }

    pub fn vertices(&self) -> impl Iterator<Item = usize> + '_ {
        self.removals.iter().map(|r| r.vertex)
    }

    /// Puts the removed vertices back into `residual`, last removed first.
    pub fn restore(&self, residual: &Graph) -> Result<Graph> {
        let mut ids = residual.ids().to_vec();
        let mut edges = residual.edges();
        for r in self.removals.iter().rev() {
            ids.push(r.vertex);
            edges.extend(r.neighbors.iter().map(|&w| (r.vertex, w)));
        }
        Graph::with_ids(ids, &edges)
    }
}

/// Removes vertices of degree at most `threshold` until none is left,
/// always taking the lowest id first. Returns the residual graph and the
/// removal log.
pub fn peel_low_degree(g: &Graph, threshold: usize) -> (Graph, RemovalLog) {
    let n = g.n();
    let mut deg: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut removed = vec![false; n];
    let mut ready: BTreeSet<usize> = (0..n).filter(|&v| deg[v] <= threshold).collect();
    let mut log = RemovalLog::default();
    while let Some(v) = ready.pop_first() {
        removed[v] = true;
        let mut neighbors = Vec::with_capacity(deg[v]);
        for &w in g.neighbors(v) {
            if removed[w] {
                continue;
            }
            neighbors.push(g.id(w));
            deg[w] -= 1;
            if deg[w] == threshold {
                ready.insert(w);
            }
        }
        log.removals.push(Removal { vertex: g.id(v), neighbors });
    }
    let keep: Vec<usize> = (0..n).filter(|&v| !removed[v]).collect();
    (g.induced_local(&keep), log)
}

/// Serialized graph: `{"n": .., "edges": [[u, v], ..]}` with ids `0..n`, or
/// with an explicit `vertices` list when ids are not contiguous.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct GraphDoc {
    pub n: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub vertices: Option<Vec<usize>>,
    pub edges: Vec<[usize; 2]>,
}

impl From<&Graph> for GraphDoc {
    fn from(g: &Graph) -> Self {
        let contiguous = g.ids().iter().enumerate().all(|(i, &v)| i == v);
        GraphDoc {
            n: g.n(),
            vertices: (!contiguous).then(|| g.ids().to_vec()),
            edges: g.edges().into_iter().map(|(u, v)| [u, v]).collect(),
        }
    }
}

impl TryFrom<GraphDoc> for Graph {
    type Error = Error;

    fn try_from(doc: GraphDoc) -> Result<Graph> {
        let edges: Vec<(usize, usize)> = doc.edges.iter().map(|e| (e[0], e[1])).collect();
        match doc.vertices {
            None => Graph::from_edges(doc.n, &edges),
            Some(ids) => {
                if ids.len() != doc.n {
                    return Err(Error::Malformed(format!(
                        "vertex list has {} entries but n = {}",
                        ids.len(),
                        doc.n
                    )));
                }
                Graph::with_ids(ids, &edges)
            }
        }
    }
}
