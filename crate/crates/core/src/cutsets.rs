//! Clique cutsets, the clique-cutset decomposition tree, and proper
//! 2-cutsets.
//!
//! Clique cutsets are found from a minimal elimination ordering (MCS-M):
//! every clique minimal separator of a graph is the set of higher-numbered
//! neighbors of some generator vertex in the minimal triangulation, so one
//! O(nm) ordering plus a clique test per generator suffices.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{peel_low_degree, Graph, RemovalLog};

/// A clique whose removal disconnects the graph, with the resulting
/// components (ids, each sorted, ordered by smallest member).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CliqueCut {
    pub clique: Vec<usize>,
    pub components: Vec<Vec<usize>>,
}

/// Minimal elimination ordering and minimal triangulation by MCS-M.
struct Mcsm {
    /// Local vertices in elimination order (first eliminated first).
    order: Vec<usize>,
    /// Neighbors in the triangulation that are eliminated later.
    higher: Vec<Vec<usize>>,
    /// Vertices whose `higher` set is a minimal separator.
    generator: Vec<bool>,
}

fn mcs_m(g: &Graph) -> Mcsm {
    let n = g.n();
    let mut weight = vec![0usize; n];
    let mut numbered = vec![false; n];
    let mut higher = vec![Vec::new(); n];
    let mut generator = vec![false; n];
    let mut order = Vec::with_capacity(n);
    let mut prev_weight: Option<usize> = None;
    let mut reached = vec![false; n];
    let mut buckets: Vec<Vec<usize>> = vec![Vec::new(); n + 1];
    for _ in 0..n {
        let v = (0..n)
            .filter(|&u| !numbered[u])
            .max_by_key(|&u| (weight[u], std::cmp::Reverse(u)))
            .expect("an unnumbered vertex remains");
        if prev_weight.is_some_and(|p| weight[v] <= p) {
            generator[v] = true;
        }
        prev_weight = Some(weight[v]);
        numbered[v] = true;
        order.push(v);

        // Unnumbered vertices reachable from v through unnumbered vertices
        // of strictly smaller weight.
        reached.iter_mut().for_each(|r| *r = false);
        reached[v] = true;
        let mut raise = Vec::new();
        for &u in g.neighbors(v) {
            if !numbered[u] {
                reached[u] = true;
                raise.push(u);
                buckets[weight[u]].push(u);
            }
        }
        for level in 0..=n {
            while let Some(z) = buckets[level].pop() {
                for &y in g.neighbors(z) {
                    if numbered[y] || reached[y] {
                        continue;
                    }
                    reached[y] = true;
                    if weight[y] > level {
                        raise.push(y);
                        buckets[weight[y]].push(y);
                    } else {
                        buckets[level].push(y);
                    }
                }
            }
        }
        for u in raise {
            weight[u] += 1;
            higher[u].push(v);
        }
    }
    // Order was built last-eliminated first.
    order.reverse();
    Mcsm { order, higher, generator }
}

fn is_clique(g: &Graph, set: &[usize]) -> bool {
    set.iter()
        .enumerate()
        .all(|(i, &u)| set[i + 1..].iter().all(|&v| g.adjacent(u, v)))
}

fn components_without(g: &Graph, removed: &[usize]) -> Vec<Vec<usize>> {
    let mut keep = vec![true; g.n()];
    for &v in removed {
        keep[v] = false;
    }
    let locals: Vec<usize> = (0..g.n()).filter(|&v| keep[v]).collect();
    let h = g.induced_local(&locals);
    h.local_components()
        .into_iter()
        .map(|c| c.into_iter().map(|v| h.id(v)).collect())
        .collect()
}

/// Some clique cutset of a connected graph, found through a minimal
/// elimination ordering. `None` when the graph has no clique cutset.
pub fn find_clique_cutset(g: &Graph) -> Result<Option<CliqueCut>> {
    if !g.is_connected() {
        return Err(Error::Contract("clique cutset search needs a connected graph".into()));
    }
    if g.n() < 3 {
        return Ok(None);
    }
    let mcs = mcs_m(g);
    for &x in &mcs.order {
        if !mcs.generator[x] {
            continue;
        }
        let mut sep = mcs.higher[x].clone();
        sep.sort_unstable();
        if sep.is_empty() || !is_clique(g, &sep) {
            continue;
        }
        let components = components_without(g, &sep);
        if components.len() >= 2 {
            return Ok(Some(CliqueCut {
                clique: sep.iter().map(|&v| g.id(v)).collect(),
                components,
            }));
        }
    }
    Ok(None)
}

/// Reference search: tries every clique of `g` as a separator. Exponential
/// in the clique number; meant for cross-checking on small graphs.
pub fn find_clique_cutset_naive(g: &Graph) -> Option<CliqueCut> {
    fn grow(g: &Graph, clique: &mut Vec<usize>, cands: &[usize], out: &mut Option<CliqueCut>) {
        if out.is_some() {
            return;
        }
        if !clique.is_empty() {
            let comps = components_without(g, clique);
            if comps.len() >= 2 {
                *out = Some(CliqueCut {
                    clique: clique.iter().map(|&v| g.id(v)).collect(),
                    components: comps,
                });
                return;
            }
        }
        for (i, &v) in cands.iter().enumerate() {
            let next: Vec<usize> =
                cands[i + 1..].iter().copied().filter(|&w| g.adjacent(v, w)).collect();
            clique.push(v);
            grow(g, clique, &next, out);
            clique.pop();
        }
    }
    let mut out = None;
    let all: Vec<usize> = (0..g.n()).collect();
    grow(g, &mut Vec::new(), &all, &mut out);
    out
}

/// Vertex sets (ids) of the clique-cutset atoms of `g`: maximal induced
/// subgraphs without a clique cutset. Every induced subgraph of `g` that
/// has no clique cutset lies inside one atom.
pub fn clique_atoms(g: &Graph) -> Vec<Vec<usize>> {
    let mut atoms = Vec::new();
    let mut stack = vec![g.ids().to_vec()];
    while let Some(set) = stack.pop() {
        let h = g.induced_subgraph(&set).expect("subset of g");
        let comps = h.local_components();
        if comps.len() > 1 {
            for c in comps {
                stack.push(c.into_iter().map(|v| h.id(v)).collect());
            }
            continue;
        }
        match find_clique_cutset(&h).expect("connected") {
            None => atoms.push(set),
            Some(cut) => {
                for comp in cut.components {
                    let mut child = comp;
                    child.extend_from_slice(&cut.clique);
                    child.sort_unstable();
                    stack.push(child);
                }
            }
        }
    }
    atoms.sort();
    atoms
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TreeNode {
    pub id: usize,
    /// 1-based decomposition layer.
    pub layer: usize,
    /// Vertex ids of the induced subgraph at this node.
    pub vertices: Vec<usize>,
    /// Degree-2 peel applied on entry.
    pub removal_log: RemovalLog,
    /// Vertex ids left after the peel.
    pub residual: Vec<usize>,
    /// Clique used to split the residual; empty when the residual was
    /// simply disconnected. `None` at leaves.
    pub cutset: Option<Vec<usize>>,
    pub children: Vec<usize>,
}

impl TreeNode {
    pub fn is_leaf(&self) -> bool {
        self.children.is_empty()
    }

    /// A leaf whose residual is non-empty: no clique cutset, min degree 3.
    pub fn is_basic_leaf(&self) -> bool {
        self.is_leaf() && !self.residual.is_empty()
    }
}

/// Clique-cutset decomposition tree interleaved with degree-2 peeling.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CliqueCutsetTree {
    pub nodes: Vec<TreeNode>,
    /// Number of layers j(G).
    pub layers: usize,
}

impl CliqueCutsetTree {
    pub fn root(&self) -> &TreeNode {
        &self.nodes[0]
    }

    pub fn leaves(&self) -> impl Iterator<Item = &TreeNode> {
        self.nodes.iter().filter(|n| n.is_leaf())
    }

    pub fn basic_leaves(&self) -> impl Iterator<Item = &TreeNode> {
        self.nodes.iter().filter(|n| n.is_basic_leaf())
    }

    /// Rebuilds the input graph from the leaves: union of leaf residuals
    /// along the recorded cutsets, then every peel replayed in reverse.
    pub fn reassemble(&self, g: &Graph) -> Result<Graph> {
        self.reassemble_node(g, 0)
    }

    fn reassemble_node(&self, g: &Graph, id: usize) -> Result<Graph> {
        let node = &self.nodes[id];
        let residual = if node.is_leaf() {
            g.induced_subgraph(&node.residual)?
        } else {
            let mut ids = Vec::new();
            let mut edges = Vec::new();
            for &c in &node.children {
                let part = self.reassemble_node(g, c)?;
                ids.extend_from_slice(part.ids());
                edges.extend(part.edges());
            }
            ids.sort_unstable();
            ids.dedup();
            Graph::with_ids(ids, &edges)?
        };
        node.removal_log.restore(&residual)
    }
}

/// Alternates degree-2 peeling with clique-cutset splits until every leaf
/// is empty or basic (no clique cutset, minimum degree at least 3).
pub fn build_clique_tree(g: &Graph) -> CliqueCutsetTree {
    let mut nodes: Vec<TreeNode> = Vec::new();
    nodes.push(TreeNode {
        id: 0,
        layer: 1,
        vertices: g.ids().to_vec(),
        removal_log: RemovalLog::default(),
        residual: Vec::new(),
        cutset: None,
        children: Vec::new(),
    });
    let mut next = 0;
    while next < nodes.len() {
        let id = next;
        next += 1;
        let sub = g.induced_subgraph(&nodes[id].vertices).expect("node vertices lie in g");
        let (residual, log) = peel_low_degree(&sub, 2);
        nodes[id].removal_log = log;
        nodes[id].residual = residual.ids().to_vec();
        if residual.is_empty() {
            continue;
        }
        let split = if residual.is_connected() {
            find_clique_cutset(&residual).expect("connected residual")
        } else {
            Some(CliqueCut {
                clique: Vec::new(),
                components: crate::graph::connected_components(&residual),
            })
        };
        let Some(cut) = split else { continue };
        let layer = nodes[id].layer + 1;
        let mut children = Vec::new();
        for comp in cut.components {
            let mut vertices = comp;
            vertices.extend_from_slice(&cut.clique);
            vertices.sort_unstable();
            let child = nodes.len();
            children.push(child);
            nodes.push(TreeNode {
                id: child,
                layer,
                vertices,
                removal_log: RemovalLog::default(),
                residual: Vec::new(),
                cutset: None,
                children: Vec::new(),
            });
        }
        nodes[id].cutset = Some(cut.clique);
        nodes[id].children = children;
    }
    let layers = nodes.iter().map(|n| n.layer).max().unwrap_or(0);
    CliqueCutsetTree { nodes, layers }
}

/// Nonadjacent pair `{a, b}` with sides `x`, `y` (ids, sorted,
/// `|x| <= |y|`): no edges between the sides and neither side plus the pair
/// induces an a-b path.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Proper2Cutset {
    pub a: usize,
    pub b: usize,
    pub x: Vec<usize>,
    pub y: Vec<usize>,
}

impl Proper2Cutset {
    /// Re-checks the definition against `g` from scratch.
    pub fn validate(&self, g: &Graph) -> bool {
        let (Some(a), Some(b)) = (g.local(self.a), g.local(self.b)) else {
            return false;
        };
        if a == b || g.adjacent(a, b) || self.x.is_empty() || self.y.is_empty() {
            return false;
        }
        let mut all: Vec<usize> = self.x.iter().chain(&self.y).copied().collect();
        all.push(self.a);
        all.push(self.b);
        all.sort_unstable();
        if all != g.ids() {
            return false;
        }
        let crossing = self
            .x
            .iter()
            .any(|&u| self.y.iter().any(|&v| g.has_edge(u, v)));
        if crossing {
            return false;
        }
        let is_ab_path = |side: &[usize]| {
            let mut ids = side.to_vec();
            ids.push(self.a);
            ids.push(self.b);
            let h = g.induced_subgraph(&ids).expect("ids of g");
            let ends_ok = h.degree_of(self.a) == Some(1) && h.degree_of(self.b) == Some(1);
            ends_ok
                && h.is_connected()
                && h.m() + 1 == h.n()
                && side.iter().all(|&v| h.degree_of(v) == Some(2))
        };
        !is_ab_path(&self.x) && !is_ab_path(&self.y)
    }
}

/// Finds a proper 2-cutset. With `minimize_small_side`, returns one whose
/// smaller side is as small as possible over all proper 2-cutsets (ties go
/// to the lexicographically first pair); otherwise the first found.
pub fn find_proper_2_cutset(g: &Graph, minimize_small_side: bool) -> Option<Proper2Cutset> {
    let n = g.n();
    let mut best: Option<(usize, Proper2Cutset)> = None;
    for a in 0..n {
        for b in a + 1..n {
            if g.adjacent(a, b) {
                continue;
            }
            let Some(found) = best_split_for_pair(g, a, b) else { continue };
            if !minimize_small_side {
                return Some(found.1);
            }
            if best.as_ref().is_none_or(|(size, _)| found.0 < *size) {
                best = Some(found);
            }
        }
    }
    best.map(|(_, cut)| cut)
}

/// Best grouping of the components of `g - {a, b}` into two valid sides.
/// Only single components and pairs of components need to be tried as the
/// small side: dropping a component from a side with three or more keeps
/// both sides multi-component, hence valid, and shrinks the small side.
fn best_split_for_pair(g: &Graph, a: usize, b: usize) -> Option<(usize, Proper2Cutset)> {
    let comps = components_without(g, &[a, b]);
    let c = comps.len();
    if c < 2 {
        return None;
    }
    let total: usize = comps.iter().map(Vec::len).sum();
    let (ida, idb) = (g.id(a), g.id(b));
    let path_like: Vec<bool> = comps.iter().map(|comp| side_is_path(g, a, b, comp)).collect();
    // A side of one component is valid iff that component is not a path
    // side; sides of two or more components are always valid.
    let valid = |members: &[usize]| members.len() >= 2 || (members.len() == 1 && !path_like[members[0]]);

    let mut best: Option<(usize, Vec<usize>)> = None;
    let mut consider = |small: Vec<usize>| {
        let rest: Vec<usize> = (0..c).filter(|i| !small.contains(i)).collect();
        if !valid(&small) || !valid(&rest) {
            return;
        }
        let size: usize = small.iter().map(|&i| comps[i].len()).sum();
        let measure = size.min(total - size);
        if best.as_ref().is_none_or(|(m, _)| measure < *m) {
            best = Some((measure, small));
        }
    };
    for i in 0..c {
        consider(vec![i]);
    }
    for i in 0..c {
        for j in i + 1..c {
            consider(vec![i, j]);
        }
    }
    let (measure, small) = best?;
    let mut x: Vec<usize> = small.iter().flat_map(|&i| comps[i].iter().copied()).collect();
    let mut y: Vec<usize> = (0..c)
        .filter(|i| !small.contains(i))
        .flat_map(|i| comps[i].iter().copied())
        .collect();
    x.sort_unstable();
    y.sort_unstable();
    if x.len() > y.len() {
        std::mem::swap(&mut x, &mut y);
    }
    Some((measure, Proper2Cutset { a: ida, b: idb, x, y }))
}

/// Whether `G[comp + {a, b}]` is a path with ends `a` and `b`.
fn side_is_path(g: &Graph, a: usize, b: usize, comp: &[usize]) -> bool {
    let locals: Vec<usize> = comp.iter().map(|&id| g.local(id).unwrap()).collect();
    let inside = |v: usize| locals.binary_search(&v).is_ok() || v == a || v == b;
    let deg_in = |v: usize| g.neighbors(v).iter().filter(|&&w| inside(w)).count();
    deg_in(a) == 1 && deg_in(b) == 1 && locals.iter().all(|&v| deg_in(v) == 2)
}
