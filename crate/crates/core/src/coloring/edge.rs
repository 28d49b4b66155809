//! 3-edge-colorings of sparse graphs with maximum degree three, and the
//! Kempe-chain arguments built on them.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::recognition::is_sparse;

use super::EdgeColoring;

const UNSET: usize = usize::MAX;

/// Edge colors of a graph addressed by local edge index.
struct EdgeState<'a> {
    h: &'a Graph,
    edges: Vec<(usize, usize)>,
    incident: Vec<Vec<usize>>,
    color: Vec<usize>,
}

impl<'a> EdgeState<'a> {
    fn new(h: &'a Graph) -> Self {
        let edges = h.local_edges();
        let mut incident = vec![Vec::new(); h.n()];
        for (i, &(u, v)) in edges.iter().enumerate() {
            incident[u].push(i);
            incident[v].push(i);
        }
        EdgeState { h, color: vec![UNSET; edges.len()], edges, incident }
    }

    fn from_coloring(h: &'a Graph, col: &EdgeColoring) -> Result<Self> {
        let mut st = EdgeState::new(h);
        for i in 0..st.edges.len() {
            let (u, v) = st.edges[i];
            st.color[i] = col
                .get(h.id(u), h.id(v))
                .ok_or_else(|| Error::Contract(format!("edge ({}, {}) has no color", h.id(u), h.id(v))))?;
        }
        Ok(st)
    }

    fn edge_index(&self, u_id: usize, v_id: usize) -> Option<usize> {
        let (u, v) = (self.h.local(u_id)?, self.h.local(v_id)?);
        let key = (u.min(v), u.max(v));
        self.edges.binary_search(&key).ok()
    }

    fn to_coloring(&self) -> EdgeColoring {
        let mut out = EdgeColoring::default();
        for (i, &(u, v)) in self.edges.iter().enumerate() {
            out.set(self.h.id(u), self.h.id(v), self.color[i]);
        }
        out
    }

    fn missing(&self, x: usize) -> [bool; 3] {
        let mut free = [true; 3];
        for &e in &self.incident[x] {
            if self.color[e] < 3 {
                free[self.color[e]] = false;
            }
        }
        free
    }

    fn other(&self, e: usize, x: usize) -> usize {
        let (u, v) = self.edges[e];
        if u == x {
            v
        } else {
            u
        }
    }

    /// Edges of the component of the `{c1, c2}`-colored subgraph containing
    /// local vertex `start`.
    fn chain(&self, start: usize, c1: usize, c2: usize) -> Vec<usize> {
        let mut seen_v = vec![false; self.h.n()];
        let mut seen_e = vec![false; self.edges.len()];
        let mut out = Vec::new();
        let mut queue = VecDeque::from([start]);
        seen_v[start] = true;
        while let Some(x) = queue.pop_front() {
            for &e in &self.incident[x] {
                let c = self.color[e];
                if seen_e[e] || (c != c1 && c != c2) {
                    continue;
                }
                seen_e[e] = true;
                out.push(e);
                let y = self.other(e, x);
                if !seen_v[y] {
                    seen_v[y] = true;
                    queue.push_back(y);
                }
            }
        }
        out.sort_unstable();
        out
    }

    fn swap(&mut self, chain: &[usize], c1: usize, c2: usize) {
        for &e in chain {
            self.color[e] = if self.color[e] == c1 { c2 } else { c1 };
        }
    }

    /// Colors the uncolored edge `e` after Kempe swaps when both endpoints
    /// already see all three colors between them.
    fn repair(&mut self, e: usize) -> bool {
        let (u, v) = self.edges[e];
        let common = |st: &Self| {
            let (mu, mv) = (st.missing(u), st.missing(v));
            (0..3).find(|&c| mu[c] && mv[c])
        };
        if let Some(c) = common(self) {
            self.color[e] = c;
            return true;
        }
        for (s, t) in [(v, u), (u, v)] {
            let (ms, mt) = (self.missing(s), self.missing(t));
            for alpha in (0..3).filter(|&c| mt[c]) {
                for beta in (0..3).filter(|&c| ms[c] && c != alpha) {
                    let chain = self.chain(s, alpha, beta);
                    self.swap(&chain, alpha, beta);
                    if let Some(c) = common(self) {
                        self.color[e] = c;
                        return true;
                    }
                    self.swap(&chain, alpha, beta);
                }
            }
        }
        false
    }

    fn is_proper(&self) -> bool {
        self.incident.iter().all(|list| {
            let mut seen = [false; 3];
            list.iter().all(|&e| {
                let c = self.color[e];
                c < 3 && !std::mem::replace(&mut seen[c], true)
            })
        })
    }
}

/// Proper 3-edge-coloring of a sparse graph with maximum degree at most
/// three.
///
/// Each component is colored greedily in reverse breadth-first order of its
/// line graph, so every edge but the first has an uncolored neighbor when
/// it is colored and sees at most two colors. The first edge is chosen with
/// line-graph degree below three when one exists; otherwise every edge
/// joins a degree-3 vertex to a degree-2 vertex, alternating paths between
/// such vertices have forced parity, and a single Kempe swap frees a color.
pub fn edge_color_sparse(h: &Graph) -> Result<EdgeColoring> {
    if h.max_degree() > 3 || !is_sparse(h) {
        return Err(Error::Contract(
            "edge coloring needs a sparse graph with maximum degree at most 3".into(),
        ));
    }
    let mut st = EdgeState::new(h);
    color_all(&mut st)?;
    Ok(st.to_coloring())
}

fn color_all(st: &mut EdgeState<'_>) -> Result<()> {
    let m = st.edges.len();
    let line_degree = |st: &EdgeState<'_>, e: usize| {
        let (u, v) = st.edges[e];
        st.incident[u].len() + st.incident[v].len() - 2
    };
    let mut visited = vec![false; m];
    for start in 0..m {
        if visited[start] {
            continue;
        }
        // Component of the line graph containing `start`.
        let mut comp = Vec::new();
        let mut queue = VecDeque::from([start]);
        visited[start] = true;
        while let Some(e) = queue.pop_front() {
            comp.push(e);
            let (u, v) = st.edges[e];
            for &f in st.incident[u].iter().chain(&st.incident[v]) {
                if !visited[f] {
                    visited[f] = true;
                    queue.push_back(f);
                }
            }
        }
        let root = comp
            .iter()
            .copied()
            .find(|&e| line_degree(st, e) < 3)
            .unwrap_or(comp[0]);

        let mut order = Vec::with_capacity(comp.len());
        let mut seen = vec![false; m];
        let mut queue = VecDeque::from([root]);
        seen[root] = true;
        while let Some(e) = queue.pop_front() {
            order.push(e);
            let (u, v) = st.edges[e];
            for &f in st.incident[u].iter().chain(&st.incident[v]) {
                if !seen[f] {
                    seen[f] = true;
                    queue.push_back(f);
                }
            }
        }
        for &e in order.iter().rev() {
            if e == root {
                continue;
            }
            let (u, v) = st.edges[e];
            let (mu, mv) = (st.missing(u), st.missing(v));
            let c = (0..3)
                .find(|&c| mu[c] && mv[c])
                .ok_or_else(|| Error::Contract("greedy edge coloring ran out of colors".into()))?;
            st.color[e] = c;
        }
        if !st.repair(root) {
            return Err(Error::Contract("Kempe repair failed to free a color".into()));
        }
    }
    debug_assert!(st.is_proper());
    Ok(())
}

/// Edges (as sorted id pairs) of the component of the subgraph formed by
/// the edges colored `c1` or `c2` that contains vertex `start`.
pub fn kempe_chain(
    h: &Graph,
    coloring: &EdgeColoring,
    start: usize,
    c1: usize,
    c2: usize,
) -> Result<Vec<(usize, usize)>> {
    let st = EdgeState::from_coloring(h, coloring)?;
    let s = h
        .local(start)
        .ok_or_else(|| Error::Contract(format!("vertex {start} not in graph")))?;
    Ok(st
        .chain(s, c1, c2)
        .into_iter()
        .map(|e| (h.id(st.edges[e].0), h.id(st.edges[e].1)))
        .collect())
}

/// Exchanges colors `c1` and `c2` on the given edges.
pub fn swap_chain(coloring: &mut EdgeColoring, chain: &[(usize, usize)], c1: usize, c2: usize) {
    for &(u, v) in chain {
        if let Some(c) = coloring.get(u, v) {
            coloring.set(u, v, if c == c1 { c2 } else if c == c2 { c1 } else { c });
        }
    }
}

/// For a graph obtained from a cubic graph by subdividing one edge twice
/// and every other edge once, with `e1`, `e2` the two outer edges of the
/// twice-subdivided path, returns proper 3-edge-colorings `c1` with
/// `c1(e1) = c1(e2)` and `c2` with `c2(e1) != c2(e2)`.
///
/// Both come from one coloring by Kempe swaps. An alternating path between
/// the degree-3 ends of `e1` and `e2` passes through vertices of degree
/// 3, 2, 3, 2, ... and so has even length; this decides which swaps can
/// reach `e2` from `e1`.
pub fn lemma_dual_edge_colorings(
    h: &Graph,
    e1: (usize, usize),
    e2: (usize, usize),
) -> Result<(EdgeColoring, EdgeColoring)> {
    let (y, z) = twice_subdivided_middle(h)?;
    let mut st = EdgeState::new(h);
    let (Some(i1), Some(i2)) = (st.edge_index(e1.0, e1.1), st.edge_index(e2.0, e2.1)) else {
        return Err(Error::Contract("e1 and e2 must be edges of h".into()));
    };
    let middle = st.edge_index(h.id(y), h.id(z)).expect("middle edge exists");
    let at_y: Vec<usize> = st.incident[y].iter().copied().filter(|&e| e != middle).collect();
    let at_z: Vec<usize> = st.incident[z].iter().copied().filter(|&e| e != middle).collect();
    let matches = (at_y == [i1] && at_z == [i2]) || (at_y == [i2] && at_z == [i1]);
    if !matches {
        return Err(Error::Contract(
            "e1 and e2 must be the outer edges of the twice-subdivided edge".into(),
        ));
    }
    // Orient so that e1 = xy, e = yz, e2 = zw.
    let (i1, i2) = if at_y == [i1] { (i1, i2) } else { (i2, i1) };

    color_all(&mut st)?;
    let phi = st.color.clone();
    let (alpha, beta) = (phi[i1], phi[middle]);
    let third = |a: usize, b: usize| 3 - a - b;
    let broken = || Error::Contract("Kempe argument failed; input is not 3-edge-colorable as assumed".into());

    let (same, different) = if phi[i1] == phi[i2] {
        // Swap the (alpha, gamma) chain through e1; it cannot contain e2.
        let gamma = third(alpha, beta);
        let chain = st.chain(y, alpha, gamma);
        if chain.contains(&i2) {
            return Err(broken());
        }
        st.swap(&chain, alpha, gamma);
        let different = st.color.clone();
        (phi, different)
    } else {
        let gamma = phi[i2];
        let chain = st.chain(y, alpha, gamma);
        if !chain.contains(&i2) {
            st.swap(&chain, alpha, gamma);
        } else {
            // Swap (alpha, beta) through e1, which also recolors the middle
            // edge and leaves the alternating e1..e2 path intact; then the
            // (beta, gamma) chain through e2 avoids e1.
            let x = st.other(i1, y);
            let chain = st.chain(x, alpha, beta);
            st.swap(&chain, alpha, beta);
            let w = st.other(i2, z);
            let chain = st.chain(w, beta, gamma);
            if chain.contains(&i1) {
                return Err(broken());
            }
            st.swap(&chain, beta, gamma);
        }
        (st.color.clone(), phi)
    };

    let mut out = Vec::with_capacity(2);
    for colors in [same, different] {
        st.color = colors;
        if !st.is_proper() {
            return Err(broken());
        }
        out.push(st.to_coloring());
    }
    let different = out.pop().unwrap();
    let same = out.pop().unwrap();
    let c = |col: &EdgeColoring, e: (usize, usize)| col.get(e.0, e.1).unwrap();
    if c(&same, e1) != c(&same, e2) || c(&different, e1) == c(&different, e2) {
        return Err(broken());
    }
    Ok((same, different))
}

/// Checks the degree profile of a cubic graph with one edge subdivided
/// twice and the rest once, returning the two adjacent degree-2 vertices.
fn twice_subdivided_middle(h: &Graph) -> Result<(usize, usize)> {
    let bad = |why: &str| Error::Contract(format!("not a cubic graph subdivided once with one edge twice: {why}"));
    if (0..h.n()).any(|v| !matches!(h.degree(v), 2 | 3)) {
        return Err(bad("degrees must be 2 or 3"));
    }
    let mut pair = None;
    for (u, v) in h.local_edges() {
        match (h.degree(u), h.degree(v)) {
            (3, 3) => return Err(bad("two degree-3 vertices are adjacent")),
            (2, 2)
                if pair.replace((u, v)).is_some() => {
                    return Err(bad("more than one pair of adjacent degree-2 vertices"));
                }
            _ => {}
        }
    }
    pair.ok_or_else(|| bad("no pair of adjacent degree-2 vertices"))
}
