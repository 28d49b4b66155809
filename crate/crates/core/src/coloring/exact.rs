use crate::error::{Error, Result};
use crate::graph::Graph;

use super::VertexColoring;

/// Largest graph `chi_exact` accepts by default.
pub const DEFAULT_ORACLE_BUDGET: usize = 20;

const UNSET: usize = usize::MAX;

/// Chromatic number and an optimal coloring, by DSATUR branch and bound
/// starting from the clique lower bound.
pub fn chi_exact(g: &Graph, max_vertices: usize) -> Result<(usize, VertexColoring)> {
    if g.n() > max_vertices {
        return Err(Error::Budget(format!(
            "exact chromatic number limited to {max_vertices} vertices, graph has {}",
            g.n()
        )));
    }
    if g.n() == 0 {
        return Ok((0, VertexColoring::new()));
    }
    let lower = max_clique(g).max(1);
    for k in lower..=g.n() {
        let mut nodes = u64::MAX;
        if let Some(c) = search(g, k, &[], &mut nodes)? {
            return Ok((k, c));
        }
    }
    unreachable!("n colors always suffice")
}

/// A proper coloring with colors `0..k` that honors `fixed` (pairs of id
/// and color), or `None` if none exists. Fails with a budget error after
/// `max_nodes` search nodes.
pub fn color_with_constraints(
    g: &Graph,
    k: usize,
    fixed: &[(usize, usize)],
    max_nodes: u64,
) -> Result<Option<VertexColoring>> {
    let mut local_fixed = Vec::with_capacity(fixed.len());
    for &(id, c) in fixed {
        let v = g
            .local(id)
            .ok_or_else(|| Error::Contract(format!("fixed vertex {id} not in graph")))?;
        local_fixed.push((v, c));
    }
    let mut nodes = max_nodes;
    search(g, k, &local_fixed, &mut nodes)
}

fn search(g: &Graph, k: usize, fixed: &[(usize, usize)], nodes: &mut u64) -> Result<Option<VertexColoring>> {
    let mut color = vec![UNSET; g.n()];
    for &(v, c) in fixed {
        if c >= k || (color[v] != UNSET && color[v] != c) {
            return Ok(None);
        }
        color[v] = c;
    }
    for &(v, c) in fixed {
        if g.neighbors(v).iter().any(|&w| color[w] == c) {
            return Ok(None);
        }
    }
    // Palette symmetry can only be broken when nothing is pinned.
    let symmetric = fixed.is_empty();
    if dsatur(g, k, &mut color, symmetric, 0, nodes)? {
        Ok(Some((0..g.n()).map(|v| (g.id(v), color[v])).collect()))
    } else {
        Ok(None)
    }
}

fn dsatur(
    g: &Graph,
    k: usize,
    color: &mut [usize],
    symmetric: bool,
    used: usize,
    nodes: &mut u64,
) -> Result<bool> {
    if *nodes == 0 {
        return Err(Error::Budget("coloring search node budget exhausted".into()));
    }
    *nodes -= 1;
    // Most saturated uncolored vertex; ties by degree, then lowest index.
    let mut pick: Option<(usize, usize, usize)> = None;
    for v in 0..g.n() {
        if color[v] != UNSET {
            continue;
        }
        let mut seen = 0u64;
        for &w in g.neighbors(v) {
            if color[w] != UNSET {
                seen |= 1 << color[w].min(63);
            }
        }
        let key = (seen.count_ones() as usize, g.degree(v));
        if pick.is_none_or(|(s, d, _)| key > (s, d)) {
            pick = Some((key.0, key.1, v));
        }
    }
    let Some((sat, _, v)) = pick else { return Ok(true) };
    if sat >= k {
        return Ok(false);
    }
    let limit = if symmetric { (used + 1).min(k) } else { k };
    for c in 0..limit {
        if g.neighbors(v).iter().any(|&w| color[w] == c) {
            continue;
        }
        color[v] = c;
        if dsatur(g, k, color, symmetric, used.max(c + 1), nodes)? {
            return Ok(true);
        }
        color[v] = UNSET;
    }
    Ok(false)
}

fn max_clique(g: &Graph) -> usize {
    fn grow(g: &Graph, size: usize, cands: &[usize], best: &mut usize) {
        *best = (*best).max(size);
        if size + cands.len() <= *best {
            return;
        }
        for (i, &v) in cands.iter().enumerate() {
            let next: Vec<usize> = cands[i + 1..].iter().copied().filter(|&w| g.adjacent(v, w)).collect();
            grow(g, size + 1, &next, best);
        }
    }
    let mut best = 0;
    let all: Vec<usize> = (0..g.n()).collect();
    grow(g, 0, &all, &mut best);
    best
}
