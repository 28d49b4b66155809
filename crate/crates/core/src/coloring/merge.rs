use crate::error::{Error, Result};
use crate::graph::{Graph, RemovalLog};

use super::{DualColorings, VertexColoring, PERMS3};

/// First palette permutation taking `from(v)` to `to(v)` on every `v` in
/// `anchor`.
fn aligning_perm(from: &VertexColoring, to: &VertexColoring, anchor: &[usize]) -> Option<[usize; 3]> {
    PERMS3.iter().copied().find(|perm| {
        anchor.iter().all(|&v| match (from.get(v), to.get(v)) {
            (Some(c), Some(d)) => c < 3 && perm[c] == d,
            _ => false,
        })
    })
}

fn union_into(out: &mut VertexColoring, part: &VertexColoring) -> Result<()> {
    for (&v, &c) in &part.colors {
        if let Some(old) = out.colors.insert(v, c) {
            if old != c {
                return Err(Error::Contract(format!("pieces disagree on the color of vertex {v}")));
            }
        }
    }
    Ok(())
}

/// Combines colorings of pieces that pairwise meet exactly in the clique
/// `cutset`. Each piece after the first is recolored by a palette
/// permutation so that all agree on the clique.
pub fn merge_at_clique(pieces: &[(Graph, VertexColoring)], cutset: &[usize]) -> Result<VertexColoring> {
    if cutset.len() > 3 {
        return Err(Error::Contract(format!("clique cutset of size {} cannot be aligned in 3 colors", cutset.len())));
    }
    for (g, col) in pieces {
        for (i, &u) in cutset.iter().enumerate() {
            if !g.contains(u) {
                return Err(Error::Contract(format!("cutset vertex {u} missing from a piece")));
            }
            if cutset[i + 1..].iter().any(|&w| !g.has_edge(u, w)) {
                return Err(Error::Contract("cutset is not a clique in every piece".into()));
            }
        }
        if !col.is_proper(g) {
            return Err(Error::Contract("piece coloring is not proper".into()));
        }
    }
    let mut out = VertexColoring::new();
    let Some((_, reference)) = pieces.first() else { return Ok(out) };
    for (_, col) in pieces {
        let perm = aligning_perm(col, reference, cutset)
            .ok_or_else(|| Error::Contract("piece uses more than three colors on the cutset".into()))?;
        union_into(&mut out, &col.permuted(&perm))?;
    }
    Ok(out)
}

/// Joins a coloring of `G[Y ∪ {a, b}]` with the dual colorings of
/// `G[X ∪ {a, b}]`: the variant matching whether `a` and `b` share a color
/// on the `Y` side, permuted to agree on `a` and `b`.
pub fn merge_at_proper2(dual: &DualColorings, ty: &VertexColoring, a: usize, b: usize) -> Result<VertexColoring> {
    let (Some(ca), Some(cb)) = (ty.get(a), ty.get(b)) else {
        return Err(Error::Contract("Y-side coloring must cover a and b".into()));
    };
    let chosen = if ca == cb { &dual.same } else { &dual.different };
    let perm = aligning_perm(chosen, ty, &[a, b])
        .ok_or_else(|| Error::Contract("dual colorings do not fit the Y-side coloring".into()))?;
    let mut out = ty.clone();
    union_into(&mut out, &chosen.permuted(&perm))?;
    Ok(out)
}

/// Replays a peel in reverse, giving each restored vertex the least color
/// absent from its neighbors at removal time.
pub fn add_back_peeled(coloring: &VertexColoring, log: &RemovalLog) -> VertexColoring {
    let mut out = coloring.clone();
    for r in log.removals.iter().rev() {
        let taken: Vec<usize> = r.neighbors.iter().filter_map(|&w| out.get(w)).collect();
        let c = (0..).find(|c| !taken.contains(c)).unwrap();
        out.set(r.vertex, c);
    }
    out
}
