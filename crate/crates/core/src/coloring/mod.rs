//! Vertex and edge colorings, and everything that produces or combines
//! them.

mod dual;
mod edge;
mod exact;
mod merge;

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::graph::Graph;

pub use dual::{color_basic, dual_colorings_for_side, DualColorings, DualRoute, DEFAULT_FALLBACK_BUDGET};
pub use edge::{edge_color_sparse, kempe_chain, lemma_dual_edge_colorings, swap_chain};
pub use exact::{chi_exact, color_with_constraints, DEFAULT_ORACLE_BUDGET};
pub use merge::{add_back_peeled, merge_at_clique, merge_at_proper2};

/// Map from vertex id to color, serialized as `{"vertex": color, ..}`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VertexColoring {
    pub colors: BTreeMap<usize, usize>,
}

impl VertexColoring {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn get(&self, v: usize) -> Option<usize> {
        self.colors.get(&v).copied()
    }

    pub fn set(&mut self, v: usize, c: usize) {
        self.colors.insert(v, c);
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    /// Number of distinct colors in use.
    pub fn palette_size(&self) -> usize {
        let mut used: Vec<usize> = self.colors.values().copied().collect();
        used.sort_unstable();
        used.dedup();
        used.len()
    }

    pub fn max_color(&self) -> Option<usize> {
        self.colors.values().copied().max()
    }

    /// Total on `V(g)` and no edge of `g` monochromatic.
    pub fn is_proper(&self, g: &Graph) -> bool {
        g.ids().iter().all(|v| self.colors.contains_key(v))
            && g.edges().iter().all(|(u, v)| self.colors[u] != self.colors[v])
    }

    pub fn restrict(&self, ids: &[usize]) -> VertexColoring {
        VertexColoring {
            colors: ids.iter().filter_map(|&v| self.get(v).map(|c| (v, c))).collect(),
        }
    }

    /// Renames every color `c` to `perm[c]`.
    pub fn permuted(&self, perm: &[usize]) -> VertexColoring {
        VertexColoring {
            colors: self.colors.iter().map(|(&v, &c)| (v, perm[c])).collect(),
        }
    }
}

impl FromIterator<(usize, usize)> for VertexColoring {
    fn from_iter<I: IntoIterator<Item = (usize, usize)>>(iter: I) -> Self {
        VertexColoring { colors: iter.into_iter().collect() }
    }
}

/// Edge colors keyed by `(u, v)` with `u < v` (ids).
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct EdgeColoring {
    pub colors: BTreeMap<(usize, usize), usize>,
}

impl EdgeColoring {
    pub fn get(&self, u: usize, v: usize) -> Option<usize> {
        self.colors.get(&(u.min(v), u.max(v))).copied()
    }

    pub fn set(&mut self, u: usize, v: usize, c: usize) {
        self.colors.insert((u.min(v), u.max(v)), c);
    }

    /// Total on `E(h)` and adjacent edges always differ.
    pub fn is_proper(&self, h: &Graph) -> bool {
        if h.edges().iter().any(|&(u, v)| self.get(u, v).is_none()) {
            return false;
        }
        (0..h.n()).all(|x| {
            let mut seen: Vec<usize> = h
                .neighbors(x)
                .iter()
                .map(|&y| self.get(h.id(x), h.id(y)).unwrap())
                .collect();
            let before = seen.len();
            seen.sort_unstable();
            seen.dedup();
            seen.len() == before
        })
    }
}

impl Serialize for EdgeColoring {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let rows: Vec<[usize; 3]> = self.colors.iter().map(|(&(u, v), &c)| [u, v, c]).collect();
        rows.serialize(s)
    }
}

impl<'de> Deserialize<'de> for EdgeColoring {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let rows: Vec<[usize; 3]> = Vec::deserialize(d)?;
        let mut ec = EdgeColoring::default();
        for [u, v, c] in rows {
            ec.set(u, v, c);
        }
        Ok(ec)
    }
}

/// All six permutations of the palette {0, 1, 2}.
pub(crate) const PERMS3: [[usize; 3]; 6] =
    [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
