//! Seeded generators for members of the class and for planted non-members.

use std::collections::{BTreeSet, HashMap};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::named;
use crate::patterns::{find_bowtie, find_diamond, verify_membership, Verdict};

/// Vertex bound for the exact membership check run on generated graphs.
pub const GENERATOR_ORACLE_BUDGET: usize = 24;

const GLUE_RETRIES: usize = 64;

fn rng_for(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Random series-parallel graph on `n` vertices with no diamond and no
/// bowtie, built one vertex at a time by operations that keep both
/// properties: a pendant vertex, subdividing an edge in no triangle, a
/// triangle ear on an edge whose ends lie in no triangle, or a second
/// 2-path parallel to a 2-path through a degree-2 vertex.
pub fn gen_series_parallel(seed: u64, n: usize) -> Graph {
    const TRIES: usize = 8;
    let mut rng = rng_for(seed);
    let n = n.max(1);
    let mut adj: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); n];
    // Edge list with positions, for uniform sampling and O(1) removal.
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut pos: HashMap<(usize, usize), usize> = HashMap::new();
    let in_triangle = |adj: &[BTreeSet<usize>], v: usize| {
        adj[v].iter().any(|&w| adj[v].intersection(&adj[w]).next().is_some())
    };
    let common = |adj: &[BTreeSet<usize>], u: usize, v: usize| adj[u].intersection(&adj[v]).next().is_some();
    for w in 1..n {
        let sample_edge = |rng: &mut ChaCha8Rng, edges: &[(usize, usize)], ok: &dyn Fn(usize, usize) -> bool| {
            (0..TRIES).find_map(|_| edges.choose(rng).copied().filter(|&(u, v)| ok(u, v)))
        };
        let (u, v) = match rng.gen_range(0..8) {
            0..=2 => {
                // Subdivide an edge whose ends have no common neighbor.
                match sample_edge(&mut rng, &edges, &|u, v| !common(&adj, u, v)) {
                    Some((u, v)) => {
                        let i = pos.remove(&(u, v)).expect("edge is indexed");
                        edges.swap_remove(i);
                        if let Some(&moved) = edges.get(i) {
                            pos.insert(moved, i);
                        }
                        adj[u].remove(&v);
                        adj[v].remove(&u);
                        (u, Some(v))
                    }
                    None => (rng.gen_range(0..w), None),
                }
            }
            3..=4 => match sample_edge(&mut rng, &edges, &|u, v| !in_triangle(&adj, u) && !in_triangle(&adj, v)) {
                Some((u, v)) => (u, Some(v)),
                None => (rng.gen_range(0..w), None),
            },
            5..=6 => {
                // u - x - v with deg(x) = 2 and u, v nonadjacent.
                let pick = (0..TRIES).find_map(|_| {
                    let x = rng.gen_range(0..w);
                    let mut it = adj[x].iter();
                    match (it.next(), it.next(), it.next()) {
                        (Some(&u), Some(&v), None) if !adj[u].contains(&v) => Some((u, v)),
                        _ => None,
                    }
                });
                match pick {
                    Some((u, v)) => (u, Some(v)),
                    None => (rng.gen_range(0..w), None),
                }
            }
            _ => (rng.gen_range(0..w), None),
        };
        for x in std::iter::once(u).chain(v) {
            adj[w].insert(x);
            adj[x].insert(w);
            pos.insert((x, w), edges.len());
            edges.push((x, w));
        }
    }
    let g = Graph::from_edges(n, &edges).expect("generated edges are simple");
    shuffle_ids(&g, &mut rng)
}

/// Cubic graphs used as bases for line-graph members.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CubicBase {
    K4,
    K33,
    Prism,
    Cube,
    Petersen,
}

impl CubicBase {
    pub const ALL: [CubicBase; 5] = [CubicBase::K4, CubicBase::K33, CubicBase::Prism, CubicBase::Cube, CubicBase::Petersen];

    pub fn graph(self) -> Graph {
        match self {
            CubicBase::K4 => named::complete(4),
            CubicBase::K33 => named::complete_bipartite(3, 3),
            CubicBase::Prism => named::prism(),
            CubicBase::Cube => named::cube(),
            CubicBase::Petersen => named::petersen(),
        }
    }
}

/// Line graph of `base` with every edge subdivided once, except the edge
/// at index `twice` (sorted order) which is subdivided twice. Vertex ids are
/// shuffled by the seed. Results small enough for the exact oracle are
/// checked; a rejection is a generation error.
pub fn gen_line_of_subdivided_cubic(seed: u64, base: &Graph, twice: Option<usize>) -> Result<Graph> {
    if base.n() == 0 || (0..base.n()).any(|v| base.degree(v) != 3) {
        return Err(Error::Contract("base graph must be cubic".into()));
    }
    if twice.is_some_and(|i| i >= base.m()) {
        return Err(Error::Contract("twice-subdivided edge index out of range".into()));
    }
    let h = named::subdivide(base, |i| if Some(i) == twice { 2 } else { 1 });
    let (lg, _) = named::line_graph(&h);
    let g = shuffle_ids(&lg, &mut rng_for(seed));
    check_member(&g)?;
    Ok(g)
}

fn check_member(g: &Graph) -> Result<()> {
    let report = verify_membership(g, GENERATOR_ORACLE_BUDGET);
    if report.verdict == Verdict::Nonmember {
        log::error!("generated graph rejected by the membership oracle: {:?}", report.witness);
        return Err(Error::Generation(format!(
            "membership oracle found {:?}",
            report.witness.map(|w| w.kind)
        )));
    }
    Ok(())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum GlueMode {
    /// Identify one vertex of each part.
    Vertex,
    /// Identify one edge of each part.
    Edge,
    /// Join two distinct vertices of one part to two distinct vertices of
    /// the other by two new edges.
    Bridge,
}

/// Glues the parts one after another onto an accumulated graph, retrying
/// random attachment points until the result passes the membership oracle
/// (a bounded-mode "unknown" on large results is accepted).
pub fn gen_glue(seed: u64, parts: &[Graph], mode: GlueMode) -> Result<Graph> {
    let mut rng = rng_for(seed);
    let Some(first) = parts.first() else { return Ok(Graph::empty()) };
    let mut acc = compact(first);
    for part in &parts[1..] {
        let part = compact(part);
        let mut glued = None;
        for _ in 0..GLUE_RETRIES {
            let Some(candidate) = glue_once(&acc, &part, mode, &mut rng) else { break };
            if find_diamond(&candidate).is_some() || find_bowtie(&candidate).is_some() {
                continue;
            }
            if verify_membership(&candidate, GENERATOR_ORACLE_BUDGET).verdict == Verdict::Nonmember {
                continue;
            }
            glued = Some(candidate);
            break;
        }
        acc = glued.ok_or_else(|| Error::Generation(format!("no valid {mode:?} glue within {GLUE_RETRIES} tries")))?;
    }
    Ok(shuffle_ids(&acc, &mut rng))
}

/// Relabels to ids `0..n` in the existing order.
fn compact(g: &Graph) -> Graph {
    Graph::from_edges(g.n(), &g.local_edges()).expect("relabel keeps the graph simple")
}

/// One random glue of `b` onto `a`; ids of `b` are shifted past `a`, and
/// identified vertices take the id from `a`.
fn glue_once(a: &Graph, b: &Graph, mode: GlueMode, rng: &mut ChaCha8Rng) -> Option<Graph> {
    let shift = a.n();
    let mut map: Vec<usize> = (0..b.n()).map(|v| v + shift).collect();
    let mut extra = Vec::new();
    match mode {
        GlueMode::Vertex => {
            if a.n() == 0 || b.n() == 0 {
                return None;
            }
            map[rng.gen_range(0..b.n())] = rng.gen_range(0..a.n());
        }
        GlueMode::Edge => {
            let (ea, eb) = (a.local_edges(), b.local_edges());
            let (&(x, y), &(p, q)) = (ea.choose(rng)?, eb.choose(rng)?);
            let (p, q) = if rng.gen_bool(0.5) { (p, q) } else { (q, p) };
            map[p] = x;
            map[q] = y;
        }
        GlueMode::Bridge => {
            if a.n() < 2 || b.n() < 2 {
                return None;
            }
            let pa: Vec<usize> = (0..a.n()).collect::<Vec<_>>().choose_multiple(rng, 2).copied().collect();
            let pb: Vec<usize> = (0..b.n()).collect::<Vec<_>>().choose_multiple(rng, 2).copied().collect();
            extra.push((pa[0], pb[0] + shift));
            extra.push((pa[1], pb[1] + shift));
        }
    }
    let mut edges = a.local_edges();
    edges.extend(b.local_edges().into_iter().map(|(u, v)| (map[u], map[v])));
    edges.extend(extra);
    let mut ids: Vec<usize> = (0..a.n()).collect();
    ids.extend(map.iter().copied().filter(|&v| v >= shift));
    let g = Graph::with_ids(ids, &edges).ok()?;
    Some(compact(&g))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum NonmemberKind {
    Diamond,
    Bowtie,
    Isk4,
}

/// Planted forbidden pattern plus `padding` pendant-tree vertices. Pendant
/// additions never touch the planted vertex set, so the pattern stays
/// induced.
pub fn gen_nonmember(seed: u64, kind: NonmemberKind, padding: usize) -> Graph {
    let mut rng = rng_for(seed);
    let core = match kind {
        NonmemberKind::Diamond => named::diamond(),
        NonmemberKind::Bowtie => named::bowtie(),
        NonmemberKind::Isk4 => {
            let lengths: Vec<usize> = (0..6).map(|_| rng.gen_range(0..3)).collect();
            compact(&named::subdivide(&named::complete(4), |i| lengths[i]))
        }
    };
    let mut edges = core.local_edges();
    let mut n = core.n();
    for _ in 0..padding {
        edges.push((rng.gen_range(0..n), n));
        n += 1;
    }
    let g = Graph::from_edges(n, &edges).expect("pendant padding is simple");
    shuffle_ids(&g, &mut rng)
}

/// Kinds accepted by [`generate`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum GeneratorKind {
    SeriesParallel,
    LineOfSubdividedCubic,
    Glue,
    Diamond,
    Bowtie,
    Isk4,
}

/// One-call front end: `size` is the vertex count for series-parallel
/// graphs, an upper bound on the order for line graphs and glued graphs,
/// and the padding for non-members.
pub fn generate(kind: GeneratorKind, seed: u64, size: usize) -> Result<Graph> {
    let mut rng = rng_for(seed);
    match kind {
        GeneratorKind::SeriesParallel => Ok(gen_series_parallel(seed, size.max(1))),
        GeneratorKind::LineOfSubdividedCubic => {
            let (base, twice) = pick_line_base(&mut rng, size)
                .ok_or_else(|| Error::Generation(format!("no line graph of a subdivided cubic graph has at most {size} vertices")))?;
            gen_line_of_subdivided_cubic(seed, &base, twice)
        }
        GeneratorKind::Glue => {
            let mode = [GlueMode::Vertex, GlueMode::Edge, GlueMode::Bridge][rng.gen_range(0..3)];
            let mut parts = Vec::new();
            let mut left = size;
            while left >= 3 && parts.len() < 3 {
                let part = if left >= 12 && rng.gen_bool(0.5) {
                    let (base, twice) = pick_line_base(&mut rng, left.min(18)).expect("K4 base fits");
                    gen_line_of_subdivided_cubic(rng.gen(), &base, twice)?
                } else {
                    gen_series_parallel(rng.gen(), rng.gen_range(3..=left.min(8)))
                };
                left = left.saturating_sub(part.n());
                parts.push(part);
            }
            if parts.is_empty() {
                return Ok(gen_series_parallel(seed, size.max(1)));
            }
            gen_glue(seed, &parts, mode)
        }
        GeneratorKind::Diamond => Ok(gen_nonmember(seed, NonmemberKind::Diamond, size)),
        GeneratorKind::Bowtie => Ok(gen_nonmember(seed, NonmemberKind::Bowtie, size)),
        GeneratorKind::Isk4 => Ok(gen_nonmember(seed, NonmemberKind::Isk4, size)),
    }
}

/// Random base and optional twice-subdivided edge whose line graph has at
/// most `size` vertices (the line graph has 3n or 3n + 1 vertices for a
/// base on n vertices).
fn pick_line_base(rng: &mut ChaCha8Rng, size: usize) -> Option<(Graph, Option<usize>)> {
    let fits: Vec<Graph> = CubicBase::ALL
        .iter()
        .map(|b| b.graph())
        .filter(|g| 2 * g.m() <= size)
        .collect();
    let base = fits.choose(rng)?.clone();
    let twice = (2 * base.m() < size && rng.gen_bool(0.5)).then(|| rng.gen_range(0..base.m()));
    Some((base, twice))
}

fn shuffle_ids(g: &Graph, rng: &mut ChaCha8Rng) -> Graph {
    let mut perm: Vec<usize> = (0..g.n()).collect();
    perm.shuffle(rng);
    let edges: Vec<(usize, usize)> = g.local_edges().into_iter().map(|(u, v)| (perm[u], perm[v])).collect();
    Graph::from_edges(g.n(), &edges).expect("permutation keeps the graph simple")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::patterns::is_diamond_bowtie_free;
    use crate::recognition::is_series_parallel;

    #[test]
    fn series_parallel_members() {
        assert_eq!(gen_series_parallel(3, 1).n(), 1);
        for seed in 0..40 {
            let g = gen_series_parallel(seed, 12);
            assert_eq!(g.n(), 12);
            assert!(g.is_connected());
            assert!(is_series_parallel(&g));
            assert!(is_diamond_bowtie_free(&g), "seed {seed}: {:?}", g.edges());
        }
        assert_eq!(gen_series_parallel(9, 200), gen_series_parallel(9, 200));
    }

    #[test]
    fn line_graphs_of_subdivided_cubics() {
        let g = gen_line_of_subdivided_cubic(1, &named::complete(4), None).unwrap();
        assert_eq!((g.n(), g.m()), (12, 18));
        let g = gen_line_of_subdivided_cubic(1, &named::complete(4), Some(0)).unwrap();
        assert_eq!(g.n(), 13);
        assert!(gen_line_of_subdivided_cubic(1, &named::complete_bipartite(3, 3), None).is_ok());
        assert!(gen_line_of_subdivided_cubic(1, &named::cycle(4), None).is_err());
    }

    #[test]
    fn prisms_cannot_share_a_vertex() {
        let p = named::prism();
        assert!(gen_glue(0, &[p.clone(), p], GlueMode::Vertex).is_err());
    }

    #[test]
    fn accepted_glues() {
        let g = gen_glue(0, &[named::prism(), named::cycle(5)], GlueMode::Vertex).unwrap();
        assert_eq!(g.n(), 10);
        let g = gen_glue(0, &[named::cycle(5), named::cycle(5)], GlueMode::Edge).unwrap();
        assert_eq!((g.n(), g.m()), (8, 9));
    }

    #[test]
    fn planted_nonmembers() {
        for (kind, padding) in [(NonmemberKind::Diamond, 5), (NonmemberKind::Bowtie, 3), (NonmemberKind::Isk4, 6)] {
            let g = gen_nonmember(4, kind, padding);
            let r = verify_membership(&g, GENERATOR_ORACLE_BUDGET);
            assert_eq!(r.verdict, Verdict::Nonmember, "{kind:?}");
        }
    }
}
