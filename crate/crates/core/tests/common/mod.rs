//! Brute-force oracles shared by the integration tests. None of them call
//! into the library's own recognizers or colorers.

#![allow(dead_code)]

use std::collections::{BTreeMap, VecDeque};

use isk4_core::coloring::{EdgeColoring, VertexColoring};
use isk4_core::Graph;

/// Plain adjacency matrix copy of a graph, indexed locally.
pub struct Dense {
    pub n: usize,
    pub ids: Vec<usize>,
    pub adj: Vec<Vec<bool>>,
}

impl Dense {
    pub fn of(g: &Graph) -> Dense {
        let ids = g.ids().to_vec();
        let n = ids.len();
        let mut adj = vec![vec![false; n]; n];
        for (u, v) in g.edges() {
            let (a, b) = (ids.binary_search(&u).unwrap(), ids.binary_search(&v).unwrap());
            adj[a][b] = true;
            adj[b][a] = true;
        }
        Dense { n, ids, adj }
    }

    fn nbrs(&self, v: usize, mask: u64) -> impl Iterator<Item = usize> + '_ {
        (0..self.n).filter(move |&w| mask >> w & 1 == 1 && self.adj[v][w])
    }
}

/// Every edge has differently colored ends and every vertex is colored
/// with one of `k` colors.
pub fn proper_with(g: &Graph, c: &VertexColoring, k: usize) -> bool {
    g.ids().iter().all(|v| c.colors.get(v).is_some_and(|&x| x < k))
        && g.edges().iter().all(|(u, v)| c.colors[u] != c.colors[v])
}

pub fn proper_edge_coloring(h: &Graph, c: &EdgeColoring) -> bool {
    let mut seen: BTreeMap<(usize, usize), ()> = BTreeMap::new();
    for (u, v) in h.edges() {
        let Some(col) = c.get(u, v) else { return false };
        if col >= 3 || seen.insert((u, col), ()).is_some() || seen.insert((v, col), ()).is_some() {
            return false;
        }
    }
    true
}

pub fn is_bipartite(g: &Graph) -> bool {
    let d = Dense::of(g);
    let mut side = vec![usize::MAX; d.n];
    for s in 0..d.n {
        if side[s] != usize::MAX {
            continue;
        }
        side[s] = 0;
        let mut q = VecDeque::from([s]);
        while let Some(v) = q.pop_front() {
            for w in 0..d.n {
                if !d.adj[v][w] {
                    continue;
                }
                if side[w] == usize::MAX {
                    side[w] = 1 - side[v];
                    q.push_back(w);
                } else if side[w] == side[v] {
                    return false;
                }
            }
        }
    }
    true
}

/// Smallest number of colors, by trying every assignment in `0..k` for
/// growing `k` (tiny graphs only).
pub fn chromatic_brute(g: &Graph) -> usize {
    let d = Dense::of(g);
    if d.n == 0 {
        return 0;
    }
    (1..=d.n)
        .find(|&k| {
            let total = (k as u64).pow(d.n as u32);
            (0..total).any(|mut code| {
                let mut col = vec![0; d.n];
                for c in col.iter_mut() {
                    *c = (code % k as u64) as usize;
                    code /= k as u64;
                }
                (0..d.n).all(|u| (u + 1..d.n).all(|v| !d.adj[u][v] || col[u] != col[v]))
            })
        })
        .unwrap()
}

/// Some subset of vertices induces a subdivision of K4: four vertices of
/// degree 3, the rest of degree 2, connected, and the six corner-to-corner
/// threads join six distinct corner pairs.
pub fn has_isk4_brute(g: &Graph) -> bool {
    let d = Dense::of(g);
    assert!(d.n <= 20);
    (0u64..1 << d.n).any(|mask| mask.count_ones() >= 4 && induces_k4_subdivision(&d, mask))
}

fn induces_k4_subdivision(d: &Dense, mask: u64) -> bool {
    let verts: Vec<usize> = (0..d.n).filter(|&v| mask >> v & 1 == 1).collect();
    let deg = |v: usize| d.nbrs(v, mask).count();
    let corners: Vec<usize> = verts.iter().copied().filter(|&v| deg(v) == 3).collect();
    if corners.len() != 4 || verts.iter().any(|&v| deg(v) != 3 && deg(v) != 2) {
        return false;
    }
    let mut pairs = Vec::new();
    for &c in &corners {
        for start in d.nbrs(c, mask) {
            let (mut prev, mut cur) = (c, start);
            while deg(cur) == 2 {
                let next = d.nbrs(cur, mask).find(|&w| w != prev).unwrap();
                prev = cur;
                cur = next;
            }
            if cur == c {
                return false;
            }
            pairs.push((c.min(cur), c.max(cur)));
        }
    }
    pairs.sort_unstable();
    pairs.dedup();
    // Each thread was seen from both ends; six distinct pairs means K4.
    if pairs.len() != 6 {
        return false;
    }
    // Connectivity.
    let mut seen = 1u64 << verts[0];
    let mut stack = vec![verts[0]];
    while let Some(v) = stack.pop() {
        for w in d.nbrs(v, mask) {
            if seen >> w & 1 == 0 {
                seen |= 1 << w;
                stack.push(w);
            }
        }
    }
    seen == mask
}

/// Some four vertices induce K4 minus an edge.
pub fn has_diamond_brute(g: &Graph) -> bool {
    let d = Dense::of(g);
    subsets(d.n, 4).any(|s| {
        let e = edge_count(&d, &s);
        e == 5
    })
}

/// Some five vertices induce two triangles sharing one vertex.
pub fn has_bowtie_brute(g: &Graph) -> bool {
    let d = Dense::of(g);
    subsets(d.n, 5).any(|s| {
        if edge_count(&d, &s) != 6 {
            return false;
        }
        let degs: Vec<usize> = s.iter().map(|&v| s.iter().filter(|&&w| d.adj[v][w]).count()).collect();
        let mut sorted = degs.clone();
        sorted.sort_unstable();
        sorted == [2, 2, 2, 2, 4]
    })
}

fn edge_count(d: &Dense, s: &[usize]) -> usize {
    let mut e = 0;
    for (i, &u) in s.iter().enumerate() {
        for &v in &s[i + 1..] {
            e += d.adj[u][v] as usize;
        }
    }
    e
}

pub fn subsets(n: usize, k: usize) -> impl Iterator<Item = Vec<usize>> {
    (0u64..1 << n).filter(move |m| m.count_ones() as usize == k).map(move |m| (0..n).filter(|&v| m >> v & 1 == 1).collect())
}

/// Member by brute force: no diamond, no bowtie, no ISK4.
pub fn is_member_brute(g: &Graph) -> bool {
    !has_diamond_brute(g) && !has_bowtie_brute(g) && !has_isk4_brute(g)
}

/// Treewidth by dynamic programming over vertex subsets (n <= 16).
pub fn treewidth(g: &Graph) -> usize {
    let d = Dense::of(g);
    let n = d.n;
    if n == 0 {
        return 0;
    }
    assert!(n <= 16);
    // q(S, v): vertices outside S + v reachable from v through S.
    let q = |s: u64, v: usize| -> usize {
        let mut seen = 1u64 << v;
        let mut stack = vec![v];
        let mut out = 0u64;
        while let Some(x) = stack.pop() {
            for w in 0..n {
                if !d.adj[x][w] || seen >> w & 1 == 1 {
                    continue;
                }
                seen |= 1 << w;
                if s >> w & 1 == 1 {
                    stack.push(w);
                } else {
                    out |= 1 << w;
                }
            }
        }
        out.count_ones() as usize
    };
    let full = (1u64 << n) - 1;
    let mut tw = vec![usize::MAX; 1 << n];
    tw[0] = 0;
    for s in 1..=full {
        let mut best = usize::MAX;
        for v in 0..n {
            if s >> v & 1 == 1 {
                let rest = s & !(1 << v);
                best = best.min(tw[rest as usize].max(q(rest, v)));
            }
        }
        tw[s as usize] = best;
    }
    tw[full as usize]
}

/// No K4 minor, i.e. treewidth at most two.
pub fn no_k4_minor(g: &Graph) -> bool {
    treewidth(g) <= 2
}

/// Over all proper 3-edge-colorings of `h`: whether one gives `e1`, `e2`
/// the same color and whether one gives them different colors.
pub fn edge_coloring_constraint_types(h: &Graph, e1: (usize, usize), e2: (usize, usize)) -> (bool, bool) {
    let edges = h.edges();
    let key = |e: (usize, usize)| edges.iter().position(|&f| f == (e.0.min(e.1), e.0.max(e.1))).unwrap();
    let (i1, i2) = (key(e1), key(e2));
    let mut col = vec![usize::MAX; edges.len()];
    let mut found = (false, false);
    fn go(edges: &[(usize, usize)], col: &mut Vec<usize>, i: usize, i1: usize, i2: usize, found: &mut (bool, bool)) {
        if found.0 && found.1 {
            return;
        }
        if i == edges.len() {
            if col[i1] == col[i2] {
                found.0 = true;
            } else {
                found.1 = true;
            }
            return;
        }
        for c in 0..3 {
            let (u, v) = edges[i];
            let clash = (0..i).any(|j| col[j] == c && (edges[j].0 == u || edges[j].1 == u || edges[j].0 == v || edges[j].1 == v));
            if !clash {
                col[i] = c;
                go(edges, col, i + 1, i1, i2, found);
                col[i] = usize::MAX;
            }
        }
    }
    go(&edges, &mut col, 0, i1, i2, &mut found);
    found
}

/// Random connected cubic graphs on `n` vertices by pairing half-edges,
/// rejecting loops, multi-edges and disconnected results.
pub fn random_cubic(n: usize, seed: u64) -> Graph {
    use rand::seq::SliceRandom;
    use rand::SeedableRng;
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    loop {
        let mut stubs: Vec<usize> = (0..n).flat_map(|v| [v, v, v]).collect();
        stubs.shuffle(&mut rng);
        let mut edges: Vec<(usize, usize)> = stubs.chunks(2).map(|p| (p[0].min(p[1]), p[0].max(p[1]))).collect();
        if edges.iter().any(|&(u, v)| u == v) {
            continue;
        }
        edges.sort_unstable();
        if edges.windows(2).any(|w| w[0] == w[1]) {
            continue;
        }
        let g = Graph::from_edges(n, &edges).unwrap();
        if g.is_connected() {
            return g;
        }
    }
}

/// Isomorphism-invariant fingerprint (sorted refined degree signatures),
/// used to thin out repeated random graphs.
pub fn fingerprint(g: &Graph) -> Vec<u64> {
    let d = Dense::of(g);
    // Start from distance profiles and triangle counts; degrees alone
    // cannot separate regular graphs.
    let mut label: Vec<u64> = (0..d.n)
        .map(|v| {
            let mut dist = vec![usize::MAX; d.n];
            dist[v] = 0;
            let mut q = VecDeque::from([v]);
            while let Some(x) = q.pop_front() {
                for w in 0..d.n {
                    if d.adj[x][w] && dist[w] == usize::MAX {
                        dist[w] = dist[x] + 1;
                        q.push_back(w);
                    }
                }
            }
            let mut h = (0..d.n)
                .flat_map(|a| (a + 1..d.n).map(move |b| (a, b)))
                .filter(|&(a, b)| d.adj[v][a] && d.adj[v][b] && d.adj[a][b])
                .count() as u64;
            for k in 1..d.n {
                h = h.wrapping_mul(31).wrapping_add(dist.iter().filter(|&&x| x == k).count() as u64);
            }
            h
        })
        .collect();
    for _ in 0..4 {
        label = (0..d.n)
            .map(|v| {
                let mut nb: Vec<u64> = (0..d.n).filter(|&w| d.adj[v][w]).map(|w| label[w]).collect();
                nb.sort_unstable();
                let mut h = label[v].wrapping_mul(0x9e37_79b9_7f4a_7c15);
                for x in nb {
                    h = (h ^ x).wrapping_mul(0x1000_0000_01b3).rotate_left(17);
                }
                h
            })
            .collect();
    }
    label.sort_unstable();
    label
}
