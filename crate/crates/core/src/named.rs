//! Small named graphs and constructions used across the crate and its tests.

use crate::graph::Graph;

fn build(n: usize, edges: &[(usize, usize)]) -> Graph {
    Graph::from_edges(n, edges).expect("named graphs are well formed")
}

pub fn path(n: usize) -> Graph {
    let e: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    build(n, &e)
}

pub fn cycle(n: usize) -> Graph {
    let e: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    build(n, &e)
}

pub fn complete(n: usize) -> Graph {
    let mut e = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            e.push((u, v));
        }
    }
    build(n, &e)
}

/// K_{p,q} with parts `0..p` and `p..p+q`.
pub fn complete_bipartite(p: usize, q: usize) -> Graph {
    let mut e = Vec::new();
    for u in 0..p {
        for v in p..p + q {
            e.push((u, v));
        }
    }
    build(p + q, &e)
}

/// K4 minus the edge 2-3.
pub fn diamond() -> Graph {
    build(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)])
}

/// Triangles 0-1-2 and 0-3-4.
pub fn bowtie() -> Graph {
    build(5, &[(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (4, 0)])
}

/// Triangles 0-1-2 and 3-4-5 with the matching 0-3, 1-4, 2-5.
pub fn prism() -> Graph {
    build(6, &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (0, 3), (1, 4), (2, 5)])
}

pub fn petersen() -> Graph {
    let mut e = Vec::new();
    for i in 0..5 {
        e.push((i, (i + 1) % 5));
        e.push((i, i + 5));
        e.push((5 + i, 5 + (i + 2) % 5));
    }
    build(10, &e)
}

/// The 3-cube Q3.
pub fn cube() -> Graph {
    let mut e = Vec::new();
    for u in 0..8usize {
        for b in 0..3 {
            let v = u ^ (1 << b);
            if u < v {
                e.push((u, v));
            }
        }
    }
    build(8, &e)
}

/// Replaces every edge by a path of length two. Original vertices keep
/// their ids; the subdivision vertex of the i-th edge (in sorted order)
/// gets id `max_id + 1 + i`.
pub fn subdivide_all(g: &Graph) -> Graph {
    subdivide(g, |_| 1)
}

/// Replaces the i-th edge (sorted order) by a path with `times(i)` inner
/// vertices. New ids are assigned after the largest existing id.
pub fn subdivide(g: &Graph, times: impl Fn(usize) -> usize) -> Graph {
    let mut next = g.ids().last().map_or(0, |&m| m + 1);
    let mut ids = g.ids().to_vec();
    let mut edges = Vec::new();
    for (i, (u, v)) in g.edges().into_iter().enumerate() {
        let mut prev = u;
        for _ in 0..times(i) {
            ids.push(next);
            edges.push((prev, next));
            prev = next;
            next += 1;
        }
        edges.push((prev, v));
    }
    Graph::with_ids(ids, &edges).expect("subdivision is simple")
}

/// Line graph of `h`. Vertex i of the result is the i-th edge of `h` in
/// sorted order; the returned vector maps it back to that edge (as ids).
pub fn line_graph(h: &Graph) -> (Graph, Vec<(usize, usize)>) {
    let edges = h.edges();
    let mut at: Vec<Vec<usize>> = vec![Vec::new(); h.n()];
    for (i, &(u, v)) in edges.iter().enumerate() {
        at[h.local(u).unwrap()].push(i);
        at[h.local(v).unwrap()].push(i);
    }
    let mut le = Vec::new();
    for list in &at {
        for (k, &i) in list.iter().enumerate() {
            for &j in &list[k + 1..] {
                le.push((i, j));
            }
        }
    }
    (build(edges.len(), &le), edges)
}

/// Disjoint union; the second graph's ids are shifted past the first's.
pub fn disjoint_union(a: &Graph, b: &Graph) -> Graph {
    let shift = a.ids().last().map_or(0, |&m| m + 1);
    let mut ids = a.ids().to_vec();
    ids.extend(b.ids().iter().map(|&v| v + shift));
    let mut edges = a.edges();
    edges.extend(b.edges().into_iter().map(|(u, v)| (u + shift, v + shift)));
    Graph::with_ids(ids, &edges).expect("disjoint union is simple")
}

/// The order-7 graph from the prism case of the proper 2-cutset argument:
/// triangles a-a1-a2 and b-b1-b2, matching a1-b1 and a2-b2, and the path
/// a-u-b. Ids: a=0, a1=1, a2=2, b=3, b1=4, b2=5, u=6.
pub fn subdivided_prism() -> Graph {
    build(7, &[(0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (4, 5), (1, 4), (2, 5), (0, 6), (6, 3)])
}
