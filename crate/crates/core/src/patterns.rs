//! Forbidden induced patterns and class-membership checks.
//!
//! The class in question forbids three induced patterns: the diamond
//! (K4 minus an edge), the bowtie (two triangles sharing one vertex) and any
//! induced subdivision of K4 (ISK4, with K4 itself as the trivial
//! subdivision). Diamonds and bowties are found by local scans. No
//! polynomial ISK4 test is known, so ISK4 detection is an exhaustive search
//! over connected induced vertex sets with degree-profile pruning, run
//! separately on every clique-cutset atom (an ISK4 has no clique cutset, so
//! it always lies inside one atom). Graphs without a K4 minor cannot
//! contain a K4 subdivision at all and are settled without search.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::cutsets::clique_atoms;
use crate::graph::Graph;
use crate::recognition::is_series_parallel;

/// Default vertex bound for the exact ISK4 search.
pub const DEFAULT_EXACT_BUDGET: usize = 22;

/// Largest graph the bitset search engine can address.
const ENGINE_LIMIT: usize = 64;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PatternKind {
    Diamond,
    Bowtie,
    Prism,
    K33,
    K4,
    Isk4,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PatternWitness {
    pub kind: PatternKind,
    /// Sorted vertex ids realizing the pattern.
    pub vertices: Vec<usize>,
    /// ISK4 only: the four degree-3 vertices.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub corners: Option<[usize; 4]>,
    /// ISK4 only: the six corner-to-corner paths, ends included.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub branches: Option<Vec<Vec<usize>>>,
}

impl PatternWitness {
    fn plain(kind: PatternKind, mut vertices: Vec<usize>) -> Self {
        vertices.sort_unstable();
        PatternWitness { kind, vertices, corners: None, branches: None }
    }

    /// Re-checks that the witness vertices induce the claimed pattern in `g`.
    pub fn validate(&self, g: &Graph) -> bool {
        let Ok(h) = g.induced_subgraph(&self.vertices) else {
            return false;
        };
        if h.n() != self.vertices.len() {
            return false;
        }
        let mut degs: Vec<usize> = (0..h.n()).map(|v| h.degree(v)).collect();
        degs.sort_unstable();
        match self.kind {
            PatternKind::Diamond => h.n() == 4 && degs == [2, 2, 3, 3],
            PatternKind::Bowtie => {
                // Degrees 2,2,2,2,4 with five edges is exactly two triangles on a
                // shared vertex.
                h.n() == 5 && h.m() == 6 && degs == [2, 2, 2, 2, 4]
            }
            PatternKind::K4 => h.n() == 4 && h.m() == 6,
            PatternKind::Prism => h.n() == 6 && degs == [3; 6] && has_triangle(&h),
            PatternKind::K33 => h.n() == 6 && degs == [3; 6] && !has_triangle(&h),
            PatternKind::Isk4 => match k4_subdivision_structure(&h) {
                None => false,
                Some((corners, branches)) => {
                    
                    match (&self.corners, &self.branches) {
                        (Some(c), Some(b)) => {
                            let mut c = c.to_vec();
                            c.sort_unstable();
                            let mut mine = corners.to_vec();
                            mine.sort_unstable();
                            c == mine && branches_match(b, &branches)
                        }
                        (None, None) => true,
                        _ => false,
                    }
                }
            },
        }
    }
}

fn branches_match(claimed: &[Vec<usize>], actual: &[Vec<usize>]) -> bool {
    let norm = |p: &Vec<usize>| {
        let mut q = p.clone();
        if q.first() > q.last() {
            q.reverse();
        }
        q
    };
    let mut a: Vec<Vec<usize>> = claimed.iter().map(norm).collect();
    let mut b: Vec<Vec<usize>> = actual.iter().map(norm).collect();
    a.sort();
    b.sort();
    a == b
}

fn has_triangle(h: &Graph) -> bool {
    h.local_edges().iter().any(|&(u, v)| {
        h.neighbors(u).iter().any(|w| h.neighbors(v).binary_search(w).is_ok())
    })
}

/// If `h` is a subdivision of K4, returns its corners (ids) and the six
/// branch paths (ids, corner to corner).
pub fn k4_subdivision_structure(h: &Graph) -> Option<([usize; 4], Vec<Vec<usize>>)> {
    if !h.is_connected() {
        return None;
    }
    let mut corners = Vec::new();
    for v in 0..h.n() {
        match h.degree(v) {
            2 => {}
            3 => corners.push(v),
            _ => return None,
        }
    }
    if corners.len() != 4 {
        return None;
    }
    let is_corner = |v: usize| corners.contains(&v);
    let mut branches = Vec::new();
    let mut pairs = Vec::new();
    for &c in &corners {
        for &first in h.neighbors(c) {
            let mut path = vec![c];
            let (mut prev, mut cur) = (c, first);
            while !is_corner(cur) {
                path.push(cur);
                let nb = h.neighbors(cur);
                let next = if nb[0] == prev { nb[1] } else { nb[0] };
                prev = cur;
                cur = next;
            }
            path.push(cur);
            if cur == c {
                return None;
            }
            if c < cur {
                pairs.push((c, cur));
                branches.push(path.iter().map(|&v| h.id(v)).collect::<Vec<_>>());
            }
        }
    }
    pairs.sort_unstable();
    let before = pairs.len();
    pairs.dedup();
    if before != 6 || pairs.len() != 6 {
        return None;
    }
    let ids = [h.id(corners[0]), h.id(corners[1]), h.id(corners[2]), h.id(corners[3])];
    Some((ids, branches))
}

/// Keeps the lexicographically least sorted vertex set.
fn keep_least(best: &mut Option<Vec<usize>>, mut cand: Vec<usize>) {
    cand.sort_unstable();
    if best.as_ref().is_none_or(|b| cand < *b) {
        *best = Some(cand);
    }
}

/// Lexicographically least induced diamond.
pub fn find_diamond(g: &Graph) -> Option<PatternWitness> {
    let mut best = None;
    for (u, v) in g.local_edges() {
        let common: Vec<usize> = intersect(g.neighbors(u), g.neighbors(v));
        for (i, &x) in common.iter().enumerate() {
            for &y in &common[i + 1..] {
                if !g.adjacent(x, y) {
                    keep_least(&mut best, vec![g.id(u), g.id(v), g.id(x), g.id(y)]);
                }
            }
        }
    }
    best.map(|v| PatternWitness::plain(PatternKind::Diamond, v))
}

/// Lexicographically least induced bowtie.
pub fn find_bowtie(g: &Graph) -> Option<PatternWitness> {
    let mut best = None;
    for c in 0..g.n() {
        let nb = g.neighbors(c);
        let mut tri = Vec::new();
        for (i, &x) in nb.iter().enumerate() {
            for &y in &nb[i + 1..] {
                if g.adjacent(x, y) {
                    tri.push((x, y));
                }
            }
        }
        for (i, &(x1, y1)) in tri.iter().enumerate() {
            for &(x2, y2) in &tri[i + 1..] {
                let ends = [x2, y2];
                if ends.contains(&x1) || ends.contains(&y1) {
                    continue;
                }
                let crossing = [x1, y1]
                    .iter()
                    .any(|&p| ends.iter().any(|&q| g.adjacent(p, q)));
                if !crossing {
                    keep_least(
                        &mut best,
                        vec![g.id(c), g.id(x1), g.id(y1), g.id(x2), g.id(y2)],
                    );
                }
            }
        }
    }
    best.map(|v| PatternWitness::plain(PatternKind::Bowtie, v))
}

fn intersect(a: &[usize], b: &[usize]) -> Vec<usize> {
    let (mut i, mut j, mut out) = (0, 0, Vec::new());
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                out.push(a[i]);
                i += 1;
                j += 1;
            }
        }
    }
    out
}

/// Induced prism, K3,3 or K4 (the first in lexicographic order), found by
/// bounded subset enumeration.
pub fn find_fixed_pattern(g: &Graph, kind: PatternKind) -> Option<PatternWitness> {
    match kind {
        PatternKind::K4 => {
            let mut best = None;
            for (u, v) in g.local_edges() {
                let common = intersect(g.neighbors(u), g.neighbors(v));
                for (i, &x) in common.iter().enumerate() {
                    for &y in &common[i + 1..] {
                        if g.adjacent(x, y) {
                            keep_least(&mut best, vec![g.id(u), g.id(v), g.id(x), g.id(y)]);
                        }
                    }
                }
            }
            best.map(|v| PatternWitness::plain(PatternKind::K4, v))
        }
        PatternKind::Prism | PatternKind::K33 => {
            // Only vertices of degree >= 3 can take part in a cubic pattern.
            let pool: Vec<usize> = (0..g.n()).filter(|&v| g.degree(v) >= 3).collect();
            let mut chosen = Vec::with_capacity(6);
            let want_triangle = kind == PatternKind::Prism;
            six_subsets(g, &pool, 0, &mut chosen, want_triangle)
                .map(|locals| PatternWitness::plain(kind, locals.iter().map(|&v| g.id(v)).collect()))
        }
        PatternKind::Diamond => find_diamond(g),
        PatternKind::Bowtie => find_bowtie(g),
        PatternKind::Isk4 => match find_isk4(g, DEFAULT_EXACT_BUDGET) {
            Isk4Outcome::Found(w) => Some(w),
            _ => None,
        },
    }
}

fn six_subsets(
    g: &Graph,
    pool: &[usize],
    start: usize,
    chosen: &mut Vec<usize>,
    want_triangle: bool,
) -> Option<Vec<usize>> {
    let deg_in = |v: usize, set: &[usize]| set.iter().filter(|&&w| g.adjacent(v, w)).count();
    if chosen.len() == 6 {
        if chosen.iter().all(|&v| deg_in(v, chosen) == 3) {
            let h = g.induced_local(chosen);
            if has_triangle(&h) == want_triangle {
                return Some(chosen.clone());
            }
        }
        return None;
    }
    let slots = 6 - chosen.len();
    for i in start..pool.len() {
        if pool.len() - i < slots {
            break;
        }
        let v = pool[i];
        chosen.push(v);
        let ok = chosen.iter().all(|&w| {
            let d = deg_in(w, chosen);
            d <= 3 && d + (6 - chosen.len()) >= 3
        });
        if ok {
            if let Some(found) = six_subsets(g, pool, i + 1, chosen, want_triangle) {
                return Some(found);
            }
        }
        chosen.pop();
    }
    None
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Isk4Outcome {
    Found(PatternWitness),
    Absent,
    /// Bounded search found nothing but could not rule an ISK4 out.
    Unknown,
}

#[derive(Clone, Debug)]
pub struct Isk4Options {
    /// Largest atom searched exhaustively.
    pub budget: usize,
    /// Seed for the bounded search on atoms above the budget.
    pub seed: u64,
    /// Number of random windows sampled per oversized atom.
    pub samples: usize,
}

impl Default for Isk4Options {
    fn default() -> Self {
        Isk4Options { budget: DEFAULT_EXACT_BUDGET, seed: 0, samples: 64 }
    }
}

/// ISK4 detection with the given exact budget (bounded mode uses seed 0).
pub fn find_isk4(g: &Graph, budget: usize) -> Isk4Outcome {
    find_isk4_with(g, &Isk4Options { budget, ..Isk4Options::default() })
}

pub fn find_isk4_with(g: &Graph, opts: &Isk4Options) -> Isk4Outcome {
    // No K4 minor means no K4 subdivision, induced or not.
    if is_series_parallel(g) {
        return Isk4Outcome::Absent;
    }
    let budget = opts.budget.min(ENGINE_LIMIT);
    let mut best: Option<PatternWitness> = None;
    let mut oversized = Vec::new();
    for atom in clique_atoms(g) {
        let h = g.induced_subgraph(&atom).expect("atom ids come from g");
        if h.n() < 4 || h.m() < 6 || is_series_parallel(&h) {
            continue;
        }
        if h.n() > budget {
            oversized.push(h);
            continue;
        }
        if let Some(w) = exact_isk4(&h) {
            if best.as_ref().is_none_or(|b| w.vertices < b.vertices) {
                best = Some(w);
            }
        }
    }
    if let Some(w) = best {
        return Isk4Outcome::Found(w);
    }
    if oversized.is_empty() {
        return Isk4Outcome::Absent;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    for h in &oversized {
        for _ in 0..opts.samples {
            let window = random_window(h, budget, &mut rng);
            let sub = h.induced_local(&window);
            if let Some(w) = exact_isk4(&sub) {
                return Isk4Outcome::Found(w);
            }
        }
    }
    Isk4Outcome::Unknown
}

/// Connected vertex set of at most `size` vertices grown from a random root
/// in random frontier order.
fn random_window(h: &Graph, size: usize, rng: &mut ChaCha8Rng) -> Vec<usize> {
    let root = rng.gen_range(0..h.n());
    let mut inside = vec![false; h.n()];
    inside[root] = true;
    let mut window = vec![root];
    let mut frontier: Vec<usize> = h.neighbors(root).to_vec();
    while window.len() < size && !frontier.is_empty() {
        let i = rng.gen_range(0..frontier.len());
        let v = frontier.swap_remove(i);
        if inside[v] {
            continue;
        }
        inside[v] = true;
        window.push(v);
        let mut fresh: Vec<usize> = h.neighbors(v).iter().copied().filter(|&w| !inside[w]).collect();
        fresh.shuffle(rng);
        frontier.extend(fresh);
    }
    window
}

/// Exhaustive ISK4 search on a graph of at most 64 vertices. Returns the
/// lexicographically least witness.
pub(crate) fn exact_isk4(h: &Graph) -> Option<PatternWitness> {
    assert!(h.n() <= ENGINE_LIMIT, "bitset engine limited to {ENGINE_LIMIT} vertices");
    let adj: Vec<u64> = (0..h.n())
        .map(|v| h.neighbors(v).iter().fold(0u64, |acc, &w| acc | (1 << w)))
        .collect();
    let mut engine = Isk4Engine { adj, deg: [0; ENGINE_LIMIT], n3: 0, allowed: 0, best: None };
    for root in 0..h.n() {
        // A corner needs degree 3 and every vertex at least 2.
        if h.degree(root) < 2 {
            continue;
        }
        engine.allowed = (if root + 1 >= 64 { 0 } else { !0u64 << (root + 1) }) & mask_upto(h.n());
        engine.deg[root] = 0;
        engine.n3 = 0;
        let cand = engine.adj[root] & engine.allowed;
        engine.search(1 << root, cand, 0);
        if engine.best.is_some() {
            break;
        }
    }
    let set = engine.best?;
    let locals: Vec<usize> = (0..h.n()).filter(|&v| set >> v & 1 == 1).collect();
    let sub = h.induced_local(&locals);
    let (corners, branches) = k4_subdivision_structure(&sub).expect("engine accepts only K4 subdivisions");
    let mut w = PatternWitness::plain(PatternKind::Isk4, sub.ids().to_vec());
    w.corners = Some(corners);
    w.branches = Some(branches);
    Some(w)
}

fn mask_upto(n: usize) -> u64 {
    if n >= 64 {
        !0
    } else {
        (1u64 << n) - 1
    }
}

fn bits(mut x: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if x == 0 {
            None
        } else {
            let b = x.trailing_zeros() as usize;
            x &= x - 1;
            Some(b)
        }
    })
}

/// Sorted-set order on bitsets: `a` precedes `b` iff the smallest element of
/// the symmetric difference lies in `a`. Valid here because no ISK4 vertex
/// set contains another.
fn lex_less(a: u64, b: u64) -> bool {
    let d = a ^ b;
    d != 0 && a & (d & d.wrapping_neg()) != 0
}

struct Isk4Engine {
    adj: Vec<u64>,
    deg: [u8; ENGINE_LIMIT],
    n3: u32,
    allowed: u64,
    best: Option<u64>,
}

impl Isk4Engine {
    /// Enumerates every connected set containing the root and otherwise only
    /// `allowed` vertices, each exactly once: `cand` is the frontier, `excl`
    /// the vertices ruled out in this branch.
    fn search(&mut self, set: u64, mut cand: u64, mut excl: u64) {
        // Vertices next to a saturated member can never join.
        let mut blocked = 0u64;
        for v in bits(set) {
            if self.deg[v] == 3 || (self.n3 == 4 && self.deg[v] == 2) {
                blocked |= self.adj[v];
            }
        }
        let dead = cand & blocked;
        cand &= !dead;
        excl |= dead | (blocked & !set);
        if !self.growable(set, excl) {
            return;
        }
        while cand != 0 {
            let w = cand.trailing_zeros() as usize;
            let wb = 1u64 << w;
            cand &= !wb;

            if let Some(new_set) = self.include(set, w) {
                if self.is_witness(new_set) {
                    if self.best.is_none_or(|b| lex_less(new_set, b)) {
                        self.best = Some(new_set);
                    }
                } else if !(self.n3 == 4 && self.saturated(new_set)) {
                    let next = (cand | (self.adj[w] & self.allowed)) & !new_set & !excl;
                    self.search(new_set, next, excl);
                }
                self.exclude(set, w);
            }
            excl |= wb;
            if !self.growable(set, excl) {
                return;
            }
        }
    }

    fn include(&mut self, set: u64, w: usize) -> Option<u64> {
        let nb = self.adj[w] & set;
        let dw = nb.count_ones();
        if dw > 3 {
            return None;
        }
        let mut n3 = self.n3 + u32::from(dw == 3);
        for u in bits(nb) {
            match self.deg[u] {
                3 => return None,
                2 => n3 += 1,
                _ => {}
            }
        }
        if n3 > 4 {
            return None;
        }
        for u in bits(nb) {
            self.deg[u] += 1;
        }
        self.deg[w] = dw as u8;
        self.n3 = n3;
        Some(set | (1 << w))
    }

    fn exclude(&mut self, set: u64, w: usize) {
        let nb = self.adj[w] & set;
        if self.deg[w] == 3 {
            self.n3 -= 1;
        }
        for u in bits(nb) {
            if self.deg[u] == 3 {
                self.n3 -= 1;
            }
            self.deg[u] -= 1;
        }
        self.deg[w] = 0;
    }

    /// Every member still below degree 2 has enough reachable neighbors.
    fn growable(&self, set: u64, excl: u64) -> bool {
        let open = self.allowed & !set & !excl;
        bits(set).all(|v| {
            let d = self.deg[v] as u32;
            d >= 2 || (self.adj[v] & open).count_ones() >= 2 - d
        })
    }

    fn saturated(&self, set: u64) -> bool {
        bits(set).all(|v| self.deg[v] >= 2)
    }

    fn is_witness(&self, set: u64) -> bool {
        if self.n3 != 4 || !self.saturated(set) {
            return false;
        }
        // Degrees are all 2 or 3 with exactly four 3s; connectivity holds by
        // construction. Check that the chains pair up the corners as K4.
        let corners: Vec<usize> = bits(set).filter(|&v| self.deg[v] == 3).collect();
        let mut pairs = 0u32;
        for &c in &corners {
            for first in bits(self.adj[c] & set) {
                let (mut prev, mut cur) = (c, first);
                while self.deg[cur] == 2 {
                    let nb = self.adj[cur] & set & !(1 << prev);
                    prev = cur;
                    cur = nb.trailing_zeros() as usize;
                }
                if cur == c {
                    return false;
                }
                let (i, j) = (
                    corners.iter().position(|&x| x == c).unwrap(),
                    corners.iter().position(|&x| x == cur).unwrap(),
                );
                let bit = 1u32 << (i * 4 + j);
                if pairs & bit != 0 {
                    return false;
                }
                pairs |= bit;
            }
        }
        true
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Member,
    Nonmember,
    Unknown,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SearchMode {
    Exact,
    Bounded,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MembershipReport {
    pub verdict: Verdict,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<PatternWitness>,
    pub mode: SearchMode,
    pub budget: usize,
}

/// Checks diamond, bowtie and ISK4 freeness, in that order.
pub fn verify_membership(g: &Graph, budget: usize) -> MembershipReport {
    verify_membership_with(g, &Isk4Options { budget, ..Isk4Options::default() })
}

pub fn verify_membership_with(g: &Graph, opts: &Isk4Options) -> MembershipReport {
    let report = |verdict, witness, mode| MembershipReport { verdict, witness, mode, budget: opts.budget };
    if let Some(w) = find_diamond(g) {
        return report(Verdict::Nonmember, Some(w), SearchMode::Exact);
    }
    if let Some(w) = find_bowtie(g) {
        return report(Verdict::Nonmember, Some(w), SearchMode::Exact);
    }
    match find_isk4_with(g, opts) {
        Isk4Outcome::Found(w) => report(Verdict::Nonmember, Some(w), SearchMode::Exact),
        Isk4Outcome::Absent => report(Verdict::Member, None, SearchMode::Exact),
        Isk4Outcome::Unknown => report(Verdict::Unknown, None, SearchMode::Bounded),
    }
}

/// Diamond-free and bowtie-free, the two cheap conditions.
pub fn is_diamond_bowtie_free(g: &Graph) -> bool {
    find_diamond(g).is_none() && find_bowtie(g).is_none()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::named;

    #[test]
    fn diamond_examples() {
        let w = find_diamond(&named::diamond()).unwrap();
        assert_eq!(w.vertices, vec![0, 1, 2, 3]);
        assert!(w.validate(&named::diamond()));
        assert!(find_diamond(&named::cycle(6)).is_none());
        assert!(find_diamond(&named::complete(4)).is_none());
    }

    #[test]
    fn bowtie_examples() {
        let w = find_bowtie(&named::bowtie()).unwrap();
        assert_eq!(w.vertices.len(), 5);
        assert!(w.validate(&named::bowtie()));
        assert!(find_bowtie(&named::prism()).is_none());
        assert!(find_bowtie(&named::complete_bipartite(3, 3)).is_none());
    }

    #[test]
    fn fixed_patterns() {
        let w = find_fixed_pattern(&named::prism(), PatternKind::Prism).unwrap();
        assert_eq!(w.vertices, (0..6).collect::<Vec<_>>());
        let k33 = named::complete_bipartite(3, 3);
        let w = find_fixed_pattern(&k33, PatternKind::K33).unwrap();
        assert_eq!(w.vertices, (0..6).collect::<Vec<_>>());
        assert!(w.validate(&k33));
        assert!(find_fixed_pattern(&named::petersen(), PatternKind::Prism).is_none());
        assert!(find_fixed_pattern(&named::prism(), PatternKind::K33).is_none());
        let w = find_fixed_pattern(&named::complete(4), PatternKind::K4).unwrap();
        assert!(w.validate(&named::complete(4)));
    }

    #[test]
    fn isk4_examples() {
        match find_isk4(&named::complete(4), 22) {
            Isk4Outcome::Found(w) => {
                assert_eq!(w.vertices, vec![0, 1, 2, 3]);
                assert!(w.validate(&named::complete(4)));
            }
            other => panic!("expected K4 witness, got {other:?}"),
        }
        assert_eq!(find_isk4(&named::prism(), 22), Isk4Outcome::Absent);
        let sub = named::subdivide_all(&named::complete(4));
        match find_isk4(&sub, 22) {
            Isk4Outcome::Found(w) => {
                assert_eq!(w.vertices, (0..10).collect::<Vec<_>>());
                assert!(w.validate(&sub));
                assert_eq!(w.branches.as_ref().unwrap().len(), 6);
            }
            other => panic!("expected witness, got {other:?}"),
        }
    }

    #[test]
    fn membership_examples() {
        let r = verify_membership(&named::cycle(7), 22);
        assert_eq!((r.verdict, r.mode), (Verdict::Member, SearchMode::Exact));

        let r = verify_membership(&named::bowtie(), 22);
        assert_eq!(r.verdict, Verdict::Nonmember);
        assert_eq!(r.witness.unwrap().kind, PatternKind::Bowtie);

        let sub = named::subdivide_all(&named::complete(4));
        let r = verify_membership(&sub, 22);
        assert_eq!(r.verdict, Verdict::Nonmember);
        assert_eq!(r.witness.unwrap().kind, PatternKind::Isk4);
    }

    #[test]
    fn bounded_mode_reports_unknown_or_witness() {
        // The truncated tetrahedron L(S(K4)) is ISK4-free; with a tiny budget
        // the answer can only be unknown.
        let g = named::line_graph(&named::subdivide_all(&named::complete(4))).0;
        let r = verify_membership(&g, 6);
        assert_eq!(r.verdict, Verdict::Unknown);
        assert_eq!(r.mode, SearchMode::Bounded);

        // A planted K4 subdivision in a larger graph is found by sampling.
        let sub = named::subdivide_all(&named::complete(4));
        match find_isk4(&sub, 8) {
            Isk4Outcome::Found(w) => assert!(w.validate(&sub)),
            Isk4Outcome::Unknown => {}
            Isk4Outcome::Absent => panic!("bounded mode never claims absence"),
        }
    }

    #[test]
    fn lex_order_on_bitsets() {
        assert!(lex_less(0b0111, 0b1011));
        assert!(!lex_less(0b1011, 0b0111));
        assert!(!lex_less(5, 5));
    }
}
