//! Maximum-cardinality matching (Edmonds' blossom algorithm), an exhaustive
//! oracle for small graphs, and the matching lower bounds checked on the
//! triangle graphs.

use std::collections::VecDeque;
use std::fmt;
use std::sync::Arc;

use crate::construct::build_down;
use crate::error::{Error, Result};
use crate::geometry::PointSet;
use crate::graph::{edge, Edge, Graph};

const NONE: usize = usize::MAX;

/// Largest vertex count accepted by [`brute_force_matching`].
pub const BRUTE_FORCE_LIMIT: usize = 14;

/// A set of pairwise disjoint edges, sorted ascending.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Matching {
    pub edges: Vec<Edge>,
}

impl Matching {
    pub fn from_mates(mate: &[usize]) -> Self {
        let mut edges: Vec<Edge> = mate
            .iter()
            .enumerate()
            .filter(|&(v, &m)| m != NONE && v < m)
            .map(|(v, &m)| (v, m))
            .collect();
        edges.sort_unstable();
        Self { edges }
    }

    pub fn size(&self) -> usize {
        self.edges.len()
    }

    /// Partner of each vertex, `None` when unmatched.
    pub fn mates(&self, n: usize) -> Vec<Option<usize>> {
        let mut m = vec![None; n];
        for &(u, v) in &self.edges {
            m[u] = Some(v);
            m[v] = Some(u);
        }
        m
    }

    /// True iff the edges are pairwise disjoint and all present in `g`.
    pub fn is_valid_in(&self, g: &Graph) -> bool {
        let mut used = vec![false; g.vertex_count()];
        self.edges.iter().all(|&(u, v)| {
            let ok = u < used.len() && v < used.len() && g.has_edge(u, v) && !used[u] && !used[v];
            if ok {
                used[u] = true;
                used[v] = true;
            }
            ok
        })
    }
}

/// Maximum-cardinality matching by augmenting paths with blossom
/// contraction, O(V³). The search starts from a greedy matching over the
/// edges in ascending order, so the result is deterministic.
pub fn max_matching(g: &Graph) -> Matching {
    let n = g.vertex_count();
    let mut mate = vec![NONE; n];
    for (u, v) in g.edges() {
        if mate[u] == NONE && mate[v] == NONE {
            mate[u] = v;
            mate[v] = u;
        }
    }
    let mut search = BlossomSearch::new(n);
    for root in 0..n {
        if mate[root] == NONE {
            if let Some(end) = search.find_augmenting_path(g, &mate, root) {
                search.augment(&mut mate, end);
            }
        }
    }
    let m = Matching::from_mates(&mate);
    debug_assert!(m.is_valid_in(g));
    m
}

struct BlossomSearch {
    parent: Vec<usize>,
    base: Vec<usize>,
    used: Vec<bool>,
    blossom: Vec<bool>,
    queue: VecDeque<usize>,
}

impl BlossomSearch {
    fn new(n: usize) -> Self {
        Self {
            parent: vec![NONE; n],
            base: (0..n).collect(),
            used: vec![false; n],
            blossom: vec![false; n],
            queue: VecDeque::new(),
        }
    }

    fn lca(&self, mate: &[usize], mut a: usize, mut b: usize) -> usize {
        let mut on_path = vec![false; mate.len()];
        loop {
            a = self.base[a];
            on_path[a] = true;
            if mate[a] == NONE {
                break;
            }
            a = self.parent[mate[a]];
        }
        loop {
            b = self.base[b];
            if on_path[b] {
                return b;
            }
            b = self.parent[mate[b]];
        }
    }

    fn mark_path(&mut self, mate: &[usize], mut v: usize, b: usize, mut child: usize) {
        while self.base[v] != b {
            self.blossom[self.base[v]] = true;
            self.blossom[self.base[mate[v]]] = true;
            self.parent[v] = child;
            child = mate[v];
            v = self.parent[mate[v]];
        }
    }

    /// BFS over alternating trees rooted at `root`; returns the free vertex
    /// ending an augmenting path.
    fn find_augmenting_path(&mut self, g: &Graph, mate: &[usize], root: usize) -> Option<usize> {
        let n = mate.len();
        self.parent.fill(NONE);
        self.used.fill(false);
        for (i, b) in self.base.iter_mut().enumerate() {
            *b = i;
        }
        self.queue.clear();
        self.used[root] = true;
        self.queue.push_back(root);
        while let Some(v) = self.queue.pop_front() {
            for &to in g.neighbors(v) {
                if self.base[v] == self.base[to] || mate[v] == to {
                    continue;
                }
                if to == root || (mate[to] != NONE && self.parent[mate[to]] != NONE) {
                    let cur = self.lca(mate, v, to);
                    self.blossom.fill(false);
                    self.mark_path(mate, v, cur, to);
                    self.mark_path(mate, to, cur, v);
                    for i in 0..n {
                        if self.blossom[self.base[i]] {
                            self.base[i] = cur;
                            if !self.used[i] {
                                self.used[i] = true;
                                self.queue.push_back(i);
                            }
                        }
                    }
                } else if self.parent[to] == NONE {
                    self.parent[to] = v;
                    if mate[to] == NONE {
                        return Some(to);
                    }
                    self.used[mate[to]] = true;
                    self.queue.push_back(mate[to]);
                }
            }
        }
        None
    }

    fn augment(&self, mate: &mut [usize], end: usize) {
        let mut v = end;
        while v != NONE {
            let pv = self.parent[v];
            let next = mate[pv];
            mate[v] = pv;
            mate[pv] = v;
            v = next;
        }
    }
}

/// Exact maximum matching by exhaustive branch and bound. Only for graphs
/// with at most [`BRUTE_FORCE_LIMIT`] vertices.
pub fn brute_force_matching(g: &Graph) -> Result<Matching> {
    let n = g.vertex_count();
    if n > BRUTE_FORCE_LIMIT {
        return Err(Error::TooLargeForBruteForce(n, BRUTE_FORCE_LIMIT));
    }
    fn go(g: &Graph, v: usize, used: &mut [bool], cur: &mut Vec<Edge>, best: &mut Vec<Edge>) {
        let n = used.len();
        let mut v = v;
        while v < n && used[v] {
            v += 1;
        }
        if v >= n {
            if cur.len() > best.len() {
                *best = cur.clone();
            }
            return;
        }
        let free = used[v..].iter().filter(|u| !**u).count();
        if cur.len() + free / 2 <= best.len() {
            return;
        }
        used[v] = true;
        for &w in g.neighbors(v) {
            if !used[w] {
                used[w] = true;
                cur.push(edge(v, w));
                go(g, v + 1, used, cur, best);
                cur.pop();
                used[w] = false;
            }
        }
        // leave v unmatched
        go(g, v + 1, used, cur, best);
        used[v] = false;
    }
    let mut best = Vec::new();
    go(g, 0, &mut vec![false; n], &mut Vec::new(), &mut best);
    best.sort_unstable();
    Ok(Matching { edges: best })
}

/// Searches exhaustively for an augmenting path (simple alternating path
/// between two distinct unmatched vertices). Exponential; meant for small
/// graphs as a certificate that a matching is maximum.
pub fn find_augmenting_path_brute(g: &Graph, m: &Matching) -> Option<Vec<usize>> {
    let n = g.vertex_count();
    let mate = m.mates(n);
    fn extend(g: &Graph, mate: &[Option<usize>], path: &mut Vec<usize>, on_path: &mut [bool]) -> bool {
        let v = *path.last().expect("path is nonempty");
        for &w in g.neighbors(v) {
            if on_path[w] || mate[v] == Some(w) {
                continue;
            }
            match mate[w] {
                None => {
                    path.push(w);
                    return true;
                }
                Some(x) if !on_path[x] => {
                    path.extend([w, x]);
                    on_path[w] = true;
                    on_path[x] = true;
                    if extend(g, mate, path, on_path) {
                        return true;
                    }
                    on_path[w] = false;
                    on_path[x] = false;
                    path.truncate(path.len() - 2);
                }
                Some(_) => {}
            }
        }
        false
    }
    for s in (0..n).filter(|&s| mate[s].is_none()) {
        let mut on_path = vec![false; n];
        on_path[s] = true;
        let mut path = vec![s];
        if extend(g, &mate, &mut path, &mut on_path) {
            return Some(path);
        }
    }
    None
}

/// `⌈(n − 2)/3⌉`, which equals `⌊n/3⌋` for all `n ≥ 1`.
pub fn down_graph_matching_bound(n: usize) -> usize {
    n / 3
}

/// `⌊n/2⌋`, the size of a perfect (or near-perfect) matching.
pub fn half_floor(n: usize) -> usize {
    n / 2
}

/// Outcome of the down-graph matching bound on one point set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatchingBoundReport {
    pub n: usize,
    pub bound: usize,
    pub matching: usize,
}

impl MatchingBoundReport {
    pub fn holds(&self) -> bool {
        self.matching >= self.bound
    }

    pub fn slack(&self) -> i64 {
        self.matching as i64 - self.bound as i64
    }
}

impl fmt::Display for MatchingBoundReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "n={} matching={} bound={} slack={} {}",
            self.n,
            self.matching,
            self.bound,
            self.slack(),
            if self.holds() { "PASS" } else { "FAIL" }
        )
    }
}

/// Builds the down graph, computes a maximum matching and compares it with
/// `⌈(n − 2)/3⌉`.
pub fn check_down_matching_bound(ps: &Arc<PointSet>) -> Result<MatchingBoundReport> {
    let g = build_down(ps)?;
    Ok(MatchingBoundReport {
        n: ps.len(),
        bound: down_graph_matching_bound(ps.len()),
        matching: max_matching(g.graph()).size(),
    })
}

/// Which case of the planar min-degree-3 matching bound applies.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NishizekiCase {
    /// `n ≥ 10`, not 2-connected: `⌈(n + 2)/3⌉`.
    NotTwoConnected,
    /// `n ≥ 14`, 2-connected: `⌈(n + 4)/3⌉`.
    TwoConnected,
    /// Everything else: `⌊n/2⌋`.
    Small,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NishizekiReport {
    pub n: usize,
    pub case: NishizekiCase,
    pub bound: usize,
    pub matching: usize,
}

impl NishizekiReport {
    pub fn holds(&self) -> bool {
        self.matching >= self.bound
    }
}

/// Preconditions of the bound that the graph fails.
#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum NishizekiPrecondition {
    #[error("graph is not connected")]
    Disconnected,
    #[error("minimum degree is {0}, need at least 3")]
    MinDegree(usize),
}

/// Matching lower bound for connected planar graphs of minimum degree at
/// least 3. Planarity is the caller's responsibility (the augmented graph
/// certifies it through its embedding); connectivity and degree are checked here.
pub fn nishizeki_bound(n: usize, two_connected: bool) -> (NishizekiCase, usize) {
    if two_connected && n >= 14 {
        (NishizekiCase::TwoConnected, (n + 4).div_ceil(3))
    } else if !two_connected && n >= 10 {
        (NishizekiCase::NotTwoConnected, (n + 2).div_ceil(3))
    } else {
        (NishizekiCase::Small, n / 2)
    }
}

pub fn check_nishizeki(g: &Graph) -> std::result::Result<NishizekiReport, NishizekiPrecondition> {
    if !g.is_connected() || g.vertex_count() == 0 {
        return Err(NishizekiPrecondition::Disconnected);
    }
    let min = g.min_degree();
    if min < 3 {
        return Err(NishizekiPrecondition::MinDegree(min));
    }
    let n = g.vertex_count();
    let (case, bound) = nishizeki_bound(n, g.is_k_connected(2));
    Ok(NishizekiReport {
        n,
        case,
        bound,
        matching: max_matching(g).size(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};

    fn complete(n: usize) -> Graph {
        let mut g = Graph::new(n);
        for u in 0..n {
            for v in u + 1..n {
                g.add_edge(u, v);
            }
        }
        g
    }

    fn icosahedron() -> Graph {
        // top 0, upper ring 1..=5, lower ring 6..=10, bottom 11
        let mut g = Graph::new(12);
        for i in 0..5 {
            let up = 1 + i;
            let up_next = 1 + (i + 1) % 5;
            let lo = 6 + i;
            let lo_next = 6 + (i + 1) % 5;
            g.add_edge(0, up);
            g.add_edge(up, up_next);
            g.add_edge(11, lo);
            g.add_edge(lo, lo_next);
            g.add_edge(up, lo);
            g.add_edge(up_next, lo);
        }
        g
    }

    #[test]
    fn small_examples() {
        assert_eq!(max_matching(&Graph::from_edges(2, [(0, 1)])).size(), 1);
        let p4 = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3)]);
        assert_eq!(max_matching(&p4).size(), 2);
        assert_eq!(brute_force_matching(&Graph::new(5)).unwrap().size(), 0);
        assert_eq!(brute_force_matching(&complete(3)).unwrap().size(), 1);
        assert_eq!(brute_force_matching(&complete(4)).unwrap().size(), 2);
        assert_eq!(
            brute_force_matching(&Graph::new(15)).unwrap_err(),
            Error::TooLargeForBruteForce(15, 14)
        );
    }

    #[test]
    fn blossom_needed() {
        // odd cycle 0..4 with a pendant on 0 and a pendant on 2; greedy picks (0,1),(2,3)
        let g = Graph::from_edges(7, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 5), (2, 6)]);
        let m = max_matching(&g);
        assert_eq!(m.size(), 3);
        assert!(m.is_valid_in(&g));
        assert!(find_augmenting_path_brute(&g, &m).is_none());
    }

    #[test]
    fn augmenting_path_found_for_suboptimal() {
        let p4 = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3)]);
        let m = Matching { edges: vec![(1, 2)] };
        assert_eq!(find_augmenting_path_brute(&p4, &m), Some(vec![0, 1, 2, 3]));
    }

    #[test]
    fn nishizeki_examples() {
        let r = check_nishizeki(&complete(4)).unwrap();
        assert_eq!((r.case, r.bound, r.matching), (NishizekiCase::Small, 2, 2));
        let r = check_nishizeki(&icosahedron()).unwrap();
        assert_eq!(r.bound, 6);
        assert_eq!(r.matching, 6);
        assert_eq!(brute_force_matching(&icosahedron()).unwrap().size(), 6);
        assert_eq!(
            check_nishizeki(&Graph::from_edges(3, [(0, 1), (1, 2)])),
            Err(NishizekiPrecondition::MinDegree(1))
        );
        assert_eq!(
            check_nishizeki(&Graph::from_edges(
                8,
                (0..4).flat_map(|a| (a + 1..4).map(move |b| (a, b)))
            )),
            Err(NishizekiPrecondition::Disconnected)
        );
        assert_eq!(nishizeki_bound(14, true), (NishizekiCase::TwoConnected, 6));
        assert_eq!(nishizeki_bound(10, false), (NishizekiCase::NotTwoConnected, 4));
        assert_eq!(nishizeki_bound(13, true), (NishizekiCase::Small, 6));
    }

    #[test]
    fn bound_formula() {
        for n in 1..100usize {
            let exact = (n as i64 - 2 + 2).div_euclid(3); // ⌈(n−2)/3⌉ = ⌊n/3⌋
            assert_eq!(down_graph_matching_bound(n) as i64, exact);
            let ceil = ((n as f64 - 2.0) / 3.0).ceil() as i64;
            assert_eq!(exact, ceil.max(0));
        }
    }

    #[test]
    fn blossom_equals_brute_force_on_random_graphs() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
        for _ in 0..400 {
            let n = rng.random_range(0..=12);
            let p: f64 = rng.random_range(0.05..0.6);
            let mut g = Graph::new(n);
            for u in 0..n {
                for v in u + 1..n {
                    if rng.random_bool(p) {
                        g.add_edge(u, v);
                    }
                }
            }
            let m = max_matching(&g);
            assert!(m.is_valid_in(&g));
            let b = brute_force_matching(&g).unwrap();
            assert!(b.is_valid_in(&g));
            assert_eq!(m.size(), b.size());
            assert!(find_augmenting_path_brute(&g, &m).is_none());
        }
    }
}
