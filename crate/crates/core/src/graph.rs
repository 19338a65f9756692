//! Simple undirected graphs on vertices `0..n`, and geometric graphs that
//! carry their point set.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::geometry::PointSet;

/// Normalized undirected edge `(min, max)`.
pub type Edge = (usize, usize);

pub fn edge(u: usize, v: usize) -> Edge {
    if u <= v {
        (u, v)
    } else {
        (v, u)
    }
}

/// Simple undirected graph. Neighbor lists are kept sorted.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    edges: BTreeSet<Edge>,
}

impl Graph {
    pub fn new(n: usize) -> Self {
        Self {
            adj: vec![Vec::new(); n],
            edges: BTreeSet::new(),
        }
    }

    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = Edge>) -> Self {
        let mut g = Self::new(n);
        for (u, v) in edges {
            g.add_edge(u, v);
        }
        g
    }

    /// Adds `{u, v}`; returns false for loops and already-present edges.
    pub fn add_edge(&mut self, u: usize, v: usize) -> bool {
        assert!(u < self.adj.len() && v < self.adj.len(), "vertex out of range");
        if u == v || !self.edges.insert(edge(u, v)) {
            return false;
        }
        let pos = self.adj[u].binary_search(&v).unwrap_err();
        self.adj[u].insert(pos, v);
        let pos = self.adj[v].binary_search(&u).unwrap_err();
        self.adj[v].insert(pos, u);
        true
    }

    pub fn add_vertex(&mut self) -> usize {
        self.adj.push(Vec::new());
        self.adj.len() - 1
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edges.contains(&edge(u, v))
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).min().unwrap_or(0)
    }

    /// Edges in ascending lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        self.edges.iter().copied()
    }

    pub fn edge_set(&self) -> &BTreeSet<Edge> {
        &self.edges
    }

    /// Connected-component label per vertex, skipping vertices in `removed`.
    /// Removed vertices get `usize::MAX`. Returns (labels, component count).
    pub fn components_excluding(&self, removed: &[usize]) -> (Vec<usize>, usize) {
        let n = self.vertex_count();
        let mut label = vec![usize::MAX; n];
        let mut dead = vec![false; n];
        for &r in removed {
            dead[r] = true;
        }
        let mut count = 0;
        let mut queue = VecDeque::new();
        for s in 0..n {
            if dead[s] || label[s] != usize::MAX {
                continue;
            }
            label[s] = count;
            queue.push_back(s);
            while let Some(u) = queue.pop_front() {
                for &w in &self.adj[u] {
                    if !dead[w] && label[w] == usize::MAX {
                        label[w] = count;
                        queue.push_back(w);
                    }
                }
            }
            count += 1;
        }
        (label, count)
    }

    pub fn component_count(&self) -> usize {
        self.components_excluding(&[]).1
    }

    /// Connected in the usual sense; the empty graph and `K_1` count as connected.
    pub fn is_connected(&self) -> bool {
        self.component_count() <= 1
    }

    /// Brute-force k-connectivity for k ∈ {1,2,3}: requires more than k
    /// vertices and connectivity after removing any k−1 vertices.
    pub fn is_k_connected(&self, k: usize) -> bool {
        let n = self.vertex_count();
        if n <= k || !self.is_connected() {
            return false;
        }
        match k {
            1 => true,
            2 => (0..n).all(|a| self.components_excluding(&[a]).1 == 1),
            3 => (0..n).all(|a| {
                self.components_excluding(&[a]).1 == 1 && (a + 1..n).all(|b| self.components_excluding(&[a, b]).1 == 1)
            }),
            _ => unimplemented!("only k <= 3 is supported"),
        }
    }

    /// Shortest path by BFS using only vertices for which `allowed` is true.
    pub fn bfs_path(&self, from: usize, to: usize, allowed: impl Fn(usize) -> bool) -> Option<Vec<usize>> {
        if !allowed(from) || !allowed(to) {
            return None;
        }
        let n = self.vertex_count();
        let mut parent = vec![usize::MAX; n];
        parent[from] = from;
        let mut queue = VecDeque::from([from]);
        while let Some(u) = queue.pop_front() {
            if u == to {
                let mut path = vec![to];
                let mut cur = to;
                while cur != from {
                    cur = parent[cur];
                    path.push(cur);
                }
                path.reverse();
                return Some(path);
            }
            for &w in &self.adj[u] {
                if parent[w] == usize::MAX && allowed(w) {
                    parent[w] = u;
                    queue.push_back(w);
                }
            }
        }
        None
    }

    /// Subgraph induced on vertices `keep` (renumbered in the given order).
    pub fn induced(&self, keep: &[usize]) -> Graph {
        let mut index = vec![usize::MAX; self.vertex_count()];
        for (i, &v) in keep.iter().enumerate() {
            index[v] = i;
        }
        Graph::from_edges(
            keep.len(),
            self.edges()
                .filter(|&(u, v)| index[u] != usize::MAX && index[v] != usize::MAX)
                .map(|(u, v)| (index[u], index[v])),
        )
    }
}

/// Which triangle class generated a geometric graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Flavor {
    Down,
    Up,
    Union,
    Intersection,
}

impl Flavor {
    pub fn as_str(self) -> &'static str {
        match self {
            Flavor::Down => "down",
            Flavor::Up => "up",
            Flavor::Union => "union",
            Flavor::Intersection => "intersection",
        }
    }
}

impl fmt::Display for Flavor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Flavor {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "down" => Ok(Flavor::Down),
            "up" => Ok(Flavor::Up),
            "union" => Ok(Flavor::Union),
            "intersection" => Ok(Flavor::Intersection),
            other => Err(format!("unknown flavor '{other}'")),
        }
    }
}

/// A graph on a point set, drawn with straight-line edges.
#[derive(Clone, Debug)]
pub struct TriGraph {
    points: Arc<PointSet>,
    graph: Graph,
    flavor: Flavor,
}

impl TriGraph {
    pub fn new(points: Arc<PointSet>, graph: Graph, flavor: Flavor) -> Self {
        assert_eq!(points.len(), graph.vertex_count(), "graph/point count mismatch");
        Self { points, graph, flavor }
    }

    pub fn points(&self) -> &PointSet {
        &self.points
    }

    pub fn shared_points(&self) -> &Arc<PointSet> {
        &self.points
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn flavor(&self) -> Flavor {
        self.flavor
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn edge_count(&self) -> usize {
        self.graph.edge_count()
    }

    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        self.graph.edges()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.graph.has_edge(u, v)
    }

    pub fn same_points(&self, other: &TriGraph) -> bool {
        Arc::ptr_eq(&self.points, &other.points) || *self.points == *other.points
    }

    /// A copy with one extra edge; used for negative controls.
    pub fn with_extra_edge(&self, u: usize, v: usize) -> TriGraph {
        let mut g = self.graph.clone();
        g.add_edge(u, v);
        TriGraph::new(self.points.clone(), g, self.flavor)
    }

    pub(crate) fn check_same_points(&self, other: &TriGraph) -> Result<()> {
        if self.same_points(other) {
            Ok(())
        } else {
            Err(Error::MismatchedPointSets)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_ops() {
        let mut g = Graph::new(4);
        assert!(g.add_edge(2, 1));
        assert!(!g.add_edge(1, 2));
        assert!(!g.add_edge(3, 3));
        g.add_edge(1, 0);
        assert_eq!(g.neighbors(1), &[0, 2]);
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 1), (1, 2)]);
        assert_eq!(g.component_count(), 2);
        assert!(!g.is_connected());
        g.add_edge(2, 3);
        assert!(g.is_connected());
        assert_eq!(g.bfs_path(0, 3, |_| true), Some(vec![0, 1, 2, 3]));
        assert_eq!(g.bfs_path(0, 3, |v| v != 2), None);
    }

    #[test]
    fn connectivity_levels() {
        let k4 = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]);
        assert!(k4.is_k_connected(3));
        let c4 = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)]);
        assert!(c4.is_k_connected(2));
        assert!(!c4.is_k_connected(3));
        let path = Graph::from_edges(3, [(0, 1), (1, 2)]);
        assert!(!path.is_k_connected(2));
    }

    #[test]
    fn flavor_parse() {
        for f in [Flavor::Down, Flavor::Up, Flavor::Union, Flavor::Intersection] {
            assert_eq!(f.as_str().parse::<Flavor>().unwrap(), f);
        }
        assert!("sideways".parse::<Flavor>().is_err());
    }
}
