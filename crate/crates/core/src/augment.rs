//! Augmentation of a connected down graph into a planar, 2-connected graph
//! of minimum degree at least three, by adding at most three vertices in the
//! outer face (plus one more inside a face when there is exactly one leaf).
//!
//! The added vertices have no coordinates, so the result carries a rotation
//! system that extends the straight-line embedding of the base graph. Its
//! planarity is certified by tracing faces and checking Euler's formula.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{edge, Edge, Graph, TriGraph};
use crate::matching::Matching;
use crate::structure::{block_cut_tree, degree_one_census, trace_faces, Embedding};

#[derive(Clone, Debug)]
pub struct AugmentedGraph {
    pub base: TriGraph,
    /// Base graph plus the added vertices and edges; added ids start at `base.len()`.
    pub graph: Graph,
    /// Counterclockwise neighbor order of every vertex of `graph`.
    pub rotation: Vec<Vec<usize>>,
    /// Degree-one vertices of the base graph, in outer-walk order.
    pub leaves: Vec<usize>,
    pub added_vertices: Vec<usize>,
    pub added_edges: BTreeSet<Edge>,
    /// Base vertices each added vertex was joined to, in walk order.
    pub regions: Vec<Vec<usize>>,
}

impl AugmentedGraph {
    pub fn base_len(&self) -> usize {
        self.base.len()
    }

    pub fn is_added(&self, v: usize) -> bool {
        v >= self.base.len()
    }

    /// Drops the matched edges that touch an added vertex. The result is a
    /// matching of the base graph with at least `|m| − |added|` edges.
    pub fn transfer_matching(&self, m: &Matching) -> Matching {
        let edges = m
            .edges
            .iter()
            .copied()
            .filter(|&(u, v)| !self.is_added(u) && !self.is_added(v))
            .collect();
        Matching { edges }
    }
}

/// Inserts `new` (already in counterclockwise order) into the rotation of `v`
/// immediately before `u`, i.e. into the angle entered along the dart `u → v`.
fn insert_before(rot: &mut [Vec<usize>], v: usize, u: usize, new: &[usize]) {
    let slot = rot[v]
        .iter()
        .position(|&x| x == u)
        .expect("corner predecessor is a neighbor");
    rot[v].splice(slot..slot, new.iter().copied());
}

/// Corner at walk position `j`: (vertex, predecessor on the walk).
fn corner(walk: &[usize], j: usize) -> (usize, usize) {
    let len = walk.len();
    (walk[j], walk[(j + len - 1) % len])
}

/// Walk positions `from..=to` (cyclic) keeping the first position of each
/// vertex; the two end positions are always kept.
fn region_positions(walk: &[usize], from: usize, to: usize) -> Vec<usize> {
    let len = walk.len();
    let count = (to + len - from) % len + 1;
    let mut seen = BTreeSet::new();
    let ends = [walk[from], walk[to]];
    let mut out = Vec::new();
    for step in 0..count {
        let j = (from + step) % len;
        let v = walk[j];
        let is_end = step == 0 || step + 1 == count;
        if is_end || (!ends.contains(&v) && seen.insert(v)) {
            out.push(j);
        }
    }
    out
}

/// Joins a new vertex to one corner of each listed walk position.
fn attach(rot: &mut Vec<Vec<usize>>, walk: &[usize], positions: &[usize]) -> usize {
    let x = rot.len();
    rot.push(Vec::new());
    for &j in positions {
        let (v, u) = corner(walk, j);
        insert_before(rot, v, u, &[x]);
        rot[x].push(v);
    }
    x
}

pub fn augment(g: &TriGraph, e: &Embedding) -> Result<AugmentedGraph> {
    let n = g.len();
    if n < 3 || !g.graph().is_connected() || e.vertex_count() != n {
        return Err(Error::AugmentationPrecondition);
    }
    let census = degree_one_census(g);
    let k = census.len();
    if k > 3 {
        return Err(Error::TooManyLeaves(k));
    }
    let walk: Vec<usize> = e.outer_walk().to_vec();
    let mut rot = e.rotation.clone();
    let mut regions = Vec::new();

    // leaves appear exactly once on the outer walk
    let mut leaf_pos: Vec<usize> = census
        .iter()
        .map(|p| walk.iter().position(|v| v == p).ok_or(Error::AugmentationPrecondition))
        .collect::<Result<_>>()?;
    leaf_pos.sort_unstable();
    let leaves: Vec<usize> = leaf_pos.iter().map(|&j| walk[j]).collect();

    if k >= 2 {
        let xs: Vec<usize> = (0..k).map(|i| n + i).collect();
        let spans: Vec<Vec<usize>> = (0..k)
            .map(|i| region_positions(&walk, leaf_pos[i], leaf_pos[(i + 1) % k]))
            .collect();
        rot.extend(std::iter::repeat_with(Vec::new).take(k));
        // at leaf p_i the counterclockwise order is: out-neighbor, x_i, x_{i−1}, in-neighbor
        for (i, span) in spans.iter().enumerate() {
            let x = xs[i];
            for (step, &j) in span.iter().enumerate() {
                let (v, u) = corner(&walk, j);
                rot[x].push(v);
                if step == 0 {
                    let prev = xs[(i + k - 1) % k];
                    insert_before(&mut rot, v, u, &[x, prev]);
                } else if step + 1 < span.len() {
                    insert_before(&mut rot, v, u, &[x]);
                }
            }
            let next = xs[(i + 1) % k];
            let prev = xs[(i + k - 1) % k];
            rot[x].push(next);
            if prev != next {
                rot[x].push(prev);
            }
            regions.push(span.iter().map(|&j| walk[j]).collect());
        }
    } else {
        let all = region_positions(&walk, 0, walk.len() - 1);
        let x = attach(&mut rot, &walk, &all);
        regions.push(all.iter().map(|&j| walk[j]).collect());
        if k == 1 {
            let p = leaves[0];
            let faces = trace_faces(&rot);
            let f = faces
                .iter()
                .find(|f| f.contains(&p) && f.contains(&x))
                .expect("the leaf shares a face with the outer vertex")
                .clone();
            let positions = region_positions(&f, 0, f.len() - 1);
            attach(&mut rot, &f, &positions);
            regions.push(positions.iter().map(|&j| f[j]).collect());
        }
    }

    let mut graph = g.graph().clone();
    let mut added_edges = BTreeSet::new();
    let added_vertices: Vec<usize> = (n..rot.len()).collect();
    for _ in &added_vertices {
        graph.add_vertex();
    }
    for &x in &added_vertices {
        for &v in &rot[x] {
            graph.add_edge(x, v);
            added_edges.insert(edge(x, v));
        }
    }
    Ok(AugmentedGraph {
        base: g.clone(),
        graph,
        rotation: rot,
        leaves,
        added_vertices,
        added_edges,
        regions,
    })
}

/// Outcome of each structural check on an augmented graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AugmentReport {
    pub n: usize,
    pub n_augmented: usize,
    pub added: usize,
    pub min_degree: usize,
    pub min_degree_ok: bool,
    pub two_connected: bool,
    pub planar: bool,
    pub extends_base: bool,
    pub vertex_count_ok: bool,
    pub base_untouched: bool,
}

impl AugmentReport {
    pub fn passed(&self) -> bool {
        self.min_degree_ok
            && self.two_connected
            && self.planar
            && self.extends_base
            && self.vertex_count_ok
            && self.base_untouched
    }

    /// Names of the failed checks.
    pub fn failures(&self) -> Vec<&'static str> {
        [
            (self.min_degree_ok, "min-degree"),
            (self.two_connected, "2-connected"),
            (self.planar, "planar"),
            (self.extends_base, "extends-base-embedding"),
            (self.vertex_count_ok, "vertex-count"),
            (self.base_untouched, "base-edges"),
        ]
        .into_iter()
        .filter(|(ok, _)| !ok)
        .map(|(_, name)| name)
        .collect()
    }
}

impl fmt::Display for AugmentReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "n={} n'={} added={} min_degree={} ",
            self.n, self.n_augmented, self.added, self.min_degree
        )?;
        let failures = self.failures();
        if failures.is_empty() {
            write!(f, "PASS")
        } else {
            write!(f, "FAIL {}", failures.join(","))
        }
    }
}

/// True iff the rotation is a valid rotation system for `g`: each list is a
/// permutation of the neighbors.
fn rotation_matches(g: &Graph, rot: &[Vec<usize>]) -> bool {
    rot.len() == g.vertex_count()
        && rot.iter().enumerate().all(|(v, r)| {
            let mut s = r.clone();
            s.sort_unstable();
            s == g.neighbors(v)
        })
}

/// Cyclic order of `a` equals `b` up to rotation.
fn same_cycle(a: &[usize], b: &[usize]) -> bool {
    if a.len() != b.len() {
        return false;
    }
    if a.is_empty() {
        return true;
    }
    let Some(shift) = a.iter().position(|&x| x == b[0]) else {
        return false;
    };
    (0..a.len()).all(|i| a[(i + shift) % a.len()] == b[i])
}

pub fn verify_augmented(a: &AugmentedGraph, base_embedding: &Embedding) -> AugmentReport {
    let g = &a.graph;
    let n = a.base_len();
    let planar = rotation_matches(g, &a.rotation) && g.is_connected() && {
        let faces = trace_faces(&a.rotation);
        g.vertex_count() as i64 - g.edge_count() as i64 + faces.len() as i64 == 2
    };
    let extends_base = (0..n).all(|v| {
        let restricted: Vec<usize> = a.rotation[v].iter().copied().filter(|&u| u < n).collect();
        same_cycle(&restricted, &base_embedding.rotation[v])
    });
    let two_connected = g.vertex_count() >= 3 && block_cut_tree(g).is_ok_and(|bc| bc.cut_vertices.is_empty());
    let base_untouched = a.base.edges().all(|(u, v)| g.has_edge(u, v))
        && g.edges()
            .all(|(u, v)| a.base.has_edge(u, v) || a.added_edges.contains(&(u, v)))
        && a.added_edges.iter().all(|&(u, v)| a.is_added(u) || a.is_added(v));
    let min_degree = g.min_degree();
    AugmentReport {
        n,
        n_augmented: g.vertex_count(),
        added: a.added_vertices.len(),
        min_degree,
        min_degree_ok: min_degree >= 3,
        two_connected,
        planar,
        extends_base,
        vertex_count_ok: g.vertex_count() == n + a.added_vertices.len(),
        base_untouched,
    }
}
