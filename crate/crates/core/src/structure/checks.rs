//! Structural properties of the triangle graphs, each as a standalone check.

use crate::error::{Error, Result};
use crate::geometry::{sextant_of, support_values, Containment, FixedTriangle, Orientation, Sextant};
use crate::graph::{Flavor, TriGraph};

use super::blockcut::BlockCutTree;
use super::embedding::Embedding;

/// True iff every bounded face walk has exactly three darts.
pub fn check_internal_triangulation(e: &Embedding) -> bool {
    e.inner_faces().all(|f| f.len() == 3)
}

/// Lengths of the bounded face walks, ascending.
pub fn inner_face_profile(e: &Embedding) -> Vec<usize> {
    let mut v: Vec<usize> = e.inner_faces().map(Vec::len).collect();
    v.sort_unstable();
    v
}

/// Ids of the degree-one vertices.
pub fn degree_one_census(g: &TriGraph) -> Vec<usize> {
    (0..g.len()).filter(|&v| g.graph().degree(v) == 1).collect()
}

/// Number of points of the set in each sextant around `p` (index 0 = `A_1`).
pub fn sextant_occupancy(g: &TriGraph, p: usize) -> [usize; 6] {
    let pts = g.points();
    let apex = pts.point(p);
    let mut occ = [0usize; 6];
    for q in pts.points().iter().filter(|q| q.id != p) {
        if let Some(s) = sextant_of(apex, q) {
            occ[s as usize] += 1;
        }
    }
    occ
}

/// Checks the cone structure around every cut vertex `p` of a union graph:
/// only one opposite pair of cones `C_i(p)`, `C̄_i(p)` is occupied, both
/// are nonempty, and deleting `p` leaves exactly two components, one per cone.
pub fn check_cut_vertex_structure(g: &TriGraph, bc: &BlockCutTree) -> bool {
    bc.cut_vertices.iter().all(|&p| cut_vertex_split(g, p).is_some())
}

/// For a cut vertex satisfying the cone structure, returns the positive
/// sextant `C_i(p)` of the split.
pub fn cut_vertex_split(g: &TriGraph, p: usize) -> Option<Sextant> {
    let occ = sextant_occupancy(g, p);
    let occupied: Vec<Sextant> = Sextant::ALL.into_iter().filter(|s| occ[*s as usize] > 0).collect();
    if occupied.len() != 2 || occupied[0].opposite() != occupied[1] {
        return None;
    }
    let (labels, count) = g.graph().components_excluding(&[p]);
    if count != 2 {
        return None;
    }
    let pts = g.points();
    let apex = pts.point(p);
    let positive = if occupied[0].cone().is_positive() {
        occupied[0]
    } else {
        occupied[1]
    };
    let mut side_label = [usize::MAX; 2];
    for q in pts.points().iter().filter(|q| q.id != p) {
        let side = usize::from(sextant_of(apex, q)? != positive);
        let l = labels[q.id];
        if side_label[side] == usize::MAX {
            side_label[side] = l;
        } else if side_label[side] != l {
            return None;
        }
    }
    (side_label[0] != side_label[1]).then_some(positive)
}

/// True iff every cut vertex appears on the outer face walk.
pub fn check_cut_vertices_on_outer_face(e: &Embedding, bc: &BlockCutTree) -> bool {
    let outer = e.outer_walk();
    bc.cut_vertices.iter().all(|c| outer.contains(c))
}

/// A `p → q` path whose vertices all lie in the closed smallest triangle of
/// the graph's orientation containing `p` and `q` (down for the down graph,
/// up for the up graph).
pub fn check_path_in_triangle(g: &TriGraph, p: usize, q: usize) -> Result<Vec<usize>> {
    let orientation = match g.flavor() {
        Flavor::Up => Orientation::Up,
        _ => Orientation::Down,
    };
    let pts = g.points();
    let t = FixedTriangle::smallest(pts.point(p), pts.point(q), orientation);
    let inside: Vec<bool> = pts
        .points()
        .iter()
        .map(|v| t.contains_supports(&support_values(v, orientation), Containment::Closed))
        .collect();
    g.graph()
        .bfs_path(p, q, |v| inside[v])
        .ok_or(Error::NoPathInTriangle(p, q))
}

/// Edge-count bound for union graphs: `|E| ≤ 5n − 11` when `n ≥ 3`.
pub fn union_edge_bound(n: usize) -> Option<usize> {
    (n >= 3).then(|| 5 * n - 11)
}

/// Planar edge-count bound `3n − 6` when `n ≥ 3`.
pub fn planar_edge_bound(n: usize) -> Option<usize> {
    (n >= 3).then(|| 3 * n - 6)
}
