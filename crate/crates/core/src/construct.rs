//! Construction of the down-, up-, union- and intersection-triangle graphs.
//!
//! The fast route is the cone-minimum rule: in the down graph every point is
//! joined to the point of each of its negative cones with the smallest
//! projection length (positive cones for the up graph). The brute-force
//! route tests emptiness of the smallest triangle for every pair; the two
//! must agree on every general-position input.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::geometry::{
    project_onto, sextant_of, support_values, ConeKind, Containment, FixedTriangle, Orientation, PointSet,
};
use crate::graph::{edge, Edge, Flavor, Graph, TriGraph};
use crate::scalar::ExactScalar;

fn flavor_of(o: Orientation) -> Flavor {
    match o {
        Orientation::Down => Flavor::Down,
        Orientation::Up => Flavor::Up,
    }
}

/// Which cone kind a point "looks into" for the given orientation.
fn looking_kind(o: Orientation) -> ConeKind {
    match o {
        Orientation::Down => ConeKind::Negative,
        Orientation::Up => ConeKind::Positive,
    }
}

/// Builds the graph by the cone-minimum rule in O(n²).
pub fn build_cone_minimum(ps: &Arc<PointSet>, orientation: Orientation) -> Result<TriGraph> {
    ps.require_general_position()?;
    let kind = looking_kind(orientation);
    let n = ps.len();
    let mut graph = Graph::new(n);
    for p in ps.points() {
        // best[i-1] = (projection, id) for cone i of the looked-at kind
        let mut best: [Option<(ExactScalar, usize)>; 3] = [None, None, None];
        for q in ps.points() {
            if q.id == p.id {
                continue;
            }
            let s = sextant_of(p, q).ok_or(Error::NotGeneralPosition(p.id.min(q.id), p.id.max(q.id)))?;
            let cone = s.cone();
            if cone.kind != kind {
                continue;
            }
            let d = project_onto(p, q, s);
            let slot = &mut best[cone.i as usize - 1];
            match slot {
                Some((cur, _)) if *cur <= d => {}
                _ => *slot = Some((d, q.id)),
            }
        }
        for (_, q) in best.into_iter().flatten() {
            graph.add_edge(p.id, q);
        }
    }
    Ok(TriGraph::new(ps.clone(), graph, flavor_of(orientation)))
}

/// Builds the graph from the definition: `pq` is an edge iff the smallest
/// triangle of the orientation containing `p` and `q` holds no other point.
/// O(n³).
pub fn build_oracle(ps: &Arc<PointSet>, orientation: Orientation) -> Result<TriGraph> {
    ps.require_general_position()?;
    let supports: Vec<[ExactScalar; 3]> = ps.points().iter().map(|p| support_values(p, orientation)).collect();
    let n = ps.len();
    let mut graph = Graph::new(n);
    for a in 0..n {
        for b in a + 1..n {
            let t = FixedTriangle::from_supports(&supports[a], &supports[b], orientation);
            let empty = (0..n)
                .filter(|&r| r != a && r != b)
                .all(|r| !t.contains_supports(&supports[r], Containment::Closed));
            if empty {
                graph.add_edge(a, b);
            }
        }
    }
    Ok(TriGraph::new(ps.clone(), graph, flavor_of(orientation)))
}

pub fn build_down(ps: &Arc<PointSet>) -> Result<TriGraph> {
    build_cone_minimum(ps, Orientation::Down)
}

pub fn build_up(ps: &Arc<PointSet>) -> Result<TriGraph> {
    build_cone_minimum(ps, Orientation::Up)
}

/// Theta-6 graph: union of the down and up graphs.
pub fn union_graph(down: &TriGraph, up: &TriGraph) -> Result<TriGraph> {
    down.check_same_points(up)?;
    let g = Graph::from_edges(down.len(), down.edges().chain(up.edges()));
    Ok(TriGraph::new(down.shared_points().clone(), g, Flavor::Union))
}

pub fn intersect_graph(down: &TriGraph, up: &TriGraph) -> Result<TriGraph> {
    down.check_same_points(up)?;
    let g = Graph::from_edges(down.len(), down.edges().filter(|&(u, v)| up.has_edge(u, v)));
    Ok(TriGraph::new(down.shared_points().clone(), g, Flavor::Intersection))
}

/// Builds any flavor by the cone-minimum rule.
pub fn build_flavor(ps: &Arc<PointSet>, flavor: Flavor) -> Result<TriGraph> {
    match flavor {
        Flavor::Down => build_down(ps),
        Flavor::Up => build_up(ps),
        Flavor::Union => union_graph(&build_down(ps)?, &build_up(ps)?),
        Flavor::Intersection => intersect_graph(&build_down(ps)?, &build_up(ps)?),
    }
}

/// Hexagonal distances from a point `p` to the points outside the grown set:
/// `d1` over `p`'s positive cones, `d2` over its negative cones. `None`
/// stands for an empty minimum.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HexDistance {
    pub d1: Option<ExactScalar>,
    pub d2: Option<ExactScalar>,
}

impl HexDistance {
    pub fn d(&self) -> Option<&ExactScalar> {
        match (&self.d1, &self.d2) {
            (Some(a), Some(b)) => Some(a.min(b)),
            (a, b) => a.as_ref().or(b.as_ref()),
        }
    }
}

/// Hexagonal distance of `p` to the points with `outside[q] == true`.
pub fn hex_distance(ps: &PointSet, p: usize, outside: &[bool]) -> HexDistance {
    let apex = ps.point(p);
    let mut out = HexDistance { d1: None, d2: None };
    for q in ps.points().iter().filter(|q| outside[q.id] && q.id != p) {
        let Some(s) = sextant_of(apex, q) else { continue };
        let d = project_onto(apex, q, s);
        let slot = if s.cone().is_positive() {
            &mut out.d1
        } else {
            &mut out.d2
        };
        if slot.as_ref().is_none_or(|cur| d < *cur) {
            *slot = Some(d);
        }
    }
    out
}

/// Grows a spanning tree of the intersection graph by repeatedly attaching
/// the outside point that is nearest to the grown set in hexagonal
/// distance. Ties are broken by the lowest `(inside id, outside id)`.
/// Every selected pair is checked to be an edge of both the down and the up graph.
pub fn hexagon_growth_tree(ps: &Arc<PointSet>) -> Result<Vec<Edge>> {
    let down = build_down(ps)?;
    let up = build_up(ps)?;
    hexagon_growth_tree_with(ps, &down, &up)
}

pub fn hexagon_growth_tree_with(ps: &Arc<PointSet>, down: &TriGraph, up: &TriGraph) -> Result<Vec<Edge>> {
    ps.require_general_position()?;
    let n = ps.len();
    let mut inside = vec![false; n];
    // best[q] = nearest inside point to outside q: (distance, inside id)
    let mut best: Vec<Option<(ExactScalar, usize)>> = vec![None; n];
    let mut tree = Vec::with_capacity(n.saturating_sub(1));

    let add = |v: usize, inside: &mut Vec<bool>, best: &mut Vec<Option<(ExactScalar, usize)>>| {
        inside[v] = true;
        best[v] = None;
        let apex = ps.point(v);
        for q in ps.points().iter().filter(|q| !inside[q.id]) {
            let s = sextant_of(apex, q).expect("general position checked");
            let d = project_onto(apex, q, s);
            let better = match &best[q.id] {
                None => true,
                Some((cur, from)) => d < *cur || (d == *cur && v < *from),
            };
            if better {
                best[q.id] = Some((d, v));
            }
        }
    };

    add(0, &mut inside, &mut best);
    for _ in 1..n {
        let mut pick: Option<(&ExactScalar, usize, usize)> = None;
        for (q, b) in best.iter().enumerate() {
            let Some((d, p)) = b else { continue };
            let better = match pick {
                None => true,
                Some((bd, bp, bq)) => d < bd || (d == bd && (*p, q) < (bp, bq)),
            };
            if better {
                pick = Some((d, *p, q));
            }
        }
        let (_, p, q) = pick.expect("outside set is nonempty");
        if !(down.has_edge(p, q) && up.has_edge(p, q)) {
            return Err(Error::HexagonEdgeMissing(p, q));
        }
        tree.push(edge(p, q));
        add(q, &mut inside, &mut best);
    }
    Ok(tree)
}

/// Edge list in ascending order.
pub fn edges_of(g: &TriGraph) -> Vec<Edge> {
    g.edges().collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(coords: &[(i64, i64)]) -> Arc<PointSet> {
        Arc::new(PointSet::from_integers(coords).unwrap())
    }

    #[test]
    fn tiny_sets() {
        let one = set(&[(0, 0)]);
        assert_eq!(build_down(&one).unwrap().edge_count(), 0);
        assert_eq!(build_oracle(&one, Orientation::Down).unwrap().edge_count(), 0);
        assert!(hexagon_growth_tree(&one).unwrap().is_empty());

        let two = set(&[(0, 0), (2, 1)]);
        for o in [Orientation::Down, Orientation::Up] {
            assert_eq!(edges_of(&build_cone_minimum(&two, o).unwrap()), vec![(0, 1)]);
            assert_eq!(edges_of(&build_oracle(&two, o).unwrap()), vec![(0, 1)]);
        }
        assert_eq!(hexagon_growth_tree(&two).unwrap(), vec![(0, 1)]);
    }

    #[test]
    fn three_points_are_connected() {
        // all three pairs for a small triangle
        let ps = set(&[(0, 0), (2, 1), (-1, 3)]);
        let g = build_oracle(&ps, Orientation::Down).unwrap();
        assert!(g.edge_count() >= 2);
        assert!(g.graph().is_connected());
        assert_eq!(edges_of(&g), edges_of(&build_down(&ps).unwrap()));
    }

    #[test]
    fn rejects_degenerate_input() {
        let ps = set(&[(0, 0), (5, 0)]);
        assert_eq!(build_down(&ps).unwrap_err(), Error::NotGeneralPosition(0, 1));
        assert!(build_oracle(&ps, Orientation::Up).is_err());
    }

    #[test]
    fn mismatched_sets() {
        let a = build_down(&set(&[(0, 0), (2, 1)])).unwrap();
        let b = build_up(&set(&[(0, 0), (2, 3)])).unwrap();
        assert_eq!(union_graph(&a, &b).unwrap_err(), Error::MismatchedPointSets);
    }

    #[test]
    fn empty_union() {
        let ps = set(&[(0, 0)]);
        let d = build_down(&ps).unwrap();
        let u = build_up(&ps).unwrap();
        assert_eq!(union_graph(&d, &u).unwrap().edge_count(), 0);
    }

    #[test]
    fn hex_distance_matches_definition() {
        let ps = set(&[(0, 0), (2, 1), (-1, 3), (4, -3)]);
        let outside = [false, true, true, true];
        let h = hex_distance(&ps, 0, &outside);
        // (2,1) ∈ C1: √3 + 1/2; (-1,3) ∈ C̄3 (A2): 3; (4,-3) ∈ C3 (A5)? angle -36.9° ∈ A6 = C̄2
        assert_eq!(h.d1, Some(&ExactScalar::sqrt3() + &ExactScalar::from_ratio(1, 2)));
        let r = &ExactScalar::from_int(2).times_sqrt3() + &ExactScalar::from_ratio(3, 2);
        assert_eq!(h.d2, Some(ExactScalar::from_int(3).min(r)));
        assert_eq!(h.d(), h.d1.as_ref());
        let none = hex_distance(&ps, 0, &[false; 4]);
        assert_eq!(none.d(), None);
    }
}
