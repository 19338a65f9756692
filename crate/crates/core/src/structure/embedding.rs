//! Combinatorial embedding of a straight-line drawing: rotation system,
//! face walks and the outer face.

use std::cmp::Ordering;

use crate::error::{Error, Result};
use crate::geometry::{orient, Point};
use crate::graph::{Edge, TriGraph};
use crate::scalar::ExactScalar;

/// Rotation system plus the face walks it induces.
///
/// Faces are traced with the face on the left of every dart, so bounded
/// faces run counterclockwise and the outer face clockwise.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Embedding {
    /// Neighbors of each vertex in counterclockwise order.
    pub rotation: Vec<Vec<usize>>,
    /// Each face as the cyclic sequence of dart tails.
    pub faces: Vec<Vec<usize>>,
    pub outer_face: usize,
}

impl Embedding {
    pub fn face_count(&self) -> usize {
        self.faces.len()
    }

    pub fn outer_walk(&self) -> &[usize] {
        &self.faces[self.outer_face]
    }

    pub fn edge_count(&self) -> usize {
        self.rotation.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn vertex_count(&self) -> usize {
        self.rotation.len()
    }

    /// `V − E + F`; equals 2 for a connected plane graph.
    pub fn euler_characteristic(&self) -> i64 {
        self.vertex_count() as i64 - self.edge_count() as i64 + self.faces.len() as i64
    }

    /// Walks that are not the outer face.
    pub fn inner_faces(&self) -> impl Iterator<Item = &Vec<usize>> {
        self.faces
            .iter()
            .enumerate()
            .filter(move |(i, _)| *i != self.outer_face)
            .map(|(_, f)| f)
    }
}

/// Traces all faces of a rotation system (neighbors in counterclockwise order).
///
/// From dart `u → v` the walk continues with `v → w`, where `w` precedes
/// `u` in the counterclockwise order around `v`.
pub fn trace_faces(rotation: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let n = rotation.len();
    // dart index: (vertex, slot in rotation)
    let offsets: Vec<usize> = rotation
        .iter()
        .scan(0, |acc, r| {
            let o = *acc;
            *acc += r.len();
            Some(o)
        })
        .collect();
    let total: usize = rotation.iter().map(Vec::len).sum();
    let slot_of = |v: usize, u: usize| -> usize {
        rotation[v]
            .iter()
            .position(|&x| x == u)
            .expect("rotation system is not symmetric")
    };
    let mut seen = vec![false; total];
    let mut faces = Vec::new();
    for u in 0..n {
        for i in 0..rotation[u].len() {
            if seen[offsets[u] + i] {
                continue;
            }
            let mut walk = Vec::new();
            let (mut a, mut ai) = (u, i);
            while !seen[offsets[a] + ai] {
                seen[offsets[a] + ai] = true;
                walk.push(a);
                let b = rotation[a][ai];
                let deg = rotation[b].len();
                let back = slot_of(b, a);
                let next = (back + deg - 1) % deg;
                a = b;
                ai = next;
            }
            faces.push(walk);
        }
    }
    if faces.is_empty() {
        faces.push(Vec::new());
    }
    faces
}

/// Twice the signed area enclosed by a closed walk.
pub fn signed_area2(points: &[Point], walk: &[usize]) -> ExactScalar {
    let mut acc = ExactScalar::zero();
    for (i, &a) in walk.iter().enumerate() {
        let b = walk[(i + 1) % walk.len()];
        let (p, q) = (&points[a], &points[b]);
        acc += &(&(&p.x * &q.y) - &(&p.y * &q.x));
    }
    acc
}

/// Upper half-plane (including the +x ray) sorts before the lower half.
fn half(dx: &ExactScalar, dy: &ExactScalar) -> u8 {
    let sy = dy.signum();
    if sy > 0 || (sy == 0 && dx.signum() > 0) {
        0
    } else {
        1
    }
}

/// Counterclockwise angular comparison of `a − o` and `b − o` starting at
/// the +x direction; identical directions order by distance, then id.
pub fn angular_cmp(o: &Point, a: &Point, b: &Point) -> Ordering {
    let (ax, ay) = (&a.x - &o.x, &a.y - &o.y);
    let (bx, by) = (&b.x - &o.x, &b.y - &o.y);
    half(&ax, &ay)
        .cmp(&half(&bx, &by))
        .then_with(|| orient(o, b, a).cmp(&0))
        .then_with(|| {
            let la = &(&ax * &ax) + &(&ay * &ay);
            let lb = &(&bx * &bx) + &(&by * &by);
            la.cmp(&lb)
        })
        .then_with(|| a.id.cmp(&b.id))
}

fn on_segment(a: &Point, b: &Point, p: &Point) -> bool {
    // assumes collinear
    let (lo_x, hi_x) = if a.x <= b.x { (&a.x, &b.x) } else { (&b.x, &a.x) };
    let (lo_y, hi_y) = if a.y <= b.y { (&a.y, &b.y) } else { (&b.y, &a.y) };
    lo_x <= &p.x && &p.x <= hi_x && lo_y <= &p.y && &p.y <= hi_y
}

/// True iff the straight segments of `e` and `f` meet anywhere other than
/// at a shared endpoint.
pub fn segments_conflict(points: &[Point], e: Edge, f: Edge) -> bool {
    if e == f {
        return false;
    }
    let shared = [e.0, e.1].into_iter().find(|v| *v == f.0 || *v == f.1);
    if let Some(s) = shared {
        let a = if e.0 == s { e.1 } else { e.0 };
        let b = if f.0 == s { f.1 } else { f.0 };
        let (s, a, b) = (&points[s], &points[a], &points[b]);
        if orient(s, a, b) != 0 {
            return false;
        }
        // collinear: overlap iff both leave s in the same direction
        let dot = &(&(&a.x - &s.x) * &(&b.x - &s.x)) + &(&(&a.y - &s.y) * &(&b.y - &s.y));
        return dot.is_positive();
    }
    let (a, b, c, d) = (&points[e.0], &points[e.1], &points[f.0], &points[f.1]);
    let o1 = orient(a, b, c);
    let o2 = orient(a, b, d);
    let o3 = orient(c, d, a);
    let o4 = orient(c, d, b);
    if o1 * o2 < 0 && o3 * o4 < 0 {
        return true;
    }
    (o1 == 0 && on_segment(a, b, c))
        || (o2 == 0 && on_segment(a, b, d))
        || (o3 == 0 && on_segment(c, d, a))
        || (o4 == 0 && on_segment(c, d, b))
}

/// First pair of conflicting edge segments, if any. O(E²).
pub fn find_crossing(g: &TriGraph) -> Option<(Edge, Edge)> {
    let edges: Vec<Edge> = g.edges().collect();
    let pts = g.points().points();
    for (i, &e) in edges.iter().enumerate() {
        for &f in &edges[i + 1..] {
            if segments_conflict(pts, e, f) {
                return Some((e, f));
            }
        }
    }
    None
}

/// Brute-force segment-level planarity of the straight-line drawing.
pub fn check_planarity_by_segments(g: &TriGraph) -> bool {
    find_crossing(g).is_none()
}

/// Embeds the straight-line drawing of `g`. Fails if two edges cross.
pub fn embed(g: &TriGraph) -> Result<Embedding> {
    if let Some((e, f)) = find_crossing(g) {
        return Err(Error::EdgesCross(e, f));
    }
    Ok(embed_unchecked(g))
}

/// Embedding without the crossing check (for drawings known to be plane,
/// or to inspect non-plane drawings such as the Θ6 graph).
pub fn embed_unchecked(g: &TriGraph) -> Embedding {
    let pts = g.points().points();
    let rotation: Vec<Vec<usize>> = (0..g.len())
        .map(|v| {
            let mut r = g.graph().neighbors(v).to_vec();
            r.sort_by(|&a, &b| angular_cmp(&pts[v], &pts[a], &pts[b]));
            r
        })
        .collect();
    let faces = trace_faces(&rotation);
    let outer_face = if faces.len() == 1 {
        0
    } else {
        let areas: Vec<ExactScalar> = faces.iter().map(|f| signed_area2(pts, f)).collect();
        (0..faces.len())
            .min_by(|&a, &b| areas[a].cmp(&areas[b]).then(a.cmp(&b)))
            .expect("at least one face")
    };
    Embedding {
        rotation,
        faces,
        outer_face,
    }
}
