//! SVG drawings of point sets, graphs, matchings and empty triangles.

use std::fmt::Write as _;

use crate::geometry::{Containment, FixedTriangle, Orientation, PointSet};
use crate::graph::{Edge, Flavor, TriGraph};
use crate::matching::Matching;

#[derive(Clone, Debug)]
pub struct RenderOptions {
    /// Width and height of the drawing area in pixels.
    pub size: f64,
    pub margin: f64,
    pub point_radius: f64,
    pub labels: bool,
    /// Shade the smallest empty triangle of every edge.
    pub show_triangles: bool,
}

impl Default for RenderOptions {
    fn default() -> Self {
        Self {
            size: 800.0,
            margin: 40.0,
            point_radius: 5.0,
            labels: true,
            show_triangles: false,
        }
    }
}

/// True iff the smallest triangle of `p`, `q` holds no other point.
fn is_empty_triangle(ps: &PointSet, t: &FixedTriangle, p: usize, q: usize) -> bool {
    ps.points()
        .iter()
        .all(|v| v.id == p || v.id == q || !t.contains(v, Containment::Closed))
}

/// The empty triangles witnessing each edge: one per edge for a half graph,
/// and every empty orientation for union and intersection graphs.
pub fn witness_triangles(g: &TriGraph) -> Vec<(Edge, FixedTriangle)> {
    let ps = g.points();
    let orientations: &[Orientation] = match g.flavor() {
        Flavor::Down => &[Orientation::Down],
        Flavor::Up => &[Orientation::Up],
        Flavor::Union | Flavor::Intersection => &[Orientation::Down, Orientation::Up],
    };
    let mut out = Vec::new();
    for (u, v) in g.edges() {
        for &o in orientations {
            let t = FixedTriangle::smallest(ps.point(u), ps.point(v), o);
            if is_empty_triangle(ps, &t, u, v) {
                out.push(((u, v), t));
            }
        }
    }
    out
}

/// Affine map from exact coordinates to the SVG canvas.
struct Viewport {
    min_x: f64,
    max_y: f64,
    scale: f64,
    margin: f64,
}

impl Viewport {
    fn fit(xy: &[(f64, f64)], opts: &RenderOptions) -> Self {
        let (mut min_x, mut max_x) = (f64::INFINITY, f64::NEG_INFINITY);
        let (mut min_y, mut max_y) = (f64::INFINITY, f64::NEG_INFINITY);
        for &(x, y) in xy {
            min_x = min_x.min(x);
            max_x = max_x.max(x);
            min_y = min_y.min(y);
            max_y = max_y.max(y);
        }
        if xy.is_empty() {
            (min_x, max_x, min_y, max_y) = (0.0, 1.0, 0.0, 1.0);
        }
        let span = (max_x - min_x).max(max_y - min_y);
        let inner = opts.size - 2.0 * opts.margin;
        let scale = if span > 0.0 { inner / span } else { 1.0 };
        Self {
            min_x,
            max_y,
            scale,
            margin: opts.margin,
        }
    }

    // SVG y grows downwards, so y is flipped: a down triangle renders
    // with its apex at the bottom of the picture.
    fn map(&self, (x, y): (f64, f64)) -> (f64, f64) {
        (
            self.margin + (x - self.min_x) * self.scale,
            self.margin + (self.max_y - y) * self.scale,
        )
    }
}

/// Renders `g` with optional matching highlighted.
///
/// Classes: `point`, `label`, `edge`, `matching` (thick edges) and
/// `triangle`, so drawings are easy to inspect or restyle.
pub fn render_svg(g: &TriGraph, matching: Option<&Matching>, opts: &RenderOptions) -> String {
    let ps = g.points();
    let xy: Vec<(f64, f64)> = ps.points().iter().map(|p| (p.x.to_f64(), p.y.to_f64())).collect();
    let triangles = if opts.show_triangles {
        witness_triangles(g)
    } else {
        Vec::new()
    };
    // triangles may reach outside the hull of the points
    let mut extent = xy.clone();
    for (_, t) in &triangles {
        extent.extend(t.corners().iter().map(|(x, y)| (x.to_f64(), y.to_f64())));
    }
    let vp = Viewport::fit(&extent, opts);
    let at = |i: usize| vp.map(xy[i]);

    let mut s = String::new();
    let w = |s: &mut String, line: String| {
        s.push_str(&line);
        s.push('\n');
    };
    w(
        &mut s,
        format!(
            r#"<svg xmlns="http://www.w3.org/2000/svg" width="{0}" height="{0}" viewBox="0 0 {0} {0}">"#,
            opts.size
        ),
    );
    w(
        &mut s,
        format!(
            "<!-- {} graph, {} points, {} edges -->",
            g.flavor(),
            g.len(),
            g.edge_count()
        ),
    );
    w(&mut s, r#"<rect width="100%" height="100%" fill="white"/>"#.to_string());

    for ((u, v), t) in &triangles {
        let pts: Vec<String> = t
            .corners()
            .iter()
            .map(|(x, y)| {
                let (px, py) = vp.map((x.to_f64(), y.to_f64()));
                format!("{px:.2},{py:.2}")
            })
            .collect();
        let fill = match t.orientation {
            Orientation::Down => "#4a90d9",
            Orientation::Up => "#d9904a",
        };
        w(
            &mut s,
            format!(
                r#"<polygon class="triangle" data-edge="{u} {v}" points="{}" fill="{fill}" fill-opacity="0.12" stroke="{fill}" stroke-opacity="0.4" stroke-width="0.5"/>"#,
                pts.join(" ")
            ),
        );
    }

    let matched: Vec<Edge> = matching.map(|m| m.edges.clone()).unwrap_or_default();
    for (u, v) in g.edges() {
        let ((x1, y1), (x2, y2)) = (at(u), at(v));
        let (class, width) = if matched.contains(&(u, v)) {
            ("matching", 4.0)
        } else {
            ("edge", 1.0)
        };
        w(
            &mut s,
            format!(
                r#"<line class="{class}" x1="{x1:.2}" y1="{y1:.2}" x2="{x2:.2}" y2="{y2:.2}" stroke="black" stroke-width="{width}"/>"#
            ),
        );
    }

    for i in 0..ps.len() {
        let (cx, cy) = at(i);
        w(
            &mut s,
            format!(
                r#"<circle class="point" cx="{cx:.2}" cy="{cy:.2}" r="{}" fill="white" stroke="black"/>"#,
                opts.point_radius
            ),
        );
        if opts.labels {
            let mut label = String::new();
            write!(
                label,
                r#"<text class="label" x="{:.2}" y="{:.2}" font-size="11" font-family="sans-serif">{i}</text>"#,
                cx + opts.point_radius + 1.0,
                cy - opts.point_radius - 1.0
            )
            .expect("writing to a String");
            w(&mut s, label);
        }
    }
    s.push_str("</svg>\n");
    s
}
