//! Corpus and independent oracles shared by the integration tests.
#![allow(dead_code)]

use std::sync::Arc;

use num_rational::BigRational;
use num_traits::Signed;

use tripts_core::generators::{three_connected_family, tight_family};
use tripts_core::sweep::CorpusSpec;
use tripts_core::{Graph, PointSet, TriGraph};

pub struct Named {
    pub label: String,
    pub points: Arc<PointSet>,
}

/// Random sets plus both families and their drop variants.
pub fn corpus(random: usize, n_max: usize, large: usize) -> Vec<Named> {
    let mut out = Vec::new();
    for inst in CorpusSpec::new(random, 2..=n_max, 0xacce97).generate().unwrap() {
        out.push(Named {
            label: format!("random#{}", inst.index),
            points: inst.points,
        });
    }
    for inst in CorpusSpec::new(large, 100..=200, 0x1a49e).generate().unwrap() {
        out.push(Named {
            label: format!("large#{}", inst.index),
            points: inst.points,
        });
    }
    for m in 5..=10 {
        let t = tight_family(m).unwrap();
        let c = three_connected_family(m).unwrap();
        out.push(Named {
            label: format!("tight m={m} minus a0,b0"),
            points: Arc::new(t.without(&[0, 1]).unwrap()),
        });
        out.push(Named {
            label: format!("tight m={m}"),
            points: Arc::new(t),
        });
        out.push(Named {
            label: format!("3-connected m={m} minus a0"),
            points: Arc::new(c.without(&[0]).unwrap()),
        });
        out.push(Named {
            label: format!("3-connected m={m} minus a0,b0"),
            points: Arc::new(c.without(&[0, 1]).unwrap()),
        });
        out.push(Named {
            label: format!("3-connected m={m}"),
            points: Arc::new(c),
        });
    }
    out
}

fn rational_xy(ps: &PointSet, i: usize) -> (BigRational, BigRational) {
    let p = ps.point(i);
    assert!(p.x.is_rational() && p.y.is_rational(), "oracle needs rational points");
    (p.x.rational_part().to_big(), p.y.rational_part().to_big())
}

fn orient(a: &(BigRational, BigRational), b: &(BigRational, BigRational), c: &(BigRational, BigRational)) -> i32 {
    let d = (&b.0 - &a.0) * (&c.1 - &a.1) - (&b.1 - &a.1) * (&c.0 - &a.0);
    if d.is_positive() {
        1
    } else if d.is_negative() {
        -1
    } else {
        0
    }
}

/// Counts pairs of edges without a shared endpoint whose segments meet.
/// Collinear overlaps count as meeting.
pub fn crossing_pairs(g: &TriGraph) -> usize {
    let ps = g.points();
    let xy: Vec<_> = (0..ps.len()).map(|i| rational_xy(ps, i)).collect();
    let edges: Vec<_> = g.edges().collect();
    let on_segment =
        |a: &(BigRational, BigRational), b: &(BigRational, BigRational), c: &(BigRational, BigRational)| {
            let (lo_x, hi_x) = if a.0 <= b.0 { (&a.0, &b.0) } else { (&b.0, &a.0) };
            let (lo_y, hi_y) = if a.1 <= b.1 { (&a.1, &b.1) } else { (&b.1, &a.1) };
            lo_x <= &c.0 && &c.0 <= hi_x && lo_y <= &c.1 && &c.1 <= hi_y
        };
    let mut count = 0;
    for (i, &(a, b)) in edges.iter().enumerate() {
        for &(c, d) in &edges[i + 1..] {
            if a == c || a == d || b == c || b == d {
                continue;
            }
            let (pa, pb, pc, pd) = (&xy[a], &xy[b], &xy[c], &xy[d]);
            let (o1, o2, o3, o4) = (
                orient(pa, pb, pc),
                orient(pa, pb, pd),
                orient(pc, pd, pa),
                orient(pc, pd, pb),
            );
            let proper = o1 * o2 < 0 && o3 * o4 < 0;
            let touching = (o1 == 0 && on_segment(pa, pb, pc))
                || (o2 == 0 && on_segment(pa, pb, pd))
                || (o3 == 0 && on_segment(pc, pd, pa))
                || (o4 == 0 && on_segment(pc, pd, pb));
            if proper || touching {
                count += 1;
            }
        }
    }
    count
}

/// Connectivity after deleting `removed`, by depth-first search.
fn connected_without(g: &Graph, removed: &[usize]) -> bool {
    let n = g.vertex_count();
    let mut seen = vec![false; n];
    for &r in removed {
        seen[r] = true;
    }
    let Some(start) = (0..n).find(|&v| !seen[v]) else {
        return true;
    };
    let mut stack = vec![start];
    seen[start] = true;
    while let Some(v) = stack.pop() {
        for &w in g.neighbors(v) {
            if !seen[w] {
                seen[w] = true;
                stack.push(w);
            }
        }
    }
    seen.iter().all(|&s| s)
}

/// 3-connectivity by deleting every vertex pair.
pub fn three_connected_by_removal(g: &Graph) -> bool {
    let n = g.vertex_count();
    if n < 4 || !connected_without(g, &[]) {
        return false;
    }
    (0..n).all(|u| connected_without(g, &[u]) && (u + 1..n).all(|v| connected_without(g, &[u, v])))
}

/// Down-graph edges straight from the definition: `p`, `q` are adjacent
/// iff no third point lies in their smallest closed down triangle. The
/// triangle is the set where `y`, `−(√3x + y)` and `√3x − y` stay below the
/// larger of the two endpoint values; each comparison is a sign test on
/// `a + b√3` decided over the rationals.
pub fn down_edges_from_definition(ps: &PointSet) -> Vec<(usize, usize)> {
    let n = ps.len();
    let xy: Vec<_> = (0..n).map(|i| rational_xy(ps, i)).collect();
    // sign of a + b√3
    let sign = |a: &BigRational, b: &BigRational| -> i32 {
        let sa = if a.is_positive() {
            1
        } else if a.is_negative() {
            -1
        } else {
            0
        };
        let sb = if b.is_positive() {
            1
        } else if b.is_negative() {
            -1
        } else {
            0
        };
        if sa == sb || sb == 0 {
            return sa;
        }
        if sa == 0 {
            return sb;
        }
        let three = BigRational::from_integer(3.into());
        let (a2, b2) = (a * a, b * b * three);
        if a2 > b2 {
            sa
        } else if a2 < b2 {
            sb
        } else {
            0
        }
    };
    // support coordinates as pairs (rational, coefficient of √3), up to a
    // common positive factor: y, −(√3x + y), √3x − y
    let f = |i: usize| -> [(BigRational, BigRational); 3] {
        let (x, y) = &xy[i];
        [
            (y.clone(), BigRational::from_integer(0.into())),
            (-y.clone(), -x.clone()),
            (-y.clone(), x.clone()),
        ]
    };
    let fs: Vec<_> = (0..n).map(f).collect();
    let le = |a: &(BigRational, BigRational), b: &(BigRational, BigRational)| sign(&(&a.0 - &b.0), &(&a.1 - &b.1)) <= 0;
    let mut out = Vec::new();
    for p in 0..n {
        for q in p + 1..n {
            let t: Vec<&(BigRational, BigRational)> = (0..3)
                .map(|k| if le(&fs[p][k], &fs[q][k]) { &fs[q][k] } else { &fs[p][k] })
                .collect();
            let blocked = (0..n).any(|r| r != p && r != q && (0..3).all(|k| le(&fs[r][k], t[k])));
            if !blocked {
                out.push((p, q));
            }
        }
    }
    out
}
