//! The battery of structural checks run by `tripts analyze` and the corpus
//! sweeps. Each check yields one [`CheckOutcome`].

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use crate::augment::{augment, verify_augmented};
use crate::construct::{build_down, build_oracle, build_up, hexagon_growth_tree_with, intersect_graph, union_graph};
use crate::error::{Error, Result};
use crate::geometry::{support_values, Containment, FixedTriangle, Orientation, PointSet};
use crate::graph::{Flavor, TriGraph};
use crate::matching::{check_nishizeki, down_graph_matching_bound, half_floor, max_matching};
use crate::report::{CheckOutcome, Status};
use crate::structure::{
    block_cut_tree, check_cut_vertex_structure, check_cut_vertices_on_outer_face, check_internal_triangulation,
    check_planarity_by_segments, degree_one_census, embed, inner_face_profile, union_edge_bound,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Check {
    Oracle,
    Planarity,
    Paths,
    DegreeOne,
    Triangulation,
    OuterCutVertices,
    CutVertexSplit,
    BcPath,
    EdgeBound,
    Intersection,
    Matching,
    Augmentation,
    UnionFaces,
    Conjecture,
}

impl Check {
    pub const ALL: [Check; 14] = [
        Check::Oracle,
        Check::Planarity,
        Check::Paths,
        Check::DegreeOne,
        Check::Triangulation,
        Check::OuterCutVertices,
        Check::CutVertexSplit,
        Check::BcPath,
        Check::EdgeBound,
        Check::Intersection,
        Check::Matching,
        Check::Augmentation,
        Check::UnionFaces,
        Check::Conjecture,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Check::Oracle => "oracle",
            Check::Planarity => "planarity",
            Check::Paths => "paths",
            Check::DegreeOne => "degree-one",
            Check::Triangulation => "triangulation",
            Check::OuterCutVertices => "outer-cut-vertices",
            Check::CutVertexSplit => "cut-vertex-split",
            Check::BcPath => "bc-path",
            Check::EdgeBound => "edge-bound",
            Check::Intersection => "intersection",
            Check::Matching => "matching",
            Check::Augmentation => "augmentation",
            Check::UnionFaces => "union-faces",
            Check::Conjecture => "conjecture",
        }
    }

    /// Parses `all` or a comma-separated list of check names.
    pub fn parse_list(s: &str) -> Result<Vec<Check>> {
        if s.trim() == "all" {
            return Ok(Check::ALL.to_vec());
        }
        let mut v: Vec<Check> = s.split(',').map(|t| t.trim().parse()).collect::<Result<_>>()?;
        v.sort_unstable();
        v.dedup();
        Ok(v)
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Check {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Check::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown check {s:?}")))
    }
}

/// Options for [`analyze`].
#[derive(Clone, Debug)]
pub struct AnalyzeOptions {
    pub checks: Vec<Check>,
    /// Half graphs that the per-half checks run on.
    pub halves: Vec<Flavor>,
    /// Run the O(n³) construction oracle.
    pub oracle: bool,
    /// Above this size the path check samples pairs instead of testing all.
    pub all_pairs_limit: usize,
}

impl Default for AnalyzeOptions {
    fn default() -> Self {
        Self {
            checks: Check::ALL.to_vec(),
            halves: vec![Flavor::Down, Flavor::Up],
            oracle: true,
            all_pairs_limit: 100,
        }
    }
}

/// Graphs shared by all checks.
pub struct Built {
    pub down: TriGraph,
    pub up: TriGraph,
    pub union: TriGraph,
    pub intersection: TriGraph,
}

impl Built {
    pub fn new(ps: &Arc<PointSet>) -> Result<Self> {
        let down = build_down(ps)?;
        let up = build_up(ps)?;
        let union = union_graph(&down, &up)?;
        let intersection = intersect_graph(&down, &up)?;
        Ok(Self {
            down,
            up,
            union,
            intersection,
        })
    }

    pub fn get(&self, flavor: Flavor) -> &TriGraph {
        match flavor {
            Flavor::Down => &self.down,
            Flavor::Up => &self.up,
            Flavor::Union => &self.union,
            Flavor::Intersection => &self.intersection,
        }
    }
}

fn orientation_of(f: Flavor) -> Orientation {
    if f == Flavor::Up {
        Orientation::Up
    } else {
        Orientation::Down
    }
}

/// Pairs checked by the path-in-triangle test: all pairs up to `limit`
/// points, otherwise every pair `(i, j)` with `j − i` in a fixed stride set.
fn path_pairs(n: usize, limit: usize) -> Vec<(usize, usize)> {
    if n <= limit {
        return (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    }
    let strides = [1, 2, 3, 5, 8, 13, 21, 34, 55, 89];
    (0..n)
        .flat_map(|i| strides.iter().map(move |s| (i, i + s)))
        .filter(|&(_, j)| j < n)
        .collect()
}

/// Counts the pairs `(p, q)` with no `p → q` path inside the closed
/// smallest triangle of the graph's orientation.
pub fn path_in_triangle_failures(g: &TriGraph, pairs: &[(usize, usize)]) -> usize {
    let o = orientation_of(g.flavor());
    let supports: Vec<_> = g.points().points().iter().map(|p| support_values(p, o)).collect();
    pairs
        .iter()
        .filter(|&&(p, q)| {
            let t = FixedTriangle::from_supports(&supports[p], &supports[q], o);
            g.graph()
                .bfs_path(p, q, |v| t.contains_supports(&supports[v], Containment::Closed))
                .is_none()
        })
        .count()
}

/// Runs the selected checks. Fails only on invalid input.
pub fn analyze(ps: &Arc<PointSet>, opts: &AnalyzeOptions) -> Result<Vec<CheckOutcome>> {
    ps.require_general_position()?;
    let built = Built::new(ps)?;
    let n = ps.len();
    let halves: Vec<&TriGraph> = opts.halves.iter().map(|&f| built.get(f)).collect();
    let mut out = Vec::new();
    for &check in &opts.checks {
        let name = check.name();
        let outcome = match check {
            Check::Oracle => {
                if opts.oracle {
                    let mut ok = true;
                    for g in &halves {
                        let o = build_oracle(ps, orientation_of(g.flavor()))?;
                        ok &= o.graph() == g.graph();
                    }
                    CheckOutcome::new(name, Status::from_bool(ok))
                } else {
                    CheckOutcome::new(name, Status::Info).with("skipped", "true")
                }
            }
            Check::Planarity => {
                let mut ok = true;
                let mut c = CheckOutcome::new(name, Status::Pass);
                for g in &halves {
                    let segments = check_planarity_by_segments(g);
                    let euler = embed(g).map(|e| e.euler_characteristic());
                    ok &= segments && euler == Ok(2);
                    c = c.with(
                        &format!("{}.euler", g.flavor()),
                        euler.map_or("-".into(), |e| e.to_string()),
                    );
                }
                c.status = Status::from_bool(ok);
                c
            }
            Check::Paths => {
                let pairs = path_pairs(n, opts.all_pairs_limit);
                let mut c = CheckOutcome::new(name, Status::Pass).with("pairs", pairs.len());
                let mut ok = true;
                for g in &halves {
                    let fails = path_in_triangle_failures(g, &pairs);
                    ok &= fails == 0 && g.graph().is_connected();
                    c = c.with(&format!("{}.failures", g.flavor()), fails);
                }
                c.status = Status::from_bool(ok);
                c
            }
            Check::DegreeOne => {
                let mut c = CheckOutcome::new(name, Status::Pass);
                let mut ok = true;
                for g in &halves {
                    let k = degree_one_census(g).len();
                    ok &= n < 3 || k <= 3;
                    c = c.with(g.flavor().as_str(), k);
                }
                let k = degree_one_census(&built.union).len();
                ok &= n < 3 || k <= 2;
                c = c.with("union", k);
                c.status = Status::from_bool(ok);
                c
            }
            Check::Triangulation => {
                let mut c = CheckOutcome::new(name, Status::Pass);
                let mut ok = true;
                for g in &halves {
                    let e = embed(g)?;
                    let t = check_internal_triangulation(&e);
                    ok &= t;
                    c = c.with(&format!("{}.inner_faces", g.flavor()), e.face_count() - 1);
                }
                c.status = Status::from_bool(ok);
                c
            }
            Check::OuterCutVertices => {
                let mut c = CheckOutcome::new(name, Status::Pass);
                let mut ok = true;
                for g in &halves {
                    let e = embed(g)?;
                    let bc = block_cut_tree(g.graph())?;
                    ok &= check_cut_vertices_on_outer_face(&e, &bc);
                    c = c.with(&format!("{}.cut_vertices", g.flavor()), bc.cut_vertices.len());
                }
                c.status = Status::from_bool(ok);
                c
            }
            Check::CutVertexSplit => {
                let bc = block_cut_tree(built.union.graph())?;
                CheckOutcome::new(name, Status::from_bool(check_cut_vertex_structure(&built.union, &bc)))
                    .with("cut_vertices", bc.cut_vertices.len())
            }
            Check::BcPath => {
                let bc = block_cut_tree(built.union.graph())?;
                let (blocks, cuts) = bc.tree_size();
                CheckOutcome::new(name, Status::from_bool(bc.is_path()))
                    .with("blocks", blocks)
                    .with("cut_vertices", cuts)
            }
            Check::EdgeBound => {
                let e = built.union.edge_count();
                let bound = union_edge_bound(n);
                CheckOutcome::new(name, Status::from_bool(bound.is_none_or(|b| e <= b)))
                    .with("edges", e)
                    .with("bound", bound.map_or("-".into(), |b| b.to_string()))
            }
            Check::Intersection => {
                let i = &built.intersection;
                let tree = hexagon_growth_tree_with(ps, &built.down, &built.up);
                let tree_ok = tree
                    .as_ref()
                    .is_ok_and(|t| t.len() + 1 == n && t.iter().all(|&(u, v)| i.has_edge(u, v)));
                let ok = i.graph().is_connected() && i.edge_count() + 1 >= n && tree_ok;
                CheckOutcome::new(name, Status::from_bool(ok))
                    .with("edges", i.edge_count())
                    .with("tree_edges", tree.map_or(0, |t| t.len()))
            }
            Check::Matching => {
                let bound = down_graph_matching_bound(n);
                let mut c = CheckOutcome::new(name, Status::Pass).with("bound", bound);
                let mut ok = true;
                for g in &halves {
                    let m = max_matching(g.graph()).size();
                    ok &= m >= bound;
                    c = c.with(&format!("{}.size", g.flavor()), m);
                }
                c.status = Status::from_bool(ok);
                c
            }
            Check::Augmentation => {
                if n < 3 {
                    CheckOutcome::new(name, Status::Info).with("skipped", "n<3")
                } else {
                    let e = embed(&built.down)?;
                    let a = augment(&built.down, &e)?;
                    let r = verify_augmented(&a, &e);
                    let m_aug = max_matching(&a.graph);
                    let m_base = max_matching(built.down.graph()).size();
                    let transferred = a.transfer_matching(&m_aug);
                    let transfer_ok = transferred.is_valid_in(built.down.graph())
                        && transferred.size() + a.added_vertices.len() >= m_aug.size()
                        && m_base >= transferred.size();
                    let nishi = check_nishizeki(&a.graph);
                    let nishi_ok = nishi.as_ref().is_ok_and(|r| r.holds());
                    CheckOutcome::new(name, Status::from_bool(r.passed() && transfer_ok && nishi_ok))
                        .with("added", a.added_vertices.len())
                        .with("leaves", a.leaves.len())
                        .with(
                            "verify",
                            if r.passed() {
                                "ok".to_string()
                            } else {
                                r.failures().join(",")
                            },
                        )
                        .with("augmented_matching", m_aug.size())
                        .with(
                            "nishizeki_bound",
                            nishi.map_or_else(|e| e.to_string(), |r| r.bound.to_string()),
                        )
                }
            }
            Check::UnionFaces => {
                // not asserted: the union graph is usually not plane
                let c = CheckOutcome::new(name, Status::Info);
                match embed(&built.union) {
                    Ok(e) => {
                        let profile = inner_face_profile(&e);
                        let s: Vec<String> = profile.iter().map(usize::to_string).collect();
                        c.with("plane", true).with("inner_faces", s.join(","))
                    }
                    Err(_) => c.with("plane", false),
                }
            }
            Check::Conjecture => {
                let m = max_matching(built.union.graph()).size();
                CheckOutcome::new(name, Status::Info)
                    .with("union_matching", m)
                    .with("half_floor", half_floor(n))
            }
        };
        out.push(outcome);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_checks() {
        assert_eq!(Check::parse_list("all").unwrap().len(), Check::ALL.len());
        assert_eq!(
            Check::parse_list("matching,oracle,matching").unwrap(),
            vec![Check::Oracle, Check::Matching]
        );
        assert!(Check::parse_list("nope").is_err());
        for c in Check::ALL {
            assert_eq!(c.name().parse::<Check>().unwrap(), c);
        }
    }

    #[test]
    fn all_checks_pass_on_small_set() {
        let ps =
            Arc::new(PointSet::from_integers(&[(0, 0), (5, 1), (2, 7), (-3, 4), (8, 9), (1, -6), (-7, -2)]).unwrap());
        let out = analyze(&ps, &AnalyzeOptions::default()).unwrap();
        assert_eq!(out.len(), Check::ALL.len());
        for c in &out {
            assert_ne!(c.status, Status::Fail, "{c:?}");
        }
    }

    #[test]
    fn sampled_pairs() {
        assert_eq!(path_pairs(4, 10).len(), 6);
        let p = path_pairs(200, 100);
        assert!(p.iter().all(|&(i, j)| i < j && j < 200));
        assert!(p.len() < 2000);
    }
}
