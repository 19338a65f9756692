//! Fixed-orientation empty-triangle graphs on planar point sets.
//!
//! Two points are joined in the down graph (`G▽`) when some downward
//! equilateral triangle with a horizontal side contains exactly those two
//! points; the up graph (`G△`) uses upward triangles, and their union is the
//! Θ6 graph. Everything here is computed with exact arithmetic in Q[√3]:
//!
//! * [`scalar`], [`geometry`]: numbers, cones, projections, triangles;
//! * [`construct`]: cone-minimum and brute-force graph construction,
//!   hexagon-growth spanning tree of `G▽ ∩ G△`;
//! * [`structure`]: straight-line embedding, faces, block-cut tree and the
//!   structural checks (planarity, leaves, internal triangulation, ...);
//! * [`matching`]: blossom maximum matching, brute-force oracle, bounds;
//! * [`augment`]: the planar 2-connected min-degree-3 extension of `G▽`;
//! * [`generators`]: random sets and the tight / 3-connected families;
//! * [`io`], [`render`], [`report`], [`sweep`]: file formats, SVG, reports
//!   and corpus / conjecture sweeps used by the CLI.

pub mod analysis;
pub mod augment;
pub mod construct;
pub mod error;
pub mod generators;
pub mod geometry;
pub mod graph;
pub mod io;
pub mod matching;
pub mod rational;
pub mod render;
pub mod report;
pub mod scalar;
pub mod structure;
pub mod sweep;

pub use augment::{augment, verify_augmented, AugmentReport, AugmentedGraph};
pub use construct::{
    build_cone_minimum, build_down, build_flavor, build_oracle, build_up, hexagon_growth_tree, intersect_graph,
    union_graph, HexDistance,
};
pub use error::{Error, Result};
pub use geometry::{
    classify_cone, projection_length, smallest_triangle, triangle_contains, ConeIndex, ConeKind, Containment,
    FixedTriangle, Orientation, Point, PointSet, Sextant,
};
pub use graph::{Edge, Flavor, Graph, TriGraph};
pub use matching::{brute_force_matching, check_down_matching_bound, check_nishizeki, max_matching, Matching};
pub use scalar::ExactScalar;
pub use structure::{BlockCutTree, Embedding};
