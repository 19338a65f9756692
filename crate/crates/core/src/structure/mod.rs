//! Planar embedding, faces, block-cut decomposition and structural checks.

mod blockcut;
mod checks;
mod embedding;

pub use blockcut::{block_cut_tree, BlockCutTree};
pub use checks::{
    check_cut_vertex_structure, check_cut_vertices_on_outer_face, check_internal_triangulation, check_path_in_triangle,
    cut_vertex_split, degree_one_census, inner_face_profile, planar_edge_bound, sextant_occupancy, union_edge_bound,
};
pub use embedding::{
    angular_cmp, check_planarity_by_segments, embed, embed_unchecked, find_crossing, segments_conflict, signed_area2,
    trace_faces, Embedding,
};
