//! A weighted-multigraph toolkit around crossing-critical graph families:
//! generators for the 17-vertex base graph and its spine/wedge
//! generalizations, combinatorial drawing certificates with planarization
//! checks, executable reproductions of the supporting case analyses, and an
//! exact branch-and-bound crossing number solver for small instances.
//!
//! The `examples/` directory holds one runnable program per major
//! capability; the `crosscrit` binary exposes the same operations as thin
//! subcommands (`gen`, `table1`, `solve`, `verify`, `export`).

#![forbid(unsafe_code)]

pub mod drawing;
pub mod families;
pub mod graphcore;
pub mod manifest;
pub mod planarity;
pub mod proofcheck;
pub mod solver;
pub mod verify;

pub use drawing::{canonical_family_drawing, witness_drawing_template, Drawing};
pub use families::{
    build_g0, build_g13, build_g13_family, build_g13_k, build_k33, build_kochol, shrink_wedge,
    theorem3_construct, transform_degree3, transform_degree_split, FamilyMember, FamilyParams,
};
pub use graphcore::{
    are_isomorphic, zip_product, DegreeProfile, EdgeBundle, EdgeColor, EdgeId, GraphError,
    VertexId, WeightedMultigraph,
};
pub use planarity::{
    enumerate_small_embeddings, is_planar, kuratowski_subdivision, planar_embedding, Embedding,
};
pub use proofcheck::{
    bound_green_paths, bound_pairwise, bound_switching, enumerate_table1, lemma3_case_bounds,
    verify_path_catalog, BlueClassification, CaseRow,
};
pub use solver::{exact_cr, heuristic_upper, improve_below, skewness_lb, SolveResult, SolverBudget};
pub use verify::{
    verify_criticality, verify_g13_lowerbound_pipeline, verify_theorem3, verify_upper,
    CriticalityReport,
};
