//! Rainbow 2-connected edge colorings of 2-connected graphs with at most `n`
//! colors, built by induction along an ear decomposition, plus an exhaustive
//! verifier and a brute-force oracle for small graphs.
//!
//! ```
//! use rc2::{color_rc2, generate_family, is_rainbow_two_connected, Family};
//!
//! let g = generate_family(&Family::Wheel(6), 0).unwrap();
//! let result = color_rc2(&g).unwrap();
//! assert!(result.color_count() <= 5);
//! assert!(is_rainbow_two_connected(&g, &result.coloring).passed);
//! ```

pub mod coloring;
pub mod ear;
pub mod error;
pub mod fan;
pub mod generators;
pub mod graph;
pub mod minimalize;
pub mod oracle;
pub mod verify;

pub use coloring::{
    color_base_subgraph, color_cycle, color_hamiltonian_with_chord, color_minimally_two_connected,
    color_rc2, extend_with_ear, to_dot, Color, ColoringJson, ColoringResult, EdgeColoring,
    Extension, Strategy, TraceStep, UniqueColorMap,
};
pub use ear::{
    build_ear_decomposition, build_ear_decomposition_with_stats, check_lemma1_conditions,
    ear_through_vertex, initial_cycle_with_repair, select_base_labeling, BaseLabeling,
    EarDecomposition, RepairStats,
};
pub use error::{Error, Result};
pub use fan::two_fan_to_subgraph;
pub use generators::{generate_family, Family};
pub use graph::{
    degree_two_set, is_cycle_graph, is_two_connected, parse_edge_list, Edge, Graph, GraphJson,
    Path, Vertex, VertexSet,
};
pub use minimalize::{
    bollobas_structure_check, is_minimally_two_connected, spanning_minimally_two_connected,
};
pub use oracle::{
    brute_force_rc2, census_small_graphs, Census, CensusRow, Rc2Bound, DEFAULT_BUDGET,
};
pub use verify::{
    check_fan, check_induction_invariants, check_induction_invariants_with, check_linkage,
    check_unique_color_map, enumerate_rainbow_paths, has_two_internally_disjoint_rainbow_paths,
    is_rainbow_two_connected, is_rainbow_two_connected_with, InductionReport, Property,
    VerificationReport, VerifyLimits,
};
