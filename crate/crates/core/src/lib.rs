//! Distance invariants, extremal constructions and Wiener-reducing
//! transformations for unicyclic graphs, with exhaustive verification of the
//! lower bound on the Wiener index in terms of girth and matching number.

pub mod constructions;
pub mod enumeration;
pub mod graph;
pub mod io;
pub mod transforms;

pub use constructions::{
    build_cycle_assembly, build_star_like, construct_gstar, eval_decomposition, eval_gstar_formula_even,
    eval_gstar_formula_odd, eval_star_tree_formula, CanonicalFamilyParams, ConstructionError, DecompositionStats,
    ExtremalParams, StarlikeParams,
};
pub use enumeration::{
    enumerate_canonical_family, gen_rooted_trees, gen_unicyclic, min_wiener, verify_sweep, NecklaceCode,
    RootedTreeCode, SweepConfig, SweepOutcome, VerificationReport,
};
pub use graph::{
    bfs_distances, decompose_unicyclic, girth, identify_vertices, matching_number, vertex_transmission, wiener_index,
    CycleDecomposition, Graph, GraphError, Matching, RootedTree, Vertex,
};
pub use io::{
    emit_edgelist, emit_graph6, parse_edgelist, parse_graph6, GraphDocument, GraphFormat, ReportDocument, ReportRow,
};
pub use transforms::{
    branch_collapse_matched, branch_collapse_unmatched, branch_merge, has_matched_root_edge, pendant_absorb,
    pendant_switch, reduce_to_canonical, star_branch_fix, ReductionTrace, Rule, TransformError, TransformOutcome,
};
