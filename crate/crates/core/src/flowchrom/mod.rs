//! Flow and chromatic polynomials, their enumeration oracles and the
//! identities tying them to matroids and cuts.

mod checks;
mod chromatic;
mod flow;
mod frontier;
mod orient;

pub use checks::{
    duality_checks, flow_b_coefficients, flow_coefficient_check, flow_root_bound_check,
    jackson_cut_factorization_check, tutte_bivariate_chromatic_check, wakelin_multiplicity_check, JacksonCut,
};
pub use chromatic::{
    chi_tilde, chromatic_from_partitions, chromatic_poly, chromatic_subset_expansion, independent_partition_counts,
};
pub use frontier::{flow_poly_frontier, frontier_width, greedy_order, FRONTIER_WIDTH_LIMIT};
pub use flow::{bundle_flow, flow_count_enum, flow_count_enum_oriented, flow_poly, subset_flow_expansion, FLOW_ENUM_LIMIT};
pub use orient::{
    acyclic_counts_by_sources, acyclic_orientation_count, chi_tilde_enum, CHI_TILDE_VERTEX_LIMIT, ORIENTATION_EDGE_LIMIT,
    SOURCE_DP_VERTEX_LIMIT,
};
