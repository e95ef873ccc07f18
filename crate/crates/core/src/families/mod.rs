//! Results for special graph classes.

mod conjecture;
mod corona;
mod ke;
mod trees;
mod unicyclic;

pub use conjecture::{conjecture_search, edge_alpha_critical, Counterexample, FamilySpec, SearchReport};
pub use corona::{
    bipartite_core_check, corona_bipartite_check, corona_k1_split, corona_k2_check, girth_corollary_check,
    in_girth_corollary_class, CoronaK1Split,
};
pub use ke::{is_alpha_k2, ke_omega_bound_check, ke_shed_conditions, ke_shed_equivalence_check, ke_two_disjoint_check};
pub use trees::{tree_shed_bounds_check, tree_shed_structure_check};
pub use unicyclic::{
    unicyclic_alpha, unicyclic_alpha_mu_range_check, unicyclic_core_union_check, unicyclic_cycle_share_check,
    unicyclic_decompose, unicyclic_subtree_trace_check, unicyclic_two_disjoint_mis, HangingTree,
    UnicyclicDecomposition,
};
