//! Edge-balanced index sets of finite simple graphs.
//!
//! An edge labeling assigns 0 or 1 to every edge; it is edge-friendly when
//! the two label classes differ in size by at most one. Each vertex takes the
//! majority label of its incident edges (ties stay unlabeled), and the index
//! of the labeling is the difference between the numbers of 0- and
//! 1-vertices. The edge-balanced index set of a graph collects the indices
//! of all its edge-friendly labelings.
//!
//! The crate provides:
//! - [`graph`]: graphs with a canonical edge indexing and named generators,
//! - [`products`]: lexicographic, direct and Cartesian products,
//! - [`labeling`]: labelings, induced vertex labels and switches,
//! - [`crown_construct`]: extremal labelings and switch schedules for the
//!   crown graph K_n × K_2,
//! - [`theory`]: closed-form bounds and parity predicates,
//! - [`ebi_search`]: an exhaustive, partitionable oracle,
//! - [`verify`]: a battery combining the above.

pub mod crown_construct;
pub mod dot;
pub mod ebi_search;
pub mod graph;
pub mod labeling;
pub mod products;
pub mod theory;
pub mod verify;

pub use crown_construct::{
    ebi_formula, labeling_for_index, max_labeling_even, max_labeling_odd, switch_schedule_even,
    switch_schedule_odd, ConstructError, SwitchPair, SwitchSchedule,
};
pub use ebi_search::{
    compute_ebi, enumerate_edge_friendly, find_strongly_edge_balanced, max_index_search, EbiReport,
    SearchConfig, SearchError, StrongBalance,
};
pub use graph::{complete_bipartite, complete_graph, crown_graph, Graph, GraphError};
pub use labeling::{EdgeLabeling, LabelCounts, LabelingError, PartialVertexLabeling, VertexLabel};
pub use products::{cartesian_product, direct_product, lexicographic_product, ProductKind};
pub use theory::{all_degrees_odd, lemma3_bound, theorem3_conditions, ProductParity, RegularBound};
