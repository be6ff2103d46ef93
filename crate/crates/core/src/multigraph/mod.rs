//! Multigraphs and digraphs with minor operations, structural queries,
//! generators, canonical labeling and small-graph enumeration.

pub mod canon;
pub(crate) mod compact;
pub mod digraph;
pub mod enumerate;
pub mod generators;
pub mod graph;
pub mod io;
pub mod partitions;

pub use canon::{are_isomorphic, canonical_form, canonical_graph, CanonicalForm};
pub use digraph::Digraph;
pub use enumerate::{all_graphs, connected_graph_stream, connected_graphs, MAX_GENERATED_ORDER};
pub use graph::{gf2_rank, Edge, EdgeId, EdgeKind, Multigraph};
pub use partitions::{induced_partition_graph, partitions_stream, PartitionStream, SetPartition};
