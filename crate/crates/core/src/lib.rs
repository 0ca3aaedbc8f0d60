//! Exact algorithms for perfect divisibility of small graphs: clique and
//! coloring invariants, hole and pattern search, perfection certificates,
//! good partitions, clique-cutset composition, and a counterexample
//! scanner over graph corpora.
//!
//! Graphs have at most 62 vertices and store adjacency as one `u64` row per
//! vertex. Procedures exponential in `n` are guarded by [`Limits`].

pub mod battery;
pub mod catalog;
pub mod conjectures;
pub mod decomposition;
pub mod divisibility;
pub mod error;
pub mod graph;
pub mod graph6;
pub mod hardness;
pub mod invariants;
pub mod limits;
pub mod patterns;
pub mod perfection;
mod table;

pub use decomposition::{CombinationReport, CutsetSplit};
pub use divisibility::{DivisibilityVerdict, ExtensionMode, GoodPartition, KPartition};
pub use error::{Error, Result};
pub use graph::{Graph, VertexSet, MAX_VERTICES};
pub use graph6::{parse_graph6, write_graph6};
pub use invariants::Coloring;
pub use limits::Limits;
pub use patterns::{Embedding, HoleCertificate, Parity};
pub use perfection::{ImperfectionWitness, PerfectionVerdict};
