//! Interval and continuous edge colorings of multigraphs.
//!
//! An edge coloring of `G` with colors `1..=t` is *interval on* `R ⊆ V(G)`
//! when it is proper, uses every color, and the colors at each vertex of
//! `R` form a run of consecutive integers. It is *continuous on* `R` when
//! that run at every `x ∈ R` is exactly `1..=d(x)`.
//!
//! The crate holds the graph model and file formats, validators, the
//! constructive procedures (`algorithms`), an exhaustive backtracking
//! oracle with corpus enumeration (`oracle`), the list-coloring reduction
//! (`gadgets`), and the `imcg` command-line front end (`cli`).

pub mod algorithms;
pub mod cli;
pub mod coloring;
mod error;
pub mod format;
pub mod gadgets;
pub mod graph;
pub mod oracle;

pub use coloring::{Color, EdgeColoring, Spectrum, VertexSet, Violation};
pub use error::{Error, Result};
pub use graph::{Bipartition, EdgeId, Multigraph, Part, VertexId};
pub use oracle::{OracleResult, SearchLimits, Verdict};
