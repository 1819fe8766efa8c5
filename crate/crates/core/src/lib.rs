//! Hosoya polynomials, edge-Hosoya polynomials and the Wiener / hyper-Wiener
//! index family of connected graphs, computed exactly.
//!
//! * [`graph`]: validated simple connected graphs, BFS distances, line graphs.
//! * [`edgelist`]: the plain-text edge-list format.
//! * [`polynomial`]: dense big-integer polynomials.
//! * [`indices`]: `H`, `H_e`, `W`, `W_e`, `WW`, `WW_e` by direct sums and by
//!   derivatives of the polynomials.
//! * [`tree`]: the tree-only shortcuts from vertex to edge descriptors, random
//!   Prüfer trees and a verification harness.
//! * [`dendrimer`]: regular dendrimers and closed forms for their edge
//!   descriptors.
//! * [`cli`]: the `hosoya` command-line tool.
//!
//! ```
//! use hosoya::{edgelist::parse_edge_list, indices::IndexReport};
//!
//! let star = parse_edge_list("c x\nc y\nc z\n").unwrap();
//! let report = IndexReport::compute(&star);
//! assert_eq!(report.hosoya.to_string(), "4 + 3*x + 3*x^2");
//! assert_eq!(report.wiener, 9.into());
//! assert!(report.verify().is_empty());
//! ```

pub mod cli;
pub mod dendrimer;
pub mod edgelist;
pub mod graph;
pub mod indices;
pub mod polynomial;
pub mod tree;

pub use graph::{DistanceDistribution, Edge, Graph, GraphError};
pub use indices::IndexReport;
pub use polynomial::Polynomial;
pub use tree::Tree;
