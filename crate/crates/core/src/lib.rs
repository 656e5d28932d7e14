//! Bandwidth coloring and bandwidth multicoloring by variable neighborhood
//! search.
//!
//! A bandwidth coloring assigns each vertex a positive color so that the
//! colors of adjacent vertices differ by at least the edge distance; the
//! goal is the smallest span. Multicoloring instances are solved through
//! [`bmcp::expand_to_bcp`].

pub mod bmcp;
pub mod coloring;
pub mod error;
pub mod graph;
pub mod greedy;
pub mod io;
pub mod oracle;
pub mod random;
pub mod report;
pub mod state;
pub mod vns;

pub use bmcp::{BmcpInstance, ExpansionMap, Multicoloring};
pub use coloring::{evaluate, is_feasible, max_color, vertex_conflicts, Coloring};
pub use error::{Error, Result, Violation};
pub use graph::{Edge, WeightedGraph};
pub use greedy::{greedy_ub, GreedyOrder};
pub use state::SearchState;
pub use vns::{solve, CriteriaMask, RunResult, SolverConfig, Vns};
