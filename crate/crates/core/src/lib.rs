//! Small graphs with a prescribed number of spanning trees.
//!
//! Exact spanning-tree counting ([`count`]), theta-graph constructions
//! ([`constructions`]), the `ab + ac + bc` number theory behind them
//! ([`idoneal`]), a witness builder for every `n` ([`witness`]) and exhaustive
//! search for the minimum vertex and edge counts ([`search`]).

pub mod constructions;
pub mod count;
pub mod error;
pub mod exec;
pub mod graph;
pub mod idoneal;
pub mod search;
pub mod verify;
pub mod witness;

pub use count::{tau_dc, tau_matrix, TreeCount};
pub use error::{Error, Result};
pub use exec::Exec;
pub use graph::LabeledMultigraph;
