//! Exhaustive search for the fewest vertices or edges carrying `n` spanning
//! trees, and a skeleton-based proof that no graph below a vertex budget does.

pub mod enumerate;
pub mod oracle;
pub mod proof;
pub mod skeleton;

pub use enumerate::{enumerate_connected_graphs, Enumerator, Predicate, DEFAULT_CEILING};
pub use oracle::{alpha_exact, alpha_exact_with, beta_exact, beta_exact_with, SearchKind, SearchResult, SearchValue};
pub use proof::{verify_no_smaller_graph, verify_with, ProofConfig, ProofReport, Verdict};
pub use skeleton::{skeletons, Skeleton};
