//! Exact α(n) and β(n) within an exhaustive search budget.
//!
//! A graph with `τ = n` and the fewest vertices (or edges) has no bridges:
//! contracting a bridge keeps τ and the graph simple while dropping one vertex
//! and one edge. Adding an edge strictly increases τ, so `τ ≤ n` is a monotone
//! prune for the enumerator.

use serde::Serialize;

use super::enumerate::{Enumerator, Predicate};
use crate::count::tau_matrix;
use crate::error::{Error, Result};
use crate::graph::LabeledMultigraph;
use crate::witness::{Strategy, Witness};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum SearchKind {
    Alpha,
    Beta,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SearchValue {
    Exact(u64),
    /// Nothing within the budget; the true value is at least `lower_bound`.
    AboveBudget { lower_bound: u64 },
}

#[derive(Clone, Debug, Serialize)]
pub struct SearchSpace {
    pub max_vertices: u64,
    pub max_edges: Option<u64>,
    pub orders_exhausted: Vec<u64>,
    pub graphs_examined: u64,
    pub filters: Vec<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct SearchResult {
    pub n: u64,
    pub kind: SearchKind,
    pub value: SearchValue,
    pub witness: Option<Witness>,
    pub search_space: SearchSpace,
}

impl SearchResult {
    pub fn exact(&self) -> Option<u64> {
        match self.value {
            SearchValue::Exact(v) => Some(v),
            SearchValue::AboveBudget { .. } => None,
        }
    }
}

fn tau_at_most(g: &LabeledMultigraph, n: u64) -> bool {
    tau_matrix(g).to_u64().is_some_and(|t| t <= n)
}

fn hits(g: &LabeledMultigraph, n: u64) -> bool {
    tau_matrix(g) == n && g.is_two_edge_connected().unwrap_or(false)
}

/// Graphs on exactly `order` vertices that are bridgeless with `τ = n`, plus
/// the number of graphs the pruned enumeration visited.
fn candidates(e: &Enumerator, order: usize, n: u64, max_edges: Option<u64>) -> Result<(Vec<LabeledMultigraph>, u64)> {
    let examined = std::sync::atomic::AtomicU64::new(0);
    let pred = Predicate::all()
        .keep(|g| {
            examined.fetch_add(1, std::sync::atomic::Ordering::Relaxed);
            max_edges.is_none_or(|m| g.edge_count() <= m) && tau_at_most(g, n)
        })
        .accept(move |g| hits(g, n));
    let found = e.connected_graphs(order, &pred)?;
    let visited = examined.load(std::sync::atomic::Ordering::Relaxed);
    Ok((found, visited))
}

fn search_witness(g: LabeledMultigraph) -> Witness {
    let label = format!("search:{}v{}e", g.vertex_count(), g.edge_count());
    Witness::from_graph(g, Strategy::Search, label)
}

/// Smallest vertex count `k ≤ max_vertices` of a graph with `τ = n`.
///
/// When nothing is found and `n = max_vertices + 1`, the cycle `C_n` closes the
/// gap and the value is exact.
pub fn alpha_exact_with(e: &Enumerator, n: u64, max_vertices: u64) -> Result<SearchResult> {
    if n < 3 {
        return Err(Error::TooSmall(n));
    }
    let mut space = SearchSpace {
        max_vertices,
        max_edges: None,
        orders_exhausted: Vec::new(),
        graphs_examined: 0,
        filters: vec!["tau <= n (prune)".into(), "bridgeless".into(), "tau == n".into()],
    };
    for k in 3..=max_vertices {
        let (found, examined) = candidates(e, k as usize, n, None)?;
        space.graphs_examined += examined;
        space.orders_exhausted.push(k);
        if let Some(g) = found.into_iter().next() {
            return Ok(SearchResult {
                n,
                kind: SearchKind::Alpha,
                value: SearchValue::Exact(k),
                witness: Some(search_witness(g)),
                search_space: space,
            });
        }
    }
    let (value, witness) = if n == max_vertices + 1 {
        let w = Witness::from_graph(LabeledMultigraph::cycle(n as usize), Strategy::CycleFallback, format!("cycle:{n}"));
        (SearchValue::Exact(n), Some(w))
    } else {
        (SearchValue::AboveBudget { lower_bound: max_vertices + 1 }, None)
    };
    Ok(SearchResult {
        n,
        kind: SearchKind::Alpha,
        value,
        witness,
        search_space: space,
    })
}

pub fn alpha_exact(n: u64, max_vertices: u64) -> Result<SearchResult> {
    alpha_exact_with(&Enumerator::default(), n, max_vertices)
}

/// Smallest edge count `m ≤ max_edges` of a graph with `τ = n`.
///
/// A bridgeless connected graph has at least as many edges as vertices, so
/// orders up to `max_edges` cover the budget.
pub fn beta_exact_with(e: &Enumerator, n: u64, max_edges: u64) -> Result<SearchResult> {
    if n < 3 {
        return Err(Error::TooSmall(n));
    }
    let mut space = SearchSpace {
        max_vertices: max_edges,
        max_edges: Some(max_edges),
        orders_exhausted: Vec::new(),
        graphs_examined: 0,
        filters: vec![
            "edges <= max_edges (prune)".into(),
            "tau <= n (prune)".into(),
            "bridgeless".into(),
            "tau == n".into(),
        ],
    };
    let mut best: Option<LabeledMultigraph> = None;
    for k in 3..=max_edges {
        // a graph on k vertices needs k edges; no improvement possible
        if best.as_ref().is_some_and(|b| b.edge_count() <= k) {
            break;
        }
        let (found, examined) = candidates(e, k as usize, n, Some(max_edges))?;
        space.graphs_examined += examined;
        space.orders_exhausted.push(k);
        if let Some(g) = found.into_iter().min_by_key(|g| g.edge_count()) {
            if best.as_ref().is_none_or(|b| g.edge_count() < b.edge_count()) {
                best = Some(g);
            }
        }
    }
    let (value, witness) = match best {
        Some(g) => (SearchValue::Exact(g.edge_count()), Some(search_witness(g))),
        None => (SearchValue::AboveBudget { lower_bound: max_edges + 1 }, None),
    };
    Ok(SearchResult {
        n,
        kind: SearchKind::Beta,
        value,
        witness,
        search_space: space,
    })
}

pub fn beta_exact(n: u64, max_edges: u64) -> Result<SearchResult> {
    beta_exact_with(&Enumerator::default(), n, max_edges)
}
