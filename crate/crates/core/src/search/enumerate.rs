//! Isomorphism-free generation of connected graphs on a fixed vertex count.
//!
//! Every connected graph contains a spanning tree, and adding its remaining
//! edges one at a time passes only through connected subgraphs. So starting
//! from all trees up to isomorphism and repeatedly adding one edge, keeping one
//! representative per canonical key at each edge count, reaches every class.
//! A `keep` predicate that is monotone (rejecting a graph rejects all of its
//! supergraphs on the same vertex set) can cut whole branches without losing
//! any graph it would have kept.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::graph::{canonicalize, CanonicalKey, LabeledMultigraph};

pub const DEFAULT_CEILING: usize = 9;

type GraphPred<'a> = Box<dyn Fn(&LabeledMultigraph) -> bool + Send + Sync + 'a>;

/// `keep` must be monotone under adding edges; `accept` is applied last.
pub struct Predicate<'a> {
    keep: GraphPred<'a>,
    accept: GraphPred<'a>,
}

impl<'a> Predicate<'a> {
    pub fn all() -> Self {
        Self {
            keep: Box::new(|_| true),
            accept: Box::new(|_| true),
        }
    }

    pub fn two_edge_connected() -> Self {
        Self::all().accept(|g| g.is_two_edge_connected().unwrap_or(false))
    }

    /// Adds a monotone prune: graphs failing `keep` are dropped together with
    /// everything that would be grown from them.
    pub fn keep(self, keep: impl Fn(&LabeledMultigraph) -> bool + Send + Sync + 'a) -> Self {
        let old = self.keep;
        Self {
            keep: Box::new(move |g| old(g) && keep(g)),
            accept: self.accept,
        }
    }

    /// Adds a final filter with no monotonicity requirement.
    pub fn accept(self, accept: impl Fn(&LabeledMultigraph) -> bool + Send + Sync + 'a) -> Self {
        let old = self.accept;
        Self {
            keep: self.keep,
            accept: Box::new(move |g| old(g) && accept(g)),
        }
    }
}

/// Search settings shared by the enumerators.
#[derive(Clone, Copy, Debug)]
pub struct Enumerator {
    pub ceiling: usize,
    pub exec: Exec,
}

impl Default for Enumerator {
    fn default() -> Self {
        Self {
            ceiling: DEFAULT_CEILING,
            exec: Exec::default(),
        }
    }
}

type Level = BTreeMap<CanonicalKey, LabeledMultigraph>;

impl Enumerator {
    pub fn new(ceiling: usize, exec: Exec) -> Self {
        Self { ceiling, exec }
    }

    fn check(&self, order: usize) -> Result<()> {
        if order > self.ceiling {
            return Err(Error::CeilingExceeded {
                requested: order,
                ceiling: self.ceiling,
            });
        }
        Ok(())
    }

    /// Trees on `order` vertices up to isomorphism, by attaching leaves.
    pub fn trees(&self, order: usize) -> Result<Vec<LabeledMultigraph>> {
        self.check(order)?;
        if order == 0 {
            return Ok(Vec::new());
        }
        let mut level: Level = BTreeMap::new();
        let single = LabeledMultigraph::new(1);
        level.insert(canonicalize(&single).0, single);
        for _ in 1..order {
            let parents: Vec<LabeledMultigraph> = level.into_values().collect();
            let children = self.exec.flat_map(&parents, |t| {
                (0..t.vertex_count())
                    .map(|v| {
                        let mut g = t.clone();
                        let leaf = g.add_vertex();
                        g.add_edges(v, leaf, 1).expect("vertices exist");
                        canonicalize(&g)
                    })
                    .collect()
            });
            level = children.into_iter().collect();
        }
        Ok(level.into_values().collect())
    }

    /// One representative per isomorphism class of connected simple graphs on
    /// exactly `order` vertices passing `pred`, sorted by edge count then key.
    pub fn connected_graphs(&self, order: usize, pred: &Predicate<'_>) -> Result<Vec<LabeledMultigraph>> {
        self.grow(order, pred, None)
    }

    /// Connected multigraphs on exactly `order` vertices with at most
    /// `max_edges` edges counted with multiplicity.
    pub fn connected_multigraphs(&self, order: usize, max_edges: u64) -> Result<Vec<LabeledMultigraph>> {
        let bound = move |g: &LabeledMultigraph| g.edge_count() <= max_edges;
        self.grow(order, &Predicate::all().keep(bound), Some(max_edges))
    }

    fn grow(&self, order: usize, pred: &Predicate<'_>, multi: Option<u64>) -> Result<Vec<LabeledMultigraph>> {
        let trees = self.trees(order)?;
        let mut level: Level = trees
            .into_iter()
            .filter(|t| (pred.keep)(t))
            .map(|t| canonicalize(&t))
            .collect();
        let mut out: Vec<LabeledMultigraph> = Vec::new();
        while !level.is_empty() {
            let parents: Vec<LabeledMultigraph> = level.into_values().collect();
            let children = self.exec.flat_map(&parents, |g| {
                let n = g.vertex_count();
                let mut local: Level = BTreeMap::new();
                for u in 0..n {
                    for v in u + 1..n {
                        if multi.is_none() && g.multiplicity(u, v) > 0 {
                            continue;
                        }
                        let mut h = g.clone();
                        h.add_edges(u, v, 1).expect("vertices exist");
                        if (pred.keep)(&h) {
                            let (key, rep) = canonicalize(&h);
                            local.entry(key).or_insert(rep);
                        }
                    }
                }
                local.into_iter().collect()
            });
            out.extend(parents);
            level = children.into_iter().collect();
        }
        let accepted = self.exec.map(&out, |g| (pred.accept)(g));
        Ok(out
            .into_iter()
            .zip(accepted)
            .filter_map(|(g, ok)| ok.then_some(g))
            .collect())
    }
}

/// [`Enumerator::connected_graphs`] with the default ceiling.
pub fn enumerate_connected_graphs(order: usize, pred: &Predicate<'_>) -> Result<Vec<LabeledMultigraph>> {
    Enumerator::default().connected_graphs(order, pred)
}
