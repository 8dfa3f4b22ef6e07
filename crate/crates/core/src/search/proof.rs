//! Exhaustive argument that no simple graph on fewer than `budget` vertices
//! has exactly `n` spanning trees.
//!
//! A smallest such graph has no bridges (contracting one keeps τ), so its
//! blocks are 2-connected and τ is the product over blocks while the vertex
//! count is `Σ|V(B)| − (blocks − 1)`. The proof therefore splits into:
//!
//! * one block that is a cycle: only `C_n`;
//! * one block with cyclomatic number `c ≥ 2`: a subdivision of a skeleton.
//!   Removing the last ear of a 2-connected graph leaves a 2-connected simple
//!   graph with fewer spanning trees, so once every skeleton of level `c` has
//!   minimum subdivision τ above `n`, every higher level does too;
//! * several blocks: `n` factors into parts `≥ 3`, each realised by a block
//!   found the same way.

use std::collections::BTreeMap;

use serde::Serialize;

use super::skeleton::{Skeleton, SkeletonLevels};
use crate::count::{subdivide, tau_matrix, TreeCount};
use crate::exec::Exec;
use crate::graph::{canonicalize, CanonicalKey, LabeledMultigraph};
use crate::witness::factorizations;

pub const DEFAULT_MAX_CYCLOMATIC: u64 = 8;

#[derive(Clone, Copy, Debug)]
pub struct ProofConfig {
    /// Give up (verdict `Inconclusive`) past this cyclomatic number.
    pub max_cyclomatic: u64,
    pub exec: Exec,
}

impl Default for ProofConfig {
    fn default() -> Self {
        Self {
            max_cyclomatic: DEFAULT_MAX_CYCLOMATIC,
            exec: Exec::default(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Verdict {
    Proven,
    Counterexample,
    Inconclusive,
}

#[derive(Clone, Debug, Serialize)]
pub struct SkeletonRecord {
    pub vertices: usize,
    pub edge_slots: usize,
    /// `u v m` triples.
    pub edges: Vec<(usize, usize, u32)>,
    /// `None` when the bound overflows `u128`.
    pub min_admissible_tau: Option<String>,
    pub pruned: bool,
    pub nodes_visited: u64,
    pub solutions: Vec<Vec<u64>>,
}

#[derive(Clone, Debug, Serialize)]
pub struct LevelRecord {
    pub cyclomatic: u64,
    pub level_min_tau: Option<String>,
    pub skeletons: Vec<SkeletonRecord>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum BlockStop {
    /// The named level's minimum exceeded `n`; nothing higher can reach it.
    LevelMinimumExceeded { cyclomatic: u64 },
    CyclomaticCap { cyclomatic: u64 },
}

/// All 2-connected simple graphs with `τ = n` and fewer than `budget` vertices.
#[derive(Clone, Debug, Serialize)]
pub struct BlockSearch {
    pub n: u64,
    pub budget: u64,
    pub levels: Vec<LevelRecord>,
    pub stop: BlockStop,
    #[serde(skip)]
    pub solutions: Vec<LabeledMultigraph>,
}

impl BlockSearch {
    pub fn complete(&self) -> bool {
        matches!(self.stop, BlockStop::LevelMinimumExceeded { .. })
    }

    /// Fewest vertices of a 2-connected graph with `τ = n` below the budget,
    /// the cycle included.
    pub fn min_vertices(&self) -> Option<u64> {
        let cycle = (self.n < self.budget).then_some(self.n);
        let found = self.solutions.iter().map(|g| g.vertex_count() as u64).min();
        cycle.into_iter().chain(found).min()
    }
}

pub fn block_search(n: u64, budget: u64, config: &ProofConfig) -> BlockSearch {
    let mut levels = SkeletonLevels::new(config.exec);
    let mut records = Vec::new();
    let mut found: BTreeMap<CanonicalKey, LabeledMultigraph> = BTreeMap::new();
    let stop = loop {
        let c = levels.cyclomatic();
        if c > config.max_cyclomatic {
            break BlockStop::CyclomaticCap { cyclomatic: c };
        }
        let results = config.exec.map(levels.graphs(), |g| {
            let sk = Skeleton::new(g.clone());
            let min = sk.min_admissible_tau();
            let pruned = min.is_none_or(|t| t > n as u128);
            let outcome = if pruned { Default::default() } else { sk.sweep(n, budget) };
            let graphs: Vec<LabeledMultigraph> = outcome
                .solutions
                .iter()
                .map(|l| subdivide(&sk.graph, l).expect("lengths are positive"))
                .collect();
            let record = SkeletonRecord {
                vertices: g.vertex_count(),
                edge_slots: sk.slot_count(),
                edges: g.edges().map(|((u, v), m)| (u, v, m)).collect(),
                min_admissible_tau: min.map(|t| t.to_string()),
                pruned,
                nodes_visited: outcome.nodes,
                solutions: outcome.solutions,
            };
            (record, min, graphs)
        });
        let mut level_min: Option<u128> = None;
        let mut overflow_only = true;
        let mut skeleton_records = Vec::with_capacity(results.len());
        for (record, min, graphs) in results {
            if let Some(t) = min {
                overflow_only = false;
                level_min = Some(level_min.map_or(t, |m| m.min(t)));
            }
            for g in graphs {
                let (key, rep) = canonicalize(&g);
                found.entry(key).or_insert(rep);
            }
            skeleton_records.push(record);
        }
        records.push(LevelRecord {
            cyclomatic: c,
            level_min_tau: level_min.map(|t| t.to_string()),
            skeletons: skeleton_records,
        });
        if overflow_only || level_min.is_some_and(|t| t > n as u128) {
            break BlockStop::LevelMinimumExceeded { cyclomatic: c };
        }
        levels.advance();
    };
    BlockSearch {
        n,
        budget,
        levels: records,
        stop,
        solutions: found.into_values().collect(),
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct FactorRecord {
    pub factors: Vec<u64>,
    /// Smallest block per factor, `None` when no block fits the budget.
    pub block_vertices: Vec<Option<u64>>,
    pub min_vertices: Option<u64>,
    pub below_budget: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct Counterexample {
    pub description: String,
    pub vertices: u64,
    pub edges: u64,
    pub tau: TreeCount,
    pub edge_list: Vec<(usize, usize, u32)>,
}

impl Counterexample {
    fn new(description: String, g: &LabeledMultigraph) -> Self {
        Self {
            description,
            vertices: g.vertex_count() as u64,
            edges: g.edge_count(),
            tau: tau_matrix(g),
            edge_list: g.edges().map(|((u, v), m)| (u, v, m)).collect(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ProofReport {
    pub n: u64,
    pub vertex_budget: u64,
    pub verdict: Verdict,
    /// `C_n` has `n` vertices; it is a counterexample only when `n < budget`.
    pub cycle_below_budget: bool,
    pub single_block: BlockSearch,
    pub factor_blocks: Vec<BlockSearch>,
    pub factorizations: Vec<FactorRecord>,
    pub counterexamples: Vec<Counterexample>,
}

fn smallest_block(search: &BlockSearch) -> Option<LabeledMultigraph> {
    let cycle = (search.n < search.budget).then(|| LabeledMultigraph::cycle(search.n as usize));
    search.solutions.iter().cloned().chain(cycle).min_by_key(|g| g.vertex_count())
}

/// Proof with the default configuration.
pub fn verify_no_smaller_graph(n: u64, vertex_budget: u64) -> ProofReport {
    verify_with(n, vertex_budget, &ProofConfig::default())
}

pub fn verify_with(n: u64, vertex_budget: u64, config: &ProofConfig) -> ProofReport {
    let single = block_search(n, vertex_budget, config);
    let mut counterexamples = Vec::new();
    let cycle_below_budget = n >= 3 && n < vertex_budget;
    if cycle_below_budget {
        counterexamples.push(Counterexample::new(format!("cycle:{n}"), &LabeledMultigraph::cycle(n as usize)));
    }
    for g in &single.solutions {
        counterexamples.push(Counterexample::new("subdivided skeleton".into(), g));
    }

    let splits: Vec<Vec<u64>> = factorizations(n).into_iter().filter(|f| f.len() >= 2).collect();
    let mut factor_values: Vec<u64> = splits.iter().flatten().copied().collect();
    factor_values.sort_unstable();
    factor_values.dedup();
    let factor_blocks: Vec<BlockSearch> = factor_values
        .iter()
        .map(|&f| block_search(f, vertex_budget, config))
        .collect();
    let block_of = |f: u64| &factor_blocks[factor_values.binary_search(&f).expect("factor searched")];

    let mut factor_records = Vec::new();
    for factors in splits {
        let block_vertices: Vec<Option<u64>> = factors.iter().map(|&f| block_of(f).min_vertices()).collect();
        let min_vertices = block_vertices
            .iter()
            .try_fold(0u64, |acc, v| v.map(|v| acc + v))
            .map(|total| total - (factors.len() as u64 - 1));
        let below_budget = min_vertices.is_some_and(|v| v < vertex_budget);
        if below_budget {
            let mut g = smallest_block(block_of(factors[0])).expect("block exists");
            for &f in &factors[1..] {
                let b = smallest_block(block_of(f)).expect("block exists");
                g = g.glue_at(0, &b, 0).expect("vertex 0 exists");
            }
            let parts: Vec<String> = factors.iter().map(u64::to_string).collect();
            counterexamples.push(Counterexample::new(format!("blocks:{}", parts.join("*")), &g));
        }
        factor_records.push(FactorRecord {
            factors,
            block_vertices,
            min_vertices,
            below_budget,
        });
    }

    let complete = single.complete() && factor_blocks.iter().all(BlockSearch::complete);
    let verdict = if !counterexamples.is_empty() {
        Verdict::Counterexample
    } else if complete {
        Verdict::Proven
    } else {
        Verdict::Inconclusive
    };
    ProofReport {
        n,
        vertex_budget,
        verdict,
        cycle_below_budget,
        single_block: single,
        factor_blocks,
        factorizations: factor_records,
        counterexamples,
    }
}
