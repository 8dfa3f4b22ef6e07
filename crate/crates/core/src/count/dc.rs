//! Deletion–contraction with a bounded memo keyed on canonical form.

use std::cell::RefCell;
use std::num::NonZeroUsize;

use lru::LruCache;
use num_bigint::BigUint;
use num_traits::{One, Zero};

use super::TreeCount;
use crate::graph::{canonical_form, CanonicalKey, LabeledMultigraph};

pub const DEFAULT_MEMO_CAP: usize = 1 << 20;
pub const MEMO_CAP_ENV: &str = "TREEFORGE_MEMO_CAP";

fn memo_cap_from_env() -> usize {
    std::env::var(MEMO_CAP_ENV)
        .ok()
        .and_then(|s| s.trim().parse().ok())
        .filter(|&c: &usize| c > 0)
        .unwrap_or(DEFAULT_MEMO_CAP)
}

/// Deletion–contraction evaluator owning its memo table. Not shared between
/// threads; [`tau_dc`] keeps one per thread.
pub struct DcCounter {
    memo: LruCache<CanonicalKey, BigUint>,
    hits: u64,
    misses: u64,
}

impl DcCounter {
    pub fn new(cap: usize) -> Self {
        let cap = NonZeroUsize::new(cap).unwrap_or(NonZeroUsize::MIN);
        Self {
            memo: LruCache::new(cap),
            hits: 0,
            misses: 0,
        }
    }

    pub fn count(&mut self, g: &LabeledMultigraph) -> TreeCount {
        TreeCount(self.eval(g.clone()))
    }

    /// `(hits, misses)` of the memo since construction.
    pub fn stats(&self) -> (u64, u64) {
        (self.hits, self.misses)
    }

    pub fn memo_len(&self) -> usize {
        self.memo.len()
    }

    fn eval(&mut self, mut g: LabeledMultigraph) -> BigUint {
        let mut factor = BigUint::one();
        // A vertex with a single neighbour: deleting its edges disconnects, so
        // only the contraction term survives, once per parallel copy.
        loop {
            if g.vertex_count() <= 1 {
                return factor;
            }
            if g.pair_count() == 0 || !g.is_connected() {
                return BigUint::zero();
            }
            if g.vertex_count() == 2 {
                return factor * BigUint::from(g.multiplicity(0, 1));
            }
            let adj = g.adjacency();
            match adj.iter().position(|nb| nb.len() == 1) {
                Some(v) => {
                    let (w, m) = adj[v][0];
                    factor *= BigUint::from(m);
                    g = g.contract_edge(v, w).expect("edge exists");
                }
                None => break,
            }
        }

        let key = canonical_form(&g);
        if let Some(v) = self.memo.get(&key) {
            self.hits += 1;
            return factor * v;
        }
        self.misses += 1;

        let ((u, v), m) = g
            .edges()
            .max_by_key(|&((u, v), m)| (m, std::cmp::Reverse((u, v))))
            .expect("graph has an edge");
        // τ(G) = m·τ(G/uv) + τ(G − all copies of uv)
        let contracted = self.eval(g.contract_edge(u, v).expect("edge exists"));
        let deleted = self.eval(g.delete_all(u, v).expect("edge exists"));
        let value = contracted * BigUint::from(m) + deleted;
        self.memo.put(key, value.clone());
        factor * value
    }
}

impl Default for DcCounter {
    fn default() -> Self {
        Self::new(memo_cap_from_env())
    }
}

thread_local! {
    static COUNTER: RefCell<DcCounter> = RefCell::new(DcCounter::default());
}

/// Deletion–contraction count using this thread's memo table.
pub fn tau_dc(g: &LabeledMultigraph) -> TreeCount {
    COUNTER.with(|c| c.borrow_mut().count(g))
}
