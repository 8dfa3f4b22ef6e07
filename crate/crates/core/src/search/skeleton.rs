//! Skeletons: 2-connected loopless multigraphs with minimum degree 3.
//!
//! Suppressing the degree-2 vertices of a 2-connected simple graph that is not
//! a cycle leaves such a skeleton, and the graph is recovered by subdividing
//! each skeleton edge slot into a path. A skeleton with cyclomatic number `c`
//! has at most `2(c − 1)` vertices.
//!
//! Skeletons of cyclomatic number `c + 1` come from those of number `c` by one
//! ear: the last ear of an ear decomposition of a graph with minimum degree 3
//! is a single edge, and removing it leaves at most its two endpoints with
//! degree 2. So each skeleton is a smaller one with at most two edge slots
//! subdivided plus one edge joining two (new or old) vertices.

use std::collections::BTreeMap;

use crate::count::SubdivisionPolynomial;
use crate::exec::Exec;
use crate::graph::{canonicalize, CanonicalKey, LabeledMultigraph, Vertex};

#[derive(Clone, Debug)]
pub struct Skeleton {
    pub graph: LabeledMultigraph,
    pub poly: SubdivisionPolynomial,
    /// `class_start[i]` is true when slot `i` begins a new parallel class.
    class_start: Vec<bool>,
}

impl Skeleton {
    pub fn new(graph: LabeledMultigraph) -> Self {
        let poly = SubdivisionPolynomial::new(&graph);
        let slots = poly.slots();
        let class_start = (0..slots.len()).map(|i| i == 0 || slots[i] != slots[i - 1]).collect();
        Self { graph, poly, class_start }
    }

    pub fn cyclomatic_number(&self) -> u64 {
        self.graph.cyclomatic_number() as u64
    }

    pub fn slot_count(&self) -> usize {
        self.class_start.len()
    }

    /// Smallest lengths keeping the subdivision simple: one slot of each
    /// parallel class may stay a single edge, the others need length 2.
    pub fn min_admissible_lengths(&self) -> Vec<u64> {
        self.class_start.iter().map(|&s| if s { 1 } else { 2 }).collect()
    }

    /// τ at [`Self::min_admissible_lengths`]; every simple subdivision has at
    /// least this many spanning trees, since τ grows in each length and
    /// parallel slots are interchangeable.
    pub fn min_admissible_tau(&self) -> Option<u128> {
        self.poly.eval_u128(&self.min_admissible_lengths())
    }

    pub fn subdivided_vertices(&self, lengths: &[u64]) -> u64 {
        self.graph.vertex_count() as u64 + lengths.iter().map(|l| l - 1).sum::<u64>()
    }

    /// Every admissible length vector (non-decreasing within a parallel class)
    /// with `τ = n` whose subdivision has fewer than `budget` vertices.
    pub fn sweep(&self, n: u64, budget: u64) -> SweepOutcome {
        let mut state = Sweep {
            sk: self,
            n: n as u128,
            budget,
            lengths: vec![1; self.slot_count()],
            out: SweepOutcome::default(),
        };
        let v = self.graph.vertex_count() as u64;
        if v < budget {
            state.go(0, v);
        }
        state.out
    }
}

#[derive(Clone, Debug, Default)]
pub struct SweepOutcome {
    pub nodes: u64,
    pub solutions: Vec<Vec<u64>>,
}

struct Sweep<'a> {
    sk: &'a Skeleton,
    n: u128,
    budget: u64,
    lengths: Vec<u64>,
    out: SweepOutcome,
}

impl Sweep<'_> {
    fn go(&mut self, i: usize, vertices: u64) {
        self.out.nodes += 1;
        if i == self.lengths.len() {
            if self.sk.poly.eval_u128(&self.lengths) == Some(self.n) {
                self.out.solutions.push(self.lengths.clone());
            }
            return;
        }
        let lo = if self.sk.class_start[i] { 1 } else { self.lengths[i - 1].max(2) };
        let mut len = lo;
        loop {
            let v = vertices + (len - 1);
            if v >= self.budget {
                break;
            }
            self.lengths[i] = len;
            // unassigned slots sit at 1, so this bounds every completion from below
            match self.sk.poly.eval_u128(&self.lengths) {
                Some(t) if t <= self.n => {}
                _ => break,
            }
            self.go(i + 1, v);
            len += 1;
        }
        self.lengths[i] = 1;
    }
}

fn subdivide_once(g: &LabeledMultigraph, (a, b): (Vertex, Vertex)) -> (LabeledMultigraph, Vertex) {
    let mut h = g.delete_edge(a, b).expect("slot exists");
    let w = h.add_vertex();
    h.add_edges(a, w, 1).expect("vertices exist");
    h.add_edges(w, b, 1).expect("vertices exist");
    (h, w)
}

fn join(mut g: LabeledMultigraph, x: Vertex, y: Vertex, out: &mut Vec<LabeledMultigraph>) {
    if x != y {
        g.add_edges(x, y, 1).expect("vertices exist");
        out.push(g);
    }
}

/// All skeletons obtained from `h` by one ear.
fn ear_extensions(h: &LabeledMultigraph) -> Vec<LabeledMultigraph> {
    let n = h.vertex_count();
    let pairs: Vec<((Vertex, Vertex), u32)> = h.edges().collect();
    let mut out = Vec::new();
    for x in 0..n {
        for y in x + 1..n {
            join(h.clone(), x, y, &mut out);
        }
    }
    for &(p, _) in &pairs {
        let (g, w) = subdivide_once(h, p);
        for x in 0..n {
            join(g.clone(), x, w, &mut out);
        }
        // a second point on the same subdivided copy
        let (g2, w2) = subdivide_once(&g, (w, p.1));
        join(g2, w, w2, &mut out);
    }
    for (i, &(p, m)) in pairs.iter().enumerate() {
        let (g, w) = subdivide_once(h, p);
        if m >= 2 {
            // a point on another parallel copy of the same pair
            let (g2, w2) = subdivide_once(&g, p);
            join(g2, w, w2, &mut out);
        }
        for &(q, _) in &pairs[i + 1..] {
            let (g2, w2) = subdivide_once(&g, q);
            join(g2, w, w2, &mut out);
        }
    }
    out
}

/// Skeletons level by level, starting at cyclomatic number 2.
pub struct SkeletonLevels {
    exec: Exec,
    current: Vec<LabeledMultigraph>,
    cyclomatic: u64,
}

impl SkeletonLevels {
    pub fn new(exec: Exec) -> Self {
        let bundle = LabeledMultigraph::from_edges(2, [(0, 1); 3]).expect("two vertices");
        Self {
            exec,
            current: vec![canonicalize(&bundle).1],
            cyclomatic: 2,
        }
    }

    pub fn cyclomatic(&self) -> u64 {
        self.cyclomatic
    }

    /// Canonical representatives at the current level, sorted by key.
    pub fn graphs(&self) -> &[LabeledMultigraph] {
        &self.current
    }

    pub fn advance(&mut self) {
        let children = self.exec.flat_map(&self.current, |h| {
            ear_extensions(h)
                .into_iter()
                .filter(|g| g.is_two_connected())
                .map(|g| canonicalize(&g))
                .collect()
        });
        let level: BTreeMap<CanonicalKey, LabeledMultigraph> = children.into_iter().collect();
        self.current = level.into_values().collect();
        self.cyclomatic += 1;
    }
}

/// Skeletons with cyclomatic number exactly `c ≥ 2`.
pub fn skeletons(c: u64, exec: Exec) -> Vec<LabeledMultigraph> {
    assert!(c >= 2, "skeletons start at cyclomatic number 2");
    let mut levels = SkeletonLevels::new(exec);
    while levels.cyclomatic() < c {
        levels.advance();
    }
    levels.current
}
