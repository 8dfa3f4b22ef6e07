//! Undirected loopless multigraphs on the vertex set `0..vertex_count`.
//!
//! Every operation that changes structure returns a fresh value, so a
//! [`LabeledMultigraph`] can be shared freely between worker threads.

mod canon;
mod connectivity;
pub mod io;

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};

pub use canon::{canonical_form, canonical_labeling, canonicalize, CanonicalKey};

pub type Vertex = usize;

/// Vertex count plus a multiplicity for every adjacent pair `(u, v)` with `u < v`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LabeledMultigraph {
    vertex_count: usize,
    edges: BTreeMap<(Vertex, Vertex), u32>,
}

/// Records whether a particular graph has every multiplicity equal to one.
#[derive(Clone, Copy, Debug)]
pub struct SimpleGraphCertificate<'a> {
    pub holds_for: &'a LabeledMultigraph,
    pub is_simple: bool,
}

#[inline]
fn ordered(u: Vertex, v: Vertex) -> (Vertex, Vertex) {
    if u < v {
        (u, v)
    } else {
        (v, u)
    }
}

impl LabeledMultigraph {
    /// Edgeless graph on `vertex_count` vertices.
    pub fn new(vertex_count: usize) -> Self {
        Self {
            vertex_count,
            edges: BTreeMap::new(),
        }
    }

    /// Builds a graph from a list of edges; repeated pairs accumulate multiplicity.
    pub fn from_edges<I>(vertex_count: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut g = Self::new(vertex_count);
        for (u, v) in edges {
            g.add_edges(u, v, 1)?;
        }
        Ok(g)
    }

    pub fn cycle(length: usize) -> Self {
        assert!(length >= 3, "a simple cycle needs at least 3 vertices");
        Self::from_edges(length, (0..length).map(|i| (i, (i + 1) % length))).unwrap()
    }

    pub fn path(vertex_count: usize) -> Self {
        Self::from_edges(vertex_count, (1..vertex_count).map(|i| (i - 1, i))).unwrap()
    }

    pub fn complete(vertex_count: usize) -> Self {
        let mut g = Self::new(vertex_count);
        for u in 0..vertex_count {
            for v in u + 1..vertex_count {
                g.edges.insert((u, v), 1);
            }
        }
        g
    }

    /// Square of the cycle `C_n`: each vertex joined to the vertices at distance 1 and 2.
    pub fn cycle_square(n: usize) -> Self {
        assert!(n >= 5, "C_n^2 is simple only for n >= 5");
        let mut g = Self::new(n);
        for i in 0..n {
            for step in [1, 2] {
                let key = ordered(i, (i + step) % n);
                g.edges.insert(key, 1);
            }
        }
        g
    }

    pub fn petersen() -> Self {
        let mut edges = Vec::new();
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((i, i + 5));
            edges.push((5 + i, 5 + (i + 2) % 5));
        }
        Self::from_edges(10, edges).unwrap()
    }

    /// Adds `count` parallel copies of `{u, v}` in place. Intended for building a
    /// graph before it is shared.
    pub fn add_edges(&mut self, u: Vertex, v: Vertex, count: u32) -> Result<()> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::LoopForbidden(u));
        }
        if count > 0 {
            *self.edges.entry(ordered(u, v)).or_insert(0) += count;
        }
        Ok(())
    }

    /// Appends an isolated vertex and returns its label.
    pub fn add_vertex(&mut self) -> Vertex {
        self.vertex_count += 1;
        self.vertex_count - 1
    }

    fn check_vertex(&self, v: Vertex) -> Result<()> {
        if v < self.vertex_count {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                vertex: v,
                vertex_count: self.vertex_count,
            })
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    /// Total number of edges, counting parallel copies.
    pub fn edge_count(&self) -> u64 {
        self.edges.values().map(|&m| m as u64).sum()
    }

    /// Number of adjacent pairs.
    pub fn pair_count(&self) -> usize {
        self.edges.len()
    }

    pub fn multiplicity(&self, u: Vertex, v: Vertex) -> u32 {
        if u == v {
            return 0;
        }
        self.edges.get(&ordered(u, v)).copied().unwrap_or(0)
    }

    /// Adjacent pairs `((u, v), multiplicity)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = ((Vertex, Vertex), u32)> + '_ {
        self.edges.iter().map(|(&k, &m)| (k, m))
    }

    /// Every edge copy listed individually, in lexicographic pair order.
    pub fn edge_slots(&self) -> Vec<(Vertex, Vertex)> {
        self.edges
            .iter()
            .flat_map(|(&k, &m)| std::iter::repeat_n(k, m as usize))
            .collect()
    }

    pub fn degree(&self, v: Vertex) -> u64 {
        self.edges
            .iter()
            .filter(|((a, b), _)| *a == v || *b == v)
            .map(|(_, &m)| m as u64)
            .sum()
    }

    pub fn degrees(&self) -> Vec<u64> {
        let mut deg = vec![0u64; self.vertex_count];
        for (&(u, v), &m) in &self.edges {
            deg[u] += m as u64;
            deg[v] += m as u64;
        }
        deg
    }

    /// Neighbour lists with multiplicities, sorted by neighbour label.
    pub fn adjacency(&self) -> Vec<Vec<(Vertex, u32)>> {
        let mut adj = vec![Vec::new(); self.vertex_count];
        for (&(u, v), &m) in &self.edges {
            adj[u].push((v, m));
            adj[v].push((u, m));
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        adj
    }

    /// Row-major `n × n` multiplicity matrix.
    pub fn dense_matrix(&self) -> Vec<u32> {
        let n = self.vertex_count;
        let mut m = vec![0u32; n * n];
        for (&(u, v), &mult) in &self.edges {
            m[u * n + v] = mult;
            m[v * n + u] = mult;
        }
        m
    }

    pub fn is_simple(&self) -> bool {
        self.edges.values().all(|&m| m == 1)
    }

    pub fn simple_certificate(&self) -> SimpleGraphCertificate<'_> {
        SimpleGraphCertificate {
            holds_for: self,
            is_simple: self.is_simple(),
        }
    }

    /// `edges − vertices + components`.
    pub fn cyclomatic_number(&self) -> i64 {
        self.edge_count() as i64 - self.vertex_count as i64 + self.component_count() as i64
    }

    /// Removes one copy of `{u, v}`.
    pub fn delete_edge(&self, u: Vertex, v: Vertex) -> Result<Self> {
        let key = ordered(u, v);
        let mut out = self.clone();
        match out.edges.get_mut(&key) {
            Some(m) if *m > 1 => *m -= 1,
            Some(_) => {
                out.edges.remove(&key);
            }
            None => return Err(Error::EdgeNotPresent(u, v)),
        }
        Ok(out)
    }

    /// Removes every copy of `{u, v}`.
    pub fn delete_all(&self, u: Vertex, v: Vertex) -> Result<Self> {
        let mut out = self.clone();
        out.edges
            .remove(&ordered(u, v))
            .ok_or(Error::EdgeNotPresent(u, v))?;
        Ok(out)
    }

    /// Merges `u` and `v`. Copies of `{u, v}` become loops and are dropped; the
    /// merged vertex keeps label `min(u, v)` and labels above `max(u, v)` shift down.
    pub fn contract_edge(&self, u: Vertex, v: Vertex) -> Result<Self> {
        if self.multiplicity(u, v) == 0 {
            return Err(Error::EdgeNotPresent(u, v));
        }
        let (keep, gone) = ordered(u, v);
        let relabel = |x: Vertex| -> Vertex {
            let x = if x == gone { keep } else { x };
            if x > gone {
                x - 1
            } else {
                x
            }
        };
        let mut out = Self::new(self.vertex_count - 1);
        for (&(a, b), &m) in &self.edges {
            let (a, b) = (relabel(a), relabel(b));
            if a != b {
                *out.edges.entry(ordered(a, b)).or_insert(0) += m;
            }
        }
        Ok(out)
    }

    /// Joins `u` and `v` by a new path of length `k`, appending `k − 1` internal
    /// vertices. `k = 1` adds a single edge; `u = v` closes a cycle through `u`.
    pub fn add_path(&self, u: Vertex, v: Vertex, k: usize) -> Result<Self> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if k == 0 {
            return Err(Error::ZeroPathLength);
        }
        if k == 1 && u == v {
            return Err(Error::LoopForbidden(u));
        }
        let mut out = self.clone();
        let mut prev = u;
        for _ in 1..k {
            let w = out.add_vertex();
            out.add_edges(prev, w, 1)?;
            prev = w;
        }
        out.add_edges(prev, v, 1)?;
        Ok(out)
    }

    /// Applies `perm`, sending vertex `v` to `perm[v]`.
    pub fn relabel(&self, perm: &[Vertex]) -> Self {
        assert_eq!(perm.len(), self.vertex_count);
        let mut out = Self::new(self.vertex_count);
        for (&(u, v), &m) in &self.edges {
            out.edges.insert(ordered(perm[u], perm[v]), m);
        }
        out
    }

    /// Disjoint union; the vertices of `other` are shifted past those of `self`.
    pub fn disjoint_union(&self, other: &Self) -> Self {
        let off = self.vertex_count;
        let mut out = self.clone();
        out.vertex_count += other.vertex_count;
        for (&(u, v), &m) in &other.edges {
            out.edges.insert((u + off, v + off), m);
        }
        out
    }

    /// Identifies vertex `a` of `self` with vertex `b` of `other`.
    pub fn glue_at(&self, a: Vertex, other: &Self, b: Vertex) -> Result<Self> {
        self.check_vertex(a)?;
        other.check_vertex(b)?;
        let off = self.vertex_count;
        let map = |x: Vertex| -> Vertex {
            match x.cmp(&b) {
                std::cmp::Ordering::Equal => a,
                std::cmp::Ordering::Less => off + x,
                std::cmp::Ordering::Greater => off + x - 1,
            }
        };
        let mut out = self.clone();
        out.vertex_count += other.vertex_count - 1;
        for (&(u, v), &m) in &other.edges {
            out.edges.insert(ordered(map(u), map(v)), m);
        }
        Ok(out)
    }
}

impl fmt::Display for LabeledMultigraph {
    /// The edge-list text format (see [`io`]).
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&io::write_edge_list(self))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::count::tau_matrix;

    #[test]
    fn delete_edge_from_triangle_gives_path() {
        let g = LabeledMultigraph::cycle(3).delete_edge(0, 1).unwrap();
        assert_eq!(g.vertex_count(), 3);
        assert_eq!(g.edge_count(), 2);
        assert_eq!(g.multiplicity(0, 2), 1);
        assert_eq!(g.multiplicity(1, 2), 1);
    }

    #[test]
    fn delete_edge_decrements_multiplicity() {
        let g = LabeledMultigraph::from_edges(2, [(0, 1), (0, 1)]).unwrap();
        let h = g.delete_edge(0, 1).unwrap();
        assert_eq!(h.multiplicity(0, 1), 1);
        assert_eq!(h.edge_count(), 1);
    }

    #[test]
    fn delete_c4_edge_leaves_a_path_with_one_tree() {
        let g = LabeledMultigraph::cycle(4);
        assert_eq!(tau_matrix(&g).to_u64(), Some(4));
        let h = g.delete_edge(0, 1).unwrap();
        assert_eq!(canonical_form(&h), canonical_form(&LabeledMultigraph::path(4)));
        assert_eq!(tau_matrix(&h).to_u64(), Some(1));
    }

    #[test]
    fn absent_edge_errors() {
        let g = LabeledMultigraph::path(3);
        assert_eq!(g.delete_edge(0, 2), Err(Error::EdgeNotPresent(0, 2)));
        assert_eq!(g.contract_edge(0, 2), Err(Error::EdgeNotPresent(0, 2)));
        assert!(matches!(g.delete_all(0, 2), Err(Error::EdgeNotPresent(..))));
    }

    #[test]
    fn contract_triangle_edge_gives_banana() {
        let g = LabeledMultigraph::cycle(3).contract_edge(0, 1).unwrap();
        assert_eq!(g.vertex_count(), 2);
        assert_eq!(g.multiplicity(0, 1), 2);
        assert_eq!(tau_matrix(&g).to_u64(), Some(2));
    }

    #[test]
    fn contract_c4_gives_c3() {
        let g = LabeledMultigraph::cycle(4).contract_edge(0, 1).unwrap();
        assert_eq!(canonical_form(&g), canonical_form(&LabeledMultigraph::cycle(3)));
    }

    #[test]
    fn contract_banana_drops_loops() {
        let g = LabeledMultigraph::from_edges(2, [(0, 1), (0, 1)]).unwrap();
        let h = g.contract_edge(0, 1).unwrap();
        assert_eq!(h.vertex_count(), 1);
        assert_eq!(h.edge_count(), 0);
        assert_eq!(tau_matrix(&h).to_u64(), Some(1));
    }

    #[test]
    fn contraction_keeps_min_label_and_shifts() {
        // star centred at 3 plus edge 1-4
        let g = LabeledMultigraph::from_edges(5, [(3, 0), (3, 1), (3, 2), (1, 4)]).unwrap();
        let h = g.contract_edge(1, 3).unwrap();
        // merged vertex is 1, old 4 becomes 3
        assert_eq!(h.vertex_count(), 4);
        assert_eq!(h.multiplicity(0, 1), 1);
        assert_eq!(h.multiplicity(1, 2), 1);
        assert_eq!(h.multiplicity(1, 3), 1);
    }

    #[test]
    fn add_path_cases() {
        let c3 = LabeledMultigraph::cycle(3);
        let e = c3.add_path(0, 1, 1).unwrap();
        assert_eq!(e.multiplicity(0, 1), 2);
        assert_eq!(tau_matrix(&e).to_u64(), Some(5));

        let theta = c3.add_path(0, 1, 2).unwrap();
        assert_eq!(theta.vertex_count(), 4);
        assert_eq!(tau_matrix(&theta).to_u64(), Some(8));

        let closed = LabeledMultigraph::new(1).add_path(0, 0, 3).unwrap();
        assert_eq!(canonical_form(&closed), canonical_form(&c3));

        assert_eq!(c3.add_path(1, 1, 1), Err(Error::LoopForbidden(1)));
        assert_eq!(c3.add_path(0, 1, 0), Err(Error::ZeroPathLength));
    }

    #[test]
    fn glue_two_triangles() {
        let c3 = LabeledMultigraph::cycle(3);
        let g = c3.glue_at(0, &c3, 0).unwrap();
        assert_eq!(g.vertex_count(), 5);
        assert_eq!(g.edge_count(), 6);
        assert_eq!(tau_matrix(&g).to_u64(), Some(9));
    }

    #[test]
    fn simple_certificate() {
        let g = LabeledMultigraph::from_edges(3, [(0, 1), (1, 2), (1, 0)]).unwrap();
        let cert = g.simple_certificate();
        assert!(!cert.is_simple);
        assert!(LabeledMultigraph::complete(4).simple_certificate().is_simple);
    }

    #[test]
    fn cycle_square_structure() {
        let g = LabeledMultigraph::cycle_square(6);
        assert!(g.degrees().iter().all(|&d| d == 4));
        assert_eq!(g.edge_count(), 12);
        // C_5^2 is K_5
        assert_eq!(
            canonical_form(&LabeledMultigraph::cycle_square(5)),
            canonical_form(&LabeledMultigraph::complete(5))
        );
    }
}
