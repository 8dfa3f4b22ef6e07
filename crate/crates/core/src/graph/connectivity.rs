use super::{LabeledMultigraph, Vertex};
use crate::error::{Error, Result};

impl LabeledMultigraph {
    /// Component index for every vertex, numbered in order of first appearance.
    pub fn components(&self) -> Vec<usize> {
        let n = self.vertex_count();
        let adj = self.adjacency();
        let mut comp = vec![usize::MAX; n];
        let mut next = 0;
        let mut stack = Vec::new();
        for s in 0..n {
            if comp[s] != usize::MAX {
                continue;
            }
            comp[s] = next;
            stack.push(s);
            while let Some(v) = stack.pop() {
                for &(w, _) in &adj[v] {
                    if comp[w] == usize::MAX {
                        comp[w] = next;
                        stack.push(w);
                    }
                }
            }
            next += 1;
        }
        comp
    }

    pub fn component_count(&self) -> usize {
        self.components().into_iter().max().map_or(0, |c| c + 1)
    }

    /// The empty graph counts as connected, as does a single vertex.
    pub fn is_connected(&self) -> bool {
        self.component_count() <= 1
    }

    /// Pairs whose removal disconnects their component. A pair with
    /// multiplicity ≥ 2 is never a bridge.
    pub fn bridges(&self) -> Vec<(Vertex, Vertex)> {
        let n = self.vertex_count();
        let adj = self.adjacency();
        let mut disc = vec![usize::MAX; n];
        let mut low = vec![0usize; n];
        let mut timer = 0;
        let mut out = Vec::new();
        // iterative DFS: (vertex, parent, next neighbour index)
        for root in 0..n {
            if disc[root] != usize::MAX {
                continue;
            }
            let mut stack: Vec<(Vertex, Option<Vertex>, usize)> = vec![(root, None, 0)];
            disc[root] = timer;
            low[root] = timer;
            timer += 1;
            while let Some(&mut (v, parent, ref mut idx)) = stack.last_mut() {
                if *idx < adj[v].len() {
                    let (w, m) = adj[v][*idx];
                    *idx += 1;
                    if Some(w) == parent && m == 1 {
                        continue;
                    }
                    if disc[w] == usize::MAX {
                        disc[w] = timer;
                        low[w] = timer;
                        timer += 1;
                        stack.push((w, Some(v), 0));
                    } else {
                        low[v] = low[v].min(disc[w]);
                    }
                } else {
                    stack.pop();
                    if let Some(p) = parent {
                        low[p] = low[p].min(low[v]);
                        if low[v] > disc[p] {
                            out.push(if p < v { (p, v) } else { (v, p) });
                        }
                    }
                }
            }
        }
        out.sort_unstable();
        out
    }

    /// True iff the connected graph has no bridge.
    pub fn is_two_edge_connected(&self) -> Result<bool> {
        if !self.is_connected() {
            return Err(Error::NotConnected);
        }
        Ok(self.bridges().is_empty())
    }

    /// Cut vertices of the underlying simple graph.
    pub fn articulation_points(&self) -> Vec<Vertex> {
        let n = self.vertex_count();
        let adj = self.adjacency();
        let mut disc = vec![usize::MAX; n];
        let mut low = vec![0usize; n];
        let mut is_cut = vec![false; n];
        let mut timer = 0;
        for root in 0..n {
            if disc[root] != usize::MAX {
                continue;
            }
            let mut root_children = 0;
            let mut stack: Vec<(Vertex, Option<Vertex>, usize)> = vec![(root, None, 0)];
            disc[root] = timer;
            low[root] = timer;
            timer += 1;
            while let Some(&mut (v, parent, ref mut idx)) = stack.last_mut() {
                if *idx < adj[v].len() {
                    let (w, _) = adj[v][*idx];
                    *idx += 1;
                    if Some(w) == parent {
                        continue;
                    }
                    if disc[w] == usize::MAX {
                        disc[w] = timer;
                        low[w] = timer;
                        timer += 1;
                        if v == root {
                            root_children += 1;
                        }
                        stack.push((w, Some(v), 0));
                    } else {
                        low[v] = low[v].min(disc[w]);
                    }
                } else {
                    stack.pop();
                    if let Some(p) = parent {
                        low[p] = low[p].min(low[v]);
                        if p != root && low[v] >= disc[p] {
                            is_cut[p] = true;
                        }
                    }
                }
            }
            if root_children > 1 {
                is_cut[root] = true;
            }
        }
        (0..n).filter(|&v| is_cut[v]).collect()
    }

    /// Connected with no cut vertex. Two vertices joined by at least two
    /// parallel edges qualify; a single edge does not.
    pub fn is_two_connected(&self) -> bool {
        match self.vertex_count() {
            0 | 1 => false,
            2 => self.multiplicity(0, 1) >= 2,
            _ => self.is_connected() && self.articulation_points().is_empty(),
        }
    }
}
