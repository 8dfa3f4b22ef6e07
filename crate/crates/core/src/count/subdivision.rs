//! Counting subdivisions of a skeleton multigraph without building them.
//!
//! If every edge slot `e` of a connected skeleton is replaced by a path of
//! length `ℓ_e`, a spanning tree of the result keeps all but one edge of each
//! path outside some skeleton spanning tree `T`, and all of each path in `T`.
//! Hence τ = Σ_T Π_{e ∉ T} ℓ_e.

use num_bigint::BigUint;
use num_traits::{One, Zero};

use super::TreeCount;
use crate::error::{Error, Result};
use crate::graph::{LabeledMultigraph, Vertex};

/// The spanning-tree polynomial of a skeleton, stored as the complement
/// (bitmask over edge slots) of every spanning tree.
#[derive(Clone, Debug)]
pub struct SubdivisionPolynomial {
    slots: Vec<(Vertex, Vertex)>,
    vertex_count: usize,
    complements: Vec<u64>,
}

impl SubdivisionPolynomial {
    /// Panics on more than 64 edge slots.
    pub fn new(skeleton: &LabeledMultigraph) -> Self {
        let slots = skeleton.edge_slots();
        assert!(slots.len() <= 64, "skeleton has too many edge slots");
        let n = skeleton.vertex_count();
        let mut complements = Vec::new();
        if n > 0 {
            let full: u64 = if slots.len() == 64 { u64::MAX } else { (1u64 << slots.len()) - 1 };
            let mut parent: Vec<usize> = (0..n).collect();
            enumerate_trees(&slots, 0, n - 1, 0, &mut parent, &mut |tree| complements.push(full & !tree));
        }
        Self {
            slots,
            vertex_count: n,
            complements,
        }
    }

    pub fn slots(&self) -> &[(Vertex, Vertex)] {
        &self.slots
    }

    pub fn tree_count(&self) -> usize {
        self.complements.len()
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    /// Exact evaluation; `None` on `u128` overflow.
    pub fn eval_u128(&self, lengths: &[u64]) -> Option<u128> {
        let mut total = 0u128;
        for &mask in &self.complements {
            let mut term = 1u128;
            let mut bits = mask;
            while bits != 0 {
                let i = bits.trailing_zeros() as usize;
                term = term.checked_mul(lengths[i] as u128)?;
                bits &= bits - 1;
            }
            total = total.checked_add(term)?;
        }
        Some(total)
    }

    pub fn eval(&self, lengths: &[u64]) -> BigUint {
        if let Some(v) = self.eval_u128(lengths) {
            return BigUint::from(v);
        }
        let mut total = BigUint::zero();
        for &mask in &self.complements {
            let mut term = BigUint::one();
            let mut bits = mask;
            while bits != 0 {
                let i = bits.trailing_zeros() as usize;
                term *= lengths[i];
                bits &= bits - 1;
            }
            total += term;
        }
        total
    }
}

fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        x = parent[x];
    }
    x
}

/// Chooses `remaining` more slots from `start..`, keeping the chosen set acyclic.
fn enumerate_trees(
    slots: &[(Vertex, Vertex)],
    start: usize,
    remaining: usize,
    chosen: u64,
    parent: &mut Vec<usize>,
    emit: &mut dyn FnMut(u64),
) {
    if remaining == 0 {
        emit(chosen);
        return;
    }
    if slots.len() - start < remaining {
        return;
    }
    for i in start..slots.len() {
        if slots.len() - i < remaining {
            break;
        }
        let (u, v) = slots[i];
        let (ru, rv) = (find(parent, u), find(parent, v));
        if ru == rv {
            continue;
        }
        let saved = parent.clone();
        parent[ru] = rv;
        enumerate_trees(slots, i + 1, remaining - 1, chosen | (1u64 << i), parent, emit);
        *parent = saved;
    }
}

fn check_lengths(slot_count: usize, lengths: &[u64]) -> Result<()> {
    if lengths.len() < slot_count {
        return Err(Error::MissingLength(lengths.len()));
    }
    if let Some(i) = lengths.iter().take(slot_count).position(|&l| l == 0) {
        return Err(Error::ZeroLength(i));
    }
    Ok(())
}

/// τ of the graph obtained by replacing edge slot `i` of `skeleton` (slots as
/// listed by [`LabeledMultigraph::edge_slots`]) with a path of length `lengths[i]`.
pub fn tau_subdivision(skeleton: &LabeledMultigraph, lengths: &[u64]) -> Result<TreeCount> {
    let poly = SubdivisionPolynomial::new(skeleton);
    check_lengths(poly.slots.len(), lengths)?;
    Ok(TreeCount(poly.eval(lengths)))
}

/// The explicit subdivided graph; skeleton vertices keep their labels and path
/// interiors are appended slot by slot.
pub fn subdivide(skeleton: &LabeledMultigraph, lengths: &[u64]) -> Result<LabeledMultigraph> {
    let slots = skeleton.edge_slots();
    check_lengths(slots.len(), lengths)?;
    let mut g = LabeledMultigraph::new(skeleton.vertex_count());
    for (&(u, v), &len) in slots.iter().zip(lengths) {
        g = g.add_path(u, v, len as usize)?;
    }
    Ok(g)
}
