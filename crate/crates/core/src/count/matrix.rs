//! Matrix-Tree theorem: τ(G) is the (0,0)-cofactor of the Laplacian.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::{BigInt, BigUint, Sign};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::TreeCount;
use crate::graph::LabeledMultigraph;

/// Above this many vertices [`tau_matrix`] switches from dense Bareiss
/// elimination to sparse exact elimination.
pub const DENSE_LIMIT: usize = 64;

pub fn tau_matrix(g: &LabeledMultigraph) -> TreeCount {
    if g.vertex_count() <= DENSE_LIMIT {
        tau_matrix_dense(g)
    } else {
        tau_matrix_sparse(g)
    }
}

/// Reduced Laplacian with row and column 0 removed.
fn reduced_laplacian(g: &LabeledMultigraph) -> Vec<Vec<i128>> {
    let n = g.vertex_count();
    let mut m = vec![vec![0i128; n - 1]; n - 1];
    for ((u, v), mult) in g.edges() {
        let mult = mult as i128;
        for x in [u, v] {
            if x > 0 {
                m[x - 1][x - 1] += mult;
            }
        }
        if u > 0 && v > 0 {
            m[u - 1][v - 1] -= mult;
            m[v - 1][u - 1] -= mult;
        }
    }
    m
}

/// Fraction-free Gaussian elimination over exact integers.
pub fn tau_matrix_dense(g: &LabeledMultigraph) -> TreeCount {
    let n = g.vertex_count();
    if n <= 1 {
        return TreeCount::from(1u64);
    }
    if !g.is_connected() {
        return TreeCount::zero();
    }
    let lap = reduced_laplacian(g);
    let det = match bareiss_i128(lap.clone()) {
        Some(d) => BigInt::from(d),
        None => bareiss_big(lap.into_iter().map(|r| r.into_iter().map(BigInt::from).collect()).collect()),
    };
    to_count(det)
}

fn to_count(det: BigInt) -> TreeCount {
    match det.sign() {
        Sign::Minus => panic!("Laplacian cofactor is never negative"),
        _ => TreeCount(det.magnitude().clone()),
    }
}

/// `None` when an intermediate value overflows.
fn bareiss_i128(mut a: Vec<Vec<i128>>) -> Option<i128> {
    let n = a.len();
    let mut sign = 1i128;
    let mut prev = 1i128;
    for k in 0..n {
        if a[k][k] == 0 {
            let swap = (k + 1..n).find(|&r| a[r][k] != 0);
            match swap {
                Some(r) => {
                    a.swap(k, r);
                    sign = -sign;
                }
                None => return Some(0),
            }
        }
        let pivot = a[k][k];
        for i in k + 1..n {
            let aik = a[i][k];
            for j in k + 1..n {
                let num = pivot.checked_mul(a[i][j])?.checked_sub(aik.checked_mul(a[k][j])?)?;
                a[i][j] = num / prev;
            }
            a[i][k] = 0;
        }
        prev = pivot;
    }
    Some(sign * a[n - 1][n - 1])
}

fn bareiss_big(mut a: Vec<Vec<BigInt>>) -> BigInt {
    let n = a.len();
    let mut negate = false;
    let mut prev = BigInt::one();
    for k in 0..n {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    negate = !negate;
                }
                None => return BigInt::zero(),
            }
        }
        let pivot = a[k][k].clone();
        for i in k + 1..n {
            let aik = std::mem::take(&mut a[i][k]);
            for j in k + 1..n {
                let num = &pivot * &a[i][j] - &aik * &a[k][j];
                a[i][j] = num / &prev;
            }
        }
        prev = pivot;
    }
    let det = a[n - 1][n - 1].clone();
    if negate {
        -det
    } else {
        det
    }
}

/// Symmetric elimination over the rationals in minimum-degree order.
///
/// The reduced Laplacian of a connected graph is positive definite, so every
/// Schur-complement pivot is positive and no pivoting is needed; fill stays
/// small on the long-path graphs this is used for.
pub fn tau_matrix_sparse(g: &LabeledMultigraph) -> TreeCount {
    let n = g.vertex_count();
    if n <= 1 {
        return TreeCount::from(1u64);
    }
    if !g.is_connected() {
        return TreeCount::zero();
    }
    // rows[v] holds off-diagonal entries; diag[v] the diagonal. Vertex 0 is dropped.
    let mut rows: Vec<BTreeMap<usize, BigRational>> = vec![BTreeMap::new(); n];
    let mut diag: Vec<BigRational> = vec![BigRational::zero(); n];
    for ((u, v), m) in g.edges() {
        let m = BigRational::from_integer(BigInt::from(m));
        for x in [u, v] {
            if x > 0 {
                diag[x] += &m;
            }
        }
        if u > 0 && v > 0 {
            *rows[u].entry(v).or_insert_with(BigRational::zero) -= &m;
            *rows[v].entry(u).or_insert_with(BigRational::zero) -= &m;
        }
    }
    let mut queue: BTreeSet<(usize, usize)> = (1..n).map(|v| (rows[v].len(), v)).collect();
    let mut det = BigRational::one();
    while let Some((_, p)) = queue.pop_first() {
        let pivot = diag[p].clone();
        if !pivot.is_positive() {
            return TreeCount::zero();
        }
        det *= &pivot;
        let row = std::mem::take(&mut rows[p]);
        let nbrs: Vec<(usize, BigRational)> = row.into_iter().collect();
        for &(i, _) in &nbrs {
            queue.remove(&(rows[i].len(), i));
            rows[i].remove(&p);
        }
        for (ii, (i, lip)) in nbrs.iter().enumerate() {
            let scaled = lip / &pivot;
            diag[*i] -= &scaled * lip;
            for (j, lpj) in nbrs.iter().skip(ii + 1) {
                let delta = &scaled * lpj;
                let e = rows[*i].entry(*j).or_insert_with(BigRational::zero);
                *e -= &delta;
                let zero = e.is_zero();
                if zero {
                    rows[*i].remove(j);
                }
                let e = rows[*j].entry(*i).or_insert_with(BigRational::zero);
                *e -= &delta;
                if zero {
                    rows[*j].remove(i);
                }
            }
        }
        for &(i, _) in &nbrs {
            queue.insert((rows[i].len(), i));
        }
    }
    assert!(det.is_integer(), "cofactor of an integer matrix is an integer");
    let det = det.to_integer();
    TreeCount(det.to_biguint().unwrap_or_else(BigUint::zero))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{build_theta, ThetaSpec};

    #[test]
    fn known_counts() {
        assert_eq!(tau_matrix(&LabeledMultigraph::complete(4)), 16);
        assert_eq!(tau_matrix(&LabeledMultigraph::new(1)), 1);
        assert_eq!(tau_matrix(&LabeledMultigraph::complete(7)), 16807);
        assert_eq!(tau_matrix(&LabeledMultigraph::new(3)), 0);
    }

    #[test]
    fn cayley_up_to_twenty() {
        for n in 2..=20u32 {
            let expect = BigUint::from(n).pow(n - 2);
            assert_eq!(tau_matrix(&LabeledMultigraph::complete(n as usize)).0, expect, "K_{n}");
            assert_eq!(tau_matrix_sparse(&LabeledMultigraph::complete(n as usize)).0, expect);
        }
    }

    #[test]
    fn bignum_fallback_is_exact() {
        // K_40 overflows i128 inside Bareiss
        let n = 40u32;
        let expect = BigUint::from(n).pow(n - 2);
        assert!(expect.bits() > 127);
        assert_eq!(tau_matrix_dense(&LabeledMultigraph::complete(40)).0, expect);
    }

    #[test]
    fn dense_and_sparse_agree_on_long_theta() {
        let g = build_theta(ThetaSpec::new(17, 23, 31)).unwrap();
        let expect = 17 * 23 + 17 * 31 + 23 * 31;
        assert_eq!(tau_matrix_dense(&g), expect);
        assert_eq!(tau_matrix_sparse(&g), expect);
        let big = build_theta(ThetaSpec::new(2, 900, 1100)).unwrap();
        assert_eq!(tau_matrix(&big), 2 * 900 + 2 * 1100 + 900 * 1100);
    }

    #[test]
    fn sparse_detects_disconnection() {
        let g = LabeledMultigraph::cycle(3).disjoint_union(&LabeledMultigraph::cycle(4));
        assert!(tau_matrix_sparse(&g).is_zero());
        assert!(tau_matrix_dense(&g).is_zero());
    }

    #[test]
    fn petersen_has_2000_trees() {
        let p = LabeledMultigraph::petersen();
        assert_eq!(tau_matrix_dense(&p), 2000);
        assert_eq!(tau_matrix_sparse(&p), 2000);
    }
}
