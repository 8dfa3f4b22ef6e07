//! Exact spanning-tree counts.
//!
//! Two independent routes are provided: the Laplacian cofactor
//! ([`tau_matrix`]) and memoized deletion–contraction ([`tau_dc`]). They share
//! nothing beyond the graph type, so agreement between them is meaningful.

mod dc;
mod matrix;
mod subdivision;

use std::fmt;
use std::ops::{Add, Mul};

use num_bigint::BigUint;
use num_traits::{ToPrimitive, Zero};
use serde::{Serialize, Serializer};

pub use dc::{tau_dc, DcCounter, DEFAULT_MEMO_CAP, MEMO_CAP_ENV};
pub use matrix::{tau_matrix, tau_matrix_dense, tau_matrix_sparse, DENSE_LIMIT};
pub use subdivision::{subdivide, tau_subdivision, SubdivisionPolynomial};

/// Number of spanning trees. Zero exactly for disconnected graphs.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TreeCount(pub BigUint);

impl TreeCount {
    pub fn zero() -> Self {
        Self(BigUint::zero())
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn to_u64(&self) -> Option<u64> {
        self.0.to_u64()
    }

    pub fn to_u128(&self) -> Option<u128> {
        self.0.to_u128()
    }
}

impl From<u64> for TreeCount {
    fn from(v: u64) -> Self {
        Self(BigUint::from(v))
    }
}

impl From<u128> for TreeCount {
    fn from(v: u128) -> Self {
        Self(BigUint::from(v))
    }
}

impl From<BigUint> for TreeCount {
    fn from(v: BigUint) -> Self {
        Self(v)
    }
}

impl PartialEq<u64> for TreeCount {
    fn eq(&self, other: &u64) -> bool {
        self.to_u64() == Some(*other)
    }
}

impl Add for TreeCount {
    type Output = TreeCount;
    fn add(self, rhs: Self) -> Self {
        Self(self.0 + rhs.0)
    }
}

impl Mul for TreeCount {
    type Output = TreeCount;
    fn mul(self, rhs: Self) -> Self {
        Self(self.0 * rhs.0)
    }
}

impl fmt::Display for TreeCount {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

/// Counts serialize as decimal strings so they survive any JSON consumer.
impl Serialize for TreeCount {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.0.to_string())
    }
}
