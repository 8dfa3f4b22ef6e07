//! Representations `n = ab + ac + bc` and Euler's idoneal numbers.
//!
//! `ab + ac + bc = n` is equivalent to `(a + b)(a + c) = n + a²`, so for a
//! fixed smallest part `a` every solution is a divisor `d = a + b` of `n + a²`.
//! With `a < b < c` we need `3a² < n`, `2a < d` and `d² < n + a²`.

use serde::Serialize;

use crate::exec::Exec;

/// Euler's 65 numbers with no representation `ab + ac + bc`, `0 < a < b < c`.
pub const EULER_IDONEAL: [u64; 65] = [
    1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 12, 13, 15, 16, 18, 21, 22, 24, 25, 28, 30, 33, 37, 40, 42, 45, 48,
    57, 58, 60, 70, 72, 78, 85, 88, 93, 102, 105, 112, 120, 130, 133, 165, 168, 177, 190, 210, 232,
    240, 253, 273, 280, 312, 330, 345, 357, 385, 408, 462, 520, 760, 840, 1320, 1365, 1848,
];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Representation {
    pub a: u64,
    pub b: u64,
    pub c: u64,
}

impl Representation {
    pub fn value(&self) -> u64 {
        self.a * self.b + self.a * self.c + self.b * self.c
    }

    pub fn sum(&self) -> u64 {
        self.a + self.b + self.c
    }
}

/// All `(a, b, c)` with `1 ≤ a ≤ b ≤ c` and `ab + ac + bc = n`, lexicographic.
fn weak_representations(n: u64) -> Vec<Representation> {
    let mut out = Vec::new();
    let mut a = 1u64;
    while 3 * a * a <= n {
        let m = n + a * a;
        // d = a + b ranges over divisors with 2a ≤ d and d² ≤ m (so b ≤ c)
        let mut d = 2 * a;
        while d * d <= m {
            if m % d == 0 {
                let b = d - a;
                let c = m / d - a;
                out.push(Representation { a, b, c });
            }
            d += 1;
        }
        a += 1;
    }
    out
}

/// Triples `0 < a < b < c` with `ab + ac + bc = n`, lexicographic.
pub fn strict_representations(n: u64) -> Vec<Representation> {
    weak_representations(n)
        .into_iter()
        .filter(|r| r.a < r.b && r.b < r.c)
        .collect()
}

/// True when `n` has no strict representation.
pub fn is_idoneal(n: u64) -> bool {
    let mut a = 1u64;
    while 3 * a * a < n {
        let m = n + a * a;
        let mut d = 2 * a + 1;
        while d * d < m {
            if m % d == 0 {
                return false;
            }
            d += 1;
        }
        a += 1;
    }
    true
}

/// Triples `1 ≤ a ≤ b ≤ c` with at most one part equal to 1, so that
/// `Θ_{a,b,c}` is simple; sorted by `a + b + c`, then lexicographically.
pub fn theta_representations(n: u64) -> Vec<Representation> {
    let mut out: Vec<Representation> = weak_representations(n)
        .into_iter()
        .filter(|r| !(r.a == 1 && r.b == 1))
        .collect();
    out.sort_by_key(|r| (r.sum(), *r));
    out
}

/// Representation-free `n` in `1..=hi`, ascending.
pub fn scan(hi: u64, exec: Exec) -> Vec<u64> {
    if hi == 0 {
        return Vec::new();
    }
    exec.filter_range(1, hi, is_idoneal)
}
