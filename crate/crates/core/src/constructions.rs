//! Generators and closed-form counts for theta graphs and their relatives.
//!
//! Vertex layout for every theta-derived graph: the two branch vertices first
//! (`u = 0`, `v = 1`), then path interiors in `a`, `b`, `c` order, then the
//! interior of any added path.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::One;
use serde::Serialize;

use crate::count::TreeCount;
use crate::error::{Error, Result};
use crate::graph::{LabeledMultigraph, Vertex};

/// Three internally disjoint `u`–`v` paths of lengths `a`, `b`, `c`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct ThetaSpec {
    pub a: u64,
    pub b: u64,
    pub c: u64,
}

impl ThetaSpec {
    pub const fn new(a: u64, b: u64, c: u64) -> Self {
        Self { a, b, c }
    }

    pub fn lengths(&self) -> [u64; 3] {
        [self.a, self.b, self.c]
    }

    pub fn validate(&self) -> Result<()> {
        let l = self.lengths();
        if l.contains(&0) {
            return Err(Error::InvalidSpec(format!("theta {self}: path lengths must be positive")));
        }
        if l.iter().filter(|&&x| x == 1).count() > 1 {
            return Err(Error::NotSimple(format!("theta {self}: at most one path may have length 1")));
        }
        Ok(())
    }

    pub fn edges(&self) -> u64 {
        self.a + self.b + self.c
    }

    pub fn vertices(&self) -> u64 {
        self.a + self.b + self.c - 1
    }
}

impl fmt::Display for ThetaSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "theta:{},{},{}", self.a, self.b, self.c)
    }
}

/// Graph of a theta together with each path's vertex sequence from `u` to `v`.
fn theta_with_paths(lengths: &[u64]) -> (LabeledMultigraph, Vec<Vec<Vertex>>) {
    let mut g = LabeledMultigraph::new(2);
    let mut paths = Vec::with_capacity(lengths.len());
    for &len in lengths {
        let before = g.vertex_count();
        g = g.add_path(0, 1, len as usize).expect("anchors exist and length is positive");
        let mut p = vec![0];
        p.extend(before..g.vertex_count());
        p.push(1);
        paths.push(p);
    }
    (g, paths)
}

pub fn build_theta(spec: ThetaSpec) -> Result<LabeledMultigraph> {
    spec.validate()?;
    Ok(theta_with_paths(&spec.lengths()).0)
}

/// `ab + ac + bc`. A zero length is accepted: `Θ_{0,b,c}` is two cycles sharing
/// a vertex, with `bc` spanning trees.
pub fn tau_theta(spec: ThetaSpec) -> TreeCount {
    let (a, b, c) = (spec.a as u128, spec.b as u128, spec.c as u128);
    TreeCount::from(a * b + a * c + b * c)
}

/// Two cycles of lengths `a` and `b` sharing one vertex.
pub fn build_cycle_glue(a: u64, b: u64) -> Result<LabeledMultigraph> {
    build_bouquet(&BouquetSpec::new(vec![a, b]))
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct BouquetSpec {
    pub cycle_lengths: Vec<u64>,
}

impl BouquetSpec {
    pub fn new(cycle_lengths: Vec<u64>) -> Self {
        Self { cycle_lengths }
    }

    pub fn validate(&self) -> Result<()> {
        if self.cycle_lengths.is_empty() {
            return Err(Error::InvalidSpec("bouquet needs at least one cycle".into()));
        }
        if let Some(l) = self.cycle_lengths.iter().find(|&&l| l < 3) {
            return Err(Error::InvalidSpec(format!("bouquet cycle length {l} is below 3")));
        }
        Ok(())
    }

    pub fn edges(&self) -> u64 {
        self.cycle_lengths.iter().sum()
    }

    pub fn vertices(&self) -> u64 {
        self.edges() - (self.cycle_lengths.len() as u64 - 1)
    }
}

impl fmt::Display for BouquetSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.cycle_lengths.len() == 2 {
            return write!(f, "glue:{},{}", self.cycle_lengths[0], self.cycle_lengths[1]);
        }
        let parts: Vec<String> = self.cycle_lengths.iter().map(u64::to_string).collect();
        write!(f, "bouquet:{}", parts.join("+"))
    }
}

/// Cycles sharing vertex 0.
pub fn build_bouquet(spec: &BouquetSpec) -> Result<LabeledMultigraph> {
    spec.validate()?;
    let mut g = LabeledMultigraph::new(1);
    for &len in &spec.cycle_lengths {
        g = g.add_path(0, 0, len as usize)?;
    }
    Ok(g)
}

pub fn tau_bouquet(spec: &BouquetSpec) -> TreeCount {
    TreeCount(spec.cycle_lengths.iter().fold(BigUint::one(), |acc, &l| acc * l))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum VariantKind {
    /// Path between two interior points of `P_a`.
    V0,
    /// Path from the branch vertex `u` to a point of `P_a`.
    V1,
    /// Path between interior points of `P_a` and `P_b`.
    V2,
}

/// A theta graph plus one extra path of length `d`.
///
/// * `V0`: endpoints on `P_a` at distance `a1` from `u` and `a2` from `v`.
/// * `V1`: endpoints `u` and the point of `P_a` at distance `a1` from `u`
///   (`a1 = a` is `v` itself).
/// * `V2`: endpoints on `P_a` at distance `a1` from `u` and on `P_b` at
///   distance `b1` from `u`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct VariantSpec {
    pub kind: VariantKind,
    pub a: u64,
    pub b: u64,
    pub c: u64,
    pub d: u64,
    pub a1: u64,
    pub a2: u64,
    pub b1: u64,
}

impl VariantSpec {
    pub const fn v0(a: u64, b: u64, c: u64, d: u64, a1: u64, a2: u64) -> Self {
        Self { kind: VariantKind::V0, a, b, c, d, a1, a2, b1: 0 }
    }

    pub const fn v1(a: u64, b: u64, c: u64, d: u64, a1: u64) -> Self {
        Self { kind: VariantKind::V1, a, b, c, d, a1, a2: 0, b1: 0 }
    }

    pub const fn v2(a: u64, b: u64, c: u64, d: u64, a1: u64, b1: u64) -> Self {
        Self { kind: VariantKind::V2, a, b, c, d, a1, a2: 0, b1 }
    }

    pub fn theta(&self) -> ThetaSpec {
        ThetaSpec::new(self.a, self.b, self.c)
    }

    pub fn edges(&self) -> u64 {
        self.a + self.b + self.c + self.d
    }

    pub fn vertices(&self) -> u64 {
        self.a + self.b + self.c + self.d - 2
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |msg: &str| Err(Error::InvalidSpec(format!("{self}: {msg}")));
        if self.d == 0 {
            return bad("d ≥ 1 required");
        }
        self.theta().validate().map_err(|e| match e {
            Error::NotSimple(m) => Error::NotSimple(format!("{self}: {m}")),
            other => other,
        })?;
        match self.kind {
            VariantKind::V0 => {
                if self.a < 3 {
                    return bad("a ≥ 3 required");
                }
                if self.a1 < 1 || self.a2 < 1 {
                    return bad("a1 ≥ 1 and a2 ≥ 1 required");
                }
                if self.a1 + self.a2 >= self.a {
                    return bad("a1 + a2 < a required");
                }
                if self.a1 + self.a2 == self.a - 1 && self.d < 2 {
                    return Err(Error::NotSimple(format!("{self}: d > 1 required when a1 + a2 = a − 1")));
                }
            }
            VariantKind::V1 => {
                if self.a < 2 {
                    return bad("a ≥ 2 required");
                }
                if self.a1 < 1 || self.a1 > self.a {
                    return bad("1 ≤ a1 ≤ a required");
                }
                if self.a1 == 1 && self.d < 2 {
                    return Err(Error::NotSimple(format!("{self}: d ≥ 2 required when a1 = 1")));
                }
                if self.a1 == self.a && self.b.min(self.c) == 1 && self.d < 2 {
                    return Err(Error::NotSimple(format!(
                        "{self}: d ≥ 2 required when the path ends at v and min(a, b, c) = 1"
                    )));
                }
            }
            VariantKind::V2 => {
                if self.a < 2 || self.b < 2 {
                    return bad("a ≥ 2 and b ≥ 2 required");
                }
                if self.a1 < 1 || self.b1 < 1 {
                    return bad("a1 ≥ 1 and b1 ≥ 1 required");
                }
                if self.a1 >= self.a || self.b1 >= self.b {
                    return bad("a − a1 ≥ 1 and b − b1 ≥ 1 required");
                }
            }
        }
        Ok(())
    }
}

impl fmt::Display for VariantSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let head = format!("{},{},{},{}", self.a, self.b, self.c, self.d);
        match self.kind {
            VariantKind::V0 => write!(f, "v0:{head};{},{}", self.a1, self.a2),
            VariantKind::V1 => write!(f, "v1:{head};{}", self.a1),
            VariantKind::V2 => write!(f, "v2:{head};{},{}", self.a1, self.b1),
        }
    }
}

pub fn build_variant(spec: VariantSpec) -> Result<LabeledMultigraph> {
    spec.validate()?;
    let (g, paths) = theta_with_paths(&spec.theta().lengths());
    let pa = &paths[0];
    let (x, y) = match spec.kind {
        VariantKind::V0 => (pa[spec.a1 as usize], pa[(spec.a - spec.a2) as usize]),
        VariantKind::V1 => (0, pa[spec.a1 as usize]),
        VariantKind::V2 => (pa[spec.a1 as usize], paths[1][spec.b1 as usize]),
    };
    g.add_path(x, y, spec.d as usize)
}

/// Closed-form τ of [`build_variant`]; validates the spec first.
pub fn tau_variant(spec: VariantSpec) -> Result<TreeCount> {
    spec.validate()?;
    let t = |a: u64, b: u64, c: u64| -> u128 {
        let (a, b, c) = (a as u128, b as u128, c as u128);
        a * b + a * c + b * c
    };
    let VariantSpec { a, b, c, d, a1, a2, b1, .. } = spec;
    let base = d as u128 * t(a, b, c);
    let extra = match spec.kind {
        VariantKind::V0 => {
            let inner = a1 + a2;
            (a - inner) as u128 * t(inner, b, c)
        }
        VariantKind::V1 => a1 as u128 * t(a - a1, b, c),
        VariantKind::V2 => {
            let (a2, b2) = ((a - a1) as u128, (b - b1) as u128);
            let (a, b, c, a1, b1) = (a as u128, b as u128, c as u128, a1 as u128, b1 as u128);
            c * (a1 + b1) * (a2 + b2) + a1 * a2 * b + b1 * b2 * a
        }
    };
    Ok(TreeCount::from(base + extra))
}

fn validate_generalized(lengths: &[u64]) -> Result<()> {
    if lengths.len() < 3 {
        return Err(Error::InvalidSpec(format!(
            "generalized theta needs at least 3 paths, got {}",
            lengths.len()
        )));
    }
    if lengths.contains(&0) {
        return Err(Error::InvalidSpec("generalized theta path lengths must be positive".into()));
    }
    if lengths.iter().filter(|&&l| l == 1).count() > 1 {
        return Err(Error::NotSimple("at most one path may have length 1".into()));
    }
    Ok(())
}

/// Two anchors joined by `lengths.len() ≥ 3` internally disjoint paths.
pub fn build_generalized_theta(lengths: &[u64]) -> Result<LabeledMultigraph> {
    validate_generalized(lengths)?;
    Ok(theta_with_paths(lengths).0)
}

/// Elementary symmetric polynomial `e_{k−1}` of the path lengths.
pub fn tau_generalized_theta(lengths: &[u64]) -> TreeCount {
    let mut total = BigUint::default();
    for skip in 0..lengths.len() {
        let term = lengths
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != skip)
            .fold(BigUint::one(), |acc, (_, &l)| acc * l);
        total += term;
    }
    TreeCount(total)
}

/// Any named construction, as written on the command line.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum ConstructionSpec {
    Theta(ThetaSpec),
    Bouquet(BouquetSpec),
    Variant(VariantSpec),
    Generalized(Vec<u64>),
}

impl ConstructionSpec {
    pub fn build(&self) -> Result<LabeledMultigraph> {
        match self {
            Self::Theta(s) => build_theta(*s),
            Self::Bouquet(s) => build_bouquet(s),
            Self::Variant(s) => build_variant(*s),
            Self::Generalized(l) => build_generalized_theta(l),
        }
    }

    pub fn closed_form(&self) -> Result<TreeCount> {
        match self {
            Self::Theta(s) => s.validate().map(|_| tau_theta(*s)),
            Self::Bouquet(s) => s.validate().map(|_| tau_bouquet(s)),
            Self::Variant(s) => tau_variant(*s),
            Self::Generalized(l) => validate_generalized(l).map(|_| tau_generalized_theta(l)),
        }
    }
}

impl fmt::Display for ConstructionSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Theta(s) => s.fmt(f),
            Self::Bouquet(s) => s.fmt(f),
            Self::Variant(s) => s.fmt(f),
            Self::Generalized(l) => {
                let parts: Vec<String> = l.iter().map(u64::to_string).collect();
                write!(f, "gen:{}", parts.join("+"))
            }
        }
    }
}

fn parse_list(s: &str, sep: char) -> Result<Vec<u64>> {
    s.split(sep)
        .map(|t| {
            t.trim()
                .parse::<u64>()
                .map_err(|_| Error::InvalidSpec(format!("`{t}` is not a nonnegative integer")))
        })
        .collect()
}

impl FromStr for ConstructionSpec {
    type Err = Error;

    /// `theta:a,b,c`, `glue:a,b`, `bouquet:c1+c2+…`, `v0:a,b,c,d;a1,a2`,
    /// `v1:a,b,c,d;a1`, `v2:a,b,c,d;a1,b1`, `gen:l1+l2+…`.
    fn from_str(s: &str) -> Result<Self> {
        let (tag, rest) = s
            .split_once(':')
            .ok_or_else(|| Error::InvalidSpec(format!("`{s}`: expected `<kind>:<params>`")))?;
        let arity = |v: &[u64], k: usize| -> Result<()> {
            if v.len() == k {
                Ok(())
            } else {
                Err(Error::InvalidSpec(format!("`{s}`: expected {k} values, found {}", v.len())))
            }
        };
        match tag {
            "theta" => {
                let v = parse_list(rest, ',')?;
                arity(&v, 3)?;
                Ok(Self::Theta(ThetaSpec::new(v[0], v[1], v[2])))
            }
            "glue" => {
                let v = parse_list(rest, ',')?;
                arity(&v, 2)?;
                Ok(Self::Bouquet(BouquetSpec::new(v)))
            }
            "bouquet" => Ok(Self::Bouquet(BouquetSpec::new(parse_list(rest, '+')?))),
            "gen" => Ok(Self::Generalized(parse_list(rest, '+')?)),
            "v0" | "v1" | "v2" => {
                let (head, offs) = rest
                    .split_once(';')
                    .ok_or_else(|| Error::InvalidSpec(format!("`{s}`: expected `a,b,c,d;offsets`")))?;
                let h = parse_list(head, ',')?;
                arity(&h, 4)?;
                let o = parse_list(offs, ',')?;
                let spec = match tag {
                    "v0" => {
                        arity(&o, 2)?;
                        VariantSpec::v0(h[0], h[1], h[2], h[3], o[0], o[1])
                    }
                    "v1" => {
                        arity(&o, 1)?;
                        VariantSpec::v1(h[0], h[1], h[2], h[3], o[0])
                    }
                    _ => {
                        arity(&o, 2)?;
                        VariantSpec::v2(h[0], h[1], h[2], h[3], o[0], o[1])
                    }
                };
                Ok(Self::Variant(spec))
            }
            other => Err(Error::InvalidSpec(format!("unknown construction kind `{other}`"))),
        }
    }
}

/// Every valid variant spec with `a + b + c + d ≤ max_total`.
pub fn all_variant_specs(max_total: u64) -> Vec<VariantSpec> {
    let mut out = Vec::new();
    for a in 1..=max_total {
        for b in 1..=max_total - a {
            for c in 1..=max_total - a - b {
                for d in 1..=max_total - a - b - c {
                    for a1 in 0..=a {
                        for a2 in 0..=a {
                            let v0 = VariantSpec::v0(a, b, c, d, a1, a2);
                            if v0.validate().is_ok() {
                                out.push(v0);
                            }
                        }
                        let v1 = VariantSpec::v1(a, b, c, d, a1);
                        if v1.validate().is_ok() {
                            out.push(v1);
                        }
                        for b1 in 0..=b {
                            let v2 = VariantSpec::v2(a, b, c, d, a1, b1);
                            if v2.validate().is_ok() {
                                out.push(v2);
                            }
                        }
                    }
                }
            }
        }
    }
    out
}

/// Every simple theta with `a + b + c ≤ max_total` (ordered triples).
pub fn all_theta_specs(max_total: u64) -> Vec<ThetaSpec> {
    let mut out = Vec::new();
    for a in 1..=max_total {
        for b in 1..=max_total - a {
            for c in 1..=max_total - a - b {
                let s = ThetaSpec::new(a, b, c);
                if s.validate().is_ok() {
                    out.push(s);
                }
            }
        }
    }
    out
}
