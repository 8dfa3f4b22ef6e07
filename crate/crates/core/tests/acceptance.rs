//! Acceptance criteria, one PASS/FAIL line each.
//!
//! Expected values are either quoted data (the variant table, Euler's list,
//! the exceptional sets) or computed here by code that does not go through
//! the library: a local Kirchhoff determinant, a brute-force triple sieve, an
//! edge-subset search over small complete graphs, Fibonacci and Cayley.
//!
//! Runtime limits are part of each criterion and are measured on the test
//! profile (opt-level 3).

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use treeforge::constructions::{
    all_theta_specs, all_variant_specs, build_cycle_glue, build_generalized_theta, build_theta, build_variant,
    tau_generalized_theta, tau_theta, tau_variant, VariantKind,
};
use treeforge::graph::LabeledMultigraph;
use treeforge::idoneal;
use treeforge::search::{alpha_exact, beta_exact, verify_no_smaller_graph, Enumerator, Verdict};
use treeforge::verify::{self, generalized_theta_lengths, Suite, SuiteOptions, TABLE1};
use treeforge::witness::{self, VARIANT_TABLE};
use treeforge::{tau_dc, tau_matrix, Exec};

/// Kirchhoff cofactor by fraction-free elimination over i128.
fn kirchhoff(g: &LabeledMultigraph) -> u128 {
    let n = g.vertex_count();
    if n <= 1 {
        return 1;
    }
    let mut lap = vec![vec![0i128; n]; n];
    for ((u, v), m) in g.edges() {
        let m = m as i128;
        lap[u][u] += m;
        lap[v][v] += m;
        lap[u][v] -= m;
        lap[v][u] -= m;
    }
    let k = n - 1;
    let mut a: Vec<Vec<i128>> = lap.into_iter().take(k).map(|row| row[..k].to_vec()).collect();
    let mut sign = 1i128;
    let mut prev = 1i128;
    for i in 0..k {
        if a[i][i] == 0 {
            match (i + 1..k).find(|&r| a[r][i] != 0) {
                Some(r) => {
                    a.swap(i, r);
                    sign = -sign;
                }
                None => return 0,
            }
        }
        for r in i + 1..k {
            for c in i + 1..k {
                a[r][c] = (a[r][c] * a[i][i] - a[r][i] * a[i][c]) / prev;
            }
        }
        prev = a[i][i];
    }
    (sign * a[k - 1][k - 1]) as u128
}

fn equals(t: &treeforge::TreeCount, want: u128) -> bool {
    t.to_u128() == Some(want)
}

struct Outcome {
    pass: bool,
    detail: String,
}

impl Outcome {
    fn new(pass: bool, detail: impl Into<String>) -> Self {
        Self { pass, detail: detail.into() }
    }
}

fn criterion(results: &mut Vec<bool>, id: u32, name: &str, limit: Duration, f: impl FnOnce() -> Outcome) {
    let start = Instant::now();
    let out = f();
    let elapsed = start.elapsed();
    let in_time = elapsed < limit;
    let pass = out.pass && in_time;
    println!(
        "{} criterion {id} ({name}): {} [{:.2?} of {:?} allowed]",
        if pass { "PASS" } else { "FAIL" },
        out.detail,
        elapsed,
        limit
    );
    results.push(pass);
}

fn table1() -> Outcome {
    let expected = [21u128, 24, 30, 32, 35, 30, 29, 35, 36, 24, 20, 32, 35, 32];
    let mut bad = Vec::new();
    for ((spec, _), want) in TABLE1.iter().zip(expected) {
        let closed = tau_variant(*spec).ok();
        let g = build_variant(*spec).expect("table graphs are valid");
        let ok = closed.as_ref().is_some_and(|t| equals(t, want)) && equals(&tau_matrix(&g), want) && kirchhoff(&g) == want;
        if !ok {
            bad.push(spec.to_string());
        }
    }
    Outcome::new(bad.is_empty(), format!("14 rows, mismatches {bad:?}"))
}

fn closed_form_sweeps() -> Outcome {
    let mut bad = Vec::new();
    let thetas = all_theta_specs(15);
    for s in &thetas {
        let [a, b, c] = s.lengths().map(u128::from);
        let want = a * b + a * c + b * c;
        let g = build_theta(*s).unwrap();
        if !equals(&tau_theta(*s), want) || !equals(&tau_matrix(&g), want) || kirchhoff(&g) != want {
            bad.push(s.to_string());
        }
    }
    let variants = all_variant_specs(12);
    let variant_bad: Vec<String> = Exec::Parallel
        .map(&variants, |&s| {
            let g = build_variant(s).unwrap();
            let k = kirchhoff(&g);
            let ok = tau_variant(s).is_ok_and(|t| equals(&t, k)) && equals(&tau_matrix(&g), k);
            (!ok).then(|| s.to_string())
        })
        .into_iter()
        .flatten()
        .collect();
    bad.extend(variant_bad);
    let generalized = generalized_theta_lengths(14);
    for lengths in &generalized {
        // e_{k-1}: sum over paths of the product of the others
        let want: u128 = (0..lengths.len())
            .map(|skip| {
                lengths
                    .iter()
                    .enumerate()
                    .filter(|&(i, _)| i != skip)
                    .map(|(_, &l)| l as u128)
                    .product::<u128>()
            })
            .sum();
        let g = build_generalized_theta(lengths).unwrap();
        if !equals(&tau_generalized_theta(lengths), want) || kirchhoff(&g) != want {
            bad.push(format!("gen:{lengths:?}"));
        }
    }
    Outcome::new(
        bad.is_empty() && variants.len() > 1000,
        format!(
            "{} thetas, {} variants, {} generalized thetas; mismatches {}",
            thetas.len(),
            variants.len(),
            generalized.len(),
            bad.len()
        ),
    )
}

fn bound_lemmas() -> Outcome {
    let variants = all_variant_specs(12);
    let lemma_bad: Vec<String> = Exec::Parallel
        .map(&variants, |&s| {
            let tau = kirchhoff(&build_variant(s).unwrap());
            let [a, b, c] = s.theta().lengths().map(u128::from);
            let base = a * b + a * c + b * c;
            let d = s.d as u128;
            let ok = match s.kind {
                VariantKind::V0 if s.a >= 4 && s.d == 1 => tau >= (d + 1) * base,
                VariantKind::V0 | VariantKind::V1 => 2 * tau >= (2 * d + 1) * base,
                VariantKind::V2 => tau >= (d + 1) * base,
            };
            (!ok).then(|| s.to_string())
        })
        .into_iter()
        .flatten()
        .collect();

    let mut jobs = Vec::new();
    for s in all_theta_specs(11) {
        for d in 1..=12 - s.edges() {
            jobs.push((s, d));
        }
    }
    let corollary: Vec<(usize, Vec<String>)> = Exec::Parallel.map(&jobs, |&(s, d)| {
        let g = build_theta(s).unwrap();
        let [a, b, c] = s.lengths().map(u128::from);
        let base = a * b + a * c + b * c;
        let n = g.vertex_count();
        let mut checked = 0;
        let mut bad = Vec::new();
        for x in 0..n {
            for y in x..n {
                let Ok(h) = g.add_path(x, y, d as usize) else { continue };
                if !h.is_simple() {
                    continue;
                }
                checked += 1;
                let tau = kirchhoff(&h);
                let ok = match d {
                    1 => 2 * tau >= 3 * base,
                    2 => 2 * tau >= 5 * base,
                    _ => tau >= d as u128 * base,
                };
                if !ok {
                    bad.push(format!("{s} + {d}-path {x}-{y}"));
                }
            }
        }
        (checked, bad)
    });
    let checked: usize = corollary.iter().map(|(c, _)| c).sum();
    let corollary_bad: Vec<&String> = corollary.iter().flat_map(|(_, b)| b).collect();
    Outcome::new(
        lemma_bad.is_empty() && corollary_bad.is_empty(),
        format!(
            "{} variant graphs, {checked} theta + path graphs; counterexamples {} + {}",
            variants.len(),
            lemma_bad.len(),
            corollary_bad.len()
        ),
    )
}

fn random_multigraph(rng: &mut ChaCha8Rng) -> LabeledMultigraph {
    let n = rng.random_range(1..=10usize);
    let mut g = LabeledMultigraph::new(n);
    for v in 1..n {
        let u = rng.random_range(0..v);
        g.add_edges(u, v, rng.random_range(1..=2)).unwrap();
    }
    if n >= 2 {
        for _ in 0..rng.random_range(0..=n) {
            let u = rng.random_range(0..n);
            let v = rng.random_range(0..n);
            if u != v {
                g.add_edges(u, v, 1).unwrap();
            }
        }
    }
    g
}

fn cross_validation() -> Outcome {
    let e = Enumerator::new(6, Exec::Parallel);
    let mut exhaustive = 0usize;
    let mut bad = 0usize;
    for order in 1..=6 {
        let graphs = e.connected_multigraphs(order, 9).unwrap();
        exhaustive += graphs.len();
        bad += Exec::Parallel
            .map(&graphs, |g| tau_matrix(g) != tau_dc(g) || !equals(&tau_matrix(g), kirchhoff(g)))
            .into_iter()
            .filter(|&b| b)
            .count();
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0xacce97);
    let randoms: Vec<LabeledMultigraph> = (0..500).map(|_| random_multigraph(&mut rng)).collect();
    let random_bad = randoms.iter().filter(|g| tau_matrix(g) != tau_dc(g)).count();
    Outcome::new(
        bad == 0 && random_bad == 0 && exhaustive > 0,
        format!("{exhaustive} exhaustive multigraphs, 500 random; disagreements {bad} + {random_bad}"),
    )
}

fn fibonacci(n: u64) -> u128 {
    let (mut a, mut b) = (0u128, 1u128);
    for _ in 0..n {
        (a, b) = (b, a + b);
    }
    a
}

fn known_values() -> Outcome {
    let mut failures = Vec::new();
    for n in 2..=9u64 {
        let want = (n as u128).pow(n as u32 - 2);
        if !equals(&tau_matrix(&LabeledMultigraph::complete(n as usize)), want) {
            failures.push(format!("K{n}"));
        }
    }
    // stated as n·F_n; the square of the cycle actually has n·F_n² spanning trees
    let mut square_stated = Vec::new();
    for n in 5..=12u64 {
        let tau = tau_matrix(&LabeledMultigraph::cycle_square(n as usize));
        let stated = n as u128 * fibonacci(n);
        let actual = n as u128 * fibonacci(n).pow(2);
        if !equals(&tau, stated) {
            square_stated.push(format!("C{n}²={tau} vs nF_n={stated}"));
        }
        if !equals(&tau, actual) {
            failures.push(format!("C{n}² != nF_n²"));
        }
    }
    for (a, b, want) in [(3, 3, 9), (3, 6, 18), (5, 5, 25), (8, 11, 88), (8, 29, 232), (11, 23, 253)] {
        if !equals(&tau_matrix(&build_cycle_glue(a, b).unwrap()), want) {
            failures.push(format!("C{a},{b}"));
        }
    }
    for ((n, spec), edges) in VARIANT_TABLE.iter().zip([8u64, 9, 10]) {
        let g = build_variant(*spec).unwrap();
        if kirchhoff(&g) != *n as u128 || g.edge_count() != edges || !g.is_simple() {
            failures.push(format!("variant witness {n}"));
        }
    }
    let first = square_stated.first().cloned().unwrap_or_default();
    Outcome::new(
        failures.is_empty() && square_stated.is_empty(),
        format!(
            "other mismatches {failures:?}; cycle-square nF_n mismatches {}/8 (e.g. {first}), all match nF_n²",
            square_stated.len()
        ),
    )
}

const EULER: [u64; 65] = [
    1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 12, 13, 15, 16, 18, 21, 22, 24, 25, 28, 30, 33, 37, 40, 42, 45, 48, 57, 58, 60, 70,
    72, 78, 85, 88, 93, 102, 105, 112, 120, 130, 133, 165, 168, 177, 190, 210, 232, 240, 253, 273, 280, 312, 330, 345,
    357, 385, 408, 462, 520, 760, 840, 1320, 1365, 1848,
];

fn idoneal_scan() -> Outcome {
    const HI: u64 = 1_000_000;
    let found = idoneal::scan(HI, Exec::Parallel);
    let mut hit = vec![false; HI as usize + 1];
    let mut a = 1u64;
    while a * (a + 1) + a * (a + 2) + (a + 1) * (a + 2) <= HI {
        let mut b = a + 1;
        while a * b + (a + b) * (b + 1) <= HI {
            let mut c = b + 1;
            loop {
                let n = a * b + (a + b) * c;
                if n > HI {
                    break;
                }
                hit[n as usize] = true;
                c += 1;
            }
            b += 1;
        }
        a += 1;
    }
    let sieve: Vec<u64> = (1..=HI).filter(|&n| !hit[n as usize]).collect();
    let beyond: Vec<u64> = found.iter().copied().filter(|&n| n > 1848).collect();
    Outcome::new(
        found == EULER && sieve == EULER,
        format!("{} representation-free up to 10^6, {} above 1848, sieve agrees: {}", found.len(), beyond.len(), sieve == found),
    )
}

const THIRD_EXCEPTIONS: [u64; 10] = [3, 4, 5, 6, 7, 9, 10, 13, 18, 22];
const QUARTER_EXCEPTIONS: [u64; 8] = [3, 4, 6, 7, 9, 13, 18, 25];

fn theorem() -> Outcome {
    const HI: u64 = 10_000;
    let rows = witness::scan(3, HI, Exec::Parallel).unwrap();
    let uncertified: Vec<u64> = rows
        .iter()
        .filter(|r| !(equals(&r.witness.tau, r.report.n as u128) && r.witness.graph.is_simple()))
        .map(|r| r.report.n)
        .collect();
    let mut third = Vec::new();
    let mut edge_only = Vec::new();
    let mut quarter = Vec::new();
    for r in &rows {
        let (n, e, v) = (r.report.n, r.witness.graph.edge_count(), r.witness.graph.vertex_count() as u64);
        if 3 * e > n + 7 {
            edge_only.push(n);
        }
        if 3 * e > n + 7 || 3 * v > n + 4 {
            third.push(n);
        }
        if n % 3 != 2 && !QUARTER_EXCEPTIONS.contains(&n) && (4 * e > n + 13 || 4 * v > n + 9) {
            quarter.push(n);
        }
    }
    let third_ok = third == THIRD_EXCEPTIONS;
    let quarter_ok = quarter.is_empty();
    Outcome::new(
        uncertified.is_empty() && third_ok && quarter_ok,
        format!(
            "{} witnesses, uncertified {uncertified:?}; third-bound violations {third:?} (edges alone {edge_only:?}); \
             quarter-bound violations {quarter:?}",
            rows.len()
        ),
    )
}

/// Least vertex and edge counts per τ ≤ `cap` over every simple graph on at
/// most `max_order` vertices, by trying each edge subset of `K_k`.
fn subset_oracle(max_order: usize, cap: u128) -> (BTreeMap<u128, u64>, BTreeMap<u128, u64>) {
    let mut alpha = BTreeMap::new();
    let mut beta = BTreeMap::new();
    for k in 3..=max_order {
        let pairs: Vec<(usize, usize)> = (0..k).flat_map(|u| (u + 1..k).map(move |v| (u, v))).collect();
        let masks: Vec<u64> = (0..1u64 << pairs.len()).collect();
        let found: Vec<(u128, u64)> = Exec::Parallel
            .map(&masks, |&mask| {
                let edges = pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &p)| p);
                let g = LabeledMultigraph::from_edges(k, edges).unwrap();
                let t = kirchhoff(&g);
                (t >= 3 && t <= cap).then(|| (t, mask.count_ones() as u64))
            })
            .into_iter()
            .flatten()
            .collect();
        for (t, e) in found {
            alpha.entry(t).or_insert(k as u64);
            let best = beta.entry(t).or_insert(e);
            *best = (*best).min(e);
        }
    }
    (alpha, beta)
}

fn oracle_values() -> Outcome {
    let mut notes = Vec::new();
    let mut ok = true;
    let mut expect = |what: String, got: Option<u64>, want: u64| {
        if got != Some(want) {
            ok = false;
            notes.push(format!("{what} = {got:?}, want {want}"));
        }
    };
    expect("β(9)".into(), beta_exact(9, 9).unwrap().exact(), 6);
    expect("α(18)".into(), alpha_exact(18, 9).unwrap().exact(), 8);
    expect("α(25)".into(), alpha_exact(25, 9).unwrap().exact(), 9);
    for n in 3..=7 {
        expect(format!("β({n})"), beta_exact(n, 9).unwrap().exact(), n);
    }
    for n in [3, 4, 5, 6, 7, 10] {
        // below n vertices nothing exists; the cycle closes the gap
        expect(format!("α({n})"), alpha_exact(n, n - 1).unwrap().exact(), n);
    }
    let thirteen = verify_no_smaller_graph(13, 13);
    if thirteen.verdict != Verdict::Proven {
        ok = false;
        notes.push(format!("α(13) proof {:?}", thirteen.verdict));
    }
    let nine_budget = alpha_exact(13, 9).unwrap();
    if nine_budget.exact().is_some() {
        ok = false;
        notes.push("α(13) ≤ 9 found".into());
    }

    // edge subsets of K_k for k ≤ 7: exact for β ≤ 7, lower bound 8 for α above 7
    let (alpha7, beta7) = subset_oracle(7, 25);
    let beta_oracle = |n: u128| beta7.get(&n).copied().filter(|&e| e <= 7);
    if beta_oracle(9) != Some(6) || (3..=7).any(|n| beta_oracle(n) != Some(n as u64)) {
        ok = false;
        notes.push("subset oracle disagrees on β".into());
    }
    if alpha7.contains_key(&18) || alpha7.contains_key(&25) || [10u128, 13].iter().any(|n| alpha7.contains_key(n)) {
        ok = false;
        notes.push("subset oracle found a graph on ≤ 7 vertices".into());
    }
    for n in 3..=7u128 {
        if alpha7.get(&n) != Some(&(n as u64)) {
            ok = false;
            notes.push(format!("subset oracle α({n})"));
        }
    }

    let proof = verify_no_smaller_graph(22, 22);
    let transcript = serde_json::to_value(&proof).unwrap();
    let levels = transcript["single_block"]["levels"].as_array().map_or(0, Vec::len);
    let skeletons: usize = proof.single_block.levels.iter().map(|l| l.skeletons.len()).sum();
    let audited = proof.verdict == Verdict::Proven && levels >= 2 && proof.single_block.complete();
    if !audited {
        ok = false;
    }
    let mins: Vec<String> = proof
        .single_block
        .levels
        .iter()
        .map(|l| l.level_min_tau.clone().unwrap_or_else(|| "overflow".into()))
        .collect();
    notes.push(format!(
        "α(22)=β(22)=22 {:?}: {levels} cyclomatic levels, {skeletons} skeletons, level minima {mins:?}, {} factorizations",
        proof.verdict,
        proof.factorizations.len()
    ));
    Outcome::new(ok, notes.join("; "))
}

fn property_floor() -> Outcome {
    let opts = SuiteOptions {
        cases: 1000,
        ..SuiteOptions::default()
    };
    let report = verify::run(Suite::Properties, &opts);
    let failures: Vec<String> = report.failures().take(5).map(|c| c.name.clone()).collect();
    Outcome::new(
        report.passed && report.checks_run >= 6 * 1000,
        format!("{} property checks, failures {failures:?}", report.checks_run),
    )
}

#[test]
fn acceptance() {
    let mut results = Vec::new();
    criterion(&mut results, 1, "variant table", Duration::from_secs(1), table1);
    criterion(&mut results, 2, "closed-form sweeps", Duration::from_secs(60), closed_form_sweeps);
    criterion(&mut results, 3, "lemma bounds", Duration::from_secs(60), bound_lemmas);
    criterion(&mut results, 4, "method cross-validation", Duration::from_secs(120), cross_validation);
    criterion(&mut results, 5, "known values", Duration::from_secs(10), known_values);
    criterion(&mut results, 6, "idoneal scan", Duration::from_secs(60), idoneal_scan);
    criterion(&mut results, 7, "witness theorem to 10000", Duration::from_secs(300), theorem);
    criterion(&mut results, 8, "oracle values", Duration::from_secs(900), oracle_values);
    criterion(&mut results, 9, "property floor", Duration::from_secs(600), property_floor);
    let passed = results.iter().filter(|&&p| p).count();
    println!("{passed}/{} acceptance criteria passed", results.len());
    assert_eq!(passed, results.len(), "some acceptance criteria failed");
}
