//! The verification harness: density-minimal enumeration, the predicted
//! low spectrum, and the exhaustive desk-scale checks with machine-readable
//! reports.

use std::collections::{BTreeMap, BTreeSet};
use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::canon::canonical_graph;
use crate::enumerate::{enumerate, EnumerationFilter};
use crate::fan::{build_fan, densest_fan_minor, FanSpec};
use crate::graph::{
    book, complete_graph, diamond, f_double_prime, f_prime, friendship, path_graph, SimpleGraph,
};
use crate::graph6::encode_graph6;
use crate::minor::{is_density_minimal_branchset, is_rank_minimal, MinorEngine};
use crate::multigraph::{
    mg_canonical, mg_component_family_density, mg_densest_minor, mg_densest_minor_closure,
    mg_is_density_minimal, MgFamilyDescriptor, Multigraph,
};
use crate::rational::Rational;
use crate::{Error, Result};

/// One density-minimal witness.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SpectrumEntry {
    pub density: Rational,
    pub witness: SimpleGraph,
    pub n: usize,
    pub m: usize,
}

/// All density-minimal graphs on at most `max_n` vertices (under the
/// optional exclusive density cap), sorted by density, then size.
#[derive(Debug, Clone)]
pub struct SpectrumReport {
    pub max_n: usize,
    pub density_cap: Option<Rational>,
    pub entries: Vec<SpectrumEntry>,
}

impl SpectrumReport {
    pub fn densities(&self) -> BTreeSet<Rational> {
        self.entries.iter().map(|e| e.density).collect()
    }

    pub fn below(&self, threshold: Rational) -> Vec<&SpectrumEntry> {
        self.entries
            .iter()
            .filter(|e| e.density < threshold)
            .collect()
    }
}

/// Machine-readable outcome of one verification check.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct VerificationReport {
    pub check: String,
    pub params: BTreeMap<String, serde_json::Value>,
    pub pass: bool,
    pub counterexamples: Vec<String>,
    pub counts: BTreeMap<String, u64>,
    pub wall_time_ms: u64,
}

impl VerificationReport {
    fn new(check: &str) -> (Self, Instant) {
        (
            VerificationReport {
                check: check.to_string(),
                params: BTreeMap::new(),
                pass: false,
                counterexamples: Vec::new(),
                counts: BTreeMap::new(),
                wall_time_ms: 0,
            },
            Instant::now(),
        )
    }

    fn finish(mut self, start: Instant) -> Self {
        self.pass = self.counterexamples.is_empty();
        self.wall_time_ms = start.elapsed().as_millis() as u64;
        self
    }
}

/// Enumerates every density-minimal connected graph with at most `max_n`
/// vertices, densities strictly below `density_cap` when given.
pub fn enumerate_density_minimal(
    engine: &mut MinorEngine,
    max_n: usize,
    density_cap: Option<Rational>,
) -> Result<SpectrumReport> {
    if max_n > engine.guardrail() {
        return Err(Error::Guardrail {
            n: max_n,
            limit: engine.guardrail(),
        });
    }
    let mut filter = EnumerationFilter::connected(max_n);
    if let Some(cap) = density_cap {
        filter = filter.with_max_density(cap, true);
    }
    let mut entries = Vec::new();
    for g in enumerate(&filter)? {
        if engine.is_density_minimal(&g)? {
            entries.push(SpectrumEntry {
                density: g.density(),
                witness: g,
                n: g.n(),
                m: g.m(),
            });
        }
    }
    entries.sort_by(|a, b| {
        a.density
            .cmp(&b.density)
            .then(a.n.cmp(&b.n))
            .then(a.witness.cmp(&b.witness))
    });
    Ok(SpectrumReport {
        max_n,
        density_cap,
        entries,
    })
}

/// The four families whose densities fill the spectrum below 3/2.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LowFamily {
    /// i/(i+1): the (i+1)-vertex trees, i ≥ 0.
    Tree(usize),
    /// 3i/(2i+1): friendship graphs, i ≥ 1.
    Friendship(usize),
    /// (3i+2)/(2i+2): friendship plus one extra rim vertex, i ≥ 1.
    FPrime(usize),
    /// (3i+4)/(2i+3): friendship plus two extra rim vertices, i ≥ 1.
    FDoublePrime(usize),
}

impl LowFamily {
    pub fn density(self) -> Rational {
        match self {
            LowFamily::Tree(i) => Rational::new(i as i64, i as i64 + 1),
            LowFamily::Friendship(i) => Rational::new(3 * i as i64, 2 * i as i64 + 1),
            LowFamily::FPrime(i) => Rational::new(3 * i as i64 + 2, 2 * i as i64 + 2),
            LowFamily::FDoublePrime(i) => Rational::new(3 * i as i64 + 4, 2 * i as i64 + 3),
        }
    }

    pub fn witness_vertices(self) -> usize {
        match self {
            LowFamily::Tree(i) => i + 1,
            LowFamily::Friendship(i) => 2 * i + 1,
            LowFamily::FPrime(i) => 2 * i + 2,
            LowFamily::FDoublePrime(i) => 2 * i + 3,
        }
    }

    pub fn witness(self) -> SimpleGraph {
        match self {
            LowFamily::Tree(i) => path_graph(i + 1).expect("small"),
            LowFamily::Friendship(i) => friendship(i).expect("small"),
            LowFamily::FPrime(i) => f_prime(i).expect("small"),
            LowFamily::FDoublePrime(i) => f_double_prime(i).expect("small"),
        }
    }
}

/// Solves d = (a·i + b)/(c·i + e) for a positive integer i (i ≥ i_min);
/// the membership test behind the predicted spectrum.
fn solve_family(d: Rational, a: i64, b: i64, c: i64, e: i64, i_min: i64) -> Option<i64> {
    // p(ci + e) = q(ai + b)  =>  i(pc − qa) = qb − pe
    let (p, q) = (*d.numer(), *d.denom());
    let coeff = p * c - q * a;
    let rhs = q * b - p * e;
    if coeff == 0 {
        return None;
    }
    if rhs % coeff != 0 {
        return None;
    }
    let i = rhs / coeff;
    (i >= i_min).then_some(i)
}

/// Which family (if any) predicts this density below 3/2.
pub fn predicted_family(d: Rational) -> Option<LowFamily> {
    if d >= Rational::new(3, 2) || d < Rational::new(0, 1) {
        return None;
    }
    if let Some(i) = solve_family(d, 1, 0, 1, 1, 0) {
        return Some(LowFamily::Tree(i as usize));
    }
    if let Some(i) = solve_family(d, 3, 0, 2, 1, 1) {
        return Some(LowFamily::Friendship(i as usize));
    }
    if let Some(i) = solve_family(d, 3, 2, 2, 2, 1) {
        return Some(LowFamily::FPrime(i as usize));
    }
    if let Some(i) = solve_family(d, 3, 4, 2, 3, 1) {
        return Some(LowFamily::FDoublePrime(i as usize));
    }
    None
}

/// All predicted densities realizable by a canonical family witness on at
/// most `max_n` vertices, with the smallest such witness.
pub fn predicted_within(max_n: usize) -> BTreeMap<Rational, LowFamily> {
    let mut out: BTreeMap<Rational, LowFamily> = BTreeMap::new();
    let mut add = |f: LowFamily| {
        if f.witness_vertices() <= max_n {
            let e = out.entry(f.density()).or_insert(f);
            if f.witness_vertices() < e.witness_vertices() {
                *e = f;
            }
        }
    };
    for i in 0..max_n {
        add(LowFamily::Tree(i));
    }
    for i in 1..=max_n / 2 {
        add(LowFamily::Friendship(i));
        add(LowFamily::FPrime(i));
        add(LowFamily::FDoublePrime(i));
    }
    out
}

/// The predicted spectrum below 3/2: the sorted deduplicated union of the
/// four families with indices up to `count` in each. Every family is
/// increasing, so any prefix of the true spectrum — and in particular its
/// first `count` values at or above 1 — is a prefix of this list.
pub fn predicted_low_spectrum(count: usize) -> Vec<Rational> {
    let mut set: BTreeSet<Rational> = BTreeSet::new();
    for i in 0..=count as i64 {
        set.insert(Rational::new(i, i + 1));
    }
    for i in 1..=count as i64 {
        set.insert(Rational::new(3 * i, 2 * i + 1));
        set.insert(Rational::new(3 * i + 2, 2 * i + 2));
        set.insert(Rational::new(3 * i + 4, 2 * i + 3));
    }
    set.into_iter()
        .filter(|d| *d < Rational::new(3, 2))
        .collect()
}

/// The low-density classification at scale `max_n`: every density-minimal
/// density below 3/2 is predicted, and every prediction with a witness
/// fitting in `max_n` vertices is found. `drop` removes one value from the
/// predicted set, as a negative control.
pub fn verify_low_density_classification(
    engine: &mut MinorEngine,
    max_n: usize,
    drop: Option<Rational>,
) -> Result<VerificationReport> {
    let (mut report, start) = VerificationReport::new("low-spectrum");
    report
        .params
        .insert("max_n".into(), serde_json::json!(max_n));
    if let Some(d) = drop {
        report
            .params
            .insert("dropped_density".into(), serde_json::json!(d.to_string()));
    }
    let threshold = Rational::new(3, 2);
    let spectrum = enumerate_density_minimal(engine, max_n, Some(threshold))?;
    let found = spectrum.densities();

    // (a) everything found must be predicted
    let mut flagged: BTreeSet<Rational> = BTreeSet::new();
    for entry in &spectrum.entries {
        let predicted = predicted_family(entry.density).is_some() && Some(entry.density) != drop;
        if !predicted && flagged.insert(entry.density) {
            report
                .counterexamples
                .push(encode_graph6(&canonical_graph(&entry.witness)));
        }
    }

    // (b) every prediction with a small canonical witness must be found
    let mut missing = 0u64;
    for (d, family) in predicted_within(max_n) {
        if Some(d) == drop {
            continue;
        }
        if !found.contains(&d) {
            missing += 1;
            report
                .counterexamples
                .push(encode_graph6(&canonical_graph(&family.witness())));
        }
    }

    report.counts.insert(
        "density_minimal_graphs".into(),
        spectrum.entries.len() as u64,
    );
    report
        .counts
        .insert("distinct_densities".into(), found.len() as u64);
    report.counts.insert("missing_predictions".into(), missing);
    report
        .counts
        .insert("memoized_forms".into(), engine.memo_len() as u64);
    Ok(report.finish(start))
}

/// Rank-4 bound: every biconnected rank-4 graph on at most `max_n` vertices
/// has a minor of density at least 3/2.
pub fn verify_rank4(engine: &mut MinorEngine, max_n: usize) -> Result<VerificationReport> {
    let (mut report, start) = VerificationReport::new("rank4");
    report
        .params
        .insert("max_n".into(), serde_json::json!(max_n));
    report.params.insert(
        "rank".into(),
        serde_json::json!("exactly 4; the first four ears of any higher-rank biconnected graph form a rank-4 biconnected subgraph"),
    );
    if max_n > engine.guardrail() {
        return Err(Error::Guardrail {
            n: max_n,
            limit: engine.guardrail(),
        });
    }
    let threshold = Rational::new(3, 2);
    let filter = EnumerationFilter::biconnected(max_n).with_exact_rank(4);
    let mut checked = 0u64;
    for g in enumerate(&filter)? {
        checked += 1;
        if engine.densest_density(&g)? < threshold {
            report.counterexamples.push(encode_graph6(&g));
        }
    }
    report.counts.insert("rank4_biconnected".into(), checked);
    Ok(report.finish(start))
}

/// The five rank-minimal biconnected graphs of rank one to three, by
/// exhaustive enumeration up to 2·rank+1 vertices per rank slice.
pub fn verify_rank_minimal_blocks() -> Result<VerificationReport> {
    let (mut report, start) = VerificationReport::new("blocks");
    let mut found: Vec<SimpleGraph> = Vec::new();
    for rank in 1..=3usize {
        let filter = EnumerationFilter::biconnected(2 * rank + 1).with_exact_rank(rank);
        for g in enumerate(&filter)? {
            if is_rank_minimal(&g) {
                found.push(g);
            }
        }
    }
    found.sort_unstable();
    let expected: BTreeSet<SimpleGraph> = [
        complete_graph(3).expect("K3"),
        diamond(),
        complete_graph(4).expect("K4"),
        book(3).expect("three-page book"),
        // three triangles glued edge-to-edge in a path
        SimpleGraph::from_edges(5, &[(0, 1), (0, 2), (1, 2), (0, 3), (1, 3), (1, 4), (3, 4)])
            .expect("triangle snake"),
    ]
    .iter()
    .map(canonical_graph)
    .collect();
    let got: BTreeSet<SimpleGraph> = found.iter().copied().collect();
    for unexpected in got.difference(&expected) {
        report.counterexamples.push(encode_graph6(unexpected));
    }
    for missing in expected.difference(&got) {
        report.counterexamples.push(encode_graph6(missing));
    }
    report
        .counts
        .insert("rank_minimal_blocks".into(), found.len() as u64);
    Ok(report.finish(start))
}

/// Fan-structure check: for every small fan spec satisfying the lemma
/// hypotheses, the structure search equals brute-force densest-minor search
/// on the built fan.
pub fn verify_fan_minimality(engine: &mut MinorEngine) -> Result<VerificationReport> {
    let (mut report, start) = VerificationReport::new("fan-minimality");
    report
        .params
        .insert("max_base_n".into(), serde_json::json!(4));
    report
        .params
        .insert("max_shared".into(), serde_json::json!(2));
    report
        .params
        .insert("max_fan_n".into(), serde_json::json!(9));
    let mut specs = 0u64;
    for base in enumerate(&EnumerationFilter::connected(4))? {
        let full = base.full_mask();
        for shared in 0..=full {
            if shared & !full != 0 || shared == full {
                continue;
            }
            if shared.count_ones() > 2 || !base.is_clique(shared) {
                continue;
            }
            let outside = full & !shared;
            if !base.connected_within(outside) {
                continue;
            }
            let mut ok = true;
            let mut rest = shared;
            while rest != 0 {
                let v = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                if base.neighbors(v) & outside == 0 {
                    ok = false;
                }
            }
            if !ok {
                continue;
            }
            let s = shared.count_ones() as usize;
            let per_copy = base.n() - s;
            let mut k = 1usize;
            while k * per_copy + s <= 9 {
                let spec = FanSpec::new(base, shared, k)?;
                specs += 1;
                let (_, structural) = densest_fan_minor(&spec)?;
                let fan = build_fan(&spec)?;
                let brute = engine.densest_density(&fan)?;
                if structural != brute {
                    report.counterexamples.push(encode_graph6(&fan));
                }
                k += 1;
            }
        }
    }
    report.counts.insert("fan_specs".into(), specs);
    report
        .counts
        .insert("memoized_forms".into(), engine.memo_len() as u64);
    Ok(report.finish(start))
}

/// Exhaustive multigraph classification at n ≤ 4, m ≤ 6: density-minimal
/// iff tree or single-vertex; the closed-form densest minor matches the
/// closure everywhere; random component families land on integers or
/// superparticular ratios.
pub fn verify_multigraphs() -> Result<VerificationReport> {
    let (mut report, start) = VerificationReport::new("multi");
    report.params.insert("max_n".into(), serde_json::json!(4));
    report.params.insert("max_m".into(), serde_json::json!(6));
    report
        .params
        .insert("family_samples".into(), serde_json::json!(500));

    let pool = enumerate_connected_multigraphs(4, 6);
    report
        .counts
        .insert("connected_multigraphs".into(), pool.len() as u64);

    let mut structural_mismatches = 0u64;
    for g in &pool {
        let minimal = mg_is_density_minimal(g)?;
        let structural = g.is_tree() || g.n() == 1;
        if minimal != structural {
            structural_mismatches += 1;
            report
                .counterexamples
                .push(crate::multigraph::render_multigraph(g));
        }
        let (cw, cd) = mg_densest_minor(g);
        let (bw, bd) = mg_densest_minor_closure(g)?;
        if cd != bd || mg_canonical(&cw) != bw {
            report
                .counterexamples
                .push(crate::multigraph::render_multigraph(g));
        }
    }
    report
        .counts
        .insert("structural_mismatches".into(), structural_mismatches);

    // deterministic xorshift sampling over the pool
    let mut state = 0x9e3779b97f4a7c15u64;
    let mut next = || {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        state
    };
    let mut family_violations = 0u64;
    for _ in 0..500 {
        let count = (next() % 3 + 1) as usize;
        let gens: Vec<Multigraph> = (0..count)
            .map(|_| pool[(next() % pool.len() as u64) as usize])
            .collect();
        let desc = MgFamilyDescriptor::new(gens)?;
        let d = mg_component_family_density(&desc);
        let integer = d.is_integer() && *d.numer() >= 0;
        let superparticular = *d.denom() == *d.numer() + 1 && *d.numer() >= 0;
        if !(integer || superparticular) {
            family_violations += 1;
            report.counterexamples.push(format!("family density {d}"));
        }
    }
    report
        .counts
        .insert("family_violations".into(), family_violations);
    Ok(report.finish(start))
}

/// All connected multigraphs with at most `max_n` vertices and `max_m`
/// edges, one per isomorphism class.
pub fn enumerate_connected_multigraphs(max_n: usize, max_m: usize) -> Vec<Multigraph> {
    let mut out: BTreeSet<Multigraph> = BTreeSet::new();
    for n in 1..=max_n {
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect();
        let slots = pairs.len() + n;
        let mut assign = vec![0usize; slots];
        fill_slots(&mut assign, 0, max_m, &mut |assign| {
            let mut g = Multigraph::edgeless(n).expect("small");
            for (i, &(u, v)) in pairs.iter().enumerate() {
                if assign[i] > 0 {
                    g.add_edges(u, v, assign[i]).expect("small");
                }
            }
            for v in 0..n {
                if assign[pairs.len() + v] > 0 {
                    g.add_loops(v, assign[pairs.len() + v]).expect("small");
                }
            }
            if g.is_connected() {
                out.insert(mg_canonical(&g));
            }
        });
    }
    out.into_iter().collect()
}

fn fill_slots(assign: &mut Vec<usize>, idx: usize, budget: usize, f: &mut impl FnMut(&[usize])) {
    if idx == assign.len() {
        f(assign);
        return;
    }
    for v in 0..=budget {
        assign[idx] = v;
        fill_slots(assign, idx + 1, budget - v, f);
    }
    assign[idx] = 0;
}

/// Smallest density-minimal density strictly above `threshold` among
/// connected graphs with at most `max_n` vertices; a bounded search, not a
/// gap proof.
pub fn next_density(
    engine: &mut MinorEngine,
    threshold: Rational,
    max_n: usize,
) -> Result<Option<Rational>> {
    let report = enumerate_density_minimal(engine, max_n, None)?;
    Ok(report
        .entries
        .iter()
        .map(|e| e.density)
        .filter(|d| *d > threshold)
        .min())
}

/// Re-validates every spectrum witness independently of the enumeration
/// path; used by tests and the CLI's soundness checks.
pub fn revalidate_spectrum(report: &SpectrumReport) -> Result<()> {
    for e in &report.entries {
        if e.witness.density() != e.density || e.witness.n() != e.n || e.witness.m() != e.m {
            return Err(Error::Parse(format!(
                "spectrum entry mismatch for {}",
                encode_graph6(&e.witness)
            )));
        }
        if !is_density_minimal_branchset(&e.witness) {
            return Err(Error::Parse(format!(
                "witness {} fails the branch-set minimality check",
                encode_graph6(&e.witness)
            )));
        }
    }
    Ok(())
}
