//! Deciding anti-directed 2-factors and Hamilton cycles.
//!
//! In an anti-directed cycle every vertex is a source (both cycle arcs leave
//! it) or a sink (both enter it), and the two kinds alternate. So a digraph
//! `D` of even order has an anti-directed 2-factor iff some source set `X`
//! with `|X| = n/2` makes the bipartite graph `B(X, Y)`, which keeps only
//! the arcs from `X` to `Y = V - X`, contain a 2-factor. The same holds for
//! Hamilton cycles. Source sets are ordered: `X` and its complement are
//! different choices and both are tried.

use std::sync::atomic::{AtomicUsize, Ordering};

use num_bigint::BigUint;
use rand::seq::index::sample;
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::bipartite::{build_bipartite, BipartiteError, Equipartition, HamiltonSearch};
use crate::combin::{binomial_u64, next_same_popcount, unrank};
use crate::counting::binomial;
use crate::cover::CycleCover;
use crate::flow::hopcroft_karp;
use crate::gen::stream_rng;
use crate::graph::Digraph;

/// Source sets handled per parallel work item.
const CHUNK: u64 = 2048;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Target {
    TwoFactor,
    Hamilton,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Strategy {
    Exhaustive,
    Sampled { samples: u64, seed: u64 },
    Auto { seed: u64 },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SolverConfig {
    /// Exhaustive enumeration is refused above this order.
    pub max_exhaustive_order: usize,
    /// `Auto` enumerates exhaustively up to this order.
    pub auto_exhaustive_order: usize,
    /// Search-node budget for each Hamilton search.
    pub hamilton_budget: u64,
}

impl Default for SolverConfig {
    fn default() -> Self {
        SolverConfig {
            max_exhaustive_order: 24,
            auto_exhaustive_order: 14,
            hamilton_budget: 1_000_000,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolverError {
    #[error("exhaustive search refused for order {n} (limit {limit})")]
    ExhaustiveTooLarge { n: usize, limit: usize },
    #[error("exhaustive search supports at most 64 vertices")]
    OrderTooLarge,
    #[error(transparent)]
    Bipartite(#[from] BipartiteError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Decision {
    Yes,
    No,
    Unknown,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    Exhaustive,
    Sampled,
    DegreeBound,
    HallCondition,
    Reduction,
    Parity,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Refutation {
    /// Anti-directed cycles have even length, so odd orders have no cover.
    OddOrder { n: usize },
    /// Every source-set choice was tried.
    ExhaustedSourceSets { checked: u64 },
}

impl std::fmt::Display for Refutation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Refutation::OddOrder { n } => write!(f, "odd order {n}"),
            Refutation::ExhaustedSourceSets { checked } => {
                write!(f, "all {checked} source sets fail")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub equipartition: Equipartition,
    pub cover: CycleCover,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Certificate {
    pub target: Target,
    pub decision: Decision,
    pub method: Method,
    pub witness: Option<Witness>,
    pub refutation: Option<Refutation>,
    /// Source sets examined before the decision was reached.
    pub checked: u64,
    /// `C(n, n/2)`, the number of source-set choices (0 for odd `n`).
    pub total: BigUint,
    pub note: Option<String>,
}

#[derive(Serialize)]
struct CertificateJson<'a> {
    decision: Decision,
    method: Method,
    equipartition: Option<PartitionJson<'a>>,
    cycles: &'a [Vec<usize>],
    arc_directions: Vec<[usize; 2]>,
    stats: StatsJson,
    #[serde(skip_serializing_if = "Option::is_none")]
    refutation: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    note: Option<&'a str>,
}

#[derive(Serialize)]
#[allow(non_snake_case)]
struct PartitionJson<'a> {
    X: &'a [usize],
}

#[derive(Serialize)]
struct StatsJson {
    checked: u64,
    total: String,
}

impl Certificate {
    pub fn is_yes(&self) -> bool {
        self.decision == Decision::Yes
    }

    pub fn to_json(&self, pretty: bool) -> String {
        let json = CertificateJson {
            decision: self.decision,
            method: self.method,
            equipartition: self.witness.as_ref().map(|w| PartitionJson {
                X: w.equipartition.x(),
            }),
            cycles: self.witness.as_ref().map_or(&[], |w| &w.cover.cycles),
            arc_directions: self
                .witness
                .as_ref()
                .map(|w| w.cover.arcs().into_iter().map(|(a, b)| [a, b]).collect())
                .unwrap_or_default(),
            stats: StatsJson {
                checked: self.checked,
                total: self.total.to_string(),
            },
            refutation: self.refutation.as_ref().map(ToString::to_string),
            note: self.note.as_deref(),
        };
        if pretty {
            serde_json::to_string_pretty(&json)
        } else {
            serde_json::to_string(&json)
        }
        .expect("certificate serializes")
    }
}

pub fn decide_adf(d: &Digraph, strategy: Strategy, config: &SolverConfig) -> Result<Certificate, SolverError> {
    decide(d, Target::TwoFactor, strategy, config)
}

pub fn decide_adhc(d: &Digraph, strategy: Strategy, config: &SolverConfig) -> Result<Certificate, SolverError> {
    decide(d, Target::Hamilton, strategy, config)
}

/// Outcome of testing one source set.
enum Probe {
    Found(CycleCover),
    Absent,
    Unknown,
}

fn probe(d: &Digraph, p: &Equipartition, target: Target, budget: u64) -> Result<Probe, SolverError> {
    let b = build_bipartite(d, p)?;
    Ok(match target {
        Target::TwoFactor => b.two_factor().map_or(Probe::Absent, Probe::Found),
        Target::Hamilton => match b.hamilton_cycle(budget)? {
            HamiltonSearch::Found(c) => Probe::Found(b.orient_cycle(c)),
            HamiltonSearch::Absent => Probe::Absent,
            HamiltonSearch::Unknown { .. } => Probe::Unknown,
        },
    })
}

#[derive(Default)]
struct ChunkOutcome {
    found: Option<(u64, Equipartition, CycleCover)>,
    unknown: bool,
}

/// Scans items `0..count` in parallel chunks; `make(i)` produces the source
/// set for item `i`. The witness with the lowest item index wins, so the
/// result is independent of scheduling.
fn scan<F>(
    d: &Digraph,
    target: Target,
    budget: u64,
    count: u64,
    make: F,
) -> Result<ChunkOutcome, SolverError>
where
    F: Fn(u64, Option<&Equipartition>) -> Equipartition + Sync,
{
    let chunks = count.div_ceil(CHUNK) as usize;
    let first_hit = AtomicUsize::new(usize::MAX);
    let outcomes: Vec<Result<ChunkOutcome, SolverError>> = (0..chunks)
        .into_par_iter()
        .map(|c| {
            let mut out = ChunkOutcome::default();
            if c > first_hit.load(Ordering::Relaxed) {
                return Ok(out);
            }
            let lo = c as u64 * CHUNK;
            let hi = (lo + CHUNK).min(count);
            let mut prev: Option<Equipartition> = None;
            for i in lo..hi {
                let p = make(i, prev.as_ref());
                match probe(d, &p, target, budget)? {
                    Probe::Found(cover) => {
                        out.found = Some((i, p, cover));
                        first_hit.fetch_min(c, Ordering::Relaxed);
                        break;
                    }
                    Probe::Absent => {}
                    Probe::Unknown => out.unknown = true,
                }
                prev = Some(p);
            }
            Ok(out)
        })
        .collect();
    let mut merged = ChunkOutcome::default();
    for o in outcomes {
        let o = o?;
        if merged.found.is_none() {
            merged.found = o.found;
        }
        merged.unknown |= o.unknown;
    }
    Ok(merged)
}

fn central_binomial(n: usize) -> BigUint {
    if n % 2 == 1 {
        BigUint::from(0u32)
    } else {
        binomial(n as u64, n as u64 / 2)
    }
}

/// Decides whether `d` has an anti-directed 2-factor (`TwoFactor`) or an
/// anti-directed Hamilton cycle (`Hamilton`).
pub fn decide(
    d: &Digraph,
    target: Target,
    strategy: Strategy,
    config: &SolverConfig,
) -> Result<Certificate, SolverError> {
    let n = d.order();
    let total = central_binomial(n);
    if n % 2 == 1 {
        return Ok(Certificate {
            target,
            decision: Decision::No,
            method: Method::Parity,
            witness: None,
            refutation: Some(Refutation::OddOrder { n }),
            checked: 0,
            total,
            note: None,
        });
    }
    match strategy {
        Strategy::Exhaustive => exhaustive(d, target, config, total),
        Strategy::Sampled { samples, seed } => sampled(d, target, config, samples, seed, total),
        Strategy::Auto { seed } => {
            if n <= config.auto_exhaustive_order.min(config.max_exhaustive_order) {
                return exhaustive(d, target, config, total);
            }
            let samples = 1000.max(20 * n as u64);
            let cert = sampled(d, target, config, samples, seed, total)?;
            if cert.is_yes() {
                return Ok(cert);
            }
            Ok(match degree_guarantee(d, target) {
                Some(reason) => Certificate {
                    decision: Decision::Yes,
                    method: Method::DegreeBound,
                    note: Some(reason.to_string()),
                    ..cert
                },
                None => cert,
            })
        }
    }
}

/// Name of a minimum-semi-degree condition on `d` that guarantees the
/// target structure, if any applies.
pub fn degree_guarantee(d: &Digraph, target: Target) -> Option<&'static str> {
    let n = d.order();
    let delta = d.min_degree();
    if n % 2 == 1 || n < 2 {
        return None;
    }
    if 4 * delta >= 3 * n {
        return Some("min semi-degree >= 3n/4 gives an anti-directed Hamilton cycle");
    }
    if 16 * delta > 9 * n {
        return Some("min semi-degree > 9n/16 gives an anti-directed Hamilton cycle");
    }
    if target == Target::TwoFactor && 46 * delta > 24 * n {
        return Some("min semi-degree > 24n/46 gives an anti-directed 2-factor");
    }
    None
}

fn exhaustive(
    d: &Digraph,
    target: Target,
    config: &SolverConfig,
    total: BigUint,
) -> Result<Certificate, SolverError> {
    let n = d.order();
    if n > config.max_exhaustive_order {
        return Err(SolverError::ExhaustiveTooLarge {
            n,
            limit: config.max_exhaustive_order,
        });
    }
    if n > 64 {
        return Err(SolverError::OrderTooLarge);
    }
    let h = n / 2;
    let count = binomial_u64(n as u64, h as u64).ok_or(SolverError::OrderTooLarge)?;
    let outcome = scan(d, target, config.hamilton_budget, count, |i, prev| {
        let mask = match prev {
            Some(p) => next_same_popcount(mask_of(p)),
            None => unrank(n, h, i),
        };
        Equipartition::from_mask(n, mask).expect("mask has n/2 bits")
    })?;
    Ok(finish(outcome, target, Method::Exhaustive, count, total))
}

fn mask_of(p: &Equipartition) -> u64 {
    p.x().iter().fold(0u64, |m, &v| m | 1 << v)
}

fn sampled(
    d: &Digraph,
    target: Target,
    config: &SolverConfig,
    samples: u64,
    seed: u64,
    total: BigUint,
) -> Result<Certificate, SolverError> {
    let n = d.order();
    let outcome = scan(d, target, config.hamilton_budget, samples, |i, _| {
        random_source_set(n, seed, i)
    })?;
    let mut cert = finish(outcome, target, Method::Sampled, samples, total);
    if cert.decision == Decision::No {
        // Sampling never refutes.
        cert.decision = Decision::Unknown;
        cert.refutation = None;
    }
    Ok(cert)
}

/// The source set drawn for sample `index` under `seed`.
pub fn random_source_set(n: usize, seed: u64, index: u64) -> Equipartition {
    let mut rng = stream_rng(seed, index);
    let x = sample(&mut rng, n, n / 2).into_vec();
    Equipartition::new(n, x).expect("n/2 distinct vertices")
}

fn finish(outcome: ChunkOutcome, target: Target, method: Method, count: u64, total: BigUint) -> Certificate {
    match outcome.found {
        Some((i, equipartition, cover)) => Certificate {
            target,
            decision: Decision::Yes,
            method,
            witness: Some(Witness {
                equipartition,
                cover,
            }),
            refutation: None,
            checked: i + 1,
            total,
            note: None,
        },
        None if outcome.unknown => Certificate {
            target,
            decision: Decision::Unknown,
            method,
            witness: None,
            refutation: None,
            checked: count,
            total,
            note: Some("Hamilton search budget exhausted on some source sets".into()),
        },
        None => Certificate {
            target,
            decision: Decision::No,
            method,
            witness: None,
            refutation: Some(Refutation::ExhaustedSourceSets { checked: count }),
            checked: count,
            total,
            note: None,
        },
    }
}

/// A directed 2-factor as a successor map, found as a perfect matching
/// between out-copies and in-copies of the vertices.
pub fn directed_two_factor(d: &Digraph) -> Option<Vec<usize>> {
    let adj: Vec<Vec<usize>> = (0..d.order()).map(|v| d.out_neighbors(v).to_vec()).collect();
    hopcroft_karp(&adj, d.order()).into_iter().collect()
}

pub fn directed_two_factor_exists(d: &Digraph) -> bool {
    directed_two_factor(d).is_some()
}

/// Checks `|N+(S)| >= |S|` for every vertex subset `S` directly. Intended
/// as a cross-check for small orders only.
pub fn hall_condition_exhaustive(d: &Digraph) -> Result<bool, SolverError> {
    let n = d.order();
    const LIMIT: usize = 20;
    if n > LIMIT {
        return Err(SolverError::ExhaustiveTooLarge { n, limit: LIMIT });
    }
    let out: Vec<u32> = (0..n)
        .map(|v| d.out_neighbors(v).iter().fold(0u32, |m, &w| m | 1 << w))
        .collect();
    Ok((1u32..1 << n).into_par_iter().all(|s| {
        let mut rest = s;
        let mut image = 0u32;
        while rest != 0 {
            image |= out[rest.trailing_zeros() as usize];
            rest &= rest - 1;
        }
        image.count_ones() >= s.count_ones()
    }))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CensusMode {
    Exhaustive,
    Sample { samples: u64, seed: u64 },
}

/// Tally of good and bad source sets for one digraph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CensusReport {
    pub n: usize,
    pub target: Target,
    pub mode: CensusMode,
    pub total: BigUint,
    pub checked: u64,
    pub good: u64,
    pub bad: u64,
    pub unknown: u64,
    /// `degree_histogram[v][k]`: source sets in which `v` has degree `k` in
    /// `B(X, Y)`.
    pub degree_histogram: Vec<Vec<u64>>,
}

#[derive(Serialize)]
struct CensusJson<'a> {
    n: usize,
    target: Target,
    mode: &'static str,
    seed: Option<u64>,
    total: String,
    checked: u64,
    good: u64,
    bad: u64,
    unknown: u64,
    degree_histogram: &'a [Vec<u64>],
}

impl CensusReport {
    pub fn to_json(&self, pretty: bool) -> String {
        let (mode, seed) = match self.mode {
            CensusMode::Exhaustive => ("exhaustive", None),
            CensusMode::Sample { seed, .. } => ("sample", Some(seed)),
        };
        let json = CensusJson {
            n: self.n,
            target: self.target,
            mode,
            seed,
            total: self.total.to_string(),
            checked: self.checked,
            good: self.good,
            bad: self.bad,
            unknown: self.unknown,
            degree_histogram: &self.degree_histogram,
        };
        if pretty {
            serde_json::to_string_pretty(&json)
        } else {
            serde_json::to_string(&json)
        }
        .expect("census serializes")
    }
}

/// Largest order accepted by an exhaustive census.
pub const CENSUS_EXHAUSTIVE_LIMIT: usize = 16;

pub fn equipartition_census(
    d: &Digraph,
    mode: CensusMode,
    target: Target,
    config: &SolverConfig,
) -> Result<CensusReport, SolverError> {
    let n = d.order();
    if n % 2 == 1 {
        return Err(BipartiteError::OddOrder(n).into());
    }
    let h = n / 2;
    let count = match mode {
        CensusMode::Exhaustive => {
            if n > CENSUS_EXHAUSTIVE_LIMIT {
                return Err(SolverError::ExhaustiveTooLarge {
                    n,
                    limit: CENSUS_EXHAUSTIVE_LIMIT,
                });
            }
            binomial_u64(n as u64, h as u64).expect("small")
        }
        CensusMode::Sample { samples, .. } => samples,
    };
    let make = |i: u64| match mode {
        CensusMode::Exhaustive => Equipartition::from_mask(n, unrank(n, h, i)).expect("n/2 bits"),
        CensusMode::Sample { seed, .. } => random_source_set(n, seed, i),
    };
    struct Tally {
        good: u64,
        bad: u64,
        unknown: u64,
        hist: Vec<Vec<u64>>,
    }
    let empty = || Tally {
        good: 0,
        bad: 0,
        unknown: 0,
        hist: vec![vec![0; h + 1]; n],
    };
    let tally = (0..count.div_ceil(CHUNK))
        .into_par_iter()
        .map(|c| -> Result<Tally, SolverError> {
            let mut t = empty();
            for i in c * CHUNK..((c + 1) * CHUNK).min(count) {
                let p = make(i);
                let b = build_bipartite(d, &p)?;
                for v in 0..n {
                    t.hist[v][b.degree(v)] += 1;
                }
                let ok = match target {
                    Target::TwoFactor => Some(b.has_two_factor()),
                    Target::Hamilton => match b.hamilton_cycle(config.hamilton_budget)? {
                        HamiltonSearch::Found(_) => Some(true),
                        HamiltonSearch::Absent => Some(false),
                        HamiltonSearch::Unknown { .. } => None,
                    },
                };
                match ok {
                    Some(true) => t.good += 1,
                    Some(false) => t.bad += 1,
                    None => t.unknown += 1,
                }
            }
            Ok(t)
        })
        .try_reduce(empty, |mut a, b| {
            a.good += b.good;
            a.bad += b.bad;
            a.unknown += b.unknown;
            for (ra, rb) in a.hist.iter_mut().zip(&b.hist) {
                for (x, y) in ra.iter_mut().zip(rb) {
                    *x += y;
                }
            }
            Ok(a)
        })?;
    Ok(CensusReport {
        n,
        target,
        mode,
        total: central_binomial(n),
        checked: count,
        good: tally.good,
        bad: tally.bad,
        unknown: tally.unknown,
        degree_histogram: tally.hist,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cover::validate_anti_directed_cover;
    use crate::gen::dn;

    fn cfg() -> SolverConfig {
        SolverConfig::default()
    }

    #[test]
    fn complete_four_has_both() {
        let d = Digraph::complete(4).unwrap();
        for target in [Target::TwoFactor, Target::Hamilton] {
            let c = decide(&d, target, Strategy::Exhaustive, &cfg()).unwrap();
            assert_eq!(c.decision, Decision::Yes);
            let w = c.witness.unwrap();
            assert_eq!(validate_anti_directed_cover(&d, &w.cover), Ok(()));
            assert_eq!(c.checked, 1);
        }
    }

    #[test]
    fn dn_six_has_no_adf() {
        let c = decide_adf(&dn(6).unwrap(), Strategy::Exhaustive, &cfg()).unwrap();
        assert_eq!(c.decision, Decision::No);
        assert_eq!(c.checked, 20);
        assert_eq!(c.total, BigUint::from(20u32));
        assert_eq!(c.refutation, Some(Refutation::ExhaustedSourceSets { checked: 20 }));
    }

    #[test]
    fn odd_order_is_refuted_by_parity() {
        let c = decide_adf(&Digraph::complete(5).unwrap(), Strategy::Exhaustive, &cfg()).unwrap();
        assert_eq!(c.decision, Decision::No);
        assert_eq!(c.method, Method::Parity);
    }

    #[test]
    fn sampling_never_says_no() {
        let c = decide_adf(&dn(6).unwrap(), Strategy::Sampled { samples: 50, seed: 1 }, &cfg()).unwrap();
        assert_eq!(c.decision, Decision::Unknown);
        assert_eq!(c.checked, 50);
    }

    #[test]
    fn exhaustive_guard() {
        let d = Digraph::complete(26).unwrap();
        assert!(matches!(
            decide_adf(&d, Strategy::Exhaustive, &cfg()),
            Err(SolverError::ExhaustiveTooLarge { n: 26, limit: 24 })
        ));
    }

    #[test]
    fn certificate_json_shape() {
        let d = Digraph::complete(4).unwrap();
        let c = decide_adf(&d, Strategy::Exhaustive, &cfg()).unwrap();
        let v: serde_json::Value = serde_json::from_str(&c.to_json(false)).unwrap();
        assert_eq!(v["decision"], "yes");
        assert_eq!(v["method"], "exhaustive");
        assert_eq!(v["stats"]["total"], "6");
        assert_eq!(v["equipartition"]["X"].as_array().unwrap().len(), 2);
        assert_eq!(v["arc_directions"].as_array().unwrap().len(), 4);
        let no = decide_adf(&dn(6).unwrap(), Strategy::Exhaustive, &cfg()).unwrap();
        let v: serde_json::Value = serde_json::from_str(&no.to_json(false)).unwrap();
        assert_eq!(v["decision"], "no");
        assert!(v["equipartition"].is_null());
    }

    #[test]
    fn directed_two_factor_examples() {
        let c5 = Digraph::new(5, (0..5).map(|i| (i, (i + 1) % 5))).unwrap();
        assert_eq!(directed_two_factor(&c5), Some(vec![1, 2, 3, 4, 0]));
        assert!(hall_condition_exhaustive(&c5).unwrap());
        let digons = Digraph::new(4, [(0, 1), (1, 0), (2, 3), (3, 2)]).unwrap();
        assert_eq!(directed_two_factor(&digons), Some(vec![1, 0, 3, 2]));
        let shared = Digraph::new(3, [(0, 1), (1, 0), (2, 0), (0, 2)]).unwrap();
        assert!(!directed_two_factor_exists(&shared));
        let dead = Digraph::new(3, [(0, 1), (1, 0), (2, 0)]).unwrap();
        assert!(!directed_two_factor_exists(&dead));
        assert!(!hall_condition_exhaustive(&dead).unwrap());
    }

    #[test]
    fn census_small() {
        let d = Digraph::complete(4).unwrap();
        let r = equipartition_census(&d, CensusMode::Exhaustive, Target::TwoFactor, &cfg()).unwrap();
        assert_eq!((r.good, r.bad, r.checked), (6, 0, 6));
        let r = equipartition_census(&dn(6).unwrap(), CensusMode::Exhaustive, Target::TwoFactor, &cfg()).unwrap();
        assert_eq!((r.good, r.bad), (0, 20));
        assert!(equipartition_census(&Digraph::complete(18).unwrap(), CensusMode::Exhaustive, Target::TwoFactor, &cfg()).is_err());
    }
}
