//! Certification of Ramsey-type values by exhaustive isomorph-free search,
//! and budgeted witness hunting.

use thiserror::Error;

use crate::certificate::Certificate;
use crate::enumerate::{
    next_level, EnumerationCache, EnumerationError, LevelStats, FULL_ENUMERATION_CAP,
};
use crate::graph::{EdgeColoring, Graph};
use crate::graph6;
use crate::parallel::par_flat_map;
use crate::set::VertexSet;
use crate::solvers::{beta_at_least, ir_at_least};
use crate::variant::{coloring_avoids, ParamKind, RamseyVariant};

/// Exhaustive search with sound pruning is feasible a little past the full
/// enumeration cap because the monotone filter keeps the alive sets small.
pub const PRUNED_SEARCH_CAP: usize = 11;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SearchError {
    #[error(transparent)]
    Enumeration(#[from] EnumerationError),
    #[error("pruned exhaustive search capped at order {PRUNED_SEARCH_CAP}, requested {0}")]
    OrderAboveCap(usize),
}

/// Whether generation may cut partial colorings early.
///
/// Pruning uses induced-monotone lower bounds only: a partial blue graph is
/// cut when `beta` already meets the blue threshold (valid for all three
/// parameters via `beta <= Gamma <= IR`), or when `IR` meets it for
/// IR-thresholded sides; symmetrically on red. `Gamma` is never pruned on
/// directly — it is not induced-monotone.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Pruning {
    MonotoneBounds,
    Off,
}

impl std::fmt::Display for Pruning {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Pruning::MonotoneBounds => write!(f, "monotone-bounds"),
            Pruning::Off => write!(f, "off"),
        }
    }
}

#[derive(Debug, Clone, Copy)]
pub struct SearchConfig {
    pub pruning: Pruning,
    pub workers: usize,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            pruning: Pruning::MonotoneBounds,
            workers: 1,
        }
    }
}

/// Exhaustion counters, all independent of the worker count.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct ExhaustionStats {
    /// Distinct canonical colorings tested at the top order.
    pub examined: u64,
    /// Distinct canonical graphs generated across all levels.
    pub generated: u64,
    /// Distinct canonical graphs cut by the monotone filter.
    pub pruned: u64,
}

impl ExhaustionStats {
    fn absorb(&mut self, level: &LevelStats) {
        self.generated += level.considered;
        self.pruned += level.considered - level.kept;
        self.examined = level.considered;
    }
}

/// True iff no induced-monotone lower bound already forces the coloring (or
/// any completion of it) past a threshold.
pub fn passes_monotone_bounds(blue: &Graph, v: &RamseyVariant) -> bool {
    if beta_at_least(blue, v.m) {
        return false;
    }
    if v.blue_param() == ParamKind::UpperIrredundance && ir_at_least(blue, v.m) {
        return false;
    }
    let red = blue.complement();
    if beta_at_least(&red, v.n) {
        return false;
    }
    if v.red_param() == ParamKind::UpperIrredundance && ir_at_least(&red, v.n) {
        return false;
    }
    true
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CertifyOutcome {
    /// No avoidance coloring of `K_p` exists; the claim is backed by the
    /// exhaustion counters.
    NoAvoidance(ExhaustionStats),
    /// A concrete avoidance coloring, disproving the upper-bound claim at
    /// this order.
    Counterexample(EdgeColoring),
}

struct LevelRun {
    keys: Vec<u64>,
    stats: LevelStats,
}

fn cap_for(pruning: Pruning) -> usize {
    match pruning {
        Pruning::MonotoneBounds => PRUNED_SEARCH_CAP,
        Pruning::Off => FULL_ENUMERATION_CAP,
    }
}

fn seed_level(v: &RamseyVariant, pruning: Pruning) -> LevelRun {
    // The single graph on one vertex; it passes every monotone bound since
    // both parameters are 1 and thresholds are at least 2.
    let kept = match pruning {
        Pruning::Off => 1,
        Pruning::MonotoneBounds => {
            let k1 = Graph::empty(1).expect("order 1 valid");
            u64::from(passes_monotone_bounds(&k1, v))
        }
    };
    LevelRun {
        keys: if kept == 1 { vec![0u64] } else { Vec::new() },
        stats: LevelStats {
            order: 1,
            raw: 1,
            considered: 1,
            kept,
        },
    }
}

fn grow_level(
    prev: &[u64],
    order: usize,
    v: &RamseyVariant,
    cfg: &SearchConfig,
    cache: &mut EnumerationCache,
) -> Result<LevelRun, SearchError> {
    match cfg.pruning {
        Pruning::Off => {
            let parents = cache.count(order - 1, cfg.workers)?;
            let keys = cache.keys(order, cfg.workers)?.to_vec();
            let stats = LevelStats {
                order,
                raw: parents as u64 * (1 << (order - 1)),
                considered: keys.len() as u64,
                kept: keys.len() as u64,
            };
            Ok(LevelRun { keys, stats })
        }
        Pruning::MonotoneBounds => {
            let (keys, stats) = next_level(prev, order, cfg.workers, |g| {
                passes_monotone_bounds(g, v)
            });
            Ok(LevelRun { keys, stats })
        }
    }
}

/// Avoidance colorings among the level's graphs, as sorted keys.
fn avoiders(keys: &[u64], order: usize, v: &RamseyVariant, workers: usize) -> Vec<u64> {
    par_flat_map(keys, workers, |&key| {
        let blue = Graph::from_upper_triangle_bits(order, key).expect("level keys decode");
        if coloring_avoids(&EdgeColoring::from_blue(blue), v) {
            vec![key]
        } else {
            Vec::new()
        }
    })
}

/// Decides whether any avoidance coloring of `K_p` exists for the variant,
/// by isomorph-free exhaustion.
pub fn certify_upper(
    p: usize,
    v: &RamseyVariant,
    cfg: &SearchConfig,
    cache: &mut EnumerationCache,
) -> Result<CertifyOutcome, SearchError> {
    if p > cap_for(cfg.pruning) {
        return Err(match cfg.pruning {
            Pruning::Off => EnumerationError::OrderAboveCap(p).into(),
            Pruning::MonotoneBounds => SearchError::OrderAboveCap(p),
        });
    }
    let mut stats = ExhaustionStats::default();
    let mut level = seed_level(v, cfg.pruning);
    stats.absorb(&level.stats);
    for order in 2..=p {
        level = grow_level(&level.keys, order, v, cfg, cache)?;
        stats.absorb(&level.stats);
    }
    let avoiding = avoiders(&level.keys, p, v, cfg.workers);
    match avoiding.first() {
        None => Ok(CertifyOutcome::NoAvoidance(stats)),
        Some(&key) => {
            let blue = Graph::from_upper_triangle_bits(p, key).expect("avoider key decodes");
            Ok(CertifyOutcome::Counterexample(EdgeColoring::from_blue(
                blue,
            )))
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ComputeOutcome {
    /// The smallest order with no avoidance coloring, plus its certificate.
    Determined { value: usize, certificate: Certificate },
    /// Avoidance colorings still exist at the highest order checked.
    Undetermined {
        highest_checked: usize,
        /// True when the stop was the search capability cap rather than the
        /// caller's `p_max`.
        at_capability_cap: bool,
    },
}

/// Computes the Ramsey value of the variant: the smallest `p` such that no
/// avoidance coloring of `K_p` exists, scanning orders upward to `p_max`.
pub fn compute_ramsey(
    v: &RamseyVariant,
    p_max: usize,
    cfg: &SearchConfig,
    cache: &mut EnumerationCache,
) -> Result<ComputeOutcome, SearchError> {
    let cap = cap_for(cfg.pruning);
    let effective_max = p_max.min(cap);
    let mut stats = ExhaustionStats::default();
    let mut level = seed_level(v, cfg.pruning);
    stats.absorb(&level.stats);
    let mut previous_witness: Option<u64> = None;

    for p in 1..=effective_max {
        if p >= 2 {
            level = grow_level(&level.keys, p, v, cfg, cache)?;
            stats.absorb(&level.stats);
        }
        let avoiding = avoiders(&level.keys, p, v, cfg.workers);
        match avoiding.first() {
            Some(&key) => previous_witness = Some(key),
            None => {
                let witness_key =
                    previous_witness.expect("every coloring of K_1 avoids, so value >= 2");
                let witness = Graph::from_upper_triangle_bits(p - 1, witness_key)
                    .expect("witness key decodes at the previous order");
                let certificate = Certificate {
                    variant: *v,
                    value: p,
                    witness_blue: graph6::encode(&witness),
                    pruning: cfg.pruning,
                    examined: stats.examined,
                    generated: stats.generated,
                    pruned: stats.pruned,
                };
                return Ok(ComputeOutcome::Determined {
                    value: p,
                    certificate,
                });
            }
        }
    }
    Ok(ComputeOutcome::Undetermined {
        highest_checked: effective_max,
        at_capability_cap: effective_max < p_max,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FindOutcome {
    Found(EdgeColoring),
    /// The pruned search space was exhausted: no avoidance coloring exists.
    ExhaustedNone { nodes: u64 },
    /// The node budget ran out first; this is not a nonexistence claim.
    BudgetExceeded { nodes: u64 },
}

/// Depth-first hunt for a single avoidance coloring of `K_p`, extending one
/// vertex at a time with neighborhoods in ascending mask order and pruning
/// by the monotone bounds. Deterministic given the budget.
pub fn find_avoidance(p: usize, v: &RamseyVariant, budget: u64) -> FindOutcome {
    assert!(
        (1..=crate::graph::MAX_ORDER).contains(&p),
        "order must lie in 1..=32"
    );
    let root = Graph::empty(1).expect("order 1 valid");
    let mut nodes = 1u64;
    if nodes > budget {
        return FindOutcome::BudgetExceeded { nodes };
    }
    if !passes_monotone_bounds(&root, v) {
        return FindOutcome::ExhaustedNone { nodes };
    }
    match dfs(&root, p, v, budget, &mut nodes) {
        Ok(Some(blue)) => FindOutcome::Found(EdgeColoring::from_blue(blue)),
        Ok(None) => FindOutcome::ExhaustedNone { nodes },
        Err(()) => FindOutcome::BudgetExceeded { nodes },
    }
}

fn dfs(g: &Graph, p: usize, v: &RamseyVariant, budget: u64, nodes: &mut u64) -> Result<Option<Graph>, ()> {
    let k = g.order();
    if k == p {
        if coloring_avoids(&EdgeColoring::from_blue(*g), v) {
            return Ok(Some(*g));
        }
        return Ok(None);
    }
    for mask in 0u64..(1 << k) {
        let child = g
            .extend(VertexSet::from_bits(mask as u32))
            .expect("extension within order cap");
        *nodes += 1;
        if *nodes > budget {
            return Err(());
        }
        if !passes_monotone_bounds(&child, v) {
            continue;
        }
        if let Some(found) = dfs(&child, p, v, budget, nodes)? {
            return Ok(Some(found));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::canonical_form;
    use crate::variant::evaluate_coloring;

    fn variant(s: &str) -> RamseyVariant {
        s.parse().unwrap()
    }

    fn cfg(pruning: Pruning) -> SearchConfig {
        SearchConfig {
            pruning,
            workers: 1,
        }
    }

    #[test]
    fn certify_r33_at_six_exhausts() {
        let mut cache = EnumerationCache::new();
        let v = variant("r(3,3)");
        match certify_upper(6, &v, &cfg(Pruning::Off), &mut cache).unwrap() {
            CertifyOutcome::NoAvoidance(stats) => {
                assert_eq!(stats.examined, 156);
                assert_eq!(stats.pruned, 0);
            }
            other => panic!("expected exhaustion, got {other:?}"),
        }
        match certify_upper(6, &v, &cfg(Pruning::MonotoneBounds), &mut cache).unwrap() {
            CertifyOutcome::NoAvoidance(stats) => {
                assert!(stats.examined > 0);
                assert!(stats.pruned > 0);
            }
            other => panic!("expected exhaustion, got {other:?}"),
        }
    }

    #[test]
    fn certify_r33_at_five_finds_the_pentagon() {
        let mut cache = EnumerationCache::new();
        let v = variant("r(3,3)");
        for pruning in [Pruning::MonotoneBounds, Pruning::Off] {
            match certify_upper(5, &v, &cfg(pruning), &mut cache).unwrap() {
                CertifyOutcome::Counterexample(coloring) => {
                    assert_eq!(
                        canonical_form(coloring.blue()),
                        canonical_form(&Graph::cycle(5).unwrap())
                    );
                    assert!(evaluate_coloring(&coloring, &v).avoids);
                }
                other => panic!("expected counterexample, got {other:?}"),
            }
        }
    }

    #[test]
    fn certify_u33_at_six_exhausts() {
        let mut cache = EnumerationCache::new();
        let v = variant("u(3,3)");
        assert!(matches!(
            certify_upper(6, &v, &cfg(Pruning::MonotoneBounds), &mut cache).unwrap(),
            CertifyOutcome::NoAvoidance(_)
        ));
    }

    #[test]
    fn compute_r33_and_u33() {
        let mut cache = EnumerationCache::new();
        for name in ["r(3,3)", "u(3,3)"] {
            let v = variant(name);
            match compute_ramsey(&v, 8, &cfg(Pruning::MonotoneBounds), &mut cache).unwrap() {
                ComputeOutcome::Determined { value, certificate } => {
                    assert_eq!(value, 6, "{name}");
                    assert!(certificate.verify().unwrap(), "{name} witness must avoid");
                }
                other => panic!("{name}: expected a value, got {other:?}"),
            }
        }
    }

    #[test]
    fn pruning_does_not_change_values_at_3_3() {
        let mut cache = EnumerationCache::new();
        for letter in ['r', 's', 'w', 't', 'u', 'v'] {
            let v = variant(&format!("{letter}(3,3)"));
            let pruned = compute_ramsey(&v, 7, &cfg(Pruning::MonotoneBounds), &mut cache).unwrap();
            let full = compute_ramsey(&v, 7, &cfg(Pruning::Off), &mut cache).unwrap();
            let value_of = |o: &ComputeOutcome| match o {
                ComputeOutcome::Determined { value, .. } => *value,
                other => panic!("expected value, got {other:?}"),
            };
            assert_eq!(value_of(&pruned), value_of(&full), "{v}");
            assert_eq!(value_of(&pruned), 6, "{v}");
        }
    }

    #[test]
    fn compute_reports_undetermined_at_cap() {
        let mut cache = EnumerationCache::new();
        let v = variant("s(3,5)");
        match compute_ramsey(&v, 6, &cfg(Pruning::MonotoneBounds), &mut cache).unwrap() {
            ComputeOutcome::Undetermined {
                highest_checked,
                at_capability_cap,
            } => {
                assert_eq!(highest_checked, 6);
                assert!(!at_capability_cap);
            }
            other => panic!("expected undetermined, got {other:?}"),
        }
    }

    #[test]
    fn order_caps_are_enforced() {
        let mut cache = EnumerationCache::new();
        let v = variant("r(3,3)");
        assert!(matches!(
            certify_upper(11, &v, &cfg(Pruning::Off), &mut cache),
            Err(SearchError::Enumeration(_))
        ));
        assert!(matches!(
            certify_upper(12, &v, &cfg(Pruning::MonotoneBounds), &mut cache),
            Err(SearchError::OrderAboveCap(12))
        ));
    }

    #[test]
    fn find_avoidance_examples() {
        let v = variant("r(3,3)");
        match find_avoidance(5, &v, 1_000_000) {
            FindOutcome::Found(coloring) => {
                assert_eq!(
                    canonical_form(coloring.blue()),
                    canonical_form(&Graph::cycle(5).unwrap())
                );
            }
            other => panic!("expected a pentagon coloring, got {other:?}"),
        }
        assert!(matches!(
            find_avoidance(6, &v, 10_000_000),
            FindOutcome::ExhaustedNone { .. }
        ));
        assert!(matches!(
            find_avoidance(6, &v, 10),
            FindOutcome::BudgetExceeded { nodes: 11 }
        ));
    }

    #[test]
    fn find_avoidance_is_deterministic() {
        let v = variant("t(3,4)");
        let a = find_avoidance(7, &v, 1_000_000);
        let b = find_avoidance(7, &v, 1_000_000);
        assert_eq!(a, b);
        match a {
            FindOutcome::Found(coloring) => {
                assert!(evaluate_coloring(&coloring, &v).avoids);
            }
            other => panic!("expected success, got {other:?}"),
        }
    }
}
