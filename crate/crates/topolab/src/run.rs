//! Multi-threaded enumeration driver.
//!
//! Parallelism splits the preorder backtracking at its top-level branches
//! (the candidate rows for element 0); workers claim branches from a shared
//! queue. Visitor calls are serialized behind a mutex, so the visitor needs
//! no internal synchronization. With one thread the emission order is the
//! canonical search order; with more threads the order is unspecified, but
//! the emitted *set* and the returned stats (total and histogram) are
//! identical for every thread count. `elapsed` is wall-clock and of course
//! varies.

use std::collections::{BTreeMap, BTreeSet};
use std::num::NonZeroUsize;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;
use std::time::{Duration, Instant};
use thiserror::Error;
use topolab_core::enumerate::{
    closure_brute, preorder_backtrack, preorder_backtrack_branch, preorder_branches,
    CLOSURE_BRUTE_MAX,
};
use topolab_core::Topology;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StrategyChoice {
    ClosureBrute,
    PreorderBacktrack,
    /// Run both and fail loudly if they disagree; emits the preorder output.
    Both,
}

#[derive(Debug, Clone)]
pub struct EnumConfig {
    pub n: u32,
    /// Keep only topologies with at least this many opens.
    pub min_card: Option<u64>,
    /// Keep only T0 topologies.
    pub require_t0: bool,
    /// Emit one canonical representative per homeomorphism class.
    pub up_to_iso: bool,
    pub strategy: StrategyChoice,
    pub threads: NonZeroUsize,
}

impl EnumConfig {
    pub fn new(n: u32) -> EnumConfig {
        EnumConfig {
            n,
            min_card: None,
            require_t0: false,
            up_to_iso: false,
            strategy: StrategyChoice::PreorderBacktrack,
            threads: NonZeroUsize::new(1).unwrap(),
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct EnumStats {
    pub total: u64,
    pub by_cardinality: BTreeMap<u64, u64>,
    pub elapsed: Duration,
}

impl EnumStats {
    fn record(&mut self, t: &Topology) {
        self.total += 1;
        *self.by_cardinality.entry(t.card()).or_insert(0) += 1;
    }
}

#[derive(Debug, Error)]
pub enum RunError {
    #[error(transparent)]
    Core(#[from] topolab_core::Error),
    #[error("strategies disagree at n={n}: closure-brute emitted {brute}, preorder {preorder}")]
    StrategyDisagreement { n: u32, brute: u64, preorder: u64 },
}

/// Up-to-iso policy: under this ground size a seen-set of canonical forms is
/// cheap; from it on, only canonical representatives are emitted directly
/// (orderly generation, no state).
const ISO_SEEN_SET_MAX: u32 = 5;

struct Filter<'a> {
    cfg: &'a EnumConfig,
    seen: BTreeSet<Vec<u32>>,
}

impl<'a> Filter<'a> {
    fn new(cfg: &'a EnumConfig) -> Filter<'a> {
        Filter {
            cfg,
            seen: BTreeSet::new(),
        }
    }

    /// Applies min-card and iso filters (T0 is filtered at the search level
    /// for the preorder strategy). Returns the topology to emit, which for
    /// iso mode is the canonical representative.
    fn admit(&mut self, t: &Topology) -> Option<Topology> {
        if let Some(min) = self.cfg.min_card {
            if t.card() < min {
                return None;
            }
        }
        if !self.cfg.up_to_iso {
            return Some(t.clone());
        }
        if self.cfg.n <= ISO_SEEN_SET_MAX {
            let canon = t.canonical_form().expect("n <= 5 permits brute canon");
            let key: Vec<u32> = canon.opens().iter().map(|m| m.bits()).collect();
            if self.seen.insert(key) {
                Some(canon)
            } else {
                None
            }
        } else {
            // orderly generation: emit exactly the canonical representatives
            match t.is_canonical() {
                Ok(true) => Some(t.clone()),
                Ok(false) => None,
                Err(e) => panic!("canonical check failed: {e}"),
            }
        }
    }

    /// Whether admission is stateless, which is what permits checking it
    /// outside the emission lock in parallel mode.
    fn is_stateless(&self) -> bool {
        !self.cfg.up_to_iso || self.cfg.n > ISO_SEEN_SET_MAX
    }
}

/// Enumerates the topologies selected by `cfg`, invoking `visitor` exactly
/// once per emitted topology, and returns the run stats.
pub fn enumerate_topologies<F>(cfg: &EnumConfig, mut visitor: F) -> Result<EnumStats, RunError>
where
    F: FnMut(&Topology) + Send,
{
    enumerate_dyn(cfg, &mut visitor)
}

fn enumerate_dyn(
    cfg: &EnumConfig,
    visitor: &mut (dyn FnMut(&Topology) + Send),
) -> Result<EnumStats, RunError> {
    let start = Instant::now();
    let mut stats = EnumStats::default();

    match cfg.strategy {
        StrategyChoice::ClosureBrute => {
            let mut filter = Filter::new(cfg);
            closure_brute(cfg.n, |t| {
                if cfg.require_t0 && !t.is_t0() {
                    return;
                }
                if let Some(out) = filter.admit(t) {
                    stats.record(&out);
                    visitor(&out);
                }
            })?;
        }
        StrategyChoice::PreorderBacktrack => {
            if cfg.threads.get() == 1 {
                let mut filter = Filter::new(cfg);
                preorder_backtrack(cfg.n, cfg.require_t0, |t| {
                    if let Some(out) = filter.admit(t) {
                        stats.record(&out);
                        visitor(&out);
                    }
                })?;
            } else {
                stats = parallel_preorder(cfg, visitor)?;
            }
        }
        StrategyChoice::Both => {
            if cfg.n > CLOSURE_BRUTE_MAX {
                return Err(topolab_core::Error::StrategyOutOfRange {
                    strategy: "both",
                    n: cfg.n,
                    max: CLOSURE_BRUTE_MAX,
                }
                .into());
            }
            let mut pre_cfg = cfg.clone();
            pre_cfg.strategy = StrategyChoice::PreorderBacktrack;
            let mut preorder: Vec<Topology> = Vec::new();
            enumerate_dyn(&pre_cfg, &mut |t: &Topology| preorder.push(t.clone()))?;

            let mut brute_cfg = cfg.clone();
            brute_cfg.strategy = StrategyChoice::ClosureBrute;
            let mut brute: Vec<Topology> = Vec::new();
            enumerate_dyn(&brute_cfg, &mut |t: &Topology| brute.push(t.clone()))?;

            let mut a = preorder.clone();
            let mut b = brute.clone();
            a.sort_unstable();
            b.sort_unstable();
            if a != b {
                return Err(RunError::StrategyDisagreement {
                    n: cfg.n,
                    brute: brute.len() as u64,
                    preorder: preorder.len() as u64,
                });
            }
            for t in &preorder {
                stats.record(t);
                visitor(t);
            }
        }
    }

    stats.elapsed = start.elapsed();
    Ok(stats)
}

fn parallel_preorder(
    cfg: &EnumConfig,
    visitor: &mut (dyn FnMut(&Topology) + Send),
) -> Result<EnumStats, RunError> {
    let branches = preorder_branches(cfg.n)?;
    let next = AtomicUsize::new(0);
    let filter = Filter::new(cfg);
    let stateless = filter.is_stateless();
    // visitor, stats, and (for the seen-set path) the filter share one lock
    let shared = Mutex::new((visitor, EnumStats::default(), filter));
    let errors: Mutex<Vec<topolab_core::Error>> = Mutex::new(Vec::new());

    std::thread::scope(|scope| {
        for _ in 0..cfg.threads.get() {
            scope.spawn(|| loop {
                let i = next.fetch_add(1, Ordering::Relaxed);
                let Some(&row0) = branches.get(i) else {
                    return;
                };
                let result = preorder_backtrack_branch(cfg.n, row0, cfg.require_t0, |t| {
                    if stateless {
                        // cheap pre-screen without the lock
                        let mut probe = Filter::new(cfg);
                        let Some(out) = probe.admit(t) else { return };
                        let mut guard = shared.lock().unwrap();
                        let (visitor, stats, _) = &mut *guard;
                        stats.record(&out);
                        visitor(&out);
                    } else {
                        let mut guard = shared.lock().unwrap();
                        let (visitor, stats, filter) = &mut *guard;
                        if let Some(out) = filter.admit(t) {
                            stats.record(&out);
                            visitor(&out);
                        }
                    }
                });
                if let Err(e) = result {
                    errors.lock().unwrap().push(e);
                    return;
                }
            });
        }
    });

    if let Some(e) = errors.into_inner().unwrap().pop() {
        return Err(e.into());
    }
    Ok(shared.into_inner().unwrap().1)
}

/// Number of topologies on `X_n` (with an optional lower cardinality bound),
/// counted without materializing them for the caller.
pub fn count_topologies(n: u32, min_card: Option<u64>) -> Result<u64, RunError> {
    let mut cfg = EnumConfig::new(n);
    cfg.min_card = min_card;
    let stats = enumerate_topologies(&cfg, |_| {})?;
    Ok(stats.total)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn collect(cfg: &EnumConfig) -> (Vec<Topology>, EnumStats) {
        let mut out = Vec::new();
        let stats = enumerate_topologies(cfg, |t| out.push(t.clone())).unwrap();
        (out, stats)
    }

    #[test]
    fn stats_are_thread_count_invariant() {
        let mut cfg = EnumConfig::new(5);
        let (mut one, stats1) = collect(&cfg);
        cfg.threads = NonZeroUsize::new(4).unwrap();
        let (mut four, stats4) = collect(&cfg);
        assert_eq!(stats1.total, 6942);
        assert_eq!(stats1.total, stats4.total);
        assert_eq!(stats1.by_cardinality, stats4.by_cardinality);
        one.sort_unstable();
        four.sort_unstable();
        assert_eq!(one, four);
    }

    #[test]
    fn both_strategies_cross_validate() {
        for n in 1..=4 {
            let mut cfg = EnumConfig::new(n);
            cfg.strategy = StrategyChoice::Both;
            let (_, stats) = collect(&cfg);
            assert_eq!(stats.total, [1, 4, 29, 355][n as usize - 1]);
        }
        let mut cfg = EnumConfig::new(5);
        cfg.strategy = StrategyChoice::Both;
        assert!(enumerate_topologies(&cfg, |_| {}).is_err());
    }

    #[test]
    fn min_card_filter_is_sound() {
        let mut cfg = EnumConfig::new(4);
        cfg.min_card = Some(6);
        let (filtered, stats) = collect(&cfg);
        assert!(filtered.iter().all(|t| t.card() >= 6));
        let (all, _) = collect(&EnumConfig::new(4));
        let expected = all.iter().filter(|t| t.card() >= 6).count() as u64;
        assert_eq!(stats.total, expected);
    }

    #[test]
    fn t0_filter_matches_the_predicate() {
        let mut cfg = EnumConfig::new(4);
        cfg.require_t0 = true;
        let (t0s, stats) = collect(&cfg);
        assert_eq!(stats.total, 219);
        assert!(t0s.iter().all(Topology::is_t0));
        let (all, _) = collect(&EnumConfig::new(4));
        assert_eq!(
            all.iter().filter(|t| t.is_t0()).count(),
            t0s.len()
        );
    }

    #[test]
    fn iso_classes_via_seen_set_and_histogram_totals() {
        let expected = [1u64, 3, 9, 33, 139];
        for n in 1..=5 {
            let mut cfg = EnumConfig::new(n);
            cfg.up_to_iso = true;
            let (reps, stats) = collect(&cfg);
            assert_eq!(stats.total, expected[n as usize - 1], "n={n}");
            assert_eq!(
                stats.by_cardinality.values().sum::<u64>(),
                stats.total
            );
            // every representative is canonical
            for t in reps {
                assert_eq!(t.canonical_form().unwrap(), t);
            }
        }
    }

    #[test]
    fn orderly_generation_agrees_with_seen_set_at_the_boundary() {
        // n = 5 supports both policies; run the orderly one explicitly by
        // pretending the threshold moved, via a direct canonical filter
        let (all, _) = collect(&EnumConfig::new(5));
        let orderly = all
            .iter()
            .filter(|t| t.is_canonical().unwrap())
            .count() as u64;
        assert_eq!(orderly, 139);
    }

    #[test]
    fn count_topologies_counts() {
        assert_eq!(count_topologies(1, None).unwrap(), 1);
        assert_eq!(count_topologies(4, None).unwrap(), 355);
        // filter consistency: every counted topology satisfies the bound
        let mut cfg = EnumConfig::new(5);
        cfg.min_card = Some(12);
        let (ts, stats) = collect(&cfg);
        assert_eq!(stats.total, count_topologies(5, Some(12)).unwrap());
        assert!(ts.iter().all(|t| t.card() >= 12));
    }
}
