//! Theorem-verification harness.
//!
//! Every claim worth checking is a named check producing a machine-readable
//! [`TheoremReport`]: `verified` (no counterexample in range), `refuted`
//! (witnesses attached), or `discrepancy` (a printed formula disagrees with
//! the computed object without breaking the surrounding result). Checks are
//! pure functions of `(key, n_max, seed)`; reports are byte-identical across
//! runs and thread counts except for the wall-clock `elapsed_ms` field.
//!
//! Enumeration-driven checks share one pass per ground size (visitor
//! fan-out), which keeps a full `run_all` at `n_max = 6` well inside a
//! minute.

use crate::json::{coeffs_to_strings, TopologyJson};
use crate::run::{enumerate_topologies, EnumConfig, RunError};
use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::{json, Value};
use std::num::NonZeroUsize;
use std::time::{Duration, Instant};
use thiserror::Error;
use topolab_core::coeffs::{expand_binomial_product, partition_coefficient};
use topolab_core::families;
use topolab_core::partition::partition_types_of;
use topolab_core::{CoeffSeq, Topology};

pub const DEFAULT_SEED: u64 = 0x746f706f;
const WITNESS_CAP: usize = 10;
const CONVOLUTION_TRIALS: u64 = 10_000;

/// Registry, in report order.
pub const THEOREM_KEYS: &[&str] = &[
    "real-roots-iff-discrete",
    "newton-implies-discrete",
    "dmax-bound",
    "cotopology-partition",
    "partition-product",
    "coeff-composition",
    "missing-size-max-card",
    "nonvanishing-corollary",
    "counterexample-nonunimodal",
    "unimodal-above-6x2n4",
    "t0-nonvanishing",
    "t0-small-unimodal",
    "small-tau-gap",
    "families-match",
    "convolution-laws",
];

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Verified,
    Discrepancy,
    Refuted,
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq, PartialOrd, Ord)]
pub struct Witness {
    /// Replayable topology, when the finding is about a specific one.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub topology: Option<TopologyJson>,
    pub explanation: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct TheoremReport {
    pub id: String,
    /// Ground sizes actually swept (empty for purely randomized checks).
    pub n_range: Vec<u32>,
    pub verdict: Verdict,
    pub witnesses: Vec<Witness>,
    pub checked_count: u64,
    pub elapsed_ms: u64,
    /// Check-specific tables reported as data, asserting nothing.
    #[serde(skip_serializing_if = "serde_json::Map::is_empty")]
    pub data: serde_json::Map<String, Value>,
}

impl TheoremReport {
    fn finalize(&mut self) {
        self.witnesses.sort();
        if self.witnesses.len() > WITNESS_CAP {
            self.data
                .insert("witness_total".into(), json!(self.witnesses.len()));
            self.witnesses.truncate(WITNESS_CAP);
        }
        if self.verdict == Verdict::Verified && !self.witnesses.is_empty() {
            self.verdict = Verdict::Refuted;
        }
    }
}

#[derive(Debug, Error)]
pub enum VerifyError {
    #[error("unknown theorem key `{0}`")]
    UnknownTheorem(String),
    #[error(transparent)]
    Run(#[from] RunError),
    #[error(transparent)]
    Core(#[from] topolab_core::Error),
}

#[derive(Debug, Clone)]
pub struct VerifyContext {
    pub n_max: u32,
    pub seed: u64,
    pub threads: NonZeroUsize,
}

impl VerifyContext {
    pub fn new(n_max: u32) -> VerifyContext {
        VerifyContext {
            n_max,
            seed: DEFAULT_SEED,
            threads: NonZeroUsize::new(1).unwrap(),
        }
    }
}

/// Per-topology facts shared by all enumeration-driven checks.
struct Scanned<'a> {
    n: u32,
    t: &'a Topology,
    poly: CoeffSeq,
    card: u64,
    discrete: bool,
    all_positive: bool,
    t0: bool,
    unimodal: bool,
}

impl<'a> Scanned<'a> {
    fn new(n: u32, t: &'a Topology) -> Scanned<'a> {
        let poly = t.open_polynomial();
        use num_traits::Zero;
        let all_positive = poly.coeffs().iter().all(|c| !c.is_zero());
        Scanned {
            n,
            t,
            card: t.card(),
            discrete: t.is_discrete(),
            all_positive,
            t0: t.is_t0(),
            unimodal: poly.is_unimodal(),
            poly,
        }
    }

    fn witness(&self, explanation: String) -> Witness {
        Witness {
            topology: Some(TopologyJson::from(self.t)),
            explanation,
        }
    }
}

trait SweepCheck: Send {
    fn wants(&self, n: u32) -> bool;
    fn observe(&mut self, s: &Scanned);
    fn finish(&mut self) -> TheoremReport;
}

fn blank(key: &str) -> TheoremReport {
    TheoremReport {
        id: key.to_string(),
        n_range: Vec::new(),
        verdict: Verdict::Verified,
        witnesses: Vec::new(),
        checked_count: 0,
        elapsed_ms: 0,
        data: serde_json::Map::new(),
    }
}

fn pairs_to_json(pairs: &[(u32, u64)]) -> Value {
    Value::Array(
        pairs
            .iter()
            .map(|(n, c)| json!({"n": n, "count": c}))
            .collect(),
    )
}

fn bump(pairs: &mut Vec<(u32, u64)>, n: u32) {
    match pairs.iter_mut().find(|(k, _)| *k == n) {
        Some((_, c)) => *c += 1,
        None => pairs.push((n, 1)),
    }
}

// ---------------------------------------------------------------------------
// enumeration-driven checks
// ---------------------------------------------------------------------------

/// The open polynomial has only real zeros iff the topology is discrete.
struct RealRootsIffDiscrete {
    report: TheoremReport,
    real_rooted_per_n: Vec<(u32, u64)>,
}

impl SweepCheck for RealRootsIffDiscrete {
    fn wants(&self, _n: u32) -> bool {
        true
    }
    fn observe(&mut self, s: &Scanned) {
        self.report.checked_count += 1;
        let real_rooted = s.poly.is_real_rooted().expect("open polynomial is nonzero");
        if real_rooted {
            bump(&mut self.real_rooted_per_n, s.n);
        }
        if real_rooted != s.discrete {
            self.report.witnesses.push(s.witness(format!(
                "n={} |opens|={} real_rooted={} but discrete={}",
                s.n, s.card, real_rooted, s.discrete
            )));
        }
    }
    fn finish(&mut self) -> TheoremReport {
        self.real_rooted_per_n.sort_unstable();
        self.report.data.insert(
            "real_rooted_per_n".into(),
            pairs_to_json(&self.real_rooted_per_n),
        );
        std::mem::replace(&mut self.report, blank(""))
    }
}

/// Newton's inequalities plus strictly positive coefficients force the
/// discrete topology.
///
/// The bare inequalities are vacuous across internal zero coefficients (the
/// indiscrete topology on three points passes them), so the positivity
/// qualifier from the surrounding nonvanishing facts is part of the check;
/// log-concave counts are reported as data, asserting nothing.
struct NewtonImpliesDiscrete {
    report: TheoremReport,
    log_concave_per_n: Vec<(u32, u64)>,
    log_concave_non_newton_per_n: Vec<(u32, u64)>,
}

impl SweepCheck for NewtonImpliesDiscrete {
    fn wants(&self, _n: u32) -> bool {
        true
    }
    fn observe(&mut self, s: &Scanned) {
        self.report.checked_count += 1;
        let newton = if s.poly.degree() < 2 {
            true
        } else {
            s.poly.newton_check().expect("degree checked")
        };
        if s.poly.is_log_concave() {
            bump(&mut self.log_concave_per_n, s.n);
            if !newton {
                bump(&mut self.log_concave_non_newton_per_n, s.n);
            }
        }
        if (newton && s.all_positive) != s.discrete {
            self.report.witnesses.push(s.witness(format!(
                "n={} |opens|={} newton={} all_positive={} but discrete={}",
                s.n, s.card, newton, s.all_positive, s.discrete
            )));
        }
    }
    fn finish(&mut self) -> TheoremReport {
        self.log_concave_per_n.sort_unstable();
        self.log_concave_non_newton_per_n.sort_unstable();
        self.report.data.insert(
            "log_concave_per_n".into(),
            pairs_to_json(&self.log_concave_per_n),
        );
        self.report.data.insert(
            "log_concave_non_newton_per_n".into(),
            pairs_to_json(&self.log_concave_non_newton_per_n),
        );
        std::mem::replace(&mut self.report, blank(""))
    }
}

/// For non-discrete topologies with all coefficients positive, the best
/// log-concavity factor `d` satisfies `d^(n-1) <= n^2`, compared exactly by
/// integer cross-multiplication. Strictness failures (equality) are
/// reported separately because statement and proof differ on strictness.
struct DmaxBound {
    report: TheoremReport,
    examined: u64,
    equalities: u64,
}

impl SweepCheck for DmaxBound {
    fn wants(&self, n: u32) -> bool {
        n >= 2
    }
    fn observe(&mut self, s: &Scanned) {
        self.report.checked_count += 1;
        if s.discrete || !s.all_positive {
            return;
        }
        self.examined += 1;
        let d = s
            .poly
            .max_lc_ratio()
            .expect("all-positive sequence of degree >= 2 has a constraining index");
        let (p, q) = (d.numer(), d.denom());
        let e = s.n - 1;
        let lhs = p.pow(e);
        let rhs = BigInt::from(s.n as u64 * s.n as u64) * q.pow(e);
        if lhs > rhs {
            self.report.witnesses.push(s.witness(format!(
                "n={} |opens|={} d={} violates d^{} <= {}",
                s.n,
                s.card,
                d,
                e,
                s.n * s.n
            )));
        } else if lhs == rhs {
            self.equalities += 1;
        }
    }
    fn finish(&mut self) -> TheoremReport {
        self.report
            .data
            .insert("non_discrete_all_positive".into(), json!(self.examined));
        self.report
            .data
            .insert("strictness_equalities".into(), json!(self.equalities));
        std::mem::replace(&mut self.report, blank(""))
    }
}

/// A topology equals its cotopology iff it is induced by a partition.
struct CotopologyPartition {
    report: TheoremReport,
}

impl SweepCheck for CotopologyPartition {
    fn wants(&self, _n: u32) -> bool {
        true
    }
    fn observe(&mut self, s: &Scanned) {
        self.report.checked_count += 1;
        let self_complementary = s.t.cotopology() == *s.t;
        let induced = s.t.induced_partition().is_some();
        if self_complementary != induced {
            self.report.witnesses.push(s.witness(format!(
                "n={} self_cotopology={} partition_induced={}",
                s.n, self_complementary, induced
            )));
        }
    }
    fn finish(&mut self) -> TheoremReport {
        std::mem::replace(&mut self.report, blank(""))
    }
}

/// A topology missing opens of cardinality `j` has at most
/// `2^(j-1) + 2^(n-j-1)` opens; attainment is reported per `(n, j)`.
struct MissingSizeMaxCard {
    report: TheoremReport,
    // (n, j, max observed card, a topology attaining it)
    table: Vec<(u32, u32, u64, TopologyJson)>,
}

impl SweepCheck for MissingSizeMaxCard {
    fn wants(&self, n: u32) -> bool {
        n >= 2
    }
    fn observe(&mut self, s: &Scanned) {
        use num_traits::Zero;
        self.report.checked_count += 1;
        for j in 1..s.n {
            if !s.poly.coeffs()[j as usize].is_zero() {
                continue;
            }
            match self
                .table
                .iter_mut()
                .find(|(n, jj, _, _)| *n == s.n && *jj == j)
            {
                Some(entry) if entry.2 >= s.card => {}
                Some(entry) => {
                    entry.2 = s.card;
                    entry.3 = TopologyJson::from(s.t);
                }
                None => self.table.push((s.n, j, s.card, TopologyJson::from(s.t))),
            }
        }
    }
    fn finish(&mut self) -> TheoremReport {
        self.table.sort_by_key(|(n, j, _, _)| (*n, *j));
        let mut rows = Vec::new();
        for (n, j, max_card, topo) in &self.table {
            let bound = (1u64 << (j - 1)) + (1u64 << (n - j - 1));
            rows.push(json!({
                "n": n,
                "j": j,
                "max_card": max_card,
                "bound": bound,
                "attained": *max_card == bound,
            }));
            if *max_card > bound {
                self.report.witnesses.push(Witness {
                    topology: Some(topo.clone()),
                    explanation: format!(
                        "n={n} j={j}: cardinality {max_card} exceeds bound {bound}"
                    ),
                });
            }
        }
        self.report.data.insert("table".into(), Value::Array(rows));
        std::mem::replace(&mut self.report, blank(""))
    }
}

/// Topologies with at least `2^(n-2) + 2` opens have all coefficients
/// positive.
struct NonvanishingCorollary {
    report: TheoremReport,
}

impl SweepCheck for NonvanishingCorollary {
    fn wants(&self, n: u32) -> bool {
        n >= 2
    }
    fn observe(&mut self, s: &Scanned) {
        self.report.checked_count += 1;
        let threshold = (1u64 << (s.n - 2)) + 2;
        if s.card >= threshold && !s.all_positive {
            self.report.witnesses.push(s.witness(format!(
                "n={} |opens|={} >= {} but the polynomial {:?} has a zero coefficient",
                s.n,
                s.card,
                threshold,
                coeffs_to_strings(&s.poly)
            )));
        }
    }
    fn finish(&mut self) -> TheoremReport {
        std::mem::replace(&mut self.report, blank(""))
    }
}

/// Topologies with at least `6 * 2^(n-4)` opens have unimodal polynomials.
///
/// The threshold is integral from `n = 4` on and the classification behind
/// the claim lives there, so the sweep starts at 4. The claim genuinely
/// fails at `n = 4` (a 7-open witness exists) and holds from `n = 5`.
struct UnimodalAboveThreshold {
    report: TheoremReport,
    qualifying_per_n: Vec<(u32, u64)>,
}

impl SweepCheck for UnimodalAboveThreshold {
    fn wants(&self, n: u32) -> bool {
        n >= 4
    }
    fn observe(&mut self, s: &Scanned) {
        self.report.checked_count += 1;
        let threshold = 6u64 << (s.n - 4);
        if s.card < threshold {
            return;
        }
        bump(&mut self.qualifying_per_n, s.n);
        if !s.unimodal {
            self.report.witnesses.push(s.witness(format!(
                "n={} |opens|={} >= {} with non-unimodal polynomial {:?}",
                s.n,
                s.card,
                threshold,
                coeffs_to_strings(&s.poly)
            )));
        }
    }
    fn finish(&mut self) -> TheoremReport {
        self.qualifying_per_n.sort_unstable();
        self.report.data.insert(
            "qualifying_per_n".into(),
            pairs_to_json(&self.qualifying_per_n),
        );
        std::mem::replace(&mut self.report, blank(""))
    }
}

/// T0 topologies have all coefficients positive.
struct T0Nonvanishing {
    report: TheoremReport,
}

impl SweepCheck for T0Nonvanishing {
    fn wants(&self, _n: u32) -> bool {
        true
    }
    fn observe(&mut self, s: &Scanned) {
        self.report.checked_count += 1;
        if s.t0 && !s.all_positive {
            self.report.witnesses.push(s.witness(format!(
                "n={} T0 topology with zero coefficient in {:?}",
                s.n,
                coeffs_to_strings(&s.poly)
            )));
        }
    }
    fn finish(&mut self) -> TheoremReport {
        std::mem::replace(&mut self.report, blank(""))
    }
}

/// T0 topologies with `n+1` or `n+2` opens have unimodal polynomials.
struct T0SmallUnimodal {
    report: TheoremReport,
}

impl SweepCheck for T0SmallUnimodal {
    fn wants(&self, _n: u32) -> bool {
        true
    }
    fn observe(&mut self, s: &Scanned) {
        self.report.checked_count += 1;
        if s.t0 && (s.card == s.n as u64 + 1 || s.card == s.n as u64 + 2) && !s.unimodal {
            self.report.witnesses.push(s.witness(format!(
                "n={} T0 with |opens|={} non-unimodal {:?}",
                s.n,
                s.card,
                coeffs_to_strings(&s.poly)
            )));
        }
    }
    fn finish(&mut self) -> TheoremReport {
        std::mem::replace(&mut self.report, blank(""))
    }
}

/// Topologies with at most `n` opens miss some internal coefficient.
struct SmallTauGap {
    report: TheoremReport,
}

impl SweepCheck for SmallTauGap {
    fn wants(&self, _n: u32) -> bool {
        true
    }
    fn observe(&mut self, s: &Scanned) {
        self.report.checked_count += 1;
        if s.card <= s.n as u64 && s.all_positive {
            self.report.witnesses.push(s.witness(format!(
                "n={} |opens|={} <= n yet all coefficients positive",
                s.n, s.card
            )));
        }
    }
    fn finish(&mut self) -> TheoremReport {
        std::mem::replace(&mut self.report, blank(""))
    }
}

// ---------------------------------------------------------------------------
// standalone checks
// ---------------------------------------------------------------------------

/// Partition-topology polynomial equals the binomial-product expansion for
/// every partition type of every `n <= n_max`.
fn run_partition_product(ctx: &VerifyContext) -> Result<TheoremReport, VerifyError> {
    let mut report = blank("partition-product");
    for n in 1..=ctx.n_max.min(topolab_core::MAX_GROUND_SIZE) {
        report.n_range.push(n);
        for ty in partition_types_of(n) {
            report.checked_count += 1;
            let t = Topology::partition_topology(n, &ty.canonical_blocks())?;
            let computed = t.open_polynomial();
            let expanded = expand_binomial_product(&ty)?;
            if computed != expanded {
                report.witnesses.push(Witness {
                    topology: Some(TopologyJson::from(&t)),
                    explanation: format!(
                        "type {:?}: topology gives {:?}, product expands to {:?}",
                        ty.counts(),
                        coeffs_to_strings(&computed),
                        coeffs_to_strings(&expanded)
                    ),
                });
            }
        }
    }
    Ok(report)
}

/// Composition-sum coefficients equal the expanded product coefficients.
fn run_coeff_composition(ctx: &VerifyContext) -> Result<TheoremReport, VerifyError> {
    let mut report = blank("coeff-composition");
    for n in 1..=ctx.n_max.min(topolab_core::MAX_GROUND_SIZE) {
        report.n_range.push(n);
        for ty in partition_types_of(n) {
            report.checked_count += 1;
            let expanded = expand_binomial_product(&ty)?;
            for m in 0..=n as usize {
                let direct = partition_coefficient(&ty, m)?;
                if &direct != expanded.get(m)? {
                    report.witnesses.push(Witness {
                        topology: None,
                        explanation: format!(
                            "type {:?} m={m}: composition sum {direct} != expansion {}",
                            ty.counts(),
                            expanded.get(m)?
                        ),
                    });
                }
            }
        }
    }
    Ok(report)
}

/// The large counterexample family has `2^(n-2) + 3` opens and a
/// non-unimodal polynomial for `5 <= n <= 10`.
fn run_counterexample(ctx: &VerifyContext) -> Result<TheoremReport, VerifyError> {
    let mut report = blank("counterexample-nonunimodal");
    let hi = ctx.n_max.clamp(10, topolab_core::MAX_GROUND_SIZE);
    for n in 5..=hi {
        report.n_range.push(n);
        report.checked_count += 1;
        let inst = families::instantiate("counterexample", n, None)?;
        let m = families::check(&inst);
        let expected_card = (1u64 << (n - 2)) + 3;
        if m.computed_card != expected_card {
            report.witnesses.push(Witness {
                topology: Some(TopologyJson::from(&inst.topology)),
                explanation: format!(
                    "n={n}: {} opens, expected {expected_card}",
                    m.computed_card
                ),
            });
        }
        if m.unimodal {
            report.witnesses.push(Witness {
                topology: Some(TopologyJson::from(&inst.topology)),
                explanation: format!(
                    "n={n}: polynomial {:?} is unimodal but must not be",
                    coeffs_to_strings(&m.computed_poly)
                ),
            });
        }
    }
    Ok(report)
}

/// Sweeps the whole family catalog: cardinality formulas and stated minimal
/// open counts must match the computed topologies (refuted otherwise), the
/// unimodality/log-concavity assertions attached to the families are tested on
/// the computed polynomials (refuted on failure), and claimed polynomials
/// failing adjudication downgrade the verdict to discrepancy.
fn run_families_match(_ctx: &VerifyContext) -> Result<TheoremReport, VerifyError> {
    let mut report = blank("families-match");
    report.n_range = (4..=9).collect();
    let mut discrepancies: Vec<String> = Vec::new();

    let inspect = |inst: &families::FamilyInstance,
                       report: &mut TheoremReport,
                       discrepancies: &mut Vec<String>| {
        report.checked_count += 1;
        let m = families::check(inst);
        let label = match inst.param {
            Some(p) => format!("{} n={} param={}", inst.key, inst.n, p),
            None => match &inst.alpha {
                Some(ty) => format!("{} n={} alpha={:?}", inst.key, inst.n, ty.counts()),
                None => format!("{} n={}", inst.key, inst.n),
            },
        };
        if !m.card_match {
            report.witnesses.push(Witness {
                topology: Some(TopologyJson::from(&inst.topology)),
                explanation: format!(
                    "{label}: claimed cardinality {} but computed {}",
                    inst.claimed_card, m.computed_card
                ),
            });
        }
        let minimal = inst.topology.minimal_open_sets().len() as u64;
        if minimal != inst.expected_minimal_open_count {
            report.witnesses.push(Witness {
                topology: Some(TopologyJson::from(&inst.topology)),
                explanation: format!(
                    "{label}: {minimal} minimal opens, construction states {}",
                    inst.expected_minimal_open_count
                ),
            });
        }
        if let Some(expected) = inst.claims.unimodal {
            if m.unimodal != expected {
                report.witnesses.push(Witness {
                    topology: Some(TopologyJson::from(&inst.topology)),
                    explanation: format!(
                        "{label}: unimodality claim {expected} fails on computed {:?}",
                        coeffs_to_strings(&m.computed_poly)
                    ),
                });
            }
        }
        if let Some(expected) = inst.claims.log_concave {
            if m.log_concave != expected {
                report.witnesses.push(Witness {
                    topology: Some(TopologyJson::from(&inst.topology)),
                    explanation: format!(
                        "{label}: log-concavity claim {expected} fails on computed {:?}",
                        coeffs_to_strings(&m.computed_poly)
                    ),
                });
            }
        }
        if !m.poly_match {
            let which = match m.alt_poly_match {
                Some(true) => "the in-proof variant matches instead",
                Some(false) => "neither printed variant matches",
                None => "no alternative form is printed",
            };
            discrepancies.push(format!(
                "{label}: claimed polynomial differs from computed at positions {:?}; {which}",
                m.diff_positions
            ));
        }
    };

    for def in families::CATALOG {
        if def.param == families::ParamKind::Alpha {
            continue;
        }
        for n in def.min_n.max(4)..=9 {
            for param in def.param_values(n) {
                let inst = families::instantiate(def.key, n, param)?;
                inspect(&inst, &mut report, &mut discrepancies);
            }
        }
    }
    for n in 4..=9 {
        for ty in partition_types_of(n) {
            let inst = families::instantiate_partition(&ty)?;
            inspect(&inst, &mut report, &mut discrepancies);
        }
    }

    discrepancies.sort();
    if !discrepancies.is_empty() {
        report.data.insert(
            "polynomial_discrepancies".into(),
            Value::Array(discrepancies.iter().map(|d| json!(d)).collect()),
        );
        if report.witnesses.is_empty() {
            report.verdict = Verdict::Discrepancy;
        }
    }
    Ok(report)
}

fn random_sequence(rng: &mut ChaCha8Rng) -> CoeffSeq {
    let len = rng.gen_range(2..=5);
    let coeffs: Vec<u64> = (0..len).map(|_| rng.gen_range(0..=6)).collect();
    CoeffSeq::from_u64s(&coeffs)
}

fn random_with(rng: &mut ChaCha8Rng, accept: impl Fn(&CoeffSeq) -> bool) -> CoeffSeq {
    for _ in 0..100_000 {
        let s = random_sequence(rng);
        if accept(&s) {
            return s;
        }
    }
    unreachable!("rejection sampling failed to produce a sequence");
}

/// Randomized convolution laws: log-concave NIZ times log-concave NIZ stays
/// log-concave NIZ, and unimodal times log-concave NIZ stays unimodal.
fn run_convolution_laws(ctx: &VerifyContext) -> Result<TheoremReport, VerifyError> {
    let mut report = blank("convolution-laws");
    let mut rng = ChaCha8Rng::seed_from_u64(ctx.seed);
    for trial in 0..CONVOLUTION_TRIALS {
        report.checked_count += 1;
        let a = random_with(&mut rng, |s| s.is_log_concave() && s.is_niz());
        let b = random_with(&mut rng, |s| s.is_log_concave() && s.is_niz());
        let c = a.convolve(&b);
        if !(c.is_log_concave() && c.is_niz()) {
            report.witnesses.push(Witness {
                topology: None,
                explanation: format!(
                    "trial {trial}: {:?} * {:?} = {:?} is not log-concave NIZ",
                    coeffs_to_strings(&a),
                    coeffs_to_strings(&b),
                    coeffs_to_strings(&c)
                ),
            });
        }
    }
    for trial in 0..CONVOLUTION_TRIALS {
        report.checked_count += 1;
        let u = random_with(&mut rng, CoeffSeq::is_unimodal);
        let b = random_with(&mut rng, |s| s.is_log_concave() && s.is_niz());
        let c = u.convolve(&b);
        if !c.is_unimodal() {
            report.witnesses.push(Witness {
                topology: None,
                explanation: format!(
                    "trial {trial}: unimodal {:?} * log-concave NIZ {:?} = {:?} is not unimodal",
                    coeffs_to_strings(&u),
                    coeffs_to_strings(&b),
                    coeffs_to_strings(&c)
                ),
            });
        }
    }
    report
        .data
        .insert("trials_per_law".into(), json!(CONVOLUTION_TRIALS));
    Ok(report)
}

// ---------------------------------------------------------------------------
// dispatch
// ---------------------------------------------------------------------------

fn sweep_check(key: &str) -> Option<Box<dyn SweepCheck>> {
    let check: Box<dyn SweepCheck> = match key {
        "real-roots-iff-discrete" => Box::new(RealRootsIffDiscrete {
            report: blank(key),
            real_rooted_per_n: Vec::new(),
        }),
        "newton-implies-discrete" => Box::new(NewtonImpliesDiscrete {
            report: blank(key),
            log_concave_per_n: Vec::new(),
            log_concave_non_newton_per_n: Vec::new(),
        }),
        "dmax-bound" => Box::new(DmaxBound {
            report: blank(key),
            examined: 0,
            equalities: 0,
        }),
        "cotopology-partition" => Box::new(CotopologyPartition { report: blank(key) }),
        "missing-size-max-card" => Box::new(MissingSizeMaxCard {
            report: blank(key),
            table: Vec::new(),
        }),
        "nonvanishing-corollary" => Box::new(NonvanishingCorollary { report: blank(key) }),
        "unimodal-above-6x2n4" => Box::new(UnimodalAboveThreshold {
            report: blank(key),
            qualifying_per_n: Vec::new(),
        }),
        "t0-nonvanishing" => Box::new(T0Nonvanishing { report: blank(key) }),
        "t0-small-unimodal" => Box::new(T0SmallUnimodal { report: blank(key) }),
        "small-tau-gap" => Box::new(SmallTauGap { report: blank(key) }),
        _ => return None,
    };
    Some(check)
}

type StandaloneFn = fn(&VerifyContext) -> Result<TheoremReport, VerifyError>;

fn standalone(key: &str) -> Option<StandaloneFn> {
    match key {
        "partition-product" => Some(run_partition_product),
        "coeff-composition" => Some(run_coeff_composition),
        "counterexample-nonunimodal" => Some(run_counterexample),
        "families-match" => Some(run_families_match),
        "convolution-laws" => Some(run_convolution_laws),
        _ => None,
    }
}

/// Runs one named check.
pub fn run(key: &str, ctx: &VerifyContext) -> Result<TheoremReport, VerifyError> {
    let mut reports = run_keys(&[key], ctx)?;
    Ok(reports.remove(0))
}

/// Runs every registered check; reports come back in registry order.
pub fn run_all(ctx: &VerifyContext) -> Result<Vec<TheoremReport>, VerifyError> {
    run_keys(THEOREM_KEYS, ctx)
}

fn run_keys(keys: &[&str], ctx: &VerifyContext) -> Result<Vec<TheoremReport>, VerifyError> {
    for key in keys {
        if !THEOREM_KEYS.contains(key) {
            return Err(VerifyError::UnknownTheorem(key.to_string()));
        }
    }

    let mut sweeps: Vec<Box<dyn SweepCheck>> = keys.iter().filter_map(|k| sweep_check(k)).collect();

    // enumeration-driven checks are bounded by the backtracking limit;
    // standalone checks cap themselves at the ground-size limit
    let max = topolab_core::enumerate::PREORDER_MAX;
    if ctx.n_max == 0 || (!sweeps.is_empty() && ctx.n_max > max) {
        return Err(VerifyError::Core(topolab_core::Error::StrategyOutOfRange {
            strategy: "verify",
            n: ctx.n_max,
            max,
        }));
    }

    let mut swept_ns: Vec<u32> = Vec::new();
    let sweep_elapsed = if sweeps.is_empty() {
        Duration::ZERO
    } else {
        let start = Instant::now();
        for n in 1..=ctx.n_max {
            if !sweeps.iter().any(|c| c.wants(n)) {
                continue;
            }
            swept_ns.push(n);
            let mut cfg = EnumConfig::new(n);
            cfg.threads = ctx.threads;
            enumerate_topologies(&cfg, |t| {
                let scanned = Scanned::new(n, t);
                for check in sweeps.iter_mut() {
                    if check.wants(n) {
                        check.observe(&scanned);
                    }
                }
            })?;
        }
        start.elapsed()
    };

    let mut finished: Vec<TheoremReport> = Vec::new();
    for check in sweeps.iter_mut() {
        let wanted: Vec<u32> = swept_ns.iter().copied().filter(|&n| check.wants(n)).collect();
        let mut report = check.finish();
        report.n_range = wanted;
        report.elapsed_ms = sweep_elapsed.as_millis() as u64;
        report.finalize();
        finished.push(report);
    }

    let mut out = Vec::with_capacity(keys.len());
    for key in keys {
        if let Some(run_fn) = standalone(key) {
            let start = Instant::now();
            let mut report = run_fn(ctx)?;
            report.elapsed_ms = start.elapsed().as_millis() as u64;
            report.finalize();
            out.push(report);
        } else {
            let idx = finished
                .iter()
                .position(|r| r.id == *key)
                .expect("sweep report present");
            out.push(finished.remove(idx));
        }
    }
    Ok(out)
}

/// Worst verdict across a report set, for exit-code mapping.
pub fn overall_verdict(reports: &[TheoremReport]) -> Verdict {
    reports
        .iter()
        .map(|r| r.verdict)
        .max()
        .unwrap_or(Verdict::Verified)
}
