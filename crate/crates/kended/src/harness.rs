//! Theorem predicates and corpus campaigns.
//!
//! Each predicate is a (condition, conclusion) pair over exact values
//! computed per graph: the t_k profile, sigma_m, n, and a few structural
//! facts. A violation is a graph where the condition holds and the
//! conclusion fails; published results must produce none, so any violation
//! flags an implementation bug.
//!
//! Identifiers: prop1/prop2 are the spanning and dominating equivalences,
//! thm1 the tailing-count bound, thm2/thm3 the degree-sum disjunction and
//! its conditional form, and cor1..cor20 the derived special cases.

// predicates keep the stated `t_k >= t_{k+1} - lambda + 1` shapes verbatim
#![allow(clippy::int_plus_one)]

use std::collections::BTreeSet;
use std::time::Instant;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::family::{build_family, Family};
use crate::graph::{ExtendedCount, Graph};
use crate::graph6::write_graph6;
use crate::solver::{self, bounded_leaf_tree, hamilton_cycle, max_cycle_vertex_sets};
use crate::tree::is_dominating;

/// Which result a [`TheoremInstance`] binds.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum TheoremId {
    Prop1,
    Prop2,
    Thm1,
    Thm2,
    Thm3,
    Cor(u8),
}

impl std::fmt::Display for TheoremId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            TheoremId::Prop1 => write!(f, "prop1"),
            TheoremId::Prop2 => write!(f, "prop2"),
            TheoremId::Thm1 => write!(f, "thm1"),
            TheoremId::Thm2 => write!(f, "thm2"),
            TheoremId::Thm3 => write!(f, "thm3"),
            TheoremId::Cor(i) => write!(f, "cor{i}"),
        }
    }
}

impl std::str::FromStr for TheoremId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "prop1" => Ok(TheoremId::Prop1),
            "prop2" => Ok(TheoremId::Prop2),
            "thm1" => Ok(TheoremId::Thm1),
            "thm2" => Ok(TheoremId::Thm2),
            "thm3" => Ok(TheoremId::Thm3),
            _ => s
                .strip_prefix("cor")
                .and_then(|i| i.parse::<u8>().ok())
                .filter(|&i| (1..=20).contains(&i))
                .map(TheoremId::Cor)
                .ok_or_else(|| Error::InvalidInstance(format!("unknown theorem id '{s}'"))),
        }
    }
}

/// Every checkable identifier.
pub fn all_theorems() -> BTreeSet<TheoremId> {
    let mut set: BTreeSet<TheoremId> = [
        TheoremId::Prop1,
        TheoremId::Prop2,
        TheoremId::Thm1,
        TheoremId::Thm2,
        TheoremId::Thm3,
    ]
    .into();
    set.extend((1..=20).map(TheoremId::Cor));
    set
}

/// A theorem bound to concrete parameters. Corollaries with fixed
/// substitutions store their effective values, so the snapshot in a
/// [`CheckOutcome`] is always meaningful.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TheoremInstance {
    pub theorem: TheoremId,
    pub k: usize,
    pub lambda: Option<usize>,
    pub m: Option<usize>,
}

impl std::fmt::Display for TheoremInstance {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}(k={}", self.theorem, self.k)?;
        if let Some(l) = self.lambda {
            write!(f, ",lambda={l}")?;
        }
        if let Some(m) = self.m {
            write!(f, ",m={m}")?;
        }
        write!(f, ")")
    }
}

impl TheoremInstance {
    /// Validates parameter ranges and fills in fixed substitutions.
    /// `lambda` and `m` are ignored where the theorem does not use them.
    pub fn new(
        theorem: TheoremId,
        k: usize,
        lambda: Option<usize>,
        m: Option<usize>,
    ) -> Result<Self> {
        use TheoremId::*;
        let fail = |msg: String| Err(Error::InvalidInstance(msg));
        if k == 0 {
            return fail("k must be positive".into());
        }
        let lam = |def: Option<usize>| lambda.or(def);
        let inst = |k, lambda: Option<usize>, m: Option<usize>| {
            Ok(TheoremInstance {
                theorem,
                k,
                lambda,
                m,
            })
        };
        match theorem {
            Prop1 | Prop2 => inst(k, None, None),
            Thm1 => {
                let l =
                    lam(None).ok_or_else(|| Error::InvalidInstance("thm1 needs lambda".into()))?;
                if k < 2 {
                    return fail("thm1 requires k >= 2".into());
                }
                if l == 0 {
                    return fail("lambda must be positive".into());
                }
                inst(k, Some(l), None)
            }
            Cor(1) => {
                let l =
                    lam(None).ok_or_else(|| Error::InvalidInstance("cor1 needs lambda".into()))?;
                if k < 2 {
                    return fail("cor1 requires k >= 2".into());
                }
                inst(k, Some(l), None)
            }
            Cor(2) => {
                if k < 2 {
                    return fail("cor2 requires k >= 2".into());
                }
                inst(k, None, None)
            }
            Thm2 | Thm3 | Cor(3) => {
                let name = format!("{theorem}");
                let l = lam(None)
                    .ok_or_else(|| Error::InvalidInstance(format!("{name} needs lambda")))?;
                let m = m.ok_or_else(|| Error::InvalidInstance(format!("{name} needs m")))?;
                if l == 0 || m == 0 {
                    return fail("lambda and m must be positive".into());
                }
                let lo = if theorem == Thm2 { 2 } else { 1 };
                if m < lo || m > k.min(l) + 1 {
                    return fail(format!("{name} requires {lo} <= m <= min(k,lambda)+1"));
                }
                inst(k, Some(l), Some(m))
            }
            Cor(4) => inst(k, Some(k), Some(k + 1)),
            Cor(5) => {
                let l =
                    lam(None).ok_or_else(|| Error::InvalidInstance("cor5 needs lambda".into()))?;
                if l == 0 {
                    return fail("lambda must be positive".into());
                }
                inst(k, Some(l), Some(2))
            }
            Cor(6) | Cor(7) => inst(k, Some(1), Some(2)),
            Cor(8) | Cor(9) => inst(k, Some(2), Some(2)),
            Cor(10) | Cor(11) => inst(1, Some(1), Some(2)),
            Cor(12) | Cor(13) => inst(2, Some(1), Some(2)),
            Cor(14) | Cor(15) => inst(2, Some(2), Some(2)),
            Cor(16) => {
                let l =
                    lam(None).ok_or_else(|| Error::InvalidInstance("cor16 needs lambda".into()))?;
                if k < 2 || l < 2 {
                    return fail("cor16 requires k >= 2 and lambda >= 2".into());
                }
                inst(k, Some(l), Some(3))
            }
            Cor(17) | Cor(18) => {
                if k < 2 {
                    return fail(format!("{theorem} requires k >= 2"));
                }
                inst(k, Some(2), Some(3))
            }
            Cor(19) | Cor(20) => inst(2, Some(2), Some(3)),
            Cor(i) => fail(format!("cor{i} is not a known corollary")),
        }
    }

    /// All valid instances of the selected theorems with k <= k_max and
    /// lambda <= lambda_max (free m ranges over everything valid).
    pub fn generate(
        k_max: usize,
        lambda_max: usize,
        theorems: &BTreeSet<TheoremId>,
    ) -> Vec<TheoremInstance> {
        use TheoremId::*;
        let mut out = Vec::new();
        let mut push = |r: Result<TheoremInstance>| {
            if let Ok(inst) = r {
                if inst.k <= k_max && inst.lambda.is_none_or(|l| l <= lambda_max) {
                    out.push(inst);
                }
            }
        };
        for &theorem in theorems {
            match theorem {
                Prop1 | Prop2 | Cor(2) | Cor(4) | Cor(6) | Cor(7) | Cor(8) | Cor(9) | Cor(17)
                | Cor(18) => {
                    for k in 1..=k_max {
                        push(TheoremInstance::new(theorem, k, None, None));
                    }
                }
                Thm1 | Cor(1) | Cor(5) | Cor(16) => {
                    for k in 1..=k_max {
                        for l in 1..=lambda_max {
                            push(TheoremInstance::new(theorem, k, Some(l), None));
                        }
                    }
                }
                Thm2 | Thm3 | Cor(3) => {
                    for k in 1..=k_max {
                        for l in 1..=lambda_max {
                            for m in 1..=k.min(l) + 1 {
                                push(TheoremInstance::new(theorem, k, Some(l), Some(m)));
                            }
                        }
                    }
                }
                Cor(10) | Cor(11) | Cor(12) | Cor(13) | Cor(14) | Cor(15) | Cor(19) | Cor(20) => {
                    push(TheoremInstance::new(theorem, 1, None, None));
                }
                Cor(_) => {}
            }
        }
        out.sort();
        out.dedup();
        out
    }
}

/// The exact values a check was decided on.
#[derive(Debug, Clone, Copy, Serialize, PartialEq, Eq)]
pub struct ValueSnapshot {
    pub t_k: usize,
    pub t_k1: usize,
    pub sigma_m: Option<ExtendedCount>,
    pub n: usize,
}

/// Result of evaluating one instance on one graph.
#[derive(Debug, Clone, Copy)]
pub struct CheckOutcome {
    pub condition_holds: bool,
    /// Meaningful only when the condition holds.
    pub conclusion_holds: bool,
    pub vacuous: bool,
    pub values: ValueSnapshot,
}

impl CheckOutcome {
    pub fn violated(&self) -> bool {
        self.condition_holds && !self.conclusion_holds
    }
}

/// Everything the predicates need about one graph, computed once.
struct GraphFacts<'a> {
    g: &'a Graph,
    n: usize,
    /// t[k] for k in 1..=k_max+1 (index 0 unused).
    t: Vec<usize>,
    /// sigma[m] for m in 1..=m_max (index 0 unused).
    sigma: Vec<ExtendedCount>,
    /// Minimum leaf count over spanning trees; None when n = 1.
    min_leaf_spanning: Option<usize>,
    has_hamilton_cycle: bool,
}

impl<'a> GraphFacts<'a> {
    fn compute(g: &'a Graph, k_max: usize, m_max: usize) -> Result<Self> {
        let n = g.n();
        let mut t = vec![0; k_max + 2];
        for (k, slot) in t.iter_mut().enumerate().skip(1) {
            *slot = solver::t_k_exact(g, k)?.order;
        }
        let mut sigma = vec![ExtendedCount::Infinity; m_max + 1];
        for (m, slot) in sigma.iter_mut().enumerate().skip(1) {
            *slot = g.sigma(m)?;
        }
        let min_leaf_spanning = if n >= 2 {
            Some(solver::min_leaf_count_spanning(g)?.0)
        } else {
            None
        };
        let has_hamilton_cycle = match n {
            1 => true, // a vertex is a 1-cycle
            2 => true, // connected on 2 vertices means an edge, a 2-cycle
            _ => hamilton_cycle(g, g.vertex_mask()).is_some(),
        };
        Ok(GraphFacts {
            g,
            n,
            t,
            sigma,
            min_leaf_spanning,
            has_hamilton_cycle,
        })
    }

    fn t(&self, k: usize) -> usize {
        self.t[k]
    }

    fn sigma(&self, m: usize) -> ExtendedCount {
        self.sigma[m]
    }

    /// Does a spanning k-ended tree exist, decided at the spanning level
    /// (Hamilton cycle for k = 1, minimum spanning leaf count otherwise)?
    /// This is the route independent of the t_k equality it gets compared to.
    fn has_spanning_k_ended(&self, k: usize) -> bool {
        if k == 1 {
            self.has_hamilton_cycle
        } else {
            self.min_leaf_spanning.is_none_or(|c| c <= k)
        }
    }

    /// Does some dominating k-ended tree (dominating cycle for k = 1) exist?
    fn has_dominating_k_ended(&self, k: usize) -> bool {
        // a spanning tree dominates trivially
        if self.has_spanning_k_ended(k) {
            return true;
        }
        let full = self.g.vertex_mask();
        for sub in 0..=full {
            if sub == 0 || sub == full {
                continue;
            }
            if !self.g.is_independent_set(full & !sub) {
                continue;
            }
            if !self.g.is_connected_within(sub) {
                continue;
            }
            let ok = if k == 1 {
                spanning_cycle_degenerate(self.g, sub)
            } else {
                bounded_leaf_tree(self.g, sub, k).is_some()
            };
            if ok {
                return true;
            }
        }
        false
    }

    /// Is every maximum k-ended tree (maximum cycle for k = 1) dominating?
    fn every_max_k_ended_dominating(&self, k: usize) -> bool {
        if k == 1 {
            let (_, sets) = max_cycle_vertex_sets(self.g);
            return sets
                .iter()
                .all(|&mask| self.g.is_independent_set(self.g.vertex_mask() & !mask));
        }
        solver::max_trees_of_order(self.g, k, self.t(k))
            .iter()
            .all(|t| is_dominating(self.g, t))
    }
}

fn spanning_cycle_degenerate(g: &Graph, mask: u64) -> bool {
    match mask.count_ones() {
        0 => false,
        1 => true,
        2 => {
            let u = mask.trailing_zeros() as usize;
            let v = (mask & (mask - 1)).trailing_zeros() as usize;
            g.has_edge(u, v)
        }
        _ => hamilton_cycle(g, mask).is_some(),
    }
}

/// Evaluates one instance on one connected graph.
pub fn check_instance(g: &Graph, inst: &TheoremInstance) -> Result<CheckOutcome> {
    let k_max = inst.k;
    let m_max = inst.m.unwrap_or(1);
    let facts = GraphFacts::compute(g, k_max, m_max)?;
    Ok(evaluate(&facts, inst))
}

fn evaluate(facts: &GraphFacts, inst: &TheoremInstance) -> CheckOutcome {
    use TheoremId::*;
    let k = inst.k;
    let tk = facts.t(k) as i64;
    let tk1 = facts.t(k + 1) as i64;
    let n = facts.n as i64;
    let lam = inst.lambda.map(|l| l as i64);
    let sigma_m = inst.m.map(|m| facts.sigma(m));

    // conclusion shared by thm1/thm3 and most corollaries
    let relative_order = |l: i64| tk >= tk1 - l + 1;

    let (condition, conclusion) = match inst.theorem {
        Prop1 => {
            let exists = facts.has_spanning_k_ended(k);
            (true, exists == (tk == tk1))
        }
        Prop2 => {
            let cond = tk >= tk1 - 1;
            (cond, cond && facts.every_max_k_ended_dominating(k))
        }
        Thm1 => {
            let l = lam.unwrap();
            (l * (k as i64 + 1) >= tk1, relative_order(l))
        }
        Cor(1) => {
            let l = lam.unwrap();
            (l * (k as i64 + 1) >= n, relative_order(l))
        }
        Cor(2) => (true, (k as i64 + 1) * tk >= k as i64 * tk1 + 1),
        Thm2 => {
            let l = lam.unwrap();
            let m = inst.m.unwrap() as i64;
            let first = match sigma_m.unwrap() {
                ExtendedCount::Infinity => false,
                ExtendedCount::Finite(s) => tk1 >= s as i64 + l * (k as i64 - m + 1) + 1,
            };
            (true, first || relative_order(l))
        }
        Thm3 | Cor(3) => {
            let l = lam.unwrap();
            let m = inst.m.unwrap() as i64;
            let base = if inst.theorem == Thm3 { tk1 } else { n };
            let cond = sigma_m.unwrap().at_least(base - l * (k as i64 - m + 1));
            (cond, relative_order(l))
        }
        Cor(4) => (sigma_m.unwrap().at_least(tk1), tk >= tk1 - k as i64 + 1),
        Cor(5) => {
            let l = lam.unwrap();
            (
                sigma_m.unwrap().at_least(tk1 - l * (k as i64 - 1)),
                relative_order(l),
            )
        }
        Cor(6) => (sigma_m.unwrap().at_least(tk1 - k as i64 + 1), tk >= tk1),
        Cor(7) => (
            sigma_m.unwrap().at_least(n - k as i64 + 1),
            facts.has_spanning_k_ended(k),
        ),
        Cor(8) => (
            sigma_m.unwrap().at_least(tk1 - 2 * k as i64 + 2),
            tk >= tk1 - 1,
        ),
        Cor(9) => {
            let cond = sigma_m.unwrap().at_least(n - 2 * k as i64 + 2);
            (cond, cond && facts.has_dominating_k_ended(k))
        }
        Cor(10) => (sigma_m.unwrap().at_least(tk1), tk >= tk1),
        Cor(11) => (sigma_m.unwrap().at_least(n), facts.has_hamilton_cycle),
        Cor(12) => (sigma_m.unwrap().at_least(tk1 - 1), tk >= tk1),
        Cor(13) => (
            sigma_m.unwrap().at_least(n - 1),
            facts.has_spanning_k_ended(2),
        ),
        Cor(14) => (sigma_m.unwrap().at_least(tk1 - 2), tk >= tk1 - 1),
        Cor(15) => {
            let cond = sigma_m.unwrap().at_least(n - 2);
            (cond, cond && facts.has_dominating_k_ended(2))
        }
        Cor(16) | Cor(17) => {
            let l = lam.unwrap();
            (
                sigma_m.unwrap().at_least(tk1 - l * (k as i64 - 2)),
                relative_order(l),
            )
        }
        Cor(18) => {
            let cond = sigma_m.unwrap().at_least(n - 2 * k as i64 + 4);
            (cond, cond && facts.has_dominating_k_ended(k))
        }
        Cor(19) => (sigma_m.unwrap().at_least(tk1), tk >= tk1 - 1),
        Cor(20) => {
            let cond = sigma_m.unwrap().at_least(n);
            (cond, cond && facts.has_dominating_k_ended(2))
        }
        Cor(i) => unreachable!("corollary {i} cannot pass instance validation"),
    };

    CheckOutcome {
        condition_holds: condition,
        conclusion_holds: conclusion,
        vacuous: !condition,
        values: ValueSnapshot {
            t_k: facts.t(k),
            t_k1: facts.t(k + 1),
            sigma_m,
            n: facts.n,
        },
    }
}

/// One recorded violation: the graph (as graph6), the instance, and the
/// value snapshot it was decided on.
#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct Violation {
    pub graph6: String,
    pub theorem: String,
    pub k: usize,
    pub lambda: Option<usize>,
    pub m: Option<usize>,
    pub t_k: usize,
    pub t_k1: usize,
    pub sigma_m: Option<ExtendedCount>,
    pub n: usize,
}

/// One sharpness equality check on an extremal family.
#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct SharpnessEntry {
    pub family: String,
    pub k: usize,
    pub lambda: usize,
    pub m: Option<usize>,
    pub holds: bool,
    pub detail: String,
}

/// Campaign statistics that ride along with a report but stay out of the
/// serialized document (the report schema is pinned to five fields).
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct CampaignStats {
    pub graphs_checked: u64,
    pub skipped_disconnected: u64,
    pub non_vacuous: u64,
    pub violations_total: u64,
}

/// Aggregate result of a verification campaign. Serializes with the stable
/// field order {corpus, instances, violations, sharpness, elapsed_ms}.
#[derive(Debug, Clone, Serialize)]
pub struct VerificationReport {
    pub corpus: String,
    pub instances: u64,
    pub violations: Vec<Violation>,
    pub sharpness: Vec<SharpnessEntry>,
    pub elapsed_ms: u64,
    #[serde(skip)]
    pub stats: CampaignStats,
}

impl VerificationReport {
    pub fn empty(corpus: &str) -> Self {
        VerificationReport {
            corpus: corpus.into(),
            instances: 0,
            violations: Vec::new(),
            sharpness: Vec::new(),
            elapsed_ms: 0,
            stats: CampaignStats::default(),
        }
    }

    pub fn passed(&self) -> bool {
        self.stats.violations_total == 0
            && self.violations.is_empty()
            && self.sharpness.iter().all(|s| s.holds)
    }
}

/// At most this many violations are recorded verbatim; the rest only count.
pub const VIOLATION_RECORD_CAP: usize = 100;

/// Campaign configuration.
#[derive(Debug, Clone)]
pub struct CampaignParams {
    pub k_max: usize,
    pub lambda_max: usize,
    pub theorems: BTreeSet<TheoremId>,
    /// Worker threads; results are independent of this.
    pub jobs: usize,
    /// Order guard for the witness enumeration behind prop2.
    pub max_tree_enum: usize,
}

impl CampaignParams {
    pub fn new(k_max: usize, lambda_max: usize) -> Self {
        CampaignParams {
            k_max,
            lambda_max,
            theorems: all_theorems(),
            jobs: 1,
            max_tree_enum: solver::TREE_ENUM_GUARD,
        }
    }
}

/// Evaluates every valid instance on every connected corpus graph.
/// Disconnected graphs are skipped and counted. Violations are aggregated in
/// deterministic order (graph6 string, then instance) regardless of `jobs`.
pub fn verify_corpus(
    corpus: &[Graph],
    corpus_desc: &str,
    params: &CampaignParams,
) -> Result<VerificationReport> {
    let started = Instant::now();
    if params.theorems.contains(&TheoremId::Prop2) {
        if let Some(g) = corpus.iter().find(|g| g.n() > params.max_tree_enum) {
            return Err(Error::SizeGuard {
                n: g.n(),
                limit: params.max_tree_enum,
            });
        }
    }
    let instances = TheoremInstance::generate(params.k_max, params.lambda_max, &params.theorems);
    let m_max = params.k_max.min(params.lambda_max) + 1;

    type GraphTally = (u64, u64, u64, Vec<Violation>);
    let run_graph = |g: &Graph| -> Result<GraphTally> {
        if !g.is_connected() || g.n() == 0 {
            return Ok((0, 1, 0, Vec::new()));
        }
        let facts = GraphFacts::compute(g, params.k_max, m_max)?;
        let mut evaluated = 0;
        let mut non_vacuous = 0;
        let mut violations = Vec::new();
        for inst in &instances {
            let outcome = evaluate(&facts, inst);
            evaluated += 1;
            if outcome.condition_holds {
                non_vacuous += 1;
            }
            if outcome.violated() {
                violations.push(Violation {
                    graph6: write_graph6(g)?,
                    theorem: inst.theorem.to_string(),
                    k: inst.k,
                    lambda: inst.lambda,
                    m: inst.m,
                    t_k: outcome.values.t_k,
                    t_k1: outcome.values.t_k1,
                    sigma_m: outcome.values.sigma_m,
                    n: outcome.values.n,
                });
            }
        }
        Ok((evaluated, 0, non_vacuous, violations))
    };

    let per_graph: Vec<Result<GraphTally>> = if params.jobs > 1 {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(params.jobs)
            .build()
            .map_err(|e| Error::InvalidParameter(format!("worker pool: {e}")))?;
        pool.install(|| {
            use rayon::prelude::*;
            corpus.par_iter().map(run_graph).collect()
        })
    } else {
        corpus.iter().map(run_graph).collect()
    };

    let mut report = VerificationReport::empty(corpus_desc);
    let mut all_violations = Vec::new();
    for item in per_graph {
        let (evaluated, skipped, non_vacuous, violations) = item?;
        report.instances += evaluated;
        report.stats.skipped_disconnected += skipped;
        report.stats.non_vacuous += non_vacuous;
        if skipped == 0 {
            report.stats.graphs_checked += 1;
        }
        all_violations.extend(violations);
    }
    all_violations.sort_by(|a, b| {
        (&a.graph6, &a.theorem, a.k, a.lambda, a.m)
            .cmp(&(&b.graph6, &b.theorem, b.k, b.lambda, b.m))
    });
    report.stats.violations_total = all_violations.len() as u64;
    all_violations.truncate(VIOLATION_RECORD_CAP);
    report.violations = all_violations;
    report.elapsed_ms = started.elapsed().as_millis() as u64;
    Ok(report)
}

/// Order cap for the g1/g2 sharpness sweeps.
pub const SHARPNESS_ORDER_CAP: usize = 10;

/// The tight m = k+1 family (k+2)K_{k-1} + K_2 is checked up to this order
/// (k = 3 gives 12 vertices, the practical limit of the exact solver).
pub const SHARPNESS_G3_ORDER_CAP: usize = 12;

/// Verifies the extremal families over parameter ranges.
///
/// For each in-range (k, lambda): the family (k+1)K_lambda + K_1 must miss
/// the degree-sum condition by exactly one while t_k = t_{k+1} - lambda; the
/// family (k+1)K_{lambda-1} + K_1 must satisfy the condition with the
/// conclusion exactly tight (m <= k). For m = k+1 the tight families are
/// (k+2)K_{k-1} + K_2 at lambda = k, and K_{r,r} for k = 1.
///
/// Parameter pairs whose family order exceeds the caps are skipped; the call
/// errors when nothing in the requested range fits.
pub fn sharpness_suite(
    k_range: std::ops::RangeInclusive<usize>,
    lambda_range: std::ops::RangeInclusive<usize>,
) -> Result<VerificationReport> {
    let started = Instant::now();
    let mut report = VerificationReport::empty(&format!(
        "sharpness families, k in {:?}, lambda in {:?}",
        k_range, lambda_range
    ));

    let push = |report: &mut VerificationReport, entry: SharpnessEntry| {
        report.instances += 1;
        report.stats.non_vacuous += 1;
        report.sharpness.push(entry);
    };

    for k in k_range.clone() {
        for lambda in lambda_range.clone() {
            // (a) condition misses by one, conclusion misses by one
            if (k + 1) * lambda + 1 <= SHARPNESS_ORDER_CAP {
                let g1 = build_family(&Family::G1 { k, lambda })?;
                let t_k = solver::t_k_exact(&g1, k)?.order as i64;
                let t_k1 = solver::t_k_exact(&g1, k + 1)?.order as i64;
                for m in 2..=k.min(lambda) + 1 {
                    let sigma = g1.sigma(m)?;
                    let target = t_k1 - (lambda as i64) * (k as i64 - m as i64 + 1) - 1;
                    let cond_gap = sigma == ExtendedCount::Finite(target.max(0) as u64);
                    let concl_gap = t_k == t_k1 - lambda as i64;
                    push(&mut report, SharpnessEntry {
                        family: "g1".into(),
                        k,
                        lambda,
                        m: Some(m),
                        holds: cond_gap && concl_gap,
                        detail: format!(
                            "sigma_{m}={sigma} (condition-1 target {target}), t_{k}={t_k}, t_{}={t_k1}",
                            k + 1
                        ),
                    });
                }
            }

            // (b) condition holds, conclusion exactly tight (m <= k)
            if lambda >= 2 && k >= 2 && (k + 1) * (lambda - 1) + 1 <= SHARPNESS_ORDER_CAP {
                let g2 = build_family(&Family::G2 { k, lambda })?;
                let t_k = solver::t_k_exact(&g2, k)?.order as i64;
                let t_k1 = solver::t_k_exact(&g2, k + 1)?.order as i64;
                for m in 2..=(k.min(lambda) + 1).min(k) {
                    let sigma = g2.sigma(m)?;
                    let cond = sigma.at_least(t_k1 - (lambda as i64) * (k as i64 - m as i64 + 1));
                    let tight = t_k == t_k1 - lambda as i64 + 1;
                    push(
                        &mut report,
                        SharpnessEntry {
                            family: "g2".into(),
                            k,
                            lambda,
                            m: Some(m),
                            holds: cond && tight,
                            detail: format!(
                                "sigma_{m}={sigma}, t_{k}={t_k} == t_{} - lambda + 1 = {}",
                                k + 1,
                                t_k1 - lambda as i64 + 1
                            ),
                        },
                    );
                }
            }

            // (c) m = k + 1 tight families
            if lambda == k && k >= 2 && (k + 2) * (k - 1) + 2 <= SHARPNESS_G3_ORDER_CAP {
                let g3 = build_family(&Family::G3 { k })?;
                let t_k = solver::t_k_exact(&g3, k)?.order as i64;
                let t_k1 = solver::t_k_exact(&g3, k + 1)?.order as i64;
                let sigma = g3.sigma(k + 1)?;
                let cond_tight = sigma == ExtendedCount::Finite(t_k1 as u64);
                let concl_tight = t_k == t_k1 - k as i64 + 1;
                push(
                    &mut report,
                    SharpnessEntry {
                        family: "g3".into(),
                        k,
                        lambda: k,
                        m: Some(k + 1),
                        holds: cond_tight && concl_tight,
                        detail: format!(
                            "sigma_{}={sigma} == t_{}={t_k1}, t_{k}={t_k} == {}",
                            k + 1,
                            k + 1,
                            t_k1 - k as i64 + 1
                        ),
                    },
                );
            }
        }
        if k == 1 {
            for r in 2..=4 {
                let krr = build_family(&Family::Krr(r))?;
                let t1 = solver::t_k_exact(&krr, 1)?.order;
                let t2 = solver::t_k_exact(&krr, 2)?.order;
                push(
                    &mut report,
                    SharpnessEntry {
                        family: format!("krr(r={r})"),
                        k: 1,
                        lambda: 1,
                        m: Some(2),
                        holds: t1 == 2 * r && t2 == 2 * r,
                        detail: format!("t_1={t1}, t_2={t2}, expected both {}", 2 * r),
                    },
                );
            }
        }
    }
    if report.sharpness.is_empty() {
        let max_order = (k_range.end() + 1) * lambda_range.end() + 1;
        return Err(Error::SizeGuard {
            n: max_order,
            limit: SHARPNESS_ORDER_CAP,
        });
    }
    report.elapsed_ms = started.elapsed().as_millis() as u64;
    Ok(report)
}
