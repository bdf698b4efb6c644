//! Query-efficient property algorithms and their classical counterparts.
//!
//! Every routine here wraps the caller's oracle in a fresh [`CountingOracle`]
//! and returns its query ledger alongside the answer, so callers compare
//! quantum and classical costs directly. The quantum deciders follow one
//! pattern: compute the rank greedily (n classical queries), then run
//! bounded-error search for a refuting subset of one specific size,
//! amplified up to `maxRepeat` times. A refutation is always classically
//! re-checked before it is reported, so "property fails" answers carry a
//! correct witness with certainty; "property holds" answers are wrong with
//! probability at most 2^−maxRepeat per search size.

use rand::Rng;

use crate::error::{Error, Result};
use crate::grover::{grover_search, SearchTarget, SubsetSearchSpace};
use crate::matroid::GirthValue;
use crate::oracle::{CountingOracle, IndependenceOracle, QueryReport};
use crate::subset::{ksubsets, SubsetMask};

/// How many independent bounded-error searches back each "holds" answer.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct AmplificationConfig {
    max_repeat: u32,
}

impl AmplificationConfig {
    pub fn new(max_repeat: u32) -> Result<Self> {
        if max_repeat == 0 {
            return Err(Error::InvalidParameter(
                "maxRepeat must be at least 1".into(),
            ));
        }
        Ok(AmplificationConfig { max_repeat })
    }

    pub fn max_repeat(self) -> u32 {
        self.max_repeat
    }
}

impl Default for AmplificationConfig {
    /// Five rounds: false-acceptance probability at most 2⁻⁵ per search.
    fn default() -> Self {
        AmplificationConfig { max_repeat: 5 }
    }
}

/// Answer to a yes/no property question, with the query ledger and, for
/// "no", a certifying subset.
#[derive(Clone, Copy, Debug)]
pub struct DecisionResult {
    /// true ⟺ the property holds (possibly erroneously, one-sided).
    pub answer: bool,
    /// For a refuted property: the subset that witnesses the violation,
    /// classically verified.
    pub witness: Option<SubsetMask>,
    pub report: QueryReport,
}

/// Result of the girth computation.
#[derive(Clone, Copy, Debug)]
pub struct GirthResult {
    pub girth: GirthValue,
    /// A verified dependent set of size equal to the reported girth, when
    /// the final probe produced one.
    pub witness: Option<SubsetMask>,
    pub report: QueryReport,
}

/// Rank and a maximal independent set found by the greedy sweep.
#[derive(Clone, Copy, Debug)]
pub struct RankResult {
    pub rank: u32,
    pub base: SubsetMask,
    pub report: QueryReport,
}

fn greedy_base_counted(counting: &CountingOracle, n: u32) -> SubsetMask {
    let mut held = SubsetMask::EMPTY;
    for e in 0..n {
        if counting.query_classical(held.with(e)) {
            held = held.with(e);
        }
    }
    held
}

/// Greedy rank: sweep the elements in increasing order, keeping each one
/// whose addition stays independent. Exactly n classical queries; the kept
/// set is a base.
pub fn greedy_rank(oracle: &dyn IndependenceOracle, n: u32) -> RankResult {
    let counting = CountingOracle::new(oracle);
    let base = greedy_base_counted(&counting, n);
    RankResult {
        rank: base.len(),
        base,
        report: counting.report(),
    }
}

/// Up to `maxRepeat` bounded-error searches over the k-subsets for one whose
/// oracle answer matches `target`. The space (and its one-time marked scan)
/// is shared across repeats. Any candidate is re-checked with a final billed
/// classical query before being accepted.
fn amplified_search(
    counting: &CountingOracle,
    n: u32,
    k: u32,
    target: SearchTarget,
    cfg: AmplificationConfig,
    rng: &mut impl Rng,
) -> Result<Option<SubsetMask>> {
    let space = SubsetSearchSpace::new(counting, n, k, target)?;
    for _ in 0..cfg.max_repeat() {
        if let Some(index) = grover_search(&space, rng).found {
            let mask = space.mask_of(index);
            if counting.query_classical(mask) == target.wanted() {
                return Ok(Some(mask));
            }
        }
    }
    Ok(None)
}

/// Decides whether the matroid is uniform: compute r greedily, then search
/// the r-subsets for a dependent one. A verified dependent r-set refutes
/// uniformity (in a uniform matroid every r-set is a base); if none is found
/// the matroid is declared uniform.
pub fn decide_uniform(
    oracle: &dyn IndependenceOracle,
    n: u32,
    cfg: AmplificationConfig,
    rng: &mut impl Rng,
) -> Result<DecisionResult> {
    let counting = CountingOracle::new(oracle);
    let r = greedy_base_counted(&counting, n).len();
    let witness = amplified_search(&counting, n, r, SearchTarget::Dependent, cfg, rng)?;
    Ok(DecisionResult {
        answer: witness.is_none(),
        witness,
        report: counting.report(),
    })
}

fn ceil_log2(x: u32) -> u32 {
    if x <= 1 {
        0
    } else {
        32 - (x - 1).leading_zeros()
    }
}

/// Computes the girth: one classical query on the full ground set (if it is
/// independent there is no circuit at all), then binary search for the least
/// k admitting a dependent k-set, each probe an amplified bounded-error
/// search.
///
/// The probe predicate is monotone in k — any superset of a dependent set is
/// dependent — and once V is dependent every (r+1)-set is dependent, so the
/// search interval [1, r+1] always contains the girth. Probes can only miss
/// existing dependent sets, never invent them, so errors push the reported
/// girth upward; the probability of any error is at most
/// ⌈log₂(r+1)⌉·2^−maxRepeat.
pub fn compute_girth(
    oracle: &dyn IndependenceOracle,
    n: u32,
    cfg: AmplificationConfig,
    rng: &mut impl Rng,
) -> Result<GirthResult> {
    let counting = CountingOracle::new(oracle);
    if counting.query_classical(SubsetMask::full(n)) {
        return Ok(GirthResult {
            girth: GirthValue::Infinite,
            witness: None,
            report: counting.report(),
        });
    }
    let r = greedy_base_counted(&counting, n).len();
    let mut lo = 1u32;
    let mut hi = r + 1;
    let mut witness = None;
    let mut probes = 0u32;
    while lo < hi {
        let mid = (lo + hi) / 2;
        probes += 1;
        match amplified_search(&counting, n, mid, SearchTarget::Dependent, cfg, rng)? {
            Some(w) => {
                witness = Some(w);
                hi = mid;
            }
            None => lo = mid + 1,
        }
    }
    debug_assert!(probes <= ceil_log2(r + 1));
    // a successful probe at mid sets hi = mid, and hi only ever decreases to
    // successful mids, so the kept witness has size equal to the answer
    debug_assert!(witness.is_none_or(|w| w.len() == lo));
    Ok(GirthResult {
        girth: GirthValue::Finite(lo),
        witness,
        report: counting.report(),
    })
}

/// Decides whether the matroid is paving (no circuit smaller than the rank):
/// equivalent to every (r−1)-set being independent, so search the
/// (r−1)-subsets for a dependent one. Rank 0 and 1 are paving outright —
/// circuits always have at least one element.
pub fn decide_paving(
    oracle: &dyn IndependenceOracle,
    n: u32,
    cfg: AmplificationConfig,
    rng: &mut impl Rng,
) -> Result<DecisionResult> {
    let counting = CountingOracle::new(oracle);
    let r = greedy_base_counted(&counting, n).len();
    if r <= 1 {
        return Ok(DecisionResult {
            answer: true,
            witness: None,
            report: counting.report(),
        });
    }
    let witness = amplified_search(&counting, n, r - 1, SearchTarget::Dependent, cfg, rng)?;
    Ok(DecisionResult {
        answer: witness.is_none(),
        witness,
        report: counting.report(),
    })
}

/// Decides whether the matroid is trivial (rank 0): unordered search over
/// the singletons for an independent one, which refutes.
pub fn decide_trivial(
    oracle: &dyn IndependenceOracle,
    n: u32,
    cfg: AmplificationConfig,
    rng: &mut impl Rng,
) -> Result<DecisionResult> {
    let counting = CountingOracle::new(oracle);
    let witness = amplified_search(&counting, n, 1, SearchTarget::Independent, cfg, rng)?;
    Ok(DecisionResult {
        answer: witness.is_none(),
        witness,
        report: counting.report(),
    })
}

/// Decides whether the matroid is loopless: unordered search over the
/// singletons for a loop, which refutes.
pub fn decide_loopless(
    oracle: &dyn IndependenceOracle,
    n: u32,
    cfg: AmplificationConfig,
    rng: &mut impl Rng,
) -> Result<DecisionResult> {
    let counting = CountingOracle::new(oracle);
    let witness = amplified_search(&counting, n, 1, SearchTarget::Dependent, cfg, rng)?;
    Ok(DecisionResult {
        answer: witness.is_none(),
        witness,
        report: counting.report(),
    })
}

// ---------------------------------------------------------------------------
// Deterministic classical counterparts, included so benchmarks can put both
// query curves on one axis.

/// Scan the k-subsets in colexicographic order through the counting oracle,
/// returning the first whose answer matches `target`. Bills one classical
/// query per subset inspected.
pub fn scan_for(
    counting: &CountingOracle,
    n: u32,
    k: u32,
    target: SearchTarget,
) -> Option<SubsetMask> {
    ksubsets(n, k).find(|&s| counting.query_classical(s) == target.wanted())
}

/// Classical uniform decision: greedy rank, then a full scan of the r-sets
/// for a dependent one.
pub fn decide_uniform_classical(oracle: &dyn IndependenceOracle, n: u32) -> DecisionResult {
    let counting = CountingOracle::new(oracle);
    let r = greedy_base_counted(&counting, n).len();
    let witness = scan_for(&counting, n, r, SearchTarget::Dependent);
    DecisionResult {
        answer: witness.is_none(),
        witness,
        report: counting.report(),
    }
}

/// Classical paving decision: greedy rank, then a full scan of the
/// (r−1)-sets for a dependent one.
pub fn decide_paving_classical(oracle: &dyn IndependenceOracle, n: u32) -> DecisionResult {
    let counting = CountingOracle::new(oracle);
    let r = greedy_base_counted(&counting, n).len();
    if r <= 1 {
        return DecisionResult {
            answer: true,
            witness: None,
            report: counting.report(),
        };
    }
    let witness = scan_for(&counting, n, r - 1, SearchTarget::Dependent);
    DecisionResult {
        answer: witness.is_none(),
        witness,
        report: counting.report(),
    }
}

/// Classical girth: check the full ground set, then scan subset sizes
/// upward; the first size admitting a dependent set is the girth.
pub fn girth_classical(oracle: &dyn IndependenceOracle, n: u32) -> GirthResult {
    let counting = CountingOracle::new(oracle);
    if counting.query_classical(SubsetMask::full(n)) {
        return GirthResult {
            girth: GirthValue::Infinite,
            witness: None,
            report: counting.report(),
        };
    }
    for k in 1..=n {
        if let Some(w) = scan_for(&counting, n, k, SearchTarget::Dependent) {
            return GirthResult {
                girth: GirthValue::Finite(k),
                witness: Some(w),
                report: counting.report(),
            };
        }
    }
    unreachable!("the dependent ground set is scanned at k = n");
}

/// Classical trivial decision: scan the singletons for an independent one.
pub fn decide_trivial_classical(oracle: &dyn IndependenceOracle, n: u32) -> DecisionResult {
    let counting = CountingOracle::new(oracle);
    let witness = scan_for(&counting, n, 1, SearchTarget::Independent);
    DecisionResult {
        answer: witness.is_none(),
        witness,
        report: counting.report(),
    }
}

/// Classical loopless decision: scan the singletons for a loop.
pub fn decide_loopless_classical(oracle: &dyn IndependenceOracle, n: u32) -> DecisionResult {
    let counting = CountingOracle::new(oracle);
    let witness = scan_for(&counting, n, 1, SearchTarget::Dependent);
    DecisionResult {
        answer: witness.is_none(),
        witness,
        report: counting.report(),
    }
}
