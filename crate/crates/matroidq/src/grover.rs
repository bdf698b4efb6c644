//! Simulated quantum search over ranked subset spaces.
//!
//! A [`SubsetSearchSpace`] is the set of all k-element subsets of the ground
//! set in colexicographic order, together with a marking predicate ("the
//! subset is dependent" or "the subset is independent") evaluated against an
//! independence oracle. Search indices are colex ranks; [`grover_search`]
//! runs the unknown-solution-count randomized schedule against the space and
//! bills queries to the space's counting oracle: each simulated iteration
//! costs one quantum query, each candidate verification one classical query.
//!
//! The measurement distribution after j iterations is exactly two-valued
//! (marked indices share one probability, unmarked another), so the
//! simulator evolves a dense amplitude vector when the space is small enough
//! and otherwise samples the two-level closed form — the distributions are
//! identical by symmetry.

use std::cell::OnceCell;

use rand::Rng;

use crate::error::{Error, Result};
use crate::oracle::CountingOracle;
use crate::subset::{binomial, colex_unrank, ksubsets, SubsetMask, MAX_GROUND};

/// Largest space size simulated by dense amplitude evolution.
pub const DENSE_CAP: u64 = 1 << 20;

/// Largest admissible search-space size (the marked set is materialized once
/// per space).
pub const SPACE_CAP: u64 = 1 << 24;

/// Which oracle answer counts as "marked" for the search.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SearchTarget {
    /// Marked ⟺ the subset is independent.
    Independent,
    /// Marked ⟺ the subset is dependent.
    Dependent,
}

impl SearchTarget {
    /// The oracle answer that counts as a hit for this target.
    pub(crate) fn wanted(self) -> bool {
        matches!(self, SearchTarget::Independent)
    }
}

/// The k-subsets of an n-element ground set, colex-ranked, with a marking
/// predicate backed by an independence oracle.
///
/// Simulation-side evaluations (the one-time scan that locates the marked
/// indices) go through the counting oracle's inner oracle and are not
/// billed: they model the quantum black box, whose cost is charged per
/// Grover iteration instead. Only [`verify`](Self::verify) performs billed
/// classical queries.
pub struct SubsetSearchSpace<'a> {
    counting: &'a CountingOracle<'a>,
    n: u32,
    k: u32,
    size: u64,
    target: SearchTarget,
    marked: OnceCell<Vec<u64>>,
}

impl<'a> SubsetSearchSpace<'a> {
    /// Space of all k-subsets of {0,…,n−1}. Errors if k > n or the space
    /// exceeds [`SPACE_CAP`].
    pub fn new(
        counting: &'a CountingOracle<'a>,
        n: u32,
        k: u32,
        target: SearchTarget,
    ) -> Result<Self> {
        if n > MAX_GROUND {
            return Err(Error::InvalidParameter(format!(
                "ground set size {n} exceeds {MAX_GROUND}"
            )));
        }
        if k > n {
            return Err(Error::InvalidParameter(format!(
                "subset size {k} exceeds ground set size {n}"
            )));
        }
        let size = binomial(n, k);
        if size > SPACE_CAP {
            return Err(Error::Capacity {
                what: "search space size",
                value: size,
                cap: SPACE_CAP,
            });
        }
        Ok(SubsetSearchSpace {
            counting,
            n,
            k,
            size,
            target,
            marked: OnceCell::new(),
        })
    }

    /// Number of search indices, C(n,k) ≥ 1.
    pub fn size(&self) -> u64 {
        self.size
    }

    pub fn subset_size(&self) -> u32 {
        self.k
    }

    /// The subset at a colex rank.
    pub fn mask_of(&self, index: u64) -> SubsetMask {
        debug_assert!(index < self.size);
        colex_unrank(index, self.n, self.k).expect("index in range")
    }

    /// Sorted colex ranks of the marked subsets; computed once per space.
    fn marked(&self) -> &[u64] {
        self.marked.get_or_init(|| {
            let want = self.target.wanted();
            let inner = self.counting.inner();
            // ksubsets enumerates in colex order, so the enumeration
            // position is the colex rank
            ksubsets(self.n, self.k)
                .enumerate()
                .filter(|&(_, s)| inner.is_independent(s) == want)
                .map(|(pos, _)| pos as u64)
                .collect()
        })
    }

    /// Number of marked indices (simulation-side; unbilled).
    pub fn marked_count(&self) -> u64 {
        self.marked().len() as u64
    }

    /// Whether an index is marked (simulation-side; unbilled).
    pub fn is_marked(&self, index: u64) -> bool {
        self.marked().binary_search(&index).is_ok()
    }

    /// Classically re-query the candidate through the counting oracle.
    /// Costs one classical query.
    pub fn verify(&self, index: u64) -> bool {
        self.counting.query_classical(self.mask_of(index)) == self.target.wanted()
    }
}

/// Outcome of one bounded-error search run.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GroverOutcome {
    /// Verified marked index, if one was found.
    pub found: Option<u64>,
    /// Simulated Grover iterations consumed (≤ 3·⌈√N⌉).
    pub quantum_queries: u64,
    /// Classical candidate verifications performed.
    pub classical_verifications: u64,
}

/// Probability of measuring a marked index after `iterations` Grover steps
/// from the uniform state over `n_total` indices of which `n_marked` are
/// marked: sin²((2j+1)·arcsin √(k/N)).
pub fn grover_success_probability(n_total: u64, n_marked: u64, iterations: u64) -> f64 {
    assert!(n_total >= 1, "empty search space");
    assert!(n_marked <= n_total);
    if n_marked == 0 {
        return 0.0;
    }
    if n_marked == n_total {
        return 1.0;
    }
    let theta = (n_marked as f64 / n_total as f64).sqrt().asin();
    ((2 * iterations + 1) as f64 * theta).sin().powi(2)
}

/// Post-measurement probabilities after `iterations` steps of dense
/// amplitude evolution: phase-flip the marked entries, then invert every
/// amplitude about the mean.
fn dense_probabilities(size: u64, marked: &[u64], iterations: u64) -> Vec<f64> {
    let n = size as usize;
    let mut amp = vec![(1.0 / size as f64).sqrt(); n];
    for _ in 0..iterations {
        for &mi in marked {
            amp[mi as usize] = -amp[mi as usize];
        }
        let mean = amp.iter().sum::<f64>() / size as f64;
        for a in amp.iter_mut() {
            *a = 2.0 * mean - *a;
        }
    }
    for a in amp.iter_mut() {
        *a *= *a;
    }
    amp
}

fn dense_sample(space: &SubsetSearchSpace, iterations: u64, rng: &mut impl Rng) -> u64 {
    let probs = dense_probabilities(space.size(), space.marked(), iterations);
    let total: f64 = probs.iter().sum();
    let mut u = rng.gen::<f64>() * total;
    let mut last_positive = 0u64;
    for (i, &p) in probs.iter().enumerate() {
        if p > 0.0 {
            last_positive = i as u64;
        }
        u -= p;
        if u < 0.0 {
            return i as u64;
        }
    }
    // floating-point shortfall: land on the last index that had any weight
    last_positive
}

/// Closed-form sampling of the same two-level distribution: marked with
/// probability sin²((2j+1)θ), uniform within each class.
fn two_level_sample(space: &SubsetSearchSpace, iterations: u64, rng: &mut impl Rng) -> u64 {
    let n_total = space.size();
    let marked = space.marked();
    let k = marked.len() as u64;
    let p = grover_success_probability(n_total, k, iterations);
    if k > 0 && rng.gen_bool(p.clamp(0.0, 1.0)) {
        marked[rng.gen_range(0..k) as usize]
    } else {
        let ordinal = rng.gen_range(0..n_total - k);
        select_unmarked(marked, n_total, ordinal)
    }
}

/// The `ordinal`-th (0-based) unmarked index: binary search for the smallest
/// x whose prefix [0,x] contains ordinal+1 unmarked indices.
fn select_unmarked(marked: &[u64], n_total: u64, ordinal: u64) -> u64 {
    let mut lo = 0u64;
    let mut hi = n_total - 1;
    while lo < hi {
        let mid = lo + (hi - lo) / 2;
        let marked_le = marked.partition_point(|&m| m <= mid) as u64;
        let unmarked_le = mid + 1 - marked_le;
        if unmarked_le > ordinal {
            hi = mid;
        } else {
            lo = mid + 1;
        }
    }
    lo
}

/// Bills `iterations` quantum queries and samples one measurement.
fn sample_index(space: &SubsetSearchSpace, iterations: u64, rng: &mut impl Rng) -> u64 {
    space.counting.charge_quantum(iterations);
    if space.size() <= DENSE_CAP {
        dense_sample(space, iterations, rng)
    } else {
        two_level_sample(space, iterations, rng)
    }
}

/// One measurement after exactly `iterations` dense-simulated Grover steps;
/// bills `iterations` quantum queries. Errors above [`DENSE_CAP`].
pub fn grover_exact_sample(
    space: &SubsetSearchSpace,
    iterations: u64,
    rng: &mut impl Rng,
) -> Result<u64> {
    if space.size() > DENSE_CAP {
        return Err(Error::Capacity {
            what: "dense amplitude simulation",
            value: space.size(),
            cap: DENSE_CAP,
        });
    }
    space.counting.charge_quantum(iterations);
    Ok(dense_sample(space, iterations, rng))
}

fn sqrt_ceil(n: u64) -> u64 {
    let mut s = (n as f64).sqrt() as u64;
    while s * s < n {
        s += 1;
    }
    while s > 0 && (s - 1) * (s - 1) >= n {
        s -= 1;
    }
    s
}

/// Randomized search with an unknown number of marked indices.
///
/// Schedule: m ← 1; each round draws the iteration count j uniformly from
/// the integers below ⌈m⌉ (clamped to the remaining budget), samples one
/// measurement, classically verifies it, and on failure grows
/// m ← min(6m/5, √N). Stops at a verified hit, at the cumulative budget of
/// 3·⌈√N⌉ iterations, or at a fixed round cap (growth rounds + budget + 1)
/// that guarantees termination even through runs of j = 0 draws.
///
/// If any marked index exists it is found with probability ≥ 1/2; `found`
/// is always classically verified, so a present `found` is never wrong, and
/// a space with no marked index always yields `found = None`.
pub fn grover_search(space: &SubsetSearchSpace, rng: &mut impl Rng) -> GroverOutcome {
    let n_total = space.size();
    let sqrt_n = (n_total as f64).sqrt();
    let budget = 3 * sqrt_ceil(n_total);
    let growth_rounds = {
        let mut g = 0u64;
        let mut m = 1.0f64;
        while m < sqrt_n {
            m = (m * 6.0 / 5.0).min(sqrt_n);
            g += 1;
        }
        g
    };
    let round_cap = growth_rounds + budget + 1;

    let mut m = 1.0f64;
    let mut quantum = 0u64;
    let mut verifications = 0u64;
    for _ in 0..round_cap {
        let span = (m.ceil() as u64).max(1);
        let j = rng.gen_range(0..span).min(budget - quantum);
        let idx = sample_index(space, j, rng);
        quantum += j;
        verifications += 1;
        if space.verify(idx) {
            return GroverOutcome {
                found: Some(idx),
                quantum_queries: quantum,
                classical_verifications: verifications,
            };
        }
        if quantum >= budget {
            break;
        }
        m = (m * 6.0 / 5.0).min(sqrt_n);
    }
    GroverOutcome {
        found: None,
        quantum_queries: quantum,
        classical_verifications: verifications,
    }
}
