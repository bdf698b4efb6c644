//! The independence-oracle abstraction and query accounting.
//!
//! Algorithms never look inside a matroid; they ask an [`IndependenceOracle`]
//! whether subsets are independent and are billed per question. Classical
//! queries and simulated quantum queries (one per Grover iteration, the phase
//! oracle application) are tracked separately by [`CountingOracle`].

use std::cell::Cell;

use crate::subset::SubsetMask;

/// A black-box independence test for a fixed matroid (or any set system).
///
/// Implementations must be pure: the same subset always gets the same answer.
/// Matroid descriptions are immutable, so their oracles are safe to share
/// across threads; the counting wrapper below is deliberately not.
pub trait IndependenceOracle {
    fn is_independent(&self, s: SubsetMask) -> bool;
}

/// Adapter turning any pure closure into an oracle; handy for tests and
/// synthetic search spaces.
pub struct FnOracle<F>(pub F);

impl<F> IndependenceOracle for FnOracle<F>
where
    F: Fn(SubsetMask) -> bool,
{
    fn is_independent(&self, s: SubsetMask) -> bool {
        (self.0)(s)
    }
}

/// Snapshot of query counters.
#[derive(Copy, Clone, PartialEq, Eq, Debug, Default)]
pub struct QueryReport {
    pub classical: u64,
    pub quantum: u64,
}

impl QueryReport {
    pub fn total(self) -> u64 {
        self.classical + self.quantum
    }

    /// Queries spent since an earlier snapshot of the same counter.
    pub fn since(self, earlier: QueryReport) -> QueryReport {
        QueryReport {
            classical: self.classical - earlier.classical,
            quantum: self.quantum - earlier.quantum,
        }
    }
}

/// Wraps an oracle with monotone classical/quantum counters.
///
/// The wrapper is confined to one thread (counters are `Cell`s); the inner
/// oracle stays shareable. Algorithms answer classical questions through
/// [`query_classical`](Self::query_classical) and bill each simulated Grover
/// iteration through [`charge_quantum`](Self::charge_quantum).
pub struct CountingOracle<'a> {
    inner: &'a dyn IndependenceOracle,
    classical: Cell<u64>,
    quantum: Cell<u64>,
}

impl<'a> CountingOracle<'a> {
    pub fn new(inner: &'a dyn IndependenceOracle) -> Self {
        CountingOracle {
            inner,
            classical: Cell::new(0),
            quantum: Cell::new(0),
        }
    }

    /// The wrapped oracle, for uncounted reads (e.g. simulator internals).
    pub fn inner(&self) -> &'a dyn IndependenceOracle {
        self.inner
    }

    /// One classical query: asks the inner oracle and bumps the counter.
    pub fn query_classical(&self, s: SubsetMask) -> bool {
        self.classical.set(self.classical.get() + 1);
        self.inner.is_independent(s)
    }

    /// Bills `amount` quantum queries (one per Grover iteration).
    pub fn charge_quantum(&self, amount: u64) {
        self.quantum.set(self.quantum.get() + amount);
    }

    pub fn report(&self) -> QueryReport {
        QueryReport {
            classical: self.classical.get(),
            quantum: self.quantum.get(),
        }
    }

    pub fn reset(&self) {
        self.classical.set(0);
        self.quantum.set(0);
    }
}

/// Counted access also satisfies the oracle trait itself, so enumeration
/// routines can run against a `CountingOracle` and have every probe billed
/// classically.
impl IndependenceOracle for CountingOracle<'_> {
    fn is_independent(&self, s: SubsetMask) -> bool {
        self.query_classical(s)
    }
}
