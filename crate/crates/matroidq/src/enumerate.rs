//! Brute-force reference computations over an independence oracle.
//!
//! Everything here is exponential-time and deliberately simple: these are the
//! correctness oracles that the query-efficient algorithms are judged
//! against, and the classical solvers for the counting problems (circuits,
//! bases, flats, hyperplanes). Full-table routines are capped at n ≤ 16, the
//! Eulerian exact-cover search at n ≤ 12.

use crate::error::{Error, Result};
use crate::matroid::GirthValue;
use crate::oracle::IndependenceOracle;
use crate::subset::{subsets, SubsetMask};

/// Cap for routines that materialize all 2ⁿ independence answers.
pub const TABLE_CAP: u32 = 16;

/// Cap for the Eulerian partition search (enumerates circuits first).
pub const EULERIAN_CAP: u32 = 12;

/// Rank of `s`: grow an independent set greedily through the elements of `s`
/// in increasing order. Exactly |s| oracle queries; correct on matroids by
/// the exchange axiom.
pub fn rank_of(oracle: &dyn IndependenceOracle, s: SubsetMask) -> u32 {
    let mut held = SubsetMask::EMPTY;
    for e in s.elements() {
        if oracle.is_independent(held.with(e)) {
            held = held.with(e);
        }
    }
    held.len()
}

/// Rank by scanning every subset of `s`; works on arbitrary set systems
/// (greedy does not). Only used to cross-check `rank_of` in tests.
pub fn rank_of_exhaustive(oracle: &dyn IndependenceOracle, s: SubsetMask) -> u32 {
    let elements: Vec<u32> = s.elements().collect();
    let mut best = 0;
    for pick in subsets(elements.len() as u32) {
        let t = SubsetMask::from_elements(pick.elements().map(|i| elements[i as usize]));
        if t.len() > best && oracle.is_independent(t) {
            best = t.len();
        }
    }
    best
}

/// Closure of `x`: all elements whose addition does not raise the rank.
/// Elements of `x` are always included.
pub fn closure(oracle: &dyn IndependenceOracle, x: SubsetMask, n: u32) -> SubsetMask {
    let base_rank = rank_of(oracle, x);
    let mut cl = x;
    for e in 0..n {
        if !x.contains(e) && rank_of(oracle, x.with(e)) == base_rank {
            cl = cl.with(e);
        }
    }
    cl
}

/// The full independence truth table plus a rank table derived from it.
pub struct IndependenceTable {
    n: u32,
    independent: Vec<bool>,
    rank: Vec<u8>,
}

impl IndependenceTable {
    /// Builds the table with 2ⁿ oracle queries.
    pub fn build(oracle: &dyn IndependenceOracle, n: u32) -> Result<Self> {
        if n > TABLE_CAP {
            return Err(Error::Capacity {
                what: "independence table",
                value: n as u64,
                cap: TABLE_CAP as u64,
            });
        }
        let independent: Vec<bool> = subsets(n).map(|s| oracle.is_independent(s)).collect();
        // rank(S) = |S| when S is independent, else max over one-element
        // deletions; masks are visited in increasing order so subsets come
        // first.
        let mut rank = vec![0u8; independent.len()];
        for s in subsets(n) {
            let i = s.bits() as usize;
            rank[i] = if independent[i] {
                s.len() as u8
            } else {
                s.elements()
                    .map(|e| rank[s.without(e).bits() as usize])
                    .max()
                    .unwrap_or(0)
            };
        }
        Ok(IndependenceTable { n, independent, rank })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn is_independent(&self, s: SubsetMask) -> bool {
        self.independent[s.bits() as usize]
    }

    pub fn rank_of(&self, s: SubsetMask) -> u32 {
        self.rank[s.bits() as usize] as u32
    }

    pub fn matroid_rank(&self) -> u32 {
        self.rank_of(SubsetMask::full(self.n))
    }

    pub fn closure_of(&self, x: SubsetMask) -> SubsetMask {
        let base = self.rank_of(x);
        let mut cl = x;
        for e in 0..self.n {
            if !x.contains(e) && self.rank_of(x.with(e)) == base {
                cl = cl.with(e);
            }
        }
        cl
    }
}

/// All circuits (minimal dependent sets), ascending by mask.
pub fn circuits(oracle: &dyn IndependenceOracle, n: u32) -> Result<Vec<SubsetMask>> {
    let table = IndependenceTable::build(oracle, n)?;
    Ok(subsets(n)
        .filter(|&c| {
            !table.is_independent(c)
                && c.elements().all(|e| table.is_independent(c.without(e)))
        })
        .collect())
}

/// All bases (independent sets of full rank), ascending by mask.
pub fn bases(oracle: &dyn IndependenceOracle, n: u32) -> Result<Vec<SubsetMask>> {
    let table = IndependenceTable::build(oracle, n)?;
    let r = table.matroid_rank();
    Ok(subsets(n)
        .filter(|&b| b.len() == r && table.is_independent(b))
        .collect())
}

/// All flats (closure-closed sets), ascending by mask.
pub fn flats(oracle: &dyn IndependenceOracle, n: u32) -> Result<Vec<SubsetMask>> {
    let table = IndependenceTable::build(oracle, n)?;
    Ok(subsets(n).filter(|&f| table.closure_of(f) == f).collect())
}

/// All hyperplanes (flats of rank exactly rank−1), ascending by mask.
pub fn hyperplanes(oracle: &dyn IndependenceOracle, n: u32) -> Result<Vec<SubsetMask>> {
    let table = IndependenceTable::build(oracle, n)?;
    let r = table.matroid_rank();
    if r == 0 {
        return Ok(Vec::new());
    }
    Ok(subsets(n)
        .filter(|&f| table.rank_of(f) == r - 1 && table.closure_of(f) == f)
        .collect())
}

/// Girth by scanning the truth table: the smallest dependent set is a
/// circuit, so its size is the girth.
pub fn girth_bruteforce(oracle: &dyn IndependenceOracle, n: u32) -> Result<GirthValue> {
    let table = IndependenceTable::build(oracle, n)?;
    let smallest = subsets(n)
        .filter(|&s| !table.is_independent(s))
        .map(|s| s.len())
        .min();
    Ok(match smallest {
        Some(g) => GirthValue::Finite(g),
        None => GirthValue::Infinite,
    })
}

/// Whether the ground set partitions into pairwise disjoint circuits.
///
/// Exact-cover backtracking: circuits are bucketed by smallest element, and
/// each step branches only over circuits starting at the lowest uncovered
/// element (every tried circuit must contain it, and all smaller elements are
/// already covered).
pub fn is_eulerian_bruteforce(oracle: &dyn IndependenceOracle, n: u32) -> Result<bool> {
    if n > EULERIAN_CAP {
        return Err(Error::Capacity {
            what: "eulerian partition search",
            value: n as u64,
            cap: EULERIAN_CAP as u64,
        });
    }
    let all = circuits(oracle, n)?;
    let mut by_min: Vec<Vec<SubsetMask>> = vec![Vec::new(); n as usize];
    for c in all {
        if let Some(e) = c.lowest() {
            by_min[e as usize].push(c);
        }
    }
    fn cover(covered: SubsetMask, full: SubsetMask, by_min: &[Vec<SubsetMask>]) -> bool {
        if covered == full {
            return true;
        }
        let e = full.minus(covered).lowest().unwrap();
        by_min[e as usize].iter().any(|&c| {
            c.intersection(covered).is_empty() && cover(covered.union(c), full, by_min)
        })
    }
    Ok(cover(SubsetMask::EMPTY, SubsetMask::full(n), &by_min))
}

/// Uniformity test against the definition: with r the matroid's rank,
/// independence must be exactly the |S| ≤ r predicate.
pub fn is_uniform_bruteforce(oracle: &dyn IndependenceOracle, n: u32) -> Result<bool> {
    let table = IndependenceTable::build(oracle, n)?;
    let r = table.matroid_rank();
    Ok(subsets(n).all(|s| table.is_independent(s) == (s.len() <= r)))
}

/// Paving test: every circuit at least as large as the rank; equivalently
/// girth ≥ rank (vacuous when there are no circuits).
pub fn is_paving_bruteforce(oracle: &dyn IndependenceOracle, n: u32) -> Result<bool> {
    let table = IndependenceTable::build(oracle, n)?;
    let r = table.matroid_rank();
    let girth = subsets(n)
        .filter(|&s| !table.is_independent(s))
        .map(|s| s.len())
        .min();
    Ok(match girth {
        Some(g) => g >= r,
        None => true,
    })
}

/// Trivial test: the empty set is the only base, i.e. every singleton is a
/// loop. n oracle queries; no size cap.
pub fn is_trivial_bruteforce(oracle: &dyn IndependenceOracle, n: u32) -> bool {
    (0..n).all(|e| !oracle.is_independent(SubsetMask::singleton(e)))
}

/// Loopless test: every singleton independent. n oracle queries; no size cap.
pub fn is_loopless_bruteforce(oracle: &dyn IndependenceOracle, n: u32) -> bool {
    (0..n).all(|e| oracle.is_independent(SubsetMask::singleton(e)))
}
