//! Subsets of a small ground set as bitmasks, plus the combinatorial number
//! system used to index fixed-size subsets.
//!
//! Element `i` of the ground set `{0, …, n−1}` lives in bit `i` (bit 0 is the
//! least significant). Subsets of equal cardinality are ordered
//! colexicographically, which for bitmasks coincides with plain numeric order;
//! [`colex_rank`] and [`colex_unrank`] convert between a subset and its
//! position in that order.

use std::fmt;
use std::sync::OnceLock;

use crate::error::{Error, Result};

/// Largest supported ground set. Masks are stored in a `u64`.
pub const MAX_GROUND: u32 = 64;

/// A subset of `{0, …, n−1}` stored as a bitmask.
#[derive(Copy, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct SubsetMask(u64);

impl SubsetMask {
    /// The empty set.
    pub const EMPTY: SubsetMask = SubsetMask(0);

    /// Wraps raw bits. The caller is responsible for keeping bits within the
    /// ground set it works over; constructions that take `n` validate this.
    pub const fn from_bits(bits: u64) -> Self {
        SubsetMask(bits)
    }

    /// Wraps raw bits, checking that they fit inside a ground set of size `n`.
    pub fn new(bits: u64, n: u32) -> Result<Self> {
        if n > MAX_GROUND {
            return Err(Error::Capacity {
                what: "ground set",
                value: n as u64,
                cap: MAX_GROUND as u64,
            });
        }
        if n < MAX_GROUND && bits >> n != 0 {
            return Err(Error::InvalidParameter(format!(
                "mask {bits:#x} has elements outside a ground set of size {n}"
            )));
        }
        Ok(SubsetMask(bits))
    }

    /// The full ground set `{0, …, n−1}`.
    pub fn full(n: u32) -> Self {
        debug_assert!(n <= MAX_GROUND);
        if n == MAX_GROUND {
            SubsetMask(u64::MAX)
        } else {
            SubsetMask((1u64 << n) - 1)
        }
    }

    /// The one-element set `{e}`.
    pub fn singleton(e: u32) -> Self {
        debug_assert!(e < MAX_GROUND);
        SubsetMask(1u64 << e)
    }

    /// Builds a set from element indices.
    pub fn from_elements<I: IntoIterator<Item = u32>>(elements: I) -> Self {
        let mut bits = 0u64;
        for e in elements {
            debug_assert!(e < MAX_GROUND);
            bits |= 1u64 << e;
        }
        SubsetMask(bits)
    }

    pub const fn bits(self) -> u64 {
        self.0
    }

    /// Cardinality.
    pub const fn len(self) -> u32 {
        self.0.count_ones()
    }

    pub const fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub const fn contains(self, e: u32) -> bool {
        e < MAX_GROUND && self.0 >> e & 1 == 1
    }

    pub const fn is_subset_of(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    pub const fn with(self, e: u32) -> Self {
        SubsetMask(self.0 | 1u64 << e)
    }

    pub const fn without(self, e: u32) -> Self {
        SubsetMask(self.0 & !(1u64 << e))
    }

    pub const fn union(self, other: Self) -> Self {
        SubsetMask(self.0 | other.0)
    }

    pub const fn intersection(self, other: Self) -> Self {
        SubsetMask(self.0 & other.0)
    }

    pub const fn minus(self, other: Self) -> Self {
        SubsetMask(self.0 & !other.0)
    }

    pub fn complement(self, n: u32) -> Self {
        Self::full(n).minus(self)
    }

    /// The smallest element, if any.
    pub fn lowest(self) -> Option<u32> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros())
        }
    }

    /// Iterates over elements in increasing order.
    pub fn elements(self) -> Elements {
        Elements(self.0)
    }
}

pub struct Elements(u64);

impl Iterator for Elements {
    type Item = u32;

    fn next(&mut self) -> Option<u32> {
        if self.0 == 0 {
            return None;
        }
        let e = self.0.trailing_zeros();
        self.0 &= self.0 - 1;
        Some(e)
    }
}

impl fmt::Display for SubsetMask {
    /// Comma-separated element list, e.g. `0,2,3`; empty set prints nothing.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for e in self.elements() {
            if !first {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
            first = false;
        }
        Ok(())
    }
}

impl fmt::Debug for SubsetMask {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{self}}}")
    }
}

fn binomial_table() -> &'static Vec<Vec<u64>> {
    static TABLE: OnceLock<Vec<Vec<u64>>> = OnceLock::new();
    TABLE.get_or_init(|| {
        let n = MAX_GROUND as usize + 1;
        let mut t = vec![vec![0u64; n + 1]; n + 1];
        for (i, row) in t.iter_mut().enumerate().take(n + 1) {
            row[0] = 1;
            for j in 1..=i {
                // C(64,32) < 2^61, so u64 addition never overflows here.
                row[j] = if j == i { 1 } else { 0 };
            }
        }
        for i in 1..=n {
            for j in 1..i {
                t[i][j] = t[i - 1][j - 1] + t[i - 1][j];
            }
        }
        t
    })
}

/// Binomial coefficient C(n, k); zero when `k > n`. Valid for `n ≤ 65`.
pub fn binomial(n: u32, k: u32) -> u64 {
    let t = binomial_table();
    if (n as usize) < t.len() && (k as usize) < t[0].len() {
        t[n as usize][k as usize]
    } else {
        0
    }
}

/// Position of `s` among all subsets of its cardinality, in colexicographic
/// order: for elements c₁ < c₂ < … < c_k the rank is Σᵢ C(cᵢ, i).
pub fn colex_rank(s: SubsetMask) -> u64 {
    let mut rank = 0u64;
    for (i, e) in s.elements().enumerate() {
        rank += binomial(e, i as u32 + 1);
    }
    rank
}

/// Inverse of [`colex_rank`]: the k-subset of `{0, …, n−1}` at position
/// `index`. Fails when `index ≥ C(n, k)`.
pub fn colex_unrank(index: u64, n: u32, k: u32) -> Result<SubsetMask> {
    let total = binomial(n, k);
    if k > n || index >= total {
        return Err(Error::InvalidParameter(format!(
            "colex index {index} out of range for {k}-subsets of a {n}-set"
        )));
    }
    let mut rem = index;
    let mut bits = 0u64;
    let mut upper = n; // elements still eligible are < upper
    for i in (1..=k).rev() {
        // Largest c < upper with C(c, i) ≤ rem; one always exists because
        // rem < C(upper, i) and C(i−1, i) = 0.
        let mut c = upper - 1;
        while binomial(c, i) > rem {
            c -= 1;
        }
        rem -= binomial(c, i);
        bits |= 1u64 << c;
        upper = c;
    }
    Ok(SubsetMask(bits))
}

/// Iterates over all k-subsets of `{0, …, n−1}` in colexicographic order
/// (equivalently: increasing bitmask value), yielding exactly C(n, k) masks.
pub fn ksubsets(n: u32, k: u32) -> KSubsets {
    debug_assert!(n <= MAX_GROUND);
    let remaining = binomial(n, k);
    let first = if k == 0 { 0 } else { (1u64 << k) - 1 };
    KSubsets {
        current: first,
        remaining,
    }
}

pub struct KSubsets {
    current: u64,
    remaining: u64,
}

impl Iterator for KSubsets {
    type Item = SubsetMask;

    fn next(&mut self) -> Option<SubsetMask> {
        if self.remaining == 0 {
            return None;
        }
        let out = SubsetMask(self.current);
        self.remaining -= 1;
        if self.remaining > 0 {
            // Gosper's hack; wrapping ops because the step after the final
            // mask may overflow and is never used.
            let c = self.current;
            let u = c & c.wrapping_neg();
            let v = c.wrapping_add(u);
            self.current = v | ((c ^ v) >> 2) / u;
        }
        Some(out)
    }
}

/// Iterates over all 2ⁿ subsets of `{0, …, n−1}` in increasing mask order.
/// Intended for exhaustive scans at small n; callers enforce their own caps.
pub fn subsets(n: u32) -> impl Iterator<Item = SubsetMask> {
    debug_assert!(n < 32, "full subset scans are only meant for small n");
    (0u64..1u64 << n).map(SubsetMask)
}

/// A fixed-length string of bits, used for explicit base/independence
/// families and for adversary-relation encodings.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitString {
    len: usize,
    blocks: Vec<u64>,
}

impl BitString {
    pub fn new_filled(len: usize, bit: bool) -> Self {
        let nblocks = len.div_ceil(64);
        let mut blocks = vec![if bit { u64::MAX } else { 0 }; nblocks];
        if bit && len % 64 != 0 {
            // keep unused tail bits zero so equality and counting stay exact
            *blocks.last_mut().unwrap() = (1u64 << (len % 64)) - 1;
        }
        BitString { len, blocks }
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn get(&self, i: usize) -> bool {
        debug_assert!(i < self.len);
        self.blocks[i / 64] >> (i % 64) & 1 == 1
    }

    pub fn set(&mut self, i: usize, bit: bool) {
        debug_assert!(i < self.len);
        if bit {
            self.blocks[i / 64] |= 1u64 << (i % 64);
        } else {
            self.blocks[i / 64] &= !(1u64 << (i % 64));
        }
    }

    pub fn count_ones(&self) -> usize {
        self.blocks.iter().map(|b| b.count_ones() as usize).sum()
    }

    pub fn count_zeros(&self) -> usize {
        self.len - self.count_ones()
    }

    /// Positions holding a 1, ascending.
    pub fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.len).filter(|&i| self.get(i))
    }

    /// Positions holding a 0, ascending.
    pub fn zeros(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.len).filter(|&i| !self.get(i))
    }

    /// ASCII rendering: character `i` is the bit at position `i`.
    pub fn to_ascii(&self) -> String {
        (0..self.len).map(|i| if self.get(i) { '1' } else { '0' }).collect()
    }

    pub fn from_ascii(s: &str) -> Result<Self> {
        let mut out = BitString::new_filled(s.len(), false);
        for (i, ch) in s.bytes().enumerate() {
            match ch {
                b'0' => {}
                b'1' => out.set(i, true),
                other => {
                    return Err(Error::Parse(format!(
                        "bit string may only contain 0/1, found {:?} at position {i}",
                        other as char
                    )))
                }
            }
        }
        Ok(out)
    }
}

impl fmt::Debug for BitString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.len <= 80 {
            write!(f, "BitString({})", self.to_ascii())
        } else {
            write!(f, "BitString(len={}, ones={})", self.len, self.count_ones())
        }
    }
}
