//! Matroid descriptions and their independence oracles.
//!
//! A [`MatroidSpec`] is a compact, serializable description of a matroid on
//! ground set `{0, …, n−1}`. Four kinds are parametric with O(1) closed-form
//! independence tests; two carry an explicit bit-vector family:
//!
//! * `uniform` — independent iff `|S| ≤ r`.
//! * `deletedBasis1` — bases are all r-sets except one excluded set A.
//! * `deletedBasis2` — n even, r = n/2; bases are all r-sets except A and its
//!   complement.
//! * `pavingCounter` — |A| = r−1; bases are all r-sets *not* containing A.
//!   A itself is then a dependent (r−1)-set, so the matroid has rank r but is
//!   not paving.
//! * `basisFamily` — one bit per r-set in colex order, 1 = base. A set is
//!   independent iff some base contains it.
//! * `subsetFamily` — one bit per subset (position = mask value), 1 =
//!   independent. This kind can encode arbitrary set systems, which is what
//!   [`verify_axioms`] is for.

use std::fmt;

use crate::error::{Error, Result};
use crate::oracle::IndependenceOracle;
use crate::subset::{binomial, colex_rank, ksubsets, subsets, BitString, SubsetMask};

/// Ground-set cap for kinds that get enumerated, indexed colexicographically,
/// or materialized.
pub const GROUND_CAP: u32 = 24;

/// Ground-set cap for the uniform kind, whose oracle is a popcount test.
/// The larger bound exists so singleton-search algorithms can be exercised on
/// bigger ground sets.
pub const UNIFORM_GROUND_CAP: u32 = 64;

/// Ground-set cap for brute-force axiom verification (it scans pairs of
/// subsets, 4ⁿ work).
pub const AXIOM_CAP: u32 = 12;

/// Girth: the size of a smallest circuit, or infinite when every subset is
/// independent (the free matroid has no circuits).
#[derive(Copy, Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub enum GirthValue {
    Finite(u32),
    Infinite,
}

impl GirthValue {
    pub fn is_finite(self) -> bool {
        matches!(self, GirthValue::Finite(_))
    }
}

impl fmt::Display for GirthValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GirthValue::Finite(g) => write!(f, "{g}"),
            GirthValue::Infinite => write!(f, "inf"),
        }
    }
}

#[derive(Copy, Clone, PartialEq, Eq, Debug)]
pub enum MatroidKind {
    Uniform,
    BasisFamily,
    SubsetFamily,
    DeletedBasis1,
    DeletedBasis2,
    PavingCounter,
}

impl MatroidKind {
    pub fn as_str(self) -> &'static str {
        match self {
            MatroidKind::Uniform => "uniform",
            MatroidKind::BasisFamily => "basisFamily",
            MatroidKind::SubsetFamily => "subsetFamily",
            MatroidKind::DeletedBasis1 => "deletedBasis1",
            MatroidKind::DeletedBasis2 => "deletedBasis2",
            MatroidKind::PavingCounter => "pavingCounter",
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        Ok(match s {
            "uniform" => MatroidKind::Uniform,
            "basisFamily" => MatroidKind::BasisFamily,
            "subsetFamily" => MatroidKind::SubsetFamily,
            "deletedBasis1" => MatroidKind::DeletedBasis1,
            "deletedBasis2" => MatroidKind::DeletedBasis2,
            "pavingCounter" => MatroidKind::PavingCounter,
            other => return Err(Error::Parse(format!("unknown matroid kind {other:?}"))),
        })
    }
}

/// Which single-base deletion to apply: just A, or A together with its
/// complement (the latter needs n even and r = n/2 so both have size r).
#[derive(Copy, Clone, PartialEq, Eq, Debug)]
pub enum DeletedVariant {
    One,
    Two,
}

/// A validated matroid description. Immutable after construction; the
/// independence oracle is the [`IndependenceOracle`] impl on the spec itself.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MatroidSpec {
    n: u32,
    kind: MatroidKind,
    r: Option<u32>,
    excluded: Option<SubsetMask>,
    family: Option<BitString>,
}

impl MatroidSpec {
    /// The uniform matroid U_{r,n}: every set of at most r elements is
    /// independent.
    pub fn uniform(n: u32, r: u32) -> Result<Self> {
        check_ground(n, UNIFORM_GROUND_CAP)?;
        if r > n {
            return Err(Error::InvalidParameter(format!(
                "uniform matroid needs r ≤ n, got r={r}, n={n}"
            )));
        }
        Ok(MatroidSpec {
            n,
            kind: MatroidKind::Uniform,
            r: Some(r),
            excluded: None,
            family: None,
        })
    }

    /// U_{r,n} with the base `a` deleted (variant one), or with both `a` and
    /// its complement deleted (variant two).
    pub fn deleted_basis(n: u32, r: u32, a: SubsetMask, variant: DeletedVariant) -> Result<Self> {
        check_ground(n, GROUND_CAP)?;
        if r > n {
            return Err(Error::InvalidParameter(format!(
                "deleted-basis matroid needs r ≤ n, got r={r}, n={n}"
            )));
        }
        check_excluded(a, n, r, "excluded base")?;
        match variant {
            DeletedVariant::One => {
                if binomial(n, r) < 2 {
                    return Err(Error::EmptyBaseFamily(format!(
                        "deleting the only {r}-set of a {n}-set leaves no bases"
                    )));
                }
                Ok(MatroidSpec {
                    n,
                    kind: MatroidKind::DeletedBasis1,
                    r: Some(r),
                    excluded: Some(a),
                    family: None,
                })
            }
            DeletedVariant::Two => {
                if n != 2 * r {
                    return Err(Error::InvalidParameter(format!(
                        "variant two deletes A and its complement, which must both have \
                         size r; needs n = 2r, got n={n}, r={r}"
                    )));
                }
                if binomial(n, r) < 3 {
                    return Err(Error::EmptyBaseFamily(format!(
                        "deleting A and its complement from the {r}-sets of a {n}-set \
                         leaves no bases"
                    )));
                }
                Ok(MatroidSpec {
                    n,
                    kind: MatroidKind::DeletedBasis2,
                    r: Some(r),
                    excluded: Some(a),
                    family: None,
                })
            }
        }
    }

    /// The rank-r matroid whose bases are exactly the r-sets not containing
    /// the (r−1)-set `a`. It is the standard witness that "all (r−1)-sets
    /// independent" genuinely differs from "paving": here `a` is a dependent
    /// set of size rank−1.
    pub fn paving_counterexample(n: u32, r: u32, a: SubsetMask) -> Result<Self> {
        check_ground(n, GROUND_CAP)?;
        if r < 1 || r > n {
            return Err(Error::InvalidParameter(format!(
                "paving counterexample needs 1 ≤ r ≤ n, got r={r}, n={n}"
            )));
        }
        check_excluded(a, n, r - 1, "excluded set")?;
        // r-sets containing a: one per element outside a. If nothing else is
        // left, the base family is empty.
        if binomial(n, r) <= (n - (r - 1)) as u64 {
            return Err(Error::EmptyBaseFamily(format!(
                "every {r}-set of a {n}-set contains the excluded {}-set",
                r - 1
            )));
        }
        Ok(MatroidSpec {
            n,
            kind: MatroidKind::PavingCounter,
            r: Some(r),
            excluded: Some(a),
            family: None,
        })
    }

    /// An explicit base family: bit i of `family` says whether the r-set with
    /// colex index i is a base. The bits are not checked for the base-exchange
    /// property; run [`verify_axioms`] when that matters.
    pub fn basis_family(n: u32, r: u32, family: BitString) -> Result<Self> {
        check_ground(n, GROUND_CAP)?;
        if r > n {
            return Err(Error::InvalidParameter(format!(
                "basis family needs r ≤ n, got r={r}, n={n}"
            )));
        }
        let expect = binomial(n, r);
        if family.len() as u64 != expect {
            return Err(Error::InvalidParameter(format!(
                "basis family for n={n}, r={r} needs {expect} bits, got {}",
                family.len()
            )));
        }
        Ok(MatroidSpec {
            n,
            kind: MatroidKind::BasisFamily,
            r: Some(r),
            excluded: None,
            family: Some(family),
        })
    }

    /// An explicit independence family: bit m of `family` says whether the
    /// subset with mask m is independent. May encode non-matroids.
    pub fn subset_family(n: u32, family: BitString) -> Result<Self> {
        check_ground(n, GROUND_CAP)?;
        let expect = 1u64 << n;
        if family.len() as u64 != expect {
            return Err(Error::InvalidParameter(format!(
                "subset family for n={n} needs {expect} bits, got {}",
                family.len()
            )));
        }
        Ok(MatroidSpec {
            n,
            kind: MatroidKind::SubsetFamily,
            r: None,
            excluded: None,
            family: Some(family),
        })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn kind(&self) -> MatroidKind {
        self.kind
    }

    /// The rank parameter, for every kind that has one (all but subsetFamily).
    pub fn rank_param(&self) -> Option<u32> {
        self.r
    }

    /// The excluded set A of the deleted-basis and paving-counterexample
    /// kinds.
    pub fn excluded(&self) -> Option<SubsetMask> {
        self.excluded
    }

    pub fn family(&self) -> Option<&BitString> {
        self.family.as_ref()
    }

    /// The closed-form (or table-lookup) independence test behind the oracle.
    pub fn is_independent_set(&self, s: SubsetMask) -> bool {
        debug_assert!(s.is_subset_of(SubsetMask::full(self.n)));
        match self.kind {
            MatroidKind::Uniform => s.len() <= self.r.unwrap(),
            // Only the excluded r-set itself is missing; every smaller set
            // still extends to one of the ≥1 remaining bases.
            MatroidKind::DeletedBasis1 => {
                let r = self.r.unwrap();
                s.len() <= r && s != self.excluded.unwrap()
            }
            MatroidKind::DeletedBasis2 => {
                let r = self.r.unwrap();
                let a = self.excluded.unwrap();
                s.len() <= r && s != a && s != a.complement(self.n)
            }
            // Bases are the r-sets avoiding A, so S is independent iff it is
            // small enough and does not itself contain A: any such S extends
            // to an r-set dodging at least one element of A.
            MatroidKind::PavingCounter => {
                let a = self.excluded.unwrap();
                s.len() <= self.r.unwrap() && !a.is_subset_of(s)
            }
            MatroidKind::SubsetFamily => self.family.as_ref().unwrap().get(s.bits() as usize),
            MatroidKind::BasisFamily => self.basis_family_independent(s),
        }
    }

    fn basis_family_independent(&self, s: SubsetMask) -> bool {
        let r = self.r.unwrap();
        let family = self.family.as_ref().unwrap();
        if s.len() > r {
            return false;
        }
        if s.len() == r {
            return family.get(colex_rank(s) as usize);
        }
        // Try to extend s to a base with r−|s| elements of the complement.
        let spare: Vec<u32> = s.complement(self.n).elements().collect();
        let need = r - s.len();
        ksubsets(spare.len() as u32, need).any(|pick| {
            let extension = SubsetMask::from_elements(pick.elements().map(|i| spare[i as usize]));
            family.get(colex_rank(s.union(extension)) as usize)
        })
    }

    /// Rewrites this description as an explicit `basisFamily`: one bit per
    /// r-set (r = the matroid's rank), set iff that r-set is a base.
    pub fn materialize_basis_family(&self) -> Result<MatroidSpec> {
        check_ground(self.n, GROUND_CAP)?;
        let r = match self.r {
            Some(r) => r,
            // subsetFamily: rank must be discovered. Greedy works only on
            // genuine matroids, which is all this conversion is meant for.
            None => greedy_rank_raw(self, self.n),
        };
        let mut bits = BitString::new_filled(binomial(self.n, r) as usize, false);
        for (i, s) in ksubsets(self.n, r).enumerate() {
            // An r-set is a base iff it is independent (rank r is maximal).
            if self.is_independent_set(s) {
                bits.set(i, true);
            }
        }
        MatroidSpec::basis_family(self.n, r, bits)
    }

    /// Rewrites this description as an explicit `subsetFamily` truth table of
    /// all 2ⁿ independence answers.
    pub fn materialize_subset_family(&self) -> Result<MatroidSpec> {
        check_ground(self.n, GROUND_CAP)?;
        let mut bits = BitString::new_filled(1usize << self.n, false);
        for s in subsets(self.n) {
            if self.is_independent_set(s) {
                bits.set(s.bits() as usize, true);
            }
        }
        MatroidSpec::subset_family(self.n, bits)
    }

    /// Serializes to the on-disk format: a header line, plus a payload line
    /// for the explicit-family kinds. LF line endings.
    pub fn to_file_string(&self) -> String {
        let mut head = format!("matroid n={} kind={}", self.n, self.kind.as_str());
        if let Some(r) = self.r {
            head.push_str(&format!(" r={r}"));
        }
        if let Some(a) = self.excluded {
            head.push_str(&format!(" A={a}"));
        }
        match &self.family {
            Some(bits) => format!("{head}\n{}\n", bits.to_ascii()),
            None => format!("{head}\n"),
        }
    }

    /// Parses the on-disk format produced by [`to_file_string`].
    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = text.lines();
        let head = lines
            .next()
            .ok_or_else(|| Error::Parse("empty matroid file".into()))?;
        let mut tokens = head.split_whitespace();
        if tokens.next() != Some("matroid") {
            return Err(Error::Parse("header must start with \"matroid\"".into()));
        }
        let (mut n, mut kind, mut r, mut a) = (None, None, None, None);
        for tok in tokens {
            let (key, value) = tok
                .split_once('=')
                .ok_or_else(|| Error::Parse(format!("malformed header field {tok:?}")))?;
            match key {
                "n" => n = Some(parse_u32(value, "n")?),
                "kind" => kind = Some(MatroidKind::parse(value)?),
                "r" => r = Some(parse_u32(value, "r")?),
                "A" => a = Some(parse_element_list(value)?),
                other => return Err(Error::Parse(format!("unknown header field {other:?}"))),
            }
        }
        let n = n.ok_or_else(|| Error::Parse("header is missing n=".into()))?;
        let kind = kind.ok_or_else(|| Error::Parse("header is missing kind=".into()))?;
        let expect_r = |r: Option<u32>| {
            r.ok_or_else(|| Error::Parse(format!("kind {} needs r=", kind.as_str())))
        };
        let expect_a = |a: Option<SubsetMask>| {
            a.ok_or_else(|| Error::Parse(format!("kind {} needs A=", kind.as_str())))
        };
        let payload = |lines: &mut std::str::Lines| -> Result<BitString> {
            let line = lines
                .next()
                .ok_or_else(|| Error::Parse("missing payload line".into()))?;
            BitString::from_ascii(line)
        };
        let spec = match kind {
            MatroidKind::Uniform => {
                reject_fields(a.is_some(), "A", kind)?;
                MatroidSpec::uniform(n, expect_r(r)?)?
            }
            MatroidKind::DeletedBasis1 => {
                MatroidSpec::deleted_basis(n, expect_r(r)?, expect_a(a)?, DeletedVariant::One)?
            }
            MatroidKind::DeletedBasis2 => {
                MatroidSpec::deleted_basis(n, expect_r(r)?, expect_a(a)?, DeletedVariant::Two)?
            }
            MatroidKind::PavingCounter => {
                MatroidSpec::paving_counterexample(n, expect_r(r)?, expect_a(a)?)?
            }
            MatroidKind::BasisFamily => {
                reject_fields(a.is_some(), "A", kind)?;
                MatroidSpec::basis_family(n, expect_r(r)?, payload(&mut lines)?)?
            }
            MatroidKind::SubsetFamily => {
                reject_fields(a.is_some(), "A", kind)?;
                reject_fields(r.is_some(), "r", kind)?;
                MatroidSpec::subset_family(n, payload(&mut lines)?)?
            }
        };
        if let Some(extra) = lines.next() {
            if !extra.trim().is_empty() {
                return Err(Error::Parse(format!("unexpected trailing line {extra:?}")));
            }
        }
        Ok(spec)
    }
}

impl IndependenceOracle for MatroidSpec {
    fn is_independent(&self, s: SubsetMask) -> bool {
        self.is_independent_set(s)
    }
}

fn check_ground(n: u32, cap: u32) -> Result<()> {
    if n > cap {
        return Err(Error::Capacity {
            what: "matroid ground set",
            value: n as u64,
            cap: cap as u64,
        });
    }
    Ok(())
}

fn check_excluded(a: SubsetMask, n: u32, size: u32, what: &str) -> Result<()> {
    if !a.is_subset_of(SubsetMask::full(n)) {
        return Err(Error::InvalidParameter(format!(
            "{what} {a:?} has elements outside the ground set of size {n}"
        )));
    }
    if a.len() != size {
        return Err(Error::InvalidParameter(format!(
            "{what} must have {size} elements, got {a:?}"
        )));
    }
    Ok(())
}

fn reject_fields(present: bool, field: &str, kind: MatroidKind) -> Result<()> {
    if present {
        return Err(Error::Parse(format!(
            "kind {} does not take {field}=",
            kind.as_str()
        )));
    }
    Ok(())
}

fn parse_u32(s: &str, what: &str) -> Result<u32> {
    s.parse()
        .map_err(|_| Error::Parse(format!("{what}={s:?} is not a non-negative integer")))
}

fn parse_element_list(s: &str) -> Result<SubsetMask> {
    let mut mask = SubsetMask::EMPTY;
    if s.is_empty() {
        return Ok(mask);
    }
    for part in s.split(',') {
        let e: u32 = part
            .parse()
            .map_err(|_| Error::Parse(format!("bad element {part:?} in A=")))?;
        if e >= crate::subset::MAX_GROUND {
            return Err(Error::Parse(format!("element {e} out of range in A=")));
        }
        if mask.contains(e) {
            return Err(Error::Parse(format!("duplicate element {e} in A=")));
        }
        mask = mask.with(e);
    }
    Ok(mask)
}

// Fact-style greedy rank over a raw oracle; shared with the enumeration
// module's counted version.
pub(crate) fn greedy_rank_raw(oracle: &dyn IndependenceOracle, n: u32) -> u32 {
    let mut held = SubsetMask::EMPTY;
    for e in 0..n {
        if oracle.is_independent(held.with(e)) {
            held = held.with(e);
        }
    }
    held.len()
}

/// Checks the independence-system axioms by exhaustive scan (n ≤ 12):
///
/// * I0 — the empty set is independent;
/// * I1 — deleting an element from an independent set keeps it independent
///   (single deletions suffice by induction);
/// * I2 — for independent A, B with |A| < |B| some element of B−A extends A.
pub fn verify_axioms(spec: &MatroidSpec) -> Result<bool> {
    verify_axioms_oracle(spec, spec.n())
}

/// [`verify_axioms`] over any oracle, for set systems without a spec.
pub fn verify_axioms_oracle(oracle: &dyn IndependenceOracle, n: u32) -> Result<bool> {
    if n > AXIOM_CAP {
        return Err(Error::Capacity {
            what: "axiom verification",
            value: n as u64,
            cap: AXIOM_CAP as u64,
        });
    }
    let table: Vec<bool> = subsets(n).map(|s| oracle.is_independent(s)).collect();
    if !table[0] {
        return Ok(false); // I0
    }
    let independent: Vec<SubsetMask> = subsets(n).filter(|s| table[s.bits() as usize]).collect();
    for &t in &independent {
        for e in t.elements() {
            if !table[t.without(e).bits() as usize] {
                return Ok(false); // I1
            }
        }
    }
    for &small in &independent {
        for &big in &independent {
            if small.len() >= big.len() {
                continue;
            }
            let grows = big
                .minus(small)
                .elements()
                .any(|v| table[small.with(v).bits() as usize]);
            if !grows {
                return Ok(false); // I2
            }
        }
    }
    Ok(true)
}
