//! Adversary lower-bound relations and their parameter verification.
//!
//! Each relation pits the base-indicator encoding of a uniform matroid
//! against a family of near-uniform constructions that flip the target
//! property, over strings of length C(n,r) (one bit per r-set, colex order).
//! The parameters (m, m′, l, l′) are recomputed exhaustively from the
//! realized strings — nothing is taken on faith from a formula — and the
//! lower bound √(m·m′/(l·l′)) is reported as an exact rational under the
//! radical so goldens never depend on floating-point printing.

use crate::error::{Error, Result};
use crate::matroid::{DeletedVariant, MatroidSpec};
use crate::subset::{binomial, colex_rank, ksubsets, BitString};

/// Largest ground set for which relations are materialized.
pub const ADVERSARY_CAP: u32 = 8;

/// The three relation constructions.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RelationKind {
    /// Uniform U_{r,n} against every single-base deletion A¹_{r,n}.
    UniformVsDeleted1,
    /// Non-Eulerian U_{r,2r} against the Eulerian double deletions A²_{r,2r}.
    EulerianEven,
    /// Paving U_{r,n} against every non-paving M_A, |A| = r−1.
    PavingVsCounter,
}

impl RelationKind {
    pub fn as_str(self) -> &'static str {
        match self {
            RelationKind::UniformVsDeleted1 => "uniformVsDeleted1",
            RelationKind::EulerianEven => "eulerianEven",
            RelationKind::PavingVsCounter => "pavingVsCounter",
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "uniformVsDeleted1" => Ok(RelationKind::UniformVsDeleted1),
            "eulerianEven" => Ok(RelationKind::EulerianEven),
            "pavingVsCounter" => Ok(RelationKind::PavingVsCounter),
            other => Err(Error::Parse(format!("unknown relation kind '{other}'"))),
        }
    }

    /// The rank each relation kind is stated at for ground size n.
    pub fn bound_rank(self, n: u32) -> u32 {
        match self {
            RelationKind::UniformVsDeleted1 => n / 2,
            RelationKind::EulerianEven => n / 2,
            RelationKind::PavingVsCounter => n / 2 + 1,
        }
    }
}

/// A fully materialized relation: every string in `x_strings` is related to
/// every string in `y_strings` (the membership rule is the full product).
#[derive(Clone, Debug)]
pub struct RelationSpec {
    pub kind: RelationKind,
    pub n: u32,
    pub r: u32,
    /// Base-indicator encodings on the property-holds side (a single
    /// uniform matroid for all three constructions).
    pub x_strings: Vec<BitString>,
    /// Encodings on the property-fails side, one per admissible choice.
    pub y_strings: Vec<BitString>,
}

/// An exact value √(num/den).
#[derive(Clone, Copy, Debug)]
pub struct RadicalBound {
    pub num: u64,
    pub den: u64,
}

impl RadicalBound {
    pub fn approx(self) -> f64 {
        (self.num as f64 / self.den as f64).sqrt()
    }

    /// Value equality of √(num/den) across non-reduced fractions.
    pub fn same_value(self, other: RadicalBound) -> bool {
        (self.num as u128) * (other.den as u128) == (other.num as u128) * (self.den as u128)
    }
}

impl std::fmt::Display for RadicalBound {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.den == 1 {
            write!(f, "sqrt({})", self.num)
        } else {
            write!(f, "sqrt({}/{})", self.num, self.den)
        }
    }
}

/// Exhaustively counted adversary parameters of a relation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct AdversaryParams {
    /// Minimum number of related y over the x strings.
    pub m: u64,
    /// Minimum number of related x over the y strings.
    pub m_prime: u64,
    /// Maximum over (x, bit position) of related y differing there.
    pub l: u64,
    /// Maximum over (y, bit position) of related x differing there.
    pub l_prime: u64,
}

impl AdversaryParams {
    pub fn bound(self) -> RadicalBound {
        RadicalBound {
            num: self.m * self.m_prime,
            den: self.l * self.l_prime,
        }
    }
}

fn encode(spec: &MatroidSpec) -> Result<BitString> {
    let materialized = spec.materialize_basis_family()?;
    Ok(materialized.family().expect("explicit family").clone())
}

/// Builds one of the three relations at the given size and rank.
pub fn build_relation(kind: RelationKind, n: u32, r: u32) -> Result<RelationSpec> {
    if n > ADVERSARY_CAP {
        return Err(Error::Capacity {
            what: "adversary relation ground set",
            value: n as u64,
            cap: ADVERSARY_CAP as u64,
        });
    }
    let y_strings = match kind {
        RelationKind::UniformVsDeleted1 => ksubsets(n, r)
            .map(|a| encode(&MatroidSpec::deleted_basis(n, r, a, DeletedVariant::One)?))
            .collect::<Result<Vec<_>>>()?,
        RelationKind::EulerianEven => {
            if n < 4 || n % 2 != 0 || r != n / 2 {
                return Err(Error::InvalidParameter(format!(
                    "double deletion needs even n ≥ 4 with r = n/2, got n={n} r={r}"
                )));
            }
            // A and V−A describe the same matroid: keep the lexicographically
            // earlier representative of each pair
            ksubsets(n, r)
                .filter(|&a| colex_rank(a) < colex_rank(a.complement(n)))
                .map(|a| encode(&MatroidSpec::deleted_basis(n, r, a, DeletedVariant::Two)?))
                .collect::<Result<Vec<_>>>()?
        }
        RelationKind::PavingVsCounter => {
            if r < 1 {
                return Err(Error::InvalidParameter(
                    "excluded-set construction needs r ≥ 1".into(),
                ));
            }
            ksubsets(n, r - 1)
                .map(|a| encode(&MatroidSpec::paving_counterexample(n, r, a)?))
                .collect::<Result<Vec<_>>>()?
        }
    };
    let x_strings = vec![encode(&MatroidSpec::uniform(n, r)?)?];
    Ok(RelationSpec {
        kind,
        n,
        r,
        x_strings,
        y_strings,
    })
}

/// Counts (m, m′, l, l′) by direct enumeration over the full product
/// relation. With every pair related, m and m′ are the family sizes, and
/// l/l′ scan every string against every bit position of the other side.
pub fn relation_params(spec: &RelationSpec) -> Result<AdversaryParams> {
    if spec.x_strings.is_empty() || spec.y_strings.is_empty() {
        return Err(Error::InvalidParameter("relation has an empty side".into()));
    }
    let positions = binomial(spec.n, spec.r) as usize;
    let m = spec.y_strings.len() as u64;
    let m_prime = spec.x_strings.len() as u64;
    let mut l = 0u64;
    for x in &spec.x_strings {
        for i in 0..positions {
            let differing = spec
                .y_strings
                .iter()
                .filter(|y| x.get(i) != y.get(i))
                .count() as u64;
            l = l.max(differing);
        }
    }
    let mut l_prime = 0u64;
    for y in &spec.y_strings {
        for i in 0..positions {
            let differing = spec
                .x_strings
                .iter()
                .filter(|x| x.get(i) != y.get(i))
                .count() as u64;
            l_prime = l_prime.max(differing);
        }
    }
    if l == 0 || l_prime == 0 {
        return Err(Error::InvalidParameter(
            "relation sides never differ; no bound applies".into(),
        ));
    }
    Ok(AdversaryParams {
        m,
        m_prime,
        l,
        l_prime,
    })
}

/// The closed-form bound for each relation kind at ground size n, with the rank
/// fixed by [`RelationKind::bound_rank`].
pub fn theoretical_bound(kind: RelationKind, n: u32) -> Result<RadicalBound> {
    if n < 2 {
        return Err(Error::InvalidParameter(format!(
            "bound needs n ≥ 2, got {n}"
        )));
    }
    let half = binomial(n, n / 2);
    match kind {
        RelationKind::UniformVsDeleted1 => Ok(RadicalBound { num: half, den: 1 }),
        RelationKind::EulerianEven => {
            if n < 4 || n % 2 != 0 {
                return Err(Error::InvalidParameter(format!(
                    "double-deletion bound needs even n ≥ 4, got {n}"
                )));
            }
            Ok(RadicalBound { num: half, den: 2 })
        }
        RelationKind::PavingVsCounter => {
            if n < 3 {
                return Err(Error::InvalidParameter(format!(
                    "excluded-set bound needs n ≥ 3, got {n}"
                )));
            }
            Ok(RadicalBound {
                num: half,
                den: (n / 2 + 1) as u64,
            })
        }
    }
}
