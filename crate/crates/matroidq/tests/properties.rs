//! Randomized invariants over the whole library: index round-trips, file
//! round-trips, axiom checks on every construction, and agreement between
//! the closed-form oracles, their materializations, and the enumeration
//! reference computations.

use proptest::prelude::*;

use matroidq::algorithms::{
    decide_loopless_classical, decide_paving_classical, decide_uniform_classical, girth_classical,
};
use matroidq::enumerate::{
    girth_bruteforce, is_loopless_bruteforce, is_paving_bruteforce, is_trivial_bruteforce,
    is_uniform_bruteforce, rank_of, rank_of_exhaustive,
};
use matroidq::matroid::{verify_axioms, DeletedVariant, MatroidSpec};
use matroidq::subset::{binomial, colex_rank, colex_unrank, BitString, SubsetMask};

/// Any valid closed-form construction with ground set of at most `max_n`.
fn arb_closed_spec(max_n: u32) -> impl Strategy<Value = MatroidSpec> {
    let uniform = (1..=max_n).prop_flat_map(|n| {
        (Just(n), 0..=n).prop_map(|(n, r)| MatroidSpec::uniform(n, r).unwrap())
    });
    let deleted1 = (2..=max_n)
        .prop_flat_map(|n| (Just(n), 1..n))
        .prop_flat_map(|(n, r)| (Just(n), Just(r), 0..binomial(n, r)))
        .prop_map(|(n, r, i)| {
            let a = colex_unrank(i, n, r).unwrap();
            MatroidSpec::deleted_basis(n, r, a, DeletedVariant::One).unwrap()
        });
    let deleted2 = (2..=max_n / 2)
        .prop_flat_map(|r| (Just(2 * r), Just(r), 0..binomial(2 * r, r)))
        .prop_map(|(n, r, i)| {
            let a = colex_unrank(i, n, r).unwrap();
            MatroidSpec::deleted_basis(n, r, a, DeletedVariant::Two).unwrap()
        });
    let paving = (3..=max_n)
        .prop_flat_map(|n| (Just(n), 2..n))
        .prop_flat_map(|(n, r)| (Just(n), Just(r), 0..binomial(n, r - 1)))
        .prop_map(|(n, r, i)| {
            let a = colex_unrank(i, n, r - 1).unwrap();
            MatroidSpec::paving_counterexample(n, r, a).unwrap()
        });
    prop_oneof![uniform, deleted1, deleted2, paving]
}

/// A closed-form spec or one of its explicit-family materializations.
fn arb_spec_any_kind(max_n: u32) -> impl Strategy<Value = MatroidSpec> {
    (arb_closed_spec(max_n), 0..3u8).prop_map(|(spec, form)| match form {
        0 => spec,
        1 => spec.materialize_basis_family().unwrap(),
        _ => spec.materialize_subset_family().unwrap(),
    })
}

proptest! {
    /// colex_unrank is the inverse of colex_rank on every (n, k) level.
    #[test]
    fn colex_round_trip((n, k, index) in (1..=20u32)
        .prop_flat_map(|n| (Just(n), 0..=n))
        .prop_flat_map(|(n, k)| (Just(n), Just(k), 0..binomial(n, k))))
    {
        let mask = colex_unrank(index, n, k).unwrap();
        prop_assert_eq!(mask.len(), k);
        prop_assert!(mask.elements().all(|e| e < n));
        prop_assert_eq!(colex_rank(mask), index);
    }

    /// Serialization survives a parse for every kind, including families.
    #[test]
    fn file_round_trip(spec in arb_spec_any_kind(8)) {
        let text = spec.to_file_string();
        let back = MatroidSpec::parse(&text).unwrap();
        prop_assert_eq!(back, spec);
    }

    /// Every construction this crate offers really is a matroid.
    #[test]
    fn constructions_satisfy_axioms(spec in arb_closed_spec(7)) {
        prop_assert!(verify_axioms(&spec).unwrap());
    }

    /// The greedy rank sweep agrees with the exhaustive definition on
    /// arbitrary subsets, not just the full ground set.
    #[test]
    fn greedy_rank_is_exhaustive_rank((spec, bits) in arb_closed_spec(8)
        .prop_flat_map(|spec| {
            let n = spec.n();
            (Just(spec), 0..(1u64 << n))
        }))
    {
        let s = SubsetMask::new(bits, spec.n()).unwrap();
        prop_assert_eq!(rank_of(&spec, s), rank_of_exhaustive(&spec, s));
    }

    /// Deterministic scan deciders agree with the enumeration classifiers.
    #[test]
    fn classical_deciders_match_enumeration(spec in arb_spec_any_kind(8)) {
        let n = spec.n();
        prop_assert_eq!(
            decide_uniform_classical(&spec, n).answer,
            is_uniform_bruteforce(&spec, n).unwrap()
        );
        prop_assert_eq!(
            decide_paving_classical(&spec, n).answer,
            is_paving_bruteforce(&spec, n).unwrap()
        );
        prop_assert_eq!(
            decide_loopless_classical(&spec, n).answer,
            is_loopless_bruteforce(&spec, n)
        );
        prop_assert_eq!(girth_classical(&spec, n).girth, girth_bruteforce(&spec, n).unwrap());
    }

    /// Materializing to a base family or a full truth table never changes
    /// a single oracle answer.
    #[test]
    fn materializations_preserve_the_oracle(spec in arb_closed_spec(7)) {
        let n = spec.n();
        let by_bases = spec.materialize_basis_family().unwrap();
        let by_table = spec.materialize_subset_family().unwrap();
        for bits in 0..(1u64 << n) {
            let s = SubsetMask::new(bits, n).unwrap();
            prop_assert_eq!(spec.is_independent_set(s), by_bases.is_independent_set(s));
            prop_assert_eq!(spec.is_independent_set(s), by_table.is_independent_set(s));
        }
        // Triviality and looplessness are oracle-level notions, so they
        // must survive re-encoding too.
        prop_assert_eq!(is_trivial_bruteforce(&spec, n), is_trivial_bruteforce(&by_table, n));
        prop_assert_eq!(is_loopless_bruteforce(&spec, n), is_loopless_bruteforce(&by_bases, n));
    }

    /// ASCII payload round-trip for arbitrary bit strings.
    #[test]
    fn bitstring_ascii_round_trip(bits in proptest::collection::vec(any::<bool>(), 0..200)) {
        let mut s = BitString::new_filled(bits.len(), false);
        for (i, &b) in bits.iter().enumerate() {
            s.set(i, b);
        }
        let ascii = s.to_ascii();
        prop_assert_eq!(ascii.len(), bits.len());
        let back = BitString::from_ascii(&ascii).unwrap();
        prop_assert_eq!(back, s);
    }
}
