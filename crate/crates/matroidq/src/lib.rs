//! Matroid property toolkit.
//!
//! A matroid on ground set `{0, …, n−1}` is presented to every algorithm in this
//! crate as an *independence oracle*: a black box answering "is this subset
//! independent?". The crate provides
//!
//! * compact matroid descriptions with closed-form oracles ([`matroid`]),
//! * query counting around any oracle ([`oracle`]),
//! * brute-force reference computations — rank, closure, circuits, girth,
//!   Eulerian test — used as ground truth ([`enumerate`]),
//! * an exact simulation of Grover search with the standard unknown-solution-count
//!   driver loop ([`grover`]),
//! * query-efficient randomized deciders for uniformity, girth, pavingness,
//!   triviality and looplessness built on that search ([`algorithms`]),
//! * quantum adversary lower-bound certificates for the same problems
//!   ([`adversary`]).
//!
//! Everything is deterministic given a seed; randomized routines take an
//! explicit RNG stream (see [`rng`]).

pub mod adversary;
pub mod algorithms;
pub mod enumerate;
mod error;
pub mod grover;
pub mod matroid;
pub mod oracle;
pub mod rng;
pub mod subset;

pub use error::{Error, Result};
pub use matroid::{GirthValue, MatroidKind, MatroidSpec};
pub use oracle::{CountingOracle, IndependenceOracle, QueryReport};
pub use subset::SubsetMask;
