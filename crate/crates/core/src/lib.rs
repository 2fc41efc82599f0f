//! Priority-queue transduction of permutation pattern classes.
//!
//! A priority queue fed an input permutation `σ` can emit a family of output
//! permutations `τ`; the set of such `(σ, τ)` pairs is the allowable relation
//! `A`. Given a pattern class `C = Av(B)` this crate decides membership in the
//! output class `C·A` and the input class `A·C`, and searches for minimal bases
//! of `C·A` up to a length bound.
//!
//! The crate is `no_std` and only needs `alloc`. Parallel drivers, text and
//! JSON formats and the command line live in the `pqclass` crate.

#![no_std]

extern crate alloc;

mod error;
pub mod basis;
pub mod class;
pub mod family;
pub mod machine;
pub mod pattern;
pub mod perm;
pub mod poset;

pub use basis::{basis_of_ca, basis_of_ca_with, BasisReport, RankMapper, SearchStats, Serial};
pub use class::{
    chain_test_member, in_ac, in_ca, in_ca_oracle, is_weak_closed, witness_patterns,
    PatternClass, MAX_DUAL_LEN,
};
pub use error::Error;
pub use family::{family_2431, verify_family_member, FamilyReport};
pub use machine::{
    all_outputs, is_allowable_forbidden, is_allowable_sim, pair_contains, PQState,
    PermutationPair,
};
pub use pattern::{avoids_all, contains, PatternMatcher};
pub use perm::{
    all_permutations, inflation_members, pattern_of, CellKind, InflationSkeleton, Permutation,
    PointSequence,
};
pub use poset::{build_poset, build_poset_recursive, is_allowable_poset, LinearExtensions, TauPoset};

pub type Result<T> = core::result::Result<T, Error>;
