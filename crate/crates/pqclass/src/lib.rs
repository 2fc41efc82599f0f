//! Command-line companion for `pqclass-core`: text formats, a rayon driver
//! for the basis search and the reproduction suites behind `pqclass verify`.

pub mod parallel;
pub mod suites;
pub mod text;

pub use parallel::Parallel;
pub use suites::{run_suite, run_suite_named, Check, Suite, SuiteOptions, SuiteResult};
pub use text::{format_class, parse_class, parse_inflation, parse_permutation, parse_point_sequence, TextError};
