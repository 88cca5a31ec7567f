//! Command line front end: argument grammar and the invariant suites.
//!
//! The binary itself is a thin dispatcher; everything testable lives here.

pub mod args;
pub mod suite;

pub use suite::{run_suite, CheckResult, SuiteKind, SuiteOptions, SuiteReport};
