//! A verification laboratory for inversion sequences avoiding pairs of
//! length-3 patterns.
//!
//! The crate enumerates avoidance classes exhaustively, evaluates the known
//! closed forms and counting recurrences, executes the constructive
//! bijections between the classes and classical objects (set partitions,
//! Dyck paths, ordered trees), and verifies the generating-function
//! identities as exact truncated power series over the rationals.

pub mod bijections;
pub mod closed_forms;
pub mod core;
pub mod enumerate;
pub mod recurrences;
pub mod series;
pub mod tables;

pub use crate::core::{
    avoids_all, avoids_triple, contains_pattern, lehmer_code, InvSeq, Pattern, Permutation, Rel,
    RelTriple, StatVector, Statistic,
};
pub use enumerate::PatternSet;
