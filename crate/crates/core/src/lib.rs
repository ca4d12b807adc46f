//! Finite group-graded rings and modules, with exhaustive classifiers for
//! prime-like submodules and an executable theorem lab.

pub mod additive;
pub mod bitset;
pub mod classify;
pub mod cli;
pub mod config;
pub mod construct;
pub mod error;
pub mod graded;
pub mod group;
pub mod hom;
pub mod lab;
pub mod module;
pub mod report;
pub mod ring;
pub mod substructure;

/// Index of an element in a finite additive group.
pub type Elem = u32;

pub use error::{Error, Result};
