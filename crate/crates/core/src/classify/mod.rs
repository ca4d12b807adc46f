//! Decision procedures for prime-like ideals and submodules.
//!
//! Every negative verdict carries a witness chosen lexicographically first in
//! the natural scan order, so results do not depend on the worker count.

mod component;
mod context;
mod ideal;
pub mod naive;
mod structure;
mod submodule;

use std::fmt;
use std::str::FromStr;

use crate::error::Error;
use crate::Elem;

pub use component::classify_component;
pub use context::{ModuleContext, RingContext};
pub use ideal::classify_ideal;
pub use structure::{
    all_nonzero_component_submodules_faithful, graded_radical, is_faithful, is_graded_multiplication, is_left_duo,
    is_u_module, is_u_module_exact, RingScope, DEFAULT_COVER_BOUND,
};
pub use submodule::{
    classify_submodule, find_classical_triple_zero, find_triple_zero_in, sandwich_test, triple_zeros, Sandwich,
    TripleZero,
};

/// Every predicate the classifiers decide.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Predicate {
    GradedPrimeIdeal,
    GradedWeaklyPrimeIdeal,
    GradedWeaklyPrimeElementwise,
    WeaklyPrimeLeftIdealOfAe,
    GradedPrime,
    GradedWeaklyPrime,
    GradedClassicalPrime,
    GradedClassicalWeaklyPrime,
    GradedCompletelyClassicalWeaklyPrime,
    GradedWeakly2Absorbing,
    GradedCompletelyWeakly2Absorbing,
    GPrime,
    GClassicalWeaklyPrime,
}

/// What a predicate is evaluated on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Target {
    Ideal,
    Submodule,
    Component,
}

impl Predicate {
    pub const ALL: [Predicate; 13] = [
        Predicate::GradedPrimeIdeal,
        Predicate::GradedWeaklyPrimeIdeal,
        Predicate::GradedWeaklyPrimeElementwise,
        Predicate::WeaklyPrimeLeftIdealOfAe,
        Predicate::GradedPrime,
        Predicate::GradedWeaklyPrime,
        Predicate::GradedClassicalPrime,
        Predicate::GradedClassicalWeaklyPrime,
        Predicate::GradedCompletelyClassicalWeaklyPrime,
        Predicate::GradedWeakly2Absorbing,
        Predicate::GradedCompletelyWeakly2Absorbing,
        Predicate::GPrime,
        Predicate::GClassicalWeaklyPrime,
    ];

    pub fn id(&self) -> &'static str {
        match self {
            Predicate::GradedPrimeIdeal => "graded-prime-ideal",
            Predicate::GradedWeaklyPrimeIdeal => "graded-weakly-prime-ideal",
            Predicate::GradedWeaklyPrimeElementwise => "graded-weakly-prime-elementwise",
            Predicate::WeaklyPrimeLeftIdealOfAe => "weakly-prime-left-ideal-of-Ae",
            Predicate::GradedPrime => "graded-prime",
            Predicate::GradedWeaklyPrime => "graded-weakly-prime",
            Predicate::GradedClassicalPrime => "graded-classical-prime",
            Predicate::GradedClassicalWeaklyPrime => "graded-classical-weakly-prime",
            Predicate::GradedCompletelyClassicalWeaklyPrime => "graded-completely-classical-weakly-prime",
            Predicate::GradedWeakly2Absorbing => "graded-weakly-2-absorbing",
            Predicate::GradedCompletelyWeakly2Absorbing => "graded-completely-weakly-2-absorbing",
            Predicate::GPrime => "g-prime",
            Predicate::GClassicalWeaklyPrime => "g-classical-weakly-prime",
        }
    }

    pub fn target(&self) -> Target {
        match self {
            Predicate::GradedPrimeIdeal
            | Predicate::GradedWeaklyPrimeIdeal
            | Predicate::GradedWeaklyPrimeElementwise
            | Predicate::WeaklyPrimeLeftIdealOfAe => Target::Ideal,
            Predicate::GPrime | Predicate::GClassicalWeaklyPrime => Target::Component,
            _ => Target::Submodule,
        }
    }
}

impl fmt::Display for Predicate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for Predicate {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        Predicate::ALL
            .iter()
            .copied()
            .find(|p| p.id() == s)
            .ok_or_else(|| Error::input(format!("unknown predicate `{s}`")))
    }
}

/// Data demonstrating a negative verdict. Substructures are given by
/// additive generators; their closure under the relevant action recovers them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Witness {
    /// Ring elements `x, y` and a submodule `L` (of `M`, or of `M_g`).
    Sandwich { x: Elem, y: Elem, l: Vec<Elem> },
    /// Ring elements `x, y` and a module element `z`.
    Elementwise { x: Elem, y: Elem, z: Elem },
    /// Ideal `I` and submodule `L`.
    IdealModule { i: Vec<Elem>, l: Vec<Elem> },
    /// Two ideals.
    IdealPair { i: Vec<Elem>, j: Vec<Elem> },
    /// Two ring elements.
    ElementPair { x: Elem, y: Elem },
    /// A ring element `x` and a basis element `b` with `x·b ∉ A·x`.
    NotRightClosed { x: Elem, b: Elem },
    /// A submodule covered by a union of others without lying in any.
    Cover { k: Vec<Elem>, cover: Vec<Vec<Elem>> },
    /// A single offending substructure.
    Substructure { k: Vec<Elem> },
}

/// Outcome of a classification.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PredicateVerdict {
    pub predicate: String,
    pub holds: bool,
    pub witness: Option<Witness>,
    pub hypothesis_failure: Option<String>,
    pub note: Option<String>,
}

impl PredicateVerdict {
    pub(crate) fn holds(predicate: impl Into<String>) -> Self {
        Self {
            predicate: predicate.into(),
            holds: true,
            witness: None,
            hypothesis_failure: None,
            note: None,
        }
    }

    pub(crate) fn fails(predicate: impl Into<String>, witness: Witness) -> Self {
        Self {
            predicate: predicate.into(),
            holds: false,
            witness: Some(witness),
            hypothesis_failure: None,
            note: None,
        }
    }

    pub(crate) fn from_search(predicate: impl Into<String>, witness: Option<Witness>) -> Self {
        match witness {
            Some(w) => Self::fails(predicate, w),
            None => Self::holds(predicate),
        }
    }

    pub(crate) fn hypothesis(predicate: impl Into<String>, why: impl Into<String>) -> Self {
        Self {
            predicate: predicate.into(),
            holds: false,
            witness: None,
            hypothesis_failure: Some(why.into()),
            note: None,
        }
    }

    pub(crate) fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }
}
