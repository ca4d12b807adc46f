use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use serde::Serialize;
use serde_json::{json, Value};

use super::subject::Subject;
use crate::classify::{classify_ideal, Predicate, RingContext, Target};
use crate::error::{Error, Result};
use crate::graded::GradedRing;
use crate::group::FiniteGroup;
use crate::module::GradedModule;
use crate::ring::FiniteRing;
use crate::substructure::enumerate_identity_left_ideals;

/// A parameterised family of regular modules.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    /// `ℤ_n`, trivially graded, for `n` in the range.
    Zmod { lo: u32, hi: u32 },
    /// `M₂(ℤ_n)` with the `ℤ₄` good grading `σ = (0, 2)`.
    Matrix { lo: u32, hi: u32 },
    /// `M₂(ℤ_n)` with the `ℤ₂` good grading `σ = (0, 1)`.
    MatrixZ2 { lo: u32, hi: u32 },
}

impl Family {
    fn range(&self) -> (u32, u32) {
        match *self {
            Family::Zmod { lo, hi } | Family::Matrix { lo, hi } | Family::MatrixZ2 { lo, hi } => (lo, hi),
        }
    }

    /// Members in increasing `n`, each as `(name, module)`.
    pub fn members(&self) -> impl Iterator<Item = Result<(String, Arc<GradedModule>)>> + '_ {
        let (lo, hi) = self.range();
        (lo..=hi).map(move |n| {
            let base = FiniteRing::zmod(n)?;
            let (name, ring) = match self {
                Family::Zmod { .. } => (format!("Z{n}"), GradedRing::trivial(base)),
                Family::Matrix { .. } => (
                    format!("M2(Z{n}) Z4-graded"),
                    GradedRing::good_matrix_grading(FiniteRing::matrix(&base, 2)?, 2, FiniteGroup::cyclic(4)?, &[0, 2])?,
                ),
                Family::MatrixZ2 { .. } => (
                    format!("M2(Z{n}) Z2-graded"),
                    GradedRing::good_matrix_grading(FiniteRing::matrix(&base, 2)?, 2, FiniteGroup::cyclic(2)?, &[0, 1])?,
                ),
            };
            Ok((name, Arc::new(GradedModule::regular(Arc::new(ring)))))
        })
    }
}

impl FromStr for Family {
    type Err = Error;

    /// `zmod:LO-HI`, `matrix:LO-HI` or `matrix-z2:LO-HI`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::input(format!("family `{s}` is not of the form KIND:LO-HI"));
        let (kind, range) = s.split_once(':').ok_or_else(bad)?;
        let (lo, hi) = range.split_once('-').ok_or_else(bad)?;
        let lo: u32 = lo.trim().parse().map_err(|_| bad())?;
        let hi: u32 = hi.trim().parse().map_err(|_| bad())?;
        if lo < 2 || hi < lo {
            return Err(Error::input(format!("family range {lo}-{hi} must satisfy 2 ≤ LO ≤ HI")));
        }
        match kind.trim() {
            "zmod" => Ok(Family::Zmod { lo, hi }),
            "matrix" => Ok(Family::Matrix { lo, hi }),
            "matrix-z2" => Ok(Family::MatrixZ2 { lo, hi }),
            other => Err(Error::input(format!("unknown family kind `{other}`"))),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (lo, hi) = self.range();
        let kind = match self {
            Family::Zmod { .. } => "zmod",
            Family::Matrix { .. } => "matrix",
            Family::MatrixZ2 { .. } => "matrix-z2",
        };
        write!(f, "{kind}:{lo}-{hi}")
    }
}

/// Result of a separating search. Exhaustion says nothing beyond the family.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "outcome", rename_all = "snake_case")]
pub enum SearchOutcome {
    Found {
        structure: String,
        holds: String,
        fails: String,
        instance: Value,
    },
    Exhausted {
        searched: Vec<String>,
    },
}

/// First structure of `family`, then first instance in lattice order, on which
/// `holds` is true and `fails` is false.
pub fn search_separating_example(holds: Predicate, fails: Predicate, family: Family) -> Result<SearchOutcome> {
    if holds.target() != fails.target() {
        return Err(Error::input(format!(
            "{holds} and {fails} apply to different kinds of substructure"
        )));
    }
    let mut searched = Vec::new();
    for member in family.members() {
        let (name, module) = member?;
        let subject = Subject::new(&name, module);
        if let Some(instance) = first_instance(&subject, holds, fails)? {
            return Ok(SearchOutcome::Found {
                structure: name,
                holds: holds.id().into(),
                fails: fails.id().into(),
                instance,
            });
        }
        searched.push(name);
    }
    Ok(SearchOutcome::Exhausted { searched })
}

fn first_instance(s: &Subject, a: Predicate, b: Predicate) -> Result<Option<Value>> {
    match a.target() {
        Target::Submodule => {
            for ki in s.proper()? {
                if s.holds(ki, a)? && !s.holds(ki, b)? {
                    return Ok(Some(json!({"K": s.gens(ki)?})));
                }
            }
        }
        Target::Component => {
            let lat = s.lattice()?;
            let group = s.module().ring().group();
            for ki in 0..lat.len() {
                for g in 0..group.order() {
                    if s.holds_at(ki, g, a)? && !s.holds_at(ki, g, b)? {
                        return Ok(Some(json!({"K": s.gens(ki)?, "g": group.element_to_vec(g)})));
                    }
                }
            }
        }
        Target::Ideal => {
            let rc: &Arc<RingContext> = s.ctx().ring_context();
            let candidates = if a == Predicate::WeaklyPrimeLeftIdealOfAe {
                Arc::new(enumerate_identity_left_ideals(rc.ring(), rc.cap())?)
            } else {
                rc.graded_left_ideals()?
            };
            for p in candidates.iter() {
                if classify_ideal(rc, p, a)?.holds && !classify_ideal(rc, p, b)?.holds {
                    return Ok(Some(json!({"P": s.ring_coords(p.additive_gens())})));
                }
            }
        }
    }
    Ok(None)
}
