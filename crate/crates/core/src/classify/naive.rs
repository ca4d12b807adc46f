//! Definitional checks that iterate over every element instead of using
//! generators and colon reductions. They are slow and serve as oracles for the
//! optimized classifiers and for re-checking witnesses.

use super::{Predicate, Target, Witness};
use crate::error::{Error, Result};
use crate::graded::GradedRing;
use crate::group::GroupElem;
use crate::module::GradedModule;
use crate::substructure::{
    closure, enumerate_component_submodules, enumerate_graded_left_ideals, enumerate_graded_submodules,
    enumerate_graded_two_sided_ideals, enumerate_identity_ideals, enumerate_left_ideals, is_graded, Ambient, Scalars,
    Substructure, DEFAULT_LATTICE_CAP,
};
use crate::Elem;

/// `{a : a·m ∈ K for every m ∈ M}`, by brute force.
pub fn colon_whole(m: &GradedModule, k: &Substructure) -> Vec<Elem> {
    m.ring()
        .ring()
        .elements()
        .filter(|&a| m.additive().elements().all(|v| k.contains(m.act(a, v))))
        .collect()
}

/// `(contained, nonzero)` for the set `{x·a·y·l : a ∈ middle, l ∈ L}` against `K`.
pub fn sandwich(m: &GradedModule, x: Elem, y: Elem, middle: &[Elem], l: &Substructure, k: &Substructure) -> (bool, bool) {
    let r = m.ring().ring();
    let mut contained = true;
    let mut nonzero = false;
    for &a in middle {
        let xay = r.mul(r.mul(x, a), y);
        for v in l.elements() {
            let w = m.act(xay, v);
            contained &= k.contains(w);
            nonzero |= w != 0;
        }
    }
    (contained, nonzero)
}

fn maps_into(m: &GradedModule, x: Elem, l: &Substructure, k: &Substructure) -> bool {
    l.elements().all(|v| k.contains(m.act(x, v)))
}

/// Whether `(x, y, L)` is a graded classical triple zero of `K`: `x, y`
/// homogeneous, `L` graded, `xAyL = 0`, `xL ⊄ K` and `yL ⊄ K`.
pub fn is_triple_zero(m: &GradedModule, k: &Substructure, x: Elem, y: Elem, l_gens: &[Elem]) -> Result<bool> {
    let ring = m.ring();
    let l = closure(Ambient::Module(m), l_gens, Scalars::Ring, None)?;
    if !is_graded(m.grading(), m.additive(), &l) {
        return Err(Error::NotGraded("witness submodule is not graded".into()));
    }
    let all: Vec<Elem> = ring.ring().elements().collect();
    let (_, nonzero) = sandwich(m, x, y, &all, &l, k);
    Ok(ring.is_homogeneous(x)
        && ring.is_homogeneous(y)
        && !nonzero
        && !maps_into(m, x, &l, k)
        && !maps_into(m, y, &l, k))
}

/// `(IL ⊆ K, IL ≠ 0)` over all elements of `I` and `L`.
fn ideal_times(m: &GradedModule, i: &Substructure, l: &Substructure, k: &Substructure) -> (bool, bool) {
    let mut contained = true;
    let mut nonzero = false;
    for a in i.elements() {
        for v in l.elements() {
            let w = m.act(a, v);
            contained &= k.contains(w);
            nonzero |= w != 0;
        }
    }
    (contained, nonzero)
}

fn middle_of(ring: &GradedRing, target: Target) -> Vec<Elem> {
    match target {
        Target::Component => ring.component(ring.identity()),
        _ => ring.ring().elements().collect(),
    }
}

/// Whether `witness` is a genuine violation of `predicate` for `K`.
/// `g` is required for component predicates.
pub fn recheck(m: &GradedModule, k: &Substructure, g: Option<GroupElem>, predicate: Predicate, witness: &Witness) -> Result<bool> {
    let ring = m.ring();
    let r = ring.ring();
    let target = predicate.target();
    if target == Target::Ideal {
        return Err(Error::input("use recheck_ideal for ideal predicates"));
    }
    let g = match (target, g) {
        (Target::Component, None) => return Err(Error::input("component predicates need a degree")),
        (_, g) => g,
    };
    let whole = colon_whole(m, k);
    let in_whole = |a: Elem| whole.binary_search(&a).is_ok();
    let scalars = if target == Target::Component { Scalars::Identity } else { Scalars::Ring };
    let submodule = |gens: &[Elem]| -> Result<Substructure> {
        let l = closure(Ambient::Module(m), gens, scalars, if target == Target::Component { g } else { None })?;
        if !is_graded(m.grading(), m.additive(), &l) {
            return Err(Error::NotGraded("witness submodule is not graded".into()));
        }
        Ok(l)
    };
    let homogeneous = |x: Elem| match target {
        Target::Component => ring.degree_of(x) == Some(ring.identity()) || x == 0,
        _ => ring.is_homogeneous(x),
    };
    Ok(match (predicate, witness) {
        (
            Predicate::GradedClassicalPrime
            | Predicate::GradedClassicalWeaklyPrime
            | Predicate::GradedWeakly2Absorbing
            | Predicate::GClassicalWeaklyPrime,
            Witness::Sandwich { x, y, l },
        ) => {
            let l = submodule(l)?;
            let middle = middle_of(ring, target);
            let (contained, nonzero) = sandwich(m, *x, *y, &middle, &l, k);
            let weak = predicate != Predicate::GradedClassicalPrime;
            let absorbing = predicate == Predicate::GradedWeakly2Absorbing
                && middle.iter().any(|&a| !in_whole(r.mul(r.mul(*x, a), *y)));
            homogeneous(*x)
                && homogeneous(*y)
                && contained
                && (!weak || nonzero)
                && !maps_into(m, *x, &l, k)
                && !maps_into(m, *y, &l, k)
                && (predicate != Predicate::GradedWeakly2Absorbing || absorbing)
        }
        (
            Predicate::GradedCompletelyClassicalWeaklyPrime | Predicate::GradedCompletelyWeakly2Absorbing,
            Witness::Elementwise { x, y, z },
        ) => {
            let xyz = m.act(r.mul(*x, *y), *z);
            let absorbing = predicate == Predicate::GradedCompletelyWeakly2Absorbing;
            homogeneous(*x)
                && homogeneous(*y)
                && m.is_homogeneous(*z)
                && xyz != 0
                && k.contains(xyz)
                && !k.contains(m.act(*x, *z))
                && !k.contains(m.act(*y, *z))
                && (!absorbing || !in_whole(r.mul(*x, *y)))
        }
        (Predicate::GradedPrime | Predicate::GradedWeaklyPrime | Predicate::GPrime, Witness::IdealModule { i, l }) => {
            let i = closure(Ambient::TwoSidedIdeals(ring), i, scalars, None)?;
            let l = submodule(l)?;
            let (contained, nonzero) = ideal_times(m, &i, &l, k);
            let weak = predicate == Predicate::GradedWeaklyPrime;
            contained && (!weak || nonzero) && !l.is_subset(k) && i.elements().any(|a| !in_whole(a))
        }
        _ => return Err(Error::input(format!("witness shape does not match {predicate}"))),
    })
}

/// Whether `witness` is a genuine violation of an ideal predicate for `P`.
pub fn recheck_ideal(ring: &GradedRing, p: &Substructure, predicate: Predicate, witness: &Witness) -> Result<bool> {
    let r = ring.ring();
    let identity = predicate == Predicate::WeaklyPrimeLeftIdealOfAe;
    let scalars = if identity { Scalars::Identity } else { Scalars::Ring };
    let middle = if identity {
        ring.component(ring.identity())
    } else {
        r.elements().collect()
    };
    Ok(match (predicate, witness) {
        (
            Predicate::GradedPrimeIdeal | Predicate::GradedWeaklyPrimeIdeal | Predicate::WeaklyPrimeLeftIdealOfAe,
            Witness::IdealPair { i, j },
        ) => {
            let ambient = if identity {
                Ambient::TwoSidedIdeals(ring)
            } else {
                Ambient::LeftIdeals(ring)
            };
            let i = closure(ambient, i, scalars, None)?;
            let j = closure(ambient, j, scalars, None)?;
            let mut contained = true;
            let mut nonzero = false;
            for a in i.elements() {
                for b in j.elements() {
                    let c = r.mul(a, b);
                    contained &= p.contains(c);
                    nonzero |= c != 0;
                }
            }
            let weak = predicate != Predicate::GradedPrimeIdeal;
            contained && (!weak || nonzero) && !i.is_subset(p) && !j.is_subset(p)
        }
        (Predicate::GradedWeaklyPrimeElementwise, Witness::ElementPair { x, y }) => {
            let prods: Vec<Elem> = middle.iter().map(|&a| r.mul(r.mul(*x, a), *y)).collect();
            ring.is_homogeneous(*x)
                && ring.is_homogeneous(*y)
                && prods.iter().all(|&c| p.contains(c))
                && prods.iter().any(|&c| c != 0)
                && !p.contains(*x)
                && !p.contains(*y)
        }
        _ => return Err(Error::input(format!("witness shape does not match {predicate}"))),
    })
}

/// Full definitional evaluation of a submodule or component predicate.
/// Hypothesis failures count as `false`.
pub fn holds(m: &GradedModule, k: &Substructure, g: Option<GroupElem>, predicate: Predicate) -> Result<bool> {
    let ring = m.ring();
    let r = ring.ring();
    let target = predicate.target();
    let whole = colon_whole(m, k);
    let in_whole = |a: Elem| whole.binary_search(&a).is_ok();
    let (lattice, scalars_h, ideals) = match target {
        Target::Submodule => {
            if k.is_whole() {
                return Ok(false);
            }
            let ideals = if matches!(predicate, Predicate::GradedPrime | Predicate::GradedWeaklyPrime) {
                enumerate_graded_two_sided_ideals(ring, DEFAULT_LATTICE_CAP)?
            } else {
                Vec::new()
            };
            (enumerate_graded_submodules(m, DEFAULT_LATTICE_CAP)?, ring.homogeneous_elements(), ideals)
        }
        Target::Component => {
            let g = g.ok_or_else(|| Error::input("component predicates need a degree"))?;
            if m.component(g).iter().all(|&v| k.contains(v)) {
                return Ok(false);
            }
            let ideals = if predicate == Predicate::GPrime {
                enumerate_identity_ideals(ring, DEFAULT_LATTICE_CAP)?
            } else {
                Vec::new()
            };
            (
                enumerate_component_submodules(m, g, DEFAULT_LATTICE_CAP)?,
                ring.component(ring.identity()),
                ideals,
            )
        }
        Target::Ideal => return Err(Error::input("use ideal_holds for ideal predicates")),
    };
    let middle = middle_of(ring, target);
    let hm = m.homogeneous_elements();
    let violation = match predicate {
        Predicate::GradedPrime | Predicate::GradedWeaklyPrime | Predicate::GPrime => ideals.iter().any(|i| {
            lattice.iter().any(|l| {
                let (contained, nonzero) = ideal_times(m, i, l, k);
                let weak = predicate == Predicate::GradedWeaklyPrime;
                contained && (!weak || nonzero) && !l.is_subset(k) && i.elements().any(|a| !in_whole(a))
            })
        }),
        Predicate::GradedCompletelyClassicalWeaklyPrime | Predicate::GradedCompletelyWeakly2Absorbing => {
            scalars_h.iter().any(|&x| {
                scalars_h.iter().any(|&y| {
                    hm.iter().any(|&z| {
                        let xyz = m.act(r.mul(x, y), z);
                        xyz != 0
                            && k.contains(xyz)
                            && !k.contains(m.act(x, z))
                            && !k.contains(m.act(y, z))
                            && (predicate == Predicate::GradedCompletelyClassicalWeaklyPrime || !in_whole(r.mul(x, y)))
                    })
                })
            })
        }
        _ => scalars_h.iter().any(|&x| {
            scalars_h.iter().any(|&y| {
                let absorbed = predicate == Predicate::GradedWeakly2Absorbing
                    && middle.iter().all(|&a| in_whole(r.mul(r.mul(x, a), y)));
                !absorbed
                    && lattice.iter().any(|l| {
                        let (contained, nonzero) = sandwich(m, x, y, &middle, l, k);
                        contained
                            && (predicate == Predicate::GradedClassicalPrime || nonzero)
                            && !maps_into(m, x, l, k)
                            && !maps_into(m, y, l, k)
                    })
            })
        }),
    };
    Ok(!violation)
}

/// Full definitional evaluation of an ideal predicate.
pub fn ideal_holds(ring: &GradedRing, p: &Substructure, predicate: Predicate) -> Result<bool> {
    let r = ring.ring();
    let identity = predicate == Predicate::WeaklyPrimeLeftIdealOfAe;
    let domain_size = if identity { ring.component(ring.identity()).len() } else { ring.size() };
    if p.len() == domain_size {
        return Ok(false);
    }
    let violation = match predicate {
        Predicate::GradedWeaklyPrimeElementwise => {
            let h = ring.homogeneous_elements();
            let all: Vec<Elem> = r.elements().collect();
            h.iter().any(|&x| {
                h.iter().any(|&y| {
                    let prods = all.iter().map(|&a| r.mul(r.mul(x, a), y));
                    !p.contains(x)
                        && !p.contains(y)
                        && prods.clone().all(|c| p.contains(c))
                        && prods.into_iter().any(|c| c != 0)
                })
            })
        }
        _ => {
            let ideals = if identity {
                enumerate_identity_ideals(ring, DEFAULT_LATTICE_CAP)?
            } else {
                enumerate_graded_left_ideals(ring, DEFAULT_LATTICE_CAP)?
            };
            let weak = predicate != Predicate::GradedPrimeIdeal;
            ideals.iter().any(|i| {
                ideals.iter().any(|j| {
                    let mut contained = true;
                    let mut nonzero = false;
                    for a in i.elements() {
                        for b in j.elements() {
                            let c = r.mul(a, b);
                            contained &= p.contains(c);
                            nonzero |= c != 0;
                        }
                    }
                    contained && (!weak || nonzero) && !i.is_subset(p) && !j.is_subset(p)
                })
            })
        }
    };
    Ok(!violation)
}

/// Left Duo by checking every left ideal of `A` for closure under right
/// multiplication.
pub fn left_duo_by_ideals(ring: &GradedRing) -> Result<bool> {
    let r = ring.ring();
    let all: Vec<Elem> = r.elements().collect();
    Ok(enumerate_left_ideals(ring, DEFAULT_LATTICE_CAP)?
        .iter()
        .all(|i| i.elements().all(|x| all.iter().all(|&a| i.contains(r.mul(x, a))))))
}
