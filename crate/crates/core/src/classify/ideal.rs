use rayon::prelude::*;

use super::context::RingContext;
use super::{Predicate, PredicateVerdict, Target, Witness};
use crate::bitset::MemberSet;
use crate::error::{Error, Result};
use crate::substructure::{is_graded, Substructure};
use crate::Elem;

/// Classifies a left ideal `P` of `A` (or of `A_e`, for
/// [`Predicate::WeaklyPrimeLeftIdealOfAe`]).
pub fn classify_ideal(rc: &RingContext, p: &Substructure, predicate: Predicate) -> Result<PredicateVerdict> {
    if predicate.target() != Target::Ideal {
        return Err(Error::input(format!("{predicate} is not an ideal predicate")));
    }
    let ring = rc.ring();
    let r = ring.ring();
    if p.domain() != ring.size() {
        return Err(Error::Incompatible("P does not live in this ring".into()));
    }
    let id = predicate.id();
    if predicate == Predicate::WeaklyPrimeLeftIdealOfAe {
        if let Some(x) = p.elements().find(|&x| rc.e_index(x).is_none()) {
            return Err(Error::Incompatible(format!("{:?} lies outside A_e", r.decode(x))));
        }
        if !is_left_closed(rc, p, rc.identity_basis()) {
            return Err(Error::Incompatible("P is not a left ideal of A_e".into()));
        }
        if p.len() == rc.identity_elements().len() {
            return Ok(PredicateVerdict::hypothesis(id, "P is not proper"));
        }
        let ideals = rc.identity_ideals()?;
        return Ok(PredicateVerdict::from_search(id, ideal_pair_scan(rc, p, &ideals, true)));
    }
    if !is_left_closed(rc, p, rc.basis()) || !is_graded(ring.grading(), r.additive(), p) {
        return Err(Error::Incompatible("P is not a graded left ideal".into()));
    }
    if p.is_whole() {
        return Ok(PredicateVerdict::hypothesis(id, "P is not proper"));
    }
    let witness = match predicate {
        Predicate::GradedPrimeIdeal => ideal_pair_scan(rc, p, &rc.graded_left_ideals()?, false),
        Predicate::GradedWeaklyPrimeIdeal => ideal_pair_scan(rc, p, &rc.graded_left_ideals()?, true),
        _ => elementwise_scan(rc, p),
    };
    Ok(PredicateVerdict::from_search(id, witness))
}

fn is_left_closed(rc: &RingContext, p: &Substructure, scalars: &[Elem]) -> bool {
    let r = rc.ring().ring();
    p.additive_gens()
        .iter()
        .all(|&x| scalars.iter().all(|&b| p.contains(r.mul(b, x))))
}

/// First `(I, J)` with `IJ ⊆ P` (and `IJ ≠ 0` when `weak`), `I ⊄ P`, `J ⊄ P`.
fn ideal_pair_scan(rc: &RingContext, p: &Substructure, ideals: &[Substructure], weak: bool) -> Option<Witness> {
    let r = rc.ring().ring();
    let outside: Vec<bool> = ideals.iter().map(|i| !i.is_subset(p)).collect();
    // For each J: the elements a with aJ ⊆ P and with aJ = 0.
    let per_j: Vec<(MemberSet, MemberSet)> = ideals
        .par_iter()
        .map(|j| {
            let size = r.size();
            let mut into_p = MemberSet::empty(size);
            let mut kills = MemberSet::empty(size);
            for a in 0..size as Elem {
                let prods = j.additive_gens().iter().map(|&y| r.mul(a, y));
                let mut inside = true;
                let mut zero = true;
                for v in prods {
                    inside &= p.contains(v);
                    zero &= v == 0;
                }
                if inside {
                    into_p.insert(a);
                }
                if zero {
                    kills.insert(a);
                }
            }
            (into_p, kills)
        })
        .collect();
    (0..ideals.len()).into_par_iter().find_map_first(|ii| {
        if !outside[ii] {
            return None;
        }
        let i = &ideals[ii];
        (0..ideals.len()).find_map(|ji| {
            if !outside[ji] {
                return None;
            }
            let (into_p, kills) = &per_j[ji];
            let contained = i.additive_gens().iter().all(|&x| into_p.contains(x));
            let nonzero = !i.additive_gens().iter().all(|&x| kills.contains(x));
            (contained && (!weak || nonzero)).then(|| Witness::IdealPair {
                i: i.additive_gens().to_vec(),
                j: ideals[ji].additive_gens().to_vec(),
            })
        })
    })
}

/// First `(x, y) ∈ h(A)²` with `0 ≠ xAy ⊆ P`, `x ∉ P`, `y ∉ P`.
fn elementwise_scan(rc: &RingContext, p: &Substructure) -> Option<Witness> {
    let h = rc.homogeneous();
    (0..h.len()).into_par_iter().find_map_first(|xi| {
        if p.contains(h[xi]) {
            return None;
        }
        (0..h.len()).find_map(|yi| {
            if p.contains(h[yi]) {
                return None;
            }
            let gens = rc.xay(xi, yi);
            let contained = gens.iter().all(|&g| p.contains(g));
            let nonzero = gens.iter().any(|&g| g != 0);
            (contained && nonzero).then_some(Witness::ElementPair { x: h[xi], y: h[yi] })
        })
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graded::GradedRing;
    use crate::ring::FiniteRing;
    use std::sync::Arc;

    fn z8() -> Arc<RingContext> {
        RingContext::new(Arc::new(GradedRing::trivial(FiniteRing::zmod(8).unwrap())))
    }

    #[test]
    fn weakly_prime_ideals_of_z8() {
        let rc = z8();
        let ideals = rc.graded_left_ideals().unwrap();
        let (zero, four, two, whole) = (&ideals[0], &ideals[1], &ideals[2], &ideals[3]);
        let v = classify_ideal(&rc, two, Predicate::GradedWeaklyPrimeIdeal).unwrap();
        assert!(v.holds);
        let v = classify_ideal(&rc, four, Predicate::GradedWeaklyPrimeIdeal).unwrap();
        assert!(!v.holds);
        assert_eq!(
            v.witness,
            Some(Witness::IdealPair {
                i: two.additive_gens().to_vec(),
                j: two.additive_gens().to_vec()
            })
        );
        assert!(classify_ideal(&rc, zero, Predicate::GradedWeaklyPrimeIdeal).unwrap().holds);
        assert!(!classify_ideal(&rc, zero, Predicate::GradedPrimeIdeal).unwrap().holds);
        let v = classify_ideal(&rc, whole, Predicate::GradedPrimeIdeal).unwrap();
        assert!(v.hypothesis_failure.is_some());
    }

    #[test]
    fn elementwise_matches_ideal_form_in_z8() {
        let rc = z8();
        for p in rc.graded_left_ideals().unwrap().iter().filter(|p| !p.is_whole()) {
            let a = classify_ideal(&rc, p, Predicate::GradedWeaklyPrimeIdeal).unwrap().holds;
            let b = classify_ideal(&rc, p, Predicate::GradedWeaklyPrimeElementwise).unwrap().holds;
            assert_eq!(a, b);
        }
    }

    #[test]
    fn ae_variant_and_kind_checks() {
        let rc = z8();
        let ideals = rc.identity_ideals().unwrap();
        assert!(classify_ideal(&rc, &ideals[2], Predicate::WeaklyPrimeLeftIdealOfAe).unwrap().holds);
        assert!(!classify_ideal(&rc, &ideals[1], Predicate::WeaklyPrimeLeftIdealOfAe).unwrap().holds);
        assert!(classify_ideal(&rc, &ideals[1], Predicate::GradedPrime).is_err());
    }
}
