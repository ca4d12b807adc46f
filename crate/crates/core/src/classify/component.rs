use rayon::prelude::*;

use super::context::ModuleContext;
use super::{Predicate, PredicateVerdict, Target, Witness};
use crate::bitset::MemberSet;
use crate::error::{Error, Result};
use crate::group::GroupElem;
use crate::substructure::Substructure;

/// Classifies a graded submodule `K` with respect to the component `M_g`.
pub fn classify_component(
    ctx: &ModuleContext,
    k: &Substructure,
    g: GroupElem,
    predicate: Predicate,
) -> Result<PredicateVerdict> {
    if predicate.target() != Target::Component {
        return Err(Error::input(format!("{predicate} is not a component predicate")));
    }
    let ki = ctx.index_of(k)?;
    let id = predicate.id();
    let comp = ctx.component_lattice(g)?;
    let mg = comp.last().expect("a lattice contains the whole component");
    if mg.is_subset(k) {
        return Ok(PredicateVerdict::hypothesis(id, format!("K_{g} = M_{g}")));
    }
    let rc = ctx.ring_context();
    let colons: Vec<MemberSet> = comp
        .par_iter()
        .map(|l| ctx.identity_colon(k, l.additive_gens()))
        .collect();
    let witness = if predicate == Predicate::GPrime {
        let whole = ctx.colon_whole(ki)?;
        let ideals = rc.identity_ideals()?;
        ideals.iter().find_map(|i| {
            if i.members().is_subset(&whole) {
                return None;
            }
            comp.iter().zip(&colons).find_map(|(l, colon)| {
                (!l.is_subset(k) && i.members().is_subset(colon)).then(|| Witness::IdealModule {
                    i: i.additive_gens().to_vec(),
                    l: l.additive_gens().to_vec(),
                })
            })
        })
    } else {
        let zero = Substructure::zero(ctx.module().size(), k.kind());
        let anns: Vec<MemberSet> = comp
            .par_iter()
            .map(|l| ctx.identity_colon(&zero, l.additive_gens()))
            .collect();
        let e = rc.identity_elements();
        (0..e.len()).into_par_iter().find_map_first(|xi| {
            (0..e.len()).find_map(|yi| {
                let gens = rc.xaey(xi, yi);
                (0..comp.len()).find_map(|li| {
                    let colon = &colons[li];
                    let hit = !colon.contains(e[xi])
                        && !colon.contains(e[yi])
                        && gens.iter().all(|&v| colon.contains(v))
                        && !gens.iter().all(|&v| anns[li].contains(v));
                    hit.then(|| Witness::Sandwich {
                        x: e[xi],
                        y: e[yi],
                        l: comp[li].additive_gens().to_vec(),
                    })
                })
            })
        })
    };
    Ok(PredicateVerdict::from_search(id, witness))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graded::GradedRing;
    use crate::group::FiniteGroup;
    use crate::module::GradedModule;
    use crate::ring::FiniteRing;
    use std::sync::Arc;

    fn m2z2() -> Arc<ModuleContext> {
        let ring = FiniteRing::matrix(&FiniteRing::zmod(2).unwrap(), 2).unwrap();
        let a = GradedRing::good_matrix_grading(ring, 2, FiniteGroup::cyclic(4).unwrap(), &[0, 2]).unwrap();
        ModuleContext::new(Arc::new(GradedModule::regular(Arc::new(a))))
    }

    #[test]
    fn zero_is_not_2_prime() {
        let ctx = m2z2();
        let r = ctx.ring().ring();
        let zero = &ctx.lattice().unwrap()[0];
        let v = classify_component(&ctx, zero, 2, Predicate::GPrime).unwrap();
        let e22 = r.encode(&[0, 0, 0, 1]).unwrap();
        let e12 = r.encode(&[0, 1, 0, 0]).unwrap();
        assert_eq!(
            v.witness,
            Some(Witness::IdealModule {
                i: vec![e22],
                l: vec![e12]
            })
        );
        for g in [0, 2] {
            assert!(classify_component(&ctx, zero, g, Predicate::GClassicalWeaklyPrime).unwrap().holds);
        }
    }

    #[test]
    fn full_component_is_a_hypothesis_failure() {
        let ctx = m2z2();
        let whole = ctx.lattice().unwrap().last().unwrap().clone();
        let v = classify_component(&ctx, &whole, 0, Predicate::GClassicalWeaklyPrime).unwrap();
        assert!(v.hypothesis_failure.is_some());
        assert!(classify_component(&ctx, &whole, 0, Predicate::GradedPrime).is_err());
    }
}
