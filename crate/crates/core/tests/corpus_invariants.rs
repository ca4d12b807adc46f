//! Invariants checked exhaustively over the default corpus.

mod common;

use std::sync::Arc;

use gradlab::classify::{classify_submodule, find_classical_triple_zero, ModuleContext, Predicate};
use gradlab::construct::{quotient_module, submodule_as_module};
use gradlab::substructure::{is_graded, sum, intersect};

fn verdicts<'a>(ctx: &'a ModuleContext, k: &gradlab::substructure::Substructure) -> impl Fn(Predicate) -> bool + 'a {
    let k = k.clone();
    move |p| classify_submodule(ctx, &k, p).unwrap().holds
}

#[test]
fn hierarchy_and_commutative_coincidence() {
    use Predicate::*;
    for (name, m) in common::corpus() {
        let ctx = ModuleContext::new(Arc::clone(&m));
        let commutative = m.ring().ring().is_commutative();
        for k in ctx.lattice().unwrap().iter().filter(|k| !k.is_whole()) {
            let v = verdicts(&ctx, k);
            let at = || format!("{name} K={:?}", k.additive_gens());
            assert!(!v(GradedClassicalPrime) || v(GradedClassicalWeaklyPrime), "{}", at());
            assert!(!v(GradedClassicalWeaklyPrime) || v(GradedWeakly2Absorbing), "{}", at());
            assert!(
                !v(GradedCompletelyClassicalWeaklyPrime) || v(GradedCompletelyWeakly2Absorbing),
                "{}",
                at()
            );
            assert!(!v(GradedPrime) || v(GradedClassicalWeaklyPrime), "{}", at());
            if commutative {
                assert_eq!(v(GradedClassicalWeaklyPrime), v(GradedCompletelyClassicalWeaklyPrime), "{}", at());
                assert_eq!(v(GradedWeakly2Absorbing), v(GradedCompletelyWeakly2Absorbing), "{}", at());
            }
        }
    }
}

#[test]
fn triple_zero_exists_when_weakly_but_not_classically_prime() {
    let mut seen = 0;
    for (name, m) in common::corpus() {
        let ctx = ModuleContext::new(Arc::clone(&m));
        for k in ctx.lattice().unwrap().iter().filter(|k| !k.is_whole()) {
            let cwp = classify_submodule(&ctx, k, Predicate::GradedClassicalWeaklyPrime).unwrap().holds;
            let cp = classify_submodule(&ctx, k, Predicate::GradedClassicalPrime).unwrap().holds;
            if cwp && !cp {
                seen += 1;
                assert!(find_classical_triple_zero(&ctx, k).unwrap().is_some(), "{name}");
            }
        }
    }
    assert!(seen > 0);
}

#[test]
fn lattices_are_closed_under_sum_and_meet() {
    for (name, m) in common::corpus() {
        let lat = ModuleContext::new(Arc::clone(&m)).lattice().unwrap();
        for (i, a) in lat.iter().enumerate() {
            assert!(is_graded(m.grading(), m.additive(), a), "{name}");
            for b in &lat[i + 1..] {
                assert_ne!(a.members(), b.members(), "{name}: duplicate entry");
                let s = sum(m.additive(), a, b).unwrap();
                let t = intersect(m.additive(), a, b).unwrap();
                let listed = |x: &gradlab::substructure::Substructure| lat.iter().any(|y| y.members() == x.members());
                assert!(listed(&s) && listed(&t), "{name}");
            }
        }
    }
}

#[test]
fn images_and_preimages_are_graded() {
    for (name, m) in common::corpus() {
        let lat = ModuleContext::new(Arc::clone(&m)).lattice().unwrap();
        for t in lat.iter() {
            let (q, p) = quotient_module(&m, t).unwrap();
            let (n, incl) = submodule_as_module(&m, t).unwrap();
            for k in lat.iter() {
                let image = p.image(k).unwrap();
                assert!(is_graded(q.grading(), q.additive(), &image), "{name}");
                let pre = incl.preimage(k).unwrap();
                assert!(is_graded(n.grading(), n.additive(), &pre), "{name}");
                let back = p.preimage(&image).unwrap();
                assert!(is_graded(m.grading(), m.additive(), &back), "{name}");
            }
        }
    }
}
