//! Randomised invariants of rings, gradings, closures, colons and radicals.

mod common;

use std::sync::{Arc, OnceLock};

use gradlab::classify::{graded_radical, RingScope};
use gradlab::config::{RingSpec, StructureConfig};
use gradlab::module::GradedModule;
use gradlab::ring::FiniteRing;
use gradlab::substructure::{
    closure, colon, enumerate_graded_submodules, enumerate_graded_two_sided_ideals, Ambient, Scalars, Universe,
    DEFAULT_LATTICE_CAP,
};
use proptest::prelude::*;

fn corpus() -> &'static [(String, Arc<GradedModule>)] {
    static CORPUS: OnceLock<Vec<(String, Arc<GradedModule>)>> = OnceLock::new();
    CORPUS.get_or_init(common::corpus)
}

fn member() -> impl Strategy<Value = usize> {
    0..corpus().len()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn multiplication_is_bilinear(i in member(), a in any::<u32>(), b in any::<u32>(), c in any::<u32>()) {
        let r = corpus()[i].1.ring().ring();
        let n = r.size() as u32;
        let (a, b, c) = (a % n, b % n, c % n);
        prop_assert_eq!(r.mul(r.add(a, b), c), r.add(r.mul(a, c), r.mul(b, c)));
        prop_assert_eq!(r.mul(c, r.add(a, b)), r.add(r.mul(c, a), r.mul(c, b)));
    }

    #[test]
    fn components_multiply_by_degree(i in member(), g in any::<usize>(), h in any::<usize>(), s in any::<usize>(), t in any::<usize>()) {
        let ring = corpus()[i].1.ring();
        let group = ring.group();
        let (g, h) = (g % group.order(), h % group.order());
        let (ag, ah) = (ring.component(g), ring.component(h));
        let (a, b) = (ag[s % ag.len()], ah[t % ah.len()]);
        let ab = ring.ring().mul(a, b);
        prop_assert!(ring.component(group.op(g, h)).contains(&ab));
    }

    #[test]
    fn homogeneous_parts_sum_back(i in member(), x in any::<u32>()) {
        let ring = corpus()[i].1.ring();
        let r = ring.ring();
        let x = x % r.size() as u32;
        let total = (0..ring.group().order()).fold(0, |acc, g| r.add(acc, ring.homogeneous_part(x, g)));
        prop_assert_eq!(total, x);
        for g in 0..ring.group().order() {
            let p = ring.homogeneous_part(x, g);
            prop_assert!(p == 0 || ring.degree_of(p) == Some(g));
        }
    }

    #[test]
    fn closure_is_idempotent_and_monotone(i in member(), gens in prop::collection::vec(any::<u32>(), 0..3), extra in any::<u32>()) {
        let m = &corpus()[i].1;
        let n = m.size() as u32;
        let gens: Vec<u32> = gens.into_iter().map(|x| x % n).collect();
        let k = closure(Ambient::Module(m), &gens, Scalars::Ring, None).unwrap();
        let again = closure(Ambient::Module(m), k.additive_gens(), Scalars::Ring, None).unwrap();
        prop_assert_eq!(k.members(), again.members());
        let mut more = gens.clone();
        more.push(extra % n);
        let bigger = closure(Ambient::Module(m), &more, Scalars::Ring, None).unwrap();
        prop_assert!(k.is_subset(&bigger));
    }

    #[test]
    fn colon_needs_only_generators(i in member(), ki in any::<usize>(), li in any::<usize>(), identity in any::<bool>()) {
        let m = &corpus()[i].1;
        let lat = enumerate_graded_submodules(m, DEFAULT_LATTICE_CAP).unwrap();
        let (k, l) = (&lat[ki % lat.len()], &lat[li % lat.len()]);
        let universe = if identity { Universe::Identity } else { Universe::Ring };
        let fast = colon(m, k, l.additive_gens(), universe).unwrap();
        let ring = m.ring();
        let scalars: Vec<u32> = if identity {
            ring.component(ring.identity())
        } else {
            ring.ring().elements().collect()
        };
        let slow: Vec<u32> = scalars.into_iter().filter(|&a| l.elements().all(|v| k.contains(m.act(a, v)))).collect();
        prop_assert_eq!(fast.elements().collect::<Vec<_>>(), slow);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn matrix_ring_sizes(n in 2u32..=8, k in 1usize..=2) {
        let r = FiniteRing::matrix(&FiniteRing::zmod(n).unwrap(), k).unwrap();
        prop_assert_eq!(r.size(), (n as usize).pow((k * k) as u32));
        prop_assert!(r.validate().is_ok());
        prop_assert!(r.elements().all(|a| r.mul(a, r.one()) == a && r.mul(r.one(), a) == a));
    }

    #[test]
    fn identity_component_is_a_subring(i in member()) {
        let ring = corpus()[i].1.ring();
        let ae = ring.component(ring.identity());
        prop_assert!(ae.contains(&ring.ring().one()));
        for &a in &ae {
            for &b in &ae {
                prop_assert!(ae.contains(&ring.ring().mul(a, b)));
            }
        }
    }

    #[test]
    fn graded_radical_is_idempotent(i in member(), pick in any::<usize>()) {
        let ring = corpus()[i].1.ring();
        prop_assume!(ring.ring().is_commutative());
        let ideals = enumerate_graded_two_sided_ideals(ring, DEFAULT_LATTICE_CAP).unwrap();
        let ideal = &ideals[pick % ideals.len()];
        let once = graded_radical(ring, ideal, RingScope::Whole).unwrap();
        let twice = graded_radical(ring, &once, RingScope::Whole).unwrap();
        prop_assert_eq!(once.members(), twice.members());
        prop_assert!(ideal.is_subset(&once));
    }

    #[test]
    fn digest_tracks_structure(a in 2u32..40, b in 2u32..40, name in "[a-z]{0,8}") {
        let x = StructureConfig { name: None, description: None, ring: RingSpec::Zmod(a), group: None, grading: Default::default(), module: Default::default(), submodules: Default::default() };
        let mut y = x.clone();
        y.ring = RingSpec::Zmod(b);
        y.name = Some(name);
        prop_assert_eq!(x.digest() == y.digest(), a == b);
    }
}
