//! The colon reduction in `sandwich_test` against the naive double loop over
//! `a ∈ A` (or `A_e`) and `l ∈ L`.

mod common;

use std::sync::Arc;

use gradlab::classify::{naive, sandwich_test, ModuleContext, Sandwich};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const INSTANCES: usize = 3000;

#[test]
fn sandwich_agrees_with_naive_loop() {
    let mut structures: Vec<_> = common::corpus()
        .into_iter()
        .map(|(name, m)| {
            let ctx = ModuleContext::new(Arc::clone(&m));
            let lat = ctx.lattice().unwrap();
            (name, m, lat)
        })
        .collect();
    structures.sort_by(|a, b| a.0.cmp(&b.0));
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let mut counts = [0usize; 3];
    for _ in 0..INSTANCES {
        let (name, m, lat) = structures.choose(&mut rng).unwrap();
        let ring = m.ring();
        let r = ring.ring();
        let h = ring.homogeneous_elements();
        let x = *h.choose(&mut rng).unwrap();
        let y = *h.choose(&mut rng).unwrap();
        let l = lat.choose(&mut rng).unwrap();
        let k = lat.choose(&mut rng).unwrap();
        let identity_only = rng.gen_bool(0.3);
        let (gens, all): (Vec<u32>, Vec<u32>) = if identity_only {
            (ring.component_basis(ring.identity()), ring.component(ring.identity()))
        } else {
            (r.basis_elems(), r.elements().collect())
        };
        let fast = sandwich_test(m, x, y, &gens, l, k);
        let (contained, nonzero) = naive::sandwich(m, x, y, &all, l, k);
        let slow = match (contained, nonzero) {
            (false, _) => Sandwich::NotContained,
            (true, false) => Sandwich::ProductZero,
            (true, true) => Sandwich::Holds,
        };
        assert_eq!(fast, slow, "{name}: x={x} y={y} L={:?} K={:?}", l.additive_gens(), k.additive_gens());
        counts[slow as usize] += 1;
    }
    // Every outcome occurs, so agreement is not trivial.
    assert!(counts.iter().all(|&c| c > 0), "{counts:?}");
}
