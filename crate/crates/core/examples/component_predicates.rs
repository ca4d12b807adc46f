//! g-prime and g-classical-weakly-prime on the components of M2(Z2).

use std::sync::Arc;

use gradlab::classify::{all_nonzero_component_submodules_faithful, classify_component, ModuleContext, Predicate};
use gradlab::graded::GradedRing;
use gradlab::group::FiniteGroup;
use gradlab::module::GradedModule;
use gradlab::ring::FiniteRing;

fn main() -> gradlab::Result<()> {
    let z2 = FiniteRing::zmod(2)?;
    let a = Arc::new(GradedRing::good_matrix_grading(
        FiniteRing::matrix(&z2, 2)?,
        2,
        FiniteGroup::cyclic(4)?,
        &[0, 2],
    )?);
    let ctx = ModuleContext::new(Arc::new(GradedModule::regular(a.clone())));
    let lat = ctx.lattice()?;
    let zero = &lat[0];
    for g in 0..a.group().order() {
        if a.component(g).len() == 1 {
            continue;
        }
        let faithful = all_nonzero_component_submodules_faithful(&ctx, g)?;
        println!("g = {g}: nonzero A_e-submodules of M_g all faithful: {faithful}");
        for p in [Predicate::GPrime, Predicate::GClassicalWeaklyPrime] {
            let v = classify_component(&ctx, zero, g, p)?;
            println!("  K = 0 {:<28} {}  {:?}", p.id(), v.holds, v.witness);
        }
    }
    Ok(())
}
