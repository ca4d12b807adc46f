//! Faithfulness, left Duo rings, u-modules, multiplication modules, radicals.

use std::sync::Arc;

use gradlab::classify::{
    graded_radical, is_graded_multiplication, is_left_duo, is_u_module, is_u_module_exact, ModuleContext, RingScope,
    DEFAULT_COVER_BOUND,
};
use gradlab::graded::GradedRing;
use gradlab::group::FiniteGroup;
use gradlab::module::GradedModule;
use gradlab::ring::FiniteRing;
use gradlab::substructure::{Kind, Substructure};

fn main() -> gradlab::Result<()> {
    let z8 = Arc::new(GradedRing::trivial(FiniteRing::zmod(8)?));
    let zero = Substructure::zero(z8.size(), Kind::TwoSidedIdeal);
    let rad = graded_radical(&z8, &zero, RingScope::Whole)?;
    println!("Grad(0) in Z8: {:?}", rad.elements().collect::<Vec<_>>());

    let z2 = FiniteRing::zmod(2)?;
    let m2 = Arc::new(GradedRing::good_matrix_grading(
        FiniteRing::matrix(&z2, 2)?,
        2,
        FiniteGroup::cyclic(4)?,
        &[0, 2],
    )?);
    println!("M2(Z2) left Duo: {}", is_left_duo(&m2, RingScope::Whole).holds);
    println!("M2(Z2) A_e left Duo: {}", is_left_duo(&m2, RingScope::Identity).holds);

    let z4 = ModuleContext::new(Arc::new(GradedModule::regular(Arc::new(GradedRing::trivial(FiniteRing::zmod(4)?)))));
    let plane = ModuleContext::new(Arc::new(GradedModule::free(Arc::new(GradedRing::trivial(z2)), 2)?));
    for (name, ctx) in [("Z4 over Z4", &z4), ("Z2^2 over Z2", &plane)] {
        let v = is_u_module(ctx, 0, DEFAULT_COVER_BOUND)?;
        println!(
            "{name}: u-module {} (exact {}), graded multiplication {}",
            v.holds,
            is_u_module_exact(ctx, 0)?,
            is_graded_multiplication(ctx)?.holds
        );
        if let Some(w) = v.witness {
            println!("  cover {w:?}");
        }
    }
    Ok(())
}
