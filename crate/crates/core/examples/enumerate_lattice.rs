//! Graded-submodule lattices and the various ideal families.

use std::sync::Arc;

use gradlab::graded::GradedRing;
use gradlab::group::FiniteGroup;
use gradlab::module::GradedModule;
use gradlab::ring::FiniteRing;
use gradlab::substructure::{
    enumerate_graded_submodules, enumerate_graded_two_sided_ideals, enumerate_identity_ideals, enumerate_submodules,
    DEFAULT_LATTICE_CAP,
};

fn main() -> gradlab::Result<()> {
    let z4 = FiniteRing::zmod(4)?;
    let a = Arc::new(GradedRing::good_matrix_grading(
        FiniteRing::matrix(&z4, 2)?,
        2,
        FiniteGroup::cyclic(4)?,
        &[0, 2],
    )?);
    let m = GradedModule::regular(a.clone());

    let graded = enumerate_graded_submodules(&m, DEFAULT_LATTICE_CAP)?;
    let all = enumerate_submodules(&m, DEFAULT_LATTICE_CAP)?;
    println!("M2(Z4): {} graded submodules out of {} submodules", graded.len(), all.len());
    for k in graded.iter() {
        let gens: Vec<_> = k.additive_gens().iter().map(|&x| m.decode(x)).collect();
        println!("  |K| = {:>3}  generators {gens:?}", k.len());
    }
    println!("graded two-sided ideals: {}", enumerate_graded_two_sided_ideals(&a, DEFAULT_LATTICE_CAP)?.len());
    println!("ideals of A_e: {}", enumerate_identity_ideals(&a, DEFAULT_LATTICE_CAP)?.len());

    match enumerate_submodules(&m, 3) {
        Err(e) => println!("with cap 3: {e}"),
        Ok(v) => println!("with cap 3: {} entries", v.len()),
    }
    Ok(())
}
