//! Prime and weakly prime ideals of Z8 and of A_e in M2(Z4).

use std::sync::Arc;

use gradlab::classify::{classify_ideal, Predicate, RingContext};
use gradlab::graded::GradedRing;
use gradlab::group::FiniteGroup;
use gradlab::ring::FiniteRing;
use gradlab::substructure::{enumerate_identity_left_ideals, DEFAULT_LATTICE_CAP};

fn main() -> gradlab::Result<()> {
    let z8 = RingContext::new(Arc::new(GradedRing::trivial(FiniteRing::zmod(8)?)));
    let preds = [
        Predicate::GradedPrimeIdeal,
        Predicate::GradedWeaklyPrimeIdeal,
        Predicate::GradedWeaklyPrimeElementwise,
    ];
    for p in z8.graded_left_ideals()?.iter() {
        print!("Z8 ideal of size {}:", p.len());
        for pred in preds {
            print!("  {}={}", pred.id(), classify_ideal(&z8, p, pred)?.holds);
        }
        println!();
    }

    let z4 = FiniteRing::zmod(4)?;
    let a = Arc::new(GradedRing::good_matrix_grading(
        FiniteRing::matrix(&z4, 2)?,
        2,
        FiniteGroup::cyclic(4)?,
        &[0, 2],
    )?);
    let rc = RingContext::new(a.clone());
    let ideals = enumerate_identity_left_ideals(&a, DEFAULT_LATTICE_CAP)?;
    let weakly_prime = ideals
        .iter()
        .filter(|p| classify_ideal(&rc, p, Predicate::WeaklyPrimeLeftIdealOfAe).is_ok_and(|v| v.holds))
        .count();
    println!("M2(Z4): {weakly_prime} of {} left ideals of A_e are weakly prime", ideals.len());
    Ok(())
}
