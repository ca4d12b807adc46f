//! Lexicographically first structures separating pairs of predicates.

use gradlab::classify::Predicate;
use gradlab::lab::{search_separating_example, SearchOutcome};

fn main() -> gradlab::Result<()> {
    let pairs = [
        (Predicate::GradedClassicalWeaklyPrime, Predicate::GradedClassicalPrime, "zmod:2-12"),
        (Predicate::GradedWeaklyPrime, Predicate::GradedPrime, "zmod:2-12"),
        (Predicate::GradedClassicalWeaklyPrime, Predicate::GradedCompletelyClassicalWeaklyPrime, "matrix:2-4"),
        (Predicate::GradedPrime, Predicate::GradedClassicalPrime, "matrix-z2:2-3"),
    ];
    for (a, b, family) in pairs {
        match search_separating_example(a, b, family.parse()?)? {
            SearchOutcome::Found { structure, instance, .. } => {
                println!("{a} but not {b}: {structure}, {instance}")
            }
            SearchOutcome::Exhausted { searched } => {
                println!("{a} but not {b}: none among {}", searched.join(", "))
            }
        }
    }
    Ok(())
}
