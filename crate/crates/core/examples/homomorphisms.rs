//! Quotients, inclusions, images and preimages of graded submodules.

use std::sync::Arc;

use gradlab::construct::{quotient_module, submodule_as_module};
use gradlab::graded::GradedRing;
use gradlab::module::GradedModule;
use gradlab::ring::FiniteRing;
use gradlab::substructure::{enumerate_graded_submodules, DEFAULT_LATTICE_CAP};

fn main() -> gradlab::Result<()> {
    let m = Arc::new(GradedModule::regular(Arc::new(GradedRing::trivial(FiniteRing::zmod(12)?))));
    let lat = enumerate_graded_submodules(&m, DEFAULT_LATTICE_CAP)?;
    let t = lat.iter().find(|k| k.len() == 3).expect("3Z12");
    let (q, p) = quotient_module(&m, t)?;
    println!("Z12 / 4Z12 has {} elements; kernel size {}", q.size(), p.kernel().len());
    for k in lat.iter() {
        println!("  |K| = {:>2}  ->  |p(K)| = {}", k.len(), p.image(k)?.len());
    }

    let n = lat.iter().find(|k| k.len() == 6).expect("2Z12");
    let (sub, incl) = submodule_as_module(&m, n)?;
    println!("2Z12 as a module: {} elements, injective {}", sub.size(), incl.is_injective());
    for k in lat.iter() {
        println!("  |K| = {:>2}  ->  |K ∩ N| = {}", k.len(), incl.preimage(k)?.len());
    }
    Ok(())
}
