//! Rings, gradings and modules, built in code and from a config file.

use std::sync::Arc;

use gradlab::config::StructureConfig;
use gradlab::graded::GradedRing;
use gradlab::group::FiniteGroup;
use gradlab::module::GradedModule;
use gradlab::ring::FiniteRing;

fn main() -> gradlab::Result<()> {
    let z8 = FiniteRing::zmod(8)?;
    let m2 = FiniteRing::matrix(&z8, 2)?;
    let a = Arc::new(GradedRing::good_matrix_grading(m2, 2, FiniteGroup::cyclic(4)?, &[0, 2])?);
    println!("M2(Z8): {} elements, commutative: {}", a.size(), a.ring().is_commutative());
    for g in 0..a.group().order() {
        println!("  A_{g}: {} elements", a.component(g).len());
    }
    println!("  homogeneous elements: {}", a.homogeneous_elements().len());

    let z4 = Arc::new(GradedRing::trivial(FiniteRing::zmod(4)?));
    let m = GradedModule::free(z4, 2)?;
    println!("Z4^2 over Z4: {} elements, rank {}", m.size(), m.rank());
    match GradedModule::free(a, 2) {
        Ok(big) => println!("M2(Z8)^2: {} elements", big.size()),
        Err(e) => println!("M2(Z8)^2: {e}"),
    }

    let text = r#"{"ring": {"product": [{"zmod": 2}, {"zmod": 4}]}, "submodules": {"left": [[1, 0]]}}"#;
    let config = StructureConfig::from_json(text)?;
    let s = config.build()?;
    println!("Z2 x Z4 from JSON: {} elements, digest {}", s.module.size(), &config.digest()[..16]);
    println!("  `left` has {} elements", s.submodule("left")?.len());
    Ok(())
}
