//! Every submodule predicate on the zero submodule of M2(Z8).

use std::sync::Arc;

use gradlab::classify::{classify_submodule, ModuleContext, Predicate, Target};
use gradlab::config::StructureConfig;

fn main() -> gradlab::Result<()> {
    let config = StructureConfig::load(concat!(env!("CARGO_MANIFEST_DIR"), "/../../configs/m2-z8.json").as_ref())?;
    let s = config.build()?;
    let ctx = ModuleContext::new(Arc::clone(&s.module));
    for name in ["zero", "two"] {
        let k = s.submodule(name)?;
        println!("K = {name}");
        for p in Predicate::ALL.into_iter().filter(|p| p.target() == Target::Submodule) {
            let v = classify_submodule(&ctx, k, p)?;
            println!("  {:<42} {}", p.id(), v.holds);
            if let Some(w) = &v.witness {
                println!("    witness {w:?}");
            }
        }
    }
    Ok(())
}
