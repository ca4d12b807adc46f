//! A classifier witness, written out as JSON and checked again from scratch.

use std::sync::Arc;

use gradlab::classify::{classify_submodule, naive, ModuleContext, Predicate};
use gradlab::config::StructureConfig;
use gradlab::report::WitnessJson;

fn main() -> gradlab::Result<()> {
    let config = StructureConfig::load(concat!(env!("CARGO_MANIFEST_DIR"), "/../../configs/m2-z8.json").as_ref())?;
    let s = config.build()?;
    let ctx = ModuleContext::new(Arc::clone(&s.module));
    let k = s.submodule("two")?;
    let p = Predicate::GradedCompletelyClassicalWeaklyPrime;
    let v = classify_submodule(&ctx, k, p)?;
    let w = v.witness.expect("M2(2Z8) is not completely classical weakly prime");
    let json = serde_json::to_string(&WitnessJson::from_witness(&s.module, &w)).expect("serializes");
    println!("witness: {json}");

    let back: WitnessJson = serde_json::from_str(&json).expect("parses");
    let replayed = back.to_witness(&s.module)?;
    println!("replays: {}", naive::recheck(&s.module, k, None, p, &replayed)?);
    Ok(())
}
