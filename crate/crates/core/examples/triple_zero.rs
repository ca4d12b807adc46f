//! Graded classical triple zeros of K = 0 in M2(Z8).

use std::sync::Arc;

use gradlab::classify::{find_classical_triple_zero, naive, triple_zeros, ModuleContext};
use gradlab::config::StructureConfig;

fn main() -> gradlab::Result<()> {
    let config = StructureConfig::load(concat!(env!("CARGO_MANIFEST_DIR"), "/../../configs/m2-z8.json").as_ref())?;
    let s = config.build()?;
    let ctx = ModuleContext::new(Arc::clone(&s.module));
    let k = s.submodule("zero")?;
    let r = s.module.ring().ring();

    let first = find_classical_triple_zero(&ctx, k)?.expect("K = 0 has a triple zero");
    let l: Vec<_> = first.l.iter().map(|&v| s.module.decode(v)).collect();
    println!("first: x = {:?}, y = {:?}, L generated by {l:?}", r.decode(first.x), r.decode(first.y));
    println!("total: {}", triple_zeros(&ctx, k)?.len());

    // x = y = 2I, L = A·2I
    let two = r.encode(&[2, 0, 0, 2])?;
    let l = s.module.encode(&[2, 0, 0, 2])?;
    println!("(2I, 2I, A·2I) is a triple zero: {}", naive::is_triple_zero(&s.module, k, two, two, &[l])?);
    Ok(())
}
