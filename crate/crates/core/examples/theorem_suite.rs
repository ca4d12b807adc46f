//! The theorem suite over the shipped corpus, one line per theorem.

use gradlab::cli::load_corpus;
use gradlab::lab::{run_corpus, CorpusEntry, Theorem};

fn main() -> gradlab::Result<()> {
    let dir = concat!(env!("CARGO_MANIFEST_DIR"), "/../../corpus/default");
    let mut corpus = Vec::new();
    for (name, config) in load_corpus(dir.as_ref())? {
        corpus.push(CorpusEntry {
            name,
            module: config.build()?.module,
        });
    }
    println!("{:<32} {:>8} {:>8} {:>8} {:>6} {:>6}", "theorem", "checked", "held", "vacuous", "undet", "viol");
    for r in run_corpus(&Theorem::ALL, &corpus)? {
        println!(
            "{:<32} {:>8} {:>8} {:>8} {:>6} {:>6}",
            r.theorem,
            r.instances_checked,
            r.hypothesis_held,
            r.vacuous,
            r.undetermined,
            r.violations.len()
        );
    }
    Ok(())
}
