#![allow(dead_code)]

use std::collections::{BTreeSet, HashSet};
use std::path::Path;
use std::sync::Arc;

use gradlab::cli::load_corpus;
use gradlab::config::{Structure, StructureConfig};
use gradlab::module::GradedModule;

pub fn repo(rel: &str) -> String {
    format!("{}/../../{rel}", env!("CARGO_MANIFEST_DIR"))
}

/// The default corpus, in file order.
pub fn corpus() -> Vec<(String, Arc<GradedModule>)> {
    load_corpus(Path::new(&repo("corpus/default")))
        .expect("corpus loads")
        .into_iter()
        .map(|(name, c)| (name, c.build().expect("corpus builds").module))
        .collect()
}

pub fn small_corpus(limit: usize) -> Vec<(String, Arc<GradedModule>)> {
    corpus().into_iter().filter(|(_, m)| m.size() <= limit).collect()
}

pub fn config(rel: &str) -> (StructureConfig, Structure) {
    let c = StructureConfig::load(Path::new(&repo(rel))).expect("config loads");
    let s = c.build().expect("config builds");
    (c, s)
}

pub type Set = BTreeSet<u32>;

/// `⟨S, x⟩ = ⋃ₖ (k·x + S)` for a subgroup `S`, stopping once `k·x ∈ S`.
pub fn extend(m: &GradedModule, s: &Set, x: u32) -> Set {
    let mut out = s.clone();
    let mut kx = x;
    while !s.contains(&kx) {
        out.extend(s.iter().map(|&v| m.add(kx, v)));
        kx = m.add(kx, x);
    }
    out
}

/// Every additive subgroup, grown from `{0}` one element at a time.
pub fn all_subgroups(m: &GradedModule) -> Vec<Set> {
    let zero: Set = [0].into();
    let mut seen: HashSet<Set> = HashSet::from([zero.clone()]);
    let mut queue = vec![zero];
    while let Some(s) = queue.pop() {
        for x in 0..m.size() as u32 {
            if s.contains(&x) {
                continue;
            }
            let t = extend(m, &s, x);
            if seen.insert(t.clone()) {
                queue.push(t);
            }
        }
    }
    seen.into_iter().collect()
}

pub fn is_submodule(m: &GradedModule, s: &Set) -> bool {
    let r = m.ring().ring();
    s.iter().all(|&v| r.elements().all(|a| s.contains(&m.act(a, v))))
}

pub fn is_graded(m: &GradedModule, s: &Set) -> bool {
    let n = m.ring().group().order();
    s.iter().all(|&v| {
        let c = m.decode(v);
        (0..n).all(|g| {
            let part: Vec<i64> = c
                .iter()
                .enumerate()
                .map(|(i, &x)| if m.grading().degree_of_basis(i) == g { x as i64 } else { 0 })
                .collect();
            s.contains(&m.encode(&part).unwrap())
        })
    })
}

/// Graded submodules by brute force: every additive subgroup, filtered.
pub fn graded_submodules_by_filter(m: &GradedModule) -> BTreeSet<Set> {
    all_subgroups(m)
        .into_iter()
        .filter(|s| is_submodule(m, s) && is_graded(m, s))
        .collect()
}
