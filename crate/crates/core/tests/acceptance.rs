//! Acceptance run: one PASS/FAIL line per criterion, non-zero exit on any FAIL.

mod common;

use std::process::{Command, ExitCode};
use std::sync::Arc;
use std::time::{Duration, Instant};

use gradlab::classify::{
    classify_component, classify_ideal, classify_submodule, find_classical_triple_zero, graded_radical, is_left_duo,
    is_u_module, naive, sandwich_test, ModuleContext, Predicate, RingContext, RingScope, Sandwich, Witness,
    DEFAULT_COVER_BOUND,
};
use gradlab::lab::{run_corpus, CorpusEntry, Theorem};
use gradlab::substructure::{closure, enumerate_graded_submodules, Ambient, Kind, Scalars, Substructure, DEFAULT_LATTICE_CAP};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;

fn ensure(ok: bool, msg: impl Into<String>) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn gradlab(args: &[&str], workers: usize) -> (i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_gradlab"))
        .args(args)
        .current_dir(common::repo(""))
        .env("GRADLAB_WORKERS", workers.to_string())
        .output()
        .expect("binary runs");
    (out.status.code().unwrap_or(-1), String::from_utf8_lossy(&out.stdout).into_owned())
}

fn example_reproduction() -> Outcome {
    let (_, s) = common::config("configs/m2-z8.json");
    let ctx = ModuleContext::new(Arc::clone(&s.module));
    let k = s.submodule("zero").map_err(|e| e.to_string())?;
    let cwp = classify_submodule(&ctx, k, Predicate::GradedClassicalWeaklyPrime).map_err(|e| e.to_string())?;
    let cp = classify_submodule(&ctx, k, Predicate::GradedClassicalPrime).map_err(|e| e.to_string())?;
    ensure(cwp.holds, "K = 0 is not graded classical weakly prime")?;
    ensure(!cp.holds, "K = 0 is graded classical prime")?;
    let tz = find_classical_triple_zero(&ctx, k).map_err(|e| e.to_string())?;
    ensure(tz.is_some(), "no triple zero found")?;
    let (code, out) = gradlab(
        &["triple-zero", "configs/m2-z8.json", "--submodule", "zero", "--check-witness", "configs/m2-z8-triple-zero.json"],
        2,
    );
    ensure(code == 0 && out.contains("\"reproduces\":true"), format!("--check-witness exit {code}: {out}"))?;
    Ok("K = 0 in M2(Z8): cwp true, cp false, triple zero found, (2I, 2I, A·2I) replays".into())
}

/// 2×2 matrices over ℤ₈ as `[[a, b], [c, d]]`.
type Mat = [[u32; 2]; 2];

fn mat_mul(a: Mat, b: Mat) -> Mat {
    let mut c = [[0; 2]; 2];
    for i in 0..2 {
        for j in 0..2 {
            c[i][j] = (0..2).map(|t| a[i][t] * b[t][j]).sum::<u32>() % 8;
        }
    }
    c
}

fn surrogate_examples() -> Outcome {
    let (_, s) = common::config("configs/m2-z8.json");
    let ctx = ModuleContext::new(Arc::clone(&s.module));
    let k = s.submodule("two").map_err(|e| e.to_string())?;
    let p = Predicate::GradedCompletelyClassicalWeaklyPrime;
    ensure(!classify_submodule(&ctx, k, p).map_err(|e| e.to_string())?.holds, "M2(2Z8) is completely cwp")?;

    let (x, y, z): (Mat, Mat, Mat) = ([[1, 0], [0, 2]], [[0, 1], [1, 0]], [[1, 0], [0, 4]]);
    let in_k = |m: Mat| m.iter().flatten().all(|&v| v % 2 == 0);
    let xyz = mat_mul(mat_mul(x, y), z);
    ensure(xyz != [[0; 2]; 2] && in_k(xyz), "xyz is zero or outside K")?;
    ensure(!in_k(mat_mul(x, z)) && !in_k(mat_mul(y, z)), "xz or yz lies in K")?;
    let flat = |m: Mat| [m[0][0] as i64, m[0][1] as i64, m[1][0] as i64, m[1][1] as i64];
    let r = s.module.ring().ring();
    let w = Witness::Elementwise {
        x: r.encode(&flat(x)).unwrap(),
        y: r.encode(&flat(y)).unwrap(),
        z: s.module.encode(&flat(z)).unwrap(),
    };
    ensure(naive::recheck(&s.module, k, None, p, &w).unwrap_or(false), "explicit witness fails the definitional check")?;

    let (_, s2) = common::config("configs/m2-z2.json");
    let ctx2 = ModuleContext::new(Arc::clone(&s2.module));
    let zero = s2.submodule("zero").map_err(|e| e.to_string())?;
    let g = s2.module.ring().group().element_from_vec(&[2]).unwrap();
    let v = classify_component(&ctx2, zero, g, Predicate::GPrime).map_err(|e| e.to_string())?;
    ensure(!v.holds, "K = 0 is 2-prime in M2(Z2)")?;
    let Some(Witness::IdealModule { i, l }) = &v.witness else {
        return Err(format!("unexpected witness {:?}", v.witness));
    };
    let ring = s2.module.ring();
    let ideal = closure(Ambient::TwoSidedIdeals(ring), i, Scalars::Identity, None).map_err(|e| e.to_string())?;
    let sub = closure(Ambient::Module(&s2.module), l, Scalars::Identity, Some(g)).map_err(|e| e.to_string())?;
    let il_zero = ideal.elements().all(|a| sub.elements().all(|m| s2.module.act(a, m) == 0));
    ensure(il_zero && !sub.is_zero(), "witness does not satisfy IL = 0 with L ≠ 0")?;
    ensure(naive::recheck(&s2.module, zero, Some(g), Predicate::GPrime, v.witness.as_ref().unwrap()).unwrap_or(false), "2-prime witness fails the definitional check")?;
    Ok("M2(2Z8) not completely cwp via the explicit (x, y, z); K = 0 not 2-prime in M2(Z2) with IL = 0".into())
}

fn theorem_suite() -> Outcome {
    let corpus: Vec<CorpusEntry> = common::corpus()
        .into_iter()
        .map(|(name, module)| CorpusEntry { name, module })
        .collect();
    ensure(corpus.len() >= 12, format!("corpus has {} structures", corpus.len()))?;
    let reports = run_corpus(&Theorem::ALL, &corpus).map_err(|e| e.to_string())?;
    let violations: usize = reports.iter().map(|r| r.violations.len()).sum();
    ensure(violations == 0, format!("{violations} violations"))?;
    let empty: Vec<&str> = reports.iter().filter(|r| r.hypothesis_held == 0).map(|r| r.theorem.as_str()).collect();
    ensure(empty.is_empty(), format!("no hypothesis-passing instance for {}", empty.join(", ")))?;
    let held: u64 = reports.iter().map(|r| r.hypothesis_held).sum();
    Ok(format!("{} structures, 23 theorems, {held} hypothesis-passing instances, 0 violations", corpus.len()))
}

fn oracle_equivalence() -> Outcome {
    let corpus = common::corpus();
    let lattices: Vec<_> = corpus
        .iter()
        .map(|(_, m)| enumerate_graded_submodules(m, DEFAULT_LATTICE_CAP).unwrap())
        .collect();
    let mut rng = ChaCha8Rng::seed_from_u64(20_000);
    let instances = 1000;
    for _ in 0..instances {
        let idx = rng.gen_range(0..corpus.len());
        let (name, m) = &corpus[idx];
        let ring = m.ring();
        let h = ring.homogeneous_elements();
        let (x, y) = (*h.choose(&mut rng).unwrap(), *h.choose(&mut rng).unwrap());
        let l = lattices[idx].choose(&mut rng).unwrap();
        let k = lattices[idx].choose(&mut rng).unwrap();
        let all: Vec<u32> = ring.ring().elements().collect();
        let fast = sandwich_test(m, x, y, &ring.ring().basis_elems(), l, k);
        let slow = match naive::sandwich(m, x, y, &all, l, k) {
            (false, _) => Sandwich::NotContained,
            (true, false) => Sandwich::ProductZero,
            (true, true) => Sandwich::Holds,
        };
        ensure(fast == slow, format!("{name}: sandwich disagrees at x={x} y={y}"))?;
    }
    let mut checked = 0;
    for ((name, m), lat) in corpus.iter().zip(&lattices) {
        if m.size() > 256 {
            continue;
        }
        let fast: std::collections::BTreeSet<common::Set> = lat.iter().map(|k| k.elements().collect()).collect();
        ensure(fast == common::graded_submodules_by_filter(m), format!("{name}: lattice differs from the subgroup filter"))?;
        checked += 1;
    }
    Ok(format!("{instances} random sandwich instances agree; {checked} lattices match the subgroup filter"))
}

fn spot_values() -> Outcome {
    let (_, z8) = common::config("configs/z8.json");
    let ring = z8.module.ring();
    let zero = Substructure::zero(ring.size(), Kind::TwoSidedIdeal);
    let rad = graded_radical(ring, &zero, RingScope::Whole).map_err(|e| e.to_string())?;
    ensure(rad.elements().collect::<Vec<_>>() == vec![0, 2, 4, 6], "Grad(0) in Z8 is not {0,2,4,6}")?;
    let rc = RingContext::new(Arc::clone(ring));
    let as_ideal = |name: &str| {
        let k = z8.submodule(name).unwrap();
        Substructure::from_members(ring.ring().additive(), Kind::LeftIdeal, k.members().clone())
    };
    let wp = |name: &str| classify_ideal(&rc, &as_ideal(name), Predicate::GradedWeaklyPrimeIdeal).unwrap().holds;
    ensure(wp("two") && !wp("four"), "weakly prime verdicts for 2Z8 / 4Z8 are wrong")?;

    let u = |rel: &str| {
        let (_, s) = common::config(rel);
        is_u_module(&ModuleContext::new(s.module), 0, DEFAULT_COVER_BOUND).unwrap().holds
    };
    ensure(u("corpus/default/03-z4.json"), "Z4 over Z4 is not a u-module")?;
    ensure(!u("corpus/default/15-z2-free2.json"), "Z2 x Z2 over Z2 is a u-module")?;
    let (_, m2) = common::config("configs/m2-z2.json");
    ensure(!is_left_duo(m2.module.ring(), RingScope::Whole).holds, "M2(Z2) is left Duo")?;
    Ok("Grad(0) = {0,2,4,6}; 2Z8 weakly prime, 4Z8 not; u-modules Z4 yes, Z2^2 no; M2(Z2) not left Duo".into())
}

fn determinism() -> Outcome {
    let commands: [&[&str]; 5] = [
        &["classify", "configs/m2-z8.json", "--submodule", "two", "--predicate", "graded-completely-classical-weakly-prime"],
        &["enumerate", "configs/m2-z8.json", "--kind", "graded-left-ideals"],
        &["triple-zero", "configs/m2-z8.json", "--submodule", "zero"],
        &["verify", "--suite", "all", "--corpus", "default"],
        &["search", "--holds", "graded-weakly-prime", "--fails", "graded-prime", "--family", "zmod:2-12"],
    ];
    for args in commands {
        let runs: Vec<(i32, String)> = [1, 1, 4, 16].iter().map(|&w| gradlab(args, w)).collect();
        ensure(runs.windows(2).all(|p| p[0] == p[1]), format!("{} output varies", args[0]))?;
    }
    Ok("5 commands, byte-identical across runs with 1, 4 and 16 workers".into())
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome, u64); 6] = [
        ("1 example reproduction", example_reproduction, 120),
        ("2 surrogate examples", surrogate_examples, 60),
        ("3 theorem suite", theorem_suite, 600),
        ("4 oracle equivalence", oracle_equivalence, 600),
        ("5 classifier spot values", spot_values, 600),
        ("6 determinism", determinism, 600),
    ];
    let mut failed = 0;
    for (name, run, limit) in criteria {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        let outcome = match outcome {
            Ok(msg) if elapsed > Duration::from_secs(limit) => Err(format!("{msg}, but took longer than {limit}s")),
            other => other,
        };
        match outcome {
            Ok(msg) => println!("PASS criterion {name}: {msg} ({:.2}s)", elapsed.as_secs_f64()),
            Err(msg) => {
                failed += 1;
                println!("FAIL criterion {name}: {msg} ({:.2}s)", elapsed.as_secs_f64());
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
