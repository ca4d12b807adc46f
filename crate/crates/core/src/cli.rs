//! Command-line front end. Reports go to stdout as JSON, timing to stderr.

use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::Arc;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use crate::classify::{
    classify_component, classify_ideal, classify_submodule, find_classical_triple_zero, naive, triple_zeros,
    ModuleContext, Predicate, RingContext, Target,
};
use crate::config::{Structure, StructureConfig};
use crate::error::{Error, Result};
use crate::group::GroupElem;
use crate::lab::{run_corpus, search_separating_example, CorpusEntry, Family, Theorem};
use crate::report::{Report, VerdictJson, WitnessJson};
use crate::substructure::{
    enumerate_component_submodules, enumerate_graded_left_ideals, enumerate_graded_submodules,
    enumerate_graded_two_sided_ideals, enumerate_identity_ideals, enumerate_identity_left_ideals,
    enumerate_ideals, enumerate_left_ideals, enumerate_submodules, Kind, Substructure, DEFAULT_LATTICE_CAP,
};

/// Environment variable fixing the number of worker threads.
pub const WORKERS_ENV: &str = "GRADLAB_WORKERS";

/// Directory holding the shipped corpora.
const CORPUS_ROOT: &str = concat!(env!("CARGO_MANIFEST_DIR"), "/../../corpus");

#[derive(Debug, Parser)]
#[command(name = "gradlab", version, about = "Finite graded rings and modules: classifiers and a theorem lab")]
pub struct Cli {
    /// Largest lattice enumerated before giving up with exit code 3.
    #[arg(long, global = true, default_value_t = DEFAULT_LATTICE_CAP)]
    pub cap: usize,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Classify a named submodule (or, in a regular module, left ideal).
    Classify {
        config: PathBuf,
        #[arg(long)]
        submodule: String,
        #[arg(long)]
        predicate: Predicate,
        /// Degree for component predicates, as comma-separated integers.
        #[arg(long)]
        degree: Option<String>,
        /// Re-check a witness (bare, or inside a report) instead of searching.
        #[arg(long)]
        check_witness: Option<PathBuf>,
    },
    /// List a family of substructures.
    Enumerate {
        config: PathBuf,
        #[arg(long, value_enum)]
        kind: EnumerateKind,
        /// Degree for `component-submodules`.
        #[arg(long)]
        degree: Option<String>,
    },
    /// Find a graded classical triple zero of a named submodule.
    TripleZero {
        config: PathBuf,
        #[arg(long)]
        submodule: String,
        /// List every triple zero rather than the first.
        #[arg(long)]
        all: bool,
        #[arg(long)]
        check_witness: Option<PathBuf>,
    },
    /// Check a theorem suite over a corpus directory.
    Verify {
        /// `all` or comma-separated theorem ids.
        #[arg(long, default_value = "all")]
        suite: String,
        /// A directory of configs, or the name of a shipped corpus.
        #[arg(long, default_value = "default")]
        corpus: PathBuf,
    },
    /// First structure and instance where one predicate holds and another fails.
    Search {
        #[arg(long)]
        holds: Predicate,
        #[arg(long)]
        fails: Predicate,
        /// `zmod:LO-HI`, `matrix:LO-HI` or `matrix-z2:LO-HI`.
        #[arg(long)]
        family: Family,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum EnumerateKind {
    GradedSubmodules,
    Submodules,
    ComponentSubmodules,
    GradedLeftIdeals,
    GradedIdeals,
    LeftIdeals,
    Ideals,
    IdentityLeftIdeals,
    IdentityIdeals,
}

/// Parses arguments, runs, prints, and maps the outcome to an exit code.
pub fn run() -> ExitCode {
    let cli = Cli::parse();
    if let Err(e) = configure_workers() {
        eprintln!("error: {e}");
        return ExitCode::from(2);
    }
    let start = Instant::now();
    let outcome = execute(&cli);
    eprintln!("elapsed: {:.3}s", start.elapsed().as_secs_f64());
    match outcome {
        Ok((json, code)) => {
            // A closed pipe downstream is not an error of ours.
            let _ = writeln!(std::io::stdout().lock(), "{json}");
            ExitCode::from(code)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}

pub fn exit_code(e: &Error) -> u8 {
    match e {
        Error::CapExceeded { .. } => 3,
        _ => 2,
    }
}

fn configure_workers() -> Result<()> {
    let Ok(v) = std::env::var(WORKERS_ENV) else { return Ok(()) };
    let n: usize = v
        .trim()
        .parse()
        .ok()
        .filter(|&n| n > 0)
        .ok_or_else(|| Error::InvalidInput(format!("{WORKERS_ENV} must be a positive integer, got `{v}`")))?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(n)
        .build_global()
        .map_err(|e| Error::InvalidInput(format!("worker pool: {e}")))
}

/// Runs a parsed command, returning the report text and exit code.
pub fn execute(cli: &Cli) -> Result<(String, u8)> {
    match &cli.command {
        Command::Classify {
            config,
            submodule,
            predicate,
            degree,
            check_witness,
        } => classify(cli.cap, config, submodule, *predicate, degree.as_deref(), check_witness.as_deref()),
        Command::Enumerate { config, kind, degree } => enumerate(cli.cap, config, *kind, degree.as_deref()),
        Command::TripleZero {
            config,
            submodule,
            all,
            check_witness,
        } => triple_zero(cli.cap, config, submodule, *all, check_witness.as_deref()),
        Command::Verify { suite, corpus } => verify(suite, corpus),
        Command::Search { holds, fails, family } => {
            let outcome = search_separating_example(*holds, *fails, *family)?;
            let command = json!({"search": {"holds": holds.id(), "fails": fails.id(), "family": family.to_string()}});
            Ok((envelope(command, None, outcome), 0))
        }
    }
}

fn envelope<T: Serialize>(command: Value, config_digest: Option<String>, result: T) -> String {
    Report {
        command,
        config_digest,
        result,
    }
    .to_json()
}

fn load(path: &Path) -> Result<(StructureConfig, Structure)> {
    let config = StructureConfig::load(path)?;
    let structure = config.build()?;
    Ok((config, structure))
}

fn contexts(cap: usize, s: &Structure) -> Arc<ModuleContext> {
    ModuleContext::with_ring(RingContext::with_cap(s.module.ring().clone(), cap), s.module.clone())
}

fn parse_degree(s: &Structure, degree: Option<&str>) -> Result<GroupElem> {
    let group = s.module.ring().group();
    let Some(text) = degree else {
        return Err(Error::InvalidInput("this predicate needs --degree".into()));
    };
    let v = text
        .split(',')
        .filter(|t| !t.trim().is_empty())
        .map(|t| t.trim().parse::<i64>())
        .collect::<std::result::Result<Vec<_>, _>>()
        .map_err(|_| Error::InvalidInput(format!("degree `{text}` is not a list of integers")))?;
    group.element_from_vec(&v)
}

/// A named submodule of a regular module read as a left ideal.
fn as_ideal(s: &Structure, k: &Substructure, predicate: Predicate) -> Result<Substructure> {
    let ring = s.module.ring();
    if s.module.additive() != ring.ring().additive() || s.module.basis_elems() != ring.ring().basis_elems() {
        return Err(Error::InvalidInput("ideal predicates need a regular module".into()));
    }
    let kind = if predicate == Predicate::WeaklyPrimeLeftIdealOfAe {
        Kind::IdentityLeftIdeal
    } else {
        Kind::LeftIdeal
    };
    Ok(Substructure::from_members(ring.ring().additive(), kind, k.members().clone()))
}

fn read_witness(path: &Path) -> Result<WitnessJson> {
    let text =
        std::fs::read_to_string(path).map_err(|e| Error::InvalidInput(format!("{}: {e}", path.display())))?;
    let doc: Value =
        serde_json::from_str(&text).map_err(|e| Error::InvalidInput(format!("{}: {e}", path.display())))?;
    WitnessJson::extract(&doc)
}

fn classify(
    cap: usize,
    path: &Path,
    name: &str,
    predicate: Predicate,
    degree: Option<&str>,
    check: Option<&Path>,
) -> Result<(String, u8)> {
    let (config, s) = load(path)?;
    let k = s.submodule(name)?;
    let g = match predicate.target() {
        Target::Component => Some(parse_degree(&s, degree)?),
        _ => None,
    };
    let mut command = json!({"classify": {
        "config": path.display().to_string(), "submodule": name, "predicate": predicate.id(),
    }});
    if let Some(g) = g {
        command["classify"]["degree"] = json!(s.module.ring().group().element_to_vec(g));
    }
    if let Some(wpath) = check {
        command["classify"]["check_witness"] = json!(wpath.display().to_string());
        let wj = read_witness(wpath)?;
        let w = wj.to_witness(&s.module)?;
        let reproduces = match predicate.target() {
            Target::Ideal => naive::recheck_ideal(s.module.ring(), &as_ideal(&s, k, predicate)?, predicate, &w)?,
            _ => naive::recheck(&s.module, k, g, predicate, &w)?,
        };
        let result = json!({"witness": wj, "reproduces": reproduces});
        return Ok((envelope(command, Some(config.digest()), result), if reproduces { 0 } else { 1 }));
    }
    let ctx = contexts(cap, &s);
    let verdict = match (predicate.target(), g) {
        (Target::Ideal, _) => classify_ideal(ctx.ring_context(), &as_ideal(&s, k, predicate)?, predicate)?,
        (Target::Component, Some(g)) => classify_component(&ctx, k, g, predicate)?,
        _ => classify_submodule(&ctx, k, predicate)?,
    };
    Ok((envelope(command, Some(config.digest()), VerdictJson::new(&s.module, &verdict)), 0))
}

fn enumerate(cap: usize, path: &Path, kind: EnumerateKind, degree: Option<&str>) -> Result<(String, u8)> {
    let (config, s) = load(path)?;
    let m = &s.module;
    let ring = m.ring();
    let (list, in_module) = match kind {
        EnumerateKind::GradedSubmodules => (enumerate_graded_submodules(m, cap)?, true),
        EnumerateKind::Submodules => (enumerate_submodules(m, cap)?, true),
        EnumerateKind::ComponentSubmodules => {
            (enumerate_component_submodules(m, parse_degree(&s, degree)?, cap)?, true)
        }
        EnumerateKind::GradedLeftIdeals => (enumerate_graded_left_ideals(ring, cap)?, false),
        EnumerateKind::GradedIdeals => (enumerate_graded_two_sided_ideals(ring, cap)?, false),
        EnumerateKind::LeftIdeals => (enumerate_left_ideals(ring, cap)?, false),
        EnumerateKind::Ideals => (enumerate_ideals(ring, cap)?, false),
        EnumerateKind::IdentityLeftIdeals => (enumerate_identity_left_ideals(ring, cap)?, false),
        EnumerateKind::IdentityIdeals => (enumerate_identity_ideals(ring, cap)?, false),
    };
    let decode = |x: u32| -> Vec<u32> {
        if in_module {
            m.decode(x)
        } else {
            ring.ring().decode(x)
        }
    };
    let entries: Vec<Value> = list
        .iter()
        .map(|e| json!({"size": e.len(), "generators": e.additive_gens().iter().map(|&x| decode(x)).collect::<Vec<_>>()}))
        .collect();
    let command = json!({"enumerate": {"config": path.display().to_string(), "kind": kind}});
    let result = json!({"count": entries.len(), "entries": entries});
    Ok((envelope(command, Some(config.digest()), result), 0))
}

fn triple_zero(cap: usize, path: &Path, name: &str, all: bool, check: Option<&Path>) -> Result<(String, u8)> {
    let (config, s) = load(path)?;
    let k = s.submodule(name)?;
    let mut command = json!({"triple-zero": {"config": path.display().to_string(), "submodule": name}});
    if let Some(wpath) = check {
        command["triple-zero"]["check_witness"] = json!(wpath.display().to_string());
        let wj = read_witness(wpath)?;
        let crate::classify::Witness::Sandwich { x, y, l } = wj.to_witness(&s.module)? else {
            return Err(Error::InvalidInput("a triple zero witness needs x, y and l".into()));
        };
        let reproduces = naive::is_triple_zero(&s.module, k, x, y, &l)?;
        let result = json!({"witness": wj, "reproduces": reproduces});
        return Ok((envelope(command, Some(config.digest()), result), if reproduces { 0 } else { 1 }));
    }
    let ctx = contexts(cap, &s);
    if k.is_whole() {
        return Err(Error::InvalidInput(format!("`{name}` is the whole module")));
    }
    let result = if all {
        command["triple-zero"]["all"] = json!(true);
        let zeros = triple_zeros(&ctx, k)?;
        let list: Vec<WitnessJson> = zeros
            .iter()
            .map(|z| WitnessJson::triple_zero(&s.module, z.x, z.y, &z.l))
            .collect();
        json!({"count": list.len(), "triple_zeros": list})
    } else {
        let found = find_classical_triple_zero(&ctx, k)?;
        json!({"found": found.is_some(), "witness": found.map(|z| WitnessJson::triple_zero(&s.module, z.x, z.y, &z.l))})
    };
    Ok((envelope(command, Some(config.digest()), result), 0))
}

/// The corpus directory for `arg`: the path itself, or a shipped corpus name.
pub fn resolve_corpus(arg: &Path) -> Result<PathBuf> {
    if arg.is_dir() {
        return Ok(arg.to_path_buf());
    }
    let shipped = Path::new(CORPUS_ROOT).join(arg);
    if shipped.is_dir() {
        return Ok(shipped);
    }
    Err(Error::InvalidInput(format!("corpus `{}` is not a directory", arg.display())))
}

/// Every `*.json` config in `dir`, in file-name order.
pub fn load_corpus(dir: &Path) -> Result<Vec<(String, StructureConfig)>> {
    let entries = std::fs::read_dir(dir).map_err(|e| Error::InvalidInput(format!("{}: {e}", dir.display())))?;
    let mut paths: Vec<PathBuf> = entries
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|x| x == "json"))
        .collect();
    paths.sort();
    paths
        .into_iter()
        .map(|p| {
            let config = StructureConfig::load(&p)?;
            let stem = p.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default();
            Ok((config.name.clone().unwrap_or(stem), config))
        })
        .collect()
}

fn verify(suite: &str, corpus: &Path) -> Result<(String, u8)> {
    let theorems = Theorem::parse_suite(suite)?;
    let dir = resolve_corpus(corpus)?;
    let configs = load_corpus(&dir)?;
    let mut listing = Vec::new();
    let mut entries = Vec::new();
    for (name, config) in &configs {
        let s = config.build()?;
        listing.push(json!({"name": name, "digest": config.digest(), "size": s.module.size()}));
        entries.push(CorpusEntry {
            name: name.clone(),
            module: s.module,
        });
    }
    let reports = run_corpus(&theorems, &entries)?;
    let violations: usize = reports.iter().map(|r| r.violations.len()).sum();
    let command = json!({"verify": {"suite": suite, "corpus": corpus.display().to_string()}});
    let result = json!({"corpus": listing, "violations": violations, "reports": reports});
    Ok((envelope(command, None, result), if violations == 0 { 0 } else { 1 }))
}
