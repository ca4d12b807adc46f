//! Report envelopes and the coordinate form of witnesses.

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::classify::{PredicateVerdict, Witness};
use crate::error::{Error, Result};
use crate::module::GradedModule;
use crate::Elem;

/// What every command prints: the command echo, the config digest when a
/// config was read, and the command's result.
#[derive(Debug, Clone, Serialize)]
pub struct Report<T: Serialize> {
    pub command: Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub config_digest: Option<String>,
    pub result: T,
}

impl<T: Serialize> Report<T> {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("reports serialize")
    }
}

type Coords = Vec<i64>;

/// A witness in coordinates. Ring elements use the ring basis, module
/// elements the module basis; submodules and ideals are generator lists.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum WitnessJson {
    Sandwich { x: Coords, y: Coords, l: Vec<Coords> },
    Elementwise { x: Coords, y: Coords, z: Coords },
    IdealModule { i: Vec<Coords>, l: Vec<Coords> },
    IdealPair { i: Vec<Coords>, j: Vec<Coords> },
    ElementPair { x: Coords, y: Coords },
    NotRightClosed { x: Coords, b: Coords },
    Cover { k: Vec<Coords>, cover: Vec<Vec<Coords>> },
    Substructure { k: Vec<Coords> },
    TripleZero { x: Coords, y: Coords, l: Vec<Coords> },
}

fn to_i64(v: Vec<u32>) -> Coords {
    v.into_iter().map(i64::from).collect()
}

impl WitnessJson {
    pub fn from_witness(m: &GradedModule, w: &Witness) -> Self {
        let r = m.ring().ring();
        let re = |x: &Elem| to_i64(r.decode(*x));
        let me = |x: &Elem| to_i64(m.decode(*x));
        let rs = |xs: &[Elem]| xs.iter().map(re).collect();
        let ms = |xs: &[Elem]| xs.iter().map(me).collect();
        match w {
            Witness::Sandwich { x, y, l } => WitnessJson::Sandwich { x: re(x), y: re(y), l: ms(l) },
            Witness::Elementwise { x, y, z } => WitnessJson::Elementwise { x: re(x), y: re(y), z: me(z) },
            Witness::IdealModule { i, l } => WitnessJson::IdealModule { i: rs(i), l: ms(l) },
            Witness::IdealPair { i, j } => WitnessJson::IdealPair { i: rs(i), j: rs(j) },
            Witness::ElementPair { x, y } => WitnessJson::ElementPair { x: re(x), y: re(y) },
            Witness::NotRightClosed { x, b } => WitnessJson::NotRightClosed { x: re(x), b: re(b) },
            Witness::Cover { k, cover } => WitnessJson::Cover {
                k: ms(k),
                cover: cover.iter().map(|c| ms(c)).collect(),
            },
            Witness::Substructure { k } => WitnessJson::Substructure { k: ms(k) },
        }
    }

    pub fn triple_zero(m: &GradedModule, x: Elem, y: Elem, l: &[Elem]) -> Self {
        let r = m.ring().ring();
        WitnessJson::TripleZero {
            x: to_i64(r.decode(x)),
            y: to_i64(r.decode(y)),
            l: l.iter().map(|&v| to_i64(m.decode(v))).collect(),
        }
    }

    /// Back to element indices. Triple zeros come back as a sandwich.
    pub fn to_witness(&self, m: &GradedModule) -> Result<Witness> {
        let r = m.ring().ring();
        let re = |c: &Coords| r.encode(c);
        let me = |c: &Coords| m.encode(c);
        let rs = |cs: &[Coords]| cs.iter().map(re).collect::<Result<Vec<_>>>();
        let ms = |cs: &[Coords]| cs.iter().map(me).collect::<Result<Vec<_>>>();
        Ok(match self {
            WitnessJson::Sandwich { x, y, l } | WitnessJson::TripleZero { x, y, l } => Witness::Sandwich {
                x: re(x)?,
                y: re(y)?,
                l: ms(l)?,
            },
            WitnessJson::Elementwise { x, y, z } => Witness::Elementwise { x: re(x)?, y: re(y)?, z: me(z)? },
            WitnessJson::IdealModule { i, l } => Witness::IdealModule { i: rs(i)?, l: ms(l)? },
            WitnessJson::IdealPair { i, j } => Witness::IdealPair { i: rs(i)?, j: rs(j)? },
            WitnessJson::ElementPair { x, y } => Witness::ElementPair { x: re(x)?, y: re(y)? },
            WitnessJson::NotRightClosed { x, b } => Witness::NotRightClosed { x: re(x)?, b: re(b)? },
            WitnessJson::Cover { k, cover } => Witness::Cover {
                k: ms(k)?,
                cover: cover.iter().map(|c| ms(c)).collect::<Result<_>>()?,
            },
            WitnessJson::Substructure { k } => Witness::Substructure { k: ms(k)? },
        })
    }

    /// Reads a bare witness, an object with a `witness` field, or a report
    /// whose `result` carries one.
    pub fn extract(doc: &Value) -> Result<Self> {
        let inner = doc
            .get("result")
            .and_then(|r| r.get("witness"))
            .or_else(|| doc.get("witness"))
            .unwrap_or(doc);
        if inner.is_null() {
            return Err(Error::InvalidInput("the document carries no witness".into()));
        }
        serde_json::from_value(inner.clone()).map_err(|e| Error::InvalidInput(format!("witness: {e}")))
    }
}

/// A verdict as it appears in reports.
#[derive(Debug, Clone, Serialize)]
pub struct VerdictJson {
    pub predicate: String,
    pub holds: bool,
    pub witness: Option<WitnessJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub hypothesis_failure: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl VerdictJson {
    pub fn new(m: &GradedModule, v: &PredicateVerdict) -> Self {
        Self {
            predicate: v.predicate.clone(),
            holds: v.holds,
            witness: v.witness.as_ref().map(|w| WitnessJson::from_witness(m, w)),
            hypothesis_failure: v.hypothesis_failure.clone(),
            note: v.note.clone(),
        }
    }
}
