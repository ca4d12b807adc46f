//! JSON structure configurations.
//!
//! Coordinates are integer vectors in the additive basis order; group
//! elements are integer vectors over the cyclic orders (a single index for
//! table groups).

use std::collections::BTreeMap;
use std::path::Path;
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::graded::GradedRing;
use crate::group::{FiniteGroup, GroupElem};
use crate::module::GradedModule;
use crate::ring::FiniteRing;
use crate::substructure::{closure, is_graded, Ambient, Scalars, Substructure};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", deny_unknown_fields)]
pub enum RingSpec {
    Zmod(u32),
    Matrix { base: Box<RingSpec>, size: usize },
    Product(Vec<RingSpec>),
    /// `products[i][j]` is the coordinate vector of `bᵢ·bⱼ`.
    Presented {
        orders: Vec<u32>,
        products: Vec<Vec<Vec<i64>>>,
        one: Vec<i64>,
    },
}

impl RingSpec {
    pub fn build(&self) -> Result<FiniteRing> {
        match self {
            RingSpec::Zmod(n) => FiniteRing::zmod(*n),
            RingSpec::Matrix { base, size } => FiniteRing::matrix(&base.build()?, *size),
            RingSpec::Product(factors) => {
                FiniteRing::product(&factors.iter().map(RingSpec::build).collect::<Result<Vec<_>>>()?)
            }
            RingSpec::Presented { orders, products, one } => {
                FiniteRing::from_structure_constants(orders.clone(), products, one)
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", deny_unknown_fields)]
pub enum GroupSpec {
    Cyclic(Vec<usize>),
    Table(Vec<Vec<GroupElem>>),
}

impl GroupSpec {
    pub fn build(&self) -> Result<FiniteGroup> {
        match self {
            GroupSpec::Cyclic(orders) => FiniteGroup::from_cyclic_orders(orders),
            GroupSpec::Table(t) => FiniteGroup::from_table(t.clone()),
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", deny_unknown_fields)]
pub enum GradingSpec {
    #[default]
    Trivial,
    /// Good grading of a square matrix ring, one group element per row.
    GoodSigma(Vec<Vec<i64>>),
    /// Degree of each additive basis element.
    Degrees(Vec<Vec<i64>>),
}

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", deny_unknown_fields)]
pub enum ModuleSpec {
    #[default]
    Regular,
    Free(usize),
    /// `action[i][j]` is the coordinate vector of ring basis `i` on generator `j`.
    Presented {
        orders: Vec<u32>,
        action: Vec<Vec<Vec<i64>>>,
        degrees: Vec<Vec<i64>>,
    },
}

/// A graded module over a graded ring, with named graded submodules.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StructureConfig {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub description: Option<String>,
    pub ring: RingSpec,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub group: Option<GroupSpec>,
    #[serde(default)]
    pub grading: GradingSpec,
    #[serde(default)]
    pub module: ModuleSpec,
    /// Submodule name to generator coordinate lists.
    #[serde(default)]
    pub submodules: BTreeMap<String, Vec<Vec<i64>>>,
}

/// A built configuration.
#[derive(Debug, Clone)]
pub struct Structure {
    pub name: String,
    pub module: Arc<GradedModule>,
    pub submodules: BTreeMap<String, Substructure>,
}

impl Structure {
    pub fn submodule(&self, name: &str) -> Result<&Substructure> {
        self.submodules.get(name).ok_or_else(|| {
            let known: Vec<&str> = self.submodules.keys().map(String::as_str).collect();
            Error::input(format!("no submodule named `{name}` (known: {})", known.join(", ")))
        })
    }
}

impl StructureConfig {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::input(format!("config: {e}")))
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| Error::input(format!("{}: {e}", path.display())))?;
        Self::from_json(&text).map_err(|e| Error::input(format!("{}: {e}", path.display())))
    }

    /// sha256 of the canonical JSON of everything except name and description.
    pub fn digest(&self) -> String {
        let stripped = StructureConfig {
            name: None,
            description: None,
            ..self.clone()
        };
        // serde_json::Value keeps object keys sorted, which fixes the order.
        let canonical = serde_json::to_value(&stripped).expect("config serializes").to_string();
        hex::encode(Sha256::digest(canonical.as_bytes()))
    }

    pub fn build_ring(&self) -> Result<Arc<GradedRing>> {
        let ring = self.ring.build()?;
        let group = match &self.group {
            Some(g) => g.build()?,
            None if self.grading == GradingSpec::Trivial => FiniteGroup::trivial(),
            None => return Err(Error::input("a non-trivial grading needs a `group`")),
        };
        let elem = |v: &Vec<i64>| group.element_from_vec(v);
        let graded = match &self.grading {
            GradingSpec::Trivial => GradedRing::new(ring.clone(), group.clone(), vec![group.identity(); ring.rank()])?,
            GradingSpec::GoodSigma(sigma) => {
                let sigma = sigma.iter().map(elem).collect::<Result<Vec<_>>>()?;
                let size = sigma.len();
                GradedRing::good_matrix_grading(ring, size, group.clone(), &sigma)?
            }
            GradingSpec::Degrees(d) => {
                let d = d.iter().map(elem).collect::<Result<Vec<_>>>()?;
                GradedRing::new(ring, group.clone(), d)?
            }
        };
        Ok(Arc::new(graded))
    }

    pub fn build(&self) -> Result<Structure> {
        let ring = self.build_ring()?;
        let module = match &self.module {
            ModuleSpec::Regular => GradedModule::regular(ring),
            ModuleSpec::Free(n) => GradedModule::free(ring, *n)?,
            ModuleSpec::Presented { orders, action, degrees } => {
                let group = ring.group();
                let d = degrees
                    .iter()
                    .map(|v| group.element_from_vec(v))
                    .collect::<Result<Vec<_>>>()?;
                GradedModule::new(ring.clone(), orders.clone(), action, d)?
            }
        };
        let module = Arc::new(module);
        let mut submodules = BTreeMap::new();
        for (name, gens) in &self.submodules {
            let gens = gens.iter().map(|c| module.encode(c)).collect::<Result<Vec<_>>>()?;
            let k = closure(Ambient::Module(&module), &gens, Scalars::Ring, None)?;
            if !is_graded(module.grading(), module.additive(), &k) {
                return Err(Error::input(format!("submodule `{name}` is not graded")));
            }
            submodules.insert(name.clone(), k);
        }
        Ok(Structure {
            name: self.name.clone().unwrap_or_else(|| "structure".into()),
            module,
            submodules,
        })
    }
}
