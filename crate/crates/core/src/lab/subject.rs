use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use serde_json::{json, Value};

use crate::classify::{
    classify_component, classify_submodule, triple_zeros, ModuleContext, Predicate, RingContext, TripleZero,
};
use crate::error::Result;
use crate::group::GroupElem;
use crate::hom::GradedHom;
use crate::module::GradedModule;
use crate::substructure::Substructure;
use crate::Elem;

type Key = (usize, Predicate, Option<GroupElem>);

/// A module under study with memoised verdicts.
pub struct Subject {
    name: String,
    ctx: Arc<ModuleContext>,
    verdicts: Mutex<HashMap<Key, bool>>,
    triple_zeros: Mutex<HashMap<usize, Arc<Vec<TripleZero>>>>,
    quotients: OnceLock<Vec<Option<(Arc<Subject>, GradedHom)>>>,
}

impl Subject {
    pub fn new(name: &str, module: Arc<GradedModule>) -> Self {
        Self::from_context(name, ModuleContext::new(module))
    }

    pub fn with_ring(name: &str, rc: Arc<RingContext>, module: Arc<GradedModule>) -> Self {
        Self::from_context(name, ModuleContext::with_ring(rc, module))
    }

    pub fn from_context(name: &str, ctx: Arc<ModuleContext>) -> Self {
        Self {
            name: name.to_string(),
            ctx,
            verdicts: Mutex::new(HashMap::new()),
            triple_zeros: Mutex::new(HashMap::new()),
            quotients: OnceLock::new(),
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn ctx(&self) -> &Arc<ModuleContext> {
        &self.ctx
    }

    pub fn module(&self) -> &Arc<GradedModule> {
        self.ctx.module()
    }

    pub fn lattice(&self) -> Result<Arc<Vec<Substructure>>> {
        self.ctx.lattice()
    }

    /// Indices of the proper graded submodules.
    pub fn proper(&self) -> Result<Vec<usize>> {
        let lat = self.lattice()?;
        Ok((0..lat.len()).filter(|&i| !lat[i].is_whole()).collect())
    }

    /// Submodule predicate on lattice entry `ki`; hypothesis failures are `false`.
    pub fn holds(&self, ki: usize, p: Predicate) -> Result<bool> {
        self.memo((ki, p, None), || {
            let lat = self.lattice()?;
            Ok(classify_submodule(&self.ctx, &lat[ki], p)?.holds)
        })
    }

    /// Component predicate on lattice entry `ki` at degree `g`.
    pub fn holds_at(&self, ki: usize, g: GroupElem, p: Predicate) -> Result<bool> {
        self.memo((ki, p, Some(g)), || {
            let lat = self.lattice()?;
            Ok(classify_component(&self.ctx, &lat[ki], g, p)?.holds)
        })
    }

    fn memo(&self, key: Key, f: impl FnOnce() -> Result<bool>) -> Result<bool> {
        if let Some(&v) = self.verdicts.lock().expect("verdict cache").get(&key) {
            return Ok(v);
        }
        let v = f()?;
        self.verdicts.lock().expect("verdict cache").insert(key, v);
        Ok(v)
    }

    /// All graded classical triple zeros of the proper entry `ki`.
    pub fn triple_zeros(&self, ki: usize) -> Result<Arc<Vec<TripleZero>>> {
        if let Some(v) = self.triple_zeros.lock().expect("triple-zero cache").get(&ki) {
            return Ok(v.clone());
        }
        let lat = self.lattice()?;
        let v = Arc::new(triple_zeros(&self.ctx, &lat[ki])?);
        self.triple_zeros.lock().expect("triple-zero cache").insert(ki, v.clone());
        Ok(v)
    }

    /// `M/T` with its projection for every proper lattice entry `T` (`None`
    /// for the whole module), sharing the ring caches.
    pub(crate) fn quotients(&self) -> Result<&[Option<(Arc<Subject>, GradedHom)>]> {
        if let Some(q) = self.quotients.get() {
            return Ok(q);
        }
        let lat = self.lattice()?;
        let mut out = Vec::with_capacity(lat.len());
        for (ti, t) in lat.iter().enumerate() {
            if t.is_whole() {
                out.push(None);
                continue;
            }
            let (q, p) = crate::construct::quotient_module(self.module(), t)?;
            let name = format!("{}/T{ti}", self.name);
            out.push(Some((Arc::new(Subject::with_ring(&name, self.ctx.ring_context().clone(), q)), p)));
        }
        Ok(self.quotients.get_or_init(|| out))
    }

    /// Coordinates of module elements.
    pub fn coords(&self, elems: &[Elem]) -> Value {
        let m = self.module();
        json!(elems.iter().map(|&x| m.decode(x)).collect::<Vec<_>>())
    }

    /// Coordinates of ring elements.
    pub fn ring_coords(&self, elems: &[Elem]) -> Value {
        let r = self.module().ring().ring();
        json!(elems.iter().map(|&x| r.decode(x)).collect::<Vec<_>>())
    }

    /// Additive generators of lattice entry `i`, as coordinates.
    pub fn gens(&self, i: usize) -> Result<Value> {
        Ok(self.coords(self.lattice()?[i].additive_gens()))
    }
}
