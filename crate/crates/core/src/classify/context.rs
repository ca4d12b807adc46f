//! Per-ring and per-module caches shared by every classifier.
//!
//! Everything expensive (lattices, `xAy` generator lists, colon sets) is
//! computed once on first use and reused.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use rayon::prelude::*;

use crate::bitset::MemberSet;
use crate::error::{Error, Result};
use crate::graded::GradedRing;
use crate::group::GroupElem;
use crate::module::GradedModule;
use crate::substructure::{
    colon_members, enumerate_component_submodules, enumerate_graded_left_ideals, enumerate_graded_submodules,
    enumerate_graded_two_sided_ideals, enumerate_identity_ideals, enumerate_left_ideals, Kind, Substructure,
    DEFAULT_LATTICE_CAP,
};
use crate::Elem;

const NONE: u32 = u32::MAX;

type Lattice = Result<Arc<Vec<Substructure>>>;

fn lattice(f: impl FnOnce() -> Result<Vec<Substructure>>) -> Lattice {
    f().map(Arc::new)
}

/// Ring-level caches.
pub struct RingContext {
    ring: Arc<GradedRing>,
    cap: usize,
    h: Vec<Elem>,
    h_pos: Vec<u32>,
    basis: Vec<Elem>,
    e_elems: Vec<Elem>,
    e_pos: Vec<u32>,
    e_basis: Vec<Elem>,
    xay: OnceLock<Vec<Elem>>,
    xaey: OnceLock<Vec<Elem>>,
    graded_left_ideals: OnceLock<Lattice>,
    graded_ideals: OnceLock<Lattice>,
    identity_ideals: OnceLock<Lattice>,
    left_ideals: OnceLock<Lattice>,
}

impl RingContext {
    pub fn new(ring: Arc<GradedRing>) -> Arc<Self> {
        Self::with_cap(ring, DEFAULT_LATTICE_CAP)
    }

    pub fn with_cap(ring: Arc<GradedRing>, cap: usize) -> Arc<Self> {
        let size = ring.size();
        let h = ring.homogeneous_elements();
        let mut h_pos = vec![NONE; size];
        for (i, &x) in h.iter().enumerate() {
            h_pos[x as usize] = i as u32;
        }
        let e_elems = ring.component(ring.identity());
        let mut e_pos = vec![NONE; size];
        for (i, &x) in e_elems.iter().enumerate() {
            e_pos[x as usize] = i as u32;
        }
        let basis = ring.ring().basis_elems().into_iter().filter(|&b| b != 0).collect();
        let e_basis = ring.component_basis(ring.identity());
        Arc::new(Self {
            ring,
            cap,
            h,
            h_pos,
            basis,
            e_elems,
            e_pos,
            e_basis,
            xay: OnceLock::new(),
            xaey: OnceLock::new(),
            graded_left_ideals: OnceLock::new(),
            graded_ideals: OnceLock::new(),
            identity_ideals: OnceLock::new(),
            left_ideals: OnceLock::new(),
        })
    }

    pub fn ring(&self) -> &Arc<GradedRing> {
        &self.ring
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    /// `h(A)` in ascending index order.
    pub fn homogeneous(&self) -> &[Elem] {
        &self.h
    }

    /// Position of `x` in [`Self::homogeneous`].
    pub fn h_index(&self, x: Elem) -> Option<usize> {
        let p = self.h_pos[x as usize];
        (p != NONE).then_some(p as usize)
    }

    /// Nonzero basis elements of `A`.
    pub fn basis(&self) -> &[Elem] {
        &self.basis
    }

    /// Elements of `A_e` in ascending order.
    pub fn identity_elements(&self) -> &[Elem] {
        &self.e_elems
    }

    pub fn e_index(&self, x: Elem) -> Option<usize> {
        let p = self.e_pos[x as usize];
        (p != NONE).then_some(p as usize)
    }

    pub fn identity_basis(&self) -> &[Elem] {
        &self.e_basis
    }

    /// Additive generators `x·b·y` (`b` over the basis of `A`) of `xAy`.
    pub fn xay(&self, xi: usize, yi: usize) -> &[Elem] {
        let table = self.xay.get_or_init(|| sandwich_table(&self.ring, &self.h, &self.basis));
        let kb = self.basis.len();
        let n = self.h.len();
        &table[(xi * n + yi) * kb..(xi * n + yi + 1) * kb]
    }

    /// Additive generators of `x·A_e·y` for `x, y ∈ A_e`, indexed by [`Self::e_index`].
    pub fn xaey(&self, xi: usize, yi: usize) -> &[Elem] {
        let table = self.xaey.get_or_init(|| sandwich_table(&self.ring, &self.e_elems, &self.e_basis));
        let kb = self.e_basis.len();
        let n = self.e_elems.len();
        &table[(xi * n + yi) * kb..(xi * n + yi + 1) * kb]
    }

    /// Generators of `xAy` for arbitrary ring elements.
    pub fn xay_of(&self, x: Elem, y: Elem) -> Vec<Elem> {
        let r = self.ring.ring();
        self.basis.iter().map(|&b| r.mul(r.mul(x, b), y)).collect()
    }

    pub fn graded_left_ideals(&self) -> Result<Arc<Vec<Substructure>>> {
        self.graded_left_ideals
            .get_or_init(|| lattice(|| enumerate_graded_left_ideals(&self.ring, self.cap)))
            .clone()
    }

    /// Graded two-sided ideals of `A`.
    pub fn graded_ideals(&self) -> Result<Arc<Vec<Substructure>>> {
        self.graded_ideals
            .get_or_init(|| lattice(|| enumerate_graded_two_sided_ideals(&self.ring, self.cap)))
            .clone()
    }

    /// Two-sided ideals of `A_e`.
    pub fn identity_ideals(&self) -> Result<Arc<Vec<Substructure>>> {
        self.identity_ideals
            .get_or_init(|| lattice(|| enumerate_identity_ideals(&self.ring, self.cap)))
            .clone()
    }

    /// All left ideals of `A`, graded or not.
    pub fn left_ideals(&self) -> Result<Arc<Vec<Substructure>>> {
        self.left_ideals
            .get_or_init(|| lattice(|| enumerate_left_ideals(&self.ring, self.cap)))
            .clone()
    }
}

fn sandwich_table(ring: &GradedRing, elems: &[Elem], basis: &[Elem]) -> Vec<Elem> {
    let r = ring.ring();
    let n = elems.len();
    let xb: Vec<Vec<Elem>> = elems.iter().map(|&x| basis.iter().map(|&b| r.mul(x, b)).collect()).collect();
    (0..n)
        .into_par_iter()
        .flat_map_iter(|xi| {
            let xb = &xb[xi];
            elems.iter().flat_map(move |&y| xb.iter().map(move |&p| r.mul(p, y)))
        })
        .collect()
}

/// Module-level caches; the ring-level ones are shared through [`RingContext`].
pub struct ModuleContext {
    rc: Arc<RingContext>,
    module: Arc<GradedModule>,
    hm: Vec<Elem>,
    lattice: OnceLock<Lattice>,
    index: OnceLock<HashMap<MemberSet, usize>>,
    act_tables: OnceLock<Vec<OnceLock<Vec<Elem>>>>,
    anns: OnceLock<Vec<OnceLock<MemberSet>>>,
    colons: Mutex<HashMap<usize, Arc<Vec<MemberSet>>>>,
    components: OnceLock<Vec<OnceLock<Lattice>>>,
    act_h: OnceLock<Vec<Elem>>,
}

impl ModuleContext {
    pub fn new(module: Arc<GradedModule>) -> Arc<Self> {
        let rc = RingContext::new(module.ring().clone());
        Self::with_ring(rc, module)
    }

    /// Reuses the caches of an existing ring context. The module must be over
    /// the same ring.
    pub fn with_ring(rc: Arc<RingContext>, module: Arc<GradedModule>) -> Arc<Self> {
        let hm = module.homogeneous_elements();
        Arc::new(Self {
            rc,
            module,
            hm,
            lattice: OnceLock::new(),
            index: OnceLock::new(),
            act_tables: OnceLock::new(),
            anns: OnceLock::new(),
            colons: Mutex::new(HashMap::new()),
            components: OnceLock::new(),
            act_h: OnceLock::new(),
        })
    }

    pub fn ring_context(&self) -> &Arc<RingContext> {
        &self.rc
    }

    pub fn module(&self) -> &Arc<GradedModule> {
        &self.module
    }

    pub fn ring(&self) -> &Arc<GradedRing> {
        self.rc.ring()
    }

    /// `h(M)` in ascending order.
    pub fn homogeneous(&self) -> &[Elem] {
        &self.hm
    }

    /// All graded submodules, sorted by size then members.
    pub fn lattice(&self) -> Result<Arc<Vec<Substructure>>> {
        self.lattice
            .get_or_init(|| lattice(|| enumerate_graded_submodules(&self.module, self.rc.cap)))
            .clone()
    }

    fn index_map(&self) -> Result<&HashMap<MemberSet, usize>> {
        let lat = self.lattice()?;
        Ok(self
            .index
            .get_or_init(|| lat.iter().enumerate().map(|(i, s)| (s.members().clone(), i)).collect()))
    }

    /// Position of a graded submodule in [`Self::lattice`].
    pub fn index_of(&self, k: &Substructure) -> Result<usize> {
        if k.domain() != self.module.size() {
            return Err(Error::Incompatible("substructure does not live in this module".into()));
        }
        self.index_map()?
            .get(k.members())
            .copied()
            .ok_or_else(|| Error::NotGraded("not a graded submodule of this module".into()))
    }

    pub fn whole_index(&self) -> Result<usize> {
        Ok(self.lattice()?.len() - 1)
    }

    fn ensure_slots(&self) -> Result<usize> {
        let n = self.lattice()?.len();
        self.act_tables.get_or_init(|| (0..n).map(|_| OnceLock::new()).collect());
        self.anns.get_or_init(|| (0..n).map(|_| OnceLock::new()).collect());
        Ok(n)
    }

    /// `a·l` for every `a ∈ A` and every additive generator `l` of lattice entry `li`,
    /// laid out as `[a * r + i]`.
    fn act_table(&self, li: usize) -> Result<&[Elem]> {
        self.ensure_slots()?;
        let lat = self.lattice()?;
        let slot = &self.act_tables.get().expect("slots initialised")[li];
        Ok(slot.get_or_init(|| {
            let gens = lat[li].additive_gens();
            action_table(&self.module, gens)
        }))
    }

    /// `Ann_A(L)` for lattice entry `li`.
    pub fn ann(&self, li: usize) -> Result<&MemberSet> {
        self.ensure_slots()?;
        let lat = self.lattice()?;
        let r = lat[li].additive_gens().len();
        let table = self.act_table(li)?;
        let slot = &self.anns.get().expect("slots initialised")[li];
        Ok(slot.get_or_init(|| {
            let size = self.ring().size();
            MemberSet::from_elems(
                size,
                (0..size as Elem).filter(|&a| table[a as usize * r..(a as usize + 1) * r].iter().all(|&v| v == 0)),
            )
        }))
    }

    /// `(K :_A L)` for every lattice entry `L`, `K` given by its index.
    pub fn colons(&self, ki: usize) -> Result<Arc<Vec<MemberSet>>> {
        if let Some(c) = self.colons.lock().expect("colon cache").get(&ki) {
            return Ok(c.clone());
        }
        let lat = self.lattice()?;
        let k = &lat[ki];
        let size = self.ring().size();
        let out: Vec<MemberSet> = (0..lat.len())
            .into_par_iter()
            .map(|li| {
                let r = lat[li].additive_gens().len();
                let table = self.act_table(li)?;
                Ok(MemberSet::from_elems(
                    size,
                    (0..size as Elem)
                        .filter(|&a| table[a as usize * r..(a as usize + 1) * r].iter().all(|&v| k.contains(v))),
                ))
            })
            .collect::<Result<_>>()?;
        let out = Arc::new(out);
        self.colons.lock().expect("colon cache").insert(ki, out.clone());
        Ok(out)
    }

    /// `(K :_A M)`.
    pub fn colon_whole(&self, ki: usize) -> Result<MemberSet> {
        let w = self.whole_index()?;
        Ok(self.colons(ki)?[w].clone())
    }

    /// `x·z` for `x ∈ h(A)`, `z ∈ h(M)`, laid out as `[xi * |h(M)| + zi]`.
    pub fn act_h(&self) -> &[Elem] {
        self.act_h.get_or_init(|| {
            let h = self.rc.homogeneous();
            let m = &self.module;
            let hm = &self.hm;
            h.par_iter().flat_map_iter(|&x| hm.iter().map(move |&z| m.act(x, z))).collect()
        })
    }

    /// `A_e`-submodules of `M_g`.
    pub fn component_lattice(&self, g: GroupElem) -> Result<Arc<Vec<Substructure>>> {
        let n = self.ring().group().order();
        let slots = self.components.get_or_init(|| (0..n).map(|_| OnceLock::new()).collect());
        slots
            .get(g)
            .ok_or_else(|| Error::input(format!("group element {g} out of range")))?
            .get_or_init(|| lattice(|| enumerate_component_submodules(&self.module, g, self.rc.cap)))
            .clone()
    }

    /// `(K :_{A_e} X)` where `X` is given by additive generators.
    pub fn identity_colon(&self, k: &Substructure, x_gens: &[Elem]) -> MemberSet {
        colon_members(&self.module, k, x_gens, self.rc.identity_elements())
    }

    /// `K ∩ M_g` as a substructure.
    pub fn component_part(&self, k: &Substructure, g: GroupElem) -> Substructure {
        let members = MemberSet::from_elems(
            self.module.size(),
            self.module.component(g).into_iter().filter(|&x| k.contains(x)),
        );
        Substructure::from_members(self.module.additive(), Kind::ComponentSubmodule(g), members)
    }
}

fn action_table(m: &GradedModule, gens: &[Elem]) -> Vec<Elem> {
    let ring = m.ring().ring();
    let ra = ring.additive();
    let size = ra.size();
    let r = gens.len();
    let mut out = vec![0; size * r];
    if r == 0 {
        return out;
    }
    let basis_images: Vec<Vec<Elem>> = (0..ra.rank())
        .map(|i| gens.iter().map(|&l| m.act(ra.basis(i), l)).collect())
        .collect();
    for a in 1..size as Elem {
        let i = (0..ra.rank())
            .rev()
            .find(|&i| ra.coord(a, i) != 0)
            .expect("nonzero element has a nonzero coordinate");
        let prev = a - ra.basis(i);
        for t in 0..r {
            out[a as usize * r + t] = m.add(out[prev as usize * r + t], basis_images[i][t]);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::FiniteGroup;
    use crate::ring::FiniteRing;

    #[test]
    fn action_table_matches_act() {
        let ring = FiniteRing::matrix(&FiniteRing::zmod(4).unwrap(), 2).unwrap();
        let a = Arc::new(GradedRing::good_matrix_grading(ring, 2, FiniteGroup::cyclic(4).unwrap(), &[0, 2]).unwrap());
        let m = Arc::new(GradedModule::regular(a));
        let gens = [5, 77, 200];
        let table = action_table(&m, &gens);
        for x in 0..m.ring().size() as Elem {
            for (t, &l) in gens.iter().enumerate() {
                assert_eq!(table[x as usize * 3 + t], m.act(x, l));
            }
        }
    }

    #[test]
    fn sandwich_generators() {
        let ring = FiniteRing::matrix(&FiniteRing::zmod(8).unwrap(), 2).unwrap();
        let a = Arc::new(GradedRing::good_matrix_grading(ring, 2, FiniteGroup::cyclic(4).unwrap(), &[0, 2]).unwrap());
        let rc = RingContext::new(a.clone());
        assert_eq!(rc.homogeneous().len(), 127);
        let two = a.ring().encode(&[2, 0, 0, 2]).unwrap();
        let i = rc.h_index(two).unwrap();
        let gens = rc.xay(i, i);
        assert_eq!(gens, rc.xay_of(two, two).as_slice());
        assert!(gens.iter().all(|&g| a.ring().decode(g).iter().all(|c| c % 4 == 0)));
    }

    #[test]
    fn colons_and_annihilators_in_z8() {
        let m = Arc::new(GradedModule::regular(Arc::new(GradedRing::trivial(FiniteRing::zmod(8).unwrap()))));
        let ctx = ModuleContext::new(m);
        let lat = ctx.lattice().unwrap();
        assert_eq!(lat.len(), 4);
        assert_eq!(ctx.ann(2).unwrap().to_vec(), vec![0, 4]);
        assert_eq!(ctx.colons(1).unwrap()[2].to_vec(), vec![0, 2, 4, 6]);
        assert_eq!(ctx.colon_whole(0).unwrap().to_vec(), vec![0]);
    }
}
