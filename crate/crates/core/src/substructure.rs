//! Submodules, ideals and colon sets as dense membership sets.
//!
//! Every substructure lives in the element index space of its ambient module
//! (or of the ring, for ideals and colon sets) and carries a short list of
//! additive generators next to its membership set.

use std::collections::HashMap;
use std::fmt;

use crate::additive::CyclicProduct;
use crate::bitset::MemberSet;
use crate::error::{Error, Result};
use crate::graded::{GradedRing, Grading};
use crate::group::GroupElem;
use crate::module::GradedModule;
use crate::Elem;

/// Default bound on the size of an enumerated lattice.
pub const DEFAULT_LATTICE_CAP: usize = 20_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Kind {
    /// Additive subgroup with no declared action.
    Subgroup,
    /// `A`-submodule of the ambient module.
    Submodule,
    /// `A_e`-submodule of the component `M_g`.
    ComponentSubmodule(GroupElem),
    LeftIdeal,
    TwoSidedIdeal,
    /// Left ideal of the subring `A_e`.
    IdentityLeftIdeal,
    /// Two-sided ideal of the subring `A_e`.
    IdentityIdeal,
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Kind::Subgroup => write!(f, "subgroup"),
            Kind::Submodule => write!(f, "submodule"),
            Kind::ComponentSubmodule(g) => write!(f, "component-submodule({g})"),
            Kind::LeftIdeal => write!(f, "left-ideal"),
            Kind::TwoSidedIdeal => write!(f, "two-sided-ideal"),
            Kind::IdentityLeftIdeal => write!(f, "identity-left-ideal"),
            Kind::IdentityIdeal => write!(f, "identity-ideal"),
        }
    }
}

/// A closed additive subgroup of an ambient structure.
#[derive(Debug, Clone)]
pub struct Substructure {
    kind: Kind,
    members: MemberSet,
    generators: Vec<Elem>,
    additive_gens: Vec<Elem>,
}

impl PartialEq for Substructure {
    fn eq(&self, other: &Self) -> bool {
        self.members == other.members
    }
}

impl Eq for Substructure {}

impl Substructure {
    pub fn kind(&self) -> Kind {
        self.kind
    }

    pub fn members(&self) -> &MemberSet {
        &self.members
    }

    /// Generators the substructure was built from.
    pub fn generators(&self) -> &[Elem] {
        &self.generators
    }

    /// Elements whose additive span is the whole substructure.
    pub fn additive_gens(&self) -> &[Elem] {
        &self.additive_gens
    }

    #[inline]
    pub fn contains(&self, x: Elem) -> bool {
        self.members.contains(x)
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn is_zero(&self) -> bool {
        self.members.len() == 1
    }

    pub fn is_whole(&self) -> bool {
        self.members.len() == self.members.domain()
    }

    pub fn domain(&self) -> usize {
        self.members.domain()
    }

    pub fn is_subset(&self, other: &Substructure) -> bool {
        self.members.is_subset(&other.members)
    }

    pub fn elements(&self) -> impl Iterator<Item = Elem> + '_ {
        self.members.iter()
    }

    pub fn with_kind(mut self, kind: Kind) -> Self {
        self.kind = kind;
        self
    }

    /// Wraps a set that is already known to be an additive subgroup,
    /// extracting an additive generating list.
    pub fn from_members(add: &CyclicProduct, kind: Kind, members: MemberSet) -> Self {
        let mut closer = Closer::new(add);
        for x in members.iter() {
            closer.extend(x);
        }
        debug_assert_eq!(closer.members, members, "member set is not an additive subgroup");
        let gens = closer.additive_gens.clone();
        Self {
            kind,
            members,
            generators: gens.clone(),
            additive_gens: gens,
        }
    }

    pub fn zero(domain: usize, kind: Kind) -> Self {
        Self {
            kind,
            members: MemberSet::from_elems(domain, [0]),
            generators: vec![],
            additive_gens: vec![],
        }
    }
}

/// Incremental additive-subgroup builder.
pub(crate) struct Closer<'a> {
    add: &'a CyclicProduct,
    members: MemberSet,
    list: Vec<Elem>,
    additive_gens: Vec<Elem>,
}

impl<'a> Closer<'a> {
    pub(crate) fn new(add: &'a CyclicProduct) -> Self {
        Self {
            add,
            members: MemberSet::from_elems(add.size(), [0]),
            list: vec![0],
            additive_gens: vec![],
        }
    }

    pub(crate) fn from_substructure(add: &'a CyclicProduct, s: &Substructure) -> Self {
        Self {
            add,
            members: s.members.clone(),
            list: s.members.to_vec(),
            additive_gens: s.additive_gens.clone(),
        }
    }

    pub(crate) fn len(&self) -> usize {
        self.list.len()
    }

    pub(crate) fn members(&self) -> &MemberSet {
        &self.members
    }

    pub(crate) fn elements(&self) -> &[Elem] {
        &self.list
    }

    /// Replaces the current subgroup `H` by `H + ⟨v⟩`. Returns false when `v ∈ H`.
    pub(crate) fn extend(&mut self, v: Elem) -> bool {
        if self.members.contains(v) {
            return false;
        }
        let base = self.list.len();
        let mut w = v;
        while !self.members.contains(w) {
            for idx in 0..base {
                let x = self.add.add(self.list[idx], w);
                self.members.insert(x);
                self.list.push(x);
            }
            w = self.add.add(w, v);
        }
        self.additive_gens.push(v);
        true
    }

    /// Worklist fixpoint: adds `gens` and keeps adding images of every new
    /// additive generator until nothing changes.
    pub(crate) fn close(&mut self, gens: &[Elem], images: &dyn Fn(Elem, &mut Vec<Elem>)) {
        let mut queue: Vec<Elem> = gens.iter().rev().copied().collect();
        let mut scratch = Vec::new();
        while let Some(v) = queue.pop() {
            if self.extend(v) {
                scratch.clear();
                images(v, &mut scratch);
                queue.extend(scratch.iter().rev());
            }
        }
    }

    pub(crate) fn finish(self, kind: Kind, generators: Vec<Elem>) -> Substructure {
        Substructure {
            kind,
            members: self.members,
            generators,
            additive_gens: self.additive_gens,
        }
    }
}

/// Which ring acts.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Scalars {
    /// The whole ring `A`.
    Ring,
    /// The identity component `A_e`.
    Identity,
}

/// Where a closure is computed.
#[derive(Debug, Clone, Copy)]
pub enum Ambient<'a> {
    /// Submodules of a graded module.
    Module(&'a GradedModule),
    /// Left ideals of a graded ring.
    LeftIdeals(&'a GradedRing),
    /// Two-sided ideals of a graded ring.
    TwoSidedIdeals(&'a GradedRing),
    /// Plain additive subgroups of a module.
    Additive(&'a GradedModule),
}

impl<'a> Ambient<'a> {
    pub fn additive(&self) -> &'a CyclicProduct {
        match self {
            Ambient::Module(m) | Ambient::Additive(m) => m.additive(),
            Ambient::LeftIdeals(a) | Ambient::TwoSidedIdeals(a) => a.ring().additive(),
        }
    }

    fn graded_ring(&self) -> &'a GradedRing {
        match self {
            Ambient::Module(m) | Ambient::Additive(m) => m.ring(),
            Ambient::LeftIdeals(a) | Ambient::TwoSidedIdeals(a) => a,
        }
    }

    pub fn grading(&self) -> &'a Grading {
        match self {
            Ambient::Module(m) | Ambient::Additive(m) => m.grading(),
            Ambient::LeftIdeals(a) | Ambient::TwoSidedIdeals(a) => a.grading(),
        }
    }

    pub fn size(&self) -> usize {
        self.additive().size()
    }

    fn kind(&self, scalars: Scalars, component: Option<GroupElem>) -> Kind {
        match (self, scalars) {
            (Ambient::Additive(_), _) => Kind::Subgroup,
            (Ambient::Module(_), Scalars::Ring) => Kind::Submodule,
            (Ambient::Module(m), Scalars::Identity) => {
                Kind::ComponentSubmodule(component.unwrap_or(m.ring().identity()))
            }
            (Ambient::LeftIdeals(_), Scalars::Ring) => Kind::LeftIdeal,
            (Ambient::TwoSidedIdeals(_), Scalars::Ring) => Kind::TwoSidedIdeal,
            (Ambient::LeftIdeals(_), Scalars::Identity) => Kind::IdentityLeftIdeal,
            (Ambient::TwoSidedIdeals(_), Scalars::Identity) => Kind::IdentityIdeal,
        }
    }
}

fn scalar_basis(ring: &GradedRing, scalars: Scalars) -> Vec<Elem> {
    match scalars {
        Scalars::Ring => ring.ring().basis_elems().into_iter().filter(|&b| b != 0).collect(),
        Scalars::Identity => ring.component_basis(ring.identity()),
    }
}

/// Smallest substructure of `ambient` containing `gens` and closed under the
/// chosen scalar action. With `component = Some(g)` every generator must lie in
/// the `g`-component (resp. in `A_e` for ideals of `A_e`).
pub fn closure(
    ambient: Ambient<'_>,
    gens: &[Elem],
    scalars: Scalars,
    component: Option<GroupElem>,
) -> Result<Substructure> {
    let add = ambient.additive();
    if let Some(&x) = gens.iter().find(|&&x| x as usize >= add.size()) {
        return Err(Error::input(format!("generator {x} lies outside the ambient structure")));
    }
    let grading = ambient.grading();
    let required = match (ambient, scalars) {
        (Ambient::LeftIdeals(a) | Ambient::TwoSidedIdeals(a), Scalars::Identity) => Some(a.identity()),
        _ => component,
    };
    if let Some(g) = required {
        if let Some(&x) = gens.iter().find(|&&x| grading.part(add, x, g) != x) {
            return Err(Error::input(format!(
                "generator {:?} does not lie in component {g}",
                add.decode(x)
            )));
        }
    }
    let basis = scalar_basis(ambient.graded_ring(), scalars);
    let mut closer = Closer::new(add);
    match ambient {
        Ambient::Module(m) => closer.close(gens, &|v, out| out.extend(basis.iter().map(|&b| m.act(b, v)))),
        Ambient::LeftIdeals(a) => {
            let r = a.ring();
            closer.close(gens, &|v, out| out.extend(basis.iter().map(|&b| r.mul(b, v))))
        }
        Ambient::TwoSidedIdeals(a) => {
            let r = a.ring();
            closer.close(gens, &|v, out| {
                for &b in &basis {
                    out.push(r.mul(b, v));
                    out.push(r.mul(v, b));
                }
            })
        }
        Ambient::Additive(_) => closer.close(gens, &|_, _| {}),
    }
    Ok(closer.finish(ambient.kind(scalars, required), gens.to_vec()))
}

/// Whether every homogeneous part of every member is a member.
pub fn is_graded(grading: &Grading, add: &CyclicProduct, k: &Substructure) -> bool {
    let n = grading.group_order();
    k.elements().all(|x| (0..n).all(|g| k.contains(grading.part(add, x, g))))
}

pub fn is_graded_in(ambient: Ambient<'_>, k: &Substructure) -> bool {
    is_graded(ambient.grading(), ambient.additive(), k)
}

/// `K + L`.
pub fn sum(add: &CyclicProduct, k: &Substructure, l: &Substructure) -> Result<Substructure> {
    check_same(k, l)?;
    let mut closer = Closer::from_substructure(add, k);
    for &v in l.additive_gens() {
        closer.extend(v);
    }
    let mut gens = k.generators.clone();
    gens.extend_from_slice(&l.generators);
    Ok(closer.finish(k.kind, gens))
}

/// `K ∩ L`.
pub fn intersect(add: &CyclicProduct, k: &Substructure, l: &Substructure) -> Result<Substructure> {
    check_same(k, l)?;
    Ok(Substructure::from_members(add, k.kind, k.members.intersection(&l.members)))
}

fn check_same(k: &Substructure, l: &Substructure) -> Result<()> {
    if k.domain() != l.domain() {
        return Err(Error::Incompatible(format!(
            "substructures of ambients with {} and {} elements",
            k.domain(),
            l.domain()
        )));
    }
    Ok(())
}

/// Proper, and no member of `lattice` lies strictly between `k` and the whole.
pub fn is_maximal_in(k: &Substructure, lattice: &[Substructure]) -> bool {
    !k.is_whole()
        && !lattice
            .iter()
            .any(|l| !l.is_whole() && k.len() < l.len() && k.is_subset(l))
}

/// Ring elements available as a colon universe.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Universe {
    Ring,
    Identity,
    Component(GroupElem),
}

impl Universe {
    pub fn elements(&self, ring: &GradedRing) -> Vec<Elem> {
        match *self {
            Universe::Ring => ring.ring().elements().collect(),
            Universe::Identity => ring.component(ring.identity()),
            Universe::Component(g) => ring.component(g),
        }
    }
}

/// `{u ∈ universe : u·X ⊆ K}`, tested on the additive generators of `X` only.
pub fn colon(module: &GradedModule, k: &Substructure, x_gens: &[Elem], universe: Universe) -> Result<Substructure> {
    if k.domain() != module.size() {
        return Err(Error::Incompatible("K is not a substructure of this module".into()));
    }
    let ring = module.ring();
    let members = colon_members(module, k, x_gens, &universe.elements(ring));
    let kind = match universe {
        Universe::Ring => Kind::TwoSidedIdeal,
        Universe::Identity => Kind::IdentityLeftIdeal,
        Universe::Component(_) => Kind::Subgroup,
    };
    Ok(Substructure::from_members(ring.ring().additive(), kind, members))
}

pub(crate) fn colon_members(module: &GradedModule, k: &Substructure, x_gens: &[Elem], universe: &[Elem]) -> MemberSet {
    let mut out = MemberSet::empty(module.ring().size());
    for &u in universe {
        if x_gens.iter().all(|&x| k.contains(module.act(u, x))) {
            out.insert(u);
        }
    }
    out
}

/// `Ann(L) = (0 : L)` over the chosen scope.
pub fn annihilator(module: &GradedModule, l: &Substructure, scope: Universe) -> Result<Substructure> {
    let zero = Substructure::zero(module.size(), Kind::Submodule);
    colon(module, &zero, l.additive_gens(), scope)
}

/// `(K :_M r) = {m ∈ M : r·m ∈ K}`, or restricted to `M_g`.
pub fn module_colon(module: &GradedModule, k: &Substructure, r: Elem, component: Option<GroupElem>) -> Substructure {
    let universe: Vec<Elem> = match component {
        Some(g) => module.component(g),
        None => module.additive().elements().collect(),
    };
    let members = MemberSet::from_elems(
        module.size(),
        universe.into_iter().filter(|&m| k.contains(module.act(r, m))),
    );
    let kind = match component {
        Some(g) => Kind::ComponentSubmodule(g),
        None => Kind::Submodule,
    };
    Substructure::from_members(module.additive(), kind, members)
}

/// Complete lattice generated by sums of the given cyclic seeds, sorted by
/// size and then by member list.
pub fn join_closure(add: &CyclicProduct, seeds: Vec<Substructure>, zero: Substructure, cap: usize) -> Result<Vec<Substructure>> {
    let mut distinct: Vec<Substructure> = Vec::new();
    let mut seen_seeds: HashMap<MemberSet, ()> = HashMap::new();
    for s in seeds {
        if !s.is_zero() && seen_seeds.insert(s.members.clone(), ()).is_none() {
            distinct.push(s);
        }
    }
    let mut index: HashMap<MemberSet, usize> = HashMap::new();
    let mut lattice = vec![zero];
    index.insert(lattice[0].members.clone(), 0);
    let mut cursor = 0;
    while cursor < lattice.len() {
        let current = lattice[cursor].clone();
        cursor += 1;
        for seed in &distinct {
            if seed.is_subset(&current) {
                continue;
            }
            let joined = sum(add, &current, seed)?;
            if !index.contains_key(&joined.members) {
                if lattice.len() >= cap {
                    return Err(Error::CapExceeded {
                        what: "lattice elements".into(),
                        cap,
                    });
                }
                index.insert(joined.members.clone(), lattice.len());
                lattice.push(joined);
            }
        }
    }
    lattice.sort_by(|a, b| a.members.cmp(&b.members));
    Ok(lattice)
}

fn lattice_from_seeds(ambient: Ambient<'_>, seeds: &[Elem], scalars: Scalars, component: Option<GroupElem>, cap: usize) -> Result<Vec<Substructure>> {
    let mut cyclic = Vec::with_capacity(seeds.len());
    let mut seen: HashMap<MemberSet, ()> = HashMap::new();
    for &x in seeds {
        if x == 0 {
            continue;
        }
        let c = closure(ambient, &[x], scalars, component)?;
        if seen.insert(c.members.clone(), ()).is_none() {
            cyclic.push(c);
        }
    }
    let zero = closure(ambient, &[], scalars, component)?;
    join_closure(ambient.additive(), cyclic, zero, cap)
}

/// All graded `A`-submodules of `M`.
pub fn enumerate_graded_submodules(m: &GradedModule, cap: usize) -> Result<Vec<Substructure>> {
    lattice_from_seeds(Ambient::Module(m), &m.homogeneous_elements(), Scalars::Ring, None, cap)
}

/// All `A`-submodules of `M`, graded or not.
pub fn enumerate_submodules(m: &GradedModule, cap: usize) -> Result<Vec<Substructure>> {
    let all: Vec<Elem> = m.additive().elements().collect();
    lattice_from_seeds(Ambient::Module(m), &all, Scalars::Ring, None, cap)
}

/// All `A_e`-submodules of `M_g`.
pub fn enumerate_component_submodules(m: &GradedModule, g: GroupElem, cap: usize) -> Result<Vec<Substructure>> {
    lattice_from_seeds(Ambient::Module(m), &m.component(g), Scalars::Identity, Some(g), cap)
}

/// Two-sided ideals of `A_e`.
pub fn enumerate_identity_ideals(a: &GradedRing, cap: usize) -> Result<Vec<Substructure>> {
    lattice_from_seeds(Ambient::TwoSidedIdeals(a), &a.component(a.identity()), Scalars::Identity, None, cap)
}

/// Left ideals of `A_e`.
pub fn enumerate_identity_left_ideals(a: &GradedRing, cap: usize) -> Result<Vec<Substructure>> {
    lattice_from_seeds(Ambient::LeftIdeals(a), &a.component(a.identity()), Scalars::Identity, None, cap)
}

pub fn enumerate_graded_left_ideals(a: &GradedRing, cap: usize) -> Result<Vec<Substructure>> {
    lattice_from_seeds(Ambient::LeftIdeals(a), &a.homogeneous_elements(), Scalars::Ring, None, cap)
}

pub fn enumerate_graded_two_sided_ideals(a: &GradedRing, cap: usize) -> Result<Vec<Substructure>> {
    lattice_from_seeds(Ambient::TwoSidedIdeals(a), &a.homogeneous_elements(), Scalars::Ring, None, cap)
}

/// Every left ideal of `A`, graded or not.
pub fn enumerate_left_ideals(a: &GradedRing, cap: usize) -> Result<Vec<Substructure>> {
    let all: Vec<Elem> = a.ring().elements().collect();
    lattice_from_seeds(Ambient::LeftIdeals(a), &all, Scalars::Ring, None, cap)
}

pub fn enumerate_ideals(a: &GradedRing, cap: usize) -> Result<Vec<Substructure>> {
    let all: Vec<Elem> = a.ring().elements().collect();
    lattice_from_seeds(Ambient::TwoSidedIdeals(a), &all, Scalars::Ring, None, cap)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::FiniteGroup;
    use crate::ring::FiniteRing;
    use std::sync::Arc;

    fn z(n: u32) -> Arc<GradedRing> {
        Arc::new(GradedRing::trivial(FiniteRing::zmod(n).unwrap()))
    }

    fn m2(n: u32) -> Arc<GradedRing> {
        let ring = FiniteRing::matrix(&FiniteRing::zmod(n).unwrap(), 2).unwrap();
        Arc::new(GradedRing::good_matrix_grading(ring, 2, FiniteGroup::cyclic(4).unwrap(), &[0, 2]).unwrap())
    }

    #[test]
    fn closure_of_two_in_z8() {
        let m = GradedModule::regular(z(8));
        let k = closure(Ambient::Module(&m), &[2], Scalars::Ring, None).unwrap();
        assert_eq!(k.members().to_vec(), vec![0, 2, 4, 6]);
        assert_eq!(k.generators(), &[2]);
        let zero = closure(Ambient::Module(&m), &[], Scalars::Ring, None).unwrap();
        assert!(zero.is_zero());
    }

    #[test]
    fn closure_of_two_identity_in_m2z8() {
        let a = m2(8);
        let m = GradedModule::regular(a.clone());
        let two = a.ring().encode(&[2, 0, 0, 2]).unwrap();
        let k = closure(Ambient::Module(&m), &[two], Scalars::Ring, None).unwrap();
        assert_eq!(k.len(), 256);
        assert!(k.elements().all(|x| a.ring().decode(x).iter().all(|c| c % 2 == 0)));
        assert!(is_graded_in(Ambient::Module(&m), &k));
    }

    #[test]
    fn additive_span_of_mixed_element_is_not_graded() {
        let ring = FiniteRing::matrix(&FiniteRing::zmod(2).unwrap(), 2).unwrap();
        let a = Arc::new(GradedRing::good_matrix_grading(ring, 2, FiniteGroup::cyclic(4).unwrap(), &[0, 2]).unwrap());
        let m = GradedModule::regular(a.clone());
        let x = a.ring().encode(&[1, 1, 0, 0]).unwrap();
        let s = closure(Ambient::Additive(&m), &[x], Scalars::Ring, None).unwrap();
        assert_eq!(s.len(), 2);
        assert!(!is_graded_in(Ambient::Module(&m), &s));
        let zero = closure(Ambient::Module(&m), &[], Scalars::Ring, None).unwrap();
        assert!(is_graded_in(Ambient::Module(&m), &zero));
    }

    #[test]
    fn z8_lattice() {
        let m = GradedModule::regular(z(8));
        let lat = enumerate_graded_submodules(&m, DEFAULT_LATTICE_CAP).unwrap();
        let sizes: Vec<usize> = lat.iter().map(|k| k.len()).collect();
        assert_eq!(sizes, vec![1, 2, 4, 8]);
        let ideals = enumerate_identity_ideals(m.ring(), DEFAULT_LATTICE_CAP).unwrap();
        assert_eq!(ideals.len(), 4);
    }

    #[test]
    fn zero_module_and_zero_ring() {
        let m = GradedModule::zero(z(3));
        assert_eq!(enumerate_graded_submodules(&m, 10).unwrap().len(), 1);
        let zr = z(1);
        assert_eq!(enumerate_ideals(&zr, 10).unwrap().len(), 1);
    }

    #[test]
    fn cap_is_reported() {
        let m = GradedModule::regular(z(8));
        let err = enumerate_graded_submodules(&m, 2).unwrap_err();
        assert!(matches!(err, Error::CapExceeded { cap: 2, .. }));
    }

    #[test]
    fn component_submodules_of_m2z2() {
        let ring = FiniteRing::matrix(&FiniteRing::zmod(2).unwrap(), 2).unwrap();
        let a = Arc::new(GradedRing::good_matrix_grading(ring, 2, FiniteGroup::cyclic(4).unwrap(), &[0, 2]).unwrap());
        let m = GradedModule::regular(a.clone());
        let subs = enumerate_component_submodules(&m, 2, 100).unwrap();
        let e12 = a.ring().encode(&[0, 1, 0, 0]).unwrap();
        let e21 = a.ring().encode(&[0, 0, 1, 0]).unwrap();
        let as_sets: Vec<Vec<Elem>> = subs.iter().map(|s| s.members().to_vec()).collect();
        assert!(as_sets.contains(&vec![0, e12]));
        assert!(as_sets.contains(&vec![0, e21]));
        assert_eq!(subs.len(), 4);
    }

    #[test]
    fn colon_and_annihilator_in_z8() {
        let m = GradedModule::regular(z(8));
        let lat = enumerate_graded_submodules(&m, 100).unwrap();
        let (zero, four, two, whole) = (&lat[0], &lat[1], &lat[2], &lat[3]);
        let c = colon(&m, four, two.additive_gens(), Universe::Ring).unwrap();
        assert_eq!(c.members().to_vec(), vec![0, 2, 4, 6]);
        let c = colon(&m, whole, whole.additive_gens(), Universe::Ring).unwrap();
        assert!(c.is_whole());
        let c = colon(&m, zero, whole.additive_gens(), Universe::Ring).unwrap();
        assert!(c.is_zero());
        assert_eq!(annihilator(&m, two, Universe::Ring).unwrap().members().to_vec(), vec![0, 4]);
        assert!(annihilator(&m, zero, Universe::Ring).unwrap().is_whole());
    }

    #[test]
    fn annihilator_of_regular_m2z8_is_zero() {
        let m = GradedModule::regular(m2(8));
        let whole = closure(Ambient::Module(&m), &[m.ring().ring().one()], Scalars::Ring, None).unwrap();
        assert!(whole.is_whole());
        assert!(annihilator(&m, &whole, Universe::Ring).unwrap().is_zero());
    }

    #[test]
    fn sums_meets_and_maximality() {
        let m = GradedModule::regular(z(8));
        let lat = enumerate_graded_submodules(&m, 100).unwrap();
        let add = m.additive();
        assert_eq!(sum(add, &lat[2], &lat[1]).unwrap(), lat[2]);
        assert_eq!(intersect(add, &lat[2], &lat[3]).unwrap(), lat[2]);
        assert!(is_maximal_in(&lat[2], &lat));
        assert!(!is_maximal_in(&lat[1], &lat));
        assert!(!is_maximal_in(&lat[3], &lat));
    }

    #[test]
    fn module_side_colon() {
        let m = GradedModule::regular(z(8));
        let four = closure(Ambient::Module(&m), &[4], Scalars::Ring, None).unwrap();
        let c = module_colon(&m, &four, 2, None);
        assert_eq!(c.members().to_vec(), vec![0, 2, 4, 6]);
    }
}
