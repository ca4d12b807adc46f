use rayon::prelude::*;

use super::context::ModuleContext;
use super::{PredicateVerdict, Witness};
use crate::bitset::MemberSet;
use crate::error::{Error, Result};
use crate::graded::GradedRing;
use crate::group::GroupElem;
use crate::module::GradedModule;
use crate::substructure::{annihilator, closure, Ambient, Closer, Kind, Scalars, Substructure, Universe};
use crate::Elem;

/// Default largest cover size tried by [`is_u_module`].
pub const DEFAULT_COVER_BOUND: usize = 3;

/// Which ring a structural check runs over.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RingScope {
    /// The whole ring `A`.
    Whole,
    /// The identity component `A_e`.
    Identity,
}

/// `Ann(L) = 0` over the chosen scope.
pub fn is_faithful(m: &GradedModule, l: &Substructure, scope: Universe) -> Result<bool> {
    Ok(annihilator(m, l, scope)?.is_zero())
}

/// Every nonzero `A_e`-submodule of `M_g` is faithful over `A_e`.
pub fn all_nonzero_component_submodules_faithful(ctx: &ModuleContext, g: GroupElem) -> Result<bool> {
    let zero = Substructure::zero(ctx.module().size(), Kind::Submodule);
    Ok(ctx
        .component_lattice(g)?
        .iter()
        .filter(|l| !l.is_zero())
        .all(|l| ctx.identity_colon(&zero, l.additive_gens()).len() == 1))
}

/// Left Duo test through principal left ideals: every left ideal is two-sided
/// iff `xR ⊆ Rx` for every `x`. A failure reports `x` and a basis element `b`
/// with `x·b ∉ Rx`.
pub fn is_left_duo(ring: &GradedRing, scope: RingScope) -> PredicateVerdict {
    const ID: &str = "left-duo";
    let r = ring.ring();
    let (elems, basis): (Vec<Elem>, Vec<Elem>) = match scope {
        RingScope::Whole => (r.elements().collect(), r.basis_elems()),
        RingScope::Identity => (ring.component(ring.identity()), ring.component_basis(ring.identity())),
    };
    let commutative = basis.iter().all(|&a| basis.iter().all(|&b| r.mul(a, b) == r.mul(b, a)));
    if commutative {
        return PredicateVerdict::holds(ID).with_note("commutative");
    }
    let witness = elems.par_iter().find_map_first(|&x| {
        let mut left = Closer::new(r.additive());
        for &b in &basis {
            left.extend(r.mul(b, x));
        }
        basis
            .iter()
            .find(|&&b| !left.members().contains(r.mul(x, b)))
            .map(|&b| Witness::NotRightClosed { x, b })
    });
    PredicateVerdict::from_search(ID, witness)
}

/// The bounded u-module test on `M_g` over `A_e`: no submodule `K` equals a
/// union of at most `bound` of its proper submodules. Only maximal proper
/// submodules need to be tried, since any cover refines to one by them.
pub fn is_u_module(ctx: &ModuleContext, g: GroupElem, bound: usize) -> Result<PredicateVerdict> {
    if bound < 2 {
        return Err(Error::input("cover bound must be at least 2"));
    }
    let lat = ctx.component_lattice(g)?;
    let note = format!("cover bound {bound}");
    for (ki, k) in lat.iter().enumerate() {
        let maximal = maximal_below(&lat, ki);
        if let Some(cover) = find_cover(k, &maximal, bound) {
            let witness = Witness::Cover {
                k: k.additive_gens().to_vec(),
                cover: cover.iter().map(|s| s.additive_gens().to_vec()).collect(),
            };
            return Ok(PredicateVerdict::fails("u-module", witness).with_note(note));
        }
    }
    Ok(PredicateVerdict::holds("u-module").with_note(note))
}

/// Exact u-module test: a finite module is a u-module iff each submodule is
/// cyclic, i.e. is not the union of its maximal proper submodules.
pub fn is_u_module_exact(ctx: &ModuleContext, g: GroupElem) -> Result<bool> {
    let lat = ctx.component_lattice(g)?;
    Ok((0..lat.len()).all(|ki| {
        let maximal = maximal_below(&lat, ki);
        maximal.len() < 2 || union_len(&maximal) < lat[ki].len()
    }))
}

fn maximal_below(lat: &[Substructure], ki: usize) -> Vec<&Substructure> {
    let k = &lat[ki];
    let below: Vec<&Substructure> = lat[..ki].iter().filter(|s| s.len() < k.len() && s.is_subset(k)).collect();
    below
        .iter()
        .copied()
        .filter(|s| !below.iter().any(|t| s.len() < t.len() && s.is_subset(t)))
        .collect()
}

fn union_len(parts: &[&Substructure]) -> usize {
    let mut u = MemberSet::empty(parts[0].domain());
    for p in parts {
        u = u.union(p.members());
    }
    u.len()
}

fn find_cover<'a>(k: &Substructure, maximal: &[&'a Substructure], bound: usize) -> Option<Vec<&'a Substructure>> {
    fn go<'a>(
        k: &Substructure,
        maximal: &[&'a Substructure],
        start: usize,
        left: usize,
        acc: &mut Vec<&'a Substructure>,
        union: &MemberSet,
    ) -> bool {
        if acc.len() >= 2 && union.len() == k.len() {
            return true;
        }
        if left == 0 {
            return false;
        }
        for i in start..maximal.len() {
            acc.push(maximal[i]);
            if go(k, maximal, i + 1, left - 1, acc, &union.union(maximal[i].members())) {
                return true;
            }
            acc.pop();
        }
        false
    }
    if maximal.len() < 2 {
        return None;
    }
    let mut acc = Vec::new();
    go(k, maximal, 0, bound, &mut acc, &MemberSet::empty(k.domain())).then_some(acc)
}

/// Every graded submodule `K` equals `(K :_A M)·M`.
pub fn is_graded_multiplication(ctx: &ModuleContext) -> Result<PredicateVerdict> {
    const ID: &str = "graded-multiplication";
    let m = ctx.module();
    let lat = ctx.lattice()?;
    let basis = m.basis_elems();
    let add = m.ring().ring().additive();
    for (ki, k) in lat.iter().enumerate() {
        let colon = Substructure::from_members(add, Kind::TwoSidedIdeal, ctx.colon_whole(ki)?);
        let products: Vec<Elem> = colon
            .additive_gens()
            .iter()
            .flat_map(|&a| basis.iter().map(move |&v| m.act(a, v)))
            .collect();
        let im = closure(Ambient::Module(m), &products, Scalars::Ring, None)?;
        if im != *k {
            return Ok(PredicateVerdict::fails(ID, Witness::Substructure {
                k: k.additive_gens().to_vec(),
            }));
        }
    }
    Ok(PredicateVerdict::holds(ID))
}

/// Whether some power `x^n`, `n ≥ 1`, lies in `set`. Powers of an element of a
/// finite ring are eventually periodic, so at most `|A|` of them are distinct.
fn some_power_in(ring: &GradedRing, x: Elem, set: &MemberSet) -> bool {
    let r = ring.ring();
    let mut p = x;
    for _ in 0..ring.size() {
        if set.contains(p) {
            return true;
        }
        p = r.mul(p, x);
    }
    false
}

/// `Grad(I)`: elements whose homogeneous parts all have a power in `I`.
/// Over `A_e` the grading is trivial and `I` must lie in `A_e`. The ring in
/// scope has to be left Duo.
pub fn graded_radical(ring: &GradedRing, i: &Substructure, scope: RingScope) -> Result<Substructure> {
    if i.domain() != ring.size() {
        return Err(Error::Incompatible("I does not live in this ring".into()));
    }
    let duo = is_left_duo(ring, scope);
    if !duo.holds {
        return Err(Error::Incompatible("the graded radical needs a left Duo ring".into()));
    }
    let add = ring.ring().additive();
    let (elems, kind): (Vec<Elem>, Kind) = match scope {
        RingScope::Whole => (ring.ring().elements().collect(), Kind::TwoSidedIdeal),
        RingScope::Identity => {
            if i.elements().any(|x| !ring.component(ring.identity()).contains(&x)) {
                return Err(Error::Incompatible("I is not contained in A_e".into()));
            }
            (ring.component(ring.identity()), Kind::IdentityIdeal)
        }
    };
    let n = ring.group().order();
    let inside: Vec<Elem> = elems
        .par_iter()
        .copied()
        .filter(|&x| match scope {
            RingScope::Identity => some_power_in(ring, x, i.members()),
            RingScope::Whole => (0..n).all(|g| some_power_in(ring, ring.homogeneous_part(x, g), i.members())),
        })
        .collect();
    let members = MemberSet::from_elems(ring.size(), inside);
    let mut closer = Closer::new(add);
    for x in members.iter() {
        closer.extend(x);
    }
    if closer.len() != members.len() {
        return Err(Error::Axiom("graded radical is not closed under addition".into()));
    }
    Ok(Substructure::from_members(add, kind, members))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::FiniteGroup;
    use crate::ring::FiniteRing;
    use std::sync::Arc;

    fn trivial(n: u32) -> Arc<GradedRing> {
        Arc::new(GradedRing::trivial(FiniteRing::zmod(n).unwrap()))
    }

    #[test]
    fn radicals_in_z8() {
        let a = trivial(8);
        let zero = Substructure::zero(8, Kind::TwoSidedIdeal);
        let g = graded_radical(&a, &zero, RingScope::Whole).unwrap();
        assert_eq!(g.members().to_vec(), vec![0, 2, 4, 6]);
        let four = closure(Ambient::TwoSidedIdeals(&a), &[4], Scalars::Ring, None).unwrap();
        assert_eq!(graded_radical(&a, &four, RingScope::Whole).unwrap(), g);
        assert_eq!(graded_radical(&a, &g, RingScope::Identity).unwrap(), g);
    }

    #[test]
    fn duo_verdicts() {
        assert!(is_left_duo(&trivial(12), RingScope::Whole).holds);
        let m2 = GradedRing::trivial(FiniteRing::matrix(&FiniteRing::zmod(2).unwrap(), 2).unwrap());
        let v = is_left_duo(&m2, RingScope::Whole);
        assert!(!v.holds);
        let zero = Substructure::zero(16, Kind::TwoSidedIdeal);
        assert!(graded_radical(&m2, &zero, RingScope::Whole).is_err());
        let graded = GradedRing::good_matrix_grading(
            FiniteRing::matrix(&FiniteRing::zmod(2).unwrap(), 2).unwrap(),
            2,
            FiniteGroup::cyclic(4).unwrap(),
            &[0, 2],
        )
        .unwrap();
        assert!(is_left_duo(&graded, RingScope::Identity).holds);
    }

    #[test]
    fn u_modules() {
        let z4 = ModuleContext::new(Arc::new(GradedModule::regular(trivial(4))));
        assert!(is_u_module(&z4, 0, DEFAULT_COVER_BOUND).unwrap().holds);
        assert!(is_u_module_exact(&z4, 0).unwrap());
        let klein = ModuleContext::new(Arc::new(GradedModule::free(trivial(2), 2).unwrap()));
        let v = is_u_module(&klein, 0, DEFAULT_COVER_BOUND).unwrap();
        assert!(!v.holds);
        match v.witness {
            Some(Witness::Cover { cover, .. }) => assert_eq!(cover.len(), 3),
            other => panic!("unexpected witness {other:?}"),
        }
        assert!(!is_u_module_exact(&klein, 0).unwrap());
        assert!(is_u_module(&klein, 0, 1).is_err());
    }

    #[test]
    fn multiplication_modules() {
        let z8 = ModuleContext::new(Arc::new(GradedModule::regular(trivial(8))));
        assert!(is_graded_multiplication(&z8).unwrap().holds);
        let klein = ModuleContext::new(Arc::new(GradedModule::free(trivial(2), 2).unwrap()));
        assert!(!is_graded_multiplication(&klein).unwrap().holds);
        let zero = ModuleContext::new(Arc::new(GradedModule::zero(trivial(2))));
        assert!(is_graded_multiplication(&zero).unwrap().holds);
    }

    #[test]
    fn faithfulness() {
        let ctx = ModuleContext::new(Arc::new(GradedModule::regular(trivial(8))));
        let lat = ctx.lattice().unwrap();
        assert!(is_faithful(ctx.module(), &lat[3], Universe::Ring).unwrap());
        assert!(!is_faithful(ctx.module(), &lat[2], Universe::Ring).unwrap());
        assert!(!is_faithful(ctx.module(), &lat[0], Universe::Ring).unwrap());
        assert!(!all_nonzero_component_submodules_faithful(&ctx, 0).unwrap());
        let z3 = ModuleContext::new(Arc::new(GradedModule::regular(trivial(3))));
        assert!(all_nonzero_component_submodules_faithful(&z3, 0).unwrap());
    }
}
