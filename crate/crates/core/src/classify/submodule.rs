use rayon::prelude::*;

use super::context::ModuleContext;
use super::{Predicate, PredicateVerdict, Target, Witness};
use crate::error::{Error, Result};
use crate::module::GradedModule;
use crate::substructure::Substructure;
use crate::Elem;

/// Status of the condition `0 ≠ xAyL ⊆ K`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sandwich {
    Holds,
    ProductZero,
    NotContained,
}

/// Decides `0 ≠ xAyL ⊆ K` through the colon reduction: `xAyL ⊆ K` iff every
/// `x·b·y` lies in `(K :_A L)`, and `xAyL = 0` iff every `x·b·y` lies in
/// `Ann_A(L)`. `middle` lists the additive generators of the middle ring
/// (the basis of `A`, or of `A_e`).
pub fn sandwich_test(m: &GradedModule, x: Elem, y: Elem, middle: &[Elem], l: &Substructure, k: &Substructure) -> Sandwich {
    let r = m.ring().ring();
    let mut zero = true;
    for &b in middle {
        let g = r.mul(r.mul(x, b), y);
        for &v in l.additive_gens() {
            let w = m.act(g, v);
            if !k.contains(w) {
                return Sandwich::NotContained;
            }
            zero &= w == 0;
        }
    }
    if zero {
        Sandwich::ProductZero
    } else {
        Sandwich::Holds
    }
}

/// A tuple `(x, y, L)` with `xAyL = 0`, `xL ⊄ K`, `yL ⊄ K`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TripleZero {
    pub x: Elem,
    pub y: Elem,
    /// Position of `L` in the graded-submodule lattice.
    pub l_index: usize,
    pub l: Vec<Elem>,
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Scan {
    ClassicalPrime,
    ClassicalWeaklyPrime,
    Weakly2Absorbing,
    TripleZero,
}

/// First `(xi, yi, li)` in lexicographic order satisfying the scan condition,
/// restricted to `x, y` drawn from `pool` (indices into `h(A)`).
fn sandwich_scan(ctx: &ModuleContext, ki: usize, mode: Scan, pool: &[usize]) -> Result<Option<(usize, usize, usize)>> {
    let lat = ctx.lattice()?;
    let rc = ctx.ring_context();
    let colons = ctx.colons(ki)?;
    let anns: Vec<_> = (0..lat.len()).map(|li| ctx.ann(li)).collect::<Result<_>>()?;
    let whole = ctx.colon_whole(ki)?;
    let h = rc.homogeneous();
    Ok(pool.par_iter().find_map_first(|&xi| {
        let x = h[xi];
        pool.iter().find_map(|&yi| {
            let y = h[yi];
            let gens = rc.xay(xi, yi);
            let in_whole = mode == Scan::Weakly2Absorbing && gens.iter().all(|&g| whole.contains(g));
            if in_whole {
                return None;
            }
            (0..lat.len()).find_map(|li| {
                let colon = &colons[li];
                if colon.contains(x) || colon.contains(y) {
                    return None;
                }
                let zero = gens.iter().all(|&g| anns[li].contains(g));
                let hit = match mode {
                    Scan::TripleZero => zero,
                    Scan::ClassicalPrime => gens.iter().all(|&g| colon.contains(g)),
                    Scan::ClassicalWeaklyPrime | Scan::Weakly2Absorbing => {
                        !zero && gens.iter().all(|&g| colon.contains(g))
                    }
                };
                hit.then_some((xi, yi, li))
            })
        })
    }))
}

/// First `(x, y, z)` with `0 ≠ xyz ∈ K`, `xz ∉ K`, `yz ∉ K`
/// (and `xy ∉ (K :_A M)` when `absorbing`).
fn elementwise_scan(ctx: &ModuleContext, k: &Substructure, ki: usize, absorbing: bool) -> Result<Option<Witness>> {
    let rc = ctx.ring_context();
    let r = ctx.ring().ring();
    let h = rc.homogeneous();
    let hm = ctx.homogeneous();
    let act = ctx.act_h();
    let whole = if absorbing { Some(ctx.colon_whole(ki)?) } else { None };
    let nm = hm.len();
    Ok((0..h.len()).into_par_iter().find_map_first(|xi| {
        (0..h.len()).find_map(|yi| {
            let xy = r.mul(h[xi], h[yi]);
            if xy == 0 || whole.as_ref().is_some_and(|w| w.contains(xy)) {
                return None;
            }
            let pi = rc.h_index(xy).expect("products of homogeneous elements are homogeneous");
            (0..nm).find_map(|zi| {
                let xyz = act[pi * nm + zi];
                let hit = xyz != 0
                    && k.contains(xyz)
                    && !k.contains(act[xi * nm + zi])
                    && !k.contains(act[yi * nm + zi]);
                hit.then_some(Witness::Elementwise {
                    x: h[xi],
                    y: h[yi],
                    z: hm[zi],
                })
            })
        })
    }))
}

/// First `(I, L)` with `IL ⊆ K` (and `IL ≠ 0` when `weak`), `L ⊄ K`, `I ⊄ (K :_A M)`.
fn prime_scan(ctx: &ModuleContext, k: &Substructure, ki: usize, weak: bool) -> Result<Option<Witness>> {
    let lat = ctx.lattice()?;
    let ideals = ctx.ring_context().graded_ideals()?;
    let colons = ctx.colons(ki)?;
    let whole = ctx.colon_whole(ki)?;
    let anns: Vec<_> = (0..lat.len()).map(|li| ctx.ann(li)).collect::<Result<_>>()?;
    Ok(ideals.iter().find_map(|i| {
        if i.members().is_subset(&whole) {
            return None;
        }
        (0..lat.len()).find_map(|li| {
            let l = &lat[li];
            if l.is_subset(k) || !i.members().is_subset(&colons[li]) {
                return None;
            }
            if weak && i.members().is_subset(anns[li]) {
                return None;
            }
            Some(Witness::IdealModule {
                i: i.additive_gens().to_vec(),
                l: l.additive_gens().to_vec(),
            })
        })
    }))
}

/// Classifies a graded submodule `K` of the context's module.
pub fn classify_submodule(ctx: &ModuleContext, k: &Substructure, predicate: Predicate) -> Result<PredicateVerdict> {
    if predicate.target() != Target::Submodule {
        return Err(Error::input(format!("{predicate} is not a submodule predicate")));
    }
    let ki = ctx.index_of(k)?;
    let id = predicate.id();
    if k.is_whole() {
        return Ok(PredicateVerdict::hypothesis(id, "K is not proper"));
    }
    let all: Vec<usize> = (0..ctx.ring_context().homogeneous().len()).collect();
    let lat = ctx.lattice()?;
    let sandwich = |mode| -> Result<Option<Witness>> {
        Ok(sandwich_scan(ctx, ki, mode, &all)?.map(|(xi, yi, li)| {
            let h = ctx.ring_context().homogeneous();
            Witness::Sandwich {
                x: h[xi],
                y: h[yi],
                l: lat[li].additive_gens().to_vec(),
            }
        }))
    };
    let witness = match predicate {
        Predicate::GradedPrime => prime_scan(ctx, k, ki, false)?,
        Predicate::GradedWeaklyPrime => prime_scan(ctx, k, ki, true)?,
        Predicate::GradedClassicalPrime => sandwich(Scan::ClassicalPrime)?,
        Predicate::GradedClassicalWeaklyPrime => sandwich(Scan::ClassicalWeaklyPrime)?,
        Predicate::GradedWeakly2Absorbing => sandwich(Scan::Weakly2Absorbing)?,
        Predicate::GradedCompletelyClassicalWeaklyPrime => elementwise_scan(ctx, k, ki, false)?,
        Predicate::GradedCompletelyWeakly2Absorbing => elementwise_scan(ctx, k, ki, true)?,
        _ => unreachable!("target checked above"),
    };
    Ok(PredicateVerdict::from_search(id, witness))
}

/// Lexicographically first graded classical triple zero of a proper `K`.
pub fn find_classical_triple_zero(ctx: &ModuleContext, k: &Substructure) -> Result<Option<TripleZero>> {
    let all: Vec<usize> = (0..ctx.ring_context().homogeneous().len()).collect();
    find_triple_zero_in(ctx, k, &all)
}

/// As [`find_classical_triple_zero`], with `x, y` restricted to the given
/// positions of `h(A)`.
pub fn find_triple_zero_in(ctx: &ModuleContext, k: &Substructure, pool: &[usize]) -> Result<Option<TripleZero>> {
    let ki = ctx.index_of(k)?;
    if k.is_whole() {
        return Err(Error::input("triple zeros are defined for proper submodules only"));
    }
    let lat = ctx.lattice()?;
    let h = ctx.ring_context().homogeneous();
    Ok(sandwich_scan(ctx, ki, Scan::TripleZero, pool)?.map(|(xi, yi, li)| TripleZero {
        x: h[xi],
        y: h[yi],
        l_index: li,
        l: lat[li].additive_gens().to_vec(),
    }))
}

/// Every graded classical triple zero of `K`, in lexicographic order.
pub fn triple_zeros(ctx: &ModuleContext, k: &Substructure) -> Result<Vec<TripleZero>> {
    let ki = ctx.index_of(k)?;
    if k.is_whole() {
        return Err(Error::input("triple zeros are defined for proper submodules only"));
    }
    let lat = ctx.lattice()?;
    let rc = ctx.ring_context();
    let colons = ctx.colons(ki)?;
    let anns: Vec<_> = (0..lat.len()).map(|li| ctx.ann(li)).collect::<Result<_>>()?;
    let h = rc.homogeneous();
    let found: Vec<Vec<TripleZero>> = (0..h.len())
        .into_par_iter()
        .map(|xi| {
            let mut out = Vec::new();
            for yi in 0..h.len() {
                let gens = rc.xay(xi, yi);
                for li in 0..lat.len() {
                    let colon = &colons[li];
                    if colon.contains(h[xi]) || colon.contains(h[yi]) {
                        continue;
                    }
                    if gens.iter().all(|&g| anns[li].contains(g)) {
                        out.push(TripleZero {
                            x: h[xi],
                            y: h[yi],
                            l_index: li,
                            l: lat[li].additive_gens().to_vec(),
                        });
                    }
                }
            }
            out
        })
        .collect();
    Ok(found.into_iter().flatten().collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graded::GradedRing;
    use crate::group::FiniteGroup;
    use crate::ring::FiniteRing;
    use crate::substructure::{closure, Ambient, Scalars};
    use std::sync::Arc;

    fn z8() -> Arc<ModuleContext> {
        ModuleContext::new(Arc::new(GradedModule::regular(Arc::new(GradedRing::trivial(
            FiniteRing::zmod(8).unwrap(),
        )))))
    }

    #[test]
    fn z8_classical_weakly_prime() {
        let ctx = z8();
        let lat = ctx.lattice().unwrap();
        let v = classify_submodule(&ctx, &lat[2], Predicate::GradedClassicalWeaklyPrime).unwrap();
        assert!(v.holds);
        let v = classify_submodule(&ctx, &lat[1], Predicate::GradedClassicalWeaklyPrime).unwrap();
        assert_eq!(
            v.witness,
            Some(Witness::Sandwich {
                x: 2,
                y: 2,
                l: lat[3].additive_gens().to_vec()
            })
        );
        assert!(find_classical_triple_zero(&ctx, &lat[2]).unwrap().is_none());
        assert!(find_classical_triple_zero(&ctx, &lat[3]).is_err());
        let v = classify_submodule(&ctx, &lat[3], Predicate::GradedPrime).unwrap();
        assert!(v.hypothesis_failure.is_some());
    }

    #[test]
    fn sandwich_examples() {
        let ctx = z8();
        let m = ctx.module();
        let lat = ctx.lattice().unwrap();
        assert_eq!(sandwich_test(m, 2, 2, &[1], &lat[3], &lat[1]), Sandwich::Holds);
        let z2 = GradedModule::regular(Arc::new(GradedRing::trivial(FiniteRing::zmod(2).unwrap())));
        let whole = closure(Ambient::Module(&z2), &[1], Scalars::Ring, None).unwrap();
        let zero = closure(Ambient::Module(&z2), &[], Scalars::Ring, None).unwrap();
        assert_eq!(sandwich_test(&z2, 1, 1, &[1], &whole, &zero), Sandwich::NotContained);
    }

    #[test]
    fn m2z8_zero_submodule() {
        let ring = FiniteRing::matrix(&FiniteRing::zmod(8).unwrap(), 2).unwrap();
        let a = Arc::new(GradedRing::good_matrix_grading(ring, 2, FiniteGroup::cyclic(4).unwrap(), &[0, 2]).unwrap());
        let ctx = ModuleContext::new(Arc::new(GradedModule::regular(a.clone())));
        let lat = ctx.lattice().unwrap();
        let zero = &lat[0];
        assert!(classify_submodule(&ctx, zero, Predicate::GradedClassicalWeaklyPrime).unwrap().holds);
        assert!(!classify_submodule(&ctx, zero, Predicate::GradedClassicalPrime).unwrap().holds);
        assert!(find_classical_triple_zero(&ctx, zero).unwrap().is_some());
        let two = a.ring().encode(&[2, 0, 0, 2]).unwrap();
        let l = closure(Ambient::Module(ctx.module()), &[two], Scalars::Ring, None).unwrap();
        let basis: Vec<Elem> = ctx.ring_context().basis().to_vec();
        assert_eq!(sandwich_test(ctx.module(), two, two, &basis, &l, zero), Sandwich::ProductZero);
    }
}
