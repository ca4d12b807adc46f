//! Quotient modules and submodules re-presented as modules in their own right.
//!
//! Both constructions decompose, degree by degree, a subquotient `U/H` of a
//! homogeneous component into cyclic factors. Representatives are the
//! smallest element of their coset, so the result is deterministic.

use std::sync::Arc;

use crate::additive::CyclicProduct;
use crate::bitset::MemberSet;
use crate::error::{Error, Result};
use crate::group::GroupElem;
use crate::hom::GradedHom;
use crate::module::GradedModule;
use crate::substructure::{is_graded, Closer, Substructure};
use crate::Elem;

/// Cyclic decomposition of all components of a graded subquotient.
struct Subquotient {
    reps: Vec<Elem>,
    orders: Vec<u32>,
    degrees: Vec<GroupElem>,
    /// For each homogeneous element of `U`, its index in the new presentation.
    index_of: Vec<Option<Elem>>,
}

fn order_modulo(add: &CyclicProduct, c: Elem, h: &MemberSet) -> u32 {
    let mut n = 1;
    let mut w = c;
    while !h.contains(w) {
        w = add.add(w, c);
        n += 1;
    }
    n
}

/// `U` is given per degree; `h0` must be a subgroup of `⋃ U_g` aligned with the
/// grading.
fn decompose(m: &GradedModule, u: &dyn Fn(GroupElem) -> Vec<Elem>, h0: &MemberSet) -> Subquotient {
    let add = m.additive();
    let group_order = m.grading().group_order();
    let mut reps = Vec::new();
    let mut orders = Vec::new();
    let mut degrees = Vec::new();
    let mut blocks: Vec<(usize, usize, Vec<Elem>)> = Vec::new();
    for g in 0..group_order {
        let ug = u(g);
        if ug.len() <= 1 {
            continue;
        }
        let h0g: Vec<Elem> = ug.iter().copied().filter(|&x| h0.contains(x)).collect();
        let mut h = Closer::new(add);
        for &x in &h0g {
            h.extend(x);
        }
        let h0_members = MemberSet::from_elems(add.size(), h0g.iter().copied());
        let mut span = Closer::new(add);
        let start = reps.len();
        while h.len() < ug.len() {
            let (c, d) = ug
                .iter()
                .map(|&c| (c, order_modulo(add, c, h.members())))
                .fold((0, 0), |best, cur| if cur.1 > best.1 { cur } else { best });
            let lift = span
                .elements()
                .iter()
                .map(|&s| add.add(c, s))
                .filter(|&v| order_modulo(add, v, &h0_members) == d)
                .min()
                .expect("an element of maximal order spans a direct summand");
            let rep = h0g.iter().map(|&t| add.add(lift, t)).min().unwrap_or(lift);
            h.extend(rep);
            span.extend(rep);
            reps.push(rep);
            orders.push(d);
            degrees.push(g);
        }
        blocks.push((start, reps.len(), h0g));
    }
    let target = CyclicProduct::new(orders.clone()).expect("subquotient is no larger than its ambient");
    let mut index_of = vec![None; add.size()];
    index_of[0] = Some(0);
    for (start, end, h0g) in &blocks {
        let rank = end - start;
        let mut coeffs = vec![0u32; rank];
        loop {
            let mut s = 0;
            let mut idx = 0;
            for (i, &a) in coeffs.iter().enumerate() {
                s = add.add(s, add.scale(reps[start + i], a as u64));
                idx += a * target.basis(start + i);
            }
            for &t in h0g.iter().chain(std::iter::once(&0)) {
                index_of[add.add(s, t) as usize] = Some(idx);
            }
            let mut pos = rank;
            loop {
                if pos == 0 {
                    break;
                }
                pos -= 1;
                coeffs[pos] += 1;
                if coeffs[pos] < orders[start + pos] {
                    break;
                }
                coeffs[pos] = 0;
            }
            if coeffs.iter().all(|&a| a == 0) {
                break;
            }
        }
    }
    Subquotient {
        reps,
        orders,
        degrees,
        index_of,
    }
}

impl Subquotient {
    /// Index of an arbitrary element of `U + H0`, summing the per-degree parts.
    fn index(&self, m: &GradedModule, x: Elem) -> Option<Elem> {
        let mut idx = 0;
        for (_, part) in m.grading().parts(m.additive(), x) {
            idx += self.index_of[part as usize]?;
        }
        Some(idx)
    }

    fn action(&self, m: &GradedModule) -> Result<Vec<u32>> {
        let target = CyclicProduct::new(self.orders.clone())?;
        let k = self.reps.len();
        let kr = m.ring().ring().rank();
        let mut action = vec![0u32; kr * k * k];
        for i in 0..kr {
            let b = m.ring().ring().basis(i);
            for (j, &c) in self.reps.iter().enumerate() {
                let image = if b == 0 { 0 } else { m.act(b, c) };
                let idx = self
                    .index(m, image)
                    .ok_or_else(|| Error::Incompatible("subquotient is not closed under the action".into()))?;
                let base = (i * k + j) * k;
                action[base..base + k].copy_from_slice(&target.decode(idx));
            }
        }
        Ok(action)
    }
}

/// `M/T` with `(M/T)_g = (M_g + T)/T`, together with the projection `M → M/T`.
pub fn quotient_module(m: &Arc<GradedModule>, t: &Substructure) -> Result<(Arc<GradedModule>, GradedHom)> {
    if t.domain() != m.size() {
        return Err(Error::Incompatible("T is not a substructure of M".into()));
    }
    if !is_graded(m.grading(), m.additive(), t) {
        return Err(Error::NotGraded("T is not a graded submodule".into()));
    }
    let sq = decompose(m, &|g| m.component(g), t.members());
    let action = sq.action(m)?;
    let q = Arc::new(GradedModule::from_raw(m.ring().clone(), sq.orders.clone(), action, sq.degrees.clone())?);
    let images = (0..m.rank())
        .map(|j| sq.index(m, m.additive().basis(j)).expect("every element has a coset"))
        .collect();
    let projection = GradedHom::new(m.clone(), q.clone(), images)?;
    Ok((q, projection))
}

/// A graded submodule `N ⊆ M` as a module of its own, with the inclusion `N ↪ M`.
pub fn submodule_as_module(m: &Arc<GradedModule>, n: &Substructure) -> Result<(Arc<GradedModule>, GradedHom)> {
    if n.domain() != m.size() {
        return Err(Error::Incompatible("N is not a substructure of M".into()));
    }
    if !is_graded(m.grading(), m.additive(), n) {
        return Err(Error::NotGraded("N is not a graded submodule".into()));
    }
    let zero = MemberSet::from_elems(m.size(), [0]);
    let sq = decompose(m, &|g| m.component(g).into_iter().filter(|&x| n.contains(x)).collect(), &zero);
    let action = sq.action(m)?;
    let sub = Arc::new(GradedModule::from_raw(m.ring().clone(), sq.orders.clone(), action, sq.degrees.clone())?);
    let inclusion = GradedHom::new(sub.clone(), m.clone(), sq.reps.clone())?;
    Ok((sub, inclusion))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graded::GradedRing;
    use crate::group::FiniteGroup;
    use crate::ring::FiniteRing;
    use crate::substructure::{closure, enumerate_graded_submodules, Ambient, Scalars};

    fn z8() -> Arc<GradedModule> {
        Arc::new(GradedModule::regular(Arc::new(GradedRing::trivial(FiniteRing::zmod(8).unwrap()))))
    }

    #[test]
    fn z8_mod_four() {
        let m = z8();
        let t = closure(Ambient::Module(&m), &[4], Scalars::Ring, None).unwrap();
        let (q, p) = quotient_module(&m, &t).unwrap();
        assert_eq!(q.size(), 4);
        assert_eq!(p.kernel(), t);
        assert!(p.is_surjective());
        let lat = enumerate_graded_submodules(&q, 100).unwrap();
        assert_eq!(lat.len(), 3);
        let two = closure(Ambient::Module(&m), &[2], Scalars::Ring, None).unwrap();
        assert_eq!(p.image(&two).unwrap(), lat[1]);
    }

    #[test]
    fn trivial_and_full_quotients() {
        let m = z8();
        let zero = closure(Ambient::Module(&m), &[], Scalars::Ring, None).unwrap();
        let (q, p) = quotient_module(&m, &zero).unwrap();
        assert_eq!(q.size(), 8);
        assert!(p.is_injective() && p.is_surjective());
        let whole = closure(Ambient::Module(&m), &[1], Scalars::Ring, None).unwrap();
        let (q, _) = quotient_module(&m, &whole).unwrap();
        assert_eq!(q.size(), 1);
    }

    #[test]
    fn two_z8_as_module() {
        let m = z8();
        let n = closure(Ambient::Module(&m), &[2], Scalars::Ring, None).unwrap();
        let (sub, inc) = submodule_as_module(&m, &n).unwrap();
        assert_eq!(sub.size(), 4);
        assert!(inc.is_injective());
        let lat = enumerate_graded_submodules(&sub, 100).unwrap();
        assert_eq!(inc.image(&lat[1]).unwrap().members().to_vec(), vec![0, 4]);
        assert_eq!(inc.image(&lat[2]).unwrap(), n);
    }

    #[test]
    fn matrix_quotients_are_graded() {
        let ring = FiniteRing::matrix(&FiniteRing::zmod(4).unwrap(), 2).unwrap();
        let a = Arc::new(GradedRing::good_matrix_grading(ring, 2, FiniteGroup::cyclic(4).unwrap(), &[0, 2]).unwrap());
        let m = Arc::new(GradedModule::regular(a));
        for t in enumerate_graded_submodules(&m, 1000).unwrap() {
            let (q, p) = quotient_module(&m, &t).unwrap();
            assert_eq!(q.size() * t.len(), m.size());
            assert_eq!(p.kernel(), t);
            let (sub, inc) = submodule_as_module(&m, &t).unwrap();
            assert_eq!(sub.size(), t.len());
            assert!(inc.is_injective());
        }
    }
}
