//! Graded left modules over graded rings.

use std::sync::Arc;

use crate::additive::CyclicProduct;
use crate::error::{Error, Result};
use crate::graded::{GradedRing, Grading, HomogeneousDecomposition};
use crate::group::GroupElem;
use crate::Elem;

/// A finite graded left module `M = ⊕ M_g` over a [`GradedRing`], presented by
/// cyclic additive factors and action constants `bᵢ·mⱼ`.
#[derive(Debug, Clone)]
pub struct GradedModule {
    ring: Arc<GradedRing>,
    additive: CyclicProduct,
    /// `action[(i * k + j) * k + t]` is coordinate `t` of `bᵢ·mⱼ`, `k` the module rank.
    action: Vec<u32>,
    grading: Grading,
}

impl GradedModule {
    /// Builds and validates a module. `action[i][j]` is the coordinate vector
    /// of ring basis element `i` acting on module generator `j`.
    pub fn new(
        ring: Arc<GradedRing>,
        orders: Vec<u32>,
        action: &[Vec<Vec<i64>>],
        degrees: Vec<GroupElem>,
    ) -> Result<Self> {
        let additive = CyclicProduct::new(orders)?;
        let k = additive.rank();
        let kr = ring.ring().rank();
        if action.len() != kr || action.iter().any(|row| row.len() != k) {
            return Err(Error::input(format!(
                "action constants must form a {kr}×{k} table"
            )));
        }
        if degrees.len() != k {
            return Err(Error::input(format!(
                "module degree map has {} entries for {k} generators",
                degrees.len()
            )));
        }
        let mut flat = Vec::with_capacity(kr * k * k);
        for row in action {
            for entry in row {
                let x = additive.encode_reduced(entry)?;
                flat.extend(additive.decode(x));
            }
        }
        let grading = Grading::new(ring.group(), degrees)?;
        let module = Self {
            ring,
            additive,
            action: flat,
            grading,
        };
        module.validate()?;
        Ok(module)
    }

    fn from_parts_unchecked(ring: Arc<GradedRing>, additive: CyclicProduct, action: Vec<u32>, degrees: Vec<GroupElem>) -> Self {
        let grading = Grading::new(ring.group(), degrees).expect("degrees come from a validated grading");
        Self {
            ring,
            additive,
            action,
            grading,
        }
    }

    /// The ring as a graded left module over itself.
    pub fn regular(ring: Arc<GradedRing>) -> Self {
        let r = ring.ring();
        let k = r.rank();
        let mut action = Vec::with_capacity(k * k * k);
        for i in 0..k {
            for j in 0..k {
                action.extend_from_slice(r.basis_product(i, j));
            }
        }
        let additive = r.additive().clone();
        let degrees = ring.grading().degrees().to_vec();
        Self::from_parts_unchecked(ring, additive, action, degrees)
    }

    /// `Aⁿ` with each copy graded like `A`.
    pub fn free(ring: Arc<GradedRing>, copies: usize) -> Result<Self> {
        let regular = Self::regular(ring.clone());
        if copies == 0 {
            return Ok(Self::zero(ring));
        }
        let mut m = regular.clone();
        for _ in 1..copies {
            m = m.direct_product(&regular)?;
        }
        Ok(m)
    }

    pub fn zero(ring: Arc<GradedRing>) -> Self {
        let additive = CyclicProduct::new(vec![]).expect("empty product");
        Self::from_parts_unchecked(ring, additive, vec![], vec![])
    }

    /// `M × S` with `(M × S)_g = M_g × S_g`; generators of `M` come first.
    pub fn direct_product(&self, other: &GradedModule) -> Result<Self> {
        if !Arc::ptr_eq(&self.ring, &other.ring) && *self.ring != *other.ring {
            return Err(Error::Incompatible("direct product of modules over different rings".into()));
        }
        let (k1, k2) = (self.rank(), other.rank());
        let k = k1 + k2;
        let mut orders = self.additive.orders().to_vec();
        orders.extend_from_slice(other.additive.orders());
        let additive = CyclicProduct::new(orders)?;
        let kr = self.ring.ring().rank();
        let mut action = vec![0u32; kr * k * k];
        for i in 0..kr {
            for j in 0..k1 {
                let src = self.action_constant(i, j);
                action[(i * k + j) * k..(i * k + j) * k + k1].copy_from_slice(src);
            }
            for j in 0..k2 {
                let src = other.action_constant(i, j);
                let base = (i * k + k1 + j) * k + k1;
                action[base..base + k2].copy_from_slice(src);
            }
        }
        let mut degrees = self.grading.degrees().to_vec();
        degrees.extend_from_slice(other.grading.degrees());
        Ok(Self::from_parts_unchecked(self.ring.clone(), additive, action, degrees))
    }

    /// Module axioms and grading compatibility on basis triples.
    pub fn validate(&self) -> Result<()> {
        let r = self.ring.ring();
        let g = &self.additive;
        let (kr, k) = (r.rank(), self.rank());
        for i in 0..kr {
            for j in 0..k {
                let p = g.encode(self.action_constant(i, j));
                for n in [r.additive().orders()[i], g.orders()[j]] {
                    if g.scale(p, n as u64) != 0 {
                        return Err(Error::Axiom(format!(
                            "b{i}·m{j} is not annihilated by {n}; action constants are not well defined"
                        )));
                    }
                }
                let target = self.ring.group().op(self.ring.grading().degree_of_basis(i), self.grading.degree_of_basis(j));
                if !self.grading.supported_in(self.action_constant(i, j), target) {
                    return Err(Error::Grading(format!(
                        "basis pair ({i}, {j}): b{i}·m{j} leaves component {:?}",
                        self.ring.group().element_to_vec(target)
                    )));
                }
            }
        }
        for i in 0..kr {
            for j in 0..kr {
                for l in 0..k {
                    let m = g.basis(l);
                    let left = self.act(r.mul(r.basis(i), r.basis(j)), m);
                    let right = self.act(r.basis(i), self.act(r.basis(j), m));
                    if left != right {
                        return Err(Error::Axiom(format!(
                            "action not associative on (b{i}, b{j}, m{l})"
                        )));
                    }
                }
            }
        }
        for l in 0..k {
            let m = g.basis(l);
            if self.act(r.one(), m) != m {
                return Err(Error::Axiom(format!("unity does not fix generator m{l}")));
            }
        }
        Ok(())
    }

    pub fn ring(&self) -> &Arc<GradedRing> {
        &self.ring
    }

    pub fn additive(&self) -> &CyclicProduct {
        &self.additive
    }

    pub fn grading(&self) -> &Grading {
        &self.grading
    }

    pub fn rank(&self) -> usize {
        self.additive.rank()
    }

    pub fn size(&self) -> usize {
        self.additive.size()
    }

    pub fn action_constant(&self, i: usize, j: usize) -> &[u32] {
        let k = self.rank();
        &self.action[(i * k + j) * k..(i * k + j + 1) * k]
    }

    #[inline]
    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        self.additive.add(a, b)
    }

    /// `r·m`.
    pub fn act(&self, r: Elem, m: Elem) -> Elem {
        let ra = self.ring.ring().additive();
        let g = &self.additive;
        let (kr, k) = (ra.rank(), g.rank());
        let mut acc = [0u64; 32];
        let mut heap;
        let acc: &mut [u64] = if k <= 32 {
            &mut acc[..k]
        } else {
            heap = vec![0u64; k];
            &mut heap
        };
        for i in 0..kr {
            let ri = ra.coord(r, i) as u64;
            if ri == 0 {
                continue;
            }
            for j in 0..k {
                let mj = g.coord(m, j) as u64;
                if mj == 0 {
                    continue;
                }
                let s = ri * mj;
                let row = &self.action[(i * k + j) * k..(i * k + j + 1) * k];
                for (t, &c) in row.iter().enumerate() {
                    if c != 0 {
                        acc[t] = (acc[t] + s * c as u64) % g.orders()[t] as u64;
                    }
                }
            }
        }
        g.encode_wide(acc)
    }

    pub fn homogeneous_part(&self, x: Elem, g: GroupElem) -> Elem {
        self.grading.part(&self.additive, x, g)
    }

    pub fn decompose(&self, x: Elem) -> HomogeneousDecomposition {
        HomogeneousDecomposition {
            element: x,
            parts: self.grading.parts(&self.additive, x),
        }
    }

    pub fn degree_of(&self, x: Elem) -> Option<GroupElem> {
        self.grading.degree_of(&self.additive, x)
    }

    pub fn is_homogeneous(&self, x: Elem) -> bool {
        self.grading.is_homogeneous(&self.additive, x)
    }

    pub fn homogeneous_elements(&self) -> Vec<Elem> {
        self.grading.homogeneous_elements(&self.additive)
    }

    pub fn component(&self, g: GroupElem) -> Vec<Elem> {
        self.grading.component(&self.additive, g)
    }

    pub fn component_basis(&self, g: GroupElem) -> Vec<Elem> {
        self.grading.component_basis(&self.additive, g)
    }

    pub fn basis_elems(&self) -> Vec<Elem> {
        (0..self.rank())
            .map(|i| self.additive.basis(i))
            .filter(|&b| b != 0)
            .collect()
    }

    pub fn decode(&self, x: Elem) -> Vec<u32> {
        self.additive.decode(x)
    }

    pub fn encode(&self, coords: &[i64]) -> Result<Elem> {
        self.additive.encode_reduced(coords)
    }

    pub(crate) fn from_raw(ring: Arc<GradedRing>, orders: Vec<u32>, action: Vec<u32>, degrees: Vec<GroupElem>) -> Result<Self> {
        let additive = CyclicProduct::new(orders)?;
        let m = Self::from_parts_unchecked(ring, additive, action, degrees);
        m.validate()?;
        Ok(m)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::FiniteGroup;
    use crate::ring::FiniteRing;

    fn z(n: u32) -> Arc<GradedRing> {
        Arc::new(GradedRing::trivial(FiniteRing::zmod(n).unwrap()))
    }

    #[test]
    fn regular_module_acts_by_multiplication() {
        let ring = FiniteRing::matrix(&FiniteRing::zmod(8).unwrap(), 2).unwrap();
        let a = Arc::new(GradedRing::good_matrix_grading(ring, 2, FiniteGroup::cyclic(4).unwrap(), &[0, 2]).unwrap());
        let m = GradedModule::regular(a.clone());
        m.validate().unwrap();
        let x = a.ring().encode(&[1, 0, 0, 2]).unwrap();
        let y = a.ring().encode(&[0, 1, 1, 0]).unwrap();
        assert_eq!(m.act(x, y), a.ring().mul(x, y));
        assert_eq!(m.homogeneous_elements().len(), 127);
    }

    #[test]
    fn product_sizes() {
        let m = GradedModule::regular(z(2));
        let s = GradedModule::regular(z(4));
        assert!(m.direct_product(&s).is_err());
        let s = GradedModule::free(z(2), 2).unwrap();
        let p = m.direct_product(&s).unwrap();
        assert_eq!(p.size(), m.size() * s.size());
        assert_eq!(p.component(0).len(), 8);
        p.validate().unwrap();
    }

    #[test]
    fn zero_module() {
        let m = GradedModule::zero(z(3));
        assert_eq!(m.size(), 1);
        assert_eq!(m.homogeneous_elements(), vec![0]);
        m.validate().unwrap();
    }

    #[test]
    fn explicit_module_checks_grading() {
        let ring = FiniteRing::matrix(&FiniteRing::zmod(2).unwrap(), 2).unwrap();
        let a = Arc::new(GradedRing::good_matrix_grading(ring, 2, FiniteGroup::cyclic(2).unwrap(), &[0, 1]).unwrap());
        // column vectors (Z2)^2 with degrees (0, 1): e_ij · v_j = v_i
        let action: Vec<Vec<Vec<i64>>> = (0..4)
            .map(|b| {
                let (i, j) = (b / 2, b % 2);
                (0..2)
                    .map(|l| {
                        let mut v = vec![0, 0];
                        if l == j {
                            v[i] = 1;
                        }
                        v
                    })
                    .collect()
            })
            .collect();
        assert!(GradedModule::new(a.clone(), vec![2, 2], &action, vec![0, 1]).is_ok());
        assert!(GradedModule::new(a, vec![2, 2], &action, vec![0, 0]).is_err());
    }
}
