//! Basis-aligned gradings by a finite group.

use std::sync::Arc;

use crate::additive::CyclicProduct;
use crate::error::{Error, Result};
use crate::group::{FiniteGroup, GroupElem};
use crate::ring::FiniteRing;
use crate::Elem;

/// A degree for every additive basis generator. Component `g` is the span of
/// the generators of degree `g`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Grading {
    degrees: Vec<GroupElem>,
    /// Basis positions per group element.
    positions: Vec<Vec<usize>>,
}

impl Grading {
    pub fn new(group: &FiniteGroup, degrees: Vec<GroupElem>) -> Result<Self> {
        if let Some(&g) = degrees.iter().find(|&&g| g >= group.order()) {
            return Err(Error::input(format!("degree {g} is not an element of the grading group")));
        }
        let mut positions = vec![Vec::new(); group.order()];
        for (i, &g) in degrees.iter().enumerate() {
            positions[g].push(i);
        }
        Ok(Self { degrees, positions })
    }

    pub fn degrees(&self) -> &[GroupElem] {
        &self.degrees
    }

    pub fn degree_of_basis(&self, i: usize) -> GroupElem {
        self.degrees[i]
    }

    /// Number of degrees (the order of the grading group).
    pub fn group_order(&self) -> usize {
        self.positions.len()
    }

    pub fn positions(&self, g: GroupElem) -> &[usize] {
        &self.positions[g]
    }

    /// Projection of `x` onto component `g`.
    pub fn part(&self, add: &CyclicProduct, x: Elem, g: GroupElem) -> Elem {
        self.positions[g]
            .iter()
            .map(|&i| add.coord(x, i) * add.basis(i))
            .sum()
    }

    /// Nonzero homogeneous parts of `x`, in group order.
    pub fn parts(&self, add: &CyclicProduct, x: Elem) -> Vec<(GroupElem, Elem)> {
        (0..self.positions.len())
            .filter_map(|g| {
                let p = self.part(add, x, g);
                (p != 0).then_some((g, p))
            })
            .collect()
    }

    /// Degree of a nonzero homogeneous element; `None` for zero or mixed elements.
    pub fn degree_of(&self, add: &CyclicProduct, x: Elem) -> Option<GroupElem> {
        let mut found = None;
        for i in 0..add.rank() {
            if add.coord(x, i) != 0 {
                let g = self.degrees[i];
                match found {
                    None => found = Some(g),
                    Some(h) if h == g => {}
                    Some(_) => return None,
                }
            }
        }
        found
    }

    pub fn is_homogeneous(&self, add: &CyclicProduct, x: Elem) -> bool {
        x == 0 || self.degree_of(add, x).is_some()
    }

    /// Whether every nonzero coordinate of `coords` sits at a position of degree `g`.
    pub fn supported_in(&self, coords: &[u32], g: GroupElem) -> bool {
        coords
            .iter()
            .enumerate()
            .all(|(i, &c)| c == 0 || self.degrees[i] == g)
    }

    /// All elements of component `g`, ascending.
    pub fn component(&self, add: &CyclicProduct, g: GroupElem) -> Vec<Elem> {
        let gens: Vec<(Elem, u32)> = self.positions[g]
            .iter()
            .filter(|&&i| add.orders()[i] > 1)
            .map(|&i| (add.basis(i), add.orders()[i]))
            .collect();
        let mut out = vec![0];
        for (b, n) in gens {
            let mut next = Vec::with_capacity(out.len() * n as usize);
            for &x in &out {
                let mut y = x;
                for _ in 0..n {
                    next.push(y);
                    y = add.add(y, b);
                }
            }
            out = next;
        }
        out.sort_unstable();
        out
    }

    /// Additive generators of component `g`.
    pub fn component_basis(&self, add: &CyclicProduct, g: GroupElem) -> Vec<Elem> {
        self.positions[g]
            .iter()
            .filter(|&&i| add.orders()[i] > 1)
            .map(|&i| add.basis(i))
            .collect()
    }

    /// h(·): the union of all components, ascending, zero included.
    pub fn homogeneous_elements(&self, add: &CyclicProduct) -> Vec<Elem> {
        let mut all: Vec<Elem> = (0..self.positions.len())
            .flat_map(|g| self.component(add, g))
            .collect();
        all.sort_unstable();
        all.dedup();
        all
    }
}

/// An element together with its homogeneous parts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomogeneousDecomposition {
    pub element: Elem,
    pub parts: Vec<(GroupElem, Elem)>,
}

/// A ring `A = ⊕ A_g` with `A_g A_h ⊆ A_{gh}` and `1 ∈ A_e`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedRing {
    ring: FiniteRing,
    group: FiniteGroup,
    grading: Grading,
}

impl GradedRing {
    /// Attaches `degrees` to the ring basis, checking the grading axioms on
    /// basis pairs.
    pub fn new(ring: FiniteRing, group: FiniteGroup, degrees: Vec<GroupElem>) -> Result<Self> {
        if degrees.len() != ring.rank() {
            return Err(Error::input(format!(
                "degree map has {} entries for {} basis generators",
                degrees.len(),
                ring.rank()
            )));
        }
        let grading = Grading::new(&group, degrees)?;
        let k = ring.rank();
        for i in 0..k {
            for j in 0..k {
                let target = group.op(grading.degrees[i], grading.degrees[j]);
                if !grading.supported_in(ring.basis_product(i, j), target) {
                    return Err(Error::Grading(format!(
                        "basis pair ({i}, {j}): b{i}·b{j} = {:?} does not lie in component {:?}",
                        ring.basis_product(i, j),
                        group.element_to_vec(target)
                    )));
                }
            }
        }
        if !grading.supported_in(&ring.decode(ring.one()), group.identity()) {
            return Err(Error::Grading("unity does not lie in the identity component".into()));
        }
        Ok(Self {
            ring,
            group,
            grading,
        })
    }

    /// Every element in degree e.
    pub fn trivial(ring: FiniteRing) -> Self {
        let degrees = vec![0; ring.rank()];
        Self::new(ring, FiniteGroup::trivial(), degrees).expect("trivial grading is always valid")
    }

    /// Good grading of `M_size(base)`: `eᵢⱼ ⊗ b` has degree `σ(i)·σ(j)⁻¹`.
    pub fn good_matrix_grading(
        ring: FiniteRing,
        size: usize,
        group: FiniteGroup,
        sigma: &[GroupElem],
    ) -> Result<Self> {
        if size == 0 || ring.rank() % (size * size) != 0 {
            return Err(Error::input(format!(
                "ring of rank {} is not a {size}×{size} matrix ring",
                ring.rank()
            )));
        }
        if sigma.len() != size {
            return Err(Error::input(format!("σ must have {size} entries")));
        }
        if sigma.iter().any(|&g| g >= group.order()) {
            return Err(Error::input("σ contains an element outside the group"));
        }
        let r = ring.rank() / (size * size);
        let mut degrees = Vec::with_capacity(ring.rank());
        for i in 0..size {
            for j in 0..size {
                let d = group.op(sigma[i], group.inverse(sigma[j]));
                degrees.extend(std::iter::repeat_n(d, r));
            }
        }
        Self::new(ring, group, degrees)
    }

    pub fn ring(&self) -> &FiniteRing {
        &self.ring
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn grading(&self) -> &Grading {
        &self.grading
    }

    pub fn identity(&self) -> GroupElem {
        self.group.identity()
    }

    pub fn size(&self) -> usize {
        self.ring.size()
    }

    pub fn homogeneous_part(&self, x: Elem, g: GroupElem) -> Elem {
        self.grading.part(self.ring.additive(), x, g)
    }

    pub fn decompose(&self, x: Elem) -> HomogeneousDecomposition {
        HomogeneousDecomposition {
            element: x,
            parts: self.grading.parts(self.ring.additive(), x),
        }
    }

    pub fn degree_of(&self, x: Elem) -> Option<GroupElem> {
        self.grading.degree_of(self.ring.additive(), x)
    }

    pub fn is_homogeneous(&self, x: Elem) -> bool {
        self.grading.is_homogeneous(self.ring.additive(), x)
    }

    pub fn homogeneous_elements(&self) -> Vec<Elem> {
        self.grading.homogeneous_elements(self.ring.additive())
    }

    pub fn component(&self, g: GroupElem) -> Vec<Elem> {
        self.grading.component(self.ring.additive(), g)
    }

    pub fn component_basis(&self, g: GroupElem) -> Vec<Elem> {
        self.grading.component_basis(self.ring.additive(), g)
    }

    /// The subring `A_e` viewed as a ring in its own right (trivially graded).
    pub fn identity_subring(&self) -> FiniteRing {
        let pos = self.grading.positions(self.identity());
        let orders: Vec<u32> = pos.iter().map(|&i| self.ring.additive().orders()[i]).collect();
        let restrict = |coords: &[u32]| -> Vec<i64> { pos.iter().map(|&i| coords[i] as i64).collect() };
        let products: Vec<Vec<Vec<i64>>> = pos
            .iter()
            .map(|&i| pos.iter().map(|&j| restrict(self.ring.basis_product(i, j))).collect())
            .collect();
        let one = restrict(&self.ring.decode(self.ring.one()));
        FiniteRing::new_unchecked(orders, &products, &one).expect("identity component is a subring")
    }

    pub fn into_arc(self) -> Arc<Self> {
        Arc::new(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m2_graded(n: u32) -> GradedRing {
        let ring = FiniteRing::matrix(&FiniteRing::zmod(n).unwrap(), 2).unwrap();
        GradedRing::good_matrix_grading(ring, 2, FiniteGroup::cyclic(4).unwrap(), &[0, 2]).unwrap()
    }

    #[test]
    fn good_grading_components() {
        let a = m2_graded(8);
        assert_eq!(a.grading().degrees(), &[0, 2, 2, 0]);
        assert_eq!(a.component(0).len(), 64);
        assert_eq!(a.component(2).len(), 64);
        assert_eq!(a.component(1), vec![0]);
        assert_eq!(a.homogeneous_elements().len(), 127);
        assert!(a.component(0).iter().all(|&x| {
            let c = a.ring().decode(x);
            c[1] == 0 && c[2] == 0
        }));
    }

    #[test]
    fn homogeneous_parts_of_matrix() {
        let a = m2_graded(8);
        let x = a.ring().encode(&[1, 2, 3, 4]).unwrap();
        assert_eq!(a.ring().decode(a.homogeneous_part(x, 0)), vec![1, 0, 0, 4]);
        assert_eq!(a.ring().decode(a.homogeneous_part(x, 2)), vec![0, 2, 3, 0]);
        assert_eq!(a.homogeneous_part(x, 1), 0);
        let d = a.decompose(x);
        assert_eq!(d.parts.len(), 2);
        assert_eq!(a.degree_of(x), None);
        assert_eq!(a.decompose(0).parts, vec![]);
        let h = a.ring().encode(&[0, 5, 1, 0]).unwrap();
        assert_eq!(a.degree_of(h), Some(2));
        assert_eq!(a.homogeneous_part(h, 2), h);
    }

    #[test]
    fn trivial_sigma_is_trivial_grading() {
        let ring = FiniteRing::matrix(&FiniteRing::zmod(8).unwrap(), 2).unwrap();
        let a = GradedRing::good_matrix_grading(ring, 2, FiniteGroup::cyclic(4).unwrap(), &[0, 0]).unwrap();
        assert_eq!(a.component(0).len(), 4096);
    }

    #[test]
    fn z2_grading_of_m2z2() {
        let ring = FiniteRing::matrix(&FiniteRing::zmod(2).unwrap(), 2).unwrap();
        let a = GradedRing::good_matrix_grading(ring, 2, FiniteGroup::cyclic(2).unwrap(), &[0, 1]).unwrap();
        assert_eq!(a.grading().degrees(), &[0, 1, 1, 0]);
    }

    #[test]
    fn bad_product_grading_rejected() {
        let z = FiniteRing::zmod(2).unwrap();
        let ring = FiniteRing::product(&[z.clone(), z]).unwrap();
        let err = GradedRing::new(ring, FiniteGroup::cyclic(2).unwrap(), vec![0, 1]).unwrap_err();
        assert!(matches!(err, Error::Grading(ref m) if m.contains("(1, 1)")), "{err}");
    }

    #[test]
    fn identity_subring_of_m2() {
        let a = m2_graded(8);
        let ae = a.identity_subring();
        ae.validate().unwrap();
        assert_eq!(ae.size(), 64);
        assert!(ae.is_commutative());
    }
}
