//! Degree-preserving module homomorphisms.

use std::sync::Arc;

use crate::bitset::MemberSet;
use crate::error::{Error, Result};
use crate::module::GradedModule;
use crate::substructure::{Closer, Kind, Substructure};
use crate::Elem;

/// A graded `A`-homomorphism `f: M → S`, stored as a full image table.
#[derive(Debug, Clone)]
pub struct GradedHom {
    source: Arc<GradedModule>,
    target: Arc<GradedModule>,
    basis_images: Vec<Elem>,
    table: Vec<Elem>,
}

impl GradedHom {
    /// Validates that the basis images define an additive, `A`-linear,
    /// degree-preserving map.
    pub fn new(source: Arc<GradedModule>, target: Arc<GradedModule>, basis_images: Vec<Elem>) -> Result<Self> {
        if !Arc::ptr_eq(source.ring(), target.ring()) && **source.ring() != **target.ring() {
            return Err(Error::Incompatible("homomorphism between modules over different rings".into()));
        }
        let sa = source.additive();
        let ta = target.additive();
        if basis_images.len() != sa.rank() {
            return Err(Error::Hom(format!(
                "{} basis images given for {} generators",
                basis_images.len(),
                sa.rank()
            )));
        }
        if let Some(&y) = basis_images.iter().find(|&&y| y as usize >= ta.size()) {
            return Err(Error::Hom(format!("image {y} lies outside the target")));
        }
        for (j, &y) in basis_images.iter().enumerate() {
            if ta.scale(y, sa.orders()[j] as u64) != 0 {
                return Err(Error::Hom(format!(
                    "image of generator {j} is not killed by its order {}",
                    sa.orders()[j]
                )));
            }
            let g = source.grading().degree_of_basis(j);
            if target.homogeneous_part(y, g) != y {
                return Err(Error::Hom(format!(
                    "generator {j} has degree {g} but its image {:?} does not",
                    ta.decode(y)
                )));
            }
        }
        let mut table = vec![0; sa.size()];
        for x in sa.elements() {
            let mut acc = 0;
            for (j, &y) in basis_images.iter().enumerate() {
                let c = sa.coord(x, j);
                if c != 0 {
                    acc = ta.add(acc, ta.scale(y, c as u64));
                }
            }
            table[x as usize] = acc;
        }
        let ring = source.ring().ring();
        for b in ring.basis_elems() {
            for m in source.basis_elems() {
                let lhs = table[source.act(b, m) as usize];
                let rhs = target.act(b, table[m as usize]);
                if lhs != rhs {
                    return Err(Error::Hom(format!(
                        "f(r·m) ≠ r·f(m) for r = {:?}, m = {:?}",
                        ring.decode(b),
                        source.decode(m)
                    )));
                }
            }
        }
        Ok(Self {
            source,
            target,
            basis_images,
            table,
        })
    }

    pub fn identity(m: Arc<GradedModule>) -> Self {
        let images = (0..m.rank()).map(|j| m.additive().basis(j)).collect();
        Self::new(m.clone(), m, images).expect("identity is a graded homomorphism")
    }

    pub fn source(&self) -> &Arc<GradedModule> {
        &self.source
    }

    pub fn target(&self) -> &Arc<GradedModule> {
        &self.target
    }

    pub fn basis_images(&self) -> &[Elem] {
        &self.basis_images
    }

    #[inline]
    pub fn apply(&self, x: Elem) -> Elem {
        self.table[x as usize]
    }

    /// `f(K)`.
    pub fn image(&self, k: &Substructure) -> Result<Substructure> {
        self.check_source(k)?;
        let mut closer = Closer::new(self.target.additive());
        for &v in k.additive_gens() {
            closer.extend(self.apply(v));
        }
        let gens = k.generators().iter().map(|&v| self.apply(v)).collect();
        Ok(closer.finish(Kind::Submodule, gens))
    }

    /// `f⁻¹(K)`.
    pub fn preimage(&self, k: &Substructure) -> Result<Substructure> {
        if k.domain() != self.target.size() {
            return Err(Error::Incompatible("substructure is not in the target".into()));
        }
        let members = MemberSet::from_elems(
            self.source.size(),
            self.source.additive().elements().filter(|&x| k.contains(self.apply(x))),
        );
        Ok(Substructure::from_members(self.source.additive(), Kind::Submodule, members))
    }

    pub fn kernel(&self) -> Substructure {
        let zero = Substructure::zero(self.target.size(), Kind::Submodule);
        self.preimage(&zero).expect("zero lies in the target")
    }

    pub fn is_injective(&self) -> bool {
        self.kernel().is_zero()
    }

    pub fn is_surjective(&self) -> bool {
        let mut hit = MemberSet::empty(self.target.size());
        for &y in &self.table {
            hit.insert(y);
        }
        hit.len() == self.target.size()
    }

    fn check_source(&self, k: &Substructure) -> Result<()> {
        if k.domain() != self.source.size() {
            return Err(Error::Incompatible("substructure is not in the source".into()));
        }
        Ok(())
    }
}
