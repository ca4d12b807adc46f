//! Finite associative unital rings presented by cyclic additive factors and
//! multiplication structure constants.

use crate::additive::CyclicProduct;
use crate::error::{Error, Result};
use crate::Elem;

/// A finite ring `ℤ_{n₁}b₁ ⊕ … ⊕ ℤ_{nₖ}bₖ` with `bᵢ·bⱼ` given as coordinate
/// vectors and multiplication extended bilinearly.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteRing {
    additive: CyclicProduct,
    /// `constants[(i * k + j) * k + t]` is coordinate `t` of `bᵢ·bⱼ`.
    constants: Vec<u32>,
    one: Elem,
}

impl FiniteRing {
    /// Builds a ring from raw structure constants without checking the axioms.
    /// Coordinates are reduced modulo the factor orders.
    pub fn new_unchecked(orders: Vec<u32>, products: &[Vec<Vec<i64>>], one: &[i64]) -> Result<Self> {
        let additive = CyclicProduct::new(orders)?;
        let k = additive.rank();
        if products.len() != k || products.iter().any(|row| row.len() != k) {
            return Err(Error::input(format!("structure constants must form a {k}×{k} table")));
        }
        let mut constants = Vec::with_capacity(k * k * k);
        for row in products {
            for entry in row {
                let x = additive.encode_reduced(entry)?;
                constants.extend(additive.decode(x));
            }
        }
        let one = additive.encode_reduced(one)?;
        Ok(Self {
            additive,
            constants,
            one,
        })
    }

    /// Builds and validates a ring.
    pub fn from_structure_constants(
        orders: Vec<u32>,
        products: &[Vec<Vec<i64>>],
        one: &[i64],
    ) -> Result<Self> {
        let ring = Self::new_unchecked(orders, products, one)?;
        ring.validate()?;
        Ok(ring)
    }

    /// ℤₙ with a single generator.
    pub fn zmod(n: u32) -> Result<Self> {
        if n == 0 {
            return Err(Error::input("ℤ₀ is not finite; n must be at least 1"));
        }
        Self::new_unchecked(vec![n], &[vec![vec![1]]], &[1])
    }

    /// `Mₖ(base)` with basis `eᵢⱼ ⊗ b_t` ordered by `(i, j, t)`.
    pub fn matrix(base: &FiniteRing, size: usize) -> Result<Self> {
        if size == 0 {
            return Err(Error::input("matrix size must be at least 1"));
        }
        if let Some((i, j)) = base.non_commuting_pair() {
            return Err(Error::input(format!(
                "matrix rings need a commutative base; b{i}·b{j} ≠ b{j}·b{i}"
            )));
        }
        let r = base.rank();
        let k = size * size * r;
        let idx = |i: usize, j: usize, t: usize| (i * size + j) * r + t;
        let mut orders = Vec::with_capacity(k);
        for _ in 0..size * size {
            orders.extend_from_slice(base.additive.orders());
        }
        let mut products = vec![vec![vec![0i64; k]; k]; k];
        for i in 0..size {
            for j in 0..size {
                for t in 0..r {
                    for m in 0..size {
                        for u in 0..r {
                            let c = base.basis_product(t, u);
                            let entry = &mut products[idx(i, j, t)][idx(j, m, u)];
                            for (v, &cv) in c.iter().enumerate() {
                                entry[idx(i, m, v)] = cv as i64;
                            }
                        }
                    }
                }
            }
        }
        let base_one = base.additive.decode(base.one);
        let mut one = vec![0i64; k];
        for i in 0..size {
            for (t, &c) in base_one.iter().enumerate() {
                one[idx(i, i, t)] = c as i64;
            }
        }
        Self::new_unchecked(orders, &products, &one)
    }

    /// Componentwise product of rings.
    pub fn product(factors: &[FiniteRing]) -> Result<Self> {
        if factors.is_empty() {
            return Err(Error::input("product of an empty list of rings"));
        }
        let k: usize = factors.iter().map(|f| f.rank()).sum();
        let mut orders = Vec::with_capacity(k);
        let mut products = vec![vec![vec![0i64; k]; k]; k];
        let mut one = Vec::with_capacity(k);
        let mut offset = 0;
        for f in factors {
            orders.extend_from_slice(f.additive.orders());
            one.extend(f.additive.decode(f.one).into_iter().map(i64::from));
            for i in 0..f.rank() {
                for j in 0..f.rank() {
                    for (t, &c) in f.basis_product(i, j).iter().enumerate() {
                        products[offset + i][offset + j][offset + t] = c as i64;
                    }
                }
            }
            offset += f.rank();
        }
        Self::new_unchecked(orders, &products, &one)
    }

    /// Exhaustive axiom check on basis generators: well-defined constants,
    /// associativity on every basis triple, and a two-sided unity.
    pub fn validate(&self) -> Result<()> {
        let k = self.rank();
        let g = &self.additive;
        for i in 0..k {
            for j in 0..k {
                let p = g.encode(self.basis_product(i, j));
                for n in [g.orders()[i], g.orders()[j]] {
                    if g.scale(p, n as u64) != 0 {
                        return Err(Error::Axiom(format!(
                            "b{i}·b{j} is not annihilated by {n}; constants are not well defined"
                        )));
                    }
                }
            }
        }
        for i in 0..k {
            for j in 0..k {
                for l in 0..k {
                    let (bi, bj, bl) = (g.basis(i), g.basis(j), g.basis(l));
                    let left = self.mul(self.mul(bi, bj), bl);
                    let right = self.mul(bi, self.mul(bj, bl));
                    if left != right {
                        return Err(Error::Axiom(format!(
                            "associativity fails on basis triple ({i}, {j}, {l}): {:?} ≠ {:?}",
                            g.decode(left),
                            g.decode(right)
                        )));
                    }
                }
            }
        }
        for i in 0..k {
            let b = g.basis(i);
            if self.mul(self.one, b) != b || self.mul(b, self.one) != b {
                return Err(Error::Axiom(format!("unity is not two-sided on basis element {i}")));
            }
        }
        Ok(())
    }

    pub fn additive(&self) -> &CyclicProduct {
        &self.additive
    }

    pub fn rank(&self) -> usize {
        self.additive.rank()
    }

    pub fn size(&self) -> usize {
        self.additive.size()
    }

    pub fn one(&self) -> Elem {
        self.one
    }

    pub fn is_zero_ring(&self) -> bool {
        self.size() == 1
    }

    pub fn basis(&self, i: usize) -> Elem {
        self.additive.basis(i)
    }

    /// Additive generators of the ring.
    pub fn basis_elems(&self) -> Vec<Elem> {
        (0..self.rank()).map(|i| self.basis(i)).collect()
    }

    pub fn basis_product(&self, i: usize, j: usize) -> &[u32] {
        let k = self.rank();
        &self.constants[(i * k + j) * k..(i * k + j + 1) * k]
    }

    #[inline]
    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        self.additive.add(a, b)
    }

    pub fn neg(&self, a: Elem) -> Elem {
        self.additive.neg(a)
    }

    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        let g = &self.additive;
        let k = g.rank();
        let mut acc = [0u64; 32];
        let mut heap;
        let acc: &mut [u64] = if k <= 32 {
            &mut acc[..k]
        } else {
            heap = vec![0u64; k];
            &mut heap
        };
        for i in 0..k {
            let ai = g.coord(a, i) as u64;
            if ai == 0 {
                continue;
            }
            for j in 0..k {
                let bj = g.coord(b, j) as u64;
                if bj == 0 {
                    continue;
                }
                let s = ai * bj;
                let row = &self.constants[(i * k + j) * k..(i * k + j + 1) * k];
                for (t, &c) in row.iter().enumerate() {
                    if c != 0 {
                        acc[t] = (acc[t] + s * c as u64) % g.orders()[t] as u64;
                    }
                }
            }
        }
        g.encode_wide(acc)
    }

    pub fn pow(&self, a: Elem, n: u64) -> Elem {
        let mut out = self.one;
        for _ in 0..n {
            out = self.mul(out, a);
        }
        out
    }

    pub fn is_commutative(&self) -> bool {
        self.non_commuting_pair().is_none()
    }

    fn non_commuting_pair(&self) -> Option<(usize, usize)> {
        let k = self.rank();
        (0..k)
            .flat_map(|i| (i + 1..k).map(move |j| (i, j)))
            .find(|&(i, j)| self.basis_product(i, j) != self.basis_product(j, i))
    }

    pub fn elements(&self) -> impl Iterator<Item = Elem> {
        self.additive.elements()
    }

    pub fn decode(&self, a: Elem) -> Vec<u32> {
        self.additive.decode(a)
    }

    pub fn encode(&self, coords: &[i64]) -> Result<Elem> {
        self.additive.encode_reduced(coords)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m2(n: u32) -> FiniteRing {
        FiniteRing::matrix(&FiniteRing::zmod(n).unwrap(), 2).unwrap()
    }

    #[test]
    fn zmod_eight() {
        let r = FiniteRing::zmod(8).unwrap();
        assert_eq!(r.size(), 8);
        assert_eq!(r.mul(2, 2), 4);
        assert_eq!(r.mul(r.mul(2, 2), 2), 0);
        r.validate().unwrap();
    }

    #[test]
    fn zmod_one_is_zero_ring() {
        let r = FiniteRing::zmod(1).unwrap();
        assert!(r.is_zero_ring());
        assert_eq!(r.one(), 0);
        r.validate().unwrap();
        assert!(FiniteRing::zmod(0).is_err());
    }

    #[test]
    fn matrix_product_mod_eight() {
        let r = m2(8);
        assert_eq!(r.size(), 4096);
        let x = r.encode(&[1, 0, 0, 2]).unwrap();
        let y = r.encode(&[0, 1, 1, 0]).unwrap();
        assert_eq!(r.decode(r.mul(x, y)), vec![0, 1, 2, 0]);
        r.validate().unwrap();
    }

    #[test]
    fn one_by_one_matrices() {
        let base = FiniteRing::zmod(2).unwrap();
        let r = FiniteRing::matrix(&base, 1).unwrap();
        assert_eq!(r.size(), 2);
        assert_eq!(r.mul(1, 1), 1);
        assert_eq!(r.one(), 1);
    }

    #[test]
    fn products() {
        let r = FiniteRing::product(&[FiniteRing::zmod(2).unwrap(), FiniteRing::zmod(4).unwrap()]).unwrap();
        assert_eq!(r.size(), 8);
        let a = r.encode(&[1, 2]).unwrap();
        assert_eq!(r.add(a, a), 0);
        let z = FiniteRing::product(&[FiniteRing::zmod(2).unwrap(), FiniteRing::zmod(2).unwrap()]).unwrap();
        let e1 = z.encode(&[1, 0]).unwrap();
        let e2 = z.encode(&[0, 1]).unwrap();
        assert_eq!(z.mul(e1, e2), 0);
        assert!(FiniteRing::product(&[]).is_err());
        let single = FiniteRing::product(&[FiniteRing::zmod(5).unwrap()]).unwrap();
        assert_eq!(single, FiniteRing::zmod(5).unwrap());
    }

    #[test]
    fn matrix_over_noncommutative_base_rejected() {
        assert!(FiniteRing::matrix(&m2(2), 2).is_err());
    }

    #[test]
    fn corrupted_constant_fails_associativity() {
        // e11·e12 := e21 in M2(Z2)
        let r = m2(2);
        let k = r.rank();
        let mut products: Vec<Vec<Vec<i64>>> = (0..k)
            .map(|i| {
                (0..k)
                    .map(|j| r.basis_product(i, j).iter().map(|&c| c as i64).collect())
                    .collect()
            })
            .collect();
        products[0][1] = vec![0, 0, 1, 0];
        let bad = FiniteRing::new_unchecked(vec![2; 4], &products, &[1, 0, 0, 1]).unwrap();
        let err = bad.validate().unwrap_err();
        assert!(matches!(err, Error::Axiom(ref m) if m.contains("associativity")), "{err}");
        // the witness triple (e11, e11, e12) itself disagrees
        let (e11, e12) = (bad.basis(0), bad.basis(1));
        assert_eq!(bad.decode(bad.mul(bad.mul(e11, e11), e12)), vec![0, 0, 1, 0]);
        assert_eq!(bad.mul(e11, bad.mul(e11, e12)), 0);
    }
}
