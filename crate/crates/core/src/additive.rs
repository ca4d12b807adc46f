//! Finite abelian groups presented as products of cyclic factors.
//!
//! Elements are addressed by a mixed-radix index whose order agrees with the
//! lexicographic order of coordinate vectors (first coordinate most
//! significant).

use crate::error::{Error, Result};
use crate::Elem;

/// Largest element index space accepted anywhere in the crate.
pub const MAX_ELEMENTS: usize = 1 << 16;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CyclicProduct {
    orders: Vec<u32>,
    strides: Vec<u32>,
    size: usize,
}

impl CyclicProduct {
    pub fn new(orders: Vec<u32>) -> Result<Self> {
        if orders.iter().any(|&n| n == 0) {
            return Err(Error::input("cyclic factor orders must be positive"));
        }
        let mut size: usize = 1;
        for &n in &orders {
            size = size
                .checked_mul(n as usize)
                .filter(|&s| s <= MAX_ELEMENTS)
                .ok_or_else(|| {
                    Error::input(format!("structure exceeds {MAX_ELEMENTS} elements"))
                })?;
        }
        let mut strides = vec![1u32; orders.len()];
        for i in (0..orders.len().saturating_sub(1)).rev() {
            strides[i] = strides[i + 1] * orders[i + 1];
        }
        Ok(Self {
            orders,
            strides,
            size,
        })
    }

    pub fn orders(&self) -> &[u32] {
        &self.orders
    }

    /// Number of basis generators.
    pub fn rank(&self) -> usize {
        self.orders.len()
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn zero(&self) -> Elem {
        0
    }

    #[inline]
    pub fn coord(&self, x: Elem, i: usize) -> u32 {
        (x / self.strides[i]) % self.orders[i]
    }

    pub fn decode(&self, x: Elem) -> Vec<u32> {
        (0..self.rank()).map(|i| self.coord(x, i)).collect()
    }

    /// Encodes already reduced coordinates.
    #[inline]
    pub fn encode(&self, coords: &[u32]) -> Elem {
        coords
            .iter()
            .zip(&self.strides)
            .map(|(&c, &s)| c * s)
            .sum()
    }

    /// Encodes already reduced wide coordinates without allocating.
    #[inline]
    pub(crate) fn encode_wide(&self, coords: &[u64]) -> Elem {
        coords
            .iter()
            .zip(&self.strides)
            .map(|(&c, &s)| c as u32 * s)
            .sum()
    }

    /// Encodes arbitrary integer coordinates, reducing each modulo its order.
    pub fn encode_reduced(&self, coords: &[i64]) -> Result<Elem> {
        if coords.len() != self.rank() {
            return Err(Error::input(format!(
                "coordinate vector {coords:?} has length {}, expected {}",
                coords.len(),
                self.rank()
            )));
        }
        let reduced: Vec<u32> = coords
            .iter()
            .zip(&self.orders)
            .map(|(&c, &n)| c.rem_euclid(n as i64) as u32)
            .collect();
        Ok(self.encode(&reduced))
    }

    /// The `i`-th basis generator.
    pub fn basis(&self, i: usize) -> Elem {
        if self.orders[i] == 1 {
            0
        } else {
            self.strides[i]
        }
    }

    #[inline]
    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        let mut out = 0;
        for i in 0..self.orders.len() {
            let n = self.orders[i];
            let s = self.strides[i];
            let c = ((a / s) % n + (b / s) % n) % n;
            out += c * s;
        }
        out
    }

    pub fn neg(&self, a: Elem) -> Elem {
        let mut out = 0;
        for i in 0..self.orders.len() {
            let n = self.orders[i];
            let s = self.strides[i];
            out += ((n - (a / s) % n) % n) * s;
        }
        out
    }

    pub fn sub(&self, a: Elem, b: Elem) -> Elem {
        self.add(a, self.neg(b))
    }

    pub fn scale(&self, a: Elem, k: u64) -> Elem {
        let mut out = 0;
        for i in 0..self.orders.len() {
            let n = self.orders[i] as u64;
            let s = self.strides[i];
            out += ((self.coord(a, i) as u64 * (k % n)) % n) as u32 * s;
        }
        out
    }

    /// Additive order of `a`.
    pub fn order_of(&self, a: Elem) -> u32 {
        (0..self.rank())
            .map(|i| {
                let n = self.orders[i];
                n / gcd(n, self.coord(a, i))
            })
            .fold(1, lcm)
    }

    /// Sum of `coeffs[i]` times basis generator `i`.
    pub fn combination(&self, coeffs: &[u64]) -> Elem {
        let reduced: Vec<u32> = coeffs
            .iter()
            .zip(&self.orders)
            .map(|(&c, &n)| (c % n as u64) as u32)
            .collect();
        self.encode(&reduced)
    }

    pub fn elements(&self) -> impl Iterator<Item = Elem> {
        0..self.size as Elem
    }
}

pub(crate) fn gcd(a: u32, b: u32) -> u32 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

pub(crate) fn lcm(a: u32, b: u32) -> u32 {
    if a == 0 || b == 0 {
        0
    } else {
        a / gcd(a, b) * b
    }
}
