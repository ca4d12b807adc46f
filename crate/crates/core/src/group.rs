//! Finite grading groups given by Cayley tables.

use crate::error::{Error, Result};

/// Index of an element of a [`FiniteGroup`].
pub type GroupElem = usize;

/// A finite group with elements `0..n`.
///
/// Groups built by [`FiniteGroup::from_cyclic_orders`] remember their cyclic
/// factors so elements can be written as integer vectors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    table: Vec<Vec<GroupElem>>,
    identity: GroupElem,
    inverse: Vec<GroupElem>,
    cyclic_orders: Option<Vec<usize>>,
}

impl FiniteGroup {
    pub fn trivial() -> Self {
        Self::from_cyclic_orders(&[]).expect("trivial group")
    }

    pub fn cyclic(n: usize) -> Result<Self> {
        Self::from_cyclic_orders(&[n])
    }

    /// Direct product ℤ_{n₁} × … × ℤ_{nₖ}, elements ordered lexicographically
    /// with the first factor most significant.
    pub fn from_cyclic_orders(orders: &[usize]) -> Result<Self> {
        if orders.iter().any(|&n| n == 0) {
            return Err(Error::input("cyclic group order must be positive"));
        }
        let size: usize = orders.iter().product();
        let decode = |mut x: usize| -> Vec<usize> {
            let mut v = vec![0; orders.len()];
            for i in (0..orders.len()).rev() {
                v[i] = x % orders[i];
                x /= orders[i];
            }
            v
        };
        let encode = |v: &[usize]| -> usize { v.iter().zip(orders).fold(0, |acc, (&c, &n)| acc * n + c) };
        let mut table = vec![vec![0; size]; size];
        for (a, row) in table.iter_mut().enumerate() {
            let va = decode(a);
            for (b, slot) in row.iter_mut().enumerate() {
                let vb = decode(b);
                let sum: Vec<usize> = va
                    .iter()
                    .zip(&vb)
                    .zip(orders)
                    .map(|((x, y), n)| (x + y) % n)
                    .collect();
                *slot = encode(&sum);
            }
        }
        let inverse = (0..size)
            .map(|a| {
                let v: Vec<usize> = decode(a)
                    .iter()
                    .zip(orders)
                    .map(|(&x, &n)| (n - x) % n)
                    .collect();
                encode(&v)
            })
            .collect();
        Ok(Self {
            table,
            identity: 0,
            inverse,
            cyclic_orders: Some(orders.to_vec()),
        })
    }

    /// Builds a group from an explicit composition table and checks the axioms
    /// exhaustively.
    pub fn from_table(table: Vec<Vec<GroupElem>>) -> Result<Self> {
        let n = table.len();
        if n == 0 {
            return Err(Error::input("group table is empty"));
        }
        if table.iter().any(|row| row.len() != n || row.iter().any(|&x| x >= n)) {
            return Err(Error::input("group table is not an n×n table over 0..n"));
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|x| table[e][x] == x && table[x][e] == x))
            .ok_or_else(|| Error::Axiom("group table has no two-sided identity".into()))?;
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if table[table[a][b]][c] != table[a][table[b][c]] {
                        return Err(Error::Axiom(format!(
                            "group operation not associative on ({a}, {b}, {c})"
                        )));
                    }
                }
            }
        }
        let mut inverse = Vec::with_capacity(n);
        for a in 0..n {
            let inv = (0..n)
                .find(|&b| table[a][b] == identity && table[b][a] == identity)
                .ok_or_else(|| Error::Axiom(format!("element {a} has no inverse")))?;
            inverse.push(inv);
        }
        Ok(Self {
            table,
            identity,
            inverse,
            cyclic_orders: None,
        })
    }

    pub fn order(&self) -> usize {
        self.table.len()
    }

    pub fn identity(&self) -> GroupElem {
        self.identity
    }

    #[inline]
    pub fn op(&self, a: GroupElem, b: GroupElem) -> GroupElem {
        self.table[a][b]
    }

    pub fn inverse(&self, a: GroupElem) -> GroupElem {
        self.inverse[a]
    }

    pub fn is_abelian(&self) -> bool {
        let n = self.order();
        (0..n).all(|a| (0..n).all(|b| self.table[a][b] == self.table[b][a]))
    }

    pub fn cyclic_orders(&self) -> Option<&[usize]> {
        self.cyclic_orders.as_deref()
    }

    /// Parses an element written as an integer vector over the cyclic
    /// factors, or as a single index for table groups.
    pub fn element_from_vec(&self, v: &[i64]) -> Result<GroupElem> {
        match &self.cyclic_orders {
            Some(orders) => {
                if v.len() != orders.len() {
                    return Err(Error::input(format!(
                        "group element {v:?} must have {} components",
                        orders.len()
                    )));
                }
                Ok(v.iter().zip(orders).fold(0usize, |acc, (&c, &n)| {
                    acc * n + c.rem_euclid(n as i64) as usize
                }))
            }
            None => match v {
                [i] if *i >= 0 && (*i as usize) < self.order() => Ok(*i as usize),
                _ => Err(Error::input(format!("group element {v:?} is not a valid index"))),
            },
        }
    }

    pub fn element_to_vec(&self, g: GroupElem) -> Vec<i64> {
        match &self.cyclic_orders {
            Some(orders) => {
                let mut v = vec![0i64; orders.len()];
                let mut x = g;
                for i in (0..orders.len()).rev() {
                    v[i] = (x % orders[i]) as i64;
                    x /= orders[i];
                }
                v
            }
            None => vec![g as i64],
        }
    }

    /// Cayley table, `table[a][b] = a·b`.
    pub fn table(&self) -> &[Vec<GroupElem>] {
        &self.table
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclic_four() {
        let g = FiniteGroup::cyclic(4).unwrap();
        assert_eq!(g.order(), 4);
        assert_eq!(g.op(3, 2), 1);
        assert_eq!(g.inverse(1), 3);
        assert_eq!(g.element_from_vec(&[-2]).unwrap(), 2);
        assert!(g.is_abelian());
        assert!(FiniteGroup::from_table(g.table().to_vec()).is_ok());
    }

    #[test]
    fn klein_vectors() {
        let g = FiniteGroup::from_cyclic_orders(&[2, 2]).unwrap();
        let a = g.element_from_vec(&[1, 0]).unwrap();
        let b = g.element_from_vec(&[0, 1]).unwrap();
        assert_eq!(g.element_to_vec(g.op(a, b)), vec![1, 1]);
        assert_eq!(g.op(a, a), g.identity());
    }

    #[test]
    fn symmetric_group_table() {
        // S3 as permutations of {0,1,2}
        let perms: Vec<[usize; 3]> = vec![
            [0, 1, 2],
            [1, 0, 2],
            [2, 1, 0],
            [0, 2, 1],
            [1, 2, 0],
            [2, 0, 1],
        ];
        let idx = |p: [usize; 3]| perms.iter().position(|q| *q == p).unwrap();
        let table: Vec<Vec<usize>> = perms
            .iter()
            .map(|p| perms.iter().map(|q| idx([p[q[0]], p[q[1]], p[q[2]]])).collect())
            .collect();
        let g = FiniteGroup::from_table(table).unwrap();
        assert!(!g.is_abelian());
        assert_eq!(g.op(4, g.inverse(4)), g.identity());
    }

    #[test]
    fn rejects_non_associative() {
        let table = vec![vec![0, 1, 2], vec![1, 0, 0], vec![2, 0, 1]];
        assert!(FiniteGroup::from_table(table).is_err());
    }
}
