//! Dense membership sets over an element index space.

use std::cmp::Ordering;

use crate::Elem;

/// Fixed-domain bitset. Two sets compare equal only when they share a domain.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MemberSet {
    domain: usize,
    words: Vec<u64>,
    len: usize,
}

impl MemberSet {
    pub fn empty(domain: usize) -> Self {
        Self {
            domain,
            words: vec![0; domain.div_ceil(64)],
            len: 0,
        }
    }

    pub fn full(domain: usize) -> Self {
        let mut set = Self::empty(domain);
        for x in 0..domain {
            set.insert(x as Elem);
        }
        set
    }

    pub fn from_elems(domain: usize, elems: impl IntoIterator<Item = Elem>) -> Self {
        let mut set = Self::empty(domain);
        for x in elems {
            set.insert(x);
        }
        set
    }

    pub fn domain(&self) -> usize {
        self.domain
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    #[inline]
    pub fn contains(&self, x: Elem) -> bool {
        let x = x as usize;
        debug_assert!(x < self.domain);
        self.words[x >> 6] & (1u64 << (x & 63)) != 0
    }

    /// Returns true when `x` was not present before.
    #[inline]
    pub fn insert(&mut self, x: Elem) -> bool {
        let x = x as usize;
        assert!(x < self.domain, "element {x} outside domain {}", self.domain);
        let word = &mut self.words[x >> 6];
        let mask = 1u64 << (x & 63);
        if *word & mask == 0 {
            *word |= mask;
            self.len += 1;
            true
        } else {
            false
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = Elem> + '_ {
        self.words.iter().enumerate().flat_map(|(i, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let bit = w.trailing_zeros();
                w &= w - 1;
                Some((i * 64 + bit as usize) as Elem)
            })
        })
    }

    pub fn to_vec(&self) -> Vec<Elem> {
        self.iter().collect()
    }

    pub fn is_subset(&self, other: &MemberSet) -> bool {
        assert_eq!(self.domain, other.domain);
        self.words
            .iter()
            .zip(&other.words)
            .all(|(a, b)| a & !b == 0)
    }

    pub fn intersection(&self, other: &MemberSet) -> MemberSet {
        assert_eq!(self.domain, other.domain);
        let words: Vec<u64> = self
            .words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| a & b)
            .collect();
        let len = words.iter().map(|w| w.count_ones() as usize).sum();
        MemberSet {
            domain: self.domain,
            words,
            len,
        }
    }

    pub fn union(&self, other: &MemberSet) -> MemberSet {
        assert_eq!(self.domain, other.domain);
        let words: Vec<u64> = self
            .words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| a | b)
            .collect();
        let len = words.iter().map(|w| w.count_ones() as usize).sum();
        MemberSet {
            domain: self.domain,
            words,
            len,
        }
    }

    /// Smallest member, if any.
    pub fn first(&self) -> Option<Elem> {
        self.iter().next()
    }
}

impl PartialOrd for MemberSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Orders by cardinality, then by the sorted member lists.
impl Ord for MemberSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.domain
            .cmp(&other.domain)
            .then(self.len.cmp(&other.len))
            .then_with(|| self.iter().cmp(other.iter()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn insert_and_iterate() {
        let mut s = MemberSet::empty(130);
        assert!(s.insert(129));
        assert!(s.insert(3));
        assert!(!s.insert(3));
        assert_eq!(s.to_vec(), vec![3, 129]);
        assert_eq!(s.len(), 2);
        assert_eq!(s.first(), Some(3));
    }

    #[test]
    fn lattice_operations() {
        let a = MemberSet::from_elems(10, [0, 2, 4, 6, 8]);
        let b = MemberSet::from_elems(10, [0, 4, 8]);
        assert!(b.is_subset(&a));
        assert!(!a.is_subset(&b));
        assert_eq!(a.intersection(&b), b);
        assert_eq!(a.union(&b), a);
        assert!(b < a);
    }
}
