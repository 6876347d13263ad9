//! Finitely supported integer sequences indexed from 1.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Neg, Sub};

/// A sequence `(n_1, n_2, …)` of integers with finitely many nonzero entries.
///
/// Only nonzero entries are stored, so structural equality is equality of
/// sequences.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SparseSeq(BTreeMap<u32, i64>);

impl SparseSeq {
    pub fn new() -> Self {
        SparseSeq(BTreeMap::new())
    }

    /// The sequence with `value` at `index` and zero elsewhere.
    pub fn unit(index: u32, value: i64) -> Self {
        let mut s = SparseSeq::new();
        s.add_at(index, value);
        s
    }

    /// Builds a sequence from its first entries, starting at index 1.
    pub fn from_dense(values: &[i64]) -> Self {
        let mut s = SparseSeq::new();
        for (i, v) in values.iter().enumerate() {
            s.add_at(i as u32 + 1, *v);
        }
        s
    }

    pub fn get(&self, index: u32) -> i64 {
        self.0.get(&index).copied().unwrap_or(0)
    }

    pub fn add_at(&mut self, index: u32, value: i64) {
        debug_assert!(index >= 1, "sequence indices start at 1");
        if value == 0 {
            return;
        }
        let entry = self.0.entry(index).or_insert(0);
        *entry += value;
        if *entry == 0 {
            self.0.remove(&index);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    /// Nonzero entries in increasing index order.
    pub fn iter(&self) -> impl Iterator<Item = (u32, i64)> + '_ {
        self.0.iter().map(|(i, v)| (*i, *v))
    }

    /// Largest index carrying a nonzero entry, or 0 for the zero sequence.
    pub fn support_end(&self) -> u32 {
        self.0.keys().next_back().copied().unwrap_or(0)
    }

    /// Entries `1..=support_end()` as a dense vector.
    pub fn to_dense(&self) -> Vec<i64> {
        (1..=self.support_end()).map(|i| self.get(i)).collect()
    }

    /// Applies `f` to every index, summing entries that collide.
    pub fn reindex(&self, mut f: impl FnMut(u32) -> u32) -> Self {
        let mut out = SparseSeq::new();
        for (i, v) in self.iter() {
            out.add_at(f(i), v);
        }
        out
    }
}

impl Add for &SparseSeq {
    type Output = SparseSeq;
    fn add(self, rhs: &SparseSeq) -> SparseSeq {
        let mut out = self.clone();
        for (i, v) in rhs.iter() {
            out.add_at(i, v);
        }
        out
    }
}

impl Sub for &SparseSeq {
    type Output = SparseSeq;
    fn sub(self, rhs: &SparseSeq) -> SparseSeq {
        self + &(-rhs)
    }
}

impl Neg for &SparseSeq {
    type Output = SparseSeq;
    fn neg(self) -> SparseSeq {
        SparseSeq(self.0.iter().map(|(i, v)| (*i, -*v)).collect())
    }
}

impl fmt::Display for SparseSeq {
    /// Dense form `(n_1,…,n_r)` up to the last nonzero entry; `()` for zero.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (pos, v) in self.to_dense().iter().enumerate() {
            if pos > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str(")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    #[test]
    fn zero_entries_are_dropped() {
        let mut s = SparseSeq::unit(2, 3);
        s.add_at(2, -3);
        assert!(s.is_zero());
        assert_eq!(s, SparseSeq::new());
    }

    #[test]
    fn arithmetic_is_componentwise() {
        let a = SparseSeq::from_dense(&[1, 0, 2]);
        let b = SparseSeq::from_dense(&[-1, 4]);
        assert_eq!((&a + &b).to_dense(), [0, 4, 2]);
        assert_eq!((&a - &a), SparseSeq::new());
        assert_eq!((-&b).get(2), -4);
    }

    #[test]
    fn display_is_dense_prefix() {
        assert_eq!(SparseSeq::from_dense(&[0, 1]).to_string(), "(0,1)");
        assert_eq!(SparseSeq::new().to_string(), "()");
    }

    #[test]
    fn reindex_merges_collisions() {
        let s = SparseSeq::from_dense(&[1, 2]);
        assert_eq!(s.reindex(|_| 5), SparseSeq::unit(5, 3));
    }
}
