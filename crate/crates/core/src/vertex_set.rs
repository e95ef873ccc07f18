//! Bitset-backed vertex sets.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// Largest vertex count a [`crate::Graph`] may have.
pub const MAX_ORDER: usize = 62;

/// A set of vertex ids in `0..MAX_ORDER`, stored as one machine word.
///
/// Iteration is always ascending, and the ordering between sets is the
/// lexicographic order of their ascending member lists, so sorting a list of
/// sets gives the same result as sorting the corresponding id vectors.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    #[inline]
    pub const fn from_bits(bits: u64) -> Self {
        VertexSet(bits)
    }

    #[inline]
    pub const fn bits(self) -> u64 {
        self.0
    }

    /// `{0, 1, ..., n-1}`.
    #[inline]
    pub const fn full(n: usize) -> Self {
        if n >= 64 {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    #[inline]
    pub const fn singleton(v: usize) -> Self {
        VertexSet(1u64 << v)
    }

    #[inline]
    pub fn insert(&mut self, v: usize) {
        self.0 |= 1u64 << v;
    }

    #[inline]
    pub fn remove(&mut self, v: usize) {
        self.0 &= !(1u64 << v);
    }

    #[inline]
    pub fn with(self, v: usize) -> Self {
        VertexSet(self.0 | (1u64 << v))
    }

    #[inline]
    pub fn without(self, v: usize) -> Self {
        VertexSet(self.0 & !(1u64 << v))
    }

    #[inline]
    pub const fn contains(self, v: usize) -> bool {
        v < 64 && self.0 >> v & 1 == 1
    }

    #[inline]
    pub const fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub const fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub const fn union(self, other: Self) -> Self {
        VertexSet(self.0 | other.0)
    }

    #[inline]
    pub const fn intersection(self, other: Self) -> Self {
        VertexSet(self.0 & other.0)
    }

    #[inline]
    pub const fn difference(self, other: Self) -> Self {
        VertexSet(self.0 & !other.0)
    }

    #[inline]
    pub const fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    #[inline]
    pub const fn is_disjoint(self, other: Self) -> bool {
        self.0 & other.0 == 0
    }

    /// Smallest member.
    #[inline]
    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    /// Largest member.
    #[inline]
    pub fn last(self) -> Option<usize> {
        (self.0 != 0).then(|| 63 - self.0.leading_zeros() as usize)
    }

    /// Largest member id plus one, or 0 for the empty set.
    #[inline]
    pub fn bound(self) -> usize {
        self.last().map_or(0, |v| v + 1)
    }

    #[inline]
    pub fn iter(self) -> Iter {
        Iter(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

/// Ascending iterator over the members of a [`VertexSet`].
#[derive(Clone, Debug)]
pub struct Iter(u64);

impl Iterator for Iter {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Iter {}

impl IntoIterator for VertexSet {
    type Item = usize;
    type IntoIter = Iter;

    fn into_iter(self) -> Iter {
        self.iter()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut set = VertexSet::EMPTY;
        for v in iter {
            assert!(v < 64, "vertex id {v} does not fit in a VertexSet");
            set.insert(v);
        }
        set
    }
}

impl<const N: usize> From<[usize; N]> for VertexSet {
    fn from(ids: [usize; N]) -> Self {
        ids.into_iter().collect()
    }
}

impl Ord for VertexSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.iter().cmp(other.iter())
    }
}

impl PartialOrd for VertexSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str("}")
    }
}

impl Serialize for VertexSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter())
    }
}

impl<'de> Deserialize<'de> for VertexSet {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let ids = Vec::<usize>::deserialize(deserializer)?;
        if let Some(&bad) = ids.iter().find(|&&v| v >= MAX_ORDER) {
            return Err(serde::de::Error::custom(format!("vertex id {bad} out of range")));
        }
        Ok(ids.into_iter().collect())
    }
}

/// Iterates over every subset of `base` with exactly `k` members, in
/// increasing order of their bit patterns.
pub fn subsets_of_size(base: VertexSet, k: usize) -> impl Iterator<Item = VertexSet> {
    let members = base.to_vec();
    let n = members.len();
    let mut idx: Option<Vec<usize>> = (k <= n).then(|| (0..k).collect());
    std::iter::from_fn(move || {
        let current = idx.as_mut()?;
        let set: VertexSet = current.iter().map(|&i| members[i]).collect();
        // advance to the next k-combination of positions
        let mut i = k;
        loop {
            if i == 0 {
                idx = None;
                break;
            }
            i -= 1;
            if current[i] < n - k + i {
                current[i] += 1;
                for j in i + 1..k {
                    current[j] = current[j - 1] + 1;
                }
                break;
            }
        }
        Some(set)
    })
}

/// Iterates over all `2^|base|` subsets of `base`.
pub fn all_subsets(base: VertexSet) -> impl Iterator<Item = VertexSet> {
    let mut next = Some(0u64);
    let b = base.bits();
    std::iter::from_fn(move || {
        let cur = next?;
        // standard submask enumeration in increasing order
        next = if cur == b { None } else { Some((cur.wrapping_sub(b)) & b) };
        Some(VertexSet(cur))
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn iteration_is_ascending() {
        let s = VertexSet::from([5, 1, 3]);
        assert_eq!(s.to_vec(), vec![1, 3, 5]);
        assert_eq!(s.first(), Some(1));
        assert_eq!(s.last(), Some(5));
        assert_eq!(format!("{s}"), "{1,3,5}");
    }

    #[test]
    fn ordering_is_lexicographic_on_members() {
        let a = VertexSet::from([0, 5]);
        let b = VertexSet::from([1]);
        let c = VertexSet::from([0, 2]);
        let mut v = vec![b, a, c];
        v.sort();
        assert_eq!(v, vec![c, a, b]);
        assert!(VertexSet::EMPTY < a);
    }

    #[test]
    fn subset_enumeration_counts() {
        let base = VertexSet::from([1, 2, 4, 7, 9]);
        assert_eq!(subsets_of_size(base, 2).count(), 10);
        assert_eq!(subsets_of_size(base, 0).count(), 1);
        assert_eq!(subsets_of_size(base, 6).count(), 0);
        assert!(subsets_of_size(base, 3).all(|s| s.len() == 3 && s.is_subset(base)));
        let all: Vec<_> = all_subsets(base).collect();
        assert_eq!(all.len(), 32);
        assert_eq!(all_subsets(VertexSet::EMPTY).count(), 1);
    }

    #[test]
    fn serde_as_sorted_list() {
        let s = VertexSet::from([4, 0]);
        assert_eq!(serde_json::to_string(&s).unwrap(), "[0,4]");
        let back: VertexSet = serde_json::from_str("[4,0,4]").unwrap();
        assert_eq!(back, s);
        assert!(serde_json::from_str::<VertexSet>("[70]").is_err());
    }
}
