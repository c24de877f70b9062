use std::fmt;

use fixedbitset::FixedBitSet;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// A set of vertex indices of a host graph with `n` vertices.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct VertexSet {
    bits: FixedBitSet,
}

impl VertexSet {
    pub fn empty(n: usize) -> Self {
        VertexSet { bits: FixedBitSet::with_capacity(n) }
    }

    pub fn full(n: usize) -> Self {
        let mut bits = FixedBitSet::with_capacity(n);
        bits.insert_range(..);
        VertexSet { bits }
    }

    pub fn singleton(n: usize, v: usize) -> Self {
        let mut s = Self::empty(n);
        s.insert(v);
        s
    }

    pub fn from_iter<I: IntoIterator<Item = usize>>(n: usize, it: I) -> Self {
        let mut s = Self::empty(n);
        for v in it {
            s.insert(v);
        }
        s
    }

    /// Capacity, i.e. the vertex count of the host.
    pub fn universe(&self) -> usize {
        self.bits.len()
    }

    pub fn insert(&mut self, v: usize) -> bool {
        let had = self.bits.contains(v);
        self.bits.insert(v);
        !had
    }

    pub fn remove(&mut self, v: usize) {
        self.bits.set(v, false);
    }

    pub fn contains(&self, v: usize) -> bool {
        self.bits.contains(v)
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones(..)
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_clear()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.bits.ones()
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.bits.ones().collect()
    }

    pub fn first(&self) -> Option<usize> {
        self.bits.minimum()
    }

    pub fn extend_from(&mut self, vs: &[usize]) {
        for &v in vs {
            self.insert(v);
        }
    }

    pub fn union_with(&mut self, o: &VertexSet) {
        self.bits.union_with(&o.bits);
    }

    pub fn intersect_with(&mut self, o: &VertexSet) {
        self.bits.intersect_with(&o.bits);
    }

    pub fn difference_with(&mut self, o: &VertexSet) {
        self.bits.difference_with(&o.bits);
    }

    pub fn union(&self, o: &VertexSet) -> VertexSet {
        let mut s = self.clone();
        s.union_with(o);
        s
    }

    pub fn intersection(&self, o: &VertexSet) -> VertexSet {
        let mut s = self.clone();
        s.intersect_with(o);
        s
    }

    pub fn difference(&self, o: &VertexSet) -> VertexSet {
        let mut s = self.clone();
        s.difference_with(o);
        s
    }

    pub fn complement(&self) -> VertexSet {
        let mut s = self.clone();
        s.bits.toggle_range(..);
        s
    }

    pub fn is_subset(&self, o: &VertexSet) -> bool {
        self.bits.is_subset(&o.bits)
    }

    pub fn is_disjoint(&self, o: &VertexSet) -> bool {
        self.bits.is_disjoint(&o.bits)
    }

    pub fn intersects(&self, o: &VertexSet) -> bool {
        !self.is_disjoint(o)
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl Serialize for VertexSet {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(self.iter())
    }
}

/// Deserializes as a plain list; the universe is the smallest that fits.
impl<'de> Deserialize<'de> for VertexSet {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let v: Vec<usize> = Vec::deserialize(d)?;
        let n = v.iter().max().map_or(0, |m| m + 1);
        Ok(VertexSet::from_iter(n, v))
    }
}
