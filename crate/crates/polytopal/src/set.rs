use std::cmp::Ordering;
use std::fmt;

/// Set of small indices (vertices or facets) packed into a `u64` bitmask.
///
/// Every polytope handled by this crate has well under 64 vertices and
/// 64 facets, so one word per face keeps the heavy set arithmetic of the
/// lattice and shelling code allocation-free. Iteration is always in
/// ascending index order.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct IndexSet(u64);

impl IndexSet {
    pub const EMPTY: IndexSet = IndexSet(0);

    /// Set `{0, 1, .., n-1}`. Panics if `n > 64`.
    pub fn full(n: usize) -> Self {
        assert!(n <= 64, "index sets are limited to 64 elements");
        if n == 64 {
            IndexSet(u64::MAX)
        } else {
            IndexSet((1u64 << n) - 1)
        }
    }

    pub fn singleton(i: usize) -> Self {
        assert!(i < 64);
        IndexSet(1u64 << i)
    }

    pub fn mask(self) -> u64 {
        self.0
    }

    pub fn from_mask(mask: u64) -> Self {
        IndexSet(mask)
    }

    pub fn contains(self, i: usize) -> bool {
        i < 64 && self.0 >> i & 1 == 1
    }

    pub fn insert(&mut self, i: usize) {
        assert!(i < 64);
        self.0 |= 1u64 << i;
    }

    pub fn remove(&mut self, i: usize) {
        if i < 64 {
            self.0 &= !(1u64 << i);
        }
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn inter(self, other: IndexSet) -> IndexSet {
        IndexSet(self.0 & other.0)
    }

    pub fn union(self, other: IndexSet) -> IndexSet {
        IndexSet(self.0 | other.0)
    }

    pub fn minus(self, other: IndexSet) -> IndexSet {
        IndexSet(self.0 & !other.0)
    }

    pub fn is_subset(self, other: IndexSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_strict_subset(self, other: IndexSet) -> bool {
        self.0 != other.0 && self.is_subset(other)
    }

    /// Indices in ascending order.
    pub fn iter(self) -> Iter {
        Iter(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl FromIterator<usize> for IndexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = IndexSet::EMPTY;
        for i in iter {
            s.insert(i);
        }
        s
    }
}

/// Element order is the lexicographic order on the ascending index
/// sequences, so `{2,5,7} < {3,6,7}` and `{0} < {0,1}`. This is the
/// order used everywhere a deterministic face enumeration is needed.
impl Ord for IndexSet {
    fn cmp(&self, other: &Self) -> Ordering {
        let mut a = self.iter();
        let mut b = other.iter();
        loop {
            match (a.next(), b.next()) {
                (None, None) => return Ordering::Equal,
                (None, Some(_)) => return Ordering::Less,
                (Some(_), None) => return Ordering::Greater,
                (Some(x), Some(y)) => match x.cmp(&y) {
                    Ordering::Equal => continue,
                    ord => return ord,
                },
            }
        }
    }
}

impl PartialOrd for IndexSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

pub struct Iter(u64);

impl Iterator for Iter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            let i = self.0.trailing_zeros() as usize;
            self.0 &= self.0 - 1;
            Some(i)
        }
    }
}

impl fmt::Debug for IndexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, i) in self.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{i}")?;
        }
        write!(f, "}}")
    }
}
