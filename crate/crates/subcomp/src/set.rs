//! Packed vertex sets tied to a fixed ground-set capacity.

use smallvec::SmallVec;
use std::cmp::Ordering;
use std::fmt;

const WORD_BITS: usize = 64;

fn word_count(capacity: usize) -> usize {
    capacity.div_ceil(WORD_BITS)
}

/// A subset of `{0..capacity-1}`, stored as a bitmask.
///
/// Sets are inline (no heap allocation) for ground sets up to 128 vertices,
/// which covers everything the solvers sweep over.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VertexSet {
    capacity: usize,
    words: SmallVec<[u64; 2]>,
}

impl VertexSet {
    /// The empty subset of a ground set with `capacity` vertices.
    pub fn new(capacity: usize) -> Self {
        VertexSet {
            capacity,
            words: smallvec::smallvec![0; word_count(capacity)],
        }
    }

    /// The full ground set `{0..capacity-1}`.
    pub fn full(capacity: usize) -> Self {
        let mut s = Self::new(capacity);
        for w in s.words.iter_mut() {
            *w = u64::MAX;
        }
        s.mask_tail();
        s
    }

    pub fn singleton(capacity: usize, v: usize) -> Self {
        let mut s = Self::new(capacity);
        s.insert(v);
        s
    }

    pub fn from_vertices<I: IntoIterator<Item = usize>>(capacity: usize, vertices: I) -> Self {
        let mut s = Self::new(capacity);
        for v in vertices {
            s.insert(v);
        }
        s
    }

    fn mask_tail(&mut self) {
        let rem = self.capacity % WORD_BITS;
        if rem != 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= (1u64 << rem) - 1;
            }
        }
        if self.capacity == 0 {
            self.words.clear();
        }
    }

    pub fn capacity(&self) -> usize {
        self.capacity
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn contains(&self, v: usize) -> bool {
        debug_assert!(v < self.capacity);
        self.words[v / WORD_BITS] & (1u64 << (v % WORD_BITS)) != 0
    }

    pub fn insert(&mut self, v: usize) {
        assert!(v < self.capacity, "vertex {v} out of range {}", self.capacity);
        self.words[v / WORD_BITS] |= 1u64 << (v % WORD_BITS);
    }

    pub fn remove(&mut self, v: usize) {
        assert!(v < self.capacity, "vertex {v} out of range {}", self.capacity);
        self.words[v / WORD_BITS] &= !(1u64 << (v % WORD_BITS));
    }

    /// Smallest member, if any.
    pub fn first(&self) -> Option<usize> {
        for (i, &w) in self.words.iter().enumerate() {
            if w != 0 {
                return Some(i * WORD_BITS + w.trailing_zeros() as usize);
            }
        }
        None
    }

    pub fn iter(&self) -> Iter<'_> {
        Iter {
            set: self,
            word_idx: 0,
            current: self.words.first().copied().unwrap_or(0),
        }
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    fn check_same_ground(&self, other: &VertexSet) {
        assert_eq!(
            self.capacity, other.capacity,
            "vertex sets over different ground sets"
        );
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        let mut out = self.clone();
        out.union_with(other);
        out
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        let mut out = self.clone();
        out.intersect_with(other);
        out
    }

    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        let mut out = self.clone();
        out.subtract(other);
        out
    }

    pub fn union_with(&mut self, other: &VertexSet) {
        self.check_same_ground(other);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    pub fn intersect_with(&mut self, other: &VertexSet) {
        self.check_same_ground(other);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= b;
        }
    }

    /// Symmetric difference in place: membership of every vertex in `other`
    /// is flipped.
    pub fn toggle_with(&mut self, other: &VertexSet) {
        self.check_same_ground(other);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }

    pub fn subtract(&mut self, other: &VertexSet) {
        self.check_same_ground(other);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= !b;
        }
    }

    /// Complement within the ground set.
    pub fn complement(&self) -> VertexSet {
        let mut out = self.clone();
        for w in out.words.iter_mut() {
            *w = !*w;
        }
        out.mask_tail();
        out
    }

    pub fn is_subset_of(&self, other: &VertexSet) -> bool {
        self.check_same_ground(other);
        self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    pub fn is_disjoint_from(&self, other: &VertexSet) -> bool {
        self.check_same_ground(other);
        self.words.iter().zip(&other.words).all(|(a, b)| a & b == 0)
    }

    /// Lexicographic order on the ascending member lists
    /// (`{} < {0} < {0,1} < {1}`).
    pub fn cmp_lex(&self, other: &VertexSet) -> Ordering {
        self.iter().cmp(other.iter())
    }

    /// Canonical solver order: smaller sets first, ties broken lexicographically.
    pub fn cmp_size_lex(&self, other: &VertexSet) -> Ordering {
        self.len().cmp(&other.len()).then_with(|| self.cmp_lex(other))
    }
}

pub struct Iter<'a> {
    set: &'a VertexSet,
    word_idx: usize,
    current: u64,
}

impl Iterator for Iter<'_> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        loop {
            if self.current != 0 {
                let bit = self.current.trailing_zeros() as usize;
                self.current &= self.current - 1;
                return Some(self.word_idx * WORD_BITS + bit);
            }
            self.word_idx += 1;
            if self.word_idx >= self.set.words.len() {
                return None;
            }
            self.current = self.set.words[self.word_idx];
        }
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "]")
    }
}
