//! Finite vertex sets stored as bit masks over a complex's vertex table.

use std::cmp::Ordering;
use std::fmt;

use smallvec::SmallVec;

type Words = SmallVec<[u64; 2]>;

/// A set of vertex indices. Used both for faces of a complex and for
/// plain vertex subsets (independent sets, supports, ...).
///
/// Storage is a little-endian word vector with trailing zero words
/// trimmed, so two equal sets always have equal representations. Up to
/// 128 vertices the words live inline.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct Simplex {
    words: Words,
}

impl Simplex {
    /// The empty simplex.
    pub fn empty() -> Self {
        Self::default()
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(indices: I) -> Self {
        let mut s = Self::empty();
        for i in indices {
            s.insert(i);
        }
        s
    }

    /// All of `0..n`.
    pub fn full(n: usize) -> Self {
        Self::from_indices(0..n)
    }

    fn trim(&mut self) {
        while self.words.last() == Some(&0) {
            self.words.pop();
        }
    }

    pub fn insert(&mut self, v: usize) {
        let (w, b) = (v / 64, v % 64);
        if self.words.len() <= w {
            self.words.resize(w + 1, 0);
        }
        self.words[w] |= 1 << b;
    }

    pub fn remove(&mut self, v: usize) {
        let (w, b) = (v / 64, v % 64);
        if let Some(word) = self.words.get_mut(w) {
            *word &= !(1 << b);
            self.trim();
        }
    }

    pub fn contains(&self, v: usize) -> bool {
        self.words
            .get(v / 64)
            .is_some_and(|w| w & (1 << (v % 64)) != 0)
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.words.len() <= other.words.len()
            && self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    pub fn is_strict_subset(&self, other: &Self) -> bool {
        self.is_subset(other) && self != other
    }

    pub fn is_disjoint(&self, other: &Self) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & b == 0)
    }

    pub fn union(&self, other: &Self) -> Self {
        let (long, short) = if self.words.len() >= other.words.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut words = long.words.clone();
        for (w, s) in words.iter_mut().zip(&short.words) {
            *w |= s;
        }
        Self { words }
    }

    pub fn intersection(&self, other: &Self) -> Self {
        let mut s = Self {
            words: self.words.iter().zip(&other.words).map(|(a, b)| a & b).collect(),
        };
        s.trim();
        s
    }

    pub fn difference(&self, other: &Self) -> Self {
        let mut words = self.words.clone();
        for (w, o) in words.iter_mut().zip(&other.words) {
            *w &= !o;
        }
        let mut s = Self { words };
        s.trim();
        s
    }

    /// Indices in increasing order.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &word)| {
            let mut rest = word;
            std::iter::from_fn(move || {
                if rest == 0 {
                    return None;
                }
                let b = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(wi * 64 + b)
            })
        })
    }

    /// Largest member plus one, or 0 for the empty set.
    pub fn span(&self) -> usize {
        match self.words.last() {
            Some(w) => (self.words.len() - 1) * 64 + 64 - w.leading_zeros() as usize,
            None => 0,
        }
    }

    /// Shift every index by `offset`.
    pub fn shifted(&self, offset: usize) -> Self {
        Self::from_indices(self.iter().map(|v| v + offset))
    }

    /// Every subset of this set (including the empty set and itself).
    /// Caller is responsible for keeping `len()` small.
    pub fn subsets(&self) -> impl Iterator<Item = Simplex> + '_ {
        let members: Vec<usize> = self.iter().collect();
        let n = members.len();
        assert!(n < 64, "subset enumeration of a {n}-element set");
        (0u64..(1u64 << n)).map(move |mask| {
            Simplex::from_indices((0..n).filter(|b| mask >> b & 1 == 1).map(|b| members[b]))
        })
    }
}

/// Canonical order: larger sets first, then lexicographic on the sorted
/// index sequence.
impl Ord for Simplex {
    fn cmp(&self, other: &Self) -> Ordering {
        other
            .len()
            .cmp(&self.len())
            .then_with(|| self.iter().cmp(other.iter()))
    }
}

impl PartialOrd for Simplex {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Simplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl FromIterator<usize> for Simplex {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        Self::from_indices(iter)
    }
}
