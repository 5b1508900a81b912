use std::cmp::Ordering;
use std::fmt;

use serde::{Serialize, Serializer};
use smallvec::{smallvec, SmallVec};

use crate::error::{Error, Result};

const WORD: usize = 64;

/// A subset of the vertices `0..n` of some graph, stored as a bitset.
///
/// Sets over up to 128 vertices live inline, so the exhaustive searches can
/// build one per candidate without touching the allocator.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VertexSet {
    n: usize,
    words: SmallVec<[u64; 2]>,
}

fn word_count(n: usize) -> usize {
    n.div_ceil(WORD)
}

impl VertexSet {
    pub fn empty(n: usize) -> Self {
        VertexSet {
            n,
            words: smallvec![0; word_count(n)],
        }
    }

    pub fn full(n: usize) -> Self {
        let mut s = Self::empty(n);
        for (i, w) in s.words.iter_mut().enumerate() {
            let lo = i * WORD;
            let bits = (n - lo).min(WORD);
            *w = if bits == WORD {
                u64::MAX
            } else {
                (1u64 << bits) - 1
            };
        }
        s
    }

    pub fn from_vertices<I: IntoIterator<Item = usize>>(n: usize, vertices: I) -> Result<Self> {
        let mut s = Self::empty(n);
        for v in vertices {
            if v >= n {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
            s.insert(v);
        }
        Ok(s)
    }

    /// Builds the set whose members are the one-bits of `mask`. Requires `n <= 64`.
    pub fn from_mask(n: usize, mask: u64) -> Self {
        assert!(n <= WORD, "from_mask needs n <= 64");
        let mut s = Self::empty(n);
        if n > 0 {
            let keep = if n == WORD { u64::MAX } else { (1u64 << n) - 1 };
            s.words[0] = mask & keep;
        }
        s
    }

    /// Low word of the bitset; the whole set when `n <= 64`.
    pub fn mask(&self) -> u64 {
        self.words.first().copied().unwrap_or(0)
    }

    pub fn universe(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn contains(&self, v: usize) -> bool {
        v < self.n && self.words[v / WORD] >> (v % WORD) & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, v: usize) {
        assert!(v < self.n, "vertex {v} outside universe of {}", self.n);
        self.words[v / WORD] |= 1 << (v % WORD);
    }

    #[inline]
    pub fn remove(&mut self, v: usize) {
        if v < self.n {
            self.words[v / WORD] &= !(1 << (v % WORD));
        }
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn is_full(&self) -> bool {
        self.len() == self.n
    }

    /// Complement with respect to `0..n`.
    pub fn complement(&self) -> Self {
        let full = Self::full(self.n);
        let words = self
            .words
            .iter()
            .zip(full.words.iter())
            .map(|(a, f)| !a & f)
            .collect();
        VertexSet { n: self.n, words }
    }

    pub fn intersection_len(&self, other: &VertexSet) -> usize {
        self.words
            .iter()
            .zip(other.words.iter())
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    pub fn union(&self, other: &VertexSet) -> Self {
        let words = self
            .words
            .iter()
            .zip(other.words.iter())
            .map(|(a, b)| a | b)
            .collect();
        VertexSet { n: self.n, words }
    }

    pub fn difference(&self, other: &VertexSet) -> Self {
        let words = self
            .words
            .iter()
            .zip(other.words.iter())
            .map(|(a, b)| a & !b)
            .collect();
        VertexSet { n: self.n, words }
    }

    pub fn is_disjoint(&self, other: &VertexSet) -> bool {
        self.intersection_len(other) == 0
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.words
            .iter()
            .zip(other.words.iter())
            .all(|(a, b)| a & !b == 0)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(i, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let bit = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(i * WORD + bit)
            })
        })
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    /// Lexicographic comparison of the sorted member lists.
    pub fn lex_cmp(&self, other: &VertexSet) -> Ordering {
        self.iter().cmp(other.iter())
    }

    /// Parses a comma-separated vertex list such as `0,2,5`. The empty string
    /// (or `{}`) is the empty set.
    pub fn parse(n: usize, text: &str) -> Result<Self> {
        let body = text
            .trim()
            .trim_start_matches('{')
            .trim_end_matches('}')
            .trim();
        if body.is_empty() {
            return Ok(Self::empty(n));
        }
        let mut vertices = Vec::new();
        for tok in body.split(',') {
            let tok = tok.trim();
            let v: usize = tok
                .parse()
                .map_err(|_| Error::BadParams(format!("not a vertex index: {tok:?}")))?;
            vertices.push(v);
        }
        Self::from_vertices(n, vertices)
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
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
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn full_and_complement_respect_universe() {
        for n in [0, 1, 5, 63, 64, 65, 130] {
            let full = VertexSet::full(n);
            assert_eq!(full.len(), n);
            assert!(full.complement().is_empty());
            assert_eq!(VertexSet::empty(n).complement(), full);
        }
    }

    #[test]
    fn iter_yields_sorted_members() {
        let s = VertexSet::from_vertices(140, [139, 3, 64, 0]).unwrap();
        assert_eq!(s.to_vec(), vec![0, 3, 64, 139]);
        assert_eq!(s.to_string(), "{0,3,64,139}");
    }

    #[test]
    fn out_of_range_rejected() {
        assert_eq!(
            VertexSet::from_vertices(3, [3]),
            Err(Error::VertexOutOfRange { vertex: 3, n: 3 })
        );
        assert!(VertexSet::parse(4, "0, x").is_err());
    }

    #[test]
    fn parse_accepts_braces_and_blank() {
        assert_eq!(VertexSet::parse(4, "{0,2}").unwrap().to_vec(), vec![0, 2]);
        assert!(VertexSet::parse(4, "").unwrap().is_empty());
        assert!(VertexSet::parse(4, "{}").unwrap().is_empty());
    }

    #[test]
    fn lex_order() {
        let a = VertexSet::from_vertices(6, [0, 1, 3, 4]).unwrap();
        let b = VertexSet::from_vertices(6, [0, 2, 3, 4]).unwrap();
        assert_eq!(a.lex_cmp(&b), Ordering::Less);
    }
}
