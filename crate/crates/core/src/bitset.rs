//! Fixed-length bit sets over the A-symbols.

use std::fmt;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BitSet {
    len: usize,
    words: Vec<u64>,
}

impl BitSet {
    pub fn new(len: usize) -> Self {
        Self { len, words: vec![0; len.div_ceil(64)] }
    }

    pub fn full(len: usize) -> Self {
        let mut b = Self::new(len);
        for i in 0..len {
            b.insert(i);
        }
        b
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(len: usize, indices: I) -> Self {
        let mut b = Self::new(len);
        for i in indices {
            b.insert(i);
        }
        b
    }

    /// Low `len` bits of `raw` (requires `len ≤ 128`).
    pub fn from_u128(len: usize, raw: u128) -> Self {
        assert!(len <= 128);
        let mut b = Self::new(len);
        for (w, word) in b.words.iter_mut().enumerate() {
            *word = (raw >> (64 * w)) as u64;
        }
        b.mask_tail();
        b
    }

    pub fn to_u128(&self) -> Option<u128> {
        if self.len > 128 {
            return None;
        }
        Some(self.words.iter().enumerate().fold(0u128, |acc, (w, &word)| acc | (word as u128) << (64 * w)))
    }

    fn mask_tail(&mut self) {
        let rem = self.len % 64;
        if rem != 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= (1u64 << rem) - 1;
            }
        }
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn contains(&self, i: usize) -> bool {
        i < self.len && self.words[i / 64] >> (i % 64) & 1 == 1
    }

    pub fn insert(&mut self, i: usize) {
        assert!(i < self.len, "bit {i} out of range {}", self.len);
        self.words[i / 64] |= 1 << (i % 64);
    }

    pub fn remove(&mut self, i: usize) {
        if i < self.len {
            self.words[i / 64] &= !(1 << (i % 64));
        }
    }

    pub fn count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(w, &word)| {
            let mut bits = word;
            std::iter::from_fn(move || {
                if bits == 0 {
                    None
                } else {
                    let b = bits.trailing_zeros() as usize;
                    bits &= bits - 1;
                    Some(64 * w + b)
                }
            })
        })
    }

    pub fn is_disjoint(&self, other: &BitSet) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & b == 0)
    }

    pub fn is_subset(&self, other: &BitSet) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    pub fn union(&self, other: &BitSet) -> BitSet {
        let words = self.words.iter().zip(&other.words).map(|(a, b)| a | b).collect();
        BitSet { len: self.len, words }
    }

    /// `0`/`1` characters, bit 0 first.
    pub fn to_bitstring(&self) -> String {
        (0..self.len).map(|i| if self.contains(i) { '1' } else { '0' }).collect()
    }

    pub fn from_bitstring(s: &str) -> Option<BitSet> {
        let mut b = BitSet::new(s.len());
        for (i, c) in s.chars().enumerate() {
            match c {
                '1' => b.insert(i),
                '0' => {}
                _ => return None,
            }
        }
        Some(b)
    }
}

impl fmt::Debug for BitSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BitSet({})", self.to_bitstring())
    }
}
