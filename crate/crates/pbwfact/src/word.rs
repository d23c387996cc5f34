//! Totally ordered alphabets and words over them.
//!
//! A [`Word`] stores alphabet *indices*, so its derived `Ord` is exactly the
//! lexicographic order induced by the alphabet: letters compare by position,
//! and a proper prefix precedes every extension of itself. The empty word is
//! a valid word and is the unit of concatenation, shuffle and the trace
//! monoids built on top.

use crate::error::{Error, Result};

/// Finite totally ordered alphabet; the order is the position in `letters`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Alphabet {
    letters: Vec<char>,
}

impl Alphabet {
    /// Builds an alphabet from a letter string, e.g. `"ab"` for `a < b`.
    pub fn new(letters: &str) -> Result<Self> {
        Self::from_chars(letters.chars())
    }

    pub fn from_chars(letters: impl IntoIterator<Item = char>) -> Result<Self> {
        let letters: Vec<char> = letters.into_iter().collect();
        for (k, &c) in letters.iter().enumerate() {
            if letters[..k].contains(&c) {
                return Err(Error::DuplicateLetter(c));
            }
        }
        Ok(Alphabet { letters })
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn letter(&self, index: usize) -> char {
        self.letters[index]
    }

    pub fn index_of(&self, c: char) -> Option<usize> {
        self.letters.iter().position(|&x| x == c)
    }

    /// Parses a word over this alphabet; `""` is the empty word.
    pub fn word(&self, s: &str) -> Result<Word> {
        let mut letters = Vec::with_capacity(s.len());
        for c in s.chars() {
            letters.push(self.index_of(c).ok_or(Error::UnknownLetter(c))?);
        }
        Ok(Word::new(letters))
    }

    /// The empty word renders as `""`.
    pub fn format_word(&self, w: &Word) -> String {
        w.letters().iter().map(|&i| self.letter(i)).collect()
    }

    /// All words of the given length in lexicographic order.
    pub fn words_of_len(&self, n: usize) -> Vec<Word> {
        let mut out = vec![Word::empty()];
        for _ in 0..n {
            let mut next = Vec::with_capacity(out.len() * self.len());
            for w in &out {
                for i in 0..self.len() {
                    let mut v = w.letters().to_vec();
                    v.push(i);
                    next.push(Word::new(v));
                }
            }
            out = next;
        }
        out
    }

    /// All words of length at most `n`, graded by length, lexicographic
    /// within each length.
    pub fn words_up_to(&self, n: usize) -> Vec<Word> {
        (0..=n).flat_map(|k| self.words_of_len(k)).collect()
    }
}

/// A word over some alphabet, stored as letter indices.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Word {
    letters: Vec<usize>,
}

impl Word {
    pub fn new(letters: Vec<usize>) -> Self {
        Word { letters }
    }

    pub fn empty() -> Self {
        Word::default()
    }

    pub fn letter(index: usize) -> Self {
        Word { letters: vec![index] }
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn letters(&self) -> &[usize] {
        &self.letters
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = Vec::with_capacity(self.len() + other.len());
        letters.extend_from_slice(&self.letters);
        letters.extend_from_slice(&other.letters);
        Word { letters }
    }

    /// Letter counts: entry `i` is the number of occurrences of letter `i`.
    pub fn multidegree(&self, alphabet_len: usize) -> Vec<u32> {
        let mut deg = vec![0u32; alphabet_len];
        for &i in &self.letters {
            deg[i] += 1;
        }
        deg
    }

    /// Subword at the positions where `mask` has a set bit.
    pub(crate) fn subword(&self, mask: u64) -> Word {
        let letters = self
            .letters
            .iter()
            .enumerate()
            .filter(|(p, _)| mask & (1 << p) != 0)
            .map(|(_, &c)| c)
            .collect();
        Word { letters }
    }
}

impl std::fmt::Debug for Word {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Word({:?})", self.letters)
    }
}
