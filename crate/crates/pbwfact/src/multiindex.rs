//! Finitely supported multiindices over a basis index set.

use crate::rational::factorial;
use num::{BigInt, One};
use std::collections::BTreeMap;

/// α ∈ ℕ^(I): a finitely supported map from basis indices to positive
/// exponents. Zero values are never stored, so equality is map equality.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Debug)]
pub struct MultiIndex {
    entries: BTreeMap<usize, u32>,
}

impl MultiIndex {
    pub fn zero() -> Self {
        MultiIndex::default()
    }

    /// The canonical basis vector e_i.
    pub fn unit(i: usize) -> Self {
        Self::power(i, 1)
    }

    /// k·e_i.
    pub fn power(i: usize, k: u32) -> Self {
        let mut entries = BTreeMap::new();
        if k > 0 {
            entries.insert(i, k);
        }
        MultiIndex { entries }
    }

    pub fn from_pairs(pairs: impl IntoIterator<Item = (usize, u32)>) -> Self {
        let mut m = MultiIndex::zero();
        for (i, k) in pairs {
            m.bump(i, k);
        }
        m
    }

    pub fn get(&self, i: usize) -> u32 {
        self.entries.get(&i).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    /// |α| = Σ α(i).
    pub fn weight(&self) -> u32 {
        self.entries.values().sum()
    }

    pub fn entries(&self) -> impl DoubleEndedIterator<Item = (usize, u32)> + '_ {
        self.entries.iter().map(|(&i, &k)| (i, k))
    }

    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.entries.keys().copied()
    }

    fn bump(&mut self, i: usize, k: u32) {
        if k == 0 {
            return;
        }
        *self.entries.entry(i).or_insert(0) += k;
    }

    pub fn add(&self, other: &MultiIndex) -> MultiIndex {
        let mut out = self.clone();
        for (i, k) in other.entries() {
            out.bump(i, k);
        }
        out
    }

    /// α! = Π α(i)!.
    pub fn factorial(&self) -> BigInt {
        let mut acc = BigInt::one();
        for (_, k) in self.entries() {
            acc *= factorial(u64::from(k));
        }
        acc
    }

    /// All ordered pairs (β, γ) with β + γ = α.
    pub fn decompositions(&self) -> Vec<(MultiIndex, MultiIndex)> {
        let mut out = vec![(MultiIndex::zero(), MultiIndex::zero())];
        for (i, k) in self.entries() {
            let mut next = Vec::with_capacity(out.len() * (k as usize + 1));
            for (left, right) in &out {
                for a in 0..=k {
                    let mut l = left.clone();
                    let mut r = right.clone();
                    l.bump(i, a);
                    r.bump(i, k - a);
                    next.push((l, r));
                }
            }
            out = next;
        }
        out
    }

    /// Materializes the monomial as a generator word with the largest index
    /// leftmost (the orientation every ordered product in this crate uses).
    pub fn generator_word(&self) -> Vec<usize> {
        let mut word = Vec::with_capacity(self.weight() as usize);
        for (&i, &k) in self.entries.iter().rev() {
            for _ in 0..k {
                word.push(i);
            }
        }
        word
    }

    /// All multiindices over indices `0..dim` of weight exactly `w`.
    pub fn all_of_weight(dim: usize, w: u32) -> Vec<MultiIndex> {
        fn rec(dim: usize, i: usize, left: u32, acc: &mut MultiIndex, out: &mut Vec<MultiIndex>) {
            if i == dim {
                if left == 0 {
                    out.push(acc.clone());
                }
                return;
            }
            if i + 1 == dim {
                let mut m = acc.clone();
                m.bump(i, left);
                out.push(m);
                return;
            }
            for k in 0..=left {
                let mut m = acc.clone();
                m.bump(i, k);
                rec(dim, i + 1, left - k, &mut m, out);
            }
        }
        let mut out = Vec::new();
        if dim == 0 {
            if w == 0 {
                out.push(MultiIndex::zero());
            }
            return out;
        }
        rec(dim, 0, w, &mut MultiIndex::zero(), &mut out);
        out
    }

    /// All multiindices over `0..dim` of weight ≤ `max`, graded by weight.
    pub fn all_up_to_weight(dim: usize, max: u32) -> Vec<MultiIndex> {
        (0..=max).flat_map(|w| Self::all_of_weight(dim, w)).collect()
    }

    /// Renders with the given names, largest index leftmost, e.g. `f e^2`.
    pub fn format_with(&self, names: &[String]) -> String {
        if self.is_zero() {
            return "1".into();
        }
        let mut parts = Vec::new();
        for (&i, &k) in self.entries.iter().rev() {
            if k == 1 {
                parts.push(names[i].clone());
            } else {
                parts.push(format!("{}^{}", names[i], k));
            }
        }
        parts.join(" ")
    }
}
