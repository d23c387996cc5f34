//! Sparse polynomials over words with exact rational coefficients.
//!
//! A [`Poly`] is a finitely supported map `Word → ℚ` over a fixed alphabet,
//! modelling elements of the free algebra k⟨X⟩. Zero coefficients are
//! removed eagerly, so structural equality is algebra equality. Words form
//! an orthonormal family for [`Poly::pairing`].
//!
//! The Hopf structure implemented here is the one with the concatenation
//! product: letters are primitive for [`Poly::coproduct`], the antipode is
//! signed reversal, and the coproduct is dual to [`Poly::shuffle`].

use crate::rational::Coeff;
use crate::tensor::TensorPoly;
use crate::word::{Alphabet, Word};
use num::{BigInt, One, Zero};
use std::collections::BTreeMap;
use std::fmt;

#[derive(Clone, PartialEq, Eq)]
pub struct Poly {
    alphabet: Alphabet,
    terms: BTreeMap<Word, Coeff>,
}

impl Poly {
    pub fn zero(alphabet: &Alphabet) -> Self {
        Poly { alphabet: alphabet.clone(), terms: BTreeMap::new() }
    }

    /// The empty word with coefficient 1: the unit of both products.
    pub fn one(alphabet: &Alphabet) -> Self {
        Poly::word(alphabet, Word::empty())
    }

    pub fn word(alphabet: &Alphabet, w: Word) -> Self {
        Poly::monomial(alphabet, w, Coeff::one())
    }

    pub fn letter(alphabet: &Alphabet, index: usize) -> Self {
        assert!(index < alphabet.len(), "letter index out of range");
        Poly::word(alphabet, Word::letter(index))
    }

    pub fn monomial(alphabet: &Alphabet, w: Word, c: Coeff) -> Self {
        let mut p = Poly::zero(alphabet);
        p.add_term(w, c);
        p
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &Coeff)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, w: &Word) -> Coeff {
        self.terms.get(w).cloned().unwrap_or_else(Coeff::zero)
    }

    /// ε: the coefficient of the empty word.
    pub fn counit(&self) -> Coeff {
        self.coeff(&Word::empty())
    }

    pub fn add_term(&mut self, w: Word, c: Coeff) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(w) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                let sum = e.get() + &c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    fn assert_same_alphabet(&self, other: &Poly) {
        assert!(
            self.alphabet == other.alphabet,
            "operands live over different alphabets"
        );
    }

    pub fn add(&self, other: &Poly) -> Poly {
        self.assert_same_alphabet(other);
        let mut out = self.clone();
        for (w, c) in other.terms() {
            out.add_term(w.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Poly {
        self.scale(&-Coeff::one())
    }

    pub fn scale(&self, c: &Coeff) -> Poly {
        if c.is_zero() {
            return Poly::zero(&self.alphabet);
        }
        let terms = self.terms.iter().map(|(w, x)| (w.clone(), x * c)).collect();
        Poly { alphabet: self.alphabet.clone(), terms }
    }

    /// Concatenation product: bilinear extension of word concatenation.
    pub fn conc_mul(&self, other: &Poly) -> Poly {
        self.assert_same_alphabet(other);
        let mut out = Poly::zero(&self.alphabet);
        for (u, a) in self.terms() {
            for (v, b) in other.terms() {
                out.add_term(u.concat(v), a * b);
            }
        }
        out
    }

    /// Shuffle product: bilinear extension of
    /// `xu ⧢ yv = x(u ⧢ yv) + y(xu ⧢ v)`, with the empty word as unit.
    pub fn shuffle(&self, other: &Poly) -> Poly {
        self.assert_same_alphabet(other);
        let mut out = Poly::zero(&self.alphabet);
        for (u, a) in self.terms() {
            for (v, b) in other.terms() {
                let c = a * b;
                for (w, count) in shuffle_words(u.letters(), v.letters()) {
                    out.add_term(w, &c * Coeff::from_integer(count));
                }
            }
        }
        out
    }

    /// Δ, the algebra-morphism extension of Δ(x) = x⊗1 + 1⊗x; equivalently
    /// the sum over complementary subword splittings.
    pub fn coproduct(&self) -> TensorPoly {
        let mut out = TensorPoly::zero(&self.alphabet);
        for (w, c) in self.terms() {
            let n = w.len();
            assert!(n < 32, "coproduct is enumerated over position subsets");
            for mask in 0u64..(1 << n) {
                let left = w.subword(mask);
                let right = w.subword(!mask);
                out.add_term(left, right, c.clone());
            }
        }
        out
    }

    /// S(x₁…xₙ) = (−1)ⁿ xₙ…x₁, extended linearly.
    pub fn antipode(&self) -> Poly {
        let mut out = Poly::zero(&self.alphabet);
        for (w, c) in self.terms() {
            let mut letters = w.letters().to_vec();
            letters.reverse();
            let sign = if w.len() % 2 == 0 { c.clone() } else { -c.clone() };
            out.add_term(Word::new(letters), sign);
        }
        out
    }

    /// ⟨p, q⟩ = Σ_w ⟨p|w⟩·⟨q|w⟩ over the joint support.
    pub fn pairing(&self, other: &Poly) -> Coeff {
        self.assert_same_alphabet(other);
        let (small, large) = if self.num_terms() <= other.num_terms() {
            (self, other)
        } else {
            (other, self)
        };
        let mut acc = Coeff::zero();
        for (w, c) in small.terms() {
            if let Some(d) = large.terms.get(w) {
                acc += c * d;
            }
        }
        acc
    }

    /// Pushes every support word through `f`, merging coefficients.
    pub fn map_words(&self, f: impl Fn(&Word) -> Word) -> Poly {
        let mut out = Poly::zero(&self.alphabet);
        for (w, c) in self.terms() {
            out.add_term(f(w), c.clone());
        }
        out
    }

    /// Serialized form: a JSON object mapping word strings to rational
    /// strings, the empty word as `""`.
    pub fn to_string_map(&self) -> BTreeMap<String, String> {
        self.terms
            .iter()
            .map(|(w, c)| (self.alphabet.format_word(w), c.to_string()))
            .collect()
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self.to_string_map()).expect("string map serializes")
    }
}

/// Multiset of interleavings of two index slices:
/// `xu ⧢ yv = x(u ⧢ yv) + y(xu ⧢ v)`.
pub(crate) fn shuffle_words(u: &[usize], v: &[usize]) -> BTreeMap<Word, BigInt> {
    if u.is_empty() {
        return BTreeMap::from([(Word::new(v.to_vec()), BigInt::one())]);
    }
    if v.is_empty() {
        return BTreeMap::from([(Word::new(u.to_vec()), BigInt::one())]);
    }
    let mut acc: BTreeMap<Word, BigInt> = BTreeMap::new();
    for (head, rest) in [(u[0], shuffle_words(&u[1..], v)), (v[0], shuffle_words(u, &v[1..]))] {
        for (w, k) in rest {
            let mut letters = Vec::with_capacity(w.len() + 1);
            letters.push(head);
            letters.extend_from_slice(w.letters());
            *acc.entry(Word::new(letters)).or_insert_with(BigInt::zero) += k;
        }
    }
    acc
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (w, c) in self.terms() {
            let neg = c < &Coeff::zero();
            let mag = if neg { -c.clone() } else { c.clone() };
            if first {
                if neg {
                    write!(f, "-")?;
                }
                first = false;
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let word = self.alphabet.format_word(w);
            if word.is_empty() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{word}")?;
            } else {
                write!(f, "{mag} {word}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({self})")
    }
}
