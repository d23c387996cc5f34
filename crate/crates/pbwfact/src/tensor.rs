//! Degree-truncated tensors of word polynomials.
//!
//! A [`TensorPoly`] is a finitely supported map `(Word, Word) → ℚ` housing
//! elements of k⟨X⟩⊗k⟨X⟩. Products are componentwise with a configurable
//! law on the left leg and concatenation on the right; truncation always
//! drops terms whose right-leg length exceeds the bound. The homogeneous
//! families used by the factorization routines keep both legs of every term
//! in equal degree, which [`exp_truncated`] asserts.

use crate::poly::Poly;
use crate::rational::Coeff;
use crate::word::{Alphabet, Word};
use num::{One, Zero};
use std::collections::BTreeMap;
use std::fmt;

/// Product law for the left tensor leg.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum WordProduct {
    Shuffle,
    Concat,
}

#[derive(Clone, PartialEq, Eq)]
pub struct TensorPoly {
    alphabet: Alphabet,
    terms: BTreeMap<(Word, Word), Coeff>,
}

impl TensorPoly {
    pub fn zero(alphabet: &Alphabet) -> Self {
        TensorPoly { alphabet: alphabet.clone(), terms: BTreeMap::new() }
    }

    /// 1⊗1.
    pub fn unit(alphabet: &Alphabet) -> Self {
        let mut t = TensorPoly::zero(alphabet);
        t.add_term(Word::empty(), Word::empty(), Coeff::one());
        t
    }

    /// p⊗q for two polynomials over the same alphabet.
    pub fn from_pair(p: &Poly, q: &Poly) -> Self {
        assert!(p.alphabet() == q.alphabet(), "operands live over different alphabets");
        let mut t = TensorPoly::zero(p.alphabet());
        for (u, a) in p.terms() {
            for (v, b) in q.terms() {
                t.add_term(u.clone(), v.clone(), a * b);
            }
        }
        t
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn add_term(&mut self, left: Word, right: Word, c: Coeff) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry((left, right)) {
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

    pub fn add(&self, other: &TensorPoly) -> TensorPoly {
        let mut out = self.clone();
        for ((l, r), c) in other.terms_map() {
            out.add_term(l.clone(), r.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &TensorPoly) -> TensorPoly {
        self.add(&other.scale(&-Coeff::one()))
    }

    pub fn scale(&self, c: &Coeff) -> TensorPoly {
        if c.is_zero() {
            return TensorPoly::zero(&self.alphabet);
        }
        let terms = self.terms.iter().map(|(k, x)| (k.clone(), x * c)).collect();
        TensorPoly { alphabet: self.alphabet.clone(), terms }
    }

    pub fn coeff(&self, left: &Word, right: &Word) -> Coeff {
        self.terms
            .get(&(left.clone(), right.clone()))
            .cloned()
            .unwrap_or_else(Coeff::zero)
    }

    pub fn terms_map(&self) -> &BTreeMap<(Word, Word), Coeff> {
        &self.terms
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Drops every term whose right-leg length exceeds `max_degree`.
    pub fn truncate(&self, max_degree: usize) -> TensorPoly {
        let terms = self
            .terms
            .iter()
            .filter(|((_, r), _)| r.len() <= max_degree)
            .map(|(k, c)| (k.clone(), c.clone()))
            .collect();
        TensorPoly { alphabet: self.alphabet.clone(), terms }
    }

    /// Componentwise product with `left` on the left leg and concatenation
    /// on the right leg, truncated at `max_degree`.
    pub fn product(&self, other: &TensorPoly, left: WordProduct, max_degree: usize) -> TensorPoly {
        let alphabet = self.alphabet.clone();
        let left_mul = move |u: &Word, v: &Word| -> Poly {
            match left {
                WordProduct::Concat => Poly::word(&alphabet, u.concat(v)),
                WordProduct::Shuffle => {
                    Poly::word(&alphabet, u.clone()).shuffle(&Poly::word(&alphabet, v.clone()))
                }
            }
        };
        let alphabet = self.alphabet.clone();
        let right_mul = move |u: &Word, v: &Word| -> Poly { Poly::word(&alphabet, u.concat(v)) };
        self.product_with(other, left_mul, right_mul, max_degree)
    }

    /// Fully general componentwise product. Both leg laws must be
    /// length-additive so that the right-leg truncation below is sound.
    pub fn product_with<L, R>(
        &self,
        other: &TensorPoly,
        left_mul: L,
        right_mul: R,
        max_degree: usize,
    ) -> TensorPoly
    where
        L: Fn(&Word, &Word) -> Poly,
        R: Fn(&Word, &Word) -> Poly,
    {
        let mut out = TensorPoly::zero(&self.alphabet);
        for ((l1, r1), c1) in &self.terms {
            for ((l2, r2), c2) in &other.terms {
                if r1.len() + r2.len() > max_degree {
                    continue;
                }
                let coeff = c1 * c2;
                let lp = left_mul(l1, l2);
                let rp = right_mul(r1, r2);
                for (lw, lc) in lp.terms() {
                    for (rw, rc) in rp.terms() {
                        if rw.len() > max_degree {
                            continue;
                        }
                        out.add_term(lw.clone(), rw.clone(), &coeff * &(lc * rc));
                    }
                }
            }
        }
        out
    }
}

/// Σ_{k≤⌊n/d⌋} t^k / k! where `d` is the minimal term degree of `t` and the
/// powers come from `mul`; every term of `t` must have equal left/right
/// degree ≥ 1.
pub fn exp_truncated(
    t: &TensorPoly,
    n: usize,
    mul: impl Fn(&TensorPoly, &TensorPoly) -> TensorPoly,
) -> TensorPoly {
    let mut min_degree = None;
    for ((l, r), _) in t.terms_map() {
        assert!(
            l.len() == r.len() && !r.is_empty(),
            "exponential factor must be multihomogeneous of equal leg degree >= 1"
        );
        min_degree = Some(min_degree.map_or(r.len(), |d: usize| d.min(r.len())));
    }
    let mut acc = TensorPoly::unit(t.alphabet());
    let Some(d) = min_degree else {
        return acc; // exp(0) = 1⊗1
    };
    let mut power = TensorPoly::unit(t.alphabet());
    for k in 1..=(n / d) {
        power = mul(&power, t).scale(&Coeff::new(1.into(), k.into()));
        acc = acc.add(&power);
    }
    acc.truncate(n)
}

impl fmt::Display for TensorPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let fmt_word = |w: &Word| {
            let s = self.alphabet.format_word(w);
            if s.is_empty() {
                "1".to_string()
            } else {
                s
            }
        };
        let mut first = true;
        for ((l, r), c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if c.is_one() {
                write!(f, "{}⊗{}", fmt_word(l), fmt_word(r))?;
            } else {
                write!(f, "{} {}⊗{}", c, fmt_word(l), fmt_word(r))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for TensorPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TensorPoly({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::q_int;

    fn ab() -> Alphabet {
        Alphabet::new("ab").unwrap()
    }

    fn letter_tensor(alph: &Alphabet, s: &str) -> TensorPoly {
        let w = alph.word(s).unwrap();
        let p = Poly::word(alph, w);
        TensorPoly::from_pair(&p, &p)
    }

    #[test]
    fn product_shuffle_left_conc_right() {
        // (b⊗b)·(a⊗a) with shuffle on the left at N=2 → (ab+ba)⊗ba
        let alph = ab();
        let got = letter_tensor(&alph, "b").product(&letter_tensor(&alph, "a"), WordProduct::Shuffle, 2);
        let mut expect = TensorPoly::zero(&alph);
        expect.add_term(alph.word("ab").unwrap(), alph.word("ba").unwrap(), q_int(1));
        expect.add_term(alph.word("ba").unwrap(), alph.word("ba").unwrap(), q_int(1));
        assert_eq!(got, expect);
    }

    #[test]
    fn unit_is_neutral_up_to_truncation() {
        let alph = ab();
        let mut t = TensorPoly::zero(&alph);
        t.add_term(alph.word("ab").unwrap(), alph.word("ab").unwrap(), q_int(3));
        t.add_term(alph.word("a").unwrap(), alph.word("a").unwrap(), q_int(1));
        let n2 = TensorPoly::unit(&alph).product(&t, WordProduct::Shuffle, 2);
        assert_eq!(n2, t);
        let n1 = TensorPoly::unit(&alph).product(&t, WordProduct::Shuffle, 1);
        assert_eq!(n1, t.truncate(1));
    }

    #[test]
    fn truncation_kills_high_degree() {
        // (a⊗a)·(a⊗a) at N=1 → 0
        let alph = ab();
        let got = letter_tensor(&alph, "a").product(&letter_tensor(&alph, "a"), WordProduct::Shuffle, 1);
        assert!(got.is_zero());
    }

    #[test]
    fn exp_of_letter() {
        // exp(a⊗a) at N=2 → 1⊗1 + a⊗a + aa⊗aa
        let alph = ab();
        let t = letter_tensor(&alph, "a");
        let got = exp_truncated(&t, 2, |x, y| x.product(y, WordProduct::Shuffle, 2));
        let mut expect = TensorPoly::unit(&alph);
        expect.add_term(alph.word("a").unwrap(), alph.word("a").unwrap(), q_int(1));
        expect.add_term(alph.word("aa").unwrap(), alph.word("aa").unwrap(), q_int(1));
        assert_eq!(got, expect);
    }

    #[test]
    fn exp_at_degree_zero_is_unit() {
        let alph = ab();
        let t = letter_tensor(&alph, "b");
        let got = exp_truncated(&t, 0, |x, y| x.product(y, WordProduct::Shuffle, 0));
        assert_eq!(got, TensorPoly::unit(&alph));
    }

    #[test]
    #[should_panic(expected = "multihomogeneous")]
    fn exp_rejects_inhomogeneous_input() {
        let alph = ab();
        let mut t = TensorPoly::zero(&alph);
        t.add_term(alph.word("ab").unwrap(), alph.word("a").unwrap(), q_int(1));
        let _ = exp_truncated(&t, 3, |x, y| x.product(y, WordProduct::Shuffle, 3));
    }
}
