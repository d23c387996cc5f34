//! The PBW family P_w and its dual family S_w in the free algebra.
//!
//! P is built by bracketing over the standard factorization on Lyndon words
//! and by decreasing concatenation products elsewhere; S by prepending the
//! first letter on Lyndon words and by shuffle powers divided by the
//! multiplicity factorials elsewhere. The two families are triangular and
//! dual to each other, which [`PbwBasis::check_duality`] verifies
//! exhaustively up to a length bound.

use crate::lyndon::{is_lyndon, lyndon_factorization, std_factorization};
use crate::poly::Poly;
use crate::rational::{factorial, Coeff};
use crate::word::{Alphabet, Word};
use num::{BigInt, One, Zero};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

/// Memoized constructor for the P and S families over one alphabet.
///
/// The memo tables are the only mutable state; confine one instance to one
/// execution context (methods take `&mut self`). Returned polynomials are
/// immutable values.
pub struct PbwBasis {
    alphabet: Alphabet,
    p: BTreeMap<Word, Poly>,
    s: BTreeMap<Word, Poly>,
}

impl PbwBasis {
    pub fn new(alphabet: &Alphabet) -> Self {
        PbwBasis { alphabet: alphabet.clone(), p: BTreeMap::new(), s: BTreeMap::new() }
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    /// P_w: letters map to themselves, Lyndon words to [P_{l₁}, P_{l₂}],
    /// and general words to the decreasing product of Lyndon-factor P's.
    /// P of the empty word is 1.
    pub fn p(&mut self, w: &Word) -> Poly {
        if let Some(hit) = self.p.get(w) {
            return hit.clone();
        }
        let result = if w.is_empty() {
            Poly::one(&self.alphabet)
        } else if w.len() == 1 {
            Poly::word(&self.alphabet, w.clone())
        } else if is_lyndon(w) {
            let sf = std_factorization(w);
            let left = self.p(&sf.left);
            let right = self.p(&sf.right);
            left.conc_mul(&right).sub(&right.conc_mul(&left))
        } else {
            let mut acc = Poly::one(&self.alphabet);
            for (factor, mult) in lyndon_factorization(w).factors {
                let pf = self.p(&factor);
                for _ in 0..mult {
                    acc = acc.conc_mul(&pf);
                }
            }
            acc
        };
        self.p.insert(w.clone(), result.clone());
        result
    }

    /// S_w: letters map to themselves, a Lyndon word xu to x·S_u, and a
    /// general word with decreasing factorization l₁^{α₁}…l_k^{α_k} to
    /// (S_{l₁}^{⧢α₁} ⧢ … ⧢ S_{l_k}^{⧢α_k}) / (α₁!…α_k!).
    /// S of the empty word is 1.
    pub fn s(&mut self, w: &Word) -> Poly {
        if let Some(hit) = self.s.get(w) {
            return hit.clone();
        }
        let result = if w.is_empty() {
            Poly::one(&self.alphabet)
        } else if w.len() == 1 {
            Poly::word(&self.alphabet, w.clone())
        } else if is_lyndon(w) {
            let head = w.letters()[0];
            let tail = Word::new(w.letters()[1..].to_vec());
            let tail_s = self.s(&tail);
            tail_s.map_words(|u| Word::letter(head).concat(u))
        } else {
            let mut acc = Poly::one(&self.alphabet);
            let mut denom = BigInt::one();
            for (factor, mult) in lyndon_factorization(w).factors {
                let sf = self.s(&factor);
                for _ in 0..mult {
                    acc = acc.shuffle(&sf);
                }
                denom *= factorial(u64::from(mult));
            }
            acc.scale(&Coeff::new(BigInt::one(), denom))
        };
        self.s.insert(w.clone(), result.clone());
        result
    }

    /// True iff P_w = w + Σ_{u>w} c_u·u: coefficient 1 on w and every other
    /// support word lexicographically greater.
    pub fn check_triangular(&mut self, w: &Word) -> bool {
        let pw = self.p(w);
        if !pw.coeff(w).is_one() {
            return false;
        }
        let triangular = pw.terms().all(|(u, _)| u >= w);
        triangular
    }

    /// Exhaustive ⟨S_u, P_v⟩ = δ_{u,v} audit over all word pairs of length
    /// ≤ n, optionally fanning the pairings out over threads.
    pub fn check_duality(&mut self, n: usize, parallel: bool) -> DualityReport {
        let words = self.alphabet.words_up_to(n);
        let s: Vec<Poly> = words.iter().map(|w| self.s(w)).collect();
        let p: Vec<Poly> = words.iter().map(|w| self.p(w)).collect();

        let check_range = |range: std::ops::Range<usize>| -> Vec<DualityViolation> {
            let mut violations = Vec::new();
            for i in range {
                for (j, pv) in p.iter().enumerate() {
                    let got = s[i].pairing(pv);
                    let expect = if i == j { Coeff::one() } else { Coeff::zero() };
                    if got != expect {
                        violations.push(DualityViolation {
                            u: self.alphabet.format_word(&words[i]),
                            v: self.alphabet.format_word(&words[j]),
                            expected: expect.to_string(),
                            actual: got.to_string(),
                        });
                    }
                }
            }
            violations
        };

        let violations = if parallel {
            let workers = std::thread::available_parallelism().map_or(2, |n| n.get()).min(8);
            let chunk = words.len().div_ceil(workers).max(1);
            let ranges: Vec<_> = (0..words.len())
                .step_by(chunk)
                .map(|lo| lo..(lo + chunk).min(words.len()))
                .collect();
            std::thread::scope(|scope| {
                let handles: Vec<_> = ranges
                    .into_iter()
                    .map(|r| scope.spawn({ let check = &check_range; move || check(r) }))
                    .collect();
                // joining in spawn order keeps the report deterministic
                handles.into_iter().flat_map(|h| h.join().expect("worker")).collect()
            })
        } else {
            check_range(0..words.len())
        };

        DualityReport { pairs_checked: (words.len() * words.len()) as u64, violations }
    }
}

/// Outcome of the δ-duality audit; `violations` is empty on success.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct DualityReport {
    pub pairs_checked: u64,
    pub violations: Vec<DualityViolation>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct DualityViolation {
    pub u: String,
    pub v: String,
    pub expected: String,
    pub actual: String,
}

impl DualityReport {
    pub fn is_pass(&self) -> bool {
        self.violations.is_empty()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::q_int;
    use crate::tensor::TensorPoly;

    fn ab() -> Alphabet {
        Alphabet::new("ab").unwrap()
    }

    fn poly(alph: &Alphabet, terms: &[(&str, i64)]) -> Poly {
        let mut out = Poly::zero(alph);
        for (w, c) in terms {
            out.add_term(alph.word(w).unwrap(), q_int(*c));
        }
        out
    }

    /// Re-expansion oracle: the same recursion without any memo table.
    fn p_oracle(alph: &Alphabet, w: &Word) -> Poly {
        if w.is_empty() {
            return Poly::one(alph);
        }
        if w.len() == 1 {
            return Poly::word(alph, w.clone());
        }
        if is_lyndon(w) {
            let sf = std_factorization(w);
            let l = p_oracle(alph, &sf.left);
            let r = p_oracle(alph, &sf.right);
            return l.conc_mul(&r).sub(&r.conc_mul(&l));
        }
        let mut acc = Poly::one(alph);
        for (factor, mult) in lyndon_factorization(w).factors {
            for _ in 0..mult {
                acc = acc.conc_mul(&p_oracle(alph, &factor));
            }
        }
        acc
    }

    #[test]
    fn p_examples() {
        let alph = ab();
        let mut basis = PbwBasis::new(&alph);
        assert_eq!(basis.p(&alph.word("a").unwrap()), poly(&alph, &[("a", 1)]));
        assert_eq!(basis.p(&alph.word("ab").unwrap()), poly(&alph, &[("ab", 1), ("ba", -1)]));
        assert_eq!(basis.p(&alph.word("ba").unwrap()), poly(&alph, &[("ba", 1)]));
    }

    #[test]
    fn s_examples() {
        let alph = ab();
        let mut basis = PbwBasis::new(&alph);
        assert_eq!(basis.s(&alph.word("a").unwrap()), poly(&alph, &[("a", 1)]));
        assert_eq!(basis.s(&alph.word("ab").unwrap()), poly(&alph, &[("ab", 1)]));
        assert_eq!(basis.s(&alph.word("ba").unwrap()), poly(&alph, &[("ab", 1), ("ba", 1)]));
        // S of the empty word is 1
        assert_eq!(basis.s(&Word::empty()), Poly::one(&alph));
    }

    #[test]
    fn memoized_equals_reexpansion() {
        let alph = ab();
        let mut basis = PbwBasis::new(&alph);
        for w in alph.words_up_to(5) {
            assert_eq!(basis.p(&w), p_oracle(&alph, &w), "at {}", alph.format_word(&w));
        }
    }

    #[test]
    fn triangularity_examples_and_scan() {
        let alph = ab();
        let mut basis = PbwBasis::new(&alph);
        assert!(basis.check_triangular(&alph.word("ab").unwrap()));
        assert!(basis.check_triangular(&alph.word("a").unwrap()));
        for w in alph.words_up_to(5) {
            assert!(basis.check_triangular(&w), "triangularity at {}", alph.format_word(&w));
        }
    }

    #[test]
    fn leading_term_of_lyndon_p() {
        // smallest support word of P_l is l itself with coefficient 1
        let alph = ab();
        let mut basis = PbwBasis::new(&alph);
        for l in crate::lyndon::lyndon_up_to(&alph, 5) {
            let pl = basis.p(&l);
            let smallest = pl.terms().next().expect("nonempty").0.clone();
            assert_eq!(smallest, l);
            assert!(pl.coeff(&l).is_one());
        }
    }

    #[test]
    fn duality_examples() {
        let alph = ab();
        let mut basis = PbwBasis::new(&alph);
        let s_ab = basis.s(&alph.word("ab").unwrap());
        let s_ba = basis.s(&alph.word("ba").unwrap());
        let p_ab = basis.p(&alph.word("ab").unwrap());
        assert_eq!(s_ab.pairing(&p_ab), q_int(1));
        assert_eq!(s_ba.pairing(&p_ab), q_int(0));
    }

    #[test]
    fn duality_exhaustive_len4() {
        let mut basis = PbwBasis::new(&ab());
        let report = basis.check_duality(4, false);
        assert!(report.is_pass(), "{:?}", report.violations);
        assert_eq!(report.pairs_checked, 31 * 31);
    }

    #[test]
    fn duality_parallel_agrees() {
        let mut seq = PbwBasis::new(&ab());
        let mut par = PbwBasis::new(&ab());
        assert_eq!(seq.check_duality(3, false), par.check_duality(3, true));
    }

    #[test]
    fn lyndon_p_is_primitive() {
        // Δ(P_l) = P_l⊗1 + 1⊗P_l for Lyndon l of length ≤ 5
        let alph = ab();
        let mut basis = PbwBasis::new(&alph);
        for l in crate::lyndon::lyndon_up_to(&alph, 5) {
            let pl = basis.p(&l);
            let got = pl.coproduct();
            let expect = TensorPoly::from_pair(&pl, &Poly::one(&alph))
                .add(&TensorPoly::from_pair(&Poly::one(&alph), &pl));
            assert_eq!(got, expect, "P primitive at {}", alph.format_word(&l));
        }
    }

    #[test]
    fn multidegree_shortcut_agrees() {
        // ⟨S_u, P_v⟩ = 0 whenever the multidegrees differ; the shortcut must
        // agree with the full pairing
        let alph = ab();
        let mut basis = PbwBasis::new(&alph);
        let words = alph.words_up_to(4);
        for u in &words {
            for v in &words {
                if u.multidegree(alph.len()) != v.multidegree(alph.len()) {
                    let full = basis.s(u).pairing(&basis.p(v));
                    assert!(full.is_zero(), "{} vs {}", alph.format_word(u), alph.format_word(v));
                }
            }
        }
    }
}
