//! Lyndon words: recognition, generation, standard factorization, and the
//! nonincreasing Lyndon factorization of arbitrary words.
//!
//! Generation uses Duval's linear-delay successor algorithm; the test suite
//! keeps a brute-force conjugacy-class oracle alongside it.

use crate::word::{Alphabet, Word};

/// (l₁, l₂) with l₂ the longest proper Lyndon right factor of a Lyndon word.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct StandardFactorization {
    pub left: Word,
    pub right: Word,
}

/// Strictly decreasing (factor, multiplicity) pairs whose ordered
/// concatenation reproduces the input word.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct LyndonFactorization {
    pub factors: Vec<(Word, u32)>,
}

/// True iff `w` is nonempty and strictly smaller than every proper right
/// factor of itself.
pub fn is_lyndon(w: &Word) -> bool {
    let s = w.letters();
    if s.is_empty() {
        return false;
    }
    (1..s.len()).all(|i| s < &s[i..])
}

/// All Lyndon words of length ≤ `n`, in increasing lexicographic order.
pub fn lyndon_up_to(alphabet: &Alphabet, n: usize) -> Vec<Word> {
    let k = alphabet.len();
    let mut out = Vec::new();
    if n == 0 || k == 0 {
        return out;
    }
    // Duval's successor iteration
    let mut w = vec![0usize];
    loop {
        out.push(Word::new(w.clone()));
        let period = w.len();
        while w.len() < n {
            let c = w[w.len() - period];
            w.push(c);
        }
        while w.last() == Some(&(k - 1)) {
            w.pop();
        }
        match w.last_mut() {
            None => break,
            Some(last) => *last += 1,
        }
    }
    out
}

/// Standard factorization σ(l) of a Lyndon word of length ≥ 2.
///
/// Panics when `l` is not Lyndon or has fewer than two letters.
pub fn std_factorization(l: &Word) -> StandardFactorization {
    assert!(l.len() >= 2, "standard factorization needs length >= 2");
    assert!(is_lyndon(l), "standard factorization needs a Lyndon word");
    let s = l.letters();
    for i in 1..s.len() {
        let right = Word::new(s[i..].to_vec());
        if is_lyndon(&right) {
            return StandardFactorization { left: Word::new(s[..i].to_vec()), right };
        }
    }
    unreachable!("the last letter is always a Lyndon right factor")
}

/// The unique nonincreasing Lyndon factorization (Duval), grouped into
/// strictly decreasing (factor, multiplicity) pairs.
pub fn lyndon_factorization(w: &Word) -> LyndonFactorization {
    let s = w.letters();
    let n = s.len();
    let mut flat: Vec<Word> = Vec::new();
    let mut i = 0;
    while i < n {
        let mut j = i + 1;
        let mut k = i;
        while j < n && s[k] <= s[j] {
            if s[k] < s[j] {
                k = i;
            } else {
                k += 1;
            }
            j += 1;
        }
        let period = j - k;
        while i <= k {
            flat.push(Word::new(s[i..i + period].to_vec()));
            i += period;
        }
    }
    let mut factors: Vec<(Word, u32)> = Vec::new();
    for f in flat {
        match factors.last_mut() {
            Some((prev, mult)) if *prev == f => *mult += 1,
            _ => factors.push((f, 1)),
        }
    }
    LyndonFactorization { factors }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ab() -> Alphabet {
        Alphabet::new("ab").unwrap()
    }

    fn w(alph: &Alphabet, s: &str) -> Word {
        alph.word(s).unwrap()
    }

    /// Conjugacy-class oracle: nonempty, primitive, and minimal among its
    /// rotations.
    fn is_lyndon_oracle(word: &Word) -> bool {
        let s = word.letters();
        let n = s.len();
        if n == 0 {
            return false;
        }
        for d in 1..n {
            if n % d == 0 && (0..n).all(|i| s[i] == s[i % d]) {
                return false; // proper power
            }
        }
        (1..n).all(|r| {
            let rotation: Vec<usize> = (0..n).map(|i| s[(i + r) % n]).collect();
            s.to_vec() <= rotation
        }) && (1..n).all(|r| {
            let rotation: Vec<usize> = (0..n).map(|i| s[(i + r) % n]).collect();
            s.to_vec() != rotation
        })
    }

    #[test]
    fn recognition_examples() {
        let alph = ab();
        assert!(is_lyndon(&w(&alph, "ab")));
        assert!(is_lyndon_oracle(&w(&alph, "ab")));
        assert!(!is_lyndon(&w(&alph, "aa")));
        assert!(!is_lyndon(&w(&alph, "ba")));
        assert!(!is_lyndon_oracle(&w(&alph, "ba")));
        assert!(!is_lyndon(&Word::empty()));
    }

    #[test]
    fn recognition_matches_oracle_exhaustively() {
        for alph in [Alphabet::new("ab").unwrap(), Alphabet::new("abc").unwrap()] {
            for word in alph.words_up_to(7) {
                assert_eq!(is_lyndon(&word), is_lyndon_oracle(&word), "{:?}", word);
            }
        }
    }

    #[test]
    fn generation_examples() {
        let alph = ab();
        let lyn3 = lyndon_up_to(&alph, 3);
        let expect: Vec<Word> = ["a", "aab", "ab", "abb", "b"].iter().map(|s| w(&alph, s)).collect();
        assert_eq!(lyn3, expect);
        assert_eq!(lyndon_up_to(&alph, 4).len(), 8);
        assert!(lyndon_up_to(&alph, 0).is_empty());
    }

    #[test]
    fn generation_matches_filter_oracle() {
        for alph in [Alphabet::new("ab").unwrap(), Alphabet::new("abc").unwrap()] {
            for n in 0..=7 {
                let fast = lyndon_up_to(&alph, n);
                let brute: Vec<Word> = alph
                    .words_up_to(n)
                    .into_iter()
                    .filter(is_lyndon)
                    .collect();
                let mut sorted = brute.clone();
                sorted.sort();
                assert_eq!(fast, sorted, "alphabet {} n {}", alph.len(), n);
            }
        }
    }

    #[test]
    fn witt_counting_identity() {
        // Σ_{d|n} d·L_d = |X|^n
        for alph in [Alphabet::new("ab").unwrap(), Alphabet::new("abc").unwrap()] {
            let lyn = lyndon_up_to(&alph, 7);
            let count = |len: usize| lyn.iter().filter(|l| l.len() == len).count() as u64;
            for n in 1usize..=7 {
                let total: u64 = (1..=n)
                    .filter(|d| n % d == 0)
                    .map(|d| d as u64 * count(d))
                    .sum();
                assert_eq!(total, (alph.len() as u64).pow(n as u32), "n = {n}");
            }
        }
    }

    #[test]
    fn standard_factorization_examples() {
        let alph = ab();
        let sf = |s: &str| std_factorization(&w(&alph, s));
        assert_eq!(sf("ab"), StandardFactorization { left: w(&alph, "a"), right: w(&alph, "b") });
        assert_eq!(sf("aab"), StandardFactorization { left: w(&alph, "a"), right: w(&alph, "ab") });
        assert_eq!(sf("abb"), StandardFactorization { left: w(&alph, "ab"), right: w(&alph, "b") });
    }

    #[test]
    fn standard_factorization_postconditions() {
        // l₁ < l < l₂ and l₁ Lyndon, for every Lyndon word of length 2..=5
        for alph in [Alphabet::new("ab").unwrap(), Alphabet::new("abc").unwrap()] {
            for l in lyndon_up_to(&alph, 5) {
                if l.len() < 2 {
                    continue;
                }
                let sf = std_factorization(&l);
                assert_eq!(sf.left.concat(&sf.right), l);
                assert!(is_lyndon(&sf.left));
                assert!(is_lyndon(&sf.right));
                assert!(sf.left < l && l < sf.right, "{:?}", l);
            }
        }
    }

    #[test]
    #[should_panic(expected = "Lyndon")]
    fn standard_factorization_rejects_non_lyndon() {
        let alph = ab();
        let _ = std_factorization(&w(&alph, "ba"));
    }

    #[test]
    #[should_panic(expected = "length")]
    fn standard_factorization_rejects_single_letter() {
        let alph = ab();
        let _ = std_factorization(&w(&alph, "a"));
    }

    #[test]
    fn factorization_examples() {
        let alph = ab();
        assert_eq!(
            lyndon_factorization(&w(&alph, "ba")).factors,
            vec![(w(&alph, "b"), 1), (w(&alph, "a"), 1)]
        );
        assert_eq!(lyndon_factorization(&w(&alph, "abab")).factors, vec![(w(&alph, "ab"), 2)]);
        assert!(lyndon_factorization(&Word::empty()).factors.is_empty());
    }

    #[test]
    fn factorization_reconstructs_word() {
        let alph = ab();
        for word in alph.words_up_to(6) {
            let f = lyndon_factorization(&word);
            // strictly decreasing factors, all Lyndon
            for pair in f.factors.windows(2) {
                assert!(pair[0].0 > pair[1].0);
            }
            let mut rebuilt = Word::empty();
            for (factor, mult) in &f.factors {
                assert!(is_lyndon(factor));
                for _ in 0..*mult {
                    rebuilt = rebuilt.concat(factor);
                }
            }
            assert_eq!(rebuilt, word);
        }
    }
}
