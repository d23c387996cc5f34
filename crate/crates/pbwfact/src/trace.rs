//! Free partially commutative (trace) monoids M(X,θ).
//!
//! A trace is represented by its lexicographically minimal word, computed
//! greedily; equality of traces is equality of canonical words, and the
//! order on traces is the word order on canonical forms. Conjugacy,
//! primitivity and divisibility are decided by brute-force closure, so every
//! entry point that walks equivalence classes enforces a configurable size
//! cap (length 6, alphabet of 4 by default).
//!
//! Partially commutative Lyndon traces are the nonempty primitive traces
//! that are minimal in their conjugacy class and — restoring consistency
//! with the fully commutative specialization, where the letters must be the
//! whole Lyndon set — have a connected dependence graph on their support.
//! The connectedness filter can be disabled for experimentation.
//!
//! The left-leg product dual to the coproduct is *not* the image of the
//! free shuffle under the quotient: distinct interleavings that merge in
//! M(X,θ) must be counted once per splitting of the canonical word, not
//! once per interleaving. [`TraceMonoid::shuffle_traces`] counts position
//! subsets of the canonical word, which specializes to the free shuffle at
//! θ = ∅ and to the plain commutative product at full θ.

use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::rational::{factorial, Coeff};
use crate::tensor::{exp_truncated, TensorPoly};
use crate::word::{Alphabet, Word};
use num::{BigInt, One, Zero};
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, BTreeSet, VecDeque};

/// Symmetric antireflexive independence relation on alphabet indices.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct Independence {
    pairs: BTreeSet<(usize, usize)>,
}

impl Independence {
    pub fn empty() -> Self {
        Independence::default()
    }

    /// Normalizes pairs to (min, max); rejects reflexive pairs.
    pub fn new(pairs: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut set = BTreeSet::new();
        for (a, b) in pairs {
            if a == b {
                return Err(Error::ReflexivePair(a.to_string()));
            }
            set.insert((a.min(b), a.max(b)));
        }
        Ok(Independence { pairs: set })
    }

    /// θ = X×X − diag(X): every pair of distinct letters commutes.
    pub fn full(alphabet_len: usize) -> Self {
        let mut pairs = BTreeSet::new();
        for a in 0..alphabet_len {
            for b in a + 1..alphabet_len {
                pairs.insert((a, b));
            }
        }
        Independence { pairs }
    }

    /// Parses letter pairs such as [('a','c')] against an alphabet.
    pub fn from_letter_pairs(alphabet: &Alphabet, pairs: &[(char, char)]) -> Result<Self> {
        let mut indexed = Vec::new();
        for &(x, y) in pairs {
            let i = alphabet.index_of(x).ok_or(Error::UnknownLetter(x))?;
            let j = alphabet.index_of(y).ok_or(Error::UnknownLetter(y))?;
            if i == j {
                return Err(Error::ReflexivePair(x.to_string()));
            }
            indexed.push((i, j));
        }
        Independence::new(indexed)
    }

    pub fn independent(&self, a: usize, b: usize) -> bool {
        a != b && self.pairs.contains(&(a.min(b), a.max(b)))
    }

    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.pairs.iter().copied()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }
}

/// An element of M(X,θ): the lexicographically minimal representative.
/// Built only by [`TraceMonoid::normal_form`] and friends so the canonical
/// invariant always holds.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug, Hash)]
pub struct Trace {
    word: Word,
}

impl Trace {
    pub fn word(&self) -> &Word {
        &self.word
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }
}

const DEFAULT_MAX_LEN: usize = 6;
const DEFAULT_MAX_ALPHABET: usize = 4;

/// Context object carrying the alphabet, the independence relation, the
/// brute-force size caps, and the pc-Lyndon connectedness switch.
pub struct TraceMonoid {
    alphabet: Alphabet,
    theta: Independence,
    max_len: usize,
    connectedness: bool,
}

impl TraceMonoid {
    pub fn new(alphabet: &Alphabet, theta: Independence) -> Result<Self> {
        Self::with_caps(alphabet, theta, DEFAULT_MAX_LEN, DEFAULT_MAX_ALPHABET)
    }

    pub fn with_caps(
        alphabet: &Alphabet,
        theta: Independence,
        max_len: usize,
        max_alphabet: usize,
    ) -> Result<Self> {
        if alphabet.len() > max_alphabet {
            return Err(Error::AlphabetCap(alphabet.len(), max_alphabet));
        }
        for (a, b) in theta.pairs() {
            if a >= alphabet.len() || b >= alphabet.len() {
                return Err(Error::InvalidPair(a, b));
            }
        }
        Ok(TraceMonoid { alphabet: alphabet.clone(), theta, max_len, connectedness: true })
    }

    /// Disables (or re-enables) the connectedness requirement on pc-Lyndon
    /// traces.
    pub fn with_connectedness(mut self, on: bool) -> Self {
        self.connectedness = on;
        self
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn theta(&self) -> &Independence {
        &self.theta
    }

    pub fn max_len(&self) -> usize {
        self.max_len
    }

    fn assert_cap(&self, len: usize) {
        assert!(
            len <= self.max_len,
            "trace of length {len} exceeds the configured cap {}",
            self.max_len
        );
    }

    /// Lexicographically least representative, computed greedily: always
    /// emit the smallest letter whose first occurrence is preceded only by
    /// letters independent of it.
    pub fn normal_form(&self, w: &Word) -> Trace {
        let mut remaining: Vec<usize> = w.letters().to_vec();
        let mut out = Vec::with_capacity(remaining.len());
        while !remaining.is_empty() {
            let mut best: Option<(usize, usize)> = None;
            'candidate: for (pos, &x) in remaining.iter().enumerate() {
                for &y in &remaining[..pos] {
                    if !self.theta.independent(x, y) {
                        continue 'candidate;
                    }
                }
                if best.is_none_or(|(bx, _)| x < bx) {
                    best = Some((x, pos));
                }
            }
            let (x, pos) = best.expect("position 0 is always movable");
            remaining.remove(pos);
            out.push(x);
        }
        Trace { word: Word::new(out) }
    }

    pub fn trace_equal(&self, u: &Word, v: &Word) -> bool {
        self.normal_form(u) == self.normal_form(v)
    }

    pub fn concat(&self, a: &Trace, b: &Trace) -> Trace {
        self.normal_form(&a.word.concat(&b.word))
    }

    /// The full θ-equivalence class of a word, by breadth-first swap closure.
    pub fn class(&self, w: &Word) -> BTreeSet<Word> {
        self.assert_cap(w.len());
        let mut seen = BTreeSet::from([w.clone()]);
        let mut queue = VecDeque::from([w.clone()]);
        while let Some(current) = queue.pop_front() {
            let letters = current.letters();
            for i in 0..letters.len().saturating_sub(1) {
                if self.theta.independent(letters[i], letters[i + 1]) {
                    let mut swapped = letters.to_vec();
                    swapped.swap(i, i + 1);
                    let next = Word::new(swapped);
                    if seen.insert(next.clone()) {
                        queue.push_back(next);
                    }
                }
            }
        }
        seen
    }

    /// All traces of length ≤ n, ordered by canonical form (graded).
    pub fn traces_up_to(&self, n: usize) -> Vec<Trace> {
        self.assert_cap(n);
        let mut out = Vec::new();
        for len in 0..=n {
            let mut seen = BTreeSet::new();
            for w in self.alphabet.words_of_len(len) {
                seen.insert(self.normal_form(&w));
            }
            out.extend(seen);
        }
        out
    }

    /// All letters that can start a representative of `t`.
    pub fn initial_letters(&self, t: &Trace) -> BTreeSet<usize> {
        self.class(&t.word).iter().filter_map(|w| w.letters().first().copied()).collect()
    }

    /// Conjugacy class: closure of the transposition u·v ~ v·u.
    pub fn conjugates(&self, t: &Trace) -> BTreeSet<Trace> {
        self.assert_cap(t.len());
        let mut seen = BTreeSet::from([t.clone()]);
        let mut queue = VecDeque::from([t.clone()]);
        while let Some(current) = queue.pop_front() {
            for representative in self.class(&current.word) {
                let letters = representative.letters();
                for split in 1..letters.len() {
                    let mut rotated = letters[split..].to_vec();
                    rotated.extend_from_slice(&letters[..split]);
                    let next = self.normal_form(&Word::new(rotated));
                    if seen.insert(next.clone()) {
                        queue.push_back(next);
                    }
                }
            }
        }
        seen
    }

    /// True iff `t` is not a proper power in M(X,θ).
    pub fn is_primitive(&self, t: &Trace) -> bool {
        let n = t.len();
        if n == 0 {
            return false;
        }
        for d in 1..n {
            if n % d != 0 {
                continue;
            }
            let k = n / d;
            for root in self.alphabet.words_of_len(d) {
                let mut power = Word::empty();
                for _ in 0..k {
                    power = power.concat(&root);
                }
                if self.normal_form(&power) == *t {
                    return false;
                }
            }
        }
        true
    }

    /// True iff the dependence graph restricted to the support is connected.
    pub fn is_connected(&self, t: &Trace) -> bool {
        let support: BTreeSet<usize> = t.word.letters().iter().copied().collect();
        let Some(&start) = support.first() else {
            return false; // empty trace
        };
        let mut seen = BTreeSet::from([start]);
        let mut queue = VecDeque::from([start]);
        while let Some(x) = queue.pop_front() {
            for &y in &support {
                if !seen.contains(&y) && !self.theta.independent(x, y) {
                    seen.insert(y);
                    queue.push_back(y);
                }
            }
        }
        seen.len() == support.len()
    }

    /// Partially commutative Lyndon test: nonempty, primitive, minimal in
    /// its conjugacy class, and (with the default filter) connected.
    pub fn is_pc_lyndon(&self, t: &Trace) -> bool {
        if t.is_empty() {
            return false;
        }
        if self.connectedness && !self.is_connected(t) {
            return false;
        }
        if !self.is_primitive(t) {
            return false;
        }
        self.conjugates(t).first() == Some(t)
    }

    /// All pc-Lyndon traces of length ≤ n in increasing canonical order.
    pub fn pc_lyndon_up_to(&self, n: usize) -> Vec<Trace> {
        let mut out: Vec<Trace> = self
            .traces_up_to(n)
            .into_iter()
            .filter(|t| self.is_pc_lyndon(t))
            .collect();
        out.sort();
        out
    }

    /// Left divisibility: all quotients u with `t = d·u` in M(X,θ). The
    /// quotient is unique when it exists (trace monoids cancel), so the set
    /// has at most one element.
    fn left_quotient(&self, t: &Trace, d: &Trace) -> Option<Trace> {
        if d.len() > t.len() {
            return None;
        }
        for representative in self.class(&t.word) {
            let (head, tail) = representative.letters().split_at(d.len());
            if self.normal_form(&Word::new(head.to_vec())) == *d {
                return Some(self.normal_form(&Word::new(tail.to_vec())));
            }
        }
        None
    }

    /// Standard factorization σ(t) = (f, n): f ≠ 1, n pc-Lyndon, t = f·n,
    /// with n minimal among pc-Lyndon right factors. Panics on |t| < 2.
    pub fn std_factorization(&self, t: &Trace) -> (Trace, Trace) {
        assert!(t.len() >= 2, "standard factorization needs length >= 2");
        let mut candidates: BTreeMap<Trace, BTreeSet<Trace>> = BTreeMap::new();
        for representative in self.class(&t.word) {
            let letters = representative.letters();
            for split in 1..letters.len() {
                let right = self.normal_form(&Word::new(letters[split..].to_vec()));
                if self.is_pc_lyndon(&right) {
                    let left = self.normal_form(&Word::new(letters[..split].to_vec()));
                    candidates.entry(right).or_default().insert(left);
                }
            }
        }
        let (right, lefts) = candidates.pop_first().expect("the last letter is pc-Lyndon");
        assert_eq!(lefts.len(), 1, "standard factorization must be unique");
        (lefts.into_iter().next().unwrap(), right)
    }

    /// The unique nonincreasing factorization into pc-Lyndon traces,
    /// grouped into strictly decreasing (factor, multiplicity) pairs.
    /// Uniqueness is asserted by exhaustive search.
    pub fn lyndon_factorization(&self, t: &Trace) -> Vec<(Trace, u32)> {
        let lyndon = self.pc_lyndon_up_to(t.len().max(1).min(self.max_len));
        let mut solutions = Vec::new();
        let mut prefix = Vec::new();
        self.factorizations_rec(t, None, &lyndon, &mut prefix, &mut solutions);
        assert_eq!(
            solutions.len(),
            1,
            "nonincreasing pc-Lyndon factorization must be unique, found {} for {:?}",
            solutions.len(),
            self.alphabet.format_word(&t.word)
        );
        let flat = solutions.pop().unwrap();
        let mut grouped: Vec<(Trace, u32)> = Vec::new();
        for f in flat {
            match grouped.last_mut() {
                Some((prev, mult)) if *prev == f => *mult += 1,
                _ => grouped.push((f, 1)),
            }
        }
        grouped
    }

    fn factorizations_rec(
        &self,
        rest: &Trace,
        bound: Option<&Trace>,
        lyndon: &[Trace],
        prefix: &mut Vec<Trace>,
        out: &mut Vec<Vec<Trace>>,
    ) {
        if rest.is_empty() {
            out.push(prefix.clone());
            return;
        }
        for l in lyndon {
            if l.len() > rest.len() {
                continue;
            }
            if let Some(b) = bound {
                if l > b {
                    continue;
                }
            }
            if let Some(quotient) = self.left_quotient(rest, l) {
                prefix.push(l.clone());
                self.factorizations_rec(&quotient, Some(l), lyndon, prefix, out);
                prefix.pop();
            }
        }
    }

    /// All nonincreasing pc-Lyndon factorizations (flat); exposed for the
    /// uniqueness audit.
    pub fn all_nonincreasing_factorizations(&self, t: &Trace) -> Vec<Vec<Trace>> {
        let lyndon = self.pc_lyndon_up_to(t.len().max(1).min(self.max_len));
        let mut solutions = Vec::new();
        let mut prefix = Vec::new();
        self.factorizations_rec(t, None, &lyndon, &mut prefix, &mut solutions);
        solutions
    }

    /// Coproduct-adjoint shuffle on traces: the coefficient of trace w is
    /// the number of position subsets S of w's canonical word with
    /// [w_S] = u and [w_{S^c}] = v. Keys of the result are canonical.
    pub fn shuffle_traces(&self, u: &Trace, v: &Trace) -> Poly {
        let total = u.len() + v.len();
        self.assert_cap(total);
        let mut out = Poly::zero(&self.alphabet);
        let mut degree = u.word.multidegree(self.alphabet.len());
        for (entry, add) in degree.iter_mut().zip(v.word.multidegree(self.alphabet.len())) {
            *entry += add;
        }
        for w in self.traces_of_multidegree(&degree) {
            let canonical = w.word();
            let mut count = BigInt::zero();
            for mask in 0u64..(1 << total) {
                if mask.count_ones() as usize != u.len() {
                    continue;
                }
                if self.normal_form(&canonical.subword(mask)) == *u
                    && self.normal_form(&canonical.subword(!mask)) == *v
                {
                    count += 1;
                }
            }
            out.add_term(w.word().clone(), Coeff::from_integer(count));
        }
        out
    }

    fn traces_of_multidegree(&self, degree: &[u32]) -> Vec<Trace> {
        let len: u32 = degree.iter().sum();
        let mut seen = BTreeSet::new();
        let mut current = Vec::with_capacity(len as usize);
        self.multidegree_rec(&mut degree.to_vec(), &mut current, &mut seen);
        seen.into_iter().collect()
    }

    fn multidegree_rec(
        &self,
        remaining: &mut Vec<u32>,
        current: &mut Vec<usize>,
        out: &mut BTreeSet<Trace>,
    ) {
        if remaining.iter().all(|&r| r == 0) {
            out.insert(self.normal_form(&Word::new(current.clone())));
            return;
        }
        for i in 0..remaining.len() {
            if remaining[i] > 0 {
                remaining[i] -= 1;
                current.push(i);
                self.multidegree_rec(remaining, current, out);
                current.pop();
                remaining[i] += 1;
            }
        }
    }

    /// Shuffle of trace polynomials (all keys canonical).
    pub fn shuffle_polys(&self, p: &Poly, q: &Poly) -> Poly {
        let mut out = Poly::zero(&self.alphabet);
        for (u, a) in p.terms() {
            for (v, b) in q.terms() {
                let uw = Trace { word: u.clone() };
                let vw = Trace { word: v.clone() };
                for (w, c) in self.shuffle_traces(&uw, &vw).terms() {
                    out.add_term(w.clone(), &(a * b) * c);
                }
            }
        }
        out
    }

    /// Concatenation of trace polynomials with canonical renormalization.
    pub fn conc_polys(&self, p: &Poly, q: &Poly) -> Poly {
        p.conc_mul(q).map_words(|w| self.normal_form(w).word.clone())
    }

    /// Σ over traces of length ≤ n of t⊗t.
    pub fn diagonal_series(&self, n: usize) -> TensorPoly {
        let mut out = TensorPoly::zero(&self.alphabet);
        for t in self.traces_up_to(n) {
            out.add_term(t.word().clone(), t.word().clone(), Coeff::one());
        }
        out
    }

    fn tensor_product(&self, a: &TensorPoly, b: &TensorPoly, n: usize) -> TensorPoly {
        a.product_with(
            b,
            |u, v| self.shuffle_traces(&Trace { word: u.clone() }, &Trace { word: v.clone() }),
            |u, v| Poly::word(&self.alphabet, self.normal_form(&u.concat(v)).word),
            n,
        )
    }

    /// Ordered product of truncated exponentials over an explicit pc-Lyndon
    /// factor sequence.
    pub fn factorization_product_for_factors(
        &self,
        basis: &mut TraceBasis,
        n: usize,
        factors: &[Trace],
    ) -> TensorPoly {
        let mut acc = TensorPoly::unit(&self.alphabet);
        for l in factors {
            let sl = basis.s(self, l);
            let pl = basis.p(self, l);
            let factor = exp_truncated(&TensorPoly::from_pair(&sl, &pl), n, |x, y| {
                self.tensor_product(x, y, n)
            });
            acc = self.tensor_product(&acc, &factor, n);
        }
        acc
    }

    /// ∏^{↘} exp(S_l⊗P_l) over pc-Lyndon traces of length ≤ n.
    pub fn factorization_product(&self, n: usize) -> TensorPoly {
        let mut factors = self.pc_lyndon_up_to(n);
        factors.reverse();
        let mut basis = TraceBasis::new();
        self.factorization_product_for_factors(&mut basis, n, &factors)
    }

    /// Exact comparison of the decreasing exponential product against the
    /// diagonal trace series at truncation length n.
    ///
    /// Without the connectedness filter the pc-Lyndon structure can
    /// degenerate (non-unique initial letters, ambiguous nonincreasing
    /// factorizations); those defects are detected up front and reported
    /// instead of attempting a product that is no longer well defined.
    pub fn verify_sf_trace(&self, n: usize) -> TraceSfReport {
        let mut factors = self.pc_lyndon_up_to(n);
        factors.reverse();
        let theta: Vec<String> = self
            .theta
            .pairs()
            .map(|(a, b)| format!("{},{}", self.alphabet.letter(a), self.alphabet.letter(b)))
            .collect();

        let mut degeneracies = Vec::new();
        if !self.connectedness {
            for l in &factors {
                let initials = self.initial_letters(l);
                if initials.len() != 1 {
                    degeneracies.push(format!(
                        "pc-Lyndon trace {} has {} initial letters",
                        self.alphabet.format_word(l.word()),
                        initials.len()
                    ));
                }
            }
            for t in self.traces_up_to(n) {
                let count = self.all_nonincreasing_factorizations(&t).len();
                if count != 1 {
                    degeneracies.push(format!(
                        "trace {} has {} nonincreasing factorizations",
                        self.alphabet.format_word(t.word()),
                        count
                    ));
                }
            }
        }
        if !degeneracies.is_empty() {
            return TraceSfReport {
                degree: n,
                theta,
                pc_lyndon_count: factors.len(),
                terms_lhs: 0,
                terms_rhs: 0,
                mismatches: Vec::new(),
                degeneracies,
            };
        }

        let mut basis = TraceBasis::new();
        let lhs = self.factorization_product_for_factors(&mut basis, n, &factors);
        let rhs = self.diagonal_series(n);
        let mismatches = crate::factorization::diff_tensors(&self.alphabet, &lhs, &rhs);
        TraceSfReport {
            degree: n,
            theta,
            pc_lyndon_count: factors.len(),
            terms_lhs: lhs.num_terms(),
            terms_rhs: rhs.num_terms(),
            mismatches,
            degeneracies,
        }
    }
}

/// Memoized P/S constructor over one trace monoid; same recursion shape as
/// the free case with trace concatenation and the adjoint shuffle.
#[derive(Default)]
pub struct TraceBasis {
    p: BTreeMap<Word, Poly>,
    s: BTreeMap<Word, Poly>,
}

impl TraceBasis {
    pub fn new() -> Self {
        TraceBasis::default()
    }

    pub fn p(&mut self, monoid: &TraceMonoid, t: &Trace) -> Poly {
        if let Some(hit) = self.p.get(t.word()) {
            return hit.clone();
        }
        let alphabet = monoid.alphabet();
        let result = if t.is_empty() {
            Poly::one(alphabet)
        } else if t.len() == 1 {
            Poly::word(alphabet, t.word().clone())
        } else if monoid.is_pc_lyndon(t) {
            let (f, n) = monoid.std_factorization(t);
            let left = self.p(monoid, &f);
            let right = self.p(monoid, &n);
            monoid.conc_polys(&left, &right).sub(&monoid.conc_polys(&right, &left))
        } else {
            let mut acc = Poly::one(alphabet);
            for (factor, mult) in monoid.lyndon_factorization(t) {
                let pf = self.p(monoid, &factor);
                for _ in 0..mult {
                    acc = monoid.conc_polys(&acc, &pf);
                }
            }
            acc
        };
        self.p.insert(t.word().clone(), result.clone());
        result
    }

    pub fn s(&mut self, monoid: &TraceMonoid, t: &Trace) -> Poly {
        if let Some(hit) = self.s.get(t.word()) {
            return hit.clone();
        }
        let alphabet = monoid.alphabet();
        let result = if t.is_empty() {
            Poly::one(alphabet)
        } else if t.len() == 1 {
            Poly::word(alphabet, t.word().clone())
        } else if monoid.is_pc_lyndon(t) {
            // pc-Lyndon traces have a unique initial letter
            let initials = monoid.initial_letters(t);
            assert_eq!(initials.len(), 1, "pc-Lyndon trace with non-unique initial letter");
            let head = *initials.first().unwrap();
            let tail = monoid.normal_form(&Word::new(t.word().letters()[1..].to_vec()));
            let tail_s = self.s(monoid, &tail);
            tail_s.map_words(|u| {
                monoid.normal_form(&Word::letter(head).concat(u)).word().clone()
            })
        } else {
            let mut acc = Poly::one(alphabet);
            let mut denom = BigInt::one();
            for (factor, mult) in monoid.lyndon_factorization(t) {
                let sf = self.s(monoid, &factor);
                for _ in 0..mult {
                    acc = monoid.shuffle_polys(&acc, &sf);
                }
                denom *= factorial(u64::from(mult));
            }
            acc.scale(&Coeff::new(BigInt::one(), denom))
        };
        self.s.insert(t.word().clone(), result.clone());
        result
    }
}

/// Like the free report, with the independence relation and the pc-Lyndon
/// factor count in place of the free Lyndon count.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct TraceSfReport {
    pub degree: usize,
    pub theta: Vec<String>,
    pub pc_lyndon_count: usize,
    pub terms_lhs: usize,
    pub terms_rhs: usize,
    pub mismatches: Vec<crate::factorization::TensorMismatch>,
    /// Structural defects of the pc-Lyndon family (only possible with the
    /// connectedness filter disabled).
    pub degeneracies: Vec<String>,
}

impl TraceSfReport {
    pub fn is_pass(&self) -> bool {
        self.mismatches.is_empty() && self.degeneracies.is_empty()
    }
}
