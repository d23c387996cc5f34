//! The quasi-shuffle Hopf algebra on the alphabet Y = {y₁, y₂, …}.
//!
//! Letters never materialize globally: Y is infinite, so everything is
//! confined to a weight-truncated subspace with an explicit bound supplied
//! by the caller; the weight-n component has dimension 2^{n−1}.
//!
//! Two products coexist on k⟨Y⟩ here. The quasi-shuffle
//! `y_i u ⊞ y_j v = y_i(u ⊞ y_j v) + y_j(y_i u ⊞ v) + y_{i+j}(u ⊞ v)` is
//! dual to the coproduct Δ_⊞; concatenation together with Δ_⊞ forms the
//! cocommutative bialgebra on which [`log_star`] acts as a projector onto
//! primitive elements (the first Eulerian idempotent: the convolution
//! logarithm of the identity map).

use crate::linalg;
use crate::rational::Coeff;
use num::{One, Zero};
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, HashMap};
use std::fmt;

/// A word over Y, stored as the sequence of indices s of its letters y_s.
/// All indices are ≥ 1; the weight is the sum of the indices and the empty
/// word has weight 0.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Debug)]
pub struct YWord {
    indices: Vec<u32>,
}

impl YWord {
    pub fn new(indices: Vec<u32>) -> Self {
        assert!(indices.iter().all(|&s| s >= 1), "letter indices start at 1");
        YWord { indices }
    }

    pub fn empty() -> Self {
        YWord::default()
    }

    pub fn letter(s: u32) -> Self {
        YWord::new(vec![s])
    }

    pub fn indices(&self) -> &[u32] {
        &self.indices
    }

    pub fn len(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }

    pub fn weight(&self) -> u32 {
        self.indices.iter().sum()
    }

    pub fn concat(&self, other: &YWord) -> YWord {
        let mut indices = self.indices.clone();
        indices.extend_from_slice(&other.indices);
        YWord { indices }
    }

    fn prepend(&self, s: u32) -> YWord {
        let mut indices = Vec::with_capacity(self.len() + 1);
        indices.push(s);
        indices.extend_from_slice(&self.indices);
        YWord { indices }
    }
}

impl fmt::Display for YWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return write!(f, "1");
        }
        for (k, s) in self.indices.iter().enumerate() {
            if k > 0 {
                write!(f, " ")?;
            }
            write!(f, "y{s}")?;
        }
        Ok(())
    }
}

#[derive(Clone, PartialEq, Eq, Default)]
pub struct YPoly {
    terms: BTreeMap<YWord, Coeff>,
}

impl YPoly {
    pub fn zero() -> Self {
        YPoly::default()
    }

    pub fn one() -> Self {
        YPoly::word(YWord::empty())
    }

    pub fn word(w: YWord) -> Self {
        YPoly::monomial(w, Coeff::one())
    }

    pub fn monomial(w: YWord, c: Coeff) -> Self {
        let mut p = YPoly::zero();
        p.add_term(w, c);
        p
    }

    pub fn add_term(&mut self, w: YWord, c: Coeff) {
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

    pub fn terms(&self) -> impl Iterator<Item = (&YWord, &Coeff)> {
        self.terms.iter()
    }

    pub fn coeff(&self, w: &YWord) -> Coeff {
        self.terms.get(w).cloned().unwrap_or_else(Coeff::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn add(&self, other: &YPoly) -> YPoly {
        let mut out = self.clone();
        for (w, c) in other.terms() {
            out.add_term(w.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &YPoly) -> YPoly {
        self.add(&other.scale(&-Coeff::one()))
    }

    pub fn scale(&self, c: &Coeff) -> YPoly {
        if c.is_zero() {
            return YPoly::zero();
        }
        YPoly { terms: self.terms.iter().map(|(w, x)| (w.clone(), x * c)).collect() }
    }

    pub fn conc_mul(&self, other: &YPoly) -> YPoly {
        let mut out = YPoly::zero();
        for (u, a) in self.terms() {
            for (v, b) in other.terms() {
                out.add_term(u.concat(v), a * b);
            }
        }
        out
    }

    /// Bilinear extension of the quasi-shuffle recursion.
    pub fn stuffle(&self, other: &YPoly) -> YPoly {
        let mut out = YPoly::zero();
        for (u, a) in self.terms() {
            for (v, b) in other.terms() {
                let c = a * b;
                for (w, k) in stuffle_words(u.indices(), v.indices()).terms() {
                    out.add_term(w.clone(), &c * k);
                }
            }
        }
        out
    }

    pub fn stuffle_coproduct(&self) -> YTensor {
        let mut out = YTensor::zero();
        for (w, c) in self.terms() {
            for ((l, r), k) in stuffle_coproduct_word(w).terms() {
                out.add_term(l.clone(), r.clone(), c * k);
            }
        }
        out
    }

    pub fn pairing(&self, other: &YPoly) -> Coeff {
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
}

impl fmt::Display for YPoly {
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
            if w.is_empty() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{w}")?;
            } else {
                write!(f, "{mag} {w}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for YPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "YPoly({self})")
    }
}

/// Finitely supported map (YWord, YWord) → ℚ.
#[derive(Clone, PartialEq, Eq, Default, Debug)]
pub struct YTensor {
    terms: BTreeMap<(YWord, YWord), Coeff>,
}

impl YTensor {
    pub fn zero() -> Self {
        YTensor::default()
    }

    pub fn unit() -> Self {
        let mut t = YTensor::zero();
        t.add_term(YWord::empty(), YWord::empty(), Coeff::one());
        t
    }

    pub fn add_term(&mut self, l: YWord, r: YWord, c: Coeff) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry((l, r)) {
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

    pub fn terms(&self) -> impl Iterator<Item = (&(YWord, YWord), &Coeff)> {
        self.terms.iter()
    }

    pub fn coeff(&self, l: &YWord, r: &YWord) -> Coeff {
        self.terms.get(&(l.clone(), r.clone())).cloned().unwrap_or_else(Coeff::zero)
    }

    pub fn add(&self, other: &YTensor) -> YTensor {
        let mut out = self.clone();
        for ((l, r), c) in other.terms() {
            out.add_term(l.clone(), r.clone(), c.clone());
        }
        out
    }

    /// Componentwise concatenation product.
    pub fn conc_mul(&self, other: &YTensor) -> YTensor {
        let mut out = YTensor::zero();
        for ((l1, r1), a) in self.terms() {
            for ((l2, r2), b) in other.terms() {
                out.add_term(l1.concat(l2), r1.concat(r2), a * b);
            }
        }
        out
    }
}

/// u ⊞ v on bare words.
pub fn stuffle_words(u: &[u32], v: &[u32]) -> YPoly {
    if u.is_empty() {
        return YPoly::word(YWord::new(v.to_vec()));
    }
    if v.is_empty() {
        return YPoly::word(YWord::new(u.to_vec()));
    }
    let (yi, ur) = (u[0], &u[1..]);
    let (yj, vr) = (v[0], &v[1..]);
    let mut out = YPoly::zero();
    for (head, rest) in [
        (yi, stuffle_words(ur, v)),
        (yj, stuffle_words(u, vr)),
        (yi + yj, stuffle_words(ur, vr)),
    ] {
        for (w, c) in rest.terms() {
            out.add_term(w.prepend(head), c.clone());
        }
    }
    out
}

/// Δ_⊞ on a letter: y_s⊗1 + 1⊗y_s + Σ_{s₁+s₂=s, s₁,s₂≥1} y_{s₁}⊗y_{s₂}.
fn letter_coproduct(s: u32) -> YTensor {
    let mut t = YTensor::zero();
    t.add_term(YWord::letter(s), YWord::empty(), Coeff::one());
    t.add_term(YWord::empty(), YWord::letter(s), Coeff::one());
    for s1 in 1..s {
        t.add_term(YWord::letter(s1), YWord::letter(s - s1), Coeff::one());
    }
    t
}

/// Δ_⊞ extended to words as an algebra morphism for concatenation.
pub fn stuffle_coproduct_word(w: &YWord) -> YTensor {
    let mut acc = YTensor::unit();
    for &s in w.indices() {
        acc = acc.conc_mul(&letter_coproduct(s));
    }
    acc
}

/// All words of weight exactly `n` (compositions of n), lexicographically
/// ordered by index sequence.
pub fn words_of_weight(n: u32) -> Vec<YWord> {
    fn rec(left: u32, acc: &mut Vec<u32>, out: &mut Vec<YWord>) {
        if left == 0 {
            out.push(YWord::new(acc.clone()));
            return;
        }
        for first in 1..=left {
            acc.push(first);
            rec(left - first, acc, out);
            acc.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, &mut Vec::new(), &mut out);
    out
}

pub fn words_up_to_weight(n: u32) -> Vec<YWord> {
    (0..=n).flat_map(words_of_weight).collect()
}

/// log_*(I) evaluated at a word: Σ_{k≥1} (−1)^{k+1}/k · (I−ηε)^{*k}(w),
/// convolution taken with concatenation as the product and Δ_⊞ as the
/// coproduct. The series terminates at k = weight(w).
pub fn log_star_word(w: &YWord) -> YPoly {
    let weight = w.weight();
    let mut memo: HashMap<(u32, YWord), YPoly> = HashMap::new();
    let mut acc = YPoly::zero();
    for k in 1..=weight {
        let power = conv_pow_aug(k, w, &mut memo);
        let sign = if k % 2 == 1 { Coeff::one() } else { -Coeff::one() };
        acc = acc.add(&power.scale(&(sign / Coeff::from_integer(k.into()))));
    }
    acc
}

/// Linear extension of [`log_star_word`].
pub fn log_star(p: &YPoly) -> YPoly {
    let mut acc = YPoly::zero();
    for (w, c) in p.terms() {
        acc = acc.add(&log_star_word(w).scale(c));
    }
    acc
}

/// (I−ηε)^{*k}(w). The augmentation projector kills the empty word, so each
/// convolution factor consumes at least one unit of weight.
fn conv_pow_aug(k: u32, w: &YWord, memo: &mut HashMap<(u32, YWord), YPoly>) -> YPoly {
    if k == 1 {
        return if w.is_empty() { YPoly::zero() } else { YPoly::word(w.clone()) };
    }
    if let Some(hit) = memo.get(&(k, w.clone())) {
        return hit.clone();
    }
    let mut acc = YPoly::zero();
    for ((l, r), c) in stuffle_coproduct_word(w).terms() {
        if l.is_empty() {
            continue;
        }
        let rest = conv_pow_aug(k - 1, r, memo);
        for (tail, d) in rest.terms() {
            acc.add_term(l.concat(tail), c * d);
        }
    }
    memo.insert((k, w.clone()), acc.clone());
    acc
}

/// True iff Δ_⊞(p) = p⊗1 + 1⊗p exactly.
pub fn check_primitive(p: &YPoly) -> bool {
    let mut expect = YTensor::zero();
    for (w, c) in p.terms() {
        expect.add_term(w.clone(), YWord::empty(), c.clone());
        expect.add_term(YWord::empty(), w.clone(), c.clone());
    }
    p.stuffle_coproduct() == expect
}

/// u ⊞ v recomputed from the coproduct alone:
/// Σ_w ⟨u⊗v, Δ_⊞(w)⟩ w over words of the right weight. Kept as the second
/// route for the duality audits.
pub fn stuffle_via_coproduct(u: &YWord, v: &YWord) -> YPoly {
    let mut out = YPoly::zero();
    for w in words_of_weight(u.weight() + v.weight()) {
        let c = stuffle_coproduct_word(&w).coeff(u, v);
        out.add_term(w, c);
    }
    out
}

/// For each weight m ≤ n, the exact rank of the span of
/// {log_*(I)(w) : weight(w) = m} inside the weight-m component.
pub fn primitive_dimensions(n: u32) -> Vec<usize> {
    let mut dims = Vec::new();
    for m in 1..=n {
        let basis = words_of_weight(m);
        let col: BTreeMap<&YWord, usize> =
            basis.iter().enumerate().map(|(i, w)| (w, i)).collect();
        let rows: Vec<Vec<Coeff>> = basis
            .iter()
            .map(|w| {
                let image = log_star_word(w);
                let mut row = vec![Coeff::zero(); basis.len()];
                for (word, c) in image.terms() {
                    row[col[word]] = c.clone();
                }
                row
            })
            .collect();
        dims.push(linalg::rank(rows));
    }
    dims
}

/// One named check failure inside the stuffle suite.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct StuffleViolation {
    pub location: String,
    pub expected: String,
    pub actual: String,
}

/// Combined suite: weight counts, duality ⟨u⊞v, w⟩ = ⟨u⊗v, Δ_⊞(w)⟩, Hopf
/// axioms for Δ_⊞, projector primitivity, and the PBW dimension consistency
/// of the primitive ranks.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct StuffleReport {
    pub max_weight: u32,
    pub checks_run: u64,
    pub primitive_dimensions: Vec<usize>,
    pub violations: Vec<StuffleViolation>,
}

impl StuffleReport {
    pub fn is_pass(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Exhaustive duality audit for all u, v, w with |u|+|v| = |w| ≤ n.
pub fn check_stuffle_duality(n: u32) -> (u64, Vec<StuffleViolation>) {
    let mut checks = 0;
    let mut violations = Vec::new();
    for wu in 0..=n {
        for wv in 0..=(n - wu) {
            for u in words_of_weight(wu) {
                for v in words_of_weight(wv) {
                    let product = stuffle_words(u.indices(), v.indices());
                    for w in words_of_weight(wu + wv) {
                        let lhs = product.coeff(&w);
                        let rhs = stuffle_coproduct_word(&w).coeff(&u, &v);
                        checks += 1;
                        if lhs != rhs {
                            violations.push(StuffleViolation {
                                location: format!("<{u} ⊞ {v}, {w}>"),
                                expected: rhs.to_string(),
                                actual: lhs.to_string(),
                            });
                        }
                    }
                }
            }
        }
    }
    (checks, violations)
}

pub fn verify_suite(max_weight: u32) -> StuffleReport {
    let mut checks = 0u64;
    let mut violations = Vec::new();

    // graded dimension: 2^{n−1} words of weight n > 0
    for m in 1..=max_weight {
        checks += 1;
        let count = words_of_weight(m).len() as u64;
        let expect = 1u64 << (m - 1);
        if count != expect {
            violations.push(StuffleViolation {
                location: format!("word count at weight {m}"),
                expected: expect.to_string(),
                actual: count.to_string(),
            });
        }
    }

    // duality of ⊞ and Δ_⊞
    let (dual_checks, mut dual_violations) = check_stuffle_duality(max_weight);
    checks += dual_checks;
    violations.append(&mut dual_violations);

    // Hopf axioms for Δ_⊞: coassociativity, cocommutativity, counit
    for w in words_up_to_weight(max_weight.min(6)) {
        checks += 3;
        let d = stuffle_coproduct_word(&w);
        let mut left: BTreeMap<(YWord, YWord, YWord), Coeff> = BTreeMap::new();
        let mut right: BTreeMap<(YWord, YWord, YWord), Coeff> = BTreeMap::new();
        let mut swapped = YTensor::zero();
        let mut counit_slice = YPoly::zero();
        for ((l, r), c) in d.terms() {
            for ((l1, l2), c1) in stuffle_coproduct_word(l).terms() {
                *left.entry((l1.clone(), l2.clone(), r.clone())).or_insert_with(Coeff::zero) +=
                    c * c1;
            }
            for ((r1, r2), c1) in stuffle_coproduct_word(r).terms() {
                *right.entry((l.clone(), r1.clone(), r2.clone())).or_insert_with(Coeff::zero) +=
                    c * c1;
            }
            swapped.add_term(r.clone(), l.clone(), c.clone());
            if l.is_empty() {
                counit_slice.add_term(r.clone(), c.clone());
            }
        }
        left.retain(|_, c| !c.is_zero());
        right.retain(|_, c| !c.is_zero());
        if left != right {
            violations.push(StuffleViolation {
                location: format!("coassociativity at {w}"),
                expected: "equal triple tensors".into(),
                actual: "mismatch".into(),
            });
        }
        if swapped != d {
            violations.push(StuffleViolation {
                location: format!("cocommutativity at {w}"),
                expected: "symmetric coproduct".into(),
                actual: "mismatch".into(),
            });
        }
        if counit_slice != YPoly::word(w.clone()) {
            violations.push(StuffleViolation {
                location: format!("counit axiom at {w}"),
                expected: w.to_string(),
                actual: counit_slice.to_string(),
            });
        }
    }

    // the projector lands in the primitives
    for w in words_up_to_weight(max_weight.min(6)) {
        if w.is_empty() {
            continue;
        }
        checks += 1;
        if !check_primitive(&log_star_word(&w)) {
            violations.push(StuffleViolation {
                location: format!("log_*(I)({w}) primitivity"),
                expected: "primitive".into(),
                actual: "not primitive".into(),
            });
        }
    }

    // PBW consistency: Π_m (1−t^m)^{−d_m} must reproduce 2^{m−1}
    let dims = primitive_dimensions(max_weight.min(6));
    let bound = dims.len();
    let mut series = vec![Coeff::zero(); bound + 1];
    series[0] = Coeff::one();
    for (m, &d) in (1..).zip(dims.iter()) {
        for _ in 0..d {
            series = mul_by_inverse_factor(&series, m);
        }
    }
    for m in 1..=bound {
        checks += 1;
        let expect = Coeff::from_integer(num::BigInt::from(1u64 << (m - 1)));
        if series[m] != expect {
            violations.push(StuffleViolation {
                location: format!("PBW graded dimension at weight {m}"),
                expected: expect.to_string(),
                actual: series[m].to_string(),
            });
        }
    }

    StuffleReport {
        max_weight,
        checks_run: checks,
        primitive_dimensions: dims,
        violations,
    }
}

/// Multiplies a truncated power series by 1/(1−t^m).
fn mul_by_inverse_factor(series: &[Coeff], m: usize) -> Vec<Coeff> {
    let mut out = series.to_vec();
    for i in m..out.len() {
        let prev = out[i - m].clone();
        out[i] += prev;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{q_int, q_ratio};

    fn yw(ix: &[u32]) -> YWord {
        YWord::new(ix.to_vec())
    }

    #[test]
    fn stuffle_examples() {
        // unit case
        assert_eq!(stuffle_words(&[1], &[]), YPoly::word(yw(&[1])));
        // y1 ⊞ y1 = 2 y1y1 + y2
        let mut expect = YPoly::zero();
        expect.add_term(yw(&[1, 1]), q_int(2));
        expect.add_term(yw(&[2]), q_int(1));
        assert_eq!(stuffle_words(&[1], &[1]), expect);
        // y1 ⊞ y2 = y1y2 + y2y1 + y3
        let mut expect = YPoly::zero();
        expect.add_term(yw(&[1, 2]), q_int(1));
        expect.add_term(yw(&[2, 1]), q_int(1));
        expect.add_term(yw(&[3]), q_int(1));
        assert_eq!(stuffle_words(&[1], &[2]), expect);
    }

    #[test]
    fn words_of_weight_examples() {
        assert_eq!(words_of_weight(0), vec![YWord::empty()]);
        assert_eq!(words_of_weight(2), vec![yw(&[1, 1]), yw(&[2])]);
        assert_eq!(words_of_weight(5).len(), 16);
        for n in 1..=10u32 {
            assert_eq!(words_of_weight(n).len() as u64, 1 << (n - 1), "weight {n}");
        }
    }

    #[test]
    fn coproduct_examples() {
        let d1 = stuffle_coproduct_word(&yw(&[1]));
        let mut expect = YTensor::zero();
        expect.add_term(yw(&[1]), YWord::empty(), q_int(1));
        expect.add_term(YWord::empty(), yw(&[1]), q_int(1));
        assert_eq!(d1, expect);

        let d2 = stuffle_coproduct_word(&yw(&[2]));
        let mut expect = YTensor::zero();
        expect.add_term(yw(&[2]), YWord::empty(), q_int(1));
        expect.add_term(YWord::empty(), yw(&[2]), q_int(1));
        expect.add_term(yw(&[1]), yw(&[1]), q_int(1));
        assert_eq!(d2, expect);

        assert_eq!(stuffle_coproduct_word(&YWord::empty()), YTensor::unit());
    }

    #[test]
    fn duality_hand_values() {
        // ⟨y1⊞y1, y1y1⟩ = 2 and ⟨y1⊞y1, y2⟩ = 1
        let prod = stuffle_words(&[1], &[1]);
        assert_eq!(prod.coeff(&yw(&[1, 1])), q_int(2));
        assert_eq!(prod.coeff(&yw(&[2])), q_int(1));
        assert_eq!(stuffle_coproduct_word(&yw(&[1, 1])).coeff(&yw(&[1]), &yw(&[1])), q_int(2));
        assert_eq!(stuffle_coproduct_word(&yw(&[2])).coeff(&yw(&[1]), &yw(&[1])), q_int(1));
    }

    #[test]
    fn duality_exhaustive() {
        let (checks, violations) = check_stuffle_duality(5);
        assert!(checks > 0);
        assert!(violations.is_empty(), "{violations:?}");
    }

    #[test]
    fn recursion_rederived_from_coproduct() {
        // the dual-product computation reproduces the recursion term-for-term
        for total in 2..=5u32 {
            for wu in 1..total {
                for u in words_of_weight(wu) {
                    for v in words_of_weight(total - wu) {
                        assert_eq!(
                            stuffle_via_coproduct(&u, &v),
                            stuffle_words(u.indices(), v.indices()),
                            "{u} ⊞ {v}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn log_star_weight_one_is_identity() {
        assert_eq!(log_star_word(&yw(&[1])), YPoly::word(yw(&[1])));
    }

    #[test]
    fn log_star_y4_matches_expansion() {
        // y4 − ½(y1y3+y2y2+y3y1) + ⅓(y1y1y2+y1y2y1+y2y1y1) − ¼ y1⁴
        let got = log_star_word(&yw(&[4]));
        let mut expect = YPoly::zero();
        expect.add_term(yw(&[4]), q_int(1));
        for pair in [[1, 3], [2, 2], [3, 1]] {
            expect.add_term(yw(&pair), q_ratio(-1, 2));
        }
        for triple in [[1, 1, 2], [1, 2, 1], [2, 1, 1]] {
            expect.add_term(yw(&triple), q_ratio(1, 3));
        }
        expect.add_term(yw(&[1, 1, 1, 1]), q_ratio(-1, 4));
        assert_eq!(got, expect);
    }

    #[test]
    fn log_star_letters_match_composition_expansion() {
        // independent oracle on letters: Σ_k (−1)^{k+1}/k Σ_{compositions}
        for p in 1..=4u32 {
            let mut expect = YPoly::zero();
            for (k, sign) in (1..=p).map(|k| (k, if k % 2 == 1 { 1 } else { -1 })) {
                for w in words_of_weight(p) {
                    if w.len() == k as usize {
                        expect.add_term(w, q_ratio(sign, k as i64));
                    }
                }
            }
            assert_eq!(log_star_word(&yw(&[p])), expect, "y{p}");
        }
    }

    #[test]
    fn primitivity_checks() {
        assert!(check_primitive(&YPoly::word(yw(&[1]))));
        assert!(!check_primitive(&YPoly::word(yw(&[2]))));
        assert!(check_primitive(&log_star_word(&yw(&[4]))));
        for w in words_up_to_weight(6) {
            if w.is_empty() {
                continue;
            }
            assert!(check_primitive(&log_star_word(&w)), "log_* at {w}");
        }
    }

    #[test]
    fn projector_fixes_primitives() {
        // applying log_* to an already-primitive element returns it
        for w in words_up_to_weight(5) {
            if w.is_empty() {
                continue;
            }
            let p = log_star_word(&w);
            assert_eq!(log_star(&p), p, "projector fixed point from {w}");
        }
    }

    #[test]
    fn stuffle_laws() {
        // commutativity and associativity over all triples of total weight ≤ 6
        let words = words_up_to_weight(4);
        for u in &words {
            for v in &words {
                if u.weight() + v.weight() > 6 {
                    continue;
                }
                let pu = YPoly::word(u.clone());
                let pv = YPoly::word(v.clone());
                assert_eq!(pu.stuffle(&pv), pv.stuffle(&pu));
                for w in &words {
                    if u.weight() + v.weight() + w.weight() > 6 {
                        continue;
                    }
                    let pw = YPoly::word(w.clone());
                    assert_eq!(pu.stuffle(&pv).stuffle(&pw), pu.stuffle(&pv.stuffle(&pw)));
                }
            }
        }
    }

    #[test]
    fn primitive_dimension_values() {
        // d_1..d_6 determined by Σ_{d|m} d·d_d = 2^m − 1 (Witt-style oracle)
        let dims = primitive_dimensions(6);
        assert_eq!(dims, vec![1, 1, 2, 3, 6, 9]);
        let mut derived = vec![0u64; 7];
        for m in 1..=6usize {
            let mut rest = 0;
            for d in 1..m {
                if m % d == 0 {
                    rest += d as u64 * derived[d];
                }
            }
            derived[m] = ((1u64 << m) - 1 - rest) / m as u64;
        }
        assert_eq!(dims.iter().map(|&d| d as u64).collect::<Vec<_>>(), derived[1..7].to_vec());
    }

    #[test]
    fn suite_passes() {
        let report = verify_suite(6);
        assert!(report.is_pass(), "{:?}", report.violations);
        assert_eq!(report.primitive_dimensions, vec![1, 1, 2, 3, 6, 9]);
    }
}
