//! The enveloping algebra U(g) of a structure-constant Lie algebra.
//!
//! PBW monomials B^α materialize with the largest basis index leftmost, and
//! normal ordering rewrites an out-of-order adjacent pair b_i b_j (i < j)
//! as b_j b_i + [b_i, b_j] until every monomial is nonincreasing. With that
//! orientation the coproduct of a PBW monomial has the closed binomial form
//! Δ(B^γ) = Σ_{γ₁+γ₂=γ} γ!/(γ₁!γ₂!) B^{γ₁}⊗B^{γ₂} (both legs come out
//! already ordered), the rescaled dual family T_α = α!·S_α is
//! multiplicative under convolution, and the resolution of the identity
//! Σ_α S_α⊗B^α factors into exponentials taken in *decreasing* index
//! order. The increasing order provably fails whenever the right legs do
//! not commute, and stays available as an executable control.
//!
//! Truncation lives on the left (form) legs, which are honestly graded:
//! S_α * S_β is supported in weight |α|+|β|, so dropping left weights above
//! a bound is an algebra quotient.

use crate::error::{Error, Result};
use crate::factorization::ProductOrder;
use crate::lie::LieAlgebra;
use crate::linalg;
use crate::multiindex::MultiIndex;
use crate::rational::Coeff;
use num::{One, Zero};
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, HashMap};

/// Element of U(g) in PBW coordinates: finitely supported MultiIndex → ℚ.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct UElement {
    terms: BTreeMap<MultiIndex, Coeff>,
}

impl UElement {
    pub fn zero() -> Self {
        UElement::default()
    }

    pub fn one() -> Self {
        UElement::basis(MultiIndex::zero())
    }

    pub fn basis(alpha: MultiIndex) -> Self {
        UElement::monomial(alpha, Coeff::one())
    }

    pub fn monomial(alpha: MultiIndex, c: Coeff) -> Self {
        let mut u = UElement::zero();
        u.add_term(alpha, c);
        u
    }

    pub fn add_term(&mut self, alpha: MultiIndex, c: Coeff) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(alpha) {
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

    pub fn terms(&self) -> impl Iterator<Item = (&MultiIndex, &Coeff)> {
        self.terms.iter()
    }

    /// ⟨S_α, u⟩: the coefficient of B^α.
    pub fn coeff(&self, alpha: &MultiIndex) -> Coeff {
        self.terms.get(alpha).cloned().unwrap_or_else(Coeff::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &UElement) -> UElement {
        let mut out = self.clone();
        for (a, c) in other.terms() {
            out.add_term(a.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &UElement) -> UElement {
        self.add(&other.scale(&-Coeff::one()))
    }

    pub fn scale(&self, c: &Coeff) -> UElement {
        if c.is_zero() {
            return UElement::zero();
        }
        UElement { terms: self.terms.iter().map(|(a, x)| (a.clone(), x * c)).collect() }
    }

    pub fn format_with(&self, names: &[String]) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (k, (alpha, c)) in self.terms.iter().enumerate() {
            let neg = c < &Coeff::zero();
            let mag = if neg { -c.clone() } else { c.clone() };
            if k == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            if alpha.is_zero() {
                out.push_str(&mag.to_string());
            } else if mag.is_one() {
                out.push_str(&alpha.format_with(names));
            } else {
                out.push_str(&format!("{} {}", mag, alpha.format_with(names)));
            }
        }
        out
    }
}

/// Linear form Σ c_α S_α of finite support on the PBW basis.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct DualForm {
    terms: BTreeMap<MultiIndex, Coeff>,
}

impl DualForm {
    pub fn zero() -> Self {
        DualForm::default()
    }

    /// S_α itself.
    pub fn delta(alpha: MultiIndex) -> Self {
        let mut f = DualForm::zero();
        f.add_term(alpha, Coeff::one());
        f
    }

    pub fn add_term(&mut self, alpha: MultiIndex, c: Coeff) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(alpha) {
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

    pub fn coeff(&self, alpha: &MultiIndex) -> Coeff {
        self.terms.get(alpha).cloned().unwrap_or_else(Coeff::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&MultiIndex, &Coeff)> {
        self.terms.iter()
    }

    pub fn scale(&self, c: &Coeff) -> DualForm {
        if c.is_zero() {
            return DualForm::zero();
        }
        DualForm { terms: self.terms.iter().map(|(a, x)| (a.clone(), x * c)).collect() }
    }

    pub fn add(&self, other: &DualForm) -> DualForm {
        let mut out = self.clone();
        for (a, c) in other.terms() {
            out.add_term(a.clone(), c.clone());
        }
        out
    }

    /// Evaluation against an element in PBW coordinates.
    pub fn eval(&self, u: &UElement) -> Coeff {
        let mut acc = Coeff::zero();
        for (alpha, c) in self.terms() {
            let v = u.coeff(alpha);
            if !v.is_zero() {
                acc += c * v;
            }
        }
        acc
    }
}

/// Finitely supported map (MultiIndex, MultiIndex) → ℚ. For factorization
/// work the left leg indexes S_α and the right leg B^β; coproduct output
/// uses it with B⊗B legs.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct UTensor {
    terms: BTreeMap<(MultiIndex, MultiIndex), Coeff>,
}

impl UTensor {
    pub fn zero() -> Self {
        UTensor::default()
    }

    pub fn unit() -> Self {
        let mut t = UTensor::zero();
        t.add_term(MultiIndex::zero(), MultiIndex::zero(), Coeff::one());
        t
    }

    pub fn add_term(&mut self, left: MultiIndex, right: MultiIndex, c: Coeff) {
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

    pub fn terms(&self) -> impl Iterator<Item = (&(MultiIndex, MultiIndex), &Coeff)> {
        self.terms.iter()
    }

    pub fn coeff(&self, left: &MultiIndex, right: &MultiIndex) -> Coeff {
        self.terms
            .get(&(left.clone(), right.clone()))
            .cloned()
            .unwrap_or_else(Coeff::zero)
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }
}

/// γ!/(γ₁!γ₂!) as an exact rational.
fn split_binomial(gamma: &MultiIndex, g1: &MultiIndex, g2: &MultiIndex) -> Coeff {
    Coeff::new(gamma.factorial(), g1.factorial() * g2.factorial())
}

/// U(g) engine for a validated Lie algebra.
pub struct Enveloping {
    lie: LieAlgebra,
}

impl Enveloping {
    pub fn new(lie: LieAlgebra) -> Self {
        Enveloping { lie }
    }

    pub fn lie(&self) -> &LieAlgebra {
        &self.lie
    }

    pub fn dim(&self) -> usize {
        self.lie.dim()
    }

    pub fn generator(&self, i: usize) -> UElement {
        assert!(i < self.dim(), "generator index out of range");
        UElement::basis(MultiIndex::unit(i))
    }

    pub fn multiindices_up_to(&self, n: u32) -> Vec<MultiIndex> {
        MultiIndex::all_up_to_weight(self.dim(), n)
    }

    /// Straightens a word of generators into PBW coordinates by rewriting
    /// adjacent pairs b_i b_j (i < j) as b_j b_i + [b_i, b_j]; terminates by
    /// the (filtration degree, inversion count) measure.
    pub fn normal_order(&self, generators: &[usize]) -> UElement {
        for &g in generators {
            assert!(g < self.dim(), "generator index {g} out of range");
        }
        let mut out = UElement::zero();
        let mut work: Vec<(Vec<usize>, Coeff)> = vec![(generators.to_vec(), Coeff::one())];
        while let Some((word, coeff)) = work.pop() {
            match (0..word.len().saturating_sub(1)).find(|&p| word[p] < word[p + 1]) {
                None => {
                    let counts = word.iter().map(|&g| (g, 1)).collect::<Vec<_>>();
                    out.add_term(MultiIndex::from_pairs(counts), coeff);
                }
                Some(p) => {
                    let (a, b) = (word[p], word[p + 1]);
                    let mut swapped = word.clone();
                    swapped.swap(p, p + 1);
                    work.push((swapped, coeff.clone()));
                    for (k, c) in self.lie.bracket(a, b) {
                        let mut contracted = word[..p].to_vec();
                        contracted.push(k);
                        contracted.extend_from_slice(&word[p + 2..]);
                        work.push((contracted, &coeff * c));
                    }
                }
            }
        }
        out
    }

    /// Product in U(g): concatenate the materialized generator words and
    /// straighten. Unit is B^0.
    pub fn mul(&self, a: &UElement, b: &UElement) -> UElement {
        let mut out = UElement::zero();
        for (alpha, ca) in a.terms() {
            let mut word = alpha.generator_word();
            let head_len = word.len();
            for (beta, cb) in b.terms() {
                word.truncate(head_len);
                word.extend(beta.generator_word());
                let product = self.normal_order(&word);
                for (gamma, c) in product.terms() {
                    out.add_term(gamma.clone(), &(ca * cb) * c);
                }
            }
        }
        out
    }

    /// Δ by the closed binomial formula, exact in this orientation.
    pub fn coproduct(&self, u: &UElement) -> UTensor {
        let mut out = UTensor::zero();
        for (gamma, c) in u.terms() {
            for (g1, g2) in gamma.decompositions() {
                let coeff = split_binomial(gamma, &g1, &g2);
                out.add_term(g1, g2, c * coeff);
            }
        }
        out
    }

    /// Δ by multiplicative extension of Δ(b) = b⊗1 + 1⊗b, using only
    /// [`Enveloping::mul`]; the independent route for cross-validating
    /// [`Enveloping::coproduct`].
    pub fn coproduct_multiplicative(&self, u: &UElement) -> UTensor {
        let mut out = UTensor::zero();
        for (gamma, c) in u.terms() {
            let mut acc: BTreeMap<(MultiIndex, MultiIndex), Coeff> =
                BTreeMap::from([((MultiIndex::zero(), MultiIndex::zero()), Coeff::one())]);
            for g in gamma.generator_word() {
                let generator = self.generator(g);
                let mut next: BTreeMap<(MultiIndex, MultiIndex), Coeff> = BTreeMap::new();
                for ((left, right), d) in &acc {
                    for (leg, is_left) in [(left, true), (right, false)] {
                        let product = self.mul(&UElement::basis(leg.clone()), &generator);
                        for (res, cc) in product.terms() {
                            let key = if is_left {
                                (res.clone(), right.clone())
                            } else {
                                (left.clone(), res.clone())
                            };
                            let entry = next.entry(key).or_insert_with(Coeff::zero);
                            *entry += d * cc;
                        }
                    }
                }
                next.retain(|_, v| !v.is_zero());
                acc = next;
            }
            for ((l, r), d) in acc {
                out.add_term(l, r, c * d);
            }
        }
        out
    }

    /// ⟨S_α, u⟩.
    pub fn dual_eval(&self, alpha: &MultiIndex, u: &UElement) -> Coeff {
        u.coeff(alpha)
    }

    /// (f*g)(u) = (f⊗g)(Δ(u)).
    pub fn convolution(&self, f: &DualForm, g: &DualForm, u: &UElement) -> Coeff {
        let mut acc = Coeff::zero();
        for (gamma, c) in u.terms() {
            for (g1, g2) in gamma.decompositions() {
                let fv = f.coeff(&g1);
                if fv.is_zero() {
                    continue;
                }
                let gv = g.coeff(&g2);
                if gv.is_zero() {
                    continue;
                }
                acc += c * split_binomial(gamma, &g1, &g2) * fv * gv;
            }
        }
        acc
    }

    /// f*g restricted to the span of {B^γ : |γ| ≤ max_weight}.
    pub fn convolve_truncated(&self, f: &DualForm, g: &DualForm, max_weight: u32) -> DualForm {
        let mut out = DualForm::zero();
        for gamma in self.multiindices_up_to(max_weight) {
            let v = self.convolution(f, g, &UElement::basis(gamma.clone()));
            out.add_term(gamma, v);
        }
        out
    }

    /// Componentwise product on S⊗B tensors: honest convolution on the left
    /// leg, [`Enveloping::mul`] on the right, truncated at left weight > n.
    pub fn tensor_mul(&self, a: &UTensor, b: &UTensor, n: u32) -> UTensor {
        let mut out = UTensor::zero();
        let mut conv_cache: HashMap<(MultiIndex, MultiIndex), DualForm> = HashMap::new();
        for ((fa, ua), ca) in a.terms() {
            for ((fb, ub), cb) in b.terms() {
                if fa.weight() + fb.weight() > n {
                    continue;
                }
                let conv = conv_cache
                    .entry((fa.clone(), fb.clone()))
                    .or_insert_with(|| {
                        self.convolve_truncated(&DualForm::delta(fa.clone()), &DualForm::delta(fb.clone()), n)
                    })
                    .clone();
                let product = self.mul(&UElement::basis(ua.clone()), &UElement::basis(ub.clone()));
                let scale = ca * cb;
                for (gamma, cf) in conv.terms() {
                    for (delta, cu) in product.terms() {
                        out.add_term(gamma.clone(), delta.clone(), &scale * &(cf * cu));
                    }
                }
            }
        }
        out
    }

    /// exp(S_{e_i} ⊗ B^{e_i}) truncated at left weight n.
    pub fn exp_generator(&self, i: usize, n: u32) -> UTensor {
        let mut base = UTensor::zero();
        base.add_term(MultiIndex::unit(i), MultiIndex::unit(i), Coeff::one());
        let mut acc = UTensor::unit();
        let mut power = UTensor::unit();
        for k in 1..=n {
            power = self.tensor_mul(&power, &base, n);
            power = UTensor {
                terms: power
                    .terms
                    .into_iter()
                    .map(|(key, c)| (key, c / Coeff::from_integer(k.into())))
                    .collect(),
            };
            if power.terms.is_empty() {
                break;
            }
            for ((l, r), c) in power.terms() {
                acc.add_term(l.clone(), r.clone(), c.clone());
            }
        }
        acc
    }

    /// Σ_{|α| ≤ n} S_α ⊗ B^α.
    pub fn theorem1_lhs(&self, n: u32) -> UTensor {
        let mut out = UTensor::zero();
        for alpha in self.multiindices_up_to(n) {
            out.add_term(alpha.clone(), alpha, Coeff::one());
        }
        out
    }

    /// ∏ exp(S_{e_i}⊗B^{e_i}) over the generators in the given index order.
    pub fn theorem1_rhs(&self, n: u32, order: ProductOrder) -> UTensor {
        let indices: Vec<usize> = match order {
            ProductOrder::Decreasing => (0..self.dim()).rev().collect(),
            ProductOrder::Increasing => (0..self.dim()).collect(),
        };
        let mut acc = UTensor::unit();
        for i in indices {
            let factor = self.exp_generator(i, n);
            acc = self.tensor_mul(&acc, &factor, n);
        }
        acc
    }

    /// Φ(Σ f⊗v)(B^β) = Σ f(B^β)·v: the endomorphism attached to a tensor,
    /// applied to one PBW basis element.
    pub fn apply_resolution(&self, t: &UTensor, beta: &MultiIndex) -> UElement {
        let mut out = UElement::zero();
        for ((f, v), c) in t.terms() {
            if f == beta {
                out.add_term(v.clone(), c.clone());
            }
        }
        out
    }

    /// Exhaustive check of S_α * S_β = ((α+β)!/(α!β!))·S_{α+β} as forms on
    /// all B^γ with |γ| ≤ n, for all |α|+|β| ≤ n.
    pub fn verify_radford_multiplicativity(&self, n: u32) -> RadfordReport {
        let names = self.lie.names();
        let indices = self.multiindices_up_to(n);
        let mut checks = 0u64;
        let mut violations = Vec::new();
        for alpha in &indices {
            for beta in &indices {
                if alpha.weight() + beta.weight() > n {
                    continue;
                }
                let sum = alpha.add(beta);
                let multiplicity = split_binomial(&sum, alpha, beta);
                let fa = DualForm::delta(alpha.clone());
                let fb = DualForm::delta(beta.clone());
                for gamma in &indices {
                    checks += 1;
                    let got = self.convolution(&fa, &fb, &UElement::basis(gamma.clone()));
                    let expect = if *gamma == sum { multiplicity.clone() } else { Coeff::zero() };
                    if got != expect {
                        violations.push(RadfordViolation {
                            alpha: alpha.format_with(names),
                            beta: beta.format_with(names),
                            gamma: gamma.format_with(names),
                            expected: expect.to_string(),
                            actual: got.to_string(),
                        });
                    }
                }
            }
        }
        RadfordReport { degree: n, checks_run: checks, violations }
    }

    /// Tensor-coordinate equality of both sides of the factorization plus
    /// the resolution-of-identity view.
    pub fn verify_theorem1(&self, n: u32, order: ProductOrder) -> Theorem1Report {
        let names = self.lie.names();
        let lhs = self.theorem1_lhs(n);
        let rhs = self.theorem1_rhs(n, order);
        let mut keys: Vec<(MultiIndex, MultiIndex)> = lhs.terms.keys().cloned().collect();
        keys.extend(rhs.terms.keys().cloned());
        keys.sort();
        keys.dedup();
        let mut mismatches = Vec::new();
        for (l, r) in keys {
            let a = rhs.coeff(&l, &r);
            let b = lhs.coeff(&l, &r);
            if a != b {
                mismatches.push(TensorKeyMismatch {
                    left: l.format_with(names),
                    right: r.format_with(names),
                    product: a.to_string(),
                    diagonal: b.to_string(),
                });
            }
        }
        let mut phi_failures = Vec::new();
        let mut checks = 0u64;
        for beta in self.multiindices_up_to(n) {
            checks += 1;
            let image = self.apply_resolution(&rhs, &beta);
            if image != UElement::basis(beta.clone()) {
                phi_failures.push(format!(
                    "Φ(product)(B^{}) = {}",
                    beta.format_with(names),
                    image.format_with(names)
                ));
            }
            // the diagonal side is the identity by construction, checked too
            let lhs_image = self.apply_resolution(&lhs, &beta);
            if lhs_image != UElement::basis(beta.clone()) {
                phi_failures.push(format!("Φ(diagonal)(B^{}) not identity", beta.format_with(names)));
            }
        }
        Theorem1Report {
            degree: n,
            order: match order {
                ProductOrder::Decreasing => "decreasing".into(),
                ProductOrder::Increasing => "increasing".into(),
            },
            checks_run: checks,
            tensor_equal: mismatches.is_empty(),
            mismatches,
            phi_identity: phi_failures.is_empty(),
            phi_failures,
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct RadfordViolation {
    pub alpha: String,
    pub beta: String,
    pub gamma: String,
    pub expected: String,
    pub actual: String,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct RadfordReport {
    pub degree: u32,
    pub checks_run: u64,
    pub violations: Vec<RadfordViolation>,
}

impl RadfordReport {
    pub fn is_pass(&self) -> bool {
        self.violations.is_empty()
    }
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct TensorKeyMismatch {
    pub left: String,
    pub right: String,
    pub product: String,
    pub diagonal: String,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct Theorem1Report {
    pub degree: u32,
    pub order: String,
    pub checks_run: u64,
    pub tensor_equal: bool,
    pub mismatches: Vec<TensorKeyMismatch>,
    pub phi_identity: bool,
    pub phi_failures: Vec<String>,
}

impl Theorem1Report {
    pub fn is_pass(&self) -> bool {
        self.tensor_equal && self.phi_identity
    }
}

/// A multiplicative family T_α in duality with a basis B^{[α]}, both given
/// explicitly up to a weight bound. Duality is normalized as
/// ⟨T_α, B^{[β]}⟩ = α!·δ_{αβ}, i.e. S_α := T_α/α! is the δ-dual family.
pub struct RadfordFamily {
    pub max_weight: u32,
    basis: BTreeMap<MultiIndex, UElement>,
    forms: BTreeMap<MultiIndex, DualForm>,
}

impl RadfordFamily {
    /// The PBW-derived family: T_α = α!·S_α and B^{[α]} = B^α.
    pub fn pbw(env: &Enveloping, max_weight: u32) -> Self {
        let mut basis = BTreeMap::new();
        let mut forms = BTreeMap::new();
        for alpha in env.multiindices_up_to(max_weight) {
            basis.insert(alpha.clone(), UElement::basis(alpha.clone()));
            forms.insert(
                alpha.clone(),
                DualForm::delta(alpha.clone()).scale(&Coeff::from_integer(alpha.factorial())),
            );
        }
        RadfordFamily { max_weight, basis, forms }
    }

    /// The documented perturbation: B^{[2e₀]} := B^{2e₀} + B^{e₁}, with the
    /// duals honestly adjusted (S'_{e₁} = S_{e₁} − S_{2e₀}). The adjusted
    /// family stops being multiplicative at weight 3, so it validates only
    /// under truncation at max_weight ≤ 2.
    pub fn perturbed_pbw(env: &Enveloping, max_weight: u32) -> Self {
        assert!(env.dim() >= 2, "the perturbation needs two basis directions");
        let mut family = Self::pbw(env, max_weight);
        let twice_first = MultiIndex::power(0, 2);
        let second = MultiIndex::unit(1);
        if let Some(b) = family.basis.get_mut(&twice_first) {
            *b = b.add(&UElement::basis(second.clone()));
        }
        if let Some(t) = family.forms.get_mut(&second) {
            let mut adjusted = DualForm::delta(second.clone());
            adjusted.add_term(twice_first.clone(), -Coeff::one());
            *t = adjusted;
        }
        family
    }

    pub fn basis_element(&self, alpha: &MultiIndex) -> Option<&UElement> {
        self.basis.get(alpha)
    }

    pub fn form(&self, alpha: &MultiIndex) -> Option<&DualForm> {
        self.forms.get(alpha)
    }

    /// Validates duality (⟨T_α, B^{[β]}⟩ = α!·δ) and multiplicativity
    /// (T_α*T_β = T_{α+β} as forms on every B^γ), all within |·| ≤ n.
    pub fn validate(&self, env: &Enveloping, n: u32) -> Result<u64> {
        let names = env.lie().names();
        let indices = env.multiindices_up_to(n);
        let mut checks = 0u64;
        for alpha in &indices {
            let t = self.forms.get(alpha).ok_or_else(|| {
                Error::FamilyValidation(format!("missing form at {}", alpha.format_with(names)))
            })?;
            for beta in &indices {
                let b = self.basis.get(beta).ok_or_else(|| {
                    Error::FamilyValidation(format!(
                        "missing basis element at {}",
                        beta.format_with(names)
                    ))
                })?;
                checks += 1;
                let expect = if alpha == beta {
                    Coeff::from_integer(alpha.factorial())
                } else {
                    Coeff::zero()
                };
                let got = t.eval(b);
                if got != expect {
                    return Err(Error::FamilyValidation(format!(
                        "duality fails at <T_{}, B[{}]>: expected {expect}, got {got}",
                        alpha.format_with(names),
                        beta.format_with(names)
                    )));
                }
            }
        }
        for alpha in &indices {
            for beta in &indices {
                if alpha.weight() + beta.weight() > n {
                    continue;
                }
                let sum = alpha.add(beta);
                let ta = &self.forms[alpha];
                let tb = &self.forms[beta];
                let tsum = &self.forms[&sum];
                for gamma in &indices {
                    checks += 1;
                    let b = UElement::basis(gamma.clone());
                    let got = env.convolution(ta, tb, &b);
                    let expect = tsum.eval(&b);
                    if got != expect {
                        return Err(Error::FamilyValidation(format!(
                            "multiplicativity fails at (T_{} * T_{})(B^{}): expected {expect}, got {got}",
                            alpha.format_with(names),
                            beta.format_with(names),
                            gamma.format_with(names)
                        )));
                    }
                }
            }
        }
        Ok(checks)
    }
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct ExperimentReport {
    pub degree: u32,
    pub validation_checks: u64,
    pub primitives_ok: bool,
    pub primitive_failures: Vec<String>,
    pub independent: bool,
    pub products_checked: u64,
    /// Multiindices α where the ordered product B̃^α differs from B^{[α]}.
    pub product_mismatches: Vec<String>,
}

impl ExperimentReport {
    pub fn is_pass(&self) -> bool {
        self.primitives_ok && self.independent && self.product_mismatches.is_empty()
    }
}

/// Validates the family, checks that each B^{[e_i]} is primitive and that
/// they are linearly independent, and compares each ordered product
/// B̃^α = ∏^{↘} (B^{[e_i]})^{α(i)} against B^{[α]} for |α| ≤ n.
pub fn radford_to_pbw_experiment(
    env: &Enveloping,
    family: &RadfordFamily,
    n: u32,
) -> Result<ExperimentReport> {
    let validation_checks = family.validate(env, n)?;
    let names = env.lie().names();

    let mut primitive_failures = Vec::new();
    let mut generators = Vec::new();
    for i in 0..env.dim() {
        let b = family
            .basis_element(&MultiIndex::unit(i))
            .ok_or_else(|| Error::FamilyValidation(format!("missing B[e_{i}]")))?;
        generators.push(b.clone());
        let mut expect = UTensor::zero();
        for (gamma, c) in b.terms() {
            expect.add_term(gamma.clone(), MultiIndex::zero(), c.clone());
            expect.add_term(MultiIndex::zero(), gamma.clone(), c.clone());
        }
        if env.coproduct(b) != expect {
            primitive_failures.push(format!("B[{}] is not primitive", names[i]));
        }
    }

    let coords = env.multiindices_up_to(n);
    let col: BTreeMap<&MultiIndex, usize> = coords.iter().enumerate().map(|(k, a)| (a, k)).collect();
    let rows: Vec<Vec<Coeff>> = generators
        .iter()
        .map(|g| {
            let mut row = vec![Coeff::zero(); coords.len()];
            for (alpha, c) in g.terms() {
                row[col[alpha]] = c.clone();
            }
            row
        })
        .collect();
    let independent = linalg::rank(rows) == env.dim();

    let mut products_checked = 0u64;
    let mut product_mismatches = Vec::new();
    for alpha in env.multiindices_up_to(n) {
        let mut product = UElement::one();
        for (i, k) in alpha.entries().rev() {
            for _ in 0..k {
                product = env.mul(&product, &generators[i]);
            }
        }
        products_checked += 1;
        if &product != family.basis_element(&alpha).expect("validated above") {
            product_mismatches.push(alpha.format_with(names));
        }
    }

    Ok(ExperimentReport {
        degree: n,
        validation_checks,
        primitives_ok: primitive_failures.is_empty(),
        primitive_failures,
        independent,
        products_checked,
        product_mismatches,
    })
}
