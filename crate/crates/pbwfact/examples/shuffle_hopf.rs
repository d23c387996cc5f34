//! Core algebra walkthrough: exact sparse polynomials over words, the
//! shuffle product, the unshuffle coproduct, the antipode, and the pairing
//! that makes words an orthonormal family.
//!
//! Run with: cargo run --example shuffle_hopf

use pbwfact::{Alphabet, Poly};

fn main() {
    let alphabet = Alphabet::new("ab").expect("distinct letters");
    let word = |s: &str| Poly::word(&alphabet, alphabet.word(s).expect("word over ab"));

    let a = word("a");
    let b = word("b");
    let ab = word("ab");

    println!("concatenation  a·b       = {}", a.conc_mul(&b));
    println!("shuffle        a ⧢ b     = {}", a.shuffle(&b));
    println!("shuffle        a ⧢ a     = {}", a.shuffle(&a));
    println!("shuffle        ab ⧢ a    = {}", ab.shuffle(&a));
    println!("antipode       S(ab)     = {}", ab.antipode());
    println!("coproduct      Δ(ab)     = {}", ab.coproduct());

    // the coproduct is dual to the shuffle: ⟨u ⧢ v, w⟩ = ⟨u⊗v, Δ(w)⟩
    let u = word("ab");
    let v = word("a");
    let w = alphabet.word("aba").expect("word");
    let lhs = u.shuffle(&v).coeff(&w);
    let rhs = Poly::word(&alphabet, w.clone())
        .coproduct()
        .coeff(&alphabet.word("ab").unwrap(), &alphabet.word("a").unwrap());
    println!("duality        ⟨ab ⧢ a, aba⟩ = {lhs} = ⟨ab⊗a, Δ(aba)⟩ = {rhs}");
    assert_eq!(lhs, rhs);

    // pairing examples: words are orthonormal
    let p = word("ab").add(&word("ba"));
    let q = word("ab").sub(&word("ba"));
    println!("pairing        ⟨ab+ba, ab−ba⟩ = {}", p.pairing(&q));

    // serialized form: JSON object mapping word strings to rationals
    println!("serialized     ab − ba   = {}", q.to_json());
}
