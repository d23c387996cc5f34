//! The triangular family P_w (bracketing over the standard factorization)
//! and its dual family S_w (shuffle powers over the Lyndon factorization),
//! with the exhaustive ⟨S_u, P_v⟩ = δ audit.
//!
//! Run with: cargo run --example pbw_dual_bases

use pbwfact::{Alphabet, PbwBasis};

fn main() {
    let alphabet = Alphabet::new("ab").expect("distinct letters");
    let mut basis = PbwBasis::new(&alphabet);

    println!("word w     P_w                           S_w");
    for s in ["a", "b", "ab", "ba", "aab", "abb", "bba"] {
        let w = alphabet.word(s).expect("word");
        println!("{:<10} {:<29} {}", s, basis.p(&w).to_string(), basis.s(&w));
    }

    // P_w = w + (lexicographically larger words)
    for s in ["ab", "aab", "abab"] {
        let w = alphabet.word(s).expect("word");
        assert!(basis.check_triangular(&w));
        println!("triangular at {s}: ok");
    }

    // Kronecker duality over every pair of words of length ≤ 5
    let report = basis.check_duality(5, false);
    println!(
        "duality audit: {} pairs checked, {} violations",
        report.pairs_checked,
        report.violations.len()
    );
    assert!(report.is_pass());
}
