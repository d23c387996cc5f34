//! Free partially commutative monoids: lexicographic normal forms,
//! partially commutative Lyndon traces with their standard factorization,
//! and the trace version of the diagonal-series factorization, including
//! both degenerate specializations.
//!
//! Run with: cargo run --example trace_monoid

use pbwfact::{Alphabet, Independence, TraceMonoid};

fn main() {
    let alphabet = Alphabet::new("abc").expect("distinct letters");
    let theta = Independence::from_letter_pairs(&alphabet, &[('a', 'c')]).expect("pairs");
    let monoid = TraceMonoid::new(&alphabet, theta).expect("within caps");

    for s in ["ca", "cab", "bca", "abc"] {
        let w = alphabet.word(s).expect("word");
        println!("normal form of {s}: {}", alphabet.format_word(monoid.normal_form(&w).word()));
    }

    let lyndon = monoid.pc_lyndon_up_to(3);
    let names: Vec<String> =
        lyndon.iter().map(|t| alphabet.format_word(t.word())).collect();
    println!("\npc-Lyndon traces of length ≤ 3 with (a,c) commuting: {names:?}");
    for t in &lyndon {
        if t.len() >= 2 {
            let (f, n) = monoid.std_factorization(t);
            println!(
                "  σ({}) = ({}, {})",
                alphabet.format_word(t.word()),
                alphabet.format_word(f.word()),
                alphabet.format_word(n.word())
            );
        }
    }

    let report = monoid.verify_sf_trace(3);
    println!(
        "\nfactorization at degree 3: {} factors, {} = {} terms, {}",
        report.pc_lyndon_count,
        report.terms_lhs,
        report.terms_rhs,
        if report.is_pass() { "equal" } else { "MISMATCH" },
    );
    assert!(report.is_pass());

    // θ = ∅ reproduces the free algebra, full θ the commutative one
    let free = TraceMonoid::new(&Alphabet::new("ab").unwrap(), Independence::empty()).unwrap();
    assert!(free.verify_sf_trace(4).is_pass());
    println!("free specialization (θ=∅) at degree 4: equal");

    let xy = Alphabet::new("xy").unwrap();
    let commutative = TraceMonoid::new(&xy, Independence::full(2)).unwrap();
    let report = commutative.verify_sf_trace(5);
    println!(
        "commutative specialization (full θ) at degree 5: {} monomials, {}",
        report.terms_rhs,
        if report.is_pass() { "equal" } else { "MISMATCH" },
    );
    assert!(report.is_pass());
}
