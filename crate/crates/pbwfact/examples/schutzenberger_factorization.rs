//! Degree-truncated verification that the diagonal series Σ w⊗w factors
//! into the decreasing product of exponentials exp(S_l⊗P_l) over Lyndon
//! words, plus the order controls that break it.
//!
//! Run with: cargo run --example schutzenberger_factorization

use pbwfact::factorization::{
    diagonal_series, schuetzenberger_product, swap_interacting_pair,
    schuetzenberger_product_for_factors,
};
use pbwfact::{verify_sf, Alphabet, ProductOrder};

fn main() {
    let alphabet = Alphabet::new("ab").expect("distinct letters");

    // the two sides at degree 2, small enough to print whole
    let product = schuetzenberger_product(&alphabet, 2);
    let diagonal = diagonal_series(&alphabet, 2);
    println!("∏^↘ exp(S_l⊗P_l) at degree 2 = {product}");
    println!("Σ w⊗w            at degree 2 = {diagonal}");
    assert_eq!(product, diagonal);

    for degree in 1..=4 {
        let report = verify_sf(&alphabet, degree, ProductOrder::Decreasing);
        println!(
            "degree {degree}: {} Lyndon factors, {} = {} terms, {}",
            report.lyndon_count,
            report.terms_lhs,
            report.terms_rhs,
            if report.is_pass() { "equal" } else { "MISMATCH" },
        );
    }

    // one-letter alphabets collapse to Σ x^k ⊗ x^k
    let x = Alphabet::new("x").expect("letter");
    assert!(verify_sf(&x, 6, ProductOrder::Decreasing).is_pass());
    println!("single letter at degree 6: equal");

    // order controls: the increasing product fails, and so does putting the
    // interacting pair (ab, a) out of decreasing order
    let increasing = verify_sf(&alphabet, 3, ProductOrder::Increasing);
    println!(
        "increasing order at degree 3: {} mismatched tensor keys",
        increasing.mismatches.len()
    );
    assert!(!increasing.is_pass());

    let swapped = swap_interacting_pair(&alphabet, 3).expect("interacting pair");
    let broken = schuetzenberger_product_for_factors(&alphabet, 3, &swapped);
    println!(
        "interacting pair transposed: product {} diagonal",
        if broken == diagonal_series(&alphabet, 3) { "equals" } else { "differs from" }
    );
    assert_ne!(broken, diagonal_series(&alphabet, 3));
}
