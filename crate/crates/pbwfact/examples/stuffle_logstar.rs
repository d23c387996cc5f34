//! The quasi-shuffle algebra on Y = {y1, y2, ...}: the stuffle product and
//! its dual coproduct, the convolution-logarithm projector onto primitive
//! elements, and the exact dimension audit of the primitives per weight.
//!
//! Run with: cargo run --example stuffle_logstar

use pbwfact::stuffle::{
    check_primitive, log_star_word, primitive_dimensions, stuffle_words, verify_suite,
    words_of_weight, YWord,
};

fn main() {
    println!("y1 ⊞ y1 = {}", stuffle_words(&[1], &[1]));
    println!("y1 ⊞ y2 = {}", stuffle_words(&[1], &[2]));
    println!("y2 ⊞ y2 = {}", stuffle_words(&[2], &[2]));

    for n in [2, 5, 8] {
        println!("words of weight {n}: {}", words_of_weight(n).len());
    }

    // y_p is not primitive for p > 1; log_*(I) repairs it
    for p in 1..=4 {
        let y = YWord::letter(p);
        let image = log_star_word(&y);
        println!(
            "\ny{p}: primitive = {:<5}  log_*(I)(y{p}) = {image}",
            check_primitive(&pbwfact::stuffle::YPoly::word(y.clone())),
        );
        assert!(check_primitive(&image));
    }

    println!("\nprimitive dimensions per weight: {:?}", primitive_dimensions(6));

    let report = verify_suite(5);
    println!(
        "suite at max weight 5: {} checks, {} violations",
        report.checks_run,
        report.violations.len()
    );
    assert!(report.is_pass());
}
