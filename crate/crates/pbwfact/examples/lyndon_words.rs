//! Lyndon words: generation in lexicographic order, recognition, the
//! standard factorization, and the nonincreasing factorization of
//! arbitrary words.
//!
//! Run with: cargo run --example lyndon_words

use pbwfact::{is_lyndon, lyndon_factorization, lyndon_up_to, std_factorization, Alphabet};

fn main() {
    let alphabet = Alphabet::new("ab").expect("distinct letters");

    println!("Lyndon words over {{a<b}} of length ≤ 4:");
    for l in lyndon_up_to(&alphabet, 4) {
        let sigma = if l.len() >= 2 {
            let sf = std_factorization(&l);
            format!(
                "  σ = ({}, {})",
                alphabet.format_word(&sf.left),
                alphabet.format_word(&sf.right)
            )
        } else {
            String::new()
        };
        println!("  {}{}", alphabet.format_word(&l), sigma);
    }

    for s in ["ab", "aa", "ba"] {
        let w = alphabet.word(s).expect("word");
        println!("is_lyndon({s}) = {}", is_lyndon(&w));
    }

    println!("\nnonincreasing Lyndon factorizations:");
    for s in ["ba", "abab", "baabab", "bbabaa"] {
        let w = alphabet.word(s).expect("word");
        let factors: Vec<String> = lyndon_factorization(&w)
            .factors
            .iter()
            .map(|(l, m)| {
                if *m == 1 {
                    alphabet.format_word(l)
                } else {
                    format!("{}^{}", alphabet.format_word(l), m)
                }
            })
            .collect();
        println!("  {s} = {}", factors.join(" · "));
    }
}
