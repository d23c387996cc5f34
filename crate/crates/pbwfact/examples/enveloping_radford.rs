//! The enveloping-algebra engine on structure constants: PBW normal
//! ordering, the binomial coproduct, multiplicativity of the rescaled dual
//! family, the factorization of Σ S_α⊗B^α into generator exponentials, and
//! the product-recovery experiment for a perturbed dual basis.
//!
//! Run with: cargo run --example enveloping_radford

use pbwfact::enveloping::{radford_to_pbw_experiment, RadfordFamily};
use pbwfact::{Enveloping, LieAlgebra, MultiIndex, ProductOrder};

fn main() {
    let env = Enveloping::new(LieAlgebra::sl2());
    let names = env.lie().names();

    // straightening: e·f picks up the bracket term, f·e is already ordered
    println!("normal_order(e f) = {}", env.normal_order(&[0, 2]).format_with(names));
    println!("normal_order(f e) = {}", env.normal_order(&[2, 0]).format_with(names));

    // Δ(B^{e+f}) by the closed binomial formula
    let ef = MultiIndex::from_pairs([(0, 1), (2, 1)]);
    let d = env.coproduct(&pbwfact::UElement::basis(ef));
    println!("Δ(f e) has {} terms, all coefficients 1", d.num_terms());

    // T_α = α!·S_α is multiplicative under convolution
    let radford = env.verify_radford_multiplicativity(4);
    println!(
        "Radford multiplicativity to degree 4: {} checks, {} violations",
        radford.checks_run,
        radford.violations.len()
    );
    assert!(radford.is_pass());

    // Σ S_α⊗B^α = exp(S_f⊗f)·exp(S_h⊗h)·exp(S_e⊗e), decreasing order only
    let good = env.verify_theorem1(3, ProductOrder::Decreasing);
    println!(
        "factorization at degree 3 (decreasing): tensor equal = {}, Φ = identity: {}",
        good.tensor_equal, good.phi_identity
    );
    assert!(good.is_pass());
    let bad = env.verify_theorem1(2, ProductOrder::Increasing);
    println!(
        "factorization at degree 2 (increasing): {} mismatched keys, e.g. {:?}",
        bad.mismatches.len(),
        bad.mismatches.first().map(|m| format!("S_{} ⊗ B^{}", m.left, m.right)),
    );
    assert!(!bad.is_pass());

    // product recovery: the PBW-derived family reproduces every B^α ...
    let family = RadfordFamily::pbw(&env, 3);
    let report = radford_to_pbw_experiment(&env, &family, 3).expect("family validates");
    println!(
        "PBW family: primitives ok = {}, independent = {}, {} products all recovered",
        report.primitives_ok, report.independent, report.products_checked
    );
    assert!(report.is_pass());

    // ... while the perturbed basis B[e²] = B^{e²} + B^h fails exactly there
    let perturbed = RadfordFamily::perturbed_pbw(&env, 2);
    let report = radford_to_pbw_experiment(&env, &perturbed, 2).expect("validates at weight 2");
    println!(
        "perturbed family: primitives ok = {}, independent = {}, mismatches at {:?}",
        report.primitives_ok, report.independent, report.product_mismatches
    );
    assert_eq!(report.product_mismatches, vec!["e^2".to_string()]);
}
