//! Exact symbolic algebra for triangular bases of Poincaré–Birkhoff–Witt
//! type and their dual families, with degree-truncated verification of the
//! factorization of the diagonal series Σ w⊗w into an ordered product of
//! exponentials ∏^↘ exp(S_l⊗P_l).
//!
//! Four settings share one engine:
//!
//! - the free algebra k⟨X⟩ over a totally ordered alphabet, with Lyndon
//!   words, bracketed P_w and shuffle-built S_w ([`lyndon`], [`pbw`],
//!   [`factorization`]);
//! - free partially commutative (trace) monoids M(X,θ), with normal forms,
//!   partially commutative Lyndon words and their standard factorization
//!   ([`trace`]);
//! - the quasi-shuffle algebra on Y = {y₁, y₂, …}, with the convolution
//!   logarithm projecting onto primitive elements ([`stuffle`]);
//! - an arbitrary Lie algebra given by structure constants, through PBW
//!   normal ordering, the dual family S_α and its multiplicative rescaling
//!   ([`lie`], [`enveloping`]).
//!
//! Every coefficient is an arbitrary-precision rational and every check is
//! an exact equality; infinite sums and products are realized by explicit
//! degree truncation. See the `examples/` directory for one runnable
//! walkthrough per capability, and the `pbwfact` binary for the
//! verification suites as subcommands.

pub mod cli;
pub mod enveloping;
pub mod error;
pub mod factorization;
pub mod lie;
pub mod linalg;
pub mod lyndon;
pub mod multiindex;
pub mod pbw;
pub mod poly;
pub mod rational;
pub mod report;
pub mod stuffle;
pub mod tensor;
pub mod trace;
pub mod word;

pub use enveloping::{
    radford_to_pbw_experiment, DualForm, Enveloping, RadfordFamily, UElement, UTensor,
};
pub use error::{Error, Result};
pub use factorization::{
    commutative_power_check, diagonal_series, schuetzenberger_product, truncated_exp, verify_sf,
    ProductOrder, SfReport,
};
pub use lie::LieAlgebra;
pub use lyndon::{is_lyndon, lyndon_factorization, lyndon_up_to, std_factorization};
pub use multiindex::MultiIndex;
pub use pbw::{DualityReport, PbwBasis};
pub use poly::Poly;
pub use rational::Coeff;
pub use tensor::{TensorPoly, WordProduct};
pub use trace::{Independence, Trace, TraceBasis, TraceMonoid};
pub use word::{Alphabet, Word};
