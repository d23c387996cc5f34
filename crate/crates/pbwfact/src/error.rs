use thiserror::Error;

/// Errors produced by fallible constructors, parsers and loaders.
///
/// Arithmetic preconditions (mixing alphabets, factorizing a non-Lyndon
/// word, ...) are programmer errors and panic instead.
#[derive(Debug, Error)]
pub enum Error {
    #[error("duplicate letter '{0}' in alphabet")]
    DuplicateLetter(char),

    #[error("letter '{0}' is not in the alphabet")]
    UnknownLetter(char),

    #[error("independence relation must be antireflexive: ({0}, {0}) given")]
    ReflexivePair(String),

    #[error("independence pair ({0}, {1}) uses an index outside the alphabet")]
    InvalidPair(usize, usize),

    #[error("alphabet of size {0} exceeds the configured cap {1}")]
    AlphabetCap(usize, usize),

    #[error("malformed Lie algebra config: {0}")]
    Config(String),

    #[error("antisymmetry violation for basis pair ({i}, {j})")]
    Antisymmetry { i: usize, j: usize },

    #[error("Jacobi identity fails on basis triple ({i}, {j}, {k})")]
    Jacobi { i: usize, j: usize, k: usize },

    #[error("dual family fails validation: {0}")]
    FamilyValidation(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
