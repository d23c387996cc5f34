//! Exact rational coefficients.
//!
//! Every coefficient in the crate is an arbitrary-precision rational; no
//! floating point exists anywhere. The wire format is `"p/q"` with `q > 0`
//! and `gcd(p, q) = 1`, or `"p"` alone when `q = 1`, which is exactly what
//! `BigRational`'s `Display`/`FromStr` produce and accept.

use num::{BigInt, BigRational, One};

pub type Coeff = BigRational;

/// Integer as a coefficient.
pub fn q_int(n: i64) -> Coeff {
    Coeff::from_integer(BigInt::from(n))
}

/// Reduced fraction `p/q`; panics on `q == 0`.
pub fn q_ratio(p: i64, q: i64) -> Coeff {
    Coeff::new(BigInt::from(p), BigInt::from(q))
}

pub fn factorial(n: u64) -> BigInt {
    let mut acc = BigInt::one();
    for k in 2..=n {
        acc *= k;
    }
    acc
}

pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::from(0);
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::str::FromStr;

    #[test]
    fn display_matches_wire_format() {
        assert_eq!(q_int(3).to_string(), "3");
        assert_eq!(q_ratio(1, 2).to_string(), "1/2");
        assert_eq!(q_ratio(-2, 4).to_string(), "-1/2");
        assert_eq!(q_ratio(2, -4).to_string(), "-1/2");
        assert_eq!(q_int(0).to_string(), "0");
    }

    #[test]
    fn parse_round_trip() {
        for s in ["3", "-7/2", "0", "1/3"] {
            let c = Coeff::from_str(s).unwrap();
            assert_eq!(c.to_string(), s);
        }
    }

    #[test]
    fn factorial_and_binomial() {
        assert_eq!(factorial(0), BigInt::from(1));
        assert_eq!(factorial(5), BigInt::from(120));
        assert_eq!(binomial(6, 3), BigInt::from(20));
        assert_eq!(binomial(4, 5), BigInt::from(0));
    }
}
