//! Exact rational scalars.
//!
//! `Rational` is `num_rational::BigRational`: arbitrary-precision, always
//! stored reduced with a positive denominator, which is exactly the invariant
//! the rest of the library relies on.

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, Zero};

pub type Rational = num_rational::BigRational;
pub type Integer = BigInt;

/// Rational from an integer pair. Panics if `den == 0`.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Rational from an integer.
pub fn rat_int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Max of |numerator| and denominator, as a crude height measure used to
/// prefer small sample points.
pub fn height(q: &Rational) -> BigUint {
    let n = q.numer().abs().to_biguint().unwrap();
    let d = q.denom().abs().to_biguint().unwrap();
    n.max(d)
}

/// Parses "p", "-p", or "p/q". Used by the polynomial text parser.
pub fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().ok()?;
            let d: BigInt = d.trim().parse().ok()?;
            if d.is_zero() {
                None
            } else {
                Some(Rational::new(n, d))
            }
        }
        None => {
            let n: BigInt = s.parse().ok()?;
            Some(Rational::from_integer(n))
        }
    }
}

/// Renders reduced `p/q`, or just `p` when the denominator is one.
pub fn format_rational(q: &Rational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_format_round_trip() {
        for s in ["3", "-7", "22/7", "-101977/3375", "0"] {
            let q = parse_rational(s).unwrap();
            assert_eq!(format_rational(&q), s);
        }
        assert!(parse_rational("1/0").is_none());
        assert!(parse_rational("x").is_none());
    }

    #[test]
    fn normalization_invariants() {
        let q = Rational::new(BigInt::from(4), BigInt::from(-6));
        assert_eq!(format_rational(&q), "-2/3");
        assert!(q.denom().is_positive());
    }
}
