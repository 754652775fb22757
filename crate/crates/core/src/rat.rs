//! Exact rational scalars.
//!
//! Everything in this crate computes over `Rat`, an arbitrary-precision
//! rational kept in lowest terms with a positive denominator. There is no
//! floating-point mode anywhere: equality of two results means literal
//! equality of reduced fractions.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::KernelError;

/// Arbitrary-precision rational number.
///
/// `BigRational` already maintains the invariants we need (lowest terms,
/// denominator > 0), so the kernel uses it directly.
pub type Rat = BigRational;

/// Rational from an integer pair. Panics on `den == 0`.
pub fn rat(num: i64, den: i64) -> Rat {
    assert!(den != 0, "rational with zero denominator");
    Rat::new(BigInt::from(num), BigInt::from(den))
}

/// Rational from an integer.
pub fn rat_int(num: i64) -> Rat {
    Rat::from_integer(BigInt::from(num))
}

/// Parse a rational literal of the form `p` or `p/q` (optional leading `-`).
pub fn parse_rat(text: &str) -> Result<Rat, KernelError> {
    let s = text.trim();
    let bad = || KernelError::BadRational(text.to_string());
    let (num_s, den_s) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), Some(d.trim())),
        None => (s, None),
    };
    let num: BigInt = num_s.parse().map_err(|_| bad())?;
    let den: BigInt = match den_s {
        Some(d) => d.parse().map_err(|_| bad())?,
        None => BigInt::one(),
    };
    if den.is_zero() {
        return Err(bad());
    }
    Ok(Rat::new(num, den))
}

/// Canonical display form: `p` for integers, `p/q` otherwise, `-` in front.
pub fn fmt_rat(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// True when `r` is negative; used by the sign-aware polynomial printers.
pub fn is_negative(r: &Rat) -> bool {
    r.is_negative()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_display_round_trip() {
        for s in ["0", "5", "-3", "2/3", "-7/4", "10/5"] {
            let r = parse_rat(s).unwrap();
            let back = parse_rat(&fmt_rat(&r)).unwrap();
            assert_eq!(r, back);
        }
        assert_eq!(fmt_rat(&parse_rat("10/5").unwrap()), "2");
        assert_eq!(fmt_rat(&parse_rat("-4/6").unwrap()), "-2/3");
    }

    #[test]
    fn rejects_malformed_literals() {
        for s in ["", "1/0", "a", "1//2", "1/ /2"] {
            assert!(parse_rat(s).is_err(), "expected failure on {s:?}");
        }
    }

    #[test]
    fn reciprocal_product_is_one() {
        let r = rat(-21, 35);
        assert_eq!(r.clone() * r.recip(), rat_int(1));
    }
}
