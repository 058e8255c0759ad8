//! Arbitrary-precision rational scalars.
//!
//! `num_rational::BigRational` already maintains the canonical form we need
//! (reduced fraction, positive denominator), so the coefficient type is an
//! alias plus a few constructors and conversions used throughout the crate.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

pub type Rat = BigRational;

/// `rat(n, d)` builds the reduced fraction n/d. Panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> Rat {
    assert!(d != 0, "zero denominator");
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rat {
    BigRational::from_integer(BigInt::from(n))
}

/// Exact conversion of a finite f64 into a rational (mantissa/2^k).
pub fn from_f64_exact(x: f64) -> Option<Rat> {
    BigRational::from_float(x)
}

pub fn to_f64(r: &Rat) -> f64 {
    // `to_f64` on huge numerators can overflow to inf; split as quotient of
    // floats only when both parts fit, otherwise fall back to a scaled form.
    r.to_f64().unwrap_or_else(|| {
        let n = r.numer().to_f64().unwrap_or(f64::INFINITY * sign_of(r));
        let d = r.denom().to_f64().unwrap_or(f64::INFINITY);
        n / d
    })
}

fn sign_of(r: &Rat) -> f64 {
    if r.is_negative() {
        -1.0
    } else {
        1.0
    }
}

/// Canonical text form: `p` or `p/q` with q > 1, minus sign on the numerator.
pub fn format_rat(r: &Rat) -> String {
    if r.denom().is_one() {
        format!("{}", r.numer())
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn is_zero(r: &Rat) -> bool {
    r.is_zero()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_form() {
        let r = rat(2, -4);
        assert_eq!(format_rat(&r), "-1/2");
        assert!(r.denom() > &BigInt::from(0));
        assert_eq!(rat(3, 3), int(1));
    }

    #[test]
    fn f64_round_trip_is_exact() {
        let x = 0.1 + 0.2;
        let r = from_f64_exact(x).unwrap();
        assert_eq!(to_f64(&r), x);
    }
}
