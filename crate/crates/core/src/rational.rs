//! Helpers on top of `num::BigRational`, the exact scalar field used for
//! all coordinates. Rationals cross external interfaces as reduced
//! `"num/den"` strings (plain digits when the denominator is 1).

use num::bigint::{BigInt, Sign};

use num::{BigRational, One, Signed, ToPrimitive, Zero};

use crate::error::Error;

/// Shorthand for a rational `n/d` from machine integers.
pub fn ratio(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Shorthand for a whole rational.
pub fn int(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// Parses a reduced-or-not `"num/den"` or `"num"` string.
pub fn parse_rational(s: &str) -> Result<BigRational, Error> {
    s.parse::<BigRational>()
        .map_err(|e| Error::Parse(format!("invalid rational {s:?}: {e}")))
}

/// `|r|^p` computed exactly.
pub fn abs_pow(r: &BigRational, p: u32) -> BigRational {
    let a = r.abs();
    BigRational::new(a.numer().pow(p), a.denom().pow(p))
}

/// The exact p-th root of a non-negative rational, if it is one.
pub fn exact_root(w: &BigRational, p: u32) -> Option<BigRational> {
    if w.is_negative() {
        return None;
    }
    if w.is_zero() {
        return Some(BigRational::zero());
    }
    let root_of = |n: &BigInt| -> Option<BigInt> {
        let r = n.nth_root(p);
        (r.pow(p) == *n).then_some(r)
    };
    let numer = root_of(w.numer())?;
    let denom = root_of(w.denom())?;
    Some(BigRational::new(numer, denom))
}

/// Best-effort `f64` value of a rational.
pub fn to_f64(r: &BigRational) -> f64 {
    r.to_f64().unwrap_or_else(|| {
        if r.numer().sign() == Sign::Minus {
            f64::NEG_INFINITY
        } else {
            f64::INFINITY
        }
    })
}

/// `r^(1/p)` as `f64`.
pub fn root_f64(r: &BigRational, p: u32) -> f64 {
    if p == 1 {
        to_f64(r)
    } else {
        to_f64(r).powf(1.0 / f64::from(p))
    }
}

/// Sign of a nonzero rational as `+1` or `-1`.
pub fn sign_of(r: &BigRational) -> i8 {
    debug_assert!(!r.is_zero());
    if r.is_negative() {
        -1
    } else {
        1
    }
}

pub fn one() -> BigRational {
    BigRational::one()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_print() {
        assert_eq!(parse_rational("3/5").unwrap(), ratio(3, 5));
        assert_eq!(parse_rational("-1/2").unwrap(), ratio(-1, 2));
        assert_eq!(parse_rational("7").unwrap(), int(7));
        assert_eq!(ratio(80, 25).to_string(), "16/5");
        assert_eq!(int(2).to_string(), "2");
        assert!(parse_rational("a/b").is_err());
    }

    #[test]
    fn powers_and_roots() {
        assert_eq!(abs_pow(&ratio(-3, 5), 2), ratio(9, 25));
        assert_eq!(exact_root(&ratio(9, 25), 2), Some(ratio(3, 5)));
        assert_eq!(exact_root(&ratio(27, 216), 3), Some(ratio(1, 2)));
        assert_eq!(exact_root(&ratio(1, 2), 2), None);
        assert_eq!(exact_root(&int(0), 3), Some(int(0)));
    }
}
