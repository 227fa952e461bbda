//! Exact rationals used for every truth value.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision rational in lowest terms with positive denominator.
pub type Rational = num_rational::BigRational;

pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn zero() -> Rational {
    Rational::zero()
}

pub fn one() -> Rational {
    Rational::one()
}

pub fn half() -> Rational {
    rat(1, 2)
}

/// Parses `p`, `p/q` or `-p/q`. Decimals are not accepted.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let bad = |msg: &str| Error::TruthValue {
        value: text.to_string(),
        msg: msg.to_string(),
    };
    let t = text.trim();
    let (num, den) = match t.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (t, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| bad("numerator is not an integer"))?;
    let den: BigInt = den.parse().map_err(|_| bad("denominator is not an integer"))?;
    if den.is_zero() {
        return Err(bad("zero denominator"));
    }
    Ok(Rational::new(num, den))
}

/// `p/q`, or just `p` for integers.
pub fn fmt_rational(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn in_unit_interval(r: &Rational) -> bool {
    !r.is_negative() && *r <= one()
}

pub fn clamp01(r: Rational) -> Rational {
    if r.is_negative() {
        zero()
    } else if r > one() {
        one()
    } else {
        r
    }
}

/// Smallest integer `>= r`.
pub fn ceil_int(r: &Rational) -> BigInt {
    let (q, rem) = r.numer().div_mod_floor(r.denom());
    if rem.is_zero() {
        q
    } else {
        q + 1
    }
}

/// `ceil(log2(r))` for `r >= 1`; 0 when `r <= 1`.
pub fn ceil_log2(r: &Rational) -> u32 {
    let mut k = 0;
    let mut p = one();
    while p < *r {
        p *= int(2);
        k += 1;
    }
    k
}

/// Integer numerator/denominator pair for compact serialization; falls back
/// to decimal strings when a component exceeds `i64`.
pub fn to_json_parts(r: &Rational) -> (serde_json::Value, serde_json::Value) {
    let part = |b: &BigInt| match b.to_i64() {
        Some(v) => serde_json::Value::from(v),
        None => serde_json::Value::from(b.to_string()),
    };
    (part(r.numer()), part(r.denom()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_format() {
        assert_eq!(parse_rational("2/4").unwrap(), rat(1, 2));
        assert_eq!(parse_rational(" 3 ").unwrap(), int(3));
        assert_eq!(fmt_rational(&rat(6, 3)), "2");
        assert_eq!(fmt_rational(&rat(3, 10)), "3/10");
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("0.5").is_err());
    }

    #[test]
    fn ceilings() {
        assert_eq!(ceil_int(&rat(7, 2)), BigInt::from(4));
        assert_eq!(ceil_int(&rat(4, 2)), BigInt::from(2));
        assert_eq!(ceil_log2(&int(1)), 0);
        assert_eq!(ceil_log2(&int(5)), 3);
        assert_eq!(ceil_log2(&rat(3, 2)), 1);
    }
}
