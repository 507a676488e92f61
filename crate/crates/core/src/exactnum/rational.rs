//! Text encoding of rationals as `"p/q"` (or `"p"` for integers).

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub fn parse_rational(text: &str) -> Result<BigRational> {
    let bad = || Error::InvalidRational(text.to_string());
    let t = text.trim();
    let (num, den) = match t.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (t, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = den.parse().map_err(|_| bad())?;
    if den.is_zero() {
        return Err(bad());
    }
    Ok(BigRational::new(num, den))
}

/// Canonical text: reduced, positive denominator, always `p/q`.
pub fn format_rational(q: &BigRational) -> String {
    format!("{}/{}", q.numer(), q.denom())
}

/// Largest power of two not exceeding a positive rational.
pub fn pow2_floor(q: &BigRational) -> BigRational {
    assert!(q.is_positive(), "pow2_floor needs a positive argument");
    let two = BigRational::from_integer(BigInt::from(2));
    let nb = q.numer().bits() as i64;
    let db = q.denom().bits() as i64;
    let mut e = nb - db;
    let pow = |e: i64| -> BigRational {
        if e >= 0 {
            BigRational::from_integer(BigInt::one() << (e as usize))
        } else {
            BigRational::new(BigInt::one(), BigInt::one() << ((-e) as usize))
        }
    };
    let mut p = pow(e);
    while &p > q {
        e -= 1;
        p = pow(e);
    }
    while &(&p * &two) <= q {
        p = &p * &two;
    }
    p
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn parse_and_format() {
        assert_eq!(parse_rational("6/4").unwrap(), r(3, 2));
        assert_eq!(parse_rational("-7").unwrap(), r(-7, 1));
        assert_eq!(parse_rational(" 1 / -2 ").unwrap(), r(-1, 2));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("0.5").is_err());
        assert_eq!(format_rational(&r(-6, 4)), "-3/2");
        assert_eq!(format_rational(&r(2, 1)), "2/1");
    }

    #[test]
    fn pow2_floor_bounds() {
        assert_eq!(pow2_floor(&r(3, 10)), r(1, 4));
        assert_eq!(pow2_floor(&r(1, 4)), r(1, 4));
        assert_eq!(pow2_floor(&r(7, 1)), r(4, 1));
        assert_eq!(pow2_floor(&r(1, 3)), r(1, 4));
    }
}
