//! Big rationals and their text formats.
//!
//! [`Rational`] is `num_rational::BigRational`, which already keeps values
//! reduced with a positive denominator, so structural equality is value
//! equality. This module adds parsing (`"num/den"` and exact decimal
//! literals), the canonical `"num/den"` rendering used by every JSON file, and
//! outward-rounded decimal printing.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::cmp::Ordering;

use crate::error::{Error, Result};

pub type Rational = num_rational::BigRational;

/// Sign of an exact quantity.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Negative,
    Zero,
    Positive,
}

impl Sign {
    pub fn of_ordering(o: Ordering) -> Sign {
        match o {
            Ordering::Less => Sign::Negative,
            Ordering::Equal => Sign::Zero,
            Ordering::Greater => Sign::Positive,
        }
    }

    pub fn of_rational(r: &Rational) -> Sign {
        if r.is_zero() {
            Sign::Zero
        } else if r.is_negative() {
            Sign::Negative
        } else {
            Sign::Positive
        }
    }

    pub fn as_i8(self) -> i8 {
        match self {
            Sign::Negative => -1,
            Sign::Zero => 0,
            Sign::Positive => 1,
        }
    }

    pub fn flip(self) -> Sign {
        match self {
            Sign::Negative => Sign::Positive,
            Sign::Zero => Sign::Zero,
            Sign::Positive => Sign::Negative,
        }
    }
}

/// `n/d` as a rational. Panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Parses `"num/den"`, a plain integer, or an exact decimal such as `"2.025"`
/// or `"-1e-6"`. Decimals are converted with a power-of-ten denominator; no
/// binary floating point is involved.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("not a rational: `{s}`"));
    if s.is_empty() {
        return Err(bad());
    }
    if let Some((n, d)) = s.split_once('/') {
        let n: BigInt = n.trim().parse().map_err(|_| bad())?;
        let d: BigInt = d.trim().parse().map_err(|_| bad())?;
        if d.is_zero() {
            return Err(Error::DivisionByZero);
        }
        return Ok(Rational::new(n, d));
    }
    let (mantissa, exponent) = match s.find(['e', 'E']) {
        Some(i) => {
            let e: i64 = s[i + 1..].parse().map_err(|_| bad())?;
            (&s[..i], e)
        }
        None => (s, 0),
    };
    let (negative, body) = match mantissa.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, mantissa.strip_prefix('+').unwrap_or(mantissa)),
    };
    let (int_part, frac_part) = body.split_once('.').unwrap_or((body, ""));
    if int_part.is_empty() && frac_part.is_empty() {
        return Err(bad());
    }
    if !int_part
        .chars()
        .chain(frac_part.chars())
        .all(|c| c.is_ascii_digit())
    {
        return Err(bad());
    }
    let digits = format!("{int_part}{frac_part}");
    let mut numer: BigInt = if digits.is_empty() {
        BigInt::zero()
    } else {
        digits.parse().map_err(|_| bad())?
    };
    if negative {
        numer = -numer;
    }
    let scale = exponent - frac_part.len() as i64;
    let ten = BigInt::from(10u32);
    let r = if scale >= 0 {
        Rational::from_integer(numer * num_traits::pow(ten, scale as usize))
    } else {
        Rational::new(numer, num_traits::pow(ten, (-scale) as usize))
    };
    Ok(r)
}

/// Canonical `"num/den"` rendering (the denominator is always written).
pub fn fmt_rational(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Rounding {
    Down,
    Up,
    Nearest,
}

/// Decimal rendering with `digits` fractional digits.
pub fn fmt_decimal(r: &Rational, digits: usize, rounding: Rounding) -> String {
    let scale = num_traits::pow(BigInt::from(10u32), digits);
    let scaled = r * Rational::from_integer(scale.clone());
    let q = match rounding {
        Rounding::Down => scaled.floor(),
        Rounding::Up => scaled.ceil(),
        Rounding::Nearest => scaled.round(),
    }
    .to_integer();
    let negative = q.is_negative();
    let (whole, frac) = q.abs().div_rem(&scale);
    let sign = if negative { "-" } else { "" };
    if digits == 0 {
        format!("{sign}{whole}")
    } else {
        format!(
            "{sign}{whole}.{:0>width$}",
            frac.to_string(),
            width = digits
        )
    }
}

pub fn to_f64(r: &Rational) -> f64 {
    r.to_f64().unwrap_or_else(|| {
        // Huge numerators or denominators: fall back to a scaled division.
        let n = r.numer().to_f64().unwrap_or(f64::NAN);
        let d = r.denom().to_f64().unwrap_or(f64::NAN);
        n / d
    })
}

/// Rational with a power-of-two denominator close to `v`, rounded in the
/// requested direction. Used to turn floating-point guesses into exact
/// bracket endpoints.
pub fn dyadic_near(v: f64, bits: u32, rounding: Rounding) -> Rational {
    let scale = (2f64).powi(bits as i32);
    let s = v * scale;
    let n = match rounding {
        Rounding::Down => s.floor(),
        Rounding::Up => s.ceil(),
        Rounding::Nearest => s.round(),
    };
    Rational::new(
        BigInt::from(n as i128),
        num_traits::pow(BigInt::from(2u32), bits as usize),
    )
}

pub fn midpoint(a: &Rational, b: &Rational) -> Rational {
    (a + b) / int(2)
}

/// Smallest `k` with `2^-k <= tol`.
pub fn bits_for_tolerance(tol: &Rational) -> u32 {
    let mut k = 0u32;
    let mut w = Rational::one();
    while &w > tol {
        w /= int(2);
        k += 1;
    }
    k
}

/// Exact square root of a nonnegative rational, if it is a perfect square.
pub fn rational_sqrt(r: &Rational) -> Option<Rational> {
    if r.is_negative() {
        return None;
    }
    let n = r.numer().sqrt();
    let d = r.denom().sqrt();
    if &(&n * &n) == r.numer() && &(&d * &d) == r.denom() {
        Some(Rational::new(n, d))
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_fractions_and_decimals() {
        assert_eq!(parse_rational("136/67").unwrap(), rat(136, 67));
        assert_eq!(parse_rational("-4/6").unwrap(), rat(-2, 3));
        assert_eq!(parse_rational("2.025").unwrap(), rat(81, 40));
        assert_eq!(parse_rational("1e-6").unwrap(), rat(1, 1_000_000));
        assert_eq!(parse_rational("-.5").unwrap(), rat(-1, 2));
        assert_eq!(parse_rational("7").unwrap(), int(7));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("abc").is_err());
        assert!(parse_rational("").is_err());
        assert!(parse_rational("1.2.3").is_err());
    }

    #[test]
    fn zero_is_canonical() {
        let z = rat(0, -5);
        assert_eq!(fmt_rational(&z), "0/1");
        assert_eq!(fmt_rational(&rat(3, -6)), "-1/2");
    }

    #[test]
    fn decimal_rounding_is_outward() {
        let r = rat(2, 3);
        assert_eq!(fmt_decimal(&r, 3, Rounding::Down), "0.666");
        assert_eq!(fmt_decimal(&r, 3, Rounding::Up), "0.667");
        assert_eq!(fmt_decimal(&-r.clone(), 3, Rounding::Down), "-0.667");
        assert_eq!(fmt_decimal(&int(2), 2, Rounding::Nearest), "2.00");
    }

    #[test]
    fn perfect_squares() {
        assert_eq!(rational_sqrt(&rat(9, 16)), Some(rat(3, 4)));
        assert_eq!(rational_sqrt(&rat(5, 4)), None);
        assert_eq!(rational_sqrt(&rat(-1, 4)), None);
    }

    #[test]
    fn tolerance_bits() {
        assert_eq!(bits_for_tolerance(&rat(1, 8)), 3);
        assert_eq!(bits_for_tolerance(&rat(1, 10)), 4);
        assert_eq!(bits_for_tolerance(&int(2)), 0);
    }
}
