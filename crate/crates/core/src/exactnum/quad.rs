//! Elements `a + b*sqrt(d)` of a real quadratic field with exact signs.

use num_traits::{One, Signed, Zero};
use std::cmp::Ordering;
use std::fmt;

use super::rational::{fmt_rational, rational_sqrt, to_f64, Rational, Sign};
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QuadExt {
    a: Rational,
    b: Rational,
    d: Rational,
}

impl QuadExt {
    /// `a + b*sqrt(d)`. The radicand must be positive and not the square of a
    /// rational; perfect squares should be folded into a plain rational.
    pub fn new(a: Rational, b: Rational, d: Rational) -> Result<QuadExt> {
        if !d.is_positive() || rational_sqrt(&d).is_some() {
            return Err(Error::InvalidRadicand(fmt_rational(&d)));
        }
        Ok(QuadExt { a, b, d })
    }

    /// Embeds a rational into the field with radicand `d` (already valid).
    pub fn from_rational(a: Rational, d: &Rational) -> QuadExt {
        QuadExt {
            a,
            b: Rational::zero(),
            d: d.clone(),
        }
    }

    /// `sqrt(d)` itself.
    pub fn sqrt(d: Rational) -> Result<QuadExt> {
        QuadExt::new(Rational::zero(), Rational::one(), d)
    }

    pub fn base(&self) -> &Rational {
        &self.a
    }

    pub fn coeff(&self) -> &Rational {
        &self.b
    }

    pub fn radicand(&self) -> &Rational {
        &self.d
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    /// Exact sign, decided by comparing `a^2` with `b^2 d`.
    pub fn sign(&self) -> Sign {
        let sa = Sign::of_rational(&self.a);
        let sb = Sign::of_rational(&self.b);
        match (sa, sb) {
            (_, Sign::Zero) => sa,
            (Sign::Zero, _) => sb,
            _ if sa == sb => sa,
            _ => {
                let a2 = &self.a * &self.a;
                let b2d = &self.b * &self.b * &self.d;
                match a2.cmp(&b2d) {
                    Ordering::Greater => sa,
                    Ordering::Less => sb,
                    // impossible for a non-square radicand with a, b != 0
                    Ordering::Equal => Sign::Zero,
                }
            }
        }
    }

    fn check(&self, other: &QuadExt) -> Result<()> {
        if self.d == other.d {
            Ok(())
        } else {
            Err(Error::RadicandMismatch(
                fmt_rational(&self.d),
                fmt_rational(&other.d),
            ))
        }
    }

    pub fn checked_add(&self, o: &QuadExt) -> Result<QuadExt> {
        self.check(o)?;
        Ok(self.with(&self.a + &o.a, &self.b + &o.b))
    }

    pub fn checked_sub(&self, o: &QuadExt) -> Result<QuadExt> {
        self.check(o)?;
        Ok(self.with(&self.a - &o.a, &self.b - &o.b))
    }

    pub fn checked_mul(&self, o: &QuadExt) -> Result<QuadExt> {
        self.check(o)?;
        let a = &self.a * &o.a + &self.b * &o.b * &self.d;
        let b = &self.a * &o.b + &self.b * &o.a;
        Ok(self.with(a, b))
    }

    pub fn checked_div(&self, o: &QuadExt) -> Result<QuadExt> {
        self.check(o)?;
        self.checked_mul(&o.recip()?)
    }

    pub fn recip(&self) -> Result<QuadExt> {
        let norm = self.norm();
        if norm.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(self.with(&self.a / &norm, -(&self.b / &norm)))
    }

    pub fn conj(&self) -> QuadExt {
        self.with(self.a.clone(), -self.b.clone())
    }

    /// `a^2 - b^2 d`, the field norm.
    pub fn norm(&self) -> Rational {
        &self.a * &self.a - &self.b * &self.b * &self.d
    }

    pub fn add_rational(&self, r: &Rational) -> QuadExt {
        self.with(&self.a + r, self.b.clone())
    }

    pub fn scale(&self, r: &Rational) -> QuadExt {
        self.with(&self.a * r, &self.b * r)
    }

    pub fn neg(&self) -> QuadExt {
        self.with(-self.a.clone(), -self.b.clone())
    }

    pub fn to_f64(&self) -> f64 {
        to_f64(&self.a) + to_f64(&self.b) * to_f64(&self.d).sqrt()
    }

    fn with(&self, a: Rational, b: Rational) -> QuadExt {
        QuadExt {
            a,
            b,
            d: self.d.clone(),
        }
    }
}

impl fmt::Display for QuadExt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} + {}*sqrt({})",
            fmt_rational(&self.a),
            fmt_rational(&self.b),
            fmt_rational(&self.d)
        )
    }
}

impl fmt::Debug for QuadExt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QuadExt({self})")
    }
}

/// Exact sign of `a + b*sqrt(d)`.
pub fn quad_sign(q: &QuadExt) -> Sign {
    q.sign()
}

/// A value that is either rational or lives in one quadratic field. Used
/// where a square root may or may not be rational depending on the input.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Surd {
    Rational(Rational),
    Quad(QuadExt),
}

impl Surd {
    /// `a + b*sqrt(d)`, folding perfect-square radicands into a rational.
    pub fn new(a: Rational, b: Rational, d: Rational) -> Result<Surd> {
        if d.is_negative() {
            return Err(Error::InvalidRadicand(fmt_rational(&d)));
        }
        match rational_sqrt(&d) {
            Some(r) => Ok(Surd::Rational(a + b * r)),
            None => Ok(Surd::Quad(QuadExt::new(a, b, d)?)),
        }
    }

    pub fn sign(&self) -> Sign {
        match self {
            Surd::Rational(r) => Sign::of_rational(r),
            Surd::Quad(q) => q.sign(),
        }
    }

    pub fn to_f64(&self) -> f64 {
        match self {
            Surd::Rational(r) => to_f64(r),
            Surd::Quad(q) => q.to_f64(),
        }
    }

    /// `self - r`.
    pub fn sub_rational(&self, r: &Rational) -> Surd {
        match self {
            Surd::Rational(a) => Surd::Rational(a - r),
            Surd::Quad(q) => Surd::Quad(q.add_rational(&-r.clone())),
        }
    }

    /// Exact comparison `self` vs `other` (same radicand when both are surds).
    pub fn cmp_surd(&self, other: &Surd) -> Result<Ordering> {
        let diff = match (self, other) {
            (Surd::Rational(a), Surd::Rational(b)) => Sign::of_rational(&(a - b)),
            (Surd::Quad(a), Surd::Rational(b)) => a.add_rational(&-b.clone()).sign(),
            (Surd::Rational(a), Surd::Quad(b)) => b.add_rational(&-a.clone()).sign().flip(),
            (Surd::Quad(a), Surd::Quad(b)) => a.checked_sub(b)?.sign(),
        };
        Ok(match diff {
            Sign::Negative => Ordering::Less,
            Sign::Zero => Ordering::Equal,
            Sign::Positive => Ordering::Greater,
        })
    }
}

impl fmt::Display for Surd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Surd::Rational(r) => write!(f, "{}", fmt_rational(r)),
            Surd::Quad(q) => write!(f, "{q}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::super::rational::{int, rat};
    use super::*;

    #[test]
    fn signs() {
        let one = QuadExt::new(int(1), int(0), int(2)).unwrap();
        assert_eq!(one.sign(), Sign::Positive);
        let q = QuadExt::new(rat(3, 2), int(-1), rat(5, 4)).unwrap();
        assert_eq!(quad_sign(&q), Sign::Positive);
        let q = QuadExt::new(int(1), int(-1), int(2)).unwrap();
        assert_eq!(q.sign(), Sign::Negative);
        let q = QuadExt::new(int(-2), int(1), int(3)).unwrap();
        assert_eq!(q.sign(), Sign::Negative);
        let q = QuadExt::new(int(-1), int(1), int(3)).unwrap();
        assert_eq!(q.sign(), Sign::Positive);
    }

    #[test]
    fn shifted_root_is_below_relaxation() {
        // y = x/2 - sqrt(x^2/4 - 1) at x = 136/67, compared with 85/101
        let x = rat(136, 67);
        let d = &x * &x / int(4) - int(1);
        let y = QuadExt::new(&x / int(2), int(-1), d).unwrap();
        assert_eq!(y.add_rational(&rat(-85, 101)).sign(), Sign::Negative);
        assert!((y.to_f64() - 0.84151).abs() < 1e-5);
    }

    #[test]
    fn rejects_bad_radicands() {
        assert!(QuadExt::new(int(1), int(1), int(4)).is_err());
        assert!(QuadExt::new(int(1), int(1), rat(9, 16)).is_err());
        assert!(QuadExt::new(int(1), int(1), int(-2)).is_err());
        assert!(QuadExt::new(int(1), int(1), int(0)).is_err());
        assert!(matches!(Surd::new(int(1), int(1), int(4)), Ok(Surd::Rational(r)) if r == int(3)));
    }

    #[test]
    fn field_operations() {
        let s2 = QuadExt::sqrt(int(2)).unwrap();
        let sq = s2.checked_mul(&s2).unwrap();
        assert_eq!(sq, QuadExt::from_rational(int(2), &int(2)));
        let x = QuadExt::new(int(1), int(1), int(2)).unwrap();
        let inv = x.recip().unwrap();
        assert_eq!(
            x.checked_mul(&inv).unwrap(),
            QuadExt::from_rational(int(1), &int(2))
        );
        let other = QuadExt::sqrt(int(3)).unwrap();
        assert!(matches!(
            x.checked_add(&other),
            Err(Error::RadicandMismatch(_, _))
        ));
        assert_eq!(
            QuadExt::from_rational(int(0), &int(2)).recip(),
            Err(Error::DivisionByZero)
        );
    }
}
