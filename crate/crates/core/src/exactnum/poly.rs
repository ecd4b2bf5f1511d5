//! Univariate polynomials with rational coefficients.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::rational::{fmt_rational, int, parse_rational, Rational, Sign};
use crate::error::{Error, Result};

/// Dense polynomial, coefficients lowest degree first. The zero polynomial
/// has no coefficients; otherwise the last coefficient is nonzero.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct UPoly {
    coeffs: Vec<Rational>,
}

impl UPoly {
    pub fn new(mut coeffs: Vec<Rational>) -> UPoly {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        UPoly { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> UPoly {
        UPoly::new(coeffs.iter().map(|&c| int(c)).collect())
    }

    pub fn zero() -> UPoly {
        UPoly { coeffs: Vec::new() }
    }

    pub fn one() -> UPoly {
        UPoly::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> UPoly {
        UPoly::new(vec![c])
    }

    /// The polynomial `x`.
    pub fn x() -> UPoly {
        UPoly::from_ints(&[0, 1])
    }

    /// `c * x^k`.
    pub fn monomial(c: Rational, k: usize) -> UPoly {
        let mut coeffs = vec![Rational::zero(); k + 1];
        coeffs[k] = c;
        UPoly::new(coeffs)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn eval(&self, t: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * t + c;
        }
        acc
    }

    pub fn eval_f64(&self, t: f64) -> f64 {
        let mut acc = 0.0;
        for c in self.coeffs.iter().rev() {
            acc = acc * t + super::rational::to_f64(c);
        }
        acc
    }

    pub fn sign_at(&self, t: &Rational) -> Sign {
        Sign::of_rational(&self.eval(t))
    }

    pub fn scale(&self, c: &Rational) -> UPoly {
        UPoly::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn derivative(&self) -> UPoly {
        UPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * int(k as i64))
                .collect(),
        )
    }

    pub fn pow(&self, e: u32) -> UPoly {
        let mut acc = UPoly::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Quotient and remainder of Euclidean division.
    pub fn divrem(&self, divisor: &UPoly) -> Result<(UPoly, UPoly)> {
        let dd = divisor.degree().ok_or(Error::DivisionByZero)?;
        let lead = divisor.coeffs[dd].clone();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((UPoly::zero(), self.clone()));
        }
        let mut quot = vec![Rational::zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let c = &rem[k + dd] / &lead;
            if !c.is_zero() {
                for (i, d) in divisor.coeffs.iter().enumerate() {
                    rem[k + i] -= &c * d;
                }
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        Ok((UPoly::new(quot), UPoly::new(rem)))
    }

    /// Monic greatest common divisor; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &UPoly) -> UPoly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.divrem(&b).expect("nonzero divisor");
            a = b;
            b = r.primitive();
        }
        a.monic()
    }

    pub fn monic(&self) -> UPoly {
        match self.leading() {
            Some(l) => self.scale(&l.recip()),
            None => UPoly::zero(),
        }
    }

    /// Positive rational multiple with coprime integer coefficients. The sign
    /// of every value is preserved, which is what Sturm chains rely on.
    pub fn primitive(&self) -> UPoly {
        if self.is_zero() {
            return UPoly::zero();
        }
        let lcm = self
            .coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| (c * Rational::from_integer(lcm.clone())).to_integer())
            .collect();
        let g = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c)).abs();
        UPoly::new(
            ints.into_iter()
                .map(|c| Rational::from_integer(c / &g))
                .collect(),
        )
    }

    /// `p / gcd(p, p')`: same distinct roots, all simple.
    pub fn square_free(&self) -> UPoly {
        if self.degree().unwrap_or(0) == 0 {
            return self.clone();
        }
        let g = self.gcd(&self.derivative());
        let (q, _) = self.divrem(&g).expect("gcd is nonzero");
        q.primitive()
    }

    /// Composition `self(other(x))`.
    pub fn compose(&self, other: &UPoly) -> UPoly {
        let mut acc = UPoly::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * other) + &UPoly::constant(c.clone());
        }
        acc
    }

    /// Substitutes `x = y + 1/y` and clears denominators: returns `(r, k)`
    /// with `self(y + 1/y) * y^k = r(y)` where `k = deg self`.
    pub fn substitute_reciprocal_sum(&self) -> (UPoly, usize) {
        let k = self.degree().unwrap_or(0);
        // (y + 1/y)^j * y^k = y^(k-j) * (y^2 + 1)^j
        let y2p1 = UPoly::from_ints(&[1, 0, 1]);
        let mut out = UPoly::zero();
        let mut pow = UPoly::one();
        for (j, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                let term = &pow * &UPoly::monomial(c.clone(), k - j);
                out = &out + &term;
            }
            pow = &pow * &y2p1;
        }
        (out, k)
    }

    /// Cauchy bound: every real root has absolute value strictly below it.
    pub fn cauchy_bound(&self) -> Result<Rational> {
        let lead = self.leading().ok_or(Error::ZeroPolynomial)?;
        let m = self.coeffs[..self.coeffs.len() - 1]
            .iter()
            .map(|c| (c / lead).abs())
            .max()
            .unwrap_or_else(Rational::zero);
        Ok(m + int(1))
    }

    /// JSON-friendly coefficient strings, lowest degree first.
    pub fn to_strings(&self) -> Vec<String> {
        self.coeffs.iter().map(fmt_rational).collect()
    }

    pub fn from_strings<S: AsRef<str>>(items: &[S]) -> Result<UPoly> {
        Ok(UPoly::new(
            items
                .iter()
                .map(|s| parse_rational(s.as_ref()))
                .collect::<Result<_>>()?,
        ))
    }
}

impl Add for &UPoly {
    type Output = UPoly;
    fn add(self, rhs: &UPoly) -> UPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        UPoly::new((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl Sub for &UPoly {
    type Output = UPoly;
    fn sub(self, rhs: &UPoly) -> UPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        UPoly::new((0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl Mul for &UPoly {
    type Output = UPoly;
    fn mul(self, rhs: &UPoly) -> UPoly {
        if self.is_zero() || rhs.is_zero() {
            return UPoly::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        UPoly::new(out)
    }
}

impl Neg for &UPoly {
    type Output = UPoly;
    fn neg(self) -> UPoly {
        UPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl fmt::Display for UPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let a = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            first = false;
            let show_coeff = k == 0 || !a.is_one();
            if show_coeff {
                write!(f, "{a}")?;
            }
            match k {
                0 => {}
                1 => write!(f, "x")?,
                _ => write!(f, "x^{k}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for UPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "UPoly({self})")
    }
}

impl Serialize for UPoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_strings().serialize(s)
    }
}

impl<'de> Deserialize<'de> for UPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let items = Vec::<String>::deserialize(d)?;
        UPoly::from_strings(&items).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::super::rational::rat;
    use super::*;

    #[test]
    fn divrem_reconstructs() {
        let a = UPoly::from_ints(&[-1, 0, 0, 1]);
        let b = UPoly::from_ints(&[1, 2]);
        let (q, r) = a.divrem(&b).unwrap();
        assert_eq!(&(&q * &b) + &r, a);
        assert!(r.degree().unwrap_or(0) < 1);
        assert_eq!(a.divrem(&UPoly::zero()), Err(Error::DivisionByZero));
    }

    #[test]
    fn gcd_of_x2m1_and_x3m1() {
        let g = UPoly::from_ints(&[-1, 0, 1]).gcd(&UPoly::from_ints(&[-1, 0, 0, 1]));
        assert_eq!(g, UPoly::from_ints(&[-1, 1]));
    }

    #[test]
    fn reciprocal_substitution_of_linear() {
        let (r, k) = UPoly::from_ints(&[-2, 1]).substitute_reciprocal_sum();
        assert_eq!(k, 1);
        assert_eq!(r, UPoly::from_ints(&[1, -2, 1]));
    }

    #[test]
    fn reciprocal_substitution_matches_expansion() {
        // (y + 1/y)^2 - (y + 1/y) - 1 = y^2 + 1 - y - y^-1 + y^-2 after
        // expanding; times y^2 gives y^4 - y^3 + y^2 - y + 1.
        let (r, k) = UPoly::from_ints(&[-1, -1, 1]).substitute_reciprocal_sum();
        assert_eq!(k, 2);
        assert_eq!(r, UPoly::from_ints(&[1, -1, 1, -1, 1]));
    }

    #[test]
    fn square_free_part() {
        // (x-1)^2 (x+2)
        let p = &UPoly::from_ints(&[-1, 1]).pow(2) * &UPoly::from_ints(&[2, 1]);
        assert_eq!(p.square_free(), UPoly::from_ints(&[-2, 1, 1]));
    }

    #[test]
    fn primitive_keeps_sign() {
        let p = UPoly::new(vec![rat(-1, 2), rat(3, 4)]);
        assert_eq!(p.primitive(), UPoly::from_ints(&[-2, 3]));
    }

    #[test]
    fn display_and_json() {
        let p = UPoly::from_ints(&[-1, -1, 0, 1]);
        assert_eq!(p.to_string(), "x^3 - x - 1");
        let js = serde_json::to_string(&p).unwrap();
        assert_eq!(js, r#"["-1/1","-1/1","0/1","1/1"]"#);
        let back: UPoly = serde_json::from_str(&js).unwrap();
        assert_eq!(back, p);
    }
}
