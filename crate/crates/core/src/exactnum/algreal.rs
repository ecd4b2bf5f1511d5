//! Real algebraic numbers as (square-free polynomial, isolating interval).

use num_traits::{One, Zero};
use std::cmp::Ordering;
use std::fmt;

use super::poly::UPoly;
use super::rational::{fmt_decimal, int, midpoint, to_f64, Rational, Rounding};
use super::sturm::{isolate_real_roots, refine_interval, SturmChain};
use crate::error::{Error, Result};

/// A real root of `minpoly`, the only one in the closed interval `[lo, hi]`.
/// Rational roots may carry the degenerate interval `[r, r]`.
#[derive(Clone)]
pub struct AlgReal {
    minpoly: UPoly,
    lo: Rational,
    hi: Rational,
}

impl AlgReal {
    /// Validating constructor: `p` is reduced to its square-free part and must
    /// have exactly one root in `[lo, hi]`, with non-root endpoints unless the
    /// interval is degenerate.
    pub fn new(p: &UPoly, lo: Rational, hi: Rational) -> Result<AlgReal> {
        if p.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        if lo > hi {
            return Err(Error::OutOfRange(format!("interval [{lo}, {hi}]")));
        }
        let sf = p.square_free();
        if lo == hi {
            return if sf.eval(&lo).is_zero() {
                Ok(AlgReal::exact_unchecked(sf, lo))
            } else {
                Err(Error::OutOfRange(format!("{lo} is not a root")))
            };
        }
        if sf.eval(&lo).is_zero() || sf.eval(&hi).is_zero() {
            return Err(Error::OutOfRange("interval endpoint is a root".into()));
        }
        let n = SturmChain::new(&sf)?.count(&lo, &hi);
        if n != 1 {
            return Err(Error::OutOfRange(format!(
                "interval [{lo}, {hi}] holds {n} roots, expected 1"
            )));
        }
        Ok(AlgReal::from_parts_unchecked(sf, lo, hi))
    }

    pub(crate) fn from_parts_unchecked(minpoly: UPoly, lo: Rational, hi: Rational) -> AlgReal {
        AlgReal { minpoly, lo, hi }
    }

    pub(crate) fn exact_unchecked(minpoly: UPoly, r: Rational) -> AlgReal {
        AlgReal {
            minpoly,
            lo: r.clone(),
            hi: r,
        }
    }

    pub fn from_rational(r: Rational) -> AlgReal {
        let p = UPoly::new(vec![-r.clone(), Rational::one()]);
        AlgReal::exact_unchecked(p, r)
    }

    /// The largest real root of `p`.
    pub fn largest_root(p: &UPoly) -> Result<AlgReal> {
        isolate_real_roots(p)?
            .pop()
            .ok_or_else(|| Error::OutOfRange(format!("{p} has no real root")))
    }

    /// The unique root of `p` inside `(lo, hi)`.
    pub fn root_between(p: &UPoly, lo: &Rational, hi: &Rational) -> Result<AlgReal> {
        let mut found: Vec<AlgReal> = isolate_real_roots(p)?
            .into_iter()
            .filter(|r| {
                r.cmp_rational(lo) == Ordering::Greater && r.cmp_rational(hi) == Ordering::Less
            })
            .collect();
        match found.len() {
            1 => Ok(found.pop().unwrap()),
            n => Err(Error::OutOfRange(format!(
                "{p} has {n} roots in ({lo}, {hi}), expected 1"
            ))),
        }
    }

    pub fn minpoly(&self) -> &UPoly {
        &self.minpoly
    }

    pub fn interval(&self) -> (&Rational, &Rational) {
        (&self.lo, &self.hi)
    }

    pub fn is_rational(&self) -> bool {
        self.lo == self.hi
    }

    pub fn contains_point(&self, r: &Rational) -> bool {
        &self.lo <= r && r <= &self.hi
    }

    /// An isolating subinterval of width at most `tol`.
    pub fn refine(&self, tol: &Rational) -> (Rational, Rational) {
        refine_interval(&self.minpoly, &self.lo, &self.hi, tol)
    }

    pub fn refined(&self, tol: &Rational) -> AlgReal {
        let (lo, hi) = self.refine(tol);
        AlgReal {
            minpoly: self.minpoly.clone(),
            lo,
            hi,
        }
    }

    fn halved(&self) -> AlgReal {
        let w = &self.hi - &self.lo;
        self.refined(&(w / int(2)))
    }

    pub fn to_f64(&self) -> f64 {
        let (lo, hi) = self.refine(&Rational::new(
            1.into(),
            num_bigint::BigInt::from(1u64 << 60),
        ));
        to_f64(&midpoint(&lo, &hi))
    }

    /// Exact comparison with a rational.
    pub fn cmp_rational(&self, r: &Rational) -> Ordering {
        if self.is_rational() {
            return self.lo.cmp(r);
        }
        if r <= &self.lo {
            return Ordering::Greater;
        }
        if r >= &self.hi {
            return Ordering::Less;
        }
        // r strictly inside the isolating interval.
        let s = self.minpoly.sign_at(r);
        if s == super::rational::Sign::Zero {
            return Ordering::Equal;
        }
        if s == self.minpoly.sign_at(&self.lo) {
            // root lies in (r, hi)
            Ordering::Greater
        } else {
            Ordering::Less
        }
    }

    /// Whether two isolating intervals pin the same number: the common
    /// factor of both polynomials must vanish on the overlap.
    pub fn same_number(&self, other: &AlgReal) -> bool {
        let lo = (&self.lo).max(&other.lo).clone();
        let hi = (&self.hi).min(&other.hi).clone();
        if lo > hi {
            return false;
        }
        let g = self.minpoly.gcd(&other.minpoly);
        if g.degree().unwrap_or(0) == 0 {
            return false;
        }
        if g.eval(&lo).is_zero() {
            return true;
        }
        lo < hi && SturmChain::new(&g).map(|c| c.count(&lo, &hi)).unwrap_or(0) > 0
    }

    /// `sqrt(self) + 1/sqrt(self)` for `self > 1`.
    ///
    /// The defining polynomial comes from reducing `P(s^2)` modulo
    /// `s^2 - a s + 1`: writing the remainder as `A(a) + B(a) s`, the product
    /// over both roots `s` is `A^2 + a A B + B^2`.
    pub fn sqrt_plus_inv_sqrt(&self) -> Result<AlgReal> {
        if self.cmp_rational(&Rational::one()) != Ordering::Greater {
            return Err(Error::OutOfRange("argument must exceed 1".into()));
        }
        let a = UPoly::x();
        // s^k = c + d s  (mod s^2 - a s + 1), with c, d polynomials in a.
        let mut c = UPoly::one();
        let mut d = UPoly::zero();
        let mut rem_a = UPoly::zero();
        let mut rem_b = UPoly::zero();
        for (j, coef) in self.minpoly.coeffs().iter().enumerate() {
            if j > 0 {
                // advance twice: s^(2j-2) -> s^(2j)
                for _ in 0..2 {
                    let nc = -&d;
                    let nd = &c + &(&a * &d);
                    c = nc;
                    d = nd;
                }
            }
            let k = UPoly::constant(coef.clone());
            rem_a = &rem_a + &(&c * &k);
            rem_b = &rem_b + &(&d * &k);
        }
        let r = &(&(&rem_a * &rem_a) + &(&(&a * &rem_a) * &rem_b)) + &(&rem_b * &rem_b);
        let mut base = self.clone();
        let mut bits = 32;
        loop {
            if base.is_rational() || base.lo > Rational::one() {
                let s_lo = sqrt_bound(&base.lo, Rounding::Down, bits).max(Rational::one());
                let s_hi = sqrt_bound(&base.hi, Rounding::Up, bits);
                let lo = &s_lo + s_lo.recip();
                let hi = &s_hi + s_hi.recip();
                if let Ok(v) = AlgReal::new(&r, lo, hi) {
                    return Ok(v);
                }
            }
            base = base.halved();
            bits += 4;
        }
    }

    /// Decimal bracket `[lo, hi]` with outward rounding.
    pub fn decimal_bracket(&self, digits: usize) -> (String, String) {
        (
            fmt_decimal(&self.lo, digits, Rounding::Down),
            fmt_decimal(&self.hi, digits, Rounding::Up),
        )
    }
}

/// Rational bound on `sqrt(x)` (x >= 0) within `2^-bits`, below or above.
fn sqrt_bound(x: &Rational, rounding: Rounding, bits: u32) -> Rational {
    let mut lo = Rational::zero();
    let mut hi = x.max(&Rational::one()).clone();
    let tol = Rational::new(
        1.into(),
        num_traits::pow(num_bigint::BigInt::from(2u32), bits as usize),
    );
    while &hi - &lo > tol {
        let mid = midpoint(&lo, &hi);
        match (&mid * &mid).cmp(x) {
            Ordering::Equal => return mid,
            Ordering::Less => lo = mid,
            Ordering::Greater => hi = mid,
        }
    }
    match rounding {
        Rounding::Down => lo,
        _ => hi,
    }
}

/// Equality of the numbers, not of their representations.
impl PartialEq for AlgReal {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for AlgReal {}

impl PartialOrd for AlgReal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for AlgReal {
    fn cmp(&self, other: &Self) -> Ordering {
        if other.is_rational() {
            return self.cmp_rational(&other.lo);
        }
        if self.is_rational() {
            return other.cmp_rational(&self.lo).reverse();
        }
        let mut a = self.clone();
        let mut b = other.clone();
        let mut checked_equal = false;
        loop {
            if a.hi < b.lo {
                return Ordering::Less;
            }
            if b.hi < a.lo {
                return Ordering::Greater;
            }
            if !checked_equal {
                if a.same_number(&b) {
                    return Ordering::Equal;
                }
                checked_equal = true;
            }
            a = a.halved();
            b = b.halved();
            if a.is_rational() || b.is_rational() {
                return a.cmp(&b);
            }
        }
    }
}

impl fmt::Debug for AlgReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "AlgReal(root of {} in [{}, {}])",
            self.minpoly, self.lo, self.hi
        )
    }
}

impl fmt::Display for AlgReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (lo, hi) = self
            .refined(&Rational::new(1.into(), 1_000_000_000.into()))
            .decimal_bracket(9);
        if self.is_rational() {
            write!(f, "{}", self.lo)
        } else {
            write!(f, "[{lo}, {hi}]")
        }
    }
}

impl AlgReal {
    pub fn is_positive(&self) -> bool {
        self.cmp_rational(&Rational::zero()) == Ordering::Greater
    }
}
