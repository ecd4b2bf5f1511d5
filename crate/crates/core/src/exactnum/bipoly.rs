//! Sparse polynomials in two variables `x`, `y`.

use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::poly::UPoly;
use super::rational::{int, Rational};
use crate::error::{Error, Result};

/// Map from `(deg_x, deg_y)` to a nonzero coefficient.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct BiPoly {
    terms: BTreeMap<(u32, u32), Rational>,
}

impl BiPoly {
    pub fn zero() -> BiPoly {
        BiPoly::default()
    }

    pub fn one() -> BiPoly {
        BiPoly::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> BiPoly {
        BiPoly::term(c, 0, 0)
    }

    pub fn x() -> BiPoly {
        BiPoly::term(Rational::one(), 1, 0)
    }

    pub fn y() -> BiPoly {
        BiPoly::term(Rational::one(), 0, 1)
    }

    pub fn term(c: Rational, i: u32, j: u32) -> BiPoly {
        let mut p = BiPoly::zero();
        p.add_term(i, j, c);
        p
    }

    /// Lifts a polynomial in `x`.
    pub fn from_x(p: &UPoly) -> BiPoly {
        let mut out = BiPoly::zero();
        for (i, c) in p.coeffs().iter().enumerate() {
            out.add_term(i as u32, 0, c.clone());
        }
        out
    }

    /// Lifts a polynomial in `y`.
    pub fn from_y(p: &UPoly) -> BiPoly {
        let mut out = BiPoly::zero();
        for (j, c) in p.coeffs().iter().enumerate() {
            out.add_term(0, j as u32, c.clone());
        }
        out
    }

    fn add_term(&mut self, i: u32, j: u32, c: Rational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry((i, j)).or_insert_with(Rational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&(i, j));
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32), &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, i: u32, j: u32) -> Rational {
        self.terms
            .get(&(i, j))
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn degree_x(&self) -> u32 {
        self.terms.keys().map(|&(i, _)| i).max().unwrap_or(0)
    }

    pub fn degree_y(&self) -> u32 {
        self.terms.keys().map(|&(_, j)| j).max().unwrap_or(0)
    }

    /// Coefficient of `y^j`, as a polynomial in `x`.
    pub fn coeff_of_y(&self, j: u32) -> UPoly {
        let mut coeffs = vec![Rational::zero(); self.degree_x() as usize + 1];
        for (&(i, jj), c) in &self.terms {
            if jj == j {
                coeffs[i as usize] = c.clone();
            }
        }
        UPoly::new(coeffs)
    }

    pub fn eval(&self, x: &Rational, y: &Rational) -> Rational {
        self.terms
            .iter()
            .map(|(&(i, j), c)| {
                c * num_traits::pow(x.clone(), i as usize) * num_traits::pow(y.clone(), j as usize)
            })
            .fold(Rational::zero(), |a, b| a + b)
    }

    pub fn scale(&self, c: &Rational) -> BiPoly {
        let mut out = BiPoly::zero();
        for (&(i, j), v) in &self.terms {
            out.add_term(i, j, v * c);
        }
        out
    }

    // Leading term in lex order (x first, then y).
    fn leading(&self) -> Option<((u32, u32), &Rational)> {
        self.terms.iter().next_back().map(|(&k, v)| (k, v))
    }

    /// Exact division; errors if `divisor` does not divide `self`.
    pub fn exact_div(&self, divisor: &BiPoly) -> Result<BiPoly> {
        let ((di, dj), dc) = divisor.leading().ok_or(Error::DivisionByZero)?;
        let dc = dc.clone();
        let mut rem = self.clone();
        let mut quot = BiPoly::zero();
        while let Some(((ri, rj), rc)) = rem.leading() {
            if ri < di || rj < dj {
                return Err(Error::Parse("bivariate division is not exact".into()));
            }
            let t = BiPoly::term(rc / &dc, ri - di, rj - dj);
            rem = &rem - &(&t * divisor);
            quot = &quot + &t;
        }
        Ok(quot)
    }

    /// Substitutes `x = y + 1/y` and clears denominators. Returns `(r, k)` with
    /// `self(y + 1/y, y) * y^k = r(y)` and `k = deg_x self`.
    pub fn substitute_reciprocal_sum(&self) -> (UPoly, usize) {
        let k = self.degree_x() as usize;
        let y2p1 = UPoly::from_ints(&[1, 0, 1]);
        let mut out = UPoly::zero();
        for (&(i, j), c) in &self.terms {
            // x^i y^j * y^k  ->  (y^2 + 1)^i * y^(k - i + j)
            let term = &y2p1.pow(i) * &UPoly::monomial(c.clone(), k - i as usize + j as usize);
            out = &out + &term;
        }
        (out, k)
    }
}

impl Add for &BiPoly {
    type Output = BiPoly;
    fn add(self, rhs: &BiPoly) -> BiPoly {
        let mut out = self.clone();
        for (&(i, j), c) in &rhs.terms {
            out.add_term(i, j, c.clone());
        }
        out
    }
}

impl Sub for &BiPoly {
    type Output = BiPoly;
    fn sub(self, rhs: &BiPoly) -> BiPoly {
        let mut out = self.clone();
        for (&(i, j), c) in &rhs.terms {
            out.add_term(i, j, -c.clone());
        }
        out
    }
}

impl Mul for &BiPoly {
    type Output = BiPoly;
    fn mul(self, rhs: &BiPoly) -> BiPoly {
        let mut out = BiPoly::zero();
        for (&(i1, j1), a) in &self.terms {
            for (&(i2, j2), b) in &rhs.terms {
                out.add_term(i1 + i2, j1 + j2, a * b);
            }
        }
        out
    }
}

impl Neg for &BiPoly {
    type Output = BiPoly;
    fn neg(self) -> BiPoly {
        self.scale(&int(-1))
    }
}

impl fmt::Display for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (n, (&(i, j), c)) in self.terms.iter().rev().enumerate() {
            let sep = match (n, c.is_negative()) {
                (0, true) => "-",
                (0, false) => "",
                (_, true) => " - ",
                (_, false) => " + ",
            };
            write!(f, "{sep}{}", c.abs())?;
            if i > 0 {
                write!(f, "*x^{i}")?;
            }
            if j > 0 {
                write!(f, "*y^{j}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BiPoly({self})")
    }
}
