//! Scalar abstractions shared by the elimination routines.
//!
//! [`Ring`] is what fraction-free (Bareiss) determinants need: exact
//! division by a known divisor. [`Field`] adds inverses and a sign, which is
//! what symmetric elimination needs to read off inertia.

use num_traits::{One, Zero};

use super::bipoly::BiPoly;
use super::poly::UPoly;
use super::quad::QuadExt;
use super::rational::{Rational, Sign};

pub trait Ring: Clone + std::fmt::Debug {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn is_zero_elem(&self) -> bool;
    fn plus(&self, o: &Self) -> Self;
    fn minus(&self, o: &Self) -> Self;
    fn times(&self, o: &Self) -> Self;
    fn negated(&self) -> Self;
    /// `self / o`, where the caller guarantees the division is exact.
    fn exact_div(&self, o: &Self) -> Self;
}

pub trait Field: Ring + Send + Sync + 'static {
    fn over(&self, o: &Self) -> Self;
    fn sign(&self) -> Sign;
    fn embed(&self, r: &Rational) -> Self;
}

impl Ring for Rational {
    fn zero_like(&self) -> Self {
        Rational::zero()
    }
    fn one_like(&self) -> Self {
        Rational::one()
    }
    fn is_zero_elem(&self) -> bool {
        self.is_zero()
    }
    fn plus(&self, o: &Self) -> Self {
        self + o
    }
    fn minus(&self, o: &Self) -> Self {
        self - o
    }
    fn times(&self, o: &Self) -> Self {
        self * o
    }
    fn negated(&self) -> Self {
        -self
    }
    fn exact_div(&self, o: &Self) -> Self {
        self / o
    }
}

impl Field for Rational {
    fn over(&self, o: &Self) -> Self {
        self / o
    }
    fn sign(&self) -> Sign {
        Sign::of_rational(self)
    }
    fn embed(&self, r: &Rational) -> Self {
        r.clone()
    }
}

impl Ring for QuadExt {
    fn zero_like(&self) -> Self {
        QuadExt::from_rational(Rational::zero(), self.radicand())
    }
    fn one_like(&self) -> Self {
        QuadExt::from_rational(Rational::one(), self.radicand())
    }
    fn is_zero_elem(&self) -> bool {
        self.is_zero()
    }
    fn plus(&self, o: &Self) -> Self {
        self.checked_add(o).expect("shared radicand")
    }
    fn minus(&self, o: &Self) -> Self {
        self.checked_sub(o).expect("shared radicand")
    }
    fn times(&self, o: &Self) -> Self {
        self.checked_mul(o).expect("shared radicand")
    }
    fn negated(&self) -> Self {
        self.neg()
    }
    fn exact_div(&self, o: &Self) -> Self {
        self.over(o)
    }
}

impl Field for QuadExt {
    fn over(&self, o: &Self) -> Self {
        self.checked_div(o)
            .expect("nonzero divisor with shared radicand")
    }
    fn sign(&self) -> Sign {
        QuadExt::sign(self)
    }
    fn embed(&self, r: &Rational) -> Self {
        QuadExt::from_rational(r.clone(), self.radicand())
    }
}

/// Floating-point scalars give fast, uncertified guesses; exact types then
/// confirm them.
impl Ring for f64 {
    fn zero_like(&self) -> Self {
        0.0
    }
    fn one_like(&self) -> Self {
        1.0
    }
    fn is_zero_elem(&self) -> bool {
        *self == 0.0
    }
    fn plus(&self, o: &Self) -> Self {
        self + o
    }
    fn minus(&self, o: &Self) -> Self {
        self - o
    }
    fn times(&self, o: &Self) -> Self {
        self * o
    }
    fn negated(&self) -> Self {
        -self
    }
    fn exact_div(&self, o: &Self) -> Self {
        self / o
    }
}

impl Field for f64 {
    fn over(&self, o: &Self) -> Self {
        self / o
    }
    fn sign(&self) -> Sign {
        if *self > 0.0 {
            Sign::Positive
        } else if *self < 0.0 {
            Sign::Negative
        } else {
            Sign::Zero
        }
    }
    fn embed(&self, r: &Rational) -> Self {
        super::rational::to_f64(r)
    }
}

impl Ring for UPoly {
    fn zero_like(&self) -> Self {
        UPoly::zero()
    }
    fn one_like(&self) -> Self {
        UPoly::one()
    }
    fn is_zero_elem(&self) -> bool {
        self.is_zero()
    }
    fn plus(&self, o: &Self) -> Self {
        self + o
    }
    fn minus(&self, o: &Self) -> Self {
        self - o
    }
    fn times(&self, o: &Self) -> Self {
        self * o
    }
    fn negated(&self) -> Self {
        -self
    }
    fn exact_div(&self, o: &Self) -> Self {
        let (q, r) = self.divrem(o).expect("nonzero divisor");
        debug_assert!(r.is_zero(), "inexact polynomial division");
        q
    }
}

impl Ring for BiPoly {
    fn zero_like(&self) -> Self {
        BiPoly::zero()
    }
    fn one_like(&self) -> Self {
        BiPoly::one()
    }
    fn is_zero_elem(&self) -> bool {
        self.is_zero()
    }
    fn plus(&self, o: &Self) -> Self {
        self + o
    }
    fn minus(&self, o: &Self) -> Self {
        self - o
    }
    fn times(&self, o: &Self) -> Self {
        self * o
    }
    fn negated(&self) -> Self {
        -self
    }
    fn exact_div(&self, o: &Self) -> Self {
        self.exact_div(o).expect("exact bivariate division")
    }
}

/// Determinant by fraction-free (Bareiss) elimination over any integral
/// domain. Every division is exact, so coefficient growth stays polynomial.
pub fn bareiss_det<R: Ring>(m: &[Vec<R>], unit: &R) -> R {
    let n = m.len();
    if n == 0 {
        return unit.one_like();
    }
    let mut a: Vec<Vec<R>> = m.to_vec();
    let mut prev = unit.one_like();
    let mut negate = false;
    for k in 0..n - 1 {
        if a[k][k].is_zero_elem() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero_elem()) {
                Some(i) => {
                    a.swap(i, k);
                    negate = !negate;
                }
                None => return unit.zero_like(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t = a[i][j].times(&a[k][k]).minus(&a[i][k].times(&a[k][j]));
                a[i][j] = t.exact_div(&prev);
            }
            a[i][k] = unit.zero_like();
        }
        prev = a[k][k].clone();
    }
    let d = a[n - 1][n - 1].clone();
    if negate {
        d.negated()
    } else {
        d
    }
}

#[cfg(test)]
mod tests {
    use super::super::rational::{int, rat};
    use super::*;

    fn cofactor_det(m: &[Vec<Rational>]) -> Rational {
        let n = m.len();
        if n == 0 {
            return int(1);
        }
        let mut acc = int(0);
        for j in 0..n {
            let minor: Vec<Vec<Rational>> = m[1..]
                .iter()
                .map(|row| {
                    row.iter()
                        .enumerate()
                        .filter(|&(c, _)| c != j)
                        .map(|(_, v)| v.clone())
                        .collect()
                })
                .collect();
            let term = &m[0][j] * cofactor_det(&minor);
            if j % 2 == 0 {
                acc += term;
            } else {
                acc -= term;
            }
        }
        acc
    }

    #[test]
    fn bareiss_matches_cofactor_expansion() {
        let m = vec![
            vec![int(0), int(2), rat(1, 3), int(4)],
            vec![int(1), int(0), int(5), int(-1)],
            vec![rat(-2, 7), int(3), int(0), int(1)],
            vec![int(1), int(1), int(1), int(0)],
        ];
        assert_eq!(bareiss_det(&m, &int(1)), cofactor_det(&m));
    }

    #[test]
    fn singular_matrix() {
        let m = vec![vec![int(1), int(2)], vec![int(2), int(4)]];
        assert_eq!(bareiss_det(&m, &int(1)), int(0));
    }
}
