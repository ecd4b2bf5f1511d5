use std::cmp::Ordering;

use super::report::{CertReport, Recorder};
use crate::error::Result;
use crate::exactnum::rational::{fmt_decimal, Rounding};
use crate::exactnum::{rat, AlgReal, Rational, UPoly};

/// The algebraic constants of the rowing-graph threshold picture.
#[derive(Clone, Debug)]
pub struct ConstantsTable {
    /// Real root of `x^3 - x - 1`.
    pub rho: AlgReal,
    /// Golden ratio, the larger root of `x^2 - x - 1`.
    pub phi: AlgReal,
    /// `rho^(1/2) + rho^(-1/2)`.
    pub lambda_star: AlgReal,
    /// `phi^(1/2) + phi^(-1/2)`.
    pub lambda_prime: AlgReal,
    /// `(m, beta_m, alpha_m)` for `m = 2..=12`.
    pub alphas: Vec<(u32, AlgReal, AlgReal)>,
}

/// `x^(m+1) - (1 + x + ... + x^(m-1))`.
pub fn beta_poly(m: u32) -> UPoly {
    let mut c = vec![-1i64; m as usize];
    c.push(0);
    c.push(1);
    UPoly::from_ints(&c)
}

pub fn rho() -> Result<AlgReal> {
    AlgReal::largest_root(&UPoly::from_ints(&[-1, -1, 0, 1]))
}

pub fn phi() -> Result<AlgReal> {
    AlgReal::largest_root(&UPoly::from_ints(&[-1, -1, 1]))
}

pub fn lambda_star() -> Result<AlgReal> {
    rho()?.sqrt_plus_inv_sqrt()
}

pub fn lambda_prime() -> Result<AlgReal> {
    phi()?.sqrt_plus_inv_sqrt()
}

/// `phi^(-1/2)`, the root of `s^4 + s^2 - 1` in `(0, 1)`.
pub fn phi_inv_sqrt() -> Result<AlgReal> {
    AlgReal::root_between(&UPoly::from_ints(&[-1, 0, 1, 0, 1]), &rat(0, 1), &rat(1, 1))
}

pub fn alpha_m(m: u32) -> Result<(AlgReal, AlgReal)> {
    let beta = AlgReal::largest_root(&beta_poly(m))?;
    let alpha = beta.sqrt_plus_inv_sqrt()?;
    Ok((beta, alpha))
}

impl ConstantsTable {
    pub fn compute() -> Result<ConstantsTable> {
        let alphas = (2..=12)
            .map(|m| alpha_m(m).map(|(b, a)| (m, b, a)))
            .collect::<Result<Vec<_>>>()?;
        Ok(ConstantsTable {
            rho: rho()?,
            phi: phi()?,
            lambda_star: lambda_star()?,
            lambda_prime: lambda_prime()?,
            alphas,
        })
    }
}

/// `[lo, hi]` rendered with `digits` decimals, rounded outward.
pub fn decimal_bracket(a: &AlgReal, digits: usize) -> (String, String) {
    let tol = Rational::new(
        1.into(),
        num_traits::pow(num_bigint::BigInt::from(10), digits + 1),
    );
    let (lo, hi) = a.refine(&tol);
    (
        fmt_decimal(&lo, digits, Rounding::Down),
        fmt_decimal(&hi, digits, Rounding::Up),
    )
}

fn inside(a: &AlgReal, lo: &Rational, hi: &Rational) -> bool {
    a.cmp_rational(lo) == Ordering::Greater && a.cmp_rational(hi) == Ordering::Less
}

fn bracket_text(a: &AlgReal) -> String {
    let (lo, hi) = decimal_bracket(a, 6);
    format!("[{lo}, {hi}]")
}

pub fn cert_constants() -> Vec<CertReport> {
    let mut rec = Recorder::default();
    rec.check("constants-lambda-star", "(2.01979, 2.01981)", || {
        let l = lambda_star()?;
        let (lo, hi) = l.refine(&rat(1, 100_000));
        let ok =
            inside(&l, &rat(201979, 100000), &rat(201981, 100000)) && hi - lo <= rat(1, 100_000);
        Ok((ok, bracket_text(&l)))
    });
    rec.check(
        "constants-lambda-star-minpoly",
        "root of x^6 - 5x^4 + 4x^2 - 1 in (2, 3)",
        || {
            // independent route: the polynomial in lambda obtained by eliminating rho by hand
            let p = UPoly::from_ints(&[-1, 0, 4, 0, -5, 0, 1]);
            let direct = AlgReal::root_between(&p, &rat(2, 1), &rat(3, 1))?;
            let l = lambda_star()?;
            Ok((direct == l, format!("{}", l.minpoly())))
        },
    );
    rec.check("constants-lambda-prime", "(2.05816, 2.05818)", || {
        let l = lambda_prime()?;
        Ok((
            inside(&l, &rat(205816, 100000), &rat(205818, 100000)),
            bracket_text(&l),
        ))
    });
    rec.check(
        "constants-lambda-prime-minpoly",
        "root of (x^2 - 2)^2 - 5 in (2, 3)",
        || {
            let p = UPoly::from_ints(&[-1, 0, -4, 0, 1]);
            let direct = AlgReal::root_between(&p, &rat(2, 1), &rat(3, 1))?;
            let l = lambda_prime()?;
            Ok((direct == l, format!("{}", l.minpoly())))
        },
    );
    rec.check(
        "constants-alpha-2-equals-lambda-star",
        "alpha_2 = lambda_star",
        || {
            let (_, a2) = alpha_m(2)?;
            Ok((a2 == lambda_star()?, bracket_text(&a2)))
        },
    );
    rec.check(
        "constants-alpha-increasing",
        "alpha_2 < ... < alpha_12 < lambda_prime + 1e-6",
        || {
            let l = lambda_prime()?;
            let mut prev: Option<AlgReal> = None;
            let mut ok = true;
            let mut last = String::new();
            for m in 2..=12 {
                let (_, a) = alpha_m(m)?;
                if let Some(p) = &prev {
                    ok &= p < &a;
                }
                last = bracket_text(&a);
                prev = Some(a);
            }
            let (_, lp_hi) = l.refine(&rat(1, 10_000_000));
            let top = prev.expect("eleven values");
            ok &= top.cmp_rational(&(lp_hi + rat(1, 1_000_000))) == Ordering::Less;
            Ok((ok, format!("alpha_12 in {last}")))
        },
    );
    rec.finish()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn constants_verify() {
        for r in cert_constants() {
            assert!(r.is_verified(), "{r:?}");
        }
    }

    #[test]
    fn phi_inv_sqrt_above_seven_ninths() {
        let s = phi_inv_sqrt().unwrap();
        assert_eq!(s.cmp_rational(&rat(7, 9)), Ordering::Greater);
        assert!((s.to_f64() - 0.78615).abs() < 1e-5);
    }

    #[test]
    fn table_has_all_alphas() {
        let t = ConstantsTable::compute().unwrap();
        assert_eq!(t.alphas.len(), 11);
        assert!(t.alphas.iter().all(|(_, _, a)| a < &t.lambda_prime));
    }
}
