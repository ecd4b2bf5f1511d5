//! Symbolic identities: the two determinants behind `alpha`, the closed
//! form of `beta`, and the rational function `alpha - beta` in `y`.

use std::cmp::Ordering;

use super::constants::phi_inv_sqrt;
use super::report::{CertReport, Recorder};
use crate::error::Result;
use crate::exactnum::{bareiss_det, int, rat, sturm_count_open, BiPoly, Rational, Sign, UPoly};
use crate::graphkit::{build_rowing, builtin, RowingString};
use crate::spectral::alpha_beta;

pub const POLY_A: [i64; 6] = [0, 3, 2, -5, 0, 1];
pub const POLY_B: [i64; 7] = [-1, -6, 9, 4, -7, 0, 1];
pub const POLY_C: [i64; 8] = [6, -3, -20, 19, 6, -9, 0, 1];

/// Degree-12 factor of the numerator of `alpha - beta` in `y`.
pub const FACTOR_12: [i64; 13] = [-1, 0, 4, -6, 3, 2, -4, 6, -5, 2, 2, -2, 1];
/// Degree-10 factor of the denominator.
pub const FACTOR_10: [i64; 11] = [1, 1, -3, 2, 1, -1, 1, -2, 1, 1, -1];

fn bx(c: &[i64]) -> BiPoly {
    BiPoly::from_x(&UPoly::from_ints(c))
}

/// `C1 = A + xI - yE` for the rooted graph `(dot, 111)`, over `Q[x, y]`.
/// Vertex 0 is `v0`; the root `v3` is vertex 5.
pub fn c1_symbolic() -> Vec<Vec<BiPoly>> {
    let g =
        build_rowing(&builtin("dot").expect("builtin"), &RowingString::ones(3)).expect("rooted");
    let root = g.root().expect("rooted");
    let n = g.n();
    let mut m = vec![vec![BiPoly::zero(); n]; n];
    for (u, v, _) in g.edges() {
        m[u][v] = BiPoly::one();
        m[v][u] = BiPoly::one();
    }
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = BiPoly::x();
    }
    m[root][root] = &BiPoly::x() - &BiPoly::y();
    m
}

fn drop_first(m: &[Vec<BiPoly>]) -> Vec<Vec<BiPoly>> {
    m[1..].iter().map(|row| row[1..].to_vec()).collect()
}

/// Displayed form of `det C1'`: `-A y + B`.
pub fn expected_det_c1_prime() -> BiPoly {
    &bx(&POLY_B) - &(&bx(&POLY_A) * &BiPoly::y())
}

/// Displayed form of `det C1`: `-B y + C`.
pub fn expected_det_c1() -> BiPoly {
    &bx(&POLY_C) - &(&bx(&POLY_B) * &BiPoly::y())
}

/// `alpha - beta` as numerator and denominator in `Q[x, y]`.
pub fn alpha_minus_beta() -> (BiPoly, BiPoly) {
    let y = BiPoly::y();
    let x = BiPoly::x();
    let (a, b, c) = (bx(&POLY_A), bx(&POLY_B), bx(&POLY_C));
    let alpha_num = &(&a * &y) - &b;
    let alpha_den = &(&b * &y) - &c;
    let beta_num = &y - &bx(&[-2, 2]);
    let beta_den = &(&x * &y) - &bx(&[-1, 0, 1]);
    let num = &(&alpha_num * &beta_den) - &(&beta_num * &alpha_den);
    let den = &alpha_den * &beta_den;
    (num, den)
}

/// The displayed rational function `P(y) / Q(y)`.
pub fn expected_rational_function() -> (UPoly, UPoly) {
    let y = UPoly::x();
    let ym1 = UPoly::from_ints(&[-1, 1]);
    let p = &(&y * &(&ym1 * &ym1)) * &UPoly::from_ints(&FACTOR_12);
    let q = &UPoly::from_ints(&[1, -1, 1]) * &UPoly::from_ints(&FACTOR_10);
    (p, q)
}

/// `(alpha - beta)(y + 1/y, y)` with denominators cleared, as `(n, d)`.
pub fn substituted_rational_function() -> (UPoly, UPoly) {
    let (num, den) = alpha_minus_beta();
    let (n, kn) = num.substitute_reciprocal_sum();
    let (d, kd) = den.substitute_reciprocal_sum();
    // num / den = (n / y^kn) / (d / y^kd)
    let n = &n * &UPoly::monomial(int(1), kd);
    let d = &d * &UPoly::monomial(int(1), kn);
    (n, d)
}

fn eval_c1_at(x: &Rational, y: &Rational) -> (Rational, Rational) {
    let m: Vec<Vec<Rational>> = c1_symbolic()
        .iter()
        .map(|row| row.iter().map(|e| e.eval(x, y)).collect())
        .collect();
    let sub: Vec<Vec<Rational>> = m[1..].iter().map(|row| row[1..].to_vec()).collect();
    (bareiss_det(&m, &int(1)), bareiss_det(&sub, &int(1)))
}

pub fn cert_eq_4_1() -> Vec<CertReport> {
    let mut rec = Recorder::default();
    let c1 = c1_symbolic();
    let expected = expected_det_c1_prime();
    rec.check("eq-4.1-det-C1-prime", &expected.to_string(), || {
        let d = bareiss_det(&drop_first(&c1), &BiPoly::one());
        Ok((d == expected, d.to_string()))
    });
    let expected = expected_det_c1();
    rec.check("eq-4.1-det-C1", &expected.to_string(), || {
        let d = bareiss_det(&c1, &BiPoly::one());
        Ok((d == expected, d.to_string()))
    });
    rec.check(
        "eq-4.1-det-C1-coefficients",
        "coeff(x^5 y) = -1 in det C1', constant of det C1 = 6",
        || {
            let d1p = bareiss_det(&drop_first(&c1), &BiPoly::one());
            let d1 = bareiss_det(&c1, &BiPoly::one());
            let a = d1p.coeff(5, 1);
            let b = d1.coeff(0, 0);
            Ok((a == int(-1) && b == int(6), format!("{a}, {b}")))
        },
    );
    rec.check(
        "eq-4.1-numeric",
        "symbolic and numeric determinants agree at 10 points",
        || {
            let (d1, d1p) = (expected_det_c1(), expected_det_c1_prime());
            let mut ok = true;
            for k in 1..=10i64 {
                let x = rat(2 * k + 1, k);
                let y = rat(k, 3 * k + 2);
                let (n1, n1p) = eval_c1_at(&x, &y);
                ok &= n1 == d1.eval(&x, &y) && n1p == d1p.eval(&x, &y);
            }
            Ok((ok, if ok { "agree" } else { "disagree" }.into()))
        },
    );
    rec.check(
        "eq-4.1-beta",
        "sum of entries of [[x - y, 1], [1, x]]^-1 = (y - (2x - 2)) / (xy - (x^2 - 1))",
        || {
            let x = BiPoly::x();
            let y = BiPoly::y();
            let p = &x - &y;
            // adjugate of [[p, 1], [1, x]] sums to p + x - 2
            let adj_sum = &(&p + &x) - &BiPoly::constant(int(2));
            let det = &(&p * &x) - &BiPoly::one();
            let beta_num = &y - &bx(&[-2, 2]);
            let beta_den = &(&x * &y) - &bx(&[-1, 0, 1]);
            let ok = &adj_sum * &beta_den == &beta_num * &det;
            Ok((ok, format!("({adj_sum}) / ({det})")))
        },
    );
    rec.finish()
}

fn factor_list() -> Vec<(&'static str, UPoly)> {
    vec![
        ("y", UPoly::x()),
        ("(y-1)^2", UPoly::from_ints(&[1, -2, 1])),
        ("y^2-y+1", UPoly::from_ints(&[1, -1, 1])),
        ("degree-12", UPoly::from_ints(&FACTOR_12)),
        ("degree-10", UPoly::from_ints(&FACTOR_10)),
    ]
}

pub fn cert_lemma_4_1() -> Vec<CertReport> {
    let mut rec = Recorder::default();
    let (p, q) = expected_rational_function();
    rec.check(
        "lemma-4.1-rational-function",
        &format!("({p}) / ({q})"),
        || {
            let (n, d) = substituted_rational_function();
            let ok = &n * &q == &p * &d;
            Ok((ok, format!("({n}) / ({d})")))
        },
    );
    let lo = rat(7, 9);
    let hi = rat(1, 1);
    let probe = rat(8, 9);
    for (name, f) in factor_list() {
        let claim = format!("lemma-4.1-sturm-{name}");
        rec.check(&claim, "0 roots in (7/9, 1), positive at 8/9", || {
            let roots = sturm_count_open(&f, &lo, &hi)?;
            let sign = f.sign_at(&probe);
            Ok((
                roots == 0 && sign == Sign::Positive,
                format!("{roots} roots, sign {}", sign.as_i8()),
            ))
        });
    }
    rec.check("lemma-4.1-phi-containment", "phi^(-1/2) > 7/9", || {
        let s = phi_inv_sqrt()?;
        let (a, b) = super::constants::decimal_bracket(&s, 5);
        Ok((
            s.cmp_rational(&lo) == Ordering::Greater,
            format!("[{a}, {b}]"),
        ))
    });
    rec.check(
        "lemma-4.1-alpha-ge-beta-samples",
        "alpha >= beta at sample x in (2, lambda')",
        || {
            let mut ok = true;
            for x in [
                rat(2001, 1000),
                rat(201, 100),
                rat(203, 100),
                rat(41, 20),
                rat(2058, 1000),
            ] {
                ok &= alpha_ge_beta(&x)?;
            }
            Ok((ok, if ok { "holds" } else { "violated" }.into()))
        },
    );
    rec.finish()
}

/// Exact test of `alpha >= beta` at a rational `x > 2`.
pub fn alpha_ge_beta(x: &Rational) -> Result<bool> {
    let (a, b) = alpha_beta(x)?;
    Ok(a.cmp_surd(&b)? != Ordering::Less)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_verified() {
        for r in cert_eq_4_1().into_iter().chain(cert_lemma_4_1()) {
            assert!(r.is_verified(), "{r:?}");
        }
    }

    #[test]
    fn wrong_coefficient_is_caught() {
        let mut c = POLY_C;
        c[0] = 5;
        let wrong = &bx(&c) - &(&bx(&POLY_B) * &BiPoly::y());
        let d = bareiss_det(&c1_symbolic(), &BiPoly::one());
        assert_ne!(d, wrong);
    }

    #[test]
    fn degree_twelve_factor_at_eight_ninths() {
        let v = UPoly::from_ints(&FACTOR_12).eval(&rat(8, 9));
        assert!(v > int(0));
    }
}
