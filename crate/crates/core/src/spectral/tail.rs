//! Infinite zero tails: `A_G + xI - yE_{v,v}` tests and the closed forms for
//! the `01110...` and `10...` tails.

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Signed, Zero};

use super::eig::EigBound;
use super::matrix::{adjacency_in, Inertia, SymMatrix};
use crate::error::{Error, Result};
use crate::exactnum::rational::{dyadic_near, fmt_rational, midpoint, to_f64, Rounding};
use crate::exactnum::{int, Field, QuadExt, Rational, Surd};
use crate::graphkit::Graph;

/// `y = x/2 - sqrt(x^2/4 - 1)`, the smaller root of `y^2 - xy + 1`. Rational
/// when the radicand is a perfect square (for instance `y = 1` at `x = 2`).
pub fn tail_y(x: &Rational) -> Result<Surd> {
    if x < &int(2) {
        return Err(Error::OutOfRange(format!(
            "x = {} is below 2",
            fmt_rational(x)
        )));
    }
    let d = x * x / int(4) - int(1);
    Surd::new(x / int(2), -Rational::one(), d)
}

fn tail_y_f64(x: f64) -> f64 {
    x / 2.0 - (x * x / 4.0 - 1.0).max(0.0).sqrt()
}

/// Inertia of `A_G + xI - cE_{v,v}`, `v` the root of `g`.
pub fn corner_inertia(g: &Graph, x: &Rational, c: &Surd) -> Result<Inertia> {
    let v = g.require_root()?;
    Ok(match c {
        Surd::Rational(c) => corner_matrix(g, v, x, c).inertia(),
        Surd::Quad(q) => {
            let xq = q.embed(x);
            corner_matrix(g, v, &xq, q).inertia()
        }
    })
}

fn corner_matrix<F: Field>(g: &Graph, v: usize, x: &F, c: &F) -> SymMatrix<F> {
    adjacency_in(g, &x.one_like())
        .add_identity(x)
        .add_to_diagonal(v, &c.negated())
}

/// How `psd_shifted` treats the irrational `y`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PsdMode {
    /// Arithmetic in `Q(sqrt(x^2/4 - 1))`.
    Exact,
    /// Use the given rational `y' >= y` in place of `y`. A positive answer
    /// is then still valid for `y`; a negative one is inconclusive.
    Relaxed(Rational),
}

/// Whether `A_G + xI - yE_{v,v}` is positive semidefinite (or definite when
/// `strict`), with `y` as in [`tail_y`].
pub fn psd_shifted(g: &Graph, x: &Rational, strict: bool) -> Result<bool> {
    psd_shifted_with(g, x, strict, &PsdMode::Exact)
}

pub fn psd_shifted_with(g: &Graph, x: &Rational, strict: bool, mode: &PsdMode) -> Result<bool> {
    if strict && x <= &int(2) {
        return Err(Error::OutOfRange(format!(
            "strict test needs x > 2, got {}",
            fmt_rational(x)
        )));
    }
    let y = tail_y(x)?;
    let c = match mode {
        PsdMode::Exact => y,
        PsdMode::Relaxed(yp) => {
            if y.cmp_surd(&Surd::Rational(yp.clone()))? == std::cmp::Ordering::Greater {
                return Err(Error::OutOfRange(format!(
                    "relaxation {} is below y",
                    fmt_rational(yp)
                )));
            }
            Surd::Rational(yp.clone())
        }
    };
    let i = corner_inertia(g, x, &c)?;
    Ok(if strict { i.is_pd() } else { i.is_psd() })
}

fn psd_f64(g: &Graph, v: usize, x: f64, c: f64) -> bool {
    corner_matrix(g, v, &x, &c).inertia().is_psd()
}

/// Bracket `[-x_true, -x_false]` of `lambda_1(G, 0^inf)` with width at most
/// `tol`, where the test holds at `x_true` and fails at `x_false`. Returns
/// exactly `-2` when the test already holds at `x = 2`.
pub fn lambda1_tail(g: &Graph, tol: &Rational) -> Result<EigBound> {
    let v = g.require_root()?;
    if !tol.is_positive() {
        return Err(Error::OutOfRange("tolerance must be positive".into()));
    }
    let two = int(2);
    if psd_shifted(g, &two, false)? {
        return Ok(EigBound::exact(-two));
    }
    let deg_root = g.degrees()[v];
    let start = g.max_degree().max(deg_root + 1).max(2);
    let (lo, hi) = threshold(
        two,
        Rational::from_integer((start as i64).into()),
        tol,
        |x| psd_f64(g, v, x, tail_y_f64(x)),
        |x| psd_shifted(g, x, false),
    )?;
    Ok(EigBound::new(-hi, -lo))
}

/// Finds `(x_false, x_true)` with `x_true - x_false <= tol` for a predicate
/// that is false below some threshold and true above it. `x_false` must be
/// known false; `x_true` is doubled until the predicate holds. The f64
/// predicate only proposes points; every endpoint is settled exactly.
pub(crate) fn threshold(
    mut x_false: Rational,
    mut x_true: Rational,
    tol: &Rational,
    float_pred: impl Fn(f64) -> bool,
    exact_pred: impl Fn(&Rational) -> Result<bool>,
) -> Result<(Rational, Rational)> {
    let mut guard = 0;
    while !exact_pred(&x_true)? {
        x_false = x_true.clone();
        x_true = &x_true * int(2);
        guard += 1;
        if guard > 64 {
            return Err(Error::OutOfRange("no upper bracket found".into()));
        }
    }
    let width = to_f64(tol).max(1e-9);
    if width < to_f64(&(&x_true - &x_false)) {
        let (mut flo, mut fhi) = (to_f64(&x_false), to_f64(&x_true));
        for _ in 0..64 {
            let mid = 0.5 * (flo + fhi);
            if mid <= flo || mid >= fhi {
                break;
            }
            if float_pred(mid) {
                fhi = mid;
            } else {
                flo = mid;
            }
        }
        let est = 0.5 * (flo + fhi);
        let bits = 4 + (-width.log2()).ceil().max(0.0) as u32;
        for probe in [
            dyadic_near(est - 0.375 * width, bits, Rounding::Down),
            dyadic_near(est + 0.375 * width, bits, Rounding::Up),
        ] {
            if probe > x_false && probe < x_true {
                if exact_pred(&probe)? {
                    x_true = probe;
                } else {
                    x_false = probe;
                }
            }
        }
    }
    while &(&x_true - &x_false) > tol {
        let mid = midpoint(&x_false, &x_true);
        if exact_pred(&mid)? {
            x_true = mid;
        } else {
            x_false = mid;
        }
    }
    Ok((x_false, x_true))
}

fn poly_in<F: Field>(coeffs: &[i64], x: &F) -> F {
    let mut acc = x.zero_like();
    for &c in coeffs.iter().rev() {
        acc = acc.times(x).plus(&x.embed(&int(c)));
    }
    acc
}

// coefficients from the constant term up
const ALPHA_A: [i64; 6] = [0, 3, 2, -5, 0, 1];
const ALPHA_B: [i64; 7] = [-1, -6, 9, 4, -7, 0, 1];
const ALPHA_C: [i64; 8] = [6, -3, -20, 19, 6, -9, 0, 1];

/// `(alpha, beta)` evaluated in the field of `x` and `y`.
pub fn alpha_beta_in<F: Field>(x: &F, y: &F) -> Option<(F, F)> {
    let a = poly_in(&ALPHA_A, x);
    let b = poly_in(&ALPHA_B, x);
    let c = poly_in(&ALPHA_C, x);
    let alpha_den = b.times(y).minus(&c);
    let one = x.one_like();
    let two = one.plus(&one);
    let beta_num = y.minus(&two.times(x).minus(&two));
    let beta_den = x.times(y).minus(&x.times(x).minus(&one));
    if alpha_den.is_zero_elem() || beta_den.is_zero_elem() {
        return None;
    }
    let alpha = a.times(y).minus(&b).over(&alpha_den);
    Some((alpha, beta_num.over(&beta_den)))
}

fn surd_of(q: QuadExt) -> Surd {
    if q.coeff().is_zero() {
        Surd::Rational(q.base().clone())
    } else {
        Surd::Quad(q)
    }
}

/// Closed forms for the corrections of the `01110...` tail (`alpha`) and
/// the `10...` tail (`beta`) at `x > 2`.
pub fn alpha_beta(x: &Rational) -> Result<(Surd, Surd)> {
    if x <= &int(2) {
        return Err(Error::OutOfRange(format!(
            "x = {} must exceed 2",
            fmt_rational(x)
        )));
    }
    let vanishing = || Error::VanishingDenominator(fmt_rational(x));
    match tail_y(x)? {
        Surd::Rational(y) => {
            let (a, b) = alpha_beta_in(x, &y).ok_or_else(vanishing)?;
            Ok((Surd::Rational(a), Surd::Rational(b)))
        }
        Surd::Quad(y) => {
            let xq = y.embed(x);
            let (a, b) = alpha_beta_in(&xq, &y).ok_or_else(vanishing)?;
            Ok((surd_of(a), surd_of(b)))
        }
    }
}

/// Tail patterns with closed-form corrections.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TailPattern {
    /// `0 1 1 1 0 0 ...`
    ZeroOnesThenZeros,
    /// `1 0 0 ...`
    OneThenZeros,
}

impl TailPattern {
    /// The finite prefix before the zero tail.
    pub fn prefix(self) -> &'static [u32] {
        match self {
            TailPattern::ZeroOnesThenZeros => &[0, 1, 1, 1],
            TailPattern::OneThenZeros => &[1],
        }
    }
}

impl fmt::Display for TailPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TailPattern::ZeroOnesThenZeros => write!(f, "01110^inf"),
            TailPattern::OneThenZeros => write!(f, "10^inf"),
        }
    }
}

impl FromStr for TailPattern {
    type Err = Error;

    fn from_str(s: &str) -> Result<TailPattern> {
        match s.trim() {
            "01110^inf" | "01^30^inf" | "0111" | "alpha" => Ok(TailPattern::ZeroOnesThenZeros),
            "10^inf" | "1" | "10" | "beta" => Ok(TailPattern::OneThenZeros),
            other => Err(Error::Parse(format!("unknown tail pattern {other:?}"))),
        }
    }
}

/// Whether `lambda_1(G, pattern) >= -x`, decided through the PSD test of
/// `A_G + xI - cE_{v,v}` with `c` the pattern's correction.
pub fn decide_tail_pattern(g: &Graph, pattern: TailPattern, x: &Rational) -> Result<bool> {
    g.require_root()?;
    let (alpha, beta) = alpha_beta(x)?;
    let c = match pattern {
        TailPattern::ZeroOnesThenZeros => alpha,
        TailPattern::OneThenZeros => beta,
    };
    Ok(corner_inertia(g, x, &c)?.is_psd())
}

/// Bracket of `lambda_1(G, pattern)` of width at most `tol`, found by
/// bisection on [`decide_tail_pattern`]; `x = 2` counts as the false side.
pub fn lambda1_tail_pattern(g: &Graph, pattern: TailPattern, tol: &Rational) -> Result<EigBound> {
    let v = g.require_root()?;
    if !tol.is_positive() {
        return Err(Error::OutOfRange("tolerance must be positive".into()));
    }
    let start = (g.max_degree() + 2).max(4);
    let float_pred = |x: f64| -> bool {
        let y = tail_y_f64(x);
        match alpha_beta_in(&x, &y) {
            Some((a, b)) => {
                let c = match pattern {
                    TailPattern::ZeroOnesThenZeros => a,
                    TailPattern::OneThenZeros => b,
                };
                psd_f64(g, v, x, c)
            }
            None => false,
        }
    };
    let exact_pred = |x: &Rational| -> Result<bool> {
        if x <= &int(2) {
            return Ok(false);
        }
        decide_tail_pattern(g, pattern, x)
    };
    let (lo, hi) = threshold(
        int(2),
        Rational::from_integer((start as i64).into()),
        tol,
        float_pred,
        exact_pred,
    )?;
    Ok(EigBound::new(-hi, -lo))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{rat, Ring, Sign};
    use crate::graphkit::{build_rowing, builtin, RowingString};
    use crate::spectral::eig::lambda1;

    #[test]
    fn dot_tail_is_minus_two() {
        let dot = builtin("dot").unwrap();
        assert!(psd_shifted(&dot, &int(2), false).unwrap());
        assert_eq!(
            lambda1_tail(&dot, &rat(1, 1000)).unwrap(),
            EigBound::exact(int(-2))
        );
    }

    #[test]
    fn f2_examples() {
        let f2 = builtin("F2").unwrap();
        assert!(!psd_shifted(&f2, &int(2), false).unwrap());
        let relaxed = PsdMode::Relaxed(rat(85, 101));
        assert!(psd_shifted_with(&f2, &rat(136, 67), true, &relaxed).unwrap());
        let b = lambda1_tail(&f2, &rat(1, 1_000_000)).unwrap();
        assert!(b.lo > rat(-136, 67) && b.hi < int(-2));
    }

    #[test]
    fn relaxation_must_dominate() {
        let f2 = builtin("F2").unwrap();
        let bad = PsdMode::Relaxed(rat(84, 101));
        assert!(psd_shifted_with(&f2, &rat(136, 67), false, &bad).is_err());
        assert!(psd_shifted(&f2, &rat(3, 2), false).is_err());
        assert!(psd_shifted(&f2, &int(2), true).is_err());
    }

    #[test]
    fn beta_matches_two_by_two_inverse() {
        let x = int(3);
        let y = match tail_y(&x).unwrap() {
            Surd::Quad(q) => q,
            Surd::Rational(_) => panic!("irrational at x = 3"),
        };
        let xq = y.embed(&x);
        // C2 = [[x - y, 1], [1, x]]; sum of entries of the inverse
        let p = xq.minus(&y);
        let one = xq.one_like();
        let det = p.times(&xq).minus(&one);
        let sum = xq.plus(&p).minus(&one).minus(&one).over(&det);
        let (_, beta) = alpha_beta(&x).unwrap();
        assert_eq!(beta, Surd::Quad(sum));
    }

    #[test]
    fn alpha_at_least_beta_near_threshold() {
        let (a, b) = alpha_beta(&rat(407, 200)).unwrap();
        let diff = match (a, b) {
            (Surd::Quad(a), Surd::Quad(b)) => a.minus(&b).sign(),
            _ => panic!("irrational expected"),
        };
        assert_ne!(diff, Sign::Negative);
    }

    #[test]
    fn rational_y_at_five_halves() {
        assert_eq!(tail_y(&rat(5, 2)).unwrap(), Surd::Rational(rat(1, 2)));
        let (a, b) = alpha_beta(&rat(5, 2)).unwrap();
        assert!(matches!(a, Surd::Rational(_)));
        assert!(matches!(b, Surd::Rational(_)));
    }

    #[test]
    fn pattern_examples() {
        let dot = builtin("dot").unwrap();
        assert!(decide_tail_pattern(&dot, TailPattern::OneThenZeros, &int(10)).unwrap());
        assert!(decide_tail_pattern(&dot, TailPattern::OneThenZeros, &int(2)).is_err());
        // the 10^inf tail of G is the plain tail of (G, 1)
        let f1 = builtin("F1").unwrap();
        let tol = rat(1, 100_000);
        let via_pattern = lambda1_tail_pattern(&f1, TailPattern::OneThenZeros, &tol).unwrap();
        let g1 = build_rowing(&f1, &RowingString::ones(1)).unwrap();
        let via_tail = lambda1_tail(&g1, &tol).unwrap();
        assert!(via_pattern.lo <= via_tail.hi && via_tail.lo <= via_pattern.hi);
    }

    #[test]
    fn pattern_bracket_against_truncation() {
        let f1 = builtin("F1").unwrap();
        let tol = rat(1, 10_000);
        let b = lambda1_tail_pattern(&f1, TailPattern::ZeroOnesThenZeros, &tol).unwrap();
        assert!(
            !decide_tail_pattern(&f1, TailPattern::ZeroOnesThenZeros, &-b.hi.clone())
                .unwrap_or(false)
        );
        assert!(decide_tail_pattern(&f1, TailPattern::ZeroOnesThenZeros, &-b.lo.clone()).unwrap());
        // finite truncations approach the limit from above
        let mut s = vec![0, 1, 1, 1];
        s.extend(std::iter::repeat_n(0, 60));
        let g = build_rowing(&f1, &RowingString::new(s)).unwrap();
        let fin = lambda1(&g, &tol).unwrap();
        assert!(fin.hi >= b.lo);
        assert!(&fin.lo - &b.hi < rat(1, 1000));
    }
}
