use std::fmt;

use num_traits::{Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::matrix::{adjacency, SymMatrix};
use crate::error::{Error, Result};
use crate::exactnum::rational::{dyadic_near, fmt_rational, midpoint, to_f64, Rounding};
use crate::exactnum::{bareiss_det, parse_rational, Rational, UPoly};
use crate::graphkit::Graph;

/// Closed interval `[lo, hi]` known to contain an eigenvalue.
///
/// When `lo < hi` the witnesses are: nothing below `lo`, something below
/// `hi`. When `lo == hi` the value is exact: nothing below it and the shifted
/// matrix is singular there.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct EigBound {
    pub lo: Rational,
    pub hi: Rational,
}

impl EigBound {
    pub fn new(lo: Rational, hi: Rational) -> EigBound {
        assert!(lo <= hi, "empty interval");
        EigBound { lo, hi }
    }

    pub fn exact(v: Rational) -> EigBound {
        EigBound {
            lo: v.clone(),
            hi: v,
        }
    }

    pub fn width(&self) -> Rational {
        &self.hi - &self.lo
    }

    pub fn mid(&self) -> Rational {
        midpoint(&self.lo, &self.hi)
    }

    pub fn is_exact(&self) -> bool {
        self.lo == self.hi
    }

    pub fn contains(&self, r: &Rational) -> bool {
        &self.lo <= r && r <= &self.hi
    }

    /// Interval `[-hi, -lo]`.
    pub fn negated(&self) -> EigBound {
        EigBound {
            lo: -self.hi.clone(),
            hi: -self.lo.clone(),
        }
    }

    pub fn to_f64(&self) -> (f64, f64) {
        (to_f64(&self.lo), to_f64(&self.hi))
    }
}

impl fmt::Display for EigBound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{}, {}]",
            fmt_rational(&self.lo),
            fmt_rational(&self.hi)
        )
    }
}

#[derive(Serialize, Deserialize)]
struct EigBoundRecord {
    lo: String,
    hi: String,
}

impl Serialize for EigBound {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        EigBoundRecord {
            lo: fmt_rational(&self.lo),
            hi: fmt_rational(&self.hi),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for EigBound {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<EigBound, D::Error> {
        let rec = EigBoundRecord::deserialize(d)?;
        let lo = parse_rational(&rec.lo).map_err(serde::de::Error::custom)?;
        let hi = parse_rational(&rec.hi).map_err(serde::de::Error::custom)?;
        if lo > hi {
            return Err(serde::de::Error::custom("lo > hi"));
        }
        Ok(EigBound { lo, hi })
    }
}

/// Default tolerance, `1/10^6`.
pub fn default_tol() -> Rational {
    Rational::new(1.into(), 1_000_000.into())
}

fn check_tol(tol: &Rational) -> Result<()> {
    if tol.is_positive() {
        Ok(())
    } else {
        Err(Error::OutOfRange(format!(
            "tolerance must be positive, got {}",
            fmt_rational(tol)
        )))
    }
}

/// Certified bracket of the smallest eigenvalue of `g`'s signed adjacency
/// matrix, of width at most `tol`.
pub fn lambda1(g: &Graph, tol: &Rational) -> Result<EigBound> {
    if g.n() == 0 {
        return Err(Error::EmptyGraph);
    }
    if g.edge_count() == 0 {
        check_tol(tol)?;
        return Ok(EigBound::exact(Rational::zero()));
    }
    let lower = -Rational::from_integer((g.max_degree() as i64 + 1).into());
    lambda1_matrix(&adjacency(g), lower, Rational::zero(), tol)
}

/// Smallest eigenvalue of `a`, given that it lies in `[lower, upper)`.
///
/// A floating-point bisection proposes a narrow dyadic bracket, whose two
/// endpoints are then confirmed by exact inertia counts. Whatever the exact
/// counts establish is kept, and exact bisection finishes the job.
pub fn lambda1_matrix(
    a: &SymMatrix<Rational>,
    lower: Rational,
    upper: Rational,
    tol: &Rational,
) -> Result<EigBound> {
    check_tol(tol)?;
    if a.order() == 0 {
        return Err(Error::EmptyGraph);
    }
    let mut lo = lower;
    let mut hi = upper;
    // float-guided bracket, at most ~1e-9 wide so f64 can resolve it
    let guide_width = to_f64(tol).max(1e-9);
    if guide_width < to_f64(&(&hi - &lo)) {
        let af = a.to_f64();
        let est = float_lambda1(&af, to_f64(&lo), to_f64(&hi));
        let bits = 4 + (-guide_width.log2()).ceil().max(0.0) as u32;
        let glo = dyadic_near(est - 0.375 * guide_width, bits, Rounding::Down);
        let ghi = dyadic_near(est + 0.375 * guide_width, bits, Rounding::Up);
        if glo > lo && glo < hi {
            if a.inertia_below(&glo) == 0 {
                lo = glo;
            } else {
                hi = glo;
            }
        }
        if ghi > lo && ghi < hi {
            let sh = a.shifted(&ghi).inertia();
            if sh.neg >= 1 {
                hi = ghi;
            } else if sh.zero > 0 {
                return Ok(EigBound::exact(ghi));
            } else {
                lo = ghi;
            }
        }
    }
    while &(&hi - &lo) > tol {
        let mid = midpoint(&lo, &hi);
        let inertia = a.shifted(&mid).inertia();
        if inertia.neg >= 1 {
            hi = mid;
        } else if inertia.zero > 0 {
            return Ok(EigBound::exact(mid));
        } else {
            lo = mid;
        }
    }
    Ok(EigBound { lo, hi })
}

/// Floating-point estimate by bisection on f64 inertia counts.
pub(crate) fn float_lambda1(a: &SymMatrix<f64>, mut lo: f64, mut hi: f64) -> f64 {
    for _ in 0..64 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if a.add_identity(&-mid).inertia().neg >= 1 {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    0.5 * (lo + hi)
}

/// Re-checks the inertia witnesses of `b` against `a`.
pub fn verify_bound(a: &SymMatrix<Rational>, b: &EigBound) -> bool {
    if b.is_exact() {
        let i = a.shifted(&b.lo).inertia();
        i.neg == 0 && i.zero > 0
    } else {
        a.inertia_below(&b.lo) == 0 && a.inertia_below(&b.hi) >= 1
    }
}

/// Largest order `charpoly` accepts unless told otherwise.
pub const CHARPOLY_LIMIT: usize = 64;

/// `det(xI - A)` by fraction-free elimination over `Q[x]`.
pub fn charpoly(a: &SymMatrix<Rational>) -> Result<UPoly> {
    charpoly_with_limit(a, CHARPOLY_LIMIT)
}

pub fn charpoly_with_limit(a: &SymMatrix<Rational>, limit: usize) -> Result<UPoly> {
    let n = a.order();
    if n > limit {
        return Err(Error::OrderTooLarge { order: n, limit });
    }
    let m: Vec<Vec<UPoly>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let c = UPoly::constant(-a.get(i, j).clone());
                    if i == j {
                        &c + &UPoly::x()
                    } else {
                        c
                    }
                })
                .collect()
        })
        .collect();
    Ok(bareiss_det(&m, &UPoly::one()))
}

/// `z^T A z / z^T z`.
pub fn rayleigh(g: &Graph, z: &[Rational]) -> Result<Rational> {
    rayleigh_matrix(&adjacency(g), z)
}

pub fn rayleigh_matrix(a: &SymMatrix<Rational>, z: &[Rational]) -> Result<Rational> {
    if z.len() != a.order() {
        return Err(Error::DimensionMismatch {
            expected: a.order(),
            got: z.len(),
        });
    }
    let norm: Rational = z.iter().map(|v| v * v).sum();
    if norm.is_zero() {
        return Err(Error::ZeroVector);
    }
    let mut num = Rational::zero();
    for (i, zi) in z.iter().enumerate() {
        if zi.is_zero() {
            continue;
        }
        for (j, zj) in z.iter().enumerate() {
            let aij = a.get(i, j);
            if !aij.is_zero() && !zj.is_zero() {
                num += zi * aij * zj;
            }
        }
    }
    Ok(num / norm)
}

/// Multiplicity of `-lambda` as an eigenvalue: `n - rank(A + lambda I)`.
pub fn multiplicity(g: &Graph, lambda: &Rational) -> usize {
    adjacency(g).shifted(&-lambda.clone()).nullity()
}

/// Sign of `charpoly(t)` predicted by the inertia count below `t`.
pub fn charpoly_sign_from_inertia(a: &SymMatrix<Rational>, t: &Rational) -> i8 {
    let i = a.shifted(t).inertia();
    if i.zero > 0 {
        0
    } else if i.neg.is_multiple_of(2) {
        1
    } else {
        -1
    }
}
