//! Sturm chains, root counting and real-root isolation.

use num_traits::Zero;

use super::algreal::AlgReal;
use super::poly::UPoly;
use super::rational::{midpoint, Rational, Sign};
use crate::error::{Error, Result};

/// Sturm chain `p, p', -rem(p, p'), ...`, each remainder reduced to its
/// primitive part (a positive multiple, so sign variations are unchanged).
#[derive(Clone, Debug)]
pub struct SturmChain {
    chain: Vec<UPoly>,
}

impl SturmChain {
    pub fn new(p: &UPoly) -> Result<SturmChain> {
        if p.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let mut chain = vec![p.primitive()];
        let d = p.derivative();
        if !d.is_zero() {
            chain.push(d.primitive());
        }
        while chain.len() >= 2 {
            let a = &chain[chain.len() - 2];
            let b = &chain[chain.len() - 1];
            let (_, r) = a.divrem(b)?;
            if r.is_zero() {
                break;
            }
            chain.push((-&r).primitive());
        }
        Ok(SturmChain { chain })
    }

    pub fn polys(&self) -> &[UPoly] {
        &self.chain
    }

    /// Sign variations at `t`, zeros skipped.
    pub fn variations(&self, t: &Rational) -> usize {
        count_variations(self.chain.iter().map(|q| q.sign_at(t)))
    }

    fn variations_at_infinity(&self, positive: bool) -> usize {
        count_variations(self.chain.iter().map(|q| {
            let lead = Sign::of_rational(q.leading().expect("chain entries are nonzero"));
            let odd = q.degree().unwrap_or(0) % 2 == 1;
            if !positive && odd {
                lead.flip()
            } else {
                lead
            }
        }))
    }

    /// Distinct roots in `(lo, hi]`.
    pub fn count(&self, lo: &Rational, hi: &Rational) -> usize {
        self.variations(lo).saturating_sub(self.variations(hi))
    }

    /// Distinct real roots.
    pub fn count_all(&self) -> usize {
        self.variations_at_infinity(false)
            .saturating_sub(self.variations_at_infinity(true))
    }
}

fn count_variations(signs: impl Iterator<Item = Sign>) -> usize {
    let mut last = Sign::Zero;
    let mut n = 0;
    for s in signs {
        if s == Sign::Zero {
            continue;
        }
        if last != Sign::Zero && s != last {
            n += 1;
        }
        last = s;
    }
    n
}

/// Number of distinct real roots of `p` in the half-open interval `(lo, hi]`.
pub fn sturm_count(p: &UPoly, lo: &Rational, hi: &Rational) -> Result<usize> {
    if lo >= hi {
        return Err(Error::OutOfRange(format!("empty interval ({lo}, {hi}]")));
    }
    Ok(SturmChain::new(p)?.count(lo, hi))
}

/// Distinct roots strictly inside `(lo, hi)`.
pub fn sturm_count_open(p: &UPoly, lo: &Rational, hi: &Rational) -> Result<usize> {
    let c = sturm_count(p, lo, hi)?;
    Ok(if p.eval(hi).is_zero() { c - 1 } else { c })
}

/// All distinct real roots, ascending, with pairwise disjoint isolating
/// intervals. Roots that are hit exactly by a bisection point come back as
/// degenerate intervals.
pub fn isolate_real_roots(p: &UPoly) -> Result<Vec<AlgReal>> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let sf = p.square_free();
    if sf.degree() == Some(0) {
        return Ok(Vec::new());
    }
    let chain = SturmChain::new(&sf)?;
    let bound = sf.cauchy_bound()?;
    let lo = -bound.clone();
    let total = chain.count(&lo, &bound);
    let mut out = Vec::with_capacity(total);
    isolate_in(&sf, &chain, lo, bound, total, &mut out);
    Ok(out)
}

// Roots of `p` in (lo, hi] are exactly `count`; `lo` is never a root that
// belongs to this call.
fn isolate_in(
    p: &UPoly,
    chain: &SturmChain,
    lo: Rational,
    hi: Rational,
    count: usize,
    out: &mut Vec<AlgReal>,
) {
    match count {
        0 => {}
        1 => out.push(single_root(p, chain, lo, hi)),
        _ => {
            let mid = midpoint(&lo, &hi);
            let left = chain.count(&lo, &mid);
            isolate_in(p, chain, lo, mid.clone(), left, out);
            isolate_in(p, chain, mid, hi, count - left, out);
        }
    }
}

// Exactly one root in (lo, hi]; shrink until both endpoints are non-roots
// (or the root itself is found).
fn single_root(p: &UPoly, chain: &SturmChain, mut lo: Rational, mut hi: Rational) -> AlgReal {
    if let Some(r) = linear_root(p) {
        return AlgReal::exact_unchecked(p.clone(), r);
    }
    loop {
        if p.eval(&hi).is_zero() {
            return AlgReal::exact_unchecked(p.clone(), hi);
        }
        if !p.eval(&lo).is_zero() {
            return AlgReal::from_parts_unchecked(p.clone(), lo, hi);
        }
        let mid = midpoint(&lo, &hi);
        if chain.count(&lo, &mid) == 1 {
            hi = mid;
        } else {
            lo = mid;
        }
    }
}

/// Bisects an isolating interval down to width at most `tol`.
pub fn refine_interval(
    p: &UPoly,
    lo: &Rational,
    hi: &Rational,
    tol: &Rational,
) -> (Rational, Rational) {
    if let Some(r) = linear_root(p) {
        return (r.clone(), r);
    }
    let mut lo = lo.clone();
    let mut hi = hi.clone();
    if lo == hi {
        return (lo, hi);
    }
    let s_lo = p.sign_at(&lo);
    while &(&hi - &lo) > tol {
        let mid = midpoint(&lo, &hi);
        let s = p.sign_at(&mid);
        if s == Sign::Zero {
            return (mid.clone(), mid);
        }
        if s == s_lo {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    (lo, hi)
}

fn linear_root(p: &UPoly) -> Option<Rational> {
    (p.degree() == Some(1)).then(|| -(p.coeff(0) / p.coeff(1)))
}
