//! Seeded random checks: the tail comparison between `a 0 1^3 0^inf` and
//! `a 1 0^inf`, and the two path-splitting recipes with the Weyl bound.

use std::cmp::Ordering;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::constants::lambda_prime;
use super::report::{CertReport, Recorder};
use crate::error::{Error, Result};
use crate::exactnum::{fmt_rational, int, rat, sturm_count, AlgReal, Rational, UPoly};
use crate::graphkit::{build_rowing, builtin, Graph, RowingString};
use crate::spectral::{
    decide_tail_pattern, lambda1, lambda1_tail_pattern, psd_shifted, EigBound, TailPattern,
};

const BASES: [&str; 3] = ["F1", "F2", "F3"];

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Lemma36Outcome {
    /// Precondition certified and `left <= right` certified.
    Holds { left: EigBound, right: EigBound },
    /// `left` is certainly outside `(-lambda', -2)`.
    Skipped { left: EigBound },
    /// `left` straddles an end of `(-lambda', -2)` even after refinement.
    Undecided { left: EigBound },
    /// `right < left` certified.
    Violated { left: EigBound, right: EigBound },
    /// Brackets overlap and no separating point was found.
    Inconclusive { left: EigBound, right: EigBound },
}

impl Lemma36Outcome {
    pub fn is_failure(&self) -> bool {
        matches!(
            self,
            Lemma36Outcome::Violated { .. } | Lemma36Outcome::Inconclusive { .. }
        )
    }
}

/// `lo > -a`
fn above_neg(r: &Rational, a: &AlgReal) -> bool {
    a.cmp_rational(&-r.clone()) == Ordering::Greater
}

/// `hi <= -a`
fn at_most_neg(r: &Rational, a: &AlgReal) -> bool {
    a.cmp_rational(&-r.clone()) != Ordering::Greater
}

/// Checks `lambda_1(F, a 0 1^3 0^inf) <= lambda_1(F, a 1 0^inf)` for one
/// instance, provided `-lambda' < lambda_1(F, a 0 1^3 0^inf) < -2`.
pub fn lemma_3_6_instance(
    base: &Graph,
    a: &RowingString,
    tol: &Rational,
) -> Result<Lemma36Outcome> {
    let lp = lambda_prime()?;
    let g = build_rowing(base, a)?;
    let two = int(-2);
    // a tail sitting exactly at -2 is decided by the plain shifted test on
    // the extended graph; brackets alone can never separate it from -2
    let extended = build_rowing(
        &g,
        &RowingString::new(TailPattern::ZeroOnesThenZeros.prefix().to_vec()),
    )?;
    if psd_shifted(&extended, &int(2), false)? {
        return Ok(Lemma36Outcome::Skipped {
            left: EigBound::exact(two),
        });
    }
    let mut left = lambda1_tail_pattern(&g, TailPattern::ZeroOnesThenZeros, tol)?;
    let outside = |b: &EigBound| at_most_neg(&b.hi, &lp) || b.lo >= two;
    let inside = |b: &EigBound| above_neg(&b.lo, &lp) && b.hi < two;
    if outside(&left) {
        return Ok(Lemma36Outcome::Skipped { left });
    }
    if !inside(&left) {
        left = lambda1_tail_pattern(&g, TailPattern::ZeroOnesThenZeros, &(tol / int(1 << 20)))?;
        if outside(&left) {
            return Ok(Lemma36Outcome::Skipped { left });
        }
        if !inside(&left) {
            return Ok(Lemma36Outcome::Undecided { left });
        }
    }
    let right = lambda1_tail_pattern(&g, TailPattern::OneThenZeros, tol)?;
    if left.hi <= right.lo {
        return Ok(Lemma36Outcome::Holds { left, right });
    }
    if right.hi < left.lo {
        return Ok(Lemma36Outcome::Violated { left, right });
    }
    // the beta test holds at x = -right.lo; if the alpha test fails there,
    // the alpha threshold lies strictly above it
    let x = -right.lo.clone();
    if x > int(2) && !decide_tail_pattern(&g, TailPattern::ZeroOnesThenZeros, &x)? {
        return Ok(Lemma36Outcome::Holds { left, right });
    }
    Ok(Lemma36Outcome::Inconclusive { left, right })
}

fn random_binary(rng: &mut ChaCha8Rng, max_len: usize) -> RowingString {
    let len = rng.gen_range(0..=max_len);
    RowingString::new((0..len).map(|_| rng.gen_range(0..2)).collect())
}

fn random_string(rng: &mut ChaCha8Rng, min_len: usize, max_len: usize) -> RowingString {
    let len = rng.gen_range(min_len..=max_len);
    RowingString::new((0..len).map(|_| rng.gen_range(0..3)).collect())
}

fn lemma_3_6_tol() -> Rational {
    rat(1, 1 << 30)
}

#[derive(Default)]
struct Tally {
    held: usize,
    skipped: usize,
    undecided: usize,
    failures: Vec<String>,
}

impl Tally {
    fn add(&mut self, label: String, o: &Lemma36Outcome) {
        match o {
            Lemma36Outcome::Holds { .. } => self.held += 1,
            Lemma36Outcome::Skipped { .. } => self.skipped += 1,
            Lemma36Outcome::Undecided { .. } => self.undecided += 1,
            Lemma36Outcome::Violated { left, right }
            | Lemma36Outcome::Inconclusive { left, right } => {
                self.failures.push(format!("{label}: {left} vs {right}"))
            }
        }
    }

    fn summary(&self) -> String {
        let mut s = format!(
            "held {}, skipped {}, undecided {}, failed {}",
            self.held,
            self.skipped,
            self.undecided,
            self.failures.len()
        );
        if let Some(f) = self.failures.first() {
            s.push_str(&format!(" (first: {f})"));
        }
        s
    }
}

/// Runs the comparison on every binary string of length at most `max_len`
/// over `F1`, `F2` and `F3`.
pub fn lemma_3_6_exhaustive(max_len: usize) -> Result<(bool, String)> {
    let mut tally = Tally::default();
    for name in BASES {
        let base = builtin(name)?;
        for len in 0..=max_len {
            for bits in 0..(1u32 << len) {
                let a = RowingString::new((0..len).map(|i| (bits >> (len - 1 - i)) & 1).collect());
                let o = lemma_3_6_instance(&base, &a, &lemma_3_6_tol())?;
                tally.add(format!("{name}:{a}"), &o);
            }
        }
    }
    Ok((tally.failures.is_empty(), tally.summary()))
}

pub fn cert_lemma_3_6(trials: usize, seed: u64) -> Vec<CertReport> {
    let mut rec = Recorder::default();
    for a in ["", "1"] {
        let label = if a.is_empty() { "empty" } else { a };
        rec.check(
            &format!("lemma-3.6-F1-{label}"),
            "inequality holds or precondition fails",
            || {
                let a: RowingString = a.parse()?;
                let o = lemma_3_6_instance(&builtin("F1")?, &a, &lemma_3_6_tol())?;
                Ok((!o.is_failure(), format!("{o:?}")))
            },
        );
    }
    rec.check(
        "lemma-3.6-random",
        &format!("{trials} instances, no violations"),
        || {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mut tally = Tally::default();
            for _ in 0..trials {
                let name = BASES[rng.gen_range(0..BASES.len())];
                let a = random_binary(&mut rng, 8);
                let o = lemma_3_6_instance(&builtin(name)?, &a, &lemma_3_6_tol())?;
                tally.add(format!("{name}:{a}"), &o);
            }
            Ok((tally.failures.is_empty(), tally.summary()))
        },
    );
    rec.finish()
}

/// Characteristic polynomial of the path on `n` vertices from the
/// three-term recurrence, independent of any matrix code.
pub fn path_charpoly(n: usize) -> UPoly {
    let mut prev = UPoly::one();
    let mut cur = UPoly::x();
    if n == 0 {
        return prev;
    }
    for _ in 1..n {
        let next = &(&UPoly::x() * &cur) - &prev;
        prev = std::mem::replace(&mut cur, next);
    }
    cur
}

fn path(n: usize) -> Result<Graph> {
    build_rowing(&builtin("dot")?, &RowingString::zeros(n - 1))
}

fn eig_tol(eps: &Rational) -> Rational {
    eps / int(64)
}

/// Smallest `l >= 3` with `l > 3/eps` and `2cos((l-1)pi/l) < -2 + eps/3`,
/// together with the certified bracket of that cosine. The cosine is
/// `lambda_1` of the path on `l - 1` vertices, which is at least
/// `lambda_1(dot, 0^l)`, so the condition also holds for the latter.
pub fn appendix_ell(eps: &Rational) -> Result<(usize, EigBound)> {
    if eps <= &int(0) {
        return Err(Error::OutOfRange("epsilon must be positive".into()));
    }
    let target = int(-2) + eps / int(3);
    let floor = (int(3) / eps).floor().to_integer();
    let mut l =
        usize::try_from(floor + 1).map_err(|_| Error::OutOfRange("epsilon too small".into()))?;
    l = l.max(3);
    loop {
        let b = lambda1(&path(l - 1)?, &eig_tol(eps))?;
        if b.hi < target {
            return Ok((l, b));
        }
        l += 1;
    }
}

/// Smallest `m` with `m > (4 - lambda_1(F))/eps`, using the certified lower
/// end of `lambda_1(F)`, and `m + l >= 8`.
pub fn appendix_m(base: &Graph, eps: &Rational, l: usize) -> Result<usize> {
    let b = lambda1(base, &eig_tol(eps))?;
    let q = (int(4) - b.lo) / eps;
    let m = usize::try_from(q.floor().to_integer() + 1)
        .map_err(|_| Error::OutOfRange("m overflow".into()))?;
    Ok(m.max(8usize.saturating_sub(l)).max(1))
}

/// `lambda_1(F, a 0^l) < lambda_1(F, a 0^l b) + eps` at bracket resolution.
pub fn ell_instance(
    base: &Graph,
    a: &RowingString,
    b: &RowingString,
    l: usize,
    eps: &Rational,
) -> Result<(bool, String)> {
    let mid = a.concat(&RowingString::zeros(l));
    let left = lambda1(&build_rowing(base, &mid)?, &eig_tol(eps))?;
    let right = lambda1(&build_rowing(base, &mid.concat(b))?, &eig_tol(eps))?;
    Ok((left.hi < &right.lo + eps, format!("{left} vs {right}")))
}

/// Some `k` in `1..=m` such that inserting a `0` before `a_k` lowers the
/// smallest eigenvalue by less than `eps`.
pub fn m_instance(
    base: &Graph,
    a: &RowingString,
    m: usize,
    eps: &Rational,
) -> Result<Option<usize>> {
    let whole = lambda1(&build_rowing(base, a)?, &eig_tol(eps))?;
    let bound = &whole.lo + eps;
    for k in 1..=m.min(a.len() + 1) {
        let mut s = a.symbols().to_vec();
        s.insert(k - 1, 0);
        let b = lambda1(&build_rowing(base, &RowingString::new(s))?, &eig_tol(eps))?;
        if b.hi < bound {
            return Ok(Some(k));
        }
    }
    Ok(None)
}

/// `lambda_1(F, a) >= lambda_1(F) - 2` at bracket resolution.
pub fn weyl_instance(base: &Graph, a: &RowingString, tol: &Rational) -> Result<(bool, String)> {
    let whole = lambda1(&build_rowing(base, a)?, tol)?;
    let f = lambda1(base, tol)?;
    Ok((whole.lo >= &f.hi - int(2), format!("{whole} vs {f} - 2")))
}

pub fn cert_appendix(eps: &Rational, trials: usize, seed: u64) -> Vec<CertReport> {
    let mut rec = Recorder::default();
    let tag = fmt_rational(eps);
    let id = |s: &str| format!("appendix-eps-{tag}-{s}");
    let ell = appendix_ell(eps);
    rec.check(
        &id("ell-recipe"),
        "l > 3/eps, l >= 3 and 2cos((l-1)pi/l) < -2 + eps/3",
        || {
            let (l, b) = ell.clone()?;
            let target = int(-2) + eps / int(3);
            let li = int(l as i64);
            // independent route: the path polynomial has a root below the target
            let roots_below = sturm_count(&path_charpoly(l - 1), &int(-3), &target)?;
            let tail = lambda1(&path(l + 1)?, &eig_tol(eps))?;
            let ok = &li * eps > int(3) && l >= 3 && roots_below >= 1 && tail.hi < target;
            Ok((
                ok,
                format!("l = {l}, 2cos((l-1)pi/l) in {b}, lambda1(dot, 0^l) in {tail}"),
            ))
        },
    );
    rec.check(
        &id("ell-inequality"),
        &format!("{trials} instances"),
        || {
            let (l, _) = ell.clone()?;
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mut bad = Vec::new();
            for _ in 0..trials {
                let name = crate::graphkit::BUILTIN_NAMES[rng.gen_range(0..4)];
                let a = random_string(&mut rng, 0, 4);
                let b = random_string(&mut rng, 1, 4);
                let (ok, detail) = ell_instance(&builtin(name)?, &a, &b, l, eps)?;
                if !ok {
                    bad.push(format!("{name}:{a}|{b}: {detail}"));
                }
            }
            Ok((
                bad.is_empty(),
                format!("{} of {trials} fail {}", bad.len(), bad.join("; ")),
            ))
        },
    );
    rec.check(
        &id("m-insertion"),
        &format!("{trials} instances with some k in 1..=m"),
        || {
            let (l, _) = ell.clone()?;
            let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(1));
            let mut bad = Vec::new();
            let mut ms = Vec::new();
            for _ in 0..trials {
                let name = BASES[rng.gen_range(0..BASES.len())];
                let base = builtin(name)?;
                let m = appendix_m(&base, eps, l)?;
                let a = random_string(&mut rng, m, m + 4);
                match m_instance(&base, &a, m, eps)? {
                    Some(_) => ms.push(m),
                    None => bad.push(format!("{name}:{a}")),
                }
            }
            ms.sort_unstable();
            ms.dedup();
            Ok((bad.is_empty(), format!("m values {ms:?}, failures {bad:?}")))
        },
    );
    rec.check(
        &id("weyl"),
        &format!("{trials} instances of lambda1(F, a) >= lambda1(F) - 2"),
        || {
            let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(2));
            let mut bad = Vec::new();
            for _ in 0..trials {
                let name = crate::graphkit::BUILTIN_NAMES[rng.gen_range(0..4)];
                let a = random_string(&mut rng, 0, 10);
                let (ok, detail) = weyl_instance(&builtin(name)?, &a, &eig_tol(eps))?;
                if !ok {
                    bad.push(format!("{name}:{a}: {detail}"));
                }
            }
            Ok((bad.is_empty(), format!("{} failures {bad:?}", bad.len())))
        },
    );
    rec.finish()
}
