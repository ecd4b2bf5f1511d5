use std::cmp::Ordering;
use std::collections::{BTreeSet, HashMap};
use std::fmt;

use num_traits::Signed;
use rayon::prelude::*;

use super::config::SearchConfig;
use super::witness::{palette, Witness};
use crate::error::{Error, Result};
use crate::exactnum::{fmt_rational, int, rat, Rational};
use crate::graphkit::{builtin, p_color, Encoding, Graph, RowingString};
use crate::papercerts::{lambda_prime, lambda_star};
use crate::spectral::{lambda1, lambda1_tail, EigBound};

/// Where a target `lambda` is searched.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BaseChoice {
    Rowing(&'static str),
    Caterpillar,
}

impl fmt::Display for BaseChoice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BaseChoice::Rowing(name) => f.write_str(name),
            BaseChoice::Caterpillar => f.write_str("caterpillar"),
        }
    }
}

/// `(base, ones)` pairs of the covering chain; `lambda_1(F, 1^k)` is the far
/// end of each interval.
const COVER: [(&str, usize); 3] = [("F1", 8), ("F2", 7), ("F3", 4)];

fn cover_tol() -> Rational {
    rat(1, 1_000_000_000)
}

/// Picks the base whose certified interval `(-lambda_1(F, 0^inf),
/// -lambda_1(F, 1^k))` contains `lambda`, or the caterpillar family once
/// `lambda >= lambda'`. The smallest index wins when two intervals overlap.
pub fn select_base(lambda: &Rational) -> Result<BaseChoice> {
    let ls = lambda_star()?;
    if ls.cmp_rational(lambda) != Ordering::Less {
        return Err(Error::OutOfRange(format!(
            "lambda = {} must exceed lambda* ~ 2.01980",
            fmt_rational(lambda)
        )));
    }
    if lambda_prime()?.cmp_rational(lambda) != Ordering::Greater {
        return Ok(BaseChoice::Caterpillar);
    }
    for (i, (name, k)) in COVER.iter().enumerate() {
        let f = builtin(name)?;
        // the lower end of F1's interval is lambda* itself
        let above_tail = if i == 0 {
            true
        } else {
            let tail = lambda1_tail(&f, &cover_tol())?;
            lambda > &-tail.lo.clone()
        };
        let far = lambda1(
            &crate::graphkit::build_rowing(&f, &RowingString::ones(*k))?,
            &cover_tol(),
        )?;
        if above_tail && lambda < &-far.hi.clone() {
            return Ok(BaseChoice::Rowing(name));
        }
    }
    Err(Error::OutOfRange(format!(
        "lambda = {} is not covered at the working tolerance",
        fmt_rational(lambda)
    )))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Accept,
    Prune,
    Expand,
}

/// Certified bracket of one search node with its verdict.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NodeEval {
    pub bound: EigBound,
    pub verdict: Verdict,
}

struct Target {
    lambda: Rational,
    eps: Rational,
    lower: Rational,
    upper: Rational,
    tol: Rational,
}

impl Target {
    fn new(lambda: &Rational, eps: &Rational, tol: Rational) -> Target {
        Target {
            lambda: lambda.clone(),
            eps: eps.clone(),
            lower: -lambda.clone() - eps,
            upper: -lambda.clone(),
            tol,
        }
    }

    fn classify(&self, b: &EigBound) -> Verdict {
        if b.hi <= self.lower {
            Verdict::Prune
        } else if b.lo > self.lower && b.hi < self.upper {
            Verdict::Accept
        } else {
            Verdict::Expand
        }
    }

    fn straddles(&self, b: &EigBound) -> bool {
        let across = |t: &Rational| &b.lo <= t && t <= &b.hi;
        across(&self.lower) || across(&self.upper)
    }

    fn evaluate(&self, g: &Graph) -> Result<NodeEval> {
        let mut bound = lambda1(g, &self.tol)?;
        if self.classify(&bound) == Verdict::Expand && self.straddles(&bound) {
            bound = lambda1(g, &(&self.tol / int(8)))?;
        }
        let verdict = self.classify(&bound);
        Ok(NodeEval { bound, verdict })
    }

    /// Distance of the bracket midpoint from `-lambda`.
    fn distance(&self, b: &EigBound) -> Rational {
        (b.mid() - &self.upper).abs()
    }
}

/// Classifies one graph against the target `(-lambda - eps, -lambda)`
/// using bisection tolerance `tol`, with one refinement when the bracket
/// straddles an end.
pub fn evaluate_node(
    g: &Graph,
    lambda: &Rational,
    eps: &Rational,
    tol: &Rational,
) -> Result<NodeEval> {
    Target::new(lambda, eps, tol.clone()).evaluate(g)
}

type Key = (Rational, usize, Vec<u32>);
type Children = Vec<(Vec<u32>, NodeEval)>;

/// The family being searched: how strings become graphs and how a node is
/// expanded.
trait Family: Sync {
    fn encode(&self, s: &[u32]) -> Encoding;
    fn build(&self, s: &[u32]) -> Result<Graph>;
    fn expand(&self, s: &[u32], own: &NodeEval, t: &Target, cfg: &SearchConfig)
        -> Result<Children>;
}

struct RowingFamily {
    name: String,
    base: Graph,
}

impl Family for RowingFamily {
    fn encode(&self, s: &[u32]) -> Encoding {
        Encoding::rowing(&self.name, RowingString::new(s.to_vec()))
    }

    fn build(&self, s: &[u32]) -> Result<Graph> {
        crate::graphkit::build_rowing(&self.base, &RowingString::new(s.to_vec()))
    }

    fn expand(
        &self,
        s: &[u32],
        own: &NodeEval,
        t: &Target,
        cfg: &SearchConfig,
    ) -> Result<Children> {
        let mut out = Vec::new();
        if s.len() >= cfg.max_len {
            return Ok(out);
        }
        let zeros = s.iter().rev().take_while(|&&c| c == 0).count();
        // when the zero tail lands inside the target, some finite run of
        // zeros does too; try doubling runs before the one-step children
        if own.bound.lo >= t.upper {
            let g = self.build(s)?;
            let tail = lambda1_tail(&g, &t.tol)?;
            if tail.lo > t.lower && tail.hi < t.upper {
                let mut n = cfg.zero_run_cap + 1;
                while s.len() + n <= cfg.max_len {
                    let mut kid = s.to_vec();
                    kid.extend(std::iter::repeat_n(0, n));
                    let ev = t.evaluate(&self.build(&kid)?)?;
                    let done = ev.verdict != Verdict::Expand;
                    out.push((kid, ev));
                    if done {
                        break;
                    }
                    n *= 2;
                }
            }
        }
        for c in [0u32, 1] {
            if c == 0 && zeros >= cfg.zero_run_cap {
                continue;
            }
            let mut kid = s.to_vec();
            kid.push(c);
            let ev = t.evaluate(&self.build(&kid)?)?;
            out.push((kid, ev));
        }
        Ok(out)
    }
}

struct CaterpillarFamily;

impl Family for CaterpillarFamily {
    fn encode(&self, s: &[u32]) -> Encoding {
        Encoding::Caterpillar(s.to_vec())
    }

    fn build(&self, s: &[u32]) -> Result<Graph> {
        Ok(crate::graphkit::caterpillar(s))
    }

    fn expand(
        &self,
        s: &[u32],
        _own: &NodeEval,
        t: &Target,
        cfg: &SearchConfig,
    ) -> Result<Children> {
        if s.len() >= cfg.max_len {
            return Ok(Vec::new());
        }
        (0..=cfg.leg_cap)
            .map(|k| {
                let mut kid = s.to_vec();
                kid.push(k);
                let ev = t.evaluate(&self.build(&kid)?)?;
                Ok((kid, ev))
            })
            .collect()
    }
}

struct Search<'a, F: Family> {
    family: &'a F,
    target: Target,
    cfg: &'a SearchConfig,
    frontier: BTreeSet<Key>,
    evals: HashMap<Vec<u32>, NodeEval>,
    expansions: HashMap<Vec<u32>, Children>,
    best: Option<(Rational, Vec<u32>, EigBound)>,
}

impl<'a, F: Family> Search<'a, F> {
    fn note(&mut self, s: &[u32], ev: &NodeEval) {
        let d = self.target.distance(&ev.bound);
        if self.best.as_ref().is_none_or(|(bd, _, _)| &d < bd) {
            self.best = Some((d, s.to_vec(), ev.bound.clone()));
        }
    }

    fn witness(&self, s: &[u32], ev: &NodeEval) -> Result<Option<Witness>> {
        let encoding = self.family.encode(s);
        let graph = self.family.build(s)?;
        let Some(coloring) = p_color(&graph, palette(&encoding)) else {
            return Ok(None);
        };
        Ok(Some(Witness {
            encoding,
            graph,
            coloring,
            eig: ev.bound.clone(),
            lambda: self.target.lambda.clone(),
            epsilon: self.target.eps.clone(),
        }))
    }

    fn push(&mut self, s: Vec<u32>, ev: NodeEval) {
        let key = (self.target.distance(&ev.bound), s.len(), s.clone());
        self.evals.insert(s, ev);
        self.frontier.insert(key);
    }

    /// Expands the best `width` frontier nodes that have not been expanded
    /// yet, in parallel. Only the cache changes, so the order in which nodes
    /// are processed afterwards does not depend on `width`.
    fn prefetch(&mut self, first: &[u32]) -> Result<()> {
        let mut batch: Vec<Vec<u32>> = vec![first.to_vec()];
        batch.extend(
            self.frontier
                .iter()
                .map(|k| k.2.clone())
                .filter(|s| !self.expansions.contains_key(s))
                .take(self.cfg.width.saturating_sub(1)),
        );
        let (family, target, cfg, evals) = (self.family, &self.target, self.cfg, &self.evals);
        let results: Vec<Result<(Vec<u32>, Children)>> = batch
            .into_par_iter()
            .map(|s| {
                let own = &evals[&s];
                family.expand(&s, own, target, cfg).map(|kids| (s, kids))
            })
            .collect();
        for r in results {
            let (s, kids) = r?;
            self.expansions.insert(s, kids);
        }
        Ok(())
    }

    fn run(&mut self, roots: Children) -> Result<Witness> {
        let mut used = 0usize;
        let mut pending = roots;
        loop {
            for (s, ev) in pending {
                used += 1;
                self.note(&s, &ev);
                match ev.verdict {
                    Verdict::Accept => {
                        if let Some(w) = self.witness(&s, &ev)? {
                            return Ok(w);
                        }
                    }
                    Verdict::Prune => {}
                    Verdict::Expand => self.push(s, ev),
                }
            }
            if used >= self.cfg.max_nodes {
                return Err(self.exhausted(used));
            }
            let Some((_, _, s)) = self.frontier.pop_first() else {
                return Err(self.exhausted(used));
            };
            if !self.expansions.contains_key(&s) {
                self.prefetch(&s)?;
            }
            pending = self.expansions.remove(&s).unwrap_or_default();
        }
    }

    fn exhausted(&self, used: usize) -> Error {
        let best = match &self.best {
            Some((_, s, b)) => format!("closest {} with lambda1 in {b}", self.family.encode(s)),
            None => "no node evaluated".to_string(),
        };
        Error::BudgetExhausted(format!("{used} nodes; {best}"))
    }
}

fn check_eps(eps: &Rational) -> Result<()> {
    if !eps.is_positive() {
        return Err(Error::OutOfRange("epsilon must be positive".into()));
    }
    Ok(())
}

/// Best-first search over binary strings `a` for a 3-colorable rowing
/// graph `(F, a)` with `lambda_1` in `(-lambda - eps, -lambda)`.
pub fn find_three_colorable(
    lambda: &Rational,
    eps: &Rational,
    cfg: &SearchConfig,
) -> Result<Witness> {
    check_eps(eps)?;
    cfg.validate()?;
    let name = match &cfg.base {
        Some(b) => b.clone(),
        None => match select_base(lambda)? {
            BaseChoice::Rowing(n) => n.to_string(),
            BaseChoice::Caterpillar => {
                return Err(Error::OutOfRange(format!(
                    "lambda = {} is at least lambda'; use the caterpillar search",
                    fmt_rational(lambda)
                )))
            }
        },
    };
    if cfg.base.is_some() && lambda_star()?.cmp_rational(lambda) != Ordering::Less {
        return Err(Error::OutOfRange("lambda must exceed lambda*".into()));
    }
    let family = RowingFamily {
        base: builtin(&name)?,
        name,
    };
    let target = Target::new(lambda, eps, cfg.tolerance(eps)?);
    let root = target.evaluate(&family.base)?;
    search(&family, target, cfg, vec![(Vec::new(), root)])
}

/// Best-first search over leg sequences for a caterpillar with `lambda_1`
/// in `(-lambda - eps, -lambda)`. Children append one spine vertex with
/// `0..=leg_cap` legs.
pub fn find_caterpillar(lambda: &Rational, eps: &Rational, cfg: &SearchConfig) -> Result<Witness> {
    check_eps(eps)?;
    cfg.validate()?;
    if lambda_prime()?.cmp_rational(lambda) == Ordering::Greater {
        return Err(Error::OutOfRange(format!(
            "lambda = {} is below lambda'",
            fmt_rational(lambda)
        )));
    }
    let target = Target::new(lambda, eps, cfg.tolerance(eps)?);
    let family = CaterpillarFamily;
    let roots = (0..=cfg.leg_cap)
        .map(|k| Ok((vec![k], target.evaluate(&family.build(&[k])?)?)))
        .collect::<Result<Vec<_>>>()?;
    search(&family, target, cfg, roots)
}

fn search<F: Family>(
    family: &F,
    target: Target,
    cfg: &SearchConfig,
    roots: Children,
) -> Result<Witness> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cfg.width)
        .build()
        .map_err(|e| Error::OutOfRange(e.to_string()))?;
    pool.install(|| {
        Search {
            family,
            target,
            cfg,
            frontier: BTreeSet::new(),
            evals: HashMap::new(),
            expansions: HashMap::new(),
            best: None,
        }
        .run(roots)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::densearch::{verify_witness, witness_from_json};
    use crate::graphkit::RowingString;
    use crate::spectral::adjacency;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn eps() -> Rational {
        rat(1, 100)
    }

    #[test]
    fn base_selection() {
        assert_eq!(
            select_base(&rat(2025, 1000)).unwrap(),
            BaseChoice::Rowing("F1")
        );
        assert_eq!(select_base(&rat(21, 10)).unwrap(), BaseChoice::Caterpillar);
        assert!(select_base(&int(2)).is_err());
        assert!(select_base(&rat(2019, 1000)).is_err());
        // 136/67 ~ 2.02985 bounds F1's reach, so F2 takes over
        assert_eq!(
            select_base(&rat(2029, 1000)).unwrap(),
            BaseChoice::Rowing("F1")
        );
        assert_eq!(
            select_base(&rat(2035, 1000)).unwrap(),
            BaseChoice::Rowing("F2")
        );
        assert_eq!(
            select_base(&rat(2045, 1000)).unwrap(),
            BaseChoice::Rowing("F2")
        );
        assert_eq!(
            select_base(&rat(2055, 1000)).unwrap(),
            BaseChoice::Rowing("F3")
        );
        assert_eq!(
            select_base(&rat(20582, 10000)).unwrap(),
            BaseChoice::Caterpillar
        );
    }

    #[test]
    fn rowing_witnesses_verify() {
        for l in [2025, 2035, 2045, 2055] {
            let lambda = rat(l, 1000);
            let w = find_three_colorable(&lambda, &eps(), &SearchConfig::default()).unwrap();
            assert!(verify_witness(&w), "{}", w.encoding);
            assert!(w.eig.lo > -lambda.clone() - eps() && w.eig.hi < -lambda);
            let back = witness_from_json(&w.to_json().to_string()).unwrap();
            assert_eq!(back, w);
        }
    }

    #[test]
    fn caterpillar_witnesses_verify() {
        let w = find_caterpillar(&rat(21, 10), &eps(), &SearchConfig::default()).unwrap();
        assert!(verify_witness(&w));
        assert_eq!(w.palette(), 2);
        let star = find_caterpillar(&int(3), &rat(1, 10), &SearchConfig::default()).unwrap();
        assert!(verify_witness(&star));
        let wide = find_caterpillar(&int(3), &int(10), &SearchConfig::default()).unwrap();
        assert!(verify_witness(&wide));
        assert!(wide.eig.hi < int(-3));
    }

    #[test]
    fn corrupted_witnesses_fail() {
        let w = find_three_colorable(&rat(407, 200), &eps(), &SearchConfig::default()).unwrap();
        let mut bad = w.clone();
        bad.coloring.colors[0] = (bad.coloring.colors[0] + 1) % 3;
        assert!(!verify_witness(&bad));
        let mut shifted = w.clone();
        shifted.eig.lo = &shifted.eig.lo + eps();
        shifted.eig.hi = &shifted.eig.hi + eps();
        assert!(!verify_witness(&shifted));
        let mut loose = w;
        loose.eig.hi = &loose.eig.lo + rat(1, 1_000_000);
        assert!(!verify_witness(&loose));
    }

    #[test]
    fn wide_target_is_immediate() {
        let lambda = rat(2021, 1000);
        let w = find_three_colorable(&lambda, &int(1), &SearchConfig::default()).unwrap();
        assert!(verify_witness(&w));
        assert!(w.graph.n() <= 40);
    }

    #[test]
    fn width_does_not_change_the_witness() {
        for l in [407, 409] {
            let lambda = rat(l, 200);
            let one = find_three_colorable(&lambda, &eps(), &SearchConfig::default()).unwrap();
            let four =
                find_three_colorable(&lambda, &eps(), &SearchConfig::default().with_width(4))
                    .unwrap();
            assert_eq!(one, four);
        }
        let one = find_caterpillar(&rat(5, 2), &eps(), &SearchConfig::default()).unwrap();
        let four =
            find_caterpillar(&rat(5, 2), &eps(), &SearchConfig::default().with_width(4)).unwrap();
        assert_eq!(one, four);
    }

    #[test]
    fn budget_exhaustion_reports_near_miss() {
        let cfg = SearchConfig {
            max_nodes: 3,
            ..SearchConfig::default()
        };
        match find_three_colorable(&rat(409, 200), &rat(1, 100_000), &cfg) {
            Err(Error::BudgetExhausted(msg)) => assert!(msg.contains("closest F2:"), "{msg}"),
            other => panic!("expected exhaustion, got {other:?}"),
        }
    }

    #[test]
    fn bad_inputs() {
        let cfg = SearchConfig::default();
        assert!(find_three_colorable(&rat(21, 10), &eps(), &cfg).is_err());
        assert!(find_three_colorable(&rat(2025, 1000), &int(0), &cfg).is_err());
        assert!(find_caterpillar(&rat(2025, 1000), &eps(), &cfg).is_err());
        let wide_tol = SearchConfig {
            tol: Some(rat(1, 400)),
            ..SearchConfig::default()
        };
        assert!(find_three_colorable(&rat(2025, 1000), &eps(), &wide_tol).is_err());
    }

    #[test]
    fn pruned_nodes_have_no_descendants_in_target() {
        let lambda = rat(2035, 1000);
        let lower = -lambda.clone() - eps();
        let f = builtin("F2").unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let mut pruned = 0;
        let mut tries = 0;
        while pruned < 100 {
            tries += 1;
            assert!(tries < 50_000, "only {pruned} pruned nodes found");
            let len = rng.gen_range(3..=10);
            let s: Vec<u32> = (0..len).map(|_| u32::from(rng.gen_bool(0.8))).collect();
            let g = build_rowing(&f, &RowingString::new(s.clone())).unwrap();
            let ev = evaluate_node(&g, &lambda, &eps(), &rat(1, 800)).unwrap();
            if ev.verdict != Verdict::Prune {
                continue;
            }
            pruned += 1;
            for extra in 1..=4u32 {
                for bits in 0..(1u32 << extra) {
                    let mut kid = s.clone();
                    kid.extend((0..extra).map(|i| (bits >> i) & 1));
                    let h = build_rowing(&f, &RowingString::new(kid)).unwrap();
                    let inertia = adjacency(&h).shifted(&lower).inertia();
                    assert!(inertia.neg + inertia.zero >= 1);
                }
            }
        }
    }

    use crate::graphkit::build_rowing;
}
