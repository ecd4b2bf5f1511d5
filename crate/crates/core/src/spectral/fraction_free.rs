//! Inertia of a rational symmetric matrix without rational arithmetic.
//!
//! The matrix is scaled to integers and eliminated Bareiss-style, so every
//! stored entry is a bordered minor and each update is one exact division.
//! Pivot signs come from consecutive leading minors. An entry that a pivot
//! does not touch only picks up the factor `D_new / D_old`; that factor is
//! applied lazily by remembering the step at which the entry was written.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::matrix::{Inertia, SymMatrix};
use crate::exactnum::Rational;

#[derive(Clone)]
struct Entry {
    v: BigInt,
    step: usize,
}

struct State {
    rows: Vec<BTreeMap<usize, Entry>>,
    minors: Vec<BigInt>,
}

impl State {
    fn step(&self) -> usize {
        self.minors.len() - 1
    }

    fn scale(&self, e: &Entry) -> BigInt {
        let m = self.step();
        if e.step == m {
            e.v.clone()
        } else {
            (&e.v * &self.minors[m]) / &self.minors[e.step]
        }
    }

    fn get(&self, i: usize, j: usize) -> BigInt {
        self.rows[i]
            .get(&j)
            .map(|e| self.scale(e))
            .unwrap_or_default()
    }

    fn set(&mut self, i: usize, j: usize, v: BigInt) {
        let step = self.step();
        if v.is_zero() {
            self.rows[i].remove(&j);
            self.rows[j].remove(&i);
        } else {
            self.rows[i].insert(j, Entry { v: v.clone(), step });
            self.rows[j].insert(i, Entry { v, step });
        }
    }

    fn remove(&mut self, k: usize) {
        let nbrs: Vec<usize> = self.rows[k].keys().copied().collect();
        for j in nbrs {
            self.rows[j].remove(&k);
        }
        self.rows[k].clear();
    }
}

/// Inertia of `a`. When the remaining diagonal vanishes entirely a block
/// pivot is needed instead; the error then carries the counts so far and
/// the current Schur complement.
pub(crate) fn inertia_fraction_free(
    a: &SymMatrix<Rational>,
) -> Result<Inertia, (Inertia, SymMatrix<Rational>)> {
    let n = a.order();
    let mut denom = BigInt::one();
    for row in a.rows() {
        for x in row {
            denom = denom.lcm(x.denom());
        }
    }
    let mut rows = vec![BTreeMap::new(); n];
    for (i, row) in a.rows().iter().enumerate() {
        for (j, x) in row.iter().enumerate() {
            if !x.is_zero() {
                let v = x.numer() * (&denom / x.denom());
                rows[i].insert(j, Entry { v, step: 0 });
            }
        }
    }
    let mut st = State {
        rows,
        minors: vec![BigInt::one()],
    };
    let mut out = Inertia {
        neg: 0,
        zero: 0,
        pos: 0,
    };
    let mut remaining: BTreeSet<usize> = (0..n).collect();
    while let Some(&first) = remaining.iter().next() {
        let mut k = first;
        let mut pivot = st.get(k, k);
        if pivot.is_zero() {
            if st.rows[k].is_empty() {
                out.zero += 1;
                remaining.remove(&k);
                continue;
            }
            let found = remaining
                .iter()
                .copied()
                .map(|j| (j, st.get(j, j)))
                .find(|(_, d)| !d.is_zero());
            match found {
                Some((j, d)) => {
                    k = j;
                    pivot = d;
                }
                None => {
                    let idx: Vec<usize> = remaining.iter().copied().collect();
                    let m = st.minors[st.step()].clone();
                    let rest = SymMatrix::from_fn(idx.len(), |r, c| {
                        Rational::new(st.get(idx[r], idx[c]), m.clone())
                    });
                    return Err((out, rest));
                }
            }
        }
        let prev = st.minors[st.step()].clone();
        if pivot.is_positive() == prev.is_positive() {
            out.pos += 1;
        } else {
            out.neg += 1;
        }
        let nbrs: Vec<(usize, BigInt)> = st.rows[k]
            .iter()
            .filter(|(&j, _)| j != k)
            .map(|(&j, e)| (j, st.scale(e)))
            .collect();
        let mut updates = Vec::with_capacity(nbrs.len() * (nbrs.len() + 1) / 2);
        for (s, (i, bik)) in nbrs.iter().enumerate() {
            for (j, bkj) in nbrs.iter().skip(s) {
                let cur = st.get(*i, *j);
                let v = (&pivot * cur - bik * bkj) / &prev;
                updates.push((*i, *j, v));
            }
        }
        st.remove(k);
        remaining.remove(&k);
        st.minors.push(pivot);
        for (i, j, v) in updates {
            st.set(i, j, v);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rat;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn both(m: &SymMatrix<Rational>) -> (Inertia, Inertia) {
        (m.inertia(), m.inertia_by_pivots())
    }

    #[test]
    #[allow(clippy::needless_range_loop)]
    fn agrees_with_rational_pivots() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..400 {
            let n = rng.gen_range(1..9);
            let zero_diag = rng.gen_bool(0.3);
            let mut e = vec![vec![rat(0, 1); n]; n];
            for i in 0..n {
                for j in i..n {
                    if i == j && zero_diag {
                        continue;
                    }
                    if rng.gen_bool(0.5) {
                        let v = rat(rng.gen_range(-3..4), rng.gen_range(1..4));
                        e[i][j] = v.clone();
                        e[j][i] = v;
                    }
                }
            }
            // rank-one matrices make singular cases common
            if rng.gen_bool(0.3) {
                let u: Vec<i64> = (0..n).map(|_| rng.gen_range(-2..3)).collect();
                for i in 0..n {
                    for j in 0..n {
                        e[i][j] = rat(u[i] * u[j], 1);
                    }
                }
            }
            let m = SymMatrix::new(e).unwrap();
            let (a, b) = both(&m);
            assert_eq!(a, b, "{m:?}");
        }
    }

    #[test]
    fn hyperbolic_block_falls_back() {
        let m =
            SymMatrix::new(vec![vec![rat(0, 1), rat(1, 2)], vec![rat(1, 2), rat(0, 1)]]).unwrap();
        let i = m.inertia();
        assert_eq!((i.neg, i.zero, i.pos), (1, 0, 1));
        assert!(inertia_fraction_free(&m).is_err());
    }
}
