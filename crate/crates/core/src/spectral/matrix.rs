use std::any::Any;

use serde::{Deserialize, Serialize};

use super::fraction_free::inertia_fraction_free;

use crate::error::{Error, Result};
use crate::exactnum::rational::fmt_rational;
use crate::exactnum::{bareiss_det, parse_rational, Field, Rational, Sign};
use crate::graphkit::Graph;

/// Dense symmetric matrix over one scalar field.
#[derive(Clone, Debug, PartialEq)]
pub struct SymMatrix<F> {
    entries: Vec<Vec<F>>,
}

/// Counts of negative, zero and positive eigenvalues.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Inertia {
    pub neg: usize,
    pub zero: usize,
    pub pos: usize,
}

impl Inertia {
    pub fn is_psd(&self) -> bool {
        self.neg == 0
    }

    pub fn is_pd(&self) -> bool {
        self.neg == 0 && self.zero == 0
    }
}

impl<F: Field> SymMatrix<F> {
    /// Checks squareness and exact symmetry.
    pub fn new(entries: Vec<Vec<F>>) -> Result<SymMatrix<F>> {
        let n = entries.len();
        for (i, row) in entries.iter().enumerate() {
            if row.len() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    got: row.len(),
                });
            }
            for j in 0..i {
                if !row[j].minus(&entries[j][i]).is_zero_elem() {
                    return Err(Error::InvalidGraph(format!(
                        "matrix not symmetric at ({i}, {j})"
                    )));
                }
            }
        }
        Ok(SymMatrix { entries })
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> F) -> SymMatrix<F> {
        let mut entries: Vec<Vec<F>> = Vec::with_capacity(n);
        for i in 0..n {
            let mut row = Vec::with_capacity(n);
            // rows above are complete, so the lower triangle mirrors them
            for earlier in &entries {
                row.push(earlier[i].clone());
            }
            for j in i..n {
                row.push(f(i, j));
            }
            entries.push(row);
        }
        SymMatrix { entries }
    }

    pub fn order(&self) -> usize {
        self.entries.len()
    }

    pub fn get(&self, i: usize, j: usize) -> &F {
        &self.entries[i][j]
    }

    pub fn rows(&self) -> &[Vec<F>] {
        &self.entries
    }

    /// `self + c*I`.
    pub fn add_identity(&self, c: &F) -> SymMatrix<F> {
        let mut m = self.clone();
        for i in 0..m.order() {
            m.entries[i][i] = m.entries[i][i].plus(c);
        }
        m
    }

    /// `self - t*I` for a rational `t`.
    pub fn shifted(&self, t: &Rational) -> SymMatrix<F> {
        let mut m = self.clone();
        for i in 0..m.order() {
            let e = m.entries[i][i].embed(t);
            m.entries[i][i] = m.entries[i][i].minus(&e);
        }
        m
    }

    /// `self + c*E_{v,v}`.
    pub fn add_to_diagonal(&self, v: usize, c: &F) -> SymMatrix<F> {
        let mut m = self.clone();
        m.entries[v][v] = m.entries[v][v].plus(c);
        m
    }

    /// Principal submatrix with row/column `v` removed.
    pub fn without(&self, v: usize) -> SymMatrix<F> {
        let entries = self
            .entries
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != v)
            .map(|(_, row)| {
                row.iter()
                    .enumerate()
                    .filter(|&(j, _)| j != v)
                    .map(|(_, x)| x.clone())
                    .collect()
            })
            .collect();
        SymMatrix { entries }
    }

    /// Leading principal submatrix of order `k`.
    pub fn leading(&self, k: usize) -> SymMatrix<F> {
        let entries = self.entries[..k]
            .iter()
            .map(|row| row[..k].to_vec())
            .collect();
        SymMatrix { entries }
    }

    pub fn map<G: Field>(&self, f: impl Fn(&F) -> G) -> SymMatrix<G> {
        SymMatrix {
            entries: self
                .entries
                .iter()
                .map(|row| row.iter().map(&f).collect())
                .collect(),
        }
    }

    pub fn det(&self) -> Option<F> {
        let unit = self.entries.first()?.first()?.one_like();
        Some(bareiss_det(&self.entries, &unit))
    }

    /// Sylvester inertia by symmetric elimination with exact pivots.
    ///
    /// A zero pivot is replaced by a later nonzero diagonal entry through a
    /// symmetric swap. If the whole remaining diagonal vanishes, a nonzero
    /// off-diagonal `a` gives a 2x2 pivot `[[0, a], [a, 0]]`, which has one
    /// eigenvalue of each sign. A row that is entirely zero contributes a
    /// zero eigenvalue. Zero entries are skipped, so banded matrices stay
    /// cheap. Rational matrices go through a fraction-free variant first.
    pub fn inertia(&self) -> Inertia {
        if let Some(r) = (self as &dyn Any).downcast_ref::<SymMatrix<Rational>>() {
            return match inertia_fraction_free(r) {
                Ok(i) => i,
                Err((done, rest)) => {
                    let i = rest.inertia_by_pivots();
                    Inertia {
                        neg: done.neg + i.neg,
                        zero: done.zero + i.zero,
                        pos: done.pos + i.pos,
                    }
                }
            };
        }
        self.inertia_by_pivots()
    }

    pub(crate) fn inertia_by_pivots(&self) -> Inertia {
        let n = self.order();
        let mut out = Inertia {
            neg: 0,
            zero: 0,
            pos: 0,
        };
        if n == 0 {
            return out;
        }
        let mut a = self.entries.clone();
        let mut k = 0;
        while k < n {
            if a[k][k].is_zero_elem() {
                if (k + 1..n).all(|j| a[k][j].is_zero_elem()) {
                    out.zero += 1;
                    k += 1;
                    continue;
                }
                if let Some(j) = (k + 1..n).find(|&j| !a[j][j].is_zero_elem()) {
                    swap_sym(&mut a, k, j);
                } else {
                    let j = (k + 1..n)
                        .find(|&j| !a[k][j].is_zero_elem())
                        .expect("row has a nonzero entry");
                    swap_sym(&mut a, k + 1, j);
                    block_pivot(&mut a, k);
                    out.neg += 1;
                    out.pos += 1;
                    k += 2;
                    continue;
                }
            }
            match a[k][k].sign() {
                Sign::Negative => out.neg += 1,
                Sign::Positive => out.pos += 1,
                Sign::Zero => unreachable!("pivot is nonzero"),
            }
            let p = a[k][k].clone();
            let nz: Vec<usize> = (k + 1..n).filter(|&j| !a[k][j].is_zero_elem()).collect();
            let l: Vec<F> = nz.iter().map(|&j| a[k][j].over(&p)).collect();
            for (s, &i) in nz.iter().enumerate() {
                for &j in nz.iter().skip(s) {
                    let v = a[i][j].minus(&l[s].times(&a[k][j]));
                    if i != j {
                        a[j][i] = v.clone();
                    }
                    a[i][j] = v;
                }
            }
            k += 1;
        }
        out
    }

    /// Eigenvalues strictly below `t`.
    pub fn inertia_below(&self, t: &Rational) -> usize {
        self.shifted(t).inertia().neg
    }

    /// `n - rank`.
    pub fn nullity(&self) -> usize {
        self.inertia().zero
    }
}

fn swap_sym<F: Clone>(a: &mut [Vec<F>], i: usize, j: usize) {
    if i == j {
        return;
    }
    a.swap(i, j);
    for row in a.iter_mut() {
        row.swap(i, j);
    }
}

// Eliminates rows k, k+1 using the pivot [[0, b], [b, 0]].
fn block_pivot<F: Field>(a: &mut [Vec<F>], k: usize) {
    let n = a.len();
    let b = a[k][k + 1].clone();
    let rest: Vec<usize> = (k + 2..n)
        .filter(|&j| !a[k][j].is_zero_elem() || !a[k + 1][j].is_zero_elem())
        .collect();
    // Schur complement: a_ij - (a_ik a_{k+1,j} + a_{i,k+1} a_kj) / b
    for (s, &i) in rest.iter().enumerate() {
        for &j in rest.iter().skip(s) {
            let corr = a[i][k]
                .times(&a[k + 1][j])
                .plus(&a[i][k + 1].times(&a[k][j]))
                .over(&b);
            let v = a[i][j].minus(&corr);
            if i != j {
                a[j][i] = v.clone();
            }
            a[i][j] = v;
        }
    }
}

impl SymMatrix<Rational> {
    pub fn identity(n: usize) -> SymMatrix<Rational> {
        SymMatrix::from_fn(n, |i, j| Rational::from_integer(((i == j) as i64).into()))
    }

    pub fn to_f64(&self) -> SymMatrix<f64> {
        self.map(crate::exactnum::rational::to_f64)
    }

    /// JSON array of arrays of `"num/den"` strings.
    pub fn to_json(&self) -> serde_json::Value {
        let rows: Vec<Vec<String>> = self
            .entries
            .iter()
            .map(|row| row.iter().map(fmt_rational).collect())
            .collect();
        serde_json::to_value(rows).expect("strings serialize")
    }

    pub fn from_json(text: &str) -> Result<SymMatrix<Rational>> {
        let rows: Vec<Vec<String>> =
            serde_json::from_str(text).map_err(|e| Error::Parse(format!("matrix JSON: {e}")))?;
        let entries = rows
            .iter()
            .map(|row| {
                row.iter()
                    .map(|s| parse_rational(s))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        SymMatrix::new(entries)
    }
}

/// Signed adjacency matrix: `+1`/`-1` per edge sign, `0` elsewhere.
pub fn adjacency(g: &Graph) -> SymMatrix<Rational> {
    adjacency_in(g, &Rational::from_integer(1.into()))
}

/// Adjacency matrix with entries embedded into the field of `unit`.
pub fn adjacency_in<F: Field>(g: &Graph, unit: &F) -> SymMatrix<F> {
    let zero = unit.zero_like();
    let mut entries = vec![vec![zero; g.n()]; g.n()];
    for (u, v, s) in g.edges() {
        let e = if s.as_i8() > 0 {
            unit.clone()
        } else {
            unit.negated()
        };
        entries[u][v] = e.clone();
        entries[v][u] = e;
    }
    SymMatrix { entries }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{int, rat};
    use crate::graphkit::{builtin, EdgeSign};

    fn k3() -> Graph {
        Graph::from_edges(3, &[(0, 1), (1, 2), (0, 2)], None).unwrap()
    }

    #[test]
    fn adjacency_examples() {
        let a = adjacency(&k3());
        for i in 0..3 {
            for j in 0..3 {
                assert_eq!(a.get(i, j), &int((i != j) as i64));
            }
        }
        let neg = Graph::from_signed_edges(2, &[(0, 1, EdgeSign::Negative)], None).unwrap();
        assert_eq!(adjacency(&neg).get(0, 1), &int(-1));
    }

    #[test]
    fn inertia_examples() {
        assert_eq!(adjacency(&k3()).inertia_below(&int(0)), 2);
        let p2 = Graph::from_edges(2, &[(0, 1)], None).unwrap();
        assert_eq!(adjacency(&p2).inertia_below(&int(0)), 1);
        assert_eq!(
            adjacency(&k3()).shifted(&int(-1)).inertia(),
            Inertia {
                neg: 0,
                zero: 2,
                pos: 1
            }
        );
    }

    #[test]
    fn zero_diagonal_block_pivot() {
        // all diagonal entries zero: needs the 2x2 pivot
        let c4 = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (0, 3)], None).unwrap();
        assert_eq!(
            adjacency(&c4).inertia(),
            Inertia {
                neg: 1,
                zero: 2,
                pos: 1
            }
        );
        let f2 = builtin("F2").unwrap();
        let inertia = adjacency(&f2).inertia();
        assert_eq!(inertia.neg + inertia.zero + inertia.pos, 5);
    }

    #[test]
    fn f64_agrees_on_simple_case() {
        let a = adjacency(&k3()).shifted(&rat(-3, 2));
        assert_eq!(a.inertia(), a.to_f64().inertia());
    }

    #[test]
    fn json_roundtrip_and_symmetry_check() {
        let a = adjacency(&k3()).shifted(&rat(1, 3));
        let text = a.to_json().to_string();
        assert_eq!(SymMatrix::from_json(&text).unwrap(), a);
        assert!(SymMatrix::from_json(r#"[["0/1","1/1"],["2/1","0/1"]]"#).is_err());
        assert!(SymMatrix::from_json(r#"[["0/1","1/1"]]"#).is_err());
    }
}
