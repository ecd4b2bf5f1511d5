use std::fmt;
use std::str::FromStr;

use super::graph::{EdgeSign, Graph};
use crate::error::{Error, Result};

/// Sequence of clique orders `a_1 .. a_n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct RowingString {
    symbols: Vec<u32>,
}

impl RowingString {
    pub fn new(symbols: Vec<u32>) -> RowingString {
        RowingString { symbols }
    }

    pub fn zeros(n: usize) -> RowingString {
        RowingString::new(vec![0; n])
    }

    pub fn ones(n: usize) -> RowingString {
        RowingString::new(vec![1; n])
    }

    pub fn symbols(&self) -> &[u32] {
        &self.symbols
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn is_binary(&self) -> bool {
        self.symbols.iter().all(|&s| s <= 1)
    }

    pub fn concat(&self, other: &RowingString) -> RowingString {
        let mut symbols = self.symbols.clone();
        symbols.extend_from_slice(&other.symbols);
        RowingString { symbols }
    }

    pub fn push(&mut self, s: u32) {
        self.symbols.push(s);
    }

    /// Number of vertices the string adds to a base graph.
    pub fn added_vertices(&self) -> usize {
        self.symbols.len() + self.symbols.iter().map(|&s| s as usize).sum::<usize>()
    }

    /// Length of the run of zeros at the end.
    pub fn trailing_zeros(&self) -> usize {
        self.symbols.iter().rev().take_while(|&&s| s == 0).count()
    }
}

impl fmt::Display for RowingString {
    /// Digits when every symbol is below 10, otherwise comma-separated. A
    /// lone multi-digit symbol gets a trailing comma so it parses back.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.symbols.iter().all(|&s| s < 10) {
            for s in &self.symbols {
                write!(f, "{s}")?;
            }
            return Ok(());
        }
        let parts: Vec<String> = self.symbols.iter().map(u32::to_string).collect();
        write!(f, "{}", parts.join(","))?;
        if parts.len() == 1 {
            write!(f, ",")?;
        }
        Ok(())
    }
}

impl FromStr for RowingString {
    type Err = Error;

    fn from_str(s: &str) -> Result<RowingString> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(RowingString::default());
        }
        let bad = || Error::Parse(format!("bad rowing string {s:?}"));
        let symbols = if s.contains(',') {
            s.trim_end_matches(',')
                .split(',')
                .map(|t| t.trim().parse::<u32>().map_err(|_| bad()))
                .collect::<Result<Vec<_>>>()?
        } else {
            s.chars()
                .map(|c| c.to_digit(10).ok_or_else(bad))
                .collect::<Result<Vec<_>>>()?
        };
        Ok(RowingString { symbols })
    }
}

pub const BUILTIN_NAMES: [&str; 5] = ["F1", "F2", "F3", "Fig1F", "dot"];

/// The named base graphs. Labels in the drawings start at 1; here they start
/// at 0, so the drawn root 4 of `F1` is vertex 3.
pub fn builtin(name: &str) -> Result<Graph> {
    let (n, edges, root): (usize, &[(usize, usize)], usize) = match name {
        "F1" => (4, &[(0, 1), (1, 3), (2, 3)], 3),
        "F2" => (
            5,
            &[(0, 1), (0, 4), (1, 2), (1, 4), (2, 3), (2, 4), (3, 4)],
            4,
        ),
        "F3" => (6, &[(0, 1), (1, 2), (2, 3), (3, 5), (4, 5)], 5),
        "Fig1F" => (4, &[(0, 1), (1, 2), (2, 3)], 2),
        "dot" => (1, &[], 0),
        _ => return Err(Error::UnknownBase(name.to_string())),
    };
    Graph::from_edges(n, edges, Some(root))
}

/// Attaches the path `v_0 .. v_n` at the root of `base` (`v_0` is the root)
/// and a clique of order `a_i` joined to both `v_{i-1}` and `v_i`. New
/// vertices are numbered `v_i` first, then its clique. The new root is `v_n`.
pub fn build_rowing(base: &Graph, a: &RowingString) -> Result<Graph> {
    let mut prev = base.require_root()?;
    let mut g = base.clone();
    for &k in a.symbols() {
        let v = g.add_vertex();
        g.add_edge(prev, v, EdgeSign::Positive)?;
        let start = g.n();
        for _ in 0..k {
            let c = g.add_vertex();
            g.add_edge(prev, c, EdgeSign::Positive)?;
            g.add_edge(v, c, EdgeSign::Positive)?;
            for d in start..c {
                g.add_edge(d, c, EdgeSign::Positive)?;
            }
        }
        prev = v;
    }
    g.set_root(Some(prev))?;
    Ok(g)
}

/// Tree whose spine vertex `i` carries `legs[i]` pendant vertices. Each spine
/// vertex is followed by its legs in the numbering; the root is the last
/// spine vertex. An empty leg list gives the empty graph.
pub fn caterpillar(legs: &[u32]) -> Graph {
    let mut g = Graph::new(0);
    let mut prev: Option<usize> = None;
    for &k in legs {
        let s = g.add_vertex();
        if let Some(p) = prev {
            g.add_edge(p, s, EdgeSign::Positive)
                .expect("fresh vertices");
        }
        for _ in 0..k {
            let l = g.add_vertex();
            g.add_edge(s, l, EdgeSign::Positive)
                .expect("fresh vertices");
        }
        prev = Some(s);
    }
    g.set_root(prev).expect("root is a spine vertex");
    g
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtin_shapes() {
        let f1 = builtin("F1").unwrap();
        assert_eq!((f1.n(), f1.edge_count(), f1.root()), (4, 3, Some(3)));
        let f3 = builtin("F3").unwrap();
        assert_eq!((f3.n(), f3.edge_count(), f3.root()), (6, 5, Some(5)));
        let dot = builtin("dot").unwrap();
        assert_eq!((dot.n(), dot.edge_count()), (1, 0));
        assert!(matches!(builtin("F9"), Err(Error::UnknownBase(_))));
    }

    #[test]
    fn vertex_counts() {
        let dot = builtin("dot").unwrap();
        let p = build_rowing(&dot, &RowingString::zeros(5)).unwrap();
        assert_eq!((p.n(), p.edge_count(), p.root()), (6, 5, Some(5)));
        let f1 = builtin("F1").unwrap();
        assert_eq!(build_rowing(&f1, &"1".parse().unwrap()).unwrap().n(), 6);
        let fig = builtin("Fig1F").unwrap();
        let g = build_rowing(&fig, &"20240125".parse().unwrap()).unwrap();
        assert_eq!(g.n(), 28);
    }

    #[test]
    fn clique_is_joined_to_both_path_vertices() {
        let dot = builtin("dot").unwrap();
        let g = build_rowing(&dot, &"3".parse().unwrap()).unwrap();
        // v0 = 0, v1 = 1, clique 2,3,4: K5 in total
        assert_eq!(g.n(), 5);
        assert_eq!(g.edge_count(), 10);
        assert_eq!(g.root(), Some(1));
    }

    #[test]
    fn missing_root() {
        let g = Graph::new(2);
        assert_eq!(
            build_rowing(&g, &RowingString::ones(1)),
            Err(Error::MissingRoot)
        );
    }

    #[test]
    fn rowing_string_text() {
        let s: RowingString = "011010".parse().unwrap();
        assert_eq!(s.symbols(), &[0, 1, 1, 0, 1, 0]);
        assert_eq!(s.to_string(), "011010");
        let t: RowingString = "2,0,12".parse().unwrap();
        assert_eq!(t.to_string(), "2,0,12");
        let u: RowingString = "12,".parse().unwrap();
        assert_eq!(u.symbols(), &[12]);
        assert_eq!(u.to_string().parse::<RowingString>().unwrap(), u);
        assert!("1a".parse::<RowingString>().is_err());
        assert!("1,-2".parse::<RowingString>().is_err());
    }

    #[test]
    fn caterpillar_shapes() {
        let p3 = caterpillar(&[0, 0, 0]);
        assert_eq!((p3.n(), p3.edge_count()), (3, 2));
        let e = caterpillar(&[1]);
        assert_eq!((e.n(), e.edge_count()), (2, 1));
        let c = caterpillar(&[2, 0, 2]);
        assert_eq!((c.n(), c.edge_count()), (7, 6));
    }
}
