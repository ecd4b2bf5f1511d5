use std::collections::BTreeMap;

use crate::error::{Error, Result};

/// Edge sign. Unsigned graphs use `Positive` throughout.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum EdgeSign {
    Positive,
    Negative,
}

impl EdgeSign {
    pub fn as_i8(self) -> i8 {
        match self {
            EdgeSign::Positive => 1,
            EdgeSign::Negative => -1,
        }
    }

    pub fn from_i64(s: i64) -> Result<EdgeSign> {
        match s {
            1 => Ok(EdgeSign::Positive),
            -1 => Ok(EdgeSign::Negative),
            _ => Err(Error::InvalidGraph(format!(
                "edge sign must be +1 or -1, got {s}"
            ))),
        }
    }

    pub fn flipped(self) -> EdgeSign {
        match self {
            EdgeSign::Positive => EdgeSign::Negative,
            EdgeSign::Negative => EdgeSign::Positive,
        }
    }
}

/// A signed graph on vertices `0..n`, optionally rooted.
///
/// This one type stands for rooted graphs, signed graphs and plain graphs:
/// a plain graph is a signed graph whose edges are all positive. Edges are
/// keyed by `(min, max)` so duplicates and self-loops cannot be stored.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Graph {
    n: usize,
    edges: BTreeMap<(usize, usize), EdgeSign>,
    root: Option<usize>,
}

pub type RootedGraph = Graph;
pub type SignedGraph = Graph;

impl Graph {
    pub fn new(n: usize) -> Graph {
        Graph {
            n,
            edges: BTreeMap::new(),
            root: None,
        }
    }

    /// Builds an unsigned graph, rejecting loops, duplicates and bad indices.
    pub fn from_edges(n: usize, edges: &[(usize, usize)], root: Option<usize>) -> Result<Graph> {
        let mut g = Graph::new(n);
        for &(u, v) in edges {
            g.add_edge(u, v, EdgeSign::Positive)?;
        }
        g.set_root(root)?;
        Ok(g)
    }

    pub fn from_signed_edges(
        n: usize,
        edges: &[(usize, usize, EdgeSign)],
        root: Option<usize>,
    ) -> Result<Graph> {
        let mut g = Graph::new(n);
        for &(u, v, s) in edges {
            g.add_edge(u, v, s)?;
        }
        g.set_root(root)?;
        Ok(g)
    }

    pub fn add_vertex(&mut self) -> usize {
        self.n += 1;
        self.n - 1
    }

    pub fn add_edge(&mut self, u: usize, v: usize, sign: EdgeSign) -> Result<()> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::InvalidGraph(format!("self-loop at {u}")));
        }
        let key = (u.min(v), u.max(v));
        if self.edges.insert(key, sign).is_some() {
            return Err(Error::InvalidGraph(format!("duplicate edge {u}-{v}")));
        }
        Ok(())
    }

    pub fn set_root(&mut self, root: Option<usize>) -> Result<()> {
        if let Some(r) = root {
            self.check_vertex(r)?;
        }
        self.root = root;
        Ok(())
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::InvalidVertex {
                vertex: v,
                n: self.n,
            })
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn root(&self) -> Option<usize> {
        self.root
    }

    pub fn require_root(&self) -> Result<usize> {
        self.root.ok_or(Error::MissingRoot)
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges as `(u, v, sign)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize, EdgeSign)> + '_ {
        self.edges.iter().map(|(&(u, v), &s)| (u, v, s))
    }

    pub fn edge_sign(&self, u: usize, v: usize) -> Option<EdgeSign> {
        self.edges.get(&(u.min(v), u.max(v))).copied()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edge_sign(u, v).is_some()
    }

    pub fn is_unsigned(&self) -> bool {
        self.edges.values().all(|&s| s == EdgeSign::Positive)
    }

    /// Neighbour lists with signs.
    pub fn adjacency(&self) -> Vec<Vec<(usize, EdgeSign)>> {
        let mut adj = vec![Vec::new(); self.n];
        for (u, v, s) in self.edges() {
            adj[u].push((v, s));
            adj[v].push((u, s));
        }
        adj
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.n];
        for (u, v, _) in self.edges() {
            deg[u] += 1;
            deg[v] += 1;
        }
        deg
    }

    pub fn max_degree(&self) -> usize {
        self.degrees().into_iter().max().unwrap_or(0)
    }

    /// Flips the sign of every edge with exactly one endpoint in `side`.
    pub fn switch(&self, side: &[usize]) -> Result<Graph> {
        let mut inside = vec![false; self.n];
        for &v in side {
            self.check_vertex(v)?;
            inside[v] = true;
        }
        let mut g = self.clone();
        for (&(u, v), s) in g.edges.iter_mut() {
            if inside[u] != inside[v] {
                *s = s.flipped();
            }
        }
        Ok(g)
    }

    /// Induced subgraph on `subset`, relabelled in ascending order of the
    /// original indices. The root survives only if it lies in `subset`.
    pub fn induced(&self, subset: &[usize]) -> Result<Graph> {
        let mut keep: Vec<usize> = subset.to_vec();
        keep.sort_unstable();
        keep.dedup();
        let mut index = vec![usize::MAX; self.n];
        for (i, &v) in keep.iter().enumerate() {
            self.check_vertex(v)?;
            index[v] = i;
        }
        let mut g = Graph::new(keep.len());
        for (u, v, s) in self.edges() {
            if index[u] != usize::MAX && index[v] != usize::MAX {
                g.add_edge(index[u], index[v], s)?;
            }
        }
        g.root = self
            .root
            .and_then(|r| (index[r] != usize::MAX).then_some(index[r]));
        Ok(g)
    }

    /// Same graph without its root.
    pub fn unrooted(&self) -> Graph {
        Graph {
            root: None,
            ..self.clone()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_malformed_edges() {
        let mut g = Graph::new(3);
        assert!(g.add_edge(0, 0, EdgeSign::Positive).is_err());
        g.add_edge(0, 1, EdgeSign::Positive).unwrap();
        assert!(g.add_edge(1, 0, EdgeSign::Negative).is_err());
        assert!(matches!(
            g.add_edge(0, 3, EdgeSign::Positive),
            Err(Error::InvalidVertex { vertex: 3, n: 3 })
        ));
        assert!(g.set_root(Some(3)).is_err());
    }

    #[test]
    fn switching_trivial_sides() {
        let g = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)], None).unwrap();
        assert_eq!(g.switch(&[]).unwrap(), g);
        assert_eq!(g.switch(&[0, 1, 2, 3]).unwrap(), g);
        let h = g.switch(&[1]).unwrap();
        assert_eq!(h.edge_sign(0, 1), Some(EdgeSign::Negative));
        assert_eq!(h.edge_sign(2, 3), Some(EdgeSign::Positive));
        assert_eq!(h.switch(&[1]).unwrap(), g);
    }

    #[test]
    fn induced_k4_minus_vertex() {
        let k4 = Graph::from_edges(
            4,
            &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)],
            Some(3),
        )
        .unwrap();
        let k3 = k4.induced(&[0, 1, 2]).unwrap();
        assert_eq!(k3.n(), 3);
        assert_eq!(k3.edge_count(), 3);
        assert_eq!(k3.root(), None);
        let full = k4.induced(&[3, 2, 1, 0]).unwrap();
        assert_eq!(full, k4);
    }
}
