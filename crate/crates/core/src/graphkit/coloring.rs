use serde::{Deserialize, Serialize};

use super::graph::{EdgeSign, Graph};

/// One color index per vertex.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Coloring {
    pub colors: Vec<u32>,
}

impl Coloring {
    /// Negative edges must be monochromatic, positive edges bichromatic, and
    /// every color below `p`.
    pub fn is_valid(&self, g: &Graph, p: u32) -> bool {
        if self.colors.len() != g.n() || self.colors.iter().any(|&c| c >= p) {
            return false;
        }
        g.edges().all(|(u, v, s)| match s {
            EdgeSign::Positive => self.colors[u] != self.colors[v],
            EdgeSign::Negative => self.colors[u] == self.colors[v],
        })
    }

    pub fn num_colors(&self) -> usize {
        let mut seen: Vec<u32> = self.colors.clone();
        seen.sort_unstable();
        seen.dedup();
        seen.len()
    }
}

fn find(parent: &mut [usize], v: usize) -> usize {
    let mut r = v;
    while parent[r] != r {
        r = parent[r];
    }
    let mut v = v;
    while parent[v] != r {
        let next = parent[v];
        parent[v] = r;
        v = next;
    }
    r
}

/// A `p`-coloring in the signed sense, or `None`.
///
/// Components of the negative edges are contracted; a positive edge inside
/// one of them rules out every `p`. The quotient is then colored by
/// backtracking, taking the most constrained vertex next and breaking ties
/// by degree.
pub fn p_color(g: &Graph, p: u32) -> Option<Coloring> {
    let n = g.n();
    let mut parent: Vec<usize> = (0..n).collect();
    for (u, v, s) in g.edges() {
        if s == EdgeSign::Negative {
            let (a, b) = (find(&mut parent, u), find(&mut parent, v));
            if a != b {
                parent[a.max(b)] = a.min(b);
            }
        }
    }
    let mut class = vec![usize::MAX; n];
    let mut reps = 0;
    for v in 0..n {
        let r = find(&mut parent, v);
        if class[r] == usize::MAX {
            class[r] = reps;
            reps += 1;
        }
        class[v] = class[r];
    }
    let mut adj = vec![Vec::new(); reps];
    for (u, v, s) in g.edges() {
        if s == EdgeSign::Positive {
            let (a, b) = (class[u], class[v]);
            if a == b {
                return None;
            }
            adj[a].push(b);
            adj[b].push(a);
        }
    }
    for list in adj.iter_mut() {
        list.sort_unstable();
        list.dedup();
    }
    if reps > 0 && p == 0 {
        return None;
    }
    let mut colors = vec![u32::MAX; reps];
    if !backtrack(&adj, p, &mut colors, 0) {
        return None;
    }
    Some(Coloring {
        colors: (0..n).map(|v| colors[class[v]]).collect(),
    })
}

fn backtrack(adj: &[Vec<usize>], p: u32, colors: &mut [u32], done: usize) -> bool {
    if done == colors.len() {
        return true;
    }
    // most colored neighbours, then highest degree, then lowest index
    let mut best: Option<(usize, usize, usize)> = None;
    for v in 0..colors.len() {
        if colors[v] != u32::MAX {
            continue;
        }
        let sat = saturation(adj, colors, v);
        let key = (sat, adj[v].len());
        if best.is_none_or(|(s, d, _)| key > (s, d)) {
            best = Some((key.0, key.1, v));
        }
    }
    let (_, _, v) = best.expect("an uncolored vertex remains");
    let used_max = colors
        .iter()
        .filter(|&&c| c != u32::MAX)
        .max()
        .map_or(0, |&c| c + 1);
    // colors above the highest one used so far are interchangeable
    let limit = p.min(used_max + 1);
    for c in 0..limit {
        if adj[v].iter().any(|&w| colors[w] == c) {
            continue;
        }
        colors[v] = c;
        if backtrack(adj, p, colors, done + 1) {
            return true;
        }
        colors[v] = u32::MAX;
    }
    false
}

fn saturation(adj: &[Vec<usize>], colors: &[u32], v: usize) -> usize {
    let mut seen: Vec<u32> = adj[v]
        .iter()
        .map(|&w| colors[w])
        .filter(|&c| c != u32::MAX)
        .collect();
    seen.sort_unstable();
    seen.dedup();
    seen.len()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn triangle() -> Graph {
        Graph::from_edges(3, &[(0, 1), (1, 2), (0, 2)], None).unwrap()
    }

    #[test]
    fn triangle_needs_three() {
        let c = p_color(&triangle(), 3).unwrap();
        assert!(c.is_valid(&triangle(), 3));
        assert_eq!(p_color(&triangle(), 2), None);
    }

    #[test]
    fn negative_edges_are_contracted() {
        let g = Graph::from_signed_edges(
            3,
            &[(0, 1, EdgeSign::Negative), (1, 2, EdgeSign::Positive)],
            None,
        )
        .unwrap();
        let c = p_color(&g, 2).unwrap();
        assert_eq!(c.colors[0], c.colors[1]);
        assert!(c.is_valid(&g, 2));
        let neg = Graph::from_signed_edges(
            3,
            &[
                (0, 1, EdgeSign::Negative),
                (1, 2, EdgeSign::Negative),
                (0, 2, EdgeSign::Negative),
            ],
            None,
        )
        .unwrap();
        assert!(p_color(&neg, 1).is_some());
    }

    #[test]
    fn contraction_conflict() {
        let g = Graph::from_signed_edges(
            3,
            &[
                (0, 1, EdgeSign::Negative),
                (1, 2, EdgeSign::Negative),
                (0, 2, EdgeSign::Positive),
            ],
            None,
        )
        .unwrap();
        for p in 1..5 {
            assert_eq!(p_color(&g, p), None);
        }
    }

    #[test]
    fn empty_graph() {
        assert_eq!(
            p_color(&Graph::new(0), 1),
            Some(Coloring { colors: vec![] })
        );
        assert_eq!(p_color(&Graph::new(2), 0), None);
    }
}
