//! Simple undirected graphs on vertices `0..n`, vertex subsets, and the
//! neighbourhood counts every predicate in the crate is built from.

mod edge_list;
mod generate;
mod vertex_set;

use std::collections::VecDeque;

pub use edge_list::{parse_edge_list, serialize_edge_list};
pub use generate::{generate, Family, Lcg64};
pub use vertex_set::VertexSet;

use crate::error::{Error, Result};

/// An immutable simple graph. Adjacency is kept both as sorted neighbour
/// lists and as bitsets, so `δ_S(v)` is a popcount.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    neighbors: Vec<Vec<usize>>,
    adjacency: Vec<VertexSet>,
}

impl Graph {
    /// Builds a graph, rejecting self-loops, duplicate edges (in either
    /// orientation) and out-of-range endpoints.
    pub fn from_edges<I: IntoIterator<Item = (usize, usize)>>(n: usize, edges: I) -> Result<Self> {
        let mut adjacency = vec![VertexSet::empty(n); n];
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            if adjacency[u].contains(v) {
                return Err(Error::DuplicateEdge(u.min(v), u.max(v)));
            }
            adjacency[u].insert(v);
            adjacency[v].insert(u);
        }
        Ok(Self::from_adjacency(adjacency))
    }

    fn from_adjacency(adjacency: Vec<VertexSet>) -> Self {
        let neighbors = adjacency.iter().map(VertexSet::to_vec).collect();
        Graph {
            neighbors,
            adjacency,
        }
    }

    /// The graph on `n <= 11` vertices whose edges are selected by the bits
    /// of `code`, indexing pairs `(u, v)`, `u < v`, in lexicographic order.
    pub fn from_edge_code(n: usize, code: u64) -> Self {
        let mut adjacency = vec![VertexSet::empty(n); n];
        let mut bit = 0;
        for u in 0..n {
            for v in u + 1..n {
                if code >> bit & 1 == 1 {
                    adjacency[u].insert(v);
                    adjacency[v].insert(u);
                }
                bit += 1;
            }
        }
        Self::from_adjacency(adjacency)
    }

    pub fn empty(n: usize) -> Self {
        Self::from_adjacency(vec![VertexSet::empty(n); n])
    }

    pub fn n(&self) -> usize {
        self.neighbors.len()
    }

    pub fn edge_count(&self) -> usize {
        self.neighbors.iter().map(Vec::len).sum::<usize>() / 2
    }

    /// Edges as `(u, v)` with `u < v`, sorted lexicographically.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for (u, nbrs) in self.neighbors.iter().enumerate() {
            out.extend(nbrs.iter().filter(|&&v| v > u).map(|&v| (u, v)));
        }
        out
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.neighbors[v]
    }

    /// Open neighbourhood `N(v)` as a set.
    pub fn neighborhood(&self, v: usize) -> &VertexSet {
        &self.adjacency[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && self.adjacency[u].contains(v)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.neighbors[v].len()
    }

    pub fn min_degree(&self) -> Option<usize> {
        (0..self.n()).map(|v| self.degree(v)).min()
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n()).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn has_isolated_vertex(&self) -> bool {
        self.min_degree() == Some(0)
    }

    /// `Some(r)` when every vertex has degree `r`. The empty graph is not regular.
    pub fn regular_degree(&self) -> Option<usize> {
        let r = self.neighbors.first()?.len();
        (0..self.n()).all(|v| self.degree(v) == r).then_some(r)
    }

    pub(crate) fn check_set(&self, s: &VertexSet) -> Result<()> {
        if s.universe() != self.n() {
            return Err(Error::UniverseMismatch {
                set: s.universe(),
                graph: self.n(),
            });
        }
        Ok(())
    }

    /// `|N(v) ∩ S|`. No range checks.
    #[inline]
    pub fn degree_in(&self, s: &VertexSet, v: usize) -> usize {
        self.adjacency[v].intersection_len(s)
    }

    /// `(δ_S(v), δ_S̄(v))`.
    pub fn degree_split(&self, s: &VertexSet, v: usize) -> Result<(usize, usize)> {
        if v >= self.n() {
            return Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.n(),
            });
        }
        self.check_set(s)?;
        let inside = self.degree_in(s, v);
        Ok((inside, self.degree(v) - inside))
    }

    /// Closed neighbourhood `N[S]`.
    pub fn closed_neighborhood(&self, s: &VertexSet) -> VertexSet {
        s.iter()
            .fold(s.clone(), |acc, v| acc.union(&self.adjacency[v]))
    }

    /// `N(S) \ S`.
    pub fn boundary(&self, s: &VertexSet) -> VertexSet {
        self.closed_neighborhood(s).difference(s)
    }

    /// True iff every vertex is in `S` or adjacent to it (`N[S] = V`).
    pub fn is_dominating(&self, s: &VertexSet) -> bool {
        (0..self.n()).all(|v| s.contains(v) || self.degree_in(s, v) > 0)
    }

    /// Breadth-first distances from `source`; `None` for unreachable vertices.
    pub fn bfs_distances(&self, source: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n()];
        let mut queue = VecDeque::new();
        dist[source] = Some(0);
        queue.push_back(source);
        while let Some(u) = queue.pop_front() {
            let du = dist[u].unwrap_or(0);
            for &w in &self.neighbors[u] {
                if dist[w].is_none() {
                    dist[w] = Some(du + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// The `r`-th power: `u ~ v` iff `1 <= d(u, v) <= r`. `r = 0` is treated as 1.
    pub fn power(&self, r: usize) -> Graph {
        if r <= 1 {
            return self.clone();
        }
        let n = self.n();
        let mut adjacency = vec![VertexSet::empty(n); n];
        for (u, row) in adjacency.iter_mut().enumerate() {
            for (v, d) in self.bfs_distances(u).into_iter().enumerate() {
                if matches!(d, Some(d) if d >= 1 && d <= r) {
                    row.insert(v);
                }
            }
        }
        Self::from_adjacency(adjacency)
    }

    /// Deletes the vertices of `removed`; vertex ids are kept, removed ones
    /// become isolated. Used for alliances with neutrals.
    pub fn without_vertices(&self, removed: &VertexSet) -> Graph {
        let adjacency = (0..self.n())
            .map(|v| {
                if removed.contains(v) {
                    VertexSet::empty(self.n())
                } else {
                    self.adjacency[v].difference(removed)
                }
            })
            .collect();
        Self::from_adjacency(adjacency)
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n(), self.edges())
    }
}

/// Free-function form of [`Graph::power`].
pub fn graph_power(g: &Graph, r: usize) -> Graph {
    g.power(r)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        generate(Family::Cycle, &[n as i64], None).unwrap()
    }

    #[test]
    fn degree_split_examples() {
        let c4 = cycle(4);
        let s = VertexSet::from_vertices(4, [0, 2]).unwrap();
        assert_eq!(c4.degree_split(&s, 1).unwrap(), (2, 0));

        let k4 = generate(Family::Complete, &[4], None).unwrap();
        let s = VertexSet::from_vertices(4, [0, 1]).unwrap();
        assert_eq!(k4.degree_split(&s, 2).unwrap(), (2, 1));

        let full = VertexSet::full(4);
        for v in 0..4 {
            assert_eq!(k4.degree_split(&full, v).unwrap(), (3, 0));
        }
        assert_eq!(
            k4.degree_split(&full, 4),
            Err(Error::VertexOutOfRange { vertex: 4, n: 4 })
        );
    }

    #[test]
    fn domination_examples() {
        let c5 = cycle(5);
        assert!(c5.is_dominating(&VertexSet::from_vertices(5, [0, 2]).unwrap()));
        assert!(!c5.is_dominating(&VertexSet::from_vertices(5, [0]).unwrap()));
        let k1 = Graph::empty(1);
        assert!(!k1.is_dominating(&VertexSet::empty(1)));
        assert!(k1.is_dominating(&VertexSet::full(1)));
        assert!(Graph::empty(0).is_dominating(&VertexSet::empty(0)));
    }

    #[test]
    fn rejects_bad_edges() {
        assert_eq!(
            Graph::from_edges(2, [(0, 1), (1, 0)]),
            Err(Error::DuplicateEdge(0, 1))
        );
        assert_eq!(Graph::from_edges(2, [(1, 1)]), Err(Error::SelfLoop(1)));
        assert_eq!(
            Graph::from_edges(2, [(0, 2)]),
            Err(Error::VertexOutOfRange { vertex: 2, n: 2 })
        );
    }

    #[test]
    fn power_of_c5_is_k5() {
        let p = cycle(5).power(2);
        assert_eq!(p.edge_count(), 10);
        assert_eq!(p, generate(Family::Complete, &[5], None).unwrap());
    }

    #[test]
    fn power_of_p4() {
        let p4 = generate(Family::Path, &[4], None).unwrap();
        assert_eq!(
            p4.power(2).edges(),
            vec![(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)]
        );
        assert_eq!(p4.power(1), p4);
    }

    #[test]
    fn edge_code_enumerates_pairs_lexicographically() {
        // bits: 01, 02, 03, 12, 13, 23
        let g = Graph::from_edge_code(4, 0b100001);
        assert_eq!(g.edges(), vec![(0, 1), (2, 3)]);
    }

    #[test]
    fn regularity() {
        assert_eq!(cycle(6).regular_degree(), Some(2));
        assert_eq!(
            generate(Family::Path, &[3], None).unwrap().regular_degree(),
            None
        );
        assert_eq!(Graph::empty(0).regular_degree(), None);
        assert_eq!(Graph::empty(3).regular_degree(), Some(0));
    }

    #[test]
    fn vertex_deletion_isolates() {
        let c4 = cycle(4);
        let h = c4.without_vertices(&VertexSet::from_vertices(4, [1]).unwrap());
        assert_eq!(h.edges(), vec![(0, 3), (2, 3)]);
        assert_eq!(h.degree(1), 0);
    }
}
