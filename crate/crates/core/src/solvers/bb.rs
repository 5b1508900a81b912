//! Branch and bound for minimum global alliances.
//!
//! Alliance conditions are not monotone under adding vertices, so the only
//! pruning is on the domination requirement: a lower bound on how many more
//! vertices are needed to dominate what is still undominated. The `D`/`O`
//! conditions are checked at leaves.
//!
//! Phase one branches on vertices by decreasing degree to find the optimum
//! size. Phase two re-runs the search in index order with that size fixed,
//! so the first leaf that passes is the lexicographically least optimum.

use std::time::Instant;

use super::SolveResult;
use crate::alliance::{check_plain, AllianceSpec};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

struct Search<'a> {
    g: &'a Graph,
    spec: &'a AllianceSpec,
    order: Vec<usize>,
    leaves: u64,
}

struct Node {
    chosen: VertexSet,
    /// `N[chosen]`.
    dominated: VertexSet,
    /// Vertices decided to stay out.
    excluded: VertexSet,
}

impl Node {
    fn root(n: usize) -> Self {
        Node {
            chosen: VertexSet::empty(n),
            dominated: VertexSet::empty(n),
            excluded: VertexSet::empty(n),
        }
    }
}

impl<'a> Search<'a> {
    /// Fewest further vertices that could dominate everything still
    /// undominated, or `None` if some vertex can no longer be dominated.
    fn domination_bound(&self, node: &Node) -> Option<usize> {
        let g = self.g;
        let undominated = node.dominated.complement();
        let missing = undominated.len();
        if missing == 0 {
            return Some(0);
        }
        let decided = node.chosen.union(&node.excluded);
        let mut coverage: Vec<usize> = Vec::new();
        let mut coverable = VertexSet::empty(g.n());
        for w in decided.complement().iter() {
            let mut closed = g.neighborhood(w).clone();
            closed.insert(w);
            let hit = closed.intersection_len(&undominated);
            if hit > 0 {
                coverage.push(hit);
                coverable = coverable.union(&closed);
            }
        }
        if !undominated.is_subset(&coverable) {
            return None;
        }
        coverage.sort_unstable_by(|a, b| b.cmp(a));
        let mut covered = 0;
        for (i, c) in coverage.iter().enumerate() {
            covered += c;
            if covered >= missing {
                return Some(i + 1);
            }
        }
        None
    }

    fn leaf(&mut self, chosen: &VertexSet) -> bool {
        self.leaves += 1;
        check_plain(self.g, chosen, self.spec)
    }

    fn include(&self, node: &Node, v: usize) -> Node {
        let mut chosen = node.chosen.clone();
        chosen.insert(v);
        let mut dominated = node.dominated.union(self.g.neighborhood(v));
        dominated.insert(v);
        Node {
            chosen,
            dominated,
            excluded: node.excluded.clone(),
        }
    }

    fn exclude(&self, node: &Node, v: usize) -> Node {
        let mut excluded = node.excluded.clone();
        excluded.insert(v);
        Node {
            chosen: node.chosen.clone(),
            dominated: node.dominated.clone(),
            excluded,
        }
    }

    /// Phase one: smallest feasible size below `best`.
    fn minimise(&mut self, node: Node, depth: usize, best: &mut usize) {
        let Some(bound) = self.domination_bound(&node) else {
            return;
        };
        if node.chosen.len() + bound >= *best {
            return;
        }
        if depth == self.order.len() {
            if self.leaf(&node.chosen) {
                *best = node.chosen.len();
            }
            return;
        }
        let v = self.order[depth];
        let with = self.include(&node, v);
        self.minimise(with, depth + 1, best);
        let without = self.exclude(&node, v);
        self.minimise(without, depth + 1, best);
    }

    /// Phase two: lexicographically least feasible set of exactly `size`
    /// vertices, branching on `v = depth`.
    fn first_of_size(&mut self, node: Node, depth: usize, size: usize) -> Option<VertexSet> {
        let n = self.g.n();
        let have = node.chosen.len();
        if have > size || have + (n - depth) < size {
            return None;
        }
        let bound = self.domination_bound(&node)?;
        if have + bound > size {
            return None;
        }
        if have == size {
            return self.leaf(&node.chosen).then_some(node.chosen);
        }
        let with = self.include(&node, depth);
        if let Some(found) = self.first_of_size(with, depth + 1, size) {
            return Some(found);
        }
        let without = self.exclude(&node, depth);
        self.first_of_size(without, depth + 1, size)
    }
}

/// Minimum-cardinality set satisfying a global alliance spec. Agrees with
/// [`super::solve_extremal`] on size and witness.
pub fn bb_min_alliance(g: &Graph, spec: &AllianceSpec) -> Result<SolveResult> {
    if !spec.global {
        return Err(Error::NonGlobalSpecUnsupported);
    }
    if spec.neutrals.is_some() {
        return Err(Error::BadParams(
            "branch and bound does not handle neutral vertices".into(),
        ));
    }
    let start = Instant::now();
    let n = g.n();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    let mut search = Search {
        g,
        spec,
        order,
        leaves: 0,
    };

    let mut best = n + 1;
    search.minimise(Node::root(n), 0, &mut best);
    if best > n {
        return Ok(SolveResult::infeasible(search.leaves, start.elapsed()));
    }
    let witness = search
        .first_of_size(Node::root(n), 0, best)
        .expect("phase two must rediscover a set of the optimal size");
    Ok(SolveResult::found(witness, search.leaves, start.elapsed()))
}
