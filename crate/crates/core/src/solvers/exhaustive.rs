//! Size-lexicographic subset enumeration.
//!
//! Subsets are visited by cardinality (ascending for minimisation,
//! descending for maximisation) and, within one cardinality, in
//! lexicographic order of their sorted member lists. The first hit is
//! therefore optimal and lexicographically least among optima.

use std::time::Instant;

use rayon::prelude::*;

use super::{Objective, SolveResult};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

pub const EXHAUSTIVE_CAP: usize = 24;
pub const ENUMERATE_CAP: usize = 20;

/// Below this many vertices the per-level search stays on the calling thread.
const PARALLEL_FROM: usize = 14;

/// Advances `c` (strictly increasing indices in `0..n`) to the next
/// combination in lexicographic order. Returns false after the last one.
pub(crate) fn next_combination(c: &mut [usize], n: usize) -> bool {
    let k = c.len();
    for i in (0..k).rev() {
        if c[i] < n - k + i {
            c[i] += 1;
            for j in i + 1..k {
                c[j] = c[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

fn binomial(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u64, |acc, i| acc * (n - i) as u64 / (i + 1) as u64)
}

/// 0-based position of `set` among the `|set|`-subsets of `0..n` in lexicographic order.
fn lex_rank(set: &VertexSet, n: usize) -> u64 {
    let members = set.to_vec();
    let k = members.len();
    let mut rank = 0;
    let mut prev: Option<usize> = None;
    for (j, &c) in members.iter().enumerate() {
        let start = prev.map_or(0, |p| p + 1);
        for x in start..c {
            rank += binomial(n - 1 - x, k - 1 - j);
        }
        prev = Some(c);
    }
    rank
}

fn set_from(n: usize, first: usize, rest: &[usize], offset: usize) -> VertexSet {
    let mut s = VertexSet::empty(n);
    s.insert(first);
    for &r in rest {
        s.insert(r + offset);
    }
    s
}

/// Visits, in lexicographic order, the `k`-subsets whose least member is `first`.
fn for_each_with_first<F>(n: usize, k: usize, first: usize, mut visit: F) -> Option<VertexSet>
where
    F: FnMut(VertexSet) -> Option<VertexSet>,
{
    let offset = first + 1;
    let m = n - offset;
    let rest_len = k - 1;
    if rest_len > m {
        return None;
    }
    let mut rest: Vec<usize> = (0..rest_len).collect();
    loop {
        if let Some(hit) = visit(set_from(n, first, &rest, offset)) {
            return Some(hit);
        }
        if !next_combination(&mut rest, m) {
            return None;
        }
    }
}

fn first_at_level<P>(n: usize, k: usize, pred: &P) -> Option<VertexSet>
where
    P: Fn(&VertexSet) -> bool + Sync,
{
    if k == 0 {
        let e = VertexSet::empty(n);
        return pred(&e).then_some(e);
    }
    let scan = |first: usize| for_each_with_first(n, k, first, |s| pred(&s).then_some(s));
    if n >= PARALLEL_FROM {
        (0..=n - k).into_par_iter().find_map_first(scan)
    } else {
        (0..=n - k).find_map(scan)
    }
}

fn all_at_level<P>(n: usize, k: usize, pred: &P) -> Vec<VertexSet>
where
    P: Fn(&VertexSet) -> bool + Sync,
{
    if k == 0 {
        let e = VertexSet::empty(n);
        return if pred(&e) { vec![e] } else { Vec::new() };
    }
    let scan = |first: usize| {
        let mut found = Vec::new();
        for_each_with_first(n, k, first, |s| {
            if pred(&s) {
                found.push(s);
            }
            None
        });
        found
    };
    let chunks: Vec<Vec<VertexSet>> = if n >= PARALLEL_FROM {
        (0..=n - k).into_par_iter().map(scan).collect()
    } else {
        (0..=n - k).map(scan).collect()
    };
    chunks.into_iter().flatten().collect()
}

/// Optimal subset under `pred` by exhaustive enumeration. `subsets_examined`
/// is the number of subsets a sequential scan in the documented order would
/// test, independent of how the work was split across threads.
pub fn solve_extremal<P>(g: &Graph, pred: P, objective: Objective) -> Result<SolveResult>
where
    P: Fn(&VertexSet) -> bool + Sync,
{
    let n = g.n();
    if n > EXHAUSTIVE_CAP {
        return Err(Error::GraphTooLargeForExhaustive {
            n,
            cap: EXHAUSTIVE_CAP,
        });
    }
    let start = Instant::now();
    let levels: Vec<usize> = match objective {
        Objective::Min => (0..=n).collect(),
        Objective::Max => (0..=n).rev().collect(),
    };
    let mut examined = 0u64;
    for k in levels {
        if let Some(witness) = first_at_level(n, k, &pred) {
            examined += lex_rank(&witness, n) + 1;
            return Ok(SolveResult::found(witness, examined, start.elapsed()));
        }
        examined += binomial(n, k);
    }
    Ok(SolveResult::infeasible(examined, start.elapsed()))
}

/// Every subset satisfying `pred`, in size-lexicographic order.
pub fn enumerate_satisfying<P>(g: &Graph, pred: P) -> Result<Vec<VertexSet>>
where
    P: Fn(&VertexSet) -> bool + Sync,
{
    let n = g.n();
    if n > ENUMERATE_CAP {
        return Err(Error::GraphTooLargeForExhaustive {
            n,
            cap: ENUMERATE_CAP,
        });
    }
    Ok((0..=n).flat_map(|k| all_at_level(n, k, &pred)).collect())
}
