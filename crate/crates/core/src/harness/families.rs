use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::{generate, Family, Graph};

/// Largest order for which every labelled graph is enumerated.
pub const LABELED_LIMIT: usize = 7;
/// Largest order for the named families.
pub const NAMED_LIMIT: usize = 16;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GraphFamily {
    /// Every labelled simple graph on `1..=n_max` vertices.
    AllLabeled,
    /// As [`GraphFamily::AllLabeled`], restricted to minimum degree >= 1.
    AllLabeledMinDegreeOne,
    /// `C_3 ..= C_{n_max}`.
    Cycles,
    /// `P_1 ..= P_{n_max}`.
    Paths,
    /// `K_1 ..= K_{n_max}`.
    Complete,
    /// `K_{1,1} ..= K_{1,n_max-1}`.
    Stars,
}

impl GraphFamily {
    pub const ALL: [GraphFamily; 6] = [
        GraphFamily::AllLabeled,
        GraphFamily::AllLabeledMinDegreeOne,
        GraphFamily::Cycles,
        GraphFamily::Paths,
        GraphFamily::Complete,
        GraphFamily::Stars,
    ];

    pub fn name(self) -> &'static str {
        match self {
            GraphFamily::AllLabeled => "all-labeled",
            GraphFamily::AllLabeledMinDegreeOne => "all-labeled-min-degree-1",
            GraphFamily::Cycles => "cycles",
            GraphFamily::Paths => "paths",
            GraphFamily::Complete => "complete",
            GraphFamily::Stars => "stars",
        }
    }

    fn limit(self) -> usize {
        match self {
            GraphFamily::AllLabeled | GraphFamily::AllLabeledMinDegreeOne => LABELED_LIMIT,
            _ => NAMED_LIMIT,
        }
    }

    pub fn check_size(self, n_max: usize) -> Result<()> {
        if n_max > self.limit() {
            return Err(Error::FamilyTooLarge {
                n_max,
                limit: self.limit(),
            });
        }
        Ok(())
    }

    /// Applies `f` to every member in a fixed order and returns the results
    /// in that order. Labelled families are evaluated in parallel.
    pub fn map<T, F>(self, n_max: usize, f: F) -> Result<Vec<T>>
    where
        T: Send,
        F: Fn(Graph) -> Option<T> + Sync + Send,
    {
        self.check_size(n_max)?;
        let named = |fam: Family, params: Vec<i64>| generate(fam, &params, None);
        let out = match self {
            GraphFamily::AllLabeled | GraphFamily::AllLabeledMinDegreeOne => {
                let min_degree_one = self == GraphFamily::AllLabeledMinDegreeOne;
                let mut out = Vec::new();
                for n in 1..=n_max {
                    let pairs = n * (n - 1) / 2;
                    let part: Vec<T> = (0..1u64 << pairs)
                        .into_par_iter()
                        .filter_map(|code| {
                            let g = Graph::from_edge_code(n, code);
                            if min_degree_one && g.has_isolated_vertex() {
                                return None;
                            }
                            f(g)
                        })
                        .collect();
                    out.extend(part);
                }
                out
            }
            GraphFamily::Cycles => (3..=n_max)
                .map(|n| named(Family::Cycle, vec![n as i64]))
                .collect::<Result<Vec<_>>>()?
                .into_iter()
                .filter_map(f)
                .collect(),
            GraphFamily::Paths => (1..=n_max)
                .map(|n| named(Family::Path, vec![n as i64]))
                .collect::<Result<Vec<_>>>()?
                .into_iter()
                .filter_map(f)
                .collect(),
            GraphFamily::Complete => (1..=n_max)
                .map(|n| named(Family::Complete, vec![n as i64]))
                .collect::<Result<Vec<_>>>()?
                .into_iter()
                .filter_map(f)
                .collect(),
            GraphFamily::Stars => (1..n_max)
                .map(|k| named(Family::Star, vec![k as i64]))
                .collect::<Result<Vec<_>>>()?
                .into_iter()
                .filter_map(f)
                .collect(),
        };
        Ok(out)
    }
}

impl fmt::Display for GraphFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for GraphFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        GraphFamily::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| Error::UnknownFamily(s.to_string()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn labeled_counts() {
        // 1 + 2 + 8 + 64 labelled graphs on 1..=4 vertices.
        let all = GraphFamily::AllLabeled.map(4, Some).unwrap();
        assert_eq!(all.len(), 75);
        // Labelled graphs without isolated vertices: 0, 1, 4, 41.
        let min1 = GraphFamily::AllLabeledMinDegreeOne.map(4, Some).unwrap();
        assert_eq!(min1.len(), 46);
    }

    #[test]
    fn named_members() {
        let cycles = GraphFamily::Cycles.map(6, |g| Some(g.n())).unwrap();
        assert_eq!(cycles, vec![3, 4, 5, 6]);
        let stars = GraphFamily::Stars.map(4, |g| Some(g.n())).unwrap();
        assert_eq!(stars, vec![2, 3, 4]);
    }

    #[test]
    fn size_limits() {
        assert!(GraphFamily::AllLabeled.map(8, Some).is_err());
        assert!("trees".parse::<GraphFamily>().is_err());
    }
}
