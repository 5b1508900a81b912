//! Exact minimum/maximum subset search.

mod bb;
mod exhaustive;

use std::time::Duration;

use serde::Serialize;

pub use bb::bb_min_alliance;
pub use exhaustive::{enumerate_satisfying, solve_extremal, ENUMERATE_CAP, EXHAUSTIVE_CAP};

use crate::graph::VertexSet;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Objective {
    Min,
    Max,
}

impl std::str::FromStr for Objective {
    type Err = crate::Error;

    fn from_str(s: &str) -> crate::Result<Self> {
        match s {
            "min" => Ok(Objective::Min),
            "max" => Ok(Objective::Max),
            other => Err(crate::Error::BadParams(format!(
                "objective must be min or max, got {other:?}"
            ))),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SolveResult {
    pub feasible: bool,
    pub size: Option<usize>,
    pub witness: Option<VertexSet>,
    pub subsets_examined: u64,
    #[serde(skip)]
    pub elapsed: Duration,
}

impl SolveResult {
    pub(crate) fn found(witness: VertexSet, subsets_examined: u64, elapsed: Duration) -> Self {
        SolveResult {
            feasible: true,
            size: Some(witness.len()),
            witness: Some(witness),
            subsets_examined,
            elapsed,
        }
    }

    pub(crate) fn infeasible(subsets_examined: u64, elapsed: Duration) -> Self {
        SolveResult {
            feasible: false,
            size: None,
            witness: None,
            subsets_examined,
            elapsed,
        }
    }
}
