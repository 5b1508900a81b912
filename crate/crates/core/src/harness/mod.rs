//! Exhaustive verification of the alliance characterisations against the
//! direct definitions over small graph families.

mod families;
mod gallai;
mod propositions;
mod report;

use std::sync::Arc;

pub use families::{GraphFamily, LABELED_LIMIT, NAMED_LIMIT};
pub use gallai::{gallai_check, gallai_readings, GallaiCheck, GallaiReadings};
pub use propositions::{Context, PropositionId};
pub use report::{render_summary, Counterexample, PropositionReport};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// Largest order accepted by [`errata_scan`].
pub const ERRATA_LIMIT: usize = 6;

#[derive(Default)]
struct Tally {
    sets_checked: u64,
    agreements: u64,
    counterexamples: Vec<Counterexample>,
}

fn tally(prop: PropositionId, g: Graph) -> Option<Result<Tally>> {
    let contexts = prop.contexts(&g)?;
    let g = Arc::new(g);
    let run = || -> Result<Tally> {
        let mut t = Tally::default();
        for context in &contexts {
            for mask in 0..1u64 << g.n() {
                let s = VertexSet::from_mask(g.n(), mask);
                let (direct, framework) = prop.verdicts(&g, &s, context)?;
                t.sets_checked += 1;
                if direct == framework {
                    t.agreements += 1;
                } else {
                    t.counterexamples.push(Counterexample {
                        graph: Arc::clone(&g),
                        set: s,
                        direct,
                        framework,
                        context: context.clone(),
                    });
                }
            }
        }
        Ok(t)
    };
    Some(run())
}

/// Compares both sides of `prop` on every subset of every member of `family`
/// up to `n_max` vertices. Counterexamples are listed in family order, then
/// context order, then by subset bitmask.
pub fn verify_characterization(
    prop: PropositionId,
    family: GraphFamily,
    n_max: usize,
) -> Result<PropositionReport> {
    let tallies = family.map(n_max, |g| tally(prop, g))?;
    let mut report = PropositionReport {
        proposition_id: prop,
        family: family.to_string(),
        n_max,
        graphs_checked: 0,
        sets_checked: 0,
        agreements: 0,
        counterexamples: Vec::new(),
    };
    for t in tallies {
        let t = t?;
        report.graphs_checked += 1;
        report.sets_checked += t.sets_checked;
        report.agreements += t.agreements;
        report.counterexamples.extend(t.counterexamples);
    }
    Ok(report)
}

/// Every proposition over all labelled graphs up to `n_max`, with and
/// without isolated vertices.
pub fn errata_scan(n_max: usize) -> Result<Vec<PropositionReport>> {
    if n_max > ERRATA_LIMIT {
        return Err(Error::FamilyTooLarge {
            n_max,
            limit: ERRATA_LIMIT,
        });
    }
    let mut out = Vec::new();
    for family in [GraphFamily::AllLabeledMinDegreeOne, GraphFamily::AllLabeled] {
        for prop in PropositionId::all() {
            out.push(verify_characterization(prop, family, n_max)?);
        }
    }
    Ok(out)
}
