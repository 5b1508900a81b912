use std::fmt::Write as _;
use std::sync::Arc;

use serde::{Serialize, Serializer};

use super::propositions::{Context, PropositionId};
use crate::alliance::Applicability;
use crate::error::Result;
use crate::graph::{serialize_edge_list, Graph, VertexSet};

/// One candidate on which the direct definition and the framework disagree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    #[serde(rename = "graph_edgelist", serialize_with = "edge_list")]
    pub graph: Arc<Graph>,
    pub set: VertexSet,
    pub direct: bool,
    pub framework: bool,
    #[serde(skip_serializing_if = "is_plain", serialize_with = "display")]
    pub context: Context,
}

impl Counterexample {
    /// Re-evaluates both predicates; `Ok(true)` when the recorded verdicts reproduce.
    pub fn replays(&self, prop: PropositionId) -> Result<bool> {
        let verdicts = prop.verdicts(&self.graph, &self.set, &self.context)?;
        Ok(verdicts == (self.direct, self.framework))
    }
}

fn edge_list<S: Serializer>(g: &Arc<Graph>, serializer: S) -> std::result::Result<S::Ok, S::Error> {
    serializer.serialize_str(&serialize_edge_list(g))
}

fn is_plain(c: &Context) -> bool {
    *c == Context::Plain
}

fn display<S: Serializer>(c: &Context, serializer: S) -> std::result::Result<S::Ok, S::Error> {
    serializer.collect_str(c)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PropositionReport {
    #[serde(serialize_with = "display_id")]
    pub proposition_id: PropositionId,
    pub family: String,
    pub n_max: usize,
    pub graphs_checked: u64,
    pub sets_checked: u64,
    pub agreements: u64,
    pub counterexamples: Vec<Counterexample>,
}

fn display_id<S: Serializer>(
    p: &PropositionId,
    serializer: S,
) -> std::result::Result<S::Ok, S::Error> {
    serializer.collect_str(p)
}

impl PropositionReport {
    pub fn is_clean(&self) -> bool {
        self.counterexamples.is_empty()
    }

    /// True when the proposition is stated for minimum degree >= 1 and every
    /// counterexample lies on a graph with an isolated vertex.
    pub fn only_outside_scope(&self) -> bool {
        let min_degree_one = self
            .proposition_id
            .parameter()
            .and_then(|p| p.entry().ok())
            .is_some_and(|e| e.applicability == Applicability::MinDegreeOne);
        min_degree_one
            && self
                .counterexamples
                .iter()
                .all(|c| c.graph.has_isolated_vertex())
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialises")
    }
}

/// How many counterexamples the text summary prints per report.
const SHOWN: usize = 3;

/// Human-readable summary: one line per report, then sample counterexamples
/// for every report that has any.
pub fn render_summary(reports: &[PropositionReport]) -> String {
    let mut out = String::new();
    for r in reports {
        let verdict = if r.is_clean() {
            "ok"
        } else if !r.proposition_id.expected_to_hold() {
            "erratum"
        } else if r.only_outside_scope() {
            "outside-scope"
        } else {
            "FAILED"
        };
        let _ = writeln!(
            out,
            "{:<20} {:<26} n<={} graphs={} sets={} agree={} counterexamples={} {}",
            r.proposition_id.to_string(),
            r.family,
            r.n_max,
            r.graphs_checked,
            r.sets_checked,
            r.agreements,
            r.counterexamples.len(),
            verdict
        );
    }
    for r in reports.iter().filter(|r| !r.is_clean()) {
        let _ = writeln!(out, "\n{} on {}:", r.proposition_id, r.family);
        for c in r.counterexamples.iter().take(SHOWN) {
            let edges: Vec<String> = c
                .graph
                .edges()
                .iter()
                .map(|(u, v)| format!("{u}-{v}"))
                .collect();
            let _ = write!(
                out,
                "  n={} edges=[{}] set={} direct={} framework={}",
                c.graph.n(),
                edges.join(" "),
                c.set,
                c.direct,
                c.framework
            );
            if c.context != Context::Plain {
                let _ = write!(out, " {}", c.context);
            }
            out.push('\n');
        }
        if r.counterexamples.len() > SHOWN {
            let _ = writeln!(out, "  ... {} more", r.counterexamples.len() - SHOWN);
        }
    }
    out
}
