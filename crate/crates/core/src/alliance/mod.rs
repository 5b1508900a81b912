//! The `(D,O)`-alliance predicate.
//!
//! A set `S` is a `(D,O)`-alliance when `δ_S(v) - δ_S̄(v) ∈ D` for every
//! `v ∈ S` and `δ_S(v) - δ_S̄(v) ∈ O` for every `v ∈ N(S) \ S`. Vertices
//! outside `N[S]` are unconstrained unless the spec is global, in which case
//! `S` must also dominate the graph.

mod catalog;
mod sigma_rho;

use std::fmt;

pub use catalog::{catalog_spec, Applicability, CatalogEntry, Parameter, Status};
pub use sigma_rho::{check_sigma_rho, sigma_rho_translate, SigmaRho};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::intset::IntSet;

/// Which graph a set with neutrals has to dominate.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum NeutralDomination {
    /// `S` dominates `G`.
    InGraph,
    /// `S` dominates `G - N`.
    InReducedGraph,
    /// Both of the above.
    #[default]
    Both,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AllianceSpec {
    pub d: IntSet,
    pub o: IntSet,
    pub global: bool,
    /// Neutral vertices; conditions are then evaluated in `G - N`.
    pub neutrals: Option<VertexSet>,
    pub neutral_domination: NeutralDomination,
    pub require_nonempty: bool,
}

impl AllianceSpec {
    pub fn new(d: IntSet, o: IntSet) -> Self {
        AllianceSpec {
            d,
            o,
            global: false,
            neutrals: None,
            neutral_domination: NeutralDomination::default(),
            require_nonempty: false,
        }
    }

    pub fn global(mut self) -> Self {
        self.global = true;
        self
    }

    pub fn nonempty(mut self) -> Self {
        self.require_nonempty = true;
        self
    }

    pub fn with_neutrals(mut self, neutrals: VertexSet) -> Self {
        self.neutrals = Some(neutrals);
        self
    }

    pub fn with_neutral_domination(mut self, mode: NeutralDomination) -> Self {
        self.neutral_domination = mode;
        self
    }

    /// `(-O, -D)` with the same flags: the spec a complement `S̄` is claimed to
    /// satisfy, e.g. `({r}, Z)` maps to `(Z, {-r})`. Not an equivalence in
    /// general; the harness checks where it fails.
    pub fn complement_dual(&self) -> Self {
        AllianceSpec {
            d: self.o.negate(),
            o: self.d.negate(),
            ..self.clone()
        }
    }
}

impl fmt::Display for AllianceSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})-alliance", self.d, self.o)?;
        if self.global {
            f.write_str(", global")?;
        }
        if self.require_nonempty {
            f.write_str(", nonempty")?;
        }
        if let Some(n) = &self.neutrals {
            write!(f, ", neutrals {n}")?;
        }
        Ok(())
    }
}

/// Evaluates `spec` on `s`.
pub fn check_alliance(g: &Graph, s: &VertexSet, spec: &AllianceSpec) -> Result<bool> {
    g.check_set(s)?;
    if let Some(neutrals) = &spec.neutrals {
        g.check_set(neutrals)?;
        if let Some(v) = s.iter().find(|&v| neutrals.contains(v)) {
            return Err(Error::NeutralsOverlapSet(v));
        }
        return Ok(check_with_neutrals(g, s, spec, neutrals));
    }
    Ok(check_plain(g, s, spec))
}

/// Plain check without neutral handling or validation. Callers guarantee
/// matching universes.
pub(crate) fn check_plain(g: &Graph, s: &VertexSet, spec: &AllianceSpec) -> bool {
    if spec.require_nonempty && s.is_empty() {
        return false;
    }
    for v in 0..g.n() {
        let inside = g.degree_in(s, v);
        let diff = 2 * inside as i64 - g.degree(v) as i64;
        if s.contains(v) {
            if !spec.d.contains(diff) {
                return false;
            }
        } else if inside > 0 {
            if !spec.o.contains(diff) {
                return false;
            }
        } else if spec.global {
            return false;
        }
    }
    true
}

fn check_with_neutrals(
    g: &Graph,
    s: &VertexSet,
    spec: &AllianceSpec,
    neutrals: &VertexSet,
) -> bool {
    if spec.require_nonempty && s.is_empty() {
        return false;
    }
    let (in_graph, in_reduced) = match spec.neutral_domination {
        NeutralDomination::InGraph => (true, false),
        NeutralDomination::InReducedGraph => (false, true),
        NeutralDomination::Both => (true, true),
    };
    for v in 0..g.n() {
        let inside = g.degree_in(s, v);
        if neutrals.contains(v) {
            if spec.global && in_graph && inside == 0 {
                return false;
            }
            continue;
        }
        let reduced_degree = g.degree(v) - g.degree_in(neutrals, v);
        let diff = 2 * inside as i64 - reduced_degree as i64;
        if s.contains(v) {
            if !spec.d.contains(diff) {
                return false;
            }
        } else if inside > 0 {
            if !spec.o.contains(diff) {
                return false;
            }
        } else if spec.global && (in_graph || in_reduced) {
            return false;
        }
    }
    true
}
