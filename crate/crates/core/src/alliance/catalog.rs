//! Named parameters expressed as `(D,O)`-alliance specs.

use std::fmt;

use super::{check_alliance, AllianceSpec};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::intset::IntSet;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Parameter {
    Defensive {
        r: i64,
    },
    Offensive {
        r: i64,
    },
    Powerful {
        r: i64,
    },
    BoundaryDefensive {
        r: i64,
    },
    BoundaryOffensive {
        r: i64,
    },
    BoundaryPowerful {
        r: i64,
    },
    SignedDominating {
        k: i64,
    },
    SignedTotalDominating {
        k: i64,
    },
    MinusDominating,
    SignedEfficient,
    PartialMonopoly,
    /// Monopoly with the defensive bound re-derived from `|N[v] ∩ X| >= |N[v]|/2`.
    Monopoly,
    /// Monopoly with the weaker defensive bound `d >= -2`.
    MonopolyPaper,
    HalfDominating,
    HalfIndependentComplement,
    PositiveInfluence,
    RobustMajority,
    Maj1,
}

/// How far the characterisation behind an entry has been checked.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    /// A definition, nothing to verify.
    Definitional,
    /// Equivalence with the direct definition holds on every exhaustive family checked.
    Verified,
    /// The alliance spec disagrees with the direct definition.
    PaperErratum,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Applicability {
    AnyGraph,
    /// The equivalence fails on graphs with isolated vertices.
    MinDegreeOne,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Definitional => "definitional",
            Status::Verified => "verified",
            Status::PaperErratum => "paper-erratum",
        })
    }
}

impl fmt::Display for Applicability {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Applicability::AnyGraph => "any graph",
            Applicability::MinDegreeOne => "min degree >= 1",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CatalogEntry {
    pub parameter: Parameter,
    pub spec: AllianceSpec,
    pub status: Status,
    pub applicability: Applicability,
    /// Evaluate `spec` on `S̄` instead of `S`.
    pub on_complement: bool,
    /// `S` qualifies if some neutral set `N ⊆ V \ S` makes it an alliance.
    pub existential_neutrals: bool,
    /// What the entry characterises.
    pub note: &'static str,
}

impl Parameter {
    /// Names accepted by [`Parameter::parse`], with the parameter each takes.
    pub const NAMES: [(&'static str, Option<&'static str>); 18] = [
        ("defensive", Some("r")),
        ("offensive", Some("r")),
        ("powerful", Some("r")),
        ("boundary-defensive", Some("r")),
        ("boundary-offensive", Some("r")),
        ("boundary-powerful", Some("r")),
        ("signed-dominating", Some("k")),
        ("signed-total-dominating", Some("k")),
        ("minus-dominating", None),
        ("signed-efficient", None),
        ("partial-monopoly", None),
        ("monopoly", None),
        ("monopoly-paper", None),
        ("half-dominating", None),
        ("half-independent-complement", None),
        ("positive-influence", None),
        ("robust-majority", None),
        ("maj1", None),
    ];

    /// Looks up `name` and reads its integer parameter from `params`
    /// (`r` or `k`). Unused or missing parameters are errors.
    pub fn parse(name: &str, params: &[(String, i64)]) -> Result<Self> {
        let (_, wanted) = Self::NAMES
            .iter()
            .find(|(n, _)| *n == name)
            .ok_or_else(|| Error::UnknownParameter(name.to_string()))?;
        if let Some((key, _)) = params.iter().find(|(k, _)| Some(k.as_str()) != *wanted) {
            return Err(Error::BadParams(format!(
                "{name} does not take parameter {key:?}"
            )));
        }
        let value = match wanted {
            Some(key) => params
                .iter()
                .find(|(k, _)| k == key)
                .map(|(_, v)| *v)
                .ok_or_else(|| Error::BadParams(format!("{name} requires parameter {key}")))?,
            None => 0,
        };
        let p = match name {
            "defensive" => Parameter::Defensive { r: value },
            "offensive" => Parameter::Offensive { r: value },
            "powerful" => Parameter::Powerful { r: value },
            "boundary-defensive" => Parameter::BoundaryDefensive { r: value },
            "boundary-offensive" => Parameter::BoundaryOffensive { r: value },
            "boundary-powerful" => Parameter::BoundaryPowerful { r: value },
            "signed-dominating" => Parameter::SignedDominating { k: value },
            "signed-total-dominating" => Parameter::SignedTotalDominating { k: value },
            "minus-dominating" => Parameter::MinusDominating,
            "signed-efficient" => Parameter::SignedEfficient,
            "partial-monopoly" => Parameter::PartialMonopoly,
            "monopoly" => Parameter::Monopoly,
            "monopoly-paper" => Parameter::MonopolyPaper,
            "half-dominating" => Parameter::HalfDominating,
            "half-independent-complement" => Parameter::HalfIndependentComplement,
            "positive-influence" => Parameter::PositiveInfluence,
            "robust-majority" => Parameter::RobustMajority,
            _ => Parameter::Maj1,
        };
        Ok(p)
    }

    pub fn name(&self) -> &'static str {
        match self {
            Parameter::Defensive { .. } => "defensive",
            Parameter::Offensive { .. } => "offensive",
            Parameter::Powerful { .. } => "powerful",
            Parameter::BoundaryDefensive { .. } => "boundary-defensive",
            Parameter::BoundaryOffensive { .. } => "boundary-offensive",
            Parameter::BoundaryPowerful { .. } => "boundary-powerful",
            Parameter::SignedDominating { .. } => "signed-dominating",
            Parameter::SignedTotalDominating { .. } => "signed-total-dominating",
            Parameter::MinusDominating => "minus-dominating",
            Parameter::SignedEfficient => "signed-efficient",
            Parameter::PartialMonopoly => "partial-monopoly",
            Parameter::Monopoly => "monopoly",
            Parameter::MonopolyPaper => "monopoly-paper",
            Parameter::HalfDominating => "half-dominating",
            Parameter::HalfIndependentComplement => "half-independent-complement",
            Parameter::PositiveInfluence => "positive-influence",
            Parameter::RobustMajority => "robust-majority",
            Parameter::Maj1 => "maj1",
        }
    }

    pub fn entry(self) -> Result<CatalogEntry> {
        use IntSet::{All, AtLeast, AtMost};
        use Parameter::*;

        let entry = |spec, status, applicability, note| CatalogEntry {
            parameter: self,
            spec,
            status,
            applicability,
            on_complement: false,
            existential_neutrals: false,
            note,
        };
        let any = Applicability::AnyGraph;
        let min1 = Applicability::MinDegreeOne;
        let def = Status::Definitional;
        let ok = Status::Verified;

        let e = match self {
            Defensive { r } => entry(
                AllianceSpec::new(AtLeast(r), All).global(),
                def,
                any,
                "global defensive r-alliance",
            ),
            Offensive { r } => entry(
                AllianceSpec::new(All, AtLeast(r)).global().nonempty(),
                def,
                any,
                "global offensive r-alliance (S nonempty)",
            ),
            Powerful { r } => entry(
                AllianceSpec::new(AtLeast(r), AtLeast(r + 2)).global(),
                def,
                any,
                "global powerful r-alliance: defensive r and offensive r+2",
            ),
            BoundaryDefensive { r } => entry(
                AllianceSpec::new(IntSet::singleton(r), All),
                def,
                any,
                "boundary defensive r-alliance",
            ),
            BoundaryOffensive { r } => entry(
                AllianceSpec::new(All, IntSet::singleton(r)),
                def,
                any,
                "boundary offensive r-alliance",
            ),
            BoundaryPowerful { r } => entry(
                AllianceSpec::new(IntSet::singleton(r), IntSet::singleton(r + 2)),
                def,
                any,
                "boundary powerful r-alliance",
            ),
            SignedDominating { k } => {
                check_k(k)?;
                entry(
                    AllianceSpec::new(AtLeast(k - 1), AtLeast(k + 1)).global(),
                    ok,
                    any,
                    "signed k-dominating set: f(N[v]) >= k with f = +1 exactly on S",
                )
            }
            SignedTotalDominating { k } => {
                check_k(k)?;
                entry(
                    AllianceSpec::new(AtLeast(k), AtLeast(k)).global(),
                    ok,
                    any,
                    "signed total k-dominating set: f(N(v)) >= k with f = +1 exactly on S",
                )
            }
            MinusDominating => CatalogEntry {
                existential_neutrals: true,
                ..entry(
                    AllianceSpec::new(AtLeast(0), AtLeast(2)).global(),
                    ok,
                    any,
                    "minus dominating set: positive part of some f: V -> {-1,0,1} with f(N[v]) >= 1",
                )
            },
            SignedEfficient => entry(
                AllianceSpec::new(IntSet::singleton(0), IntSet::singleton(2)).global(),
                ok,
                any,
                "efficient signed dominating set: f(N[v]) = 1",
            ),
            PartialMonopoly => entry(
                AllianceSpec::new(All, AtLeast(1)).global(),
                ok,
                any,
                "partial monopoly: |N[v] ∩ X| >= |N[v]|/2 for v outside X",
            ),
            Monopoly => entry(
                AllianceSpec::new(AtLeast(-1), AtLeast(1)).global(),
                ok,
                any,
                "monopoly: |N[v] ∩ X| >= |N[v]|/2 for every v",
            ),
            MonopolyPaper => entry(
                AllianceSpec::new(AtLeast(-2), AtLeast(1)).global(),
                Status::PaperErratum,
                any,
                "monopoly with d >= -2; accepts C4 with X = {0,2}, which is not a monopoly",
            ),
            HalfDominating => entry(
                AllianceSpec::new(All, AtLeast(0)).global(),
                ok,
                min1,
                "1/2-dominating set: |N(v) ∩ X| >= |N(v)|/2 for v outside X",
            ),
            HalfIndependentComplement => CatalogEntry {
                on_complement: true,
                ..entry(
                    AllianceSpec::new(All, AtLeast(0)).global(),
                    ok,
                    min1,
                    "1/2-independent set X: the complement is a global offensive 0-alliance",
                )
            },
            PositiveInfluence => entry(
                AllianceSpec::new(AtLeast(0), AtLeast(0)).global(),
                ok,
                min1,
                "positive influence dominating set: every v has >= ceil(deg/2) neighbours in X",
            ),
            RobustMajority => entry(
                AllianceSpec::new(AtMost(-1), AtMost(-1)),
                ok,
                min1,
                "robust set with majority thresholds: every v has < ceil(deg/2) neighbours in R",
            ),
            Maj1 => entry(
                AllianceSpec::new(All, AtLeast(0)).global(),
                ok,
                min1,
                "one majority round from P activates every vertex",
            ),
        };
        Ok(e)
    }
}

fn check_k(k: i64) -> Result<()> {
    if k < 1 {
        return Err(Error::BadParams(format!("k must be >= 1, got {k}")));
    }
    Ok(())
}

impl fmt::Display for Parameter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Parameter::Defensive { r }
            | Parameter::Offensive { r }
            | Parameter::Powerful { r }
            | Parameter::BoundaryDefensive { r }
            | Parameter::BoundaryOffensive { r }
            | Parameter::BoundaryPowerful { r } => write!(f, "{}(r={r})", self.name()),
            Parameter::SignedDominating { k } | Parameter::SignedTotalDominating { k } => {
                write!(f, "{}(k={k})", self.name())
            }
            _ => f.write_str(self.name()),
        }
    }
}

/// Looks up a catalog entry by canonical name and parameters.
pub fn catalog_spec(name: &str, params: &[(String, i64)]) -> Result<CatalogEntry> {
    Parameter::parse(name, params)?.entry()
}

impl CatalogEntry {
    /// Whether `s` has the parameter's property, evaluated through the alliance spec.
    pub fn holds(&self, g: &Graph, s: &VertexSet) -> Result<bool> {
        g.check_set(s)?;
        let target = if self.on_complement {
            s.complement()
        } else {
            s.clone()
        };
        if !self.existential_neutrals {
            return check_alliance(g, &target, &self.spec);
        }
        // Exponential in |V \ S|.
        let free: Vec<usize> = target.complement().iter().collect();
        for bits in 0u64..1 << free.len() {
            let neutrals = VertexSet::from_vertices(
                g.n(),
                free.iter()
                    .enumerate()
                    .filter(|(i, _)| bits >> i & 1 == 1)
                    .map(|(_, &v)| v),
            )?;
            let spec = self.spec.clone().with_neutrals(neutrals);
            if check_alliance(g, &target, &spec)? {
                return Ok(true);
            }
        }
        Ok(false)
    }
}
