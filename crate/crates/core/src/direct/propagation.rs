//! Synchronous majority and threshold diffusion.

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// Activation rule for one majority round.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum MajorityRule {
    /// `|N(v) ∩ P| >= |N(v)|/2`. Isolated vertices activate immediately.
    #[default]
    AtLeastHalf,
    /// `|N(v) ∩ P| > |N(v)|/2`.
    MoreThanHalf,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Rounds {
    Bounded(usize),
    /// Until nothing changes; at most `n` productive rounds.
    Unbounded,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Propagation {
    pub active: VertexSet,
    /// Rounds that activated at least one vertex.
    pub rounds_used: usize,
}

/// Per-vertex activation thresholds, `1 <= t(v) <= δ(v)`. Isolated vertices
/// carry no threshold and are active only when seeded.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThresholdMap {
    thresholds: Vec<Option<usize>>,
}

impl ThresholdMap {
    pub fn new(g: &Graph, thresholds: Vec<Option<usize>>) -> Result<Self> {
        if thresholds.len() != g.n() {
            return Err(Error::BadThreshold(format!(
                "{} thresholds for {} vertices",
                thresholds.len(),
                g.n()
            )));
        }
        for (v, t) in thresholds.iter().enumerate() {
            match (*t, g.degree(v)) {
                (None, 0) => {}
                (None, _) => {
                    return Err(Error::BadThreshold(format!("vertex {v} has no threshold")))
                }
                (Some(t), 0) => {
                    return Err(Error::BadThreshold(format!(
                        "isolated vertex {v} given threshold {t}"
                    )))
                }
                (Some(t), d) if t == 0 || t > d => {
                    return Err(Error::BadThreshold(format!(
                        "threshold {t} at vertex {v} outside 1..={d}"
                    )))
                }
                _ => {}
            }
        }
        Ok(ThresholdMap { thresholds })
    }

    /// `t(v) = ⌈δ(v)/2⌉`.
    pub fn majority(g: &Graph) -> Self {
        let thresholds = (0..g.n())
            .map(|v| (g.degree(v) > 0).then(|| g.degree(v).div_ceil(2)))
            .collect();
        ThresholdMap { thresholds }
    }

    /// Parses `v:t` pairs separated by commas. Vertices not listed keep the
    /// majority threshold `⌈δ(v)/2⌉`.
    pub fn parse(g: &Graph, text: &str) -> Result<Self> {
        let mut thresholds = Self::majority(g).thresholds;
        for pair in text.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            let bad = || Error::BadThreshold(format!("expected v:t, got {pair:?}"));
            let (v, t) = pair.split_once(':').ok_or_else(bad)?;
            let v: usize = v.trim().parse().map_err(|_| bad())?;
            let t: usize = t.trim().parse().map_err(|_| bad())?;
            if v >= g.n() {
                return Err(Error::VertexOutOfRange {
                    vertex: v,
                    n: g.n(),
                });
            }
            thresholds[v] = Some(t);
        }
        Self::new(g, thresholds)
    }

    pub fn get(&self, v: usize) -> Option<usize> {
        self.thresholds[v]
    }
}

/// One round: `MAJ(P) = {v : |N(v) ∩ P| >= |N(v)|/2} ∪ P`.
pub fn maj_step(g: &Graph, p: &VertexSet) -> VertexSet {
    maj_step_with(g, p, MajorityRule::AtLeastHalf)
}

pub fn maj_step_with(g: &Graph, p: &VertexSet, rule: MajorityRule) -> VertexSet {
    let mut next = p.clone();
    for v in 0..g.n() {
        if p.contains(v) {
            continue;
        }
        let twice_active = 2 * g.degree_in(p, v);
        let activate = match rule {
            MajorityRule::AtLeastHalf => twice_active >= g.degree(v),
            MajorityRule::MoreThanHalf => twice_active > g.degree(v),
        };
        if activate {
            next.insert(v);
        }
    }
    next
}

fn threshold_step(g: &Graph, p: &VertexSet, t: &ThresholdMap) -> VertexSet {
    let mut next = p.clone();
    for v in 0..g.n() {
        if !p.contains(v) && t.get(v).is_some_and(|t| g.degree_in(p, v) >= t) {
            next.insert(v);
        }
    }
    next
}

fn iterate<F: Fn(&VertexSet) -> VertexSet>(
    g: &Graph,
    seeds: &VertexSet,
    rounds: Rounds,
    step: F,
) -> Propagation {
    let limit = match rounds {
        Rounds::Bounded(d) => d,
        Rounds::Unbounded => g.n(),
    };
    let mut active = seeds.clone();
    let mut rounds_used = 0;
    while rounds_used < limit {
        let next = step(&active);
        if next == active {
            break;
        }
        active = next;
        rounds_used += 1;
    }
    Propagation {
        active,
        rounds_used,
    }
}

/// `MAJ^d(seeds)` without thresholds, otherwise threshold diffusion for up to
/// `d` rounds.
pub fn propagate(
    g: &Graph,
    seeds: &VertexSet,
    rounds: Rounds,
    thresholds: Option<&ThresholdMap>,
) -> Result<Propagation> {
    propagate_with_rule(g, seeds, rounds, thresholds, MajorityRule::AtLeastHalf)
}

/// As [`propagate`], with an explicit rule for the majority case.
pub fn propagate_with_rule(
    g: &Graph,
    seeds: &VertexSet,
    rounds: Rounds,
    thresholds: Option<&ThresholdMap>,
    rule: MajorityRule,
) -> Result<Propagation> {
    g.check_set(seeds)?;
    Ok(match thresholds {
        Some(t) => {
            if t.thresholds.len() != g.n() {
                return Err(Error::BadThreshold(
                    "threshold map built for another graph".into(),
                ));
            }
            iterate(g, seeds, rounds, |p| threshold_step(g, p, t))
        }
        None => iterate(g, seeds, rounds, |p| maj_step_with(g, p, rule)),
    })
}

/// `MAJ^d(P) = V`.
pub fn is_dmaj_set(g: &Graph, p: &VertexSet, d: usize) -> Result<bool> {
    Ok(propagate(g, p, Rounds::Bounded(d), None)?.active.is_full())
}
