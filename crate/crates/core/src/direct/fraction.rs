//! Fraction-of-neighbourhood conditions: monopolies, α-domination,
//! α-independence, q-domination, positive influence and robust sets.
//! All comparisons are cross-multiplied integers.

use num_rational::Ratio;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

pub type Rational = Ratio<i64>;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MonopolyScope {
    /// Condition at every `v ∉ X`.
    Partial,
    /// Condition at every vertex.
    Full,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AlphaMode {
    /// `|N(v) ∩ X| >= α|N(v)|` (or `>` when strict) for `v ∉ X`.
    Dominating,
    /// `|N(v) ∩ X| <= α|N(v)|` (or `<` when strict) for `v ∈ X`.
    Independent,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ThresholdMode {
    /// Every vertex has at least `⌈δ(v)/2⌉` neighbours in the set.
    PositiveInfluence,
    /// Every vertex has fewer than `⌈δ(v)/2⌉` neighbours in the set.
    Robust,
}

/// `|N[v] ∩ X| >= |N[v]|/2` in the `r`-th power of `g`.
pub fn check_monopoly(g: &Graph, x: &VertexSet, scope: MonopolyScope, r: usize) -> Result<bool> {
    if r == 0 {
        return Err(Error::BadParams("monopoly radius must be >= 1".into()));
    }
    g.check_set(x)?;
    let powered;
    let h = if r == 1 {
        g
    } else {
        powered = g.power(r);
        &powered
    };
    Ok((0..h.n()).all(|v| {
        let member = x.contains(v);
        if scope == MonopolyScope::Partial && member {
            return true;
        }
        let closed_in = h.degree_in(x, v) + member as usize;
        let closed = h.degree(v) + 1;
        2 * closed_in >= closed
    }))
}

/// α-domination / α-independence with optional strict inequality and the
/// "total" variant that quantifies over every vertex.
pub fn check_alpha(
    g: &Graph,
    x: &VertexSet,
    alpha: Rational,
    mode: AlphaMode,
    strict: bool,
    total: bool,
) -> Result<bool> {
    if *alpha.numer() <= 0 || alpha > Rational::from_integer(1) {
        return Err(Error::BadParams(format!(
            "alpha must lie in (0, 1], got {alpha}"
        )));
    }
    g.check_set(x)?;
    let (num, den) = (*alpha.numer(), *alpha.denom());
    Ok((0..g.n()).all(|v| {
        let member = x.contains(v);
        let quantified = total
            || match mode {
                AlphaMode::Dominating => !member,
                AlphaMode::Independent => member,
            };
        if !quantified {
            return true;
        }
        let lhs = g.degree_in(x, v) as i64 * den;
        let rhs = num * g.degree(v) as i64;
        match (mode, strict) {
            (AlphaMode::Dominating, false) => lhs >= rhs,
            (AlphaMode::Dominating, true) => lhs > rhs,
            (AlphaMode::Independent, false) => lhs <= rhs,
            (AlphaMode::Independent, true) => lhs < rhs,
        }
    }))
}

pub fn check_threshold_set(g: &Graph, x: &VertexSet, mode: ThresholdMode) -> Result<bool> {
    g.check_set(x)?;
    Ok((0..g.n()).all(|v| {
        let inside = g.degree_in(x, v);
        let need = g.degree(v).div_ceil(2);
        match mode {
            ThresholdMode::PositiveInfluence => inside >= need,
            ThresholdMode::Robust => inside < need,
        }
    }))
}
