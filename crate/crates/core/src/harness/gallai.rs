use serde::Serialize;

use crate::alliance::{check_alliance, Parameter};
use crate::direct::{check_alpha, AlphaMode, Rational};
use crate::error::Result;
use crate::graph::{Graph, VertexSet};
use crate::solvers::{solve_extremal, Objective};

/// Minimum ½-dominating plus maximum ½-independent set size against `n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct GallaiCheck {
    pub min_half_dom: usize,
    pub max_half_ind: usize,
    pub holds: bool,
    /// The graph has an isolated vertex, outside the identity's stated scope.
    pub isolated_vertex: bool,
}

/// The two extremal values under each reading of the definitions.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct GallaiReadings {
    /// Both values from the direct set definitions.
    pub set_based: (usize, usize),
    /// Both values through the global alliance reductions.
    pub framework: (usize, usize),
    /// ½-domination through its global alliance, ½-independence directly.
    pub mixed: (usize, usize),
}

fn extremal<P: Fn(&VertexSet) -> bool + Sync>(
    g: &Graph,
    pred: P,
    objective: Objective,
) -> Result<usize> {
    // The full set is always ½-dominating and the empty set ½-independent.
    Ok(solve_extremal(g, pred, objective)?.size.unwrap_or(0))
}

fn min_half_dom_framework(g: &Graph) -> Result<usize> {
    let spec = Parameter::HalfDominating.entry()?.spec;
    extremal(
        g,
        |s| check_alliance(g, s, &spec).unwrap_or(false),
        Objective::Min,
    )
}

fn max_half_ind_direct(g: &Graph) -> Result<usize> {
    let half = Rational::new(1, 2);
    extremal(
        g,
        |s| check_alpha(g, s, half, AlphaMode::Independent, false, false).unwrap_or(false),
        Objective::Max,
    )
}

/// Checks the identity with ½-domination read through its global alliance
/// and ½-independence read directly. On graphs without isolated vertices
/// every reading gives the same values.
pub fn gallai_check(g: &Graph) -> Result<GallaiCheck> {
    let min_half_dom = min_half_dom_framework(g)?;
    let max_half_ind = max_half_ind_direct(g)?;
    Ok(GallaiCheck {
        min_half_dom,
        max_half_ind,
        holds: min_half_dom + max_half_ind == g.n(),
        isolated_vertex: g.has_isolated_vertex(),
    })
}

pub fn gallai_readings(g: &Graph) -> Result<GallaiReadings> {
    let half = Rational::new(1, 2);
    let min_direct = extremal(
        g,
        |s| check_alpha(g, s, half, AlphaMode::Dominating, false, false).unwrap_or(false),
        Objective::Min,
    )?;
    let complement = Parameter::HalfIndependentComplement.entry()?;
    let max_framework = extremal(
        g,
        |s| complement.holds(g, s).unwrap_or(false),
        Objective::Max,
    )?;
    let min_framework = min_half_dom_framework(g)?;
    let max_direct = max_half_ind_direct(g)?;
    Ok(GallaiReadings {
        set_based: (min_direct, max_direct),
        framework: (min_framework, max_framework),
        mixed: (min_framework, max_direct),
    })
}
