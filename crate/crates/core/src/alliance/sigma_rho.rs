//! `[σ,ρ]`-sets and their translation into alliances on regular graphs.

use std::collections::BTreeSet;

use super::AllianceSpec;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::intset::IntSet;

/// A `[σ,ρ]` pair: in-set vertices need `δ_S(v) ∈ σ`, every other vertex
/// needs `δ_S(v) ∈ ρ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SigmaRho {
    pub sigma: BTreeSet<u32>,
    pub rho: BTreeSet<u32>,
}

impl SigmaRho {
    pub fn new<A, B>(sigma: A, rho: B) -> Self
    where
        A: IntoIterator<Item = u32>,
        B: IntoIterator<Item = u32>,
    {
        SigmaRho {
            sigma: sigma.into_iter().collect(),
            rho: rho.into_iter().collect(),
        }
    }

    /// Alliance spec equivalent to this `[σ,ρ]` pair on `r`-regular graphs.
    ///
    /// The translated `O` only constrains `N(S) \ S`, while `ρ` constrains
    /// every vertex outside `S`. A vertex outside `N[S]` has `δ_S = 0`, so the
    /// spec is made global exactly when `0 ∉ ρ`.
    pub fn alliance_spec(&self, r: u32) -> Result<AllianceSpec> {
        let (d, o) = sigma_rho_translate(self, r)?;
        let mut spec = AllianceSpec::new(d, o);
        spec.global = !self.rho.contains(&0);
        Ok(spec)
    }
}

/// `D = {2s - r : s ∈ σ}`, `O = {2s - r : s ∈ ρ}`.
pub fn sigma_rho_translate(sr: &SigmaRho, r: u32) -> Result<(IntSet, IntSet)> {
    let map = |set: &BTreeSet<u32>| -> Result<IntSet> {
        if let Some(&member) = set.iter().find(|&&s| s > r) {
            return Err(Error::SigmaRhoOutOfRange { member, degree: r });
        }
        Ok(IntSet::finite(set.iter().map(|&s| 2 * s as i64 - r as i64)))
    };
    Ok((map(&sr.sigma)?, map(&sr.rho)?))
}

/// Direct `[σ,ρ]`-set membership; `ρ` is checked at every vertex outside `S`.
pub fn check_sigma_rho(g: &Graph, s: &VertexSet, sr: &SigmaRho) -> Result<bool> {
    g.check_set(s)?;
    Ok((0..g.n()).all(|v| {
        let inside = g.degree_in(s, v) as u32;
        if s.contains(v) {
            sr.sigma.contains(&inside)
        } else {
            sr.rho.contains(&inside)
        }
    }))
}
