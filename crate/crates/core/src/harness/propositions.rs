//! Each characterisation as a pair of predicates: the direct definition and
//! its alliance reformulation, evaluated side by side on every candidate.

use std::fmt;
use std::str::FromStr;

use crate::alliance::{check_alliance, check_sigma_rho, AllianceSpec, Parameter, SigmaRho};
use crate::direct::{
    check_alpha, check_monopoly, check_signed, check_threshold_set, maj_step, AlphaMode,
    MonopolyScope, Rational, SignedFunction, SignedVariant, ThresholdMode,
};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::intset::IntSet;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PropositionId {
    /// Signed k-dominating sets are global `(≥k-1, ≥k+1)`-alliances.
    SignedDom {
        k: i64,
    },
    /// Signed total k-dominating sets are global `(≥k, ≥k)`-alliances.
    SignedTotal {
        k: i64,
    },
    /// Minus dominating sets are global `(≥0, ≥2)`-alliances with some neutral set.
    Minus,
    Efficient,
    PartialMonopoly,
    /// Monopolies with the re-derived bound `d >= -1`.
    Monopoly,
    /// Monopolies with the weaker bound `d >= -2`, which admits non-monopolies.
    MonopolyPaper,
    HalfDom,
    HalfInd,
    PositiveInfluence,
    Maj1,
    Robust,
    /// `S` global `({r}, Z)` iff `S̄` global `(Z, {-r})`, for every `r`.
    Remark,
    /// `[σ,ρ]`-sets on 2- and 3-regular graphs; the spec is global when `0 ∉ ρ`.
    SigmaRho,
    /// As [`PropositionId::SigmaRho`] with the translated spec never global.
    SigmaRhoLiteral,
}

impl PropositionId {
    pub fn all() -> Vec<PropositionId> {
        use PropositionId::*;
        let mut out: Vec<_> = (1..=3).map(|k| SignedDom { k }).collect();
        out.extend((1..=3).map(|k| SignedTotal { k }));
        out.extend([
            Minus,
            Efficient,
            PartialMonopoly,
            Monopoly,
            MonopolyPaper,
            HalfDom,
            HalfInd,
            PositiveInfluence,
            Maj1,
            Robust,
            Remark,
            SigmaRho,
            SigmaRhoLiteral,
        ]);
        out
    }

    /// False for the statements kept to document that they fail as printed.
    pub fn expected_to_hold(self) -> bool {
        !matches!(
            self,
            PropositionId::MonopolyPaper | PropositionId::Remark | PropositionId::SigmaRhoLiteral
        )
    }

    /// Catalog parameter providing the framework side, if any.
    pub fn parameter(self) -> Option<Parameter> {
        use PropositionId as P;
        Some(match self {
            P::SignedDom { k } => Parameter::SignedDominating { k },
            P::SignedTotal { k } => Parameter::SignedTotalDominating { k },
            P::Minus => Parameter::MinusDominating,
            P::Efficient => Parameter::SignedEfficient,
            P::PartialMonopoly => Parameter::PartialMonopoly,
            P::Monopoly => Parameter::Monopoly,
            P::MonopolyPaper => Parameter::MonopolyPaper,
            P::HalfDom => Parameter::HalfDominating,
            P::HalfInd => Parameter::HalfIndependentComplement,
            P::PositiveInfluence => Parameter::PositiveInfluence,
            P::Maj1 => Parameter::Maj1,
            P::Robust => Parameter::RobustMajority,
            P::Remark | P::SigmaRho | P::SigmaRhoLiteral => return None,
        })
    }

    /// The extra parameters each candidate set is checked under; `None` when
    /// the proposition does not apply to `g`.
    pub(crate) fn contexts(self, g: &Graph) -> Option<Vec<Context>> {
        match self {
            PropositionId::Remark => {
                let r_max = g.n().saturating_sub(1) as i64;
                Some((-r_max..=r_max).map(Context::Level).collect())
            }
            PropositionId::SigmaRho | PropositionId::SigmaRhoLiteral => {
                let r = g.regular_degree().filter(|r| (2..=3).contains(r))? as u32;
                let pick = |mask: u32| (0..=r).filter(move |b| mask >> b & 1 == 1);
                let mut out = Vec::new();
                for sigma in 0..1u32 << (r + 1) {
                    for rho in 0..1u32 << (r + 1) {
                        out.push(Context::SigmaRho(SigmaRho::new(pick(sigma), pick(rho))));
                    }
                }
                Some(out)
            }
            _ => Some(vec![Context::Plain]),
        }
    }

    /// `(direct, framework)` verdicts for one candidate.
    pub fn verdicts(self, g: &Graph, s: &VertexSet, context: &Context) -> Result<(bool, bool)> {
        use PropositionId as P;
        g.check_set(s)?;
        match (self, context) {
            (P::Remark, Context::Level(r)) => {
                let lhs = AllianceSpec::new(IntSet::singleton(*r), IntSet::All).global();
                Ok((
                    check_alliance(g, s, &lhs)?,
                    check_alliance(g, &s.complement(), &lhs.complement_dual())?,
                ))
            }
            (P::SigmaRho | P::SigmaRhoLiteral, Context::SigmaRho(sr)) => {
                let r = g
                    .regular_degree()
                    .ok_or_else(|| Error::BadParams("sigma-rho needs a regular graph".into()))?;
                let mut spec = sr.alliance_spec(r as u32)?;
                if self == P::SigmaRhoLiteral {
                    spec.global = false;
                }
                Ok((check_sigma_rho(g, s, sr)?, check_alliance(g, s, &spec)?))
            }
            (_, Context::Plain) => match self.parameter() {
                Some(param) => Ok((self.direct(g, s)?, param.entry()?.holds(g, s)?)),
                None => Err(Error::BadParams(format!("{self} needs a context"))),
            },
            _ => Err(Error::BadParams(format!(
                "context {context} does not apply to {self}"
            ))),
        }
    }

    fn direct(self, g: &Graph, s: &VertexSet) -> Result<bool> {
        use PropositionId as P;
        let half = Rational::new(1, 2);
        let positive = || SignedFunction::from_positive_set(s);
        match self {
            P::SignedDom { k } => check_signed(g, &positive(), k, SignedVariant::Closed),
            P::SignedTotal { k } => check_signed(g, &positive(), k, SignedVariant::Total),
            P::Efficient => check_signed(g, &positive(), 1, SignedVariant::Efficient),
            P::Minus => {
                // Some minus dominating function has positive part exactly `s`.
                let free = s.complement().to_vec();
                for bits in 0u64..1 << free.len() {
                    let zeros = VertexSet::from_vertices(
                        g.n(),
                        free.iter()
                            .enumerate()
                            .filter(|(i, _)| bits >> i & 1 == 1)
                            .map(|(_, &v)| v),
                    )?;
                    let f = SignedFunction::from_partition(s, &zeros);
                    if check_signed(g, &f, 1, SignedVariant::Minus)? {
                        return Ok(true);
                    }
                }
                Ok(false)
            }
            P::PartialMonopoly => check_monopoly(g, s, MonopolyScope::Partial, 1),
            P::Monopoly | P::MonopolyPaper => check_monopoly(g, s, MonopolyScope::Full, 1),
            P::HalfDom => check_alpha(g, s, half, AlphaMode::Dominating, false, false),
            P::HalfInd => check_alpha(g, s, half, AlphaMode::Independent, false, false),
            P::PositiveInfluence => check_threshold_set(g, s, ThresholdMode::PositiveInfluence),
            P::Robust => check_threshold_set(g, s, ThresholdMode::Robust),
            P::Maj1 => Ok(maj_step(g, s).is_full()),
            P::Remark | P::SigmaRho | P::SigmaRhoLiteral => {
                Err(Error::BadParams(format!("{self} needs a context")))
            }
        }
    }
}

impl fmt::Display for PropositionId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use PropositionId::*;
        match self {
            SignedDom { k } => write!(f, "signed-dom-k{k}"),
            SignedTotal { k } => write!(f, "signed-total-k{k}"),
            Minus => f.write_str("minus"),
            Efficient => f.write_str("efficient"),
            PartialMonopoly => f.write_str("partial-monopoly"),
            Monopoly => f.write_str("monopoly"),
            MonopolyPaper => f.write_str("monopoly-paper"),
            HalfDom => f.write_str("half-dom"),
            HalfInd => f.write_str("half-ind"),
            PositiveInfluence => f.write_str("positive-influence"),
            Maj1 => f.write_str("maj1"),
            Robust => f.write_str("robust"),
            Remark => f.write_str("remark"),
            SigmaRho => f.write_str("sigma-rho"),
            SigmaRhoLiteral => f.write_str("sigma-rho-literal"),
        }
    }
}

impl FromStr for PropositionId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parse_k = |rest: &str| rest.parse::<i64>().ok().filter(|k| *k >= 1);
        if let Some(k) = s.strip_prefix("signed-dom-k").and_then(parse_k) {
            return Ok(PropositionId::SignedDom { k });
        }
        if let Some(k) = s.strip_prefix("signed-total-k").and_then(parse_k) {
            return Ok(PropositionId::SignedTotal { k });
        }
        PropositionId::all()
            .into_iter()
            .find(|p| p.to_string() == s)
            .ok_or_else(|| Error::UnknownProposition(s.to_string()))
    }
}

/// Extra data a candidate set is checked under.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Context {
    Plain,
    /// The `r` of the remark.
    Level(i64),
    SigmaRho(SigmaRho),
}

impl fmt::Display for Context {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Context::Plain => Ok(()),
            Context::Level(r) => write!(f, "r={r}"),
            Context::SigmaRho(sr) => write!(
                f,
                "sigma={} rho={}",
                IntSet::finite(sr.sigma.iter().map(|&x| x as i64)),
                IntSet::finite(sr.rho.iter().map(|&x| x as i64))
            ),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate, Family};

    #[test]
    fn ids_round_trip() {
        for p in PropositionId::all() {
            assert_eq!(p.to_string().parse::<PropositionId>().unwrap(), p);
        }
        assert_eq!(
            "signed-dom-k7".parse::<PropositionId>().unwrap(),
            PropositionId::SignedDom { k: 7 }
        );
        assert!("signed-dom-k0".parse::<PropositionId>().is_err());
        assert_eq!(
            "gallai".parse::<PropositionId>(),
            Err(Error::UnknownProposition("gallai".into()))
        );
    }

    #[test]
    fn sigma_rho_skips_irregular_graphs() {
        let p3 = generate(Family::Path, &[3], None).unwrap();
        assert!(PropositionId::SigmaRho.contexts(&p3).is_none());
        let c4 = generate(Family::Cycle, &[4], None).unwrap();
        assert_eq!(PropositionId::SigmaRho.contexts(&c4).unwrap().len(), 64);
    }

    #[test]
    fn weak_monopoly_disagrees_on_c4() {
        let c4 = generate(Family::Cycle, &[4], None).unwrap();
        let s = VertexSet::from_vertices(4, [0, 2]).unwrap();
        assert_eq!(
            PropositionId::MonopolyPaper.verdicts(&c4, &s, &Context::Plain),
            Ok((false, true))
        );
        assert_eq!(
            PropositionId::Monopoly.verdicts(&c4, &s, &Context::Plain),
            Ok((false, false))
        );
    }

    #[test]
    fn remark_fails_for_full_set_of_k3() {
        let k3 = generate(Family::Complete, &[3], None).unwrap();
        let v = VertexSet::full(3);
        assert_eq!(
            PropositionId::Remark.verdicts(&k3, &v, &Context::Level(2)),
            Ok((true, false))
        );
    }

    #[test]
    fn minus_direct_side_finds_zeros() {
        let p3 = generate(Family::Path, &[3], None).unwrap();
        let s = VertexSet::from_vertices(3, [1]).unwrap();
        assert_eq!(
            PropositionId::Minus.verdicts(&p3, &s, &Context::Plain),
            Ok((true, true))
        );
    }
}
