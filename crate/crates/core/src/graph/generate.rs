use std::fmt;
use std::str::FromStr;

use super::Graph;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    /// `P_n`, params `[n]`.
    Path,
    /// `C_n`, params `[n]`, `n >= 3`.
    Cycle,
    /// `K_n`, params `[n]`.
    Complete,
    /// `K_{a,b}`, params `[a, b]`; parts are `0..a` and `a..a+b`.
    CompleteBipartite,
    /// `K_{1,k}`, params `[k]`; the centre is vertex 0.
    Star,
    /// `G(n, p)` with `p = num/den`, params `[n, num, den]`, seed required.
    RandomGnp,
}

impl Family {
    pub const ALL: [Family; 6] = [
        Family::Path,
        Family::Cycle,
        Family::Complete,
        Family::CompleteBipartite,
        Family::Star,
        Family::RandomGnp,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Path => "path",
            Family::Cycle => "cycle",
            Family::Complete => "complete",
            Family::CompleteBipartite => "complete-bipartite",
            Family::Star => "star",
            Family::RandomGnp => "random-gnp",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Family::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| Error::UnknownFamily(s.to_string()))
    }
}

/// 64-bit linear congruential generator, `x' = a·x + c mod 2^64`, with
/// Knuth's MMIX constants `a = 6364136223846793005`,
/// `c = 1442695040888963407`. The state is the seed itself; each draw
/// advances the state once and returns the upper 32 bits.
#[derive(Clone, Debug)]
pub struct Lcg64 {
    state: u64,
}

impl Lcg64 {
    pub const MULTIPLIER: u64 = 6364136223846793005;
    pub const INCREMENT: u64 = 1442695040888963407;

    pub fn new(seed: u64) -> Self {
        Lcg64 { state: seed }
    }

    pub fn next_u32(&mut self) -> u32 {
        self.state = self
            .state
            .wrapping_mul(Self::MULTIPLIER)
            .wrapping_add(Self::INCREMENT);
        (self.state >> 32) as u32
    }

    /// Bernoulli trial with probability `num/den`: succeeds iff
    /// `next_u32() mod den < num`.
    pub fn chance(&mut self, num: u64, den: u64) -> bool {
        (self.next_u32() as u64) % den < num
    }

    /// Uniform-ish integer in `0..bound` by reduction modulo `bound`.
    pub fn below(&mut self, bound: u64) -> u64 {
        self.next_u32() as u64 % bound
    }
}

fn count(params: &[i64], idx: usize, family: Family) -> Result<usize> {
    let v = *params
        .get(idx)
        .ok_or_else(|| Error::BadParams(format!("{family} expects more parameters")))?;
    usize::try_from(v).map_err(|_| Error::BadParams(format!("{family}: negative parameter {v}")))
}

fn arity(params: &[i64], want: usize, family: Family) -> Result<()> {
    if params.len() != want {
        return Err(Error::BadParams(format!(
            "{family} expects {want} parameter(s), got {}",
            params.len()
        )));
    }
    Ok(())
}

/// Builds a member of `family`. For `random-gnp`, the pairs `(u, v)`, `u < v`,
/// are visited in lexicographic order and each is kept with one
/// [`Lcg64::chance`] draw.
pub fn generate(family: Family, params: &[i64], seed: Option<u64>) -> Result<Graph> {
    match family {
        Family::Path => {
            arity(params, 1, family)?;
            let n = count(params, 0, family)?;
            Graph::from_edges(n, (1..n).map(|v| (v - 1, v)))
        }
        Family::Cycle => {
            arity(params, 1, family)?;
            let n = count(params, 0, family)?;
            if n < 3 {
                return Err(Error::BadParams(format!("cycle needs n >= 3, got {n}")));
            }
            Graph::from_edges(n, (0..n).map(|v| (v, (v + 1) % n)))
        }
        Family::Complete => {
            arity(params, 1, family)?;
            let n = count(params, 0, family)?;
            Graph::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
        }
        Family::CompleteBipartite => {
            arity(params, 2, family)?;
            let a = count(params, 0, family)?;
            let b = count(params, 1, family)?;
            Graph::from_edges(a + b, (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v))))
        }
        Family::Star => {
            arity(params, 1, family)?;
            let k = count(params, 0, family)?;
            Graph::from_edges(k + 1, (1..=k).map(|v| (0, v)))
        }
        Family::RandomGnp => {
            arity(params, 3, family)?;
            let n = count(params, 0, family)?;
            let num = count(params, 1, family)? as u64;
            let den = count(params, 2, family)? as u64;
            if den == 0 || num > den {
                return Err(Error::BadParams(format!(
                    "probability {num}/{den} not in [0, 1]"
                )));
            }
            let seed = seed.ok_or_else(|| Error::BadParams("random-gnp requires a seed".into()))?;
            let mut rng = Lcg64::new(seed);
            let mut edges = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    if rng.chance(num, den) {
                        edges.push((u, v));
                    }
                }
            }
            Graph::from_edges(n, edges)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_families() {
        let c5 = generate(Family::Cycle, &[5], None).unwrap();
        assert!((0..5).all(|v| c5.degree(v) == 2));

        let k4 = generate(Family::Complete, &[4], None).unwrap();
        assert_eq!(k4.edge_count(), 6);

        let star = generate(Family::Star, &[3], None).unwrap();
        assert_eq!(star.n(), 4);
        assert_eq!(star.degree(0), 3);

        let k23 = generate(Family::CompleteBipartite, &[2, 3], None).unwrap();
        assert_eq!(k23.edge_count(), 6);
        assert!(!k23.has_edge(0, 1));
    }

    #[test]
    fn bad_params() {
        assert!(matches!(
            generate(Family::Cycle, &[2], None),
            Err(Error::BadParams(_))
        ));
        assert!(matches!(
            generate(Family::Path, &[-1], None),
            Err(Error::BadParams(_))
        ));
        assert!(matches!(
            generate(Family::Path, &[1, 2], None),
            Err(Error::BadParams(_))
        ));
        assert!(matches!(
            generate(Family::RandomGnp, &[5, 1, 2], None),
            Err(Error::BadParams(_))
        ));
        assert!(matches!(
            generate(Family::RandomGnp, &[5, 3, 2], Some(1)),
            Err(Error::BadParams(_))
        ));
        assert_eq!(
            "wheel".parse::<Family>(),
            Err(Error::UnknownFamily("wheel".into()))
        );
    }

    #[test]
    fn lcg_sequence_is_fixed() {
        let mut rng = Lcg64::new(0);
        // state_1 = c, state_2 = a*c + c (mod 2^64)
        assert_eq!(rng.next_u32(), (Lcg64::INCREMENT >> 32) as u32);
        let s2 = Lcg64::INCREMENT
            .wrapping_mul(Lcg64::MULTIPLIER)
            .wrapping_add(Lcg64::INCREMENT);
        assert_eq!(rng.next_u32(), (s2 >> 32) as u32);
    }

    #[test]
    fn gnp_is_deterministic() {
        let a = generate(Family::RandomGnp, &[12, 3, 10], Some(7)).unwrap();
        let b = generate(Family::RandomGnp, &[12, 3, 10], Some(7)).unwrap();
        assert_eq!(a, b);
        let c = generate(Family::RandomGnp, &[12, 3, 10], Some(8)).unwrap();
        assert_ne!(a, c);
        let full = generate(Family::RandomGnp, &[6, 1, 1], Some(3)).unwrap();
        assert_eq!(full.edge_count(), 15);
        let none = generate(Family::RandomGnp, &[6, 0, 1], Some(3)).unwrap();
        assert_eq!(none.edge_count(), 0);
    }
}
