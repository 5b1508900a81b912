use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// `f: V -> {-1, 0, +1}`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SignedFunction {
    values: Vec<i8>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SignedVariant {
    /// `f(N[v]) >= k`.
    Closed,
    /// `f(N(v)) >= k`.
    Total,
    /// `f(N[v]) >= 1`, zeros allowed.
    Minus,
    /// `f(N[v]) = 1`.
    Efficient,
}

impl SignedFunction {
    pub fn new(values: Vec<i8>) -> Result<Self> {
        if let Some(v) = values.iter().position(|x| !(-1..=1).contains(x)) {
            return Err(Error::SignedFunctionParse(format!(
                "value {} at vertex {v} is not in {{-1,0,1}}",
                values[v]
            )));
        }
        Ok(SignedFunction { values })
    }

    /// `+1` on `s`, `-1` elsewhere.
    pub fn from_positive_set(s: &VertexSet) -> Self {
        let values = (0..s.universe())
            .map(|v| if s.contains(v) { 1 } else { -1 })
            .collect();
        SignedFunction { values }
    }

    /// `+1` on `positive`, `0` on `neutral`, `-1` elsewhere. `neutral` wins on overlap.
    pub fn from_partition(positive: &VertexSet, neutral: &VertexSet) -> Self {
        let values = (0..positive.universe())
            .map(|v| match (neutral.contains(v), positive.contains(v)) {
                (true, _) => 0,
                (false, true) => 1,
                (false, false) => -1,
            })
            .collect();
        SignedFunction { values }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn value(&self, v: usize) -> i8 {
        self.values[v]
    }

    pub fn values(&self) -> &[i8] {
        &self.values
    }

    /// `f(S) = Σ_{v ∈ S} f(v)`.
    pub fn weight_of(&self, s: &VertexSet) -> i64 {
        s.iter().map(|v| self.values[v] as i64).sum()
    }

    pub fn weight(&self) -> i64 {
        self.values.iter().map(|&x| x as i64).sum()
    }

    fn open_sum(&self, g: &Graph, v: usize) -> i64 {
        g.neighbors(v).iter().map(|&u| self.values[u] as i64).sum()
    }
}

impl FromStr for SignedFunction {
    type Err = Error;

    /// Comma-separated values indexed by vertex, e.g. `+1,-1,0`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(SignedFunction { values: Vec::new() });
        }
        let values = s
            .split(',')
            .map(|tok| match tok.trim() {
                "+1" | "1" => Ok(1),
                "0" | "+0" | "-0" => Ok(0),
                "-1" => Ok(-1),
                other => Err(Error::SignedFunctionParse(format!("bad value {other:?}"))),
            })
            .collect::<Result<Vec<i8>>>()?;
        Ok(SignedFunction { values })
    }
}

impl fmt::Display for SignedFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, x) in self.values.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            f.write_str(match x {
                1 => "+1",
                0 => "0",
                _ => "-1",
            })?;
        }
        Ok(())
    }
}

impl fmt::Debug for SignedFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SignedFunction({self})")
    }
}

/// Checks the signed-domination condition of `variant` at every vertex.
/// `k` is only read by the closed and total variants.
pub fn check_signed(g: &Graph, f: &SignedFunction, k: i64, variant: SignedVariant) -> Result<bool> {
    if f.len() != g.n() {
        return Err(Error::FunctionLength {
            values: f.len(),
            n: g.n(),
        });
    }
    if variant != SignedVariant::Minus {
        if let Some(v) = f.values.iter().position(|&x| x == 0) {
            return Err(Error::ZeroValueOutsideMinusMode(v));
        }
    }
    Ok((0..g.n()).all(|v| {
        let open = f.open_sum(g, v);
        let closed = open + f.values[v] as i64;
        match variant {
            SignedVariant::Closed => closed >= k,
            SignedVariant::Total => open >= k,
            SignedVariant::Minus => closed >= 1,
            SignedVariant::Efficient => closed == 1,
        }
    }))
}

/// `(f⁻¹(+1), f⁻¹(0), f⁻¹(-1))`.
pub fn partition_of(g: &Graph, f: &SignedFunction) -> Result<(VertexSet, VertexSet, VertexSet)> {
    if f.len() != g.n() {
        return Err(Error::FunctionLength {
            values: f.len(),
            n: g.n(),
        });
    }
    let mut parts = [
        VertexSet::empty(g.n()),
        VertexSet::empty(g.n()),
        VertexSet::empty(g.n()),
    ];
    for (v, &x) in f.values.iter().enumerate() {
        parts[(1 - x) as usize].insert(v);
    }
    let [plus, zero, minus] = parts;
    Ok((plus, zero, minus))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate, Family};

    fn f(s: &str) -> SignedFunction {
        s.parse().unwrap()
    }

    #[test]
    fn closed_examples() {
        let c3 = generate(Family::Cycle, &[3], None).unwrap();
        assert!(check_signed(&c3, &f("+1,+1,+1"), 1, SignedVariant::Closed).unwrap());
        assert!(check_signed(&c3, &f("+1,+1,+1"), 3, SignedVariant::Closed).unwrap());
        assert!(!check_signed(&c3, &f("+1,+1,+1"), 4, SignedVariant::Closed).unwrap());
        let p3 = generate(Family::Path, &[3], None).unwrap();
        assert!(!check_signed(&p3, &f("-1,+1,-1"), 1, SignedVariant::Closed).unwrap());
    }

    #[test]
    fn minus_example() {
        let p3 = generate(Family::Path, &[3], None).unwrap();
        assert!(check_signed(&p3, &f("0,+1,0"), 0, SignedVariant::Minus).unwrap());
        assert_eq!(
            check_signed(&p3, &f("0,+1,0"), 1, SignedVariant::Closed),
            Err(Error::ZeroValueOutsideMinusMode(0))
        );
    }

    #[test]
    fn efficient_and_total() {
        let k1 = Graph::empty(1);
        assert!(check_signed(&k1, &f("+1"), 0, SignedVariant::Efficient).unwrap());
        // Isolated vertex: the open sum is empty, hence 0.
        assert!(!check_signed(&k1, &f("+1"), 1, SignedVariant::Total).unwrap());
        let c4 = generate(Family::Cycle, &[4], None).unwrap();
        assert!(check_signed(&c4, &f("+1,+1,+1,+1"), 2, SignedVariant::Total).unwrap());
        assert!(!check_signed(&c4, &f("+1,+1,+1,-1"), 1, SignedVariant::Total).unwrap());
    }

    #[test]
    fn length_mismatch() {
        let c3 = generate(Family::Cycle, &[3], None).unwrap();
        assert_eq!(
            check_signed(&c3, &f("+1"), 1, SignedVariant::Closed),
            Err(Error::FunctionLength { values: 1, n: 3 })
        );
    }

    #[test]
    fn partitions() {
        let p3 = generate(Family::Path, &[3], None).unwrap();
        let (s, n, m) = partition_of(&p3, &f("0,+1,0")).unwrap();
        assert_eq!(
            (s.to_vec(), n.to_vec(), m.to_vec()),
            (vec![1], vec![0, 2], vec![])
        );
        let (s, n, m) = partition_of(&p3, &f("+1,+1,+1")).unwrap();
        assert!(s.is_full() && n.is_empty() && m.is_empty());
        let (s, n, m) = partition_of(&p3, &f("-1,+1,-1")).unwrap();
        assert_eq!(
            (s.to_vec(), n.to_vec(), m.to_vec()),
            (vec![1], vec![], vec![0, 2])
        );
    }

    #[test]
    fn text_round_trip() {
        assert_eq!(f("+1, -1,0").to_string(), "+1,-1,0");
        assert!("2".parse::<SignedFunction>().is_err());
        assert!(SignedFunction::new(vec![2]).is_err());
    }

    #[test]
    fn weights() {
        let g = f("+1,-1,0,+1");
        assert_eq!(g.weight(), 1);
        assert_eq!(
            g.weight_of(&VertexSet::from_vertices(4, [0, 1]).unwrap()),
            0
        );
    }
}
