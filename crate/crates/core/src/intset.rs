//! Symbolic integer sets used as the `D` and `O` conditions of an alliance.
//!
//! Textual grammar: `all`, `>=k`, `<=k`, `<k` (normalised to `<=k-1`) and
//! `{a,b,...}`.

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum IntSet {
    All,
    AtLeast(i64),
    AtMost(i64),
    /// Sorted, duplicate-free.
    Finite(Vec<i64>),
}

impl IntSet {
    /// Finite set from arbitrary members; sorts and deduplicates.
    pub fn finite<I: IntoIterator<Item = i64>>(members: I) -> Self {
        let mut v: Vec<i64> = members.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        IntSet::Finite(v)
    }

    pub fn singleton(x: i64) -> Self {
        IntSet::Finite(vec![x])
    }

    #[inline]
    pub fn contains(&self, x: i64) -> bool {
        match self {
            IntSet::All => true,
            IntSet::AtLeast(k) => x >= *k,
            IntSet::AtMost(k) => x <= *k,
            IntSet::Finite(v) => v.binary_search(&x).is_ok(),
        }
    }

    /// `{-x : x ∈ self}`.
    pub fn negate(&self) -> Self {
        match self {
            IntSet::All => IntSet::All,
            IntSet::AtLeast(k) => IntSet::AtMost(-k),
            IntSet::AtMost(k) => IntSet::AtLeast(-k),
            IntSet::Finite(v) => IntSet::Finite(v.iter().rev().map(|x| -x).collect()),
        }
    }
}

pub fn parse_intset(spec: &str) -> Result<IntSet> {
    spec.parse()
}

fn parse_int(input: &str, tok: &str) -> Result<i64> {
    tok.trim().parse().map_err(|_| Error::IntSetParse {
        input: input.to_string(),
        reason: format!("not an integer: {tok:?}"),
    })
}

impl FromStr for IntSet {
    type Err = Error;

    fn from_str(input: &str) -> Result<Self> {
        let s = input.trim();
        if s.eq_ignore_ascii_case("all") {
            return Ok(IntSet::All);
        }
        if let Some(rest) = s.strip_prefix(">=") {
            return Ok(IntSet::AtLeast(parse_int(input, rest)?));
        }
        if let Some(rest) = s.strip_prefix("<=") {
            return Ok(IntSet::AtMost(parse_int(input, rest)?));
        }
        if let Some(rest) = s.strip_prefix('<') {
            let k = parse_int(input, rest)?;
            let k = k.checked_sub(1).ok_or_else(|| Error::IntSetParse {
                input: input.to_string(),
                reason: "bound underflows".into(),
            })?;
            return Ok(IntSet::AtMost(k));
        }
        if let Some(body) = s.strip_prefix('{').and_then(|r| r.strip_suffix('}')) {
            if body.trim().is_empty() {
                return Ok(IntSet::Finite(Vec::new()));
            }
            let members = body
                .split(',')
                .map(|t| parse_int(input, t))
                .collect::<Result<Vec<_>>>()?;
            return Ok(IntSet::finite(members));
        }
        Err(Error::IntSetParse {
            input: input.to_string(),
            reason: "expected all, >=k, <=k, <k or {a,b,...}".into(),
        })
    }
}

impl fmt::Display for IntSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IntSet::All => f.write_str("all"),
            IntSet::AtLeast(k) => write!(f, ">={k}"),
            IntSet::AtMost(k) => write!(f, "<={k}"),
            IntSet::Finite(v) => {
                f.write_str("{")?;
                for (i, x) in v.iter().enumerate() {
                    if i > 0 {
                        f.write_str(",")?;
                    }
                    write!(f, "{x}")?;
                }
                f.write_str("}")
            }
        }
    }
}

impl Serialize for IntSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}
