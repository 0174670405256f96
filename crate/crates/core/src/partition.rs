//! Integer partitions and the order-theoretic operations on them.
//!
//! A [`Partition`] is stored without trailing zeros; every constructor strips
//! them, so `(3,1,0)` and `(3,1)` are the same value. Partitions compare
//! lexicographically on their parts, which makes the descending order used by
//! [`enumerate_partitions`] a linear extension of dominance.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::One;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<u32>,
    weight: u32,
}

impl Partition {
    /// Builds a partition from weakly decreasing parts. Zeros are stripped.
    pub fn new(parts: impl Into<Vec<u32>>) -> Result<Self> {
        let mut parts = parts.into();
        parts.retain(|&p| p > 0);
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotDecreasing(parts));
        }
        let weight = parts.iter().sum();
        Ok(Partition { parts, weight })
    }

    /// Sorts arbitrary nonnegative parts into a partition.
    pub fn from_unsorted(parts: impl Into<Vec<u32>>) -> Self {
        let mut parts = parts.into();
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        let weight = parts.iter().sum();
        Partition { parts, weight }
    }

    pub fn empty() -> Self {
        Partition::default()
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn weight(&self) -> u32 {
        self.weight
    }

    /// Number of (positive) parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// The i-th part, 0-indexed, with zero padding past the end.
    pub fn part(&self, i: usize) -> u32 {
        self.parts.get(i).copied().unwrap_or(0)
    }

    pub fn multiplicity(&self, value: u32) -> usize {
        self.parts.iter().filter(|&&p| p == value).count()
    }

    pub fn has_distinct_parts(&self) -> bool {
        self.parts.windows(2).all(|w| w[0] > w[1])
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.part(0) as usize;
        let parts = (1..=width as u32)
            .map(|j| self.parts.iter().filter(|&&p| p >= j).count() as u32)
            .collect::<Vec<_>>();
        Partition {
            parts,
            weight: self.weight,
        }
    }

    fn prefix_sums(&self, len: usize) -> impl Iterator<Item = u32> + '_ {
        (0..len).scan(0u32, move |acc, i| {
            *acc += self.part(i);
            Some(*acc)
        })
    }

    /// Dominance order: every prefix sum of `self` is at least that of `other`.
    pub fn dominates(&self, other: &Partition) -> Result<bool> {
        if self.weight != other.weight {
            return Err(Error::WeightMismatch {
                lhs: self.weight,
                rhs: other.weight,
            });
        }
        let len = self.len().max(other.len());
        Ok(self
            .prefix_sums(len)
            .zip(other.prefix_sums(len))
            .all(|(a, b)| a >= b))
    }

    /// `self[rho]`: moves one cell from the last occurrence of `rho_2` to the
    /// first occurrence of `rho_1`.
    pub fn bump(&self, rho: &Partition) -> Result<Partition> {
        if rho.len() != 2 {
            return Err(Error::NotTwoPart(rho.to_string()));
        }
        let undefined = || Error::BumpUndefined {
            lambda: self.to_string(),
            rho: rho.to_string(),
        };
        let first = self
            .parts
            .iter()
            .position(|&p| p == rho.parts[0])
            .ok_or_else(undefined)?;
        let last = self
            .parts
            .iter()
            .rposition(|&p| p == rho.parts[1])
            .ok_or_else(undefined)?;
        if first >= last {
            return Err(undefined());
        }
        let mut parts = self.parts.clone();
        parts[first] += 1;
        parts[last] -= 1;
        Partition::new(parts)
    }

    /// `self[rho^k]` with `rho = (p,p)`; `None` once a stage has fewer than
    /// two parts equal to `p`.
    pub fn bump_iter(&self, p: u32, k: usize) -> Option<Partition> {
        let rho = Partition::new(vec![p, p]).ok()?;
        let mut current = self.clone();
        for _ in 0..k {
            if current.multiplicity(p) < 2 {
                return None;
            }
            current = current.bump(&rho).ok()?;
        }
        Some(current)
    }

    /// Number of standard Young tableaux of this shape, by the hook-length formula.
    pub fn syt_count(&self) -> Result<BigUint> {
        if self.is_empty() {
            return Err(Error::EmptyShape);
        }
        let conj = self.conjugate();
        let mut numerator = BigUint::one();
        for n in 2..=self.weight {
            numerator *= n;
        }
        let mut hooks = BigUint::one();
        for (i, &row) in self.parts.iter().enumerate() {
            for j in 0..row as usize {
                let hook = row as usize - j + conj.parts[j] as usize - i - 1;
                hooks *= hook;
            }
        }
        Ok(numerator / hooks)
    }
}

/// `x <=_p y`: some defined `y[(p,p)^k]` dominates `x`.
pub fn leq_p(x: &Partition, y: &Partition, p: u32) -> Result<bool> {
    if x.weight() != y.weight() {
        return Err(Error::WeightMismatch {
            lhs: x.weight(),
            rhs: y.weight(),
        });
    }
    // Each bump consumes two p's, so the iteration is Undefined past this cap.
    let cap = y.multiplicity(p) / 2 + 1;
    for k in 0..=cap {
        match y.bump_iter(p, k) {
            Some(bumped) => {
                if bumped.dominates(x)? {
                    return Ok(true);
                }
            }
            None => break,
        }
    }
    Ok(false)
}

/// All partitions of `n` with at most `max_parts` parts, descending lexicographically.
pub fn enumerate_partitions(n: u32, max_parts: Option<usize>) -> Vec<Partition> {
    fn rec(
        remaining: u32,
        max_part: u32,
        slots: usize,
        prefix: &mut Vec<u32>,
        out: &mut Vec<Partition>,
    ) {
        if remaining == 0 {
            out.push(Partition::from_unsorted(prefix.clone()));
            return;
        }
        if slots == 0 {
            return;
        }
        for part in (1..=remaining.min(max_part)).rev() {
            prefix.push(part);
            rec(remaining - part, part, slots - 1, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(
        n,
        n,
        max_parts.unwrap_or(n as usize),
        &mut Vec::new(),
        &mut out,
    );
    out
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for p in &self.parts {
            if !first {
                f.write_str(",")?;
            }
            write!(f, "{}", p)?;
            first = false;
        }
        Ok(())
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let trimmed = s.trim().trim_start_matches('(').trim_end_matches(')');
        if trimmed.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = trimmed
            .split(',')
            .map(|t| {
                t.trim().parse::<u32>().map_err(|e| Error::Parse {
                    input: s.to_string(),
                    reason: e.to_string(),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Shorthand used heavily in tests and suites. Panics on malformed input.
#[macro_export]
macro_rules! part {
    () => { $crate::partition::Partition::empty() };
    ($($p:expr),+ $(,)?) => {
        $crate::partition::Partition::new(vec![$($p as u32),+]).expect("valid partition")
    };
}
