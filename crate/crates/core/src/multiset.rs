//! Multisets of partitions: the index set of the product generators `s_A`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::partition::{enumerate_partitions, Partition};

/// A multiset of nonempty partitions, stored sorted in descending
/// lexicographic order. Empty partitions are dropped on construction since
/// `s_() = 1` contributes nothing to a product.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PartitionMultiset {
    entries: Vec<Partition>,
    total_weight: u32,
}

impl PartitionMultiset {
    pub fn new(entries: impl IntoIterator<Item = Partition>) -> Self {
        let mut entries: Vec<Partition> = entries.into_iter().filter(|p| !p.is_empty()).collect();
        entries.sort_unstable_by(|a, b| b.cmp(a));
        let total_weight = entries.iter().map(Partition::weight).sum();
        PartitionMultiset {
            entries,
            total_weight,
        }
    }

    pub fn entries(&self) -> &[Partition] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn total_weight(&self) -> u32 {
        self.total_weight
    }

    /// Smallest `k` with every entry in `P^k`.
    pub fn max_parts(&self) -> usize {
        self.entries.iter().map(Partition::len).max().unwrap_or(0)
    }

    pub fn multiplicity(&self, p: &Partition) -> usize {
        self.entries.iter().filter(|e| *e == p).count()
    }

    pub fn contains(&self, p: &Partition) -> bool {
        self.entries.contains(p)
    }

    /// Concatenation of all parts, sorted: `phi(A)`.
    pub fn phi(&self) -> Partition {
        Partition::from_unsorted(
            self.entries
                .iter()
                .flat_map(|e| e.parts().iter().copied())
                .collect::<Vec<_>>(),
        )
    }

    pub fn with(&self, extra: Partition) -> Self {
        PartitionMultiset::new(self.entries.iter().cloned().chain(std::iter::once(extra)))
    }

    pub fn union(&self, other: &PartitionMultiset) -> Self {
        PartitionMultiset::new(self.entries.iter().chain(other.entries.iter()).cloned())
    }

    /// Removes one copy of `p`, if present.
    pub fn without(&self, p: &Partition) -> Option<Self> {
        let idx = self.entries.iter().position(|e| e == p)?;
        let mut entries = self.entries.clone();
        entries.remove(idx);
        Some(PartitionMultiset::new(entries))
    }
}

impl FromIterator<Partition> for PartitionMultiset {
    fn from_iter<I: IntoIterator<Item = Partition>>(iter: I) -> Self {
        PartitionMultiset::new(iter)
    }
}

impl fmt::Display for PartitionMultiset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, e) in self.entries.iter().enumerate() {
            if i > 0 {
                f.write_str("|")?;
            }
            write!(f, "{}", e)?;
        }
        Ok(())
    }
}

impl FromStr for PartitionMultiset {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s.trim().is_empty() {
            return Ok(PartitionMultiset::default());
        }
        s.split('|')
            .map(str::parse::<Partition>)
            .collect::<Result<Vec<_>>>()
            .map(PartitionMultiset::new)
    }
}

impl Serialize for PartitionMultiset {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for PartitionMultiset {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Every multiset of nonempty partitions with at most `k` parts each and
/// total weight `n`, in descending lexicographic order of the sorted entry
/// lists.
pub fn enumerate_generators(n: u32, k: usize) -> Vec<PartitionMultiset> {
    // Candidate entries of every weight, largest first.
    let mut atoms: Vec<Partition> = (1..=n)
        .flat_map(|w| enumerate_partitions(w, Some(k)))
        .collect();
    atoms.sort_unstable_by(|a, b| b.cmp(a));

    fn rec(
        atoms: &[Partition],
        start: usize,
        remaining: u32,
        chosen: &mut Vec<Partition>,
        out: &mut Vec<PartitionMultiset>,
    ) {
        if remaining == 0 {
            out.push(PartitionMultiset::new(chosen.iter().cloned()));
            return;
        }
        for (i, atom) in atoms.iter().enumerate().skip(start) {
            if atom.weight() <= remaining {
                chosen.push(atom.clone());
                rec(atoms, i, remaining - atom.weight(), chosen, out);
                chosen.pop();
            }
        }
    }

    let mut out = Vec::new();
    if n > 0 {
        rec(&atoms, 0, n, &mut Vec::new(), &mut out);
    }
    out
}

/// Shorthand: `mset![[3, 2], [3, 1], [4]]`.
#[macro_export]
macro_rules! mset {
    ($([$($p:expr),*]),* $(,)?) => {
        $crate::multiset::PartitionMultiset::new(vec![$($crate::part![$($p),*]),*])
    };
}
