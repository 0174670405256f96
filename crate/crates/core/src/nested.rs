//! Pairwise exclusion conditions ("bad pairs") on multisets of partitions.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::multiset::PartitionMultiset;
use crate::partition::Partition;

/// The three bad-pair conditions for partitions with at most two parts.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(into = "u8")]
pub enum BadPairCondition {
    /// Two two-part partitions with `l1 > m1 >= l2 > m2`.
    Interleaved = 1,
    /// A strict two-part `l` and a one-part `m` with `l1 >= m1 >= l2`.
    RowInsideGap = 2,
    /// Two one-part partitions.
    TwoRows = 3,
}

impl From<BadPairCondition> for u8 {
    fn from(c: BadPairCondition) -> u8 {
        c as u8
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    /// Indices into the multiset's canonical entry list, `i < j`.
    pub entries: (usize, usize),
    pub pair: (Partition, Partition),
    pub condition: BadPairCondition,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BadPairReport {
    pub is_nested: bool,
    pub violations: Vec<Violation>,
}

fn two_part_bad(lam: &Partition, mu: &Partition) -> Option<BadPairCondition> {
    let (l, m) = (lam.parts(), mu.parts());
    match (l.len(), m.len()) {
        (2, 2) => {
            let interleaved = |a: &[u32], b: &[u32]| a[0] > b[0] && b[0] >= a[1] && a[1] > b[1];
            (interleaved(l, m) || interleaved(m, l)).then_some(BadPairCondition::Interleaved)
        }
        (2, 1) | (1, 2) => {
            let (two, one) = if l.len() == 2 { (l, m) } else { (m, l) };
            (two[0] > two[1] && two[0] >= one[0] && one[0] >= two[1])
                .then_some(BadPairCondition::RowInsideGap)
        }
        (1, 1) => Some(BadPairCondition::TwoRows),
        _ => None,
    }
}

/// Checks every unordered pair of entries against the three conditions.
pub fn nested_report(a: &PartitionMultiset) -> Result<BadPairReport> {
    if let Some(wide) = a.entries().iter().find(|e| e.len() > 2) {
        return Err(Error::TooManyParts {
            partition: wide.to_string(),
            max: 2,
        });
    }
    let entries = a.entries();
    let mut violations = Vec::new();
    for i in 0..entries.len() {
        for j in i + 1..entries.len() {
            if let Some(condition) = two_part_bad(&entries[i], &entries[j]) {
                violations.push(Violation {
                    entries: (i, j),
                    pair: (entries[i].clone(), entries[j].clone()),
                    condition,
                });
            }
        }
    }
    Ok(BadPairReport {
        is_nested: violations.is_empty(),
        violations,
    })
}

pub fn is_nested(a: &PartitionMultiset) -> Result<bool> {
    nested_report(a).map(|r| r.is_nested)
}

/// A known bad pair for partitions with at most three parts.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum KnownBadPair {
    /// One of the two-part conditions.
    TwoPart(BadPairCondition),
    /// One of the five additional three-part conditions, numbered 1..=5.
    ThreePart(u8),
}

fn three_part_case(l: &[u32], m: &[u32]) -> Option<u8> {
    match (l.len(), m.len()) {
        (2, 1) => Some(1),
        (3, 1) if l[2] == 1 && l[0] > m[0] && m[0] >= l[1] => Some(2),
        (3, 2) if l[0] > m[0] && m[0] >= l[1] && l[1] > m[1] && m[1] >= l[2] => Some(3),
        (3, 3) if l[0] > m[0] && m[0] >= l[1] && l[1] > m[1] && m[1] >= l[2] && l[2] > m[2] => {
            Some(4)
        }
        (2, 2) if l[0] >= m[0] && m[0] >= m[1] && m[1] >= l[1] => Some(5),
        _ => None,
    }
}

/// First matching listed bad-pair condition for `k = 3`, or `None`.
///
/// The list is sound but not complete: `None` does not mean the pair is good.
pub fn k3_known_bad_pair(lam: &Partition, mu: &Partition) -> Result<Option<KnownBadPair>> {
    for p in [lam, mu] {
        if p.len() > 3 {
            return Err(Error::TooManyParts {
                partition: p.to_string(),
                max: 3,
            });
        }
    }
    let (l, m) = (lam.parts(), mu.parts());
    if let Some(case) = three_part_case(l, m).or_else(|| three_part_case(m, l)) {
        return Ok(Some(KnownBadPair::ThreePart(case)));
    }
    Ok(two_part_bad(lam, mu).map(KnownBadPair::TwoPart))
}

fn sorted_pairing(a: &PartitionMultiset) -> Result<Vec<u32>> {
    let phi = a.phi();
    if phi.len() % 2 == 1 {
        return Err(Error::OddPartCount(phi.to_string()));
    }
    if let Some(bad) = a.entries().iter().find(|e| e.len() != 2) {
        return Err(Error::NotTwoPart(bad.to_string()));
    }
    Ok(phi.parts().to_vec())
}

/// `A = {(l1,l2), (l3,l4), ...}` where `l = phi(A)`.
pub fn completely_separated(a: &PartitionMultiset) -> Result<bool> {
    let parts = sorted_pairing(a)?;
    let pairing = parts
        .chunks(2)
        .map(|c| Partition::from_unsorted(c.to_vec()))
        .collect::<PartitionMultiset>();
    Ok(&pairing == a)
}

/// `A = {(l1,l_2n), (l2,l_2n-1), ...}` where `l = phi(A)`.
pub fn completely_nested(a: &PartitionMultiset) -> Result<bool> {
    let parts = sorted_pairing(a)?;
    let n = parts.len();
    let pairing = (0..n / 2)
        .map(|i| Partition::from_unsorted(vec![parts[i], parts[n - 1 - i]]))
        .collect::<PartitionMultiset>();
    Ok(&pairing == a)
}
