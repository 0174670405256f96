//! The matrix of extreme-ray counts `xi_N^k`, computed or reference.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::sync::OnceLock;

use serde::Serialize;

use crate::cone::{count_extreme, ConeConfig};
use crate::error::{Error, Result};
use crate::schur::SchurEngine;

const REFERENCE_TSV: &str = include_str!("../../data/xi_table_v1.tsv");

/// `xi[(N, k)]` for `1 <= k <= N <= max_n`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct XiTable {
    entries: BTreeMap<(u32, usize), usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TableMismatch {
    pub n: u32,
    pub k: usize,
    pub expected: Option<usize>,
    pub actual: usize,
}

impl XiTable {
    pub fn get(&self, n: u32, k: usize) -> Option<usize> {
        self.entries.get(&(n, k)).copied()
    }

    pub fn insert(&mut self, n: u32, k: usize, xi: usize) {
        self.entries.insert((n, k), xi);
    }

    pub fn max_n(&self) -> u32 {
        self.entries.keys().map(|k| k.0).max().unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn row(&self, n: u32) -> Vec<usize> {
        (1..=n as usize).map_while(|k| self.get(n, k)).collect()
    }

    /// Entries of `self` that are missing from, or differ in, `reference`.
    pub fn diff(&self, reference: &XiTable) -> Vec<TableMismatch> {
        self.entries
            .iter()
            .filter_map(|(&(n, k), &actual)| {
                let expected = reference.get(n, k);
                (expected != Some(actual)).then_some(TableMismatch {
                    n,
                    k,
                    expected,
                    actual,
                })
            })
            .collect()
    }

    /// Long format, one `N k xi` line per entry.
    pub fn to_tsv(&self) -> String {
        let mut out = String::from("N\tk\txi\n");
        for (&(n, k), &xi) in &self.entries {
            let _ = writeln!(out, "{}\t{}\t{}", n, k, xi);
        }
        out
    }

    /// Rows `N`, columns `k`, aligned for reading.
    pub fn to_matrix(&self) -> String {
        let max_n = self.max_n();
        let mut out = String::from("N\\k");
        for k in 1..=max_n {
            let _ = write!(out, "{:>5}", k);
        }
        out.push('\n');
        for n in 1..=max_n {
            let _ = write!(out, "{:<3}", n);
            for xi in self.row(n) {
                let _ = write!(out, "{:>5}", xi);
            }
            out.push('\n');
        }
        out
    }

    pub fn parse_tsv(text: &str) -> Result<XiTable> {
        let mut table = XiTable::default();
        let bad = |line: &str, reason: &str| Error::Parse {
            input: line.to_string(),
            reason: reason.to_string(),
        };
        for line in text.lines() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') || line.starts_with("N\t") {
                continue;
            }
            let fields: Vec<&str> = line.split('\t').collect();
            if fields.len() != 3 {
                return Err(bad(line, "expected three tab-separated fields"));
            }
            let n = fields[0].parse().map_err(|_| bad(line, "bad N"))?;
            let k = fields[1].parse().map_err(|_| bad(line, "bad k"))?;
            let xi = fields[2].parse().map_err(|_| bad(line, "bad count"))?;
            table.insert(n, k, xi);
        }
        Ok(table)
    }
}

/// The published counts for `N <= 10`.
pub fn reference_table() -> &'static XiTable {
    static TABLE: OnceLock<XiTable> = OnceLock::new();
    TABLE.get_or_init(|| XiTable::parse_tsv(REFERENCE_TSV).expect("embedded table parses"))
}

/// Computes every `xi_N^k` with `N <= max_n` by linear programming. The
/// degree bound is raised to `max_n` for every `k`.
pub fn compute_table(engine: &SchurEngine, max_n: u32) -> Result<XiTable> {
    let config = ConeConfig::with_max_degree(max_n);
    let mut table = XiTable::default();
    for n in 1..=max_n {
        for k in 1..=n as usize {
            table.insert(n, k, count_extreme(engine, n, k, &config)?);
        }
        log::info!("xi row N={} done: {:?}", n, table.row(n));
    }
    Ok(table)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reference_has_all_rows() {
        let t = reference_table();
        assert_eq!(t.len(), 55);
        assert_eq!(t.row(6), vec![11, 13, 13, 11, 11, 11]);
        assert_eq!(t.get(10, 3), Some(70));
        assert_eq!(t.get(9, 3), Some(47));
        assert_eq!(t.get(8, 4), Some(27));
    }

    #[test]
    fn tsv_round_trip_and_diff() {
        let t = reference_table();
        assert_eq!(&XiTable::parse_tsv(&t.to_tsv()).unwrap(), t);
        let mut other = XiTable::default();
        other.insert(6, 2, 12);
        other.insert(11, 1, 56);
        let diff = other.diff(t);
        assert_eq!(diff.len(), 2);
        assert_eq!(diff[0].expected, Some(13));
        assert_eq!(diff[1].expected, None);
        assert!(XiTable::parse_tsv("1\t2").is_err());
    }

    #[test]
    fn small_table_matches() {
        let engine = SchurEngine::default();
        let t = compute_table(&engine, 6).unwrap();
        assert!(t.diff(reference_table()).is_empty());
        assert!(t.to_matrix().starts_with("N\\k"));
    }
}
