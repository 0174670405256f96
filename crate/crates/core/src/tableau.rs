//! Semistandard and standard Young tableaux: enumeration, reading words,
//! Yamanouchi tests and Kostka numbers.

use std::fmt;

use crate::error::{Error, Result};
use crate::partition::Partition;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Tableau {
    shape: Partition,
    rows: Vec<Vec<u32>>,
}

impl Tableau {
    /// Validates row lengths and the semistandard conditions.
    pub fn new(rows: Vec<Vec<u32>>) -> Result<Self> {
        let shape = Partition::new(rows.iter().map(|r| r.len() as u32).collect::<Vec<_>>())
            .map_err(|_| Error::NotSemistandard(format!("{:?}", rows)))?;
        let rows: Vec<Vec<u32>> = rows.into_iter().filter(|r| !r.is_empty()).collect();
        let bad = || Error::NotSemistandard(shape.to_string());
        for (r, row) in rows.iter().enumerate() {
            if row.contains(&0) || row.windows(2).any(|w| w[0] > w[1]) {
                return Err(bad());
            }
            if r > 0
                && row
                    .iter()
                    .zip(&rows[r - 1])
                    .any(|(below, above)| below <= above)
            {
                return Err(bad());
            }
        }
        Ok(Tableau { shape, rows })
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    /// `content[v-1]` is the number of entries equal to `v`.
    pub fn content(&self) -> Vec<u32> {
        let max = self.rows.iter().flatten().copied().max().unwrap_or(0) as usize;
        let mut content = vec![0; max];
        for &v in self.rows.iter().flatten() {
            content[v as usize - 1] += 1;
        }
        content
    }

    /// Rows read right to left, top row first.
    pub fn reading_word(&self) -> Word {
        Word(
            self.rows
                .iter()
                .flat_map(|row| row.iter().rev().copied())
                .collect(),
        )
    }
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.rows.iter().enumerate() {
            if i > 0 {
                f.write_str("/")?;
            }
            for v in row {
                write!(f, "{}", v)?;
            }
        }
        Ok(())
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Word(pub Vec<u32>);

impl Word {
    pub fn letters(&self) -> &[u32] {
        &self.0
    }

    /// Yamanouchi test on the subword of letters in `alphabet`, after
    /// relabeling the alphabet `1..m` in increasing order.
    pub fn is_yamanouchi(&self, alphabet: &[u32]) -> bool {
        let mut alphabet = alphabet.to_vec();
        alphabet.sort_unstable();
        alphabet.dedup();
        let mut counts = vec![0usize; alphabet.len()];
        for letter in &self.0 {
            if let Ok(rank) = alphabet.binary_search(letter) {
                counts[rank] += 1;
                if rank > 0 && counts[rank] > counts[rank - 1] {
                    return false;
                }
            }
        }
        true
    }
}

/// Lazy backtracking over fillings of a shape, cells in row-major order,
/// smallest feasible letter first.
pub struct SsytIter {
    shape: Partition,
    cells: Vec<(usize, usize)>,
    /// Height of the column below each cell, exclusive.
    below: Vec<u32>,
    filling: Vec<Vec<u32>>,
    /// Remaining multiplicity of each letter; `None` means unlimited.
    remaining: Option<Vec<u32>>,
    max_letter: u32,
    started: bool,
    done: bool,
}

impl SsytIter {
    fn new(shape: &Partition, remaining: Option<Vec<u32>>, max_letter: u32) -> Self {
        let conj = shape.conjugate();
        let mut cells = Vec::with_capacity(shape.weight() as usize);
        let mut below = Vec::with_capacity(shape.weight() as usize);
        for (r, &len) in shape.parts().iter().enumerate() {
            for c in 0..len as usize {
                cells.push((r, c));
                below.push(conj.part(c) - r as u32 - 1);
            }
        }
        SsytIter {
            shape: shape.clone(),
            filling: shape.parts().iter().map(|&l| vec![0; l as usize]).collect(),
            cells,
            below,
            remaining,
            max_letter,
            started: false,
            done: false,
        }
    }

    fn release(&mut self, v: u32) {
        if let Some(rem) = self.remaining.as_mut() {
            rem[v as usize - 1] += 1;
        }
    }

    fn available(&self, v: u32) -> bool {
        match &self.remaining {
            Some(rem) => rem[v as usize - 1] > 0,
            None => true,
        }
    }

    fn try_next_letter(&mut self, idx: usize) -> bool {
        let (r, c) = self.cells[idx];
        let current = self.filling[r][c];
        if current > 0 {
            self.release(current);
        }
        let left = if c > 0 { self.filling[r][c - 1] } else { 1 };
        let above = if r > 0 { self.filling[r - 1][c] + 1 } else { 1 };
        let start = left.max(above).max(current + 1);
        let top = self.max_letter.saturating_sub(self.below[idx]);
        for v in start..=top {
            if self.available(v) {
                if let Some(rem) = self.remaining.as_mut() {
                    rem[v as usize - 1] -= 1;
                }
                self.filling[r][c] = v;
                return true;
            }
        }
        self.filling[r][c] = 0;
        false
    }

    fn emit(&self) -> Tableau {
        Tableau {
            shape: self.shape.clone(),
            rows: self.filling.clone(),
        }
    }
}

impl Iterator for SsytIter {
    type Item = Tableau;

    fn next(&mut self) -> Option<Tableau> {
        if self.done {
            return None;
        }
        let n = self.cells.len();
        let mut idx = if self.started {
            if n == 0 {
                self.done = true;
                return None;
            }
            n - 1
        } else {
            self.started = true;
            if n == 0 {
                return Some(self.emit());
            }
            0
        };
        loop {
            if self.try_next_letter(idx) {
                if idx + 1 == n {
                    return Some(self.emit());
                }
                idx += 1;
            } else if idx == 0 {
                self.done = true;
                return None;
            } else {
                idx -= 1;
            }
        }
    }
}

/// All SSYT of `shape` with exactly `content[v-1]` entries equal to `v`.
/// Yields nothing when the content total differs from the shape weight.
pub fn enumerate_ssyt(shape: &Partition, content: &[u32]) -> SsytIter {
    let total: u32 = content.iter().sum();
    let mut iter = SsytIter::new(shape, Some(content.to_vec()), content.len() as u32);
    if total != shape.weight() {
        iter.done = true;
    }
    iter
}

/// All SSYT of `shape` with entries in `1..=max_entry`.
pub fn enumerate_ssyt_bounded(shape: &Partition, max_entry: u32) -> SsytIter {
    SsytIter::new(shape, None, max_entry)
}

/// All standard Young tableaux of a nonempty shape.
pub fn enumerate_syt(shape: &Partition) -> Result<SsytIter> {
    if shape.is_empty() {
        return Err(Error::EmptyShape);
    }
    Ok(enumerate_ssyt(shape, &vec![1; shape.weight() as usize]))
}

/// Number of SSYT of `shape` and content `content`.
pub fn kostka(shape: &Partition, content: &Partition) -> Result<u64> {
    if shape.weight() != content.weight() {
        return Err(Error::WeightMismatch {
            lhs: shape.weight(),
            rhs: content.weight(),
        });
    }
    Ok(enumerate_ssyt(shape, content.parts()).count() as u64)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::enumerate_partitions;

    #[test]
    fn reading_words() {
        let t = Tableau::new(vec![vec![1, 1], vec![2]]).unwrap();
        assert_eq!(t.reading_word(), Word(vec![1, 1, 2]));
        let t = Tableau::new(vec![vec![1, 2], vec![2]]).unwrap();
        assert_eq!(t.reading_word(), Word(vec![2, 1, 2]));
        let t = Tableau::new(vec![]).unwrap();
        assert_eq!(t.reading_word(), Word::default());
    }

    #[test]
    fn rejects_non_semistandard() {
        assert!(Tableau::new(vec![vec![2, 1]]).is_err());
        assert!(Tableau::new(vec![vec![1, 2], vec![1]]).is_err());
        assert!(Tableau::new(vec![vec![1], vec![2, 3]]).is_err());
    }

    #[test]
    fn yamanouchi_examples() {
        assert!(Word(vec![1, 1, 2, 1]).is_yamanouchi(&[1, 2]));
        assert!(!Word(vec![2, 1]).is_yamanouchi(&[1, 2]));
        assert!(Word(vec![3, 1, 3, 4]).is_yamanouchi(&[3, 4]));
        assert!(!Word(vec![4, 3]).is_yamanouchi(&[3, 4]));
        assert!(Word(vec![]).is_yamanouchi(&[1, 2, 3]));
    }

    #[test]
    fn ssyt_examples() {
        assert_eq!(enumerate_ssyt(&part![2, 1], &[1, 1, 1]).count(), 2);
        let forced: Vec<_> = enumerate_ssyt(&part![2, 1], &[2, 1]).collect();
        assert_eq!(forced.len(), 1);
        assert_eq!(forced[0].rows(), &[vec![1, 1], vec![2]]);
        assert_eq!(enumerate_ssyt(&part![1, 1], &[2, 0]).count(), 0);
        assert_eq!(enumerate_ssyt(&part![1, 1], &[1]).count(), 0);
    }

    #[test]
    fn ssyt_order_is_row_major_smallest_first() {
        let all: Vec<String> = enumerate_ssyt(&part![2, 1], &[1, 1, 1])
            .map(|t| t.to_string())
            .collect();
        assert_eq!(all, vec!["12/3", "13/2"]);
    }

    #[test]
    fn kostka_examples() {
        for n in 1..=6 {
            for lam in enumerate_partitions(n, None) {
                assert_eq!(kostka(&lam, &lam).unwrap(), 1);
            }
        }
        assert_eq!(kostka(&part![2, 1], &part![1, 1, 1]).unwrap(), 2);
        assert_eq!(kostka(&part![2, 2], &part![2, 1, 1]).unwrap(), 1);
        assert!(kostka(&part![2], &part![1]).is_err());
    }

    #[test]
    fn syt_examples() {
        assert_eq!(enumerate_syt(&part![2, 1]).unwrap().count(), 2);
        assert_eq!(enumerate_syt(&part![1, 1, 1]).unwrap().count(), 1);
        assert_eq!(enumerate_syt(&part![3]).unwrap().count(), 1);
        assert!(enumerate_syt(&Partition::empty()).is_err());
    }

    #[test]
    fn emitted_tableaux_are_semistandard_with_exact_content() {
        for n in 1..=7 {
            for shape in enumerate_partitions(n, None) {
                for content in enumerate_partitions(n, None) {
                    for t in enumerate_ssyt(&shape, content.parts()) {
                        let checked = Tableau::new(t.rows().to_vec()).unwrap();
                        let mut c = checked.content();
                        c.resize(content.len(), 0);
                        assert_eq!(c, content.parts());
                        assert_eq!(checked.shape(), &shape);
                    }
                }
            }
        }
    }

    #[test]
    fn superstandard_reading_word_is_yamanouchi() {
        for n in 1..=8 {
            for shape in enumerate_partitions(n, None) {
                let rows = shape
                    .parts()
                    .iter()
                    .enumerate()
                    .map(|(i, &l)| vec![i as u32 + 1; l as usize])
                    .collect();
                let t = Tableau::new(rows).unwrap();
                let alphabet: Vec<u32> = (1..=shape.len() as u32).collect();
                assert!(t.reading_word().is_yamanouchi(&alphabet));
            }
        }
    }

    #[test]
    fn early_stop_is_possible() {
        let mut it = enumerate_syt(&part![4, 3, 2, 1]).unwrap();
        assert!(it.next().is_some());
        assert!(it.next().is_some());
    }
}
