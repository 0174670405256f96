//! Generalized Littlewood-Richardson coefficients `c_A^lambda`.
//!
//! Two tableau rules live here. [`lr_multi`] fills a shape with the entries
//! of `A` concatenated in canonical order, one consecutive letter block per
//! entry, and asks each block to read as a Yamanouchi word; that is the
//! iterated two-factor rule and equals the true multiplicity.
//!
//! [`lr_multi_sorted`] uses the merged content `nu = phi(A)` instead, with
//! the block of an entry being the positions its parts occupy in `nu`. With
//! the default tie-break it agrees with [`lr_multi`] up to degree 6 and
//! over-counts from degree 7 on, e.g. `A = {(3,2),(3)}` picks up a spurious
//! `s_(4,4)`. Other tie-breaks fail sooner: interleaving the letters of
//! `{(1,1),(1),(1)}` gives 2 at `(2,2)` instead of 1.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock};

use num_bigint::BigInt;
use parking_lot::RwLock;

use super::vector::SchurVector;
use crate::error::{Error, Result};
use crate::multiset::PartitionMultiset;
use crate::partition::{enumerate_partitions, Partition};

/// Letter sets `B_1..B_k` partitioning `1..=n`; `blocks[i]` belongs to the
/// i-th canonical entry of the multiset and is sorted ascending.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockAssignment {
    pub blocks: Vec<Vec<u32>>,
}

/// `(entry index, position within entry)` for one part.
pub type PartTag = (usize, usize);

/// Content `phi(A)` and the blocks, breaking ties between equal parts by
/// canonical entry index, then position within the entry.
pub fn block_assignment(a: &PartitionMultiset) -> Result<(Partition, BlockAssignment)> {
    block_assignment_by(a, |_| {})
}

/// Like [`block_assignment`], but `reorder` may permute each run of tags that
/// share a part value before letters are handed out.
pub fn block_assignment_by(
    a: &PartitionMultiset,
    mut reorder: impl FnMut(&mut [PartTag]),
) -> Result<(Partition, BlockAssignment)> {
    if a.is_empty() {
        return Err(Error::EmptyMultiset);
    }
    let mut tagged: Vec<(u32, PartTag)> = a
        .entries()
        .iter()
        .enumerate()
        .flat_map(|(e, p)| p.parts().iter().enumerate().map(move |(i, &v)| (v, (e, i))))
        .collect();
    tagged.sort_by(|x, y| y.0.cmp(&x.0).then(x.1.cmp(&y.1)));

    let mut order: Vec<PartTag> = Vec::with_capacity(tagged.len());
    let mut start = 0;
    while start < tagged.len() {
        let value = tagged[start].0;
        let end = start + tagged[start..].iter().take_while(|t| t.0 == value).count();
        let mut run: Vec<PartTag> = tagged[start..end].iter().map(|t| t.1).collect();
        reorder(&mut run);
        order.extend(run);
        start = end;
    }

    let mut blocks = vec![Vec::new(); a.len()];
    for (letter, (entry, _)) in order.iter().enumerate() {
        blocks[*entry].push(letter as u32 + 1);
    }
    for b in &mut blocks {
        b.sort_unstable();
    }
    let content = Partition::from_unsorted(tagged.iter().map(|t| t.0).collect::<Vec<_>>());
    Ok((content, BlockAssignment { blocks }))
}

struct LrCounter<'a> {
    cells: Vec<(usize, usize)>,
    below: Vec<u32>,
    filling: Vec<Vec<u32>>,
    remaining: Vec<u32>,
    used: Vec<u32>,
    /// Previous letter of the same block (relabeled order), 0 if first.
    prev: Vec<u32>,
    n: u32,
    shape: &'a Partition,
}

impl LrCounter<'_> {
    fn count(&mut self, idx: usize) -> u64 {
        if idx == self.cells.len() {
            return 1;
        }
        let (r, c) = self.cells[idx];
        let right = if c + 1 < self.shape.part(r) as usize {
            self.filling[r][c + 1]
        } else {
            self.n
        };
        let low = if r > 0 { self.filling[r - 1][c] + 1 } else { 1 };
        let high = right.min(self.n - self.below[idx]);
        let mut total = 0;
        for v in low..=high {
            let vi = v as usize;
            if self.remaining[vi] == 0 {
                continue;
            }
            let p = self.prev[vi] as usize;
            if p != 0 && self.used[p] <= self.used[vi] {
                continue;
            }
            self.remaining[vi] -= 1;
            self.used[vi] += 1;
            self.filling[r][c] = v;
            total += self.count(idx + 1);
            self.used[vi] -= 1;
            self.remaining[vi] += 1;
        }
        self.filling[r][c] = 0;
        total
    }
}

/// Counts SSYT of `shape` with `content[v-1]` letters `v` whose reading
/// word restricted to each block is Yamanouchi. Blocks must partition the
/// letters `1..=content.len()`.
pub fn count_constrained(content: &[u32], blocks: &BlockAssignment, shape: &Partition) -> u64 {
    if content.iter().sum::<u32>() != shape.weight() {
        return 0;
    }
    let n = content.len() as u32;
    let mut prev = vec![0u32; n as usize + 1];
    for block in &blocks.blocks {
        for w in block.windows(2) {
            prev[w[1] as usize] = w[0];
        }
    }
    let mut remaining = vec![0u32; n as usize + 1];
    for (i, &p) in content.iter().enumerate() {
        remaining[i + 1] = p;
    }
    // Reading order: rows top to bottom, each right to left.
    let conj = shape.conjugate();
    let mut cells = Vec::new();
    let mut below = Vec::new();
    for (r, &len) in shape.parts().iter().enumerate() {
        for c in (0..len as usize).rev() {
            cells.push((r, c));
            below.push(conj.part(c) - r as u32 - 1);
        }
    }
    if below.iter().any(|&b| b >= n) {
        return 0;
    }
    let mut counter = LrCounter {
        cells,
        below,
        filling: shape.parts().iter().map(|&l| vec![0; l as usize]).collect(),
        remaining,
        used: vec![0; n as usize + 1],
        prev,
        n,
        shape,
    };
    counter.count(0)
}

/// The merged-content count for explicit content `phi(A)` and blocks.
pub fn lr_count(content: &Partition, blocks: &BlockAssignment, shape: &Partition) -> u64 {
    count_constrained(content.parts(), blocks, shape)
}

/// Entries of `A` concatenated in canonical order, with consecutive blocks.
pub fn concatenated_content(a: &PartitionMultiset) -> (Vec<u32>, BlockAssignment) {
    let mut content = Vec::new();
    let mut blocks = Vec::with_capacity(a.len());
    for entry in a.entries() {
        let start = content.len() as u32 + 1;
        content.extend_from_slice(entry.parts());
        blocks.push((start..=content.len() as u32).collect());
    }
    (content, BlockAssignment { blocks })
}

fn check_weights(a: &PartitionMultiset, lambda: &Partition) -> Result<()> {
    if a.total_weight() != lambda.weight() {
        return Err(Error::WeightMismatch {
            lhs: a.total_weight(),
            rhs: lambda.weight(),
        });
    }
    Ok(())
}

/// `c_A^lambda`: multiplicity of `s_lambda` in `prod_{mu in A} s_mu`.
pub fn lr_multi(a: &PartitionMultiset, lambda: &Partition) -> Result<u64> {
    check_weights(a, lambda)?;
    if a.is_empty() {
        return Ok(1);
    }
    let (content, blocks) = concatenated_content(a);
    Ok(count_constrained(&content, &blocks, lambda))
}

/// The merged-content count with the default tie-break of [`block_assignment`].
pub fn lr_multi_sorted(a: &PartitionMultiset, lambda: &Partition) -> Result<u64> {
    check_weights(a, lambda)?;
    if a.is_empty() {
        return Ok(1);
    }
    let (content, blocks) = block_assignment(a)?;
    Ok(lr_count(&content, &blocks, lambda))
}

/// Schur expansion of `s_A`, scanning only shapes that dominate `phi(A)`.
pub fn expand_product(a: &PartitionMultiset) -> SchurVector {
    expand_with(a, |lambda| lr_multi(a, lambda).expect("weights agree"))
}

fn expand_with(a: &PartitionMultiset, mut coeff: impl FnMut(&Partition) -> u64) -> SchurVector {
    let n = a.total_weight();
    let floor = a.phi();
    let mut v = SchurVector::zero(n);
    for lambda in enumerate_partitions(n, None) {
        if !lambda.dominates(&floor).expect("same weight") {
            continue;
        }
        let c = coeff(&lambda);
        if c > 0 {
            v.add_term(lambda, BigInt::from(c)).expect("same weight");
        }
    }
    v
}

/// Memoizing front end for LR coefficients and product expansions, safe to
/// share between threads. Each cache is cleared once it reaches `capacity`.
pub struct SchurEngine {
    coefficients: RwLock<HashMap<(PartitionMultiset, Partition), u64>>,
    products: RwLock<HashMap<PartitionMultiset, Arc<SchurVector>>>,
    capacity: usize,
}

impl Default for SchurEngine {
    fn default() -> Self {
        SchurEngine::with_capacity(1 << 20)
    }
}

impl SchurEngine {
    pub fn with_capacity(capacity: usize) -> Self {
        SchurEngine {
            coefficients: RwLock::new(HashMap::new()),
            products: RwLock::new(HashMap::new()),
            capacity,
        }
    }

    /// Process-wide engine.
    pub fn global() -> &'static SchurEngine {
        static ENGINE: OnceLock<SchurEngine> = OnceLock::new();
        ENGINE.get_or_init(SchurEngine::default)
    }

    pub fn lr_multi(&self, a: &PartitionMultiset, lambda: &Partition) -> Result<u64> {
        let key = (a.clone(), lambda.clone());
        if let Some(&c) = self.coefficients.read().get(&key) {
            return Ok(c);
        }
        let c = lr_multi(a, lambda)?;
        let mut cache = self.coefficients.write();
        if cache.len() >= self.capacity {
            cache.clear();
        }
        cache.insert(key, c);
        Ok(c)
    }

    pub fn expand_product(&self, a: &PartitionMultiset) -> Arc<SchurVector> {
        if let Some(v) = self.products.read().get(a) {
            return Arc::clone(v);
        }
        let v = Arc::new(expand_with(a, |lambda| {
            self.lr_multi(a, lambda).expect("weights agree")
        }));
        let mut cache = self.products.write();
        if cache.len() >= self.capacity {
            cache.clear();
        }
        cache.insert(a.clone(), Arc::clone(&v));
        v
    }

    pub fn cached_products(&self) -> usize {
        self.products.read().len()
    }
}
