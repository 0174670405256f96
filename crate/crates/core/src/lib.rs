//! Exact symmetric-function combinatorics and extreme-ray classification for
//! the cones spanned by products of Schur functions.

pub mod error;
#[macro_use]
pub mod partition;
#[macro_use]
pub mod multiset;
pub mod cone;
pub mod harness;
pub mod nested;
pub mod schur;
pub mod tableau;

pub use error::{Error, Result};
pub use multiset::{enumerate_generators, PartitionMultiset};
pub use partition::{enumerate_partitions, Partition};
pub use schur::SchurVector;
