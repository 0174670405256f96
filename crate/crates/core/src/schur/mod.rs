//! Schur-basis arithmetic: LR coefficients, product expansions and oracles.

mod lr;
mod oracle;
mod vector;

pub use lr::{
    block_assignment, block_assignment_by, concatenated_content, count_constrained, expand_product,
    lr_count, lr_multi, lr_multi_sorted, BlockAssignment, PartTag, SchurEngine,
};
pub use oracle::{
    expand_product_oracle, jacobi_trudi_check, jacobi_trudi_expansion, DEFAULT_ORACLE_BOUND,
};
pub use vector::{fraction_string, parse_fraction, RationalSchurVector, SchurVector};
