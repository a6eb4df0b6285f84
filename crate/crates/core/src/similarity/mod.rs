//! Similarity normal forms over a principal ideal domain.

mod avoid;
mod lr;
mod reduce;
mod zero_diag;

pub use avoid::make_b12_nonzero_mod;
pub use lr::{lr_form, scalar_split, LaffeyReamsForm, ProbeRecord};
pub use reduce::{col_reduce, row_reduce};
pub use zero_diag::zero_diagonal_form;
