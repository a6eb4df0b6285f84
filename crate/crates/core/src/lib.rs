//! Exact commutator decompositions and similarity normal forms for matrices
//! over principal ideal domains.

pub mod commutator;
pub mod error;
pub mod gen;
pub mod json;
pub mod matrix;
pub mod oracle;
pub mod poly;
pub mod regularity;
pub mod ring;
pub mod similarity;

pub use error::{Error, Result};
