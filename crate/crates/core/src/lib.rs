//! Exact combinatorics around Serre weights, genes, Kisin varieties and
//! deformation rings, together with linear algebra and Galois theory over
//! the field with one element.
//!
//! Every enumeration is exhaustive and deterministic; integer arithmetic
//! either uses big integers or checks for overflow.

pub mod arith;
pub mod bm;
pub mod defring;
mod error;
pub mod exact;
pub mod f1;
pub mod ffield;
pub mod galois;
pub mod gene;
pub mod kisin;
pub mod lattice;
pub mod oracle;
pub mod perm;
pub mod weyl;

pub use error::{Error, Result};
