//! Combinatorics of positroid varieties: bounded affine permutations, juggling
//! patterns, cyclic rank matrices, positroids, exact stratification of matrices,
//! positroid cohomology classes and quantum Schubert calculus.

pub mod affine;
pub mod crm;
pub mod error;
pub mod juggling;
pub mod matroid;
pub mod perm;
pub mod poset;
pub mod quantum;
pub mod strata;
pub mod subset;
pub mod symcoh;

pub use error::{Error, Result};
