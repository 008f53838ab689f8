//! Symmetric functions, affine Stanley symmetric functions and cohomology classes
//! of positroid varieties in `H*(Gr(k,n))`.

mod grass;
mod partition;
pub mod schubert;
mod stanley;
mod symfunc;

pub use grass::{pieri_s1, positroid_class, psi, GrassClass};
pub use partition::Partition;
pub use schubert::{richardson_pushforward, richardson_pushforward_with, SchubertTable};
pub use stanley::{affine_stanley, affine_stanley_coefficient, cyclically_decreasing_elements, CyclicallyDecreasing};
pub use symfunc::{Basis, Kostka, SymFunc, MAX_SCHUR_DEGREE};
