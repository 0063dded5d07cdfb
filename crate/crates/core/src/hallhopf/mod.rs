//! Positive and negative Ringel-Hall algebras, the pairings between them and
//! their reduced Drinfeld double.

mod algebra;
mod element;

pub use algebra::HallAlgebra;
pub use element::{AlgElt, BasisSym, TensorElt, Triple};
