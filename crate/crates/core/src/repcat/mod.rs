//! Nilpotent quiver representations over a prime field.

pub mod linalg;
pub mod quiver;
pub mod rep;
pub mod table;

pub use linalg::{Fp, Matrix};
pub use quiver::{DimVec, Quiver};
pub use rep::{aut_count, ext_dim, hom_dim, is_indecomposable, Rep};
pub use table::{enumerate_classes, ClassId, ClassTable, Limits, RepClass};
