//! Exact sparse linear algebra over the rationals.

pub mod rational;
mod rref;
mod sparse;

pub use rational::{Int, ParseRationalError, Rational};
pub use rref::{inverse, kernel_basis, membership, rank, rref, rref_rows, Echelon, Rref};
pub use sparse::{SparseMatrix, SparseVec};
