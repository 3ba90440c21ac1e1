//! The superalgebra `ℚ[x, y] ⊗ ∧(θ)` with its `S_n` action, the
//! differentiation pairing, and first-order super differential operators.

mod diffop;
mod monomial;
mod perm;
mod polynomial;

pub use diffop::{Derivation, DiffOperator, OpTerm};
pub(crate) use monomial::{binomial, subsets};
pub use monomial::{count_of_degree, monomials_of_degree, Monomial, Shift, TriDegree, MAX_N};
pub use perm::Permutation;
pub use polynomial::{Polynomial, Var};
