//! Graded spaces: diagonal coinvariants and harmonics, their sign and hook
//! components, and the antisymmetric ideals.

mod cache;
mod coinvariants;
mod component;
mod exterior;
mod harmonics;
mod hilbert;
mod hook;
mod ideals;
mod piece;
mod subspace;

use crate::linalg::{Rref, SparseVec};
use crate::superpoly::{monomials_of_degree, Polynomial};

pub use crate::superpoly::TriDegree;
pub use cache::{Cache, CacheKind, CACHE_FORMAT, ORDER_ID};
pub use coinvariants::{Coinvariants, Piece};
pub use component::{Component, Isotype};
pub use exterior::ExteriorQuotient;
pub use harmonics::{delta_orbit, harmonics, operator_span};
pub use hilbert::HilbertSeries;
pub use hook::HookAmbient;
pub use ideals::{antisymmetric_ideal, IdealFlavor, IdealQuotient, SuperIdeal};
pub use piece::QuotientPiece;
pub use subspace::GradedSubspace;

/// A graded vector space realized inside the superalgebra: every basis
/// vector lifts to a homogeneous polynomial, and homogeneous polynomials
/// reduce back to coordinates.
pub trait GradedModel: Send + Sync {
    fn n(&self) -> usize;

    fn name(&self) -> String;

    /// Degrees with a nonzero piece, ascending.
    fn degrees(&self) -> Vec<TriDegree>;

    fn dim(&self, d: TriDegree) -> usize;

    /// A polynomial representing the vector with the given coordinates.
    fn lift(&self, d: TriDegree, coords: &SparseVec) -> Polynomial;

    /// Coordinates of the class of `p` in the degree-`d` piece; `None` if
    /// `p` is not homogeneous of degree `d` or does not lie in the space.
    fn coordinates(&self, d: TriDegree, p: &Polynomial) -> Option<SparseVec>;

    /// A spanning set of the relations at `d` (empty for subspaces).
    fn relation_generators(&self, _d: TriDegree) -> Vec<Polynomial> {
        Vec::new()
    }

    /// Whether `p` represents zero in the ambient quotient at degree `d`.
    fn reduces_to_zero(&self, d: TriDegree, p: &Polynomial) -> bool {
        self.coordinates(d, p).is_some_and(|v| v.is_zero())
    }

    fn total_dim(&self) -> usize {
        self.degrees().into_iter().map(|d| self.dim(d)).sum()
    }

    fn hilbert(&self) -> HilbertSeries {
        HilbertSeries::from_dims(self.degrees().into_iter().map(|d| (d, self.dim(d))))
    }

    /// Lifts of the basis vectors at `d`.
    fn basis(&self, d: TriDegree) -> Vec<Polynomial> {
        (0..self.dim(d))
            .map(|j| self.lift(d, &SparseVec::unit(j)))
            .collect()
    }
}

/// RREF of the degree-`(a, b)` piece of the ideal `⟨p_{c,d} : 1 ≤ c + d ≤ n⟩`,
/// spanned directly by `p_{c,d} · m` over monomials `m` of the complementary
/// degree.
pub fn invariant_ideal_piece(n: usize, a: usize, b: usize) -> Rref {
    let d = TriDegree::bi(a, b);
    let monomials = monomials_of_degree(n, d);
    let index = monomials.iter().enumerate().map(|(i, m)| (*m, i)).collect();
    let mut rows = Vec::new();
    for c in 0..=a {
        for e in 0..=b {
            if c + e == 0 || c + e > n {
                continue;
            }
            let p = Polynomial::power_sum(n, c as u8, e as u8);
            for m in monomials_of_degree(n, TriDegree::bi(a - c, b - e)) {
                let q = &p * &Polynomial::monomial(n, m, 1.into());
                rows.push(q.coords_in(&index).expect("product has degree (a, b)"));
            }
        }
    }
    crate::linalg::rref_rows(&rows, monomials.len())
}
