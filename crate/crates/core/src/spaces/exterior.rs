use crate::linalg::rref_rows;
use crate::superpoly::{monomials_of_degree, Polynomial, TriDegree};

use super::piece::QuotientPiece;

/// `∧(θ_1..θ_n) / ω_0 ∧(θ)` with `ω_0 = θ_1 + … + θ_n`, a model of `∧^• V`
/// for the reflection representation `V`.
#[derive(Clone, Debug)]
pub struct ExteriorQuotient {
    n: usize,
    pieces: Vec<QuotientPiece>,
}

impl ExteriorQuotient {
    pub fn new(n: usize) -> Self {
        let omega = Polynomial::omega(n, 0);
        let pieces = (0..=n)
            .map(|k| {
                let d = TriDegree::new(0, 0, k);
                let monomials = monomials_of_degree(n, d);
                let index = monomials.iter().enumerate().map(|(i, m)| (*m, i)).collect();
                let rows: Vec<_> = if k == 0 {
                    vec![]
                } else {
                    monomials_of_degree(n, TriDegree::new(0, 0, k - 1))
                        .into_iter()
                        .map(|t| {
                            let p = &omega * &Polynomial::monomial(n, t, 1.into());
                            p.coords_in(&index).expect("ω_0 θ_T has θ-degree k")
                        })
                        .collect()
                };
                let rref = rref_rows(&rows, monomials.len());
                QuotientPiece::new(d, monomials, rref)
            })
            .collect();
        ExteriorQuotient { n, pieces }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn piece(&self, k: usize) -> Option<&QuotientPiece> {
        self.pieces.get(k)
    }

    pub fn dim(&self, k: usize) -> usize {
        self.pieces.get(k).map_or(0, QuotientPiece::dim)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dims_are_binomials() {
        let e = ExteriorQuotient::new(4);
        let dims: Vec<usize> = (0..=4).map(|k| e.dim(k)).collect();
        assert_eq!(dims, vec![1, 3, 3, 1, 0]);
    }
}
