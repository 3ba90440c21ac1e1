use rustc_hash::FxHashMap;

use crate::linalg::{Rational, Rref, SparseVec};
use crate::superpoly::{Monomial, Polynomial, TriDegree};

/// One homogeneous piece of a quotient: the ambient monomials, the RREF of
/// the relation subspace, and normal forms over the non-pivot monomials.
#[derive(Clone, Debug)]
pub struct QuotientPiece {
    degree: TriDegree,
    monomials: Vec<Monomial>,
    index: FxHashMap<Monomial, usize>,
    relations: Rref,
    reps: Vec<usize>,
    /// Normal form of each ambient monomial in representative coordinates.
    nf: Vec<SparseVec>,
}

impl QuotientPiece {
    pub fn new(degree: TriDegree, monomials: Vec<Monomial>, relations: Rref) -> Self {
        assert_eq!(monomials.len(), relations.cols());
        let index = monomials.iter().enumerate().map(|(i, m)| (*m, i)).collect();
        let reps = relations.free_columns();
        let mut rep_pos = vec![usize::MAX; monomials.len()];
        for (k, &c) in reps.iter().enumerate() {
            rep_pos[c] = k;
        }
        let mut nf = vec![SparseVec::new(); monomials.len()];
        for (k, &c) in reps.iter().enumerate() {
            nf[c] = SparseVec::unit(k);
        }
        for (p, row) in relations.pivots().iter().zip(relations.rows()) {
            // m_p + Σ r_j m_j = 0 over free columns j.
            nf[*p] = SparseVec::from_sorted_unchecked(
                row.iter().skip(1).map(|(j, v)| (rep_pos[*j], -v)).collect(),
            );
        }
        QuotientPiece {
            degree,
            monomials,
            index,
            relations,
            reps,
            nf,
        }
    }

    pub fn degree(&self) -> TriDegree {
        self.degree
    }

    pub fn monomials(&self) -> &[Monomial] {
        &self.monomials
    }

    pub fn index(&self) -> &FxHashMap<Monomial, usize> {
        &self.index
    }

    pub fn relations(&self) -> &Rref {
        &self.relations
    }

    pub fn dim(&self) -> usize {
        self.reps.len()
    }

    pub fn rep_monomials(&self) -> impl Iterator<Item = Monomial> + '_ {
        self.reps.iter().map(|&c| self.monomials[c])
    }

    pub fn rep_monomial(&self, k: usize) -> Monomial {
        self.monomials[self.reps[k]]
    }

    /// Normal form of a monomial of this degree, `None` for foreign monomials.
    pub fn nf_of(&self, m: &Monomial) -> Option<&SparseVec> {
        self.index.get(m).map(|&i| &self.nf[i])
    }

    pub fn normal_form(&self, p: &Polynomial) -> SparseVec {
        let mut acc: Vec<(usize, Rational)> = Vec::new();
        for (m, c) in p.terms() {
            let v = self
                .nf_of(m)
                .unwrap_or_else(|| panic!("{m} is not of degree {}", self.degree));
            acc.extend(v.iter().map(|(k, x)| (*k, x * c)));
        }
        SparseVec::from_entries(acc)
    }

    pub fn lift(&self, n: usize, coords: &SparseVec) -> Polynomial {
        let mut p = Polynomial::zero(n);
        for (k, c) in coords.iter() {
            p.add_term(self.rep_monomial(*k), c.clone());
        }
        p
    }

    pub fn relation_polynomials(&self, n: usize) -> Vec<Polynomial> {
        self.relations
            .rows()
            .iter()
            .map(|r| Polynomial::from_coords(n, &self.monomials, r))
            .collect()
    }
}
