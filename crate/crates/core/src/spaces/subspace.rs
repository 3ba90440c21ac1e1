use std::collections::BTreeMap;

use rustc_hash::FxHashMap;

use crate::linalg::{rref_rows, Rref, SparseVec};
use crate::par::Exec;
use crate::superpoly::{monomials_of_degree, Monomial, Polynomial, TriDegree};

use super::component::Isotype;
use super::GradedModel;

#[derive(Clone, Debug)]
struct SubspacePiece {
    monomials: Vec<Monomial>,
    index: FxHashMap<Monomial, usize>,
    basis: Rref,
}

/// A graded subspace of the superalgebra: per degree, an RREF basis in the
/// monomial coordinates of that degree.
#[derive(Clone, Debug)]
pub struct GradedSubspace {
    n: usize,
    name: String,
    pieces: BTreeMap<TriDegree, SubspacePiece>,
}

impl GradedSubspace {
    pub fn new(n: usize, name: impl Into<String>) -> Self {
        GradedSubspace {
            n,
            name: name.into(),
            pieces: BTreeMap::new(),
        }
    }

    /// Sets the piece at `d` to the span of `vectors` (monomial coordinates).
    pub fn insert_span(&mut self, d: TriDegree, vectors: &[SparseVec]) {
        let monomials = monomials_of_degree(self.n, d);
        let basis = rref_rows(vectors, monomials.len());
        self.insert_rref(d, monomials, basis);
    }

    pub fn insert_polynomials(&mut self, d: TriDegree, polys: &[Polynomial]) {
        let monomials = monomials_of_degree(self.n, d);
        let index = index_of(&monomials);
        let vectors: Vec<SparseVec> = polys
            .iter()
            .map(|p| {
                p.coords_in(&index)
                    .unwrap_or_else(|| panic!("{p} is not of degree {d}"))
            })
            .collect();
        let basis = rref_rows(&vectors, monomials.len());
        self.insert_rref(d, monomials, basis);
    }

    pub(crate) fn insert_rref(&mut self, d: TriDegree, monomials: Vec<Monomial>, basis: Rref) {
        if basis.rank() == 0 {
            self.pieces.remove(&d);
            return;
        }
        let index = index_of(&monomials);
        self.pieces.insert(
            d,
            SubspacePiece {
                monomials,
                index,
                basis,
            },
        );
    }

    pub fn basis_rref(&self, d: TriDegree) -> Option<&Rref> {
        self.pieces.get(&d).map(|p| &p.basis)
    }

    pub fn pieces(&self) -> impl Iterator<Item = (TriDegree, &Rref)> {
        self.pieces.iter().map(|(d, p)| (*d, &p.basis))
    }

    pub fn contains(&self, p: &Polynomial) -> bool {
        p.degrees()
            .into_iter()
            .all(|d| self.coordinates(d, &p.homogeneous_part(d)).is_some())
    }

    /// Monomial coordinates of a homogeneous polynomial of degree `d`.
    pub fn monomial_coords(&self, d: TriDegree, p: &Polynomial) -> Option<SparseVec> {
        match self.pieces.get(&d) {
            Some(piece) => p.coords_in(&piece.index),
            None => p.coords_in(&index_of(&monomials_of_degree(self.n, d))),
        }
    }

    /// Isotypic component, computed by projecting each basis vector.
    pub fn component(&self, isotype: Isotype, exec: Exec) -> GradedSubspace {
        let degrees: Vec<TriDegree> = self.pieces.keys().copied().collect();
        let built = exec.map(degrees.clone(), |d| {
            let piece = &self.pieces[&d];
            let images: Vec<SparseVec> = self
                .basis(d)
                .iter()
                .map(|b| {
                    isotype
                        .project(b)
                        .coords_in(&piece.index)
                        .expect("projection preserves degree")
                })
                .collect();
            rref_rows(&images, piece.monomials.len())
        });
        let mut out = GradedSubspace::new(self.n, format!("{}^{}", self.name, iso_suffix(isotype)));
        for (d, r) in degrees.into_iter().zip(built) {
            out.insert_rref(d, self.pieces[&d].monomials.clone(), r);
        }
        out
    }

    /// Whether both subspaces have identical pieces in every degree.
    pub fn same_as(&self, other: &GradedSubspace) -> bool {
        self.pieces.len() == other.pieces.len()
            && self
                .pieces
                .iter()
                .all(|(d, p)| other.pieces.get(d).is_some_and(|q| q.basis == p.basis))
    }
}

fn iso_suffix(i: Isotype) -> &'static str {
    match i {
        Isotype::Sign => "sgn",
        Isotype::Trivial => "inv",
    }
}

fn index_of(monomials: &[Monomial]) -> FxHashMap<Monomial, usize> {
    monomials.iter().enumerate().map(|(i, m)| (*m, i)).collect()
}

impl GradedModel for GradedSubspace {
    fn n(&self) -> usize {
        self.n
    }

    fn name(&self) -> String {
        self.name.clone()
    }

    fn degrees(&self) -> Vec<TriDegree> {
        self.pieces.keys().copied().collect()
    }

    fn dim(&self, d: TriDegree) -> usize {
        self.pieces.get(&d).map_or(0, |p| p.basis.rank())
    }

    fn lift(&self, d: TriDegree, coords: &SparseVec) -> Polynomial {
        let Some(piece) = self.pieces.get(&d) else {
            return Polynomial::zero(self.n);
        };
        let mut v = SparseVec::new();
        for (i, c) in coords.iter() {
            v = v.add_scaled(c, &piece.basis.rows()[*i]);
        }
        Polynomial::from_coords(self.n, &piece.monomials, &v)
    }

    fn coordinates(&self, d: TriDegree, p: &Polynomial) -> Option<SparseVec> {
        if p.is_zero() {
            return Some(SparseVec::new());
        }
        let piece = self.pieces.get(&d)?;
        piece.basis.coordinates(&p.coords_in(&piece.index)?)
    }
}
