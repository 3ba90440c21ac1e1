use std::collections::BTreeMap;
use std::sync::Arc;

use crate::linalg::{rref_rows, Rref, SparseVec};
use crate::par::Exec;
use crate::superpoly::{Polynomial, TriDegree};

use super::GradedModel;

/// Which isotypic projector cuts out a component.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Isotype {
    /// Image of `alt`.
    Sign,
    /// Image of `sym`.
    Trivial,
}

impl Isotype {
    pub fn project(self, p: &Polynomial) -> Polynomial {
        match self {
            Isotype::Sign => p.alt(),
            Isotype::Trivial => p.sym(),
        }
    }
}

/// An `S_n`-isotypic component of a model, stored per degree as an RREF basis
/// in the parent's coordinates.
#[derive(Clone, Debug)]
pub struct Component<M> {
    parent: Arc<M>,
    isotype: Isotype,
    pieces: BTreeMap<TriDegree, Rref>,
}

impl<M: GradedModel> Component<M> {
    /// Image of the projector applied to the parent's basis, degree by degree.
    pub fn new(parent: Arc<M>, isotype: Isotype, exec: Exec) -> Self {
        let degrees = parent.degrees();
        let bases = exec.map(degrees.clone(), |d| {
            let images: Vec<SparseVec> = parent
                .basis(d)
                .iter()
                .map(|b| {
                    parent
                        .coordinates(d, &isotype.project(b))
                        .expect("the parent space is S_n-stable")
                })
                .collect();
            rref_rows(&images, parent.dim(d))
        });
        let pieces = degrees
            .into_iter()
            .zip(bases)
            .filter(|(_, r)| r.rank() > 0)
            .collect();
        Component {
            parent,
            isotype,
            pieces,
        }
    }

    pub fn parent(&self) -> &Arc<M> {
        &self.parent
    }

    pub fn isotype(&self) -> Isotype {
        self.isotype
    }

    /// Basis of the piece at `d` in parent coordinates.
    pub fn piece(&self, d: TriDegree) -> Option<&Rref> {
        self.pieces.get(&d)
    }

    /// Restriction to θ-degree `a`.
    pub fn slice_dims(&self, a: usize) -> BTreeMap<(usize, usize), usize> {
        self.pieces
            .iter()
            .filter(|(d, _)| d.da == a)
            .map(|(d, r)| ((d.dx, d.dy), r.rank()))
            .collect()
    }
}

impl<M: GradedModel> GradedModel for Component<M> {
    fn n(&self) -> usize {
        self.parent.n()
    }

    fn name(&self) -> String {
        match self.isotype {
            Isotype::Sign => format!("{}^sgn", self.parent.name()),
            Isotype::Trivial => format!("{}^inv", self.parent.name()),
        }
    }

    fn degrees(&self) -> Vec<TriDegree> {
        self.pieces.keys().copied().collect()
    }

    fn dim(&self, d: TriDegree) -> usize {
        self.pieces.get(&d).map_or(0, Rref::rank)
    }

    fn lift(&self, d: TriDegree, coords: &SparseVec) -> Polynomial {
        let Some(r) = self.pieces.get(&d) else {
            return Polynomial::zero(self.n());
        };
        let mut v = SparseVec::new();
        for (i, c) in coords.iter() {
            v = v.add_scaled(c, &r.rows()[*i]);
        }
        self.parent.lift(d, &v)
    }

    fn coordinates(&self, d: TriDegree, p: &Polynomial) -> Option<SparseVec> {
        let v = self.parent.coordinates(d, p)?;
        match self.pieces.get(&d) {
            Some(r) => r.coordinates(&v),
            None => v.is_zero().then(SparseVec::new),
        }
    }

    fn relation_generators(&self, d: TriDegree) -> Vec<Polynomial> {
        self.parent.relation_generators(d)
    }

    fn reduces_to_zero(&self, d: TriDegree, p: &Polynomial) -> bool {
        self.parent.reduces_to_zero(d, p)
    }
}
