use std::collections::BTreeMap;

use rustc_hash::FxHashMap;

use crate::linalg::{Echelon, Rref, SparseVec};
use crate::par::Exec;
use crate::superpoly::{monomials_of_degree, Monomial, Polynomial, TriDegree};

use super::piece::QuotientPiece;
use super::GradedModel;

/// State of one bidegree of `DR_n`.
#[derive(Clone, Debug)]
pub enum Piece {
    /// Relations span the whole ambient piece.
    Full,
    Partial(QuotientPiece),
}

impl Piece {
    pub fn dim(&self) -> usize {
        match self {
            Piece::Full => 0,
            Piece::Partial(q) => q.dim(),
        }
    }

    pub fn as_partial(&self) -> Option<&QuotientPiece> {
        match self {
            Piece::Full => None,
            Piece::Partial(q) => Some(q),
        }
    }
}

/// `DR_n = ℚ[x, y] / ⟨p_{a,b} : 1 ≤ a + b ≤ n⟩`, built bidegree by bidegree.
///
/// Each relation piece is `Σ_v v · I_lower + ℚ p_{a,b}`; once a lower piece
/// is entirely relations, so is everything above it in that direction.
#[derive(Clone, Debug)]
pub struct Coinvariants {
    n: usize,
    pieces: BTreeMap<(usize, usize), Piece>,
    max_total: usize,
}

impl Coinvariants {
    pub fn build(n: usize, exec: Exec) -> Self {
        assert!(n >= 1, "n must be positive");
        let bound = n * (n - 1);
        let mut pieces: BTreeMap<(usize, usize), Piece> = BTreeMap::new();
        let mut vanished = 0;
        let mut total = 0;
        loop {
            let bidegrees: Vec<(usize, usize)> =
                (0..=total).rev().map(|a| (a, total - a)).collect();
            let built = exec.map(bidegrees.clone(), |(a, b)| build_piece(n, a, b, &pieces));
            let all_full = built.iter().all(|p| matches!(p, Piece::Full));
            pieces.extend(bidegrees.into_iter().zip(built));
            vanished = if all_full { vanished + 1 } else { 0 };
            if total >= bound && vanished >= 2 {
                break;
            }
            total += 1;
        }
        Coinvariants {
            n,
            pieces,
            max_total: total,
        }
    }

    /// Reassembles from stored relation RREFs (`None` entries are full pieces).
    pub fn from_relations(
        n: usize,
        max_total: usize,
        rels: BTreeMap<(usize, usize), Option<Rref>>,
    ) -> Self {
        let pieces = rels
            .into_iter()
            .map(|((a, b), r)| {
                let piece = match r {
                    None => Piece::Full,
                    Some(r) => {
                        let d = TriDegree::bi(a, b);
                        Piece::Partial(QuotientPiece::new(d, monomials_of_degree(n, d), r))
                    }
                };
                ((a, b), piece)
            })
            .collect();
        Coinvariants {
            n,
            pieces,
            max_total,
        }
    }

    /// Relation RREFs per bidegree, `None` for full pieces.
    pub fn relations(&self) -> BTreeMap<(usize, usize), Option<&Rref>> {
        self.pieces
            .iter()
            .map(|(k, p)| (*k, p.as_partial().map(QuotientPiece::relations)))
            .collect()
    }

    /// Largest total degree that was computed explicitly; every piece
    /// beyond it is zero.
    pub fn max_total(&self) -> usize {
        self.max_total
    }

    pub fn piece(&self, a: usize, b: usize) -> Option<&QuotientPiece> {
        self.pieces.get(&(a, b)).and_then(Piece::as_partial)
    }

    pub fn nf_monomial(&self, m: &Monomial) -> SparseVec {
        let d = m.degree();
        match self.piece(d.dx, d.dy) {
            Some(q) => q.nf_of(m).cloned().unwrap_or_default(),
            None => SparseVec::new(),
        }
    }

    /// Highest total degree with a nonzero piece.
    pub fn top_degree(&self) -> usize {
        self.pieces
            .iter()
            .filter(|(_, p)| p.dim() > 0)
            .map(|((a, b), _)| a + b)
            .max()
            .unwrap_or(0)
    }
}

fn build_piece(n: usize, a: usize, b: usize, lower: &BTreeMap<(usize, usize), Piece>) -> Piece {
    let d = TriDegree::bi(a, b);
    if a == 0 && b == 0 {
        let rref = Echelon::new(1).into_rref();
        return Piece::Partial(QuotientPiece::new(d, vec![Monomial::one()], rref));
    }
    let below_x = (a > 0).then(|| &lower[&(a - 1, b)]);
    let below_y = (b > 0).then(|| &lower[&(a, b - 1)]);
    if [below_x, below_y]
        .into_iter()
        .flatten()
        .any(|p| matches!(p, Piece::Full))
    {
        return Piece::Full;
    }
    let monomials = monomials_of_degree(n, d);
    let index: FxHashMap<Monomial, usize> =
        monomials.iter().enumerate().map(|(i, m)| (*m, i)).collect();
    let mut rows: Vec<SparseVec> = Vec::new();
    for (below, is_x) in [(below_x, true), (below_y, false)] {
        let Some(Piece::Partial(q)) = below else {
            continue;
        };
        for i in 0..n {
            let map: Vec<usize> = q
                .monomials()
                .iter()
                .map(|m| {
                    let mut m = *m;
                    if is_x {
                        m.set_x(i, m.x_exp(i) + 1);
                    } else {
                        m.set_y(i, m.y_exp(i) + 1);
                    }
                    index[&m]
                })
                .collect();
            for r in q.relations().rows() {
                rows.push(r.remap(|j| Some(map[j])));
            }
        }
    }
    if a + b <= n {
        let p = Polynomial::power_sum(n, a as u8, b as u8);
        rows.push(
            p.coords_in(&index)
                .expect("power sum has the piece's degree"),
        );
    }
    let rref = crate::linalg::rref_rows(&rows, monomials.len());
    if rref.rank() == monomials.len() {
        Piece::Full
    } else {
        Piece::Partial(QuotientPiece::new(d, monomials, rref))
    }
}

impl GradedModel for Coinvariants {
    fn n(&self) -> usize {
        self.n
    }

    fn name(&self) -> String {
        format!("DR_{}", self.n)
    }

    fn degrees(&self) -> Vec<TriDegree> {
        self.pieces
            .iter()
            .filter(|(_, p)| p.dim() > 0)
            .map(|((a, b), _)| TriDegree::bi(*a, *b))
            .collect()
    }

    fn dim(&self, d: TriDegree) -> usize {
        if d.da != 0 {
            return 0;
        }
        self.piece(d.dx, d.dy).map_or(0, QuotientPiece::dim)
    }

    fn lift(&self, d: TriDegree, coords: &SparseVec) -> Polynomial {
        match self.piece(d.dx, d.dy).filter(|_| d.da == 0) {
            Some(q) => q.lift(self.n, coords),
            None => Polynomial::zero(self.n),
        }
    }

    fn coordinates(&self, d: TriDegree, p: &Polynomial) -> Option<SparseVec> {
        if p.is_zero() {
            return Some(SparseVec::new());
        }
        if p.degree() != Some(d) {
            return None;
        }
        Some(match self.piece(d.dx, d.dy) {
            Some(q) => q.normal_form(p),
            None => SparseVec::new(),
        })
    }

    fn relation_generators(&self, d: TriDegree) -> Vec<Polynomial> {
        match self.pieces.get(&(d.dx, d.dy)) {
            _ if d.da != 0 => vec![],
            Some(Piece::Partial(q)) => q.relation_polynomials(self.n),
            _ => monomials_of_degree(self.n, d)
                .into_iter()
                .map(|m| Polynomial::monomial(self.n, m, 1.into()))
                .collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cases() {
        let dr = Coinvariants::build(2, Exec::Sequential);
        assert_eq!(dr.total_dim(), 3);
        assert_eq!(dr.dim(TriDegree::bi(1, 0)), 1);
        // The (1,1) relations have rank 4 = ambient, leaving nothing.
        assert_eq!(dr.dim(TriDegree::bi(1, 1)), 0);
        assert!(dr.piece(1, 1).is_none());
        assert_eq!(dr.relation_generators(TriDegree::bi(1, 1)).len(), 4);
        let dr3 = Coinvariants::build(3, Exec::Sequential);
        assert_eq!(dr3.total_dim(), 16);
        assert_eq!(dr3.top_degree(), 3);
    }
}
