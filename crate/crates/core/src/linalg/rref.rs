//! Row reduction over the rationals.
//!
//! The forward pass works on primitive integer rows and only ever clears the
//! leading entry (`row <- (a/g) row - (b/g) pivot`), so entries stay integral
//! and small. Back-substitution then switches to rationals to produce the
//! monic reduced form.

use rustc_hash::FxHashMap;

use super::rational::Int;
use super::{Rational, SparseMatrix, SparseVec};

type IntRow = Vec<(usize, Int)>;

fn to_int_row(v: &SparseVec) -> IntRow {
    let mut lcm = Int::from(1i64);
    for (_, x) in v.iter() {
        let d = x.denom();
        if !d.is_one() {
            let g = lcm.gcd(d);
            lcm = &lcm.div_exact(&g) * d;
        }
    }
    let mut row: IntRow = v
        .iter()
        .map(|(i, x)| (*i, &x.numer().clone() * &lcm.div_exact(x.denom())))
        .collect();
    make_primitive(&mut row);
    row
}

/// Divides out the content and makes the leading entry positive.
fn make_primitive(row: &mut IntRow) {
    let Some((_, lead)) = row.first() else {
        return;
    };
    let negate = lead.is_negative();
    let mut g = Int::from(0i64);
    for (_, x) in row.iter() {
        g = g.gcd(x);
        if g.is_one() {
            break;
        }
    }
    if g.is_one() && !negate {
        return;
    }
    let g = if negate { -&g } else { g };
    for (_, x) in row.iter_mut() {
        *x = x.div_exact(&g);
    }
}

/// `ma * row - mb * pivot`, with the leading entries cancelling.
fn eliminate(row: &IntRow, pivot: &IntRow) -> IntRow {
    let a = &pivot[0].1;
    let b = &row[0].1;
    let g = a.gcd(b);
    let ma = a.div_exact(&g);
    let mb = b.div_exact(&g);
    let mut out = Vec::with_capacity(row.len() + pivot.len());
    let (mut i, mut j) = (1, 1);
    while i < row.len() || j < pivot.len() {
        if j == pivot.len() || (i < row.len() && row[i].0 < pivot[j].0) {
            out.push((row[i].0, &ma * &row[i].1));
            i += 1;
        } else if i == row.len() || pivot[j].0 < row[i].0 {
            out.push((pivot[j].0, -&(&mb * &pivot[j].1)));
            j += 1;
        } else {
            let v = &(&ma * &row[i].1) - &(&mb * &pivot[j].1);
            if !v.is_zero() {
                out.push((row[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    make_primitive(&mut out);
    out
}

/// Incremental echelon form: rows keyed by their leading column.
#[derive(Clone, Debug, Default)]
pub struct Echelon {
    cols: usize,
    rows: FxHashMap<usize, IntRow>,
}

impl Echelon {
    pub fn new(cols: usize) -> Self {
        Echelon {
            cols,
            rows: FxHashMap::default(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    fn reduce_int(&self, mut row: IntRow) -> IntRow {
        while let Some((lead, _)) = row.first() {
            match self.rows.get(lead) {
                Some(p) => row = eliminate(&row, p),
                None => break,
            }
        }
        row
    }

    /// Adds `v` to the span; returns `true` if it was independent.
    pub fn insert(&mut self, v: &SparseVec) -> bool {
        debug_assert!(v.max_index().is_none_or(|m| m < self.cols));
        let row = self.reduce_int(to_int_row(v));
        match row.first() {
            Some((lead, _)) => {
                self.rows.insert(*lead, row);
                true
            }
            None => false,
        }
    }

    pub fn contains(&self, v: &SparseVec) -> bool {
        self.reduce_int(to_int_row(v)).is_empty()
    }

    /// Completes the reduction to the unique RREF.
    pub fn into_rref(self) -> Rref {
        let mut pivots: Vec<usize> = self.rows.keys().copied().collect();
        pivots.sort_unstable();
        let mut reduced: FxHashMap<usize, SparseVec> = FxHashMap::default();
        for &p in pivots.iter().rev() {
            let row = &self.rows[&p];
            let lead = Rational::from_int(row[0].1.clone());
            let mut out = SparseVec::from_sorted_unchecked(
                row.iter()
                    .map(|(c, x)| (*c, &Rational::from_int(x.clone()) / &lead))
                    .collect(),
            );
            for (c, x) in row.iter().skip(1) {
                if let Some(r) = reduced.get(c) {
                    let coef = -&(&Rational::from_int(x.clone()) / &lead);
                    out = out.add_scaled(&coef, r);
                }
            }
            reduced.insert(p, out);
        }
        let rows = pivots.iter().map(|p| reduced.remove(p).unwrap()).collect();
        Rref {
            cols: self.cols,
            pivots,
            rows,
        }
    }
}

/// Reduced row echelon form: monic rows, zero above and below each pivot.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rref {
    cols: usize,
    pivots: Vec<usize>,
    rows: Vec<SparseVec>,
}

impl Rref {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn rows(&self) -> &[SparseVec] {
        &self.rows
    }

    pub fn into_rows(self) -> Vec<SparseVec> {
        self.rows
    }

    /// Builds directly from rows already known to be in RREF (cache loads).
    pub fn from_reduced_rows(rows: Vec<SparseVec>, cols: usize) -> Option<Rref> {
        let pivots: Vec<usize> = rows
            .iter()
            .map(|r| r.leading().map(|e| e.0))
            .collect::<Option<_>>()?;
        let ok = pivots.windows(2).all(|w| w[0] < w[1])
            && rows.iter().zip(&pivots).all(|(r, p)| {
                r.get(*p).is_one()
                    && r.max_index().is_none_or(|m| m < cols)
                    && pivots.iter().all(|q| q == p || r.get(*q).is_zero())
            });
        ok.then_some(Rref { cols, pivots, rows })
    }

    pub fn matrix(&self) -> SparseMatrix {
        SparseMatrix::from_rows(self.rows.clone(), self.cols)
    }

    pub fn free_columns(&self) -> Vec<usize> {
        let mut it = self.pivots.iter().peekable();
        (0..self.cols)
            .filter(|c| {
                if it.peek() == Some(&c) {
                    it.next();
                    false
                } else {
                    true
                }
            })
            .collect()
    }

    /// Coefficients of `v` in terms of the RREF rows, if `v` is in their span.
    pub fn coordinates(&self, v: &SparseVec) -> Option<SparseVec> {
        let mut residual = v.clone();
        let mut coords = Vec::new();
        for (i, (p, row)) in self.pivots.iter().zip(&self.rows).enumerate() {
            let c = residual.get(*p);
            if !c.is_zero() {
                residual = residual.add_scaled(&-&c, row);
                coords.push((i, c));
            }
        }
        residual
            .is_zero()
            .then(|| SparseVec::from_sorted_unchecked(coords))
    }

    pub fn contains(&self, v: &SparseVec) -> bool {
        self.coordinates(v).is_some()
    }

    /// `v` minus its projection along pivot columns; zero iff `v` is in the span.
    pub fn reduce(&self, v: &SparseVec) -> SparseVec {
        let mut residual = v.clone();
        for (p, row) in self.pivots.iter().zip(&self.rows) {
            let c = residual.get(*p);
            if !c.is_zero() {
                residual = residual.add_scaled(&-&c, row);
            }
        }
        residual
    }
}

/// RREF of the span of `rows` (vectors of length `cols`).
pub fn rref_rows(rows: &[SparseVec], cols: usize) -> Rref {
    let mut order: Vec<usize> = (0..rows.len()).collect();
    order.sort_by_key(|&i| (rows[i].nnz(), i));
    let mut ech = Echelon::new(cols);
    for i in order {
        if ech.rank() == cols {
            break;
        }
        ech.insert(&rows[i]);
    }
    ech.into_rref()
}

pub fn rref(m: &SparseMatrix) -> Rref {
    rref_rows(m.row_vectors(), m.cols())
}

pub fn rank(m: &SparseMatrix) -> usize {
    rref(m).rank()
}

/// Basis of the right null space, one vector per free column.
pub fn kernel_basis(m: &SparseMatrix) -> Vec<SparseVec> {
    let r = rref(m);
    r.free_columns()
        .into_iter()
        .map(|f| {
            let mut entries = vec![(f, Rational::one())];
            for (p, row) in r.pivots().iter().zip(r.rows()) {
                let x = row.get(f);
                if !x.is_zero() {
                    entries.push((*p, -x));
                }
            }
            SparseVec::from_entries(entries)
        })
        .collect()
}

/// Inverse of a square matrix, or `None` if it is singular.
pub fn inverse(m: &SparseMatrix) -> Option<SparseMatrix> {
    let k = m.rows();
    assert_eq!(k, m.cols(), "inverse of a non-square matrix");
    let aug: Vec<SparseVec> = (0..k)
        .map(|i| m.row(i).add(&SparseVec::unit(k + i)))
        .collect();
    let r = rref_rows(&aug, 2 * k);
    if r.rank() != k || r.pivots().last().is_some_and(|&p| p >= k) {
        return None;
    }
    let rows = r
        .rows()
        .iter()
        .map(|row| row.remap(|c| c.checked_sub(k)))
        .collect();
    Some(SparseMatrix::from_rows(rows, k))
}

/// Solves `span · c = v` where the columns of `span` are the spanning vectors.
/// Returns `None` when `v` is not in the column span.
pub fn membership(v: &SparseVec, span: &SparseMatrix) -> Option<SparseVec> {
    assert!(
        v.max_index().is_none_or(|m| m < span.rows()),
        "vector length exceeds span dimension"
    );
    let k = span.cols();
    let aug: Vec<SparseVec> = span
        .row_vectors()
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let x = v.get(i);
            if x.is_zero() {
                row.clone()
            } else {
                row.add(&SparseVec::from_sorted_unchecked(vec![(k, x)]))
            }
        })
        .collect();
    let r = rref_rows(&aug, k + 1);
    if r.pivots().last() == Some(&k) {
        return None;
    }
    Some(SparseVec::from_entries(
        r.pivots()
            .iter()
            .zip(r.rows())
            .map(|(p, row)| (*p, row.get(k)))
            .collect(),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[Vec<i64>]) -> SparseMatrix {
        SparseMatrix::from_i64(rows)
    }

    #[test]
    fn proportional_rows() {
        let r = rref(&m(&[vec![1, 2], vec![2, 4]]));
        assert_eq!(r.rank(), 1);
        assert_eq!(r.pivots(), &[0]);
        assert_eq!(r.matrix(), m(&[vec![1, 2]]));
    }

    #[test]
    fn inverse_of_small_matrix() {
        let a = m(&[vec![2, 1], vec![1, 1]]);
        let inv = inverse(&a).unwrap();
        assert_eq!(inv, m(&[vec![1, -1], vec![-1, 2]]));
        assert_eq!(a.mul(&inv), SparseMatrix::identity(2));
        assert!(inverse(&m(&[vec![1, 2], vec![2, 4]])).is_none());
        assert_eq!(
            inverse(&SparseMatrix::zeros(0, 0)),
            Some(SparseMatrix::zeros(0, 0))
        );
    }

    #[test]
    fn identity_is_fixed() {
        let id = SparseMatrix::identity(3);
        let r = rref(&id);
        assert_eq!(r.rank(), 3);
        assert_eq!(r.matrix(), id);
    }

    #[test]
    fn back_substitution() {
        let r = rref(&m(&[vec![1, 1, 0], vec![0, 1, 1]]));
        assert_eq!(r.pivots(), &[0, 1]);
        assert_eq!(r.matrix(), m(&[vec![1, 0, -1], vec![0, 1, 1]]));
    }

    #[test]
    fn empty_matrix() {
        let r = rref(&SparseMatrix::zeros(0, 4));
        assert_eq!(r.rank(), 0);
        assert_eq!(r.free_columns(), vec![0, 1, 2, 3]);
    }

    #[test]
    fn kernels() {
        let k = kernel_basis(&m(&[vec![1, 1]]));
        assert_eq!(k.len(), 1);
        assert_eq!(k[0].to_dense(2), vec![Rational::from(-1), Rational::one()]);
        assert!(kernel_basis(&SparseMatrix::identity(2)).is_empty());
        let a = m(&[vec![1, 2], vec![2, 4]]);
        let k = kernel_basis(&a);
        assert_eq!(k.len(), 1);
        assert!(a.mul_vec(&k[0]).is_zero());
        assert_eq!(k[0].get(0), Rational::from(-2));
    }

    #[test]
    fn membership_examples() {
        let id = SparseMatrix::identity(2);
        let v = SparseVec::from_dense(&[Rational::one(), Rational::one()]);
        assert_eq!(membership(&v, &id), Some(v.clone()));
        assert_eq!(membership(&SparseVec::new(), &id), Some(SparseVec::new()));
        let span = SparseMatrix::from_columns(&[SparseVec::unit(1)], 2);
        assert_eq!(membership(&SparseVec::unit(0), &span), None);
    }

    #[test]
    fn fractional_input() {
        let half = Rational::ratio(1, 2);
        let third = Rational::ratio(1, 3);
        let a = SparseMatrix::from_dense(&[vec![half.clone(), third.clone()], vec![third, half]]);
        assert_eq!(rref(&a).matrix(), SparseMatrix::identity(2));
    }

    #[test]
    fn incremental_echelon() {
        let mut e = Echelon::new(3);
        assert!(e.insert(&SparseVec::from_dense(&[1.into(), 1.into(), 0.into()])));
        assert!(!e.insert(&SparseVec::from_dense(&[2.into(), 2.into(), 0.into()])));
        assert!(e.contains(&SparseVec::new()));
        assert!(!e.contains(&SparseVec::unit(2)));
        assert_eq!(e.rank(), 1);
    }
}
