use std::collections::BTreeMap;

use rustc_hash::FxHashMap;

use crate::linalg::{kernel_basis, rref_rows, Echelon, Rational, SparseMatrix, SparseVec};
use crate::operators::OperatorSpec;
use crate::par::Exec;
use crate::superpoly::{monomials_of_degree, DiffOperator, Monomial, Polynomial, TriDegree, Var};

use super::GradedSubspace;

/// `DH_n`: the joint kernel of `p_{a,b}(∂_x, ∂_y)`, `1 ≤ a + b ≤ n`, computed
/// bidegree by bidegree until a whole total degree vanishes (after which all
/// higher degrees vanish, since derivatives of harmonics are harmonic).
pub fn harmonics(n: usize, exec: Exec) -> GradedSubspace {
    let mut out = GradedSubspace::new(n, format!("DH_{n}"));
    for total in 0.. {
        let bidegrees: Vec<(usize, usize)> = (0..=total).rev().map(|a| (a, total - a)).collect();
        let kernels = exec.map(bidegrees.clone(), |(a, b)| harmonic_piece(n, a, b));
        if kernels.iter().all(|k| k.is_empty()) {
            break;
        }
        for ((a, b), k) in bidegrees.into_iter().zip(kernels) {
            out.insert_span(TriDegree::bi(a, b), &k);
        }
    }
    out
}

fn harmonic_piece(n: usize, a: usize, b: usize) -> Vec<SparseVec> {
    let monomials = monomials_of_degree(n, TriDegree::bi(a, b));
    let mut columns: Vec<Vec<(usize, Rational)>> = vec![Vec::new(); monomials.len()];
    let mut offset = 0;
    for c in 0..=a.min(n) {
        for e in 0..=b.min(n - c) {
            if c + e == 0 {
                continue;
            }
            let target = monomials_of_degree(n, TriDegree::bi(a - c, b - e));
            let index: FxHashMap<Monomial, usize> =
                target.iter().enumerate().map(|(i, m)| (*m, i)).collect();
            for (j, m) in monomials.iter().enumerate() {
                for i in 0..n {
                    let (ex, ey) = (m.x_exp(i) as usize, m.y_exp(i) as usize);
                    if ex < c || ey < e {
                        continue;
                    }
                    let coef = (ex - c + 1..=ex).chain(ey - e + 1..=ey).product::<usize>();
                    let mut t = *m;
                    t.set_x(i, (ex - c) as u8);
                    t.set_y(i, (ey - e) as u8);
                    columns[j].push((offset + index[&t], Rational::from(coef as i64)));
                }
            }
            offset += target.len();
        }
    }
    let cols: Vec<SparseVec> = columns.into_iter().map(SparseVec::from_entries).collect();
    let m = SparseMatrix::from_columns(&cols, offset);
    let k = kernel_basis(&m);
    rref_rows(&k, monomials.len()).into_rows()
}

/// Monomial index, echelon form and reduced rows of one degree of a span.
type SpanState = (FxHashMap<Monomial, usize>, Echelon, Vec<SparseVec>);

/// Smallest graded subspace containing `seed` and closed under `ops`.
pub fn operator_span(seed: &Polynomial, ops: &[DiffOperator], name: &str) -> GradedSubspace {
    let n = seed.n();
    let mut spans: BTreeMap<TriDegree, SpanState> = BTreeMap::new();
    let mut queue: Vec<Polynomial> = seed
        .degrees()
        .into_iter()
        .map(|d| seed.homogeneous_part(d))
        .collect();
    let mut pending: Vec<Polynomial> = Vec::new();
    while let Some(p) = queue.pop().or_else(|| pending.pop()) {
        let d = p.degree().expect("homogeneous");
        let (index, ech, vecs) = spans.entry(d).or_insert_with(|| {
            let ms = monomials_of_degree(n, d);
            let index = ms.iter().enumerate().map(|(i, m)| (*m, i)).collect();
            (index, Echelon::new(ms.len()), Vec::new())
        });
        let v = p
            .coords_in(index)
            .expect("degree piece contains its monomials");
        if !ech.insert(&v) {
            continue;
        }
        vecs.push(v);
        for op in ops {
            let q = op.apply(&p);
            if !q.is_zero() {
                pending.push(q);
            }
        }
    }
    let mut out = GradedSubspace::new(n, name);
    for (d, (_, _, vecs)) in spans {
        out.insert_span(d, &vecs);
    }
    out
}

/// The orbit of the span of `Δ(x)` under `F_k*` (`k < n`) and `∂_{x_i}`.
pub fn delta_orbit(n: usize, with_partials: bool) -> GradedSubspace {
    let mut ops: Vec<DiffOperator> = (1..n)
        .map(|k| OperatorSpec::FStar(k as u8).diffop(n))
        .collect();
    let name = if with_partials {
        for i in 0..n {
            ops.push(OperatorSpec::PartialX(i).diffop(n));
        }
        "span of Delta(x) under F* and d/dx"
    } else {
        "span of Delta(x) under F*"
    };
    operator_span(&Polynomial::vandermonde(Var::X, n), &ops, name)
}
