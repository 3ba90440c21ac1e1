//! Test-side oracles and generators shared by the integration targets.

#![allow(dead_code)]

use harmonica::linalg::{rank, Rational, SparseMatrix};
use harmonica::operators::OperatorSpec;
use harmonica::superpoly::{monomials_of_degree, Monomial, Polynomial, TriDegree};
use num_rational::BigRational;
use num_traits::{One, Zero};
use proptest::prelude::*;
use proptest::test_runner::{Config, RngAlgorithm, TestRng, TestRunner};

/// Determinant by cofactor expansion along the first row, in `num-rational`
/// arithmetic so that no code is shared with the engine.
pub fn det(m: &[Vec<BigRational>]) -> BigRational {
    match m.len() {
        0 => BigRational::one(),
        1 => m[0][0].clone(),
        k => {
            let mut total = BigRational::zero();
            for (j, a) in m[0].iter().enumerate() {
                if a.is_zero() {
                    continue;
                }
                let minor: Vec<Vec<BigRational>> = m[1..]
                    .iter()
                    .map(|row| {
                        row.iter()
                            .enumerate()
                            .filter(|(c, _)| *c != j)
                            .map(|(_, v)| v.clone())
                            .collect()
                    })
                    .collect();
                let term = a * det(&minor);
                if j % 2 == 0 {
                    total += term;
                } else {
                    total -= term;
                }
            }
            debug_assert!(k > 1);
            total
        }
    }
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    if n < k {
        return vec![];
    }
    let mut out = subsets(n - 1, k);
    for mut s in subsets(n - 1, k - 1) {
        s.push(n - 1);
        out.push(s);
    }
    out
}

/// Largest `r` with a nonzero `r × r` minor.
pub fn rank_by_minors(m: &[Vec<i64>]) -> usize {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    for r in (1..=rows.min(cols)).rev() {
        for rs in subsets(rows, r) {
            for cs in subsets(cols, r) {
                let sub: Vec<Vec<BigRational>> = rs
                    .iter()
                    .map(|&i| {
                        cs.iter()
                            .map(|&j| BigRational::from_integer(m[i][j].into()))
                            .collect()
                    })
                    .collect();
                if !det(&sub).is_zero() {
                    return r;
                }
            }
        }
    }
    0
}

/// Small integer matrices, half of them built as a product of two thin
/// factors so that rank-deficient cases are common.
pub fn small_matrix() -> impl Strategy<Value = Vec<Vec<i64>>> {
    (1usize..=5, 1usize..=5, 1usize..=5, any::<bool>()).prop_flat_map(|(r, c, k, low)| {
        let dense = proptest::collection::vec(proptest::collection::vec(-3i64..=3, c), r);
        let left = proptest::collection::vec(proptest::collection::vec(-2i64..=2, k), r);
        let right = proptest::collection::vec(proptest::collection::vec(-2i64..=2, c), k);
        (dense, left, right).prop_map(move |(d, a, b)| {
            if !low {
                return d;
            }
            (0..r)
                .map(|i| {
                    (0..c)
                        .map(|j| (0..k).map(|t| a[i][t] * b[t][j]).sum())
                        .collect()
                })
                .collect()
        })
    })
}

pub fn rank_agrees(m: &[Vec<i64>]) -> Result<(), TestCaseError> {
    let engine = rank(&SparseMatrix::from_i64(m));
    let oracle = rank_by_minors(m);
    prop_assert_eq!(engine, oracle, "matrix {:?}", m);
    Ok(())
}

/// A random homogeneous θ-free polynomial in `n ≤ 3` variable pairs.
#[derive(Clone, Debug)]
pub struct HomPoly {
    pub n: usize,
    pub degree: TriDegree,
    pub poly: Polynomial,
}

pub fn hom_poly(n: usize, degree: TriDegree) -> impl Strategy<Value = Polynomial> {
    let basis = monomials_of_degree(n, degree);
    let len = basis.len();
    proptest::collection::vec((0..len.max(1), -4i64..=4), 1..=4).prop_map(move |terms| {
        let mut p = Polynomial::zero(n);
        if len == 0 {
            return p;
        }
        for (i, c) in terms {
            p.add_term(basis[i], Rational::from(c));
        }
        p
    })
}

pub fn any_hom_poly() -> impl Strategy<Value = HomPoly> {
    (1usize..=3, 0usize..=3, 0usize..=3).prop_flat_map(|(n, dx, dy)| {
        let degree = TriDegree::new(dx, dy, 0);
        hom_poly(n, degree).prop_map(move |poly| HomPoly { n, degree, poly })
    })
}

/// A pair of θ-free polynomials in the same ring, not necessarily homogeneous.
pub fn poly_pair() -> impl Strategy<Value = (Polynomial, Polynomial)> {
    (1usize..=3).prop_flat_map(|n| {
        let one = move || {
            proptest::collection::vec(
                (proptest::collection::vec(0u8..=2, 2 * n), -4i64..=4),
                0..=4,
            )
            .prop_map(move |terms| {
                let mut p = Polynomial::zero(n);
                for (e, c) in terms {
                    let mut m = Monomial::one();
                    for i in 0..n {
                        m.set_x(i, e[i]);
                        m.set_y(i, e[n + i]);
                    }
                    p.add_term(m, Rational::from(c));
                }
                p
            })
        };
        (one(), one())
    })
}

/// Even first-order operators whose Leibniz rule is checked.
pub const DERIVATIONS: [OperatorSpec; 6] = [
    OperatorSpec::E(1),
    OperatorSpec::E(2),
    OperatorSpec::E(3),
    OperatorSpec::F(1),
    OperatorSpec::F(2),
    OperatorSpec::F(3),
];

pub fn leibniz_holds(p: &Polynomial, q: &Polynomial) -> Result<(), TestCaseError> {
    let n = p.n();
    let pq = p.checked_mul(q).expect("θ-free product");
    for spec in DERIVATIONS {
        let op = spec.diffop(n);
        let lhs = op.apply(&pq);
        let mut rhs = op.apply(p).checked_mul(q).expect("θ-free product");
        rhs.add_scaled(
            &Rational::one(),
            &p.checked_mul(&op.apply(q)).expect("θ-free product"),
        );
        prop_assert_eq!(lhs, rhs, "{} on p = {}, q = {}", spec, p, q);
    }
    Ok(())
}

/// `(operator, its adjoint)` pairs under the differentiation pairing.
pub const ADJOINT_PAIRS: [(OperatorSpec, OperatorSpec); 4] = [
    (OperatorSpec::F(1), OperatorSpec::FStar(1)),
    (OperatorSpec::F(2), OperatorSpec::FStar(2)),
    (OperatorSpec::E(1), OperatorSpec::EStar(1)),
    (OperatorSpec::E(2), OperatorSpec::EStar(2)),
];

/// The constant `c` with `⟨A f, g⟩ = c ⟨f, A* g⟩` for all `f` of degree
/// `d`, read off the two bilinear forms on monomial bases; `None` if the
/// forms are not proportional.
pub fn block_constant(
    a: OperatorSpec,
    a_star: OperatorSpec,
    n: usize,
    d: TriDegree,
) -> Option<Rational> {
    let Some(t) = d.shift(a.shift()) else {
        return Some(Rational::zero());
    };
    let (op, adj) = (a.diffop(n), a_star.diffop(n));
    let src = monomials_of_degree(n, d);
    let dst = monomials_of_degree(n, t);
    let form = |f: &dyn Fn(&Polynomial, &Polynomial) -> Rational| {
        let rows: Vec<Vec<Rational>> = src
            .iter()
            .map(|m| {
                let p = Polynomial::monomial(n, *m, Rational::one());
                dst.iter()
                    .map(|b| f(&p, &Polynomial::monomial(n, *b, Rational::one())))
                    .collect()
            })
            .collect();
        SparseMatrix::from_dense(&rows)
    };
    let lhs = form(&|f, g| op.apply(f).pairing(g).unwrap());
    let rhs = form(&|f, g| f.pairing(&adj.apply(g)).unwrap());
    if lhs.is_zero() && rhs.is_zero() {
        return Some(Rational::zero());
    }
    let c = lhs.ratio_to(&rhs)?;
    (!c.is_zero()).then_some(c)
}

pub fn adjunction_holds(f: &HomPoly, g_coeffs: &[i64]) -> Result<(), TestCaseError> {
    let n = f.n;
    for (a, a_star) in ADJOINT_PAIRS {
        let Some(t) = f.degree.shift(a.shift()) else {
            continue;
        };
        let targets = monomials_of_degree(n, t);
        let mut g = Polynomial::zero(n);
        for (m, &c) in targets.iter().zip(g_coeffs.iter().cycle()) {
            g.add_term(*m, Rational::from(c));
        }
        let c = block_constant(a, a_star, n, f.degree);
        prop_assert!(
            c.is_some(),
            "{} and {} are not proportional at {}",
            a,
            a_star,
            f.degree
        );
        let c = c.unwrap();
        let lhs = a.diffop(n).apply(&f.poly).pairing(&g).unwrap();
        let rhs = f.poly.pairing(&a_star.diffop(n).apply(&g)).unwrap();
        prop_assert_eq!(lhs, &c * &rhs, "{} at {}", a, f.degree);
    }
    Ok(())
}

/// A runner with a fixed seed, so acceptance output is reproducible.
pub fn seeded_runner(cases: u32) -> TestRunner {
    let config = Config {
        cases,
        failure_persistence: None,
        ..Config::default()
    };
    TestRunner::new_with_rng(config, TestRng::from_seed(RngAlgorithm::ChaCha, &[7; 32]))
}
