mod common;

use common::*;
use harmonica::linalg::{kernel_basis, rref, Rational, SparseMatrix};
use harmonica::superpoly::{Permutation, Polynomial};
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn rref_rank_matches_minors(m in small_matrix()) {
        rank_agrees(&m)?;
    }

    #[test]
    fn kernel_vectors_are_annihilated(m in small_matrix()) {
        let a = SparseMatrix::from_i64(&m);
        let kernel = kernel_basis(&a);
        prop_assert_eq!(kernel.len() + rref(&a).rank(), a.cols());
        for v in &kernel {
            prop_assert!(a.mul_vec(v).is_zero());
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn tautological_operators_are_derivations((p, q) in poly_pair()) {
        leibniz_holds(&p, &q)?;
    }

    #[test]
    fn adjoints_are_proportional(f in any_hom_poly(), g in proptest::collection::vec(-3i64..=3, 1..6)) {
        adjunction_holds(&f, &g)?;
    }

    #[test]
    fn pairing_is_symmetric(f in any_hom_poly(), g in any_hom_poly()) {
        prop_assume!(f.n == g.n);
        prop_assert_eq!(f.poly.pairing(&g.poly).unwrap(), g.poly.pairing(&f.poly).unwrap());
    }

    #[test]
    fn antisymmetrizer_is_a_projection(f in any_hom_poly()) {
        let a = f.poly.alt();
        prop_assert_eq!(a.alt(), a.clone());
        for sigma in Permutation::all(f.n) {
            let expected = a.scale(&Rational::from(sigma.sign()));
            prop_assert_eq!(a.act(&sigma), expected);
        }
    }

    #[test]
    fn swap_is_an_involution((p, q) in poly_pair()) {
        prop_assert_eq!(p.swap_xy().swap_xy(), p.clone());
        let pq: Polynomial = p.checked_mul(&q).unwrap();
        prop_assert_eq!(pq.swap_xy(), p.swap_xy().checked_mul(&q.swap_xy()).unwrap());
    }
}

#[test]
fn minor_oracle_on_known_matrices() {
    assert_eq!(rank_by_minors(&[vec![1, 2], vec![2, 4]]), 1);
    assert_eq!(rank_by_minors(&[vec![0, 0, 0]]), 0);
    assert_eq!(
        rank_by_minors(&[vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]]),
        3
    );
    assert_eq!(
        rank_by_minors(&[vec![1, 2, 3], vec![4, 5, 6], vec![7, 8, 9]]),
        2
    );
}

#[test]
fn standard_pairing_makes_the_adjoint_exact() {
    use harmonica::superpoly::TriDegree;
    for n in 1..=3 {
        for (a, b) in ADJOINT_PAIRS {
            for dx in 0..=3 {
                for dy in 0..=3 {
                    let c = block_constant(a, b, n, TriDegree::new(dx, dy, 0)).unwrap();
                    assert!(
                        c.is_zero() || c == Rational::one(),
                        "{a} at ({dx},{dy}): {c}"
                    );
                }
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    /// The bracket on raw polynomials, including `v(1,0)` and `v(0,1)`,
    /// which are not defined on the quotient models.
    #[test]
    fn hamiltonian_bracket_on_polynomials(
        (p, _) in poly_pair(),
        (a, b, c, d) in (0u8..=3, 0u8..=3, 0u8..=3, 0u8..=3),
    ) {
        use harmonica::operators::OperatorSpec::Hamiltonian;
        let n = p.n();
        let (u, v) = (Hamiltonian(a, b).diffop(n), Hamiltonian(c, d).diffop(n));
        let mut lhs = u.apply(&v.apply(&p));
        lhs.add_scaled(&-Rational::one(), &v.apply(&u.apply(&p)));
        let coef = a as i64 * d as i64 - b as i64 * c as i64;
        let rhs = if coef == 0 {
            Polynomial::zero(n)
        } else {
            Hamiltonian(a + c - 1, b + d - 1).diffop(n).apply(&p).scale(&Rational::from(coef))
        };
        prop_assert_eq!(lhs, rhs);
    }
}
