use std::fmt;

use crate::linalg::Rational;
use crate::superpoly::{Derivation, DiffOperator, Monomial, Shift};

/// A named first-order operator on the superalgebra.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum OperatorSpec {
    /// `F_k = Σ x_i^k ∂_{y_i}`
    F(u8),
    /// `E_k = Σ y_i^k ∂_{x_i}`
    E(u8),
    /// `F_k* = Σ y_i ∂_{x_i}^k`
    FStar(u8),
    /// `E_k* = Σ x_i ∂_{y_i}^k`
    EStar(u8),
    /// `d_N = Σ θ_i* x_i^N`
    D(u8),
    /// `d_N* = Σ θ_i ∂_{x_i}^N`
    DStar(u8),
    /// Left multiplication by `ω_N = Σ x_i^N θ_i`.
    Wedge(u8),
    /// `v_{a,b} = Σ (a x_i^{a-1} y_i^b ∂_{y_i} - b x_i^a y_i^{b-1} ∂_{x_i})`
    Hamiltonian(u8, u8),
    PartialX(usize),
    PartialY(usize),
    MulX(usize),
    MulY(usize),
}

impl OperatorSpec {
    pub fn shift(&self) -> Shift {
        let (k, m) = match *self {
            OperatorSpec::F(k)
            | OperatorSpec::E(k)
            | OperatorSpec::FStar(k)
            | OperatorSpec::EStar(k)
            | OperatorSpec::D(k)
            | OperatorSpec::DStar(k)
            | OperatorSpec::Wedge(k) => (k as i64, 0),
            OperatorSpec::Hamiltonian(a, b) => (a as i64, b as i64),
            _ => (0, 0),
        };
        match self {
            OperatorSpec::F(_) => Shift::new(k, -1, 0),
            OperatorSpec::E(_) => Shift::new(-1, k, 0),
            OperatorSpec::FStar(_) => Shift::new(-k, 1, 0),
            OperatorSpec::EStar(_) => Shift::new(1, -k, 0),
            OperatorSpec::D(_) => Shift::new(k, 0, -1),
            OperatorSpec::DStar(_) => Shift::new(-k, 0, 1),
            OperatorSpec::Wedge(_) => Shift::new(k, 0, 1),
            OperatorSpec::Hamiltonian(..) => Shift::new(k - 1, m - 1, 0),
            OperatorSpec::PartialX(_) => Shift::new(-1, 0, 0),
            OperatorSpec::PartialY(_) => Shift::new(0, -1, 0),
            OperatorSpec::MulX(_) => Shift::new(1, 0, 0),
            OperatorSpec::MulY(_) => Shift::new(0, 1, 0),
        }
    }

    /// Whether the operator is odd (changes θ-degree).
    pub fn is_odd(&self) -> bool {
        self.shift().da != 0
    }

    pub fn diffop(&self, n: usize) -> DiffOperator {
        let mut op = DiffOperator::zero(n);
        let one = Rational::one();
        let pow = |x: bool, i: usize, e: u8| {
            let mut m = Monomial::one();
            if x {
                m.set_x(i, e);
            } else {
                m.set_y(i, e);
            }
            m
        };
        for i in 0..n {
            match *self {
                OperatorSpec::F(k) => op.push(one.clone(), pow(true, i, k), Derivation::dy(i, 1)),
                OperatorSpec::E(k) => op.push(one.clone(), pow(false, i, k), Derivation::dx(i, 1)),
                OperatorSpec::FStar(k) => {
                    op.push(one.clone(), pow(false, i, 1), Derivation::dx(i, k))
                }
                OperatorSpec::EStar(k) => {
                    op.push(one.clone(), pow(true, i, 1), Derivation::dy(i, k))
                }
                OperatorSpec::D(k) => {
                    op.push(one.clone(), pow(true, i, k), Derivation::theta_star(i))
                }
                OperatorSpec::DStar(k) => {
                    op.push(one.clone(), Monomial::theta(i), Derivation::dx(i, k))
                }
                OperatorSpec::Wedge(k) => {
                    let m = pow(true, i, k).with_theta_mask(1 << i);
                    op.push(one.clone(), m, Derivation::default());
                }
                OperatorSpec::Hamiltonian(a, b) => {
                    if a > 0 {
                        let mut m = pow(true, i, a - 1);
                        m.set_y(i, b);
                        op.push(Rational::from(a as i64), m, Derivation::dy(i, 1));
                    }
                    if b > 0 {
                        let mut m = pow(true, i, a);
                        m.set_y(i, b - 1);
                        op.push(Rational::from(-(b as i64)), m, Derivation::dx(i, 1));
                    }
                }
                OperatorSpec::PartialX(j) if j == i => {
                    op.push(one.clone(), Monomial::one(), Derivation::dx(i, 1))
                }
                OperatorSpec::PartialY(j) if j == i => {
                    op.push(one.clone(), Monomial::one(), Derivation::dy(i, 1))
                }
                OperatorSpec::MulX(j) if j == i => {
                    op.push(one.clone(), Monomial::x(i), Derivation::default())
                }
                OperatorSpec::MulY(j) if j == i => {
                    op.push(one.clone(), Monomial::y(i), Derivation::default())
                }
                _ => {}
            }
        }
        op
    }
}

impl fmt::Display for OperatorSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OperatorSpec::F(k) => write!(f, "F{k}"),
            OperatorSpec::E(k) => write!(f, "E{k}"),
            OperatorSpec::FStar(k) => write!(f, "F{k}*"),
            OperatorSpec::EStar(k) => write!(f, "E{k}*"),
            OperatorSpec::D(k) => write!(f, "d{k}"),
            OperatorSpec::DStar(k) => write!(f, "d{k}*"),
            OperatorSpec::Wedge(k) => write!(f, "w{k}"),
            OperatorSpec::Hamiltonian(a, b) => write!(f, "v({a},{b})"),
            OperatorSpec::PartialX(i) => write!(f, "dx{}", i + 1),
            OperatorSpec::PartialY(i) => write!(f, "dy{}", i + 1),
            OperatorSpec::MulX(i) => write!(f, "x{}", i + 1),
            OperatorSpec::MulY(i) => write!(f, "y{}", i + 1),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::superpoly::Polynomial;

    #[test]
    fn examples() {
        let n = 2;
        let y1 = Polynomial::y(n, 0);
        let x1 = Polynomial::x(n, 0);
        assert_eq!(OperatorSpec::F(1).diffop(n).apply(&y1), x1);
        assert_eq!(
            OperatorSpec::D(1).diffop(n).apply(&Polynomial::theta(n, 0)),
            x1
        );
        assert_eq!(OperatorSpec::Hamiltonian(1, 1).diffop(n).apply(&x1), -&x1);
        for spec in [
            OperatorSpec::F(2),
            OperatorSpec::E(3),
            OperatorSpec::FStar(2),
            OperatorSpec::D(2),
            OperatorSpec::DStar(1),
            OperatorSpec::Wedge(2),
            OperatorSpec::Hamiltonian(2, 1),
        ] {
            assert_eq!(spec.diffop(3).shift(), Some(spec.shift()), "{spec}");
        }
    }
}
