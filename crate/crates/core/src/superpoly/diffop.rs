use std::fmt;

use crate::linalg::{Int, Rational};

use super::monomial::{Monomial, Shift, MAX_N};
use super::polynomial::Polynomial;

/// Derivation word `θ*_{i1} … θ*_{ik} ∂_x^α ∂_y^β`; the θ* factors act
/// rightmost first.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Derivation {
    pub dx: [u8; MAX_N],
    pub dy: [u8; MAX_N],
    pub theta: Vec<usize>,
}

impl Derivation {
    pub fn dx(i: usize, k: u8) -> Self {
        let mut d = Derivation::default();
        d.dx[i] = k;
        d
    }

    pub fn dy(i: usize, k: u8) -> Self {
        let mut d = Derivation::default();
        d.dy[i] = k;
        d
    }

    pub fn theta_star(i: usize) -> Self {
        Derivation {
            theta: vec![i],
            ..Default::default()
        }
    }

    fn shift(&self) -> Shift {
        Shift::new(
            -self.dx.iter().map(|&e| e as i64).sum::<i64>(),
            -self.dy.iter().map(|&e| e as i64).sum::<i64>(),
            -(self.theta.len() as i64),
        )
    }

    /// Applies the word to a monomial: `Some((coefficient, result))` or zero.
    fn apply(&self, m: &Monomial) -> Option<(Int, Monomial)> {
        let mut out = *m;
        let mut neg = false;
        for &i in self.theta.iter().rev() {
            if !out.has_theta(i) {
                return None;
            }
            // θ*_i is an odd left derivation: it passes the θ_j with j < i.
            neg ^= (out.theta_mask() & ((1u8 << i) - 1)).count_ones() % 2 == 1;
            out = out.with_theta_mask(out.theta_mask() & !(1 << i));
        }
        let mut c = Int::from(1i64);
        for i in 0..MAX_N {
            for (k, e, set) in [
                (
                    self.dx[i],
                    out.x_exp(i),
                    Monomial::set_x as fn(&mut Monomial, usize, u8),
                ),
                (self.dy[i], out.y_exp(i), Monomial::set_y),
            ] {
                if k == 0 {
                    continue;
                }
                if e < k {
                    return None;
                }
                c = &c * &Int::falling(e as u32, k as u32);
                set(&mut out, i, e - k);
            }
        }
        Some((if neg { -&c } else { c }, out))
    }
}

/// One term `c · m · D` of a differential operator: derivation word `D`
/// followed by left multiplication by the monomial `m`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct OpTerm {
    pub coef: Rational,
    pub mult: Monomial,
    pub deriv: Derivation,
}

impl OpTerm {
    pub fn shift(&self) -> Shift {
        let d = self.mult.degree();
        self.deriv
            .shift()
            .then(Shift::new(d.dx as i64, d.dy as i64, d.da as i64))
    }
}

/// A finite sum of canonical terms, derivations to the right.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DiffOperator {
    n: usize,
    terms: Vec<OpTerm>,
}

impl DiffOperator {
    pub fn zero(n: usize) -> Self {
        DiffOperator { n, terms: vec![] }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> &[OpTerm] {
        &self.terms
    }

    pub fn push(&mut self, coef: Rational, mult: Monomial, deriv: Derivation) {
        if !coef.is_zero() {
            self.terms.push(OpTerm { coef, mult, deriv });
        }
    }

    pub fn with_term(mut self, coef: Rational, mult: Monomial, deriv: Derivation) -> Self {
        self.push(coef, mult, deriv);
        self
    }

    /// Left multiplication by `p`.
    pub fn multiplication(p: &Polynomial) -> Self {
        let mut op = DiffOperator::zero(p.n());
        for (m, c) in p.terms() {
            op.push(c.clone(), *m, Derivation::default());
        }
        op
    }

    pub fn add(&self, other: &DiffOperator) -> DiffOperator {
        assert_eq!(self.n, other.n, "variable counts differ");
        let mut terms = self.terms.clone();
        terms.extend(other.terms.iter().cloned());
        DiffOperator { n: self.n, terms }
    }

    pub fn scale(&self, c: &Rational) -> DiffOperator {
        DiffOperator {
            n: self.n,
            terms: self
                .terms
                .iter()
                .filter(|_| !c.is_zero())
                .map(|t| OpTerm {
                    coef: &t.coef * c,
                    ..t.clone()
                })
                .collect(),
        }
    }

    /// Common degree shift of all terms, or `None` if terms disagree.
    pub fn shift(&self) -> Option<Shift> {
        let mut it = self.terms.iter().map(OpTerm::shift);
        let s = it.next()?;
        it.all(|t| t == s).then_some(s)
    }

    pub fn apply(&self, p: &Polynomial) -> Polynomial {
        assert_eq!(self.n, p.n(), "variable counts differ");
        let mut out = Polynomial::zero(self.n);
        for (m, c) in p.terms() {
            for t in &self.terms {
                let Some((k, dm)) = t.deriv.apply(m) else {
                    continue;
                };
                let Some((neg, rm)) = t.mult.mul(&dm) else {
                    continue;
                };
                let mut v = &(&t.coef * c) * &Rational::from_int(k);
                if neg {
                    v = -v;
                }
                out.add_term(rm, v);
            }
        }
        out
    }
}

impl fmt::Display for DiffOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|t| {
                let mut s = format!("{}*{}", t.coef, t.mult);
                for &i in &t.deriv.theta {
                    s.push_str(&format!("*dth{}", i + 1));
                }
                for (name, exps) in [("dx", &t.deriv.dx), ("dy", &t.deriv.dy)] {
                    for (i, &e) in exps.iter().enumerate() {
                        match e {
                            0 => {}
                            1 => s.push_str(&format!("*{name}{}", i + 1)),
                            _ => s.push_str(&format!("*{name}{}^{e}", i + 1)),
                        }
                    }
                }
                s
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn theta_star_is_odd() {
        let n = 2;
        let w = &Polynomial::theta(n, 0) * &Polynomial::theta(n, 1);
        let d1 = DiffOperator::zero(n).with_term(
            Rational::one(),
            Monomial::one(),
            Derivation::theta_star(0),
        );
        let d2 = DiffOperator::zero(n).with_term(
            Rational::one(),
            Monomial::one(),
            Derivation::theta_star(1),
        );
        assert_eq!(d1.apply(&w), Polynomial::theta(n, 1));
        assert_eq!(d2.apply(&w), -&Polynomial::theta(n, 0));
    }

    #[test]
    fn falling_factorials() {
        let n = 1;
        let p = Polynomial::x(n, 0).pow(3);
        let op =
            DiffOperator::zero(n).with_term(Rational::one(), Monomial::one(), Derivation::dx(0, 2));
        assert_eq!(op.apply(&p), Polynomial::x(n, 0).scale(&Rational::from(6)));
        assert_eq!(op.shift(), Some(Shift::new(-2, 0, 0)));
    }
}
