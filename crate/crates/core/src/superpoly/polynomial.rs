use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::linalg::{Int, Rational, SparseVec};

use super::monomial::{Monomial, TriDegree, MAX_N};
use super::perm::Permutation;

/// Which family of even variables.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Var {
    X,
    Y,
}

/// An element of `ℚ[x_1..x_n, y_1..y_n] ⊗ ∧(θ_1..θ_n)`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    n: usize,
    terms: BTreeMap<Monomial, Rational>,
}

impl Polynomial {
    pub fn zero(n: usize) -> Self {
        assert!(n <= MAX_N, "at most {MAX_N} variables are supported");
        Polynomial {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(n: usize, c: Rational) -> Self {
        Self::monomial(n, Monomial::one(), c)
    }

    pub fn one(n: usize) -> Self {
        Self::constant(n, Rational::one())
    }

    pub fn monomial(n: usize, m: Monomial, c: Rational) -> Self {
        assert!(m.span() <= n, "monomial {m} uses more than {n} variables");
        let mut p = Self::zero(n);
        p.add_term(m, c);
        p
    }

    pub fn x(n: usize, i: usize) -> Self {
        Self::monomial(n, Monomial::x(i), Rational::one())
    }

    pub fn y(n: usize, i: usize) -> Self {
        Self::monomial(n, Monomial::y(i), Rational::one())
    }

    pub fn var(n: usize, v: Var, i: usize) -> Self {
        match v {
            Var::X => Self::x(n, i),
            Var::Y => Self::y(n, i),
        }
    }

    pub fn theta(n: usize, i: usize) -> Self {
        Self::monomial(n, Monomial::theta(i), Rational::one())
    }

    /// `Σ c_j m_j` from coordinates over a list of monomials.
    pub fn from_coords(n: usize, basis: &[Monomial], coords: &SparseVec) -> Self {
        let mut p = Self::zero(n);
        for (j, c) in coords.iter() {
            p.add_term(basis[*j], c.clone());
        }
        p
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    /// Terms in increasing monomial order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn leading(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.iter().next_back()
    }

    pub fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        debug_assert!(m.span() <= self.n);
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += &c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add_scaled(&mut self, c: &Rational, other: &Polynomial) {
        assert_eq!(self.n, other.n, "variable counts differ");
        for (m, v) in &other.terms {
            self.add_term(*m, c * v);
        }
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.n);
        }
        Polynomial {
            n: self.n,
            terms: self.terms.iter().map(|(m, v)| (*m, v * c)).collect(),
        }
    }

    pub fn checked_mul(&self, other: &Polynomial) -> Result<Polynomial> {
        if self.n != other.n {
            return Err(Error::InvalidArgument(format!(
                "cannot multiply polynomials in {} and {} variables",
                self.n, other.n
            )));
        }
        let mut out = Polynomial::zero(self.n);
        for (a, u) in &self.terms {
            for (b, v) in &other.terms {
                if let Some((neg, m)) = a.mul(b) {
                    let c = u * v;
                    out.add_term(m, if neg { -c } else { c });
                }
            }
        }
        Ok(out)
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        (0..e).fold(Polynomial::one(self.n), |acc, _| &acc * self)
    }

    /// The common tri-degree of all terms, or `None` if mixed (or zero).
    pub fn degree(&self) -> Option<TriDegree> {
        let mut it = self.terms.keys().map(Monomial::degree);
        let d = it.next()?;
        it.all(|e| e == d).then_some(d)
    }

    pub fn homogeneous_part(&self, d: TriDegree) -> Polynomial {
        Polynomial {
            n: self.n,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree() == d)
                .map(|(m, v)| (*m, v.clone()))
                .collect(),
        }
    }

    /// Tri-degrees with a nonzero homogeneous part.
    pub fn degrees(&self) -> Vec<TriDegree> {
        let mut ds: Vec<TriDegree> = self.terms.keys().map(Monomial::degree).collect();
        ds.sort_unstable();
        ds.dedup();
        ds
    }

    /// The ring automorphism `x_i -> x_{σ(i)}`, `y_i -> y_{σ(i)}`, `θ_i -> θ_{σ(i)}`.
    pub fn act(&self, sigma: &Permutation) -> Polynomial {
        assert_eq!(sigma.n(), self.n, "permutation size differs from n");
        let mut out = Polynomial::zero(self.n);
        for (m, v) in &self.terms {
            let (neg, pm) = m.permute(sigma.images());
            out.add_term(pm, if neg { -v } else { v.clone() });
        }
        out
    }

    fn average(&self, signed: bool) -> Polynomial {
        let perms = Permutation::all(self.n);
        let mut out = Polynomial::zero(self.n);
        for s in &perms {
            let c = if signed {
                Rational::from(s.sign())
            } else {
                Rational::one()
            };
            out.add_scaled(&c, &self.act(s));
        }
        out.scale(&Rational::from_int(Int::factorial(self.n as u32)).recip())
    }

    /// `(1/n!) Σ sgn(σ) σ·p`.
    pub fn alt(&self) -> Polynomial {
        self.average(true)
    }

    /// `(1/n!) Σ σ·p`.
    pub fn sym(&self) -> Polynomial {
        self.average(false)
    }

    /// Exchanges `x_i` and `y_i` for every `i`.
    pub fn swap_xy(&self) -> Polynomial {
        Polynomial {
            n: self.n,
            terms: self
                .terms
                .iter()
                .map(|(m, v)| (m.swap_xy(), v.clone()))
                .collect(),
        }
    }

    /// `f(∂_x, ∂_y) g |_{x=y=0}` on `ℚ[x, y]`; θ-bearing input is rejected.
    pub fn pairing(&self, other: &Polynomial) -> Result<Rational> {
        if self
            .terms
            .keys()
            .chain(other.terms.keys())
            .any(|m| m.theta_mask() != 0)
        {
            return Err(Error::InvalidArgument(
                "pairing is defined on θ-free polynomials; use pairing_extended".into(),
            ));
        }
        Ok(self.pairing_extended(other))
    }

    /// Pairing with `θ_i` acting as `θ_i*` on the left factor, so
    /// `⟨θ_S, θ_S⟩ = (-1)^{k(k-1)/2}` for `|S| = k`.
    pub fn pairing_extended(&self, other: &Polynomial) -> Rational {
        let (small, large) = if self.len() <= other.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut acc = Rational::zero();
        for (m, u) in &small.terms {
            if let Some(v) = large.terms.get(m) {
                let k = m.theta_mask().count_ones();
                let w = Rational::from_int(m.factorial_weight());
                let t = &(u * v) * &w;
                if (k * k.saturating_sub(1) / 2) % 2 == 1 {
                    acc -= &t;
                } else {
                    acc += &t;
                }
            }
        }
        acc
    }

    /// Coordinates over `basis`; `None` if some term is not in the list.
    pub fn coords_in(&self, index: &rustc_hash::FxHashMap<Monomial, usize>) -> Option<SparseVec> {
        let mut entries = Vec::with_capacity(self.len());
        for (m, v) in &self.terms {
            entries.push((*index.get(m)?, v.clone()));
        }
        Some(SparseVec::from_entries(entries))
    }

    /// `∏_{i<j} (v_i - v_j)`.
    pub fn vandermonde(var: Var, n: usize) -> Polynomial {
        let mut p = Polynomial::one(n);
        for i in 0..n {
            for j in i + 1..n {
                p = &p * &(&Polynomial::var(n, var, i) - &Polynomial::var(n, var, j));
            }
        }
        p
    }

    /// Polarized power sum `p_{a,b} = Σ x_i^a y_i^b`.
    pub fn power_sum(n: usize, a: u8, b: u8) -> Polynomial {
        let mut p = Polynomial::zero(n);
        for i in 0..n {
            let mut m = Monomial::one();
            m.set_x(i, a);
            m.set_y(i, b);
            p.add_term(m, Rational::one());
        }
        p
    }

    /// `ω_N = Σ x_i^N θ_i`.
    pub fn omega(n: usize, big_n: u8) -> Polynomial {
        let mut p = Polynomial::zero(n);
        for i in 0..n {
            let mut m = Monomial::theta(i);
            m.set_x(i, big_n);
            p.add_term(m, Rational::one());
        }
        p
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Polynomial {
    /// Terms from largest to smallest monomial, e.g. `x1^2 - 1/2*x2*th1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.signum() < 0;
            match (k, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let a = c.abs();
            if *m == Monomial::one() {
                write!(f, "{a}")?;
            } else if a.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{a}*{m}")?;
            }
        }
        Ok(())
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        out.add_scaled(&Rational::one(), rhs);
        out
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        out.add_scaled(&-Rational::one(), rhs);
        out
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        self.scale(&-Rational::one())
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    /// Panics on mismatched variable counts; see [`Polynomial::checked_mul`].
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.checked_mul(rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(i: usize) -> Polynomial {
        Polynomial::x(2, i)
    }

    #[test]
    fn products() {
        let t1 = Polynomial::theta(2, 0);
        let t2 = Polynomial::theta(2, 1);
        assert_eq!((&t1 * &t2).to_string(), "th1*th2");
        assert_eq!((&t2 * &t1).to_string(), "-th1*th2");
        assert!((&t1 * &t1).is_zero());
        let p = &(&x(0) - &x(1)) * &(&x(0) + &x(1));
        assert_eq!(p.to_string(), "x1^2 - x2^2");
        assert!(Polynomial::x(2, 0)
            .checked_mul(&Polynomial::x(3, 0))
            .is_err());
    }

    #[test]
    fn group_action() {
        let s = Permutation::from_cycles(2, &[&[1, 2]]).unwrap();
        assert_eq!(x(0).act(&s), x(1));
        let w = &Polynomial::theta(2, 0) * &Polynomial::theta(2, 1);
        assert_eq!(w.act(&s), -&w);
        let c = Permutation::from_cycles(3, &[&[1, 2, 3]]).unwrap();
        let p = &Polynomial::x(3, 0) * &Polynomial::y(3, 1);
        assert_eq!(p.act(&c).to_string(), "x2*y3");
    }

    #[test]
    fn projectors() {
        assert_eq!(x(0).alt().to_string(), "1/2*x1 - 1/2*x2");
        assert!((&x(0) * &x(1)).alt().is_zero());
        assert_eq!(x(0).sym().to_string(), "1/2*x1 + 1/2*x2");
    }

    #[test]
    fn pairings() {
        assert_eq!(x(0).pairing(&x(0)).unwrap(), Rational::one());
        let sq = &x(0) * &x(0);
        assert_eq!(sq.pairing(&sq).unwrap(), Rational::from(2));
        let d = Polynomial::vandermonde(Var::X, 2);
        assert_eq!(d.pairing(&d).unwrap(), Rational::from(2));
        assert!(Polynomial::theta(2, 0)
            .pairing(&Polynomial::theta(2, 0))
            .is_err());
        let w = &Polynomial::theta(2, 0) * &Polynomial::theta(2, 1);
        assert_eq!(w.pairing_extended(&w), Rational::from(-1));
    }

    #[test]
    fn vandermondes() {
        assert_eq!(Polynomial::vandermonde(Var::X, 1), Polynomial::one(1));
        assert_eq!(Polynomial::vandermonde(Var::X, 2).to_string(), "x1 - x2");
        let d3 = Polynomial::vandermonde(Var::X, 3);
        assert_eq!(d3.len(), 6);
        assert_eq!(d3.alt(), d3);
        assert_eq!(d3.degree(), Some(TriDegree::bi(3, 0)));
        assert_eq!(
            Polynomial::vandermonde(Var::Y, 3).degree(),
            Some(TriDegree::bi(0, 3))
        );
    }
}
