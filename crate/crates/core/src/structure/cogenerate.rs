use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::{Rational, SparseVec};
use crate::operators::{GradedMap, OperatorSpec};
use crate::par::Exec;
use crate::spaces::GradedModel;
use crate::superpoly::{subsets, Polynomial, TriDegree, Var};

/// An operator `F_1^{e_1} ⋯ F_{n-1}^{e_{n-1}} d_{D_1} ⋯ d_{D_r}` (rightmost
/// factor applied first) with `φ(f) = scalar · [Δ(x)]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Certificate {
    /// `f_exponents[k - 1]` is the exponent of `F_k`.
    pub f_exponents: Vec<usize>,
    /// Indices `N` of the factors `d_N`, in the order written.
    pub d_indices: Vec<u8>,
    pub scalar: Rational,
}

impl fmt::Display for Certificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut factors = Vec::new();
        for (k, &e) in self.f_exponents.iter().enumerate() {
            match e {
                0 => {}
                1 => factors.push(format!("F{}", k + 1)),
                _ => factors.push(format!("F{}^{e}", k + 1)),
            }
        }
        factors.extend(self.d_indices.iter().map(|n| format!("d{n}")));
        if factors.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", factors.join("*"))
        }
    }
}

/// Maps of `F_1..F_{n-1}` and `d_1..d_{n-1}` on a model, with the class of
/// `Δ(x)` as the target of cogeneration searches.
#[derive(Clone, Debug)]
pub struct Cogenerator {
    n: usize,
    f: BTreeMap<u8, GradedMap>,
    d: BTreeMap<u8, GradedMap>,
    delta_degree: TriDegree,
    delta: SparseVec,
}

impl Cogenerator {
    pub fn new(model: &dyn GradedModel, exec: Exec) -> Result<Self> {
        let n = model.n();
        let mut f = BTreeMap::new();
        let mut d = BTreeMap::new();
        for k in 1..n as u8 {
            f.insert(k, GradedMap::of_operator(OperatorSpec::F(k), model, exec)?);
            d.insert(k, GradedMap::of_operator(OperatorSpec::D(k), model, exec)?);
        }
        let vx = Polynomial::vandermonde(Var::X, n);
        let delta_degree = vx.degree().expect("Vandermonde is homogeneous");
        let delta = model
            .coordinates(delta_degree, &vx)
            .filter(|v| !v.is_zero())
            .ok_or_else(|| {
                Error::InvalidArgument(format!("Δ(x) has no nonzero class in {}", model.name()))
            })?;
        Ok(Cogenerator {
            n,
            f,
            d,
            delta_degree,
            delta,
        })
    }

    pub fn delta_degree(&self) -> TriDegree {
        self.delta_degree
    }

    pub fn delta(&self) -> &SparseVec {
        &self.delta
    }

    /// All candidate operators whose degree shift carries `from` to the
    /// degree of `Δ(x)`: the number of F-factors equals the `y`-degree, the
    /// number of d-factors equals the `θ`-degree, and the `x`-degrees add up.
    pub fn candidates(&self, from: TriDegree) -> Vec<(Vec<usize>, Vec<u8>)> {
        let target = self.delta_degree;
        if from.dx > target.dx || target.dy != 0 || target.da != 0 {
            return Vec::new();
        }
        let kinds = self.n.saturating_sub(1);
        let mut out = Vec::new();
        for mask in subsets(kinds, from.da) {
            let ds: Vec<u8> = (0..kinds as u8)
                .filter(|i| mask >> i & 1 == 1)
                .map(|i| i + 1)
                .collect();
            let d_shift: usize = ds.iter().map(|&k| k as usize).sum();
            let Some(rest) = (target.dx - from.dx).checked_sub(d_shift) else {
                continue;
            };
            for e in compositions(from.dy, kinds) {
                let shift: usize = e.iter().enumerate().map(|(k, &c)| (k + 1) * c).sum();
                if shift == rest {
                    out.push((e, ds.clone()));
                }
            }
        }
        out
    }

    /// Applies the operator to `v` at `d`; `None` if it leaves the model.
    pub fn apply(
        &self,
        e: &[usize],
        ds: &[u8],
        d: TriDegree,
        v: &SparseVec,
    ) -> Option<(TriDegree, SparseVec)> {
        let mut cur = (d, v.clone());
        for n in ds.iter().rev() {
            cur = step(&self.d[n], cur)?;
        }
        for (k, &c) in e.iter().enumerate() {
            for _ in 0..c {
                cur = step(&self.f[&(k as u8 + 1)], cur)?;
            }
        }
        Some(cur)
    }

    /// First operator sending the class `v` at `d` to a nonzero multiple of
    /// `[Δ(x)]`. Every candidate with the forced shift is tried, so `None`
    /// means no such monomial operator exists.
    pub fn search(&self, d: TriDegree, v: &SparseVec) -> Result<Option<Certificate>> {
        if v.is_zero() {
            return Err(Error::InvalidArgument(
                "cogeneration search needs a nonzero class".into(),
            ));
        }
        for (e, ds) in self.candidates(d) {
            let Some((t, image)) = self.apply(&e, &ds, d, v) else {
                continue;
            };
            if t != self.delta_degree || image.is_zero() {
                continue;
            }
            if let Some(scalar) = image.ratio_to(&self.delta) {
                return Ok(Some(Certificate {
                    f_exponents: e,
                    d_indices: ds,
                    scalar,
                }));
            }
        }
        Ok(None)
    }
}

fn step(map: &GradedMap, (d, v): (TriDegree, SparseVec)) -> Option<(TriDegree, SparseVec)> {
    let (t, w) = map.apply(d, &v);
    Some((t?, w))
}

/// Vectors of `parts` nonnegative integers summing to `total`, in
/// lexicographically decreasing order.
fn compositions(total: usize, parts: usize) -> Vec<Vec<usize>> {
    if parts == 0 {
        return if total == 0 { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    for first in (0..=total).rev() {
        for mut rest in compositions(total - first, parts - 1) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn compositions_count() {
        assert_eq!(compositions(3, 2).len(), 4);
        assert_eq!(compositions(0, 3), vec![vec![0, 0, 0]]);
        assert!(compositions(2, 0).is_empty());
    }

    #[test]
    fn display() {
        let c = Certificate {
            f_exponents: vec![2, 0, 1],
            d_indices: vec![1, 2],
            scalar: Rational::one(),
        };
        assert_eq!(c.to_string(), "F1^2*F3*d1*d2");
        let one = Certificate {
            f_exponents: vec![0, 0],
            d_indices: vec![],
            scalar: Rational::one(),
        };
        assert_eq!(one.to_string(), "1");
    }
}
