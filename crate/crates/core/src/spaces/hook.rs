use std::sync::Arc;

use crate::linalg::{Rational, SparseVec};
use crate::superpoly::{monomials_of_degree, Monomial, Polynomial, TriDegree};

use super::exterior::ExteriorQuotient;
use super::{Coinvariants, GradedModel};

/// `DR_n ⊗ ∧^• V`, realized as the superalgebra modulo
/// `I ⊗ ∧(θ) + ℚ[x, y] ⊗ ω_0 ∧(θ)`.
///
/// Normal forms factor as (coinvariant normal form) ⊗ (exterior normal
/// form); coordinates are indexed `i * dim Λ_a + j` over pairs of
/// representatives.
#[derive(Clone, Debug)]
pub struct HookAmbient {
    dr: Arc<Coinvariants>,
    ext: ExteriorQuotient,
}

impl HookAmbient {
    pub fn new(dr: Arc<Coinvariants>) -> Self {
        let ext = ExteriorQuotient::new(dr.n());
        HookAmbient { dr, ext }
    }

    pub fn coinvariants(&self) -> &Arc<Coinvariants> {
        &self.dr
    }

    pub fn exterior(&self) -> &ExteriorQuotient {
        &self.ext
    }
}

impl GradedModel for HookAmbient {
    fn n(&self) -> usize {
        self.dr.n()
    }

    fn name(&self) -> String {
        format!("DR_{} (x) ext V", self.n())
    }

    fn degrees(&self) -> Vec<TriDegree> {
        let mut out = Vec::new();
        for d in self.dr.degrees() {
            for k in 0..=self.n() {
                if self.ext.dim(k) > 0 {
                    out.push(TriDegree::new(d.dx, d.dy, k));
                }
            }
        }
        out.sort_unstable();
        out
    }

    fn dim(&self, d: TriDegree) -> usize {
        self.dr.dim(TriDegree::bi(d.dx, d.dy)) * self.ext.dim(d.da)
    }

    fn lift(&self, d: TriDegree, coords: &SparseVec) -> Polynomial {
        let n = self.n();
        let mut p = Polynomial::zero(n);
        let (Some(q), Some(e)) = (self.dr.piece(d.dx, d.dy), self.ext.piece(d.da)) else {
            return p;
        };
        let w = e.dim();
        for (k, c) in coords.iter() {
            let m = q.rep_monomial(k / w);
            let t = e.rep_monomial(k % w);
            p.add_term(m.with_theta_mask(t.theta_mask()), c.clone());
        }
        p
    }

    fn coordinates(&self, d: TriDegree, p: &Polynomial) -> Option<SparseVec> {
        if p.is_zero() {
            return Some(SparseVec::new());
        }
        if p.degree() != Some(d) {
            return None;
        }
        let (Some(q), Some(e)) = (self.dr.piece(d.dx, d.dy), self.ext.piece(d.da)) else {
            return Some(SparseVec::new());
        };
        let w = e.dim();
        let mut acc: Vec<(usize, Rational)> = Vec::new();
        for (m, c) in p.terms() {
            let a = q.nf_of(&m.even_part())?;
            let b = e.nf_of(&Monomial::one().with_theta_mask(m.theta_mask()))?;
            for (i, u) in a.iter() {
                let cu = c * u;
                for (j, v) in b.iter() {
                    acc.push((i * w + j, &cu * v));
                }
            }
        }
        Some(SparseVec::from_entries(acc))
    }

    fn relation_generators(&self, d: TriDegree) -> Vec<Polynomial> {
        let n = self.n();
        let thetas = monomials_of_degree(n, TriDegree::new(0, 0, d.da));
        let mut out = Vec::new();
        for r in self.dr.relation_generators(TriDegree::bi(d.dx, d.dy)) {
            for t in &thetas {
                out.push(&r * &Polynomial::monomial(n, *t, 1.into()));
            }
        }
        if d.da > 0 {
            let omega = Polynomial::omega(n, 0);
            let lower = monomials_of_degree(n, TriDegree::new(d.dx, d.dy, d.da - 1));
            for m in lower {
                out.push(&omega * &Polynomial::monomial(n, m, 1.into()));
            }
        }
        out
    }
}
