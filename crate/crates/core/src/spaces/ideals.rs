use crate::par::Exec;
use crate::superpoly::{monomials_of_degree, Polynomial, TriDegree};

use super::{GradedModel, GradedSubspace, HilbertSeries};

/// Which piece of the antisymmetric-ideal family to present.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum IdealFlavor {
    /// `J ⊂ ℚ[x, y]`, generated by antisymmetric polynomials.
    J,
    /// `𝔪J`, spanned by positive-degree monomials times `J`.
    MJ,
    /// `𝒥̄ = 𝒥 / ω_0 𝒥` for the superalgebra ideal `𝒥`.
    JBar,
    /// `𝔪𝒥̄ = (𝔪𝒥 + ω_0 𝒥) / ω_0 𝒥`.
    MJBar,
}

/// `span / modulo`, with `modulo ⊆ span` degree by degree.
#[derive(Clone, Debug)]
pub struct IdealQuotient {
    pub span: GradedSubspace,
    pub modulo: GradedSubspace,
}

impl IdealQuotient {
    pub fn hilbert(&self) -> HilbertSeries {
        HilbertSeries::from_dims(
            self.span
                .degrees()
                .into_iter()
                .map(|d| (d, self.span.dim(d) - self.modulo.dim(d))),
        )
    }
}

/// The superalgebra ideal `𝒥` generated by antisymmetric elements, built as
/// the `ℚ[x, y]`-module they span, together with the subspaces needed for
/// `J/𝔪J` and `𝒥̄/𝔪𝒥̄`. Degrees are computed up to total `x,y`-degree
/// `bound`.
#[derive(Clone, Debug)]
pub struct SuperIdeal {
    n: usize,
    bound: usize,
    ideal: GradedSubspace,
    m_ideal: GradedSubspace,
    omega_ideal: GradedSubspace,
    m_plus_omega: GradedSubspace,
    /// `𝒥 + ω_0 A` and `𝔪𝒥 + ω_0 A`, for the image of `𝒥` in `A / ω_0 A`.
    image: GradedSubspace,
    m_image: GradedSubspace,
    omega_ambient: GradedSubspace,
}

impl SuperIdeal {
    pub fn build(n: usize, bound: usize, exec: Exec) -> Self {
        let mut ideal = GradedSubspace::new(n, "J");
        let mut m_ideal = GradedSubspace::new(n, "mJ");
        for total in 0..=bound {
            let degrees: Vec<TriDegree> = (0..=total)
                .flat_map(|a| (0..=n).map(move |c| TriDegree::new(a, total - a, c)))
                .collect();
            let built = exec.map(degrees.clone(), |d| {
                let lower = lower_products(&ideal, d);
                let mut all = lower.clone();
                for m in monomials_of_degree(n, d) {
                    let g = Polynomial::monomial(n, m, 1.into()).alt();
                    if !g.is_zero() {
                        all.push(g);
                    }
                }
                (lower, all)
            });
            for (d, (lower, all)) in degrees.into_iter().zip(built) {
                m_ideal.insert_polynomials(d, &lower);
                ideal.insert_polynomials(d, &all);
            }
        }
        let omega = Polynomial::omega(n, 0);
        let mut omega_ideal = GradedSubspace::new(n, "w0 J");
        let mut m_plus_omega = GradedSubspace::new(n, "mJ + w0 J");
        let mut image = GradedSubspace::new(n, "J + w0 A");
        let mut m_image = GradedSubspace::new(n, "mJ + w0 A");
        let mut omega_ambient = GradedSubspace::new(n, "w0 A");
        for d in all_degrees(n, bound) {
            let om: Vec<Polynomial> = match d.da {
                0 => vec![],
                _ => ideal
                    .basis(TriDegree::new(d.dx, d.dy, d.da - 1))
                    .iter()
                    .map(|b| &omega * b)
                    .collect(),
            };
            let oa: Vec<Polynomial> = match d.da {
                0 => vec![],
                _ => monomials_of_degree(n, TriDegree::new(d.dx, d.dy, d.da - 1))
                    .into_iter()
                    .map(|m| &omega * &Polynomial::monomial(n, m, 1.into()))
                    .collect(),
            };
            let j = ideal.basis(d);
            let mj = m_ideal.basis(d);
            omega_ideal.insert_polynomials(d, &om);
            m_plus_omega.insert_polynomials(d, &[mj.clone(), om].concat());
            image.insert_polynomials(d, &[j, oa.clone()].concat());
            m_image.insert_polynomials(d, &[mj, oa.clone()].concat());
            omega_ambient.insert_polynomials(d, &oa);
        }
        SuperIdeal {
            n,
            bound,
            ideal,
            m_ideal,
            omega_ideal,
            m_plus_omega,
            image,
            m_image,
            omega_ambient,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn bound(&self) -> usize {
        self.bound
    }

    pub fn ideal(&self) -> &GradedSubspace {
        &self.ideal
    }

    pub fn m_ideal(&self) -> &GradedSubspace {
        &self.m_ideal
    }

    pub fn omega_ideal(&self) -> &GradedSubspace {
        &self.omega_ideal
    }

    /// `J / 𝔪J` (θ-degree 0).
    pub fn j_mod_mj(&self) -> HilbertSeries {
        IdealQuotient {
            span: restrict(&self.ideal, 0),
            modulo: restrict(&self.m_ideal, 0),
        }
        .hilbert()
    }

    /// `𝒥̄ / 𝔪𝒥̄ = 𝒥 / (𝔪𝒥 + ω_0 𝒥)`.
    pub fn jbar_mod_mjbar(&self) -> HilbertSeries {
        IdealQuotient {
            span: self.ideal.clone(),
            modulo: self.m_plus_omega.clone(),
        }
        .hilbert()
    }

    /// The same quotient computed from the image of `𝒥` in `A / ω_0 A`:
    /// `(𝒥 + ω_0 A) / (𝔪𝒥 + ω_0 A)`.
    pub fn jbar_image_mod_mjbar(&self) -> HilbertSeries {
        IdealQuotient {
            span: self.image.clone(),
            modulo: self.m_image.clone(),
        }
        .hilbert()
    }

    pub fn omega_ambient(&self) -> &GradedSubspace {
        &self.omega_ambient
    }

    pub fn presentation(&self, flavor: IdealFlavor) -> IdealQuotient {
        let empty = GradedSubspace::new(self.n, "0");
        match flavor {
            IdealFlavor::J => IdealQuotient {
                span: restrict(&self.ideal, 0),
                modulo: empty,
            },
            IdealFlavor::MJ => IdealQuotient {
                span: restrict(&self.m_ideal, 0),
                modulo: empty,
            },
            IdealFlavor::JBar => IdealQuotient {
                span: self.ideal.clone(),
                modulo: self.omega_ideal.clone(),
            },
            IdealFlavor::MJBar => IdealQuotient {
                span: self.m_plus_omega.clone(),
                modulo: self.omega_ideal.clone(),
            },
        }
    }
}

/// Presentation of one flavor, computed up to total degree `n(n-1)`.
pub fn antisymmetric_ideal(n: usize, flavor: IdealFlavor, exec: Exec) -> IdealQuotient {
    SuperIdeal::build(n, n * (n - 1), exec).presentation(flavor)
}

fn all_degrees(n: usize, bound: usize) -> Vec<TriDegree> {
    (0..=bound)
        .flat_map(|t| (0..=t).flat_map(move |a| (0..=n).map(move |c| TriDegree::new(a, t - a, c))))
        .collect()
}

/// `x_i · S_(a-1,b,c)` and `y_i · S_(a,b-1,c)`.
fn lower_products(s: &GradedSubspace, d: TriDegree) -> Vec<Polynomial> {
    let n = s.n();
    let mut out = Vec::new();
    if d.dx > 0 {
        for b in s.basis(TriDegree::new(d.dx - 1, d.dy, d.da)) {
            out.extend((0..n).map(|i| &Polynomial::x(n, i) * &b));
        }
    }
    if d.dy > 0 {
        for b in s.basis(TriDegree::new(d.dx, d.dy - 1, d.da)) {
            out.extend((0..n).map(|i| &Polynomial::y(n, i) * &b));
        }
    }
    out
}

fn restrict(s: &GradedSubspace, da: usize) -> GradedSubspace {
    let mut out = GradedSubspace::new(s.n(), s.name());
    for d in s.degrees().into_iter().filter(|d| d.da == da) {
        out.insert_polynomials(d, &s.basis(d));
    }
    out
}
