use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::superpoly::TriDegree;

/// Per-degree dimensions, read as the polynomial `Σ dim · q^dx t^dy a^da`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct HilbertSeries {
    dims: BTreeMap<TriDegree, usize>,
}

impl HilbertSeries {
    pub fn from_dims(dims: impl IntoIterator<Item = (TriDegree, usize)>) -> Self {
        let mut out = HilbertSeries::default();
        for (d, k) in dims {
            if k > 0 {
                *out.dims.entry(d).or_default() += k;
            }
        }
        out
    }

    /// A bivariate polynomial given by `(q-exponent, t-exponent) -> coefficient`.
    pub fn from_qt(coeffs: &BTreeMap<(usize, usize), usize>) -> Self {
        Self::from_dims(coeffs.iter().map(|(&(q, t), &c)| (TriDegree::bi(q, t), c)))
    }

    pub fn dims(&self) -> &BTreeMap<TriDegree, usize> {
        &self.dims
    }

    pub fn get(&self, d: TriDegree) -> usize {
        self.dims.get(&d).copied().unwrap_or(0)
    }

    /// Value at `q = t = a = 1`.
    pub fn total(&self) -> usize {
        self.dims.values().sum()
    }

    /// Value at `q = t = 1`, as a list indexed by `a`.
    pub fn by_a(&self) -> Vec<usize> {
        let top = self.dims.keys().map(|d| d.da).max().map_or(0, |a| a + 1);
        let mut out = vec![0; top];
        for (d, k) in &self.dims {
            out[d.da] += k;
        }
        out
    }

    /// The part with θ-degree `a`.
    pub fn slice(&self, a: usize) -> HilbertSeries {
        Self::from_dims(
            self.dims
                .iter()
                .filter(|(d, _)| d.da == a)
                .map(|(d, k)| (*d, *k)),
        )
    }

    pub fn swap_qt(&self) -> HilbertSeries {
        Self::from_dims(self.dims.iter().map(|(d, k)| (d.swapped(), *k)))
    }

    pub fn is_qt_symmetric(&self) -> bool {
        *self == self.swap_qt()
    }
}

impl fmt::Display for HilbertSeries {
    /// Terms in decreasing lexicographic order of `(q, t, a)` exponents,
    /// e.g. `q^3 + q^2*t + q*t^2 + q*t + t^3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.dims.is_empty() {
            return write!(f, "0");
        }
        let terms: Vec<String> = self
            .dims
            .iter()
            .rev()
            .map(|(d, k)| {
                let mut factors = Vec::new();
                for (name, e) in [("q", d.dx), ("t", d.dy), ("a", d.da)] {
                    match e {
                        0 => {}
                        1 => factors.push(name.to_string()),
                        _ => factors.push(format!("{name}^{e}")),
                    }
                }
                match (factors.is_empty(), *k) {
                    (true, k) => k.to_string(),
                    (false, 1) => factors.join("*"),
                    (false, k) => format!("{k}*{}", factors.join("*")),
                }
            })
            .collect();
        write!(f, "{}", terms.join(" + "))
    }
}
