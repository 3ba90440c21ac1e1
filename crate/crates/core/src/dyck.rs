//! Dyck paths and the q,t-Catalan polynomial, as an oracle independent of
//! the linear algebra.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::spaces::HilbertSeries;

/// Largest `n` accepted by the enumerations.
pub const DYCK_CAP: usize = 12;

/// A lattice path from `(0, 0)` to `(n, n)` with north (`true`) and east
/// (`false`) steps that never goes below the diagonal.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DyckPath {
    steps: Vec<bool>,
}

impl DyckPath {
    /// `None` unless the steps are balanced and stay weakly above the diagonal.
    pub fn new(steps: Vec<bool>) -> Option<Self> {
        let mut height = 0i64;
        for &s in &steps {
            height += if s { 1 } else { -1 };
            if height < 0 {
                return None;
            }
        }
        (height == 0).then_some(DyckPath { steps })
    }

    pub fn n(&self) -> usize {
        self.steps.len() / 2
    }

    pub fn steps(&self) -> &[bool] {
        &self.steps
    }

    /// `a_i = i - (east steps before the i-th north step)`: the number of
    /// full cells between the path and the diagonal in row `i`.
    pub fn area_sequence(&self) -> Vec<usize> {
        let mut east = 0;
        let mut out = Vec::with_capacity(self.n());
        for &s in &self.steps {
            if s {
                out.push(out.len() - east);
            } else {
                east += 1;
            }
        }
        out
    }

    pub fn area(&self) -> usize {
        self.area_sequence().iter().sum()
    }

    /// Height of the path above column `x`: north steps before the
    /// `(x + 1)`-th east step.
    fn height_at(&self, x: usize) -> usize {
        let mut east = 0;
        let mut north = 0;
        for &s in &self.steps {
            if s {
                north += 1;
            } else {
                if east == x {
                    return north;
                }
                east += 1;
            }
        }
        north
    }

    /// The bounce path goes north until it meets the start of an east step,
    /// then east back to the diagonal, and repeats; `bounce = Σ (n - j)`
    /// over its diagonal touches `(j, j)` with `0 < j < n`.
    pub fn bounce(&self) -> usize {
        let n = self.n();
        let mut x = 0;
        let mut total = 0;
        while x < n {
            x = self.height_at(x);
            if x < n {
                total += n - x;
            }
        }
        total
    }

    /// Pairs `i < j` with `a_i = a_j` or `a_i = a_j + 1`.
    pub fn dinv(&self) -> usize {
        let a = self.area_sequence();
        let mut count = 0;
        for i in 0..a.len() {
            for j in i + 1..a.len() {
                if a[i] == a[j] || a[i] == a[j] + 1 {
                    count += 1;
                }
            }
        }
        count
    }
}

fn check_cap(n: usize) -> Result<()> {
    if n > DYCK_CAP {
        return Err(Error::ResourceRefusal {
            n,
            cap: DYCK_CAP,
            hint: " for path enumeration",
        });
    }
    Ok(())
}

/// All Dyck paths of size `n`, in lexicographic order (north before east).
pub fn enumerate(n: usize) -> Result<Vec<DyckPath>> {
    check_cap(n)?;
    let mut out = Vec::new();
    let mut steps = Vec::with_capacity(2 * n);
    extend(n, 0, 0, &mut steps, &mut out);
    Ok(out)
}

fn extend(n: usize, north: usize, east: usize, steps: &mut Vec<bool>, out: &mut Vec<DyckPath>) {
    if east == n {
        out.push(DyckPath {
            steps: steps.clone(),
        });
        return;
    }
    if north < n {
        steps.push(true);
        extend(n, north + 1, east, steps, out);
        steps.pop();
    }
    if east < north {
        steps.push(false);
        extend(n, north, east + 1, steps, out);
        steps.pop();
    }
}

fn tally(
    n: usize,
    stat: impl Fn(&DyckPath) -> (usize, usize),
) -> Result<BTreeMap<(usize, usize), usize>> {
    let mut out = BTreeMap::new();
    for p in enumerate(n)? {
        *out.entry(stat(&p)).or_default() += 1;
    }
    Ok(out)
}

/// `Σ q^area t^bounce` over Dyck paths, as `(q, t)-exponents -> coefficient`.
pub fn catalan_qt(n: usize) -> Result<BTreeMap<(usize, usize), usize>> {
    tally(n, |p| (p.area(), p.bounce()))
}

/// `Σ q^dinv t^area`, a second statistic pair for the same polynomial.
pub fn catalan_qt_dinv(n: usize) -> Result<BTreeMap<(usize, usize), usize>> {
    tally(n, |p| (p.dinv(), p.area()))
}

/// [`catalan_qt`] rendered like any other Hilbert series.
pub fn catalan_series(n: usize) -> Result<HilbertSeries> {
    Ok(HilbertSeries::from_qt(&catalan_qt(n)?))
}

/// `binom(2n, n) / (n + 1)`.
pub fn catalan_number(n: usize) -> u64 {
    let mut c: u64 = 1;
    for k in 0..n as u64 {
        c = c * 2 * (2 * k + 1) / (k + 2);
    }
    c
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts() {
        assert_eq!(enumerate(1).unwrap().len(), 1);
        assert_eq!(enumerate(3).unwrap().len(), 5);
        assert_eq!(enumerate(4).unwrap().len(), 14);
        assert_eq!(
            (0..8).map(catalan_number).collect::<Vec<_>>(),
            [1, 1, 2, 5, 14, 42, 132, 429]
        );
        assert!(matches!(enumerate(13), Err(Error::ResourceRefusal { .. })));
    }

    #[test]
    fn small_polynomials() {
        assert_eq!(catalan_series(1).unwrap().to_string(), "1");
        assert_eq!(catalan_series(2).unwrap().to_string(), "q + t");
        assert_eq!(
            catalan_series(3).unwrap().to_string(),
            "q^3 + q^2*t + q*t^2 + q*t + t^3"
        );
    }

    #[test]
    fn statistics_of_known_paths() {
        let p = DyckPath::new(vec![true, false, true, true, false, false]).unwrap();
        assert_eq!(p.area_sequence(), vec![0, 0, 1]);
        assert_eq!((p.area(), p.bounce(), p.dinv()), (1, 2, 1));
        assert!(DyckPath::new(vec![false, true]).is_none());
        assert!(DyckPath::new(vec![true]).is_none());
    }
}
