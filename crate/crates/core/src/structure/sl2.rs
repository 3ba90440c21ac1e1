use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::linalg::{inverse, kernel_basis, Rational, SparseMatrix, SparseVec};
use crate::operators::{DegreeStep, GradedMap, OperatorSpec};
use crate::spaces::GradedModel;
use crate::superpoly::TriDegree;

/// Weight of a degree under `h = Σ (x_i ∂_{x_i} - y_i ∂_{y_i})`.
pub fn weight(d: TriDegree) -> i64 {
    d.dx as i64 - d.dy as i64
}

/// Matrix of `f^p` from the piece at `d`, with its target degree; `None`
/// when the target degree does not exist (the power is then zero).
pub fn power_from(f: &GradedMap, d: TriDegree, p: usize) -> Option<(TriDegree, SparseMatrix)> {
    let mut cur = d;
    let mut m = SparseMatrix::identity(f.dim(d));
    for _ in 0..p {
        let t = f.target(cur)?;
        let b = f
            .matrix(cur)
            .cloned()
            .unwrap_or_else(|| SparseMatrix::zeros(f.dim(t), f.dim(cur)));
        m = b.mul(&m);
        cur = t;
    }
    Some((cur, m))
}

/// Why `F_1^j` fails to be an isomorphism between opposite weights.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LefschetzFailure {
    pub degree: TriDegree,
    pub j: usize,
    pub source_dim: usize,
    pub target_dim: usize,
    pub rank: usize,
}

impl std::fmt::Display for LefschetzFailure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "F1^{} from {} has rank {} between pieces of dimension {} and {}",
            self.j, self.degree, self.rank, self.source_dim, self.target_dim
        )
    }
}

/// Checks that `F_1^j` maps the weight `-j` piece of every slice bijectively
/// onto the weight `+j` piece. `f1` must be the map of `F_1` on `model`.
pub fn lefschetz_check(model: &dyn GradedModel, f1: &GradedMap) -> Result<(), LefschetzFailure> {
    for d in model.degrees() {
        let w = weight(d);
        let source_dim = model.dim(d);
        let target_dim = model.dim(d.swapped());
        if w > 0 {
            if source_dim != target_dim {
                return Err(LefschetzFailure {
                    degree: d.swapped(),
                    j: w as usize,
                    source_dim: target_dim,
                    target_dim: source_dim,
                    rank: 0,
                });
            }
            continue;
        }
        let j = (-w) as usize;
        let rank = match power_from(f1, d, j) {
            Some((_, m)) => crate::linalg::rank(&m),
            None => 0,
        };
        if rank != source_dim || target_dim != source_dim {
            return Err(LefschetzFailure {
                degree: d,
                j,
                source_dim,
                target_dim,
                rank,
            });
        }
    }
    Ok(())
}

/// One irreducible string `v, F_1 v, ..., F_1^j v` with `v` of weight `-j`
/// and `F_1^{j+1} v = 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SlString {
    pub j: usize,
    /// Degree of the lowest vector `v`.
    pub start: TriDegree,
    /// `vectors[s]` are the coordinates of `F_1^s v` at `start + s·(1, -1, 0)`.
    pub vectors: Vec<SparseVec>,
}

impl SlString {
    pub fn degree(&self, s: usize) -> TriDegree {
        TriDegree::new(self.start.dx + s, self.start.dy - s, self.start.da)
    }

    /// Total `x, y`-degree of the slice the string lives in.
    pub fn total(&self) -> usize {
        self.start.dx + self.start.dy
    }
}

/// Splitting of a model into `sl_2`-strings for `F_1`, slice by slice.
/// Slices are keyed by `(da, dx + dy)`.
/// `(slice key, string index, s)`.
type StringPosition = ((usize, usize), usize, usize);

#[derive(Clone, Debug)]
pub struct WeightDecomposition {
    slices: BTreeMap<(usize, usize), Vec<SlString>>,
    /// For each degree, `(slice key, string index, s)` of its basis vectors.
    through: BTreeMap<TriDegree, Vec<StringPosition>>,
}

impl WeightDecomposition {
    /// Requires a passing [`lefschetz_check`]; returns an error naming the
    /// slice if the strings fail to span.
    pub fn new(model: &dyn GradedModel, f1: &GradedMap) -> Result<Self> {
        let mut keys: Vec<(usize, usize)> =
            model.degrees().iter().map(|d| (d.da, d.total())).collect();
        keys.sort();
        keys.dedup();
        let mut slices = BTreeMap::new();
        let mut through: BTreeMap<TriDegree, Vec<_>> = BTreeMap::new();
        for (da, m) in keys {
            let mut strings = Vec::new();
            for j in (0..=m).rev().filter(|j| (m - j) % 2 == 0) {
                let d = TriDegree::new((m - j) / 2, (m + j) / 2, da);
                let k = model.dim(d);
                if k == 0 {
                    continue;
                }
                let lowest = match power_from(f1, d, j + 1) {
                    Some((_, p)) => kernel_basis(&p),
                    None => (0..k).map(SparseVec::unit).collect(),
                };
                for v in lowest {
                    let mut vectors = vec![v];
                    let mut cur = d;
                    for _ in 0..j {
                        let (t, w) = f1.apply(cur, vectors.last().unwrap());
                        vectors.push(w);
                        cur = t.expect("weight stays within the slice");
                    }
                    strings.push(SlString {
                        j,
                        start: d,
                        vectors,
                    });
                }
            }
            let spanned: usize = strings.iter().map(|s| s.j + 1).sum();
            let dim: usize = model
                .degrees()
                .into_iter()
                .filter(|d| d.da == da && d.total() == m)
                .map(|d| model.dim(d))
                .sum();
            if spanned != dim {
                return Err(Error::InvalidArgument(format!(
                    "strings span {spanned} of the {dim} dimensions in slice (a={da}, total={m})"
                )));
            }
            for (i, st) in strings.iter().enumerate() {
                for s in 0..=st.j {
                    through
                        .entry(st.degree(s))
                        .or_default()
                        .push(((da, m), i, s));
                }
            }
            slices.insert((da, m), strings);
        }
        Ok(WeightDecomposition { slices, through })
    }

    pub fn slices(&self) -> &BTreeMap<(usize, usize), Vec<SlString>> {
        &self.slices
    }

    pub fn slice(&self, da: usize, total: usize) -> &[SlString] {
        self.slices.get(&(da, total)).map_or(&[], Vec::as_slice)
    }

    pub fn strings(&self) -> impl Iterator<Item = &SlString> {
        self.slices.values().flatten()
    }

    fn string(&self, key: (usize, usize), i: usize) -> &SlString {
        &self.slices[&key][i]
    }

    /// Columns `F_1^s v` of the strings passing through `d`, in a fixed order.
    fn basis_matrix(&self, model: &dyn GradedModel, d: TriDegree) -> SparseMatrix {
        let cols: Vec<SparseVec> = self.through[&d]
            .iter()
            .map(|&(key, i, s)| self.string(key, i).vectors[s].clone())
            .collect();
        SparseMatrix::from_columns(&cols, model.dim(d))
    }

    /// Assembles the map sending each `F_1^s v` at `d` to `image(string, s)`,
    /// a vector at `target(d)`.
    fn string_map(
        &self,
        name: &str,
        model: &dyn GradedModel,
        step: DegreeStep,
        image: &dyn Fn(&SlString, usize) -> SparseVec,
    ) -> Result<GradedMap> {
        let mut blocks = BTreeMap::new();
        for (&d, entries) in &self.through {
            let b = self.basis_matrix(model, d);
            let inv = Some(b)
                .filter(|b| b.cols() == b.rows())
                .and_then(|b| inverse(&b))
                .ok_or_else(|| {
                    Error::InvalidArgument(format!("string vectors at {d} are linearly dependent"))
                })?;
            let rows = match step {
                DegreeStep::Shift(s) => d.shift(s).map_or(0, |t| model.dim(t)),
                DegreeStep::Swap => model.dim(d.swapped()),
            };
            let cols: Vec<SparseVec> = entries
                .iter()
                .map(|&(key, i, s)| image(self.string(key, i), s))
                .collect();
            let m = SparseMatrix::from_columns(&cols, rows);
            blocks.insert(d, m.mul(&inv));
        }
        Ok(GradedMap::from_blocks(name, model, vec![step], blocks))
    }

    /// `Φ(F^s v) = c_{j,s} F^{j-s} v` with `c = 1 / ((s+1)⋯(j-s))` when
    /// `j > 2s`, `1` when `j = 2s` and `s ⋯ (j-s+1)` when `j < 2s`.
    pub fn phi(&self, model: &dyn GradedModel) -> Result<GradedMap> {
        self.string_map("Phi", model, DegreeStep::Swap, &|st, s| {
            st.vectors[st.j - s].scale(&phi_coefficient(st.j, s))
        })
    }

    /// `E_1(F^s v) = s (j - s + 1) F^{s-1} v`, and `E_1 v = 0`.
    pub fn e1(&self, model: &dyn GradedModel) -> Result<GradedMap> {
        let step = DegreeStep::Shift(OperatorSpec::E(1).shift());
        self.string_map("E1 (string formula)", model, step, &|st, s| {
            if s == 0 {
                return SparseVec::new();
            }
            let c = Rational::from((s * (st.j - s + 1)) as i64);
            st.vectors[s - 1].scale(&c)
        })
    }

    /// Multiplies each `F^s v` by `(-1)^((dx + dy - j) / 2)`.
    pub fn string_sign(&self, model: &dyn GradedModel) -> Result<GradedMap> {
        self.string_map(
            "string sign",
            model,
            DegreeStep::Shift(Default::default()),
            &|st, s| {
                let parity = (st.total() - st.j) / 2;
                if parity % 2 == 0 {
                    st.vectors[s].clone()
                } else {
                    st.vectors[s].neg()
                }
            },
        )
    }
}

/// The scalar in `Φ(F^s v) = c · F^{j-s} v`.
pub fn phi_coefficient(j: usize, s: usize) -> Rational {
    let range = |lo: usize, hi: usize| {
        (lo..=hi)
            .map(|i| Rational::from(i as i64))
            .product::<Rational>()
    };
    match (j as i64 - 2 * s as i64).signum() {
        1 => range(s + 1, j - s).recip(),
        0 => Rational::one(),
        _ => range(j - s + 1, s),
    }
}

/// Diagonal map multiplying the piece at `d` by its weight `dx - dy`.
pub fn weight_map(model: &dyn GradedModel) -> GradedMap {
    let blocks = model
        .degrees()
        .into_iter()
        .map(|d| {
            let m = SparseMatrix::identity(model.dim(d)).scale(&Rational::from(weight(d)));
            (d, m)
        })
        .collect();
    GradedMap::from_blocks(
        "h",
        model,
        vec![DegreeStep::Shift(Default::default())],
        blocks,
    )
}

/// The involution exchanging `x_i` and `y_i`.
pub fn swap_map(model: &dyn GradedModel, exec: crate::par::Exec) -> Result<GradedMap> {
    GradedMap::build(
        "swap",
        model,
        vec![DegreeStep::Swap],
        &|p| p.swap_xy(),
        exec,
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn phi_coefficients_invert() {
        for j in 0..8 {
            for s in 0..=j {
                let c = phi_coefficient(j, s) * phi_coefficient(j, j - s);
                assert_eq!(c, Rational::one(), "j={j} s={s}");
            }
        }
        assert_eq!(phi_coefficient(3, 0), Rational::ratio(1, 6));
        assert_eq!(phi_coefficient(3, 3), Rational::from(6));
        assert_eq!(phi_coefficient(2, 1), Rational::one());
    }
}
