use std::collections::BTreeMap;
use std::sync::Arc;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::{Rational, SparseMatrix, SparseVec};
use crate::par::Exec;
use crate::spaces::GradedModel;
use crate::superpoly::{Polynomial, Shift, TriDegree};

use super::OperatorSpec;

/// How a homogeneous map moves degrees.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DegreeStep {
    Shift(Shift),
    /// `(dx, dy, da) -> (dy, dx, da)`
    Swap,
}

impl DegreeStep {
    fn apply(self, d: TriDegree) -> Option<TriDegree> {
        match self {
            DegreeStep::Shift(s) => d.shift(s),
            DegreeStep::Swap => Some(d.swapped()),
        }
    }
}

/// Matrix of an operator from one degree piece to another.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OperatorMatrix {
    pub source: TriDegree,
    pub target: Option<TriDegree>,
    pub matrix: SparseMatrix,
}

/// A degree-homogeneous linear map of a graded model to itself, stored as
/// one matrix per nonzero source piece (rows = target dimension).
#[derive(Clone, Debug)]
pub struct GradedMap {
    name: String,
    steps: Vec<DegreeStep>,
    dims: Arc<BTreeMap<TriDegree, usize>>,
    blocks: BTreeMap<TriDegree, SparseMatrix>,
}

fn model_dims(model: &dyn GradedModel) -> Arc<BTreeMap<TriDegree, usize>> {
    Arc::new(
        model
            .degrees()
            .into_iter()
            .map(|d| (d, model.dim(d)))
            .collect(),
    )
}

impl GradedMap {
    /// Matrix of `op` on every piece of `model`, after certifying that the
    /// relations of `model` are mapped into relations.
    pub fn of_operator(
        spec: OperatorSpec,
        model: &dyn GradedModel,
        exec: Exec,
    ) -> Result<GradedMap> {
        let op = spec.diffop(model.n());
        Self::build(
            &spec.to_string(),
            model,
            vec![DegreeStep::Shift(spec.shift())],
            &|p: &Polynomial| op.apply(p),
            exec,
        )
    }

    /// Map induced by any polynomial map `f` that moves degrees by `steps`.
    pub fn build(
        name: &str,
        model: &dyn GradedModel,
        steps: Vec<DegreeStep>,
        f: &(dyn Fn(&Polynomial) -> Polynomial + Sync),
        exec: Exec,
    ) -> Result<GradedMap> {
        let dims = model_dims(model);
        let degrees: Vec<TriDegree> = dims.keys().copied().collect();
        let target_of = |d: TriDegree| steps.iter().try_fold(d, |d, s| s.apply(d));
        let built = exec.map(degrees.clone(), |d| {
            block_of(name, model, f, d, target_of(d)).map(|m| m.matrix)
        });
        let mut blocks = BTreeMap::new();
        for (d, m) in degrees.into_iter().zip(built) {
            blocks.insert(d, m?);
        }
        Ok(GradedMap {
            name: name.to_string(),
            steps,
            dims,
            blocks,
        })
    }

    /// Assembles a map from explicit blocks (missing blocks are zero).
    pub fn from_blocks(
        name: &str,
        model: &dyn GradedModel,
        steps: Vec<DegreeStep>,
        mut blocks: BTreeMap<TriDegree, SparseMatrix>,
    ) -> GradedMap {
        let dims = model_dims(model);
        let mut map = GradedMap {
            name: name.to_string(),
            steps,
            dims: dims.clone(),
            blocks: BTreeMap::new(),
        };
        for (&d, &k) in dims.iter() {
            let rows = map.target(d).map_or(0, |t| map.dim(t));
            let b = blocks
                .remove(&d)
                .unwrap_or_else(|| SparseMatrix::zeros(rows, k));
            assert_eq!(
                (b.rows(), b.cols()),
                (rows, k),
                "block at {d} has the wrong shape"
            );
            map.blocks.insert(d, b);
        }
        map
    }

    pub fn identity(model: &dyn GradedModel) -> GradedMap {
        let dims = model_dims(model);
        let blocks = dims
            .iter()
            .map(|(d, k)| (*d, SparseMatrix::identity(*k)))
            .collect();
        GradedMap {
            name: "id".into(),
            steps: vec![],
            dims,
            blocks,
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn dim(&self, d: TriDegree) -> usize {
        self.dims.get(&d).copied().unwrap_or(0)
    }

    pub fn degrees(&self) -> impl Iterator<Item = TriDegree> + '_ {
        self.blocks.keys().copied()
    }

    pub fn target(&self, d: TriDegree) -> Option<TriDegree> {
        self.steps.iter().try_fold(d, |d, s| s.apply(d))
    }

    /// Block at source `d` with its target (zero-dimensional targets have no rows).
    pub fn block(&self, d: TriDegree) -> Option<OperatorMatrix> {
        self.blocks.get(&d).map(|m| OperatorMatrix {
            source: d,
            target: self.target(d),
            matrix: m.clone(),
        })
    }

    pub fn matrix(&self, d: TriDegree) -> Option<&SparseMatrix> {
        self.blocks.get(&d)
    }

    pub fn blocks(&self) -> impl Iterator<Item = (TriDegree, &SparseMatrix)> {
        self.blocks.iter().map(|(d, m)| (*d, m))
    }

    /// Image of a coordinate vector at `d`.
    pub fn apply(&self, d: TriDegree, v: &SparseVec) -> (Option<TriDegree>, SparseVec) {
        let t = self.target(d);
        match self.blocks.get(&d) {
            Some(m) => (t, m.mul_vec(v)),
            None => (t, SparseVec::new()),
        }
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &GradedMap) -> GradedMap {
        assert!(
            Arc::ptr_eq(&self.dims, &other.dims) || self.dims == other.dims,
            "maps act on different spaces"
        );
        let mut steps = other.steps.clone();
        for &s in &self.steps {
            // Net shifts, so a composite that dips below degree zero midway
            // still has the target of its total shift.
            match (steps.last_mut(), s) {
                (Some(DegreeStep::Shift(a)), DegreeStep::Shift(b)) => *a = a.then(b),
                _ => steps.push(s),
            }
        }
        let mut out = GradedMap {
            name: format!("{}.{}", self.name, other.name),
            steps,
            dims: other.dims.clone(),
            blocks: BTreeMap::new(),
        };
        for (&d, b) in &other.blocks {
            let rows = out.target(d).map_or(0, |t| out.dim(t));
            let m = match other.target(d).and_then(|t| self.blocks.get(&t)) {
                Some(a) => a.mul(b),
                None => SparseMatrix::zeros(rows, b.cols()),
            };
            out.blocks.insert(d, m);
        }
        out
    }

    /// `self + c · other`; both maps must send each degree to the same place.
    pub fn add_scaled(&self, c: &Rational, other: &GradedMap) -> GradedMap {
        let mut out = self.clone();
        for (&d, b) in &other.blocks {
            let t = self.target(d).filter(|t| self.dim(*t) > 0);
            let u = other.target(d).filter(|t| other.dim(*t) > 0);
            assert_eq!(t, u, "maps have different targets at {d}");
            let a = &self.blocks[&d];
            out.blocks.insert(d, a.add_scaled(c, b));
        }
        out
    }

    pub fn sub(&self, other: &GradedMap) -> GradedMap {
        self.add_scaled(&-Rational::one(), other)
            .with_name(format!("{} - {}", self.name, other.name))
    }

    pub fn scale(&self, c: &Rational) -> GradedMap {
        let mut out = self.clone();
        for b in out.blocks.values_mut() {
            *b = b.scale(c);
        }
        out
    }

    /// `[self, other] = self ∘ other - other ∘ self`.
    pub fn bracket(&self, other: &GradedMap) -> GradedMap {
        self.compose(other)
            .sub(&other.compose(self))
            .with_name(format!("[{}, {}]", self.name, other.name))
    }

    /// `self ∘ other + other ∘ self`.
    pub fn anticommutator(&self, other: &GradedMap) -> GradedMap {
        self.compose(other)
            .add_scaled(&Rational::one(), &other.compose(self))
            .with_name(format!("{{{}, {}}}", self.name, other.name))
    }

    pub fn is_zero(&self) -> bool {
        self.blocks.values().all(SparseMatrix::is_zero)
    }

    /// First source degree with a nonzero block.
    pub fn first_nonzero(&self) -> Option<TriDegree> {
        self.blocks
            .iter()
            .find(|(_, m)| !m.is_zero())
            .map(|(d, _)| *d)
    }

    /// `Some(c)` if `self = c · other` on every block.
    pub fn ratio_to(&self, other: &GradedMap) -> Option<Rational> {
        let mut c: Option<Rational> = None;
        for (d, m) in &self.blocks {
            let o = other.blocks.get(d)?;
            if m.is_zero() && o.is_zero() {
                continue;
            }
            let r = m.ratio_to(o)?;
            match &c {
                Some(c0) if *c0 != r => return None,
                _ => c = Some(r),
            }
        }
        Some(c.unwrap_or_else(Rational::zero))
    }

    /// Per-block scalars `c_d` with `self_d = c_d · other_d`; `None` entries
    /// mark blocks that are not proportional. Blocks zero in both are skipped.
    pub fn block_ratios(&self, other: &GradedMap) -> BTreeMap<TriDegree, Option<Rational>> {
        self.blocks
            .iter()
            .filter_map(|(d, m)| {
                let o = other.blocks.get(d)?;
                if m.is_zero() && o.is_zero() {
                    return None;
                }
                Some((*d, m.ratio_to(o)))
            })
            .collect()
    }

    pub fn export(&self) -> ExportedMap {
        ExportedMap {
            name: self.name.clone(),
            blocks: self
                .blocks
                .iter()
                .filter(|(_, m)| !m.is_zero())
                .map(|(d, m)| ExportedBlock {
                    source: *d,
                    target: self.target(*d).expect("nonzero block has a target"),
                    rows: m.rows(),
                    cols: m.cols(),
                    entries: m
                        .triplets()
                        .map(|(r, c, v)| (r, c, v.to_string()))
                        .collect(),
                })
                .collect(),
        }
    }
}

/// JSON form of a map: nonzero blocks with entries as `"p/q"` strings.
#[derive(Clone, Debug, Serialize)]
pub struct ExportedMap {
    pub name: String,
    pub blocks: Vec<ExportedBlock>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ExportedBlock {
    pub source: TriDegree,
    pub target: TriDegree,
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<(usize, usize, String)>,
}

fn block_of(
    name: &str,
    model: &dyn GradedModel,
    f: &(dyn Fn(&Polynomial) -> Polynomial + Sync),
    d: TriDegree,
    target: Option<TriDegree>,
) -> Result<OperatorMatrix> {
    certify(name, model, f, d, target)?;
    let rows = target.map_or(0, |t| model.dim(t));
    let mut cols = Vec::with_capacity(model.dim(d));
    for j in 0..model.dim(d) {
        let image = f(&model.lift(d, &SparseVec::unit(j)));
        let v = match target {
            _ if image.is_zero() => SparseVec::new(),
            Some(t) => model
                .coordinates(t, &image)
                .ok_or_else(|| Error::NotWellDefined {
                    operator: name.to_string(),
                    degree: d,
                    witness: format!(
                        "image {image} of basis vector {j} is not in {}",
                        model.name()
                    ),
                })?,
            None => unreachable!("a nonzero image has a degree"),
        };
        cols.push(v);
    }
    Ok(OperatorMatrix {
        source: d,
        target,
        matrix: SparseMatrix::from_columns(&cols, rows),
    })
}

/// Checks that every relation at `d` maps into the relations at the target.
fn certify(
    name: &str,
    model: &dyn GradedModel,
    f: &(dyn Fn(&Polynomial) -> Polynomial + Sync),
    d: TriDegree,
    target: Option<TriDegree>,
) -> Result<()> {
    for r in model.relation_generators(d) {
        let image = f(&r);
        if image.is_zero() {
            continue;
        }
        let ok = target.is_some_and(|t| model.reduces_to_zero(t, &image));
        if !ok {
            return Err(Error::NotWellDefined {
                operator: name.to_string(),
                degree: d,
                witness: format!("relation {r} maps to {image}, which is not a relation"),
            });
        }
    }
    Ok(())
}

/// Matrix of `spec` on the piece of `model` at `d`, certified on relations.
pub fn matrix_of(
    spec: OperatorSpec,
    model: &dyn GradedModel,
    d: TriDegree,
) -> Result<OperatorMatrix> {
    let op = spec.diffop(model.n());
    block_of(
        &spec.to_string(),
        model,
        &|p| op.apply(p),
        d,
        d.shift(spec.shift()),
    )
}
