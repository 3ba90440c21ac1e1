use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{rref_rows, Rational, SparseVec};
use crate::operators::{GradedMap, OperatorSpec};
use crate::par::Exec;
use crate::spaces::GradedModel;
use crate::superpoly::TriDegree;

/// Affine relabeling of `(dx, dy, da)` as `(Q, A, T)`:
/// `Q = q1 (dx - dy) + q2 da + q0`, `T = t1 dy + t2 da + t0`,
/// `A = a1 da + a0`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GradingDictionary {
    pub q1: Rational,
    pub q2: Rational,
    pub q0: Rational,
    pub t1: Rational,
    pub t2: Rational,
    pub t0: Rational,
    pub a1: Rational,
    pub a0: Rational,
}

impl GradingDictionary {
    /// `Q = 2(dx - dy)`, `T = n(n-1) - 2 dy + da`, `A = 2 da`.
    pub fn standard(n: usize) -> Self {
        let r = |v: i64| Rational::from(v);
        GradingDictionary {
            q1: r(2),
            q2: r(0),
            q0: r(0),
            t1: r(-2),
            t2: r(1),
            t0: r((n * n.saturating_sub(1)) as i64),
            a1: r(2),
            a0: r(0),
        }
    }

    /// `(Q, A, T)` of a degree.
    pub fn apply(&self, d: TriDegree) -> [Rational; 3] {
        let (x, y, a) = (
            Rational::from(d.dx as i64),
            Rational::from(d.dy as i64),
            Rational::from(d.da as i64),
        );
        [
            &(&self.q1 * &(&x - &y)) + &(&(&self.q2 * &a) + &self.q0),
            &(&self.a1 * &a) + &self.a0,
            &(&self.t1 * &y) + &(&(&self.t2 * &a) + &self.t0),
        ]
    }

    /// Integral `(Q, A, T)`, or an error naming the degree.
    pub fn apply_integral(&self, d: TriDegree) -> Result<[i64; 3]> {
        let v = self.apply(d);
        let mut out = [0; 3];
        for (o, x) in out.iter_mut().zip(&v) {
            *o = x
                .is_integer()
                .then(|| x.numer().as_i64())
                .flatten()
                .ok_or_else(|| {
                    Error::InvalidArgument(format!(
                        "dictionary gives non-integral grading {x} at {d}"
                    ))
                })?;
        }
        Ok(out)
    }

    /// The unique dictionary reproducing `(Q, A, T)` at every listed degree
    /// exactly, or `None` if the fit is inconsistent or underdetermined.
    pub fn fit(points: &[(TriDegree, [i64; 3])]) -> Option<Self> {
        let r = |v: usize| Rational::from(v as i64);
        let q = solve(
            points
                .iter()
                .map(|(d, g)| (vec![&r(d.dx) - &r(d.dy), r(d.da), Rational::one()], g[0])),
        )?;
        let a = solve(
            points
                .iter()
                .map(|(d, g)| (vec![r(d.da), Rational::one()], g[1])),
        )?;
        let t = solve(
            points
                .iter()
                .map(|(d, g)| (vec![r(d.dy), r(d.da), Rational::one()], g[2])),
        )?;
        Some(GradingDictionary {
            q1: q[0].clone(),
            q2: q[1].clone(),
            q0: q[2].clone(),
            t1: t[0].clone(),
            t2: t[1].clone(),
            t0: t[2].clone(),
            a1: a[0].clone(),
            a0: a[1].clone(),
        })
    }
}

/// Exact solution of an overdetermined system, `None` unless it exists and
/// is unique.
fn solve(equations: impl Iterator<Item = (Vec<Rational>, i64)>) -> Option<Vec<Rational>> {
    let mut k = 0;
    let rows: Vec<SparseVec> = equations
        .map(|(mut coeffs, rhs)| {
            k = coeffs.len();
            coeffs.push(Rational::from(rhs));
            SparseVec::from_dense(&coeffs)
        })
        .collect();
    let r = rref_rows(&rows, k + 1);
    if r.rank() != k || r.pivots().last() == Some(&k) {
        return None;
    }
    Some(r.rows().iter().map(|row| row.get(k)).collect())
}

/// One basis class of the exported model.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HomologyRecord {
    pub index: usize,
    #[serde(rename = "Q")]
    pub q: i64,
    #[serde(rename = "A")]
    pub a: i64,
    #[serde(rename = "T")]
    pub t: i64,
    pub dx: usize,
    pub dy: usize,
    pub da: usize,
    /// A representative in the superalgebra.
    pub basis: String,
}

/// Matrix of an operator in the global class indexing: `(from, to, value)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OperatorTable {
    pub name: String,
    pub entries: Vec<(usize, usize, Rational)>,
}

impl OperatorTable {
    /// Whether some entry maps class `from` to class `to`.
    pub fn connects(&self, from: usize, to: usize) -> bool {
        self.entries.iter().any(|(f, t, _)| *f == from && *t == to)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HomologyTable {
    pub n: usize,
    pub dictionary: GradingDictionary,
    pub records: Vec<HomologyRecord>,
    pub operators: Vec<OperatorTable>,
}

impl HomologyTable {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("table serializes")
    }

    /// `index,Q,A,T,dx,dy,da,basis`, one line per class.
    pub fn to_csv(&self) -> String {
        let mut s = String::from("index,Q,A,T,dx,dy,da,basis\n");
        for r in &self.records {
            writeln!(
                s,
                "{},{},{},{},{},{},{},\"{}\"",
                r.index,
                r.q,
                r.a,
                r.t,
                r.dx,
                r.dy,
                r.da,
                r.basis.replace('"', "\"\"")
            )
            .unwrap();
        }
        s
    }

    pub fn operator(&self, name: &str) -> Option<&OperatorTable> {
        self.operators.iter().find(|o| o.name == name)
    }

    /// Index of the class with the given `(A, Q)`, if exactly one exists.
    pub fn class_at(&self, a: i64, q: i64) -> Option<usize> {
        let mut it = self.records.iter().filter(|r| r.a == a && r.q == q);
        let first = it.next()?;
        it.next().is_none().then_some(first.index)
    }
}

/// Classes of `model` with their gradings under `dict`, plus the matrices of
/// `F_1..F_{n-1}` and `d_1..d_{n-1}` between them.
pub fn export_homology(
    model: &dyn GradedModel,
    dict: &GradingDictionary,
    exec: Exec,
) -> Result<HomologyTable> {
    let n = model.n();
    let mut records = Vec::new();
    let mut offsets = BTreeMap::new();
    for d in model.degrees() {
        let [q, a, t] = dict.apply_integral(d)?;
        offsets.insert(d, records.len());
        for j in 0..model.dim(d) {
            records.push(HomologyRecord {
                index: records.len(),
                q,
                a,
                t,
                dx: d.dx,
                dy: d.dy,
                da: d.da,
                basis: model.lift(d, &SparseVec::unit(j)).to_string(),
            });
        }
    }
    let mut seen = BTreeMap::new();
    for r in &records {
        if let Some(prev) = seen.insert((r.q, r.a, r.t), r.index) {
            let (p, c) = (&records[prev], r);
            if (p.dx, p.dy, p.da) != (c.dx, c.dy, c.da) {
                return Err(Error::InvalidArgument(format!(
                    "dictionary identifies degrees ({},{},{}) and ({},{},{})",
                    p.dx, p.dy, p.da, c.dx, c.dy, c.da
                )));
            }
        }
    }
    let specs = (1..n as u8)
        .map(OperatorSpec::F)
        .chain((1..n as u8).map(OperatorSpec::D));
    let mut operators = Vec::new();
    for spec in specs {
        let map = GradedMap::of_operator(spec, model, exec)?;
        operators.push(table_of(&map, &offsets));
    }
    Ok(HomologyTable {
        n,
        dictionary: dict.clone(),
        records,
        operators,
    })
}

fn table_of(map: &GradedMap, offsets: &BTreeMap<TriDegree, usize>) -> OperatorTable {
    let mut entries = Vec::new();
    for (d, m) in map.blocks() {
        let Some(t) = map.target(d) else { continue };
        for (r, c, v) in m.triplets() {
            entries.push((offsets[&d] + c, offsets[&t] + r, v.clone()));
        }
    }
    entries.sort();
    OperatorTable {
        name: map.name().to_string(),
        entries,
    }
}
