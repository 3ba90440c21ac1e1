//! Exact matrices of the tautological operators, differentials and
//! Hamiltonian vector fields on graded models.

mod matrix;
mod spec;

pub use matrix::{matrix_of, DegreeStep, ExportedBlock, ExportedMap, GradedMap, OperatorMatrix};
pub use spec::OperatorSpec;

use std::collections::BTreeMap;

use crate::error::Result;
use crate::linalg::Rational;
use crate::par::Exec;
use crate::spaces::{GradedModel, GradedSubspace};
use crate::superpoly::Shift;

/// Why a preservation check failed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub degree: crate::superpoly::TriDegree,
    pub element: String,
    pub image: String,
}

/// Checks `op(S_d) ⊆ S_{d + shift}` for every stored piece of `ideal` whose
/// target has total degree at most `max_total` (pieces beyond are not stored).
pub fn check_preserves(
    spec: OperatorSpec,
    ideal: &GradedSubspace,
    max_total: usize,
) -> Result<(), Witness> {
    let op = spec.diffop(ideal.n());
    for d in ideal.degrees() {
        let Some(t) = d.shift(spec.shift()) else {
            continue;
        };
        if t.total() > max_total {
            continue;
        }
        for b in ideal.basis(d) {
            let image = op.apply(&b);
            if !image.is_zero() && ideal.coordinates(t, &image).is_none() {
                return Err(Witness {
                    degree: d,
                    element: b.to_string(),
                    image: image.to_string(),
                });
            }
        }
    }
    Ok(())
}

/// Matrices of `[u, v] = uv - vu` on every piece of `model`.
pub fn bracket(
    u: OperatorSpec,
    v: OperatorSpec,
    model: &dyn GradedModel,
    exec: Exec,
) -> Result<GradedMap> {
    let a = GradedMap::of_operator(u, model, exec)?;
    let b = GradedMap::of_operator(v, model, exec)?;
    Ok(a.bracket(&b))
}

/// The right-hand side `(ab' - a'b) v_{a+a'-1, b+b'-1}` of the Hamiltonian
/// bracket, or the zero map when the coefficient or the index vanishes.
pub fn hamiltonian_prediction(
    (a, b): (u8, u8),
    (a2, b2): (u8, u8),
    model: &dyn GradedModel,
    exec: Exec,
) -> Result<GradedMap> {
    let c = a as i64 * b2 as i64 - a2 as i64 * b as i64;
    if c == 0 {
        // Also covers a + a2 = 0 or b + b2 = 0, where the index is negative.
        let shift = Shift::new(a as i64 + a2 as i64 - 2, b as i64 + b2 as i64 - 2, 0);
        let name = format!("[v({a},{b}), v({a2},{b2})]");
        return Ok(GradedMap::from_blocks(
            &name,
            model,
            vec![DegreeStep::Shift(shift)],
            BTreeMap::new(),
        ));
    }
    let (na, nb) = (a + a2 - 1, b + b2 - 1);
    let v = GradedMap::of_operator(OperatorSpec::Hamiltonian(na, nb), model, exec)?;
    Ok(v.scale(&Rational::from(c)))
}

/// `Ok(())` if `[F, d] = 0` on every piece, else the first nonzero degree.
pub fn commutes_with_differentials(
    f: OperatorSpec,
    d: OperatorSpec,
    model: &dyn GradedModel,
    exec: Exec,
) -> Result<Result<(), crate::superpoly::TriDegree>> {
    let c = bracket(f, d, model, exec)?;
    Ok(match c.first_nonzero() {
        None => Ok(()),
        Some(deg) => Err(deg),
    })
}
