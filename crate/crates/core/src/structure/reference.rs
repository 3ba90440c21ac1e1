//! Reference table for the `n = 3` model (torus knot `T(3,4)`): the eleven
//! generators with their `(A, Q, T)` gradings and the arrows drawn for
//! `F_1, F_2, d_1, d_2`.

use std::collections::BTreeSet;

use itertools::Itertools;

use crate::superpoly::TriDegree;

use super::{GradingDictionary, HomologyTable};

/// `(A, Q, T)` of the eleven generators.
pub const T34_GENERATORS: [[i64; 3]; 11] = [
    [0, -6, 0],
    [0, -2, 2],
    [0, 0, 4],
    [0, 2, 4],
    [0, 6, 6],
    [2, -4, 3],
    [2, -2, 5],
    [2, 0, 5],
    [2, 2, 7],
    [2, 4, 7],
    [4, 0, 8],
];

/// `(operator, (A, Q) of source, (A, Q) of target)`.
pub type Arrow = (&'static str, (i64, i64), (i64, i64));

/// The drawn arrows.
pub const T34_ARROWS: [Arrow; 16] = [
    ("F1", (0, -6), (0, -2)),
    ("F1", (0, -2), (0, 2)),
    ("F1", (0, 2), (0, 6)),
    ("F1", (2, -4), (2, 0)),
    ("F1", (2, 0), (2, 4)),
    ("F1", (2, -2), (2, 2)),
    ("F2", (0, 0), (0, 6)),
    ("F2", (2, -2), (2, 4)),
    ("d1", (2, -4), (0, -2)),
    ("d1", (2, -2), (0, 0)),
    ("d1", (2, 0), (0, 2)),
    ("d1", (2, 4), (0, 6)),
    ("d1", (4, 0), (2, 2)),
    ("d2", (4, 0), (2, 4)),
    ("d2", (2, 2), (0, 6)),
    ("d2", (2, -2), (0, 2)),
];

/// Every dictionary that maps the model classes (one degree per class)
/// onto the reference generators exactly, over all bijections that keep
/// rows of equal `da` together. Distinct results only, in a fixed order.
pub fn fit_dictionaries(classes: &[TriDegree], reference: &[[i64; 3]]) -> Vec<GradingDictionary> {
    if classes.len() != reference.len() {
        return Vec::new();
    }
    let model_rows = classes.iter().copied().into_group_map_by(|d| d.da);
    let ref_rows = reference.iter().copied().into_group_map_by(|g| g[0]);
    let model_keys: Vec<usize> = model_rows.keys().copied().sorted().collect();
    let ref_keys: Vec<i64> = ref_rows.keys().copied().sorted().collect();
    if model_keys.len() != ref_keys.len() {
        return Vec::new();
    }
    let mut found: Vec<GradingDictionary> = Vec::new();
    for row_match in ref_keys.iter().permutations(ref_keys.len()) {
        let sizes_match = model_keys
            .iter()
            .zip(&row_match)
            .all(|(m, r)| model_rows[m].len() == ref_rows[r].len());
        if !sizes_match {
            continue;
        }
        let per_row: Vec<Vec<Vec<[i64; 3]>>> = model_keys
            .iter()
            .zip(&row_match)
            .map(|(_, r)| {
                let row = &ref_rows[*r];
                row.iter().copied().permutations(row.len()).collect()
            })
            .collect();
        for choice in per_row.iter().multi_cartesian_product() {
            let points: Vec<(TriDegree, [i64; 3])> = model_keys
                .iter()
                .zip(choice)
                .flat_map(|(m, targets)| model_rows[m].iter().copied().zip(targets.iter().copied()))
                .map(|(d, g)| (d, [g[1], g[0], g[2]]))
                .collect();
            if let Some(dict) = GradingDictionary::fit(&points) {
                if !found.contains(&dict) {
                    found.push(dict);
                }
            }
        }
    }
    found
}

/// Compares the nonzero entries of the exported `F_1, F_2, d_1, d_2` with
/// the drawn arrows; returns the discrepancies.
pub fn arrow_mismatches(table: &HomologyTable) -> Vec<String> {
    let mut problems = Vec::new();
    let drawn: BTreeSet<Arrow> = T34_ARROWS.iter().copied().collect();
    for name in ["F1", "F2", "d1", "d2"] {
        let Some(op) = table.operator(name) else {
            problems.push(format!("{name} missing from the export"));
            continue;
        };
        let mut actual = BTreeSet::new();
        for (from, to, _) in &op.entries {
            let (f, t) = (&table.records[*from], &table.records[*to]);
            actual.insert(((f.a, f.q), (t.a, t.q)));
        }
        let expected: BTreeSet<((i64, i64), (i64, i64))> = drawn
            .iter()
            .filter(|(n, _, _)| *n == name)
            .map(|(_, f, t)| (*f, *t))
            .collect();
        for (f, t) in expected.difference(&actual) {
            problems.push(format!("{name} arrow {f:?} -> {t:?} is zero"));
        }
        for (f, t) in actual.difference(&expected) {
            problems.push(format!(
                "{name} is nonzero from {f:?} to {t:?}, where nothing is drawn"
            ));
        }
    }
    problems
}
