use std::fmt;

use super::Rational;

/// Sparse vector: entries sorted by index, no stored zeros.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct SparseVec {
    entries: Vec<(usize, Rational)>,
}

impl SparseVec {
    pub fn new() -> Self {
        SparseVec::default()
    }

    /// Builds from arbitrary `(index, value)` pairs, summing duplicates.
    pub fn from_entries(mut entries: Vec<(usize, Rational)>) -> Self {
        entries.sort_by_key(|(i, _)| *i);
        let mut out: Vec<(usize, Rational)> = Vec::with_capacity(entries.len());
        for (i, v) in entries {
            match out.last_mut() {
                Some((j, acc)) if *j == i => *acc += &v,
                _ => out.push((i, v)),
            }
        }
        out.retain(|(_, v)| !v.is_zero());
        SparseVec { entries: out }
    }

    /// Caller guarantees sorted, distinct, nonzero entries.
    pub fn from_sorted_unchecked(entries: Vec<(usize, Rational)>) -> Self {
        debug_assert!(entries.windows(2).all(|w| w[0].0 < w[1].0));
        debug_assert!(entries.iter().all(|(_, v)| !v.is_zero()));
        SparseVec { entries }
    }

    pub fn from_dense(values: &[Rational]) -> Self {
        SparseVec {
            entries: values
                .iter()
                .enumerate()
                .filter(|(_, v)| !v.is_zero())
                .map(|(i, v)| (i, v.clone()))
                .collect(),
        }
    }

    pub fn unit(i: usize) -> Self {
        SparseVec {
            entries: vec![(i, Rational::one())],
        }
    }

    pub fn to_dense(&self, len: usize) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); len];
        for (i, v) in &self.entries {
            out[*i] = v.clone();
        }
        out
    }

    pub fn get(&self, i: usize) -> Rational {
        match self.entries.binary_search_by_key(&i, |(j, _)| *j) {
            Ok(p) => self.entries[p].1.clone(),
            Err(_) => Rational::zero(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn leading(&self) -> Option<&(usize, Rational)> {
        self.entries.first()
    }

    pub fn iter(&self) -> impl Iterator<Item = &(usize, Rational)> {
        self.entries.iter()
    }

    pub fn entries(&self) -> &[(usize, Rational)] {
        &self.entries
    }

    pub fn into_entries(self) -> Vec<(usize, Rational)> {
        self.entries
    }

    pub fn max_index(&self) -> Option<usize> {
        self.entries.last().map(|(i, _)| *i)
    }

    pub fn scale(&self, c: &Rational) -> SparseVec {
        if c.is_zero() {
            return SparseVec::new();
        }
        SparseVec {
            entries: self.entries.iter().map(|(i, v)| (*i, v * c)).collect(),
        }
    }

    pub fn neg(&self) -> SparseVec {
        SparseVec {
            entries: self.entries.iter().map(|(i, v)| (*i, -v)).collect(),
        }
    }

    /// `self + c * other`
    pub fn add_scaled(&self, c: &Rational, other: &SparseVec) -> SparseVec {
        if c.is_zero() {
            return self.clone();
        }
        let (a, b) = (&self.entries, &other.entries);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() || j < b.len() {
            if j == b.len() || (i < a.len() && a[i].0 < b[j].0) {
                out.push(a[i].clone());
                i += 1;
            } else if i == a.len() || b[j].0 < a[i].0 {
                out.push((b[j].0, c * &b[j].1));
                j += 1;
            } else {
                let v = &a[i].1 + &(c * &b[j].1);
                if !v.is_zero() {
                    out.push((a[i].0, v));
                }
                i += 1;
                j += 1;
            }
        }
        SparseVec { entries: out }
    }

    pub fn add(&self, other: &SparseVec) -> SparseVec {
        self.add_scaled(&Rational::one(), other)
    }

    pub fn sub(&self, other: &SparseVec) -> SparseVec {
        self.add_scaled(&-Rational::one(), other)
    }

    pub fn dot(&self, other: &SparseVec) -> Rational {
        let (a, b) = (&self.entries, &other.entries);
        let (mut i, mut j) = (0, 0);
        let mut acc = Rational::zero();
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => {
                    acc += &(&a[i].1 * &b[j].1);
                    i += 1;
                    j += 1;
                }
            }
        }
        acc
    }

    /// Reindexes entries through `map`; entries mapped to `None` are dropped.
    pub fn remap(&self, map: impl Fn(usize) -> Option<usize>) -> SparseVec {
        SparseVec::from_entries(
            self.entries
                .iter()
                .filter_map(|(i, v)| map(*i).map(|j| (j, v.clone())))
                .collect(),
        )
    }

    /// If `self = c * other` for some scalar `c` (including zero vectors),
    /// returns `c`; two zero vectors give `Some(0)`.
    pub fn ratio_to(&self, other: &SparseVec) -> Option<Rational> {
        if other.is_zero() {
            return self.is_zero().then(Rational::zero);
        }
        let (j, w) = other.leading().unwrap();
        let c = &self.get(*j) / w;
        (other.scale(&c) == *self).then_some(c)
    }
}

impl FromIterator<(usize, Rational)> for SparseVec {
    fn from_iter<T: IntoIterator<Item = (usize, Rational)>>(iter: T) -> Self {
        SparseVec::from_entries(iter.into_iter().collect())
    }
}

/// Row-major sparse matrix with explicit dimensions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseMatrix {
    rows: usize,
    cols: usize,
    data: Vec<SparseVec>,
}

impl SparseMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        SparseMatrix {
            rows,
            cols,
            data: vec![SparseVec::new(); rows],
        }
    }

    pub fn identity(n: usize) -> Self {
        SparseMatrix {
            rows: n,
            cols: n,
            data: (0..n).map(SparseVec::unit).collect(),
        }
    }

    pub fn from_rows(rows: Vec<SparseVec>, cols: usize) -> Self {
        assert!(
            rows.iter().all(|r| r.max_index().is_none_or(|m| m < cols)),
            "row entry out of bounds"
        );
        SparseMatrix {
            rows: rows.len(),
            cols,
            data: rows,
        }
    }

    /// Builds a matrix whose columns are the given vectors.
    pub fn from_columns(columns: &[SparseVec], rows: usize) -> Self {
        SparseMatrix::from_rows(columns.to_vec(), rows).transpose()
    }

    pub fn from_dense(values: &[Vec<Rational>]) -> Self {
        let cols = values.first().map_or(0, |r| r.len());
        assert!(values.iter().all(|r| r.len() == cols), "ragged matrix");
        SparseMatrix {
            rows: values.len(),
            cols,
            data: values.iter().map(|r| SparseVec::from_dense(r)).collect(),
        }
    }

    pub fn from_i64(values: &[Vec<i64>]) -> Self {
        let dense: Vec<Vec<Rational>> = values
            .iter()
            .map(|r| r.iter().map(|&v| Rational::from(v)).collect())
            .collect();
        Self::from_dense(&dense)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, r: usize) -> &SparseVec {
        &self.data[r]
    }

    pub fn row_vectors(&self) -> &[SparseVec] {
        &self.data
    }

    pub fn into_rows(self) -> Vec<SparseVec> {
        self.data
    }

    pub fn get(&self, r: usize, c: usize) -> Rational {
        self.data[r].get(c)
    }

    pub fn set(&mut self, r: usize, c: usize, v: Rational) {
        assert!(r < self.rows && c < self.cols, "index out of bounds");
        let mut entries = std::mem::take(&mut self.data[r]).into_entries();
        entries.retain(|(i, _)| *i != c);
        entries.push((c, v));
        self.data[r] = SparseVec::from_entries(entries);
    }

    pub fn nnz(&self) -> usize {
        self.data.iter().map(SparseVec::nnz).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(SparseVec::is_zero)
    }

    pub fn to_dense(&self) -> Vec<Vec<Rational>> {
        self.data.iter().map(|r| r.to_dense(self.cols)).collect()
    }

    pub fn transpose(&self) -> SparseMatrix {
        let mut cols: Vec<Vec<(usize, Rational)>> = vec![Vec::new(); self.cols];
        for (r, row) in self.data.iter().enumerate() {
            for (c, v) in row.iter() {
                cols[*c].push((r, v.clone()));
            }
        }
        SparseMatrix {
            rows: self.cols,
            cols: self.rows,
            data: cols
                .into_iter()
                .map(SparseVec::from_sorted_unchecked)
                .collect(),
        }
    }

    pub fn column(&self, c: usize) -> SparseVec {
        SparseVec::from_sorted_unchecked(
            self.data
                .iter()
                .enumerate()
                .filter_map(|(r, row)| {
                    let v = row.get(c);
                    (!v.is_zero()).then_some((r, v))
                })
                .collect(),
        )
    }

    pub fn columns(&self) -> Vec<SparseVec> {
        self.transpose().into_rows()
    }

    pub fn mul_vec(&self, v: &SparseVec) -> SparseVec {
        SparseVec::from_sorted_unchecked(
            self.data
                .iter()
                .enumerate()
                .filter_map(|(r, row)| {
                    let x = row.dot(v);
                    (!x.is_zero()).then_some((r, x))
                })
                .collect(),
        )
    }

    pub fn mul(&self, other: &SparseMatrix) -> SparseMatrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let data = self
            .data
            .iter()
            .map(|row| {
                let mut acc = SparseVec::new();
                for (k, v) in row.iter() {
                    acc = acc.add_scaled(v, &other.data[*k]);
                }
                acc
            })
            .collect();
        SparseMatrix {
            rows: self.rows,
            cols: other.cols,
            data,
        }
    }

    pub fn scale(&self, c: &Rational) -> SparseMatrix {
        SparseMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|r| r.scale(c)).collect(),
        }
    }

    pub fn add_scaled(&self, c: &Rational, other: &SparseMatrix) -> SparseMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        SparseMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a.add_scaled(c, b))
                .collect(),
        }
    }

    pub fn sub(&self, other: &SparseMatrix) -> SparseMatrix {
        self.add_scaled(&-Rational::one(), other)
    }

    /// `Some(c)` with `self = c * other`, treating two zero matrices as `c = 0`.
    pub fn ratio_to(&self, other: &SparseMatrix) -> Option<Rational> {
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return None;
        }
        let Some((r, (c, w))) = other
            .data
            .iter()
            .enumerate()
            .find_map(|(r, row)| row.leading().map(|e| (r, e)))
        else {
            return self.is_zero().then(Rational::zero);
        };
        let scalar = &self.get(r, *c) / w;
        (other.scale(&scalar) == *self).then_some(scalar)
    }

    /// Entries as `(row, col, value)` in row-major order.
    pub fn triplets(&self) -> impl Iterator<Item = (usize, usize, &Rational)> {
        self.data
            .iter()
            .enumerate()
            .flat_map(|(r, row)| row.iter().map(move |(c, v)| (r, *c, v)))
    }
}

impl fmt::Display for SparseMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in self.to_dense() {
            let cells: Vec<String> = row.iter().map(|v| v.to_string()).collect();
            writeln!(f, "[{}]", cells.join(", "))?;
        }
        Ok(())
    }
}
