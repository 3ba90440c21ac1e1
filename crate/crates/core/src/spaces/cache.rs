//! On-disk cache of per-degree RREF matrices.
//!
//! One text file per (kind, n). The header pins the format version, n and the
//! monomial order; files whose header does not match exactly are ignored and
//! recomputed, never migrated. Writes go to a temporary file that is renamed
//! into place.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use crate::error::{Error, Result};
use crate::linalg::{Rational, Rref, SparseVec};
use crate::superpoly::{monomials_of_degree, TriDegree};

use super::{Coinvariants, GradedSubspace};

pub const CACHE_FORMAT: u32 = 1;
/// Identifies the monomial order that column indices refer to.
pub const ORDER_ID: &str = "grlex-x1..xn-y1..yn-thetalex";

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CacheKind {
    Coinvariants,
    Harmonics,
}

impl CacheKind {
    fn tag(self) -> &'static str {
        match self {
            CacheKind::Coinvariants => "coinvariants",
            CacheKind::Harmonics => "harmonics",
        }
    }
}

#[derive(Clone, Debug)]
pub struct Cache {
    dir: PathBuf,
}

impl Cache {
    pub fn new(dir: impl Into<PathBuf>) -> Self {
        Cache { dir: dir.into() }
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    pub fn path(&self, kind: CacheKind, n: usize) -> PathBuf {
        self.dir
            .join(format!("{}-n{n}-v{CACHE_FORMAT}.txt", kind.tag()))
    }

    fn header(kind: CacheKind, n: usize) -> String {
        format!(
            "harmonica-cache\nformat {CACHE_FORMAT}\nkind {}\nn {n}\norder {ORDER_ID}\n",
            kind.tag()
        )
    }

    fn write_atomic(&self, path: &Path, contents: &str) -> Result<()> {
        let io = |source| Error::Io {
            path: path.to_path_buf(),
            source,
        };
        fs::create_dir_all(&self.dir).map_err(io)?;
        let tmp = path.with_extension(format!("tmp.{}", std::process::id()));
        fs::write(&tmp, contents).map_err(|source| Error::Io {
            path: tmp.clone(),
            source,
        })?;
        fs::rename(&tmp, path).map_err(io)
    }

    fn read_body(&self, kind: CacheKind, n: usize) -> Option<String> {
        let text = fs::read_to_string(self.path(kind, n)).ok()?;
        text.strip_prefix(&Self::header(kind, n)).map(str::to_owned)
    }

    pub fn store_coinvariants(&self, dr: &Coinvariants) -> Result<()> {
        let n = crate::spaces::GradedModel::n(dr);
        let mut s = Self::header(CacheKind::Coinvariants, n);
        writeln!(s, "max_total {}", dr.max_total()).unwrap();
        for ((a, b), r) in dr.relations() {
            match r {
                None => writeln!(s, "full {a} {b}").unwrap(),
                Some(r) => write_piece(&mut s, TriDegree::bi(a, b), r),
            }
        }
        s.push_str("end\n");
        self.write_atomic(&self.path(CacheKind::Coinvariants, n), &s)
    }

    /// `None` on a missing, stale or malformed file.
    pub fn load_coinvariants(&self, n: usize) -> Option<Coinvariants> {
        let body = self.read_body(CacheKind::Coinvariants, n)?;
        let mut lines = body.lines();
        let max_total = lines.next()?.strip_prefix("max_total ")?.parse().ok()?;
        let mut rels = BTreeMap::new();
        loop {
            let line = lines.next()?;
            let fields: Vec<&str> = line.split(' ').collect();
            match fields[0] {
                "end" => break,
                "full" if fields.len() == 3 => {
                    rels.insert((fields[1].parse().ok()?, fields[2].parse().ok()?), None);
                }
                "piece" => {
                    let (d, r) = read_piece(n, &fields, &mut lines)?;
                    rels.insert((d.dx, d.dy), Some(r));
                }
                _ => return None,
            }
        }
        Some(Coinvariants::from_relations(n, max_total, rels))
    }

    pub fn store_harmonics(&self, dh: &GradedSubspace) -> Result<()> {
        let n = crate::spaces::GradedModel::n(dh);
        let mut s = Self::header(CacheKind::Harmonics, n);
        for (d, r) in dh.pieces() {
            write_piece(&mut s, d, r);
        }
        s.push_str("end\n");
        self.write_atomic(&self.path(CacheKind::Harmonics, n), &s)
    }

    pub fn load_harmonics(&self, n: usize) -> Option<GradedSubspace> {
        let body = self.read_body(CacheKind::Harmonics, n)?;
        let mut lines = body.lines();
        let mut out = GradedSubspace::new(n, format!("DH_{n}"));
        loop {
            let line = lines.next()?;
            let fields: Vec<&str> = line.split(' ').collect();
            match fields[0] {
                "end" => break,
                "piece" => {
                    let (d, r) = read_piece(n, &fields, &mut lines)?;
                    out.insert_rref(d, monomials_of_degree(n, d), r);
                }
                _ => return None,
            }
        }
        Some(out)
    }
}

fn write_piece(s: &mut String, d: TriDegree, r: &Rref) {
    writeln!(
        s,
        "piece {} {} {} {} {}",
        d.dx,
        d.dy,
        d.da,
        r.cols(),
        r.rank()
    )
    .unwrap();
    for row in r.rows() {
        let cells: Vec<String> = row.iter().map(|(c, v)| format!("{c}:{v}")).collect();
        writeln!(s, "{}", cells.join(" ")).unwrap();
    }
}

fn read_piece<'a>(
    n: usize,
    fields: &[&str],
    lines: &mut impl Iterator<Item = &'a str>,
) -> Option<(TriDegree, Rref)> {
    if fields.len() != 6 {
        return None;
    }
    let nums: Vec<usize> = fields[1..]
        .iter()
        .map(|f| f.parse().ok())
        .collect::<Option<_>>()?;
    let d = TriDegree::new(nums[0], nums[1], nums[2]);
    let (cols, rank) = (nums[3], nums[4]);
    if cols != crate::superpoly::count_of_degree(n, d) {
        return None;
    }
    let mut rows = Vec::with_capacity(rank);
    for _ in 0..rank {
        let line = lines.next()?;
        let entries: Vec<(usize, Rational)> = line
            .split(' ')
            .filter(|c| !c.is_empty())
            .map(|cell| {
                let (c, v) = cell.split_once(':')?;
                Some((c.parse().ok()?, v.parse().ok()?))
            })
            .collect::<Option<_>>()?;
        rows.push(SparseVec::from_entries(entries));
    }
    Some((d, Rref::from_reduced_rows(rows, cols)?))
}
