use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

/// Largest number of variable triples `(x_i, y_i, θ_i)` a monomial can carry.
pub const MAX_N: usize = 6;

/// `(dx, dy, da)`: x-degree, y-degree and θ-degree.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct TriDegree {
    pub dx: usize,
    pub dy: usize,
    pub da: usize,
}

impl TriDegree {
    pub const fn new(dx: usize, dy: usize, da: usize) -> Self {
        TriDegree { dx, dy, da }
    }

    pub const fn bi(dx: usize, dy: usize) -> Self {
        TriDegree { dx, dy, da: 0 }
    }

    pub fn total(&self) -> usize {
        self.dx + self.dy
    }

    /// Adds a signed shift; `None` if any component would go negative.
    pub fn shift(&self, s: Shift) -> Option<TriDegree> {
        let f = |v: usize, d: i64| usize::try_from(v as i64 + d).ok();
        Some(TriDegree {
            dx: f(self.dx, s.dx)?,
            dy: f(self.dy, s.dy)?,
            da: f(self.da, s.da)?,
        })
    }

    /// Exchanges the x- and y-degrees.
    pub fn swapped(&self) -> TriDegree {
        TriDegree::new(self.dy, self.dx, self.da)
    }
}

impl fmt::Display for TriDegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.dx, self.dy, self.da)
    }
}

/// Degree change of a homogeneous operator.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Shift {
    pub dx: i64,
    pub dy: i64,
    pub da: i64,
}

impl Shift {
    pub const fn new(dx: i64, dy: i64, da: i64) -> Self {
        Shift { dx, dy, da }
    }

    pub fn then(self, next: Shift) -> Shift {
        Shift::new(self.dx + next.dx, self.dy + next.dy, self.da + next.da)
    }
}

/// A monomial `x^α y^β θ_S` with `θ_S = θ_{s1} ∧ … ∧ θ_{sk}`, `s1 < … < sk`.
///
/// Variable indices are 0-based here and 1-based in renderings.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Monomial {
    x: [u8; MAX_N],
    y: [u8; MAX_N],
    theta: u8,
}

impl Monomial {
    pub const fn one() -> Self {
        Monomial {
            x: [0; MAX_N],
            y: [0; MAX_N],
            theta: 0,
        }
    }

    pub fn from_parts(x: &[u8], y: &[u8], theta: &[usize]) -> Self {
        assert!(x.len() <= MAX_N && y.len() <= MAX_N, "too many variables");
        let mut m = Monomial::one();
        m.x[..x.len()].copy_from_slice(x);
        m.y[..y.len()].copy_from_slice(y);
        for &t in theta {
            assert!(t < MAX_N, "theta index out of range");
            m.theta |= 1 << t;
        }
        m
    }

    pub fn x(i: usize) -> Self {
        let mut m = Monomial::one();
        m.x[i] = 1;
        m
    }

    pub fn y(i: usize) -> Self {
        let mut m = Monomial::one();
        m.y[i] = 1;
        m
    }

    pub fn theta(i: usize) -> Self {
        let mut m = Monomial::one();
        m.theta = 1 << i;
        m
    }

    pub fn x_exps(&self) -> &[u8; MAX_N] {
        &self.x
    }

    pub fn y_exps(&self) -> &[u8; MAX_N] {
        &self.y
    }

    pub fn x_exp(&self, i: usize) -> u8 {
        self.x[i]
    }

    pub fn y_exp(&self, i: usize) -> u8 {
        self.y[i]
    }

    pub fn set_x(&mut self, i: usize, e: u8) {
        self.x[i] = e;
    }

    pub fn set_y(&mut self, i: usize, e: u8) {
        self.y[i] = e;
    }

    pub fn theta_mask(&self) -> u8 {
        self.theta
    }

    pub fn with_theta_mask(mut self, mask: u8) -> Self {
        self.theta = mask;
        self
    }

    /// Drops the θ part.
    pub fn even_part(&self) -> Monomial {
        self.with_theta_mask(0)
    }

    pub fn has_theta(&self, i: usize) -> bool {
        self.theta & (1 << i) != 0
    }

    pub fn theta_set(&self) -> impl Iterator<Item = usize> + '_ {
        (0..MAX_N).filter(|&i| self.has_theta(i))
    }

    pub fn degree(&self) -> TriDegree {
        TriDegree {
            dx: self.x.iter().map(|&e| e as usize).sum(),
            dy: self.y.iter().map(|&e| e as usize).sum(),
            da: self.theta.count_ones() as usize,
        }
    }

    /// Highest variable index used plus one.
    pub fn span(&self) -> usize {
        (0..MAX_N)
            .rev()
            .find(|&i| self.x[i] != 0 || self.y[i] != 0 || self.has_theta(i))
            .map_or(0, |i| i + 1)
    }

    /// `x^α y^β` part equal and θ part multiplied with the Koszul sign:
    /// `θ_T θ_S = (-1)^{#{(t,s): t > s}} θ_{T∪S}`, zero on overlap.
    pub fn mul(&self, other: &Monomial) -> Option<(bool, Monomial)> {
        if self.theta & other.theta != 0 {
            return None;
        }
        let mut out = Monomial::one();
        for i in 0..MAX_N {
            out.x[i] = self.x[i] + other.x[i];
            out.y[i] = self.y[i] + other.y[i];
        }
        out.theta = self.theta | other.theta;
        Some((koszul_negative(self.theta, other.theta), out))
    }

    /// Applies `x_i -> x_{σ(i)}` (and likewise for `y`, `θ`); the flag is the
    /// sign of re-sorting the θ word.
    pub fn permute(&self, sigma: &[usize]) -> (bool, Monomial) {
        let mut out = Monomial::one();
        let mut word = [0usize; MAX_N];
        let mut k = 0;
        for (i, &s) in sigma.iter().enumerate() {
            out.x[s] = self.x[i];
            out.y[s] = self.y[i];
            if self.has_theta(i) {
                out.theta |= 1 << s;
                word[k] = s;
                k += 1;
            }
        }
        let word = &word[..k];
        let mut inversions = 0;
        for a in 0..k {
            for b in a + 1..k {
                if word[a] > word[b] {
                    inversions += 1;
                }
            }
        }
        (inversions % 2 == 1, out)
    }

    /// Exchanges the x- and y-exponents.
    pub fn swap_xy(&self) -> Monomial {
        Monomial {
            x: self.y,
            y: self.x,
            theta: self.theta,
        }
    }

    /// `∏ α_i! β_i!`, the self-pairing of the monomial.
    pub fn factorial_weight(&self) -> crate::linalg::Int {
        let mut acc = crate::linalg::Int::from(1i64);
        for &e in self.x.iter().chain(self.y.iter()) {
            if e > 1 {
                acc = &acc * &crate::linalg::Int::factorial(e as u32);
            }
        }
        acc
    }

    fn theta_key(&self) -> impl Iterator<Item = bool> + '_ {
        (0..MAX_N).map(|i| self.has_theta(i))
    }
}

/// Whether `θ_T θ_S` picks up a minus sign when sorted.
pub(crate) fn koszul_negative(t: u8, s: u8) -> bool {
    let mut count = 0u32;
    let mut tt = t;
    while tt != 0 {
        let i = tt.trailing_zeros();
        count += (s & ((1u8 << i) - 1)).count_ones();
        tt &= tt - 1;
    }
    count % 2 == 1
}

impl Ord for Monomial {
    /// Graded lexicographic on `x_1 > … > x_n > y_1 > … > y_n`, then θ-sets
    /// by size and lexicographically on indicator vectors (`θ_1 > θ_2`).
    fn cmp(&self, other: &Self) -> Ordering {
        let (a, b) = (self.degree(), other.degree());
        a.total()
            .cmp(&b.total())
            .then_with(|| self.x.cmp(&other.x))
            .then_with(|| self.y.cmp(&other.y))
            .then_with(|| a.da.cmp(&b.da))
            .then_with(|| self.theta_key().cmp(other.theta_key()))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        for (name, exps) in [("x", &self.x), ("y", &self.y)] {
            for (i, &e) in exps.iter().enumerate() {
                match e {
                    0 => {}
                    1 => parts.push(format!("{name}{}", i + 1)),
                    _ => parts.push(format!("{name}{}^{e}", i + 1)),
                }
            }
        }
        for i in self.theta_set() {
            parts.push(format!("th{}", i + 1));
        }
        if parts.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", parts.join("*"))
        }
    }
}

/// All monomials in `n` variables of the given tri-degree, largest first.
pub fn monomials_of_degree(n: usize, d: TriDegree) -> Vec<Monomial> {
    let xs = compositions(d.dx, n);
    let ys = compositions(d.dy, n);
    let thetas = subsets(n, d.da);
    let mut out = Vec::with_capacity(xs.len() * ys.len() * thetas.len());
    for x in &xs {
        for y in &ys {
            for &t in &thetas {
                let mut m = Monomial::from_parts(x, y, &[]);
                m.theta = t;
                out.push(m);
            }
        }
    }
    out.sort_unstable_by(|a, b| b.cmp(a));
    out
}

/// Number of monomials of the given tri-degree.
pub fn count_of_degree(n: usize, d: TriDegree) -> usize {
    binomial(d.dx + n - 1, n - 1) * binomial(d.dy + n - 1, n - 1) * binomial(n, d.da)
}

pub(crate) fn binomial(a: usize, b: usize) -> usize {
    if b > a {
        return 0;
    }
    let b = b.min(a - b);
    (0..b).fold(1usize, |acc, i| acc * (a - i) / (i + 1))
}

fn compositions(total: usize, parts: usize) -> Vec<Vec<u8>> {
    if parts == 0 {
        return if total == 0 { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    let mut cur = vec![0u8; parts];
    fn rec(i: usize, left: usize, cur: &mut Vec<u8>, out: &mut Vec<Vec<u8>>) {
        if i + 1 == cur.len() {
            cur[i] = left as u8;
            out.push(cur.clone());
            return;
        }
        for e in (0..=left).rev() {
            cur[i] = e as u8;
            rec(i + 1, left - e, cur, out);
        }
    }
    rec(0, total, &mut cur, &mut out);
    out
}

/// Bitmasks of the `k`-subsets of `{0..n}`.
pub(crate) fn subsets(n: usize, k: usize) -> Vec<u8> {
    (0u32..(1 << n))
        .filter(|m| m.count_ones() as usize == k)
        .map(|m| m as u8)
        .collect()
}
