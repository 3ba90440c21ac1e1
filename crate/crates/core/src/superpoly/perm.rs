use std::fmt;

use itertools::Itertools;

/// A permutation of `{0..n}` stored by images: `i -> img[i]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    img: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            img: (0..n).collect(),
        }
    }

    pub fn from_images(img: Vec<usize>) -> Option<Self> {
        let mut seen = vec![false; img.len()];
        for &i in &img {
            if i >= img.len() || std::mem::replace(&mut seen[i], true) {
                return None;
            }
        }
        Some(Permutation { img })
    }

    /// Builds from 1-based cycles, e.g. `&[&[1, 2, 3]]` for `(123)`.
    pub fn from_cycles(n: usize, cycles: &[&[usize]]) -> Option<Self> {
        let mut img: Vec<usize> = (0..n).collect();
        for c in cycles {
            for (k, &a) in c.iter().enumerate() {
                let b = c[(k + 1) % c.len()];
                if a == 0 || b == 0 || a > n || b > n {
                    return None;
                }
                img[a - 1] = b - 1;
            }
        }
        Permutation::from_images(img)
    }

    pub fn n(&self) -> usize {
        self.img.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.img
    }

    pub fn apply(&self, i: usize) -> usize {
        self.img[i]
    }

    /// `(self ∘ other)(i) = self(other(i))`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.n(), other.n(), "permutation sizes differ");
        Permutation {
            img: other.img.iter().map(|&i| self.img[i]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut img = vec![0; self.n()];
        for (i, &s) in self.img.iter().enumerate() {
            img[s] = i;
        }
        Permutation { img }
    }

    pub fn is_odd(&self) -> bool {
        let inversions = (0..self.n())
            .tuple_combinations()
            .filter(|&(a, b)| self.img[a] > self.img[b])
            .count();
        inversions % 2 == 1
    }

    pub fn sign(&self) -> i64 {
        if self.is_odd() {
            -1
        } else {
            1
        }
    }

    /// All of `S_n` in lexicographic order of image vectors.
    pub fn all(n: usize) -> Vec<Permutation> {
        (0..n)
            .permutations(n)
            .map(|img| Permutation { img })
            .collect()
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let imgs: Vec<String> = self.img.iter().map(|i| (i + 1).to_string()).collect();
        write!(f, "[{}]", imgs.join(" "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn group_basics() {
        assert_eq!(Permutation::all(3).len(), 6);
        let c = Permutation::from_cycles(3, &[&[1, 2, 3]]).unwrap();
        assert_eq!(c.images(), &[1, 2, 0]);
        assert!(!c.is_odd());
        assert_eq!(c.compose(&c.inverse()), Permutation::identity(3));
        let t = Permutation::from_cycles(3, &[&[1, 2]]).unwrap();
        assert!(t.is_odd());
        assert!(Permutation::from_images(vec![0, 0]).is_none());
    }
}
