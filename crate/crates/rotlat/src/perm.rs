//! Permutations on `0..n`, used both for poset automorphisms and for the
//! rotation map of a rotational lattice.

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm {
    images: Vec<usize>,
}

impl Perm {
    pub fn identity(n: usize) -> Perm {
        Perm {
            images: (0..n).collect(),
        }
    }

    /// Builds a permutation from its image vector, rejecting non-bijections.
    pub fn from_images(images: Vec<usize>) -> Result<Perm> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &img in &images {
            if img >= n || seen[img] {
                return Err(Error::BadPermutation { size: n });
            }
            seen[img] = true;
        }
        Ok(Perm { images })
    }

    /// Builds a permutation on `0..n` from disjoint cycles; points not
    /// mentioned are fixed.
    pub fn from_cycles(n: usize, cycles: &[&[usize]]) -> Result<Perm> {
        let mut images: Vec<usize> = (0..n).collect();
        for cycle in cycles {
            for (k, &x) in cycle.iter().enumerate() {
                if x >= n {
                    return Err(Error::BadPermutation { size: n });
                }
                images[x] = cycle[(k + 1) % cycle.len()];
            }
        }
        Perm::from_images(images)
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.images[x]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &img)| i == img)
    }

    /// `self.compose(&f)` applies `f` first, then `self`.
    pub fn compose(&self, f: &Perm) -> Perm {
        assert_eq!(self.len(), f.len());
        Perm {
            images: (0..self.len()).map(|x| self.apply(f.apply(x))).collect(),
        }
    }

    pub fn inverse(&self) -> Perm {
        let mut images = vec![0; self.len()];
        for (x, &img) in self.images.iter().enumerate() {
            images[img] = x;
        }
        Perm { images }
    }

    /// Cycle decomposition; each cycle starts at its least point, cycles
    /// sorted by that point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.len()];
        let mut out = Vec::new();
        for start in 0..self.len() {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                cycle.push(x);
                x = self.apply(x);
            }
            out.push(cycle);
        }
        out
    }

    /// The orbit of `x`: x, f(x), f(f(x)), ... up to the first repeat.
    pub fn orbit_of(&self, x: usize) -> Vec<usize> {
        let mut orbit = vec![x];
        let mut y = self.apply(x);
        while y != x {
            orbit.push(y);
            y = self.apply(y);
        }
        orbit
    }

    /// Least k >= 1 with self^k = identity (lcm of cycle lengths).
    pub fn order(&self) -> usize {
        self.cycles()
            .iter()
            .fold(1, |acc, cycle| lcm(acc, cycle.len()))
    }

    pub fn pow(&self, k: usize) -> Perm {
        let mut result = Perm::identity(self.len());
        for _ in 0..k {
            result = self.compose(&result);
        }
        result
    }
}

pub fn gcd(a: usize, b: usize) -> usize {
    if b == 0 { a } else { gcd(b, a % b) }
}

pub fn lcm(a: usize, b: usize) -> usize {
    if a == 0 || b == 0 { 0 } else { a / gcd(a, b) * b }
}
