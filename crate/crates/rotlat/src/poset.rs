//! Finite posets on index sets `0..size`, with enumeration up to isomorphism.
//!
//! Posets here are small: they serve as Birkhoff duals of finite distributive
//! lattices, so each point is one join-irreducible. Rows of the order relation
//! are kept as single `u64` masks, which caps the size at 64 points.

use crate::error::{Error, Result};
use crate::perm::Perm;

/// Hard cap on poset size imposed by the u64-row encoding.
pub const POSET_SIZE_CAP: usize = 64;

/// Default cap for exhaustive poset enumeration.
pub const POSET_ENUM_CAP: usize = 6;

/// (down-set size, up-set size, height) per point; isomorphism-invariant.
type PointFingerprint = (usize, usize, usize);

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Poset {
    size: usize,
    /// `up[i]` has bit j set iff i ≤ j.
    up: Vec<u64>,
    /// `down[j]` has bit i set iff i ≤ j.
    down: Vec<u64>,
}

impl Poset {
    /// Builds a poset from an arbitrary set of relation pairs: the
    /// reflexive-transitive closure is taken, and a cycle (an antisymmetry
    /// violation) is an error.
    pub fn from_pairs(size: usize, pairs: &[(usize, usize)]) -> Result<Poset> {
        if size > POSET_SIZE_CAP {
            return Err(Error::PosetTooLarge {
                size,
                max: POSET_SIZE_CAP,
            });
        }
        let mut up = vec![0u64; size];
        for (i, row) in up.iter_mut().enumerate() {
            *row = 1 << i;
        }
        for &(i, j) in pairs {
            if i >= size || j >= size {
                return Err(Error::PairOutOfRange { i, j, size });
            }
            up[i] |= 1 << j;
        }
        // Warshall closure on u64 rows.
        for k in 0..size {
            for i in 0..size {
                if up[i] >> k & 1 == 1 {
                    up[i] |= up[k];
                }
            }
        }
        for i in 0..size {
            for j in (i + 1)..size {
                if up[i] >> j & 1 == 1 && up[j] >> i & 1 == 1 {
                    return Err(Error::CycleDetected { i, j });
                }
            }
        }
        Ok(Poset::from_up_rows(size, up))
    }

    fn from_up_rows(size: usize, up: Vec<u64>) -> Poset {
        let mut down = vec![0u64; size];
        for (i, &row) in up.iter().enumerate() {
            for (j, d) in down.iter_mut().enumerate() {
                if row >> j & 1 == 1 {
                    *d |= 1 << i;
                }
            }
        }
        Poset { size, up, down }
    }

    pub fn antichain(n: usize) -> Poset {
        Poset::from_pairs(n, &[]).expect("antichain within cap")
    }

    pub fn chain(n: usize) -> Poset {
        let pairs: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Poset::from_pairs(n, &pairs).expect("chain within cap")
    }

    pub fn size(&self) -> usize {
        self.size
    }

    #[inline]
    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.up[i] >> j & 1 == 1
    }

    /// Mask of points strictly below `j`.
    #[inline]
    pub fn strict_down(&self, j: usize) -> u64 {
        self.down[j] & !(1 << j)
    }

    /// Mask of all points ≤ j.
    #[inline]
    pub fn down_mask(&self, j: usize) -> u64 {
        self.down[j]
    }

    /// Covering pairs (i, j) with i ≺ j, sorted lexicographically.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 0..self.size {
            for j in 0..self.size {
                if i == j || !self.leq(i, j) {
                    continue;
                }
                let between = self.up[i] & self.down[j] & !(1 << i) & !(1 << j);
                if between == 0 {
                    out.push((i, j));
                }
            }
        }
        out
    }

    /// Height of each point: length of the longest chain below it.
    pub fn heights(&self) -> Vec<usize> {
        let mut order: Vec<usize> = (0..self.size).collect();
        order.sort_by_key(|&i| self.down[i].count_ones());
        let mut h = vec![0usize; self.size];
        for &j in &order {
            for i in 0..self.size {
                if i != j && self.leq(i, j) {
                    h[j] = h[j].max(h[i] + 1);
                }
            }
        }
        h
    }

    /// Per-point invariant used to prune isomorphism search.
    fn fingerprints(&self) -> Vec<PointFingerprint> {
        let h = self.heights();
        (0..self.size)
            .map(|i| {
                (
                    self.down[i].count_ones() as usize,
                    self.up[i].count_ones() as usize,
                    h[i],
                )
            })
            .collect()
    }

    /// First isomorphism found in ascending search order, if any.
    pub fn isomorphism(&self, other: &Poset) -> Option<Perm> {
        if self.size != other.size {
            return None;
        }
        let fa = self.fingerprints();
        let fb = other.fingerprints();
        let mut sa = fa.clone();
        let mut sb = fb.clone();
        sa.sort_unstable();
        sb.sort_unstable();
        if sa != sb {
            return None;
        }
        let mut map = vec![usize::MAX; self.size];
        let mut used = vec![false; self.size];
        if self.extend_iso(other, &fa, &fb, &mut map, &mut used, 0) {
            Some(Perm::from_images(map).expect("bijection by construction"))
        } else {
            None
        }
    }

    fn extend_iso(
        &self,
        other: &Poset,
        fa: &[PointFingerprint],
        fb: &[PointFingerprint],
        map: &mut Vec<usize>,
        used: &mut Vec<bool>,
        next: usize,
    ) -> bool {
        if next == self.size {
            return true;
        }
        'cand: for cand in 0..self.size {
            if used[cand] || fa[next] != fb[cand] {
                continue;
            }
            for (prev, &mapped) in map.iter().enumerate().take(next) {
                if self.leq(prev, next) != other.leq(mapped, cand)
                    || self.leq(next, prev) != other.leq(cand, mapped)
                {
                    continue 'cand;
                }
            }
            map[next] = cand;
            used[cand] = true;
            if self.extend_iso(other, fa, fb, map, used, next + 1) {
                return true;
            }
            map[next] = usize::MAX;
            used[cand] = false;
        }
        false
    }

    pub fn is_isomorphic(&self, other: &Poset) -> bool {
        self.isomorphism(other).is_some()
    }

    /// All automorphisms, sorted by image vector.
    pub fn automorphisms(&self) -> Vec<Perm> {
        let f = self.fingerprints();
        let mut out = Vec::new();
        let mut map = vec![usize::MAX; self.size];
        let mut used = vec![false; self.size];
        self.collect_autos(&f, &mut map, &mut used, 0, &mut out);
        out
    }

    fn collect_autos(
        &self,
        f: &[PointFingerprint],
        map: &mut Vec<usize>,
        used: &mut Vec<bool>,
        next: usize,
        out: &mut Vec<Perm>,
    ) {
        if next == self.size {
            out.push(Perm::from_images(map.clone()).expect("bijection"));
            return;
        }
        'cand: for cand in 0..self.size {
            if used[cand] || f[next] != f[cand] {
                continue;
            }
            for (prev, &mapped) in map.iter().enumerate().take(next) {
                if self.leq(prev, next) != self.leq(mapped, cand)
                    || self.leq(next, prev) != self.leq(cand, mapped)
                {
                    continue 'cand;
                }
            }
            map[next] = cand;
            used[cand] = true;
            self.collect_autos(f, map, used, next + 1, out);
            map[next] = usize::MAX;
            used[cand] = false;
        }
    }
}

/// All posets with at most `max_size` points, one representative per
/// isomorphism class, in a deterministic order (by size, then by discovery).
///
/// The empty poset is included; its down-set lattice is the one-element
/// lattice. Representatives are generated from subsets of the strict upper
/// triangle (every poset can be relabeled along a linear extension), closed
/// transitively, and deduplicated by invariant vector plus exact isomorphism
/// search.
pub fn enumerate_posets(max_size: usize) -> Result<Vec<Poset>> {
    if max_size > POSET_ENUM_CAP {
        return Err(Error::OracleCapExceeded {
            size: max_size,
            cap: POSET_ENUM_CAP,
            what: "poset enumeration",
        });
    }
    let mut out = Vec::new();
    for n in 0..=max_size {
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|i| ((i + 1)..n).map(move |j| (i, j)))
            .collect();
        let mut reps: Vec<(Vec<PointFingerprint>, Poset)> = Vec::new();
        for mask in 0u32..(1 << pairs.len()) {
            let chosen: Vec<(usize, usize)> = pairs
                .iter()
                .enumerate()
                .filter(|(k, _)| mask >> k & 1 == 1)
                .map(|(_, &p)| p)
                .collect();
            let p = Poset::from_pairs(n, &chosen).expect("upper triangle is acyclic");
            let mut fp = p.fingerprints();
            fp.sort_unstable();
            if !reps
                .iter()
                .any(|(rfp, rep)| *rfp == fp && rep.is_isomorphic(&p))
            {
                reps.push((fp, p));
            }
        }
        out.extend(reps.into_iter().map(|(_, p)| p));
    }
    Ok(out)
}
