//! Finite lattices on index sets `0..size`.
//!
//! Two internal encodings are used. Lattices arising from Birkhoff duality
//! (down-set families of a poset, and more generally any family of bit masks
//! closed under union and intersection) store one `u64` mask per element;
//! join and meet are word-parallel union and intersection, and such lattices
//! are distributive by construction. Lattices built from an arbitrary order
//! relation (needed only to handle non-distributive input) store explicit
//! join/meet tables; no attempt is made at efficiency there.

use crate::bits::{mask_bits, BitMatrix};
use crate::error::{Error, Result};
use crate::perm::Perm;
use crate::poset::Poset;

/// Default cap on lattice size. Everything here is O(size²)–O(size³) and
/// fails fast above this.
pub const ELEMENT_CAP: usize = 4096;

#[derive(Debug, Clone)]
enum Repr {
    /// Elements are bit masks, strictly ascending; the family is closed
    /// under `|` and `&`.
    Masks { points: usize, elems: Vec<u64> },
    /// Explicit operation tables plus the order as a bit matrix.
    Tables {
        leq: BitMatrix,
        join: Vec<u32>,
        meet: Vec<u32>,
    },
}

#[derive(Debug, Clone)]
pub struct FiniteLattice {
    size: usize,
    repr: Repr,
    zero: usize,
    one: usize,
}

/// Structural summary of a lattice.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructureReport {
    pub atoms: Vec<usize>,
    pub heights: Vec<usize>,
    pub length: usize,
    pub covers: Vec<(usize, usize)>,
    pub distributive: bool,
}

impl FiniteLattice {
    pub(crate) fn from_masks(points: usize, mut elems: Vec<u64>) -> Result<FiniteLattice> {
        elems.sort_unstable();
        elems.dedup();
        let size = elems.len();
        if size > ELEMENT_CAP {
            return Err(Error::ElementCapExceeded {
                size,
                cap: ELEMENT_CAP,
            });
        }
        let and_all = elems.iter().fold(!0u64, |a, &b| a & b);
        let or_all = elems.iter().fold(0u64, |a, &b| a | b);
        let zero = elems.binary_search(&and_all).map_err(|_| Error::BadTables {
            law: "meet closure",
            i: 0,
            j: 0,
        })?;
        let one = elems.binary_search(&or_all).map_err(|_| Error::BadTables {
            law: "join closure",
            i: 0,
            j: 0,
        })?;
        Ok(FiniteLattice {
            size,
            repr: Repr::Masks { points, elems },
            zero,
            one,
        })
    }

    /// Builds a lattice from relation pairs (reflexive-transitive closure is
    /// taken). Fails if the closure is not a partial order or if some pair
    /// lacks a join or meet.
    pub fn from_leq_pairs(size: usize, pairs: &[(usize, usize)]) -> Result<FiniteLattice> {
        if size == 0 {
            return Err(Error::NotALattice {
                i: 0,
                j: 0,
                op: "least element",
            });
        }
        if size > ELEMENT_CAP {
            return Err(Error::ElementCapExceeded {
                size,
                cap: ELEMENT_CAP,
            });
        }
        let mut up = BitMatrix::new(size);
        let mut down = BitMatrix::new(size);
        for i in 0..size {
            up.set(i, i);
        }
        for &(i, j) in pairs {
            if i >= size || j >= size {
                return Err(Error::PairOutOfRange { i, j, size });
            }
            up.set(i, j);
        }
        // Warshall closure.
        for k in 0..size {
            for i in 0..size {
                if i != k && up.get(i, k) {
                    let krow: Vec<u64> = up.row(k).to_vec();
                    up.or_into_row(i, &krow);
                }
            }
        }
        for i in 0..size {
            for j in (i + 1)..size {
                if up.get(i, j) && up.get(j, i) {
                    return Err(Error::CycleDetected { i, j });
                }
            }
        }
        for i in 0..size {
            for j in 0..size {
                if up.get(i, j) {
                    down.set(j, i);
                }
            }
        }
        // Elements listed bottom-up: low elements have large up-sets.
        let mut low_first: Vec<usize> = (0..size).collect();
        low_first.sort_by_key(|&i| std::cmp::Reverse(up.row_count(i)));
        let mut high_first: Vec<usize> = (0..size).collect();
        high_first.sort_by_key(|&i| std::cmp::Reverse(down.row_count(i)));

        let mut join = vec![0u32; size * size];
        let mut meet = vec![0u32; size * size];
        for i in 0..size {
            for j in i..size {
                let jv = bound(&up, &low_first, i, j)
                    .ok_or(Error::NotALattice { i, j, op: "join" })?;
                let mv = bound(&down, &high_first, i, j)
                    .ok_or(Error::NotALattice { i, j, op: "meet" })?;
                join[i * size + j] = jv as u32;
                join[j * size + i] = jv as u32;
                meet[i * size + j] = mv as u32;
                meet[j * size + i] = mv as u32;
            }
        }
        let zero = (0..size)
            .find(|&i| up.row_count(i) == size)
            .ok_or(Error::NotALattice {
                i: 0,
                j: 0,
                op: "least element",
            })?;
        let one = (0..size)
            .find(|&i| down.row_count(i) == size)
            .ok_or(Error::NotALattice {
                i: 0,
                j: 0,
                op: "greatest element",
            })?;
        Ok(FiniteLattice {
            size,
            repr: Repr::Tables {
                leq: up,
                join,
                meet,
            },
            zero,
            one,
        })
    }

    /// Builds a lattice from complete join/meet tables. Used for quotients
    /// and products, where the tables are lattice operations by construction;
    /// commutativity, idempotency and absorption are still verified.
    pub(crate) fn from_tables(size: usize, join: Vec<u32>, meet: Vec<u32>) -> Result<FiniteLattice> {
        assert_eq!(join.len(), size * size);
        assert_eq!(meet.len(), size * size);
        if size == 0 {
            return Err(Error::NotALattice {
                i: 0,
                j: 0,
                op: "least element",
            });
        }
        if size > ELEMENT_CAP {
            return Err(Error::ElementCapExceeded {
                size,
                cap: ELEMENT_CAP,
            });
        }
        for i in 0..size {
            if join[i * size + i] as usize != i {
                return Err(Error::BadTables {
                    law: "idempotency",
                    i,
                    j: i,
                });
            }
            for j in 0..size {
                if join[i * size + j] != join[j * size + i] || meet[i * size + j] != meet[j * size + i]
                {
                    return Err(Error::BadTables {
                        law: "commutativity",
                        i,
                        j,
                    });
                }
                let a = meet[i * size + join[i * size + j] as usize] as usize;
                let b = join[i * size + meet[i * size + j] as usize] as usize;
                if a != i || b != i {
                    return Err(Error::BadTables {
                        law: "absorption",
                        i,
                        j,
                    });
                }
            }
        }
        let mut leq = BitMatrix::new(size);
        for i in 0..size {
            for j in 0..size {
                if join[i * size + j] as usize == j {
                    leq.set(i, j);
                }
            }
        }
        let zero = (0..size)
            .find(|&i| leq.row_count(i) == size)
            .ok_or(Error::NotALattice {
                i: 0,
                j: 0,
                op: "least element",
            })?;
        let one = (0..size)
            .find(|&i| (0..size).all(|j| leq.get(j, i)))
            .ok_or(Error::NotALattice {
                i: 0,
                j: 0,
                op: "greatest element",
            })?;
        Ok(FiniteLattice {
            size,
            repr: Repr::Tables { leq, join, meet },
            zero,
            one,
        })
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn zero(&self) -> usize {
        self.zero
    }

    pub fn one(&self) -> usize {
        self.one
    }

    #[inline]
    pub fn leq(&self, i: usize, j: usize) -> bool {
        match &self.repr {
            Repr::Masks { elems, .. } => elems[i] & !elems[j] == 0,
            Repr::Tables { leq, .. } => leq.get(i, j),
        }
    }

    #[inline]
    pub fn join(&self, i: usize, j: usize) -> usize {
        match &self.repr {
            Repr::Masks { elems, .. } => {
                let m = elems[i] | elems[j];
                elems.binary_search(&m).expect("family closed under union")
            }
            Repr::Tables { join, .. } => join[i * self.size + j] as usize,
        }
    }

    #[inline]
    pub fn meet(&self, i: usize, j: usize) -> usize {
        match &self.repr {
            Repr::Masks { elems, .. } => {
                let m = elems[i] & elems[j];
                elems
                    .binary_search(&m)
                    .expect("family closed under intersection")
            }
            Repr::Tables { meet, .. } => meet[i * self.size + j] as usize,
        }
    }

    /// Join of a set of elements; the empty join is zero.
    pub fn join_all(&self, items: impl IntoIterator<Item = usize>) -> usize {
        items.into_iter().fold(self.zero, |a, b| self.join(a, b))
    }

    /// Meet of a set of elements; the empty meet is one.
    pub fn meet_all(&self, items: impl IntoIterator<Item = usize>) -> usize {
        items.into_iter().fold(self.one, |a, b| self.meet(a, b))
    }

    /// The down-set mask of an element, when this lattice stores one.
    pub fn downset_mask(&self, i: usize) -> Option<u64> {
        match &self.repr {
            Repr::Masks { elems, .. } => Some(elems[i]),
            Repr::Tables { .. } => None,
        }
    }

    /// The element index of a down-set mask, when this lattice stores them.
    pub fn downset_index(&self, mask: u64) -> Option<usize> {
        match &self.repr {
            Repr::Masks { elems, .. } => elems.binary_search(&mask).ok(),
            Repr::Tables { .. } => None,
        }
    }

    /// Number of poset points underlying a down-set encoding.
    pub fn downset_points(&self) -> Option<usize> {
        match &self.repr {
            Repr::Masks { points, .. } => Some(*points),
            Repr::Tables { .. } => None,
        }
    }

    /// Strict order pairs (i, j), i ≤ j, i ≠ j, sorted lexicographically.
    pub fn leq_pairs(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 0..self.size {
            for j in 0..self.size {
                if i != j && self.leq(i, j) {
                    out.push((i, j));
                }
            }
        }
        out
    }

    /// Covering pairs (i, j) with j covering i, sorted lexicographically.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 0..self.size {
            let ups: Vec<usize> = (0..self.size)
                .filter(|&j| j != i && self.leq(i, j))
                .collect();
            for &j in &ups {
                if ups.iter().all(|&k| k == j || !self.leq(k, j)) {
                    out.push((i, j));
                }
            }
        }
        out.sort_unstable();
        out
    }

    /// Atoms: elements covering zero.
    pub fn atoms(&self) -> Vec<usize> {
        let z = self.zero;
        let ups: Vec<usize> = (0..self.size)
            .filter(|&j| j != z && self.leq(z, j))
            .collect();
        ups.iter()
            .copied()
            .filter(|&j| ups.iter().all(|&k| k == j || !self.leq(k, j)))
            .collect()
    }

    /// Height of each element: length of the longest chain from zero.
    pub fn heights(&self) -> Vec<usize> {
        let mut order: Vec<usize> = (0..self.size).collect();
        match &self.repr {
            Repr::Masks { elems, .. } => order.sort_by_key(|&i| elems[i].count_ones()),
            Repr::Tables { leq, .. } => order.sort_by_key(|&i| std::cmp::Reverse(leq.row_count(i))),
        }
        let mut h = vec![0usize; self.size];
        for (pos, &j) in order.iter().enumerate() {
            for &i in &order[..pos] {
                if self.leq(i, j) && i != j {
                    h[j] = h[j].max(h[i] + 1);
                }
            }
        }
        h
    }

    pub fn length(&self) -> usize {
        self.heights()[self.one]
    }

    /// Checks the distributive law x∧(y∨z) = (x∧y)∨(x∧z) over all triples.
    pub fn is_distributive(&self) -> bool {
        for x in 0..self.size {
            for y in 0..self.size {
                for z in 0..self.size {
                    let lhs = self.meet(x, self.join(y, z));
                    let rhs = self.join(self.meet(x, y), self.meet(x, z));
                    if lhs != rhs {
                        return false;
                    }
                }
            }
        }
        true
    }

    pub fn structure(&self) -> StructureReport {
        let heights = self.heights();
        StructureReport {
            atoms: self.atoms(),
            length: heights[self.one],
            heights,
            covers: self.covers(),
            distributive: self.is_distributive(),
        }
    }

    /// Closure of a set of elements under ∨ and ∧ only, sorted ascending.
    pub fn sublattice_closure(&self, seeds: &[usize]) -> Vec<usize> {
        let n = self.size;
        let mut in_set = vec![false; n];
        let mut members: Vec<usize> = Vec::new();
        let mut queue = std::collections::VecDeque::new();
        for &s in seeds {
            if !in_set[s] {
                in_set[s] = true;
                members.push(s);
                queue.push_back(s);
            }
        }
        while let Some(x) = queue.pop_front() {
            let snapshot = members.len();
            for idx in 0..snapshot {
                let y = members[idx];
                for z in [self.join(x, y), self.meet(x, y)] {
                    if !in_set[z] {
                        in_set[z] = true;
                        members.push(z);
                        queue.push_back(z);
                    }
                }
            }
        }
        members.sort_unstable();
        members
    }

    /// When this lattice is boolean, its dimension: |L| = 2^t with t atoms
    /// and x ↦ {atoms below x} an isomorphism onto the powerset.
    pub fn boolean_dimension(&self) -> Option<usize> {
        let size = self.size;
        if size < 2 || !size.is_power_of_two() {
            return None;
        }
        let t = size.trailing_zeros() as usize;
        let atoms = self.atoms();
        if atoms.len() != t {
            return None;
        }
        let masks: Vec<u64> = (0..size)
            .map(|x| {
                atoms
                    .iter()
                    .enumerate()
                    .filter(|&(_, &at)| self.leq(at, x))
                    .fold(0u64, |m, (k, _)| m | 1 << k)
            })
            .collect();
        let mut seen = vec![false; size];
        for &m in &masks {
            if m as usize >= size || seen[m as usize] {
                return None;
            }
            seen[m as usize] = true;
        }
        for x in 0..size {
            for y in x..size {
                if masks[self.join(x, y)] != masks[x] | masks[y]
                    || masks[self.meet(x, y)] != masks[x] & masks[y]
                {
                    return None;
                }
            }
        }
        Some(t)
    }

    /// Indices of join-irreducible elements (exactly one lower cover).
    pub fn join_irreducible_indices(&self) -> Vec<usize> {
        let mut lower_covers = vec![0usize; self.size];
        for &(_, j) in &self.covers() {
            lower_covers[j] += 1;
        }
        (0..self.size).filter(|&j| lower_covers[j] == 1).collect()
    }

    /// The poset of join-irreducible elements under the induced order,
    /// together with the lattice index of each point. Requires
    /// distributivity; the round trip through `downset_lattice` then
    /// reconstructs this lattice up to isomorphism.
    pub fn join_irreducibles(&self) -> Result<(Poset, Vec<usize>)> {
        if !self.is_distributive() {
            return Err(Error::NotDistributive);
        }
        let ji = self.join_irreducible_indices();
        let mut pairs = Vec::new();
        for (a, &x) in ji.iter().enumerate() {
            for (b, &y) in ji.iter().enumerate() {
                if a != b && self.leq(x, y) {
                    pairs.push((a, b));
                }
            }
        }
        Ok((Poset::from_pairs(ji.len(), &pairs)?, ji))
    }
}

/// Least element of `rows`-order among the common bounds of i and j:
/// scanning `scan_order`, the first u with row(i) ∩ row(j) ⊆ row(u) and
/// u ∈ row(i) ∩ row(j).
fn bound(rows: &BitMatrix, scan_order: &[usize], i: usize, j: usize) -> Option<usize> {
    for &u in scan_order {
        if rows.get(i, u) && rows.get(j, u) {
            // u is a common bound; it is the extreme one iff every common
            // bound lies in row(u).
            let ok = rows
                .row(i)
                .iter()
                .zip(rows.row(j))
                .zip(rows.row(u))
                .all(|((a, b), c)| a & b & !c == 0);
            if ok {
                return Some(u);
            }
        }
    }
    None
}

/// The lattice of down-sets of a poset: elements are down-closed subsets
/// encoded as bit masks, join is union, meet is intersection. The result is
/// distributive of length |P|.
pub fn downset_lattice(p: &Poset) -> Result<FiniteLattice> {
    let n = p.size();
    let mut seen = std::collections::HashSet::new();
    let mut stack = vec![0u64];
    seen.insert(0u64);
    while let Some(d) = stack.pop() {
        for x in 0..n {
            if d >> x & 1 == 0 && p.strict_down(x) & !d == 0 {
                let next = d | 1 << x;
                if seen.insert(next) {
                    if seen.len() > ELEMENT_CAP {
                        return Err(Error::ElementCapExceeded {
                            size: seen.len(),
                            cap: ELEMENT_CAP,
                        });
                    }
                    stack.push(next);
                }
            }
        }
    }
    FiniteLattice::from_masks(n, seen.into_iter().collect())
}

/// Lifts a poset automorphism to the automorphism of the down-set lattice
/// it induces (a down-set maps to its pointwise image).
pub fn lift_poset_automorphism(
    poset: &Poset,
    lattice: &FiniteLattice,
    sigma: &Perm,
) -> Result<Perm> {
    if sigma.len() != poset.size() {
        return Err(Error::BadPermutation { size: poset.size() });
    }
    for i in 0..poset.size() {
        for j in 0..poset.size() {
            if poset.leq(i, j) != poset.leq(sigma.apply(i), sigma.apply(j)) {
                return Err(Error::NotAutomorphism { x: i, y: j });
            }
        }
    }
    let mut images = Vec::with_capacity(lattice.size());
    for e in 0..lattice.size() {
        let mask = lattice.downset_mask(e).ok_or_else(|| Error::BadDocument {
            reason: "lattice has no down-set encoding".into(),
        })?;
        let mut image = 0u64;
        for x in mask_bits(mask) {
            image |= 1 << sigma.apply(x);
        }
        images.push(lattice.downset_index(image).ok_or_else(|| Error::BadDocument {
            reason: "image of a down-set is not a down-set".into(),
        })?);
    }
    Perm::from_images(images)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn boolean(n: usize) -> FiniteLattice {
        downset_lattice(&Poset::antichain(n)).unwrap()
    }

    #[test]
    fn downsets_of_singleton_is_two_chain() {
        let l = downset_lattice(&Poset::antichain(1)).unwrap();
        assert_eq!(l.size(), 2);
        assert_eq!(l.zero(), 0);
        assert_eq!(l.one(), 1);
        assert_eq!(l.length(), 1);
    }

    #[test]
    fn downsets_of_three_antichain_is_boolean_cube() {
        let l = boolean(3);
        assert_eq!(l.size(), 8);
        assert_eq!(l.length(), 3);
        assert_eq!(l.atoms().len(), 3);
        assert!(l.is_distributive());
    }

    #[test]
    fn downsets_of_two_chain_is_three_chain() {
        let l = downset_lattice(&Poset::chain(2)).unwrap();
        assert_eq!(l.size(), 3);
        assert_eq!(l.length(), 2);
        assert_eq!(l.atoms().len(), 1);
    }

    #[test]
    fn empty_poset_gives_singleton_lattice() {
        let l = downset_lattice(&Poset::antichain(0)).unwrap();
        assert_eq!(l.size(), 1);
        assert_eq!(l.zero(), l.one());
    }

    #[test]
    fn downset_enumeration_respects_the_element_cap() {
        // 13-antichain would have 8192 down-sets
        assert!(matches!(
            downset_lattice(&Poset::antichain(13)),
            Err(Error::ElementCapExceeded { .. })
        ));
        // a long chain has few down-sets and stays fine
        assert_eq!(downset_lattice(&Poset::chain(40)).unwrap().size(), 41);
    }

    #[test]
    fn boolean_structure_report() {
        for n in 1..=4 {
            let s = boolean(n).structure();
            assert_eq!(s.length, n);
            assert_eq!(s.atoms.len(), n);
            assert!(s.distributive);
        }
        let s = downset_lattice(&Poset::chain(2)).unwrap().structure();
        assert_eq!(s.length, 2);
        assert_eq!(s.atoms.len(), 1);
        let s = boolean(2).structure();
        assert_eq!(s.atoms, vec![1, 2]);
        assert_eq!(s.length, 2);
    }

    /// M3: five elements, three pairwise-incomparable elements in the middle.
    pub(crate) fn diamond_m3() -> FiniteLattice {
        FiniteLattice::from_leq_pairs(5, &[(0, 1), (0, 2), (0, 3), (1, 4), (2, 4), (3, 4)]).unwrap()
    }

    /// N5: the pentagon.
    pub(crate) fn pentagon_n5() -> FiniteLattice {
        FiniteLattice::from_leq_pairs(5, &[(0, 1), (1, 4), (0, 2), (2, 3), (3, 4)]).unwrap()
    }

    #[test]
    fn m3_and_n5_are_not_distributive() {
        assert!(!diamond_m3().is_distributive());
        assert!(!pentagon_n5().is_distributive());
        assert!(boolean(3).is_distributive());
    }

    #[test]
    fn join_irreducibles_of_boolean_is_antichain() {
        let (p, ji) = boolean(3).join_irreducibles().unwrap();
        assert_eq!(p.size(), 3);
        assert!(p.covers().is_empty());
        assert_eq!(ji.len(), 3);
    }

    #[test]
    fn join_irreducibles_of_chain_is_chain() {
        let three_chain = downset_lattice(&Poset::chain(2)).unwrap();
        let (p, _) = three_chain.join_irreducibles().unwrap();
        assert!(p.is_isomorphic(&Poset::chain(2)));
    }

    #[test]
    fn join_irreducibles_reject_non_distributive() {
        assert!(matches!(
            diamond_m3().join_irreducibles(),
            Err(Error::NotDistributive)
        ));
    }

    #[test]
    fn from_leq_pairs_round_trips_boolean() {
        let b = boolean(2);
        let rebuilt = FiniteLattice::from_leq_pairs(4, &b.leq_pairs()).unwrap();
        for i in 0..4 {
            for j in 0..4 {
                assert_eq!(b.join(i, j), rebuilt.join(i, j));
                assert_eq!(b.meet(i, j), rebuilt.meet(i, j));
            }
        }
    }

    #[test]
    fn non_lattice_is_rejected() {
        // two incomparable maximal elements: no join
        assert!(matches!(
            FiniteLattice::from_leq_pairs(2, &[]),
            Err(Error::NotALattice { .. })
        ));
    }

    #[test]
    fn lift_of_atom_swap() {
        let p = Poset::antichain(2);
        let l = downset_lattice(&p).unwrap();
        let swap = Perm::from_images(vec![1, 0]).unwrap();
        let lifted = lift_poset_automorphism(&p, &l, &swap).unwrap();
        assert_eq!(lifted.order(), 2);
        assert_eq!(lifted.apply(l.zero()), l.zero());
        assert_eq!(lifted.apply(l.one()), l.one());
    }

    #[test]
    fn lift_rejects_non_automorphism() {
        let p = Poset::chain(2);
        let l = downset_lattice(&p).unwrap();
        let swap = Perm::from_images(vec![1, 0]).unwrap();
        assert!(lift_poset_automorphism(&p, &l, &swap).is_err());
    }

    #[test]
    fn cancellation_in_distributive_lattices() {
        let l = boolean(3);
        for a in 0..l.size() {
            for x in 0..l.size() {
                for y in 0..l.size() {
                    if l.join(a, x) == l.join(a, y) && l.meet(a, x) == l.meet(a, y) {
                        assert_eq!(x, y);
                    }
                }
            }
        }
    }
}
