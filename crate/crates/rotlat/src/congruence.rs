//! Congruences of rotational lattices.
//!
//! A congruence is a partition of the element set compatible with ∨, ∧ and
//! g. Principal congruences are generated by a fixpoint over the one-step
//! translations x ↦ x∨c, x ↦ x∧c, x ↦ g(x); compositions of translations
//! emerge from the iteration, and transitivity from union-find.

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::lattice::FiniteLattice;
use crate::perm::Perm;
use crate::rotational::{make_rotational, AlgebraMap, RotationalLattice};

/// Cap for full congruence-lattice computation.
pub const CON_CAP: usize = 64;

/// A partition of `0..n` in canonical form: each element is labeled by the
/// least index in its block, so labels are themselves block representatives.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Congruence {
    labels: Vec<usize>,
}

impl Congruence {
    pub fn identity(n: usize) -> Congruence {
        Congruence {
            labels: (0..n).collect(),
        }
    }

    pub fn full(n: usize) -> Congruence {
        Congruence {
            labels: vec![0; n.max(1)],
        }
    }

    /// Canonicalizes an arbitrary labeling.
    pub fn from_labels(raw: &[usize]) -> Congruence {
        let mut first = std::collections::HashMap::new();
        let mut labels = vec![0usize; raw.len()];
        for (i, &r) in raw.iter().enumerate() {
            let leader = *first.entry(r).or_insert(i);
            labels[i] = leader;
        }
        Congruence { labels }
    }

    pub fn size(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[usize] {
        &self.labels
    }

    pub fn related(&self, x: usize, y: usize) -> bool {
        self.labels[x] == self.labels[y]
    }

    pub fn num_blocks(&self) -> usize {
        self.labels
            .iter()
            .enumerate()
            .filter(|&(i, &l)| i == l)
            .count()
    }

    /// Blocks ordered by their least element.
    pub fn blocks(&self) -> Vec<Vec<usize>> {
        let mut leaders: Vec<usize> = self
            .labels
            .iter()
            .enumerate()
            .filter(|&(i, &l)| i == l)
            .map(|(i, _)| i)
            .collect();
        leaders.sort_unstable();
        leaders
            .into_iter()
            .map(|leader| {
                (0..self.size())
                    .filter(|&x| self.labels[x] == leader)
                    .collect()
            })
            .collect()
    }

    pub fn is_identity(&self) -> bool {
        self.num_blocks() == self.size()
    }

    pub fn is_full(&self) -> bool {
        self.num_blocks() <= 1
    }

    /// self ≤ other in the congruence order: every block of self lies in a
    /// block of other.
    pub fn refines(&self, other: &Congruence) -> bool {
        self.labels
            .iter()
            .enumerate()
            .all(|(i, &l)| other.labels[i] == other.labels[l])
    }

    /// Common refinement; the meet of two congruences is again one.
    pub fn meet(&self, other: &Congruence) -> Congruence {
        let mut first = std::collections::HashMap::new();
        let labels = self
            .labels
            .iter()
            .zip(&other.labels)
            .enumerate()
            .map(|(i, key)| *first.entry(key).or_insert(i))
            .collect();
        Congruence { labels }
    }
}

struct Dsu {
    parent: Vec<usize>,
}

impl Dsu {
    fn new(n: usize) -> Dsu {
        Dsu {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, x: usize) -> usize {
        if self.parent[x] != x {
            self.parent[x] = self.find(self.parent[x]);
        }
        self.parent[x]
    }

    fn union(&mut self, x: usize, y: usize) -> bool {
        let (rx, ry) = (self.find(x), self.find(y));
        if rx == ry {
            false
        } else {
            let (lo, hi) = (rx.min(ry), rx.max(ry));
            self.parent[hi] = lo;
            true
        }
    }

    fn into_congruence(mut self) -> Congruence {
        let raw: Vec<usize> = (0..self.parent.len()).map(|x| self.find(x)).collect();
        Congruence::from_labels(&raw)
    }
}

/// Least congruence relating every given pair.
pub fn congruence_generated_by(a: &RotationalLattice, pairs: &[(usize, usize)]) -> Congruence {
    let n = a.size();
    let mut dsu = Dsu::new(n);
    let mut worklist: Vec<(usize, usize)> = Vec::new();
    for &(x, y) in pairs {
        if dsu.union(x, y) {
            worklist.push((x, y));
        }
    }
    while let Some((x, y)) = worklist.pop() {
        let (gx, gy) = (a.apply_g(x), a.apply_g(y));
        if dsu.union(gx, gy) {
            worklist.push((gx, gy));
        }
        for c in 0..n {
            let (jx, jy) = (a.join(x, c), a.join(y, c));
            if dsu.union(jx, jy) {
                worklist.push((jx, jy));
            }
            let (mx, my) = (a.meet(x, c), a.meet(y, c));
            if dsu.union(mx, my) {
                worklist.push((mx, my));
            }
        }
    }
    dsu.into_congruence()
}

/// Least congruence with a ≡ b.
pub fn principal_congruence(a: &RotationalLattice, x: usize, y: usize) -> Congruence {
    congruence_generated_by(a, &[(x, y)])
}

/// Join in the congruence lattice.
pub fn congruence_join(a: &RotationalLattice, lhs: &Congruence, rhs: &Congruence) -> Congruence {
    let pairs: Vec<(usize, usize)> = (0..a.size())
        .flat_map(|i| [(i, lhs.labels()[i]), (i, rhs.labels()[i])])
        .collect();
    congruence_generated_by(a, &pairs)
}

/// Checks compatibility of a partition with ∨, ∧ and g.
pub fn is_congruence(a: &RotationalLattice, theta: &Congruence) -> bool {
    if theta.size() != a.size() {
        return false;
    }
    let n = a.size();
    let labels = theta.labels();
    // canonical labels are representatives, so it suffices to compare every
    // element against its leader under each one-step translation
    for x in 0..n {
        let leader = labels[x];
        if labels[a.apply_g(x)] != labels[a.apply_g(leader)] {
            return false;
        }
        for c in 0..n {
            if labels[a.join(x, c)] != labels[a.join(leader, c)] {
                return false;
            }
            if labels[a.meet(x, c)] != labels[a.meet(leader, c)] {
                return false;
            }
        }
    }
    true
}

/// Principal congruences of all covering pairs. Every congruence of a
/// lattice-based algebra is a join of these: Cg(a, b) = Cg(a∧b, a∨b), and a
/// principal congruence of a comparable pair is the join of the principal
/// congruences of the covers along a maximal chain between them.
fn covering_principals(a: &RotationalLattice) -> Vec<Congruence> {
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for (u, v) in a.lattice().covers() {
        let theta = principal_congruence(a, u, v);
        if seen.insert(theta.clone()) {
            out.push(theta);
        }
    }
    out
}

/// The congruence lattice, canonically ordered.
#[derive(Debug, Clone)]
pub struct ConLattice {
    congruences: Vec<Congruence>,
}

impl ConLattice {
    pub fn len(&self) -> usize {
        self.congruences.len()
    }

    pub fn is_empty(&self) -> bool {
        self.congruences.is_empty()
    }

    pub fn congruences(&self) -> &[Congruence] {
        &self.congruences
    }

    pub fn get(&self, i: usize) -> &Congruence {
        &self.congruences[i]
    }

    pub fn index_of(&self, theta: &Congruence) -> Option<usize> {
        self.congruences.iter().position(|c| c == theta)
    }

    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.congruences[i].refines(&self.congruences[j])
    }

    /// Upper covers of each congruence in the containment order.
    pub fn upper_covers(&self, i: usize) -> Vec<usize> {
        let ups: Vec<usize> = (0..self.len())
            .filter(|&j| j != i && self.leq(i, j))
            .collect();
        ups.iter()
            .copied()
            .filter(|&j| ups.iter().all(|&k| k == j || !self.leq(k, j)))
            .collect()
    }

    /// Indices of meet-irreducible congruences: distinct from the full one,
    /// with a unique upper cover.
    pub fn meet_irreducible_indices(&self) -> Vec<usize> {
        (0..self.len())
            .filter(|&i| !self.congruences[i].is_full() && self.upper_covers(i).len() == 1)
            .collect()
    }

    /// The containment order as a plain lattice (for structural checks and
    /// diagram export).
    pub fn to_lattice(&self) -> Result<FiniteLattice> {
        let pairs: Vec<(usize, usize)> = (0..self.len())
            .flat_map(|i| (0..self.len()).map(move |j| (i, j)))
            .filter(|&(i, j)| i != j && self.leq(i, j))
            .collect();
        FiniteLattice::from_leq_pairs(self.len(), &pairs)
    }
}

/// Every congruence, computed as the join closure of the covering-pair
/// principal congruences.
pub fn all_congruences(a: &RotationalLattice) -> Result<ConLattice> {
    if a.size() > CON_CAP {
        return Err(Error::OracleCapExceeded {
            size: a.size(),
            cap: CON_CAP,
            what: "congruence lattice",
        });
    }
    let mut set: HashSet<Congruence> = HashSet::new();
    set.insert(Congruence::identity(a.size()));
    let mut worklist: Vec<Congruence> = covering_principals(a);
    for theta in &worklist {
        set.insert(theta.clone());
    }
    while let Some(theta) = worklist.pop() {
        let existing: Vec<Congruence> = set.iter().cloned().collect();
        for phi in existing {
            let joined = congruence_join(a, &theta, &phi);
            if set.insert(joined.clone()) {
                worklist.push(joined);
            }
        }
    }
    let mut congruences: Vec<Congruence> = set.into_iter().collect();
    congruences.sort_by(|x, y| {
        y.num_blocks()
            .cmp(&x.num_blocks())
            .then_with(|| x.labels().cmp(y.labels()))
    });
    Ok(ConLattice { congruences })
}

/// Simplicity: exactly two congruences. Equivalently, at least two elements
/// and every covering-pair principal congruence is already full.
pub fn is_simple(a: &RotationalLattice) -> bool {
    if a.size() < 2 {
        return false;
    }
    a.lattice()
        .covers()
        .iter()
        .all(|&(u, v)| principal_congruence(a, u, v).is_full())
}

/// The least nonzero congruence, when one exists. Every nonzero congruence
/// contains a covering-pair principal, so it suffices to find a least
/// element among those.
pub fn monolith(a: &RotationalLattice) -> Option<Congruence> {
    let principals = covering_principals(a);
    let least = principals
        .iter()
        .find(|cand| principals.iter().all(|other| cand.refines(other)))?;
    Some(least.clone())
}

/// Subdirect irreducibility: a monolith exists.
pub fn is_subdirectly_irreducible(a: &RotationalLattice) -> bool {
    monolith(a).is_some()
}

/// The quotient algebra and the canonical surjection.
pub fn quotient(
    a: &RotationalLattice,
    theta: &Congruence,
) -> Result<(RotationalLattice, AlgebraMap)> {
    if !is_congruence(a, theta) {
        return Err(Error::InvalidCongruence {
            reason: "partition is not compatible with the operations".into(),
        });
    }
    let mut leaders: Vec<usize> = theta
        .labels()
        .iter()
        .enumerate()
        .filter(|&(i, &l)| i == l)
        .map(|(i, _)| i)
        .collect();
    leaders.sort_unstable();
    let k = leaders.len();
    let block = |x: usize| leaders.binary_search(&theta.labels()[x]).expect("leader");
    let mut join = vec![0u32; k * k];
    let mut meet = vec![0u32; k * k];
    for (bi, &x) in leaders.iter().enumerate() {
        for (bj, &y) in leaders.iter().enumerate() {
            join[bi * k + bj] = block(a.join(x, y)) as u32;
            meet[bi * k + bj] = block(a.meet(x, y)) as u32;
        }
    }
    let lattice = FiniteLattice::from_tables(k, join, meet)?;
    let g = Perm::from_images(leaders.iter().map(|&x| block(a.apply_g(x))).collect())?;
    let q = make_rotational(lattice, g)?;
    let map: Vec<usize> = (0..a.size()).map(block).collect();
    let surjection = AlgebraMap::verified(a.clone(), q.clone(), map)?;
    Ok((q, surjection))
}

/// Quotients by all meet-irreducible congruences (other than the full one).
/// Their kernels intersect to the identity, every factor is subdirectly
/// irreducible, and the induced map into the product is injective.
pub fn subdirect_factors(
    a: &RotationalLattice,
) -> Result<Vec<(Congruence, RotationalLattice)>> {
    let con = all_congruences(a)?;
    con.meet_irreducible_indices()
        .into_iter()
        .map(|i| {
            let theta = con.get(i).clone();
            let (q, _) = quotient(a, &theta)?;
            Ok((theta, q))
        })
        .collect()
}

/// The two congruences associated with a stable element `a` of a
/// distributive algebra: α relates x, y with a∨x = a∨y, and β dually with
/// meet. Their intersection is the identity congruence, and when `a` is
/// neither bound both are nontrivial.
pub fn stable_split_congruences(
    alg: &RotationalLattice,
    a: usize,
) -> Result<(Congruence, Congruence)> {
    if !alg.is_stable(a) {
        return Err(Error::NotStable { element: a });
    }
    if !alg.lattice().is_distributive() {
        return Err(Error::NotDistributive);
    }
    let alpha_raw: Vec<usize> = (0..alg.size()).map(|x| alg.join(a, x)).collect();
    let beta_raw: Vec<usize> = (0..alg.size()).map(|x| alg.meet(a, x)).collect();
    let alpha = Congruence::from_labels(&alpha_raw);
    let beta = Congruence::from_labels(&beta_raw);
    debug_assert!(is_congruence(alg, &alpha));
    debug_assert!(is_congruence(alg, &beta));
    Ok((alpha, beta))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::downset_lattice;
    use crate::poset::Poset;
    use crate::rotational::{direct_product, recognize_cube, rotational_cube};

    fn chain_algebra(points: usize) -> RotationalLattice {
        let l = downset_lattice(&Poset::chain(points)).unwrap();
        let n = l.size();
        make_rotational(l, Perm::identity(n)).unwrap()
    }

    #[test]
    fn collapsing_nothing_gives_identity() {
        let b2 = rotational_cube(2).unwrap();
        assert!(principal_congruence(&b2, 1, 1).is_identity());
    }

    #[test]
    fn cubes_collapse_entirely() {
        for n in 1..=4 {
            let b = rotational_cube(n).unwrap();
            for x in 0..b.size() {
                for y in (x + 1)..b.size() {
                    assert!(principal_congruence(&b, x, y).is_full());
                }
            }
        }
    }

    #[test]
    fn projection_kernel_in_b2_times_b1() {
        let b2 = rotational_cube(2).unwrap();
        let b1 = rotational_cube(1).unwrap();
        let p = direct_product(&[b2, b1]).unwrap();
        // (0,0) and (0,1) are indices 0 and 1
        let theta = principal_congruence(&p, 0, 1);
        assert_eq!(theta.num_blocks(), 4);
        for d0 in 0..4 {
            assert!(theta.related(d0 * 2, d0 * 2 + 1));
        }
        // cross-check against exhaustive congruence enumeration
        let con = all_congruences(&p).unwrap();
        assert!(con.index_of(&theta).is_some());
    }

    #[test]
    fn congruence_counts() {
        let b3 = rotational_cube(3).unwrap();
        assert_eq!(all_congruences(&b3).unwrap().len(), 2);

        let singleton = {
            let l = downset_lattice(&Poset::antichain(0)).unwrap();
            make_rotational(l, Perm::identity(1)).unwrap()
        };
        assert_eq!(all_congruences(&singleton).unwrap().len(), 1);

        let b2 = rotational_cube(2).unwrap();
        let b3 = rotational_cube(3).unwrap();
        let p = direct_product(&[b2, b3]).unwrap();
        assert_eq!(all_congruences(&p).unwrap().len(), 4);
    }

    #[test]
    fn simplicity_and_si() {
        let b5 = rotational_cube(5).unwrap();
        assert!(is_simple(&b5));
        assert!(is_subdirectly_irreducible(&b5));
        assert!(monolith(&b5).unwrap().is_full());

        let b2 = rotational_cube(2).unwrap();
        let b3 = rotational_cube(3).unwrap();
        let p = direct_product(&[b2, b3]).unwrap();
        assert!(!is_subdirectly_irreducible(&p));

        let chain = chain_algebra(2); // 3-chain, identity g
        assert!(!is_simple(&chain));
        assert!(!is_subdirectly_irreducible(&chain));
        assert_eq!(all_congruences(&chain).unwrap().len(), 4);
    }

    #[test]
    fn congruence_lattice_cap() {
        let b7 = rotational_cube(7).unwrap();
        assert!(matches!(
            all_congruences(&b7),
            Err(Error::OracleCapExceeded { .. })
        ));
        // principal congruences still work above the cap
        assert!(principal_congruence(&b7, 0, b7.size() - 1).is_full());
    }

    #[test]
    fn singleton_is_neither_simple_nor_si() {
        let l = downset_lattice(&Poset::antichain(0)).unwrap();
        let singleton = make_rotational(l, Perm::identity(1)).unwrap();
        assert!(!is_simple(&singleton));
        assert!(!is_subdirectly_irreducible(&singleton));
    }

    #[test]
    fn quotient_examples() {
        let b3 = rotational_cube(3).unwrap();
        let (q, pi) = quotient(&b3, &Congruence::identity(8)).unwrap();
        assert_eq!(q.size(), 8);
        assert!(crate::rotational::is_isomorphic(&q, &b3).is_some());
        assert!(pi.is_injective() && pi.is_surjective());

        let (q, _) = quotient(&b3, &Congruence::full(8)).unwrap();
        assert_eq!(q.size(), 1);

        let b2 = rotational_cube(2).unwrap();
        let b3 = rotational_cube(3).unwrap();
        let p = direct_product(&[b2, b3]).unwrap();
        // collapsing the first coordinate: (0,0) with (one_B2,0) = index 24
        let kernel = principal_congruence(&p, 0, 24);
        let (q, pi) = quotient(&p, &kernel).unwrap();
        assert_eq!(recognize_cube(&q), Some(3));
        assert_eq!(pi.kind(), crate::rotational::MapKind::Quotient);
    }

    #[test]
    fn quotient_rejects_non_congruence() {
        let b2 = rotational_cube(2).unwrap();
        // relating zero to an atom without collapsing anything else
        let bad = Congruence::from_labels(&[0, 0, 2, 3]);
        assert!(matches!(
            quotient(&b2, &bad),
            Err(Error::InvalidCongruence { .. })
        ));
    }

    #[test]
    fn subdirect_factor_examples() {
        let b4 = rotational_cube(4).unwrap();
        let factors = subdirect_factors(&b4).unwrap();
        assert_eq!(factors.len(), 1);
        assert_eq!(recognize_cube(&factors[0].1), Some(4));

        let b2 = rotational_cube(2).unwrap();
        let b3 = rotational_cube(3).unwrap();
        let p = direct_product(&[b2, b3]).unwrap();
        let factors = subdirect_factors(&p).unwrap();
        let mut dims: Vec<usize> = factors
            .iter()
            .map(|(_, q)| recognize_cube(q).unwrap())
            .collect();
        dims.sort_unstable();
        assert_eq!(dims, vec![2, 3]);
        // kernels intersect to the identity
        let total = factors
            .iter()
            .fold(Congruence::full(p.size()), |acc, (theta, _)| {
                acc.meet(theta)
            });
        assert!(total.is_identity());

        let singleton = {
            let l = downset_lattice(&Poset::antichain(0)).unwrap();
            make_rotational(l, Perm::identity(1)).unwrap()
        };
        assert!(subdirect_factors(&singleton).unwrap().is_empty());
    }

    #[test]
    fn stable_split_at_bounds() {
        let b3 = rotational_cube(3).unwrap();
        let (alpha, beta) = stable_split_congruences(&b3, b3.zero()).unwrap();
        assert!(alpha.is_identity());
        assert!(beta.is_full());
        let (alpha, beta) = stable_split_congruences(&b3, b3.one()).unwrap();
        assert!(alpha.is_full());
        assert!(beta.is_identity());
    }

    #[test]
    fn stable_split_inside() {
        let b2 = rotational_cube(2).unwrap();
        let b1 = rotational_cube(1).unwrap();
        let p = direct_product(&[b2, b1]).unwrap();
        // (one_B2, zero_B1) has index 3*2 + 0 = 6
        let a = 6;
        assert!(p.is_stable(a));
        assert!(a != p.zero() && a != p.one());
        let (alpha, beta) = stable_split_congruences(&p, a).unwrap();
        assert!(!alpha.is_identity());
        assert!(!beta.is_identity());
        assert!(alpha.meet(&beta).is_identity());
        assert!(is_congruence(&p, &alpha));
        assert!(is_congruence(&p, &beta));
    }

    #[test]
    fn stable_split_rejects_unstable() {
        let b2 = rotational_cube(2).unwrap();
        let atom = b2.lattice().atoms()[0];
        assert!(matches!(
            stable_split_congruences(&b2, atom),
            Err(Error::NotStable { .. })
        ));
    }

    #[test]
    fn con_lattice_is_distributive_here() {
        let b2 = rotational_cube(2).unwrap();
        let b3 = rotational_cube(3).unwrap();
        let p = direct_product(&[b2, b3]).unwrap();
        let con = all_congruences(&p).unwrap();
        assert!(con.to_lattice().unwrap().is_distributive());
        let chain = chain_algebra(3);
        let con = all_congruences(&chain).unwrap();
        assert!(con.to_lattice().unwrap().is_distributive());
    }

    #[test]
    fn all_quotients_of_product() {
        let b2 = rotational_cube(2).unwrap();
        let b3 = rotational_cube(3).unwrap();
        let p = direct_product(&[b2, b3]).unwrap();
        let quotients = crate::rotational::all_quotient_algebras(&p).unwrap();
        assert_eq!(quotients.len(), 4);
        let singleton = {
            let l = downset_lattice(&Poset::antichain(0)).unwrap();
            make_rotational(l, Perm::identity(1)).unwrap()
        };
        assert_eq!(
            crate::rotational::all_quotient_algebras(&singleton)
                .unwrap()
                .len(),
            1
        );
        let b3q = rotational_cube(3).unwrap();
        let quotients = crate::rotational::all_quotient_algebras(&b3q).unwrap();
        assert_eq!(quotients.len(), 2);
        let mut sizes: Vec<usize> = quotients.iter().map(|(_, q)| q.size()).collect();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![1, 8]);
    }
}
