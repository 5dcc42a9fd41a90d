//! Rotational lattices: finite lattices with a distinguished automorphism
//! of finite order, written `g` throughout.
//!
//! The signature is ⟨∨, ∧, g⟩ with no constants, so a subuniverse need not
//! contain the bounds; that is what makes "spanning" a real condition.

use crate::error::{Error, Result};
use crate::lattice::{downset_lattice, FiniteLattice, ELEMENT_CAP};
use crate::perm::{lcm, Perm};
use crate::poset::Poset;

/// Cap for the exhaustive subuniverse enumeration (2^|A| subsets).
pub const SUBUNIVERSE_ORACLE_CAP: usize = 16;

/// Cap for free algebras; sizes grow as Dedekind numbers.
pub const FREE_GENERATOR_CAP: usize = 4;

#[derive(Debug, Clone)]
pub struct RotationalLattice {
    lattice: FiniteLattice,
    g: Perm,
    order: usize,
}

impl RotationalLattice {
    pub fn lattice(&self) -> &FiniteLattice {
        &self.lattice
    }

    pub fn g(&self) -> &Perm {
        &self.g
    }

    /// Least n ≥ 1 with g^n the identity.
    pub fn order(&self) -> usize {
        self.order
    }

    pub fn size(&self) -> usize {
        self.lattice.size()
    }

    pub fn zero(&self) -> usize {
        self.lattice.zero()
    }

    pub fn one(&self) -> usize {
        self.lattice.one()
    }

    pub fn join(&self, x: usize, y: usize) -> usize {
        self.lattice.join(x, y)
    }

    pub fn meet(&self, x: usize, y: usize) -> usize {
        self.lattice.meet(x, y)
    }

    pub fn apply_g(&self, x: usize) -> usize {
        self.g.apply(x)
    }

    /// The orbit of `a` under iterating g, in iteration order.
    pub fn orbit(&self, a: usize) -> Vec<usize> {
        self.g.orbit_of(a)
    }

    pub fn orbit_size(&self, a: usize) -> usize {
        self.orbit(a).len()
    }

    pub fn is_stable(&self, a: usize) -> bool {
        self.g.apply(a) == a
    }

    /// Elements fixed by g, ascending.
    pub fn stable_elements(&self) -> Vec<usize> {
        (0..self.size()).filter(|&x| self.is_stable(x)).collect()
    }

    /// Least subuniverse containing `seeds`: the fixpoint closure under
    /// ∨, ∧ and g. Sorted ascending.
    pub fn subuniverse_closure(&self, seeds: &[usize]) -> Result<Vec<usize>> {
        if seeds.is_empty() {
            return Err(Error::EmptyGeneratingSet);
        }
        let n = self.size();
        let mut in_set = vec![false; n];
        let mut members: Vec<usize> = Vec::new();
        let mut queue = std::collections::VecDeque::new();
        let add = |z: usize,
                   in_set: &mut Vec<bool>,
                   members: &mut Vec<usize>,
                   queue: &mut std::collections::VecDeque<usize>| {
            if !in_set[z] {
                in_set[z] = true;
                members.push(z);
                queue.push_back(z);
            }
        };
        for &s in seeds {
            assert!(s < n, "seed index out of range");
            add(s, &mut in_set, &mut members, &mut queue);
        }
        while let Some(x) = queue.pop_front() {
            add(self.g.apply(x), &mut in_set, &mut members, &mut queue);
            let snapshot = members.len();
            for idx in 0..snapshot {
                let y = members[idx];
                add(self.join(x, y), &mut in_set, &mut members, &mut queue);
                add(self.meet(x, y), &mut in_set, &mut members, &mut queue);
            }
        }
        members.sort_unstable();
        Ok(members)
    }

    /// Checks closure under ∨, ∧, g; returns the first witness outside.
    pub fn check_subuniverse(&self, elements: &[usize]) -> Result<()> {
        let mut in_set = vec![false; self.size()];
        for &x in elements {
            in_set[x] = true;
        }
        for &x in elements {
            if !in_set[self.g.apply(x)] {
                return Err(Error::InvalidSubuniverse {
                    witness: self.g.apply(x),
                });
            }
            for &y in elements {
                let j = self.join(x, y);
                if !in_set[j] {
                    return Err(Error::InvalidSubuniverse { witness: j });
                }
                let m = self.meet(x, y);
                if !in_set[m] {
                    return Err(Error::InvalidSubuniverse { witness: m });
                }
            }
        }
        Ok(())
    }

    pub fn is_subuniverse(&self, elements: &[usize]) -> bool {
        !elements.is_empty() && self.check_subuniverse(elements).is_ok()
    }

    /// The subalgebra on a closed element set, with its inclusion map.
    pub fn subalgebra(&self, elements: &[usize]) -> Result<(RotationalLattice, AlgebraMap)> {
        if elements.is_empty() {
            return Err(Error::EmptyGeneratingSet);
        }
        let mut els = elements.to_vec();
        els.sort_unstable();
        els.dedup();
        self.check_subuniverse(&els)?;
        let k = els.len();
        let pos = |x: usize| els.binary_search(&x).expect("closed set");
        let mut join = vec![0u32; k * k];
        let mut meet = vec![0u32; k * k];
        for (a, &x) in els.iter().enumerate() {
            for (b, &y) in els.iter().enumerate() {
                join[a * k + b] = pos(self.join(x, y)) as u32;
                meet[a * k + b] = pos(self.meet(x, y)) as u32;
            }
        }
        let lattice = FiniteLattice::from_tables(k, join, meet)?;
        let g = Perm::from_images(els.iter().map(|&x| pos(self.g.apply(x))).collect())?;
        let sub = make_rotational(lattice, g)?;
        let map = AlgebraMap::verified(sub.clone(), self.clone(), els)?;
        Ok((sub, map))
    }

    /// Subalgebra generated by `seeds`, with its inclusion map. The closure
    /// equals the lattice closure of the union of the orbits of the seeds.
    pub fn generated_subalgebra(&self, seeds: &[usize]) -> Result<(RotationalLattice, AlgebraMap)> {
        let closure = self.subuniverse_closure(seeds)?;
        self.subalgebra(&closure)
    }

    /// A subuniverse is spanning when it contains the bounds of the ambient
    /// algebra.
    pub fn is_spanning(&self, elements: &[usize]) -> Result<bool> {
        if elements.is_empty() {
            return Err(Error::EmptyGeneratingSet);
        }
        self.check_subuniverse(elements)?;
        Ok(elements.contains(&self.zero()) && elements.contains(&self.one()))
    }

    /// All subuniverses (nonempty closed subsets), exhaustively. Only for
    /// small algebras; this is the brute-force side of structural oracles.
    pub fn all_subuniverses(&self) -> Result<Vec<Vec<usize>>> {
        let n = self.size();
        if n > SUBUNIVERSE_ORACLE_CAP {
            return Err(Error::OracleCapExceeded {
                size: n,
                cap: SUBUNIVERSE_ORACLE_CAP,
                what: "subuniverse enumeration",
            });
        }
        let mut out = Vec::new();
        'mask: for mask in 1u32..(1 << n) {
            let members: Vec<usize> = (0..n).filter(|&x| mask >> x & 1 == 1).collect();
            for &x in &members {
                if mask >> self.g.apply(x) & 1 == 0 {
                    continue 'mask;
                }
                for &y in &members {
                    if y > x {
                        break;
                    }
                    if mask >> self.join(x, y) & 1 == 0 || mask >> self.meet(x, y) & 1 == 0 {
                        continue 'mask;
                    }
                }
            }
            out.push(members);
        }
        Ok(out)
    }

    /// Per-element invariants (height, orbit size, down-degree, up-degree)
    /// used to prune isomorphism search.
    fn fingerprints(&self) -> Vec<(usize, usize, usize, usize)> {
        let h = self.lattice.heights();
        (0..self.size())
            .map(|x| {
                let down = (0..self.size()).filter(|&y| self.lattice.leq(y, x)).count();
                let up = (0..self.size()).filter(|&y| self.lattice.leq(x, y)).count();
                (h[x], self.orbit_size(x), down, up)
            })
            .collect()
    }
}

/// Validates that `g` is a lattice automorphism and packages the algebra.
///
/// Join compatibility over all pairs is checked; for a bijection that
/// already forces order- and meet-compatibility.
pub fn make_rotational(lattice: FiniteLattice, g: Perm) -> Result<RotationalLattice> {
    let n = lattice.size();
    if g.len() != n {
        return Err(Error::BadPermutation { size: n });
    }
    for x in 0..n {
        for y in x..n {
            if g.apply(lattice.join(x, y)) != lattice.join(g.apply(x), g.apply(y)) {
                return Err(Error::NotAutomorphism { x, y });
            }
        }
    }
    let order = g.order();
    Ok(RotationalLattice { lattice, g, order })
}

/// The n-dimensional rotational cube: the boolean lattice of length n with
/// g cyclically shifting the atoms. Its order is n.
pub fn rotational_cube(n: usize) -> Result<RotationalLattice> {
    if n == 0 {
        return Err(Error::ZeroDimension);
    }
    if n > ELEMENT_CAP.trailing_zeros() as usize {
        return Err(Error::ElementCapExceeded {
            size: usize::MAX,
            cap: ELEMENT_CAP,
        });
    }
    let lattice = downset_lattice(&Poset::antichain(n))?;
    let full = (1u64 << n) - 1;
    let rotate = |m: u64| {
        if n == 1 {
            m
        } else {
            (m << 1 | m >> (n - 1)) & full
        }
    };
    let images: Vec<usize> = (0..lattice.size())
        .map(|e| {
            let mask = lattice.downset_mask(e).expect("down-set lattice");
            lattice
                .downset_index(rotate(mask))
                .expect("rotation permutes subsets")
        })
        .collect();
    make_rotational(lattice, Perm::from_images(images)?)
}

/// Componentwise product; the order is the lcm of the factor orders.
pub fn direct_product(factors: &[RotationalLattice]) -> Result<RotationalLattice> {
    if factors.is_empty() {
        return Err(Error::EmptyProduct);
    }
    let mut size = 1usize;
    for f in factors {
        size = size
            .checked_mul(f.size())
            .filter(|&s| s <= ELEMENT_CAP)
            .ok_or(Error::ElementCapExceeded {
                size: usize::MAX,
                cap: ELEMENT_CAP,
            })?;
    }
    let decode = |mut idx: usize| -> Vec<usize> {
        let mut digits = vec![0; factors.len()];
        for (k, f) in factors.iter().enumerate().rev() {
            digits[k] = idx % f.size();
            idx /= f.size();
        }
        digits
    };
    let encode = |digits: &[usize]| -> usize {
        digits
            .iter()
            .zip(factors)
            .fold(0, |acc, (&d, f)| acc * f.size() + d)
    };
    let mut join = vec![0u32; size * size];
    let mut meet = vec![0u32; size * size];
    let tuples: Vec<Vec<usize>> = (0..size).map(decode).collect();
    for i in 0..size {
        for j in 0..size {
            let jt: Vec<usize> = (0..factors.len())
                .map(|k| factors[k].join(tuples[i][k], tuples[j][k]))
                .collect();
            let mt: Vec<usize> = (0..factors.len())
                .map(|k| factors[k].meet(tuples[i][k], tuples[j][k]))
                .collect();
            join[i * size + j] = encode(&jt) as u32;
            meet[i * size + j] = encode(&mt) as u32;
        }
    }
    let lattice = FiniteLattice::from_tables(size, join, meet)?;
    let g = Perm::from_images(
        (0..size)
            .map(|i| {
                let img: Vec<usize> = (0..factors.len())
                    .map(|k| factors[k].apply_g(tuples[i][k]))
                    .collect();
                encode(&img)
            })
            .collect(),
    )?;
    let product = make_rotational(lattice, g)?;
    debug_assert_eq!(
        product.order(),
        factors.iter().fold(1, |acc, f| lcm(acc, f.order()))
    );
    Ok(product)
}

/// A homomorphism between rotational lattices, stored with both endpoint
/// algebras and verified on construction.
#[derive(Debug, Clone)]
pub struct AlgebraMap {
    source: RotationalLattice,
    target: RotationalLattice,
    map: Vec<usize>,
    kind: MapKind,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MapKind {
    Isomorphism,
    Embedding,
    Quotient,
    Other,
}

impl AlgebraMap {
    /// Checks that `map` preserves ∨, ∧ and g pointwise, and classifies it.
    pub fn verified(
        source: RotationalLattice,
        target: RotationalLattice,
        map: Vec<usize>,
    ) -> Result<AlgebraMap> {
        if map.len() != source.size() || map.iter().any(|&v| v >= target.size()) {
            return Err(Error::NotHomomorphism {
                x: 0,
                y: 0,
                op: "domain",
            });
        }
        for x in 0..source.size() {
            if map[source.apply_g(x)] != target.apply_g(map[x]) {
                return Err(Error::NotHomomorphism { x, y: x, op: "g" });
            }
            for y in x..source.size() {
                if map[source.join(x, y)] != target.join(map[x], map[y]) {
                    return Err(Error::NotHomomorphism { x, y, op: "join" });
                }
                if map[source.meet(x, y)] != target.meet(map[x], map[y]) {
                    return Err(Error::NotHomomorphism { x, y, op: "meet" });
                }
            }
        }
        let mut hit = vec![false; target.size()];
        let mut injective = true;
        for &v in &map {
            if hit[v] {
                injective = false;
            }
            hit[v] = true;
        }
        let surjective = hit.iter().all(|&b| b);
        let kind = match (injective, surjective) {
            (true, true) => MapKind::Isomorphism,
            (true, false) => MapKind::Embedding,
            (false, true) => MapKind::Quotient,
            (false, false) => MapKind::Other,
        };
        Ok(AlgebraMap {
            source,
            target,
            map,
            kind,
        })
    }

    pub fn source(&self) -> &RotationalLattice {
        &self.source
    }

    pub fn target(&self) -> &RotationalLattice {
        &self.target
    }

    pub fn map(&self) -> &[usize] {
        &self.map
    }

    pub fn apply(&self, x: usize) -> usize {
        self.map[x]
    }

    pub fn kind(&self) -> MapKind {
        self.kind
    }

    pub fn is_injective(&self) -> bool {
        matches!(self.kind, MapKind::Isomorphism | MapKind::Embedding)
    }

    pub fn is_surjective(&self) -> bool {
        matches!(self.kind, MapKind::Isomorphism | MapKind::Quotient)
    }
}

/// First isomorphism in canonical search order, if the algebras are
/// isomorphic.
///
/// The search backtracks over bijections of join-irreducible elements only
/// (every element of a finite lattice is the join of the join-irreducibles
/// below it, so such a bijection extends uniquely), pruned by per-element
/// (height, orbit size, degree) fingerprints, then verifies the extension.
pub fn is_isomorphic(a: &RotationalLattice, b: &RotationalLattice) -> Option<AlgebraMap> {
    if a.size() != b.size() || a.order() != b.order() {
        return None;
    }
    let fa = a.fingerprints();
    let fb = b.fingerprints();
    let mut sa = fa.clone();
    let mut sb = fb.clone();
    sa.sort_unstable();
    sb.sort_unstable();
    if sa != sb {
        return None;
    }
    let ji_a = a.lattice().join_irreducible_indices();
    let ji_b = b.lattice().join_irreducible_indices();
    if ji_a.len() != ji_b.len() {
        return None;
    }
    let mut assignment: Vec<usize> = Vec::new();
    search_ji(a, b, &fa, &fb, &ji_a, &ji_b, &mut assignment)
}

fn search_ji(
    a: &RotationalLattice,
    b: &RotationalLattice,
    fa: &[(usize, usize, usize, usize)],
    fb: &[(usize, usize, usize, usize)],
    ji_a: &[usize],
    ji_b: &[usize],
    assignment: &mut Vec<usize>,
) -> Option<AlgebraMap> {
    if assignment.len() == ji_a.len() {
        return extend_ji_map(a, b, ji_a, ji_b, assignment);
    }
    let k = assignment.len();
    let x = ji_a[k];
    'cand: for (c, &y) in ji_b.iter().enumerate() {
        if assignment.contains(&c) || fa[x] != fb[y] {
            continue;
        }
        for (p, &cp) in assignment.iter().enumerate() {
            let (xp, yp) = (ji_a[p], ji_b[cp]);
            if a.lattice().leq(xp, x) != b.lattice().leq(yp, y)
                || a.lattice().leq(x, xp) != b.lattice().leq(y, yp)
            {
                continue 'cand;
            }
        }
        // g maps join-irreducibles to join-irreducibles; enforce where both
        // endpoints are already assigned.
        assignment.push(c);
        if g_consistent(a, b, ji_a, ji_b, assignment) {
            if let Some(found) = search_ji(a, b, fa, fb, ji_a, ji_b, assignment) {
                return Some(found);
            }
        }
        assignment.pop();
    }
    None
}

fn g_consistent(
    a: &RotationalLattice,
    b: &RotationalLattice,
    ji_a: &[usize],
    ji_b: &[usize],
    assignment: &[usize],
) -> bool {
    for (p, &cp) in assignment.iter().enumerate() {
        let gx = a.apply_g(ji_a[p]);
        let gy = b.apply_g(ji_b[cp]);
        if let Some(q) = ji_a.iter().position(|&z| z == gx) {
            if q < assignment.len() && ji_b[assignment[q]] != gy {
                return false;
            }
        }
    }
    true
}

fn extend_ji_map(
    a: &RotationalLattice,
    b: &RotationalLattice,
    ji_a: &[usize],
    ji_b: &[usize],
    assignment: &[usize],
) -> Option<AlgebraMap> {
    let mut map = vec![0usize; a.size()];
    for (x, slot) in map.iter_mut().enumerate() {
        let images = ji_a
            .iter()
            .enumerate()
            .filter(|&(_, &j)| a.lattice().leq(j, x))
            .map(|(p, _)| ji_b[assignment[p]]);
        *slot = b.lattice().join_all(images);
    }
    let mut seen = vec![false; b.size()];
    for &v in &map {
        if seen[v] {
            return None;
        }
        seen[v] = true;
    }
    AlgebraMap::verified(a.clone(), b.clone(), map).ok()
}

/// Recognizes the rotational cube: returns n when the algebra is isomorphic
/// to the n-dimensional cube.
///
/// Criterion: |A| = 2^n with n atoms, x ↦ {atoms below x} is a lattice
/// isomorphism onto the powerset of the atoms, and g restricted to the atoms
/// is a single n-cycle.
pub fn recognize_cube(a: &RotationalLattice) -> Option<usize> {
    let n = a.lattice().boolean_dimension()?;
    let atoms = a.lattice().atoms();
    // g restricted to atoms must be one n-cycle.
    let mut at = atoms[0];
    for step in 1..=n {
        at = a.apply_g(at);
        if !atoms.contains(&at) {
            return None;
        }
        if at == atoms[0] {
            return if step == n { Some(n) } else { None };
        }
    }
    None
}

/// Quotients of `a` by every congruence, via the congruence module.
pub fn all_quotient_algebras(
    a: &RotationalLattice,
) -> Result<Vec<(crate::congruence::Congruence, RotationalLattice)>> {
    let con = crate::congruence::all_congruences(a)?;
    con.congruences()
        .iter()
        .map(|theta| {
            let (q, _) = crate::congruence::quotient(a, theta)?;
            Ok((theta.clone(), q))
        })
        .collect()
}

/// The free one-generated algebra of the variety defined by g^n(x) ≈ x on
/// distributive members: nonconstant monotone functions of n variables,
/// with g cyclically shifting the variables.
#[derive(Debug, Clone)]
pub struct FreeOneGenerated {
    pub algebra: RotationalLattice,
    /// Index of the generator (the first variable).
    pub generator: usize,
    arity: usize,
}

pub fn free_one_generated(n: usize) -> Result<FreeOneGenerated> {
    if n == 0 {
        return Err(Error::ZeroDimension);
    }
    if n > FREE_GENERATOR_CAP {
        return Err(Error::OracleCapExceeded {
            size: n,
            cap: FREE_GENERATOR_CAP,
            what: "free algebra arity",
        });
    }
    let inputs = 1usize << n; // truth-table width
    let table_masks = 1u64 << inputs;
    let mut elems = Vec::new();
    'mask: for m in 1..table_masks - 1 {
        // monotone: satisfied inputs are an up-set of the variable cube
        for w in 0..inputs {
            if m >> w & 1 == 1 {
                for i in 0..n {
                    if w >> i & 1 == 0 && m >> (w | 1 << i) & 1 == 0 {
                        continue 'mask;
                    }
                }
            }
        }
        elems.push(m);
    }
    let lattice = FiniteLattice::from_masks(inputs, elems)?;
    let rot_input = |w: usize| -> usize {
        if n == 1 {
            w
        } else {
            (w << 1 | w >> (n - 1)) & (inputs - 1)
        }
    };
    let images: Vec<usize> = (0..lattice.size())
        .map(|e| {
            let mask = lattice.downset_mask(e).expect("mask lattice");
            let mut image = 0u64;
            for w in 0..inputs {
                if mask >> w & 1 == 1 {
                    image |= 1 << rot_input(w);
                }
            }
            lattice
                .downset_index(image)
                .expect("variable renaming permutes monotone functions")
        })
        .collect();
    let g = Perm::from_images(images)?;
    let algebra = make_rotational(lattice, g)?;
    let mut gen_mask = 0u64;
    for w in 0..inputs {
        if w & 1 == 1 {
            gen_mask |= 1 << w;
        }
    }
    let generator = algebra
        .lattice()
        .downset_index(gen_mask)
        .expect("projection onto the first variable is monotone and nonconstant");
    Ok(FreeOneGenerated {
        algebra,
        generator,
        arity: n,
    })
}

impl FreeOneGenerated {
    pub fn arity(&self) -> usize {
        self.arity
    }

    /// Evaluates element `e` (a monotone function of the variables
    /// x, g(x), ..., g^{n-1}(x)) in `target` at generator image `a`.
    pub fn evaluate(&self, e: usize, target: &RotationalLattice, a: usize) -> usize {
        let n = self.arity;
        let mut powers = Vec::with_capacity(n);
        let mut v = a;
        for _ in 0..n {
            powers.push(v);
            v = target.apply_g(v);
        }
        let mask = self.algebra.lattice().downset_mask(e).expect("mask lattice");
        let inputs = 1usize << n;
        let mut terms = Vec::new();
        for w in 1..inputs {
            if mask >> w & 1 == 0 {
                continue;
            }
            // keep only minimal satisfied assignments
            let minimal = (0..n)
                .filter(|&i| w >> i & 1 == 1)
                .all(|i| mask >> (w & !(1 << i)) & 1 == 0);
            if minimal {
                let conj = target
                    .lattice()
                    .meet_all((0..n).filter(|&i| w >> i & 1 == 1).map(|i| powers[i]));
                terms.push(conj);
            }
        }
        target.lattice().join_all(terms)
    }

    /// Number of homomorphisms into `target`. A homomorphism is determined
    /// by the image of the generator, so this counts the generator images
    /// whose induced evaluation map preserves the operations.
    pub fn homomorphism_count(&self, target: &RotationalLattice) -> usize {
        (0..target.size())
            .filter(|&a| {
                let map: Vec<usize> = (0..self.algebra.size())
                    .map(|e| self.evaluate(e, target, a))
                    .collect();
                AlgebraMap::verified(self.algebra.clone(), target.clone(), map).is_ok()
            })
            .count()
    }
}
