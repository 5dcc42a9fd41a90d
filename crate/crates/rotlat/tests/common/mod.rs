//! Brute-force oracles shared by the integration suites. These deliberately
//! take the dumbest correct route so they stay independent of the library's
//! algorithms: axioms are checked from definitions, searches are exhaustive.

// each test binary compiles this module and uses its own subset
#![allow(dead_code)]

use std::collections::BTreeSet;

use rotlat::{FiniteLattice, Perm, RotationalLattice};

/// Number of poset isomorphism classes on exactly `n` labeled points,
/// computed by filtering every irreflexive relation on ordered pairs
/// through the axioms (no closure involved) and deduplicating by the
/// lexicographically least relation matrix over all permutations.
pub fn poset_classes_brute(n: usize) -> usize {
    assert!(n <= 5, "brute oracle explodes past 5 points");
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j)))
        .collect();
    let mut canon_forms: BTreeSet<Vec<bool>> = BTreeSet::new();
    'rel: for mask in 0u64..(1 << pairs.len()) {
        let mut leq = vec![false; n * n];
        for i in 0..n {
            leq[i * n + i] = true;
        }
        for (k, &(i, j)) in pairs.iter().enumerate() {
            if mask >> k & 1 == 1 {
                leq[i * n + j] = true;
            }
        }
        // antisymmetry
        for i in 0..n {
            for j in (i + 1)..n {
                if leq[i * n + j] && leq[j * n + i] {
                    continue 'rel;
                }
            }
        }
        // transitivity, checked directly
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    if leq[i * n + j] && leq[j * n + k] && !leq[i * n + k] {
                        continue 'rel;
                    }
                }
            }
        }
        canon_forms.insert(min_lex_form(n, &leq));
    }
    canon_forms.len()
}

fn min_lex_form(n: usize, leq: &[bool]) -> Vec<bool> {
    let mut best: Option<Vec<bool>> = None;
    let mut perm: Vec<usize> = (0..n).collect();
    permute_all(&mut perm, 0, &mut |p| {
        let relabeled: Vec<bool> = (0..n * n)
            .map(|idx| leq[p[idx / n] * n + p[idx % n]])
            .collect();
        if best.as_ref().is_none_or(|b| relabeled < *b) {
            best = Some(relabeled);
        }
    });
    best.unwrap_or_default()
}

fn permute_all(items: &mut Vec<usize>, k: usize, visit: &mut impl FnMut(&[usize])) {
    if k == items.len() {
        visit(items);
        return;
    }
    for i in k..items.len() {
        items.swap(k, i);
        permute_all(items, k + 1, visit);
        items.swap(k, i);
    }
}

/// Compatibility of a partition with the operations, straight from the
/// definition: related arguments give related results.
pub fn compatible_partition(a: &RotationalLattice, labels: &[usize]) -> bool {
    let n = a.size();
    for x in 0..n {
        for y in 0..n {
            if labels[x] != labels[y] {
                continue;
            }
            if labels[a.apply_g(x)] != labels[a.apply_g(y)] {
                return false;
            }
            for c in 0..n {
                if labels[a.join(x, c)] != labels[a.join(y, c)]
                    || labels[a.meet(x, c)] != labels[a.meet(y, c)]
                {
                    return false;
                }
            }
        }
    }
    true
}

/// Every compatible partition of the algebra, by depth-first enumeration of
/// restricted-growth strings. Partial assignments are pruned when two
/// same-block elements already have same-index translation images in
/// different blocks; each completed partition is re-checked in full.
pub fn congruences_brute(a: &RotationalLattice) -> BTreeSet<Vec<usize>> {
    let n = a.size();
    assert!(n <= 12, "partition oracle explodes past 12 elements");
    let mut out = BTreeSet::new();
    let mut blocks = vec![0usize; n];
    fn rec(
        a: &RotationalLattice,
        blocks: &mut Vec<usize>,
        k: usize,
        used: usize,
        out: &mut BTreeSet<Vec<usize>>,
    ) {
        let n = a.size();
        if k == n {
            if compatible_partition(a, blocks) {
                out.insert(least_index_labels(blocks));
            }
            return;
        }
        'block: for b in 0..=used.min(k) {
            blocks[k] = b;
            // prune: a violation among already-assigned images can never
            // be repaired by later assignments
            for j in 0..k {
                if blocks[j] != b {
                    continue;
                }
                let (gj, gk) = (a.apply_g(j), a.apply_g(k));
                if gj <= k && gk <= k && blocks[gj] != blocks[gk] {
                    continue 'block;
                }
                for c in 0..n {
                    let (ja, ka) = (a.join(j, c), a.join(k, c));
                    if ja <= k && ka <= k && blocks[ja] != blocks[ka] {
                        continue 'block;
                    }
                    let (jm, km) = (a.meet(j, c), a.meet(k, c));
                    if jm <= k && km <= k && blocks[jm] != blocks[km] {
                        continue 'block;
                    }
                }
            }
            rec(a, blocks, k + 1, used.max(b + 1), out);
        }
    }
    rec(a, &mut blocks, 0, 0, &mut out);
    out
}

pub fn least_index_labels(raw: &[usize]) -> Vec<usize> {
    let mut first = std::collections::HashMap::new();
    raw.iter()
        .enumerate()
        .map(|(i, &r)| *first.entry(r).or_insert(i))
        .collect()
}

/// All lattice automorphisms found without Birkhoff lifting: literally every
/// permutation for small lattices, and an exhaustive backtracking search
/// (prefix-consistent images, full verification at the leaves) above that.
pub fn lattice_automorphisms_brute(l: &FiniteLattice) -> BTreeSet<Vec<usize>> {
    let n = l.size();
    let mut out = BTreeSet::new();
    if n <= 8 {
        let mut items: Vec<usize> = (0..n).collect();
        permute_all(&mut items, 0, &mut |p| {
            if is_lattice_automorphism(l, p) {
                out.insert(p.to_vec());
            }
        });
        return out;
    }
    assert!(n <= 16, "automorphism oracle explodes past 16 elements");
    let down: Vec<usize> = (0..n)
        .map(|x| (0..n).filter(|&y| l.leq(y, x)).count())
        .collect();
    let up: Vec<usize> = (0..n)
        .map(|x| (0..n).filter(|&y| l.leq(x, y)).count())
        .collect();
    let mut map: Vec<usize> = Vec::new();
    let mut used = vec![false; n];
    fn rec(
        l: &FiniteLattice,
        down: &[usize],
        up: &[usize],
        map: &mut Vec<usize>,
        used: &mut Vec<bool>,
        out: &mut BTreeSet<Vec<usize>>,
    ) {
        let n = l.size();
        let k = map.len();
        if k == n {
            if is_lattice_automorphism(l, map) {
                out.insert(map.clone());
            }
            return;
        }
        'cand: for c in 0..n {
            if used[c] || down[k] != down[c] || up[k] != up[c] {
                continue;
            }
            for (x, &cx) in map.iter().enumerate() {
                if l.leq(x, k) != l.leq(cx, c) || l.leq(k, x) != l.leq(c, cx) {
                    continue 'cand;
                }
                let j = l.join(x, k);
                if j < k && map[j] != l.join(cx, c) {
                    continue 'cand;
                }
                let m = l.meet(x, k);
                if m < k && map[m] != l.meet(cx, c) {
                    continue 'cand;
                }
            }
            map.push(c);
            used[c] = true;
            rec(l, down, up, map, used, out);
            map.pop();
            used[c] = false;
        }
    }
    rec(l, &down, &up, &mut map, &mut used, &mut out);
    out
}

pub fn is_lattice_automorphism(l: &FiniteLattice, p: &[usize]) -> bool {
    let n = l.size();
    for x in 0..n {
        for y in x..n {
            if p[l.join(x, y)] != l.join(p[x], p[y]) || p[l.meet(x, y)] != l.meet(p[x], p[y]) {
                return false;
            }
        }
    }
    true
}

/// Antichains in the powerset of an n-element set (families of pairwise
/// incomparable subsets), counted exhaustively. These count the monotone
/// functions of n variables.
pub fn antichain_count_brute(n: usize) -> usize {
    assert!(n <= 4, "antichain oracle explodes past 4 variables");
    let subsets = 1usize << n;
    let mut count = 0usize;
    'fam: for fam in 0u64..(1 << subsets) {
        let members: Vec<usize> = (0..subsets).filter(|&s| fam >> s & 1 == 1).collect();
        for (i, &s) in members.iter().enumerate() {
            for &t in &members[i + 1..] {
                if s & t == s || s & t == t {
                    continue 'fam;
                }
            }
        }
        count += 1;
    }
    count
}

/// Brute-force homomorphic-image-of-subalgebra test between cubes: some
/// subuniverse of the n-cube has a quotient isomorphic to the m-cube.
pub fn hs_brute(m: usize, n: usize) -> bool {
    let bn = rotlat::rotational_cube(n).unwrap();
    for sub_elements in bn.all_subuniverses().unwrap() {
        let (sub, _) = bn.subalgebra(&sub_elements).unwrap();
        let con = rotlat::all_congruences(&sub).unwrap();
        for theta in con.congruences() {
            let (q, _) = rotlat::quotient(&sub, theta).unwrap();
            if rotlat::recognize_cube(&q) == Some(m) {
                return true;
            }
        }
    }
    false
}

/// Deterministic ideal count by a second route: distinct divisor-closures
/// of all subsets of {1..n}.
pub fn ideal_count_by_closure(n: usize) -> usize {
    let mut closures = BTreeSet::new();
    for mask in 0u32..(1 << n) {
        let mut closed = BTreeSet::new();
        for k in 0..n {
            if mask >> k & 1 == 1 {
                let x = k + 1;
                for d in 1..=x {
                    if x % d == 0 {
                        closed.insert(d);
                    }
                }
            }
        }
        closures.insert(closed);
    }
    closures.len()
}

#[allow(dead_code)]
pub fn identity_algebra(l: FiniteLattice) -> RotationalLattice {
    let n = l.size();
    rotlat::make_rotational(l, Perm::identity(n)).unwrap()
}
