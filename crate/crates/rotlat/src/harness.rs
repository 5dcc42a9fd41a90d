//! Exhaustive desk-scale verification over an enumerated corpus.
//!
//! The corpus holds every distributive rotational lattice whose dual poset
//! has at most a given number of points, one per isomorphism class: poset
//! automorphisms are enumerated and lifted to lattice automorphisms
//! (automorphisms of a finite distributive lattice are exactly the lifted
//! ones). Reports collect counterexamples instead of aborting, so a failure
//! is fully diagnosable.

use std::time::Instant;

use serde::Serialize;

use crate::congruence::{is_subdirectly_irreducible, stable_split_congruences};
use crate::error::Result;
use crate::lattice::{downset_lattice, lift_poset_automorphism};
use crate::perm::lcm;
use crate::poset::{enumerate_posets, Poset};
use crate::perm::Perm;
use crate::rotational::{
    direct_product, is_isomorphic, make_rotational, recognize_cube, rotational_cube,
    RotationalLattice, SUBUNIVERSE_ORACLE_CAP,
};
use crate::varieties::{
    divisors_ideal, ideals_upto, satisfies_order_identity, si_members, variety_contains_algebra,
    variety_leq,
};

/// Cap for the variety-lattice sweep.
pub const VARIETY_VERIFY_CAP: usize = 8;

#[derive(Debug, Clone)]
pub struct CorpusItem {
    pub poset: Poset,
    pub sigma: Perm,
    pub algebra: RotationalLattice,
}

impl CorpusItem {
    /// Short stable description used in counterexample reports.
    pub fn describe(&self) -> String {
        format!(
            "poset(size={}, covers={:?}), sigma={:?}",
            self.poset.size(),
            self.poset.covers(),
            self.sigma.images()
        )
    }
}

#[derive(Debug, Clone)]
pub struct Corpus {
    pub max_poset_size: usize,
    pub items: Vec<CorpusItem>,
}

impl Corpus {
    pub fn len(&self) -> usize {
        self.items.len()
    }

    pub fn is_empty(&self) -> bool {
        self.items.is_empty()
    }
}

/// All distributive rotational lattices with a dual poset of at most
/// `max_poset_size` points, deduplicated up to isomorphism of rotational
/// lattices. With `include_trivial` the one-element algebra (empty poset)
/// is part of the corpus.
pub fn build_corpus(max_poset_size: usize, include_trivial: bool) -> Result<Corpus> {
    let mut items: Vec<CorpusItem> = Vec::new();
    let mut fingerprints: Vec<(usize, usize, Vec<usize>, usize)> = Vec::new();
    for poset in enumerate_posets(max_poset_size)? {
        if poset.size() == 0 && !include_trivial {
            continue;
        }
        let lattice = downset_lattice(&poset)?;
        for sigma in poset.automorphisms() {
            let lifted = lift_poset_automorphism(&poset, &lattice, &sigma)?;
            let algebra = make_rotational(lattice.clone(), lifted)?;
            let mut orbit_sizes: Vec<usize> =
                (0..algebra.size()).map(|x| algebra.orbit_size(x)).collect();
            orbit_sizes.sort_unstable();
            let fp = (
                algebra.size(),
                algebra.lattice().length(),
                orbit_sizes,
                algebra.lattice().atoms().len(),
            );
            let duplicate = items
                .iter()
                .zip(&fingerprints)
                .any(|(item, ifp)| *ifp == fp && is_isomorphic(&item.algebra, &algebra).is_some());
            if !duplicate {
                items.push(CorpusItem {
                    poset: poset.clone(),
                    sigma,
                    algebra,
                });
                fingerprints.push(fp);
            }
        }
    }
    Ok(Corpus {
        max_poset_size,
        items,
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct Counterexample {
    pub item: String,
    pub problem: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct VerificationReport {
    pub check: String,
    pub instances: usize,
    pub counterexamples: Vec<Counterexample>,
    pub wall_ms: u128,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.counterexamples.is_empty()
    }
}

/// Theorem check: an algebra in the corpus is subdirectly irreducible
/// exactly when it is a rotational cube, and every cube is simple.
pub fn verify_si_classification(corpus: &Corpus) -> VerificationReport {
    let start = Instant::now();
    let mut counterexamples = Vec::new();
    let mut instances = 0;
    for item in &corpus.items {
        instances += 1;
        let si = is_subdirectly_irreducible(&item.algebra);
        let cube = recognize_cube(&item.algebra);
        if si != cube.is_some() {
            counterexamples.push(Counterexample {
                item: item.describe(),
                problem: format!("subdirectly irreducible = {si}, recognized cube = {cube:?}"),
            });
        }
        if let Some(n) = cube {
            if !crate::congruence::is_simple(&item.algebra) {
                counterexamples.push(Counterexample {
                    item: item.describe(),
                    problem: "cube is not simple".into(),
                });
            }
            // the dimension is the maximal orbit size, which is the order
            let max_orbit = (0..item.algebra.size())
                .map(|x| item.algebra.orbit_size(x))
                .max()
                .unwrap_or(1);
            if n != max_orbit || n != item.algebra.order() {
                counterexamples.push(Counterexample {
                    item: item.describe(),
                    problem: format!(
                        "cube dimension {n}, max orbit {max_orbit}, order {}",
                        item.algebra.order()
                    ),
                });
            }
        }
    }
    VerificationReport {
        check: "si-classification".into(),
        instances,
        counterexamples,
        wall_ms: start.elapsed().as_millis(),
    }
}

/// Structural lemma sweep over the corpus: stable elements of subdirectly
/// irreducible algebras are bounds, one-generated subalgebras of those are
/// cubes of the orbit size, subuniverses moved by g are spanning, spanning
/// boolean subalgebras satisfy the height sum, atoms generate boolean
/// sublattices, the α/β split meets to the identity, orbit sizes have lcm
/// equal to the order, and cube products have lcm order.
pub fn verify_lemmas(corpus: &Corpus) -> VerificationReport {
    let start = Instant::now();
    let mut cx = Vec::new();
    let mut instances = 0;
    for item in &corpus.items {
        let a = &item.algebra;
        let si = is_subdirectly_irreducible(a);
        let heights = a.lattice().heights();
        let length = a.lattice().length();

        // orbit-lcm: order = lcm of orbit sizes
        instances += 1;
        let orbit_lcm = (0..a.size()).fold(1, |acc, x| lcm(acc, a.orbit_size(x)));
        if orbit_lcm != a.order() {
            cx.push(Counterexample {
                item: item.describe(),
                problem: format!("orbit lcm {} != order {}", orbit_lcm, a.order()),
            });
        }

        if si {
            // stable-element lemma
            for s in a.stable_elements() {
                instances += 1;
                if s != a.zero() && s != a.one() {
                    cx.push(Counterexample {
                        item: item.describe(),
                        problem: format!("stable element {s} is not a bound"),
                    });
                }
            }
            // orbit-cube lemma, and the spanning corollary for the
            // one-generated subalgebras (these exist at every size)
            for x in 0..a.size() {
                if a.is_stable(x) {
                    continue;
                }
                instances += 1;
                let (sub, inclusion) = match a.generated_subalgebra(&[x]) {
                    Ok(v) => v,
                    Err(e) => {
                        cx.push(Counterexample {
                            item: item.describe(),
                            problem: format!("closure of {{{x}}} failed: {e}"),
                        });
                        continue;
                    }
                };
                if recognize_cube(&sub) != Some(a.orbit_size(x)) {
                    cx.push(Counterexample {
                        item: item.describe(),
                        problem: format!(
                            "subalgebra generated by {x} is not the {}-cube",
                            a.orbit_size(x)
                        ),
                    });
                }
                let image: Vec<usize> = inclusion.map().to_vec();
                if !(image.contains(&a.zero()) && image.contains(&a.one())) {
                    cx.push(Counterexample {
                        item: item.describe(),
                        problem: format!("subalgebra generated by {x} is not spanning"),
                    });
                }
            }
        }

        if a.size() <= SUBUNIVERSE_ORACLE_CAP {
            let subs = a
                .all_subuniverses()
                .expect("size within the subuniverse cap");
            for sub in &subs {
                let moved = sub.iter().any(|&x| !a.is_stable(x));
                if si && moved {
                    // spanning corollary
                    instances += 1;
                    if !(sub.contains(&a.zero()) && sub.contains(&a.one())) {
                        cx.push(Counterexample {
                            item: item.describe(),
                            problem: format!("moved subuniverse {sub:?} is not spanning"),
                        });
                    }
                }
                // height-sum lemma for spanning boolean subalgebras
                if sub.contains(&a.zero()) && sub.contains(&a.one()) {
                    let (subalg, inclusion) =
                        a.subalgebra(sub).expect("closed set from the enumeration");
                    if subalg.lattice().boolean_dimension().is_some() {
                        instances += 1;
                        let h_sum: usize = subalg
                            .lattice()
                            .atoms()
                            .iter()
                            .map(|&at| heights[inclusion.apply(at)])
                            .sum();
                        if h_sum != length {
                            cx.push(Counterexample {
                                item: item.describe(),
                                problem: format!(
                                    "height sum {h_sum} != length {length} for boolean subalgebra {sub:?}"
                                ),
                            });
                        }
                    }
                }
            }
        }

        // atoms generate boolean sublattices of the right size; the meet of
        // two distinct atoms is already zero, but a single atom needs the
        // bottom seeded to span its two-element boolean lattice
        let atoms = a.lattice().atoms();
        if atoms.len() <= 6 {
            for mask in 1u32..(1 << atoms.len()) {
                instances += 1;
                let mut chosen: Vec<usize> = atoms
                    .iter()
                    .enumerate()
                    .filter(|(k, _)| mask >> k & 1 == 1)
                    .map(|(_, &at)| at)
                    .collect();
                let t = chosen.len();
                chosen.push(a.zero());
                let closure = a.lattice().sublattice_closure(&chosen);
                if closure.len() != 1 << t {
                    cx.push(Counterexample {
                        item: item.describe(),
                        problem: format!(
                            "{t} atoms generated {} elements, expected {}",
                            closure.len(),
                            1 << t
                        ),
                    });
                }
            }
        }

        // α/β split at every stable element
        for s in a.stable_elements() {
            instances += 1;
            match stable_split_congruences(a, s) {
                Ok((alpha, beta)) => {
                    if !alpha.meet(&beta).is_identity() {
                        cx.push(Counterexample {
                            item: item.describe(),
                            problem: format!("alpha ∧ beta != identity at stable {s}"),
                        });
                    }
                    if s != a.zero()
                        && s != a.one()
                        && (alpha.is_identity() || beta.is_identity())
                    {
                        cx.push(Counterexample {
                            item: item.describe(),
                            problem: format!("alpha or beta trivial at interior stable {s}"),
                        });
                    }
                }
                Err(e) => cx.push(Counterexample {
                    item: item.describe(),
                    problem: format!("stable split failed at {s}: {e}"),
                }),
            }
        }
    }

    // product-order lemma over cube pairs
    for m in 1..=4usize {
        for n in 1..=4usize {
            instances += 1;
            let p = rotational_cube(m)
                .and_then(|bm| Ok((bm, rotational_cube(n)?)))
                .and_then(|(bm, bn)| direct_product(&[bm, bn]));
            match p {
                Ok(p) => {
                    if p.order() != lcm(m, n) {
                        cx.push(Counterexample {
                            item: format!("product of cubes {m} and {n}"),
                            problem: format!("order {} != lcm {}", p.order(), lcm(m, n)),
                        });
                    }
                }
                Err(e) => cx.push(Counterexample {
                    item: format!("product of cubes {m} and {n}"),
                    problem: format!("construction failed: {e}"),
                }),
            }
        }
    }

    VerificationReport {
        check: "lemmas".into(),
        instances,
        counterexamples: cx,
        wall_ms: start.elapsed().as_millis(),
    }
}

/// Variety-lattice sweep: containment of V(X) in V(Y) decided through
/// subdirect factorization agrees with X ⊆ Y on all ideal pairs, cube
/// membership agrees with ideal membership, and the g^n identity holds in
/// the m-cube exactly for m dividing n.
pub fn verify_variety_lattice(max_n: usize) -> Result<VerificationReport> {
    let start = Instant::now();
    if max_n > VARIETY_VERIFY_CAP {
        return Err(crate::error::Error::OracleCapExceeded {
            size: max_n,
            cap: VARIETY_VERIFY_CAP,
            what: "variety sweep",
        });
    }
    let ideals = ideals_upto(max_n)?;
    let cubes: Vec<RotationalLattice> = (1..=max_n)
        .map(rotational_cube)
        .collect::<Result<_>>()?;
    let mut cx = Vec::new();
    let mut instances = 0;

    for x in &ideals {
        for y in &ideals {
            instances += 1;
            let expected = variety_leq(x, y);
            let mut semantic = true;
            for &n in &si_members(x) {
                let cert = variety_contains_algebra(y, &cubes[n - 1])?;
                if !cert.contained {
                    semantic = false;
                }
            }
            if expected != semantic {
                cx.push(Counterexample {
                    item: format!("X={:?}, Y={:?}", x.members(), y.members()),
                    problem: format!(
                        "subset order says {expected}, subdirect membership says {semantic}"
                    ),
                });
            }
        }
        for (k, cube) in cubes.iter().enumerate() {
            instances += 1;
            let cert = variety_contains_algebra(x, cube)?;
            if cert.contained != x.contains(k + 1) {
                cx.push(Counterexample {
                    item: format!("X={:?}, cube dimension {}", x.members(), k + 1),
                    problem: format!(
                        "membership {} but ideal containment {}",
                        cert.contained,
                        x.contains(k + 1)
                    ),
                });
            }
        }
    }

    // the g^n identity cuts out exactly the divisor cubes
    for n in 1..=max_n {
        let dn = divisors_ideal(n)?;
        for (m, cube) in cubes.iter().enumerate() {
            instances += 1;
            let holds = satisfies_order_identity(cube, n)?;
            if holds != dn.contains(m + 1) {
                cx.push(Counterexample {
                    item: format!("cube dimension {}, identity exponent {n}", m + 1),
                    problem: format!("identity holds = {holds}, divisor = {}", dn.contains(m + 1)),
                });
            }
        }
    }

    Ok(VerificationReport {
        check: "variety-lattice".into(),
        instances,
        counterexamples: cx,
        wall_ms: start.elapsed().as_millis(),
    })
}
