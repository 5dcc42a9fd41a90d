//! Acceptance suite: one test per criterion, each printing a pass/fail
//! line. Run with `cargo test --test acceptance -- --nocapture` to see the
//! lines; every criterion is also enforced through assertions.

mod common;

use std::time::Instant;

use rotlat::{
    all_congruences, build_corpus, embed_cube, free_one_generated, hs_cube, ideals_upto,
    is_isomorphic, is_simple, rotational_cube, satisfies_order_identity, si_members,
    variety_contains_algebra, variety_leq, verify_lemmas, verify_si_classification,
};

fn report(number: usize, name: &str, ok: bool, detail: String) {
    println!(
        "ACCEPTANCE {number} {name}: {}",
        if ok { "PASS" } else { "FAIL" }
    );
    assert!(ok, "criterion {number} ({name}): {detail}");
}

/// Criterion 1: over the corpus of all posets with at most 5 points and all
/// lifted automorphisms, subdirect irreducibility coincides with being a
/// rotational cube, cubes are simple, and the sweep stays under 5 minutes.
#[test]
fn criterion_1_si_classification() {
    let start = Instant::now();
    let corpus = build_corpus(5, true).unwrap();
    let poset_classes = rotlat::enumerate_posets(5)
        .unwrap()
        .iter()
        .filter(|p| p.size() == 5)
        .count();
    let sweep = verify_si_classification(&corpus);
    let elapsed = start.elapsed();
    let ok = poset_classes == 63
        && sweep.passed()
        && sweep.instances == corpus.len()
        && elapsed.as_secs() < 300;
    report(
        1,
        "si-classification",
        ok,
        format!(
            "poset classes {poset_classes}, {} algebras, counterexamples {:?}, {:?}",
            corpus.len(),
            sweep.counterexamples,
            elapsed
        ),
    );
}

/// Criterion 2: every cube up to dimension 7 is simple, within a minute.
#[test]
fn criterion_2_simplicity() {
    let start = Instant::now();
    let mut failures = Vec::new();
    for n in 1..=7 {
        if !is_simple(&rotational_cube(n).unwrap()) {
            failures.push(n);
        }
    }
    let elapsed = start.elapsed();
    let ok = failures.is_empty() && elapsed.as_secs() < 60;
    report(
        2,
        "cube-simplicity",
        ok,
        format!("non-simple dimensions {failures:?}, {elapsed:?}"),
    );
}

/// Criterion 3: the divisibility test for homomorphic images of
/// subalgebras agrees with the brute-force search up to dimension 4, and
/// the explicit embeddings for m | n ≤ 7 are injective spanning
/// homomorphisms.
#[test]
fn criterion_3_hs_oracle_and_embeddings() {
    let mut problems = Vec::new();
    for m in 1..=4usize {
        for n in 1..=4usize {
            let fast = hs_cube(m, n).unwrap();
            let brute = common::hs_brute(m, n);
            if fast != brute {
                problems.push(format!("hs({m},{n}): divisibility {fast}, brute {brute}"));
            }
        }
    }
    for n in 1..=7usize {
        for m in (1..=n).filter(|m| n % m == 0) {
            match embed_cube(m, n) {
                Ok(map) => {
                    if !map.is_injective() {
                        problems.push(format!("embed({m},{n}) not injective"));
                    }
                    let image: Vec<usize> = {
                        let mut v = map.map().to_vec();
                        v.sort_unstable();
                        v.dedup();
                        v
                    };
                    match map.target().is_spanning(&image) {
                        Ok(true) => {}
                        other => problems.push(format!("embed({m},{n}) spanning: {other:?}")),
                    }
                }
                Err(e) => problems.push(format!("embed({m},{n}) failed: {e}")),
            }
        }
    }
    report(3, "hs-criterion", problems.is_empty(), format!("{problems:?}"));
}

/// Criterion 4: over the 17 ideals bounded by 6, variety containment
/// coincides with set containment, and cube membership with ideal
/// membership, within a minute.
#[test]
fn criterion_4_variety_lattice() {
    let start = Instant::now();
    let ideals = ideals_upto(6).unwrap();
    let mut problems = Vec::new();
    if ideals.len() != 17 {
        problems.push(format!("expected 17 ideals, got {}", ideals.len()));
    }
    let cubes: Vec<_> = (1..=6).map(|n| rotational_cube(n).unwrap()).collect();
    let mut pairs = 0;
    for x in &ideals {
        for y in &ideals {
            pairs += 1;
            let expected = x.is_subset(y);
            if variety_leq(x, y) != expected {
                problems.push(format!("variety_leq({:?},{:?})", x.members(), y.members()));
            }
            let semantic = si_members(x).iter().all(|&n| {
                variety_contains_algebra(y, &cubes[n - 1])
                    .map(|c| c.contained)
                    .unwrap_or(false)
            });
            if semantic != expected {
                problems.push(format!(
                    "membership semantics differ for ({:?},{:?})",
                    x.members(),
                    y.members()
                ));
            }
        }
        for (k, cube) in cubes.iter().enumerate() {
            let contained = variety_contains_algebra(x, cube).unwrap().contained;
            if contained != x.contains(k + 1) {
                problems.push(format!("B_{} in V({:?})", k + 1, x.members()));
            }
        }
    }
    let elapsed = start.elapsed();
    let ok = problems.is_empty() && pairs == 289 && elapsed.as_secs() < 60;
    report(
        4,
        "variety-lattice",
        ok,
        format!("{problems:?}, {pairs} pairs, {elapsed:?}"),
    );
}

/// Criterion 5: the m-cube satisfies the g^n identity exactly when m
/// divides n, for all m, n up to 12.
#[test]
fn criterion_5_order_identities() {
    let mut problems = Vec::new();
    let cubes: Vec<_> = (1..=12).map(|m| rotational_cube(m).unwrap()).collect();
    for (m, cube) in cubes.iter().enumerate() {
        let m = m + 1;
        if cube.order() != m {
            problems.push(format!("order of the {m}-cube is {}", cube.order()));
        }
        for n in 1..=12usize {
            let holds = satisfies_order_identity(cube, n).unwrap();
            if holds != (n % m == 0) {
                problems.push(format!("identity exponent {n} on the {m}-cube: {holds}"));
            }
        }
    }
    report(5, "order-identities", problems.is_empty(), format!("{problems:?}"));
}

/// Criterion 6: for every corpus algebra with at most 12 elements, the
/// computed congruence lattice equals the set of all compatible partitions.
#[test]
fn criterion_6_congruence_oracle() {
    let corpus = build_corpus(5, true).unwrap();
    let mut checked = 0;
    let mut problems = Vec::new();
    for item in &corpus.items {
        if item.algebra.size() > 12 {
            continue;
        }
        checked += 1;
        let computed: std::collections::BTreeSet<Vec<usize>> =
            all_congruences(&item.algebra)
                .unwrap()
                .congruences()
                .iter()
                .map(|c| c.labels().to_vec())
                .collect();
        let brute = common::congruences_brute(&item.algebra);
        if computed != brute {
            problems.push(format!(
                "{}: computed {} congruences, brute force {}",
                item.describe(),
                computed.len(),
                brute.len()
            ));
        }
    }
    let ok = problems.is_empty() && checked > 0;
    report(
        6,
        "congruence-oracle",
        ok,
        format!("{problems:?} over {checked} algebras"),
    );
}

/// Criterion 7: the lemma sweep (stable elements, orbit cubes, spanning,
/// height sums, the α/β split, atom closures, product orders) is clean over
/// the corpus at poset size 4 and cube products up to 4.
#[test]
fn criterion_7_lemma_sweeps() {
    let corpus = build_corpus(4, true).unwrap();
    let sweep = verify_lemmas(&corpus);
    report(
        7,
        "lemma-sweeps",
        sweep.passed(),
        format!(
            "{} instances, counterexamples {:?}",
            sweep.instances, sweep.counterexamples
        ),
    );
}

/// Criterion 8: free algebra sizes 1, 4, 18 for arities 1..3, the arity-2
/// free algebra is the two-cube, and homomorphism counts into divisor cubes
/// equal the cube sizes.
#[test]
fn criterion_8_free_algebras() {
    let mut problems = Vec::new();
    let expected_sizes = [1usize, 4, 18];
    for (idx, &expected) in expected_sizes.iter().enumerate() {
        let n = idx + 1;
        let free = free_one_generated(n).unwrap();
        if free.algebra.size() != expected {
            problems.push(format!(
                "free({n}) has {} elements, expected {expected}",
                free.algebra.size()
            ));
        }
        for m in (1..=n.min(3)).filter(|m| n % m == 0) {
            let cube = rotational_cube(m).unwrap();
            let count = free.homomorphism_count(&cube);
            if count != cube.size() {
                problems.push(format!(
                    "hom count free({n}) -> {m}-cube is {count}, expected {}",
                    cube.size()
                ));
            }
        }
    }
    let free2 = free_one_generated(2).unwrap();
    if is_isomorphic(&free2.algebra, &rotational_cube(2).unwrap()).is_none() {
        problems.push("free(2) is not the two-cube".into());
    }
    report(8, "free-algebras", problems.is_empty(), format!("{problems:?}"));
}
