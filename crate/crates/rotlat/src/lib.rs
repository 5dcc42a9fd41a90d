//! A workbench for finite rotational lattices: lattices equipped with an
//! automorphism of finite order.
//!
//! The crate builds such algebras (most importantly the rotational cubes,
//! boolean lattices whose rotation cyclically permutes the atoms), computes
//! their congruence structure, decides subdirect irreducibility, and decides
//! membership in the varieties indexed by divisor-closed sets of positive
//! integers. A verification harness sweeps an exhaustively enumerated corpus
//! of small algebras and checks the classification facts against brute-force
//! oracles.

mod bits;
pub mod congruence;
pub mod dot;
mod error;
pub mod harness;
pub mod json;
pub mod lattice;
pub mod perm;
pub mod poset;
pub mod rotational;
pub mod varieties;

pub use congruence::{
    all_congruences, congruence_generated_by, congruence_join, is_congruence, is_simple,
    is_subdirectly_irreducible, monolith, principal_congruence, quotient,
    stable_split_congruences, subdirect_factors, ConLattice, Congruence, CON_CAP,
};
pub use error::{Error, Result};
pub use harness::{
    build_corpus, verify_lemmas, verify_si_classification, verify_variety_lattice, Corpus,
    CorpusItem, VerificationReport,
};
pub use lattice::{
    downset_lattice, lift_poset_automorphism, FiniteLattice, StructureReport, ELEMENT_CAP,
};
pub use perm::Perm;
pub use poset::{enumerate_posets, Poset, POSET_ENUM_CAP, POSET_SIZE_CAP};
pub use rotational::{
    all_quotient_algebras, direct_product, free_one_generated, is_isomorphic, make_rotational,
    recognize_cube, rotational_cube, AlgebraMap, FreeOneGenerated, MapKind, RotationalLattice,
    FREE_GENERATOR_CAP, SUBUNIVERSE_ORACLE_CAP,
};
pub use varieties::{
    divisors_ideal, embed_cube, hs_cube, ideals_upto, satisfies_order_identity, si_members,
    variety_contains_algebra, variety_leq, FactorWitness, MembershipCertificate, OrderIdeal,
};
