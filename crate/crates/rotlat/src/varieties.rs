//! The divisibility calculus of varieties of distributive rotational
//! lattices.
//!
//! Each variety is named by a finite divisor-closed set X of positive
//! integers; its subdirectly irreducible members are the rotational cubes
//! of the dimensions in X. Membership of a concrete finite algebra is
//! decided by subdirect factorization plus cube recognition.

use crate::congruence::{subdirect_factors, Congruence};
use crate::error::{Error, Result};
use crate::rotational::{
    recognize_cube, rotational_cube, AlgebraMap, RotationalLattice,
};

/// Cap for exhaustive ideal enumeration (subsets of {1..N}).
pub const IDEAL_ENUM_CAP: usize = 16;

/// A finite divisor-closed set of positive integers. The empty set is
/// allowed and names the trivial variety of singleton algebras.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OrderIdeal {
    members: Vec<usize>,
}

impl OrderIdeal {
    pub fn empty() -> OrderIdeal {
        OrderIdeal { members: vec![] }
    }

    /// Validates divisor-closure.
    pub fn new(members: impl IntoIterator<Item = usize>) -> Result<OrderIdeal> {
        let mut members: Vec<usize> = members.into_iter().collect();
        members.sort_unstable();
        members.dedup();
        if members.first() == Some(&0) {
            return Err(Error::NonPositiveIdealMember);
        }
        for &x in &members {
            for d in 1..=x {
                if x.is_multiple_of(d) && members.binary_search(&d).is_err() {
                    return Err(Error::InvalidIdeal {
                        member: x,
                        missing: d,
                    });
                }
            }
        }
        Ok(OrderIdeal { members })
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, n: usize) -> bool {
        self.members.binary_search(&n).is_ok()
    }

    pub fn is_subset(&self, other: &OrderIdeal) -> bool {
        self.members.iter().all(|&x| other.contains(x))
    }
}

/// The divisors of n: the ideal with D_n = V(divisors_ideal(n)).
pub fn divisors_ideal(n: usize) -> Result<OrderIdeal> {
    if n == 0 {
        return Err(Error::ZeroDimension);
    }
    OrderIdeal::new((1..=n).filter(|&d| n.is_multiple_of(d)))
}

/// All order ideals with maximum element ≤ n, sorted.
pub fn ideals_upto(n: usize) -> Result<Vec<OrderIdeal>> {
    if n > IDEAL_ENUM_CAP {
        return Err(Error::OracleCapExceeded {
            size: n,
            cap: IDEAL_ENUM_CAP,
            what: "ideal enumeration",
        });
    }
    let mut out = Vec::new();
    'subset: for mask in 0u32..(1 << n) {
        let members: Vec<usize> = (0..n).filter(|k| mask >> k & 1 == 1).map(|k| k + 1).collect();
        for &x in &members {
            for d in 1..=x {
                if x.is_multiple_of(d) && !members.contains(&d) {
                    continue 'subset;
                }
            }
        }
        out.push(OrderIdeal { members });
    }
    out.sort();
    Ok(out)
}

/// Whether the m-cube is a homomorphic image of a subalgebra of the n-cube:
/// exactly when m divides n.
pub fn hs_cube(m: usize, n: usize) -> Result<bool> {
    if m == 0 || n == 0 {
        return Err(Error::ZeroDimension);
    }
    Ok(n.is_multiple_of(m))
}

/// The witnessing embedding of the m-cube into the n-cube for m | n: atom j
/// maps to the join of the atoms j, m+j, 2m+j, ..., its image is a spanning
/// subalgebra.
pub fn embed_cube(m: usize, n: usize) -> Result<AlgebraMap> {
    if m == 0 || n == 0 {
        return Err(Error::ZeroDimension);
    }
    if !n.is_multiple_of(m) {
        return Err(Error::NotDivisible { m, n });
    }
    let source = rotational_cube(m)?;
    let target = rotational_cube(n)?;
    let k = n / m;
    // image mask (over the n atoms) of each source atom
    let spread: Vec<u64> = (0..m)
        .map(|j| (0..k).fold(0u64, |mask, t| mask | 1 << (t * m + j)))
        .collect();
    let map: Vec<usize> = (0..source.size())
        .map(|e| {
            let em = source.lattice().downset_mask(e).expect("cube masks");
            let image = (0..m)
                .filter(|&j| em >> j & 1 == 1)
                .fold(0u64, |mask, j| mask | spread[j]);
            target.lattice().downset_index(image).expect("cube masks")
        })
        .collect();
    AlgebraMap::verified(source, target, map)
}

/// The subdirectly irreducible members of V(X): the cubes with dimension
/// in X.
pub fn si_members(x: &OrderIdeal) -> Vec<usize> {
    x.members().to_vec()
}

/// Containment of varieties: V(X) ⊆ V(Y) exactly when X ⊆ Y.
pub fn variety_leq(x: &OrderIdeal, y: &OrderIdeal) -> bool {
    x.is_subset(y)
}

/// Whether an algebra satisfies g^t(x) ≈ x: exactly when its order
/// divides t.
pub fn satisfies_order_identity(a: &RotationalLattice, t: usize) -> Result<bool> {
    if t == 0 {
        return Err(Error::ZeroDimension);
    }
    Ok(t.is_multiple_of(a.order()))
}

/// One subdirect factor together with its recognized cube dimension.
#[derive(Debug, Clone)]
pub struct FactorWitness {
    pub kernel: Congruence,
    pub dimension: usize,
}

/// A checkable membership certificate: the subdirect factors of the algebra
/// and their cube dimensions. The algebra lies in V(X) exactly when every
/// factor dimension is in X; a singleton algebra (no factors) lies in every
/// variety.
#[derive(Debug, Clone)]
pub struct MembershipCertificate {
    pub contained: bool,
    pub factors: Vec<FactorWitness>,
    /// Factor dimensions not in the ideal (empty iff contained).
    pub missing: Vec<usize>,
}

/// Decides membership of a finite distributive algebra in V(X) by
/// subdirect factorization. A subdirectly irreducible factor that fails
/// cube recognition contradicts the classification and is reported as an
/// error, never ignored.
pub fn variety_contains_algebra(
    x: &OrderIdeal,
    a: &RotationalLattice,
) -> Result<MembershipCertificate> {
    if !a.lattice().is_distributive() {
        return Err(Error::NotDistributive);
    }
    let mut factors = Vec::new();
    let mut missing = Vec::new();
    for (kernel, q) in subdirect_factors(a)? {
        let dimension = recognize_cube(&q).ok_or(Error::TheoremViolation { size: q.size() })?;
        if !x.contains(dimension) && !missing.contains(&dimension) {
            missing.push(dimension);
        }
        factors.push(FactorWitness { kernel, dimension });
    }
    missing.sort_unstable();
    Ok(MembershipCertificate {
        contained: missing.is_empty(),
        factors,
        missing,
    })
}
