//! JSON documents for posets, lattices, algebras, congruences and ideals.
//!
//! Lattice-like documents carry the strict order pairs; parsing takes the
//! reflexive-transitive closure, so any generating set of pairs is accepted.
//! Poset and rot_poset documents carry cover pairs. A parsed document that
//! lacks a rotation is given the identity.

use serde::{Deserialize, Serialize};

use crate::congruence::Congruence;
use crate::error::{Error, Result};
use crate::lattice::{downset_lattice, lift_poset_automorphism, FiniteLattice};
use crate::perm::Perm;
use crate::poset::Poset;
use crate::rotational::{make_rotational, RotationalLattice};
use crate::varieties::{FactorWitness, MembershipCertificate, OrderIdeal};

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Document {
    Poset {
        size: usize,
        covers: Vec<(usize, usize)>,
    },
    Lattice {
        size: usize,
        leq: Vec<(usize, usize)>,
    },
    RotationalLattice {
        size: usize,
        leq: Vec<(usize, usize)>,
        g: Vec<usize>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        generator: Option<usize>,
    },
    RotPoset {
        size: usize,
        covers: Vec<(usize, usize)>,
        sigma: Vec<usize>,
    },
    Congruence {
        algebra_size: usize,
        labels: Vec<usize>,
    },
    OrderIdeal {
        members: Vec<usize>,
    },
}

impl Document {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("document serialization")
    }

    pub fn to_json_pretty(&self) -> String {
        serde_json::to_string_pretty(self).expect("document serialization")
    }

    pub fn from_json(text: &str) -> Result<Document> {
        Ok(serde_json::from_str(text)?)
    }
}

pub fn poset_doc(p: &Poset) -> Document {
    Document::Poset {
        size: p.size(),
        covers: p.covers(),
    }
}

pub fn lattice_doc(l: &FiniteLattice) -> Document {
    Document::Lattice {
        size: l.size(),
        leq: l.leq_pairs(),
    }
}

pub fn algebra_doc(a: &RotationalLattice) -> Document {
    Document::RotationalLattice {
        size: a.size(),
        leq: a.lattice().leq_pairs(),
        g: a.g().images().to_vec(),
        generator: None,
    }
}

pub fn algebra_doc_with_generator(a: &RotationalLattice, generator: usize) -> Document {
    Document::RotationalLattice {
        size: a.size(),
        leq: a.lattice().leq_pairs(),
        g: a.g().images().to_vec(),
        generator: Some(generator),
    }
}

pub fn rot_poset_doc(p: &Poset, sigma: &Perm) -> Document {
    Document::RotPoset {
        size: p.size(),
        covers: p.covers(),
        sigma: sigma.images().to_vec(),
    }
}

pub fn congruence_doc(theta: &Congruence) -> Document {
    Document::Congruence {
        algebra_size: theta.size(),
        labels: theta.labels().to_vec(),
    }
}

pub fn ideal_doc(x: &OrderIdeal) -> Document {
    Document::OrderIdeal {
        members: x.members().to_vec(),
    }
}

pub fn parse_poset(doc: &Document) -> Result<Poset> {
    match doc {
        Document::Poset { size, covers } | Document::RotPoset { size, covers, .. } => {
            Poset::from_pairs(*size, covers)
        }
        _ => Err(Error::BadDocument {
            reason: "expected a poset document".into(),
        }),
    }
}

pub fn parse_lattice(doc: &Document) -> Result<FiniteLattice> {
    match doc {
        Document::Poset { .. } => downset_lattice(&parse_poset(doc)?),
        Document::Lattice { size, leq } | Document::RotationalLattice { size, leq, .. } => {
            FiniteLattice::from_leq_pairs(*size, leq)
        }
        Document::RotPoset { .. } => downset_lattice(&parse_poset(doc)?),
        _ => Err(Error::BadDocument {
            reason: "expected a lattice-like document".into(),
        }),
    }
}

/// Any lattice-like document becomes a rotational lattice; poset and plain
/// lattice documents get the identity rotation.
pub fn parse_algebra(doc: &Document) -> Result<RotationalLattice> {
    match doc {
        Document::Poset { .. } | Document::Lattice { .. } => {
            let lattice = parse_lattice(doc)?;
            let n = lattice.size();
            make_rotational(lattice, Perm::identity(n))
        }
        Document::RotationalLattice { g, .. } => {
            let lattice = parse_lattice(doc)?;
            make_rotational(lattice, Perm::from_images(g.clone())?)
        }
        Document::RotPoset { sigma, .. } => {
            let poset = parse_poset(doc)?;
            let lattice = downset_lattice(&poset)?;
            let lifted =
                lift_poset_automorphism(&poset, &lattice, &Perm::from_images(sigma.clone())?)?;
            make_rotational(lattice, lifted)
        }
        _ => Err(Error::BadDocument {
            reason: "expected an algebra-like document".into(),
        }),
    }
}

pub fn parse_congruence(doc: &Document) -> Result<Congruence> {
    match doc {
        Document::Congruence {
            algebra_size,
            labels,
        } => {
            if labels.len() != *algebra_size || labels.iter().any(|&l| l >= *algebra_size) {
                return Err(Error::BadDocument {
                    reason: "congruence labels out of range".into(),
                });
            }
            Ok(Congruence::from_labels(labels))
        }
        _ => Err(Error::BadDocument {
            reason: "expected a congruence document".into(),
        }),
    }
}

pub fn parse_ideal(doc: &Document) -> Result<OrderIdeal> {
    match doc {
        Document::OrderIdeal { members } => OrderIdeal::new(members.iter().copied()),
        _ => Err(Error::BadDocument {
            reason: "expected an order ideal document".into(),
        }),
    }
}

/// Serialized membership certificate: each subdirect factor's kernel labels
/// and recognized cube dimension.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CertificateDoc {
    pub contained: bool,
    pub factors: Vec<CertificateFactor>,
    pub missing: Vec<usize>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CertificateFactor {
    pub kernel_labels: Vec<usize>,
    pub dimension: usize,
}

pub fn certificate_doc(cert: &MembershipCertificate) -> CertificateDoc {
    CertificateDoc {
        contained: cert.contained,
        factors: cert
            .factors
            .iter()
            .map(|FactorWitness { kernel, dimension }| CertificateFactor {
                kernel_labels: kernel.labels().to_vec(),
                dimension: *dimension,
            })
            .collect(),
        missing: cert.missing.clone(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rotational::{is_isomorphic, rotational_cube};

    #[test]
    fn poset_round_trip() {
        let p = Poset::from_pairs(4, &[(0, 1), (1, 3), (0, 2)]).unwrap();
        let doc = poset_doc(&p);
        let text = doc.to_json();
        assert!(text.contains("\"kind\":\"poset\""));
        let back = parse_poset(&Document::from_json(&text).unwrap()).unwrap();
        assert!(p.is_isomorphic(&back));
        for i in 0..4 {
            for j in 0..4 {
                assert_eq!(p.leq(i, j), back.leq(i, j));
            }
        }
    }

    #[test]
    fn algebra_round_trip_is_isomorphic() {
        let b3 = rotational_cube(3).unwrap();
        let text = algebra_doc(&b3).to_json();
        let back = parse_algebra(&Document::from_json(&text).unwrap()).unwrap();
        assert!(is_isomorphic(&b3, &back).is_some());
    }

    #[test]
    fn rot_poset_doc_builds_the_cube() {
        let doc = Document::RotPoset {
            size: 3,
            covers: vec![],
            sigma: vec![1, 2, 0],
        };
        let alg = parse_algebra(&doc).unwrap();
        assert_eq!(crate::rotational::recognize_cube(&alg), Some(3));
    }

    #[test]
    fn plain_lattice_gets_identity_rotation() {
        let doc = Document::Lattice {
            size: 3,
            leq: vec![(0, 1), (1, 2)],
        };
        let alg = parse_algebra(&doc).unwrap();
        assert_eq!(alg.order(), 1);
        assert_eq!(alg.size(), 3);
    }

    #[test]
    fn bad_documents_are_rejected() {
        assert!(Document::from_json("{\"kind\":\"mystery\"}").is_err());
        let doc = Document::Congruence {
            algebra_size: 2,
            labels: vec![0, 7],
        };
        assert!(parse_congruence(&doc).is_err());
        let cyclic = Document::Poset {
            size: 2,
            covers: vec![(0, 1), (1, 0)],
        };
        assert!(parse_poset(&cyclic).is_err());
    }

    #[test]
    fn exact_wire_shape() {
        let p = Poset::chain(2);
        assert_eq!(
            poset_doc(&p).to_json(),
            "{\"kind\":\"poset\",\"size\":2,\"covers\":[[0,1]]}"
        );
        let x = OrderIdeal::new([1, 2]).unwrap();
        assert_eq!(
            ideal_doc(&x).to_json(),
            "{\"kind\":\"order_ideal\",\"members\":[1,2]}"
        );
    }
}
