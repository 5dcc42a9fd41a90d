//! Python bindings for the rotational lattice workbench.
//!
//! Exposes the core types (posets, lattices, rotational lattices,
//! congruences, order ideals) and the operations on them; verification
//! reports and membership certificates are returned as JSON strings.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use rotlat::json;

fn err(e: rotlat::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

#[pyclass(frozen, skip_from_py_object)]
#[derive(Clone)]
struct Poset {
    inner: rotlat::Poset,
}

#[pymethods]
impl Poset {
    #[new]
    fn new(size: usize, pairs: Vec<(usize, usize)>) -> PyResult<Poset> {
        Ok(Poset {
            inner: rotlat::Poset::from_pairs(size, &pairs).map_err(err)?,
        })
    }

    #[staticmethod]
    fn antichain(n: usize) -> Poset {
        Poset {
            inner: rotlat::Poset::antichain(n),
        }
    }

    #[staticmethod]
    fn chain(n: usize) -> Poset {
        Poset {
            inner: rotlat::Poset::chain(n),
        }
    }

    fn size(&self) -> usize {
        self.inner.size()
    }

    fn leq(&self, i: usize, j: usize) -> bool {
        self.inner.leq(i, j)
    }

    fn covers(&self) -> Vec<(usize, usize)> {
        self.inner.covers()
    }

    fn automorphisms(&self) -> Vec<Vec<usize>> {
        self.inner
            .automorphisms()
            .into_iter()
            .map(|p| p.images().to_vec())
            .collect()
    }

    fn is_isomorphic(&self, other: &Poset) -> bool {
        self.inner.is_isomorphic(&other.inner)
    }

    fn downset_lattice(&self) -> PyResult<Lattice> {
        Ok(Lattice {
            inner: rotlat::downset_lattice(&self.inner).map_err(err)?,
        })
    }

    fn to_json(&self) -> String {
        json::poset_doc(&self.inner).to_json()
    }

    fn to_dot(&self) -> String {
        rotlat::dot::poset_dot(&self.inner)
    }

    fn __repr__(&self) -> String {
        format!(
            "Poset(size={}, covers={:?})",
            self.inner.size(),
            self.inner.covers()
        )
    }
}

#[pyclass(frozen, skip_from_py_object)]
#[derive(Clone)]
struct Lattice {
    inner: rotlat::FiniteLattice,
}

#[pymethods]
impl Lattice {
    #[new]
    fn new(size: usize, leq: Vec<(usize, usize)>) -> PyResult<Lattice> {
        Ok(Lattice {
            inner: rotlat::FiniteLattice::from_leq_pairs(size, &leq).map_err(err)?,
        })
    }

    fn size(&self) -> usize {
        self.inner.size()
    }

    fn zero(&self) -> usize {
        self.inner.zero()
    }

    fn one(&self) -> usize {
        self.inner.one()
    }

    fn leq(&self, i: usize, j: usize) -> bool {
        self.inner.leq(i, j)
    }

    fn join(&self, i: usize, j: usize) -> usize {
        self.inner.join(i, j)
    }

    fn meet(&self, i: usize, j: usize) -> usize {
        self.inner.meet(i, j)
    }

    fn atoms(&self) -> Vec<usize> {
        self.inner.atoms()
    }

    fn heights(&self) -> Vec<usize> {
        self.inner.heights()
    }

    fn length(&self) -> usize {
        self.inner.length()
    }

    fn covers(&self) -> Vec<(usize, usize)> {
        self.inner.covers()
    }

    fn is_distributive(&self) -> bool {
        self.inner.is_distributive()
    }

    fn join_irreducibles(&self) -> PyResult<Poset> {
        let (poset, _) = self.inner.join_irreducibles().map_err(err)?;
        Ok(Poset { inner: poset })
    }

    fn to_json(&self) -> String {
        json::lattice_doc(&self.inner).to_json()
    }

    fn to_dot(&self) -> String {
        rotlat::dot::lattice_dot(&self.inner)
    }

    fn __repr__(&self) -> String {
        format!("Lattice(size={})", self.inner.size())
    }
}

#[pyclass(frozen, skip_from_py_object)]
#[derive(Clone)]
struct Congruence {
    inner: rotlat::Congruence,
}

#[pymethods]
impl Congruence {
    fn labels(&self) -> Vec<usize> {
        self.inner.labels().to_vec()
    }

    fn num_blocks(&self) -> usize {
        self.inner.num_blocks()
    }

    fn blocks(&self) -> Vec<Vec<usize>> {
        self.inner.blocks()
    }

    fn is_identity(&self) -> bool {
        self.inner.is_identity()
    }

    fn is_full(&self) -> bool {
        self.inner.is_full()
    }

    fn refines(&self, other: &Congruence) -> bool {
        self.inner.refines(&other.inner)
    }

    fn meet(&self, other: &Congruence) -> Congruence {
        Congruence {
            inner: self.inner.meet(&other.inner),
        }
    }

    fn to_json(&self) -> String {
        json::congruence_doc(&self.inner).to_json()
    }

    fn __repr__(&self) -> String {
        format!("Congruence(blocks={})", self.inner.num_blocks())
    }

    fn __eq__(&self, other: &Congruence) -> bool {
        self.inner == other.inner
    }
}

#[pyclass(frozen, from_py_object)]
#[derive(Clone)]
struct Algebra {
    inner: rotlat::RotationalLattice,
}

#[pymethods]
impl Algebra {
    /// Builds an algebra from a lattice and the image vector of g.
    #[new]
    fn new(lattice: &Lattice, g: Vec<usize>) -> PyResult<Algebra> {
        let perm = rotlat::Perm::from_images(g).map_err(err)?;
        Ok(Algebra {
            inner: rotlat::make_rotational(lattice.inner.clone(), perm).map_err(err)?,
        })
    }

    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Algebra> {
        let doc = json::Document::from_json(text).map_err(err)?;
        Ok(Algebra {
            inner: json::parse_algebra(&doc).map_err(err)?,
        })
    }

    fn size(&self) -> usize {
        self.inner.size()
    }

    fn order(&self) -> usize {
        self.inner.order()
    }

    fn g(&self) -> Vec<usize> {
        self.inner.g().images().to_vec()
    }

    fn lattice(&self) -> Lattice {
        Lattice {
            inner: self.inner.lattice().clone(),
        }
    }

    fn zero(&self) -> usize {
        self.inner.zero()
    }

    fn one(&self) -> usize {
        self.inner.one()
    }

    fn join(&self, x: usize, y: usize) -> usize {
        self.inner.join(x, y)
    }

    fn meet(&self, x: usize, y: usize) -> usize {
        self.inner.meet(x, y)
    }

    fn orbit(&self, a: usize) -> Vec<usize> {
        self.inner.orbit(a)
    }

    fn stable_elements(&self) -> Vec<usize> {
        self.inner.stable_elements()
    }

    fn subuniverse_closure(&self, seeds: Vec<usize>) -> PyResult<Vec<usize>> {
        self.inner.subuniverse_closure(&seeds).map_err(err)
    }

    /// The generated subalgebra and the inclusion map into this algebra.
    fn generated_subalgebra(&self, seeds: Vec<usize>) -> PyResult<(Algebra, Vec<usize>)> {
        let (sub, inclusion) = self.inner.generated_subalgebra(&seeds).map_err(err)?;
        Ok((Algebra { inner: sub }, inclusion.map().to_vec()))
    }

    fn is_spanning(&self, elements: Vec<usize>) -> PyResult<bool> {
        self.inner.is_spanning(&elements).map_err(err)
    }

    fn all_subuniverses(&self) -> PyResult<Vec<Vec<usize>>> {
        self.inner.all_subuniverses().map_err(err)
    }

    fn is_simple(&self) -> bool {
        rotlat::is_simple(&self.inner)
    }

    fn is_subdirectly_irreducible(&self) -> bool {
        rotlat::is_subdirectly_irreducible(&self.inner)
    }

    fn monolith(&self) -> Option<Congruence> {
        rotlat::monolith(&self.inner).map(|inner| Congruence { inner })
    }

    fn principal_congruence(&self, a: usize, b: usize) -> Congruence {
        Congruence {
            inner: rotlat::principal_congruence(&self.inner, a, b),
        }
    }

    fn congruences(&self) -> PyResult<Vec<Congruence>> {
        Ok(rotlat::all_congruences(&self.inner)
            .map_err(err)?
            .congruences()
            .iter()
            .map(|inner| Congruence {
                inner: inner.clone(),
            })
            .collect())
    }

    /// The quotient algebra and the canonical surjection.
    fn quotient(&self, theta: &Congruence) -> PyResult<(Algebra, Vec<usize>)> {
        let (q, pi) = rotlat::quotient(&self.inner, &theta.inner).map_err(err)?;
        Ok((Algebra { inner: q }, pi.map().to_vec()))
    }

    fn subdirect_factors(&self) -> PyResult<Vec<(Congruence, Algebra)>> {
        Ok(rotlat::subdirect_factors(&self.inner)
            .map_err(err)?
            .into_iter()
            .map(|(kernel, q)| (Congruence { inner: kernel }, Algebra { inner: q }))
            .collect())
    }

    fn stable_split(&self, a: usize) -> PyResult<(Congruence, Congruence)> {
        let (alpha, beta) = rotlat::stable_split_congruences(&self.inner, a).map_err(err)?;
        Ok((Congruence { inner: alpha }, Congruence { inner: beta }))
    }

    fn recognize_cube(&self) -> Option<usize> {
        rotlat::recognize_cube(&self.inner)
    }

    /// The image vector of an isomorphism onto `other`, when one exists.
    fn is_isomorphic(&self, other: &Algebra) -> Option<Vec<usize>> {
        rotlat::is_isomorphic(&self.inner, &other.inner).map(|m| m.map().to_vec())
    }

    fn satisfies_order_identity(&self, t: usize) -> PyResult<bool> {
        rotlat::satisfies_order_identity(&self.inner, t).map_err(err)
    }

    fn to_json(&self) -> String {
        json::algebra_doc(&self.inner).to_json()
    }

    fn to_dot(&self) -> String {
        rotlat::dot::algebra_dot(&self.inner)
    }

    fn __repr__(&self) -> String {
        format!(
            "Algebra(size={}, order={})",
            self.inner.size(),
            self.inner.order()
        )
    }
}

#[pyclass(frozen, skip_from_py_object)]
#[derive(Clone)]
struct Ideal {
    inner: rotlat::OrderIdeal,
}

#[pymethods]
impl Ideal {
    #[new]
    fn new(members: Vec<usize>) -> PyResult<Ideal> {
        Ok(Ideal {
            inner: rotlat::OrderIdeal::new(members).map_err(err)?,
        })
    }

    #[staticmethod]
    fn divisors(n: usize) -> PyResult<Ideal> {
        Ok(Ideal {
            inner: rotlat::divisors_ideal(n).map_err(err)?,
        })
    }

    fn members(&self) -> Vec<usize> {
        self.inner.members().to_vec()
    }

    fn contains(&self, n: usize) -> bool {
        self.inner.contains(n)
    }

    fn leq(&self, other: &Ideal) -> bool {
        rotlat::variety_leq(&self.inner, &other.inner)
    }

    fn si_members(&self) -> Vec<usize> {
        rotlat::si_members(&self.inner)
    }

    /// Membership certificate for an algebra, as a JSON string.
    fn contains_algebra(&self, a: &Algebra) -> PyResult<String> {
        let cert = rotlat::variety_contains_algebra(&self.inner, &a.inner).map_err(err)?;
        Ok(serde_json::to_string(&json::certificate_doc(&cert)).expect("certificate"))
    }

    fn to_json(&self) -> String {
        json::ideal_doc(&self.inner).to_json()
    }

    fn __repr__(&self) -> String {
        format!("Ideal({:?})", self.inner.members())
    }
}

#[pyfunction]
fn cube(n: usize) -> PyResult<Algebra> {
    Ok(Algebra {
        inner: rotlat::rotational_cube(n).map_err(err)?,
    })
}

/// The free one-generated algebra for exponent n, with its generator index.
#[pyfunction]
fn free_one_generated(n: usize) -> PyResult<(Algebra, usize)> {
    let free = rotlat::free_one_generated(n).map_err(err)?;
    Ok((
        Algebra {
            inner: free.algebra,
        },
        free.generator,
    ))
}

#[pyfunction]
fn product(factors: Vec<Algebra>) -> PyResult<Algebra> {
    let inners: Vec<rotlat::RotationalLattice> =
        factors.into_iter().map(|a| a.inner).collect();
    Ok(Algebra {
        inner: rotlat::direct_product(&inners).map_err(err)?,
    })
}

#[pyfunction]
fn hs_cube(m: usize, n: usize) -> PyResult<bool> {
    rotlat::hs_cube(m, n).map_err(err)
}

/// The spanning embedding of the m-cube into the n-cube, as an image vector.
#[pyfunction]
fn embed_cube(m: usize, n: usize) -> PyResult<Vec<usize>> {
    Ok(rotlat::embed_cube(m, n).map_err(err)?.map().to_vec())
}

#[pyfunction]
fn ideals_upto(n: usize) -> PyResult<Vec<Ideal>> {
    Ok(rotlat::ideals_upto(n)
        .map_err(err)?
        .into_iter()
        .map(|inner| Ideal { inner })
        .collect())
}

#[pyfunction]
fn enumerate_posets(max_size: usize) -> PyResult<Vec<Poset>> {
    Ok(rotlat::enumerate_posets(max_size)
        .map_err(err)?
        .into_iter()
        .map(|inner| Poset { inner })
        .collect())
}

fn report_json(report: &rotlat::VerificationReport) -> String {
    serde_json::to_string(report).expect("report serialization")
}

/// Verification sweep reports, as JSON strings.
#[pyfunction]
fn verify_si(max_poset: usize) -> PyResult<String> {
    let corpus = rotlat::build_corpus(max_poset, true).map_err(err)?;
    Ok(report_json(&rotlat::verify_si_classification(&corpus)))
}

#[pyfunction]
fn verify_lemmas(max_poset: usize) -> PyResult<String> {
    let corpus = rotlat::build_corpus(max_poset, true).map_err(err)?;
    Ok(report_json(&rotlat::verify_lemmas(&corpus)))
}

#[pyfunction]
fn verify_varieties(max: usize) -> PyResult<String> {
    Ok(report_json(
        &rotlat::verify_variety_lattice(max).map_err(err)?,
    ))
}

#[pymodule]
fn rotlat_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Poset>()?;
    m.add_class::<Lattice>()?;
    m.add_class::<Algebra>()?;
    m.add_class::<Congruence>()?;
    m.add_class::<Ideal>()?;
    m.add_function(wrap_pyfunction!(cube, m)?)?;
    m.add_function(wrap_pyfunction!(free_one_generated, m)?)?;
    m.add_function(wrap_pyfunction!(product, m)?)?;
    m.add_function(wrap_pyfunction!(hs_cube, m)?)?;
    m.add_function(wrap_pyfunction!(embed_cube, m)?)?;
    m.add_function(wrap_pyfunction!(ideals_upto, m)?)?;
    m.add_function(wrap_pyfunction!(enumerate_posets, m)?)?;
    m.add_function(wrap_pyfunction!(verify_si, m)?)?;
    m.add_function(wrap_pyfunction!(verify_lemmas, m)?)?;
    m.add_function(wrap_pyfunction!(verify_varieties, m)?)?;
    Ok(())
}
