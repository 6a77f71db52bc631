//! Python bindings: `import oneadic`.
//!
//! Exact integers cross as Python `int`. Core errors become `ValueError`,
//! `IndexError`, or `oneadic.CapacityError`.

use num_bigint::BigInt;
use pyo3::create_exception;
use pyo3::exceptions::{PyException, PyIndexError, PyValueError};
use pyo3::prelude::*;
use pyo3::types::PyDict;

use oneadic_core::perm::{Perm, DEFAULT_ENUMERATION_BOUND};
use oneadic_core::{arith, bm, defring, f1, ffield, galois, gene, kisin, weyl, Error};

create_exception!(oneadic, CapacityError, PyException, "An enumeration bound was exceeded.");

fn py_err(e: Error) -> PyErr {
    match e {
        Error::Capacity(m) => CapacityError::new_err(m),
        e @ Error::IndexOutOfRange { .. } => PyIndexError::new_err(e.to_string()),
        e => PyValueError::new_err(e.to_string()),
    }
}

trait IntoPy<T> {
    fn py(self) -> PyResult<T>;
}

impl<T> IntoPy<T> for oneadic_core::Result<T> {
    fn py(self) -> PyResult<T> {
        self.map_err(py_err)
    }
}

/// A character of the restricted torus: one integer vector per embedding.
#[pyclass(name = "Character", frozen, eq, hash, from_py_object)]
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PyCharacter(weyl::Character);

#[pymethods]
impl PyCharacter {
    #[new]
    fn new(values: Vec<Vec<i64>>) -> PyResult<Self> {
        weyl::Character::new(values).py().map(Self)
    }

    #[getter]
    fn n(&self) -> usize {
        self.0.n()
    }

    #[getter]
    fn f(&self) -> usize {
        self.0.f()
    }

    #[getter]
    fn values(&self) -> Vec<Vec<i64>> {
        self.0.values().to_vec()
    }

    fn in_x1(&self, p: u64) -> bool {
        weyl::in_x1(&self.0, p)
    }

    fn pi_shift(&self) -> Self {
        Self(weyl::pi_shift(&self.0))
    }

    fn p_minus_pi(&self, p: u64) -> Self {
        Self(weyl::p_minus_pi(&self.0, p))
    }

    /// Canonical representative of the class modulo `(p - π) X_0`.
    fn serre_normalize(&self, p: u64) -> PyResult<PySerreWeight> {
        weyl::serre_normalize(&self.0, p).py().map(PySerreWeight)
    }

    fn __repr__(&self) -> String {
        format!("Character({})", self.0)
    }
}

#[pyclass(name = "SerreWeight", frozen, eq, hash, skip_from_py_object)]
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PySerreWeight(weyl::SerreWeightClass);

#[pymethods]
impl PySerreWeight {
    #[getter]
    fn p(&self) -> u64 {
        self.0.p
    }

    #[getter]
    fn representative(&self) -> PyCharacter {
        PyCharacter(self.0.representative.clone())
    }

    #[getter]
    fn constant_part(&self) -> Vec<i64> {
        self.0.constant_part.clone()
    }

    #[getter]
    fn lattice_index(&self) -> u64 {
        self.0.lattice_index
    }

    fn __repr__(&self) -> String {
        format!("SerreWeight({}, p={})", self.0.representative, self.0.p)
    }
}

/// Digits of `h - (q+1)γ'` and every gene compatible with them.
#[pyclass(name = "GeneSolution", frozen, get_all, skip_from_py_object)]
#[derive(Clone)]
pub struct PyGeneSolution {
    digits: Vec<u64>,
    residue: u64,
    modulus: u64,
    genes: Vec<String>,
    degenerate: bool,
}

#[pymethods]
impl PyGeneSolution {
    fn is_unique(&self) -> bool {
        self.genes.len() == 1
    }

    fn __repr__(&self) -> String {
        format!("GeneSolution(digits={:?}, genes={:?})", self.digits, self.genes)
    }
}

#[pyfunction]
#[pyo3(name = "gene")]
fn gene_py(p: u64, f: u32, h: i128, gamma: i128) -> PyResult<PyGeneSolution> {
    let input = gene::GeneInput::new(p, f, h, gamma).py()?;
    let d = gene::digits_from_params(&input).py()?;
    let sol = gene::solve_gene(&d.digits).py()?;
    Ok(PyGeneSolution {
        digits: d.digits.digits().to_vec(),
        residue: d.residue.value(),
        modulus: d.residue.modulus(),
        genes: sol.genes.iter().map(|g| g.to_string()).collect(),
        degenerate: d.degenerate,
    })
}

/// Genes for an explicit digit vector of even length.
#[pyfunction]
fn solve_digits(p: u64, digits: Vec<u64>) -> PyResult<Vec<String>> {
    let d = arith::RadixDigits::new(p, digits).py()?;
    Ok(gene::solve_gene(&d).py()?.genes.iter().map(|g| g.to_string()).collect())
}

#[pyfunction]
fn card_gl(n: u32, q: u64) -> PyResult<BigInt> {
    Ok(arith::card_gl(n, q).py()?.total)
}

#[pyfunction]
fn weyl_limit(n: u32) -> BigInt {
    arith::weyl_limit(n)
}

#[pyfunction]
fn hilbert_series(f: usize, jii: Vec<usize>, up_to: usize) -> PyResult<Vec<BigInt>> {
    let d = defring::DeformationPresentation::new(f, jii.into_iter().collect()).py()?;
    Ok(defring::hilbert_series_special_fibre(&d, up_to))
}

/// The three multiplicity computations for the shape with II at `jii`.
#[pyfunction]
fn bm_check<'py>(py: Python<'py>, f: usize, jii: Vec<usize>) -> PyResult<Bound<'py, PyDict>> {
    let d = defring::DeformationPresentation::new(f, jii.into_iter().collect()).py()?;
    let r = bm::bm_identity_check(&d).py()?;
    let out = PyDict::new(py);
    out.set_item("closed_form", r.closed_form)?;
    out.set_item("hilbert_multiplicity", r.hilbert_multiplicity)?;
    out.set_item("weight_count", r.weight_count)?;
    out.set_item("holds", r.holds)?;
    Ok(out)
}

#[pyfunction]
fn weight_labels(jii: Vec<usize>) -> PyResult<Vec<Vec<usize>>> {
    let labels = bm::generic_weight_labels(&jii.into_iter().collect()).py()?;
    Ok(labels.into_iter().map(|s| s.into_iter().collect()).collect())
}

/// Points of the Kisin variety with coefficients such as `"11,10"` over `F_q`.
#[pyfunction]
#[pyo3(signature = (coeffs, q, bound = DEFAULT_ENUMERATION_BOUND))]
fn kisin_count(coeffs: &str, q: u64, bound: u64) -> PyResult<u64> {
    let eq = kisin::KisinVarietyEq::parse(coeffs).py()?;
    let field = ffield::FiniteField::new(q).py()?;
    Ok(kisin::kisin_points(&eq, &field, bound).py()?.count)
}

#[pyfunction]
#[pyo3(signature = (n, f, p, allow_large_n = false))]
fn serre_weights(n: usize, f: usize, p: u64, allow_large_n: bool) -> PyResult<Vec<PySerreWeight>> {
    Ok(weyl::enumerate_serre_weights(n, f, p, allow_large_n)
        .py()?
        .into_iter()
        .map(PySerreWeight)
        .collect())
}

/// `(r, p^{rf} - 1, exponents)` for `s` given as 1-based one-line permutations.
#[pyfunction]
fn tame_exponents(s: Vec<Vec<usize>>, mu: Vec<Vec<i64>>, p: u64) -> PyResult<(u64, u64, Vec<u64>)> {
    let perms = s
        .into_iter()
        .map(|images| Perm::from_images(images.into_iter().map(|i| i.wrapping_sub(1)).collect()))
        .collect::<oneadic_core::Result<Vec<_>>>()
        .py()?;
    let se = weyl::ExtWeylElt::new(weyl::WeylElt::new(perms).py()?, weyl::Character::new(mu).py()?).py()?;
    let t = weyl::tame_type_exponents(&se, p).py()?;
    Ok((t.r, t.modulus, t.exponents.iter().map(|e| e.value()).collect()))
}

/// `(order, structure, generated_by_frobenius)` for aRes or mRes of a
/// `d`-dimensional `F_{1^n}`-space.
#[pyfunction]
#[pyo3(signature = (d, n, multiplicative = false))]
fn frob_aut_group(d: usize, n: usize, multiplicative: bool) -> PyResult<(u64, String, bool)> {
    let space = f1::F1Space::new(d);
    let s = if multiplicative { f1::m_res(space, n) } else { f1::a_res(space, n) }.py()?;
    let g = f1::frob_aut_group(&s, DEFAULT_ENUMERATION_BOUND).py()?;
    Ok((g.group.order(), g.structure.to_string(), g.generated_by_frobenius))
}

#[pyfunction]
fn gl_f1n_order(d: usize, n: usize) -> PyResult<BigInt> {
    Ok(f1::gl_f1n(d, n, 0).py()?.order)
}

#[pyfunction]
#[pyo3(signature = (v, w, n, naturality = 2))]
fn adjunction_holds(v: usize, w: usize, n: usize, naturality: usize) -> PyResult<bool> {
    Ok(f1::adjunction_check(v, w, n, naturality).py()?.holds())
}

#[pyfunction]
fn sym_irreducible(degrees: Vec<u32>) -> PyResult<bool> {
    Ok(f1::sym_rep(&degrees).py()?.is_irreducible())
}

/// Automorphisms of `K_n` fixing the distinguished submonoid.
#[pyfunction]
fn galois_fixing<'py>(py: Python<'py>, n: u64) -> PyResult<Bound<'py, PyDict>> {
    let r = galois::aut_fixing_submonoid(&galois::KnModel::new(n).py()?, n as i64 + 1).py()?;
    let out = PyDict::new(py);
    out.set_item("order", r.report.order)?;
    out.set_item("tag", r.report.tag)?;
    out.set_item("all_powers_of_sigma", r.all_powers_of_sigma)?;
    Ok(out)
}

/// The classical tame Galois group of level `n` over `Q_p`.
#[pyfunction]
fn tame_galois<'py>(py: Python<'py>, p: u64, n: u64) -> PyResult<Bound<'py, PyDict>> {
    let t = galois::classical_tame_galois(p, n).py()?;
    let out = PyDict::new(py);
    out.set_item("order", t.report.order)?;
    out.set_item("structure", t.report.structure.map(|s| s.to_string()))?;
    if let Some(es) = t.report.exact_sequence {
        out.set_item("kernel_order", es.kernel_order)?;
        out.set_item("quotient_order", es.quotient_order)?;
    }
    out.set_item("q_analogue_subgroup_order", t.q_analogue_subgroup_order)?;
    Ok(out)
}

type PTo1Tuple = (u64, BigInt, BigInt, BigInt, BigInt);

/// Rows `(p, p^n - 1, p - 1, [n]_p, [n]_1)`.
#[pyfunction]
fn p_to_1(n: u32, primes: Vec<u64>) -> PyResult<Vec<PTo1Tuple>> {
    Ok(galois::p_to_1_table(n, &primes)
        .py()?
        .into_iter()
        .map(|r| (r.p, r.p_n_minus_1, r.p_minus_1, r.q_analogue, r.limit))
        .collect())
}

/// Adds every class, function and exception to `m`.
pub fn register(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add("CapacityError", m.py().get_type::<CapacityError>())?;
    m.add_class::<PyCharacter>()?;
    m.add_class::<PySerreWeight>()?;
    m.add_class::<PyGeneSolution>()?;
    m.add_function(wrap_pyfunction!(gene_py, m)?)?;
    m.add_function(wrap_pyfunction!(solve_digits, m)?)?;
    m.add_function(wrap_pyfunction!(card_gl, m)?)?;
    m.add_function(wrap_pyfunction!(weyl_limit, m)?)?;
    m.add_function(wrap_pyfunction!(hilbert_series, m)?)?;
    m.add_function(wrap_pyfunction!(bm_check, m)?)?;
    m.add_function(wrap_pyfunction!(weight_labels, m)?)?;
    m.add_function(wrap_pyfunction!(kisin_count, m)?)?;
    m.add_function(wrap_pyfunction!(serre_weights, m)?)?;
    m.add_function(wrap_pyfunction!(tame_exponents, m)?)?;
    m.add_function(wrap_pyfunction!(frob_aut_group, m)?)?;
    m.add_function(wrap_pyfunction!(gl_f1n_order, m)?)?;
    m.add_function(wrap_pyfunction!(adjunction_holds, m)?)?;
    m.add_function(wrap_pyfunction!(sym_irreducible, m)?)?;
    m.add_function(wrap_pyfunction!(galois_fixing, m)?)?;
    m.add_function(wrap_pyfunction!(tame_galois, m)?)?;
    m.add_function(wrap_pyfunction!(p_to_1, m)?)?;
    Ok(())
}

#[pymodule]
fn oneadic(m: &Bound<'_, PyModule>) -> PyResult<()> {
    register(m)
}
