//! Python bindings: QSym and NSym elements with their Hopf operations, the
//! characteristic map on basis superclass functions, structure constants and
//! the verification suites.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use hopf_scf::charmap::{ch, ScfBasis, ScfElem};
use hopf_scf::combinatorics::{a_shuffle as a_shuffle_core, BitSet, Composition, SubsetLabel};
use hopf_scf::error::Error;
use hopf_scf::json;
use hopf_scf::nsym::{
    kappa_product_constant as kappa_constant_core, structconst as structconst_core, NBasis, NSymElem, Params,
};
use hopf_scf::qsym::{QBasis, QSymElem};
use hopf_scf::scalars::parse_scalar;
use hopf_scf::sym::comm;
use hopf_scf::verify::{run_suite as run_suite_core, Suite};

fn err(e: Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn composition(parts: Vec<u32>) -> PyResult<Composition> {
    Composition::new(parts).map_err(err)
}

fn subset(ambient: u32, elems: Vec<u32>) -> PyResult<SubsetLabel> {
    SubsetLabel::from_elems(ambient, elems).map_err(err)
}

fn nbasis(tag: &str, params: Option<(String, String)>) -> PyResult<NBasis> {
    let basis = NBasis::from_tag(tag).map_err(err)?;
    let params = match params {
        Some((a, b)) => Some(Params::new(parse_scalar(&a).map_err(err)?, parse_scalar(&b).map_err(err)?)),
        None => None,
    };
    json::nbasis_with(basis, params.as_ref()).map_err(err)
}

fn terms_of(terms: &hopf_scf::formal::LinComb<Composition>) -> Vec<(Vec<u32>, String)> {
    terms.iter().map(|(c, v)| (c.parts().to_vec(), v.to_string())).collect()
}

type TensorTerms = Vec<(Vec<u32>, Vec<u32>, String)>;

fn tensor_terms_of(terms: &hopf_scf::formal::LinComb<(Composition, Composition)>) -> TensorTerms {
    terms.iter().map(|((l, r), v)| (l.parts().to_vec(), r.parts().to_vec(), v.to_string())).collect()
}

/// An element of QSym in one of the bases M, L, E, Pi(nu).
#[pyclass(name = "QSymElem", module = "hopf_scf_py")]
struct PyQSym(QSymElem);

#[pymethods]
impl PyQSym {
    #[new]
    #[pyo3(signature = (basis, comp, nu = None))]
    fn new(basis: &str, comp: Vec<u32>, nu: Option<u32>) -> PyResult<Self> {
        Ok(PyQSym(QSymElem::basis_elem(QBasis::from_tag(basis, nu).map_err(err)?, composition(comp)?)))
    }

    #[staticmethod]
    fn from_json(src: &str) -> PyResult<Self> {
        Ok(PyQSym(json::qsym_from_json(&json::from_str(src).map_err(err)?).map_err(err)?))
    }

    fn to_json(&self) -> String {
        json::to_string(&json::qsym_to_json(&self.0))
    }

    #[getter]
    fn basis(&self) -> &'static str {
        self.0.basis.tag()
    }

    #[getter]
    fn nu(&self) -> Option<u32> {
        self.0.basis.nu()
    }

    fn terms(&self) -> Vec<(Vec<u32>, String)> {
        terms_of(&self.0.terms)
    }

    #[pyo3(signature = (basis, nu = None))]
    fn convert(&self, basis: &str, nu: Option<u32>) -> PyResult<Self> {
        Ok(PyQSym(self.0.convert(QBasis::from_tag(basis, nu).map_err(err)?).map_err(err)?))
    }

    fn __add__(&self, other: &PyQSym) -> PyResult<Self> {
        Ok(PyQSym(self.0.add(&other.0).map_err(err)?))
    }

    fn __sub__(&self, other: &PyQSym) -> PyResult<Self> {
        Ok(PyQSym(self.0.sub(&other.0).map_err(err)?))
    }

    fn __mul__(&self, other: &PyQSym) -> PyResult<Self> {
        Ok(PyQSym(self.0.mul(&other.0).map_err(err)?))
    }

    fn scale(&self, c: &str) -> PyResult<Self> {
        Ok(PyQSym(self.0.scale(&parse_scalar(c).map_err(err)?)))
    }

    /// Terms `(left, right, coefficient)` of the coproduct in the same basis.
    fn coproduct(&self) -> PyResult<TensorTerms> {
        Ok(tensor_terms_of(&self.0.coproduct().map_err(err)?.terms))
    }

    fn antipode(&self) -> PyResult<Self> {
        Ok(PyQSym(self.0.antipode().map_err(err)?))
    }

    fn counit(&self) -> String {
        self.0.counit().to_string()
    }

    /// Equality as elements of QSym, whatever the bases.
    fn equals(&self, other: &PyQSym) -> bool {
        self.0.equals(&other.0)
    }

    fn __eq__(&self, other: &PyQSym) -> bool {
        self.0 == other.0
    }

    fn __repr__(&self) -> String {
        format!("QSymElem({})", serde_json::to_string(&json::qsym_to_json(&self.0)).unwrap_or_default())
    }
}

/// An element of NSym in one of the bases H, Lambda, R, Estar, B(a,b), Bhat(a,b).
#[pyclass(name = "NSymElem", module = "hopf_scf_py")]
struct PyNSym(NSymElem);

#[pymethods]
impl PyNSym {
    #[new]
    #[pyo3(signature = (basis, comp, params = None))]
    fn new(basis: &str, comp: Vec<u32>, params: Option<(String, String)>) -> PyResult<Self> {
        Ok(PyNSym(NSymElem::basis_elem(nbasis(basis, params)?, composition(comp)?)))
    }

    #[staticmethod]
    fn from_json(src: &str) -> PyResult<Self> {
        Ok(PyNSym(json::nsym_from_json(&json::from_str(src).map_err(err)?).map_err(err)?))
    }

    fn to_json(&self) -> String {
        json::to_string(&json::nsym_to_json(&self.0))
    }

    #[getter]
    fn basis(&self) -> &'static str {
        self.0.basis.tag()
    }

    fn terms(&self) -> Vec<(Vec<u32>, String)> {
        terms_of(&self.0.terms)
    }

    #[pyo3(signature = (basis, params = None))]
    fn convert(&self, basis: &str, params: Option<(String, String)>) -> PyResult<Self> {
        Ok(PyNSym(self.0.convert(&nbasis(basis, params)?).map_err(err)?))
    }

    fn __add__(&self, other: &PyNSym) -> PyResult<Self> {
        Ok(PyNSym(self.0.add(&other.0).map_err(err)?))
    }

    fn __sub__(&self, other: &PyNSym) -> PyResult<Self> {
        Ok(PyNSym(self.0.sub(&other.0).map_err(err)?))
    }

    fn __mul__(&self, other: &PyNSym) -> PyResult<Self> {
        Ok(PyNSym(self.0.mul(&other.0).map_err(err)?))
    }

    fn scale(&self, c: &str) -> PyResult<Self> {
        Ok(PyNSym(self.0.scale(&parse_scalar(c).map_err(err)?)))
    }

    fn coproduct(&self) -> PyResult<TensorTerms> {
        Ok(tensor_terms_of(&self.0.coproduct().map_err(err)?.terms))
    }

    fn counit(&self) -> String {
        self.0.counit().to_string()
    }

    /// The involution ω, returned in H.
    fn omega(&self) -> Self {
        PyNSym(self.0.omega())
    }

    /// The image in Sym as `(partition, coefficient)` pairs in the h basis.
    fn comm(&self) -> Vec<(Vec<u32>, String)> {
        comm(&self.0).terms.iter().map(|(l, v)| (l.parts().to_vec(), v.to_string())).collect()
    }

    /// The pairing with a QSym element, `<H_α, M_β> = δ`.
    fn pair(&self, x: &PyQSym) -> PyResult<String> {
        Ok(hopf_scf::nsym::pairing(&self.0, &x.0).map_err(err)?.to_string())
    }

    fn equals(&self, other: &PyNSym) -> bool {
        self.0.equals(&other.0)
    }

    fn __eq__(&self, other: &PyNSym) -> bool {
        self.0 == other.0
    }

    fn __repr__(&self) -> String {
        format!("NSymElem({})", serde_json::to_string(&json::nsym_to_json(&self.0)).unwrap_or_default())
    }
}

/// `ch_ν` of the basis superclass function `kappa` or `chi_dot` labelled by `I ⊆ [n-1]`, in M.
#[pyfunction]
fn characteristic(nu: u32, basis: &str, n: u32, i: Vec<u32>) -> PyResult<PyQSym> {
    let basis = match basis {
        "kappa" => ScfBasis::Kappa,
        "chi_dot" => ScfBasis::DotChi,
        other => return Err(PyValueError::new_err(format!("unknown superclass basis `{other}`"))),
    };
    Ok(PyQSym(ch(&ScfElem::basis_elem(nu, basis, subset(n, i)?))))
}

/// `C^K_{I,J}(q,t)` for `K ⊆ [m+n-1]`, `I ⊆ [m-1]`, `J ⊆ [n-1]`.
#[pyfunction]
fn structconst(k: Vec<u32>, i: Vec<u32>, m: u32, j: Vec<u32>, n: u32) -> PyResult<String> {
    let c = structconst_core(&subset(m + n, k)?, &subset(m, i)?, &subset(n, j)?).map_err(err)?;
    Ok(c.to_string())
}

/// The coefficient `d_K` of `κ_K` in the product of `κ_I` and `κ_J`.
#[pyfunction]
fn kappa_product_constant(k: Vec<u32>, i: Vec<u32>, m: u32, j: Vec<u32>, n: u32, nu: u32) -> PyResult<String> {
    let c = kappa_constant_core(&subset(m + n, k)?, &subset(m, i)?, &subset(n, j)?, nu).map_err(err)?;
    Ok(c.to_string())
}

/// `I ⧢_A J` for `I ⊆ [m-1]`, `J ⊆ [n-1]` and an `n`-subset `A` of `[m+n]`.
#[pyfunction]
fn a_shuffle(i: Vec<u32>, m: u32, j: Vec<u32>, n: u32, a: Vec<u32>) -> PyResult<Vec<u32>> {
    let a = BitSet::try_from_elems(a).map_err(err)?;
    Ok(a_shuffle_core(&subset(m, i)?, &subset(n, j)?, a).map_err(err)?.members().iter().collect())
}

/// Run a named verification suite; returns the JSON report.
#[pyfunction]
#[pyo3(signature = (suite, max_degree = 4, nu = vec![2, 3]))]
fn run_suite(suite: &str, max_degree: u32, nu: Vec<u32>) -> PyResult<String> {
    let report = run_suite_core(Suite::from_name(suite).map_err(err)?, max_degree, &nu).map_err(err)?;
    Ok(serde_json::to_string(&report).unwrap_or_default())
}

#[pymodule]
fn hopf_scf_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyQSym>()?;
    m.add_class::<PyNSym>()?;
    m.add_function(wrap_pyfunction!(characteristic, m)?)?;
    m.add_function(wrap_pyfunction!(structconst, m)?)?;
    m.add_function(wrap_pyfunction!(kappa_product_constant, m)?)?;
    m.add_function(wrap_pyfunction!(a_shuffle, m)?)?;
    m.add_function(wrap_pyfunction!(run_suite, m)?)?;
    Ok(())
}
