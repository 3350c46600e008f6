//! Python bindings. Reports come back as plain dicts, shaped like the CLI's
//! JSON output, and codes, complexes and QCAs round-trip through the same
//! JSON file formats.

use pyo3::create_exception;
use pyo3::exceptions::PyException;
use pyo3::prelude::*;
use serde::Serialize;
use stabclass::cli::builtins::{self, Builtin};
use stabclass::cli::formats::{parse_json, to_json, CodeFile, ComplexFile, QcaFile};
use stabclass::cli::{self, Config};
use stabclass::code::PauliCode;
use stabclass::forms::{self, QuadraticSpace};
use stabclass::homology::coarse_grain;
use stabclass::qca::CliffordQca;
use stabclass::surgery::PoincareComplex;

create_exception!(pystabclass, StabclassError, PyException);

fn err(e: stabclass::Error) -> PyErr {
    StabclassError::new_err(e.to_string())
}

fn to_py<T: Serialize>(py: Python<'_>, value: &T) -> PyResult<Py<PyAny>> {
    Ok(py.import("json")?.call_method1("loads", (to_json(value),))?.unbind())
}

fn config(max_spairs: Option<usize>, max_degree: Option<u32>) -> Config {
    let mut cfg = Config::default();
    if let Some(s) = max_spairs {
        cfg.max_spairs = s;
    }
    if let Some(d) = max_degree {
        cfg.max_degree = d;
    }
    cfg
}

/// A translation-invariant Pauli stabilizer code.
#[pyclass(name = "Code", module = "pystabclass")]
struct PyCode {
    inner: PauliCode,
}

#[pymethods]
impl PyCode {
    #[staticmethod]
    fn builtin(name: &str) -> PyResult<Self> {
        match builtins::lookup(name).map_err(err)? {
            Builtin::Code(inner) => Ok(Self { inner }),
            Builtin::Qca(_) => Err(StabclassError::new_err(format!("'{name}' is a QCA, not a code"))),
        }
    }

    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        let file: CodeFile = parse_json(text).map_err(err)?;
        Ok(Self {
            inner: file.to_code().map_err(err)?,
        })
    }

    fn to_json(&self) -> String {
        to_json(&CodeFile::from_code(&self.inner))
    }

    #[getter]
    fn p(&self) -> u32 {
        self.inner.modulus()
    }

    #[getter]
    fn spatial_dims(&self) -> usize {
        self.inner.nvars()
    }

    #[getter]
    fn qudits_per_site(&self) -> usize {
        self.inner.qudits()
    }

    #[getter]
    fn num_generators(&self) -> usize {
        self.inner.num_generators()
    }

    fn is_isotropic(&self) -> bool {
        self.inner.is_isotropic()
    }

    #[pyo3(signature = (max_spairs=None, max_degree=None))]
    fn is_lagrangian(&self, max_spairs: Option<usize>, max_degree: Option<u32>) -> PyResult<bool> {
        self.inner.is_lagrangian(&config(max_spairs, max_degree).groebner()).map_err(err)
    }

    fn verify(&self, py: Python<'_>) -> PyResult<Py<PyAny>> {
        let report = cli::verify(&CodeFile::from_code(&self.inner), &Config::default()).map_err(err)?;
        to_py(py, &report)
    }

    #[pyo3(signature = (degree=None, max_spairs=None, max_degree=None))]
    fn charges(
        &self,
        py: Python<'_>,
        degree: Option<usize>,
        max_spairs: Option<usize>,
        max_degree: Option<u32>,
    ) -> PyResult<Py<PyAny>> {
        let report = cli::charges(&self.inner, degree, &config(max_spairs, max_degree)).map_err(err)?;
        to_py(py, &report)
    }

    #[pyo3(signature = (max_spairs=None, max_degree=None))]
    fn classify(&self, py: Python<'_>, max_spairs: Option<usize>, max_degree: Option<u32>) -> PyResult<Py<PyAny>> {
        let report = cli::classify(&self.inner, &config(max_spairs, max_degree)).map_err(err)?;
        to_py(py, &report)
    }

    fn coarsen(&self, factors: Vec<usize>) -> PyResult<Self> {
        Ok(Self {
            inner: coarse_grain(&self.inner, &factors).map_err(err)?,
        })
    }

    fn __repr__(&self) -> String {
        format!(
            "Code(p={}, spatial_dims={}, qudits_per_site={}, generators={})",
            self.inner.modulus(),
            self.inner.nvars(),
            self.inner.qudits(),
            self.inner.num_generators()
        )
    }
}

/// A quadratic form over Z/p.
#[pyclass(name = "QuadraticForm", module = "pystabclass")]
struct PyForm {
    inner: QuadraticSpace,
}

#[pymethods]
impl PyForm {
    #[new]
    fn new(p: u64, matrix: Vec<Vec<i64>>) -> PyResult<Self> {
        Ok(Self {
            inner: QuadraticSpace::new(p, matrix).map_err(err)?,
        })
    }

    #[getter]
    fn dim(&self) -> usize {
        self.inner.dim()
    }

    fn value(&self, v: Vec<u32>) -> u32 {
        self.inner.value(&v)
    }

    fn is_nondegenerate(&self) -> bool {
        self.inner.is_nondegenerate()
    }

    fn orthogonal_sum(&self, other: &Self) -> PyResult<Self> {
        Ok(Self {
            inner: self.inner.orthogonal_sum(&other.inner).map_err(err)?,
        })
    }

    fn negate(&self) -> Self {
        Self {
            inner: self.inner.negate(),
        }
    }

    fn witt_class(&self) -> PyResult<String> {
        Ok(self.inner.witt_class().map_err(err)?.to_string())
    }

    fn arf(&self) -> PyResult<u32> {
        self.inner.arf().map_err(err)
    }

    fn report(&self, py: Python<'_>) -> PyResult<Py<PyAny>> {
        to_py(py, &cli::witt(&self.inner).map_err(err)?)
    }
}

/// A Poincaré complex over Z/p.
#[pyclass(name = "Complex", module = "pystabclass")]
struct PyComplex {
    inner: PoincareComplex,
}

#[pymethods]
impl PyComplex {
    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        let file: ComplexFile = parse_json(text).map_err(err)?;
        Ok(Self {
            inner: file.to_complex().map_err(err)?,
        })
    }

    #[staticmethod]
    fn from_form(form: &PyForm, degree: usize) -> PyResult<Self> {
        Ok(Self {
            inner: PoincareComplex::from_quadratic_space(&form.inner, degree).map_err(err)?,
        })
    }

    #[getter]
    fn degree(&self) -> usize {
        self.inner.degree()
    }

    #[getter]
    fn dims(&self) -> Vec<usize> {
        self.inner.dims().to_vec()
    }

    fn kill(&self, degree: usize, vector: Vec<u32>) -> PyResult<Self> {
        Ok(Self {
            inner: self.inner.surgery_kill(degree, &vector).map_err(err)?,
        })
    }

    fn direct_sum(&self, other: &Self) -> PyResult<Self> {
        Ok(Self {
            inner: self.inner.direct_sum(&other.inner).map_err(err)?,
        })
    }

    fn negate(&self) -> Self {
        Self {
            inner: self.inner.negate(),
        }
    }

    fn classify(&self, py: Python<'_>) -> PyResult<Py<PyAny>> {
        to_py(py, &cli::surgery(&self.inner).map_err(err)?)
    }
}

/// A Clifford quantum cellular automaton.
#[pyclass(name = "Qca", module = "pystabclass")]
struct PyQca {
    inner: CliffordQca,
}

#[pymethods]
impl PyQca {
    #[staticmethod]
    fn builtin(name: &str) -> PyResult<Self> {
        match builtins::lookup(name).map_err(err)? {
            Builtin::Qca(inner) => Ok(Self { inner }),
            Builtin::Code(_) => Err(StabclassError::new_err(format!("'{name}' is a code, not a QCA"))),
        }
    }

    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        let file: QcaFile = parse_json(text).map_err(err)?;
        Ok(Self {
            inner: file.to_qca().map_err(err)?,
        })
    }

    #[staticmethod]
    fn identity(p: u64, m: usize, q: usize) -> PyResult<Self> {
        Ok(Self {
            inner: CliffordQca::identity(p, m, q).map_err(err)?,
        })
    }

    #[staticmethod]
    fn shift(p: u64, m: usize, q: usize, by: Vec<i32>) -> PyResult<Self> {
        Ok(Self {
            inner: CliffordQca::shift(p, m, q, &by).map_err(err)?,
        })
    }

    #[staticmethod]
    fn swap(p: u64, m: usize, q: usize) -> PyResult<Self> {
        Ok(Self {
            inner: CliffordQca::swap(p, m, q).map_err(err)?,
        })
    }

    #[staticmethod]
    fn fourier(p: u64, m: usize, q: usize, qudit: usize) -> PyResult<Self> {
        Ok(Self {
            inner: CliffordQca::fourier(p, m, q, qudit).map_err(err)?,
        })
    }

    fn to_json(&self) -> String {
        to_json(&QcaFile::from_qca(&self.inner))
    }

    fn is_symplectic(&self) -> bool {
        self.inner.verify_symplectic()
    }

    fn is_separated(&self) -> PyResult<bool> {
        self.inner.is_separated().map_err(err)
    }

    fn range(&self) -> u32 {
        self.inner.range()
    }

    fn compose(&self, other: &Self) -> PyResult<Self> {
        Ok(Self {
            inner: self.inner.compose(&other.inner).map_err(err)?,
        })
    }

    fn inverse(&self) -> PyResult<Self> {
        Ok(Self {
            inner: self.inner.inverse().map_err(err)?,
        })
    }

    fn create_stabilizer(&self) -> PyResult<PyCode> {
        Ok(PyCode {
            inner: self.inner.create_stabilizer().map_err(err)?,
        })
    }

    fn __eq__(&self, other: &Self) -> bool {
        self.inner.matrix() == other.inner.matrix()
    }
}

/// Label of the classifying group in spacetime dimension `n` over Z/p.
#[pyfunction]
fn l_group(n: i64, p: u32) -> String {
    forms::l_group(n, p).to_string()
}

/// Names of the builtin examples.
#[pyfunction]
fn examples() -> Vec<&'static str> {
    builtins::BUILTINS.iter().map(|(name, _)| *name).collect()
}

#[pymodule]
fn pystabclass(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add("StabclassError", m.py().get_type::<StabclassError>())?;
    m.add_class::<PyCode>()?;
    m.add_class::<PyForm>()?;
    m.add_class::<PyComplex>()?;
    m.add_class::<PyQca>()?;
    m.add_function(wrap_pyfunction!(l_group, m)?)?;
    m.add_function(wrap_pyfunction!(examples, m)?)?;
    Ok(())
}
