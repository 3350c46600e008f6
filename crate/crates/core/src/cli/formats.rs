//! JSON interchange formats. Every object rejects unknown fields.

use crate::code::PauliCode;
use crate::error::{Error, Result};
use crate::forms::QuadraticSpace;
use crate::qca::CliffordQca;
use crate::ring::{check_prime, LaurentMatrix, LaurentPoly};
use crate::surgery::PoincareComplex;
use serde::{de::DeserializeOwned, Deserialize, Serialize};

/// `[exponent vector, coefficient]`.
pub type TermJson = (Vec<i32>, i64);
/// One Laurent polynomial as a list of terms.
pub type EntryJson = Vec<TermJson>;

pub fn parse_json<T: DeserializeOwned>(text: &str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
}

pub fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("report types serialize")
}

pub fn entry_from_poly(f: &LaurentPoly) -> EntryJson {
    f.terms().map(|(e, c)| (e.clone(), c as i64)).collect()
}

pub fn poly_from_entry(p: u64, m: usize, entry: &EntryJson) -> Result<LaurentPoly> {
    for (e, c) in entry {
        if e.len() != m {
            return Err(Error::Parse(format!("exponent vector {e:?} should have length {m}")));
        }
        if *c < 1 || *c >= p as i64 {
            return Err(Error::Parse(format!("coefficient {c} is outside 1..{}", p - 1)));
        }
    }
    LaurentPoly::from_terms(p, m, entry.iter().cloned())
}

fn matrix_from_rows(p: u64, m: usize, rows: &[Vec<EntryJson>]) -> Result<LaurentMatrix> {
    let rows = rows
        .iter()
        .map(|r| r.iter().map(|e| poly_from_entry(p, m, e)).collect::<Result<Vec<_>>>())
        .collect::<Result<Vec<_>>>()?;
    LaurentMatrix::from_rows(check_prime(p)?, m, rows)
}

fn rows_from_matrix(mat: &LaurentMatrix) -> Vec<Vec<EntryJson>> {
    (0..mat.rows())
        .map(|i| (0..mat.cols()).map(|j| entry_from_poly(mat.get(i, j))).collect())
        .collect()
}

/// A stabilizer code. Generators are columns of `2q` entries, X block first.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CodeFile {
    pub p: u64,
    pub spatial_dims: usize,
    pub qudits_per_site: usize,
    pub generators: Vec<Vec<EntryJson>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub omega: Option<Vec<Vec<EntryJson>>>,
}

impl CodeFile {
    /// The custom form, if any, as a matrix.
    pub fn omega_matrix(&self) -> Result<Option<LaurentMatrix>> {
        self.omega
            .as_ref()
            .map(|rows| matrix_from_rows(self.p, self.spatial_dims, rows))
            .transpose()
    }

    pub fn to_code(&self) -> Result<PauliCode> {
        let (p, m, q) = (self.p, self.spatial_dims, self.qudits_per_site);
        let pp = check_prime(p)?;
        let mut cols = Vec::with_capacity(self.generators.len());
        for (j, g) in self.generators.iter().enumerate() {
            if g.len() != 2 * q {
                return Err(Error::Shape(format!("generator {j} has {} entries, expected {}", g.len(), 2 * q)));
            }
            cols.push(g.iter().map(|e| poly_from_entry(p, m, e)).collect::<Result<Vec<_>>>()?);
        }
        let sigma = LaurentMatrix::from_columns(pp, m, 2 * q, &cols)?;
        PauliCode::with_form(p, m, q, sigma, self.omega_matrix()?)
    }

    pub fn from_code(code: &PauliCode) -> Self {
        Self {
            p: code.modulus() as u64,
            spatial_dims: code.nvars(),
            qudits_per_site: code.qudits(),
            generators: code
                .sigma()
                .columns()
                .iter()
                .map(|c| c.iter().map(entry_from_poly).collect())
                .collect(),
            omega: code.custom_form().map(rows_from_matrix),
        }
    }
}

/// A quadratic space: `q(v) = vᵀ gram v` (upper-triangular for `p = 2`).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FormFile {
    pub p: u64,
    pub dim: usize,
    pub gram: Vec<Vec<i64>>,
}

impl FormFile {
    pub fn to_space(&self) -> Result<QuadraticSpace> {
        if self.gram.len() != self.dim {
            return Err(Error::Shape(format!("gram has {} rows, dim is {}", self.gram.len(), self.dim)));
        }
        QuadraticSpace::new(self.p, self.gram.clone())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MiddleJson {
    pub gram: Vec<Vec<i64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub refinement: Option<Vec<i64>>,
}

/// A split Poincaré complex: homology dimensions, the pairings `H_i × H_{d-i}`
/// for `2i < d`, and the middle form for even `d`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ComplexFile {
    pub p: u64,
    pub d: usize,
    pub dims: Vec<usize>,
    pub pairings: Vec<Vec<Vec<i64>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub middle: Option<MiddleJson>,
}

impl ComplexFile {
    pub fn to_complex(&self) -> Result<PoincareComplex> {
        PoincareComplex::new(
            self.p,
            self.d,
            self.dims.clone(),
            self.pairings.clone(),
            self.middle.clone().map(|m| (m.gram, m.refinement)),
        )
    }
}

/// A Clifford QCA by its `2q × 2q` symplectic matrix, row-major.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct QcaFile {
    pub p: u64,
    pub m: usize,
    pub q: usize,
    pub matrix: Vec<Vec<EntryJson>>,
}

impl QcaFile {
    pub fn to_qca(&self) -> Result<CliffordQca> {
        let mat = matrix_from_rows(self.p, self.m, &self.matrix)?;
        if mat.rows() != 2 * self.q {
            return Err(Error::Shape(format!("matrix has {} rows, expected {}", mat.rows(), 2 * self.q)));
        }
        CliffordQca::new(mat)
    }

    pub fn from_qca(u: &CliffordQca) -> Self {
        Self {
            p: u.modulus() as u64,
            m: u.nvars(),
            q: u.qudits(),
            matrix: rows_from_matrix(u.matrix()),
        }
    }
}
