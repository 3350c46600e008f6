use super::LaurentPoly;
use crate::error::{Error, Result};
use std::fmt;

/// Dense matrix over the Laurent ring, stored row-major.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LaurentMatrix {
    p: u32,
    m: usize,
    rows: usize,
    cols: usize,
    entries: Vec<LaurentPoly>,
}

impl LaurentMatrix {
    pub fn zeros(p: u32, m: usize, rows: usize, cols: usize) -> Self {
        Self {
            p,
            m,
            rows,
            cols,
            entries: vec![LaurentPoly::zero(p, m); rows * cols],
        }
    }

    pub fn identity(p: u32, m: usize, n: usize) -> Self {
        let mut out = Self::zeros(p, m, n, n);
        for i in 0..n {
            out.set(i, i, LaurentPoly::one(p, m));
        }
        out
    }

    /// Builds a matrix from rows; every entry must share `p` and `m`.
    pub fn from_rows(p: u32, m: usize, rows: Vec<Vec<LaurentPoly>>) -> Result<Self> {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, |r| r.len());
        let mut entries = Vec::with_capacity(nrows * ncols);
        for r in rows {
            if r.len() != ncols {
                return Err(Error::Shape("ragged rows".into()));
            }
            for e in r {
                check_entry(p, m, &e)?;
                entries.push(e);
            }
        }
        Ok(Self {
            p,
            m,
            rows: nrows,
            cols: ncols,
            entries,
        })
    }

    /// Builds a matrix whose columns are the given vectors of length `rows`.
    pub fn from_columns(p: u32, m: usize, rows: usize, cols: &[Vec<LaurentPoly>]) -> Result<Self> {
        let mut out = Self::zeros(p, m, rows, cols.len());
        for (j, c) in cols.iter().enumerate() {
            if c.len() != rows {
                return Err(Error::Shape(format!(
                    "column {j} has length {} (expected {rows})",
                    c.len()
                )));
            }
            for (i, e) in c.iter().enumerate() {
                check_entry(p, m, e)?;
                out.set(i, j, e.clone());
            }
        }
        Ok(out)
    }

    pub fn modulus(&self) -> u32 {
        self.p
    }

    pub fn nvars(&self) -> usize {
        self.m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &LaurentPoly {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: LaurentPoly) {
        self.entries[i * self.cols + j] = v;
    }

    pub fn column(&self, j: usize) -> Vec<LaurentPoly> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn columns(&self) -> Vec<Vec<LaurentPoly>> {
        (0..self.cols).map(|j| self.column(j)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(LaurentPoly::is_zero)
    }

    pub fn entries(&self) -> impl Iterator<Item = &LaurentPoly> {
        self.entries.iter()
    }

    pub fn transpose(&self) -> Self {
        let mut out = Self::zeros(self.p, self.m, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(j, i, self.get(i, j).clone());
            }
        }
        out
    }

    /// Conjugate transpose: transpose with the bar involution applied entrywise.
    pub fn dagger(&self) -> Self {
        let mut out = Self::zeros(self.p, self.m, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(j, i, self.get(i, j).involute());
            }
        }
        out
    }

    fn check_same_ring(&self, other: &Self) -> Result<()> {
        if self.p != other.p {
            return Err(Error::ModulusMismatch(self.p, other.p));
        }
        if self.m != other.m {
            return Err(Error::ArityMismatch(self.m, other.m));
        }
        Ok(())
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check_same_ring(other)?;
        if self.cols != other.rows {
            return Err(Error::Shape(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Self::zeros(self.p, self.m, self.rows, other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut acc = LaurentPoly::zero(self.p, self.m);
                for k in 0..self.cols {
                    let a = self.get(i, k);
                    let b = other.get(k, j);
                    if a.is_zero() || b.is_zero() {
                        continue;
                    }
                    acc = acc.try_add(&a.try_mul(b)?)?;
                }
                out.set(i, j, acc);
            }
        }
        Ok(out)
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_same_ring(other)?;
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Err(Error::Shape("cannot add matrices of different shapes".into()));
        }
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| a.try_add(b))
            .collect::<Result<_>>()?;
        Ok(Self {
            entries,
            ..self.clone()
        })
    }

    pub fn neg(&self) -> Self {
        Self {
            entries: self.entries.iter().map(|e| -e).collect(),
            ..self.clone()
        }
    }

    pub fn scale(&self, c: &LaurentPoly) -> Result<Self> {
        let entries = self
            .entries
            .iter()
            .map(|e| e.try_mul(c))
            .collect::<Result<_>>()?;
        Ok(Self {
            entries,
            ..self.clone()
        })
    }

    /// Applies the matrix to a column vector.
    pub fn apply(&self, v: &[LaurentPoly]) -> Result<Vec<LaurentPoly>> {
        if v.len() != self.cols {
            return Err(Error::Shape(format!(
                "vector of length {} against {} columns",
                v.len(),
                self.cols
            )));
        }
        let col = Self::from_columns(self.p, self.m, self.cols, &[v.to_vec()])?;
        Ok(self.try_mul(&col)?.column(0))
    }

    /// Horizontal concatenation `[self | other]`.
    pub fn hstack(&self, other: &Self) -> Result<Self> {
        self.check_same_ring(other)?;
        if self.rows != other.rows {
            return Err(Error::Shape("hstack needs equal row counts".into()));
        }
        let mut cols = self.columns();
        cols.extend(other.columns());
        Self::from_columns(self.p, self.m, self.rows, &cols)
    }

    /// Block-diagonal sum.
    pub fn block_diag(&self, other: &Self) -> Result<Self> {
        self.check_same_ring(other)?;
        let mut out = Self::zeros(
            self.p,
            self.m,
            self.rows + other.rows,
            self.cols + other.cols,
        );
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(i, j, self.get(i, j).clone());
            }
        }
        for i in 0..other.rows {
            for j in 0..other.cols {
                out.set(self.rows + i, self.cols + j, other.get(i, j).clone());
            }
        }
        Ok(out)
    }

    /// Sub-matrix of rows `r0..r1` and columns `c0..c1`.
    pub fn block(&self, r0: usize, r1: usize, c0: usize, c1: usize) -> Self {
        let mut out = Self::zeros(self.p, self.m, r1 - r0, c1 - c0);
        for i in r0..r1 {
            for j in c0..c1 {
                out.set(i - r0, j - c0, self.get(i, j).clone());
            }
        }
        out
    }

    /// Largest absolute exponent among all entries.
    pub fn max_abs_exponent(&self) -> u32 {
        self.entries
            .iter()
            .map(LaurentPoly::max_abs_exponent)
            .max()
            .unwrap_or(0)
    }

    /// Determinant by expansion over column subsets (exact, exponential in
    /// the size but fine for the `2q x 2q` forms met in practice).
    pub fn determinant(&self) -> Result<LaurentPoly> {
        if self.rows != self.cols {
            return Err(Error::Shape("determinant of a non-square matrix".into()));
        }
        let n = self.rows;
        if n > 20 {
            return Err(Error::ResourceLimit(format!(
                "determinant of a {n}x{n} matrix"
            )));
        }
        // minors[mask] = det of rows 0..popcount(mask) restricted to columns in mask
        let mut minors: Vec<Option<LaurentPoly>> = vec![None; 1 << n];
        minors[0] = Some(LaurentPoly::one(self.p, self.m));
        for mask in 1usize..(1 << n) {
            let row = mask.count_ones() as usize - 1;
            let mut acc = LaurentPoly::zero(self.p, self.m);
            for j in 0..n {
                if mask & (1 << j) == 0 {
                    continue;
                }
                let entry = self.get(row, j);
                let rest = mask & !(1 << j);
                // number of selected columns greater than j gives the sign
                let above = (rest >> (j + 1)).count_ones();
                if entry.is_zero() {
                    continue;
                }
                let minor = minors[rest].as_ref().expect("filled in increasing order");
                if minor.is_zero() {
                    continue;
                }
                let term = entry.try_mul(minor)?;
                acc = if above % 2 == 0 {
                    acc.try_add(&term)?
                } else {
                    acc.try_sub(&term)?
                };
            }
            minors[mask] = Some(acc);
        }
        Ok(minors[(1 << n) - 1].take().expect("full minor"))
    }
}

fn check_entry(p: u32, m: usize, e: &LaurentPoly) -> Result<()> {
    if e.modulus() != p {
        return Err(Error::ModulusMismatch(e.modulus(), p));
    }
    if e.nvars() != m {
        return Err(Error::ArityMismatch(e.nvars(), m));
    }
    Ok(())
}

impl fmt::Display for LaurentMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(p: u64, m: usize, s: &str) -> LaurentPoly {
        LaurentPoly::parse(p, m, s).unwrap()
    }

    fn mat(p: u64, m: usize, rows: &[&[&str]]) -> LaurentMatrix {
        LaurentMatrix::from_rows(
            p as u32,
            m,
            rows.iter()
                .map(|r| r.iter().map(|s| poly(p, m, s)).collect())
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn dagger_examples() {
        let id = LaurentMatrix::identity(3, 2, 3);
        assert_eq!(id.dagger(), id);
        assert_eq!(mat(2, 1, &[&["x"]]).dagger(), mat(2, 1, &[&["x^-1"]]));
        let a = mat(3, 2, &[&["1 + x", "y"], &["0", "2*x*y^-1"]]);
        let b = mat(3, 2, &[&["x^2", "1"], &["y + 1", "x"]]);
        let ab = a.try_mul(&b).unwrap();
        assert_eq!(ab.dagger(), b.dagger().try_mul(&a.dagger()).unwrap());
        assert_eq!(a.dagger().dagger(), a);
    }

    #[test]
    fn determinant_matches_small_cases() {
        let a = mat(5, 1, &[&["1 + x", "2"], &["x", "3"]]);
        // (1+x)*3 - 2x = 3 + x
        assert_eq!(a.determinant().unwrap(), poly(5, 1, "3 + x"));
        let id = LaurentMatrix::identity(2, 1, 4);
        assert!(id.determinant().unwrap().is_one());
        let perm = mat(3, 1, &[&["0", "1", "0"], &["0", "0", "1"], &["1", "0", "0"]]);
        assert!(perm.determinant().unwrap().is_one());
        let swap = mat(3, 1, &[&["0", "1"], &["1", "0"]]);
        assert_eq!(swap.determinant().unwrap(), poly(3, 1, "2"));
    }

    #[test]
    fn shape_errors() {
        let a = LaurentMatrix::zeros(2, 1, 2, 3);
        assert!(matches!(a.try_mul(&a), Err(Error::Shape(_))));
        assert!(a.determinant().is_err());
        let b = LaurentMatrix::zeros(3, 1, 3, 2);
        assert!(matches!(a.try_mul(&b), Err(Error::ModulusMismatch(2, 3))));
    }
}
