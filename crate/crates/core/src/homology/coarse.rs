//! Coarse-graining onto a diagonal sublattice `Γ = diag(c_1..c_m) Z^m`.
//!
//! A site of the coarse lattice is a box of `Π c_i` old sites. Old qudit `j`
//! at box offset `r` becomes new qudit `idx(r) q + j`, where `idx` is the
//! mixed-radix index of `r`. An old monomial `x^λ` with `λ = Γγ + r` lands on
//! new qudit `(r, j)` with coarse monomial `X^γ`.

use crate::code::PauliCode;
use crate::error::{Error, Result};
use crate::ring::{LaurentMatrix, LaurentPoly};

struct Box {
    factors: Vec<i32>,
    size: usize,
}

impl Box {
    fn new(factors: &[usize]) -> Result<Self> {
        if factors.iter().any(|&c| c == 0) {
            return Err(Error::Invalid("coarse-graining factors must be at least 1".into()));
        }
        let factors: Vec<i32> = factors
            .iter()
            .map(|&c| i32::try_from(c).map_err(|_| Error::Invalid(format!("factor {c} too large"))))
            .collect::<Result<_>>()?;
        let size = factors.iter().map(|&c| c as usize).product();
        Ok(Self { factors, size })
    }

    fn index(&self, r: &[i32]) -> usize {
        r.iter()
            .zip(&self.factors)
            .fold(0, |acc, (&ri, &c)| acc * c as usize + ri as usize)
    }

    fn offset(&self, mut idx: usize) -> Vec<i32> {
        let mut r = vec![0; self.factors.len()];
        for (ri, &c) in r.iter_mut().zip(&self.factors).rev() {
            *ri = (idx % c as usize) as i32;
            idx /= c as usize;
        }
        r
    }

    /// Splits `λ` into the coarse exponent and the box index.
    fn split(&self, lambda: &[i32]) -> (Vec<i32>, usize) {
        let gamma: Vec<i32> = lambda
            .iter()
            .zip(&self.factors)
            .map(|(&l, &c)| l.div_euclid(c))
            .collect();
        let r: Vec<i32> = lambda
            .iter()
            .zip(&self.factors)
            .map(|(&l, &c)| l.rem_euclid(c))
            .collect();
        (gamma, self.index(&r))
    }

    /// Keeps only monomials on the sublattice, rewritten in coarse variables.
    fn trace(&self, f: &LaurentPoly) -> Result<LaurentPoly> {
        let terms = f.terms().filter_map(|(e, c)| {
            let (gamma, idx) = self.split(e);
            (idx == 0).then_some((gamma, c as i64))
        });
        LaurentPoly::from_terms(f.modulus() as u64, f.nvars(), terms)
    }
}

/// The same code seen over the coarse lattice `Γ`, with `q' = q Π c_i`.
pub fn coarse_grain(code: &PauliCode, factors: &[usize]) -> Result<PauliCode> {
    let (p, m, q) = (code.modulus(), code.nvars(), code.qudits());
    if factors.len() != m {
        return Err(Error::Shape(format!(
            "{} coarse-graining factors for {m} directions",
            factors.len()
        )));
    }
    let cells = Box::new(factors)?;
    let nq = q * cells.size;
    let zero = LaurentPoly::zero(p, m);

    let mut columns = Vec::with_capacity(code.num_generators() * cells.size);
    for g in code.sigma().columns() {
        for shift in 0..cells.size {
            let s = cells.offset(shift);
            let mut col = vec![zero.clone(); 2 * nq];
            for (row, f) in g.iter().enumerate() {
                let (block, j) = (row / q, row % q);
                for (e, c) in f.shift(&s)?.terms() {
                    let (gamma, idx) = cells.split(e);
                    let target = block * nq + idx * q + j;
                    let mono = LaurentPoly::monomial(p, m, gamma, c as i64);
                    col[target] = col[target].try_add(&mono)?;
                }
            }
            columns.push(col);
        }
    }
    let sigma = LaurentMatrix::from_columns(p, m, 2 * nq, &columns)?;

    let omega = match code.custom_form() {
        None => None,
        Some(om) => {
            let mut out = LaurentMatrix::zeros(p, m, 2 * nq, 2 * nq);
            for row in 0..2 * nq {
                let (ba, rest) = (row / nq, row % nq);
                let (r, a) = (cells.offset(rest / q), rest % q);
                let neg_r: Vec<i32> = r.iter().map(|v| -v).collect();
                for col in 0..2 * nq {
                    let (bb, rest) = (col / nq, col % nq);
                    let (s, b) = (cells.offset(rest / q), rest % q);
                    let entry = om.get(ba * q + a, bb * q + b).shift(&neg_r)?.shift(&s)?;
                    out.set(row, col, cells.trace(&entry)?);
                }
            }
            Some(out)
        }
    };
    PauliCode::with_form(p as u64, m, nq, sigma, omega)
}
