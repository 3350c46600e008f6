//! Dimension counts read off the leading-term module.
//!
//! For a degree-compatible order the quotient by a submodule and the quotient
//! by its leading-term module share their Hilbert function, so Krull dimension
//! and the `F_p`-dimension are combinatorial questions about monomial ideals,
//! one per position.

use super::mono::{Mono, MAX_VARS};
use super::GroebnerBasis;
use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::fmt;

/// `F_p`-dimension of a module: finite count or infinite.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FpDimension {
    Finite(u64),
    Infinite,
}

impl FpDimension {
    pub fn is_finite(&self) -> bool {
        matches!(self, FpDimension::Finite(_))
    }

    /// Cardinality `p^dim` as a decimal string (`"infinite"` otherwise).
    pub fn cardinality(&self, p: u32) -> String {
        match *self {
            FpDimension::Infinite => "infinite".into(),
            FpDimension::Finite(n) => {
                // big-integer power by repeated decimal multiplication
                let mut digits: Vec<u32> = vec![1];
                for _ in 0..n {
                    let mut carry = 0u64;
                    for d in digits.iter_mut() {
                        let v = *d as u64 * p as u64 + carry;
                        *d = (v % 10) as u32;
                        carry = v / 10;
                    }
                    while carry > 0 {
                        digits.push((carry % 10) as u32);
                        carry /= 10;
                    }
                }
                digits.iter().rev().map(|d| char::from(b'0' + *d as u8)).collect()
            }
        }
    }
}

impl fmt::Display for FpDimension {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FpDimension::Finite(n) => write!(f, "{n}"),
            FpDimension::Infinite => write!(f, "infinite"),
        }
    }
}

/// Minimal monomial generators of the leading ideal at each position.
fn leading_ideals(gb: &GroebnerBasis) -> Vec<Vec<Mono>> {
    let mut ideals: Vec<Vec<Mono>> = vec![Vec::new(); gb.rank()];
    for (pos, mono) in gb.leading_terms() {
        ideals[pos as usize].push(mono);
    }
    for ideal in ideals.iter_mut() {
        let all = ideal.clone();
        ideal.retain(|a| !all.iter().any(|b| b != a && b.divides(a)));
    }
    ideals
}

/// Dimension of `S / I` for a monomial ideal given by generators.
/// Returns `-1` when `I` is the unit ideal.
fn monomial_quotient_dim(ideal: &[Mono], nvars: usize) -> i32 {
    if ideal.iter().any(|m| m.deg == 0) {
        return -1;
    }
    let supports: Vec<u32> = ideal.iter().map(Mono::support).collect();
    let mut best = 0;
    for set in 0u32..(1 << nvars) {
        let size = set.count_ones() as i32;
        if size <= best {
            continue;
        }
        // `set` is independent iff no generator is supported inside it.
        if supports.iter().all(|&s| s & !set != 0) {
            best = size;
        }
    }
    best
}

pub(crate) fn krull_dim_of(gb: &GroebnerBasis) -> i32 {
    let nvars = gb.rep().nvars();
    leading_ideals(gb)
        .iter()
        .map(|ideal| monomial_quotient_dim(ideal, nvars))
        .max()
        .unwrap_or(-1)
}

/// Enumerates the standard monomials `(position, monomial)` of a finite
/// quotient, in ascending position and then the order of enumeration.
/// `None` when the quotient is infinite-dimensional.
pub(crate) fn standard_monomials(gb: &GroebnerBasis, limit: u64) -> Result<Option<Vec<(u32, Mono)>>> {
    let nvars = gb.rep().nvars();
    let mut out = Vec::new();
    for (pos, ideal) in leading_ideals(gb).iter().enumerate() {
        let dim = monomial_quotient_dim(ideal, nvars);
        if dim < 0 {
            continue;
        }
        if dim > 0 {
            return Ok(None);
        }
        // Every variable has a pure power in the ideal; those bound the box.
        let mut bounds = [0u16; MAX_VARS];
        for (v, b) in bounds.iter_mut().enumerate().take(nvars) {
            *b = ideal
                .iter()
                .filter(|m| m.support() == 1 << v)
                .map(|m| m.e[v])
                .min()
                .expect("zero-dimensional ideal has pure powers");
        }
        let mut cur = Mono::ONE;
        enumerate(ideal, &bounds, nvars, 0, &mut cur, &mut |mono| {
            out.push((pos as u32, mono));
            if out.len() as u64 > limit {
                return Err(Error::ResourceLimit(format!(
                    "more than {limit} standard monomials"
                )));
            }
            Ok(())
        })?;
    }
    Ok(Some(out))
}

fn enumerate(
    ideal: &[Mono],
    bounds: &[u16; MAX_VARS],
    nvars: usize,
    var: usize,
    cur: &mut Mono,
    emit: &mut dyn FnMut(Mono) -> Result<()>,
) -> Result<()> {
    if var == nvars {
        return emit(*cur);
    }
    let base = cur.deg;
    for k in 0..bounds[var] {
        cur.e[var] = k;
        cur.deg = base + k as u32;
        // divisibility only grows with k, and fixes every completion
        if ideal.iter().any(|g| g.divides(cur)) {
            break;
        }
        enumerate(ideal, bounds, nvars, var + 1, cur, emit)?;
    }
    cur.e[var] = 0;
    cur.deg = base;
    Ok(())
}

pub(crate) const STANDARD_MONOMIAL_LIMIT: u64 = 50_000_000;

pub(crate) fn fp_dimension_of(gb: &GroebnerBasis) -> Result<FpDimension> {
    if krull_dim_of(gb) > 0 {
        return Ok(FpDimension::Infinite);
    }
    Ok(match standard_monomials(gb, STANDARD_MONOMIAL_LIMIT)? {
        Some(v) => FpDimension::Finite(v.len() as u64),
        None => FpDimension::Infinite,
    })
}

impl GroebnerBasis {
    /// Standard monomials of a finite quotient (`None` if infinite).
    pub fn standard_monomials(&self) -> Result<Option<Vec<(u32, Mono)>>> {
        standard_monomials(self, STANDARD_MONOMIAL_LIMIT)
    }

    pub fn krull_dim(&self) -> i32 {
        krull_dim_of(self)
    }

    pub fn fp_dimension(&self) -> Result<FpDimension> {
        fp_dimension_of(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cardinality_strings() {
        assert_eq!(FpDimension::Finite(0).cardinality(2), "1");
        assert_eq!(FpDimension::Finite(2).cardinality(2), "4");
        assert_eq!(FpDimension::Finite(70).cardinality(2), "1180591620717411303424");
        assert_eq!(FpDimension::Infinite.cardinality(3), "infinite");
    }

    #[test]
    fn monomial_dims() {
        let m = |e: &[u32]| Mono::from_exps(e).unwrap();
        assert_eq!(monomial_quotient_dim(&[], 2), 2);
        assert_eq!(monomial_quotient_dim(&[Mono::ONE], 2), -1);
        assert_eq!(monomial_quotient_dim(&[m(&[1, 0])], 2), 1);
        assert_eq!(monomial_quotient_dim(&[m(&[1, 0]), m(&[0, 3])], 2), 0);
        assert_eq!(monomial_quotient_dim(&[m(&[1, 1])], 2), 1);
    }
}
