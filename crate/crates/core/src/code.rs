//! Translation-invariant Pauli stabilizer codes and their symplectic layer.
//!
//! A code on `Z^m` with `q` qudits per site is a submodule `L` of
//! `P = R^{2q}`, given by the columns of `sigma` (X block on top, Z block
//! below). The commutation form is `Ω(a, b) = dagger(a) Ω b`.

use crate::error::{Error, Result};
use crate::groebner::{self, GbConfig, ModulePresentation};
use crate::ring::{check_prime, LaurentMatrix, LaurentPoly};

/// The hyperbolic form `[[0, I_q], [-I_q, 0]]`.
pub fn hyperbolic_form(p: u32, m: usize, q: usize) -> LaurentMatrix {
    let mut om = LaurentMatrix::zeros(p, m, 2 * q, 2 * q);
    for i in 0..q {
        om.set(i, q + i, LaurentPoly::one(p, m));
        om.set(q + i, i, LaurentPoly::constant(p, m, -1));
    }
    om
}

/// A stabilizer code: prime `p`, `m` lattice directions, `q` qudits per site,
/// generator columns `sigma` of shape `2q × k` and the commutation form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PauliCode {
    p: u32,
    m: usize,
    q: usize,
    sigma: LaurentMatrix,
    omega: Option<LaurentMatrix>,
}

impl PauliCode {
    /// Builds a code with the hyperbolic form.
    pub fn new(p: u64, m: usize, q: usize, sigma: LaurentMatrix) -> Result<Self> {
        Self::with_form(p, m, q, sigma, None)
    }

    /// Builds a code with an optional custom form, which must be
    /// skew-hermitian and unimodular.
    pub fn with_form(
        p: u64,
        m: usize,
        q: usize,
        sigma: LaurentMatrix,
        omega: Option<LaurentMatrix>,
    ) -> Result<Self> {
        let p = check_prime(p)?;
        if q == 0 {
            return Err(Error::Invalid("a code needs at least one qudit per site".into()));
        }
        check_matrix(&sigma, p, m)?;
        if sigma.rows() != 2 * q {
            return Err(Error::Shape(format!(
                "generator matrix has {} rows, expected 2q = {}",
                sigma.rows(),
                2 * q
            )));
        }
        if let Some(om) = &omega {
            check_matrix(om, p, m)?;
            if om.rows() != 2 * q || om.cols() != 2 * q {
                return Err(Error::Shape(format!(
                    "form is {}x{}, expected {}x{}",
                    om.rows(),
                    om.cols(),
                    2 * q,
                    2 * q
                )));
            }
            if om.dagger() != om.neg() {
                return Err(Error::Invalid("form is not skew-hermitian".into()));
            }
            if !unimodular_check(om)? {
                return Err(Error::Invalid("form is not unimodular".into()));
            }
        }
        let omega = omega.filter(|om| *om != hyperbolic_form(p, m, q));
        Ok(Self {
            p,
            m,
            q,
            sigma,
            omega,
        })
    }

    /// Builds a code from generator columns, each of length `2q`.
    pub fn from_generators(p: u64, m: usize, q: usize, columns: &[Vec<LaurentPoly>]) -> Result<Self> {
        let pp = check_prime(p)?;
        let sigma = LaurentMatrix::from_columns(pp, m, 2 * q, columns)?;
        Self::new(p, m, q, sigma)
    }

    pub fn modulus(&self) -> u32 {
        self.p
    }

    pub fn nvars(&self) -> usize {
        self.m
    }

    pub fn qudits(&self) -> usize {
        self.q
    }

    pub fn num_generators(&self) -> usize {
        self.sigma.cols()
    }

    pub fn sigma(&self) -> &LaurentMatrix {
        &self.sigma
    }

    /// The custom form, if one differs from the hyperbolic form.
    pub fn custom_form(&self) -> Option<&LaurentMatrix> {
        self.omega.as_ref()
    }

    pub fn omega(&self) -> LaurentMatrix {
        self.omega
            .clone()
            .unwrap_or_else(|| hyperbolic_form(self.p, self.m, self.q))
    }

    /// Replaces the generators, keeping the form.
    pub fn with_sigma(&self, sigma: LaurentMatrix) -> Result<Self> {
        Self::with_form(self.p as u64, self.m, self.q, sigma, self.omega.clone())
    }

    pub fn is_isotropic(&self) -> bool {
        self.excess_map()
            .try_mul(&self.sigma)
            .map(|m| m.is_zero())
            .unwrap_or(false)
    }

    /// `δ = dagger(sigma) Ω`, a `k × 2q` matrix.
    pub fn excess_map(&self) -> LaurentMatrix {
        self.sigma
            .dagger()
            .try_mul(&self.omega())
            .expect("shapes validated at construction")
    }

    /// `L = L^⊥`: isotropic, and every kernel generator of `δ` lies in `L`.
    pub fn is_lagrangian(&self, cfg: &GbConfig) -> Result<bool> {
        if !self.is_isotropic() {
            return Ok(false);
        }
        let delta = self.excess_map();
        let ker = if delta.rows() == 0 {
            ModulePresentation::column_span(&LaurentMatrix::identity(self.p, self.m, 2 * self.q))
        } else {
            groebner::kernel(&delta, cfg)?
        };
        let span = groebner::groebner(&ModulePresentation::column_span(&self.sigma), cfg)?;
        for g in &ker.generators {
            if !span.contains(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn stabilizer_span(&self) -> ModulePresentation {
        ModulePresentation::column_span(&self.sigma)
    }
}

fn check_matrix(mat: &LaurentMatrix, p: u32, m: usize) -> Result<()> {
    if mat.modulus() != p {
        return Err(Error::ModulusMismatch(mat.modulus(), p));
    }
    if mat.nvars() != m {
        return Err(Error::ArityMismatch(mat.nvars(), m));
    }
    Ok(())
}

/// `Ω(a, b) = dagger(a) Ω b`.
pub fn omega_pairing(a: &[LaurentPoly], b: &[LaurentPoly], omega: &LaurentMatrix) -> Result<LaurentPoly> {
    if a.len() != omega.rows() || b.len() != omega.cols() {
        return Err(Error::Shape(format!(
            "vectors of length {} and {} against a {}x{} form",
            a.len(),
            b.len(),
            omega.rows(),
            omega.cols()
        )));
    }
    let ob = omega.apply(b)?;
    let mut acc = LaurentPoly::zero(omega.modulus(), omega.nvars());
    for (ai, bi) in a.iter().zip(&ob) {
        acc = acc.try_add(&ai.involute().try_mul(bi)?)?;
    }
    Ok(acc)
}

/// True iff the determinant is a unit of `R`: a nonzero scalar times a monomial.
pub fn unimodular_check(omega: &LaurentMatrix) -> Result<bool> {
    if omega.rows() != omega.cols() {
        return Err(Error::Shape("form must be square".into()));
    }
    Ok(omega.determinant()?.is_unit())
}
