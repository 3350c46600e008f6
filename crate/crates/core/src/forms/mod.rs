//! Quadratic spaces over `Z/p`, Witt decomposition, the Arf invariant and
//! the L-group table.
//!
//! A form is stored as a matrix `M` with `q(v) = vᵀ M v`. For odd `p` the
//! matrix is symmetric (so `b = 2M`); for `p = 2` it is upper triangular (so
//! `b = M + Mᵀ` is alternating). Any square input is folded into this shape
//! without changing `q`.

mod witt;

pub use witt::{l_group, Anisotropic, LGroup, WittClass, WittGroupStructure};

use crate::error::{Error, Result};
use crate::linalg::{self, Mat};
use crate::ring::{add_mod, check_prime, inv_mod, mul_mod, neg_mod, pow_mod, reduce_i64, sub_mod};

/// Above this many vectors the isotropic search stops enumerating.
const EXHAUSTIVE_LIMIT: u64 = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QuadraticSpace {
    p: u32,
    matrix: Mat,
}

/// `V ≅ H^hyperbolic ⊥ anisotropic`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WittDecomposition {
    pub hyperbolic: usize,
    pub anisotropic: QuadraticSpace,
    pub class: WittClass,
}

impl QuadraticSpace {
    /// Builds a form from any square integer matrix `M`, read as `q(v) = vᵀ M v`.
    pub fn new(p: u64, matrix: Vec<Vec<i64>>) -> Result<Self> {
        let p = check_prime(p)?;
        let n = matrix.len();
        if matrix.iter().any(|r| r.len() != n) {
            return Err(Error::Shape("form matrix must be square".into()));
        }
        let m: Mat = matrix
            .iter()
            .map(|r| r.iter().map(|&v| reduce_i64(v, p)).collect())
            .collect();
        Ok(Self::from_residues(p, m))
    }

    pub(crate) fn from_residues(p: u32, m: Mat) -> Self {
        let n = m.len();
        let mut out = vec![vec![0u32; n]; n];
        if p == 2 {
            for i in 0..n {
                out[i][i] = m[i][i];
                for j in (i + 1)..n {
                    out[i][j] = add_mod(m[i][j], m[j][i], p);
                }
            }
        } else {
            let half = inv_mod(2, p);
            for i in 0..n {
                for j in 0..n {
                    out[i][j] = mul_mod(add_mod(m[i][j], m[j][i], p), half, p);
                }
            }
        }
        Self { p, matrix: out }
    }

    pub fn zero(p: u64) -> Result<Self> {
        Self::new(p, Vec::new())
    }

    /// The hyperbolic plane `q(a, b) = ab`.
    pub fn hyperbolic(p: u64) -> Result<Self> {
        Self::new(p, vec![vec![0, 1], vec![0, 0]])
    }

    /// `⟨a_1⟩ ⊥ .. ⊥ ⟨a_n⟩`, i.e. `q = Σ a_i x_i²`.
    pub fn diagonal(p: u64, entries: &[i64]) -> Result<Self> {
        let n = entries.len();
        let mut m = vec![vec![0i64; n]; n];
        for (i, &a) in entries.iter().enumerate() {
            m[i][i] = a;
        }
        Self::new(p, m)
    }

    pub fn modulus(&self) -> u32 {
        self.p
    }

    pub fn dim(&self) -> usize {
        self.matrix.len()
    }

    /// The stored matrix (symmetric for odd `p`, upper triangular for `p = 2`).
    pub fn matrix(&self) -> &Mat {
        &self.matrix
    }

    pub fn value(&self, v: &[u32]) -> u32 {
        let p = self.p;
        let mut acc = 0;
        for (i, row) in self.matrix.iter().enumerate() {
            if v[i] == 0 {
                continue;
            }
            let rv = linalg::dot(row, v, p);
            acc = add_mod(acc, mul_mod(v[i], rv, p), p);
        }
        acc
    }

    /// `b(u, v) = q(u + v) - q(u) - q(v)`.
    pub fn bilinear(&self, u: &[u32], v: &[u32]) -> u32 {
        linalg::dot(u, &linalg::mat_vec(&self.bilinear_gram(), v, self.p), self.p)
    }

    /// `M + Mᵀ`.
    pub fn bilinear_gram(&self) -> Mat {
        let n = self.dim();
        (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| add_mod(self.matrix[i][j], self.matrix[j][i], self.p))
                    .collect()
            })
            .collect()
    }

    /// Basis of the kernel of the bilinear form.
    pub fn radical(&self) -> Vec<Vec<u32>> {
        linalg::nullspace(&self.bilinear_gram(), self.dim(), self.p)
    }

    pub fn is_nondegenerate(&self) -> bool {
        self.radical().is_empty()
    }

    /// `V ⊥ W`.
    pub fn orthogonal_sum(&self, other: &Self) -> Result<Self> {
        if self.p != other.p {
            return Err(Error::ModulusMismatch(self.p, other.p));
        }
        let (a, b) = (self.dim(), other.dim());
        let mut m = vec![vec![0u32; a + b]; a + b];
        for i in 0..a {
            m[i][..a].copy_from_slice(&self.matrix[i]);
        }
        for i in 0..b {
            m[a + i][a..].copy_from_slice(&other.matrix[i]);
        }
        Ok(Self { p: self.p, matrix: m })
    }

    /// `(V, -q)`.
    pub fn negate(&self) -> Self {
        let m = self
            .matrix
            .iter()
            .map(|r| r.iter().map(|&v| neg_mod(v, self.p)).collect())
            .collect();
        Self { p: self.p, matrix: m }
    }

    /// The form restricted to the span of the given vectors, in that basis.
    pub fn restrict(&self, basis: &[Vec<u32>]) -> Self {
        let bt = linalg::transpose(&basis.to_vec(), self.dim());
        let mb = linalg::mat_mul(&self.matrix, &bt, basis.len(), self.p);
        let full = linalg::mat_mul(&basis.to_vec(), &mb, basis.len(), self.p);
        Self::from_residues(self.p, full)
    }

    fn require_nondegenerate(&self) -> Result<()> {
        if self.is_nondegenerate() {
            Ok(())
        } else {
            Err(Error::Degenerate("quadratic form has a nonzero radical".into()))
        }
    }

    /// A nonzero `v` with `q(v) = 0`, if one exists.
    pub fn find_isotropic_vector(&self) -> Option<Vec<u32>> {
        let (p, n) = (self.p, self.dim());
        if n == 0 {
            return None;
        }
        if let Some(i) = (0..n).find(|&i| self.matrix[i][i] == 0) {
            return Some(unit(n, i));
        }
        if n == 2 {
            return self.isotropic_in_plane();
        }
        if (p as u64).checked_pow(n as u32).is_some_and(|c| c <= EXHAUSTIVE_LIMIT) {
            return self.exhaustive_isotropic();
        }
        if p == 2 {
            self.isotropic_binary_large()
        } else {
            self.isotropic_from_conic()
        }
    }

    /// `q(x e_0 + e_1) = a x² + c x + d` has a root, or there is none.
    fn isotropic_in_plane(&self) -> Option<Vec<u32>> {
        let p = self.p;
        let a = self.matrix[0][0];
        let c = add_mod(self.matrix[0][1], self.matrix[1][0], p);
        let d = self.matrix[1][1];
        if p == 2 {
            return (0..2)
                .find(|&x| (mul_mod(a, x, 2) + mul_mod(c, x, 2) + d) % 2 == 0)
                .map(|x| vec![x, 1]);
        }
        let disc = sub_mod(mul_mod(c, c, p), mul_mod(4 % p, mul_mod(a, d, p), p), p);
        let s = sqrt_mod(disc, p)?;
        let x = mul_mod(sub_mod(s, c, p), inv_mod(mul_mod(2, a, p), p), p);
        Some(vec![x, 1])
    }

    fn exhaustive_isotropic(&self) -> Option<Vec<u32>> {
        let (p, n) = (self.p, self.dim());
        // vectors whose first nonzero coordinate is 1
        for lead in 0..n {
            let free = n - lead - 1;
            let count = (p as u64).pow(free as u32);
            for k in 0..count {
                let mut v = vec![0u32; n];
                v[lead] = 1;
                let mut r = k;
                for slot in v[lead + 1..].iter_mut() {
                    *slot = (r % p as u64) as u32;
                    r /= p as u64;
                }
                if self.value(&v) == 0 {
                    return Some(v);
                }
            }
        }
        None
    }

    /// Odd `p`: orthogonalize three vectors and solve `a1 x² + a2 y² + a3 = 0`.
    fn isotropic_from_conic(&self) -> Option<Vec<u32>> {
        let (p, n) = (self.p, self.dim());
        let mut ortho: Vec<(Vec<u32>, u32)> = Vec::new();
        let mut pool: Vec<Vec<u32>> = (0..n).map(|i| unit(n, i)).collect();
        while ortho.len() < 3 {
            let mut v = pool.remove(0);
            for (w, aw) in &ortho {
                // b(v, w) / b(w, w) with b(w, w) = 2 q(w)
                let coef = mul_mod(self.bilinear(&v, w), inv_mod(mul_mod(2, *aw, p), p), p);
                v = axpy(&v, neg_mod(coef, p), w, p);
            }
            let a = self.value(&v);
            if a == 0 {
                if v.iter().any(|&c| c != 0) {
                    return Some(v);
                }
                continue;
            }
            ortho.push((v, a));
        }
        let (a1, a2, a3) = (ortho[0].1, ortho[1].1, ortho[2].1);
        for y in 0..p {
            let t = mul_mod(
                neg_mod(add_mod(a3, mul_mod(a2, mul_mod(y, y, p), p), p), p),
                inv_mod(a1, p),
                p,
            );
            if let Some(x) = sqrt_mod(t, p) {
                let v = axpy(&axpy(&ortho[2].0, x, &ortho[0].0, p), y, &ortho[1].0, p);
                debug_assert_eq!(self.value(&v), 0);
                return Some(v);
            }
        }
        None
    }

    /// `p = 2`: search the span of two symplectic pairs, which is always isotropic.
    fn isotropic_binary_large(&self) -> Option<Vec<u32>> {
        let pairs = self.symplectic_basis().ok()?;
        let span: Vec<&Vec<u32>> = pairs.iter().take(2).flat_map(|(a, b)| [a, b]).collect();
        for mask in 1u32..(1 << span.len()) {
            let mut v = vec![0u32; self.dim()];
            for (k, s) in span.iter().enumerate() {
                if mask >> k & 1 == 1 {
                    v = axpy(&v, 1, s, 2);
                }
            }
            if self.value(&v) == 0 {
                return Some(v);
            }
        }
        None
    }

    /// Pairs `(a_i, b_i)` with `b(a_i, b_j) = δ_ij` and all other pairings zero.
    pub fn symplectic_basis(&self) -> Result<Vec<(Vec<u32>, Vec<u32>)>> {
        if self.p != 2 {
            return Err(Error::Invalid("symplectic bases are built for p = 2 only".into()));
        }
        let n = self.dim();
        let mut pool: Vec<Vec<u32>> = (0..n).map(|i| unit(n, i)).collect();
        let mut pairs = Vec::new();
        while let Some(a) = pool.first().cloned() {
            pool.remove(0);
            if a.iter().all(|&c| c == 0) {
                continue;
            }
            let Some(k) = pool.iter().position(|c| self.bilinear(&a, c) == 1) else {
                return Err(Error::Degenerate("alternating form is degenerate".into()));
            };
            let c = pool.remove(k);
            for w in pool.iter_mut() {
                let (bwc, bwa) = (self.bilinear(w, &c), self.bilinear(w, &a));
                *w = axpy(&axpy(w, bwc, &a, 2), bwa, &c, 2);
            }
            pairs.push((a, c));
        }
        Ok(pairs)
    }

    /// Splits off a hyperbolic plane `(u, w)` with `q(u) = q(w) = 0` and
    /// `b(u, w) = 1`; returns it with the orthogonal complement.
    pub fn split_hyperbolic(&self) -> Result<(Vec<u32>, Vec<u32>, QuadraticSpace)> {
        self.require_nondegenerate()?;
        let u = self
            .find_isotropic_vector()
            .ok_or_else(|| Error::NoSolution("form is anisotropic".into()))?;
        Ok(self.split_at(u))
    }

    fn split_at(&self, u: Vec<u32>) -> (Vec<u32>, Vec<u32>, QuadraticSpace) {
        let (p, n) = (self.p, self.dim());
        let bu = linalg::mat_vec(&self.bilinear_gram(), &u, p);
        let i = bu.iter().position(|&c| c != 0).expect("nondegenerate");
        let w0: Vec<u32> = unit(n, i).iter().map(|&c| mul_mod(c, inv_mod(bu[i], p), p)).collect();
        let w = axpy(&w0, neg_mod(self.value(&w0), p), &u, p);
        let projected: Vec<Vec<u32>> = (0..n)
            .map(|k| {
                let v = unit(n, k);
                let (bvw, bvu) = (self.bilinear(&v, &w), self.bilinear(&v, &u));
                axpy(&axpy(&v, neg_mod(bvw, p), &u, p), neg_mod(bvu, p), &w, p)
            })
            .collect();
        let keep = linalg::independent_subset(&projected, p);
        let basis: Vec<Vec<u32>> = keep.into_iter().map(|k| projected[k].clone()).collect();
        (u, w, self.restrict(&basis))
    }

    /// Iterated hyperbolic splitting down to an anisotropic kernel.
    pub fn witt_decompose(&self) -> Result<WittDecomposition> {
        self.require_nondegenerate()?;
        let mut rest = self.clone();
        let mut hyperbolic = 0;
        while let Some(u) = rest.find_isotropic_vector() {
            rest = rest.split_at(u).2;
            hyperbolic += 1;
        }
        let class = WittClass::of_anisotropic(&rest);
        Ok(WittDecomposition {
            hyperbolic,
            anisotropic: rest,
            class,
        })
    }

    pub fn witt_class(&self) -> Result<WittClass> {
        Ok(self.witt_decompose()?.class)
    }

    /// `Σ q(a_i) q(b_i)` over a symplectic basis; `p = 2` only.
    pub fn arf(&self) -> Result<u32> {
        if self.p != 2 {
            return Err(Error::Invalid("the Arf invariant is defined for p = 2".into()));
        }
        if self.dim() % 2 == 1 {
            return Err(Error::Degenerate("odd-dimensional form over Z/2".into()));
        }
        self.require_nondegenerate()?;
        Ok(self
            .symplectic_basis()?
            .iter()
            .map(|(a, b)| self.value(a) * self.value(b))
            .sum::<u32>()
            % 2)
    }
}

fn unit(n: usize, i: usize) -> Vec<u32> {
    let mut v = vec![0u32; n];
    v[i] = 1;
    v
}

/// `v + c w`.
fn axpy(v: &[u32], c: u32, w: &[u32], p: u32) -> Vec<u32> {
    v.iter()
        .zip(w)
        .map(|(&a, &b)| add_mod(a, mul_mod(c, b, p), p))
        .collect()
}

pub(crate) fn is_square(a: u32, p: u32) -> bool {
    a == 0 || p == 2 || pow_mod(a, (p as u64 - 1) / 2, p) == 1
}

/// Least quadratic non-residue of an odd prime.
pub(crate) fn least_nonresidue(p: u32) -> u32 {
    (2..p).find(|&a| !is_square(a, p)).expect("odd primes have non-residues")
}

/// A square root mod `p` (Tonelli–Shanks), if `a` is a square.
pub(crate) fn sqrt_mod(a: u32, p: u32) -> Option<u32> {
    let a = a % p;
    if a == 0 || p == 2 {
        return Some(a);
    }
    if !is_square(a, p) {
        return None;
    }
    let (mut q, mut s) = (p as u64 - 1, 0);
    while q % 2 == 0 {
        q /= 2;
        s += 1;
    }
    let z = least_nonresidue(p);
    let mut c = pow_mod(z, q, p);
    let mut x = pow_mod(a, (q + 1) / 2, p);
    let mut t = pow_mod(a, q, p);
    let mut m = s;
    while t != 1 {
        let mut i = 0;
        let mut tt = t;
        while tt != 1 {
            tt = mul_mod(tt, tt, p);
            i += 1;
        }
        let b = pow_mod(c, 1u64 << (m - i - 1), p);
        x = mul_mod(x, b, p);
        c = mul_mod(b, b, p);
        t = mul_mod(t, c, p);
        m = i;
    }
    Some(x)
}

#[cfg(test)]
mod tests;
