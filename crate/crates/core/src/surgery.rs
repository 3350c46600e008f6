//! Algebraic surgery on Poincaré complexes over `Z/p`.
//!
//! Over a field every perfect complex splits into its homology, so a
//! Poincaré complex of total degree `d` is recorded by graded dimensions,
//! perfect pairings `β_i : H_i × H_{d-i} -> Z/p` for `2i < d`, and for even
//! `d = 2k` a middle form on `H_k`. Surgery along `ν ∈ H_j` replaces `H_j` by
//! `H_j / ⟨ν⟩` and `H_{d-j}` by the annihilator of `ν`.

use crate::error::{Error, Result};
use crate::forms::{l_group, LGroup, QuadraticSpace, WittClass};
use crate::linalg::{self, Mat};
use crate::ring::{add_mod, check_prime, inv_mod, mul_mod, neg_mod, reduce_i64, sub_mod};
use serde::Serialize;

/// Bilinear form on the middle homology, with an optional quadratic
/// refinement given by its values `q(e_i)` on basis vectors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MiddleForm {
    pub gram: Mat,
    pub refinement: Option<Vec<u32>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PoincareComplex {
    p: u32,
    d: usize,
    dims: Vec<usize>,
    pairings: Vec<Mat>,
    middle: Option<MiddleForm>,
}

/// One surgery step: degree and killed class in the basis current at that step.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SurgeryStep {
    pub degree: usize,
    pub class: Vec<u32>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SurgeryTrace {
    pub initial: PoincareComplex,
    pub steps: Vec<SurgeryStep>,
    pub result: PoincareComplex,
}

impl SurgeryTrace {
    /// Re-applies the steps to the initial complex.
    pub fn replay(&self) -> Result<PoincareComplex> {
        self.steps
            .iter()
            .try_fold(self.initial.clone(), |x, s| x.surgery_kill(s.degree, &s.class))
    }
}

fn reduce(p: u32, m: &[Vec<i64>]) -> Mat {
    m.iter()
        .map(|r| r.iter().map(|&v| reduce_i64(v, p)).collect())
        .collect()
}

fn shape_ok(m: &Mat, rows: usize, cols: usize) -> bool {
    m.len() == rows && m.iter().all(|r| r.len() == cols)
}

impl PoincareComplex {
    /// Validates dimensions, pairings and the middle form.
    pub fn new(
        p: u64,
        d: usize,
        dims: Vec<usize>,
        pairings: Vec<Vec<Vec<i64>>>,
        middle: Option<(Vec<Vec<i64>>, Option<Vec<i64>>)>,
    ) -> Result<Self> {
        let p = check_prime(p)?;
        let pairings = pairings.iter().map(|m| reduce(p, m)).collect();
        let middle = middle.map(|(g, r)| MiddleForm {
            gram: reduce(p, &g),
            refinement: r.map(|v| v.iter().map(|&x| reduce_i64(x, p)).collect()),
        });
        Self::from_parts(p, d, dims, pairings, middle)
    }

    pub(crate) fn from_parts(
        p: u32,
        d: usize,
        dims: Vec<usize>,
        pairings: Vec<Mat>,
        middle: Option<MiddleForm>,
    ) -> Result<Self> {
        if dims.len() != d + 1 {
            return Err(Error::Shape(format!("{} dimensions for degree {d}", dims.len())));
        }
        for i in 0..=d {
            if dims[i] != dims[d - i] {
                return Err(Error::NotPoincare(format!(
                    "dim H_{i} = {} but dim H_{} = {}",
                    dims[i],
                    d - i,
                    dims[d - i]
                )));
            }
        }
        let npair = d.div_ceil(2);
        if pairings.len() != npair {
            return Err(Error::Shape(format!("expected {npair} pairings, got {}", pairings.len())));
        }
        for (i, b) in pairings.iter().enumerate() {
            let n = dims[i];
            if !shape_ok(b, n, n) {
                return Err(Error::Shape(format!("pairing {i} must be {n}x{n}")));
            }
            if linalg::rank(b, n, p) != n {
                return Err(Error::NotPoincare(format!("pairing {i} is singular")));
            }
        }
        let middle = if d % 2 == 0 {
            let k = d / 2;
            let n = dims[k];
            let mf = middle.unwrap_or(MiddleForm {
                gram: vec![vec![0; n]; n],
                refinement: None,
            });
            check_middle(p, k, n, &mf)?;
            Some(mf)
        } else {
            if middle.is_some() {
                return Err(Error::Invalid("odd total degree has no middle form".into()));
            }
            None
        };
        Ok(Self {
            p,
            d,
            dims,
            pairings,
            middle,
        })
    }

    /// The complex with a single nonzero degree `k = d/2` carrying `form`.
    pub fn middle_only(d: usize, form: MiddleForm, p: u64) -> Result<Self> {
        if d % 2 == 1 {
            return Err(Error::Invalid("middle-only complexes need even degree".into()));
        }
        let p = check_prime(p)?;
        let mut dims = vec![0; d + 1];
        dims[d / 2] = form.gram.len();
        Self::from_parts(p, d, dims, vec![Vec::new(); d / 2], Some(form))
    }

    /// The middle-only complex in degree `4j` carrying a quadratic space.
    pub fn from_quadratic_space(v: &QuadraticSpace, d: usize) -> Result<Self> {
        let p = v.modulus();
        let gram = v.bilinear_gram();
        let refinement = (p == 2).then(|| (0..v.dim()).map(|i| v.matrix()[i][i]).collect());
        Self::middle_only(d, MiddleForm { gram, refinement }, p as u64)
    }

    pub fn modulus(&self) -> u32 {
        self.p
    }

    pub fn degree(&self) -> usize {
        self.d
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn pairing(&self, i: usize) -> Option<&Mat> {
        self.pairings.get(i)
    }

    pub fn middle(&self) -> Option<&MiddleForm> {
        self.middle.as_ref()
    }

    /// True when only the middle degrees can be nonzero: `k` for even `d`,
    /// nothing for odd `d`.
    pub fn is_middle_only(&self) -> bool {
        (0..self.d.div_ceil(2)).all(|i| self.dims[i] == 0)
    }

    /// Replaces `H_j` by `H_j / ⟨ν⟩` and `H_{d-j}` by `ann(ν)`.
    pub fn surgery_kill(&self, j: usize, nu: &[u32]) -> Result<Self> {
        let p = self.p;
        if 2 * j >= self.d {
            return Err(Error::Invalid(format!(
                "surgery degree {j} must lie below the middle of degree {}",
                self.d
            )));
        }
        let n = self.dims[j];
        if nu.len() != n {
            return Err(Error::Shape(format!("class of length {} in H_{j} of dim {n}", nu.len())));
        }
        let nu: Vec<u32> = nu.iter().map(|&c| c % p).collect();
        if nu.iter().all(|&c| c == 0) {
            return Err(Error::Invalid("cannot do surgery on the zero class".into()));
        }
        let beta = &self.pairings[j];
        // complement of ν in H_j
        let mut cands = vec![nu.clone()];
        cands.extend((0..n).map(|i| unit(n, i)));
        let quotient: Vec<Vec<u32>> = linalg::independent_subset(&cands, p)
            .into_iter()
            .skip(1)
            .map(|i| cands[i].clone())
            .collect();
        // annihilator of ν in H_{d-j}
        let row = vec![(0..n).map(|c| linalg::dot(&nu, &column(beta, c), p)).collect::<Vec<u32>>()];
        let ann = linalg::nullspace(&row, n, p);
        let new_beta: Mat = quotient
            .iter()
            .map(|c| {
                let cb: Vec<u32> = (0..n).map(|k| linalg::dot(c, &column(beta, k), p)).collect();
                ann.iter().map(|w| linalg::dot(&cb, w, p)).collect()
            })
            .collect();
        let mut dims = self.dims.clone();
        dims[j] -= 1;
        dims[self.d - j] -= 1;
        let mut pairings = self.pairings.clone();
        pairings[j] = new_beta;
        Self::from_parts(p, self.d, dims, pairings, self.middle.clone())
    }

    /// Kills every class below the middle (and the lower middle degree for
    /// odd `d`), one basis vector at a time.
    pub fn reduce_to_middle(&self) -> Result<(Self, SurgeryTrace)> {
        let mut x = self.clone();
        let mut steps = Vec::new();
        for j in 0..self.d.div_ceil(2) {
            while x.dims[j] > 0 {
                let nu = unit(x.dims[j], 0);
                x = x.surgery_kill(j, &nu)?;
                steps.push(SurgeryStep { degree: j, class: nu });
            }
        }
        let trace = SurgeryTrace {
            initial: self.clone(),
            steps,
            result: x.clone(),
        };
        Ok((x, trace))
    }

    /// `X ⊕ Y`.
    pub fn direct_sum(&self, other: &Self) -> Result<Self> {
        if self.p != other.p {
            return Err(Error::ModulusMismatch(self.p, other.p));
        }
        if self.d != other.d {
            return Err(Error::Invalid("direct sum needs equal degrees".into()));
        }
        let dims = self.dims.iter().zip(&other.dims).map(|(a, b)| a + b).collect();
        let pairings = self
            .pairings
            .iter()
            .zip(&other.pairings)
            .map(|(a, b)| block_diag(a, b))
            .collect();
        let middle = match (&self.middle, &other.middle) {
            (Some(a), Some(b)) => Some(MiddleForm {
                gram: block_diag(&a.gram, &b.gram),
                refinement: match (&a.refinement, &b.refinement) {
                    (Some(x), Some(y)) => Some(x.iter().chain(y).copied().collect()),
                    _ => None,
                },
            }),
            _ => None,
        };
        Self::from_parts(self.p, self.d, dims, pairings, middle)
    }

    /// `(X, -q)`: every pairing and the refinement change sign.
    pub fn negate(&self) -> Self {
        let p = self.p;
        let neg = |m: &Mat| -> Mat { m.iter().map(|r| r.iter().map(|&v| neg_mod(v, p)).collect()).collect() };
        Self {
            p,
            d: self.d,
            dims: self.dims.clone(),
            pairings: self.pairings.iter().map(neg).collect(),
            middle: self.middle.as_ref().map(|mf| MiddleForm {
                gram: neg(&mf.gram),
                refinement: mf
                    .refinement
                    .as_ref()
                    .map(|r| r.iter().map(|&v| neg_mod(v, p)).collect()),
            }),
        }
    }

    /// The L-class after reduction to the middle degree.
    pub fn classify(&self) -> Result<LClassReport> {
        let (reduced, trace) = self.reduce_to_middle()?;
        let (p, d) = (self.p, self.d);
        let group = l_group(d as i64, p);
        if d % 2 == 1 {
            // the degree-k homology left after killing below k is a Lagrangian
            let k = (d - 1) / 2;
            return Ok(LClassReport {
                degree: d,
                p,
                group,
                class: LClass::Zero,
                lagrangian: Some(self.lower_middle_lagrangian(k)?),
                surgery_steps: trace.steps.len(),
            });
        }
        let k = d / 2;
        let mf = reduced.middle.as_ref().expect("even degree");
        let n = mf.gram.len();
        if k % 2 == 1 {
            if p != 2 {
                return Ok(LClassReport {
                    degree: d,
                    p,
                    group,
                    class: LClass::Zero,
                    lagrangian: Some(alternating_lagrangian(&mf.gram, p)?),
                    surgery_steps: trace.steps.len(),
                });
            }
            let q = refined_space(mf)?.ok_or_else(|| {
                Error::Invalid("a quadratic refinement is required for p = 2 in degree 2 mod 4".into())
            })?;
            return Ok(LClassReport {
                degree: d,
                p,
                group,
                class: LClass::Arf { value: q.arf()? },
                lagrangian: None,
                surgery_steps: trace.steps.len(),
            });
        }
        let class = if p == 2 {
            match refined_space(mf)? {
                Some(q) => LClass::witt(q.witt_class()?),
                None => LClass::SymmetricRank {
                    value: u32::from(n % 2 == 1),
                },
            }
        } else {
            let half = inv_mod(2, p);
            let g: Mat = mf
                .gram
                .iter()
                .map(|r| r.iter().map(|&v| mul_mod(v, half, p)).collect())
                .collect();
            LClass::witt(QuadraticSpace::from_residues(p, g).witt_class()?)
        };
        Ok(LClassReport {
            degree: d,
            p,
            group,
            class,
            lagrangian: None,
            surgery_steps: trace.steps.len(),
        })
    }

    /// `H_k` after killing every degree below `k`, as the whole lower half.
    fn lower_middle_lagrangian(&self, k: usize) -> Result<Vec<Vec<u32>>> {
        let mut x = self.clone();
        for j in 0..k {
            while x.dims[j] > 0 {
                x = x.surgery_kill(j, &unit(x.dims[j], 0))?;
            }
        }
        Ok((0..x.dims[k]).map(|i| unit(x.dims[k], i)).collect())
    }
}

fn check_middle(p: u32, k: usize, n: usize, mf: &MiddleForm) -> Result<()> {
    let g = &mf.gram;
    if !shape_ok(g, n, n) {
        return Err(Error::Shape(format!("middle form must be {n}x{n}")));
    }
    let alternating = k % 2 == 1;
    for i in 0..n {
        for j in 0..n {
            let want = if alternating { neg_mod(g[j][i], p) } else { g[j][i] };
            if g[i][j] != want {
                return Err(Error::NotPoincare(format!(
                    "middle form must be {}",
                    if alternating { "skew-symmetric" } else { "symmetric" }
                )));
            }
        }
        if alternating && g[i][i] != 0 {
            return Err(Error::NotPoincare("middle form must be alternating".into()));
        }
    }
    if linalg::rank(g, n, p) != n {
        return Err(Error::NotPoincare("middle form is degenerate".into()));
    }
    if let Some(r) = &mf.refinement {
        if r.len() != n {
            return Err(Error::Shape(format!("refinement has {} values for dim {n}", r.len())));
        }
        if p == 2 && (0..n).any(|i| g[i][i] != 0) {
            return Err(Error::NotPoincare(
                "a refinement over Z/2 needs an alternating middle form".into(),
            ));
        }
    }
    Ok(())
}

/// The quadratic space `q(v) = Σ r_i v_i² + Σ_{i<j} b_ij v_i v_j`, if refined.
fn refined_space(mf: &MiddleForm) -> Result<Option<QuadraticSpace>> {
    let Some(r) = &mf.refinement else {
        return Ok(None);
    };
    let n = r.len();
    let m: Vec<Vec<i64>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| match i.cmp(&j) {
                    std::cmp::Ordering::Equal => r[i] as i64,
                    std::cmp::Ordering::Less => mf.gram[i][j] as i64,
                    std::cmp::Ordering::Greater => 0,
                })
                .collect()
        })
        .collect();
    Ok(Some(QuadraticSpace::new(2, m)?))
}

/// Half of a symplectic basis of a nondegenerate alternating form.
fn alternating_lagrangian(gram: &Mat, p: u32) -> Result<Vec<Vec<u32>>> {
    let n = gram.len();
    let form = |u: &[u32], v: &[u32]| linalg::dot(u, &linalg::mat_vec(gram, v, p), p);
    let mut pool: Vec<Vec<u32>> = (0..n).map(|i| unit(n, i)).collect();
    let mut lagrangian = Vec::new();
    while let Some(a) = pool.first().cloned() {
        pool.remove(0);
        if a.iter().all(|&c| c == 0) {
            continue;
        }
        let Some(k) = pool.iter().position(|c| form(&a, c) != 0) else {
            return Err(Error::Degenerate("alternating form is degenerate".into()));
        };
        let c0 = pool.remove(k);
        let s = inv_mod(form(&a, &c0), p);
        let c: Vec<u32> = c0.iter().map(|&v| mul_mod(v, s, p)).collect();
        // w - ω(w, c) a + ω(w, a) c, orthogonal to a and c when ω(a, c) = 1
        for w in pool.iter_mut() {
            let (wc, wa) = (form(w, &c), form(w, &a));
            *w = w
                .iter()
                .zip(a.iter().zip(&c))
                .map(|(&wi, (&ai, &ci))| add_mod(sub_mod(wi, mul_mod(wc, ai, p), p), mul_mod(wa, ci, p), p))
                .collect();
        }
        lagrangian.push(a);
    }
    Ok(lagrangian)
}

fn unit(n: usize, i: usize) -> Vec<u32> {
    let mut v = vec![0u32; n];
    v[i] = 1;
    v
}

fn column(m: &Mat, c: usize) -> Vec<u32> {
    m.iter().map(|r| r[c]).collect()
}

fn block_diag(a: &Mat, b: &Mat) -> Mat {
    let (ra, rb) = (a.len(), b.len());
    let ca = a.first().map_or(0, Vec::len);
    let cb = b.first().map_or(0, Vec::len);
    let mut out = vec![vec![0u32; ca + cb]; ra + rb];
    for i in 0..ra {
        out[i][..ca].copy_from_slice(&a[i]);
    }
    for i in 0..rb {
        out[ra + i][ca..].copy_from_slice(&b[i]);
    }
    out
}

/// The class of a complex in its L-group.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum LClass {
    Zero,
    Witt { label: String, class: WittClass },
    Arf { value: u32 },
    SymmetricRank { value: u32 },
}

impl LClass {
    fn witt(class: WittClass) -> Self {
        LClass::Witt {
            label: class.to_string(),
            class,
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            LClass::Zero => true,
            LClass::Witt { class, .. } => class.is_zero(),
            LClass::Arf { value } | LClass::SymmetricRank { value } => *value == 0,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LClassReport {
    pub degree: usize,
    pub p: u32,
    pub group: LGroup,
    pub class: LClass,
    /// Lagrangian basis when the class vanishes for structural reasons.
    pub lagrangian: Option<Vec<Vec<u32>>>,
    pub surgery_steps: usize,
}

/// A complex with chain groups, differentials and a chain-level duality,
/// reduced to its homology by [`normalize`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RawComplex {
    pub p: u32,
    pub d: usize,
    /// `dim C_i` for `0 <= i <= d`.
    pub dims: Vec<usize>,
    /// `∂_i : C_i -> C_{i-1}` for `i = 1..=d`, as `dim C_{i-1} × dim C_i` matrices.
    pub differentials: Vec<Mat>,
    /// `φ_i : C_i × C_{d-i} -> Z/p` for `0 <= i <= d/2`.
    pub pairings: Vec<Mat>,
    /// Values of the refinement on the basis of `C_k`, if any.
    pub refinement: Option<Vec<u32>>,
}

/// Passes to homology; the induced pairings must be well defined and perfect.
pub fn normalize(raw: &RawComplex) -> Result<PoincareComplex> {
    let (p, d) = (raw.p, raw.d);
    check_prime(p as u64)?;
    if raw.dims.len() != d + 1 || raw.differentials.len() != d || raw.pairings.len() != d / 2 + 1 {
        return Err(Error::Shape("raw complex has inconsistent lengths".into()));
    }
    for i in 1..=d {
        if !shape_ok(&raw.differentials[i - 1], raw.dims[i - 1], raw.dims[i]) {
            return Err(Error::Shape(format!("differential {i} has the wrong shape")));
        }
    }
    for i in 2..=d {
        let prod = linalg::mat_mul(&raw.differentials[i - 2], &raw.differentials[i - 1], raw.dims[i], p);
        if prod.iter().flatten().any(|&v| v != 0) {
            return Err(Error::Invalid(format!("differentials {} and {i} do not compose to zero", i - 1)));
        }
    }
    for (i, phi) in raw.pairings.iter().enumerate() {
        if !shape_ok(phi, raw.dims[i], raw.dims[d - i]) {
            return Err(Error::Shape(format!("pairing {i} has the wrong shape")));
        }
    }
    let cycles = |i: usize| -> Mat {
        if i == 0 {
            (0..raw.dims[0]).map(|k| unit(raw.dims[0], k)).collect()
        } else {
            linalg::nullspace(&raw.differentials[i - 1], raw.dims[i], p)
        }
    };
    let boundaries = |i: usize| -> Mat {
        if i == d {
            Vec::new()
        } else {
            let t = linalg::transpose(&raw.differentials[i], raw.dims[i + 1]);
            let keep = linalg::independent_subset(&t, p);
            keep.into_iter().map(|k| t[k].clone()).collect()
        }
    };
    let reps: Vec<Mat> = (0..=d)
        .map(|i| {
            let b = boundaries(i);
            let nb = b.len();
            let mut all = b;
            all.extend(cycles(i));
            let keep = linalg::independent_subset(&all, p);
            keep.into_iter().filter(|&k| k >= nb).map(|k| all[k].clone()).collect()
        })
        .collect();
    let pair = |phi: &Mat, u: &[u32], v: &[u32]| linalg::dot(u, &linalg::mat_vec(phi, v, p), p);
    for i in 0..=d / 2 {
        let phi = &raw.pairings[i];
        let ok = cycles(i).iter().all(|z| boundaries(d - i).iter().all(|b| pair(phi, z, b) == 0))
            && boundaries(i).iter().all(|b| cycles(d - i).iter().all(|z| pair(phi, b, z) == 0));
        if !ok {
            return Err(Error::NotPoincare(format!("pairing {i} does not descend to homology")));
        }
    }
    let dims: Vec<usize> = reps.iter().map(Vec::len).collect();
    let induced = |i: usize| -> Mat {
        reps[i]
            .iter()
            .map(|u| reps[d - i].iter().map(|v| pair(&raw.pairings[i], u, v)).collect())
            .collect()
    };
    let pairings: Vec<Mat> = (0..d.div_ceil(2)).map(induced).collect();
    let middle = if d % 2 == 0 {
        let k = d / 2;
        let refinement = match &raw.refinement {
            None => None,
            Some(r) => {
                if r.len() != raw.dims[k] {
                    return Err(Error::Shape("refinement length differs from dim C_k".into()));
                }
                let q = |v: &[u32]| chain_refinement(r, &raw.pairings[k], v, p);
                if boundaries(k).iter().any(|b| q(b) != 0) {
                    return Err(Error::NotPoincare("refinement does not vanish on boundaries".into()));
                }
                Some(reps[k].iter().map(|v| q(v)).collect())
            }
        };
        Some(MiddleForm {
            gram: induced(k),
            refinement,
        })
    } else {
        None
    };
    PoincareComplex::from_parts(p, d, dims, pairings, middle)
}

/// `q(v) = Σ r_i v_i² + Σ_{i<j} φ_ij v_i v_j`.
fn chain_refinement(r: &[u32], phi: &Mat, v: &[u32], p: u32) -> u32 {
    let mut acc = 0;
    for i in 0..v.len() {
        acc = add_mod(acc, mul_mod(r[i], mul_mod(v[i], v[i], p), p), p);
        for j in (i + 1)..v.len() {
            acc = add_mod(acc, mul_mod(phi[i][j], mul_mod(v[i], v[j], p), p), p);
        }
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn h_f3() -> PoincareComplex {
        PoincareComplex::new(3, 2, vec![1, 2, 1], vec![vec![vec![1]]], Some((vec![vec![0, 1], vec![-1, 0]], None))).unwrap()
    }

    #[test]
    fn validation() {
        assert!(PoincareComplex::new(3, 2, vec![1, 0, 2], vec![vec![vec![1]]], None).is_err());
        assert!(matches!(
            PoincareComplex::new(3, 2, vec![1, 0, 1], vec![vec![vec![0]]], None),
            Err(Error::NotPoincare(_))
        ));
        // symmetric middle in degree 1 is rejected
        assert!(PoincareComplex::new(3, 2, vec![0, 1, 0], vec![vec![]], Some((vec![vec![1]], None))).is_err());
        assert!(PoincareComplex::new(3, 2, vec![1, 0, 1], vec![vec![vec![2]]], None).is_ok());
    }

    #[test]
    fn kill_examples() {
        let x = PoincareComplex::new(5, 4, vec![1, 0, 0, 0, 1], vec![vec![vec![1]], vec![]], None).unwrap();
        let y = x.surgery_kill(0, &[1]).unwrap();
        assert_eq!(y.dims(), &[0, 0, 0, 0, 0]);
        assert!(x.surgery_kill(1, &[]).is_err());
        assert!(x.surgery_kill(0, &[0]).is_err());
        assert!(x.surgery_kill(2, &[]).is_err());

        let b = vec![vec![1, 2], vec![3, 4]];
        let x = PoincareComplex::new(5, 4, vec![0, 2, 0, 2, 0], vec![vec![], b], None).unwrap();
        let y = x.surgery_kill(1, &[1, 1]).unwrap();
        assert_eq!(y.dims(), &[0, 1, 0, 1, 0]);
        assert_eq!(linalg::rank(y.pairing(1).unwrap(), 1, 5), 1);
    }

    #[test]
    fn reduce_examples() {
        let mid = PoincareComplex::middle_only(4, MiddleForm { gram: vec![vec![2]], refinement: None }, 3).unwrap();
        let (r, t) = mid.reduce_to_middle().unwrap();
        assert_eq!(r, mid);
        assert!(t.steps.is_empty());

        let (r, t) = h_f3().reduce_to_middle().unwrap();
        assert_eq!(r.dims(), &[0, 2, 0]);
        assert_eq!(t.steps.len(), 1);
        assert_eq!(t.replay().unwrap(), r);
        assert_eq!(r.middle(), h_f3().middle());

        let x = PoincareComplex::new(7, 5, vec![0, 0, 1, 1, 0, 0], vec![vec![], vec![], vec![vec![3]]], None).unwrap();
        let (r, _) = x.reduce_to_middle().unwrap();
        assert!(r.dims().iter().all(|&d| d == 0));
    }

    #[test]
    fn classify_examples() {
        let x = PoincareComplex::middle_only(4, MiddleForm { gram: vec![vec![2, 0], vec![0, 2]], refinement: None }, 3).unwrap();
        let c = x.classify().unwrap();
        let LClass::Witt { class: witt, .. } = &c.class else { panic!() };
        assert!(!witt.is_zero());
        assert!(matches!(witt.order(), 2 | 4));

        let x = PoincareComplex::new(5, 7, vec![1, 0, 0, 2, 2, 0, 0, 1], vec![vec![vec![1]], vec![], vec![], vec![vec![1, 0], vec![0, 1]]], None).unwrap();
        let c = x.classify().unwrap();
        assert_eq!(c.class, LClass::Zero);
        assert_eq!(c.lagrangian.unwrap().len(), 2);

        let c = h_f3().classify().unwrap();
        assert_eq!(c.class, LClass::Zero);
        assert_eq!(c.group, LGroup::Trivial);
        let x = PoincareComplex::middle_only(6, MiddleForm { gram: vec![vec![0, 1], vec![4, 0]], refinement: None }, 5).unwrap();
        let c = x.classify().unwrap();
        assert_eq!(c.class, LClass::Zero);
        assert_eq!(c.lagrangian.unwrap().len(), 1);
    }

    #[test]
    fn p2_degree_two_needs_refinement() {
        let g = vec![vec![0, 1], vec![1, 0]];
        let bare = PoincareComplex::middle_only(2, MiddleForm { gram: g.clone(), refinement: None }, 2).unwrap();
        assert!(matches!(bare.classify(), Err(Error::Invalid(_))));
        let arf1 = PoincareComplex::middle_only(2, MiddleForm { gram: g.clone(), refinement: Some(vec![1, 1]) }, 2).unwrap();
        assert_eq!(arf1.classify().unwrap().class, LClass::Arf { value: 1 });
        assert_eq!(arf1.classify().unwrap().group, LGroup::Z2);
        let arf0 = PoincareComplex::middle_only(2, MiddleForm { gram: g, refinement: Some(vec![0, 1]) }, 2).unwrap();
        assert!(arf0.classify().unwrap().class.is_zero());
    }

    #[test]
    fn p2_symmetric_middle_uses_rank() {
        let x = PoincareComplex::middle_only(4, MiddleForm { gram: vec![vec![1]], refinement: None }, 2).unwrap();
        assert_eq!(x.classify().unwrap().class, LClass::SymmetricRank { value: 1 });
    }

    #[test]
    fn normalize_examples() {
        let raw = RawComplex {
            p: 3,
            d: 2,
            dims: vec![1, 0, 1],
            differentials: vec![vec![vec![]; 1], vec![]],
            pairings: vec![vec![vec![1]], vec![]],
            refinement: None,
        };
        let x = normalize(&raw).unwrap();
        assert_eq!(x.dims(), &[1, 0, 1]);

        // C_1 -> C_0 identity: acyclic
        let raw = RawComplex {
            p: 5,
            d: 1,
            dims: vec![1, 1],
            differentials: vec![vec![vec![1]]],
            pairings: vec![vec![vec![0]]],
            refinement: None,
        };
        assert_eq!(normalize(&raw).unwrap().dims(), &[0, 0]);

        let mid = RawComplex {
            p: 3,
            d: 0,
            dims: vec![2],
            differentials: vec![],
            pairings: vec![vec![vec![1, 0], vec![0, 1]]],
            refinement: None,
        };
        let x = normalize(&mid).unwrap();
        assert_eq!(x.middle().unwrap().gram, vec![vec![1, 0], vec![0, 1]]);

        // pairing that does not vanish on boundaries
        let bad = RawComplex {
            p: 5,
            d: 2,
            dims: vec![1, 1, 1],
            differentials: vec![vec![vec![1]], vec![vec![0]]],
            pairings: vec![vec![vec![1]], vec![vec![0]]],
            refinement: None,
        };
        assert!(matches!(normalize(&bad), Err(Error::NotPoincare(_))));
    }

    #[test]
    fn forms_agree_with_classify() {
        for p in [3u64, 5, 7] {
            for a in 1..p as i64 {
                let v = QuadraticSpace::diagonal(p, &[1, a]).unwrap();
                let x = PoincareComplex::from_quadratic_space(&v, 4).unwrap();
                let LClass::Witt { class: witt, .. } = x.classify().unwrap().class else { panic!() };
                assert_eq!(witt, v.witt_class().unwrap());
            }
        }
        let plane = QuadraticSpace::new(2, vec![vec![1, 1], vec![0, 1]]).unwrap();
        let x = PoincareComplex::from_quadratic_space(&plane, 4).unwrap();
        let LClass::Witt { class: witt, .. } = x.classify().unwrap().class else { panic!() };
        assert_eq!(witt.arf(), Some(1));
    }

    fn invertible(p: u32, n: usize) -> impl Strategy<Value = Mat> {
        proptest::collection::vec(proptest::collection::vec(0..p, n), n)
            .prop_filter("invertible", move |m| linalg::rank(m, n, p) == n)
    }

    fn symmetric(p: u32, n: usize) -> impl Strategy<Value = Mat> {
        proptest::collection::vec(proptest::collection::vec(0..p, n), n)
            .prop_map(move |m| {
                (0..n)
                    .map(|i| (0..n).map(|j| if i <= j { m[i][j] } else { m[j][i] }).collect())
                    .collect::<Mat>()
            })
            .prop_filter("nondegenerate", move |m| linalg::rank(m, n, p) == n)
    }

    fn complex(p: u32) -> impl Strategy<Value = PoincareComplex> {
        (1usize..3, 1usize..3, 1usize..3).prop_flat_map(move |(a, b, c)| {
            (invertible(p, a), invertible(p, b), symmetric(p, c)).prop_map(move |(b0, b1, mid)| {
                PoincareComplex::from_parts(p, 4, vec![a, b, c, b, a], vec![b0, b1], Some(MiddleForm { gram: mid, refinement: None }))
                    .unwrap()
            })
        })
    }

    fn random_reduction(x: &PoincareComplex, seed: u64) -> PoincareComplex {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let mut x = x.clone();
        while !x.is_middle_only() {
            let live: Vec<usize> = (0..x.degree().div_ceil(2)).filter(|&j| x.dims()[j] > 0).collect();
            let j = live[rng.gen_range(0..live.len())];
            let nu: Vec<u32> = loop {
                let v: Vec<u32> = (0..x.dims()[j]).map(|_| rng.gen_range(0..x.modulus())).collect();
                if v.iter().any(|&c| c != 0) {
                    break v;
                }
            };
            x = x.surgery_kill(j, &nu).unwrap();
            for i in 0..x.degree().div_ceil(2) {
                let n = x.dims()[i];
                assert_eq!(n, x.dims()[x.degree() - i]);
                assert_eq!(linalg::rank(x.pairing(i).unwrap(), n, x.modulus()), n);
            }
        }
        x
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(32))]
        #[test]
        fn kill_order_does_not_matter(x in complex(5), seed in 0u64..1000) {
            let reference = x.classify().unwrap();
            for k in 0..10 {
                let r = random_reduction(&x, seed * 10 + k);
                prop_assert_eq!(&r.classify().unwrap().class, &reference.class);
            }
        }

        #[test]
        fn sum_with_negative_vanishes(x in complex(3)) {
            let s = x.direct_sum(&x.negate()).unwrap();
            prop_assert!(s.classify().unwrap().class.is_zero());
        }
    }
}
