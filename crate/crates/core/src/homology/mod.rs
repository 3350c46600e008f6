//! Free resolutions of `P/L`, the self-dual code complex, charge modules and
//! coarse-graining.
//!
//! With a resolution `.. -> F_2 -> F_1 -> P -> P/L` (`d_1 = sigma`), the code
//! complex continues to the right through `δ : P -> F_1*` and the daggers of
//! the left half. Its cohomology at `F_{i+1}*` is the charge module
//! `E^i = Ext^{i+1}(P/L, R)`.

mod coarse;

pub use coarse::coarse_grain;

use crate::code::PauliCode;
use crate::error::{Error, Result};
use crate::groebner::{self, FpDimension, GbConfig, GroebnerBasis, ModulePresentation};
use crate::ring::LaurentMatrix;
use serde::Serialize;

/// `d_j : F_j -> F_{j-1}` for `j = 1..=len`, with `F_0 = P` and `d_1 = sigma`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FreeResolution {
    maps: Vec<LaurentMatrix>,
    terminated: bool,
}

impl FreeResolution {
    fn start(code: &PauliCode) -> Self {
        let sigma = code.sigma().clone();
        let terminated = sigma.cols() == 0;
        Self {
            maps: vec![sigma],
            terminated,
        }
    }

    /// Number of stored maps.
    pub fn len(&self) -> usize {
        self.maps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.maps.is_empty()
    }

    /// True once a zero syzygy module has been reached.
    pub fn is_terminated(&self) -> bool {
        self.terminated
    }

    /// `d_j`, or `None` past the stored range.
    pub fn map(&self, j: usize) -> Option<&LaurentMatrix> {
        j.checked_sub(1).and_then(|k| self.maps.get(k))
    }

    pub fn maps(&self) -> &[LaurentMatrix] {
        &self.maps
    }

    /// Rank of `F_j`; zero past a terminated resolution.
    pub fn rank(&self, j: usize) -> usize {
        if j == 0 {
            return self.maps[0].rows();
        }
        self.map(j).map_or(0, LaurentMatrix::cols)
    }

    /// Extends by iterated syzygies until `len` maps are stored or a zero
    /// syzygy module appears.
    pub fn extend_to(&mut self, len: usize, cfg: &GbConfig) -> Result<()> {
        while !self.terminated && self.maps.len() < len {
            let last = self.maps.last().expect("non-empty");
            let (p, m) = (last.modulus(), last.nvars());
            let syz = groebner::syzygies(&ModulePresentation::column_span(last), cfg)?;
            if syz.generators.is_empty() {
                self.terminated = true;
            } else {
                self.maps
                    .push(LaurentMatrix::from_columns(p, m, last.cols(), &syz.generators)?);
            }
        }
        Ok(())
    }

    /// All consecutive composites `d_{j-1} d_j` vanish.
    pub fn composites_vanish(&self) -> bool {
        self.maps
            .windows(2)
            .all(|w| w[0].try_mul(&w[1]).map(|c| c.is_zero()).unwrap_or(false))
    }
}

/// Iterated syzygies of the generator columns, at most `max_len` maps.
pub fn free_resolution(code: &PauliCode, max_len: usize, cfg: &GbConfig) -> Result<FreeResolution> {
    if max_len == 0 {
        return Err(Error::Invalid("resolution length must be at least 1".into()));
    }
    let mut res = FreeResolution::start(code);
    res.extend_to(max_len, cfg)?;
    Ok(res)
}

/// The complex `.. -> F_2 -> F_1 -> P -> F_1* -> F_2* -> ..`.
#[derive(Debug, Clone)]
pub struct CodeComplex {
    code: PauliCode,
    resolution: FreeResolution,
    delta: LaurentMatrix,
    cfg: GbConfig,
}

impl CodeComplex {
    /// Needs an isotropic code. The resolution is extended lazily.
    pub fn new(code: &PauliCode, cfg: &GbConfig) -> Result<Self> {
        if !code.is_isotropic() {
            return Err(Error::Precondition("code is not isotropic".into()));
        }
        let mut resolution = FreeResolution::start(code);
        resolution.extend_to(code.nvars().max(1), cfg)?;
        Ok(Self {
            code: code.clone(),
            delta: code.excess_map(),
            resolution,
            cfg: *cfg,
        })
    }

    pub fn code(&self) -> &PauliCode {
        &self.code
    }

    pub fn resolution(&self) -> &FreeResolution {
        &self.resolution
    }

    /// `δ = dagger(sigma) Ω : P -> F_1*`.
    pub fn delta(&self) -> &LaurentMatrix {
        &self.delta
    }

    fn ensure(&mut self, len: usize) -> Result<()> {
        self.resolution.extend_to(len, &self.cfg)
    }

    /// The map `F_j* -> F_{j+1}*` (with `F_0* = P` and the map `δ` at `j = 0`),
    /// or `None` when `F_{j+1} = 0`.
    pub fn right_map(&mut self, j: usize) -> Result<Option<LaurentMatrix>> {
        if j == 0 {
            return Ok(Some(self.delta.clone()));
        }
        self.ensure(j + 1)?;
        Ok(self.resolution.map(j + 1).map(LaurentMatrix::dagger))
    }

    /// All composites on both sides of `P` vanish, across the stored range.
    pub fn composites_vanish(&mut self) -> Result<bool> {
        if !self.resolution.composites_vanish() {
            return Ok(false);
        }
        if !self.delta.try_mul(&self.resolution.maps[0])?.is_zero() {
            return Ok(false);
        }
        let len = self.resolution.len();
        for j in 0..len {
            let (Some(a), Some(b)) = (self.right_map(j)?, self.right_map(j + 1)?) else {
                continue;
            };
            if !b.try_mul(&a)?.is_zero() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// `E^i`: cohomology at `F_{i+1}*`. Zero for `i >= m`.
    pub fn charge_module(&mut self, i: usize) -> Result<ChargeModule> {
        let (p, m) = (self.code.modulus(), self.code.nvars());
        if i >= m {
            return ChargeModule::zero(i, p, m);
        }
        self.ensure(i + 1)?;
        let rank = self.resolution.rank(i + 1);
        if rank == 0 {
            return ChargeModule::zero(i, p, m);
        }
        let map_in = self.right_map(i)?.expect("F_{i+1} is nonzero");
        let kernel = match self.right_map(i + 1)? {
            Some(out) => groebner::kernel(&out, &self.cfg)?,
            None => {
                ModulePresentation::column_span(&LaurentMatrix::identity(p, m, rank))
            }
        };
        let kmat = LaurentMatrix::from_columns(p, m, rank, &kernel.generators)?;
        subquotient(i, kmat, &map_in, &self.cfg)
    }
}

/// `im(K) / (im(K) ∩ im(I))` presented as `R^s / π(syz[K | I])`.
fn subquotient(degree: usize, kmat: LaurentMatrix, image: &LaurentMatrix, cfg: &GbConfig) -> Result<ChargeModule> {
    let (p, m) = (kmat.modulus(), kmat.nvars());
    let s = kmat.cols();
    let stacked = kmat.hstack(image)?;
    let syz = groebner::syzygies(&ModulePresentation::column_span(&stacked), cfg)?;
    let relations: Vec<_> = syz
        .generators
        .into_iter()
        .map(|v| v[..s].to_vec())
        .filter(|v| v.iter().any(|f| !f.is_zero()))
        .collect();
    let presentation = ModulePresentation::new(p, m, s, relations)?;
    let basis = groebner::groebner(&presentation, cfg)?;
    let krull_dim = basis.krull_dim();
    let fp_dimension = basis.fp_dimension()?;
    Ok(ChargeModule {
        degree,
        presentation,
        kernel_generators: kmat,
        basis,
        krull_dim,
        fp_dimension,
    })
}

/// A charge module `E^i`, presented as `R^s / relations` where the `s`
/// generators are the columns of `kernel_generators` inside `F_{i+1}*`.
#[derive(Debug, Clone)]
pub struct ChargeModule {
    pub degree: usize,
    pub presentation: ModulePresentation,
    pub kernel_generators: LaurentMatrix,
    pub basis: GroebnerBasis,
    pub krull_dim: i32,
    pub fp_dimension: FpDimension,
}

impl ChargeModule {
    fn zero(degree: usize, p: u32, m: usize) -> Result<Self> {
        let presentation = ModulePresentation::new(p, m, 0, Vec::new())?;
        let basis = groebner::groebner(&presentation, &GbConfig::default())?;
        Ok(Self {
            degree,
            presentation,
            kernel_generators: LaurentMatrix::zeros(p, m, 0, 0),
            basis,
            krull_dim: -1,
            fp_dimension: FpDimension::Finite(0),
        })
    }

    pub fn is_zero(&self) -> bool {
        self.krull_dim < 0
    }

    pub fn cardinality(&self) -> String {
        self.fp_dimension.cardinality(self.presentation.p)
    }
}

fn lagrangian_complex(code: &PauliCode, cfg: &GbConfig) -> Result<CodeComplex> {
    if !code.is_lagrangian(cfg)? {
        return Err(Error::Precondition("code is not Lagrangian".into()));
    }
    CodeComplex::new(code, cfg)
}

/// `E^i` of a Lagrangian code.
pub fn charge_module(code: &PauliCode, i: usize, cfg: &GbConfig) -> Result<ChargeModule> {
    lagrangian_complex(code, cfg)?.charge_module(i)
}

/// Dimension data of one charge module.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DegreeReport {
    pub degree: usize,
    pub krull_dim: i32,
    pub fp_dimension: FpDimension,
    pub cardinality: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MobilityReport {
    pub fully_mobile: bool,
    pub degrees: Vec<DegreeReport>,
}

/// Charge modules of every degree `0..m` of a Lagrangian code.
pub fn charge_modules(code: &PauliCode, cfg: &GbConfig) -> Result<Vec<ChargeModule>> {
    let mut cx = lagrangian_complex(code, cfg)?;
    (0..code.nvars()).map(|i| cx.charge_module(i)).collect()
}

fn report(charges: &[ChargeModule]) -> MobilityReport {
    let degrees: Vec<DegreeReport> = charges
        .iter()
        .map(|c| DegreeReport {
            degree: c.degree,
            krull_dim: c.krull_dim,
            fp_dimension: c.fp_dimension,
            cardinality: c.cardinality(),
        })
        .collect();
    MobilityReport {
        fully_mobile: degrees.iter().all(|d| d.krull_dim <= 0),
        degrees,
    }
}

/// Every charge module has Krull dimension at most zero.
pub fn is_fully_mobile(code: &PauliCode, cfg: &GbConfig) -> Result<MobilityReport> {
    Ok(report(&charge_modules(code, cfg)?))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DualityPair {
    pub left: usize,
    pub right: usize,
    pub left_dimension: FpDimension,
    pub right_dimension: FpDimension,
    pub holds: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DualityReport {
    pub holds: bool,
    pub pairs: Vec<DualityPair>,
}

/// Checks `|E^{i-1}| = |E^{m-i-1}|` for `1 <= i <= m-1` on a fully mobile code.
pub fn pairing_duality_check(code: &PauliCode, cfg: &GbConfig) -> Result<DualityReport> {
    let charges = charge_modules(code, cfg)?;
    duality_from(&charges, code.nvars())
}

pub(crate) fn duality_from(charges: &[ChargeModule], m: usize) -> Result<DualityReport> {
    if charges.iter().any(|c| c.krull_dim > 0) {
        return Err(Error::Precondition("code is not fully mobile".into()));
    }
    let pairs: Vec<DualityPair> = (1..m)
        .map(|i| {
            let (l, r) = (i - 1, m - i - 1);
            let (a, b) = (charges[l].fp_dimension, charges[r].fp_dimension);
            DualityPair {
                left: l,
                right: r,
                left_dimension: a,
                right_dimension: b,
                holds: a == b,
            }
        })
        .collect();
    Ok(DualityReport {
        holds: pairs.iter().all(|p| p.holds),
        pairs,
    })
}

/// Mobility and duality in one pass.
pub fn analyze(code: &PauliCode, cfg: &GbConfig) -> Result<(Vec<ChargeModule>, MobilityReport, Option<DualityReport>)> {
    let charges = charge_modules(code, cfg)?;
    let mobility = report(&charges);
    let duality = if mobility.fully_mobile {
        Some(duality_from(&charges, code.nvars())?)
    } else {
        None
    };
    Ok((charges, mobility, duality))
}

#[cfg(test)]
mod tests;
