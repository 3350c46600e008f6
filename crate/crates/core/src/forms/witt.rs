//! Witt classes of quadratic spaces over `Z/p` and the L-group table.

use super::{is_square, least_nonresidue, QuadraticSpace};
use crate::error::Result;
use serde::Serialize;
use std::fmt;

/// Canonical anisotropic kernel of a Witt class. For odd `p` these are
/// `0`, `⟨1⟩`, `⟨ns⟩` and `⟨1, -ns⟩` with `ns` the least non-residue; for
/// `p = 2` only `0` and the plane `a² + ab + b²` occur.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Anisotropic {
    Zero,
    Unit,
    NonResidue,
    Plane,
}

/// A class in `Witt(Z/p)`. Equality is equality of canonical kernels.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct WittClass {
    pub p: u32,
    pub kernel: Anisotropic,
}

impl WittClass {
    pub fn zero(p: u32) -> Self {
        Self {
            p,
            kernel: Anisotropic::Zero,
        }
    }

    /// All classes of `Witt(Z/p)`.
    pub fn all(p: u32) -> Vec<Self> {
        let kinds: &[Anisotropic] = if p == 2 {
            &[Anisotropic::Zero, Anisotropic::Plane]
        } else {
            &[
                Anisotropic::Zero,
                Anisotropic::Unit,
                Anisotropic::NonResidue,
                Anisotropic::Plane,
            ]
        };
        kinds.iter().map(|&kernel| Self { p, kernel }).collect()
    }

    pub(crate) fn of_anisotropic(a: &QuadraticSpace) -> Self {
        let p = a.modulus();
        let kernel = match a.dim() {
            0 => Anisotropic::Zero,
            1 if is_square(a.matrix()[0][0], p) => Anisotropic::Unit,
            1 => Anisotropic::NonResidue,
            2 => Anisotropic::Plane,
            d => unreachable!("anisotropic forms over Z/p have dimension at most 2, got {d}"),
        };
        Self { p, kernel }
    }

    pub fn is_zero(&self) -> bool {
        self.kernel == Anisotropic::Zero
    }

    /// The canonical anisotropic representative.
    pub fn representative(&self) -> QuadraticSpace {
        let p = self.p as u64;
        let ns = if self.p == 2 { 1 } else { least_nonresidue(self.p) as i64 };
        match (self.kernel, self.p) {
            (Anisotropic::Zero, _) => QuadraticSpace::zero(p),
            (Anisotropic::Plane, 2) => QuadraticSpace::new(p, vec![vec![1, 1], vec![0, 1]]),
            (Anisotropic::Unit, _) => QuadraticSpace::diagonal(p, &[1]),
            (Anisotropic::NonResidue, _) => QuadraticSpace::diagonal(p, &[ns]),
            (Anisotropic::Plane, _) => QuadraticSpace::diagonal(p, &[1, -ns]),
        }
        .expect("canonical forms are valid")
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.representative()
            .orthogonal_sum(&other.representative())?
            .witt_class()
    }

    pub fn neg(&self) -> Self {
        self.representative()
            .negate()
            .witt_class()
            .expect("negated anisotropic forms stay nondegenerate")
    }

    /// Smallest `k >= 1` with `k · self = 0`.
    pub fn order(&self) -> usize {
        let mut acc = *self;
        let mut k = 1;
        while !acc.is_zero() {
            acc = acc.add(self).expect("same modulus");
            k += 1;
        }
        k
    }

    /// The Arf bit for `p = 2`.
    pub fn arf(&self) -> Option<u32> {
        (self.p == 2).then_some(u32::from(self.kernel == Anisotropic::Plane))
    }
}

impl fmt::Display for WittClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ns = || least_nonresidue(self.p);
        match (self.kernel, self.p) {
            (Anisotropic::Zero, _) => write!(f, "0"),
            (Anisotropic::Plane, 2) => write!(f, "[a^2 + ab + b^2]"),
            (Anisotropic::Unit, _) => write!(f, "[<1>]"),
            (Anisotropic::NonResidue, _) => write!(f, "[<{}>]", ns()),
            (Anisotropic::Plane, p) => write!(f, "[<1, {}>]", p - ns()),
        }
    }
}

/// The abstract group `Witt(Z/p)`, read off from element orders.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum WittGroupStructure {
    Cyclic2,
    Cyclic4,
    KleinFour,
}

impl WittGroupStructure {
    pub fn of_prime(p: u32) -> Self {
        let orders: Vec<usize> = WittClass::all(p).iter().map(WittClass::order).collect();
        match (orders.len(), orders.iter().max()) {
            (2, _) => Self::Cyclic2,
            (_, Some(4)) => Self::Cyclic4,
            _ => Self::KleinFour,
        }
    }
}

impl fmt::Display for WittGroupStructure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::Cyclic2 => "Z/2",
            Self::Cyclic4 => "Z/4",
            Self::KleinFour => "Z/2 x Z/2",
        })
    }
}

/// `L_{-n}(Z/p)` as a group label.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "group", rename_all = "snake_case")]
pub enum LGroup {
    Trivial,
    Z2,
    Witt { p: u32 },
}

impl fmt::Display for LGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LGroup::Trivial => write!(f, "0"),
            LGroup::Z2 => write!(f, "Z/2"),
            LGroup::Witt { p } => write!(f, "Witt(Z/{p})"),
        }
    }
}

/// The group classifying codes in spacetime dimension `n` with prime `p`:
/// trivial for odd `n`, `Witt(Z/p)` for `n ≡ 0 mod 4`, and for `n ≡ 2 mod 4`
/// `Z/2` when `p = 2` (two-periodicity) and trivial otherwise.
pub fn l_group(n: i64, p: u32) -> LGroup {
    match n.rem_euclid(4) {
        1 | 3 => LGroup::Trivial,
        2 if p == 2 => LGroup::Z2,
        2 => LGroup::Trivial,
        _ => LGroup::Witt { p },
    }
}
