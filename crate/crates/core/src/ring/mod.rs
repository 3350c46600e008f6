//! Exact arithmetic over `Z/p` and the Laurent polynomial ring
//! `R = Z/p[x1^±, ..., xm^±]` with its bar involution `x_i -> x_i^{-1}`.

mod matrix;
mod poly;
mod text;

pub use matrix::LaurentMatrix;
pub use poly::{Exponent, LaurentPoly};

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::fmt;

/// Deterministic primality test for moduli that fit in a `u32`.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n < 4 {
        return true;
    }
    if n % 2 == 0 {
        return false;
    }
    let mut d = 3;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// Validates a modulus, returning it as `u32`.
pub fn check_prime(p: u64) -> Result<u32> {
    if p > u32::MAX as u64 || !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    Ok(p as u32)
}

#[inline]
pub(crate) fn add_mod(a: u32, b: u32, p: u32) -> u32 {
    let s = a as u64 + b as u64;
    (s % p as u64) as u32
}

#[inline]
pub(crate) fn sub_mod(a: u32, b: u32, p: u32) -> u32 {
    if a >= b {
        a - b
    } else {
        (a as u64 + p as u64 - b as u64) as u32
    }
}

#[inline]
pub(crate) fn mul_mod(a: u32, b: u32, p: u32) -> u32 {
    ((a as u64 * b as u64) % p as u64) as u32
}

#[inline]
pub(crate) fn neg_mod(a: u32, p: u32) -> u32 {
    if a == 0 {
        0
    } else {
        p - a
    }
}

pub(crate) fn pow_mod(mut a: u32, mut e: u64, p: u32) -> u32 {
    let mut r = 1 % p;
    while e > 0 {
        if e & 1 == 1 {
            r = mul_mod(r, a, p);
        }
        a = mul_mod(a, a, p);
        e >>= 1;
    }
    r
}

/// Multiplicative inverse of a nonzero residue (Fermat).
#[inline]
pub(crate) fn inv_mod(a: u32, p: u32) -> u32 {
    debug_assert!(a % p != 0, "inverse of zero");
    pow_mod(a, p as u64 - 2, p)
}

/// Reduces a signed integer into `[0, p)`.
pub(crate) fn reduce_i64(v: i64, p: u32) -> u32 {
    v.rem_euclid(p as i64) as u32
}

/// An element of the prime field `Z/p`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FpScalar {
    p: u32,
    value: u32,
}

impl FpScalar {
    pub fn new(p: u64, value: i64) -> Result<Self> {
        let p = check_prime(p)?;
        Ok(Self {
            p,
            value: reduce_i64(value, p),
        })
    }

    /// Builds a scalar from a modulus already known to be prime.
    pub(crate) fn from_parts(p: u32, value: u32) -> Self {
        Self { p, value: value % p }
    }

    pub fn modulus(self) -> u32 {
        self.p
    }

    pub fn value(self) -> u32 {
        self.value
    }

    pub fn is_zero(self) -> bool {
        self.value == 0
    }

    pub fn add(self, other: Self) -> Result<Self> {
        self.same(other)?;
        Ok(Self::from_parts(self.p, add_mod(self.value, other.value, self.p)))
    }

    pub fn mul(self, other: Self) -> Result<Self> {
        self.same(other)?;
        Ok(Self::from_parts(self.p, mul_mod(self.value, other.value, self.p)))
    }

    pub fn neg(self) -> Self {
        Self::from_parts(self.p, neg_mod(self.value, self.p))
    }

    pub fn inv(self) -> Option<Self> {
        (self.value != 0).then(|| Self::from_parts(self.p, inv_mod(self.value, self.p)))
    }

    fn same(self, other: Self) -> Result<()> {
        if self.p != other.p {
            return Err(Error::ModulusMismatch(self.p, other.p));
        }
        Ok(())
    }
}

impl fmt::Display for FpScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primality() {
        let primes: Vec<u64> = (0..40).filter(|&n| is_prime(n)).collect();
        assert_eq!(primes, vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37]);
        assert!(check_prime(4).is_err());
        assert!(check_prime(1).is_err());
    }

    #[test]
    fn scalar_is_reduced() {
        let a = FpScalar::new(5, -1).unwrap();
        assert_eq!(a.value(), 4);
        let b = FpScalar::new(5, 13).unwrap();
        assert_eq!(b.value(), 3);
        assert_eq!(a.add(b).unwrap().value(), 2);
        assert_eq!(a.mul(b).unwrap().value(), 2);
        assert_eq!(a.inv().unwrap().value(), 4);
        assert!(FpScalar::new(5, 0).unwrap().inv().is_none());
        assert!(FpScalar::new(6, 1).is_err());
        let c = FpScalar::new(3, 1).unwrap();
        assert_eq!(a.add(c), Err(Error::ModulusMismatch(5, 3)));
    }
}
