use super::{add_mod, check_prime, mul_mod, neg_mod, reduce_i64, FpScalar};
use crate::error::{Error, Result};
use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

/// Exponent vector of a Laurent monomial.
pub type Exponent = Vec<i32>;

/// A Laurent polynomial in `m` commuting variables over `Z/p`.
///
/// Terms are kept in a sorted map with no zero coefficients, so structural
/// equality is ring equality.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LaurentPoly {
    p: u32,
    m: usize,
    terms: BTreeMap<Exponent, u32>,
}

impl LaurentPoly {
    pub fn zero(p: u32, m: usize) -> Self {
        debug_assert!(super::is_prime(p as u64));
        Self {
            p,
            m,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(p: u32, m: usize, c: i64) -> Self {
        Self::monomial(p, m, vec![0; m], c)
    }

    pub fn one(p: u32, m: usize) -> Self {
        Self::constant(p, m, 1)
    }

    /// `c * x^exp`; the exponent length must equal `m`.
    pub fn monomial(p: u32, m: usize, exp: Exponent, c: i64) -> Self {
        assert_eq!(exp.len(), m, "exponent length must equal the variable count");
        let mut out = Self::zero(p, m);
        let c = reduce_i64(c, p);
        if c != 0 {
            out.terms.insert(exp, c);
        }
        out
    }

    /// The variable `x_i` (zero-based).
    pub fn var(p: u32, m: usize, i: usize) -> Self {
        let mut e = vec![0; m];
        e[i] = 1;
        Self::monomial(p, m, e, 1)
    }

    /// Builds a polynomial from `(exponent, coefficient)` pairs, summing repeats.
    pub fn from_terms<I>(p: u64, m: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Exponent, i64)>,
    {
        let p = check_prime(p)?;
        let mut out = Self::zero(p, m);
        for (e, c) in terms {
            if e.len() != m {
                return Err(Error::ArityMismatch(e.len(), m));
            }
            out.add_term(e, reduce_i64(c, p));
        }
        Ok(out)
    }

    pub fn modulus(&self) -> u32 {
        self.p
    }

    pub fn nvars(&self) -> usize {
        self.m
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&vec![0; self.m]) == Some(&1)
    }

    /// Units of `R` are exactly nonzero scalar multiples of monomials.
    pub fn is_unit(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending lexicographic exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (&Exponent, u32)> + '_ {
        self.terms.iter().map(|(e, &c)| (e, c))
    }

    pub fn coefficient(&self, exp: &[i32]) -> FpScalar {
        FpScalar::from_parts(self.p, self.terms.get(exp).copied().unwrap_or(0))
    }

    pub(crate) fn add_term(&mut self, exp: Exponent, c: u32) {
        if c == 0 {
            return;
        }
        let p = self.p;
        match self.terms.entry(exp) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = add_mod(*o.get(), c, p);
                if s == 0 {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.p != other.p {
            return Err(Error::ModulusMismatch(self.p, other.p));
        }
        if self.m != other.m {
            return Err(Error::ArityMismatch(self.m, other.m));
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut out = self.clone();
        for (e, &c) in &other.terms {
            out.add_term(e.clone(), c);
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut out = self.clone();
        for (e, &c) in &other.terms {
            out.add_term(e.clone(), neg_mod(c, self.p));
        }
        Ok(out)
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut out = Self::zero(self.p, self.m);
        for (ea, &ca) in &self.terms {
            for (eb, &cb) in &other.terms {
                let e = add_exponents(ea, eb)?;
                out.add_term(e, mul_mod(ca, cb, self.p));
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: u32) -> Self {
        let c = c % self.p;
        let mut out = Self::zero(self.p, self.m);
        if c == 0 {
            return out;
        }
        out.terms = self
            .terms
            .iter()
            .map(|(e, &v)| (e.clone(), mul_mod(v, c, self.p)))
            .collect();
        out
    }

    /// Multiplies by the monomial `x^shift`.
    pub fn shift(&self, shift: &[i32]) -> Result<Self> {
        let mut out = Self::zero(self.p, self.m);
        for (e, &c) in &self.terms {
            out.terms.insert(add_exponents(e, shift)?, c);
        }
        Ok(out)
    }

    /// The bar involution: every exponent vector is negated.
    pub fn involute(&self) -> Self {
        let mut out = Self::zero(self.p, self.m);
        out.terms = self
            .terms
            .iter()
            .map(|(e, &c)| (e.iter().map(|v| -v).collect(), c))
            .collect();
        out
    }

    /// Largest absolute exponent over all terms and variables.
    pub fn max_abs_exponent(&self) -> u32 {
        self.terms
            .keys()
            .flat_map(|e| e.iter().map(|v| v.unsigned_abs()))
            .max()
            .unwrap_or(0)
    }

    /// Per-variable `(min, max)` exponent, or `None` for the zero polynomial.
    pub fn exponent_bounds(&self) -> Option<Vec<(i32, i32)>> {
        let mut it = self.terms.keys();
        let first = it.next()?;
        let mut b: Vec<(i32, i32)> = first.iter().map(|&v| (v, v)).collect();
        for e in it {
            for (bi, &v) in b.iter_mut().zip(e) {
                bi.0 = bi.0.min(v);
                bi.1 = bi.1.max(v);
            }
        }
        Some(b)
    }
}

pub(crate) fn add_exponents(a: &[i32], b: &[i32]) -> Result<Exponent> {
    a.iter()
        .zip(b)
        .map(|(x, y)| x.checked_add(*y).ok_or(Error::ExponentOverflow))
        .collect()
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: Self) -> LaurentPoly {
        self.try_add(rhs).expect("incompatible polynomials")
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: Self) -> LaurentPoly {
        self.try_sub(rhs).expect("incompatible polynomials")
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: Self) -> LaurentPoly {
        self.try_mul(rhs).expect("incompatible polynomials")
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        self.scale(self.p - 1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(p: u32) -> LaurentPoly {
        LaurentPoly::var(p, 1, 0)
    }

    fn xinv(p: u32) -> LaurentPoly {
        LaurentPoly::monomial(p, 1, vec![-1], 1)
    }

    #[test]
    fn add_examples() {
        assert!((&x(2) + &x(2)).is_zero());
        let f = &LaurentPoly::one(3, 1) + &x(3);
        assert_eq!(&f + &LaurentPoly::zero(3, 1), f);
        let g = &LaurentPoly::one(3, 1) + &xinv(3);
        let expected =
            LaurentPoly::from_terms(3, 1, [(vec![0], 2), (vec![1], 1), (vec![-1], 1)]).unwrap();
        assert_eq!(&f + &g, expected);
    }

    #[test]
    fn mul_examples() {
        assert!((&x(5) * &xinv(5)).is_one());
        let f = &LaurentPoly::one(2, 1) + &x(2);
        let g = &LaurentPoly::one(2, 1) + &xinv(2);
        assert_eq!(&f * &g, &x(2) + &xinv(2));
        assert_eq!(&f * &LaurentPoly::one(2, 1), f);
    }

    #[test]
    fn involute_examples() {
        assert_eq!(x(3).involute(), xinv(3));
        let f = LaurentPoly::from_terms(5, 2, [(vec![0, 0], 1), (vec![1, 0], 1), (vec![0, -2], 1)])
            .unwrap();
        let g = LaurentPoly::from_terms(5, 2, [(vec![0, 0], 1), (vec![-1, 0], 1), (vec![0, 2], 1)])
            .unwrap();
        assert_eq!(f.involute(), g);
        assert_eq!(f.involute().involute(), f);
    }

    #[test]
    fn mismatch_errors() {
        let a = LaurentPoly::one(2, 1);
        let b = LaurentPoly::one(3, 1);
        let c = LaurentPoly::one(2, 2);
        assert_eq!(a.try_add(&b), Err(Error::ModulusMismatch(2, 3)));
        assert_eq!(a.try_mul(&c), Err(Error::ArityMismatch(1, 2)));
    }

    #[test]
    fn exponent_overflow_is_checked() {
        let big = LaurentPoly::monomial(2, 1, vec![i32::MAX], 1);
        assert_eq!(big.try_mul(&x(2)), Err(Error::ExponentOverflow));
    }

    #[test]
    fn units() {
        assert!(LaurentPoly::monomial(3, 2, vec![4, -1], 2).is_unit());
        assert!(!(&LaurentPoly::one(3, 1) + &x(3)).is_unit());
        assert!(!LaurentPoly::zero(3, 1).is_unit());
    }
}
