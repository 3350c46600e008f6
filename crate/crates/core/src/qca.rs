//! Clifford QCAs through their symplectic image: `2q × 2q` Laurent matrices
//! `U` with `dagger(U) Ω U = Ω`.

use crate::code::{hyperbolic_form, omega_pairing, PauliCode};
use crate::error::{Error, Result};
use crate::ring::{check_prime, LaurentMatrix, LaurentPoly};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliffordQca {
    p: u32,
    m: usize,
    q: usize,
    matrix: LaurentMatrix,
}

impl CliffordQca {
    /// Wraps a square matrix of even size. Symplecticity is not required
    /// here; see [`CliffordQca::verify_symplectic`].
    pub fn new(matrix: LaurentMatrix) -> Result<Self> {
        let n = matrix.rows();
        if n != matrix.cols() || n % 2 == 1 || n == 0 {
            return Err(Error::Shape(format!(
                "a QCA matrix must be square of positive even size, got {}x{}",
                n,
                matrix.cols()
            )));
        }
        Ok(Self {
            p: matrix.modulus(),
            m: matrix.nvars(),
            q: n / 2,
            matrix,
        })
    }

    pub fn identity(p: u64, m: usize, q: usize) -> Result<Self> {
        Self::new(LaurentMatrix::identity(check_prime(p)?, m, 2 * q))
    }

    /// Translation by `x^shift` on every qudit.
    pub fn shift(p: u64, m: usize, q: usize, shift: &[i32]) -> Result<Self> {
        let p = check_prime(p)?;
        if shift.len() != m {
            return Err(Error::ArityMismatch(shift.len(), m));
        }
        let mono = LaurentPoly::monomial(p, m, shift.to_vec(), 1);
        Self::new(LaurentMatrix::identity(p, m, 2 * q).scale(&mono)?)
    }

    /// The global X/Z exchange `Ω` itself.
    pub fn swap(p: u64, m: usize, q: usize) -> Result<Self> {
        Self::new(hyperbolic_form(check_prime(p)?, m, q))
    }

    /// X/Z exchange with sign on one qudit only.
    pub fn fourier(p: u64, m: usize, q: usize, qudit: usize) -> Result<Self> {
        let p = check_prime(p)?;
        if qudit >= q {
            return Err(Error::Invalid(format!("qudit {qudit} out of range")));
        }
        let mut u = LaurentMatrix::identity(p, m, 2 * q);
        u.set(qudit, qudit, LaurentPoly::zero(p, m));
        u.set(q + qudit, q + qudit, LaurentPoly::zero(p, m));
        u.set(qudit, q + qudit, LaurentPoly::one(p, m));
        u.set(q + qudit, qudit, LaurentPoly::constant(p, m, -1));
        Self::new(u)
    }

    /// Controlled addition: `A = I + f E_{target,control}` on the X block and
    /// `dagger(A)^{-1} = I - f̄ E_{control,target}` on the Z block.
    pub fn controlled_add(control: usize, target: usize, f: &LaurentPoly, q: usize) -> Result<Self> {
        let (p, m) = (f.modulus(), f.nvars());
        if control == target || control >= q || target >= q {
            return Err(Error::Invalid("controlled addition needs two distinct qudits".into()));
        }
        let mut u = LaurentMatrix::identity(p, m, 2 * q);
        u.set(target, control, f.clone());
        u.set(q + control, q + target, -&f.involute());
        Self::new(u)
    }

    /// `[[I, 0], [S, I]]` for a hermitian `q × q` matrix `S`.
    pub fn phase(s: &LaurentMatrix) -> Result<Self> {
        let (p, m, q) = (s.modulus(), s.nvars(), s.rows());
        if s.cols() != q {
            return Err(Error::Shape("phase block must be square".into()));
        }
        if s.dagger() != *s {
            return Err(Error::Invalid("phase block must be hermitian".into()));
        }
        let mut u = LaurentMatrix::identity(p, m, 2 * q);
        for i in 0..q {
            for j in 0..q {
                u.set(q + i, j, s.get(i, j).clone());
            }
        }
        Self::new(u)
    }

    /// `w -> w + c v Ω(v, w)` for a vector with `Ω(v, v) = 0` and a
    /// self-conjugate scalar `c`.
    pub fn transvection(v: &[LaurentPoly], c: &LaurentPoly) -> Result<Self> {
        let (p, m) = (c.modulus(), c.nvars());
        if v.len() % 2 == 1 || v.is_empty() {
            return Err(Error::Shape("transvection vector must have even positive length".into()));
        }
        let q = v.len() / 2;
        let om = hyperbolic_form(p, m, q);
        if !omega_pairing(v, v, &om)?.is_zero() {
            return Err(Error::Invalid("transvection vector must be isotropic".into()));
        }
        if c.involute() != *c {
            return Err(Error::Invalid("transvection scalar must be self-conjugate".into()));
        }
        // row functional Ω(v, -) = dagger(v) Ω
        let vrow = LaurentMatrix::from_rows(p, m, vec![v.to_vec()])?;
        let functional = vrow.transpose().dagger().try_mul(&om)?;
        let col = LaurentMatrix::from_columns(p, m, 2 * q, &[v.to_vec()])?;
        let update = col.scale(c)?.try_mul(&functional)?;
        Self::new(LaurentMatrix::identity(p, m, 2 * q).try_add(&update)?)
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

    pub fn matrix(&self) -> &LaurentMatrix {
        &self.matrix
    }

    pub fn verify_symplectic(&self) -> bool {
        let om = hyperbolic_form(self.p, self.m, self.q);
        self.matrix
            .dagger()
            .try_mul(&om)
            .and_then(|a| a.try_mul(&self.matrix))
            .map(|r| r == om)
            .unwrap_or(false)
    }

    fn require_symplectic(&self) -> Result<()> {
        if self.verify_symplectic() {
            Ok(())
        } else {
            Err(Error::Precondition("matrix is not symplectic".into()))
        }
    }

    /// `U^{-1} = -Ω dagger(U) Ω`.
    pub fn inverse(&self) -> Result<Self> {
        self.require_symplectic()?;
        let om = hyperbolic_form(self.p, self.m, self.q);
        Self::new(om.neg().try_mul(&self.matrix.dagger())?.try_mul(&om)?)
    }

    /// `self ∘ other`, i.e. the matrix product `self · other`.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        Self::new(self.matrix.try_mul(&other.matrix)?)
    }

    /// Block-diagonal with respect to the X/Z split.
    pub fn is_separated(&self) -> Result<bool> {
        self.require_symplectic()?;
        let q = self.q;
        Ok(self.matrix.block(0, q, q, 2 * q).is_zero() && self.matrix.block(q, 2 * q, 0, q).is_zero())
    }

    /// Largest absolute exponent in any entry.
    pub fn range(&self) -> u32 {
        self.matrix.max_abs_exponent()
    }

    /// The code generated by the image of the all-Z Lagrangian.
    pub fn create_stabilizer(&self) -> Result<PauliCode> {
        self.require_symplectic()?;
        let q = self.q;
        let sigma = self.matrix.block(0, 2 * q, q, 2 * q);
        PauliCode::new(self.p as u64, self.m, q, sigma)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groebner::GbConfig;
    use rand::{Rng, SeedableRng};

    fn poly(p: u64, m: usize, s: &str) -> LaurentPoly {
        LaurentPoly::parse(p, m, s).unwrap()
    }

    #[test]
    fn verify_examples() {
        assert!(CliffordQca::shift(2, 1, 1, &[1]).unwrap().verify_symplectic());
        assert!(CliffordQca::swap(3, 1, 1).unwrap().verify_symplectic());
        let mut d = LaurentMatrix::identity(3, 1, 2);
        d.set(0, 0, poly(3, 1, "x"));
        assert!(!CliffordQca::new(d).unwrap().verify_symplectic());
        assert!(CliffordQca::new(LaurentMatrix::identity(3, 1, 3)).is_err());
    }

    #[test]
    fn inverse_examples() {
        let id = CliffordQca::identity(5, 2, 2).unwrap();
        assert_eq!(id.inverse().unwrap(), id);
        let s = CliffordQca::shift(5, 1, 1, &[1]).unwrap();
        assert_eq!(s.inverse().unwrap(), CliffordQca::shift(5, 1, 1, &[-1]).unwrap());
        let c = CliffordQca::controlled_add(0, 1, &poly(5, 1, "1 + 2*x"), 2).unwrap();
        assert_eq!(c.inverse().unwrap().inverse().unwrap(), c);
        assert_eq!(c.compose(&c.inverse().unwrap()).unwrap(), CliffordQca::identity(5, 1, 2).unwrap());
    }

    #[test]
    fn separated_examples() {
        assert!(CliffordQca::shift(2, 1, 2, &[1]).unwrap().is_separated().unwrap());
        assert!(!CliffordQca::swap(2, 1, 2).unwrap().is_separated().unwrap());
        let a = poly(3, 1, "2*x");
        let c = CliffordQca::controlled_add(1, 0, &a, 2).unwrap();
        assert!(c.is_separated().unwrap());
        let mut d = LaurentMatrix::identity(3, 1, 2);
        d.set(0, 0, poly(3, 1, "x"));
        assert!(CliffordQca::new(d).unwrap().is_separated().is_err());
    }

    #[test]
    fn range_examples() {
        assert_eq!(CliffordQca::identity(2, 2, 1).unwrap().range(), 0);
        assert_eq!(CliffordQca::shift(2, 2, 1, &[2, 0]).unwrap().range(), 2);
        let a = CliffordQca::shift(2, 2, 1, &[1, -1]).unwrap();
        let b = CliffordQca::controlled_add(0, 1, &poly(2, 2, "x*y^2"), 2).unwrap();
        let a2 = CliffordQca::shift(2, 2, 2, &[1, -1]).unwrap();
        assert!(a2.compose(&b).unwrap().range() <= a.range() + b.range());
    }

    #[test]
    fn create_examples() {
        let cfg = GbConfig::default();
        let t = CliffordQca::identity(3, 2, 2).unwrap().create_stabilizer().unwrap();
        assert!(t.is_lagrangian(&cfg).unwrap());
        assert_eq!(t.sigma().column(0)[2], LaurentPoly::one(3, 2));
        let x = CliffordQca::swap(3, 2, 1).unwrap().create_stabilizer().unwrap();
        assert_eq!(x.sigma().column(0)[0], LaurentPoly::one(3, 2));
        assert!(x.is_lagrangian(&cfg).unwrap());
    }

    #[test]
    fn generators_validate_inputs() {
        let s = LaurentMatrix::from_rows(3, 1, vec![vec![poly(3, 1, "x")]]).unwrap();
        assert!(CliffordQca::phase(&s).is_err());
        let h = LaurentMatrix::from_rows(3, 1, vec![vec![poly(3, 1, "x + x^-1")]]).unwrap();
        assert!(CliffordQca::phase(&h).unwrap().verify_symplectic());
        let v = vec![poly(3, 1, "1"), poly(3, 1, "x")];
        assert!(CliffordQca::transvection(&v, &LaurentPoly::one(3, 1)).is_err());
        let v = vec![poly(3, 1, "1 + x"), poly(3, 1, "0")];
        let t = CliffordQca::transvection(&v, &poly(3, 1, "x + x^-1")).unwrap();
        assert!(t.verify_symplectic());
        assert!(!t.is_separated().unwrap());
    }

    #[test]
    fn random_words_are_symplectic() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        let (p, m, q) = (3u64, 2usize, 2usize);
        for _ in 0..10 {
            let mut u = CliffordQca::identity(p, m, q).unwrap();
            for _ in 0..4 {
                let g = match rng.gen_range(0..3) {
                    0 => CliffordQca::shift(p, m, q, &[rng.gen_range(-1..=1), rng.gen_range(-1..=1)]).unwrap(),
                    1 => CliffordQca::controlled_add(0, 1, &poly(p, m, "1 + x*y^-1"), q).unwrap(),
                    _ => CliffordQca::fourier(p, m, q, rng.gen_range(0..q)).unwrap(),
                };
                u = u.compose(&g).unwrap();
            }
            assert!(u.verify_symplectic());
            assert!(u.create_stabilizer().unwrap().is_lagrangian(&GbConfig::default()).unwrap());
        }
    }
}
