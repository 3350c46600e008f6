//! Braiding of point charges in planar (`m = 2`) codes, computed on a finite
//! torus with explicit string operators.
//!
//! A Pauli vector on the `N × N` torus is indexed by
//! `(row * N + sx) * N + sy`, where `row` runs over the `2q` rows of the
//! Pauli module. Syndromes are indexed the same way over the `k` generators.
//! A charge is a Laurent vector in `R^k` (a syndrome pattern) representing a
//! class of the degree-0 charge module.

use crate::code::PauliCode;
use crate::error::{Error, Result};
use crate::forms::{QuadraticSpace, WittClass};
use crate::groebner::GbConfig;
use crate::homology::CodeComplex;
use crate::linalg;
use crate::ring::{add_mod, mul_mod, neg_mod, LaurentMatrix, LaurentPoly};
use serde::Serialize;

pub type Site = [i64; 2];

/// A code placed on the `N × N` torus.
#[derive(Debug, Clone)]
pub struct FiniteInstance {
    n: usize,
    p: u32,
    q: usize,
    k: usize,
    sigma: LaurentMatrix,
    delta: LaurentMatrix,
    omega: LaurentMatrix,
    spread: i64,
}

/// Largest exponent spread over both directions among the entries.
fn spread_of<'a>(polys: impl Iterator<Item = &'a LaurentPoly>) -> i64 {
    let mut lo = [i64::MAX; 2];
    let mut hi = [i64::MIN; 2];
    for f in polys {
        for (e, _) in f.terms() {
            for d in 0..2 {
                lo[d] = lo[d].min(e[d] as i64);
                hi[d] = hi[d].max(e[d] as i64);
            }
        }
    }
    (0..2)
        .map(|d| if lo[d] > hi[d] { 0 } else { hi[d] - lo[d] })
        .max()
        .unwrap_or(0)
}

/// Largest spread of a single generator column.
fn column_spread(sigma: &LaurentMatrix) -> i64 {
    sigma
        .columns()
        .iter()
        .map(|c| spread_of(c.iter()))
        .max()
        .unwrap_or(0)
}

/// Exponent box `(min, max)` per direction, or `None` if all entries vanish.
fn bounds_of<'a>(polys: impl Iterator<Item = &'a LaurentPoly>) -> Option<[(i64, i64); 2]> {
    let mut b: Option<[(i64, i64); 2]> = None;
    for f in polys {
        for (e, _) in f.terms() {
            let cur = b.get_or_insert([(e[0] as i64, e[0] as i64), (e[1] as i64, e[1] as i64)]);
            for d in 0..2 {
                cur[d].0 = cur[d].0.min(e[d] as i64);
                cur[d].1 = cur[d].1.max(e[d] as i64);
            }
        }
    }
    b
}

/// Places a planar code on the `n × n` torus and checks that isotropy
/// survives the quotient.
pub fn instantiate_torus(code: &PauliCode, n: usize) -> Result<FiniteInstance> {
    if code.nvars() != 2 {
        return Err(Error::Precondition(format!(
            "braiding needs two lattice directions, got {}",
            code.nvars()
        )));
    }
    let spread = column_spread(code.sigma()).max(1);
    if (n as i64) < 3 * spread {
        return Err(Error::Invalid(format!(
            "torus size {n} is below 3x the generator spread {spread}; supports would wrap"
        )));
    }
    let inst = FiniteInstance {
        n,
        p: code.modulus(),
        q: code.qudits(),
        k: code.num_generators(),
        sigma: code.sigma().clone(),
        delta: code.excess_map(),
        omega: code.omega(),
        spread,
    };
    for j in 0..inst.k {
        if inst.syndrome(&inst.stabilizer(j, [0, 0])).iter().any(|&c| c != 0) {
            return Err(Error::Precondition(format!(
                "generator {j} does not commute with its translates on the {n}x{n} torus"
            )));
        }
    }
    Ok(inst)
}

impl FiniteInstance {
    pub fn size(&self) -> usize {
        self.n
    }

    pub fn modulus(&self) -> u32 {
        self.p
    }

    pub fn spread(&self) -> i64 {
        self.spread
    }

    pub fn pauli_dim(&self) -> usize {
        2 * self.q * self.n * self.n
    }

    pub fn syndrome_dim(&self) -> usize {
        self.k * self.n * self.n
    }

    fn site(&self, s: Site) -> usize {
        let n = self.n as i64;
        (s[0].rem_euclid(n) * n + s[1].rem_euclid(n)) as usize
    }

    fn index(&self, row: usize, s: Site) -> usize {
        row * self.n * self.n + self.site(s)
    }

    fn shifted(s: Site, e: &[i32]) -> Site {
        [s[0] + e[0] as i64, s[1] + e[1] as i64]
    }

    /// Generator `j` translated to `site`.
    pub fn stabilizer(&self, j: usize, site: Site) -> Vec<u32> {
        let mut v = vec![0u32; self.pauli_dim()];
        for i in 0..2 * self.q {
            for (e, c) in self.sigma.get(i, j).terms() {
                let idx = self.index(i, Self::shifted(site, e));
                v[idx] = add_mod(v[idx], c, self.p);
            }
        }
        v
    }

    /// All translated generators; each has length `2qN²` and there are `kN²`.
    pub fn check_columns(&self) -> Vec<Vec<u32>> {
        let n = self.n as i64;
        let mut out = Vec::with_capacity(self.syndrome_dim());
        for j in 0..self.k {
            for sx in 0..n {
                for sy in 0..n {
                    out.push(self.stabilizer(j, [sx, sy]));
                }
            }
        }
        out
    }

    /// The syndrome of `w`: entry `(j, λ)` is the pairing of `w` with generator
    /// `j` at `λ`.
    pub fn syndrome(&self, w: &[u32]) -> Vec<u32> {
        let n = self.n as i64;
        let mut s = vec![0u32; self.syndrome_dim()];
        for j in 0..self.k {
            for i in 0..2 * self.q {
                for (e, c) in self.delta.get(j, i).terms() {
                    for sx in 0..n {
                        for sy in 0..n {
                            let wv = w[self.index(i, [sx, sy])];
                            if wv == 0 {
                                continue;
                            }
                            let idx = self.index(j, Self::shifted([sx, sy], e));
                            s[idx] = add_mod(s[idx], mul_mod(c, wv, self.p), self.p);
                        }
                    }
                }
            }
        }
        s
    }

    /// The commutation pairing `Λ(u, v)` of two torus Pauli vectors.
    pub fn pairing(&self, u: &[u32], v: &[u32]) -> u32 {
        let n = self.n as i64;
        let mut acc = 0u32;
        for i in 0..2 * self.q {
            for j in 0..2 * self.q {
                for (e, c) in self.omega.get(i, j).terms() {
                    for sx in 0..n {
                        for sy in 0..n {
                            let uv = u[self.index(i, [sx, sy])];
                            if uv == 0 {
                                continue;
                            }
                            let vv = v[self.index(j, [sx - e[0] as i64, sy - e[1] as i64])];
                            acc = add_mod(acc, mul_mod(mul_mod(uv, vv, self.p), c, self.p), self.p);
                        }
                    }
                }
            }
        }
        acc
    }

    /// The syndrome pattern of `charge` placed at `site`.
    pub fn charge_pattern(&self, charge: &[LaurentPoly], site: Site) -> Vec<u32> {
        let mut s = vec![0u32; self.syndrome_dim()];
        for (j, f) in charge.iter().enumerate() {
            for (e, c) in f.terms() {
                let idx = self.index(j, Self::shifted(site, e));
                s[idx] = add_mod(s[idx], c, self.p);
            }
        }
        s
    }
}

/// A Pauli operator on the torus that moves a charge from `start` to `end`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StringOperator {
    pub pauli: Vec<u32>,
    pub start: Site,
    pub end: Site,
    /// Inclusive support box `[[x0, x1], [y0, y1]]` (before reduction mod `N`).
    pub window: [[i64; 2]; 2],
}

/// Solves for an operator supported within `margin` of the segment
/// `start -> end` whose syndrome is `charge` at `end` minus `charge` at
/// `start`.
pub fn string_operator(
    inst: &FiniteInstance,
    charge: &[LaurentPoly],
    start: Site,
    end: Site,
    margin: i64,
) -> Result<StringOperator> {
    if charge.len() != inst.k {
        return Err(Error::Shape(format!(
            "charge has {} components, code has {} generators",
            charge.len(),
            inst.k
        )));
    }
    let window = [
        [start[0].min(end[0]) - margin, start[0].max(end[0]) + margin],
        [start[1].min(end[1]) - margin, start[1].max(end[1]) + margin],
    ];
    if charge.iter().all(LaurentPoly::is_zero) || start == end {
        return Ok(StringOperator {
            pauli: vec![0; inst.pauli_dim()],
            start,
            end,
            window,
        });
    }
    let p = inst.p;
    let n = inst.n as i64;
    let stencil = bounds_of(inst.delta.entries()).unwrap_or([(0, 0); 2]);
    let eq_box = [
        [window[0][0] + stencil[0].0, window[0][1] + stencil[0].1],
        [window[1][0] + stencil[1].0, window[1][1] + stencil[1].1],
    ];
    if eq_box.iter().any(|r| r[1] - r[0] + 1 > n) {
        return Err(Error::Invalid(format!(
            "string window does not fit on the {n}x{n} torus"
        )));
    }

    let mut target = inst.charge_pattern(charge, end);
    for (t, s) in target.iter_mut().zip(inst.charge_pattern(charge, start)) {
        *t = add_mod(*t, neg_mod(s, p), p);
    }

    // unknowns: Pauli coordinates inside the window; equations: every
    // syndrome entry those coordinates can reach
    let wsites: Vec<Site> = (window[0][0]..=window[0][1])
        .flat_map(|x| (window[1][0]..=window[1][1]).map(move |y| [x, y]))
        .collect();
    let ncols = 2 * inst.q * wsites.len();
    let nn = inst.n * inst.n;
    let mut eq_row = vec![usize::MAX; inst.syndrome_dim()];
    let mut nrows = 0;
    for j in 0..inst.k {
        for x in eq_box[0][0]..=eq_box[0][1] {
            for y in eq_box[1][0]..=eq_box[1][1] {
                eq_row[inst.index(j, [x, y])] = nrows;
                nrows += 1;
            }
        }
    }
    if target.iter().enumerate().any(|(i, &t)| t != 0 && eq_row[i] == usize::MAX) {
        return Err(Error::NoSolution("charge pattern leaves the string window".into()));
    }
    let mut a: linalg::Mat = vec![vec![0u32; ncols]; nrows];
    for i in 0..2 * inst.q {
        for (wi, &s) in wsites.iter().enumerate() {
            let col = i * wsites.len() + wi;
            for j in 0..inst.k {
                for (e, c) in inst.delta.get(j, i).terms() {
                    let r = eq_row[inst.index(j, FiniteInstance::shifted(s, e))];
                    a[r][col] = add_mod(a[r][col], c, p);
                }
            }
        }
    }
    let mut rhs = vec![0u32; nrows];
    for (idx, &t) in target.iter().enumerate() {
        if t != 0 {
            rhs[eq_row[idx]] = t;
        }
    }
    let x = linalg::solve(&a, &rhs, ncols, p).ok_or_else(|| {
        Error::NoSolution(format!(
            "no string operator from {start:?} to {end:?} within margin {margin}"
        ))
    })?;
    let mut pauli = vec![0u32; inst.pauli_dim()];
    for i in 0..2 * inst.q {
        for (wi, &s) in wsites.iter().enumerate() {
            let v = x[i * wsites.len() + wi];
            if v != 0 {
                let idx = i * nn + inst.site(s);
                pauli[idx] = add_mod(pauli[idx], v, p);
            }
        }
    }
    debug_assert_eq!(inst.syndrome(&pauli), target);
    Ok(StringOperator {
        pauli,
        start,
        end,
        window,
    })
}

/// Distances used to lay out strings: `step` is the side of the basic
/// square (a multiple of every charge period) and `margin` the half-width
/// of each string window.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Geometry {
    pub step: i64,
    pub margin: i64,
}

impl Geometry {
    /// Smallest torus on which the braiding and exchange layouts do not wrap.
    pub fn min_torus(&self, spread: i64) -> usize {
        (4 * self.step + 2 * self.margin + 2 * spread + 2) as usize
    }
}

fn add_vec(a: &mut [u32], b: &[u32], p: u32) {
    for (x, &y) in a.iter_mut().zip(b) {
        *x = add_mod(*x, y, p);
    }
}

/// The phase (in `Z/p`) picked up when `a` is carried counterclockwise
/// around the end of a `b`-string.
pub fn braid_phase(inst: &FiniteInstance, a: &[LaurentPoly], b: &[LaurentPoly], geo: Geometry) -> Result<u32> {
    let d = geo.step;
    let w_b = string_operator(inst, b, [-2 * d, 0], [0, 0], geo.margin)?;
    let corners = [[-d, -d], [d, -d], [d, d], [-d, d]];
    let mut lp = vec![0u32; inst.pauli_dim()];
    for c in 0..4 {
        let s = string_operator(inst, a, corners[c], corners[(c + 1) % 4], geo.margin)?;
        add_vec(&mut lp, &s.pauli, inst.p);
    }
    debug_assert!(inst.syndrome(&lp).iter().all(|&v| v == 0));
    Ok(inst.pairing(&lp, &w_b.pauli))
}

/// The exchange phase `θ(a) ∈ Z/(2p)` (phase `exp(πiθ/p)`) from three
/// strings leaving a common point to the right, up and left.
pub fn self_statistics(inst: &FiniteInstance, a: &[LaurentPoly], geo: Geometry) -> Result<u32> {
    let d = geo.step;
    let p = inst.p;
    let ends = [[d, 0], [0, d], [-d, 0]];
    let strings = ends
        .iter()
        .map(|&e| string_operator(inst, a, [0, 0], e, geo.margin))
        .collect::<Result<Vec<_>>>()?;
    let l = |i: usize, j: usize| inst.pairing(&strings[i].pauli, &strings[j].pauli);
    let h = add_mod(add_mod(l(0, 1), l(1, 2), p), l(2, 0), p);
    Ok((2 * h) % (2 * p))
}

/// An `F_p` basis of the degree-0 charges, as syndrome patterns in `R^k`.
#[derive(Debug, Clone)]
pub struct ChargeBasis {
    pub labels: Vec<String>,
    pub vectors: Vec<Vec<LaurentPoly>>,
    /// Smallest translations in `x` and `y` acting trivially on every charge.
    pub periods: [i64; 2],
}

const MAX_PERIOD: i64 = 64;

/// Standard monomials of the charge module mapped into `R^k`.
pub fn charge_basis(code: &PauliCode, cfg: &GbConfig) -> Result<ChargeBasis> {
    if !code.is_lagrangian(cfg)? {
        return Err(Error::Precondition("code is not Lagrangian".into()));
    }
    let (p, m) = (code.modulus(), code.nvars());
    let mut complex = CodeComplex::new(code, cfg)?;
    let e0 = complex.charge_module(0)?;
    let std = e0
        .basis
        .standard_monomials()?
        .ok_or_else(|| Error::Precondition("degree-0 charges are infinite; the code is not fully mobile".into()))?;
    let rep = e0.basis.rep();
    let s = e0.presentation.rank;
    let mut labels = Vec::new();
    let mut coords = Vec::new();
    let mut vectors = Vec::new();
    for (pos, mono) in &std {
        let exp: Vec<i32> = (0..m).map(|i| mono.exponent(i) as i32 - mono.exponent(m + i) as i32).collect();
        let mut e = vec![LaurentPoly::zero(p, m); s];
        e[*pos as usize] = LaurentPoly::monomial(p, m, exp, 1);
        let mono_s = rep.format_mono(mono);
        labels.push(if mono_s == "1" {
            format!("g{pos}")
        } else {
            format!("{mono_s}*g{pos}")
        });
        vectors.push(e0.kernel_generators.apply(&e)?);
        coords.push(e);
    }
    let mut periods = [1i64; 2];
    for (d, period) in periods.iter_mut().enumerate() {
        let mut found = None;
        'search: for t in 1..=MAX_PERIOD {
            let mut shift = vec![0i32; m];
            shift[d] = t as i32;
            for e in &coords {
                let moved: Vec<LaurentPoly> = e
                    .iter()
                    .map(|f| f.shift(&shift)?.try_sub(f))
                    .collect::<Result<_>>()?;
                if !e0.basis.contains(&moved)? {
                    continue 'search;
                }
            }
            found = Some(t);
            break;
        }
        *period = found.ok_or_else(|| {
            Error::ResourceLimit(format!("translation period of the charges exceeds {MAX_PERIOD}"))
        })?;
    }
    Ok(ChargeBasis {
        labels,
        vectors,
        periods,
    })
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn combine(p: u32, m: usize, k: usize, basis: &ChargeBasis, coeffs: &[u32]) -> Result<Vec<LaurentPoly>> {
    let mut out = vec![LaurentPoly::zero(p, m); k];
    for (v, &c) in basis.vectors.iter().zip(coeffs) {
        if c == 0 {
            continue;
        }
        for (o, f) in out.iter_mut().zip(v) {
            *o = o.try_add(&f.scale(c))?;
        }
    }
    Ok(out)
}

/// Braiding data of a planar code on a basis of its point charges.
#[derive(Debug, Clone, Serialize)]
pub struct BraidingForm {
    pub p: u32,
    pub generators: Vec<String>,
    pub gram: Vec<Vec<u32>>,
    /// `θ` on each generator, then on each sum `g_i + g_j` with `i < j`.
    pub theta: Vec<u32>,
    pub theta_labels: Vec<String>,
    pub torus_size: usize,
    pub geometry: Geometry,
    pub refinement_consistent: bool,
}

impl BraidingForm {
    pub fn dim(&self) -> usize {
        self.generators.len()
    }

    pub fn is_symmetric(&self) -> bool {
        let n = self.dim();
        (0..n).all(|i| (0..n).all(|j| self.gram[i][j] == self.gram[j][i]))
    }

    pub fn is_nondegenerate(&self) -> bool {
        linalg::rank(&self.gram, self.dim(), self.p) == self.dim()
    }

    /// `θ` restricted to the generators.
    pub fn theta_on_generators(&self) -> &[u32] {
        &self.theta[..self.dim()]
    }

    /// The quadratic space whose Witt class classifies the braiding data:
    /// `θ/2` refining the braiding for `p = 2`, and `𝔓/2` for odd `p`.
    /// `None` for `p = 2` when `θ` is not `{0, 2}`-valued.
    pub fn quadratic_space(&self) -> Result<Option<QuadraticSpace>> {
        let n = self.dim();
        let p = self.p;
        if p == 2 {
            if !self.theta.iter().all(|&t| t % 2 == 0) {
                return Ok(None);
            }
            let mut mat = vec![vec![0u32; n]; n];
            for i in 0..n {
                mat[i][i] = self.theta[i] / 2;
                for j in i + 1..n {
                    mat[i][j] = self.gram[i][j];
                }
            }
            return Ok(Some(QuadraticSpace::from_residues(2, mat)));
        }
        let half = p.div_ceil(2);
        let mat = self
            .gram
            .iter()
            .map(|r| r.iter().map(|&g| mul_mod(g, half, p)).collect())
            .collect();
        Ok(Some(QuadraticSpace::from_residues(p, mat)))
    }

    /// The Witt class of [`BraidingForm::quadratic_space`].
    pub fn witt_class(&self) -> Result<Option<WittClass>> {
        match self.quadratic_space()? {
            Some(v) => v.witt_class().map(Some),
            None => Ok(None),
        }
    }
}

/// Evaluates braiding and self-statistics on the standard charge basis,
/// growing the string windows (and the torus) up to `max_doublings` times
/// when a string cannot be found.
pub fn braiding_form(code: &PauliCode, cfg: &GbConfig, max_doublings: u32) -> Result<BraidingForm> {
    let basis = charge_basis(code, cfg)?;
    let (p, m, k) = (code.modulus(), code.nvars(), code.num_generators());
    let dim = basis.vectors.len();
    let spread = column_spread(code.sigma())
        .max(spread_of(basis.vectors.iter().flatten()))
        .max(1);
    let period = basis.periods[0] * basis.periods[1] / gcd(basis.periods[0], basis.periods[1]);
    let policy = (4 * spread * (dim as i64).max(1)) as usize;

    let mut margin = spread;
    let mut last_err = None;
    for _ in 0..=max_doublings {
        let raw = 2 * margin + 2 * spread + 2;
        let geo = Geometry {
            step: (raw + period - 1) / period * period,
            margin,
        };
        let n = policy.max(geo.min_torus(spread));
        match evaluate(code, &basis, geo, n, p, m, k) {
            Err(e @ Error::NoSolution(_)) => {
                last_err = Some(e);
                margin *= 2;
            }
            other => return other,
        }
    }
    Err(Error::ResourceLimit(format!(
        "string operators not found after {max_doublings} doublings: {}",
        last_err.expect("at least one attempt")
    )))
}

fn evaluate(
    code: &PauliCode,
    basis: &ChargeBasis,
    geo: Geometry,
    n: usize,
    p: u32,
    m: usize,
    k: usize,
) -> Result<BraidingForm> {
    let inst = instantiate_torus(code, n)?;
    let dim = basis.vectors.len();
    let mut gram = vec![vec![0u32; dim]; dim];
    for i in 0..dim {
        for j in 0..dim {
            gram[i][j] = braid_phase(&inst, &basis.vectors[i], &basis.vectors[j], geo)?;
        }
    }
    let mut theta = Vec::new();
    let mut theta_labels = Vec::new();
    for i in 0..dim {
        theta.push(self_statistics(&inst, &basis.vectors[i], geo)?);
        theta_labels.push(basis.labels[i].clone());
    }
    let mut consistent = true;
    for i in 0..dim {
        for j in i + 1..dim {
            let mut coeffs = vec![0u32; dim];
            coeffs[i] = 1;
            coeffs[j] = 1;
            let sum = combine(p, m, k, basis, &coeffs)?;
            let t = self_statistics(&inst, &sum, geo)?;
            let lhs = (t + 4 * p - theta[i] - theta[j]) % (2 * p);
            consistent &= lhs == (2 * gram[i][j]) % (2 * p);
            theta.push(t);
            theta_labels.push(format!("{}+{}", basis.labels[i], basis.labels[j]));
        }
    }
    let form = BraidingForm {
        p,
        generators: basis.labels.clone(),
        gram,
        theta,
        theta_labels,
        torus_size: n,
        geometry: geo,
        refinement_consistent: consistent,
    };
    if !form.is_symmetric() || !form.is_nondegenerate() {
        return Err(Error::Precondition(
            "braiding form is degenerate or asymmetric; the charge data is inconsistent".into(),
        ));
    }
    Ok(form)
}
