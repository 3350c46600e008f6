//! Gröbner bases, normal forms, syzygies, kernels and dimension counts for
//! finitely presented modules over the Laurent ring.
//!
//! `R = F_p[x1^±..xm^±]` is presented as `S / (u_i v_i - 1)` with
//! `S = F_p[u1..um, v1..vm]`; a Laurent monomial `x^λ` maps to
//! `u^{λ+} v^{λ-}`. Every submodule computation in `S^r` adjoins the relation
//! rows `(u_i v_i - 1) e_j`, so results are statements about `R`-modules.
//!
//! Orders are fixed: degrevlex on `u1 > .. > um > v1 > .. > vm`, and
//! position-over-term on free modules with position `0` ranked highest.

mod buchberger;
mod dimension;
mod mono;

pub use dimension::FpDimension;
pub use mono::{Mono, Term, MAX_VARS};

use crate::error::{Error, Result};
use crate::ring::{LaurentMatrix, LaurentPoly};
use buchberger::Reducer;
use mono::normalize;
use serde::{Deserialize, Serialize};
use std::fmt;

/// Resource bounds for Gröbner computations. Exceeding one is reported as
/// [`Error::ResourceLimit`], never as a wrong answer.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct GbConfig {
    /// Maximum number of S-pairs reduced in one basis computation.
    pub max_spairs: usize,
    /// Maximum total degree of an S-pair lcm or a basis element.
    pub max_degree: u32,
}

impl Default for GbConfig {
    fn default() -> Self {
        Self {
            max_spairs: 2_000_000,
            max_degree: 400,
        }
    }
}

/// The polynomial presentation `S = F_p[u1..um, v1..vm]` of the Laurent ring.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PolyRep {
    pub p: u32,
    pub m: usize,
}

/// A vector of `S^r`, stored as terms sorted descending in the module order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyVector {
    pub(crate) rep: PolyRep,
    pub(crate) rank: usize,
    pub(crate) terms: Vec<Term>,
}

impl PolyVector {
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn rank(&self) -> usize {
        self.rank
    }
}

impl PolyRep {
    pub fn new(p: u32, m: usize) -> Result<Self> {
        if 2 * m > MAX_VARS {
            return Err(Error::ResourceLimit(format!(
                "{m} Laurent variables exceed the supported maximum of {}",
                MAX_VARS / 2
            )));
        }
        Ok(Self { p, m })
    }

    pub fn nvars(&self) -> usize {
        2 * self.m
    }

    /// Maps `x^λ` to `u^{λ+} v^{λ-}` coordinatewise.
    pub fn laurent_to_poly(&self, v: &[LaurentPoly]) -> Result<PolyVector> {
        let mut terms = Vec::new();
        for (pos, f) in v.iter().enumerate() {
            if f.modulus() != self.p {
                return Err(Error::ModulusMismatch(f.modulus(), self.p));
            }
            if f.nvars() != self.m {
                return Err(Error::ArityMismatch(f.nvars(), self.m));
            }
            for (e, c) in f.terms() {
                let mut exps = vec![0u32; 2 * self.m];
                for (i, &k) in e.iter().enumerate() {
                    if k >= 0 {
                        exps[i] = k as u32;
                    } else {
                        exps[self.m + i] = k.unsigned_abs();
                    }
                }
                let mono = Mono::from_exps(&exps).ok_or(Error::ExponentOverflow)?;
                terms.push(Term {
                    pos: pos as u32,
                    mono,
                    c,
                });
            }
        }
        Ok(PolyVector {
            rep: *self,
            rank: v.len(),
            terms: normalize(terms, self.p),
        })
    }

    /// Substitutes `v_i = u_i^{-1}` and reads the result back in `R^r`.
    pub fn poly_to_laurent(&self, v: &PolyVector) -> Vec<LaurentPoly> {
        let mut out = vec![LaurentPoly::zero(self.p, self.m); v.rank];
        for t in &v.terms {
            let e: Vec<i32> = (0..self.m)
                .map(|i| t.mono.e[i] as i32 - t.mono.e[self.m + i] as i32)
                .collect();
            out[t.pos as usize].add_term(e, t.c);
        }
        out
    }

    fn relation_rows(&self, rank: usize) -> Vec<Vec<Term>> {
        let mut rows = Vec::with_capacity(rank * self.m);
        for pos in 0..rank as u32 {
            for i in 0..self.m {
                let mut e = [0u32; MAX_VARS];
                e[i] = 1;
                e[self.m + i] = 1;
                let uv = Mono::from_exps(&e[..2 * self.m]).expect("small");
                rows.push(vec![
                    Term { pos, mono: uv, c: 1 },
                    Term {
                        pos,
                        mono: Mono::ONE,
                        c: self.p - 1,
                    },
                ]);
            }
        }
        rows
    }

    fn var_names(&self) -> Vec<String> {
        (1..=self.m)
            .map(|i| format!("u{i}"))
            .chain((1..=self.m).map(|i| format!("v{i}")))
            .collect()
    }

    pub fn format_mono(&self, mono: &Mono) -> String {
        let names = self.var_names();
        let parts: Vec<String> = names
            .iter()
            .enumerate()
            .filter(|(i, _)| mono.e[*i] > 0)
            .map(|(i, n)| match mono.e[i] {
                1 => n.clone(),
                k => format!("{n}^{k}"),
            })
            .collect();
        if parts.is_empty() {
            "1".into()
        } else {
            parts.join("*")
        }
    }
}

impl fmt::Display for PolyVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut coords: Vec<Vec<String>> = vec![Vec::new(); self.rank];
        for t in &self.terms {
            let m = self.rep.format_mono(&t.mono);
            let s = match (t.c, m.as_str()) {
                (c, "1") => c.to_string(),
                (1, _) => m,
                (c, _) => format!("{c}*{m}"),
            };
            coords[t.pos as usize].push(s);
        }
        let parts: Vec<String> = coords
            .into_iter()
            .map(|c| if c.is_empty() { "0".into() } else { c.join(" + ") })
            .collect();
        write!(f, "[{}]", parts.join(", "))
    }
}

/// A finitely presented module `R^rank / <generators>`; equivalently the
/// submodule spanned by the generators, depending on context.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModulePresentation {
    pub p: u32,
    pub m: usize,
    pub rank: usize,
    pub generators: Vec<Vec<LaurentPoly>>,
}

impl ModulePresentation {
    pub fn new(p: u32, m: usize, rank: usize, generators: Vec<Vec<LaurentPoly>>) -> Result<Self> {
        for g in &generators {
            if g.len() != rank {
                return Err(Error::Shape(format!(
                    "generator of length {} in a rank-{rank} module",
                    g.len()
                )));
            }
            for e in g {
                if e.modulus() != p {
                    return Err(Error::ModulusMismatch(e.modulus(), p));
                }
                if e.nvars() != m {
                    return Err(Error::ArityMismatch(e.nvars(), m));
                }
            }
        }
        Ok(Self {
            p,
            m,
            rank,
            generators,
        })
    }

    /// The submodule spanned by the columns of a matrix.
    pub fn column_span(mat: &LaurentMatrix) -> Self {
        Self {
            p: mat.modulus(),
            m: mat.nvars(),
            rank: mat.rows(),
            generators: mat.columns(),
        }
    }

    /// Generators as the columns of a `rank x n` matrix.
    pub fn to_matrix(&self) -> LaurentMatrix {
        LaurentMatrix::from_columns(self.p, self.m, self.rank, &self.generators)
            .expect("validated on construction")
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }
}

/// Reduced Gröbner basis of a submodule of `S^r` (relation rows included).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroebnerBasis {
    rep: PolyRep,
    rank: usize,
    elements: Vec<Vec<Term>>,
    by_pos: Vec<Vec<usize>>,
}

impl GroebnerBasis {
    fn from_elements(rep: PolyRep, rank: usize, elements: Vec<Vec<Term>>) -> Self {
        let mut by_pos = vec![Vec::new(); rank];
        for (i, g) in elements.iter().enumerate() {
            by_pos[g[0].pos as usize].push(i);
        }
        Self {
            rep,
            rank,
            elements,
            by_pos,
        }
    }

    pub fn rep(&self) -> PolyRep {
        self.rep
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> Vec<PolyVector> {
        self.elements
            .iter()
            .map(|e| PolyVector {
                rep: self.rep,
                rank: self.rank,
                terms: e.clone(),
            })
            .collect()
    }

    /// Leading terms `(position, monomial)` of the basis.
    pub fn leading_terms(&self) -> Vec<(u32, Mono)> {
        self.elements.iter().map(|e| (e[0].pos, e[0].mono)).collect()
    }

    fn reducer(&self) -> Reducer<'_> {
        Reducer {
            p: self.rep.p,
            polys: &self.elements,
            by_pos: &self.by_pos,
        }
    }

    /// Unique remainder of `v` modulo the submodule.
    pub fn normal_form(&self, v: &PolyVector) -> Result<PolyVector> {
        if v.rank != self.rank || v.rep != self.rep {
            return Err(Error::Shape(format!(
                "vector of rank {} against a basis of rank {}",
                v.rank, self.rank
            )));
        }
        Ok(PolyVector {
            rep: self.rep,
            rank: self.rank,
            terms: self.reducer().full_reduce(v.terms.clone()),
        })
    }

    /// Normal form of a Laurent vector, read back in `R^r`.
    pub fn normal_form_laurent(&self, v: &[LaurentPoly]) -> Result<Vec<LaurentPoly>> {
        let pv = self.rep.laurent_to_poly(v)?;
        Ok(self.rep.poly_to_laurent(&self.normal_form(&pv)?))
    }

    /// Normal form of a Laurent vector as a poly vector (standard monomials only).
    pub fn normal_form_of_laurent(&self, v: &[LaurentPoly]) -> Result<PolyVector> {
        let pv = self.rep.laurent_to_poly(v)?;
        self.normal_form(&pv)
    }

    pub fn contains(&self, v: &[LaurentPoly]) -> Result<bool> {
        Ok(self.normal_form_of_laurent(v)?.is_zero())
    }

    /// Buchberger's criterion: every S-vector reduces to zero.
    pub fn satisfies_buchberger_criterion(&self) -> bool {
        let r = self.reducer();
        for i in 0..self.elements.len() {
            for j in (i + 1)..self.elements.len() {
                if self.elements[i][0].pos != self.elements[j][0].pos {
                    continue;
                }
                let s = buchberger::s_vector(&self.elements[i], &self.elements[j], self.rep.p);
                if !r.full_reduce(s).is_empty() {
                    return false;
                }
            }
        }
        true
    }

    /// True iff no leading term divides any term of another element and all
    /// elements are monic.
    pub fn is_autoreduced(&self) -> bool {
        for (i, g) in self.elements.iter().enumerate() {
            if g[0].c != 1 {
                return false;
            }
            for (j, h) in self.elements.iter().enumerate() {
                if i == j {
                    continue;
                }
                if h.iter()
                    .any(|t| t.pos == g[0].pos && g[0].mono.divides(&t.mono))
                {
                    return false;
                }
            }
        }
        true
    }

    /// Diagnostic dump, one basis element per line.
    pub fn dump(&self) -> String {
        self.elements()
            .iter()
            .map(|e| e.to_string())
            .collect::<Vec<_>>()
            .join("\n")
    }
}

fn checked_rep(pres: &ModulePresentation) -> Result<PolyRep> {
    PolyRep::new(pres.p, pres.m)
}

/// Reduced Gröbner basis of the submodule spanned by `pres.generators` plus
/// the relation rows.
pub fn groebner(pres: &ModulePresentation, cfg: &GbConfig) -> Result<GroebnerBasis> {
    let rep = checked_rep(pres)?;
    let mut gens: Vec<Vec<Term>> = pres
        .generators
        .iter()
        .map(|g| rep.laurent_to_poly(g).map(|v| v.terms))
        .collect::<Result<_>>()?;
    gens.extend(rep.relation_rows(pres.rank));
    let elements = buchberger::reduced_basis(rep.p, pres.rank, gens, cfg)?;
    Ok(GroebnerBasis::from_elements(rep, pres.rank, elements))
}

/// Whether `v` lies in the submodule spanned by the generators.
pub fn membership(v: &[LaurentPoly], pres: &ModulePresentation, cfg: &GbConfig) -> Result<bool> {
    groebner(pres, cfg)?.contains(v)
}

/// Generators of the module of relations among `pres.generators` over `R`:
/// all `a` in `R^n` with `sum a_i g_i = 0`.
///
/// Computed from a position-over-term basis of the graph module
/// `<(g_i, e_i)>` in `S^{r+n}`: basis elements whose leading position lies in
/// the tag block have vanishing first block, and their tags span the syzygies.
pub fn syzygies(pres: &ModulePresentation, cfg: &GbConfig) -> Result<ModulePresentation> {
    let rep = checked_rep(pres)?;
    let r = pres.rank;
    let n = pres.generators.len();
    if n == 0 {
        return ModulePresentation::new(pres.p, pres.m, 0, Vec::new());
    }
    let mut gens: Vec<Vec<Term>> = Vec::with_capacity(n + (r + n) * pres.m);
    for (i, g) in pres.generators.iter().enumerate() {
        let mut t = rep.laurent_to_poly(g)?.terms;
        t.push(Term {
            pos: (r + i) as u32,
            mono: Mono::ONE,
            c: 1,
        });
        gens.push(normalize(t, rep.p));
    }
    gens.extend(rep.relation_rows(r + n));
    let basis = buchberger::reduced_basis(rep.p, r + n, gens, cfg)?;

    let mut out: Vec<Vec<LaurentPoly>> = Vec::new();
    for g in basis.iter().filter(|g| g[0].pos as usize >= r) {
        let tags: Vec<Term> = g
            .iter()
            .map(|t| Term {
                pos: t.pos - r as u32,
                ..*t
            })
            .collect();
        let v = rep.poly_to_laurent(&PolyVector {
            rep,
            rank: n,
            terms: tags,
        });
        if v.iter().all(LaurentPoly::is_zero) {
            continue;
        }
        if !out.contains(&v) {
            out.push(v);
        }
    }
    ModulePresentation::new(pres.p, pres.m, n, out)
}

/// Generators of `ker(M : R^cols -> R^rows)`.
pub fn kernel(mat: &LaurentMatrix, cfg: &GbConfig) -> Result<ModulePresentation> {
    let (p, m) = (mat.modulus(), mat.nvars());
    if mat.rows() == 0 || mat.is_zero() {
        let id = LaurentMatrix::identity(p, m, mat.cols());
        return ModulePresentation::new(p, m, mat.cols(), id.columns());
    }
    syzygies(&ModulePresentation::column_span(mat), cfg)
}

/// Krull dimension of the cokernel `R^rank / <generators>`; `-1` for the
/// zero module.
pub fn krull_dim(pres: &ModulePresentation, cfg: &GbConfig) -> Result<i32> {
    Ok(dimension::krull_dim_of(&groebner(pres, cfg)?))
}

/// `F_p`-dimension of the cokernel: the number of standard monomials.
pub fn fp_dimension(pres: &ModulePresentation, cfg: &GbConfig) -> Result<FpDimension> {
    dimension::fp_dimension_of(&groebner(pres, cfg)?)
}

#[cfg(test)]
mod tests;
