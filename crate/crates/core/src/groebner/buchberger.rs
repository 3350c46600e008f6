//! Buchberger's algorithm for submodules of `S^r` with the Gebauer–Möller
//! pair criteria. Pairs are only formed between elements whose leading terms
//! sit in the same position.

use super::mono::{cmp_terms, make_monic, sub_scaled, Mono, Term};
use super::GbConfig;
use crate::error::{Error, Result};
use crate::ring::{inv_mod, mul_mod};
use std::cmp::Ordering;

#[derive(Clone, Copy, Debug)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Mono,
    pos: u32,
}

impl Pair {
    fn key_cmp(&self, other: &Pair) -> Ordering {
        self.lcm
            .deg
            .cmp(&other.lcm.deg)
            .then_with(|| self.pos.cmp(&other.pos))
            .then_with(|| self.lcm.cmp_degrevlex(&other.lcm))
            .then_with(|| (self.i, self.j).cmp(&(other.i, other.j)))
    }
}

pub(crate) struct Reducer<'a> {
    pub p: u32,
    pub polys: &'a [Vec<Term>],
    /// Indices of reducers, grouped by leading position.
    pub by_pos: &'a [Vec<usize>],
}

impl Reducer<'_> {
    fn find(&self, t: &Term) -> Option<usize> {
        let bucket = self.by_pos.get(t.pos as usize)?;
        bucket
            .iter()
            .copied()
            .find(|&k| self.polys[k][0].mono.divides(&t.mono))
    }

    /// Reduces only until the leading term is irreducible.
    pub fn top_reduce(&self, mut f: Vec<Term>) -> Vec<Term> {
        while let Some(lt) = f.first().copied() {
            match self.find(&lt) {
                Some(k) => {
                    let g = &self.polys[k];
                    let q = g[0].mono.quotient(&lt.mono);
                    let c = mul_mod(lt.c, inv_mod(g[0].c, self.p), self.p);
                    f = sub_scaled(&f, c, &q, g, self.p);
                }
                None => break,
            }
        }
        f
    }

    /// Full reduction of every term.
    pub fn full_reduce(&self, f: Vec<Term>) -> Vec<Term> {
        let mut out = Vec::new();
        let mut rem = f;
        let mut off = 0;
        while off < rem.len() {
            let lt = rem[off];
            match self.find(&lt) {
                Some(k) => {
                    let g = &self.polys[k];
                    let q = g[0].mono.quotient(&lt.mono);
                    let c = mul_mod(lt.c, inv_mod(g[0].c, self.p), self.p);
                    rem = sub_scaled(&rem[off..], c, &q, g, self.p);
                    off = 0;
                }
                None => {
                    out.push(lt);
                    off += 1;
                }
            }
        }
        out
    }
}

/// S-vector of two elements whose leading terms share a position.
pub(crate) fn s_vector(f: &[Term], g: &[Term], p: u32) -> Vec<Term> {
    let lcm = f[0].mono.lcm(&g[0].mono);
    let qf = f[0].mono.quotient(&lcm);
    let qg = g[0].mono.quotient(&lcm);
    // cf * qf * f - cg * qg * g with leading coefficients cancelling
    let inv_f = inv_mod(f[0].c, p);
    let scaled_f: Vec<Term> = f
        .iter()
        .map(|t| Term {
            pos: t.pos,
            mono: qf.mul(&t.mono),
            c: mul_mod(t.c, inv_f, p),
        })
        .collect();
    let cg = inv_mod(g[0].c, p);
    sub_scaled(&scaled_f, cg, &qg, g, p)
}

/// Computes the reduced Gröbner basis of the submodule generated by `gens`
/// in a free module of the given rank.
pub(crate) fn reduced_basis(
    p: u32,
    rank: usize,
    gens: Vec<Vec<Term>>,
    cfg: &GbConfig,
) -> Result<Vec<Vec<Term>>> {
    let mut polys: Vec<Vec<Term>> = Vec::new();
    let mut active: Vec<bool> = Vec::new();
    let mut by_pos: Vec<Vec<usize>> = vec![Vec::new(); rank];
    let mut pairs: Vec<Pair> = Vec::new();

    // Seed: interreduce generators one by one through the update procedure.
    let mut seeds: Vec<Vec<Term>> = gens.into_iter().filter(|g| !g.is_empty()).collect();
    seeds.sort_by(|a, b| cmp_terms(&a[0], &b[0]).reverse());
    let mut processed = 0usize;

    let mut queue_seed = seeds.into_iter().rev().collect::<Vec<_>>();
    loop {
        let next: Option<Vec<Term>> = if let Some(s) = queue_seed.pop() {
            Some(s)
        } else if !pairs.is_empty() {
            let best = (0..pairs.len())
                .min_by(|&a, &b| pairs[a].key_cmp(&pairs[b]))
                .expect("non-empty");
            let pr = pairs.swap_remove(best);
            processed += 1;
            if processed > cfg.max_spairs {
                return Err(Error::ResourceLimit(format!(
                    "more than {} S-pairs",
                    cfg.max_spairs
                )));
            }
            if pr.lcm.deg > cfg.max_degree {
                return Err(Error::ResourceLimit(format!(
                    "S-pair degree {} above limit {}",
                    pr.lcm.deg, cfg.max_degree
                )));
            }
            Some(s_vector(&polys[pr.i], &polys[pr.j], p))
        } else {
            None
        };
        let Some(f) = next else { break };

        let reducer = Reducer {
            p,
            polys: &polys,
            by_pos: &by_pos,
        };
        let mut h = reducer.top_reduce(f);
        if h.is_empty() {
            continue;
        }
        h = reducer.full_reduce(h);
        make_monic(&mut h, p);
        if h[0].mono.deg > cfg.max_degree {
            return Err(Error::ResourceLimit(format!(
                "basis element of degree {} above limit {}",
                h[0].mono.deg, cfg.max_degree
            )));
        }

        let t = polys.len();
        let hpos = h[0].pos;
        let hlead = h[0].mono;
        polys.push(h);
        active.push(true);

        // Gebauer–Möller update.
        let mut cand: Vec<Pair> = by_pos[hpos as usize]
            .iter()
            .map(|&i| Pair {
                i,
                j: t,
                lcm: polys[i][0].mono.lcm(&hlead),
                pos: hpos,
            })
            .collect();
        let mut kept: Vec<Pair> = Vec::new();
        while let Some(pc) = cand.pop() {
            let dominated = cand
                .iter()
                .chain(kept.iter())
                .any(|o| o.lcm.divides(&pc.lcm));
            if !dominated {
                kept.push(pc);
            }
        }
        pairs.retain(|pr| {
            if pr.pos != hpos || !hlead.divides(&pr.lcm) {
                return true;
            }
            let li = polys[pr.i][0].mono.lcm(&hlead);
            let lj = polys[pr.j][0].mono.lcm(&hlead);
            li == pr.lcm || lj == pr.lcm
        });
        pairs.extend(kept);
        let bucket = &mut by_pos[hpos as usize];
        bucket.retain(|&i| {
            let keep = !hlead.divides(&polys[i][0].mono);
            if !keep {
                active[i] = false;
            }
            keep
        });
        bucket.push(t);
    }

    // Interreduce the surviving leading-term-minimal elements.
    let mut minimal: Vec<usize> = (0..polys.len()).filter(|&i| active[i]).collect();
    minimal.sort_by(|&a, &b| cmp_terms(&polys[a][0], &polys[b][0]));
    let mut result: Vec<Vec<Term>> = Vec::with_capacity(minimal.len());
    let all: Vec<Vec<Term>> = minimal.iter().map(|&i| polys[i].clone()).collect();
    for k in 0..all.len() {
        let mut others_by_pos: Vec<Vec<usize>> = vec![Vec::new(); rank];
        for (i, g) in all.iter().enumerate() {
            if i != k {
                others_by_pos[g[0].pos as usize].push(i);
            }
        }
        let reducer = Reducer {
            p,
            polys: &all,
            by_pos: &others_by_pos,
        };
        let lead = all[k][0];
        let tail = reducer.full_reduce(all[k][1..].to_vec());
        let mut v = Vec::with_capacity(tail.len() + 1);
        v.push(lead);
        v.extend(tail);
        make_monic(&mut v, p);
        result.push(v);
    }
    result.sort_by(|a, b| cmp_terms(&a[0], &b[0]).reverse());
    Ok(result)
}
