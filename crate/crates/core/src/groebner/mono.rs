//! Monomials, module terms and sparse module vectors over `F_p[u1..um, v1..vm]`.

use crate::ring::{inv_mod, mul_mod, sub_mod};
use std::cmp::Ordering;

/// Upper bound on the number of polynomial variables (`2m`).
pub const MAX_VARS: usize = 12;

/// A monomial in at most [`MAX_VARS`] variables; unused slots stay zero.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Mono {
    pub(crate) deg: u32,
    pub(crate) e: [u16; MAX_VARS],
}

impl Mono {
    pub const ONE: Mono = Mono {
        deg: 0,
        e: [0; MAX_VARS],
    };

    pub(crate) fn from_exps(exps: &[u32]) -> Option<Mono> {
        let mut e = [0u16; MAX_VARS];
        let mut deg = 0u32;
        for (slot, &v) in e.iter_mut().zip(exps) {
            *slot = u16::try_from(v).ok()?;
            deg += v;
        }
        Some(Mono { deg, e })
    }

    pub fn degree(&self) -> u32 {
        self.deg
    }

    pub fn exponent(&self, i: usize) -> u16 {
        self.e[i]
    }

    #[inline]
    pub(crate) fn divides(&self, other: &Mono) -> bool {
        self.deg <= other.deg && self.e.iter().zip(&other.e).all(|(a, b)| a <= b)
    }

    /// `other / self`, assuming divisibility.
    #[inline]
    pub(crate) fn quotient(&self, other: &Mono) -> Mono {
        let mut e = [0u16; MAX_VARS];
        for i in 0..MAX_VARS {
            e[i] = other.e[i] - self.e[i];
        }
        Mono {
            deg: other.deg - self.deg,
            e,
        }
    }

    #[inline]
    pub(crate) fn mul(&self, other: &Mono) -> Mono {
        let mut e = [0u16; MAX_VARS];
        for i in 0..MAX_VARS {
            e[i] = self.e[i] + other.e[i];
        }
        Mono {
            deg: self.deg + other.deg,
            e,
        }
    }

    pub(crate) fn lcm(&self, other: &Mono) -> Mono {
        let mut e = [0u16; MAX_VARS];
        let mut deg = 0;
        for i in 0..MAX_VARS {
            e[i] = self.e[i].max(other.e[i]);
            deg += e[i] as u32;
        }
        Mono { deg, e }
    }

    /// Bit set of variables with nonzero exponent.
    pub(crate) fn support(&self) -> u32 {
        let mut s = 0;
        for (i, &v) in self.e.iter().enumerate() {
            if v > 0 {
                s |= 1 << i;
            }
        }
        s
    }

    /// Degree-reverse-lexicographic comparison.
    #[inline]
    pub fn cmp_degrevlex(&self, other: &Mono) -> Ordering {
        match self.deg.cmp(&other.deg) {
            Ordering::Equal => {}
            o => return o,
        }
        for i in (0..MAX_VARS).rev() {
            match self.e[i].cmp(&other.e[i]) {
                Ordering::Equal => continue,
                Ordering::Less => return Ordering::Greater,
                Ordering::Greater => return Ordering::Less,
            }
        }
        Ordering::Equal
    }
}

/// A term `c * mono * e_pos` of a free module.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Term {
    pub pos: u32,
    pub mono: Mono,
    pub c: u32,
}

/// Position-over-term order: lower position index ranks higher, then degrevlex.
#[inline]
pub fn cmp_pot(a_pos: u32, a: &Mono, b_pos: u32, b: &Mono) -> Ordering {
    match b_pos.cmp(&a_pos) {
        Ordering::Equal => a.cmp_degrevlex(b),
        o => o,
    }
}

#[inline]
pub(crate) fn cmp_terms(a: &Term, b: &Term) -> Ordering {
    cmp_pot(a.pos, &a.mono, b.pos, &b.mono)
}

/// Sorts terms descending and merges duplicates.
pub(crate) fn normalize(mut terms: Vec<Term>, p: u32) -> Vec<Term> {
    terms.sort_by(|a, b| cmp_terms(b, a));
    let mut out: Vec<Term> = Vec::with_capacity(terms.len());
    for t in terms {
        if let Some(last) = out.last_mut() {
            if last.pos == t.pos && last.mono == t.mono {
                last.c = (last.c + t.c) % p;
                if last.c == 0 {
                    out.pop();
                }
                continue;
            }
        }
        if t.c % p != 0 {
            out.push(Term { c: t.c % p, ..t });
        }
    }
    out
}

/// `a - c * mono * b`, both inputs sorted descending.
pub(crate) fn sub_scaled(a: &[Term], c: u32, mono: &Mono, b: &[Term], p: u32) -> Vec<Term> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        if j == b.len() {
            out.extend_from_slice(&a[i..]);
            break;
        }
        let bm = mono.mul(&b[j].mono);
        let bc = mul_mod(b[j].c, c, p);
        if i == a.len() {
            out.push(Term {
                pos: b[j].pos,
                mono: bm,
                c: sub_mod(0, bc, p),
            });
            j += 1;
            continue;
        }
        match cmp_pot(a[i].pos, &a[i].mono, b[j].pos, &bm) {
            Ordering::Greater => {
                out.push(a[i]);
                i += 1;
            }
            Ordering::Less => {
                out.push(Term {
                    pos: b[j].pos,
                    mono: bm,
                    c: sub_mod(0, bc, p),
                });
                j += 1;
            }
            Ordering::Equal => {
                let v = sub_mod(a[i].c, bc, p);
                if v != 0 {
                    out.push(Term { c: v, ..a[i] });
                }
                i += 1;
                j += 1;
            }
        }
    }
    out
}

pub(crate) fn make_monic(v: &mut [Term], p: u32) {
    if let Some(lead) = v.first() {
        if lead.c != 1 {
            let inv = inv_mod(lead.c, p);
            for t in v.iter_mut() {
                t.c = mul_mod(t.c, inv, p);
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mono(e: &[u32]) -> Mono {
        Mono::from_exps(e).unwrap()
    }

    #[test]
    fn degrevlex_order() {
        // degree dominates
        assert_eq!(mono(&[0, 2]).cmp_degrevlex(&mono(&[1, 0])), Ordering::Greater);
        // x1^2 > x1 x2 > x2^2 in degrevlex
        assert_eq!(mono(&[2, 0]).cmp_degrevlex(&mono(&[1, 1])), Ordering::Greater);
        assert_eq!(mono(&[1, 1]).cmp_degrevlex(&mono(&[0, 2])), Ordering::Greater);
        // x1 x3 < x2^2 in degrevlex (3 vars)
        assert_eq!(mono(&[1, 0, 1]).cmp_degrevlex(&mono(&[0, 2, 0])), Ordering::Less);
    }

    #[test]
    fn pot_ranks_lower_positions_higher() {
        assert_eq!(cmp_pot(0, &Mono::ONE, 1, &mono(&[5])), Ordering::Greater);
    }

    #[test]
    fn subtraction_cancels() {
        let p = 3;
        let a = normalize(
            vec![
                Term { pos: 0, mono: mono(&[1]), c: 1 },
                Term { pos: 0, mono: Mono::ONE, c: 2 },
            ],
            p,
        );
        let r = sub_scaled(&a, 1, &Mono::ONE, &a, p);
        assert!(r.is_empty());
    }
}
