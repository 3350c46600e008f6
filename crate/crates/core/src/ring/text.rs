//! Canonical textual form: terms in ascending lexicographic exponent order,
//! e.g. `x^-1 + 1 + 2*x*y^3`. Variables are `x, y, z` when `m <= 3`, otherwise
//! `x1 .. xm`.

use super::{check_prime, reduce_i64, LaurentPoly};
use crate::error::{Error, Result};
use std::fmt;

pub(crate) fn var_names(m: usize) -> Vec<String> {
    if m <= 3 {
        ["x", "y", "z"][..m].iter().map(|s| s.to_string()).collect()
    } else {
        (1..=m).map(|i| format!("x{i}")).collect()
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let names = var_names(self.nvars());
        let mut first = true;
        for (e, c) in self.terms() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let mut factors: Vec<String> = Vec::new();
            for (name, &k) in names.iter().zip(e) {
                match k {
                    0 => {}
                    1 => factors.push(name.clone()),
                    _ => factors.push(format!("{name}^{k}")),
                }
            }
            if factors.is_empty() {
                write!(f, "{c}")?;
            } else if c == 1 {
                write!(f, "{}", factors.join("*"))?;
            } else {
                write!(f, "{c}*{}", factors.join("*"))?;
            }
        }
        Ok(())
    }
}

impl LaurentPoly {
    /// Parses the canonical textual form (also accepts `-` between terms,
    /// arbitrary term order and repeated factors).
    pub fn parse(p: u64, m: usize, s: &str) -> Result<Self> {
        let p = check_prime(p)?;
        let names = var_names(m);
        let mut out = LaurentPoly::zero(p, m);
        let s = s.trim();
        if s.is_empty() {
            return Err(Error::Parse("empty polynomial".into()));
        }
        // Split into signed terms.
        let mut terms: Vec<(bool, String)> = Vec::new();
        let mut cur = String::new();
        let mut neg = false;
        let mut prev_caret = false;
        for ch in s.chars() {
            if ch.is_whitespace() {
                continue;
            }
            if (ch == '+' || ch == '-') && !prev_caret {
                if !cur.is_empty() {
                    terms.push((neg, std::mem::take(&mut cur)));
                } else if ch == '+' && !terms.is_empty() {
                    return Err(Error::Parse(format!("dangling operator in {s:?}")));
                }
                neg = ch == '-';
                prev_caret = false;
                continue;
            }
            prev_caret = ch == '^';
            cur.push(ch);
        }
        if cur.is_empty() {
            return Err(Error::Parse(format!("trailing operator in {s:?}")));
        }
        terms.push((neg, cur));

        for (neg, t) in terms {
            let mut coeff: i64 = 1;
            let mut exp = vec![0i32; m];
            for factor in t.split('*') {
                if factor.is_empty() {
                    return Err(Error::Parse(format!("empty factor in {t:?}")));
                }
                if factor.chars().all(|c| c.is_ascii_digit()) {
                    let v: i64 = factor
                        .parse()
                        .map_err(|_| Error::Parse(format!("bad coefficient {factor:?}")))?;
                    coeff = coeff * reduce_i64(v, p) as i64 % p as i64;
                    continue;
                }
                let (name, power) = match factor.split_once('^') {
                    Some((n, k)) => (
                        n,
                        k.parse::<i32>()
                            .map_err(|_| Error::Parse(format!("bad exponent in {factor:?}")))?,
                    ),
                    None => (factor, 1),
                };
                let idx = names
                    .iter()
                    .position(|n| n == name)
                    .ok_or_else(|| Error::Parse(format!("unknown variable {name:?}")))?;
                exp[idx] = exp[idx].checked_add(power).ok_or(Error::ExponentOverflow)?;
            }
            let c = if neg { -coeff } else { coeff };
            out.add_term(exp, reduce_i64(c, p));
        }
        Ok(out)
    }
}
