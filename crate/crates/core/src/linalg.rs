//! Dense linear algebra over `Z/p`. Matrices are row vectors of reduced
//! residues.

use crate::ring::{inv_mod, mul_mod, sub_mod};

pub(crate) type Mat = Vec<Vec<u32>>;

/// In-place reduced row echelon form; returns the pivot columns.
pub(crate) fn rref(a: &mut Mat, ncols: usize, p: u32) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..ncols {
        if row == a.len() {
            break;
        }
        let Some(sel) = (row..a.len()).find(|&r| a[r][col] != 0) else {
            continue;
        };
        a.swap(row, sel);
        let inv = inv_mod(a[row][col], p);
        if inv != 1 {
            for v in a[row][col..].iter_mut() {
                *v = mul_mod(*v, inv, p);
            }
        }
        let pivot_row = std::mem::take(&mut a[row]);
        for (r, other) in a.iter_mut().enumerate() {
            if r == row {
                continue;
            }
            let f = other[col];
            if f == 0 {
                continue;
            }
            for (o, &pv) in other[col..].iter_mut().zip(&pivot_row[col..]) {
                if pv != 0 {
                    *o = sub_mod(*o, mul_mod(f, pv, p), p);
                }
            }
        }
        a[row] = pivot_row;
        pivots.push(col);
        row += 1;
    }
    a.truncate(row);
    pivots
}

pub(crate) fn rank(a: &Mat, ncols: usize, p: u32) -> usize {
    let mut b = a.clone();
    rref(&mut b, ncols, p).len()
}

/// Basis of `{x : A x = 0}`.
pub(crate) fn nullspace(a: &Mat, ncols: usize, p: u32) -> Mat {
    let mut b = a.clone();
    let pivots = rref(&mut b, ncols, p);
    let mut is_pivot = vec![false; ncols];
    for &c in &pivots {
        is_pivot[c] = true;
    }
    let mut out = Vec::new();
    for free in (0..ncols).filter(|&c| !is_pivot[c]) {
        let mut v = vec![0u32; ncols];
        v[free] = 1;
        for (r, &pc) in pivots.iter().enumerate() {
            v[pc] = sub_mod(0, b[r][free], p);
        }
        out.push(v);
    }
    out
}

/// Some solution of `A x = rhs`, if one exists.
pub(crate) fn solve(a: &Mat, rhs: &[u32], ncols: usize, p: u32) -> Option<Vec<u32>> {
    let mut aug: Mat = a
        .iter()
        .zip(rhs)
        .map(|(row, &b)| {
            let mut r = row.clone();
            r.push(b);
            r
        })
        .collect();
    let pivots = rref(&mut aug, ncols + 1, p);
    if pivots.last() == Some(&ncols) {
        return None;
    }
    let mut x = vec![0u32; ncols];
    for (r, &pc) in pivots.iter().enumerate() {
        x[pc] = aug[r][ncols];
    }
    Some(x)
}

/// A maximal linearly independent subset, in input order.
pub(crate) fn independent_subset(vectors: &[Vec<u32>], p: u32) -> Vec<usize> {
    let mut basis: Mat = Vec::new();
    let mut chosen = Vec::new();
    for (i, v) in vectors.iter().enumerate() {
        let mut trial = basis.clone();
        trial.push(v.clone());
        if rank(&trial, v.len(), p) > basis.len() {
            basis = trial;
            chosen.push(i);
        }
    }
    chosen
}

pub(crate) fn mat_vec(a: &Mat, v: &[u32], p: u32) -> Vec<u32> {
    a.iter().map(|row| dot(row, v, p)).collect()
}

pub(crate) fn dot(a: &[u32], b: &[u32], p: u32) -> u32 {
    let s: u64 = a
        .iter()
        .zip(b)
        .map(|(&x, &y)| x as u64 * y as u64 % p as u64)
        .sum();
    (s % p as u64) as u32
}

pub(crate) fn transpose(a: &Mat, ncols: usize) -> Mat {
    (0..ncols).map(|j| a.iter().map(|r| r[j]).collect()).collect()
}

pub(crate) fn mat_mul(a: &Mat, b: &Mat, bcols: usize, p: u32) -> Mat {
    let bt = transpose(b, bcols);
    a.iter()
        .map(|r| bt.iter().map(|c| dot(r, c, p)).collect())
        .collect()
}
