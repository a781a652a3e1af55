//! Small dense solver for `A v = b` over a coefficient field.

use crate::scalar::{Field, Scalar};

/// Solution set `particular + span(kernel)`.
#[derive(Debug, Clone)]
pub(crate) struct AffineSolution {
    pub particular: Vec<Scalar>,
    pub kernel: Vec<Vec<Scalar>>,
}

/// Solves `a * v = b` where `a` has `ncols` columns. `None` when inconsistent.
pub(crate) fn solve_affine(field: Field, a: &[Vec<Scalar>], ncols: usize, b: &[Scalar]) -> Option<AffineSolution> {
    let zero = field.zero();
    let mut m: Vec<Vec<Scalar>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..m.len()).find(|&k| !m[k][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].inv();
        for x in m[r].iter_mut() {
            *x = x.mul(&inv);
        }
        let pivot = m[r].clone();
        for (k, row) in m.iter_mut().enumerate() {
            if k != r && !row[c].is_zero() {
                let f = row[c].clone();
                for (x, y) in row[c..].iter_mut().zip(&pivot[c..]) {
                    *x = x.sub(&y.mul(&f));
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    if m[r..].iter().any(|row| !row[ncols].is_zero()) {
        return None;
    }
    let mut particular = vec![zero.clone(); ncols];
    for (row, &c) in pivots.iter().enumerate() {
        particular[c] = m[row][ncols].clone();
    }
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    let kernel = free
        .iter()
        .map(|&f| {
            let mut v = vec![zero.clone(); ncols];
            v[f] = field.one();
            for (row, &c) in pivots.iter().enumerate() {
                v[c] = m[row][f].neg();
            }
            v
        })
        .collect();
    Some(AffineSolution { particular, kernel })
}
