#![allow(dead_code)]

use artin_lab::series::{ExtOrder, Monomial, Ring, TruncatedSeries};
use artin_lab::Scalar;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

/// Exponent vectors of total degree `d` in `n` variables.
pub fn exponents_of_degree(n: usize, d: u32) -> Vec<Vec<u32>> {
    if n == 0 {
        return if d == 0 { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    for first in (0..=d).rev() {
        for mut rest in exponents_of_degree(n - 1, d - first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// Exponent vectors of total degree in `lo..=hi`.
pub fn exponents_in_range(n: usize, lo: u32, hi: u32) -> Vec<Vec<u32>> {
    (lo..=hi).flat_map(|d| exponents_of_degree(n, d)).collect()
}

pub fn mono(ring: &Ring, e: &[u32]) -> TruncatedSeries {
    TruncatedSeries::monomial(ring, Monomial::new(e.to_vec()), ring.field().one())
}

/// Random series with 1..=max_terms terms of degree in `lo..=hi`, small coefficients.
pub fn random_series(rng: &mut ChaCha8Rng, ring: &Ring, lo: u32, hi: u32, max_terms: usize) -> TruncatedSeries {
    let pool = exponents_in_range(ring.num_vars(), lo, hi.min(ring.trunc()));
    let field = ring.field();
    let count = rng.gen_range(1..=max_terms);
    let terms = (0..count).map(|_| {
        let e = pool[rng.gen_range(0..pool.len())].clone();
        let mut c = 0;
        while c == 0 {
            c = rng.gen_range(-3i64..=3);
        }
        (Monomial::new(e), field.from_i64(c))
    });
    TruncatedSeries::from_terms(ring, terms)
}

/// Dense Gaussian elimination: is `target` in the span of `rows`? All vectors have equal length.
pub fn in_span(rows: &[Vec<Scalar>], target: &[Scalar]) -> bool {
    let mut basis: Vec<(usize, Vec<Scalar>)> = Vec::new();
    let reduce = |v: &mut Vec<Scalar>, basis: &[(usize, Vec<Scalar>)]| {
        for (p, b) in basis {
            if !v[*p].is_zero() {
                let c = v[*p].clone();
                for (x, y) in v.iter_mut().zip(b) {
                    *x = x.sub(&c.mul(y));
                }
            }
        }
    };
    for r in rows {
        let mut v = r.clone();
        reduce(&mut v, &basis);
        if let Some(p) = v.iter().position(|x| !x.is_zero()) {
            let inv = v[p].inv();
            for x in v.iter_mut() {
                *x = x.mul(&inv);
            }
            for (_, b) in basis.iter_mut() {
                if !b[p].is_zero() {
                    let c = b[p].clone();
                    for (x, y) in b.iter_mut().zip(&v) {
                        *x = x.sub(&c.mul(y));
                    }
                }
            }
            basis.push((p, v));
        }
    }
    let mut t = target.to_vec();
    reduce(&mut t, &basis);
    t.iter().all(|x| x.is_zero())
}

fn dense_below(s: &TruncatedSeries, cols: &[Vec<u32>]) -> Vec<Scalar> {
    cols.iter().map(|e| s.coeff(&Monomial::new(e.clone()))).collect()
}

/// `max { n <= D+1 : x in I + m^n }` by dense linear algebra on the
/// coefficients of degree `< n`; `AtLeast(D+1)` when `x in I + m^(D+1)`.
pub fn nu_oracle(gens: &[TruncatedSeries], x: &TruncatedSeries) -> ExtOrder {
    let ring = x.ring();
    let d = ring.trunc();
    let nv = ring.num_vars();
    let member = |n: u32| -> bool {
        if n == 0 {
            return true;
        }
        let cols = exponents_in_range(nv, 0, n - 1);
        let shifts = exponents_in_range(nv, 0, n - 1);
        let rows: Vec<Vec<Scalar>> = gens
            .iter()
            .flat_map(|g| {
                shifts
                    .iter()
                    .map(|e| dense_below(&g.mul_monomial(&Monomial::new(e.clone())), &cols))
            })
            .collect();
        in_span(&rows, &dense_below(x, &cols))
    };
    let mut n = 0;
    while n <= d && member(n + 1) {
        n += 1;
    }
    if n == d + 1 {
        ExtOrder::AtLeast(d + 1)
    } else {
        ExtOrder::Exact(n)
    }
}
