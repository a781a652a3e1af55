//! Approximate solutions of `X1 X2 - X3 X4` far from every exact solution,
//! and the exhaustive check that `T1 T2 - T3^i` stays irreducible mod `m^(i+1)`.

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::scalar::{Field, Scalar};
use crate::series::{monomials_in_range, ExtOrder, Monomial, Ring, RingSpec, TruncatedSeries};

#[derive(Debug, Clone, Serialize)]
pub struct WitnessFamily {
    pub i: u32,
    pub x1: TruncatedSeries,
    pub x2: TruncatedSeries,
    pub x3: TruncatedSeries,
    pub x4: TruncatedSeries,
    /// `x1 x2 - x3 x4`.
    pub residual: TruncatedSeries,
    pub residual_order: ExtOrder,
    pub residual_is_t3_power: bool,
    /// `x3 = T1 T2 mod m^i`.
    pub x3_congruent: bool,
    /// `T1 T2` does not divide the initial form of `x1`.
    pub x1_initial_not_divisible: bool,
    /// `k` in `1..=i` with `C(i,k) = 0` in the coefficient field.
    pub vanishing_binomials: Vec<u32>,
}

fn binomial(n: u64, k: u64) -> num_bigint::BigInt {
    let mut acc = num_bigint::BigInt::from(1);
    for j in 0..k {
        acc = acc * (n - j) / (j + 1);
    }
    acc
}

/// `x1 = T1^i`, `x2 = T2^i`, `x3 = T1 T2 - T3^i` and
/// `x4 = sum_{k=1..i} C(i,k) x3^(k-1) T3^(i(i-k))`, so that
/// `x1 x2 - x3 x4 = T3^(i^2)`.
pub fn monomial_witness_family(i: u32, ring: &Ring) -> Result<WitnessFamily> {
    if ring.num_vars() < 3 {
        return Err(Error::InvalidRing(
            "the witness family needs at least 3 variables".into(),
        ));
    }
    if i == 0 {
        return Err(Error::OutOfRange {
            what: "witness level i",
            value: 0,
            lo: 1,
            hi: i64::MAX,
        });
    }
    let d = ring.trunc();
    let sq = i as u64 * i as u64;
    if sq > d as u64 {
        return Err(Error::TruncationTooSmall { needed: sq, trunc: d });
    }
    let field = ring.field();
    let nv = ring.num_vars();
    let mono = |v: usize, e: u32| TruncatedSeries::monomial(ring, Monomial::var(nv, v, e), field.one());
    let x1 = mono(0, i);
    let x2 = mono(1, i);
    let t1t2 = mono(0, 1).mul(&mono(1, 1))?;
    let x3 = t1t2.sub(&mono(2, i))?;
    let mut x4 = TruncatedSeries::zero(ring);
    let mut vanishing = Vec::new();
    let mut x3_pow = TruncatedSeries::one(ring);
    for k in 1..=i {
        let c = field.from_bigint(&binomial(i as u64, k as u64));
        if c.is_zero() {
            vanishing.push(k);
        }
        x4 = x4.add(&x3_pow.mul(&mono(2, i * (i - k)))?.scale(&c))?;
        x3_pow = x3_pow.mul(&x3)?;
    }
    let residual = x1.mul(&x2)?.sub(&x3.mul(&x4)?)?;
    let residual_order = residual.ord();
    let residual_is_t3_power = residual == mono(2, i * i);
    let x3_congruent = x3.sub(&t1t2)?.ord().at_least(i);
    let x1_initial_not_divisible = x1
        .initial_form()?
        .div_monomial(&Monomial::new({
            let mut e = vec![0; nv];
            e[0] = 1;
            e[1] = 1;
            e
        }))
        .is_none();
    Ok(WitnessFamily {
        i,
        x1,
        x2,
        x3,
        x4,
        residual,
        residual_order,
        residual_is_t3_power,
        x3_congruent,
        x1_initial_not_divisible,
        vanishing_binomials: vanishing,
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct IrreducibilityCertificate {
    pub i: u32,
    pub p: u32,
    pub search_space_size: u64,
    pub factorizations_found: u64,
    /// First factorization in enumeration order, if any.
    pub counterexample: Option<(TruncatedSeries, TruncatedSeries)>,
    pub method: String,
}

/// Enumerates all pairs of non-units `x, y` of `F_p[[T1,T2,T3]]` modulo the
/// parts that cannot reach degree `i`, counting `x y = T1 T2 - T3^i mod m^(i+1)`.
pub fn irreducibility_exhaustive(i: u32, p: u32, budget: u64) -> Result<IrreducibilityCertificate> {
    factor_search(i, p, &format!("T1*T2 - T3^{i}"), budget)
}

fn factor_search(i: u32, p: u32, target: &str, budget: u64) -> Result<IrreducibilityCertificate> {
    if i == 0 {
        return Err(Error::OutOfRange {
            what: "irreducibility level i",
            value: 0,
            lo: 1,
            hi: i64::MAX,
        });
    }
    if p == 0 {
        return Err(Error::precondition("exhaustive search needs a prime characteristic"));
    }
    let field = Field::from_characteristic(p)?;
    let ring = RingSpec::standard(3, field, i)?;
    let basis = ring.basis();
    let cand = monomials_in_range(3, 1, i.saturating_sub(1));
    let c = cand.len() as u32;
    let space = (p as u64)
        .checked_pow(2 * c)
        .filter(|s| *s <= budget)
        .ok_or_else(|| Error::BudgetExceeded {
            space: format!("{p}^{}", 2 * c),
            budget,
        })?;
    let per = (p as u64).pow(c);
    // product table on candidate indices, into the degree <= i basis
    let table: Vec<Vec<Option<usize>>> = cand
        .iter()
        .map(|a| {
            cand.iter()
                .map(|b| {
                    let m = a.mul(b);
                    (m.degree() <= i).then(|| basis.index_of(&m).unwrap())
                })
                .collect()
        })
        .collect();
    let x3 = {
        let t = crate::parse::parse_poly(target, &ring)?;
        let mut v = vec![0u64; basis.len()];
        for (m, s) in t.terms() {
            if let Scalar::Modular { value, .. } = s {
                v[basis.index_of(m).unwrap()] = *value as u64;
            }
        }
        v
    };
    let pp = p as u64;
    let digits = |mut code: u64| -> Vec<u64> {
        (0..c)
            .map(|_| {
                let d = code % pp;
                code /= pp;
                d
            })
            .collect()
    };
    let hits: Vec<(u64, u64)> = (0..per)
        .into_par_iter()
        .flat_map_iter(|xc| {
            let xd = digits(xc);
            let mut prod = vec![0u64; basis.len()];
            let mut found = Vec::new();
            for yc in 0..per {
                let yd = digits(yc);
                prod.iter_mut().for_each(|v| *v = 0);
                for (a, xa) in xd.iter().enumerate() {
                    if *xa == 0 {
                        continue;
                    }
                    for (b, yb) in yd.iter().enumerate() {
                        if let (Some(k), true) = (table[a][b], *yb != 0) {
                            prod[k] = (prod[k] + xa * yb) % pp;
                        }
                    }
                }
                if prod == x3 {
                    found.push((xc, yc));
                }
            }
            found
        })
        .collect();
    let to_series = |code: u64| {
        let terms: Vec<_> = cand
            .iter()
            .zip(digits(code))
            .filter(|(_, d)| *d != 0)
            .map(|(m, d)| (m.clone(), field.from_i64(d as i64)))
            .collect();
        TruncatedSeries::from_terms(&ring, terms)
    };
    Ok(IrreducibilityCertificate {
        i,
        p,
        search_space_size: space,
        factorizations_found: hits.len() as u64,
        counterexample: hits.first().map(|&(x, y)| (to_series(x), to_series(y))),
        method: format!(
            "exhaustive over pairs of non-units given by their homogeneous parts of degree 1..{} over GF({p})",
            i.saturating_sub(1)
        ),
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct LowerBoundLevel {
    pub i: u32,
    pub residual_order: ExtOrder,
    pub lower_bound: u64,
    pub irreducibility: Vec<IrreducibilityCertificate>,
    /// Primes skipped because their search space exceeded the budget.
    pub skipped_primes: Vec<u32>,
    pub certified: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct LowerBoundReport {
    pub levels: Vec<LowerBoundLevel>,
    pub statement: String,
}

/// For each `i <= i_max`: the witness family and, where the budget allows,
/// irreducibility certificates over the given primes.
pub fn lower_bound_certificate(i_max: u32, ring: &Ring, primes: &[u32], budget: u64) -> Result<LowerBoundReport> {
    let mut levels = Vec::new();
    for i in 1..=i_max {
        let fam = monomial_witness_family(i, ring)?;
        let mut certs = Vec::new();
        let mut skipped = Vec::new();
        for &p in primes {
            match irreducibility_exhaustive(i, p, budget) {
                Ok(c) => certs.push(c),
                Err(Error::BudgetExceeded { .. }) => skipped.push(p),
                Err(e) => return Err(e),
            }
        }
        let certified = fam.residual_order == ExtOrder::Exact(i * i)
            && fam.residual_is_t3_power
            && !certs.is_empty()
            && certs.iter().all(|c| c.factorizations_found == 0);
        levels.push(LowerBoundLevel {
            i,
            residual_order: fam.residual_order,
            lower_bound: (i as u64 * i as u64) - 1,
            irreducibility: certs,
            skipped_primes: skipped,
            certified,
        });
    }
    let certified: Vec<String> = levels.iter().filter(|l| l.certified).map(|l| l.i.to_string()).collect();
    Ok(LowerBoundReport {
        statement: format!(
            "Artin function of X1*X2 - X3*X4 satisfies beta(i) >= i^2 - 1 for certified i: [{}]",
            certified.join(", ")
        ),
        levels,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_poly;

    #[test]
    fn family_small_levels() {
        let r = RingSpec::standard(3, Field::Rationals, 9).unwrap();
        let f1 = monomial_witness_family(1, &r).unwrap();
        assert!(f1.x4.constant_term().is_one() && f1.x4.num_terms() == 1);
        assert_eq!(f1.residual_order, ExtOrder::Exact(1));
        let f2 = monomial_witness_family(2, &r).unwrap();
        assert_eq!(f2.x4, parse_poly("T1*T2 + T3^2", &r).unwrap());
        assert_eq!(f2.residual, parse_poly("T3^4", &r).unwrap());
        let f3 = monomial_witness_family(3, &r).unwrap();
        assert_eq!(f3.residual_order, ExtOrder::Exact(9));
        assert!(f3.residual_is_t3_power && f3.x3_congruent && f3.x1_initial_not_divisible);
    }

    #[test]
    fn family_needs_room() {
        let r = RingSpec::standard(3, Field::Rationals, 8).unwrap();
        assert!(matches!(
            monomial_witness_family(3, &r),
            Err(Error::TruncationTooSmall { needed: 9, trunc: 8 })
        ));
        let r2 = RingSpec::standard(2, Field::Rationals, 8).unwrap();
        assert!(monomial_witness_family(2, &r2).is_err());
    }

    #[test]
    fn binomial_flags_in_small_characteristic() {
        let r = RingSpec::standard(3, Field::Prime(2), 16).unwrap();
        let f = monomial_witness_family(4, &r).unwrap();
        assert_eq!(f.vanishing_binomials, vec![1, 2, 3]);
        assert!(f.residual_is_t3_power);
    }

    #[test]
    fn irreducible_small_cases() {
        let c = irreducibility_exhaustive(2, 2, 1 << 20).unwrap();
        assert_eq!((c.search_space_size, c.factorizations_found), (64, 0));
        let c = irreducibility_exhaustive(2, 3, 1 << 20).unwrap();
        assert_eq!((c.search_space_size, c.factorizations_found), (729, 0));
        assert!(irreducibility_exhaustive(3, 2, 1000).is_err());
    }

    #[test]
    fn level_one_scans_single_pair() {
        let c = irreducibility_exhaustive(1, 2, 10).unwrap();
        assert_eq!(c.search_space_size, 1);
        assert_eq!(c.factorizations_found, 0);
    }

    #[test]
    fn reducible_target_is_found() {
        let c = factor_search(2, 2, "T1*T2", 1 << 10).unwrap();
        assert_eq!(c.factorizations_found, 2);
        let (x, y) = c.counterexample.unwrap();
        assert_eq!(x.mul(&y).unwrap().to_string(), "T1*T2");
        // over GF(3): (a T1)(a^-1 T2) for a in {1, 2}, both orders
        assert_eq!(factor_search(2, 3, "T1*T2", 1 << 10).unwrap().factorizations_found, 4);
    }

    #[test]
    fn certificate_report() {
        let r = RingSpec::standard(3, Field::Rationals, 9).unwrap();
        let rep = lower_bound_certificate(3, &r, &[2], 1 << 10).unwrap();
        let orders: Vec<_> = rep.levels.iter().map(|l| l.residual_order).collect();
        assert_eq!(orders, vec![ExtOrder::Exact(1), ExtOrder::Exact(4), ExtOrder::Exact(9)]);
        assert_eq!(rep.levels[2].skipped_primes, vec![2]);
        assert!(rep.levels[1].certified);
    }
}
