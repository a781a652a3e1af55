//! Exhaustive lower bounds for Artin functions over a prime field.
//!
//! Elements of `A = F_p[T]/m^(D+1)` are enumerated one homogeneous layer at a
//! time. For `k >= 1` the degree-`k` part of `f(x)` is
//! `J0 * x_k + (terms fixed by lower layers)`, with `J0` the Jacobian of `f`
//! at `(T, X) = (0, x_0)`, so each layer splits into choices that fix
//! `ord f(x) = k` and an affine family that keeps `f(x) in m^(k+1)`.

use std::collections::BTreeMap;
use std::sync::atomic::{AtomicU64, Ordering};

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::solve_affine;
use crate::parse::parse_ring_polynomial;
use crate::scalar::{Field, Scalar};
use crate::series::{monomials_of_degree, ExtOrder, Monomial, Ring, RingSpec, TruncatedSeries};

/// Polynomial equations in unknowns `X_1..X_n` with coefficients in the truncated ring.
#[derive(Debug, Clone)]
pub struct PolySystem {
    ring: Ring,
    unknowns: Vec<String>,
    equations: Vec<BTreeMap<Vec<u32>, TruncatedSeries>>,
}

impl PolySystem {
    pub fn new(
        ring: &Ring,
        unknowns: Vec<String>,
        equations: Vec<BTreeMap<Vec<u32>, TruncatedSeries>>,
    ) -> Result<Self> {
        for eq in &equations {
            for (e, c) in eq {
                if e.len() != unknowns.len() {
                    return Err(Error::ArityMismatch {
                        expected: unknowns.len(),
                        got: e.len(),
                    });
                }
                if !RingSpec::same(ring, c.ring()) {
                    return Err(Error::IncompatibleRings);
                }
            }
        }
        Ok(PolySystem {
            ring: ring.clone(),
            unknowns,
            equations,
        })
    }

    pub fn parse(ring: &Ring, unknowns: &[String], equations: &[String]) -> Result<Self> {
        let eqs = equations
            .iter()
            .map(|t| parse_ring_polynomial(t, ring, unknowns))
            .collect::<Result<Vec<_>>>()?;
        Self::new(ring, unknowns.to_vec(), eqs)
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn num_unknowns(&self) -> usize {
        self.unknowns.len()
    }

    /// Same system over the ring truncated at `trunc`.
    fn truncated(&self, trunc: u32) -> Result<Self> {
        let ring = self.ring.with_trunc(trunc)?;
        let equations = self
            .equations
            .iter()
            .map(|eq| {
                eq.iter()
                    .map(|(e, c)| Ok((e.clone(), c.change_ring(&ring)?)))
                    .collect::<Result<BTreeMap<_, _>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(PolySystem {
            ring,
            unknowns: self.unknowns.clone(),
            equations,
        })
    }

    pub fn eval(&self, x: &[TruncatedSeries]) -> Result<Vec<TruncatedSeries>> {
        if x.len() != self.unknowns.len() {
            return Err(Error::ArityMismatch {
                expected: self.unknowns.len(),
                got: x.len(),
            });
        }
        let max_exp = self
            .equations
            .iter()
            .flat_map(|eq| eq.keys().flatten())
            .copied()
            .max()
            .unwrap_or(0);
        let powers: Vec<Vec<TruncatedSeries>> = x
            .iter()
            .map(|xj| {
                let mut p = vec![TruncatedSeries::one(&self.ring)];
                for _ in 0..max_exp {
                    let next = p.last().unwrap().mul(xj)?;
                    p.push(next);
                }
                Ok(p)
            })
            .collect::<Result<_>>()?;
        self.equations
            .iter()
            .map(|eq| {
                let mut acc = TruncatedSeries::zero(&self.ring);
                for (e, c) in eq {
                    let mut term = c.clone();
                    for (j, &k) in e.iter().enumerate() {
                        if k > 0 {
                            term = term.mul(&powers[j][k as usize])?;
                        }
                    }
                    acc = acc.add(&term)?;
                }
                Ok(acc)
            })
            .collect()
    }

    /// Minimum order over the equations of `f(x)`.
    pub fn residual_order(&self, x: &[TruncatedSeries]) -> Result<ExtOrder> {
        Ok(self
            .eval(x)?
            .iter()
            .map(|s| s.ord())
            .min()
            .unwrap_or(ExtOrder::AtLeast(self.ring.trunc() + 1)))
    }

    fn value_at_origin(&self, x0: &[Scalar]) -> Vec<Scalar> {
        let field = self.ring.field();
        self.equations
            .iter()
            .map(|eq| {
                eq.iter().fold(field.zero(), |acc, (e, c)| {
                    acc.add(&c.constant_term().mul(&scalar_monomial(field, x0, e, None)))
                })
            })
            .collect()
    }

    /// `d f_e / d X_j` at `(T, X) = (0, x0)`.
    fn jacobian_at_origin(&self, x0: &[Scalar]) -> Vec<Vec<Scalar>> {
        let field = self.ring.field();
        self.equations
            .iter()
            .map(|eq| {
                (0..self.unknowns.len())
                    .map(|j| {
                        eq.iter().fold(field.zero(), |acc, (e, c)| {
                            if e[j] == 0 {
                                return acc;
                            }
                            let d = field.from_i64(e[j] as i64);
                            acc.add(&c.constant_term().mul(&d).mul(&scalar_monomial(field, x0, e, Some(j))))
                        })
                    })
                    .collect()
            })
            .collect()
    }
}

/// `prod_l x0_l^(e_l)`, with the exponent of `skip` lowered by one.
fn scalar_monomial(field: Field, x0: &[Scalar], e: &[u32], skip: Option<usize>) -> Scalar {
    let mut acc = field.one();
    for (l, &k) in e.iter().enumerate() {
        let k = if Some(l) == skip { k - 1 } else { k };
        for _ in 0..k {
            acc = acc.mul(&x0[l]);
        }
    }
    acc
}

#[derive(Debug, Clone, Serialize)]
pub struct BetaResult {
    pub i: u32,
    /// Largest `ord f(x)` over `x` whose class mod `m^(i+1)` contains no
    /// solution; `0` when every class does.
    pub beta: u32,
    /// An `x` in an unsolvable class attaining `beta`.
    pub witness: Option<Vec<TruncatedSeries>>,
    pub nodes: u64,
    pub nominal_space: String,
    pub trunc: u32,
}

struct Ctx<'a> {
    field: Field,
    n: usize,
    i: u32,
    d: u32,
    base: &'a PolySystem,
    by_trunc: Vec<PolySystem>,
    monos: Vec<Vec<Monomial>>,
    nodes: AtomicU64,
    budget: u64,
    space: String,
}

type Best = Option<(u32, Vec<TruncatedSeries>)>;

enum InClass {
    Found,
    Bad(Best),
}

/// Affine family of layer-`k` choices keeping `f(x) in m^(k+1)`.
struct ZeroFamily {
    particular: Vec<Vec<Scalar>>,
    kernel: Vec<Vec<Scalar>>,
    count: u64,
}

struct Layer {
    nonzero: Option<Vec<TruncatedSeries>>,
    zero: Option<ZeroFamily>,
}

fn merge(a: Best, b: Best) -> Best {
    match (a, b) {
        (Some(x), Some(y)) => Some(if y.0 > x.0 { y } else { x }),
        (x, None) => x,
        (None, y) => y,
    }
}

impl Ctx<'_> {
    fn tick(&self, by: u64) -> Result<()> {
        let seen = self.nodes.fetch_add(by, Ordering::Relaxed) + by;
        if seen > self.budget {
            return Err(Error::BudgetExceeded {
                space: self.space.clone(),
                budget: self.budget,
            });
        }
        Ok(())
    }

    fn with_layer(&self, x: &[TruncatedSeries], layer: &[TruncatedSeries]) -> Vec<TruncatedSeries> {
        x.iter().zip(layer).map(|(a, b)| a.add(b).expect("same ring")).collect()
    }

    fn analyse(&self, k: u32, x: &[TruncatedSeries], j0: &[Vec<Scalar>]) -> Result<Layer> {
        let sys = &self.by_trunc[k as usize];
        let xs = x
            .iter()
            .map(|s| s.change_ring(sys.ring()))
            .collect::<Result<Vec<_>>>()?;
        let c: Vec<TruncatedSeries> = sys
            .eval(&xs)?
            .iter()
            .map(|v| v.homogeneous_part(k)?.change_ring(&self.base.ring))
            .collect::<Result<_>>()?;
        let monos = &self.monos[k as usize];
        let j0_zero = j0.iter().flatten().all(Scalar::is_zero);
        let c_zero = c.iter().all(TruncatedSeries::is_zero);
        let zero_layer = || vec![TruncatedSeries::zero(&self.base.ring); self.n];
        let nonzero = if !c_zero {
            Some(self.with_layer(x, &zero_layer()))
        } else if !j0_zero {
            let col = (0..self.n).find(|&j| j0.iter().any(|row| !row[j].is_zero())).unwrap();
            let mut l = zero_layer();
            l[col] = TruncatedSeries::monomial(&self.base.ring, monos[0].clone(), self.field.one());
            Some(self.with_layer(x, &l))
        } else {
            None
        };
        let mut particular = Vec::with_capacity(monos.len());
        let mut kernel = Vec::new();
        for u in monos {
            let rhs: Vec<Scalar> = c.iter().map(|ce| ce.coeff(u).neg()).collect();
            match solve_affine(self.field, j0, self.n, &rhs) {
                Some(sol) => {
                    kernel = sol.kernel;
                    particular.push(sol.particular);
                }
                None => return Ok(Layer { nonzero, zero: None }),
            }
        }
        let p = self.field.characteristic() as u64;
        let exp = (kernel.len() * monos.len()) as u32;
        let count = p.checked_pow(exp).unwrap_or(u64::MAX);
        Ok(Layer {
            nonzero,
            zero: Some(ZeroFamily {
                particular,
                kernel,
                count,
            }),
        })
    }

    fn build(&self, k: u32, fam: &ZeroFamily, mut idx: u64) -> Vec<TruncatedSeries> {
        let p = self.field.characteristic() as u64;
        let mut terms: Vec<Vec<(Monomial, Scalar)>> = vec![Vec::new(); self.n];
        for (u, part) in self.monos[k as usize].iter().zip(&fam.particular) {
            let mut v = part.clone();
            for kv in &fam.kernel {
                let t = self.field.from_i64((idx % p) as i64);
                idx /= p;
                for (vj, kj) in v.iter_mut().zip(kv) {
                    *vj = vj.add(&kj.mul(&t));
                }
            }
            for (j, c) in v.into_iter().enumerate() {
                if !c.is_zero() {
                    terms[j].push((u.clone(), c));
                }
            }
        }
        terms
            .into_iter()
            .map(|t| TruncatedSeries::from_terms(&self.base.ring, t))
            .collect()
    }

    /// Layers `0..k` fixed, `k <= i`: every child is a distinct class.
    fn classes(&self, k: u32, x: &[TruncatedSeries], j0: &[Vec<Scalar>]) -> Result<Best> {
        if k > self.i {
            return Ok(match self.in_class(k, x, j0)? {
                InClass::Found => None,
                InClass::Bad(b) => b,
            });
        }
        if k > self.d {
            return Ok(None);
        }
        self.tick(1)?;
        let layer = self.analyse(k, x, j0)?;
        let mut best = layer.nonzero.map(|w| (k, w));
        if k == self.d {
            return Ok(best);
        }
        if let Some(fam) = layer.zero {
            self.tick(fam.count)?;
            for idx in 0..fam.count {
                if best.as_ref().is_some_and(|b| b.0 >= self.d) {
                    break;
                }
                let next = self.with_layer(x, &self.build(k, &fam, idx));
                best = merge(best, self.classes(k + 1, &next, j0)?);
            }
        }
        Ok(best)
    }

    /// Search inside one class: any solution, else the largest residual order.
    fn in_class(&self, k: u32, x: &[TruncatedSeries], j0: &[Vec<Scalar>]) -> Result<InClass> {
        if k > self.d {
            return Ok(InClass::Found);
        }
        self.tick(1)?;
        let layer = self.analyse(k, x, j0)?;
        let mut best = layer.nonzero.map(|w| (k, w));
        if let Some(fam) = layer.zero {
            if k == self.d {
                return Ok(InClass::Found);
            }
            self.tick(fam.count)?;
            for idx in 0..fam.count {
                let next = self.with_layer(x, &self.build(k, &fam, idx));
                match self.in_class(k + 1, &next, j0)? {
                    InClass::Found => return Ok(InClass::Found),
                    InClass::Bad(b) => best = merge(best, b),
                }
            }
        }
        Ok(InClass::Bad(best))
    }
}

/// `beta_D(i)`: the least `beta` such that every `x` with `f(x) in m^(beta+1)`
/// is congruent mod `m^(i+1)` to a solution of `f = 0` in `A/m^(D+1)`.
///
/// Solvability at truncation is weaker than true solvability, so this is a
/// lower bound for the Artin function at `i`. `budget` caps visited nodes.
pub fn beta_lower_bound_bruteforce(system: &PolySystem, i: u32, budget: u64) -> Result<BetaResult> {
    let ring = system.ring();
    let field = ring.field();
    let Field::Prime(p) = field else {
        return Err(Error::precondition("brute-force search needs a prime field (--char p)"));
    };
    let d = ring.trunc();
    if i > d {
        return Err(Error::OutOfRange {
            what: "approximation level i",
            value: i as i64,
            lo: 0,
            hi: d as i64,
        });
    }
    let n = system.num_unknowns();
    if n == 0 {
        return Err(Error::precondition("system has no unknowns"));
    }
    let by_trunc = std::iter::once(Ok(system.clone()))
        .chain((1..=d).map(|k| system.truncated(k)))
        .collect::<Result<Vec<_>>>()?;
    let ctx = Ctx {
        field,
        n,
        i,
        d,
        base: system,
        by_trunc,
        monos: (0..=d).map(|k| monomials_of_degree(ring.num_vars(), k)).collect(),
        nodes: AtomicU64::new(0),
        budget,
        space: format!("{p}^{}", n * ring.basis().len()),
    };
    let options = (p as u64).checked_pow(n as u32).unwrap_or(u64::MAX);
    ctx.tick(options)?;
    let results = (0..options)
        .into_par_iter()
        .map(|code| {
            let mut c = code;
            let x0: Vec<Scalar> = (0..n)
                .map(|_| {
                    let v = field.from_i64((c % p as u64) as i64);
                    c /= p as u64;
                    v
                })
                .collect();
            let x: Vec<TruncatedSeries> = x0.iter().map(|s| TruncatedSeries::constant(ring, s.clone())).collect();
            if system.value_at_origin(&x0).iter().any(|v| !v.is_zero()) {
                return Ok(Some((0, x)));
            }
            if d == 0 {
                return Ok(None);
            }
            let j0 = system.jacobian_at_origin(&x0);
            ctx.classes(1, &x, &j0)
        })
        .collect::<Result<Vec<Best>>>()?;
    let best = results.into_iter().fold(None, merge);
    Ok(BetaResult {
        i,
        beta: best.as_ref().map(|b| b.0).unwrap_or(0),
        witness: best.map(|b| b.1),
        nodes: ctx.nodes.load(Ordering::Relaxed),
        nominal_space: ctx.space,
        trunc: d,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn system(n: usize, p: u32, d: u32, unknowns: &[&str], eqs: &[&str]) -> PolySystem {
        let r = RingSpec::standard(n, Field::Prime(p), d).unwrap();
        let u: Vec<String> = unknowns.iter().map(|s| s.to_string()).collect();
        let e: Vec<String> = eqs.iter().map(|s| s.to_string()).collect();
        PolySystem::parse(&r, &u, &e).unwrap()
    }

    #[test]
    fn smooth_equation() {
        let s = system(2, 2, 4, &["X1"], &["X1"]);
        for i in 0..=3 {
            assert_eq!(beta_lower_bound_bruteforce(&s, i, 1 << 24).unwrap().beta, i);
        }
    }

    #[test]
    fn monomial_coefficient() {
        let s = system(2, 2, 5, &["X1"], &["T1*X1"]);
        for i in 0..=3 {
            let r = beta_lower_bound_bruteforce(&s, i, 1 << 24).unwrap();
            assert_eq!(r.beta, i + 1);
            let w = r.witness.unwrap();
            assert_eq!(s.residual_order(&w).unwrap(), ExtOrder::Exact(i + 1));
        }
    }

    #[test]
    fn witness_is_unsolvable_in_class() {
        let s = system(3, 2, 2, &["X1", "X2", "X3"], &["X1*X2 - (T1*T2 - T3^2)*X3"]);
        let r = beta_lower_bound_bruteforce(&s, 1, 1 << 24).unwrap();
        assert!(r.beta >= 1);
        let w = r.witness.unwrap();
        assert_eq!(s.residual_order(&w).unwrap(), ExtOrder::Exact(r.beta));
    }

    #[test]
    fn requires_prime_field() {
        let r = RingSpec::standard(2, Field::Rationals, 3).unwrap();
        let s = PolySystem::parse(&r, &["X1".into()], &["X1".into()]).unwrap();
        assert!(beta_lower_bound_bruteforce(&s, 1, 100).is_err());
    }

    #[test]
    fn budget_is_enforced() {
        let s = system(3, 2, 3, &["X1", "X2", "X3"], &["X1*X2 - (T1*T2 - T3^2)*X3"]);
        assert!(matches!(
            beta_lower_bound_bruteforce(&s, 2, 50),
            Err(Error::BudgetExceeded { .. })
        ));
    }

    #[test]
    fn evaluation() {
        let s = system(2, 3, 4, &["X", "Y"], &["X^2 - T1*Y"]);
        let r = s.ring().clone();
        let x = vec![TruncatedSeries::var(&r, 0), TruncatedSeries::var(&r, 0)];
        assert!(s.eval(&x).unwrap()[0].is_zero());
    }
}
