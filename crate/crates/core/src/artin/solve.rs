//! Correction solvers turning approximate solutions of linear equations into
//! exact ones close to them.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::solve_affine;
use crate::series::{monomials_of_degree, ExtOrder, Monomial, Ring, RingSpec, TruncatedSeries};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Regularity {
    /// Initial forms are pairwise coprime monomials.
    VerifiedMonomial,
    /// Supplied by the caller.
    Assumed,
    NotApplicable,
}

#[derive(Debug, Clone, Serialize)]
pub struct SolveCertificate {
    pub input: Vec<TruncatedSeries>,
    pub output: Vec<TruncatedSeries>,
    pub level_i: u32,
    /// `ord(output_j - input_j)`.
    pub proximity: Vec<ExtOrder>,
    /// Exponent each proximity is required to reach.
    pub required: Vec<u32>,
    pub input_residual_order: ExtOrder,
    /// `AtLeast(D+1)` means the output solves the equation exactly.
    pub residual_order: ExtOrder,
    pub regularity: Regularity,
    pub steps: u32,
}

impl SolveCertificate {
    /// Output is exact and every proximity meets its requirement.
    pub fn holds(&self) -> bool {
        !self.residual_order.is_exact() && self.proximity.iter().zip(&self.required).all(|(p, &r)| p.at_least(r))
    }
}

fn check_ring(ring: &Ring, xs: &[&TruncatedSeries]) -> Result<()> {
    if xs.iter().all(|s| RingSpec::same(ring, s.ring())) {
        Ok(())
    } else {
        Err(Error::IncompatibleRings)
    }
}

fn dot(f: &[TruncatedSeries], x: &[TruncatedSeries]) -> Result<TruncatedSeries> {
    let mut acc = TruncatedSeries::zero(f[0].ring());
    for (a, b) in f.iter().zip(x) {
        acc = acc.add(&a.mul(b)?)?;
    }
    Ok(acc)
}

fn order_of(s: &TruncatedSeries, what: &str) -> Result<u32> {
    s.ord()
        .exact()
        .ok_or_else(|| Error::precondition(format!("{what} must be nonzero")))
}

fn regularity(f: &[TruncatedSeries], assume_regular: bool) -> Result<Regularity> {
    let inits = f.iter().map(|g| g.initial_form()).collect::<Result<Vec<_>>>()?;
    if inits.iter().all(|g| g.num_terms() == 1) {
        let monos: Vec<&Monomial> = inits.iter().map(|g| g.terms().keys().next().unwrap()).collect();
        for a in 0..monos.len() {
            for b in a + 1..monos.len() {
                let (ea, eb) = (monos[a].exponents(), monos[b].exponents());
                if ea.iter().zip(eb).any(|(x, y)| *x > 0 && *y > 0) {
                    return Err(Error::NonRegular(format!(
                        "initial forms {} and {} share a variable",
                        inits[a], inits[b]
                    )));
                }
            }
        }
        return Ok(Regularity::VerifiedMonomial);
    }
    if assume_regular {
        Ok(Regularity::Assumed)
    } else {
        Err(Error::NonRegular(
            "initial forms are not monomials; pass the regularity assumption explicitly".into(),
        ))
    }
}

/// Solves `sum_j f_j X_j = 0` near `x`, for `f` with regular initial forms
/// sorted by order, by degree-by-degree antisymmetric corrections.
///
/// Requires `sum f_j x_j in m^(i + ord f_n + 1)` and `i + ord f_n <= D`. The
/// output satisfies `xbar_j - x_j in m^(i + ord f_n - ord f_j + 1)`.
pub fn solve_linear_regular(
    f: &[TruncatedSeries],
    x: &[TruncatedSeries],
    i: u32,
    assume_regular: bool,
) -> Result<SolveCertificate> {
    if f.is_empty() {
        return Err(Error::precondition("need at least one equation coefficient"));
    }
    if f.len() != x.len() {
        return Err(Error::ArityMismatch {
            expected: f.len(),
            got: x.len(),
        });
    }
    let ring = f[0].ring().clone();
    check_ring(&ring, &f.iter().chain(x).collect::<Vec<_>>())?;
    let d = ring.trunc();
    let ords = f
        .iter()
        .map(|g| order_of(g, "coefficient"))
        .collect::<Result<Vec<_>>>()?;
    if ords.windows(2).any(|w| w[0] > w[1]) {
        return Err(Error::precondition("coefficients must be sorted by order"));
    }
    let reg = regularity(f, assume_regular)?;
    let top = *ords.last().unwrap();
    let needed = i + top + 1;
    if needed > d + 1 {
        return Err(Error::TruncationTooSmall {
            needed: (i + top) as u64,
            trunc: d,
        });
    }
    let residual = dot(f, x)?;
    if !residual.ord().at_least(needed) {
        return Err(Error::ApproximationInsufficient {
            residual: residual.ord().to_string(),
            required: needed,
        });
    }

    let n = f.len();
    let inits = f.iter().map(|g| g.initial_form()).collect::<Result<Vec<_>>>()?;
    let mut cur: Vec<TruncatedSeries> = x.to_vec();
    let mut steps = 0;
    loop {
        let prods: Vec<ExtOrder> = (0..n)
            .map(|j| cur[j].ord().saturating_add(ExtOrder::Exact(ords[j]), d))
            .collect();
        let m = prods.iter().filter_map(|o| o.exact()).min();
        let Some(m) = m.filter(|&m| m < needed) else { break };
        let active: Vec<usize> = (0..n).filter(|&j| prods[j] == ExtOrder::Exact(m)).collect();
        let z = koszul_step(&ring, &inits, &ords, &cur, &active, m)?;
        for (&j, zj) in active.iter().zip(&z) {
            // x_j -= sum_k f_k z(k, j)
            for (&k, zkj) in active.iter().zip(zj) {
                if k != j && !zkj.is_zero() {
                    cur[j] = cur[j].sub(&f[k].mul(zkj)?)?;
                }
            }
        }
        steps += 1;
    }
    let output: Vec<TruncatedSeries> = x.iter().zip(&cur).map(|(a, b)| a.sub(b)).collect::<Result<_>>()?;
    finish(
        x.to_vec(),
        output,
        i,
        (0..n).map(|j| i + top - ords[j] + 1).collect(),
        residual.ord(),
        reg,
        steps,
        |o| dot(f, o),
    )
}

/// Finds homogeneous antisymmetric `z(k,j)` (`k, j` in `active`) of degree
/// `m - ord f_j - ord f_k` with `sum_k in(f_k) z(k,j) = in(x_j)`.
/// Returns `z[a][b] = z(active[b], active[a])`.
fn koszul_step(
    ring: &Ring,
    inits: &[TruncatedSeries],
    ords: &[u32],
    cur: &[TruncatedSeries],
    active: &[usize],
    m: u32,
) -> Result<Vec<Vec<TruncatedSeries>>> {
    let field = ring.field();
    let nv = ring.num_vars();
    // unknowns: for each pair a < b, coefficients of z(active[a], active[b])
    let mut pairs = Vec::new();
    let mut ncols = 0;
    for a in 0..active.len() {
        for b in a + 1..active.len() {
            let (k, j) = (active[a], active[b]);
            let deg = m as i64 - ords[j] as i64 - ords[k] as i64;
            if deg >= 0 {
                let monos = monomials_of_degree(nv, deg as u32);
                pairs.push((a, b, ncols, monos.clone()));
                ncols += monos.len();
            }
        }
    }
    // equations: for each active j, each monomial of degree m - ord f_j
    let mut rows = Vec::new();
    let mut rhs = Vec::new();
    for (b, &j) in active.iter().enumerate() {
        let deg = m - ords[j];
        let target = cur[j].homogeneous_part(deg)?;
        let eq_monos = monomials_of_degree(nv, deg);
        let base = rows.len();
        for mono in &eq_monos {
            rows.push(vec![field.zero(); ncols]);
            rhs.push(target.coeff(mono));
        }
        for (pa, pb, col0, monos) in &pairs {
            // z(active[pa], active[pb]) appears in equation pb with +, in equation pa with -
            let (other, sign) = if *pb == b {
                (*pa, field.one())
            } else if *pa == b {
                (*pb, field.one().neg())
            } else {
                continue;
            };
            let init = &inits[active[other]];
            for (t, u) in monos.iter().enumerate() {
                for (w, c) in init.terms() {
                    let prod = w.mul(u);
                    let r = eq_monos.iter().position(|e| *e == prod).unwrap();
                    rows[base + r][col0 + t] = rows[base + r][col0 + t].add(&c.mul(&sign));
                }
            }
        }
    }
    let sol = solve_affine(field, &rows, ncols, &rhs)
        .ok_or_else(|| Error::NonRegular(format!("initial forms admit a non-Koszul syzygy in degree {m}")))?;
    let mut z = vec![vec![TruncatedSeries::zero(ring); active.len()]; active.len()];
    for (a, b, col0, monos) in &pairs {
        let terms: Vec<_> = monos
            .iter()
            .enumerate()
            .map(|(t, u)| (u.clone(), sol.particular[col0 + t].clone()))
            .collect();
        let s = TruncatedSeries::from_terms(ring, terms);
        z[*a][*b] = s.neg();
        z[*b][*a] = s;
    }
    Ok(z)
}

#[allow(clippy::too_many_arguments)]
fn finish(
    input: Vec<TruncatedSeries>,
    output: Vec<TruncatedSeries>,
    i: u32,
    required: Vec<u32>,
    input_residual_order: ExtOrder,
    regularity: Regularity,
    steps: u32,
    residual: impl Fn(&[TruncatedSeries]) -> Result<TruncatedSeries>,
) -> Result<SolveCertificate> {
    let proximity = input
        .iter()
        .zip(&output)
        .map(|(a, b)| Ok(b.sub(a)?.ord()))
        .collect::<Result<Vec<_>>>()?;
    let residual_order = residual(&output)?.ord();
    Ok(SolveCertificate {
        input,
        output,
        level_i: i,
        proximity,
        required,
        input_residual_order,
        residual_order,
        regularity,
        steps,
    })
}

/// `h = a f + h'` where no monomial of `h'` is divisible by `T1^k`.
fn divide_by_shape(f: &TruncatedSeries, h: &TruncatedSeries, k: u32) -> Result<(TruncatedSeries, TruncatedSeries)> {
    let ring = f.ring();
    let d = ring.trunc();
    let g = f.sub(&TruncatedSeries::monomial(
        ring,
        Monomial::var(ring.num_vars(), 0, k),
        ring.field().one(),
    ))?;
    let mut a = TruncatedSeries::zero(ring);
    let mut rem = h.clone();
    for deg in 0..=d {
        let part = rem.homogeneous_part(deg)?;
        for (mono, c) in part.terms() {
            if mono.exponents()[0] >= k {
                let mut e = mono.exponents().to_vec();
                e[0] -= k;
                let q = TruncatedSeries::monomial(ring, Monomial::new(e), c.clone());
                a = a.add(&q)?;
                // subtract q * f = term + q * g; q * g only has degree > deg
                rem = rem.sub(&q.mul(f)?)?;
            }
        }
    }
    debug_assert!(a.mul(f)?.add(&rem)? == *h || g.is_zero());
    Ok((a, rem))
}

/// Solves `f X + h Y = 0` near `(x, y)` for `f = T1^k + g` with
/// `ord g = k+1` and `T1` not dividing `in(g)`.
///
/// With `nu = nu_(f)(h)` and `M = max(k, nu + 1)`, requires
/// `f x + h y in m^(i + M + 1)` and `i + M <= D`.
pub fn solve_fx_hy(
    k: u32,
    f: &TruncatedSeries,
    h: &TruncatedSeries,
    x: &TruncatedSeries,
    y: &TruncatedSeries,
    i: u32,
) -> Result<SolveCertificate> {
    let ring = f.ring().clone();
    check_ring(&ring, &[f, h, x, y])?;
    let d = ring.trunc();
    let field = ring.field();
    if k == 0 {
        return Err(Error::precondition("k must be >= 1"));
    }
    let t1k = TruncatedSeries::monomial(&ring, Monomial::var(ring.num_vars(), 0, k), field.one());
    let g = f.sub(&t1k)?;
    if g.ord() != ExtOrder::Exact(k + 1) {
        return Err(Error::precondition(format!(
            "f - T1^{k} must have order {} (found {})",
            k + 1,
            g.ord()
        )));
    }
    if g.initial_form()?.terms().keys().all(|m| m.exponents()[0] > 0) {
        return Err(Error::precondition("T1 divides the initial form of f - T1^k"));
    }
    let (a, h1) = divide_by_shape(f, h, k)?;
    let nu = h1
        .ord()
        .exact()
        .ok_or_else(|| Error::precondition("h lies in (f) at this truncation, nu_(f)(h) is infinite"))?;
    let big_m = k.max(nu + 1);
    if i + big_m > d {
        return Err(Error::TruncationTooSmall {
            needed: (i + big_m) as u64,
            trunc: d,
        });
    }
    let residual = f.mul(x)?.add(&h.mul(y)?)?;
    let needed = i + big_m + 1;
    if !residual.ord().at_least(needed) {
        return Err(Error::ApproximationInsufficient {
            residual: residual.ord().to_string(),
            required: needed,
        });
    }
    // change of variables x' = x + a y turns the equation into f x' + h' y
    let mut xp = x.add(&a.mul(y)?)?;
    let mut yc = y.clone();
    let mut z = TruncatedSeries::zero(&ring);
    let stop = i + big_m - k + 1;
    let t1 = Monomial::var(ring.num_vars(), 0, k);
    let mut steps = 0;
    while !xp.ord().at_least(stop) {
        if yc.is_zero() {
            return Err(Error::precondition(
                "elimination stalled: y vanished before x reached the target order",
            ));
        }
        let lead = yc.initial_form()?;
        let z0 = lead
            .div_monomial(&t1)
            .ok_or_else(|| Error::precondition(format!("T1^{k} does not divide the initial form {lead} of y")))?
            .neg();
        z = z.add(&z0)?;
        xp = xp.sub(&h1.mul(&z0)?)?;
        yc = yc.add(&f.mul(&z0)?)?;
        steps += 1;
    }
    let xbar = h.mul(&z)?;
    let ybar = f.mul(&z)?.neg();
    let cert = finish(
        vec![x.clone(), y.clone()],
        vec![xbar, ybar],
        i,
        vec![i + 1, i + 1],
        residual.ord(),
        Regularity::NotApplicable,
        steps,
        |o| f.mul(&o[0])?.add(&h.mul(&o[1])?),
    )?;
    Ok(cert)
}
