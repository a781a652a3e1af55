//! The m-adic order function of a quotient, its Rees limit, and ICL scans.

use num_integer::Integer;
use num_rational::Rational64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::scalar::Field;
use crate::series::{monomials_in_range, ExtOrder, Ring, TruncatedSeries};
use crate::subspace::{span_ideal, IdealSpec, Subspace};

/// `nu_I(x) = max { n : x in I + m^n }`, with the image of `I` cached.
#[derive(Debug, Clone)]
pub struct OrderFunction {
    ideal: IdealSpec,
    span: Subspace,
}

impl OrderFunction {
    pub fn new(ideal: &IdealSpec) -> Self {
        OrderFunction {
            ideal: ideal.clone(),
            span: span_ideal(ideal),
        }
    }

    pub fn ideal(&self) -> &IdealSpec {
        &self.ideal
    }

    pub fn span(&self) -> &Subspace {
        &self.span
    }

    pub fn nu(&self, x: &TruncatedSeries) -> Result<ExtOrder> {
        self.span.distance_order(std::slice::from_ref(x))
    }
}

/// One-off evaluation of `nu_I(x)`.
pub fn nu(ideal: &IdealSpec, x: &TruncatedSeries) -> Result<ExtOrder> {
    OrderFunction::new(ideal).nu(x)
}

pub(crate) fn ser_ratio<S: Serializer>(q: &Rational64, s: S) -> std::result::Result<S::Ok, S::Error> {
    if q.is_integer() {
        s.serialize_i64(*q.numer())
    } else {
        s.serialize_str(&format!("{}/{}", q.numer(), q.denom()))
    }
}

/// Parses `"3/2"`, `"2"` or `"1.5"` into a rational.
pub fn parse_ratio(text: &str) -> Result<Rational64> {
    let t = text.trim();
    let bad = || Error::Parse {
        pos: 0,
        msg: format!("not a rational number: {text:?}"),
    };
    if let Some((n, d)) = t.split_once('/') {
        let n: i64 = n.trim().parse().map_err(|_| bad())?;
        let d: i64 = d.trim().parse().map_err(|_| bad())?;
        if d == 0 {
            return Err(bad());
        }
        return Ok(Rational64::new(n, d));
    }
    if let Some((w, f)) = t.split_once('.') {
        let digits = f.len() as u32;
        if digits > 9 || f.chars().any(|c| !c.is_ascii_digit()) {
            return Err(bad());
        }
        let den = 10i64.pow(digits);
        let whole: i64 = if w.is_empty() || w == "-" {
            0
        } else {
            w.parse().map_err(|_| bad())?
        };
        let frac: i64 = if f.is_empty() { 0 } else { f.parse().map_err(|_| bad())? };
        let sign = if w.starts_with('-') { -1 } else { 1 };
        return Ok(Rational64::new(whole * den + sign * frac, den));
    }
    Ok(Rational64::from_integer(t.parse().map_err(|_| bad())?))
}

/// Sample point `nu_I(x^n)` of the Rees estimator.
#[derive(Debug, Clone, Serialize)]
pub struct NuBarSample {
    pub n: u32,
    pub nu: ExtOrder,
}

#[derive(Debug, Clone, Serialize)]
pub struct NuBarEstimate {
    #[serde(serialize_with = "ser_ratio")]
    pub estimate: Rational64,
    pub nu_x: ExtOrder,
    pub samples: Vec<NuBarSample>,
    pub truncation_limited: bool,
}

/// `max_{n <= n_max} nu_I(x^n)/n`. By superadditivity this is a lower
/// estimate of the Rees limit. AtLeast samples are flagged, never used.
pub fn nu_bar_estimate(ideal: &IdealSpec, x: &TruncatedSeries, n_max: u32) -> Result<NuBarEstimate> {
    if x.is_zero() {
        return Err(Error::precondition("nubar needs x != 0"));
    }
    if n_max == 0 {
        return Err(Error::precondition("n_max must be >= 1"));
    }
    let f = OrderFunction::new(ideal);
    let d = ideal.ring().trunc();
    let mut samples = Vec::new();
    let mut best = Rational64::from_integer(0);
    let mut limited = false;
    let mut power = TruncatedSeries::one(ideal.ring());
    for n in 1..=n_max {
        power = power.mul(x)?;
        let v = f.nu(&power)?;
        match v {
            ExtOrder::Exact(k) => best = best.max(Rational64::new(k as i64, n as i64)),
            ExtOrder::AtLeast(_) => limited = true,
        }
        samples.push(NuBarSample { n, nu: v });
    }
    if best * Rational64::from_integer(n_max as i64) > Rational64::from_integer(d as i64) {
        limited = true;
    }
    Ok(NuBarEstimate {
        estimate: best,
        nu_x: samples[0].nu,
        samples,
        truncation_limited: limited,
    })
}

/// How test elements for pair scans are produced.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Sampling {
    /// Every nonzero element of `m / m^(deg_max+1)` over a prime field.
    Exhaustive,
    /// All monomials of degree `1..=deg_max` plus `count` seeded random elements.
    Random { count: usize, seed: u64 },
}

/// Test elements for a scan, in a deterministic order (monomials first).
pub fn scan_elements(ring: &Ring, deg_max: u32, sampling: Sampling, budget: u64) -> Result<Vec<TruncatedSeries>> {
    let monos = monomials_in_range(ring.num_vars(), 1, deg_max.min(ring.trunc()));
    let field = ring.field();
    match sampling {
        Sampling::Exhaustive => {
            let Field::Prime(p) = field else {
                return Err(Error::precondition("exhaustive sampling needs a prime field"));
            };
            let total = (p as f64).powi(monos.len() as i32);
            if total - 1.0 > budget as f64 {
                return Err(Error::BudgetExceeded {
                    space: format!("{p}^{} - 1 elements", monos.len()),
                    budget,
                });
            }
            let total = total as u64;
            let mut out = Vec::with_capacity(total as usize);
            for code in 1..total {
                let mut c = code;
                let mut terms = Vec::new();
                for m in &monos {
                    let digit = (c % p as u64) as i64;
                    c /= p as u64;
                    if digit != 0 {
                        terms.push((m.clone(), field.from_i64(digit)));
                    }
                }
                out.push(TruncatedSeries::from_terms(ring, terms));
            }
            Ok(out)
        }
        Sampling::Random { count, seed } => {
            let mut out: Vec<TruncatedSeries> = monos
                .iter()
                .map(|m| TruncatedSeries::monomial(ring, m.clone(), field.one()))
                .collect();
            out.extend(random_elements(ring, 1, deg_max, count, seed));
            if (out.len() as u64).saturating_mul(out.len() as u64 + 1) / 2 > budget {
                return Err(Error::BudgetExceeded {
                    space: format!("{} pairs", out.len() * (out.len() + 1) / 2),
                    budget,
                });
            }
            Ok(out)
        }
    }
}

/// Seeded random nonzero elements with 1 to 4 terms of degree in `lo..=hi`
/// and coefficients in `-3..=3`.
pub fn random_elements(ring: &Ring, lo: u32, hi: u32, count: usize, seed: u64) -> Vec<TruncatedSeries> {
    let monos = monomials_in_range(ring.num_vars(), lo, hi.min(ring.trunc()));
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let field = ring.field();
    let mut out = Vec::with_capacity(count);
    while out.len() < count && !monos.is_empty() {
        let nterms = rng.gen_range(1..=4);
        let terms = (0..nterms).map(|_| {
            let m = monos[rng.gen_range(0..monos.len())].clone();
            let mut c = 0;
            while c == 0 {
                c = rng.gen_range(-3..=3);
            }
            (m, field.from_i64(c))
        });
        let x = TruncatedSeries::from_terms(ring, terms.collect::<Vec<_>>());
        if !x.is_zero() {
            out.push(x);
        }
    }
    out
}

/// Orders of a scanned pair and its product.
#[derive(Debug, Clone, Serialize)]
pub struct PairRecord {
    pub g: TruncatedSeries,
    pub h: TruncatedSeries,
    pub nu_g: ExtOrder,
    pub nu_h: ExtOrder,
    pub nu_gh: ExtOrder,
}

fn scan_pairs(f: &OrderFunction, elems: &[TruncatedSeries]) -> Result<Vec<PairRecord>> {
    let nus = elems.par_iter().map(|x| f.nu(x)).collect::<Result<Vec<_>>>()?;
    let idx: Vec<(usize, usize)> = (0..elems.len())
        .flat_map(|i| (i..elems.len()).map(move |j| (i, j)))
        .collect();
    idx.par_iter()
        .map(|&(i, j)| {
            let gh = elems[i].mul(&elems[j])?;
            Ok(PairRecord {
                g: elems[i].clone(),
                h: elems[j].clone(),
                nu_g: nus[i],
                nu_h: nus[j],
                nu_gh: f.nu(&gh)?,
            })
        })
        .collect()
}

/// Smallest admissible `b`, or unbounded when some product falls into `I`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BMin {
    Finite(u64),
    Unbounded,
}

impl Serialize for BMin {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            BMin::Finite(b) => s.serialize_u64(*b),
            BMin::Unbounded => s.serialize_str("unbounded-at-truncation"),
        }
    }
}

const MAX_LISTED: usize = 16;

#[derive(Debug, Clone, Serialize)]
pub struct IclReport {
    pub ideal: Vec<TruncatedSeries>,
    #[serde(serialize_with = "ser_ratio")]
    pub a: Rational64,
    pub b_min: BMin,
    /// Pairs realizing `b_min` (first few in scan order).
    pub attaining_pairs: Vec<PairRecord>,
    pub attaining_count: usize,
    /// Pairs with exact `nu(g)`, `nu(h)` whose product lies in `I` although
    /// `a(nu(g)+nu(h)) + b_min <= D`: no finite `b` can work.
    pub violations: Vec<PairRecord>,
    /// Pairs whose product order exceeds what the truncation can resolve.
    pub truncation_limited: usize,
    pub scan_degree: u32,
    pub elements: usize,
    pub pairs: usize,
    pub sampling: Sampling,
    pub certified_note: String,
}

/// Scans products of test elements for the smallest `b` with
/// `nu(gh) <= a (nu(g) + nu(h)) + b`.
pub fn icl_scan(ideal: &IdealSpec, deg_max: u32, a: Rational64, sampling: Sampling, budget: u64) -> Result<IclReport> {
    let scan = icl_records(ideal, deg_max, sampling, budget)?;
    Ok(icl_report(ideal, deg_max, a, sampling, &scan))
}

/// Pair data shared by scans at several values of `a`.
#[derive(Debug, Clone)]
pub struct PairScan {
    pub elements: usize,
    pub records: Vec<PairRecord>,
}

pub fn icl_records(ideal: &IdealSpec, deg_max: u32, sampling: Sampling, budget: u64) -> Result<PairScan> {
    check_scan_degree(ideal.ring(), deg_max)?;
    let elems = scan_elements(ideal.ring(), deg_max, sampling, budget)?;
    Ok(PairScan {
        elements: elems.len(),
        records: scan_pairs(&OrderFunction::new(ideal), &elems)?,
    })
}

fn check_scan_degree(ring: &Ring, deg_max: u32) -> Result<()> {
    if deg_max == 0 || 2 * deg_max > ring.trunc() {
        return Err(Error::precondition(format!(
            "need 1 <= deg_max and 2*deg_max <= D (deg_max = {deg_max}, D = {})",
            ring.trunc()
        )));
    }
    Ok(())
}

fn ceil_ratio(q: Rational64) -> i64 {
    q.numer().div_ceil(q.denom())
}

pub fn icl_report(ideal: &IdealSpec, deg_max: u32, a: Rational64, sampling: Sampling, scan: &PairScan) -> IclReport {
    let records = &scan.records;
    let d = ideal.ring().trunc() as i64;
    let excess = |r: &PairRecord| -> Option<Rational64> {
        let (g, h, gh) = (r.nu_g.exact()?, r.nu_h.exact()?, r.nu_gh.exact()?);
        Some(Rational64::from_integer(gh as i64) - a * Rational64::from_integer((g + h) as i64))
    };
    let b = records
        .iter()
        .filter_map(excess)
        .map(ceil_ratio)
        .max()
        .unwrap_or(0)
        .max(0);
    let mut violations = Vec::new();
    let mut limited = 0;
    for r in records {
        if let (Some(g), Some(h), false) = (r.nu_g.exact(), r.nu_h.exact(), r.nu_gh.is_exact()) {
            let predicted = a * Rational64::from_integer((g + h) as i64) + Rational64::from_integer(b);
            if predicted <= Rational64::from_integer(d) {
                violations.push(r.clone());
            } else {
                limited += 1;
            }
        }
    }
    let attaining: Vec<&PairRecord> = records
        .iter()
        .filter(|r| excess(r).map(|e| ceil_ratio(e) == b).unwrap_or(false))
        .collect();
    let b_min = if violations.is_empty() {
        BMin::Finite(b as u64)
    } else {
        BMin::Unbounded
    };
    let note = match sampling {
        Sampling::Exhaustive => format!(
            "certified for all pairs of elements of m/m^{} over {} at truncation D = {}",
            deg_max + 1,
            ideal.ring().field(),
            d
        ),
        Sampling::Random { count, seed } => format!(
            "scan-certified: monomials of degree <= {deg_max} plus {count} random elements (seed {seed}) at D = {d}"
        ),
    };
    IclReport {
        ideal: ideal.generators().to_vec(),
        a,
        b_min,
        attaining_count: attaining.len(),
        attaining_pairs: attaining.into_iter().take(MAX_LISTED).cloned().collect(),
        violations: violations.into_iter().take(MAX_LISTED).collect(),
        truncation_limited: limited,
        scan_degree: deg_max,
        elements: scan.elements,
        pairs: records.len(),
        sampling,
        certified_note: note,
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct EnvelopePoint {
    #[serde(serialize_with = "ser_ratio")]
    pub a: Rational64,
    pub b_min: BMin,
}

/// `b_min` for `a` in `{1, 3/2, 2}` from a single pair scan.
pub fn icl_envelope(ideal: &IdealSpec, deg_max: u32, sampling: Sampling, budget: u64) -> Result<Vec<EnvelopePoint>> {
    let scan = icl_records(ideal, deg_max, sampling, budget)?;
    Ok([
        Rational64::from_integer(1),
        Rational64::new(3, 2),
        Rational64::from_integer(2),
    ]
    .into_iter()
    .map(|a| EnvelopePoint {
        a,
        b_min: icl_report(ideal, deg_max, a, sampling, &scan).b_min,
    })
    .collect())
}

#[derive(Debug, Clone, Serialize)]
pub struct ValuationReport {
    pub is_valuation: bool,
    pub counterexample: Option<PairRecord>,
    pub pairs: usize,
}

/// Checks `nu(gh) = nu(g) + nu(h)` on scanned pairs whose sum is within truncation.
pub fn valuation_check(ideal: &IdealSpec, deg_max: u32, sampling: Sampling, budget: u64) -> Result<ValuationReport> {
    let records = icl_records(ideal, deg_max, sampling, budget)?.records;
    let d = ideal.ring().trunc();
    let counterexample = records
        .iter()
        .find(|r| match (r.nu_g.exact(), r.nu_h.exact()) {
            (Some(g), Some(h)) if g + h <= d => r.nu_gh != ExtOrder::Exact(g + h),
            _ => false,
        })
        .cloned();
    Ok(ValuationReport {
        is_valuation: counterexample.is_none(),
        counterexample,
        pairs: records.len(),
    })
}
