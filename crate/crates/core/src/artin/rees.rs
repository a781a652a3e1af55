//! Artin-Rees indices and the uniform (stable) Artin-Rees scan.

use num_rational::Rational64;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::order::{ser_ratio, OrderFunction};
use crate::series::{ExtOrder, TruncatedSeries};
use crate::subspace::{span_m_power, span_m_power_times, span_module, IdealSpec, ModuleSpec, Subspace};

#[derive(Debug, Clone, Serialize)]
pub struct TightWitness {
    pub i: u32,
    pub element: Vec<TruncatedSeries>,
}

#[derive(Debug, Clone, Serialize)]
pub struct ArIndexResult {
    pub i0: u32,
    pub certified_up_to: u32,
    /// `k_i = max { k <= i : M ∩ m^i ⊆ m^k M }` for each checked `i`.
    pub levels: Vec<u32>,
    /// An element of `M ∩ m^i` outside `m^(i-i0+1) M`, showing `i0 - 1` fails.
    pub tight_witness: Option<TightWitness>,
    pub module: ModuleSpec,
}

/// `D - (max generator degree)`: the range where `m^k M` is not distorted by truncation.
pub fn certified_range(module: &ModuleSpec) -> u32 {
    let d = module.ring().trunc();
    d.saturating_sub(module.max_generator_degree())
}

/// Smallest `i0` with `M ∩ m^i ⊆ m^(i-i0) M` for every `i` in `0..=up_to`
/// (default: the certified range).
pub fn artin_rees_index(module: &ModuleSpec, up_to: Option<u32>) -> Result<ArIndexResult> {
    let cert = certified_range(module);
    let top = match up_to {
        Some(u) if u > cert => {
            return Err(Error::OutOfRange {
                what: "artin-rees level",
                value: u as i64,
                lo: 0,
                hi: cert as i64,
            })
        }
        Some(u) => u,
        None => cert,
    };
    let ring = module.ring();
    let span = span_module(module);
    let powers: Vec<Subspace> = (0..=top).map(|k| span_m_power_times(module, k)).collect();
    let mut levels = Vec::with_capacity(top as usize + 1);
    let mut caps = Vec::with_capacity(top as usize + 1);
    for i in 0..=top {
        let cap = span.intersect(&span_m_power(ring, i, module.arity())?)?;
        let mut k = i;
        while k > 0 && !powers[k as usize].contains(&cap)? {
            k -= 1;
        }
        levels.push(k);
        caps.push(cap);
    }
    let (worst_i, i0) = levels
        .iter()
        .enumerate()
        .map(|(i, &k)| (i as u32, i as u32 - k))
        .fold((0, 0), |best, cur| if cur.1 > best.1 { cur } else { best });
    let tight_witness = if i0 == 0 {
        None
    } else {
        let target = &powers[(worst_i - i0 + 1) as usize];
        caps[worst_i as usize]
            .basis()
            .into_iter()
            .find(|v| !target.member(v).unwrap_or(true))
            .map(|element| TightWitness { i: worst_i, element })
    };
    Ok(ArIndexResult {
        i0,
        certified_up_to: top,
        levels,
        tight_witness,
        module: module.clone(),
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct StableArEntry {
    pub x: TruncatedSeries,
    pub nu: ExtOrder,
    pub skipped: bool,
    pub certified_up_to: Option<u32>,
    /// `max_i (e_i - i)` where `e_i` is the least `e` with `J ∩ m^e ⊆ J m^i`, `J = (x) + I`.
    pub shift: Option<u32>,
}

#[derive(Debug, Clone, Serialize)]
pub struct GridPoint {
    #[serde(serialize_with = "ser_ratio")]
    pub a: Rational64,
    /// Least `b <= b_max` making every inclusion hold, if any.
    pub b: Option<u32>,
}

#[derive(Debug, Clone, Serialize)]
pub struct StableArReport {
    pub entries: Vec<StableArEntry>,
    pub grid: Vec<GridPoint>,
    pub best: Option<GridPoint>,
    pub checks: usize,
}

/// Checks `((x)+I) ∩ m^(i + ceil(a nu(x)) + b) ⊆ ((x)+I) m^i` for each `x`
/// and each `i` in the certified range of `(x)+I`, over a grid of `a`
/// values and `b` in `0..=b_max`.
pub fn stable_ar_scan(
    ideal: &IdealSpec,
    xs: &[TruncatedSeries],
    grid: &[Rational64],
    b_max: u32,
) -> Result<StableArReport> {
    let ring = ideal.ring();
    let d = ring.trunc();
    let nu = OrderFunction::new(ideal);
    let mut entries = Vec::with_capacity(xs.len());
    let mut checks = 0;
    for x in xs {
        let v = nu.nu(x)?;
        let ExtOrder::Exact(_) = v else {
            entries.push(StableArEntry {
                x: x.clone(),
                nu: v,
                skipped: true,
                certified_up_to: None,
                shift: None,
            });
            continue;
        };
        let j = ideal.with_generator(x)?.as_module();
        let cert = certified_range(&j);
        let span = span_module(&j);
        let mut shift = 0;
        for i in 0..=cert {
            let target = span_m_power_times(&j, i);
            // least e >= i with J ∩ m^e ⊆ J m^i; e = D+1 always works
            let mut e = i;
            while e <= d {
                checks += 1;
                let cap = span.intersect(&span_m_power(ring, e, 1)?)?;
                if target.contains(&cap)? {
                    break;
                }
                e += 1;
            }
            shift = shift.max(e - i);
        }
        entries.push(StableArEntry {
            x: x.clone(),
            nu: v,
            skipped: false,
            certified_up_to: Some(cert),
            shift: Some(shift),
        });
    }
    let grid: Vec<GridPoint> = grid
        .iter()
        .map(|&a| {
            let need = entries
                .iter()
                .filter_map(|e| {
                    let s = e.shift? as i64;
                    let n = e.nu.exact()? as i64;
                    let an = a * Rational64::from_integer(n);
                    Some(s - an.ceil().to_integer())
                })
                .max()
                .unwrap_or(0)
                .max(0) as u32;
            GridPoint {
                a,
                b: (need <= b_max).then_some(need),
            }
        })
        .collect();
    let best = grid.iter().find(|g| g.b.is_some()).cloned();
    Ok(StableArReport {
        entries,
        grid,
        best,
        checks,
    })
}
