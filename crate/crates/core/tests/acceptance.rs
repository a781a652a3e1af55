//! Acceptance suite: one PASS/FAIL line per criterion, with wall-clock limits.
//! Run with `cargo test --test acceptance`.

mod common;

use std::collections::{BTreeMap, BTreeSet};
use std::time::{Duration, Instant};

use artin_lab::artin::{
    artin_rees_index, beta_lower_bound_bruteforce, certified_range, solve_fx_hy, solve_linear_regular, PolySystem,
};
use artin_lab::bounds::{evaluate_bound, BoundParams, FormulaId};
use artin_lab::order::{icl_scan, nu, nu_bar_estimate, BMin, Sampling};
use artin_lab::parse::{parse_list, parse_poly};
use artin_lab::series::{ExtOrder, Ring, TruncatedSeries};
use artin_lab::witness::{irreducibility_exhaustive, monomial_witness_family};
use artin_lab::{Field, IdealSpec, ModuleSpec, RingSpec};
use common::{exponents_in_range, mono, nu_oracle, random_series};
use num_rational::Rational64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Check = Result<(), String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn ring(n: usize, field: Field, d: u32) -> Ring {
    RingSpec::standard(n, field, d).expect("valid ring")
}

// ---------------------------------------------------------------- AC1

fn ac1() -> Check {
    let r = ring(3, Field::Rationals, 36);
    for i in 1..=6u32 {
        let fam = monomial_witness_family(i, &r).map_err(err)?;
        let expected = if i == 1 {
            "T3".to_string()
        } else {
            format!("T3^{}", i * i)
        };
        ensure!(
            fam.residual.to_string() == expected,
            "i={i}: residual {} != {expected}",
            fam.residual
        );
        ensure!(
            fam.residual_order == ExtOrder::Exact(i * i),
            "i={i}: order {}",
            fam.residual_order
        );
        // substitute back: x1 x2 - x3 x4 with x1, x2, x3 rebuilt from their definitions
        let p = |s: &str| parse_poly(s, &r).unwrap();
        ensure!(
            fam.x1 == p(&format!("T1^{i}")) && fam.x2 == p(&format!("T2^{i}")),
            "i={i}: x1/x2"
        );
        ensure!(fam.x3 == p(&format!("T1*T2 - T3^{i}")), "i={i}: x3");
        let lhs = &(&fam.x1 * &fam.x2) - &(&fam.x3 * &fam.x4);
        ensure!(lhs == p(&expected), "i={i}: substitution gives {lhs}");
    }
    Ok(())
}

// ---------------------------------------------------------------- AC2

/// Independent dense search: pairs of non-units with parts of degree
/// `1..i` over `F_p` whose product is `T1*T2 - T3^i` modulo `m^(i+1)`.
fn factorizations_oracle(i: u32, p: u32, target: &BTreeMap<Vec<u32>, u32>) -> u64 {
    let cols = exponents_in_range(3, 1, i - 1);
    let all = exponents_in_range(3, 0, i);
    let index: BTreeMap<Vec<u32>, usize> = all.iter().cloned().enumerate().map(|(k, e)| (e, k)).collect();
    let mut want = vec![0u32; all.len()];
    for (e, c) in target {
        want[index[e]] = *c;
    }
    let c = cols.len() as u32;
    let total = (p as u64).pow(c);
    let digits = |mut n: u64| -> Vec<u32> {
        (0..c)
            .map(|_| {
                let d = (n % p as u64) as u32;
                n /= p as u64;
                d
            })
            .collect()
    };
    let products: Vec<Vec<Option<usize>>> = cols
        .iter()
        .map(|a| {
            cols.iter()
                .map(|b| {
                    let e: Vec<u32> = a.iter().zip(b).map(|(x, y)| x + y).collect();
                    index.get(&e).copied()
                })
                .collect()
        })
        .collect();
    let mut found = 0;
    for xn in 0..total {
        let x = digits(xn);
        for yn in 0..total {
            let y = digits(yn);
            let mut prod = vec![0u64; all.len()];
            for (a, xa) in x.iter().enumerate().filter(|(_, v)| **v != 0) {
                for (b, yb) in y.iter().enumerate().filter(|(_, v)| **v != 0) {
                    if let Some(k) = products[a][b] {
                        prod[k] = (prod[k] + (*xa as u64) * (*yb as u64)) % p as u64;
                    }
                }
            }
            if prod.iter().zip(&want).all(|(a, b)| *a == *b as u64) {
                found += 1;
            }
        }
    }
    found
}

fn binomial_target(i: u32, p: u32, reducible: bool) -> BTreeMap<Vec<u32>, u32> {
    let mut t = BTreeMap::new();
    t.insert(vec![1, 1, 0], 1);
    if !reducible {
        t.insert(vec![0, 0, i], p - 1);
    }
    t
}

fn ac2() -> Check {
    for (i, p) in [(2, 2), (2, 3), (3, 2)] {
        let cert = irreducibility_exhaustive(i, p, 1 << 24).map_err(err)?;
        ensure!(
            cert.factorizations_found == 0,
            "(i={i}, p={p}): {} factorizations",
            cert.factorizations_found
        );
        let oracle = factorizations_oracle(i, p, &binomial_target(i, p, false));
        ensure!(oracle == 0, "(i={i}, p={p}): oracle finds {oracle}");
    }
    // the oracle does find factorizations of a reducible target
    ensure!(
        factorizations_oracle(2, 2, &binomial_target(2, 2, true)) > 0,
        "oracle misses T1*T2"
    );
    Ok(())
}

// ---------------------------------------------------------------- AC3

/// `k_i` for a module generated by one monomial per component, from the
/// monomial combinatorics: both sides of each inclusion are monomial spans.
fn monomial_levels(gens: &[Vec<u32>], nv: usize, d: u32, up_to: u32) -> Vec<u32> {
    let all = exponents_in_range(nv, 0, d);
    let divides = |a: &[u32], b: &[u32]| a.iter().zip(b).all(|(x, y)| x <= y);
    let deg = |e: &[u32]| e.iter().sum::<u32>();
    (0..=up_to)
        .map(|i| {
            // elements of M ∩ m^i; m^k M needs the cofactor degree to be >= k
            let min_cofactor = gens
                .iter()
                .flat_map(|g| {
                    all.iter()
                        .filter(move |u| divides(g, u) && deg(u) >= i)
                        .map(move |u| deg(u) - deg(g))
                })
                .min();
            min_cofactor.map_or(i, |m| m.min(i))
        })
        .collect()
}

fn ac3() -> Check {
    let r = ring(2, Field::Rationals, 8);
    let p = |s: &str| parse_poly(s, &r).unwrap();
    let zero = p("0");
    let cases: Vec<(&str, ModuleSpec, Vec<Vec<u32>>, u32)> = vec![
        (
            "(T1)",
            IdealSpec::new(&r, vec![p("T1")]).unwrap().as_module(),
            vec![vec![1, 0]],
            1,
        ),
        (
            "(T1^2)",
            IdealSpec::new(&r, vec![p("T1^2")]).unwrap().as_module(),
            vec![vec![2, 0]],
            2,
        ),
        (
            "{(T1,0),(0,T2)}",
            ModuleSpec::new(&r, 2, vec![vec![p("T1"), zero.clone()], vec![zero.clone(), p("T2")]]).unwrap(),
            vec![vec![1, 0], vec![0, 1]],
            1,
        ),
    ];
    for (name, m, monos, expected) in cases {
        let res = artin_rees_index(&m, None).map_err(err)?;
        let oracle = monomial_levels(&monos, 2, 8, res.certified_up_to);
        let oracle_i0 = oracle.iter().enumerate().map(|(i, k)| i as u32 - k).max().unwrap();
        ensure!(res.i0 == expected, "{name}: i0 = {} != {expected}", res.i0);
        ensure!(
            res.levels == oracle,
            "{name}: levels {:?} vs brute force {:?}",
            res.levels,
            oracle
        );
        ensure!(oracle_i0 == expected, "{name}: brute-force i0 = {oracle_i0}");
        ensure!(res.certified_up_to == certified_range(&m), "{name}: certified range");
    }
    Ok(())
}

// ---------------------------------------------------------------- AC4

/// Enumerates every `x` in `F_2[[T1,T2]]/m^(D+1)` as a bit mask, groups by
/// the class mod `m^(i+1)` and returns the largest `ord(T1 x)` over
/// classes containing no `x` with `T1 x = 0`.
fn beta_t1x_oracle(d: u32, i: u32) -> u32 {
    let monos = exponents_in_range(2, 0, d);
    let index: BTreeMap<Vec<u32>, usize> = monos.iter().cloned().enumerate().map(|(k, e)| (e, k)).collect();
    let shift: Vec<Option<usize>> = monos
        .iter()
        .map(|e| index.get(&vec![e[0] + 1, e[1]]).copied())
        .collect();
    let deg: Vec<u32> = monos.iter().map(|e| e[0] + e[1]).collect();
    let low_mask: u64 = (0..monos.len()).filter(|&k| deg[k] <= i).map(|k| 1u64 << k).sum();
    let mut solvable: BTreeSet<u64> = BTreeSet::new();
    let mut best: BTreeMap<u64, u32> = BTreeMap::new();
    for x in 0u64..(1 << monos.len()) {
        let mut ord = None;
        for (k, target) in shift.iter().enumerate() {
            if x >> k & 1 == 1 {
                if let Some(t) = *target {
                    ord = Some(ord.map_or(deg[t], |o: u32| o.min(deg[t])));
                }
            }
        }
        let class = x & low_mask;
        match ord {
            None => {
                solvable.insert(class);
            }
            Some(o) => {
                let e = best.entry(class).or_insert(0);
                *e = (*e).max(o);
            }
        }
    }
    best.into_iter()
        .filter(|(c, _)| !solvable.contains(c))
        .map(|(_, o)| o)
        .max()
        .unwrap_or(0)
}

fn ac4() -> Check {
    let r = ring(2, Field::Prime(2), 5);
    let sys = PolySystem::parse(&r, &["X1".to_string()], &["T1*X1".to_string()]).map_err(err)?;
    let i0 = artin_rees_index(
        &IdealSpec::new(&r, vec![parse_poly("T1", &r).unwrap()])
            .unwrap()
            .as_module(),
        None,
    )
    .map_err(err)?
    .i0;
    for i in 0..=3u32 {
        let res = beta_lower_bound_bruteforce(&sys, i, 1 << 24).map_err(err)?;
        ensure!(res.beta == i + 1, "i={i}: beta {} != {}", res.beta, i + 1);
        ensure!(res.beta == i + i0, "i={i}: beta != i + i0 = {}", i + i0);
        let oracle = beta_t1x_oracle(5, i);
        ensure!(oracle == res.beta, "i={i}: enumeration oracle gives {oracle}");
    }
    Ok(())
}

// ---------------------------------------------------------------- AC5

fn ac5() -> Check {
    let one = Rational64::from_integer(1);
    let sampling = Sampling::Random { count: 32, seed: 5 };

    let r = ring(2, Field::Rationals, 8);
    let cusp = IdealSpec::new(&r, parse_list("T1^2 + T2^3", &r).unwrap()).unwrap();
    let rep = icl_scan(&cusp, 3, one, sampling, 1 << 24).map_err(err)?;
    // ord(g) - 2 with g = T2^3
    ensure!(rep.b_min == BMin::Finite(1), "cusp: b_min {:?}", rep.b_min);
    let t1 = parse_poly("T1", &r).unwrap();
    let pair = rep.attaining_pairs.iter().find(|p| p.g == t1 && p.h == t1);
    ensure!(pair.is_some(), "cusp: (T1,T1) not among attaining pairs");
    let oracle = nu_oracle(cusp.generators(), &(&t1 * &t1));
    ensure!(oracle == ExtOrder::Exact(3), "cusp: oracle nu(T1^2) = {oracle}");
    ensure!(
        pair.unwrap().nu_gh == oracle,
        "cusp: scan nu(T1^2) disagrees with oracle"
    );

    let r3 = ring(3, Field::Rationals, 8);
    let quad = IdealSpec::new(&r3, parse_list("T1^2 + T2^2 + T3^2", &r3).unwrap()).unwrap();
    let rep = icl_scan(&quad, 3, one, Sampling::Random { count: 24, seed: 5 }, 1 << 24).map_err(err)?;
    ensure!(rep.b_min == BMin::Finite(0), "T1^2+T2^2+T3^2: b_min {:?}", rep.b_min);

    let cross = IdealSpec::new(&r, parse_list("T1*T2", &r).unwrap()).unwrap();
    let rep = icl_scan(&cross, 2, one, sampling, 1 << 24).map_err(err)?;
    ensure!(rep.b_min == BMin::Unbounded, "T1*T2: b_min {:?}", rep.b_min);
    let t2 = parse_poly("T2", &r).unwrap();
    let hit = rep
        .violations
        .iter()
        .any(|p| (p.g == t1 && p.h == t2) || (p.g == t2 && p.h == t1));
    ensure!(hit, "T1*T2: no violation reported at (T1,T2)");
    ensure!(
        nu_oracle(cross.generators(), &t1) == ExtOrder::Exact(1),
        "T1*T2: oracle nu(T1)"
    );
    Ok(())
}

// ---------------------------------------------------------------- AC6

fn ac6() -> Check {
    let r = ring(2, Field::Rationals, 12);
    let i = IdealSpec::new(&r, parse_list("T1^2 - T2^3", &r).unwrap()).unwrap();
    let t1 = parse_poly("T1", &r).unwrap();
    let est = nu_bar_estimate(&i, &t1, 4).map_err(err)?;
    ensure!(est.estimate == Rational64::new(3, 2), "estimate {}", est.estimate);
    ensure!(est.nu_x == ExtOrder::Exact(1), "nu(T1) = {}", est.nu_x);
    ensure!(Rational64::from_integer(1) <= est.estimate, "nu > nubar");
    for s in &est.samples {
        // T1^2 = T2^3 mod I, so nu(T1^n) = floor(3n/2)
        let oracle = nu_oracle(i.generators(), &t1.pow(s.n as u64));
        ensure!(s.nu == oracle, "n={}: {} vs oracle {oracle}", s.n, s.nu);
        ensure!(oracle == ExtOrder::Exact(3 * s.n / 2), "n={}: oracle {oracle}", s.n);
    }
    Ok(())
}

// ---------------------------------------------------------------- AC7

fn field_for(seed: u64) -> Field {
    if seed.is_multiple_of(2) {
        Field::Rationals
    } else {
        Field::Prime(7)
    }
}

fn dot(f: &[TruncatedSeries], x: &[TruncatedSeries]) -> TruncatedSeries {
    f.iter()
        .zip(x)
        .fold(TruncatedSeries::zero(f[0].ring()), |acc, (a, b)| &acc + &(a * b))
}

fn linreg_instance(seed: u64) -> Result<bool, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = rng.gen_range(2..=3usize);
    let mut vars = [0usize, 1, 2];
    for k in (1..3).rev() {
        vars.swap(k, rng.gen_range(0..=k));
    }
    let mut exps: Vec<u32> = (0..n).map(|_| rng.gen_range(1..=2)).collect();
    exps.sort();
    let top = *exps.last().unwrap();
    let i = rng.gen_range(1..=2u32);
    let d = i + top + 1;
    let r = ring(3, field_for(seed), d);
    let f: Vec<TruncatedSeries> = (0..n)
        .map(|j| {
            let mut e = vec![0; 3];
            e[vars[j]] = exps[j];
            &mono(&r, &e) + &random_series(&mut rng, &r, exps[j] + 1, exps[j] + 2, 2)
        })
        .collect();
    // exact Koszul solution plus a perturbation of admissible order
    let mut x = vec![TruncatedSeries::zero(&r); n];
    for a in 0..n {
        for b in a + 1..n {
            let u = random_series(&mut rng, &r, 0, 2, 3);
            x[a] = &x[a] + &(&u * &f[b]);
            x[b] = &x[b] - &(&u * &f[a]);
        }
    }
    for (j, xj) in x.iter_mut().enumerate() {
        let lo = i + top - exps[j] + 1;
        if lo <= d {
            *xj = &*xj + &random_series(&mut rng, &r, lo, d, 2);
        }
    }
    let cert = solve_linear_regular(&f, &x, i, false).map_err(|e| format!("seed {seed}: {e}"))?;
    ensure!(dot(&f, &cert.output).is_zero(), "seed {seed}: residual nonzero");
    for j in 0..n {
        let need = i + top - exps[j] + 1;
        let diff = &cert.output[j] - &x[j];
        ensure!(
            diff.ord().at_least(need),
            "seed {seed}: proximity of X{} is {} < {need}",
            j + 1,
            diff.ord()
        );
    }
    ensure!(cert.holds(), "seed {seed}: certificate does not hold");
    Ok(cert.output != x)
}

fn fxhy_instance(seed: u64) -> Result<bool, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let d = 9;
    let r = ring(2, field_for(seed), d);
    loop {
        let k = rng.gen_range(1..=2u32);
        let i = rng.gen_range(1..=2u32);
        let c = random_series(&mut rng, &r, k + 1, k + 1, 1);
        let lead = &mono(&r, &[0, k + 1]) + &c;
        if !lead.terms().keys().any(|m| m.exponents()[0] == 0) {
            continue;
        }
        let f = &(&mono(&r, &[k, 0]) + &lead) + &random_series(&mut rng, &r, k + 2, k + 3, 2);
        let h = random_series(&mut rng, &r, 1, 3, 3);
        let Some(nu_h) = nu_oracle(std::slice::from_ref(&f), &h).exact() else {
            continue;
        };
        let m = k.max(nu_h + 1);
        if i + m + 1 > d {
            continue;
        }
        let z = random_series(&mut rng, &r, 0, 2, 2);
        let ord_h = h.ord().exact().unwrap();
        let mut x = &h * &z;
        let mut y = -&(&f * &z);
        x = &x + &random_series(&mut rng, &r, i + m + 1 - k, d, 2);
        if i + m + 1 >= ord_h {
            y = &y + &random_series(&mut rng, &r, (i + m + 1 - ord_h).max(1), d, 2);
        }
        let cert = solve_fx_hy(k, &f, &h, &x, &y, i).map_err(|e| format!("seed {seed}: {e}"))?;
        let (xb, yb) = (&cert.output[0], &cert.output[1]);
        ensure!((&(&f * xb) + &(&h * yb)).is_zero(), "seed {seed}: residual nonzero");
        ensure!((xb - &x).ord().at_least(i + 1), "seed {seed}: x proximity");
        ensure!((yb - &y).ord().at_least(i + 1), "seed {seed}: y proximity");
        ensure!(cert.holds(), "seed {seed}: certificate does not hold");
        return Ok(cert.output != [x, y]);
    }
}

fn ac7() -> Check {
    let (mut moved_lin, mut moved_fxhy) = (0, 0);
    for seed in 0..100 {
        moved_lin += linreg_instance(seed)? as u32;
        moved_fxhy += fxhy_instance(seed)? as u32;
    }
    // most perturbed inputs must actually need a correction
    ensure!(
        moved_lin >= 50 && moved_fxhy >= 50,
        "only {moved_lin}/{moved_fxhy} inputs were corrected"
    );
    let r = ring(2, Field::Rationals, 8);
    let p = |s: &str| parse_poly(s, &r).unwrap();
    let f = [p("T1"), p("T2^2")];
    let c = solve_linear_regular(&f, &[p("T2^2"), p("-T1 + T1^5")], 3, false).map_err(err)?;
    ensure!(
        c.output == vec![p("T2^2"), p("-T1")],
        "worked example 1: {:?}",
        c.output
    );
    ensure!(
        (&c.output[1] - &p("-T1 + T1^5")).ord().at_least(4),
        "worked example 1: proximity"
    );
    let c = solve_linear_regular(&f, &[p("T1^4"), p("T2^3")], 2, false).map_err(err)?;
    ensure!(c.output.iter().all(|s| s.is_zero()), "worked example 2: {:?}", c.output);
    let r9 = ring(2, Field::Rationals, 9);
    let q = |s: &str| parse_poly(s, &r9).unwrap();
    let f = q("T1^2 + T2^3");
    let c = solve_fx_hy(2, &f, &q("T1"), &q("T1 + T1^4"), &-&f, 3).map_err(err)?;
    ensure!(c.output == vec![q("T1"), -&f], "worked example 3: {:?}", c.output);
    Ok(())
}

// ---------------------------------------------------------------- AC8

fn params_grid() -> Vec<BoundParams> {
    let mut out = Vec::new();
    for a in [
        Rational64::from_integer(1),
        Rational64::new(3, 2),
        Rational64::from_integer(2),
    ] {
        for small in 0..=2i64 {
            for pos in 1..=3i64 {
                out.push(BoundParams {
                    a: Some(a),
                    b: Some(small),
                    c: Some(small),
                    i_i: Some(2 - small),
                    i_p: Some(small),
                    i_jn: Some(small),
                    n: Some(pos),
                    t: Some(4 - pos),
                    k: Some(pos),
                    ord_g: Some(small + 2),
                    max_ord: Some(small + 1),
                    nu: Some(small),
                });
            }
        }
    }
    out
}

const PARAM_NAMES: [&str; 12] = [
    "a", "b", "c", "iI", "iP", "iJn", "n", "t", "k", "ord_g", "max_ord", "nu",
];

fn bump(p: &BoundParams, name: &str) -> BoundParams {
    let mut q = p.clone();
    let v = q.get(name).unwrap();
    q.set(name, v + Rational64::from_integer(1)).unwrap();
    q
}

fn ac8() -> Check {
    let mk = |pairs: &[(&str, i64)]| {
        let mut p = BoundParams::default();
        for (k, v) in pairs {
            p.set(k, Rational64::from_integer(*v)).unwrap();
        }
        p
    };
    let v = evaluate_bound(FormulaId::Cor48Artin, &mk(&[("max_ord", 2)]), 5).map_err(err)?;
    ensure!(v == 16, "cor48_artin: {v}");
    let v = evaluate_bound(FormulaId::Lem66, &mk(&[("n", 2), ("iI", 1), ("c", 0)]), 4).map_err(err)?;
    ensure!(v == 6, "lem66: {v}");
    let v = evaluate_bound(FormulaId::Prop74, &mk(&[("a", 2), ("t", 1), ("n", 1)]), 10).map_err(err)?;
    ensure!(v == 5, "prop74: {v}");

    for f in FormulaId::ALL {
        // direction of each constant, fixed by the first grid point where it matters
        let mut direction: BTreeMap<&str, i64> = BTreeMap::new();
        for p in params_grid() {
            // prop74 reads a as an integer root-of-unity order
            if f == FormulaId::Prop74 && !p.a.unwrap().is_integer() {
                ensure!(evaluate_bound(f, &p, 0).is_err(), "prop74 accepted a = {:?}", p.a);
                continue;
            }
            let vals: Vec<i64> = (0..=50).map(|i| evaluate_bound(f, &p, i).unwrap()).collect();
            ensure!(vals.windows(2).all(|w| w[0] <= w[1]), "{f}: not monotone in i at {p:?}");
            for name in PARAM_NAMES {
                // n*ceil(m/n) is the least multiple of n above m: not monotone in the exponent n
                if f == FormulaId::Lem66 && name == "n" {
                    continue;
                }
                let q = bump(&p, name);
                for i in (0..=50).step_by(5) {
                    let delta = (evaluate_bound(f, &q, i).unwrap() - vals[i as usize]).signum();
                    if delta == 0 {
                        continue;
                    }
                    let dir = *direction.entry(name).or_insert(delta);
                    ensure!(dir == delta, "{f}: not monotone in {name}");
                }
            }
        }
        for name in direction.keys().filter(|n| **n != "n" || f != FormulaId::Lem66) {
            ensure!(f.parameters().contains(name), "{f}: depends on unlisted {name}");
        }
    }
    // the exempted direction really is non-monotone
    let at = |n| evaluate_bound(FormulaId::Lem66, &mk(&[("n", n), ("iI", 0), ("c", 0)]), 5).unwrap();
    ensure!(at(4) == 8 && at(5) == 5, "lem66 in n: {} {}", at(4), at(5));
    for p in params_grid() {
        for i in 0..=100 {
            let lem66 = evaluate_bound(FormulaId::Lem66, &p, i).unwrap();
            let rhs = i + p.i_i.unwrap() + p.n.unwrap() * (p.c.unwrap() + 1);
            ensure!(lem66 <= rhs, "lem66({i}) = {lem66} > {rhs}");
            ensure!(
                lem66 <= evaluate_bound(FormulaId::Prop72, &p, i).unwrap(),
                "lem66 > prop72 at {i}"
            );
        }
    }
    Ok(())
}

// ---------------------------------------------------------------- AC9

fn ac9() -> Check {
    for seed in 0..20u64 {
        let mut rng = ChaCha8Rng::seed_from_u64(1000 + seed);
        let r = ring(2, Field::Rationals, 8);
        let ngens = rng.gen_range(1..=2);
        let gens: Vec<TruncatedSeries> = (0..ngens).map(|_| random_series(&mut rng, &r, 1, 3, 3)).collect();
        let mut aug = gens.clone();
        for _ in 0..rng.gen_range(1..=2) {
            let combo = gens.iter().fold(TruncatedSeries::zero(&r), |acc, g| {
                &acc + &(&random_series(&mut rng, &r, 0, 2, 3) * g)
            });
            aug.push(combo);
        }
        let i1 = IdealSpec::new(&r, gens.clone()).map_err(err)?;
        let i2 = IdealSpec::new(&r, aug).map_err(err)?;
        let mut tests: Vec<TruncatedSeries> = exponents_in_range(2, 1, 2).iter().map(|e| mono(&r, e)).collect();
        tests.extend((0..10).map(|_| random_series(&mut rng, &r, 1, 4, 3)));
        for (t, x) in tests.iter().enumerate() {
            let a = nu(&i1, x).map_err(err)?;
            let b = nu(&i2, x).map_err(err)?;
            ensure!(a == b, "seed {seed}: nu({x}) {a} vs {b}");
            if t < 4 {
                let o = nu_oracle(&gens, x);
                ensure!(a == o, "seed {seed}: nu({x}) {a} vs oracle {o}");
            }
        }
        let (m1, m2) = (i1.as_module(), i2.as_module());
        let up = certified_range(&m1).min(certified_range(&m2));
        let r1 = artin_rees_index(&m1, Some(up)).map_err(err)?;
        let r2 = artin_rees_index(&m2, Some(up)).map_err(err)?;
        ensure!(
            r1.i0 == r2.i0 && r1.levels == r2.levels,
            "seed {seed}: i0 {} vs {}",
            r1.i0,
            r2.i0
        );
    }
    Ok(())
}

// ----------------------------------------------------------------

type Criterion = (&'static str, &'static str, fn() -> Check, Duration);

fn main() {
    let criteria: [Criterion; 9] = [
        (
            "AC1",
            "witness family residual T3^(i^2), i <= 6, D = 36",
            ac1,
            Duration::from_secs(1),
        ),
        (
            "AC2",
            "exhaustive irreducibility (2,2) (2,3) (3,2)",
            ac2,
            Duration::from_secs(30),
        ),
        (
            "AC3",
            "Artin-Rees indices vs monomial brute force",
            ac3,
            Duration::from_secs(5),
        ),
        (
            "AC4",
            "beta-lb for T1*X1 over F_2 equals i + i0",
            ac4,
            Duration::from_secs(60),
        ),
        (
            "AC5",
            "ICL constants: cusp, quadric, T1*T2",
            ac5,
            Duration::from_secs(60),
        ),
        (
            "AC6",
            "Rees estimate for T1 mod T1^2 - T2^3",
            ac6,
            Duration::from_secs(5),
        ),
        (
            "AC7",
            "constructive solvers, 100 random instances each",
            ac7,
            Duration::from_secs(30),
        ),
        (
            "AC8",
            "bound catalog values; monotone in i and constants (lem66 not in n)",
            ac8,
            Duration::from_secs(1),
        ),
        ("AC9", "generator invariance of nu and i0", ac9, Duration::from_secs(60)),
    ];
    let mut failed = 0;
    for (id, what, run, limit) in criteria {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        let verdict = match (&outcome, elapsed <= limit) {
            (Ok(()), true) => "PASS".to_string(),
            (Ok(()), false) => format!("FAIL (took {elapsed:.2?}, limit {limit:?})"),
            (Err(e), _) => format!("FAIL ({e})"),
        };
        if !verdict.starts_with("PASS") {
            failed += 1;
        }
        println!("{id} {verdict:<6} {what} [{elapsed:.2?}]");
    }
    if failed > 0 {
        eprintln!("{failed} acceptance criteria failed");
        std::process::exit(1);
    }
}
