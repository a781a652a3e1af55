//! Closed-form upper bounds for Artin functions in terms of Artin-Rees,
//! ICL and Rees constants.

use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use num_rational::Rational64;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::order::ser_ratio;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FormulaId {
    Prop43i,
    Prop43ii,
    Thm45,
    Cor48Artin,
    Ex433,
    Ex434,
    Lem64,
    Lem66,
    Prop72,
    Prop73,
    Prop74,
    Lin31,
}

impl FormulaId {
    pub const ALL: [FormulaId; 12] = [
        FormulaId::Prop43i,
        FormulaId::Prop43ii,
        FormulaId::Thm45,
        FormulaId::Cor48Artin,
        FormulaId::Ex433,
        FormulaId::Ex434,
        FormulaId::Lem64,
        FormulaId::Lem66,
        FormulaId::Prop72,
        FormulaId::Prop73,
        FormulaId::Prop74,
        FormulaId::Lin31,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            FormulaId::Prop43i => "prop43i",
            FormulaId::Prop43ii => "prop43ii",
            FormulaId::Thm45 => "thm45",
            FormulaId::Cor48Artin => "cor48_artin",
            FormulaId::Ex433 => "ex433",
            FormulaId::Ex434 => "ex434",
            FormulaId::Lem64 => "lem64",
            FormulaId::Lem66 => "lem66",
            FormulaId::Prop72 => "prop72",
            FormulaId::Prop73 => "prop73",
            FormulaId::Prop74 => "prop74",
            FormulaId::Lin31 => "lin31",
        }
    }

    /// Human-readable expression.
    pub fn expression(&self) -> &'static str {
        match self {
            FormulaId::Prop43i => "a*i + a*nu + a*iI + b",
            FormulaId::Prop43ii => "(a+c)*(i+iI) + max(b, iI)",
            FormulaId::Thm45 => "i + a*nu + iI + b",
            FormulaId::Cor48Artin => "2*i + 3*max_ord",
            FormulaId::Ex433 => "i + nu + ord_g",
            FormulaId::Ex434 => "i + max(k, nu+1)",
            FormulaId::Lem64 => "(2a)^(floor(log2 n)+1)*(i+iP+iI) + b*sum_{j=0..floor(log2 n)} (2a)^j",
            FormulaId::Lem66 => "n*ceil((i+iI)/n) + n*c",
            FormulaId::Prop72 => "i + iI + n*(c+1)",
            FormulaId::Prop73 => "i + iI + t*iJn + t*n*(c+1)",
            FormulaId::Prop74 => "floor((i-a)/(n*t)) - t*(a+n)",
            FormulaId::Lin31 => "i + iI",
        }
    }

    /// Parameters the formula reads.
    pub fn parameters(&self) -> &'static [&'static str] {
        match self {
            FormulaId::Prop43i => &["a", "nu", "iI", "b"],
            FormulaId::Prop43ii => &["a", "c", "iI", "b"],
            FormulaId::Thm45 => &["a", "nu", "iI", "b"],
            FormulaId::Cor48Artin => &["max_ord"],
            FormulaId::Ex433 => &["nu", "ord_g"],
            FormulaId::Ex434 => &["k", "nu"],
            FormulaId::Lem64 => &["a", "b", "n", "iP", "iI"],
            FormulaId::Lem66 => &["n", "iI", "c"],
            FormulaId::Prop72 => &["iI", "n", "c"],
            FormulaId::Prop73 => &["iI", "t", "iJn", "n", "c"],
            FormulaId::Prop74 => &["a", "n", "t"],
            FormulaId::Lin31 => &["iI"],
        }
    }
}

impl fmt::Display for FormulaId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl Serialize for FormulaId {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.name())
    }
}

impl FromStr for FormulaId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        FormulaId::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| Error::Parse {
                pos: 0,
                msg: format!("unknown formula `{s}`"),
            })
    }
}

fn ser_opt_ratio<S: Serializer>(q: &Option<Rational64>, s: S) -> std::result::Result<S::Ok, S::Error> {
    match q {
        Some(q) => ser_ratio(q, s),
        None => s.serialize_none(),
    }
}

/// Named constants; a formula fails with `MissingParameter` if one it reads is unset.
#[derive(Debug, Clone, Default, PartialEq, Serialize)]
pub struct BoundParams {
    #[serde(serialize_with = "ser_opt_ratio")]
    pub a: Option<Rational64>,
    pub b: Option<i64>,
    pub c: Option<i64>,
    #[serde(rename = "iI")]
    pub i_i: Option<i64>,
    #[serde(rename = "iP")]
    pub i_p: Option<i64>,
    #[serde(rename = "iJn")]
    pub i_jn: Option<i64>,
    pub n: Option<i64>,
    pub t: Option<i64>,
    pub k: Option<i64>,
    pub ord_g: Option<i64>,
    pub max_ord: Option<i64>,
    pub nu: Option<i64>,
}

impl BoundParams {
    /// Sets a parameter by its catalog name.
    pub fn set(&mut self, name: &str, value: Rational64) -> Result<()> {
        if name == "a" {
            self.a = Some(value);
            return Ok(());
        }
        if !value.is_integer() {
            return Err(Error::precondition(format!("parameter `{name}` must be an integer")));
        }
        let v = Some(value.to_integer());
        match name {
            "b" => self.b = v,
            "c" => self.c = v,
            "iI" => self.i_i = v,
            "iP" => self.i_p = v,
            "iJn" => self.i_jn = v,
            "n" => self.n = v,
            "t" => self.t = v,
            "k" => self.k = v,
            "ord_g" => self.ord_g = v,
            "max_ord" => self.max_ord = v,
            "nu" => self.nu = v,
            _ => {
                return Err(Error::Parse {
                    pos: 0,
                    msg: format!("unknown parameter `{name}`"),
                })
            }
        }
        Ok(())
    }

    pub fn get(&self, name: &str) -> Option<Rational64> {
        let int = |v: Option<i64>| v.map(Rational64::from_integer);
        match name {
            "a" => self.a,
            "b" => int(self.b),
            "c" => int(self.c),
            "iI" => int(self.i_i),
            "iP" => int(self.i_p),
            "iJn" => int(self.i_jn),
            "n" => int(self.n),
            "t" => int(self.t),
            "k" => int(self.k),
            "ord_g" => int(self.ord_g),
            "max_ord" => int(self.max_ord),
            "nu" => int(self.nu),
            _ => None,
        }
    }
}

fn need<T: Copy>(v: Option<T>, name: &'static str) -> Result<T> {
    v.ok_or(Error::MissingParameter(name))
}

fn nonneg(v: i64, name: &str) -> Result<i64> {
    if v < 0 {
        return Err(Error::precondition(format!("parameter `{name}` must be >= 0")));
    }
    Ok(v)
}

fn positive(v: i64, name: &str) -> Result<i64> {
    if v < 1 {
        return Err(Error::precondition(format!("parameter `{name}` must be >= 1")));
    }
    Ok(v)
}

fn floor(q: Rational64) -> i64 {
    q.floor().to_integer()
}

/// Evaluates a catalog bound at `i`. Intermediate arithmetic is exact; the
/// result is rounded down (an Artin function is integer valued).
pub fn evaluate_bound(formula: FormulaId, params: &BoundParams, i: i64) -> Result<i64> {
    if i < 0 {
        return Err(Error::precondition("i must be >= 0"));
    }
    let q = Rational64::from_integer;
    let a = || -> Result<Rational64> {
        let a = need(params.a, "a")?;
        if a < q(1) {
            return Err(Error::precondition("ICL constant a must be >= 1"));
        }
        Ok(a)
    };
    let b = || need(params.b, "b").and_then(|v| nonneg(v, "b"));
    let c = || need(params.c, "c").and_then(|v| nonneg(v, "c"));
    let i_i = || need(params.i_i, "iI").and_then(|v| nonneg(v, "iI"));
    let i_p = || need(params.i_p, "iP").and_then(|v| nonneg(v, "iP"));
    let i_jn = || need(params.i_jn, "iJn").and_then(|v| nonneg(v, "iJn"));
    let n = || need(params.n, "n").and_then(|v| positive(v, "n"));
    let t = || need(params.t, "t").and_then(|v| positive(v, "t"));
    let k = || need(params.k, "k").and_then(|v| nonneg(v, "k"));
    let nu = || need(params.nu, "nu").and_then(|v| nonneg(v, "nu"));
    let ord_g = || need(params.ord_g, "ord_g").and_then(|v| nonneg(v, "ord_g"));
    let max_ord = || need(params.max_ord, "max_ord").and_then(|v| nonneg(v, "max_ord"));

    Ok(match formula {
        FormulaId::Prop43i => {
            let a = a()?;
            floor(a * q(i) + a * q(nu()?) + a * q(i_i()?) + q(b()?))
        }
        FormulaId::Prop43ii => {
            let (a, c, ii, b) = (a()?, c()?, i_i()?, b()?);
            floor((a + q(c)) * q(i + ii)) + b.max(ii)
        }
        FormulaId::Thm45 => {
            let a = a()?;
            floor(q(i) + a * q(nu()?) + q(i_i()?) + q(b()?))
        }
        FormulaId::Cor48Artin => 2 * i + 3 * max_ord()?,
        FormulaId::Ex433 => i + nu()? + ord_g()?,
        FormulaId::Ex434 => i + k()?.max(nu()? + 1),
        FormulaId::Lem64 => {
            let (a, b, n) = (a()?, b()?, n()?);
            let l = n.ilog2();
            let two_a = q(2) * a;
            let lead = pow(two_a, l + 1) * q(i + i_p()? + i_i()?);
            let tail: Rational64 = (0..=l).map(|j| pow(two_a, j)).sum();
            floor(lead + q(b) * tail)
        }
        FormulaId::Lem66 => {
            let (n, ii, c) = (n()?, i_i()?, c()?);
            n * Integer::div_ceil(&(i + ii), &n) + n * c
        }
        FormulaId::Prop72 => i + i_i()? + n()? * (c()? + 1),
        FormulaId::Prop73 => {
            let t = t()?;
            i + i_i()? + t * i_jn()? + t * n()? * (c()? + 1)
        }
        FormulaId::Prop74 => {
            let a = a()?;
            if !a.is_integer() {
                return Err(Error::precondition(
                    "prop74 reads `a` as an integer (a root-of-unity order)",
                ));
            }
            let a = a.to_integer();
            let (n, t) = (n()?, t()?);
            Integer::div_floor(&(i - a), &(n * t)) - t * (a + n)
        }
        FormulaId::Lin31 => i + i_i()?,
    })
}

fn pow(x: Rational64, e: u32) -> Rational64 {
    (0..e).fold(Rational64::from_integer(1), |acc, _| acc * x)
}

#[derive(Debug, Clone, Serialize)]
pub struct CheckPoint {
    pub i: i64,
    pub measured: i64,
    pub bound: i64,
    pub ok: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct CrossCheckReport {
    pub formula: FormulaId,
    pub params: BoundParams,
    pub points: Vec<CheckPoint>,
    pub exceeded: Vec<i64>,
    /// `consistent`, `exceeded`, or `no affine bound` when the excess keeps
    /// growing over the last exceeded points.
    pub verdict: String,
}

/// Compares measured values `(i, v)` with the bound and flags every `v > bound(i)`.
pub fn cross_check_bound(
    formula: FormulaId,
    params: &BoundParams,
    empirical: &[(i64, i64)],
) -> Result<CrossCheckReport> {
    let points = empirical
        .iter()
        .map(|&(i, measured)| {
            let bound = evaluate_bound(formula, params, i)?;
            Ok(CheckPoint {
                i,
                measured,
                bound,
                ok: measured <= bound,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let exceeded: Vec<i64> = points.iter().filter(|p| !p.ok).map(|p| p.i).collect();
    let verdict = if exceeded.is_empty() {
        "consistent"
    } else {
        let mut tail: Vec<&CheckPoint> = points.iter().filter(|p| !p.ok).collect();
        tail.sort_by_key(|p| p.i);
        let gaps: Vec<i64> = tail.iter().map(|p| p.measured - p.bound).collect();
        let at_end = tail.last().map(|p| p.i) == points.iter().map(|p| p.i).max();
        if tail.len() >= 2 && at_end && gaps.windows(2).all(|w| w[1] > w[0]) {
            "no affine bound"
        } else {
            "exceeded"
        }
    }
    .to_string();
    Ok(CrossCheckReport {
        formula,
        params: params.clone(),
        points,
        exceeded,
        verdict,
    })
}
