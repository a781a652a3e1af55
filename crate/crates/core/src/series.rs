//! Multivariate formal power series truncated at total degree `D`.
//!
//! Everything lives in the finite-dimensional algebra `k[T_1..T_N] / m^(D+1)`,
//! so every product is exact and monomials above degree `D` are dropped.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, OnceLock};

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::scalar::{Field, Scalar};

/// Exponent vector. Ordered by total degree first, then lexicographically with
/// `T1 > T2 > ...`, so iteration runs from low degree to high and, within a
/// degree, `T1^2` comes before `T1*T2` before `T2^2`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Vec<u32>,
}

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Self {
        Monomial { exps }
    }

    pub fn one(num_vars: usize) -> Self {
        Monomial {
            exps: vec![0; num_vars],
        }
    }

    pub fn var(num_vars: usize, idx: usize, exp: u32) -> Self {
        let mut exps = vec![0; num_vars];
        exps[idx] = exp;
        Monomial { exps }
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().sum()
    }

    pub fn num_vars(&self) -> usize {
        self.exps.len()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: self.exps.iter().zip(&other.exps).map(|(a, b)| a + b).collect(),
        }
    }

    /// `self / other` when `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        let mut exps = Vec::with_capacity(self.exps.len());
        for (a, b) in self.exps.iter().zip(&other.exps) {
            exps.push(a.checked_sub(*b)?);
        }
        Some(Monomial { exps })
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    fn write_with(&self, f: &mut impl fmt::Write, names: &[String]) -> fmt::Result {
        let mut first = true;
        for (name, &e) in names.iter().zip(&self.exps) {
            if e == 0 {
                continue;
            }
            if !first {
                f.write_char('*')?;
            }
            first = false;
            if e == 1 {
                write!(f, "{name}")?;
            } else {
                write!(f, "{name}^{e}")?;
            }
        }
        if first {
            f.write_char('1')?;
        }
        Ok(())
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| other.exps.cmp(&self.exps))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// All monomials in `n` variables of degree exactly `d`, in [`Monomial`] order.
pub fn monomials_of_degree(n: usize, d: u32) -> Vec<Monomial> {
    fn rec(n: usize, idx: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if idx + 1 == n {
            cur[idx] = left;
            out.push(Monomial::new(cur.clone()));
            return;
        }
        for e in (0..=left).rev() {
            cur[idx] = e;
            rec(n, idx + 1, left - e, cur, out);
        }
        cur[idx] = 0;
    }
    let mut out = Vec::new();
    if n == 0 {
        if d == 0 {
            out.push(Monomial::new(vec![]));
        }
        return out;
    }
    rec(n, 0, d, &mut vec![0; n], &mut out);
    out
}

/// Monomials of degree `lo..=hi`, in [`Monomial`] order.
pub fn monomials_in_range(n: usize, lo: u32, hi: u32) -> Vec<Monomial> {
    (lo..=hi).flat_map(|d| monomials_of_degree(n, d)).collect()
}

/// Dense index of all monomials of degree `<= D`.
#[derive(Debug)]
pub struct MonomialBasis {
    monomials: Vec<Monomial>,
    index: HashMap<Monomial, usize>,
    degree_start: Vec<usize>,
}

impl MonomialBasis {
    fn new(n: usize, trunc: u32) -> Self {
        let mut monomials = Vec::new();
        let mut degree_start = Vec::with_capacity(trunc as usize + 2);
        for d in 0..=trunc {
            degree_start.push(monomials.len());
            monomials.extend(monomials_of_degree(n, d));
        }
        degree_start.push(monomials.len());
        let index = monomials.iter().enumerate().map(|(i, m)| (m.clone(), i)).collect();
        MonomialBasis {
            monomials,
            index,
            degree_start,
        }
    }

    pub fn len(&self) -> usize {
        self.monomials.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monomials.is_empty()
    }

    pub fn monomial(&self, idx: usize) -> &Monomial {
        &self.monomials[idx]
    }

    pub fn monomials(&self) -> &[Monomial] {
        &self.monomials
    }

    pub fn index_of(&self, m: &Monomial) -> Option<usize> {
        self.index.get(m).copied()
    }

    /// Index range of the monomials of degree exactly `d`.
    pub fn degree_range(&self, d: u32) -> std::ops::Range<usize> {
        let d = d as usize;
        if d + 1 >= self.degree_start.len() {
            let end = *self.degree_start.last().unwrap();
            return end..end;
        }
        self.degree_start[d]..self.degree_start[d + 1]
    }

    /// Number of monomials of degree `< d`.
    pub fn count_below(&self, d: u32) -> usize {
        let d = (d as usize).min(self.degree_start.len() - 1);
        self.degree_start[d]
    }
}

/// The ambient truncated local ring `k[[T_1..T_N]] / m^(D+1)`.
pub struct RingSpec {
    names: Vec<String>,
    field: Field,
    trunc: u32,
    basis: OnceLock<MonomialBasis>,
}

/// Shared handle to a ring; series hold one of these.
pub type Ring = Arc<RingSpec>;

impl RingSpec {
    pub fn new(names: Vec<String>, field: Field, trunc: u32) -> Result<Ring> {
        if names.is_empty() {
            return Err(Error::InvalidRing("need at least one variable".into()));
        }
        if trunc == 0 {
            return Err(Error::InvalidRing("truncation order must be >= 1".into()));
        }
        for (i, n) in names.iter().enumerate() {
            let valid = n.chars().next().is_some_and(|c| c.is_ascii_alphabetic() || c == '_')
                && n.chars().all(|c| c.is_ascii_alphanumeric() || c == '_');
            if !valid {
                return Err(Error::InvalidRing(format!("bad variable name `{n}`")));
            }
            if names[..i].contains(n) {
                return Err(Error::InvalidRing(format!("duplicate variable `{n}`")));
            }
        }
        if let Field::Prime(p) = field {
            Field::from_characteristic(p)?;
        }
        Ok(Arc::new(RingSpec {
            names,
            field,
            trunc,
            basis: OnceLock::new(),
        }))
    }

    /// Ring with variables `T1..TN`.
    pub fn standard(num_vars: usize, field: Field, trunc: u32) -> Result<Ring> {
        Self::new((1..=num_vars).map(|i| format!("T{i}")).collect(), field, trunc)
    }

    pub fn num_vars(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn trunc(&self) -> u32 {
        self.trunc
    }

    pub fn basis(&self) -> &MonomialBasis {
        self.basis
            .get_or_init(|| MonomialBasis::new(self.names.len(), self.trunc))
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// Same variables and field, different truncation order.
    pub fn with_trunc(&self, trunc: u32) -> Result<Ring> {
        RingSpec::new(self.names.clone(), self.field, trunc)
    }

    pub fn same(a: &Ring, b: &Ring) -> bool {
        Arc::ptr_eq(a, b) || **a == **b
    }
}

impl PartialEq for RingSpec {
    fn eq(&self, other: &Self) -> bool {
        self.trunc == other.trunc && self.field == other.field && self.names == other.names
    }
}

impl Eq for RingSpec {}

impl fmt::Debug for RingSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("RingSpec")
            .field("names", &self.names)
            .field("field", &self.field)
            .field("trunc", &self.trunc)
            .finish()
    }
}

impl Serialize for RingSpec {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("RingSpec", 3)?;
        st.serialize_field("vars", &self.names)?;
        st.serialize_field("char", &self.field.characteristic())?;
        st.serialize_field("trunc", &self.trunc)?;
        st.end()
    }
}

/// An order value at truncation `D`: either exact, or "at least `D+1`"
/// (which covers the order of zero).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ExtOrder {
    Exact(u32),
    AtLeast(u32),
}

impl ExtOrder {
    pub fn exact(&self) -> Option<u32> {
        match self {
            ExtOrder::Exact(n) => Some(*n),
            ExtOrder::AtLeast(_) => None,
        }
    }

    pub fn is_exact(&self) -> bool {
        matches!(self, ExtOrder::Exact(_))
    }

    /// Lower bound carried by the value.
    pub fn lower_bound(&self) -> u32 {
        match self {
            ExtOrder::Exact(n) | ExtOrder::AtLeast(n) => *n,
        }
    }

    /// Addition at truncation `trunc`; anything above `trunc` saturates.
    pub fn saturating_add(self, other: ExtOrder, trunc: u32) -> ExtOrder {
        match (self, other) {
            (ExtOrder::Exact(a), ExtOrder::Exact(b)) if a + b <= trunc => ExtOrder::Exact(a + b),
            _ => ExtOrder::AtLeast(trunc + 1),
        }
    }

    /// True when `self >= n` holds for sure.
    pub fn at_least(&self, n: u32) -> bool {
        self.lower_bound() >= n
    }
}

impl fmt::Display for ExtOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtOrder::Exact(n) => write!(f, "{n}"),
            ExtOrder::AtLeast(n) => write!(f, ">={n}"),
        }
    }
}

impl Serialize for ExtOrder {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            ExtOrder::Exact(n) => s.serialize_u32(*n),
            ExtOrder::AtLeast(n) => s.serialize_str(&format!(">={n}")),
        }
    }
}

/// Element of `k[T] / m^(D+1)` stored as a sparse map with no zero coefficients.
#[derive(Clone)]
pub struct TruncatedSeries {
    ring: Ring,
    terms: BTreeMap<Monomial, Scalar>,
}

impl TruncatedSeries {
    pub fn zero(ring: &Ring) -> Self {
        TruncatedSeries {
            ring: ring.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn one(ring: &Ring) -> Self {
        Self::constant(ring, ring.field().one())
    }

    pub fn constant(ring: &Ring, c: Scalar) -> Self {
        Self::monomial(ring, Monomial::one(ring.num_vars()), c)
    }

    pub fn from_i64(ring: &Ring, n: i64) -> Self {
        Self::constant(ring, ring.field().from_i64(n))
    }

    /// The variable `T_{idx+1}`.
    pub fn var(ring: &Ring, idx: usize) -> Self {
        Self::monomial(ring, Monomial::var(ring.num_vars(), idx, 1), ring.field().one())
    }

    pub fn monomial(ring: &Ring, m: Monomial, c: Scalar) -> Self {
        assert_eq!(m.num_vars(), ring.num_vars(), "monomial arity");
        let mut terms = BTreeMap::new();
        if !c.is_zero() && m.degree() <= ring.trunc() {
            terms.insert(m, c);
        }
        TruncatedSeries {
            ring: ring.clone(),
            terms,
        }
    }

    /// Builds a series from terms, merging repeats and dropping zeros and
    /// monomials above the truncation order.
    pub fn from_terms(ring: &Ring, terms: impl IntoIterator<Item = (Monomial, Scalar)>) -> Self {
        let mut s = Self::zero(ring);
        for (m, c) in terms {
            assert_eq!(m.num_vars(), ring.num_vars(), "monomial arity");
            if m.degree() <= ring.trunc() {
                s.add_term(m, &c);
            }
        }
        s
    }

    fn add_term(&mut self, m: Monomial, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c.clone());
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = o.get().add(c);
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn terms(&self) -> &BTreeMap<Monomial, Scalar> {
        &self.terms
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: &Monomial) -> Scalar {
        self.terms.get(m).cloned().unwrap_or_else(|| self.ring.field().zero())
    }

    /// Constant coefficient.
    pub fn constant_term(&self) -> Scalar {
        self.coeff(&Monomial::one(self.ring.num_vars()))
    }

    /// Highest total degree of a stored term (0 for the zero series).
    pub fn degree(&self) -> u32 {
        self.terms.keys().map(Monomial::degree).max().unwrap_or(0)
    }

    fn check_ring(&self, other: &Self) -> Result<()> {
        if RingSpec::same(&self.ring, &other.ring) {
            Ok(())
        } else {
            Err(Error::IncompatibleRings)
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_ring(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c);
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_ring(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), &c.neg());
        }
        Ok(out)
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_ring(other)?;
        let d = self.ring.trunc();
        let mut out = Self::zero(&self.ring);
        for (ma, ca) in &self.terms {
            let da = ma.degree();
            for (mb, cb) in &other.terms {
                if da + mb.degree() > d {
                    // terms are degree-sorted, the rest is truncated too
                    break;
                }
                out.add_term(ma.mul(mb), &ca.mul(cb));
            }
        }
        Ok(out)
    }

    pub fn neg(&self) -> Self {
        TruncatedSeries {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c.neg())).collect(),
        }
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        if c.is_zero() {
            return Self::zero(&self.ring);
        }
        TruncatedSeries {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v.mul(c))).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Self {
        let d = self.ring.trunc();
        let md = m.degree();
        TruncatedSeries {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .filter(|(k, _)| k.degree() + md <= d)
                .map(|(k, v)| (k.mul(m), v.clone()))
                .collect(),
        }
    }

    /// Exact quotient by a monomial, or `None` when some term is not divisible.
    pub fn div_monomial(&self, m: &Monomial) -> Option<Self> {
        let mut terms = BTreeMap::new();
        for (k, v) in &self.terms {
            terms.insert(k.div(m)?, v.clone());
        }
        Some(TruncatedSeries {
            ring: self.ring.clone(),
            terms,
        })
    }

    /// `self^e` by repeated squaring; `a^0 = 1`.
    pub fn pow(&self, mut e: u64) -> Self {
        let mut acc = Self::one(&self.ring);
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// m-adic order: minimal degree of a stored term, `AtLeast(D+1)` for zero.
    pub fn ord(&self) -> ExtOrder {
        match self.terms.keys().next() {
            Some(m) => ExtOrder::Exact(m.degree()),
            None => ExtOrder::AtLeast(self.ring.trunc() + 1),
        }
    }

    /// The degree-`d` homogeneous component.
    pub fn homogeneous_part(&self, d: u32) -> Result<Self> {
        if d > self.ring.trunc() {
            return Err(Error::OutOfRange {
                what: "degree",
                value: d as i64,
                lo: 0,
                hi: self.ring.trunc() as i64,
            });
        }
        Ok(TruncatedSeries {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree() == d)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        })
    }

    /// Lowest-degree homogeneous component.
    pub fn initial_form(&self) -> Result<Self> {
        match self.ord() {
            ExtOrder::Exact(d) => self.homogeneous_part(d),
            ExtOrder::AtLeast(_) => Err(Error::InitialFormOfZero),
        }
    }

    /// Terms of degree `< d` (the class of `self` modulo `m^d`).
    pub fn truncated_below(&self, d: u32) -> Self {
        TruncatedSeries {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree() < d)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Same terms viewed in another ring with the same variables and field.
    pub fn change_ring(&self, ring: &Ring) -> Result<Self> {
        if ring.names() != self.ring.names() || ring.field() != self.ring.field() {
            return Err(Error::IncompatibleRings);
        }
        Ok(Self::from_terms(
            ring,
            self.terms.iter().map(|(m, c)| (m.clone(), c.clone())),
        ))
    }

    /// Coefficient vector over the ring's monomial basis.
    pub fn to_dense(&self) -> Vec<Scalar> {
        let basis = self.ring.basis();
        let mut v = vec![self.ring.field().zero(); basis.len()];
        for (m, c) in &self.terms {
            v[basis.index_of(m).expect("monomial within truncation")] = c.clone();
        }
        v
    }

    pub fn from_dense(ring: &Ring, v: &[Scalar]) -> Self {
        let basis = ring.basis();
        TruncatedSeries {
            ring: ring.clone(),
            terms: v
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(i, c)| (basis.monomial(i).clone(), c.clone()))
                .collect(),
        }
    }
}

impl PartialEq for TruncatedSeries {
    fn eq(&self, other: &Self) -> bool {
        RingSpec::same(&self.ring, &other.ring) && self.terms == other.terms
    }
}

impl Eq for TruncatedSeries {}

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let names = self.ring.names();
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            match (i, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let a = c.abs();
            if m.is_one() {
                write!(f, "{a}")?;
            } else {
                if !a.is_one() {
                    write!(f, "{a}*")?;
                }
                m.write_with(f, names)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TruncatedSeries({self})")
    }
}

impl Serialize for TruncatedSeries {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

// Operator sugar. These panic on mismatched rings; use the `Result` methods
// when the rings are not known to agree.
impl Add for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn add(self, rhs: Self) -> TruncatedSeries {
        TruncatedSeries::add(self, rhs).expect("incompatible rings")
    }
}

impl Sub for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn sub(self, rhs: Self) -> TruncatedSeries {
        TruncatedSeries::sub(self, rhs).expect("incompatible rings")
    }
}

impl Mul for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn mul(self, rhs: Self) -> TruncatedSeries {
        TruncatedSeries::mul(self, rhs).expect("incompatible rings")
    }
}

impl Neg for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn neg(self) -> TruncatedSeries {
        TruncatedSeries::neg(self)
    }
}
