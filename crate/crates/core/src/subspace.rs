//! Ideals, submodules of `A^p` and powers of the maximal ideal realized as
//! subspaces of the truncated coefficient space.
//!
//! Coordinates of `A^p` at truncation `D` are pairs (component, monomial of
//! degree `<= D`). Columns are ordered degree first, then component, then the
//! monomial order. A reduced row echelon form in this order is canonical, and
//! the remainder of a vector modulo a subspace has the largest possible
//! order, which is what [`Subspace::distance_order`] reads off.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::series::{monomials_in_range, ExtOrder, Ring, RingSpec, TruncatedSeries};

/// An ideal `(f_1, ..., f_p)`. An empty generator list is the zero ideal.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct IdealSpec {
    #[serde(skip)]
    ring: Ring,
    generators: Vec<TruncatedSeries>,
}

impl IdealSpec {
    pub fn new(ring: &Ring, generators: Vec<TruncatedSeries>) -> Result<Self> {
        for g in &generators {
            if !RingSpec::same(ring, g.ring()) {
                return Err(Error::IncompatibleRings);
            }
        }
        Ok(IdealSpec {
            ring: ring.clone(),
            generators,
        })
    }

    pub fn zero(ring: &Ring) -> Self {
        IdealSpec {
            ring: ring.clone(),
            generators: Vec::new(),
        }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn generators(&self) -> &[TruncatedSeries] {
        &self.generators
    }

    /// Highest total degree among the generators.
    pub fn max_generator_degree(&self) -> u32 {
        self.generators.iter().map(|g| g.degree()).max().unwrap_or(0)
    }

    /// The ideal viewed as a submodule of `A^1`.
    pub fn as_module(&self) -> ModuleSpec {
        ModuleSpec {
            ring: self.ring.clone(),
            arity: 1,
            generators: self.generators.iter().map(|g| vec![g.clone()]).collect(),
        }
    }

    /// `(x) + I`.
    pub fn with_generator(&self, x: &TruncatedSeries) -> Result<Self> {
        let mut gens = vec![x.clone()];
        gens.extend(self.generators.iter().cloned());
        Self::new(&self.ring, gens)
    }
}

/// A submodule of `A^p` given by generating vectors.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ModuleSpec {
    #[serde(skip)]
    ring: Ring,
    arity: usize,
    generators: Vec<Vec<TruncatedSeries>>,
}

impl ModuleSpec {
    pub fn new(ring: &Ring, arity: usize, generators: Vec<Vec<TruncatedSeries>>) -> Result<Self> {
        if arity == 0 {
            return Err(Error::precondition("module arity must be >= 1"));
        }
        for v in &generators {
            if v.len() != arity {
                return Err(Error::ArityMismatch {
                    expected: arity,
                    got: v.len(),
                });
            }
            if v.iter().any(|s| !RingSpec::same(ring, s.ring())) {
                return Err(Error::IncompatibleRings);
            }
        }
        Ok(ModuleSpec {
            ring: ring.clone(),
            arity,
            generators,
        })
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn generators(&self) -> &[Vec<TruncatedSeries>] {
        &self.generators
    }

    pub fn max_generator_degree(&self) -> u32 {
        self.generators.iter().flatten().map(|g| g.degree()).max().unwrap_or(0)
    }

    /// Lowest order among the nonzero generator entries.
    fn min_generator_order(v: &[TruncatedSeries]) -> u32 {
        v.iter().filter_map(|s| s.ord().exact()).min().unwrap_or(u32::MAX)
    }
}

/// Coordinate layout of `A^p` at truncation `D`.
#[derive(Debug, Clone)]
struct Layout {
    ring: Ring,
    arity: usize,
}

impl Layout {
    fn dim(&self) -> usize {
        self.arity * self.ring.basis().len()
    }

    /// Column of (component, monomial index).
    fn column(&self, comp: usize, mono: usize) -> usize {
        let basis = self.ring.basis();
        let d = basis.monomial(mono).degree();
        let range = basis.degree_range(d);
        self.arity * range.start + comp * range.len() + (mono - range.start)
    }

    fn decode(&self, col: usize) -> (usize, usize) {
        let basis = self.ring.basis();
        let d = self.degree_of(col);
        let range = basis.degree_range(d);
        let off = col - self.arity * range.start;
        (off / range.len(), range.start + off % range.len())
    }

    fn degree_of(&self, col: usize) -> u32 {
        let basis = self.ring.basis();
        // first degree whose block ends after `col`
        let mut lo = 0u32;
        let mut hi = self.ring.trunc();
        while lo < hi {
            let mid = (lo + hi) / 2;
            if self.arity * basis.degree_range(mid).end > col {
                hi = mid;
            } else {
                lo = mid + 1;
            }
        }
        lo
    }

    /// First column of degree `d` (columns of degree `>= d` form a suffix).
    fn first_of_degree(&self, d: u32) -> usize {
        self.arity * self.ring.basis().count_below(d)
    }

    fn encode(&self, v: &[TruncatedSeries]) -> Result<Vec<Scalar>> {
        if v.len() != self.arity {
            return Err(Error::ArityMismatch {
                expected: self.arity,
                got: v.len(),
            });
        }
        let basis = self.ring.basis();
        let mut out = vec![self.ring.field().zero(); self.dim()];
        for (comp, s) in v.iter().enumerate() {
            if !RingSpec::same(&self.ring, s.ring()) {
                return Err(Error::IncompatibleRings);
            }
            for (m, c) in s.terms() {
                let mono = basis.index_of(m).expect("monomial within truncation");
                out[self.column(comp, mono)] = c.clone();
            }
        }
        Ok(out)
    }

    fn decode_vector(&self, v: &[(usize, Scalar)]) -> Vec<TruncatedSeries> {
        let basis = self.ring.basis();
        let mut parts: Vec<Vec<_>> = vec![Vec::new(); self.arity];
        for (col, c) in v {
            let (comp, mono) = self.decode(*col);
            parts[comp].push((basis.monomial(mono).clone(), c.clone()));
        }
        parts
            .into_iter()
            .map(|t| TruncatedSeries::from_terms(&self.ring, t))
            .collect()
    }
}

type SparseRow = Vec<(usize, Scalar)>;

/// A subspace of the truncated coefficient space of `A^p`, kept in reduced
/// row echelon form so that equal subspaces compare equal.
#[derive(Debug, Clone)]
pub struct Subspace {
    layout: Layout,
    rows: Vec<SparseRow>,
}

impl PartialEq for Subspace {
    fn eq(&self, other: &Self) -> bool {
        RingSpec::same(&self.layout.ring, &other.layout.ring)
            && self.layout.arity == other.layout.arity
            && self.rows == other.rows
    }
}

impl Subspace {
    pub fn zero(ring: &Ring, arity: usize) -> Self {
        Subspace {
            layout: Layout {
                ring: ring.clone(),
                arity,
            },
            rows: Vec::new(),
        }
    }

    pub fn full(ring: &Ring, arity: usize) -> Self {
        span_m_power(ring, 0, arity).expect("i = 0 is in range")
    }

    fn from_dense_rows(ring: &Ring, arity: usize, rows: impl IntoIterator<Item = Vec<Scalar>>) -> Self {
        let mut s = Self::zero(ring, arity);
        for r in rows {
            s.insert(r);
        }
        s
    }

    /// Span of the given vectors (each of length `arity`).
    pub fn from_vectors(ring: &Ring, arity: usize, vectors: &[Vec<TruncatedSeries>]) -> Result<Self> {
        let layout = Layout {
            ring: ring.clone(),
            arity,
        };
        let dense = vectors.iter().map(|v| layout.encode(v)).collect::<Result<Vec<_>>>()?;
        Ok(Self::from_dense_rows(ring, arity, dense))
    }

    pub fn ring(&self) -> &Ring {
        &self.layout.ring
    }

    pub fn arity(&self) -> usize {
        self.layout.arity
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    /// Dimension of the ambient coefficient space.
    pub fn ambient_dim(&self) -> usize {
        self.layout.dim()
    }

    /// Basis vectors, in pivot order.
    pub fn basis(&self) -> Vec<Vec<TruncatedSeries>> {
        self.rows.iter().map(|r| self.layout.decode_vector(r)).collect()
    }

    fn reduce_dense(&self, v: &mut [Scalar]) {
        for row in &self.rows {
            let pivot = row[0].0;
            if v[pivot].is_zero() {
                continue;
            }
            let f = v[pivot].clone();
            for (c, val) in row {
                v[*c] = v[*c].sub(&f.mul(val));
            }
        }
    }

    /// Adds a vector to the span, keeping reduced echelon form.
    fn insert(&mut self, mut v: Vec<Scalar>) {
        self.reduce_dense(&mut v);
        let Some(pivot) = v.iter().position(|c| !c.is_zero()) else {
            return;
        };
        let inv = v[pivot].inv();
        let new: SparseRow = v
            .into_iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (i, c.mul(&inv)))
            .collect();
        for row in &mut self.rows {
            if let Ok(k) = row.binary_search_by_key(&pivot, |(c, _)| *c) {
                let f = row[k].1.clone();
                *row = axpy_sparse(row, &new, &f.neg());
            }
        }
        let at = self.rows.partition_point(|r| r[0].0 < pivot);
        self.rows.insert(at, new);
    }

    fn check_compatible(&self, other: &Subspace) -> Result<()> {
        if !RingSpec::same(&self.layout.ring, &other.layout.ring) {
            return Err(Error::IncompatibleRings);
        }
        if self.layout.arity != other.layout.arity {
            return Err(Error::ArityMismatch {
                expected: self.layout.arity,
                got: other.layout.arity,
            });
        }
        Ok(())
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.check_compatible(other)?;
        let mut out = self.clone();
        for r in &other.rows {
            out.insert(self.to_dense(r));
        }
        Ok(out)
    }

    /// Intersection via the Zassenhaus construction on stacked bases.
    pub fn intersect(&self, other: &Subspace) -> Result<Subspace> {
        self.check_compatible(other)?;
        let n = self.layout.dim();
        let zero = self.layout.ring.field().zero();
        let mut work = Vec::with_capacity(self.dim() + other.dim());
        for r in &self.rows {
            let mut v = vec![zero.clone(); 2 * n];
            for (c, x) in r {
                v[*c] = x.clone();
                v[n + *c] = x.clone();
            }
            work.push(v);
        }
        for r in &other.rows {
            let mut v = vec![zero.clone(); 2 * n];
            for (c, x) in r {
                v[*c] = x.clone();
            }
            work.push(v);
        }
        // echelonize in the doubled space, then keep rows with zero left half
        let doubled = Layout {
            ring: self.layout.ring.clone(),
            arity: 2 * self.layout.arity,
        };
        let mut stacked = Subspace {
            layout: doubled,
            rows: Vec::new(),
        };
        for v in work {
            stacked.insert(v);
        }
        let mut out = Subspace {
            layout: self.layout.clone(),
            rows: Vec::new(),
        };
        for r in &stacked.rows {
            if r[0].0 >= n {
                let mut v = vec![zero.clone(); n];
                for (c, x) in r {
                    v[*c - n] = x.clone();
                }
                out.insert(v);
            }
        }
        Ok(out)
    }

    fn to_dense(&self, r: &SparseRow) -> Vec<Scalar> {
        let mut v = vec![self.layout.ring.field().zero(); self.layout.dim()];
        for (c, x) in r {
            v[*c] = x.clone();
        }
        v
    }

    /// True when `other` is a subspace of `self`.
    pub fn contains(&self, other: &Subspace) -> Result<bool> {
        self.check_compatible(other)?;
        Ok(other.rows.iter().all(|r| {
            let mut v = self.to_dense(r);
            self.reduce_dense(&mut v);
            v.iter().all(Scalar::is_zero)
        }))
    }

    /// Remainder of `x` after full reduction by the echelon basis.
    pub fn remainder(&self, x: &[TruncatedSeries]) -> Result<Vec<TruncatedSeries>> {
        let mut v = self.layout.encode(x)?;
        self.reduce_dense(&mut v);
        let sparse: SparseRow = v.into_iter().enumerate().filter(|(_, c)| !c.is_zero()).collect();
        Ok(self.layout.decode_vector(&sparse))
    }

    pub fn member(&self, x: &[TruncatedSeries]) -> Result<bool> {
        let mut v = self.layout.encode(x)?;
        self.reduce_dense(&mut v);
        Ok(v.iter().all(Scalar::is_zero))
    }

    /// `max { n <= D+1 : x in U + m^n }`, reported as `AtLeast(D+1)` when `x in U`.
    pub fn distance_order(&self, x: &[TruncatedSeries]) -> Result<ExtOrder> {
        let mut v = self.layout.encode(x)?;
        self.reduce_dense(&mut v);
        Ok(match v.iter().position(|c| !c.is_zero()) {
            Some(col) => ExtOrder::Exact(self.layout.degree_of(col)),
            None => ExtOrder::AtLeast(self.layout.ring.trunc() + 1),
        })
    }
}

fn axpy_sparse(a: &SparseRow, b: &SparseRow, f: &Scalar) -> SparseRow {
    // a + f*b
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let take_a = j >= b.len() || (i < a.len() && a[i].0 < b[j].0);
        let take_b = i >= a.len() || (j < b.len() && b[j].0 < a[i].0);
        if take_a {
            out.push(a[i].clone());
            i += 1;
        } else if take_b {
            out.push((b[j].0, f.mul(&b[j].1)));
            j += 1;
        } else {
            let s = a[i].1.add(&f.mul(&b[j].1));
            if !s.is_zero() {
                out.push((a[i].0, s));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

/// Image of the ideal in `A/m^(D+1)`: span of `u * f_j` over monomials `u`.
pub fn span_ideal(ideal: &IdealSpec) -> Subspace {
    span_module(&ideal.as_module())
}

/// Image of the module in `(A/m^(D+1))^p`.
pub fn span_module(module: &ModuleSpec) -> Subspace {
    span_m_power_times(module, 0)
}

/// Image of `m^k * M`: span of `u * v` for generators `v` and monomials `u`
/// of degree `>= k`.
pub fn span_m_power_times(module: &ModuleSpec, k: u32) -> Subspace {
    let ring = module.ring();
    let d = ring.trunc();
    let layout = Layout {
        ring: ring.clone(),
        arity: module.arity(),
    };
    let mut out = Subspace::zero(ring, module.arity());
    if k > d {
        return out;
    }
    for v in module.generators() {
        let o = ModuleSpec::min_generator_order(v);
        if o == u32::MAX || o + k > d {
            continue;
        }
        for u in monomials_in_range(ring.num_vars(), k, d - o) {
            let shifted: Vec<TruncatedSeries> = v.iter().map(|s| s.mul_monomial(&u)).collect();
            out.insert(layout.encode(&shifted).expect("same layout"));
        }
    }
    out
}

/// `m^i * A^p`: every coordinate of degree `>= i`. `i = D+1` gives zero.
pub fn span_m_power(ring: &Ring, i: u32, arity: usize) -> Result<Subspace> {
    let d = ring.trunc();
    if i > d + 1 {
        return Err(Error::OutOfRange {
            what: "power of m",
            value: i as i64,
            lo: 0,
            hi: d as i64 + 1,
        });
    }
    let layout = Layout {
        ring: ring.clone(),
        arity,
    };
    let one = ring.field().one();
    let rows = (layout.first_of_degree(i)..layout.dim())
        .map(|c| vec![(c, one.clone())])
        .collect();
    Ok(Subspace { layout, rows })
}
