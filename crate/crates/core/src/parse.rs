//! Polynomial expression parser.
//!
//! Grammar (whitespace insignificant):
//!
//! ```text
//! expr    := term (('+' | '-') term)*
//! term    := unary (('*' | '/') unary)*
//! unary   := ('-' | '+') unary | power
//! power   := primary ('^' INT)?
//! primary := INT | IDENT | '(' expr ')'
//! ```
//!
//! `/` only accepts a nonzero constant on its right, which lets rational
//! coefficients printed as `3/2*T1` parse back.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::scalar::{Field, Scalar};
use crate::series::{Monomial, Ring, TruncatedSeries};

const MAX_EXPONENT: u64 = 1 << 16;

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(num_bigint::BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

fn tokenize(text: &str) -> Result<Vec<(usize, Tok)>> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        let start = i;
        match c {
            ' ' | '\t' | '\n' | '\r' => {
                i += 1;
                continue;
            }
            '+' => out.push((start, Tok::Plus)),
            '-' => out.push((start, Tok::Minus)),
            '*' => out.push((start, Tok::Star)),
            '/' => out.push((start, Tok::Slash)),
            '^' => out.push((start, Tok::Caret)),
            '(' => out.push((start, Tok::LParen)),
            ')' => out.push((start, Tok::RParen)),
            '0'..='9' => {
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let n = text[start..i].parse().expect("digits");
                out.push((start, Tok::Int(n)));
                continue;
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                    i += 1;
                }
                out.push((start, Tok::Ident(text[start..i].to_string())));
                continue;
            }
            _ => {
                return Err(Error::Parse {
                    pos: start,
                    msg: format!("unexpected character `{c}`"),
                })
            }
        }
        i += 1;
    }
    Ok(out)
}

/// Sparse polynomial over named variables, with a caller-supplied rule
/// deciding which exponent vectors survive truncation.
struct Poly<'a> {
    terms: BTreeMap<Vec<u32>, Scalar>,
    ctx: &'a Ctx<'a>,
}

struct Ctx<'a> {
    names: &'a [String],
    field: Field,
    keep: &'a dyn Fn(&[u32]) -> bool,
}

impl<'a> Poly<'a> {
    fn zero(ctx: &'a Ctx<'a>) -> Self {
        Poly {
            terms: BTreeMap::new(),
            ctx,
        }
    }

    fn constant(ctx: &'a Ctx<'a>, c: Scalar) -> Self {
        let mut p = Self::zero(ctx);
        p.add_term(vec![0; ctx.names.len()], c);
        p
    }

    fn add_term(&mut self, e: Vec<u32>, c: Scalar) {
        if c.is_zero() || !(self.ctx.keep)(&e) {
            return;
        }
        let entry = self.terms.entry(e);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = o.get().add(&c);
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    fn add(mut self, other: Poly<'a>, negate: bool) -> Self {
        for (e, c) in other.terms {
            let c = if negate { c.neg() } else { c };
            self.add_term(e, c);
        }
        self
    }

    fn mul(&self, other: &Poly<'a>) -> Self {
        let mut out = Self::zero(self.ctx);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e: Vec<u32> = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.add_term(e, ca.mul(cb));
            }
        }
        out
    }

    fn neg(mut self) -> Self {
        for c in self.terms.values_mut() {
            *c = c.neg();
        }
        self
    }

    fn pow(&self, mut e: u64) -> Self {
        let mut acc = Self::constant(self.ctx, self.ctx.field.one());
        let mut base = Poly {
            terms: self.terms.clone(),
            ctx: self.ctx,
        };
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    fn as_constant(&self) -> Option<Scalar> {
        match self.terms.len() {
            0 => Some(self.ctx.field.zero()),
            1 => {
                let (e, c) = self.terms.iter().next().unwrap();
                e.iter().all(|&x| x == 0).then(|| c.clone())
            }
            _ => None,
        }
    }
}

struct Parser<'a> {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    end: usize,
    ctx: &'a Ctx<'a>,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn here(&self) -> usize {
        self.toks.get(self.pos).map(|(p, _)| *p).unwrap_or(self.end)
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Parse {
            pos: self.here(),
            msg: msg.into(),
        })
    }

    fn expr(&mut self) -> Result<Poly<'a>> {
        let mut acc = self.term()?;
        while let Some(t) = self.peek() {
            let negate = match t {
                Tok::Plus => false,
                Tok::Minus => true,
                _ => break,
            };
            self.pos += 1;
            let rhs = self.term()?;
            acc = acc.add(rhs, negate);
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Poly<'a>> {
        let mut acc = self.unary()?;
        while let Some(t) = self.peek() {
            match t {
                Tok::Star => {
                    self.pos += 1;
                    let rhs = self.unary()?;
                    acc = acc.mul(&rhs);
                }
                Tok::Slash => {
                    self.pos += 1;
                    let at = self.here();
                    let rhs = self.unary()?;
                    let c = match rhs.as_constant() {
                        Some(c) if !c.is_zero() => c,
                        Some(_) => {
                            return Err(Error::Parse {
                                pos: at,
                                msg: "division by zero".into(),
                            })
                        }
                        None => {
                            return Err(Error::Parse {
                                pos: at,
                                msg: "can only divide by a constant".into(),
                            })
                        }
                    };
                    acc = acc.mul(&Poly::constant(self.ctx, c.inv()));
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<Poly<'a>> {
        match self.peek() {
            Some(Tok::Minus) => {
                self.pos += 1;
                Ok(self.unary()?.neg())
            }
            Some(Tok::Plus) => {
                self.pos += 1;
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<Poly<'a>> {
        let base = self.primary()?;
        if self.peek() != Some(&Tok::Caret) {
            return Ok(base);
        }
        self.pos += 1;
        match self.peek().cloned() {
            Some(Tok::Int(n)) => {
                let e = u64::try_from(&n).ok().filter(|&e| e <= MAX_EXPONENT);
                let Some(e) = e else {
                    return self.err(format!("exponent {n} too large"));
                };
                self.pos += 1;
                Ok(base.pow(e))
            }
            Some(Tok::Minus) => self.err("exponent must be non-negative"),
            _ => self.err("expected integer exponent"),
        }
    }

    fn primary(&mut self) -> Result<Poly<'a>> {
        match self.peek().cloned() {
            Some(Tok::Int(n)) => {
                self.pos += 1;
                Ok(Poly::constant(self.ctx, self.ctx.field.from_bigint(&n)))
            }
            Some(Tok::Ident(name)) => {
                let Some(idx) = self.ctx.names.iter().position(|n| *n == name) else {
                    return self.err(format!("unknown variable `{name}`"));
                };
                self.pos += 1;
                let mut e = vec![0; self.ctx.names.len()];
                e[idx] = 1;
                let mut p = Poly::zero(self.ctx);
                p.add_term(e, self.ctx.field.one());
                Ok(p)
            }
            Some(Tok::LParen) => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(&Tok::RParen) {
                    return self.err("expected `)`");
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(t) => self.err(format!("unexpected token {t:?}")),
            None => self.err("unexpected end of input"),
        }
    }
}

fn parse_raw(
    text: &str,
    names: &[String],
    field: Field,
    keep: &dyn Fn(&[u32]) -> bool,
) -> Result<BTreeMap<Vec<u32>, Scalar>> {
    let toks = tokenize(text)?;
    let ctx = Ctx { names, field, keep };
    let mut p = Parser {
        toks,
        pos: 0,
        end: text.len(),
        ctx: &ctx,
    };
    if p.peek().is_none() {
        return p.err("empty expression");
    }
    let poly = p.expr()?;
    if p.peek().is_some() {
        return p.err("trailing input");
    }
    Ok(poly.terms)
}

/// Parses a polynomial expression into the truncated ring.
pub fn parse_poly(text: &str, ring: &Ring) -> Result<TruncatedSeries> {
    let d = ring.trunc();
    let keep = move |e: &[u32]| e.iter().sum::<u32>() <= d;
    let terms = parse_raw(text, ring.names(), ring.field(), &keep)?;
    Ok(TruncatedSeries::from_terms(
        ring,
        terms.into_iter().map(|(e, c)| (Monomial::new(e), c)),
    ))
}

/// Parses a polynomial in `unknowns` with coefficients in the truncated ring.
/// Returns the map from unknown-exponent vectors to coefficient series.
pub fn parse_ring_polynomial(
    text: &str,
    ring: &Ring,
    unknowns: &[String],
) -> Result<BTreeMap<Vec<u32>, TruncatedSeries>> {
    let n = ring.num_vars();
    for u in unknowns {
        if ring.var_index(u).is_some() {
            return Err(Error::precondition(format!(
                "unknown `{u}` clashes with a ring variable"
            )));
        }
    }
    let names: Vec<String> = ring.names().iter().chain(unknowns).cloned().collect();
    let d = ring.trunc();
    let keep = move |e: &[u32]| e[..n].iter().sum::<u32>() <= d;
    let terms = parse_raw(text, &names, ring.field(), &keep)?;
    let mut out: BTreeMap<Vec<u32>, TruncatedSeries> = BTreeMap::new();
    for (e, c) in terms {
        let t = TruncatedSeries::monomial(ring, Monomial::new(e[..n].to_vec()), c);
        let slot = out
            .entry(e[n..].to_vec())
            .or_insert_with(|| TruncatedSeries::zero(ring));
        *slot = &*slot + &t;
    }
    out.retain(|_, s| !s.is_zero());
    Ok(out)
}

/// Splits on `sep` at parenthesis depth zero; empty pieces are dropped.
pub fn split_top_level(text: &str, sep: char) -> Vec<String> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut cur = String::new();
    for c in text.chars() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            _ => {}
        }
        if c == sep && depth == 0 {
            if !cur.trim().is_empty() {
                out.push(cur.trim().to_string());
            }
            cur.clear();
        } else {
            cur.push(c);
        }
    }
    if !cur.trim().is_empty() {
        out.push(cur.trim().to_string());
    }
    out
}

/// Parses a comma-separated list of series.
pub fn parse_list(text: &str, ring: &Ring) -> Result<Vec<TruncatedSeries>> {
    split_top_level(text, ',').iter().map(|s| parse_poly(s, ring)).collect()
}

/// Parses module generators written as `(a, b); (c, d)`.
pub fn parse_vectors(text: &str, ring: &Ring) -> Result<Vec<Vec<TruncatedSeries>>> {
    split_top_level(text, ';')
        .iter()
        .map(|v| {
            let v = v.trim();
            let inner = v
                .strip_prefix('(')
                .and_then(|s| s.strip_suffix(')'))
                .ok_or_else(|| Error::Parse {
                    pos: 0,
                    msg: format!("expected parenthesised vector, got `{v}`"),
                })?;
            parse_list(inner, ring)
        })
        .collect()
}
