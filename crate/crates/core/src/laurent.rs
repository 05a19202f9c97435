//! Sparse Laurent polynomials with integer coefficients.
//!
//! Variables are any ordered type. Exact division searches for the quotient
//! term by term from the lexicographically leading term, with every quotient
//! exponent confined to the box allowed by the exponent ranges of the
//! operands, so it always terminates and fails exactly when the quotient is
//! not a Laurent polynomial with integer coefficients.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt::Write;

use crate::error::{Error, Result};

/// A monomial: variables with nonzero exponents, sorted by variable.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial<V>(Vec<(V, i32)>);

impl<V: Ord + Clone> Monomial<V> {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    pub fn var(v: V) -> Self {
        Monomial(alloc::vec![(v, 1)])
    }

    pub fn factors(&self) -> &[(V, i32)] {
        &self.0
    }

    pub fn exponent(&self, v: &V) -> i32 {
        self.0.iter().find(|(w, _)| w == v).map_or(0, |t| t.1)
    }

    pub fn degree(&self) -> i64 {
        self.0.iter().map(|t| t.1 as i64).sum()
    }

    /// Adds (`sign = 1`) or subtracts (`sign = -1`) exponents.
    fn combine(&self, other: &Self, sign: i32) -> Result<Self> {
        let mut out = Vec::with_capacity(self.0.len() + other.0.len());
        let (mut i, mut j) = (0, 0);
        while i < self.0.len() || j < other.0.len() {
            let ord = match (self.0.get(i), other.0.get(j)) {
                (Some(a), Some(b)) => a.0.cmp(&b.0),
                (Some(_), None) => Ordering::Less,
                _ => Ordering::Greater,
            };
            match ord {
                Ordering::Less => {
                    out.push(self.0[i].clone());
                    i += 1;
                }
                Ordering::Greater => {
                    let (v, e) = &other.0[j];
                    out.push((v.clone(), e.checked_mul(sign).ok_or(Error::Overflow)?));
                    j += 1;
                }
                Ordering::Equal => {
                    let e = other.0[j].1.checked_mul(sign).and_then(|e| self.0[i].1.checked_add(e));
                    let e = e.ok_or(Error::Overflow)?;
                    if e != 0 {
                        out.push((self.0[i].0.clone(), e));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        Ok(Monomial(out))
    }

    /// Lexicographic comparison of exponent vectors, smallest variable first,
    /// absent variables counting as exponent 0.
    fn lex_cmp(&self, other: &Self) -> Ordering {
        let (mut i, mut j) = (0, 0);
        loop {
            match (self.0.get(i), other.0.get(j)) {
                (None, None) => return Ordering::Equal,
                (Some(a), Some(b)) if a.0 == b.0 => {
                    if a.1 != b.1 {
                        return a.1.cmp(&b.1);
                    }
                    i += 1;
                    j += 1;
                }
                (Some(a), b) if b.is_none_or(|b| a.0 < b.0) => return a.1.cmp(&0),
                (_, Some(b)) => return 0.cmp(&b.1),
                _ => unreachable!(),
            }
        }
    }
}

/// A finite sum of integer multiples of monomials.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LaurentPolynomial<V: Ord> {
    terms: BTreeMap<Monomial<V>, i128>,
}

impl<V: Ord + Clone> LaurentPolynomial<V> {
    pub fn zero() -> Self {
        LaurentPolynomial { terms: BTreeMap::new() }
    }

    pub fn constant(c: i128) -> Self {
        Self::term(Monomial::one(), c)
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn var(v: V) -> Self {
        Self::term(Monomial::var(v), 1)
    }

    pub fn term(m: Monomial<V>, c: i128) -> Self {
        let mut terms = BTreeMap::new();
        if c != 0 {
            terms.insert(m, c);
        }
        LaurentPolynomial { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial<V>, i128)> {
        self.terms.iter().map(|(m, &c)| (m, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Whether every coefficient is positive.
    pub fn has_positive_coefficients(&self) -> bool {
        self.terms.values().all(|&c| c > 0)
    }

    fn add_term(&mut self, m: Monomial<V>, c: i128) -> Result<()> {
        if c == 0 {
            return Ok(());
        }
        let slot = self.terms.entry(m.clone()).or_insert(0);
        *slot = slot.checked_add(c).ok_or(Error::Overflow)?;
        if *slot == 0 {
            self.terms.remove(&m);
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        let mut out = self.clone();
        for (m, &c) in &other.terms {
            out.add_term(m.clone(), c)?;
        }
        Ok(out)
    }

    pub fn neg(&self) -> Self {
        LaurentPolynomial {
            terms: self.terms.iter().map(|(m, &c)| (m.clone(), -c)).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        let mut out = Self::zero();
        for (m, &c) in &self.terms {
            for (n, &d) in &other.terms {
                out.add_term(m.combine(n, 1)?, c.checked_mul(d).ok_or(Error::Overflow)?)?;
            }
        }
        Ok(out)
    }

    fn leading(&self) -> Option<(&Monomial<V>, i128)> {
        self.terms.iter().max_by(|a, b| a.0.lex_cmp(b.0)).map(|(m, &c)| (m, c))
    }

    /// Per variable, the smallest and largest exponent over all terms.
    fn exponent_box(&self) -> BTreeMap<V, (i32, i32)> {
        let mut out: BTreeMap<V, (i32, i32)> = BTreeMap::new();
        for m in self.terms.keys() {
            for (v, _) in &m.0 {
                out.entry(v.clone()).or_insert((i32::MAX, i32::MIN));
            }
        }
        for (v, range) in out.iter_mut() {
            for m in self.terms.keys() {
                let e = m.exponent(v);
                range.0 = range.0.min(e);
                range.1 = range.1.max(e);
            }
        }
        out
    }

    /// `self / other` when the quotient is a Laurent polynomial with integer
    /// coefficients; [`Error::NotLaurent`] otherwise.
    pub fn div_exact(&self, other: &Self) -> Result<Self> {
        if other.is_zero() {
            return Err(Error::Domain("division by zero".into()));
        }
        let (fb, gb) = (self.exponent_box(), other.exponent_box());
        let range = |b: &BTreeMap<V, (i32, i32)>, v: &V| b.get(v).copied().unwrap_or((0, 0));
        let mut vars: Vec<V> = fb.keys().chain(gb.keys()).cloned().collect();
        vars.sort();
        vars.dedup();
        let allowed: Vec<(V, i64, i64)> = vars
            .into_iter()
            .map(|v| {
                let (f, g) = (range(&fb, &v), range(&gb, &v));
                let lo = f.0 as i64 - g.0 as i64;
                let hi = f.1 as i64 - g.1 as i64;
                (v, lo, hi)
            })
            .collect();
        let (lead_m, lead_c) = other.leading().map(|(m, c)| (m.clone(), c)).expect("nonzero");
        let mut rest = self.clone();
        let mut quotient = Self::zero();
        while let Some((m, c)) = rest.leading().map(|(m, c)| (m.clone(), c)) {
            if c % lead_c != 0 {
                return Err(Error::NotLaurent);
            }
            let q = m.combine(&lead_m, -1)?;
            let inside = allowed.iter().all(|(v, lo, hi)| {
                let e = q.exponent(v) as i64;
                *lo <= e && e <= *hi
            });
            if !inside || q.0.iter().any(|(v, _)| !allowed.iter().any(|a| &a.0 == v)) {
                return Err(Error::NotLaurent);
            }
            let t = Self::term(q, c / lead_c);
            rest = rest.sub(&t.mul(other)?)?;
            quotient = quotient.add(&t)?;
        }
        Ok(quotient)
    }

    /// Canonical text: `numerator / denominator` with the denominator the
    /// smallest monomial clearing all negative exponents. Numerator terms
    /// are ordered by degree, then by variable with higher powers first.
    pub fn render(&self, name: impl Fn(&V) -> String) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut denominator: BTreeMap<V, i32> = BTreeMap::new();
        for m in self.terms.keys() {
            for (v, e) in &m.0 {
                if *e < 0 {
                    let slot = denominator.entry(v.clone()).or_insert(0);
                    *slot = (*slot).max(-e);
                }
            }
        }
        let clear = Monomial(denominator.iter().map(|(v, &e)| (v.clone(), e)).collect());
        let mut numerator: Vec<(Monomial<V>, i128)> = self
            .terms
            .iter()
            .map(|(m, &c)| (m.combine(&clear, 1).expect("exponents stay small"), c))
            .collect();
        numerator.sort_by(|a, b| {
            a.0.degree().cmp(&b.0.degree()).then_with(|| {
                let ka = a.0 .0.iter().map(|(v, e)| (v, core::cmp::Reverse(*e)));
                let kb = b.0 .0.iter().map(|(v, e)| (v, core::cmp::Reverse(*e)));
                ka.cmp(kb)
            })
        });
        let mut out = String::new();
        for (i, (m, c)) in numerator.iter().enumerate() {
            let (sign, abs) = if *c < 0 {
                ("-", c.unsigned_abs())
            } else {
                ("+", *c as u128)
            };
            if i == 0 {
                if sign == "-" {
                    out.push('-');
                }
            } else {
                let _ = write!(out, " {sign} ");
            }
            let body = render_monomial(m, &name);
            match (abs, body.is_empty()) {
                (_, true) => {
                    let _ = write!(out, "{abs}");
                }
                (1, false) => out.push_str(&body),
                (_, false) => {
                    let _ = write!(out, "{abs}*{body}");
                }
            }
        }
        if clear.0.is_empty() {
            return out;
        }
        if numerator.len() > 1 {
            out = alloc::format!("({out})");
        }
        let den = render_monomial(&clear, &name);
        if clear.0.len() > 1 {
            alloc::format!("{out} / ({den})")
        } else {
            alloc::format!("{out} / {den}")
        }
    }
}

fn render_monomial<V: Ord + Clone>(m: &Monomial<V>, name: &impl Fn(&V) -> String) -> String {
    let mut out = String::new();
    for (i, (v, e)) in m.0.iter().enumerate() {
        if i > 0 {
            out.push('*');
        }
        out.push_str(&name(v));
        if *e != 1 {
            let _ = write!(out, "^{e}");
        }
    }
    out
}
