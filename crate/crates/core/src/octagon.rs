//! Exact integer feasibility for unit two-variable constraint systems.
//!
//! A [`FeasibilitySystem`] is a conjunction of atoms `±x ≤ c` and
//! `±x ± y ≤ c` over integer variables, the octagon fragment. Comparing two
//! points whose offsets are affine with slope in `{-1, 0, 1}` always yields
//! one such atom, which is why every symbolic question about arc families in
//! this crate reduces to these systems.
//!
//! Variables are eliminated by Fourier–Motzkin. Every atom has unit
//! coefficients on the eliminated variable, so given integer values for the
//! remaining variables an integer value for the eliminated one exists iff all
//! lower bounds are below all upper bounds; the projection is therefore
//! exact over ℤ, not only over ℚ. Combining two atoms gives at most two
//! terms, and a doubled single variable `2x ≤ c` is tightened to
//! `x ≤ ⌊c/2⌋`, so the fragment is closed under elimination.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};

pub type Var = usize;

/// An integer interval; `None` marks an infinite side.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Interval {
    pub lo: Option<i64>,
    pub hi: Option<i64>,
}

impl Interval {
    pub const ALL: Interval = Interval { lo: None, hi: None };

    pub const fn new(lo: Option<i64>, hi: Option<i64>) -> Self {
        Interval { lo, hi }
    }

    pub const fn closed(lo: i64, hi: i64) -> Self {
        Interval {
            lo: Some(lo),
            hi: Some(hi),
        }
    }

    pub const fn at_least(lo: i64) -> Self {
        Interval { lo: Some(lo), hi: None }
    }

    pub const fn at_most(hi: i64) -> Self {
        Interval { lo: None, hi: Some(hi) }
    }

    pub const fn point(x: i64) -> Self {
        Interval::closed(x, x)
    }

    pub fn is_empty(&self) -> bool {
        matches!((self.lo, self.hi), (Some(l), Some(h)) if l > h)
    }

    pub fn is_bounded(&self) -> bool {
        self.lo.is_some() && self.hi.is_some()
    }

    pub fn contains(&self, x: i64) -> bool {
        self.lo.is_none_or(|l| l <= x) && self.hi.is_none_or(|h| x <= h)
    }

    pub fn intersect(&self, other: &Interval) -> Interval {
        let lo = match (self.lo, other.lo) {
            (Some(a), Some(b)) => Some(a.max(b)),
            (a, b) => a.or(b),
        };
        let hi = match (self.hi, other.hi) {
            (Some(a), Some(b)) => Some(a.min(b)),
            (a, b) => a.or(b),
        };
        Interval { lo, hi }
    }

    /// Number of integers in a bounded interval.
    pub fn len(&self) -> Option<u128> {
        match (self.lo, self.hi) {
            (Some(l), Some(h)) if l <= h => Some((h as i128 - l as i128 + 1) as u128),
            (Some(_), Some(_)) => Some(0),
            _ => None,
        }
    }

    /// Splits off a finite set of excluded integers, returning the maximal
    /// subintervals that remain, in increasing order.
    pub fn minus(&self, excluded: &BTreeSet<i64>) -> Vec<Interval> {
        let mut out = Vec::new();
        if self.is_empty() {
            return out;
        }
        let mut cur = *self;
        for &x in excluded.iter() {
            if !cur.contains(x) {
                continue;
            }
            let left = Interval {
                lo: cur.lo,
                hi: Some(x - 1),
            };
            if !left.is_empty() {
                out.push(left);
            }
            cur = Interval {
                lo: Some(x + 1),
                hi: cur.hi,
            };
            if cur.is_empty() {
                return out;
            }
        }
        out.push(cur);
        out
    }

    /// The smallest integer of `self` covered by none of `parts` (closest
    /// to zero when `self` is unbounded below), or `None` if `parts` cover
    /// `self`.
    pub fn first_uncovered(&self, parts: &[Interval]) -> Option<i64> {
        if self.is_empty() {
            return None;
        }
        let mut parts: Vec<Interval> = parts
            .iter()
            .map(|p| p.intersect(self))
            .filter(|p| !p.is_empty())
            .collect();
        parts.sort_by(|a, b| cmp_lo(a.lo, b.lo));
        // smallest integer not yet known to be covered; `None` is -inf
        let mut next = self.lo;
        for p in &parts {
            match (next, p.lo) {
                (None, Some(l)) => return Some(l - 1),
                (Some(x), Some(l)) if l > x => return Some(x),
                _ => {}
            }
            let h = p.hi?.saturating_add(1);
            next = Some(next.map_or(h, |x| x.max(h)));
        }
        match next {
            None => Some(self.hi.map_or(0, |h| h.min(0))),
            Some(x) if self.hi.is_none_or(|h| x <= h) => Some(x),
            Some(_) => None,
        }
    }
}

fn cmp_lo(a: Option<i64>, b: Option<i64>) -> core::cmp::Ordering {
    match (a, b) {
        (None, None) => core::cmp::Ordering::Equal,
        (None, Some(_)) => core::cmp::Ordering::Less,
        (Some(_), None) => core::cmp::Ordering::Greater,
        (Some(x), Some(y)) => x.cmp(&y),
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.lo {
            Some(l) => write!(f, "[{l}, ")?,
            None => f.write_str("(-inf, ")?,
        }
        match self.hi {
            Some(h) => write!(f, "{h}]"),
            None => f.write_str("+inf)"),
        }
    }
}

/// The variable part of an atom: one or two variables with coefficient ±1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
enum Form {
    One(Var, i8),
    Two(Var, i8, Var, i8),
}

impl Form {
    fn coeff(&self, v: Var) -> i8 {
        match *self {
            Form::One(x, a) if x == v => a,
            Form::Two(x, a, _, _) if x == v => a,
            Form::Two(_, _, y, b) if y == v => b,
            _ => 0,
        }
    }

    /// The terms other than `v`.
    fn without(&self, v: Var) -> Option<(Var, i8)> {
        match *self {
            Form::One(_, _) => None,
            Form::Two(x, a, y, b) => {
                if x == v {
                    Some((y, b))
                } else {
                    Some((x, a))
                }
            }
        }
    }

    fn terms(&self) -> impl Iterator<Item = (Var, i8)> {
        let (a, b) = match *self {
            Form::One(x, a) => (Some((x, a)), None),
            Form::Two(x, a, y, b) => (Some((x, a)), Some((y, b))),
        };
        a.into_iter().chain(b)
    }
}

enum Normalized {
    Tautology,
    Contradiction,
    Atom(Form, i128),
}

/// Merge terms and tighten `Σ aᵢxᵢ ≤ c`. Callers guarantee that after
/// merging, two distinct variables carry coefficient ±1.
fn normalize(terms: &[(Var, i64)], bound: i128) -> Normalized {
    let mut merged: [(Var, i64); 2] = [(0, 0); 2];
    let mut len = 0usize;
    for &(v, a) in terms {
        if a == 0 {
            continue;
        }
        if let Some(slot) = merged[..len].iter_mut().find(|(w, _)| *w == v) {
            slot.1 += a;
        } else {
            debug_assert!(len < 2, "more than two variables in an octagon atom");
            merged[len] = (v, a);
            len += 1;
        }
    }
    let live: Vec<(Var, i64)> = merged[..len].iter().copied().filter(|&(_, a)| a != 0).collect();
    match live.as_slice() {
        [] => {
            if bound >= 0 {
                Normalized::Tautology
            } else {
                Normalized::Contradiction
            }
        }
        &[(v, a)] => {
            let m = a.unsigned_abs() as i128;
            Normalized::Atom(Form::One(v, a.signum() as i8), bound.div_euclid(m))
        }
        &[(v, a), (w, b)] => {
            debug_assert!(a.abs() == 1 && b.abs() == 1);
            let (x, y) = if v < w { ((v, a), (w, b)) } else { ((w, b), (v, a)) };
            Normalized::Atom(Form::Two(x.0, x.1 as i8, y.0, y.1 as i8), bound)
        }
        _ => unreachable!(),
    }
}

/// A conjunction of octagon atoms over integer variables.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct FeasibilitySystem {
    atoms: BTreeMap<Form, i128>,
    contradiction: bool,
}

impl FeasibilitySystem {
    pub fn new() -> Self {
        Self::default()
    }

    /// A system that is known to be unsatisfiable.
    pub fn contradiction() -> Self {
        FeasibilitySystem {
            atoms: BTreeMap::new(),
            contradiction: true,
        }
    }

    /// Adds `Σ coeff·var ≤ bound`. Coefficients must be in `{-1, 0, 1}` and at
    /// most two variables may appear.
    pub fn add_le(&mut self, terms: &[(Var, i8)], bound: i64) -> Result<()> {
        let live: Vec<(Var, i64)> = terms.iter().filter(|t| t.1 != 0).map(|&(v, a)| (v, a as i64)).collect();
        if live.iter().any(|t| t.1.abs() != 1) {
            return Err(Error::Domain("octagon coefficients must be -1, 0 or 1".into()));
        }
        let distinct: BTreeSet<Var> = live.iter().map(|t| t.0).collect();
        if distinct.len() > 2 || (distinct.len() < live.len() && distinct.len() > 1) {
            return Err(Error::Domain("octagon atoms have at most two variables".into()));
        }
        self.push(&live, bound as i128);
        Ok(())
    }

    pub fn add_ge(&mut self, terms: &[(Var, i8)], bound: i64) -> Result<()> {
        let neg: Vec<(Var, i8)> = terms.iter().map(|&(v, a)| (v, -a)).collect();
        let b = bound.checked_neg().ok_or(Error::Overflow)?;
        self.add_le(&neg, b)
    }

    pub fn add_eq(&mut self, terms: &[(Var, i8)], bound: i64) -> Result<()> {
        self.add_le(terms, bound)?;
        self.add_ge(terms, bound)
    }

    /// Restricts `v` to `range`.
    pub fn restrict(&mut self, v: Var, range: Interval) {
        if let Some(l) = range.lo {
            self.push(&[(v, -1)], -(l as i128));
        }
        if let Some(h) = range.hi {
            self.push(&[(v, 1)], h as i128);
        }
    }

    pub(crate) fn push(&mut self, terms: &[(Var, i64)], bound: i128) {
        if self.contradiction {
            return;
        }
        match normalize(terms, bound) {
            Normalized::Tautology => {}
            Normalized::Contradiction => {
                self.contradiction = true;
                self.atoms.clear();
            }
            Normalized::Atom(form, c) => {
                let slot = self.atoms.entry(form).or_insert(c);
                if c < *slot {
                    *slot = c;
                }
                self.check_opposite(form);
            }
        }
    }

    /// Detects `t ≤ c` together with `-t ≤ d` where `c + d < 0`.
    fn check_opposite(&mut self, form: Form) {
        let neg = match form {
            Form::One(v, a) => Form::One(v, -a),
            Form::Two(x, a, y, b) => Form::Two(x, -a, y, -b),
        };
        if let (Some(&c), Some(&d)) = (self.atoms.get(&form), self.atoms.get(&neg)) {
            if c + d < 0 {
                self.contradiction = true;
                self.atoms.clear();
            }
        }
    }

    /// Conjunction of two systems.
    pub fn and(&self, other: &FeasibilitySystem) -> FeasibilitySystem {
        let mut out = self.clone();
        if other.contradiction {
            return FeasibilitySystem::contradiction();
        }
        for (form, &c) in &other.atoms {
            let terms: Vec<(Var, i64)> = form.terms().map(|(v, a)| (v, a as i64)).collect();
            out.push(&terms, c);
        }
        out
    }

    pub fn is_contradiction(&self) -> bool {
        self.contradiction
    }

    pub fn vars(&self) -> BTreeSet<Var> {
        self.atoms.keys().flat_map(|f| f.terms().map(|t| t.0)).collect()
    }

    pub fn len(&self) -> usize {
        self.atoms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.atoms.is_empty() && !self.contradiction
    }

    /// The atoms as `(terms, bound)` pairs, for inspection and negation.
    pub fn atoms(&self) -> Vec<(Vec<(Var, i8)>, i128)> {
        self.atoms.iter().map(|(f, &c)| (f.terms().collect(), c)).collect()
    }

    /// Existentially quantifies `v` away.
    pub fn eliminate(&self, v: Var) -> FeasibilitySystem {
        if self.contradiction {
            return self.clone();
        }
        let mut out = FeasibilitySystem::new();
        let mut lowers = Vec::new();
        let mut uppers = Vec::new();
        for (form, &c) in &self.atoms {
            match form.coeff(v) {
                0 => {
                    let terms: Vec<(Var, i64)> = form.terms().map(|(w, a)| (w, a as i64)).collect();
                    out.push(&terms, c);
                }
                1 => uppers.push((form.without(v), c)),
                _ => lowers.push((form.without(v), c)),
            }
        }
        for &(r, c) in &lowers {
            for &(s, d) in &uppers {
                let mut terms: Vec<(Var, i64)> = Vec::with_capacity(2);
                terms.extend(r.map(|(w, a)| (w, a as i64)));
                terms.extend(s.map(|(w, a)| (w, a as i64)));
                out.push(&terms, c + d);
                if out.contradiction {
                    return out;
                }
            }
        }
        out
    }

    /// Keeps only `keep`, eliminating every other variable.
    pub fn project(&self, keep: &[Var]) -> FeasibilitySystem {
        let mut cur = self.clone();
        for v in self.vars() {
            if !keep.contains(&v) {
                cur = cur.eliminate(v);
                if cur.contradiction {
                    break;
                }
            }
        }
        cur
    }

    /// Whether the system has an integer solution.
    pub fn is_feasible(&self) -> bool {
        !self.project(&[]).contradiction
    }

    /// Fixes `v` to `value`.
    pub fn substitute(&self, v: Var, value: i64) -> FeasibilitySystem {
        if self.contradiction {
            return self.clone();
        }
        let mut out = FeasibilitySystem::new();
        for (form, &c) in &self.atoms {
            let a = form.coeff(v) as i128;
            let terms: Vec<(Var, i64)> = form.terms().filter(|t| t.0 != v).map(|(w, b)| (w, b as i64)).collect();
            out.push(&terms, c - a * value as i128);
        }
        out
    }

    /// The exact set of values `v` takes over all integer solutions, or
    /// `None` when there are none.
    pub fn range_of(&self, v: Var) -> Option<Interval> {
        let p = self.project(&[v]);
        if p.contradiction {
            return None;
        }
        let mut lo: Option<i128> = None;
        let mut hi: Option<i128> = None;
        for (form, &c) in &p.atoms {
            match *form {
                Form::One(w, 1) if w == v => hi = Some(hi.map_or(c, |h| h.min(c))),
                Form::One(w, -1) if w == v => lo = Some(lo.map_or(-c, |l| l.max(-c))),
                _ => {}
            }
        }
        if let (Some(l), Some(h)) = (lo, hi) {
            if l > h {
                return None;
            }
        }
        Some(Interval {
            lo: lo.map(clamp_i64),
            hi: hi.map(clamp_i64),
        })
    }

    /// One integer solution for `vars`, chosen greedily closest to zero in
    /// the given order; the remaining variables are only required to be
    /// satisfiable.
    pub fn sample(&self, vars: &[Var]) -> Option<Vec<i64>> {
        let mut cur = self.project(vars);
        let mut out = Vec::with_capacity(vars.len());
        for &v in vars {
            let r = cur.range_of(v)?;
            let value = if r.contains(0) {
                0
            } else if r.lo.is_some_and(|l| l > 0) {
                r.lo.unwrap()
            } else {
                r.hi.unwrap()
            };
            cur = cur.substitute(v, value);
            out.push(value);
        }
        if cur.is_contradiction() {
            return None;
        }
        Some(out)
    }

    /// The system with atom `index` (in [`atoms`](Self::atoms) order)
    /// negated, i.e. `t ≤ c` replaced by `t ≥ c + 1`.
    pub fn negated_atom(&self, index: usize) -> Option<FeasibilitySystem> {
        let (form, c) = self.atoms.iter().nth(index)?;
        let mut out = FeasibilitySystem::new();
        let terms: Vec<(Var, i64)> = form.terms().map(|(w, a)| (w, -(a as i64))).collect();
        out.push(&terms, -c - 1);
        Some(out)
    }

    /// The system consisting of the first `count` atoms.
    pub fn prefix(&self, count: usize) -> FeasibilitySystem {
        let mut out = FeasibilitySystem::new();
        if self.contradiction {
            return FeasibilitySystem::contradiction();
        }
        for (form, &c) in self.atoms.iter().take(count) {
            let terms: Vec<(Var, i64)> = form.terms().map(|(w, a)| (w, a as i64)).collect();
            out.push(&terms, c);
        }
        out
    }

    /// Checks a concrete assignment; unassigned variables count as zero.
    pub fn satisfied_by(&self, assignment: &[(Var, i64)]) -> bool {
        if self.contradiction {
            return false;
        }
        let value = |v: Var| assignment.iter().find(|t| t.0 == v).map_or(0, |t| t.1 as i128);
        self.atoms
            .iter()
            .all(|(form, &c)| form.terms().map(|(v, a)| a as i128 * value(v)).sum::<i128>() <= c)
    }
}

fn clamp_i64(x: i128) -> i64 {
    x.clamp(i64::MIN as i128, i64::MAX as i128) as i64
}

/// A half-line of integer solutions `n = n_slope·t + n_start`,
/// `m = m_slope·t + m_start` for all `t ≥ 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Ray {
    pub n_slope: i64,
    pub n_start: i64,
    pub m_slope: i64,
    pub m_start: i64,
}

impl Ray {
    pub fn at(&self, t: i64) -> (i64, i64) {
        (self.n_slope * t + self.n_start, self.m_slope * t + self.m_start)
    }
}

/// Classification of the integer solutions in two variables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Solutions {
    Empty,
    /// Every solution, sorted.
    Finite(Vec<(i64, i64)>),
    Infinite(Ray),
}

impl Solutions {
    pub fn is_empty(&self) -> bool {
        matches!(self, Solutions::Empty)
    }

    /// Some solution, if any.
    pub fn witness(&self) -> Option<(i64, i64)> {
        match self {
            Solutions::Empty => None,
            Solutions::Finite(v) => v.first().copied(),
            Solutions::Infinite(r) => Some(r.at(0)),
        }
    }
}

/// Classification of the integer solutions in one variable.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Solutions1 {
    Empty,
    Finite(Interval),
    Infinite(Interval),
}

/// Solves `system` over `n ∈ n_range`, `m ∈ m_range`; all other variables
/// are existentially quantified.
pub fn solve(system: &FeasibilitySystem, n: Var, m: Var, n_range: Interval, m_range: Interval) -> Solutions {
    let mut sys = system.clone();
    sys.restrict(n, n_range);
    sys.restrict(m, m_range);
    let sys = sys.project(&[n, m]);
    let Some(n_int) = sys.range_of(n) else {
        return Solutions::Empty;
    };
    let m_at = |value: i64| sys.substitute(n, value).range_of(m);
    if n_int.is_bounded() {
        let mut out = Vec::new();
        let (lo, hi) = (n_int.lo.unwrap(), n_int.hi.unwrap());
        for value in lo..=hi {
            let Some(mi) = m_at(value) else { continue };
            match (mi.lo, mi.hi) {
                (Some(a), Some(b)) => out.extend((a..=b).map(|x| (value, x))),
                (Some(a), None) => {
                    return Solutions::Infinite(Ray {
                        n_slope: 0,
                        n_start: value,
                        m_slope: 1,
                        m_start: a,
                    })
                }
                (None, Some(b)) => {
                    return Solutions::Infinite(Ray {
                        n_slope: 0,
                        n_start: value,
                        m_slope: -1,
                        m_start: b,
                    })
                }
                (None, None) => {
                    return Solutions::Infinite(Ray {
                        n_slope: 0,
                        n_start: value,
                        m_slope: 1,
                        m_start: 0,
                    })
                }
            }
        }
        return Solutions::Finite(out);
    }
    // unbounded in n: a recession direction (±1, d) with d ∈ {-1, 0, 1} exists
    let n_slope: i64 = if n_int.hi.is_none() { 1 } else { -1 };
    let start_n = n_int.lo.or(n_int.hi).unwrap_or(0);
    let mi = m_at(start_n).expect("projection is exact");
    let start_m = mi.lo.or(mi.hi).unwrap_or(0);
    for m_slope in [0i64, 1, -1] {
        let recedes = sys
            .atoms
            .iter()
            .all(|(form, _)| form.coeff(n) as i64 * n_slope + form.coeff(m) as i64 * m_slope <= 0);
        if recedes {
            return Solutions::Infinite(Ray {
                n_slope,
                n_start: start_n,
                m_slope,
                m_start: start_m,
            });
        }
    }
    unreachable!("unbounded octagon without a unit recession direction")
}

/// Solves `system` over `n ∈ range` with every other variable quantified.
pub fn solve1(system: &FeasibilitySystem, n: Var, range: Interval) -> Solutions1 {
    let mut sys = system.clone();
    sys.restrict(n, range);
    match sys.range_of(n) {
        None => Solutions1::Empty,
        Some(i) if i.is_bounded() => Solutions1::Finite(i),
        Some(i) => Solutions1::Infinite(i),
    }
}
