//! Points whose offset depends affinely on an integer parameter, and the
//! translation of order comparisons between them into octagon atoms.

use alloc::vec::Vec;
use core::fmt;

use crate::cyclic::Point;
use crate::error::{Error, Result};
use crate::octagon::{FeasibilitySystem, Var};

/// `n ↦ (thread, slope·n + offset)` with `slope ∈ {-1, 0, 1}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct AffinePointMap {
    pub thread: u32,
    slope: i8,
    pub offset: i64,
}

impl AffinePointMap {
    pub fn new(thread: u32, slope: i8, offset: i64) -> Result<Self> {
        if !(-1..=1).contains(&slope) {
            return Err(Error::InvalidFamily(alloc::format!("slope {slope} is not -1, 0 or 1")));
        }
        Ok(AffinePointMap { thread, slope, offset })
    }

    pub const fn constant(p: Point) -> Self {
        AffinePointMap {
            thread: p.thread,
            slope: 0,
            offset: p.offset,
        }
    }

    pub fn slope(&self) -> i8 {
        self.slope
    }

    pub fn is_constant(&self) -> bool {
        self.slope == 0
    }

    pub fn at(&self, n: i64) -> Result<Point> {
        let e = (self.slope as i64)
            .checked_mul(n)
            .and_then(|x| x.checked_add(self.offset))
            .ok_or(Error::Overflow)?;
        Ok(Point::threaded(self.thread, e))
    }

    pub(crate) fn term(&self, var: Var) -> Term {
        Term {
            thread: self.thread,
            coeff: self.slope,
            var,
            offset: self.offset,
        }
    }
}

impl fmt::Display for AffinePointMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, ", self.thread)?;
        match (self.slope, self.offset) {
            (0, c) => write!(f, "{c}")?,
            (s, 0) => f.write_str(if s > 0 { "n" } else { "-n" })?,
            (s, c) => {
                f.write_str(if s > 0 { "n" } else { "-n" })?;
                if c > 0 {
                    write!(f, " + {c}")?;
                } else {
                    write!(f, " - {}", c.unsigned_abs())?;
                }
            }
        }
        f.write_str(")")
    }
}

/// A point `(thread, coeff·var + offset)` inside a constraint system.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) struct Term {
    pub thread: u32,
    pub coeff: i8,
    pub var: Var,
    pub offset: i64,
}

impl Term {
    pub fn point(p: Point) -> Term {
        Term {
            thread: p.thread,
            coeff: 0,
            var: 0,
            offset: p.offset,
        }
    }

    pub fn shifted(self, d: i64) -> Term {
        Term {
            offset: self.offset + d,
            ..self
        }
    }

    /// The concrete point for a value of the variable.
    pub fn eval(&self, value: i64) -> Point {
        Point::threaded(self.thread, self.coeff as i64 * value + self.offset)
    }

    fn diff(&self, other: &Term, bound: i128) -> FeasibilitySystem {
        // self - other <= bound, same thread
        let mut s = FeasibilitySystem::new();
        s.push(
            &[(self.var, self.coeff as i64), (other.var, -(other.coeff as i64))],
            bound,
        );
        s
    }
}

pub(crate) fn truth(value: bool) -> FeasibilitySystem {
    if value {
        FeasibilitySystem::new()
    } else {
        FeasibilitySystem::contradiction()
    }
}

/// `x < y` in the canonical cut.
pub(crate) fn lt(x: &Term, y: &Term) -> FeasibilitySystem {
    if x.thread != y.thread {
        return truth(x.thread < y.thread);
    }
    x.diff(y, y.offset as i128 - x.offset as i128 - 1)
}

/// `x = y`.
pub(crate) fn eq(x: &Term, y: &Term) -> FeasibilitySystem {
    if x.thread != y.thread {
        return truth(false);
    }
    let c = y.offset as i128 - x.offset as i128;
    let mut s = x.diff(y, c);
    s.push(&[(y.var, y.coeff as i64), (x.var, -(x.coeff as i64))], -c);
    s
}

pub(crate) fn all(parts: &[FeasibilitySystem]) -> FeasibilitySystem {
    let mut out = FeasibilitySystem::new();
    for p in parts {
        out = out.and(p);
        if out.is_contradiction() {
            break;
        }
    }
    out
}

/// Disjoint cases in which the pairs `{a, b}` and `{c, d}` interleave.
pub(crate) fn crossing(a: &Term, b: &Term, c: &Term, d: &Term) -> Vec<FeasibilitySystem> {
    let mut out = Vec::new();
    for (p, q) in [(a, b), (b, a)] {
        for (r, s) in [(c, d), (d, c)] {
            for sys in [
                all(&[lt(p, r), lt(r, q), lt(q, s)]),
                all(&[lt(r, p), lt(p, s), lt(s, q)]),
            ] {
                if !sys.is_contradiction() {
                    out.push(sys);
                }
            }
        }
    }
    out
}

/// Cases in which `{x, y}` fails to be an arc of an infinity-gon.
pub(crate) fn degenerate(x: &Term, y: &Term) -> Vec<FeasibilitySystem> {
    [eq(x, y), eq(&x.shifted(1), y), eq(&y.shifted(1), x)]
        .into_iter()
        .filter(|s| !s.is_contradiction())
        .collect()
}

/// Cases in which the unordered pairs `{a, b}` and `{c, d}` coincide.
pub(crate) fn same_pair(a: &Term, b: &Term, c: &Term, d: &Term) -> Vec<FeasibilitySystem> {
    [all(&[eq(a, c), eq(b, d)]), all(&[eq(a, d), eq(b, c)])]
        .into_iter()
        .filter(|s| !s.is_contradiction())
        .collect()
}
