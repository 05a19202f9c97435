//! Locally discrete cyclic orders: finite polygons and k-thread infinity-gons.
//!
//! Both kinds share one point representation. A point of `FiniteGon(n)` is
//! `(0, i)` with `0 <= i < n`; a point of `ThreadGon(k)` is `(t, e)` with
//! `t < k` and any offset `e`. The derived lexicographic order on points is
//! the canonical cut of either order, and every cyclic query is phrased in
//! that cut.

use core::cmp::Ordering;
use core::fmt;

use num_rational::Ratio;

use crate::error::{Error, Result};

/// A point of a [`CyclicOrder`].
///
/// Ordering is lexicographic on `(thread, offset)`, which is the canonical
/// cut of the order the point belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Point {
    pub thread: u32,
    pub offset: i64,
}

impl Point {
    pub const fn threaded(thread: u32, offset: i64) -> Self {
        Point { thread, offset }
    }

    /// A point of a finite polygon. The index is not reduced; use
    /// [`CyclicOrder::finite_point`] for that.
    pub const fn finite(index: i64) -> Self {
        Point {
            thread: 0,
            offset: index,
        }
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.thread, self.offset)
    }
}

/// A locally discrete cyclically ordered set.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CyclicOrder {
    /// The cyclic order of ℤ/n.
    FiniteGon(u32),
    /// `k` copies of ℤ glued in a circle, thread 0 first.
    ThreadGon(u32),
}

impl CyclicOrder {
    pub fn is_finite(&self) -> bool {
        matches!(self, CyclicOrder::FiniteGon(_))
    }

    /// Number of points, or `None` for infinity-gons.
    pub fn len(&self) -> Option<u64> {
        match *self {
            CyclicOrder::FiniteGon(n) => Some(n as u64),
            CyclicOrder::ThreadGon(_) => None,
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == Some(0)
    }

    /// Number of threads; a finite polygon counts as one.
    pub fn threads(&self) -> u32 {
        match *self {
            CyclicOrder::FiniteGon(_) => 1,
            CyclicOrder::ThreadGon(k) => k,
        }
    }

    /// The finite point with index `i` reduced modulo `n`.
    pub fn finite_point(&self, i: i64) -> Result<Point> {
        match *self {
            CyclicOrder::FiniteGon(n) if n > 0 => Ok(Point::finite(i.rem_euclid(n as i64))),
            _ => Err(Error::Domain("finite_point needs a nonempty FiniteGon".into())),
        }
    }

    pub fn contains(&self, p: Point) -> bool {
        match *self {
            CyclicOrder::FiniteGon(n) => p.thread == 0 && p.offset >= 0 && p.offset < n as i64,
            CyclicOrder::ThreadGon(k) => p.thread < k,
        }
    }

    pub fn validate(&self, p: Point) -> Result<()> {
        if self.contains(p) {
            Ok(())
        } else {
            Err(Error::InvalidPoint(p))
        }
    }

    /// The ternary relation `R(a, b, c)`: walking around the circle from `a`
    /// one meets `b` strictly before `c`. False unless the points are
    /// pairwise distinct.
    pub fn ternary(&self, a: Point, b: Point, c: Point) -> Result<bool> {
        self.validate(a)?;
        self.validate(b)?;
        self.validate(c)?;
        Ok(cut_ternary(a, b, c))
    }

    /// `p + steps`, staying on the thread of `p`.
    pub fn shift(&self, p: Point, steps: i64) -> Result<Point> {
        self.validate(p)?;
        match *self {
            CyclicOrder::FiniteGon(n) => {
                let n = n as i64;
                let off = (p.offset as i128 + steps as i128).rem_euclid(n as i128);
                Ok(Point::finite(off as i64))
            }
            CyclicOrder::ThreadGon(_) => {
                let off = p.offset.checked_add(steps).ok_or(Error::Overflow)?;
                Ok(Point::threaded(p.thread, off))
            }
        }
    }

    pub fn successor(&self, p: Point) -> Result<Point> {
        self.check_has_neighbors()?;
        self.shift(p, 1)
    }

    pub fn predecessor(&self, p: Point) -> Result<Point> {
        self.check_has_neighbors()?;
        self.shift(p, -1)
    }

    fn check_has_neighbors(&self) -> Result<()> {
        match *self {
            CyclicOrder::FiniteGon(n) if n < 2 => Err(Error::Domain("successor needs at least two points".into())),
            _ => Ok(()),
        }
    }

    /// Whether `{a, b}` is an edge, i.e. one is the successor of the other.
    pub fn are_neighbors(&self, a: Point, b: Point) -> bool {
        if a == b {
            return false;
        }
        match *self {
            CyclicOrder::FiniteGon(n) => {
                let d = (b.offset - a.offset).rem_euclid(n as i64);
                d == 1 || d == n as i64 - 1
            }
            CyclicOrder::ThreadGon(_) => a.thread == b.thread && (a.offset as i128 - b.offset as i128).abs() == 1,
        }
    }

    /// Membership of `x` in the open interval `(a, b) = {x | R(a, x, b)}`.
    pub fn in_open_interval(&self, a: Point, b: Point, x: Point) -> Result<bool> {
        if a == b {
            return Err(Error::Domain("open interval with equal endpoints".into()));
        }
        self.ternary(a, x, b)
    }

    /// Membership of `x` in the closed interval `[a, b] = (a, b) ∪ {a, b}`.
    pub fn in_closed_interval(&self, a: Point, b: Point, x: Point) -> Result<bool> {
        Ok(x == a || x == b || self.in_open_interval(a, b, x)?)
    }

    /// The linear order `<_base` whose minimum is `base` and whose
    /// cyclization is this order.
    pub fn cut_compare(&self, base: Point, a: Point, b: Point) -> Result<Ordering> {
        self.validate(base)?;
        self.validate(a)?;
        self.validate(b)?;
        Ok(if a == b {
            Ordering::Equal
        } else if a == base || cut_ternary(base, a, b) {
            Ordering::Less
        } else {
            Ordering::Greater
        })
    }

    /// An order embedding into `[0, 1)` read as ℚ/ℤ, used for drawing.
    ///
    /// Finite polygons are spaced evenly. Each thread of an infinity-gon gets
    /// an equal sector, and offsets are squeezed into it by
    /// `e ↦ 1/2 + e / (2(|e| + window))`, which is strictly increasing and
    /// flattens out beyond `window`.
    pub fn circle_position(&self, p: Point, window: i64) -> Result<Ratio<i128>> {
        self.validate(p)?;
        if window < 1 {
            return Err(Error::Domain("circle_position window must be at least 1".into()));
        }
        match *self {
            CyclicOrder::FiniteGon(n) => Ok(Ratio::new(p.offset as i128, n as i128)),
            CyclicOrder::ThreadGon(k) => {
                let e = p.offset as i128;
                let w = window as i128;
                let squeeze = Ratio::new(1, 2) + Ratio::new(e, 2 * (e.abs() + w));
                Ok((Ratio::from_integer(p.thread as i128) + squeeze) / Ratio::from_integer(k as i128))
            }
        }
    }

    /// All points of a finite polygon, in cut order.
    pub fn finite_points(&self) -> Option<impl Iterator<Item = Point>> {
        match *self {
            CyclicOrder::FiniteGon(n) => Some((0..n as i64).map(Point::finite)),
            CyclicOrder::ThreadGon(_) => None,
        }
    }
}

impl fmt::Display for CyclicOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CyclicOrder::FiniteGon(n) => write!(f, "finite {n}"),
            CyclicOrder::ThreadGon(k) => write!(f, "threads {k}"),
        }
    }
}

/// `R(a, b, c)` evaluated in the canonical cut.
pub(crate) fn cut_ternary(a: Point, b: Point, c: Point) -> bool {
    (a < b && b < c) || (b < c && c < a) || (c < a && a < b)
}
