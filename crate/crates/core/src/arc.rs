//! Arcs, the crossing and adjacency predicates, and the rotation `ρ`.

use core::fmt;

use crate::cyclic::{CyclicOrder, Point};
use crate::error::{Error, Result};

/// An unordered pair of distinct non-neighbouring points, stored with the
/// smaller endpoint (in the canonical cut) first.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Arc {
    lo: Point,
    hi: Point,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NotArcReason {
    Equal,
    Edge,
}

impl fmt::Display for NotArcReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            NotArcReason::Equal => "endpoints are equal",
            NotArcReason::Edge => "endpoints are neighbours",
        })
    }
}

impl Arc {
    /// Builds the arc `{a, b}` of `order`.
    pub fn new(order: &CyclicOrder, a: Point, b: Point) -> Result<Arc> {
        order.validate(a)?;
        order.validate(b)?;
        if a == b {
            return Err(Error::NotAnArc(NotArcReason::Equal));
        }
        if order.are_neighbors(a, b) {
            return Err(Error::NotAnArc(NotArcReason::Edge));
        }
        Ok(Arc::from_points_unchecked(a, b))
    }

    /// Normalizes a pair without checking that it is an arc.
    pub(crate) fn from_points_unchecked(a: Point, b: Point) -> Arc {
        if a <= b {
            Arc { lo: a, hi: b }
        } else {
            Arc { lo: b, hi: a }
        }
    }

    /// The endpoint that comes first in the canonical cut.
    pub fn lo(&self) -> Point {
        self.lo
    }

    pub fn hi(&self) -> Point {
        self.hi
    }

    pub fn endpoints(&self) -> [Point; 2] {
        [self.lo, self.hi]
    }

    pub fn has_endpoint(&self, p: Point) -> bool {
        self.lo == p || self.hi == p
    }

    /// The endpoint other than `p`, if `p` is an endpoint.
    pub fn other(&self, p: Point) -> Option<Point> {
        if self.lo == p {
            Some(self.hi)
        } else if self.hi == p {
            Some(self.lo)
        } else {
            None
        }
    }

    /// Interleaving test in the canonical cut.
    pub fn crosses(&self, other: &Arc) -> bool {
        let (a, b, c, d) = (self.lo, self.hi, other.lo, other.hi);
        (a < c && c < b && b < d) || (c < a && a < d && d < b)
    }

    pub fn shares_endpoint(&self, other: &Arc) -> bool {
        self.has_endpoint(other.lo) || self.has_endpoint(other.hi)
    }
}

impl fmt::Display for Arc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}, {}}}", self.lo, self.hi)
    }
}

/// Whether `p` and `q` cross in `order`.
pub fn crosses(order: &CyclicOrder, p: &Arc, q: &Arc) -> Result<bool> {
    for x in p.endpoints().into_iter().chain(q.endpoints()) {
        order.validate(x)?;
    }
    Ok(p.crosses(q))
}

/// Whether two distinct arcs share an endpoint.
pub fn adjacent(p: &Arc, q: &Arc) -> Result<bool> {
    if p == q {
        return Err(Error::Domain("adjacency is defined for distinct arcs".into()));
    }
    Ok(p.shares_endpoint(q))
}

/// `ρ^steps`, where `ρ({a, b}) = {a - 1, b - 1}`.
pub fn rotate(order: &CyclicOrder, p: &Arc, steps: i64) -> Result<Arc> {
    let back = steps.checked_neg().ok_or(Error::Overflow)?;
    let a = order.shift(p.lo, back)?;
    let b = order.shift(p.hi, back)?;
    Arc::new(order, a, b)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fa(a: i64, b: i64) -> Arc {
        Arc::new(&CyclicOrder::FiniteGon(6), Point::finite(a), Point::finite(b)).unwrap()
    }

    fn ta(t1: u32, e1: i64, t2: u32, e2: i64) -> Arc {
        Arc::new(
            &CyclicOrder::ThreadGon(2),
            Point::threaded(t1, e1),
            Point::threaded(t2, e2),
        )
        .unwrap()
    }

    #[test]
    fn construction() {
        let hex = CyclicOrder::FiniteGon(6);
        assert_eq!(fa(2, 0), fa(0, 2));
        assert_eq!(fa(0, 2).lo(), Point::finite(0));
        assert_eq!(
            Arc::new(&hex, Point::finite(0), Point::finite(5)),
            Err(Error::NotAnArc(NotArcReason::Edge))
        );
        assert_eq!(
            Arc::new(&hex, Point::finite(3), Point::finite(3)),
            Err(Error::NotAnArc(NotArcReason::Equal))
        );
        assert!(Arc::new(&CyclicOrder::FiniteGon(3), Point::finite(0), Point::finite(2)).is_err());
        let t = ta(0, 7, 1, -3);
        assert_eq!(t.lo(), Point::threaded(0, 7));
    }

    #[test]
    fn crossing_examples() {
        assert!(fa(0, 2).crosses(&fa(1, 3)));
        assert!(!fa(0, 2).crosses(&fa(2, 4)));
        assert!(ta(0, 0, 1, 0).crosses(&ta(0, 5, 1, 5)));
    }

    #[test]
    fn adjacency_examples() {
        assert!(adjacent(&fa(0, 2), &fa(2, 4)).unwrap());
        assert!(!adjacent(&fa(0, 2), &fa(1, 4)).unwrap());
        assert!(adjacent(&fa(0, 2), &fa(0, 3)).unwrap());
        assert!(adjacent(&fa(0, 2), &fa(0, 2)).is_err());
    }

    #[test]
    fn rotation_examples() {
        let hex = CyclicOrder::FiniteGon(6);
        assert_eq!(rotate(&hex, &fa(0, 2), 1).unwrap(), fa(5, 1));
        let one = CyclicOrder::ThreadGon(1);
        let p = Arc::new(&one, Point::threaded(0, 0), Point::threaded(0, 3)).unwrap();
        let q = Arc::new(&one, Point::threaded(0, -1), Point::threaded(0, 2)).unwrap();
        assert_eq!(rotate(&one, &p, 1).unwrap(), q);
        assert_eq!(rotate(&one, &rotate(&one, &p, 1).unwrap(), -1).unwrap(), p);
    }
}
