//! Canonical arc sets: fans, the eleven classical examples, and the greedy
//! locally finite triangulation of a countable order.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::vec::Vec;

use crate::affine::AffinePointMap;
use crate::arc::Arc;
use crate::arcset::{ArcFamily, SymbolicArcSet};
use crate::cyclic::{CyclicOrder, Point};
use crate::error::{Error, Result};
use crate::octagon::Interval;

/// A bijection `φ` from the natural numbers onto the points of an order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Enumeration {
    /// `φ(i) = i` on the `n`-gon.
    Identity(u32),
    /// Interleaves the `k` threads of an infinity-gon: first `(t, 0)` for
    /// every thread, then for `r = 1, 2, …` the points
    /// `(0, r), (0, -r), (1, r), (1, -r), …, (k-1, -r)`.
    Diagonal(u32),
    /// An explicit finite prefix, for testing.
    Prefix(Vec<Point>),
}

impl Enumeration {
    /// `φ(i)`, or `None` past the end of a finite enumeration.
    pub fn point(&self, i: u64) -> Option<Point> {
        match self {
            Enumeration::Identity(n) => (i < *n as u64).then(|| Point::finite(i as i64)),
            Enumeration::Diagonal(k) => {
                let k = *k as u64;
                if k == 0 {
                    return None;
                }
                if i < k {
                    return Some(Point::threaded(i as u32, 0));
                }
                let j = i - k;
                let r = (j / (2 * k) + 1) as i64;
                let rem = j % (2 * k);
                let offset = if rem.is_multiple_of(2) { r } else { -r };
                Some(Point::threaded((rem / 2) as u32, offset))
            }
            Enumeration::Prefix(v) => v.get(i as usize).copied(),
        }
    }

    /// `φ⁻¹(p)`, or `None` if `p` is never enumerated.
    pub fn index(&self, p: Point) -> Option<u64> {
        match self {
            Enumeration::Identity(n) => {
                (p.thread == 0 && (0..*n as i64).contains(&p.offset)).then_some(p.offset as u64)
            }
            Enumeration::Diagonal(k) => {
                let k = *k as u64;
                if p.thread as u64 >= k {
                    return None;
                }
                if p.offset == 0 {
                    return Some(p.thread as u64);
                }
                let r = p.offset.unsigned_abs();
                let j = (r - 1)
                    .checked_mul(2 * k)?
                    .checked_add(2 * p.thread as u64 + (p.offset < 0) as u64)?;
                j.checked_add(k)
            }
            Enumeration::Prefix(v) => v.iter().position(|&q| q == p).map(|i| i as u64),
        }
    }

    /// Number of enumerated points, `None` if infinite.
    pub fn len(&self) -> Option<u64> {
        match self {
            Enumeration::Identity(n) => Some(*n as u64),
            Enumeration::Diagonal(_) => None,
            Enumeration::Prefix(v) => Some(v.len() as u64),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == Some(0)
    }
}

/// Lazily materialized output of the greedy construction: `S_0 = ∅` and
/// `S_n` adds to `S_{n-1}` every arc `φ(i)φ(n)`, `i < n`, that crosses no arc
/// of `S_{n-1}`.
///
/// Queries extend the memoized prefix as needed, so they take `&mut self`;
/// share a handle between threads behind a lock.
#[derive(Debug, Clone)]
pub struct GreedyTriangulation {
    order: CyclicOrder,
    enumeration: Enumeration,
    steps: u64,
    arcs: BTreeSet<Arc>,
    incident: BTreeMap<Point, BTreeSet<Arc>>,
}

impl GreedyTriangulation {
    pub fn new(order: CyclicOrder, enumeration: Enumeration) -> Result<Self> {
        match (&order, &enumeration) {
            (CyclicOrder::FiniteGon(n), Enumeration::Identity(m)) if n == m => {}
            (CyclicOrder::ThreadGon(k), Enumeration::Diagonal(j)) if k == j && *k > 0 => {}
            (_, Enumeration::Prefix(v)) => {
                let distinct: BTreeSet<&Point> = v.iter().collect();
                if distinct.len() != v.len() {
                    return Err(Error::Domain("enumeration repeats a point".into()));
                }
                for &p in v {
                    order.validate(p)?;
                }
                if let Some(n) = order.len() {
                    if v.len() as u64 != n {
                        return Err(Error::Domain("enumeration must list every point".into()));
                    }
                }
            }
            _ => return Err(Error::Domain(format!("enumeration does not fit {order}"))),
        }
        Ok(GreedyTriangulation {
            order,
            enumeration,
            steps: 0,
            arcs: BTreeSet::new(),
            incident: BTreeMap::new(),
        })
    }

    pub fn order(&self) -> CyclicOrder {
        self.order
    }

    pub fn enumeration(&self) -> &Enumeration {
        &self.enumeration
    }

    /// The largest `n` with `S_n` materialized.
    pub fn materialized(&self) -> u64 {
        self.steps
    }

    /// The materialized prefix `S_n`.
    pub fn arcs(&self) -> &BTreeSet<Arc> {
        &self.arcs
    }

    /// Extends the prefix to `S_n`, or to the last step of a finite
    /// enumeration.
    pub fn materialize(&mut self, n: u64) -> Result<()> {
        let last = self.enumeration.len().map_or(n, |len| n.min(len.saturating_sub(1)));
        while self.steps < last {
            let step = self.steps + 1;
            let new = self
                .enumeration
                .point(step)
                .ok_or_else(|| Error::Invariant("enumeration ended".into()))?;
            let mut accepted = Vec::new();
            for i in 0..step {
                let old = self.enumeration.point(i).expect("earlier indices are enumerated");
                let Ok(p) = Arc::new(&self.order, old, new) else {
                    continue;
                };
                if !self.arcs.iter().any(|q| q.crosses(&p)) {
                    accepted.push(p);
                }
            }
            for p in accepted {
                self.arcs.insert(p);
                for e in p.endpoints() {
                    self.incident.entry(e).or_default().insert(p);
                }
            }
            self.steps = step;
        }
        Ok(())
    }

    /// Whether `p` belongs to the final set; decided once both endpoints
    /// have been enumerated, after which membership never changes.
    pub fn contains(&mut self, p: &Arc) -> Result<bool> {
        Arc::new(&self.order, p.lo(), p.hi())?;
        let mut n = 0;
        for e in p.endpoints() {
            n = n.max(self.index_of(e)?);
        }
        self.materialize(n)?;
        Ok(self.arcs.contains(p))
    }

    /// Arcs of `S_bound` incident with `point`.
    pub fn incident_arcs_up_to(&mut self, point: Point, bound: u64) -> Result<Vec<Arc>> {
        self.order.validate(point)?;
        self.materialize(bound)?;
        Ok(self
            .incident
            .get(&point)
            .map(|s| s.iter().copied().collect())
            .unwrap_or_default())
    }

    /// An index `N` such that every arc of the final set incident with
    /// `point` already lies in `S_N`: the largest enumeration index among
    /// `point` and its two neighbours.
    pub fn stabilization_bound(&self, point: Point) -> Result<u64> {
        let mut n = self.index_of(point)?;
        for q in [self.order.predecessor(point)?, self.order.successor(point)?] {
            n = n.max(self.index_of(q)?);
        }
        Ok(n)
    }

    /// Every arc of the final set incident with `point`.
    pub fn incident_arcs(&mut self, point: Point) -> Result<Vec<Arc>> {
        let n = self.stabilization_bound(point)?;
        self.incident_arcs_up_to(point, n)
    }

    fn index_of(&self, p: Point) -> Result<u64> {
        self.order.validate(p)?;
        self.enumeration
            .index(p)
            .ok_or_else(|| Error::Domain(format!("{p} is not enumerated")))
    }
}

fn map(thread: u32, slope: i8, offset: i64) -> AffinePointMap {
    AffinePointMap::new(thread, slope, offset).expect("unit slope")
}

fn pt(thread: u32, offset: i64) -> Point {
    Point::threaded(thread, offset)
}

/// Every arc through `a`.
pub fn fan(order: CyclicOrder, a: Point) -> Result<SymbolicArcSet> {
    order.validate(a)?;
    match order {
        CyclicOrder::FiniteGon(n) => {
            if n < 5 {
                return Err(Error::Domain(format!("a fan needs at least 5 points, not {n}")));
            }
            let arcs = (2..n as i64 - 1).map(|d| {
                let b = order.finite_point(a.offset + d).expect("in range");
                Arc::from_points_unchecked(a, b)
            });
            SymbolicArcSet::from_arcs(order, arcs)
        }
        CyclicOrder::ThreadGon(k) => {
            let hub = AffinePointMap::constant(a);
            let mut families = Vec::new();
            for t in 0..k {
                let range = if t == a.thread {
                    families.push(ArcFamily::new(map(t, 1, 0), hub, Interval::at_least(a.offset + 2), []));
                    Interval::at_most(a.offset - 2)
                } else {
                    Interval::ALL
                };
                families.push(ArcFamily::new(map(t, 1, 0), hub, range, []));
            }
            SymbolicArcSet::new(order, [], families)
        }
    }
}

fn thread_fan(t: u32) -> ArcFamily {
    ArcFamily::new(map(t, 1, 0), map(t, 0, 0), Interval::ALL, [-1, 0, 1])
}

fn zigzag(t: u32) -> [ArcFamily; 2] {
    [
        ArcFamily::new(map(t, 1, 0), map(t, -1, 0), Interval::at_least(1), []),
        ArcFamily::new(map(t, 1, 1), map(t, -1, 0), Interval::at_least(1), []),
    ]
}

/// The classical examples `S_1, …, S_11` of noncrossing arc sets, which
/// between them realize every possible combination of connected, maximal,
/// triangulation and locally finite.
pub fn builtin_example(i: u32) -> Result<SymbolicArcSet> {
    let one = CyclicOrder::ThreadGon(1);
    let two = CyclicOrder::ThreadGon(2);
    let arc = |a: Point, b: Point| Arc::from_points_unchecked(a, b);
    match i {
        1 => SymbolicArcSet::new(
            one,
            [],
            [
                ArcFamily::new(map(0, 1, 0), map(0, 0, -1), Interval::at_most(-3), []),
                ArcFamily::new(map(0, 0, 1), map(0, 1, 0), Interval::at_least(3), []),
            ],
        ),
        2 => SymbolicArcSet::from_arcs(one, [arc(pt(0, -3), pt(0, -1)), arc(pt(0, 1), pt(0, 3))]),
        3 => SymbolicArcSet::new(two, [], [thread_fan(0), thread_fan(1)]),
        4 => SymbolicArcSet::new(
            one,
            [],
            [
                ArcFamily::new(map(0, 1, 0), map(0, 0, 0), Interval::at_most(-2), []),
                ArcFamily::new(map(0, 0, 1), map(0, 1, 0), Interval::at_least(3), []),
            ],
        ),
        5 => {
            let [z1, z2] = zigzag(1);
            SymbolicArcSet::new(two, [], [thread_fan(0), z1, z2])
        }
        6 => {
            let [a, b] = zigzag(0);
            let [c, d] = zigzag(1);
            SymbolicArcSet::new(two, [], [a, b, c, d])
        }
        7 => SymbolicArcSet::new(
            one,
            [],
            [ArcFamily::new(map(0, 0, 0), map(0, 1, 0), Interval::ALL, [-1, 0, 1, 2])],
        ),
        8 => SymbolicArcSet::from_arcs(one, [arc(pt(0, 0), pt(0, 2))]),
        9 => SymbolicArcSet::new(two, [arc(pt(0, 0), pt(1, 0))], [thread_fan(0), thread_fan(1)]),
        10 => SymbolicArcSet::new(one, [], [thread_fan(0)]),
        11 => SymbolicArcSet::new(
            two,
            [],
            [
                ArcFamily::new(map(0, 1, 0), map(1, -1, 0), Interval::ALL, []),
                ArcFamily::new(map(0, 1, 0), map(1, -1, 1), Interval::ALL, []),
            ],
        ),
        _ => Err(Error::Domain(format!("there is no example {i}; choose 1 to 11"))),
    }
}
