//! Flips of arcs in maximal sets and greedy flip sequences.
//!
//! In a maximal noncrossing set an arc `ab` can be exchanged exactly when it
//! lies in two triangles `axb` and `ayb`; the flip replaces it by the other
//! diagonal `xy` of the quadrilateral `axby`.

use alloc::format;
use alloc::vec::Vec;
use core::fmt;

use crate::affine::{self, Term};
use crate::arc::Arc;
use crate::arcset::{within, CrossingArcs, SymbolicArcSet, M};
use crate::cyclic::{CyclicOrder, Point};
use crate::error::{Error, Result};
use crate::octagon::FeasibilitySystem;

/// One flip: `removed = {a, b}` is replaced by `added = {x, y}` inside the
/// quadrilateral `(a, x, b, y)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FlipStep {
    pub removed: Arc,
    pub added: Arc,
    pub quadrilateral: [Point; 4],
}

impl fmt::Display for FlipStep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, x, b, y] = self.quadrilateral;
        write!(
            f,
            "flip {} -> {} in quadrilateral {a} {x} {b} {y}",
            self.removed, self.added
        )
    }
}

/// A finite sequence of flips starting from `start` and ending at `end`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FlipSequence {
    pub start: SymbolicArcSet,
    pub steps: Vec<FlipStep>,
    pub end: SymbolicArcSet,
}

/// The triangles `axb` and `ayb` on the arc `p = {a, b}` formed with two-gons
/// of `set`, whether or not `p` is a member and whether or not `set` is
/// maximal. This is a low-level helper; [`exchangeable`] is the notion that
/// matches flips.
pub fn find_quadrilateral(set: &SymbolicArcSet, p: &Arc) -> Result<Option<FlipStep>> {
    set.check_arc(p)?;
    let (a, b) = (p.lo(), p.hi());
    let thirds = set.third_vertices(a, b)?;
    let x = thirds.iter().copied().find(|&x| a < x && x < b);
    let y = thirds.iter().copied().find(|&y| y < a || y > b);
    Ok(match (x, y) {
        (Some(x), Some(y)) => Some(FlipStep {
            removed: *p,
            added: Arc::from_points_unchecked(x, y),
            quadrilateral: [a, x, b, y],
        }),
        _ => None,
    })
}

/// The flip of `p` in the maximal set `set`, if `p` is exchangeable.
pub fn exchangeable(set: &SymbolicArcSet, p: &Arc) -> Result<Option<FlipStep>> {
    if !set.contains(p)? {
        return Err(Error::Domain(format!("{p} is not a member")));
    }
    if let Some(q) = set.maximality_witness()? {
        return Err(Error::Domain(format!("the set is not maximal: {q} can be added")));
    }
    find_quadrilateral(set, p)
}

/// `μ_p set`: the set with `p` replaced by its flip.
pub fn flip(set: &SymbolicArcSet, p: &Arc) -> Result<SymbolicArcSet> {
    match exchangeable(set, p)? {
        Some(step) => Ok(set.replace(p, &[step.added])),
        None => Err(Error::CannotFlip(*p)),
    }
}

/// Applies a known flip step without re-checking it.
pub(crate) fn apply(set: &SymbolicArcSet, step: &FlipStep) -> SymbolicArcSet {
    set.replace(&step.removed, &[step.added])
}

/// A member arc that cannot be exchanged, if there is one. The set must be
/// maximal.
pub fn non_exchangeable_arc(set: &SymbolicArcSet) -> Result<Option<Arc>> {
    if let Some(q) = set.maximality_witness()? {
        return Err(Error::Domain(format!("the set is not maximal: {q} can be added")));
    }
    Ok(set.arc_deficiency()?.map(|d| Arc::from_points_unchecked(d.a, d.b)))
}

fn require_connected_triangulation(set: &SymbolicArcSet) -> Result<()> {
    if !set.is_connected()? {
        return Err(Error::Domain("the set is not connected".into()));
    }
    if let Some(d) = set.triangulation_witness()? {
        return Err(Error::Domain(format!("the set is not a triangulation: {d}")));
    }
    Ok(())
}

/// For a maximal triangulation, the number of members crossing `p` when
/// that number is finite, which is exactly when `p` can be reached by
/// finitely many flips.
pub fn obtainable(set: &SymbolicArcSet, p: &Arc) -> Result<Option<usize>> {
    if let Some(q) = set.maximality_witness()? {
        return Err(Error::Domain(format!("the set is not maximal: {q} can be added")));
    }
    if let Some(d) = set.triangulation_witness()? {
        return Err(Error::Domain(format!("the set is not a triangulation: {d}")));
    }
    Ok(match set.crossing_arcs(p)? {
        CrossingArcs::Finite(v) => Some(v.len()),
        CrossingArcs::Infinite { .. } => None,
    })
}

/// The triangle `(a, x, y)` of a connected triangulation with `a` the first
/// endpoint of `p = {a, b}` and `b` strictly between `x` and `y`.
pub fn closest_triangle(set: &SymbolicArcSet, p: &Arc) -> Result<[Point; 3]> {
    if set.contains(p)? {
        return Err(Error::Domain(format!("{p} is a member")));
    }
    require_connected_triangulation(set)?;
    closest_unchecked(set, p)
}

/// Best candidate so far in one part of the circle, and whether candidates
/// run off to a thread end upwards or downwards.
#[derive(Default)]
struct Extremes {
    points: Vec<Point>,
    up: bool,
    down: bool,
}

fn collect(parts: &mut Extremes, x: &Term, sys: &FeasibilitySystem) {
    let Some(ms) = sys.range_of(M) else { return };
    for end in [ms.lo, ms.hi].into_iter().flatten() {
        parts.points.push(x.eval(end));
    }
    let coeff = x.coeff as i64;
    if ms.hi.is_none() {
        parts.up |= coeff > 0;
        parts.down |= coeff < 0;
    }
    if ms.lo.is_none() {
        parts.up |= coeff < 0;
        parts.down |= coeff > 0;
    }
}

pub(crate) fn closest_unchecked(set: &SymbolicArcSet, p: &Arc) -> Result<[Point; 3]> {
    let (a, b) = (p.lo(), p.hi());
    let partners = set.partners(a)?;
    let (ta, tb) = (Term::point(a), Term::point(b));
    let mut inside = Extremes::default();
    let mut above = Extremes::default();
    let mut below = Extremes::default();
    for &z in &partners.points {
        if a < z && z < b {
            inside.points.push(z);
        } else if z > b {
            above.points.push(z);
        } else if z < a {
            below.points.push(z);
        }
    }
    for (x, ms) in &partners.runs {
        let dom = [(M, *ms)];
        collect(
            &mut inside,
            x,
            &within(&affine::all(&[affine::lt(&ta, x), affine::lt(x, &tb)]), &dom),
        );
        collect(&mut above, x, &within(&affine::lt(&tb, x), &dom));
        collect(&mut below, x, &within(&affine::lt(x, &ta), &dom));
    }
    let unreachable = || Error::NotReachable(*p);
    if inside.up {
        return Err(unreachable());
    }
    let x = inside.points.iter().copied().max().ok_or_else(unreachable)?;
    let side = if above.points.is_empty() && !above.down {
        below
    } else {
        above
    };
    if side.down {
        return Err(unreachable());
    }
    let y = side.points.iter().copied().min().ok_or_else(unreachable)?;
    if !set.is_two_gon(x, y)? {
        return Err(Error::Invariant(format!("{a}, {x}, {y} is not a triangle")));
    }
    Ok([a, x, y])
}

/// The greedy flip sequence ending in a set that contains `p`. Each step
/// flips the side `xy` of the closest triangle `axy`, which lowers the
/// number of members crossing `p` by one.
pub fn reach(set: &SymbolicArcSet, p: &Arc) -> Result<FlipSequence> {
    require_connected_triangulation(set)?;
    let count = match set.crossing_arcs(p)? {
        CrossingArcs::Finite(v) => v.len(),
        CrossingArcs::Infinite { .. } => return Err(Error::NotReachable(*p)),
    };
    let mut current = set.clone();
    let mut steps = Vec::with_capacity(count);
    for _ in 0..count {
        let [_, x, y] = closest_unchecked(&current, p)?;
        let side = Arc::new(&current.order(), x, y)?;
        let step = find_quadrilateral(&current, &side)?
            .ok_or_else(|| Error::Invariant(format!("{side} cannot be flipped")))?;
        current = apply(&current, &step);
        steps.push(step);
    }
    if !current.contains(p)? {
        return Err(Error::Invariant(format!("{p} not reached after {count} flips")));
    }
    Ok(FlipSequence {
        start: set.clone(),
        steps,
        end: current,
    })
}

/// The triangulations of the `n`-gon that differ from `set` by one flip.
pub(crate) fn finite_neighbours(set: &SymbolicArcSet) -> Result<Vec<(FlipStep, SymbolicArcSet)>> {
    debug_assert!(matches!(set.order(), CyclicOrder::FiniteGon(_)));
    let mut out = Vec::new();
    for p in set.explicit().iter() {
        if let Some(step) = find_quadrilateral(set, p)? {
            out.push((step, apply(set, &step)));
        }
    }
    Ok(out)
}
