//! Deciders for the set-level properties: pairwise noncrossing, connected,
//! maximal, triangulation, locally finite and cluster-tilting.
//!
//! Finite polygons are decided by direct enumeration. Infinity-gons are
//! decided exactly on the symbolic description:
//!
//! - noncrossing, local finiteness and triangle queries are octagon
//!   feasibility questions over the piece parameters;
//! - maximality subtracts, per pair of threads, the octagon cells of arcs
//!   that cross or belong to the set from the region of all candidate arcs;
//! - the triangulation condition projects, for each member piece and each
//!   side, the systems describing a third vertex onto the piece parameter and
//!   checks that the projections cover the piece;
//! - connectedness works on the graph of points joined by member arcs. Far
//!   out on a thread end, the arcs of unbounded families act as translations
//!   of depth (or attach every deep point to a fixed hub point), so deep
//!   points fall into finitely many residue classes unless some class
//!   structure is infinite, which already means disconnected. The classes
//!   together with the points near the origin form a finite quotient graph.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_integer::Integer;

use crate::affine::{self, Term};
use crate::arc::Arc;
use crate::arcset::{within, Piece, Source, SymbolicArcSet, L, M, N};
use crate::cyclic::{CyclicOrder, Point};
use crate::error::{Error, Result};
use crate::finite::Polygon;
use crate::octagon::{FeasibilitySystem, Interval, Var};

const REGION_LIMIT: usize = 1 << 18;
const QUOTIENT_LIMIT: u128 = 1 << 22;

/// Three points, sorted in the canonical cut.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Triangle(pub [Point; 3]);

impl Triangle {
    pub fn new(a: Point, b: Point, c: Point) -> Self {
        let mut v = [a, b, c];
        v.sort();
        Triangle(v)
    }

    pub fn contains(&self, p: Point) -> bool {
        self.0.contains(&p)
    }
}

impl fmt::Display for Triangle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}, {}, {}}}", self.0[0], self.0[1], self.0[2])
    }
}

/// A two-gon that lies in the wrong number of triangles.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Deficiency {
    pub a: Point,
    pub b: Point,
    pub is_edge: bool,
    pub triangles: usize,
}

impl fmt::Display for Deficiency {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let kind = if self.is_edge { "edge" } else { "arc" };
        let want = if self.is_edge { 1 } else { 2 };
        write!(
            f,
            "{kind} {{{}, {}}} lies in {} triangles, expected {want}",
            self.a, self.b, self.triangles
        )
    }
}

impl SymbolicArcSet {
    fn polygon(&self) -> Option<Polygon<'_>> {
        match self.order() {
            CyclicOrder::FiniteGon(n) => Some(Polygon {
                n: n as i64,
                arcs: self.explicit(),
            }),
            CyclicOrder::ThreadGon(_) => None,
        }
    }

    fn check_order(&self) -> Result<()> {
        match self.order() {
            CyclicOrder::FiniteGon(n) if n <= 3 => {
                Err(Error::Domain(format!("properties need at least 4 points, not {n}")))
            }
            CyclicOrder::ThreadGon(0) => Err(Error::Domain("an infinity-gon needs a thread".into())),
            _ => Ok(()),
        }
    }

    /// Two crossing members, if there are any.
    pub fn noncrossing_witness(&self) -> Result<Option<(Arc, Arc)>> {
        self.check_order()?;
        if let Some(poly) = self.polygon() {
            return Ok(poly.noncrossing_witness());
        }
        let pieces = self.pieces();
        for (i, p) in pieces.iter().enumerate() {
            for q in &pieces[i..] {
                if let (Source::Explicit(a), Source::Explicit(b)) = (p.source, q.source) {
                    if a.crosses(&b) {
                        return Ok(Some(ordered(a, b)));
                    }
                    continue;
                }
                let (f, g) = p.terms(N);
                let (h, k) = q.terms(M);
                for case in affine::crossing(&f, &g, &h, &k) {
                    if let Some(v) = within(&case, &[(N, p.domain), (M, q.domain)]).sample(&[N, M]) {
                        return Ok(Some(ordered(p.arc_at(v[0]), q.arc_at(v[1]))));
                    }
                }
            }
        }
        Ok(None)
    }

    pub fn is_pairwise_noncrossing(&self) -> Result<bool> {
        Ok(self.noncrossing_witness()?.is_none())
    }

    fn require_noncrossing(&self) -> Result<()> {
        match self.noncrossing_witness()? {
            Some((p, q)) => Err(Error::NotNoncrossing(p, q)),
            None => Ok(()),
        }
    }

    /// A point incident with infinitely many members, if there is one.
    pub fn locally_finite_witness(&self) -> Result<Option<Point>> {
        self.require_noncrossing()?;
        for piece in self.pieces() {
            if piece.is_infinite() {
                for map in [piece.first, piece.second] {
                    if map.is_constant() {
                        return Ok(Some(map.at(0)?));
                    }
                }
            }
        }
        Ok(None)
    }

    pub fn is_locally_finite(&self) -> Result<bool> {
        Ok(self.locally_finite_witness()?.is_none())
    }

    /// Whether any two members are joined by a sequence of members in which
    /// consecutive arcs share an endpoint.
    pub fn is_connected(&self) -> Result<bool> {
        self.require_noncrossing()?;
        match self.polygon() {
            Some(poly) => Ok(poly.is_connected()),
            None => connected_symbolic(self),
        }
    }

    /// An arc that is not a member and crosses no member, if there is one.
    pub fn maximality_witness(&self) -> Result<Option<Arc>> {
        self.require_noncrossing()?;
        match self.polygon() {
            Some(poly) => Ok(poly.maximality_witness()),
            None => maximality_symbolic(self),
        }
    }

    pub fn is_maximal(&self) -> Result<bool> {
        Ok(self.maximality_witness()?.is_none())
    }

    /// Whether `{a, b}` is an edge of the order or a member.
    pub fn is_two_gon(&self, a: Point, b: Point) -> Result<bool> {
        let order = self.order();
        order.validate(a)?;
        order.validate(b)?;
        if a == b {
            return Ok(false);
        }
        if order.are_neighbors(a, b) {
            return Ok(true);
        }
        self.contains(&Arc::from_points_unchecked(a, b))
    }

    /// Every triangle of the set containing the two-gon `{a, b}`.
    pub fn triangles_on(&self, a: Point, b: Point) -> Result<Vec<Triangle>> {
        if !self.is_two_gon(a, b)? {
            return Err(Error::Domain(format!("{{{a}, {b}}} is neither an edge nor a member")));
        }
        self.require_noncrossing()?;
        let thirds = self.third_vertices(a, b)?;
        Ok(thirds.into_iter().map(|x| Triangle::new(a, x, b)).collect())
    }

    /// Points `x` with `{a, x}` and `{x, b}` both two-gons, sorted.
    pub(crate) fn third_vertices(&self, a: Point, b: Point) -> Result<Vec<Point>> {
        if let Some(poly) = self.polygon() {
            return Ok(poly.third_vertices(a, b));
        }
        let sources = self.two_gon_sources();
        let (ta, tb) = (Term::point(a), Term::point(b));
        let mut found = BTreeSet::new();
        for q in &sources {
            for (q1, q2) in oriented(q, M) {
                let first = affine::eq(&ta, &q1);
                if first.is_contradiction() || !within(&first, &[(M, q.domain)]).is_feasible() {
                    continue;
                }
                for r in &sources {
                    for (r1, r2) in oriented(r, L) {
                        let sys = affine::all(&[first.clone(), affine::eq(&q2, &r1), affine::eq(&r2, &tb)]);
                        let sys = within(&sys, &[(M, q.domain), (L, r.domain)]);
                        let Some(ms) = sys.range_of(M) else { continue };
                        let (Some(lo), Some(hi)) = (ms.lo, ms.hi) else {
                            return Err(Error::Invariant(format!("infinitely many triangles on {{{a}, {b}}}")));
                        };
                        if (hi - lo) as u128 > QUOTIENT_LIMIT {
                            return Err(Error::ResourceLimit("too many triangles".into()));
                        }
                        for m in lo..=hi {
                            let x = q2.eval(m);
                            if x != a && x != b {
                                found.insert(x);
                            }
                        }
                    }
                }
            }
        }
        Ok(found.into_iter().collect())
    }

    /// Member pieces followed by one edge piece per thread.
    fn two_gon_sources(&self) -> Vec<Piece> {
        let mut v = self.pieces();
        v.extend((0..self.order().threads()).map(Piece::edges));
        v
    }

    /// A two-gon with the wrong number of triangles, if there is one.
    pub fn triangulation_witness(&self) -> Result<Option<Deficiency>> {
        self.require_noncrossing()?;
        self.deficiency(true)
    }

    /// A member arc that does not lie in two triangles, if there is one.
    /// On a maximal set these are exactly the arcs that are not
    /// exchangeable.
    pub fn arc_deficiency(&self) -> Result<Option<Deficiency>> {
        self.require_noncrossing()?;
        self.deficiency(false)
    }

    fn deficiency(&self, with_edges: bool) -> Result<Option<Deficiency>> {
        if let Some(poly) = self.polygon() {
            let found = if with_edges {
                poly.triangulation_witness()
            } else {
                poly.arc_deficiency()
            };
            return Ok(found.map(|(a, b, is_edge, triangles)| Deficiency {
                a,
                b,
                is_edge,
                triangles,
            }));
        }
        let sources = self.two_gon_sources();
        let mut cells = Vec::new();
        for piece in self.pieces() {
            let (f, g) = piece.terms(N);
            for (lo, hi) in [(f, g), (g, f)] {
                if let Some(i) = within(&affine::lt(&lo, &hi), &[(N, piece.domain)]).range_of(N) {
                    cells.push((lo, hi, i, false));
                }
            }
        }
        if with_edges {
            for t in 0..self.order().threads() {
                let (lo, hi) = Piece::edges(t).terms(N);
                cells.push((lo, hi, Interval::ALL, true));
            }
        }
        for (lo, hi, cell, is_edge) in cells {
            let (inside, outside) = side_coverage(&sources, &lo, &hi, cell);
            let gap = if is_edge { None } else { cell.first_uncovered(&inside) };
            if let Some(n) = gap.or_else(|| cell.first_uncovered(&outside)) {
                let (a, b) = (lo.eval(n), hi.eval(n));
                let triangles = self.third_vertices(a, b)?.len();
                return Ok(Some(Deficiency {
                    a,
                    b,
                    is_edge,
                    triangles,
                }));
            }
        }
        Ok(None)
    }

    pub fn is_triangulation(&self) -> Result<bool> {
        Ok(self.triangulation_witness()?.is_none())
    }

    /// Connected triangulation, which is what makes the image under the
    /// dictionary a cluster-tilting subcategory.
    pub fn is_cluster_tilting(&self) -> Result<bool> {
        Ok(self.is_connected()? && self.is_triangulation()?)
    }

    /// Whether some member arc has `a` as an endpoint.
    pub fn is_incident(&self, a: Point) -> Result<bool> {
        let partners = self.partners(a)?;
        let order = self.order();
        Ok(!partners.runs.is_empty() || partners.points.iter().any(|&x| !order.are_neighbors(a, x)))
    }

    /// Points `x` with `{a, x}` a two-gon, split into concrete points and
    /// affine runs `x = map(m)` for `m` in an interval.
    pub(crate) fn partners(&self, a: Point) -> Result<Partners> {
        self.order().validate(a)?;
        if let Some(poly) = self.polygon() {
            return Ok(Partners {
                points: poly.partners(a),
                runs: Vec::new(),
            });
        }
        let mut points = BTreeSet::new();
        let mut runs = Vec::new();
        let ta = Term::point(a);
        for q in self.two_gon_sources() {
            for (q1, q2) in oriented(&q, M) {
                let sys = within(&affine::eq(&ta, &q1), &[(M, q.domain)]);
                let Some(ms) = sys.range_of(M) else { continue };
                if q2.coeff == 0 {
                    points.insert(q2.eval(0));
                } else if let (Some(lo), Some(hi)) = (ms.lo, ms.hi) {
                    points.extend((lo..=hi).map(|m| q2.eval(m)));
                } else {
                    runs.push((q2, ms));
                }
            }
        }
        points.remove(&a);
        Ok(Partners {
            points: points.into_iter().collect(),
            runs,
        })
    }
}

/// Result of [`SymbolicArcSet::partners`].
pub(crate) struct Partners {
    pub points: Vec<Point>,
    /// `(x, range)`: the points `x(m)` for `m` in `range`, one side unbounded.
    pub runs: Vec<(Term, Interval)>,
}

fn ordered(a: Arc, b: Arc) -> (Arc, Arc) {
    if a <= b {
        (a, b)
    } else {
        (b, a)
    }
}

/// The two orientations of a piece's endpoints in variable `var`.
fn oriented(p: &Piece, var: Var) -> [(Term, Term); 2] {
    let (f, g) = p.terms(var);
    [(f, g), (g, f)]
}

/// Projections onto `N` of "a third vertex exists inside / outside" for the
/// two-gon `{lo(N), hi(N)}` with `lo < hi` on `cell`.
fn side_coverage(sources: &[Piece], lo: &Term, hi: &Term, cell: Interval) -> (Vec<Interval>, Vec<Interval>) {
    let mut inside = Vec::new();
    let mut outside = Vec::new();
    for q in sources {
        for (q1, x) in oriented(q, M) {
            let first = within(&affine::eq(lo, &q1), &[(N, cell), (M, q.domain)]);
            if !first.is_feasible() {
                continue;
            }
            for r in sources {
                for (r1, r2) in oriented(r, L) {
                    let base = affine::all(&[first.clone(), affine::eq(&x, &r1), affine::eq(&r2, hi)]);
                    let base = within(&base, &[(L, r.domain)]);
                    if base.is_contradiction() {
                        continue;
                    }
                    let sides = [
                        (
                            true,
                            affine::all(&[base.clone(), affine::lt(lo, &x), affine::lt(&x, hi)]),
                        ),
                        (false, affine::all(&[base.clone(), affine::lt(&x, lo)])),
                        (false, affine::all(&[base, affine::lt(hi, &x)])),
                    ];
                    for (is_inside, sys) in sides {
                        if let Some(i) = sys.range_of(N) {
                            if is_inside {
                                inside.push(i);
                            } else {
                                outside.push(i);
                            }
                        }
                    }
                }
            }
        }
    }
    (inside, outside)
}

fn maximality_symbolic(set: &SymbolicArcSet) -> Result<Option<Arc>> {
    const U: Var = 0;
    const V: Var = 1;
    const P: Var = 2;
    let k = set.order().threads();
    let pieces = set.pieces();
    for t1 in 0..k {
        for t2 in t1..k {
            let x = Term {
                thread: t1,
                coeff: 1,
                var: U,
                offset: 0,
            };
            let y = Term {
                thread: t2,
                coeff: 1,
                var: V,
                offset: 0,
            };
            let mut start = FeasibilitySystem::new();
            if t1 == t2 {
                // y - x >= 2
                start = affine::lt(&x.shifted(1), &y);
            }
            let mut cells = Vec::new();
            for piece in &pieces {
                let (f, g) = piece.terms(P);
                let cases = affine::crossing(&x, &y, &f, &g)
                    .into_iter()
                    .chain(affine::same_pair(&x, &y, &f, &g));
                for case in cases {
                    let cell = within(&case, &[(P, piece.domain)]).project(&[U, V]);
                    if !cell.is_contradiction() {
                        cells.push(cell);
                    }
                }
            }
            let mut regions = vec![start];
            for cell in &cells {
                let mut next = Vec::new();
                for r in &regions {
                    subtract(r, cell, &mut next);
                    if next.len() > REGION_LIMIT {
                        return Err(Error::ResourceLimit("maximality region split too fine".into()));
                    }
                }
                regions = next;
                if regions.is_empty() {
                    break;
                }
            }
            for r in &regions {
                if let Some(v) = r.sample(&[U, V]) {
                    let p = Arc::from_points_unchecked(Point::threaded(t1, v[0]), Point::threaded(t2, v[1]));
                    return Ok(Some(p));
                }
            }
        }
    }
    Ok(None)
}

/// Pushes the feasible parts of `r \ k` as disjoint systems.
fn subtract(r: &FeasibilitySystem, k: &FeasibilitySystem, out: &mut Vec<FeasibilitySystem>) {
    let count = k.len();
    for i in 0..count {
        let neg = k.negated_atom(i).expect("index in range");
        let part = r.and(&k.prefix(i)).and(&neg);
        if part.is_feasible() {
            out.push(part);
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
struct End {
    thread: u32,
    sign: i64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
enum Vertex {
    Point(Point),
    Class(usize, i64),
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn find(&mut self, x: usize) -> usize {
        let mut r = x;
        while self.parent[r] != r {
            r = self.parent[r];
        }
        let mut y = x;
        while self.parent[y] != r {
            let next = self.parent[y];
            self.parent[y] = r;
            y = next;
        }
        r
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra] = rb;
        }
    }
}

fn connected_symbolic(set: &SymbolicArcSet) -> Result<bool> {
    let pieces = set.pieces();
    if pieces.is_empty() {
        return Ok(true);
    }
    let d0 = set.magnitude();
    let base = 2 * d0 + 2;

    // tails of unbounded pieces, in depth coordinates
    let mut ends: BTreeMap<End, usize> = BTreeMap::new();
    let mut translations: Vec<(usize, usize, i64)> = Vec::new();
    let mut hubs: Vec<(Point, usize)> = Vec::new();
    for piece in &pieces {
        let mut dirs = Vec::new();
        if piece.domain.hi.is_none() {
            dirs.push(1i64);
        }
        if piece.domain.lo.is_none() {
            dirs.push(-1);
        }
        for dir in dirs {
            let mut slots: Vec<core::result::Result<(usize, i64), Point>> = Vec::new();
            for map in [piece.first, piece.second] {
                if map.is_constant() {
                    slots.push(Err(map.at(0)?));
                } else {
                    let end = End {
                        thread: map.thread,
                        sign: map.slope() as i64 * dir,
                    };
                    let next = ends.len();
                    let id = *ends.entry(end).or_insert(next);
                    slots.push(Ok((id, end.sign * map.offset)));
                }
            }
            match (slots[0], slots[1]) {
                (Ok((x, cx)), Ok((y, cy))) => translations.push((x, y, cy - cx)),
                (Ok((x, _)), Err(h)) | (Err(h), Ok((x, _))) => hubs.push((h, x)),
                (Err(_), Err(_)) => unreachable!("constant families are explicit"),
            }
        }
    }

    // potentials and period per component of the end graph
    let count = ends.len();
    let mut adj: Vec<Vec<(usize, i64)>> = vec![Vec::new(); count];
    for &(x, y, d) in &translations {
        adj[x].push((y, d));
        adj[y].push((x, -d));
    }
    let mut comp = vec![usize::MAX; count];
    let mut potential = vec![0i64; count];
    let mut periods: Vec<i64> = Vec::new();
    for s in 0..count {
        if comp[s] != usize::MAX {
            continue;
        }
        let c = periods.len();
        periods.push(0);
        comp[s] = c;
        let mut stack = vec![s];
        while let Some(x) = stack.pop() {
            for &(y, d) in &adj[x] {
                if comp[y] == usize::MAX {
                    comp[y] = c;
                    potential[y] = potential[x] + d;
                    stack.push(y);
                }
            }
        }
    }
    let mut widest = 0i64;
    for &(x, y, d) in &translations {
        let gap = potential[x] + d - potential[y];
        widest = widest.max(gap.abs());
        periods[comp[x]] = periods[comp[x]].gcd(&gap);
    }
    let mut hub_comp = vec![false; periods.len()];
    for &(_, x) in &hubs {
        hub_comp[comp[x]] = true;
    }
    for c in 0..periods.len() {
        if !hub_comp[c] && periods[c] == 0 {
            return Ok(false);
        }
    }
    let spread: i64 = translations.iter().map(|t| t.2.abs()).sum();
    let deep = base + 3 * spread + widest + 2;
    let reach = deep + d0 + 1;

    let mut index: BTreeMap<Vertex, usize> = BTreeMap::new();
    let mut uf = UnionFind { parent: Vec::new() };
    let mut vertex = |v: Vertex, uf: &mut UnionFind| -> usize {
        let next = index.len();
        *index.entry(v).or_insert_with(|| {
            uf.parent.push(next);
            next
        })
    };
    let mut budget: u128 = 0;
    for c in 0..periods.len() {
        let classes = if hub_comp[c] { 1 } else { periods[c] };
        budget += classes as u128;
        if budget > QUOTIENT_LIMIT {
            return Err(Error::ResourceLimit("connectivity quotient too large".into()));
        }
        for r in 0..classes {
            vertex(Vertex::Class(c, r), &mut uf);
        }
    }
    let class_of = |p: Point| -> Result<Vertex> {
        if p.offset.abs() <= deep {
            return Ok(Vertex::Point(p));
        }
        let end = End {
            thread: p.thread,
            sign: p.offset.signum(),
        };
        let &id = ends
            .get(&end)
            .ok_or_else(|| Error::Invariant(format!("deep point {p} off every tail")))?;
        let c = comp[id];
        if hub_comp[c] {
            Ok(Vertex::Class(c, 0))
        } else {
            Ok(Vertex::Class(
                c,
                (p.offset.abs() - potential[id]).rem_euclid(periods[c]),
            ))
        }
    };
    let window = Interval::closed(-reach, reach);
    for piece in &pieces {
        let dom = piece.domain.intersect(&window);
        budget += dom.len().unwrap_or(0);
        if budget > QUOTIENT_LIMIT {
            return Err(Error::ResourceLimit("connectivity quotient too large".into()));
        }
        if dom.is_empty() {
            continue;
        }
        for n in dom.lo.unwrap()..=dom.hi.unwrap() {
            let p = piece.arc_at(n);
            let a = vertex(class_of(p.lo())?, &mut uf);
            let b = vertex(class_of(p.hi())?, &mut uf);
            uf.union(a, b);
        }
    }
    for &(h, x) in &hubs {
        let a = vertex(Vertex::Point(h), &mut uf);
        let b = vertex(Vertex::Class(comp[x], 0), &mut uf);
        uf.union(a, b);
    }
    let total = uf.parent.len();
    let root = uf.find(0);
    Ok((1..total).all(|i| uf.find(i) == root))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::affine::AffinePointMap;
    use crate::arcset::ArcFamily;

    fn pt(t: u32, e: i64) -> Point {
        Point::threaded(t, e)
    }

    fn map(t: u32, s: i8, c: i64) -> AffinePointMap {
        AffinePointMap::new(t, s, c).unwrap()
    }

    fn pentagon_fan() -> SymbolicArcSet {
        let o = CyclicOrder::FiniteGon(5);
        let arcs = [(0, 2), (0, 3)].map(|(a, b)| Arc::new(&o, Point::finite(a), Point::finite(b)).unwrap());
        SymbolicArcSet::from_arcs(o, arcs).unwrap()
    }

    #[test]
    fn pentagon_fan_properties() {
        let s = pentagon_fan();
        assert!(s.is_pairwise_noncrossing().unwrap());
        assert!(s.is_connected().unwrap());
        assert!(s.is_maximal().unwrap());
        assert!(s.is_triangulation().unwrap());
        let t = s.triangles_on(Point::finite(0), Point::finite(2)).unwrap();
        assert_eq!(t.len(), 2);
        let t = s.triangles_on(Point::finite(1), Point::finite(2)).unwrap();
        assert_eq!(
            t,
            vec![Triangle::new(Point::finite(0), Point::finite(1), Point::finite(2))]
        );
    }

    #[test]
    fn tiny_polygons_are_rejected() {
        let s = SymbolicArcSet::empty(CyclicOrder::FiniteGon(3));
        assert!(matches!(s.is_maximal(), Err(Error::Domain(_))));
    }

    #[test]
    fn step_two_family_crosses_itself() {
        let fam = ArcFamily::new(map(0, 1, 0), map(0, 1, 2), Interval::ALL, []);
        let s = SymbolicArcSet::new(CyclicOrder::ThreadGon(1), [], [fam]).unwrap();
        assert!(!s.is_pairwise_noncrossing().unwrap());
        assert!(matches!(s.is_connected(), Err(Error::NotNoncrossing(..))));
    }

    #[test]
    fn parallel_family_is_disconnected() {
        let fam = ArcFamily::new(map(0, 1, 0), map(1, -1, 0), Interval::ALL, []);
        let s = SymbolicArcSet::new(CyclicOrder::ThreadGon(2), [], [fam]).unwrap();
        assert!(s.is_pairwise_noncrossing().unwrap());
        assert!(!s.is_connected().unwrap());
        assert!(s.is_locally_finite().unwrap());
    }

    #[test]
    fn single_arc_is_not_maximal() {
        let o = CyclicOrder::ThreadGon(1);
        let s = SymbolicArcSet::from_arcs(o, [Arc::new(&o, pt(0, 0), pt(0, 2)).unwrap()]).unwrap();
        let w = s.maximality_witness().unwrap().unwrap();
        assert!(!w.crosses(&Arc::new(&o, pt(0, 0), pt(0, 2)).unwrap()));
        assert!(!s.contains(&w).unwrap());
    }

    #[test]
    fn fountain_is_a_connected_triangulation() {
        let fam = ArcFamily::new(map(0, 1, 0), map(0, 0, 0), Interval::ALL, [-1, 0, 1]);
        let s = SymbolicArcSet::new(CyclicOrder::ThreadGon(1), [], [fam]).unwrap();
        assert!(s.is_connected().unwrap());
        assert!(s.is_maximal().unwrap());
        assert_eq!(s.triangulation_witness().unwrap(), None);
        assert!(!s.is_locally_finite().unwrap());
        let t = s.triangles_on(pt(0, 0), pt(0, 3)).unwrap();
        assert_eq!(
            t,
            vec![
                Triangle::new(pt(0, 0), pt(0, 2), pt(0, 3)),
                Triangle::new(pt(0, 0), pt(0, 3), pt(0, 4))
            ]
        );
    }
}
