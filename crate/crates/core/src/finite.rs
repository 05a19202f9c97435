//! Concrete deciders for arc sets of finite polygons.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use crate::arc::Arc;
use crate::cyclic::Point;

/// A finite set of arcs of the `n`-gon.
pub(crate) struct Polygon<'a> {
    pub n: i64,
    pub arcs: &'a BTreeSet<Arc>,
}

impl Polygon<'_> {
    fn point(&self, i: i64) -> Point {
        Point::finite(i.rem_euclid(self.n))
    }

    pub fn is_edge(&self, a: Point, b: Point) -> bool {
        let d = (a.offset - b.offset).rem_euclid(self.n);
        d == 1 || d == self.n - 1
    }

    pub fn is_two_gon(&self, a: Point, b: Point) -> bool {
        a != b && (self.is_edge(a, b) || self.arcs.contains(&Arc::from_points_unchecked(a, b)))
    }

    /// Every arc of the polygon.
    pub fn all_arcs(&self) -> impl Iterator<Item = Arc> + '_ {
        (0..self.n).flat_map(move |i| {
            (i + 2..self.n)
                .filter(move |&j| !(i == 0 && j == self.n - 1))
                .map(move |j| Arc::from_points_unchecked(Point::finite(i), Point::finite(j)))
        })
    }

    pub fn noncrossing_witness(&self) -> Option<(Arc, Arc)> {
        let v: Vec<&Arc> = self.arcs.iter().collect();
        for (i, p) in v.iter().enumerate() {
            for q in &v[i + 1..] {
                if p.crosses(q) {
                    return Some((**p, **q));
                }
            }
        }
        None
    }

    pub fn is_connected(&self) -> bool {
        let mut parent: Vec<usize> = (0..self.n as usize).collect();
        fn find(parent: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while parent[r] != r {
                r = parent[r];
            }
            parent[x] = r;
            r
        }
        for p in self.arcs {
            let (a, b) = (p.lo().offset as usize, p.hi().offset as usize);
            let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
            parent[ra] = rb;
        }
        let mut roots = BTreeSet::new();
        for p in self.arcs {
            roots.insert(find(&mut parent, p.lo().offset as usize));
        }
        roots.len() <= 1
    }

    pub fn maximality_witness(&self) -> Option<Arc> {
        self.all_arcs()
            .find(|p| !self.arcs.contains(p) && !self.arcs.iter().any(|q| q.crosses(p)))
    }

    /// Third vertices of the triangles on the two-gon `{a, b}`.
    pub fn third_vertices(&self, a: Point, b: Point) -> Vec<Point> {
        (0..self.n)
            .map(|i| self.point(i))
            .filter(|&x| x != a && x != b && self.is_two_gon(a, x) && self.is_two_gon(x, b))
            .collect()
    }

    /// Every two-gon partner of `a`.
    pub fn partners(&self, a: Point) -> Vec<Point> {
        (0..self.n)
            .map(|i| self.point(i))
            .filter(|&x| self.is_two_gon(a, x))
            .collect()
    }

    /// A two-gon with the wrong number of triangles: `(a, b, is_edge, count)`.
    pub fn arc_deficiency(&self) -> Option<(Point, Point, bool, usize)> {
        for p in self.arcs {
            let c = self.third_vertices(p.lo(), p.hi()).len();
            if c != 2 {
                return Some((p.lo(), p.hi(), false, c));
            }
        }
        None
    }

    pub fn triangulation_witness(&self) -> Option<(Point, Point, bool, usize)> {
        if let Some(found) = self.arc_deficiency() {
            return Some(found);
        }
        for i in 0..self.n {
            let (a, b) = (self.point(i), self.point(i + 1));
            let c = self.third_vertices(a, b).len();
            if c != 1 {
                return Some((a, b, true, c));
            }
        }
        None
    }
}
