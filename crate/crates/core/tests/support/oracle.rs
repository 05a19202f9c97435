//! Definition-level brute force on finite point sets, written without the
//! library's deciders. Points are the indices `0..size` in cyclic order; the
//! caller decides which pairs are edges.

#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};

use rand::seq::SliceRandom;
use rand::Rng;

use cyclotri::{Arc, CyclicOrder, Point, SymbolicArcSet};

pub type Pair = (usize, usize);

pub fn pair(a: usize, b: usize) -> Pair {
    (a.min(b), a.max(b))
}

#[derive(Debug, Clone)]
pub struct Brute {
    pub size: usize,
    pub edges: BTreeSet<Pair>,
    pub arcs: BTreeSet<Pair>,
}

impl Brute {
    /// The `n`-gon with the given arcs.
    pub fn polygon(n: usize, arcs: impl IntoIterator<Item = Pair>) -> Brute {
        let edges = (0..n).map(|i| pair(i, (i + 1) % n)).collect();
        Brute {
            size: n,
            edges,
            arcs: arcs.into_iter().map(|(a, b)| pair(a, b)).collect(),
        }
    }

    pub fn from_set(set: &SymbolicArcSet) -> Brute {
        let CyclicOrder::FiniteGon(n) = set.order() else {
            panic!("finite sets only")
        };
        let arcs = set
            .explicit()
            .iter()
            .map(|p| (p.lo().offset as usize, p.hi().offset as usize));
        Brute::polygon(n as usize, arcs)
    }

    /// `R(a, b, c)`: the three are distinct and occur in this cyclic order.
    pub fn cyc(&self, a: usize, b: usize, c: usize) -> bool {
        a != b && b != c && a != c && ((a < b && b < c) || (b < c && c < a) || (c < a && a < b))
    }

    pub fn is_edge(&self, a: usize, b: usize) -> bool {
        self.edges.contains(&pair(a, b))
    }

    pub fn is_arc(&self, a: usize, b: usize) -> bool {
        a != b && !self.is_edge(a, b)
    }

    pub fn all_arcs(&self) -> Vec<Pair> {
        let mut out = Vec::new();
        for a in 0..self.size {
            for b in a + 1..self.size {
                if self.is_arc(a, b) {
                    out.push((a, b));
                }
            }
        }
        out
    }

    /// One of `c, d` lies in `(a, b)` and the other in `(b, a)`.
    pub fn crosses(&self, p: Pair, q: Pair) -> bool {
        let ((a, b), (c, d)) = (p, q);
        (self.cyc(a, c, b) && self.cyc(b, d, a)) || (self.cyc(a, d, b) && self.cyc(b, c, a))
    }

    pub fn noncrossing(&self) -> bool {
        let v: Vec<Pair> = self.arcs.iter().copied().collect();
        v.iter()
            .enumerate()
            .all(|(i, &p)| v[i + 1..].iter().all(|&q| !self.crosses(p, q)))
    }

    fn two_gon(&self, a: usize, b: usize) -> bool {
        self.is_edge(a, b) || self.arcs.contains(&pair(a, b))
    }

    /// Every triangle, as sorted triples.
    pub fn triangles(&self) -> Vec<[usize; 3]> {
        let mut out = Vec::new();
        for a in 0..self.size {
            for b in a + 1..self.size {
                if !self.two_gon(a, b) {
                    continue;
                }
                for c in b + 1..self.size {
                    if self.two_gon(a, c) && self.two_gon(b, c) {
                        out.push([a, b, c]);
                    }
                }
            }
        }
        out
    }

    pub fn triangle_count(&self, a: usize, b: usize) -> usize {
        self.triangles()
            .iter()
            .filter(|t| t.contains(&a) && t.contains(&b))
            .count()
    }

    /// Any two points incident with the set are joined by a path of member
    /// arcs.
    pub fn connected(&self) -> bool {
        let incident: BTreeSet<usize> = self.arcs.iter().flat_map(|&(a, b)| [a, b]).collect();
        let Some(&start) = incident.iter().next() else {
            return true;
        };
        let mut seen = BTreeSet::from([start]);
        let mut stack = vec![start];
        while let Some(x) = stack.pop() {
            for &(a, b) in &self.arcs {
                let other = if a == x {
                    b
                } else if b == x {
                    a
                } else {
                    continue;
                };
                if seen.insert(other) {
                    stack.push(other);
                }
            }
        }
        seen == incident
    }

    /// No arc outside the set crosses none of its members.
    pub fn maximal(&self) -> bool {
        self.all_arcs()
            .into_iter()
            .all(|p| self.arcs.contains(&p) || self.arcs.iter().any(|&q| self.crosses(p, q)))
    }

    /// Arcs lie in exactly two triangles, edges in exactly one.
    pub fn triangulation(&self) -> bool {
        let mut count: BTreeMap<Pair, usize> = BTreeMap::new();
        for [a, b, c] in self.triangles() {
            for p in [(a, b), (a, c), (b, c)] {
                *count.entry(p).or_default() += 1;
            }
        }
        let get = |p: &Pair| count.get(p).copied().unwrap_or(0);
        self.arcs.iter().all(|p| get(p) == 2) && self.edges.iter().all(|p| get(p) == 1)
    }

    /// The flip of `p` by the set-level definition: the unique maximal
    /// noncrossing `T ≠ S` containing `S \ {p}`, if there is one.
    pub fn flip(&self, p: Pair) -> Option<(Pair, Brute)> {
        let mut rest = self.clone();
        rest.arcs.remove(&p);
        let candidates: Vec<Pair> = self
            .all_arcs()
            .into_iter()
            .filter(|&c| c != p && !self.arcs.contains(&c))
            .filter(|&c| rest.arcs.iter().all(|&q| !self.crosses(c, q)))
            .collect();
        let mut found = None;
        for c in candidates {
            let mut t = rest.clone();
            t.arcs.insert(c);
            if t.noncrossing() && t.maximal() {
                assert!(found.is_none(), "two flips of one arc");
                found = Some((c, t));
            }
        }
        found
    }

    /// The triangle on the first endpoint `a` of `p = {a, b}` whose opposite
    /// side crosses `p`.
    pub fn closest_triangle(&self, p: Pair) -> Option<[usize; 3]> {
        let (a, _) = p;
        let mut hits = self.triangles().into_iter().filter(|t| t.contains(&a)).filter(|t| {
            let rest: Vec<usize> = t.iter().copied().filter(|&v| v != a).collect();
            self.crosses(pair(rest[0], rest[1]), p)
        });
        let first = hits.next();
        assert!(hits.next().is_none(), "two closest triangles");
        first
    }
}

pub fn finite_arc(n: u32, p: Pair) -> Arc {
    Arc::new(
        &CyclicOrder::FiniteGon(n),
        Point::finite(p.0 as i64),
        Point::finite(p.1 as i64),
    )
    .unwrap()
}

pub fn to_pair(p: &Arc) -> Pair {
    pair(p.lo().offset as usize, p.hi().offset as usize)
}

pub fn to_set(n: u32, arcs: &BTreeSet<Pair>) -> SymbolicArcSet {
    SymbolicArcSet::from_arcs(CyclicOrder::FiniteGon(n), arcs.iter().map(|&p| finite_arc(n, p))).unwrap()
}

/// The points of an infinity-gon with offsets in `[-window, window]`, in
/// the canonical cut, with the pairs that are edges there.
pub struct Window {
    pub points: Vec<Point>,
    pub index: BTreeMap<Point, usize>,
    pub brute: Brute,
}

impl Window {
    pub fn new(set: &SymbolicArcSet, window: i64) -> Window {
        let k = set.order().threads();
        let points: Vec<Point> = (0..k)
            .flat_map(|t| (-window..=window).map(move |e| Point::threaded(t, e)))
            .collect();
        let index: BTreeMap<Point, usize> = points.iter().enumerate().map(|(i, &p)| (p, i)).collect();
        let mut edges = BTreeSet::new();
        for (i, p) in points.iter().enumerate() {
            if let Some(&j) = index.get(&Point::threaded(p.thread, p.offset + 1)) {
                edges.insert(pair(i, j));
            }
        }
        let arcs = set
            .arcs_in_window(window)
            .unwrap()
            .iter()
            .map(|p| pair(index[&p.lo()], index[&p.hi()]))
            .collect();
        Window {
            brute: Brute {
                size: points.len(),
                edges,
                arcs,
            },
            points,
            index,
        }
    }
}

/// Random arc sets of the `n`-gon in four flavours: arbitrary subsets,
/// random noncrossing sets, random triangulations, and triangulations with
/// one arc removed.
pub fn random_set(rng: &mut impl Rng, n: usize) -> BTreeSet<Pair> {
    let base = Brute::polygon(n, []);
    let all = base.all_arcs();
    match rng.gen_range(0..4) {
        0 => all.iter().copied().filter(|_| rng.gen_bool(0.25)).collect(),
        flavour => {
            let mut order = all.clone();
            order.shuffle(rng);
            let keep_all = flavour >= 2;
            let mut arcs = BTreeSet::new();
            for p in order {
                if (keep_all || rng.gen_bool(0.5)) && arcs.iter().all(|&q| !base.crosses(p, q)) {
                    arcs.insert(p);
                }
            }
            if flavour == 3 && !arcs.is_empty() {
                let drop = *arcs.iter().nth(rng.gen_range(0..arcs.len())).unwrap();
                arcs.remove(&drop);
            }
            arcs
        }
    }
}
