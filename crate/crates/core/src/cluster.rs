//! Seeds on triangulations and cluster variables via the exchange relation.
//!
//! A seed starts from a connected triangulation whose arcs are the initial
//! variables; boundary edges carry the constant 1. Flipping `{a, b}` to
//! `{x, y}` in the quadrilateral `(a, x, b, y)` assigns
//! `(v(ax)·v(by) + v(ay)·v(bx)) / v(ab)` to the new arc, and the division is
//! required to be exact.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::arc::Arc;
use crate::arcset::SymbolicArcSet;
use crate::cyclic::{CyclicOrder, Point};
use crate::error::{Error, Result};
use crate::flip::{self, FlipStep};
use crate::laurent::LaurentPolynomial;

/// Cluster variables are Laurent polynomials in the initial arcs.
pub type ClusterVariable = LaurentPolynomial<Arc>;

/// The name of the initial variable attached to `p`.
pub fn variable_name(order: &CyclicOrder, p: &Arc) -> String {
    let (a, b) = (p.lo(), p.hi());
    if order.is_finite() {
        format!("x_{}_{}", a.offset, b.offset)
    } else {
        format!("x_{}_{}_{}_{}", a.thread, a.offset, b.thread, b.offset)
    }
}

/// Renders a cluster variable with the canonical variable names.
pub fn render(order: &CyclicOrder, v: &ClusterVariable) -> String {
    v.render(|p| variable_name(order, p))
}

/// A triangulation together with the values of its arcs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Seed {
    initial: SymbolicArcSet,
    current: SymbolicArcSet,
    values: BTreeMap<Arc, ClusterVariable>,
}

impl Seed {
    /// The initial seed of a connected triangulation.
    pub fn new(triangulation: SymbolicArcSet) -> Result<Self> {
        if !triangulation.is_connected()? {
            return Err(Error::Domain("the seed set is not connected".into()));
        }
        if let Some(q) = triangulation.maximality_witness()? {
            return Err(Error::Domain(format!("the seed set is not maximal: {q} can be added")));
        }
        if let Some(d) = triangulation.triangulation_witness()? {
            return Err(Error::Domain(format!("the seed set is not a triangulation: {d}")));
        }
        Ok(Seed {
            initial: triangulation.clone(),
            current: triangulation,
            values: BTreeMap::new(),
        })
    }

    pub fn order(&self) -> CyclicOrder {
        self.current.order()
    }

    pub fn initial(&self) -> &SymbolicArcSet {
        &self.initial
    }

    pub fn triangulation(&self) -> &SymbolicArcSet {
        &self.current
    }

    /// The value of a member arc or boundary edge between `a` and `b`.
    fn side(&self, a: Point, b: Point) -> Result<ClusterVariable> {
        let order = self.order();
        if order.are_neighbors(a, b) {
            return Ok(ClusterVariable::one());
        }
        self.value(&Arc::new(&order, a, b)?)
    }

    /// The value of a member arc.
    pub fn value(&self, p: &Arc) -> Result<ClusterVariable> {
        if let Some(v) = self.values.get(p) {
            return Ok(v.clone());
        }
        if !self.current.contains(p)? {
            return Err(Error::Domain(format!("{p} is not in the seed")));
        }
        Ok(ClusterVariable::var(*p))
    }

    fn apply(&self, step: &FlipStep) -> Result<Seed> {
        let [a, x, b, y] = step.quadrilateral;
        let numerator = self
            .side(a, x)?
            .mul(&self.side(b, y)?)?
            .add(&self.side(a, y)?.mul(&self.side(b, x)?)?)?;
        let value = numerator.div_exact(&self.value(&step.removed)?)?;
        let mut values = self.values.clone();
        values.remove(&step.removed);
        values.insert(step.added, value);
        Ok(Seed {
            initial: self.initial.clone(),
            current: flip::apply(&self.current, step),
            values,
        })
    }

    /// Flips `p` and assigns the exchange value to the new arc.
    pub fn mutate(&self, p: &Arc) -> Result<Seed> {
        let step = flip::exchangeable(&self.current, p)?.ok_or(Error::CannotFlip(*p))?;
        self.apply(&step)
    }

    /// Runs a sequence of flips given by the arcs to remove.
    pub fn mutate_along(&self, route: &[Arc]) -> Result<Seed> {
        let mut seed = self.clone();
        for p in route {
            seed = seed.mutate(p)?;
        }
        Ok(seed)
    }

    /// The value of `p` reached by the greedy flip sequence.
    pub fn cluster_variable(&self, p: &Arc) -> Result<ClusterVariable> {
        if self.current.contains(p)? {
            return self.value(p);
        }
        let route = flip::reach(&self.current, p)?;
        let mut seed = self.clone();
        for step in &route.steps {
            seed = seed.apply(step)?;
        }
        seed.value(p)
    }

    /// The value of a direct sum of arcs, listed with multiplicity.
    pub fn cluster_monomial(&self, arcs: &[Arc]) -> Result<ClusterVariable> {
        arcs.iter().try_fold(ClusterVariable::one(), |acc, p| acc.mul(&self.cluster_variable(p)?))
    }

    /// The values of the member arcs for a finite seed, by arc.
    pub fn assignment(&self) -> Result<BTreeMap<Arc, ClusterVariable>> {
        if !self.current.is_explicit() {
            return Err(Error::Domain("the seed has infinitely many arcs".into()));
        }
        self.current
            .explicit()
            .iter()
            .map(|p| Ok((*p, self.value(p)?)))
            .collect()
    }
}

fn check_polygon(n: u32) -> Result<CyclicOrder> {
    if !(4..=12).contains(&n) {
        return Err(Error::Domain(format!("polygon size {n} outside 4..=12")));
    }
    Ok(CyclicOrder::FiniteGon(n))
}

/// Every triangulation of the `n`-gon, as sorted arc lists in lexicographic
/// order.
pub fn enumerate_triangulations(n: u32) -> Result<Vec<SymbolicArcSet>> {
    let order = check_polygon(n)?;
    let mut out = Vec::new();
    for arcs in triangulate(0, n as i64 - 1) {
        let arcs = arcs
            .into_iter()
            .map(|(a, b)| Arc::new(&order, Point::finite(a), Point::finite(b)))
            .collect::<Result<Vec<_>>>()?;
        out.push(SymbolicArcSet::from_arcs(order, arcs)?);
    }
    out.sort_by(|s, t| s.explicit().iter().cmp(t.explicit().iter()));
    Ok(out)
}

/// Triangulations of the polygon on the consecutive points `lo..=hi`.
fn triangulate(lo: i64, hi: i64) -> Vec<Vec<(i64, i64)>> {
    if hi - lo < 2 {
        return alloc::vec![Vec::new()];
    }
    let mut out = Vec::new();
    for apex in lo + 1..hi {
        let left = triangulate(lo, apex);
        let right = triangulate(apex, hi);
        for l in &left {
            for r in &right {
                let mut arcs = l.clone();
                arcs.extend(r.iter().copied());
                if apex - lo > 1 {
                    arcs.push((lo, apex));
                }
                if hi - apex > 1 {
                    arcs.push((apex, hi));
                }
                out.push(arcs);
            }
        }
    }
    out
}

/// Triangulations of a polygon joined by single flips.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExchangeGraph {
    pub vertices: Vec<SymbolicArcSet>,
    /// Index pairs `(i, j)` with `i < j`, sorted.
    pub edges: Vec<(usize, usize)>,
}

impl ExchangeGraph {
    pub fn degree(&self, v: usize) -> usize {
        self.edges.iter().filter(|&&(i, j)| i == v || j == v).count()
    }

    pub fn is_connected(&self) -> bool {
        if self.vertices.is_empty() {
            return true;
        }
        let mut adjacency = alloc::vec![Vec::new(); self.vertices.len()];
        for &(i, j) in &self.edges {
            adjacency[i].push(j);
            adjacency[j].push(i);
        }
        let mut seen = alloc::vec![false; self.vertices.len()];
        let mut stack = alloc::vec![0];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for &w in &adjacency[v] {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }
}

/// The exchange graph of the `n`-gon.
pub fn exchange_graph(n: u32) -> Result<ExchangeGraph> {
    let vertices = enumerate_triangulations(n)?;
    let index: BTreeMap<BTreeSet<Arc>, usize> = vertices
        .iter()
        .enumerate()
        .map(|(i, s)| (s.explicit().clone(), i))
        .collect();
    let mut edges = BTreeSet::new();
    for (i, s) in vertices.iter().enumerate() {
        for (_, t) in flip::finite_neighbours(s)? {
            let j = *index
                .get(t.explicit())
                .ok_or_else(|| Error::Invariant(format!("flip of {} left the enumeration", s.describe())))?;
            edges.insert((i.min(j), i.max(j)));
        }
    }
    Ok(ExchangeGraph {
        vertices,
        edges: edges.into_iter().collect(),
    })
}
