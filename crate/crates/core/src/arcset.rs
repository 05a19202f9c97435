//! Finitely presented arc sets: explicit arcs plus affine families.
//!
//! A family `{first(n), second(n)}` ranges over an integer interval minus
//! finitely many excluded indices. Internally every description is cut into
//! [`Piece`]s, one per maximal interval of admissible indices, with explicit
//! arcs becoming constant pieces indexed by `{0}`. All symbolic queries are
//! then questions about octagon systems in the piece parameters.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::affine::{self, AffinePointMap, Term};
use crate::arc::Arc;
use crate::cyclic::{CyclicOrder, Point};
use crate::error::{Error, Result};
use crate::octagon::{solve1, FeasibilitySystem, Interval, Solutions1, Var};

/// Offsets, range bounds and exclusions of symbolic sets must stay within
/// `±MAX_OFFSET`, which keeps every derived constant far from overflow.
pub const MAX_OFFSET: i64 = 1 << 48;

const ENUMERATION_LIMIT: u128 = 1 << 20;

pub(crate) const N: Var = 0;
pub(crate) const M: Var = 1;
pub(crate) const L: Var = 2;

/// The arcs `{first(n), second(n)}` for `n` in `range` minus `excluded`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ArcFamily {
    first: AffinePointMap,
    second: AffinePointMap,
    range: Interval,
    excluded: BTreeSet<i64>,
}

impl ArcFamily {
    /// Exclusions outside `range` are dropped.
    pub fn new(
        first: AffinePointMap,
        second: AffinePointMap,
        range: Interval,
        excluded: impl IntoIterator<Item = i64>,
    ) -> Self {
        let excluded = excluded.into_iter().filter(|&x| range.contains(x)).collect();
        ArcFamily {
            first,
            second,
            range,
            excluded,
        }
    }

    pub fn first(&self) -> AffinePointMap {
        self.first
    }

    pub fn second(&self) -> AffinePointMap {
        self.second
    }

    pub fn range(&self) -> Interval {
        self.range
    }

    pub fn excluded(&self) -> &BTreeSet<i64> {
        &self.excluded
    }

    /// Maximal intervals of admissible indices.
    pub fn domain(&self) -> Vec<Interval> {
        self.range.minus(&self.excluded)
    }

    pub fn admits(&self, n: i64) -> bool {
        self.range.contains(n) && !self.excluded.contains(&n)
    }

    /// The member at index `n`, if `n` is admissible.
    pub fn arc_at(&self, n: i64) -> Result<Option<Arc>> {
        if !self.admits(n) {
            return Ok(None);
        }
        Ok(Some(Arc::from_points_unchecked(self.first.at(n)?, self.second.at(n)?)))
    }

    /// Every admissible index whose member is `p`.
    pub(crate) fn indices_of(&self, p: &Arc) -> Vec<i64> {
        let mut out = Vec::new();
        for dom in self.domain() {
            let piece = Piece {
                first: self.first,
                second: self.second,
                domain: dom,
                source: Source::Family(0),
            };
            for case in piece.same_as(p) {
                if let Solutions1::Finite(i) = solve1(&case, N, dom) {
                    out.extend(i.lo.unwrap()..=i.hi.unwrap());
                }
            }
        }
        out.sort_unstable();
        out.dedup();
        out
    }

    pub(crate) fn with_excluded(&self, excluded: BTreeSet<i64>) -> ArcFamily {
        ArcFamily::new(self.first, self.second, self.range, excluded)
    }
}

/// Where a [`Piece`] came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Source {
    Explicit(Arc),
    Family(usize),
    Edge,
}

/// One description with an interval domain.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) struct Piece {
    pub first: AffinePointMap,
    pub second: AffinePointMap,
    pub domain: Interval,
    pub source: Source,
}

impl Piece {
    /// The edges `{(t, m), (t, m + 1)}` of one thread.
    pub fn edges(thread: u32) -> Piece {
        Piece {
            first: AffinePointMap::new(thread, 1, 0).expect("unit slope"),
            second: AffinePointMap::new(thread, 1, 1).expect("unit slope"),
            domain: Interval::ALL,
            source: Source::Edge,
        }
    }

    pub fn terms(&self, var: Var) -> (Term, Term) {
        (self.first.term(var), self.second.term(var))
    }

    pub fn arc_at(&self, n: i64) -> Arc {
        Arc::from_points_unchecked(self.first.term(N).eval(n), self.second.term(N).eval(n))
    }

    /// Cases in which the member at `N` equals `p`.
    pub fn same_as(&self, p: &Arc) -> Vec<FeasibilitySystem> {
        let (f, g) = self.terms(N);
        affine::same_pair(&f, &g, &Term::point(p.lo()), &Term::point(p.hi()))
    }

    pub fn is_infinite(&self) -> bool {
        !self.domain.is_bounded()
    }
}

/// Bounds every listed variable to its interval.
pub(crate) fn within(sys: &FeasibilitySystem, bounds: &[(Var, Interval)]) -> FeasibilitySystem {
    let mut s = sys.clone();
    for &(v, i) in bounds {
        s.restrict(v, i);
    }
    s
}

/// Result of [`SymbolicArcSet::crossing_arcs`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CrossingArcs {
    /// Every crossing member, sorted.
    Finite(Vec<Arc>),
    /// Infinitely many members cross; `family` indexes the description that
    /// supplies them and `example` is one of them.
    Infinite { family: usize, example: Arc },
}

/// A possibly infinite set of arcs of a cyclic order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymbolicArcSet {
    order: CyclicOrder,
    explicit: BTreeSet<Arc>,
    families: Vec<ArcFamily>,
}

impl SymbolicArcSet {
    /// Validates the description and canonicalizes its families.
    ///
    /// Families are only allowed on infinity-gons. A family whose two maps
    /// are constant becomes an explicit arc, and a family of the shape
    /// `{(t, n + a), (t, -n + b)}`, which lists each arc twice, is reindexed
    /// so that every arc appears once.
    pub fn new(
        order: CyclicOrder,
        explicit: impl IntoIterator<Item = Arc>,
        families: impl IntoIterator<Item = ArcFamily>,
    ) -> Result<Self> {
        let mut set = SymbolicArcSet {
            order,
            explicit: BTreeSet::new(),
            families: Vec::new(),
        };
        for p in explicit {
            let [a, b] = p.endpoints();
            Arc::new(&order, a, b)?;
            if !order.is_finite() {
                check_offset(a.offset)?;
                check_offset(b.offset)?;
            }
            set.explicit.insert(p);
        }
        for fam in families {
            if order.is_finite() {
                return Err(Error::InvalidFamily("families need an infinity-gon".into()));
            }
            if let Some(fam) = set.canonical_family(fam)? {
                set.families.push(fam);
            }
        }
        Ok(set)
    }

    /// A finite set of arcs.
    pub fn from_arcs(order: CyclicOrder, arcs: impl IntoIterator<Item = Arc>) -> Result<Self> {
        Self::new(order, arcs, [])
    }

    pub fn empty(order: CyclicOrder) -> Self {
        SymbolicArcSet {
            order,
            explicit: BTreeSet::new(),
            families: Vec::new(),
        }
    }

    pub fn order(&self) -> CyclicOrder {
        self.order
    }

    pub fn explicit(&self) -> &BTreeSet<Arc> {
        &self.explicit
    }

    pub fn families(&self) -> &[ArcFamily] {
        &self.families
    }

    /// Whether the description has no families.
    pub fn is_explicit(&self) -> bool {
        self.families.is_empty()
    }

    fn canonical_family(&mut self, fam: ArcFamily) -> Result<Option<ArcFamily>> {
        let k = self.order.threads();
        for map in [fam.first, fam.second] {
            if map.thread >= k {
                return Err(Error::InvalidPoint(Point::threaded(map.thread, map.offset)));
            }
            check_offset(map.offset)?;
        }
        for b in [fam.range.lo, fam.range.hi]
            .into_iter()
            .flatten()
            .chain(fam.excluded.iter().copied())
        {
            check_offset(b)?;
        }
        let domain = fam.domain();
        if domain.is_empty() {
            return Ok(None);
        }
        // every admissible index must give an arc
        let (f, g) = (fam.first.term(N), fam.second.term(N));
        for case in affine::degenerate(&f, &g) {
            for &dom in &domain {
                if let Some(v) = within(&case, &[(N, dom)]).sample(&[N]) {
                    return Err(Error::InvalidFamily(format!(
                        "{{{}, {}}} is not an arc for n = {}",
                        fam.first, fam.second, v[0]
                    )));
                }
            }
        }
        if fam.first.is_constant() && fam.second.is_constant() {
            let p = Arc::from_points_unchecked(fam.first.at(0)?, fam.second.at(0)?);
            self.explicit.insert(p);
            return Ok(None);
        }
        let reflected = fam.first.thread == fam.second.thread
            && !fam.first.is_constant()
            && fam.first.slope() == -fam.second.slope();
        if !reflected {
            return Ok(Some(fam));
        }
        // n and K - n give the same arc; keep indices with 2n > K
        let kk = fam.first.slope() as i64 * (fam.second.offset - fam.first.offset);
        let h0 = kk.div_euclid(2) + 1;
        let mut parts: Vec<Interval> = Vec::new();
        for dom in domain {
            let upper = dom.intersect(&Interval::at_least(h0));
            if !upper.is_empty() {
                parts.push(upper);
            }
            let lower = dom.intersect(&Interval::at_most(kk - h0));
            if !lower.is_empty() {
                parts.push(Interval::new(lower.hi.map(|h| kk - h), lower.lo.map(|l| kk - l)));
            }
        }
        parts.sort_by_key(|p| p.lo.unwrap_or(i64::MIN));
        let lo = parts.iter().filter_map(|p| p.lo).min();
        let hi = if parts.iter().any(|p| p.hi.is_none()) {
            None
        } else {
            parts.iter().filter_map(|p| p.hi).max()
        };
        let hull = Interval::new(lo, hi);
        let mut excluded = BTreeSet::new();
        let mut cursor = hull.lo.unwrap();
        for p in &parts {
            let start = p.lo.unwrap();
            if start > cursor {
                if (start - cursor) as u128 + excluded.len() as u128 > ENUMERATION_LIMIT {
                    return Err(Error::ResourceLimit("family range has too many gaps".into()));
                }
                excluded.extend(cursor..start);
            }
            match p.hi {
                None => break,
                Some(h) => cursor = cursor.max(h + 1),
            }
        }
        Ok(Some(ArcFamily::new(fam.first, fam.second, hull, excluded)))
    }

    /// Every description as an interval-domain piece.
    pub(crate) fn pieces(&self) -> Vec<Piece> {
        let mut out: Vec<Piece> = self
            .explicit
            .iter()
            .map(|&p| Piece {
                first: AffinePointMap::constant(p.lo()),
                second: AffinePointMap::constant(p.hi()),
                domain: Interval::point(0),
                source: Source::Explicit(p),
            })
            .collect();
        for (i, fam) in self.families.iter().enumerate() {
            for dom in fam.domain() {
                out.push(Piece {
                    first: fam.first,
                    second: fam.second,
                    domain: dom,
                    source: Source::Family(i),
                });
            }
        }
        out
    }

    /// Whether `p` is a valid arc of the order.
    pub(crate) fn check_arc(&self, p: &Arc) -> Result<()> {
        Arc::new(&self.order, p.lo(), p.hi()).map(|_| ())
    }

    pub fn contains(&self, p: &Arc) -> Result<bool> {
        self.check_arc(p)?;
        if self.explicit.contains(p) {
            return Ok(true);
        }
        Ok(self.families.iter().any(|f| !f.indices_of(p).is_empty()))
    }

    /// The members crossing `p`.
    pub fn crossing_arcs(&self, p: &Arc) -> Result<CrossingArcs> {
        self.check_arc(p)?;
        let mut found = BTreeSet::new();
        if self.order.is_finite() {
            found.extend(self.explicit.iter().filter(|q| q.crosses(p)).copied());
            return Ok(CrossingArcs::Finite(found.into_iter().collect()));
        }
        let (c, d) = (Term::point(p.lo()), Term::point(p.hi()));
        let mut total: u128 = 0;
        for piece in self.pieces() {
            let (f, g) = piece.terms(N);
            for case in affine::crossing(&f, &g, &c, &d) {
                match solve1(&case, N, piece.domain) {
                    Solutions1::Empty => {}
                    Solutions1::Finite(i) => {
                        total += i.len().unwrap_or(0);
                        if total > ENUMERATION_LIMIT {
                            return Err(Error::ResourceLimit("too many crossing arcs to list".into()));
                        }
                        found.extend((i.lo.unwrap()..=i.hi.unwrap()).map(|n| piece.arc_at(n)));
                    }
                    Solutions1::Infinite(i) => {
                        let n = i.lo.or(i.hi).unwrap_or(0);
                        let family = match piece.source {
                            Source::Family(f) => f,
                            Source::Explicit(_) | Source::Edge => unreachable!("only families have unbounded domains"),
                        };
                        return Ok(CrossingArcs::Infinite {
                            family,
                            example: piece.arc_at(n),
                        });
                    }
                }
            }
        }
        Ok(CrossingArcs::Finite(found.into_iter().collect()))
    }

    /// Members with every endpoint offset in `[-window, window]`; for finite
    /// polygons, all members.
    pub fn arcs_in_window(&self, window: i64) -> Result<Vec<Arc>> {
        if self.order.is_finite() {
            return Ok(self.explicit.iter().copied().collect());
        }
        let mut found = BTreeSet::new();
        let range = Interval::closed(-window, window);
        for piece in self.pieces() {
            let (f, g) = piece.terms(N);
            let mut sys = FeasibilitySystem::new();
            for t in [f, g] {
                sys.push(&[(N, t.coeff as i64)], window as i128 - t.offset as i128);
                sys.push(&[(N, -(t.coeff as i64))], window as i128 + t.offset as i128);
            }
            if let Solutions1::Finite(i) = solve1(&sys, N, piece.domain) {
                found.extend((i.lo.unwrap()..=i.hi.unwrap()).map(|n| piece.arc_at(n)));
            }
        }
        found.retain(|p: &Arc| range.contains(p.lo().offset) && range.contains(p.hi().offset));
        Ok(found.into_iter().collect())
    }

    /// Restricts every thread to `[-window, window]` and glues the segments
    /// into a polygon with `k·(2·window + 1)` vertices. Point `(t, e)` becomes
    /// `t·(2·window + 1) + e + window`; pairs that become edges are dropped.
    pub fn truncate(&self, window: i64) -> Result<SymbolicArcSet> {
        let CyclicOrder::ThreadGon(k) = self.order else {
            return Err(Error::Domain("truncation needs an infinity-gon".into()));
        };
        if window < 2 {
            return Err(Error::Domain("truncation window must be at least 2".into()));
        }
        let width = 2 * window + 1;
        let size = (k as i64)
            .checked_mul(width)
            .filter(|&s| s <= u32::MAX as i64)
            .ok_or(Error::Overflow)?;
        let order = CyclicOrder::FiniteGon(size as u32);
        let index = |p: Point| Point::finite(p.thread as i64 * width + p.offset + window);
        let arcs = self
            .arcs_in_window(window)?
            .into_iter()
            .filter_map(|p| Arc::new(&order, index(p.lo()), index(p.hi())).ok());
        SymbolicArcSet::from_arcs(order, arcs)
    }

    /// Whether both sets have the same members.
    pub fn same_arcs(&self, other: &SymbolicArcSet) -> Result<bool> {
        if self.order != other.order {
            return Ok(false);
        }
        if self.order.is_finite() {
            return Ok(self.explicit == other.explicit);
        }
        let (mine, theirs) = (self.pieces(), other.pieces());
        Ok(
            mine.iter().all(|p| uncovered(p, &theirs).is_none())
                && theirs.iter().all(|p| uncovered(p, &mine).is_none()),
        )
    }

    /// Largest absolute constant in the description.
    pub(crate) fn magnitude(&self) -> i64 {
        let mut d = 0i64;
        for p in &self.explicit {
            d = d.max(p.lo().offset.abs()).max(p.hi().offset.abs());
        }
        for f in &self.families {
            d = d.max(f.first.offset.abs()).max(f.second.offset.abs());
            for b in [f.range.lo, f.range.hi]
                .into_iter()
                .flatten()
                .chain(f.excluded.iter().copied())
            {
                d = d.max(b.abs());
            }
        }
        d
    }

    /// Removes `p` from every description and adds the arcs in `added`,
    /// folding an added arc back into a family that excluded it.
    pub(crate) fn replace(&self, p: &Arc, added: &[Arc]) -> SymbolicArcSet {
        let mut out = self.clone();
        out.explicit.remove(p);
        for fam in out.families.iter_mut() {
            let hits = fam.indices_of(p);
            if !hits.is_empty() {
                let mut ex = fam.excluded.clone();
                ex.extend(hits);
                *fam = fam.with_excluded(ex);
            }
        }
        'next: for q in added {
            for fam in out.families.iter_mut() {
                for &n in fam.excluded.clone().iter() {
                    let candidate = Arc::from_points_unchecked(
                        fam.first.at(n).expect("offsets are bounded"),
                        fam.second.at(n).expect("offsets are bounded"),
                    );
                    if candidate == *q {
                        let mut ex = fam.excluded.clone();
                        ex.remove(&n);
                        *fam = fam.with_excluded(ex);
                        continue 'next;
                    }
                }
            }
            out.explicit.insert(*q);
        }
        out
    }

    /// A short human-readable summary of the description size.
    pub fn describe(&self) -> String {
        format!(
            "{} explicit arcs, {} families on {}",
            self.explicit.len(),
            self.families.len(),
            self.order
        )
    }
}

fn check_offset(x: i64) -> Result<()> {
    if x.unsigned_abs() > MAX_OFFSET as u64 {
        return Err(Error::Overflow);
    }
    Ok(())
}

/// The first index of `piece` whose member is in none of `cover`.
pub(crate) fn uncovered(piece: &Piece, cover: &[Piece]) -> Option<i64> {
    let (f, g) = piece.terms(N);
    let mut parts = Vec::new();
    for q in cover {
        let (a, b) = q.terms(M);
        for case in affine::same_pair(&f, &g, &a, &b) {
            if let Some(i) = within(&case, &[(N, piece.domain), (M, q.domain)]).range_of(N) {
                parts.push(i);
            }
        }
    }
    piece.domain.first_uncovered(&parts)
}
